//! Graphviz export.

use std::fmt::Write;

use braidbrick_core::brick::BrickQuiver;
use braidbrick_core::ExchangeMatrix;

/// Brick quiver as a DOT digraph; vertices are labelled `level:[left,right]`
/// and grouped by level.
pub fn brick_quiver_dot(q: &BrickQuiver, title: &str) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "digraph quiver {{");
    let _ = writeln!(s, "  label=\"{}\";", title.replace('"', "'"));
    let _ = writeln!(s, "  rankdir=LR;");
    let mut levels: Vec<usize> = q.bricks.iter().map(|b| b.level).collect();
    levels.sort_unstable();
    levels.dedup();
    for level in levels {
        let _ = writeln!(s, "  subgraph level{} {{ rank=same;", level);
        for (v, b) in q.bricks.iter().enumerate().filter(|(_, b)| b.level == level) {
            let _ = writeln!(s, "    v{} [label=\"{}:[{},{}]\"];", v, b.level, b.left, b.right);
        }
        let _ = writeln!(s, "  }}");
    }
    for &(i, j) in &q.arrows {
        let _ = writeln!(s, "  v{} -> v{};", i, j);
    }
    s.push_str("}\n");
    s
}

/// Exchange matrix as a DOT digraph; multiple arrows carry a weight label.
pub fn matrix_dot(b: &ExchangeMatrix) -> String {
    let mut s = String::from("digraph quiver {\n");
    for v in 0..b.size() {
        let _ = writeln!(s, "  v{};", v);
    }
    for (i, j, m) in b.arrows() {
        if m == 1 {
            let _ = writeln!(s, "  v{} -> v{};", i, j);
        } else {
            let _ = writeln!(s, "  v{} -> v{} [label=\"{}\"];", i, j, m);
        }
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use braidbrick_core::braid::parse_braid;
    use braidbrick_core::brick::extract_quiver;

    #[test]
    fn test_dot_shape() {
        let q = extract_quiver(&parse_braid("s1^3 s2 s1^3 s2", None).unwrap());
        let d = brick_quiver_dot(&q, "s1^3 s2 s1^3 s2");
        assert!(d.starts_with("digraph quiver {"));
        assert_eq!(d.matches(" -> ").count(), q.arrows.len());
        assert_eq!(d.matches("[label=\"").count(), q.len());
        let m = matrix_dot(&ExchangeMatrix::from_rows(&[vec![0, 2], vec![-2, 0]]).unwrap());
        assert!(m.contains("v0 -> v1 [label=\"2\"]"));
    }
}
