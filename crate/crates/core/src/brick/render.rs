use alloc::string::String;
use alloc::vec::Vec;

use super::build_bricks;
use crate::braid::BraidWord;

/// Monospace drawing of the brick diagram.
///
/// Strand 1 is the top line. Between strands `i` and `i + 1` sits level `i`,
/// where `|` marks a crossing (bar) and `o` marks a compact brick, i.e. a vertex.
/// The crossing at word position `p` is drawn in column `2p`.
pub fn render_ascii(w: &BraidWord) -> String {
    let d = build_bricks(w);
    let width = 2 * w.len() + 2;
    let mut lines: Vec<String> = Vec::new();
    for strand in 1..=w.strands() {
        lines.push("-".repeat(width));
        if strand == w.strands() {
            break;
        }
        let mut row = alloc::vec![b' '; width];
        for &p in d.bars(strand) {
            row[2 * p] = b'|';
        }
        for pair in d.bars(strand).windows(2) {
            row[pair[0] + pair[1]] = b'o';
        }
        let s = String::from_utf8(row).expect("ascii");
        lines.push(String::from(s.trim_end()));
    }
    let mut out = lines.join("\n");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_braid;

    #[test]
    fn test_empty() {
        let r = render_ascii(&BraidWord::empty(3));
        assert_eq!(r.lines().filter(|l| l.starts_with('-')).count(), 3);
        assert!(!r.contains('|'));
    }

    #[test]
    fn test_single_crossing() {
        let r = render_ascii(&parse_braid("s1", Some(2)).unwrap());
        assert_eq!(r, "----\n  |\n----\n");
    }

    #[test]
    fn test_e9_markers() {
        let r = render_ascii(&parse_braid("s1^6 s2 s1^3 s2", Some(3)).unwrap());
        assert_eq!(r.matches('o').count(), 9);
        assert_eq!(r.matches('|').count(), 11);
    }
}
