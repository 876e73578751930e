//! Brick diagrams of braid words and their quivers.

mod render;

use alloc::vec::Vec;
use core::fmt;

use crate::braid::BraidWord;
use crate::quiver::ExchangeMatrix;

pub use render::render_ascii;

/// Bar positions (1-based) of each level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrickDiagram {
    n: usize,
    bars: Vec<Vec<usize>>,
}

impl BrickDiagram {
    pub fn strands(&self) -> usize {
        self.n
    }

    /// Bars of level `i` (1-based).
    pub fn bars(&self, level: usize) -> &[usize] {
        &self.bars[level - 1]
    }

    pub fn levels(&self) -> usize {
        self.bars.len()
    }

    /// Compact bricks in (level, left) order.
    pub fn bricks(&self) -> Vec<Brick> {
        let mut out = Vec::new();
        for (i, bars) in self.bars.iter().enumerate() {
            for pair in bars.windows(2) {
                out.push(Brick { level: i + 1, left: pair[0], right: pair[1] });
            }
        }
        out
    }
}

pub fn build_bricks(w: &BraidWord) -> BrickDiagram {
    let mut bars = alloc::vec![Vec::new(); w.strands().saturating_sub(1)];
    for (p, &l) in w.letters().iter().enumerate() {
        bars[l as usize - 1].push(p + 1);
    }
    BrickDiagram { n: w.strands(), bars }
}

/// A compact brick: two consecutive bars of one level.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Brick {
    pub level: usize,
    pub left: usize,
    pub right: usize,
}

/// The quiver of a brick diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrickQuiver {
    pub bricks: Vec<Brick>,
    pub arrows: Vec<(usize, usize)>,
}

fn interleave(a: &Brick, b: &Brick) -> bool {
    (a.left < b.left && b.left < a.right && a.right < b.right)
        || (b.left < a.left && a.left < b.right && b.right < a.right)
}

pub fn extract_quiver(w: &BraidWord) -> BrickQuiver {
    let bricks = build_bricks(w).bricks();
    let mut arrows = Vec::new();
    for (a, x) in bricks.iter().enumerate() {
        for (b, y) in bricks.iter().enumerate().skip(a + 1) {
            if x.level == y.level {
                if x.right == y.left {
                    arrows.push((a, b));
                }
            } else if y.level == x.level + 1 && interleave(x, y) {
                if x.left > y.left {
                    arrows.push((a, b));
                } else {
                    arrows.push((b, a));
                }
            }
        }
    }
    arrows.sort_unstable();
    BrickQuiver { bricks, arrows }
}

impl BrickQuiver {
    pub fn len(&self) -> usize {
        self.bricks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bricks.is_empty()
    }

    pub fn to_matrix(&self) -> ExchangeMatrix {
        ExchangeMatrix::from_arrows(self.bricks.len(), &self.arrows).expect("brick quiver arrows are in range")
    }

    /// Same vertices, every arrow reversed.
    pub fn reversed(&self) -> BrickQuiver {
        let mut arrows: Vec<_> = self.arrows.iter().map(|&(a, b)| (b, a)).collect();
        arrows.sort_unstable();
        BrickQuiver { bricks: self.bricks.clone(), arrows }
    }

    /// Vertex indices on the given level.
    pub fn level_vertices(&self, level: usize) -> Vec<usize> {
        (0..self.bricks.len()).filter(|&v| self.bricks[v].level == level).collect()
    }
}

impl fmt::Display for BrickQuiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, b) in self.bricks.iter().enumerate() {
            writeln!(f, "v{} level {} [{}, {}]", v, b.level, b.left, b.right)?;
        }
        for (a, b) in &self.arrows {
            writeln!(f, "v{} -> v{}", a, b)?;
        }
        Ok(())
    }
}

/// True if `β(i,i+1)` contains `s_i s_{i+1} s_i s_{i+1}` or `s_{i+1} s_i s_{i+1} s_i`
/// as a subsequence, i.e. has at least four runs.
pub fn has_intertwining(w: &BraidWord, i: usize) -> bool {
    pair_runs(w, i).len() >= 4
}

/// Runs of `β(i,i+1)` as (letter, length).
pub fn pair_runs(w: &BraidWord, i: usize) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = Vec::new();
    for &l in w.letters() {
        let l = l as usize;
        if l != i && l != i + 1 {
            continue;
        }
        match out.last_mut() {
            Some((m, c)) if *m == l => *c += 1,
            _ => out.push((l, 1)),
        }
    }
    out
}

/// A place where the brick quiver falls apart.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cut {
    /// Level `i` has no vertex (`s_i` occurs at most once).
    EmptyLevel(usize),
    /// No arrows between levels `i` and `i + 1`.
    NoArrows(usize),
}

impl fmt::Display for Cut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cut::EmptyLevel(i) => write!(f, "empty level {}", i),
            Cut::NoArrows(i) => write!(f, "no arrows between levels {} and {}", i, i + 1),
        }
    }
}

/// All empty levels and all adjacent level pairs without intertwining pairs.
pub fn disconnection_split(w: &BraidWord) -> Vec<Cut> {
    let levels = w.strands().saturating_sub(1);
    let mut cuts = Vec::new();
    for i in 1..=levels {
        if w.count(i) <= 1 {
            cuts.push(Cut::EmptyLevel(i));
        }
        if i < levels && !has_intertwining(w, i) {
            cuts.push(Cut::NoArrows(i));
        }
    }
    cuts
}

/// Acyclicity via the run-count criterion: under the preconditions (`s_1` and
/// `s_{n-1}` occur at least twice, connected quiver) the quiver is acyclic iff
/// every `β(i,i+1)` has exactly four runs. Otherwise falls back to a direct check.
pub fn acyclicity_criterion(w: &BraidWord) -> bool {
    let n = w.strands();
    let q = extract_quiver(w).to_matrix();
    let applies = n >= 2 && w.count(1) >= 2 && w.count(n - 1) >= 2 && q.is_connected();
    if !applies {
        return q.is_acyclic();
    }
    (1..n.saturating_sub(1)).all(|i| pair_runs(w, i).len() == 4)
}
