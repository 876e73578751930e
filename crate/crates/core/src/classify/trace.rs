use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::braid::{BraidWord, StrandEnd};
use crate::brick::has_intertwining;
use crate::{Error, Result};

/// How the two children of a cut are glued back together.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Join {
    Split,
    Connect,
}

/// One operation of a classification trace.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TraceOp {
    /// Cyclic rotation left by `k`.
    Rho(isize),
    /// Braid relation at a 0-based position.
    R3(usize),
    /// Far commutation at a 0-based position.
    Commute(usize),
    /// Markov destabilization of a lone `s_1` or `s_{n-1}`.
    R1(StrandEnd),
    /// Level `i` is empty: the piece is `β(1,i-1) ⊔ β(i+1,n-1)`.
    SplitCut(usize),
    /// Level `i` holds a single letter: delete it and splice, `β(1,i-1) # β(i+1,n-1)`.
    Splice(usize),
    /// No intertwining between levels `i` and `i+1`: `β(1,i) # β(i+1,n-1)`.
    ConnectCut(usize),
}

impl TraceOp {
    pub fn name(&self) -> &'static str {
        match self {
            TraceOp::Rho(_) => "rho",
            TraceOp::R3(_) => "R3",
            TraceOp::Commute(_) => "c",
            TraceOp::R1(_) => "R1",
            TraceOp::SplitCut(_) => "split",
            TraceOp::Splice(_) => "splice",
            TraceOp::ConnectCut(_) => "connect",
        }
    }

    pub fn is_cut(&self) -> bool {
        matches!(self, TraceOp::SplitCut(_) | TraceOp::Splice(_) | TraceOp::ConnectCut(_))
    }

    /// Applies the operation. Moves return one word, cuts return two children
    /// and their join.
    pub fn apply(&self, w: &BraidWord) -> Result<(Vec<BraidWord>, Option<Join>)> {
        let n = w.strands();
        let one = |x: BraidWord| Ok((alloc::vec![x], None));
        let low = |i: usize| -> Result<BraidWord> {
            if i <= 1 {
                Ok(BraidWord::empty(i.max(1)))
            } else {
                w.subword_range(1, i - 1, true)
            }
        };
        let high = |i: usize| -> Result<BraidWord> {
            if i + 1 >= n {
                Ok(BraidWord::empty((n - i).max(1)))
            } else {
                w.subword_range(i + 1, n - 1, true)
            }
        };
        let level_ok = |i: usize| i >= 1 && i < n;
        match *self {
            TraceOp::Rho(k) => one(w.cyclic_rotate(k)),
            TraceOp::R3(p) => one(w.r3_move(p)?),
            TraceOp::Commute(p) => one(w.commute_move(p)?),
            TraceOp::R1(end) => match w.destabilize(end) {
                Some(x) => one(x),
                None => Err(Error::Precondition(String::from("R1 needs a lone end letter"))),
            },
            TraceOp::SplitCut(i) => {
                if !level_ok(i) || w.count(i) != 0 {
                    return Err(Error::Precondition(alloc::format!("level {} is not empty", i)));
                }
                Ok((alloc::vec![low(i)?, high(i)?], Some(Join::Split)))
            }
            TraceOp::Splice(i) => {
                if !level_ok(i) || w.count(i) != 1 {
                    return Err(Error::Precondition(alloc::format!("level {} is not a single letter", i)));
                }
                Ok((alloc::vec![low(i)?, high(i)?], Some(Join::Connect)))
            }
            TraceOp::ConnectCut(i) => {
                if !level_ok(i) || i + 1 >= n || has_intertwining(w, i) {
                    return Err(Error::Precondition(alloc::format!("levels {} and {} intertwine", i, i + 1)));
                }
                Ok((alloc::vec![w.subword_range(1, i, true)?, high(i)?], Some(Join::Connect)))
            }
        }
    }
}

impl fmt::Display for TraceOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceOp::Rho(k) => write!(f, "rho {}", k),
            TraceOp::R3(p) => write!(f, "R3 {}", p),
            TraceOp::Commute(p) => write!(f, "c {}", p),
            TraceOp::R1(StrandEnd::Top) => f.write_str("R1 top"),
            TraceOp::R1(StrandEnd::Bottom) => f.write_str("R1 bottom"),
            TraceOp::SplitCut(i) => write!(f, "split {}", i),
            TraceOp::Splice(i) => write!(f, "splice {}", i),
            TraceOp::ConnectCut(i) => write!(f, "connect {}", i),
        }
    }
}

/// A trace step acting on piece `piece` of the arena.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub piece: usize,
    pub op: TraceOp,
    /// The rewritten piece, or the two children of a cut.
    pub result: Vec<BraidWord>,
}

#[derive(Clone, Debug)]
struct Node {
    word: BraidWord,
    children: Option<(usize, usize, Join)>,
}

/// The pieces a trace operates on. Piece 0 is the input word; every cut
/// appends two new pieces.
#[derive(Clone, Debug)]
pub struct Arena {
    nodes: Vec<Node>,
}

impl Arena {
    pub fn new(w: &BraidWord) -> Self {
        Arena { nodes: alloc::vec![Node { word: w.clone(), children: None }] }
    }

    pub fn word(&self, piece: usize) -> &BraidWord {
        &self.nodes[piece].word
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Applies `op` to a live piece, returning the step and the new piece ids
    /// (for cuts) or the same id.
    pub fn apply(&mut self, piece: usize, op: TraceOp) -> Result<(TraceStep, Vec<usize>)> {
        let node = self.nodes.get(piece).ok_or_else(|| Error::Precondition(alloc::format!("no piece {}", piece)))?;
        if node.children.is_some() {
            return Err(Error::Precondition(alloc::format!("piece {} was already cut", piece)));
        }
        let (words, join) = op.apply(&node.word)?;
        let step = TraceStep { piece, op, result: words.clone() };
        match join {
            None => {
                self.nodes[piece].word = words.into_iter().next().expect("one word");
                Ok((step, alloc::vec![piece]))
            }
            Some(j) => {
                let a = self.nodes.len();
                let mut it = words.into_iter();
                for w in it.by_ref().take(2) {
                    self.nodes.push(Node { word: w, children: None });
                }
                self.nodes[piece].children = Some((a, a + 1, j));
                Ok((step, alloc::vec![a, a + 1]))
            }
        }
    }

    /// Replays `steps` from `w`, checking every recorded result.
    pub fn replay(w: &BraidWord, steps: &[TraceStep]) -> core::result::Result<Arena, (usize, Error)> {
        let mut arena = Arena::new(w);
        for (idx, s) in steps.iter().enumerate() {
            let (got, _) = arena.apply(s.piece, s.op).map_err(|e| (idx, e))?;
            if got.result != s.result {
                return Err((idx, Error::Precondition(alloc::format!("step {} result differs", idx))));
            }
        }
        Ok(arena)
    }

    /// Split factors, each a list of connect summands, in reading order.
    /// One-strand summands are kept; see [`Arena::factors`].
    pub fn raw_factors(&self) -> Vec<Vec<BraidWord>> {
        self.flatten(0)
    }

    fn flatten(&self, piece: usize) -> Vec<Vec<BraidWord>> {
        match self.nodes[piece].children {
            None => alloc::vec![alloc::vec![self.nodes[piece].word.clone()]],
            Some((a, b, Join::Split)) => {
                let mut x = self.flatten(a);
                x.extend(self.flatten(b));
                x
            }
            Some((a, b, Join::Connect)) => {
                // the shared strand is the top of the last factor of `a`
                // and the bottom of the first factor of `b`
                let mut x = self.flatten(a);
                let mut y = self.flatten(b).into_iter();
                let first = y.next().expect("nonempty");
                x.last_mut().expect("nonempty").extend(first);
                x.extend(y);
                x
            }
        }
    }

    /// `(unknots, factors)`: trivial one-strand summands dropped, factors made
    /// only of them counted as split unknots.
    pub fn factors(&self) -> (usize, Vec<Vec<BraidWord>>) {
        let mut unknots = 0;
        let mut out = Vec::new();
        for f in self.raw_factors() {
            let kept: Vec<BraidWord> = f.into_iter().filter(|w| w.strands() > 1).collect();
            if kept.is_empty() {
                unknots += 1;
            } else {
                out.push(kept);
            }
        }
        (unknots, out)
    }

    /// Glues the current leaves back together along the cut tree.
    pub fn reconstruct(&self) -> BraidWord {
        self.rebuild(0)
    }

    fn rebuild(&self, piece: usize) -> BraidWord {
        match self.nodes[piece].children {
            None => self.nodes[piece].word.clone(),
            Some((a, b, Join::Split)) => self.rebuild(a).split_union(&self.rebuild(b)),
            Some((a, b, Join::Connect)) => self.rebuild(a).connect_sum(&self.rebuild(b)),
        }
    }

    /// Live (uncut) pieces.
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.nodes.len()).filter(|&i| self.nodes[i].children.is_none()).collect()
    }
}
