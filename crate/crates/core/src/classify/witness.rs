use alloc::vec::Vec;

use super::reduce::isotopy_search;
use super::trace::{Arena, TraceStep};
use crate::braid::{BraidWord, Letter};
use crate::brick::extract_quiver;
use crate::quiver::{recognize, DynkinType};

/// A dominated word with an acyclic infinite-type quiver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// Isotopy moves from the input to `word`.
    pub trace: Vec<TraceStep>,
    pub word: BraidWord,
    /// Positions of `word` deleted to reach `result` (possibly none).
    pub deleted: Vec<usize>,
    pub result: BraidWord,
    /// Component types of the result's quiver; at least one is not finite.
    pub types: Vec<DynkinType>,
}

/// Letter patterns with acyclic infinite-type quivers, at every level.
fn patterns(n: usize) -> Vec<Vec<Letter>> {
    let mut out = Vec::new();
    let rep = |l: Letter, k: usize| core::iter::repeat_n(l, k);
    for i in 1..n.saturating_sub(1) {
        let (a, b) = (i as Letter, i as Letter + 1);
        for (x, y) in [(a, b), (b, a)] {
            out.push(rep(x, 2).chain(rep(y, 2)).chain(rep(x, 2)).chain(rep(y, 2)).collect());
            out.push(rep(x, 6).chain(rep(y, 1)).chain(rep(x, 3)).chain(rep(y, 1)).collect());
        }
        if i + 2 < n {
            let c = i as Letter + 2;
            out.push([a, c, b, b, a, c, b, b].to_vec());
        }
    }
    out
}

/// Greedy subsequence embedding; returns the used positions.
fn embed(word: &[Letter], pat: &[Letter]) -> Option<Vec<usize>> {
    let mut used = Vec::with_capacity(pat.len());
    let mut k = 0;
    for (p, &l) in word.iter().enumerate() {
        if k < pat.len() && l == pat[k] {
            used.push(p);
            k += 1;
        }
    }
    (k == pat.len()).then_some(used)
}

fn infinite_acyclic(w: &BraidWord) -> Option<Vec<DynkinType>> {
    let b = extract_quiver(w).to_matrix();
    if !b.is_acyclic() {
        return None;
    }
    let types = recognize(&b);
    types.iter().any(|t| !t.is_finite()).then_some(types)
}

/// Checks `x` itself, then deletions of `x` down to a fixture pattern.
fn witness_at(x: &BraidWord) -> Option<(Vec<usize>, BraidWord, Vec<DynkinType>)> {
    if let Some(t) = infinite_acyclic(x) {
        return Some((Vec::new(), x.clone(), t));
    }
    for pat in patterns(x.strands()) {
        if let Some(used) = embed(x.letters(), &pat) {
            let deleted: Vec<usize> = (0..x.len()).filter(|p| !used.contains(p)).collect();
            let y = x.delete_letters(&deleted).expect("positions in range");
            if let Some(t) = infinite_acyclic(&y) {
                return Some((deleted, y, t));
            }
        }
    }
    None
}

/// Bounded search over isotopic words for an acyclic infinite-type quiver,
/// either directly or after deleting letters down to a fixture pattern.
pub fn find_witness(w: &BraidWord, budget: usize) -> Option<Witness> {
    let build = |ops: &[super::trace::TraceOp], x: BraidWord| {
        let (deleted, result, types) = witness_at(&x).expect("goal holds");
        let mut arena = Arena::new(w);
        let trace = ops.iter().map(|&op| arena.apply(0, op).expect("search move applies").0).collect();
        Witness { trace, word: x, deleted, result, types }
    };
    if witness_at(w).is_some() {
        return Some(build(&[], w.clone()));
    }
    let (ops, x) = isotopy_search(w, budget, |x| witness_at(x).is_some())?;
    Some(build(&ops, x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_braid;

    #[test]
    fn test_witnesses() {
        let e9 = parse_braid("s1^6 s2 s1^3 s2", None).unwrap();
        let w = find_witness(&e9, 1000).unwrap();
        assert!(w.deleted.is_empty() && w.trace.is_empty());
        // embeds s1^2 s2^2 s1^2 s2^2 after deleting two letters
        let big = parse_braid("s1^3 s2^2 s1^2 s2^3", None).unwrap();
        let w = find_witness(&big, 1000).unwrap();
        assert!(w.result.len() <= big.len());
        assert!(extract_quiver(&w.result).to_matrix().is_acyclic());
        assert!(w.types.iter().any(|t| !t.is_finite()));
        let a = parse_braid("s1^5", None).unwrap();
        assert!(find_witness(&a, 1000).is_none());
    }
}
