use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec::Vec;

use super::standard::standard_type;
use super::trace::{Arena, TraceOp, TraceStep};
use crate::braid::{BraidWord, Letter, StrandEnd};
use crate::brick::has_intertwining;

/// Runs of `β(1,2)` read cyclically, as (letter, positions in `w`).
fn cyclic_runs(w: &BraidWord) -> Vec<(Letter, Vec<usize>)> {
    let mut runs: Vec<(Letter, Vec<usize>)> = Vec::new();
    for (p, &l) in w.letters().iter().enumerate() {
        if l != 1 && l != 2 {
            continue;
        }
        match runs.last_mut() {
            Some((m, ps)) if *m == l => ps.push(p),
            _ => runs.push((l, alloc::vec![p])),
        }
    }
    if runs.len() > 1 && runs[0].0 == runs[runs.len() - 1].0 {
        let (_, mut tail) = runs.pop().expect("nonempty");
        tail.extend_from_slice(&runs[0].1);
        runs[0].1 = tail;
    }
    runs
}

/// Applies a list of piece-local operations.
pub(crate) fn run_ops(w: &BraidWord, ops: &[TraceOp]) -> BraidWord {
    let mut x = w.clone();
    for op in ops {
        x = op.apply(&x).expect("planned move applies").0.into_iter().next().expect("one word");
    }
    x
}

/// Moves that make `s_1` lone when `β(1,2)` has four cyclic runs and a
/// single `s_2` sits next to a single `s_1`. Rotates to the pattern, commutes
/// the `s_1` letters next to the `s_2`, then runs the R3 chain
/// `s_1 s_2 s_1^x = s_2^x s_1 s_2` (or its mirror `s_1^x s_2 s_1 = s_2 s_1 s_2^x`).
pub(crate) fn lemma_plan_bottom(w: &BraidWord) -> Option<Vec<TraceOp>> {
    if w.strands() < 3 {
        return None;
    }
    let runs = cyclic_runs(w);
    if runs.len() != 4 {
        return None;
    }
    let len = w.len();
    for j in 0..4 {
        if runs[j].0 != 2 || runs[j].1.len() != 1 {
            continue;
        }
        let a = &runs[(j + 3) % 4].1;
        let b = &runs[(j + 1) % 4].1;
        if a.len() != 1 && b.len() != 1 {
            continue;
        }
        let mut ops = Vec::new();
        let rot = a[0];
        if rot != 0 {
            ops.push(TraceOp::Rho(rot as isize));
        }
        let shift = |p: usize| (p + len - rot) % len;
        let s = shift(runs[j].1[0]);
        // pull the s_1 letters before s_2 rightwards, last one first
        for (t, &p) in a.iter().rev().enumerate() {
            let (from, to) = (shift(p), s - 1 - t);
            ops.extend((from..to).map(TraceOp::Commute));
        }
        for (t, &p) in b.iter().enumerate() {
            let (from, to) = (shift(p), s + 1 + t);
            ops.extend((to..from).rev().map(TraceOp::Commute));
        }
        let st = s - a.len();
        if a.len() == 1 {
            ops.extend((0..b.len()).map(|t| TraceOp::R3(st + t)));
        } else {
            ops.extend((0..a.len()).rev().map(|t| TraceOp::R3(st + t)));
        }
        return Some(ops);
    }
    None
}

/// Bottom plan if one exists, else the plan for the flipped word (same moves).
/// Returns the moves and the end that becomes lone.
pub(crate) fn lemma_plan(w: &BraidWord) -> Option<(Vec<TraceOp>, StrandEnd)> {
    if let Some(p) = lemma_plan_bottom(w) {
        return Some((p, StrandEnd::Bottom));
    }
    lemma_plan_bottom(&w.flip()).map(|p| (p, StrandEnd::Top))
}

/// Strand reduction by one positive Markov destabilization, preceded by the
/// Lemma's rewrite when the end generator is not already lone.
pub fn reduce_strands(w: &BraidWord) -> Option<(BraidWord, Vec<TraceStep>)> {
    if w.strands() < 2 {
        return None;
    }
    let mut ops = Vec::new();
    if w.destabilize(StrandEnd::Top).is_some() {
        ops.push(TraceOp::R1(StrandEnd::Top));
    } else if w.destabilize(StrandEnd::Bottom).is_some() {
        ops.push(TraceOp::R1(StrandEnd::Bottom));
    } else {
        let (p, end) = lemma_plan(w)?;
        ops = p;
        ops.push(TraceOp::R1(end));
    }
    let mut arena = Arena::new(w);
    let steps: Vec<TraceStep> = ops.iter().map(|&op| arena.apply(0, op).expect("planned move applies").0).collect();
    Some((arena.word(0).clone(), steps))
}

/// Moves taking a four-run 3-strand word to a standard D or E word.
pub(crate) fn normalize_plan(w: &BraidWord) -> Option<Vec<TraceOp>> {
    if w.strands() != 3 {
        return None;
    }
    if standard_type(w).is_some() {
        return Some(Vec::new());
    }
    let runs = cyclic_runs(w);
    if runs.len() != 4 {
        return None;
    }
    let mut ops = Vec::new();
    let s1 = if runs[0].0 == 1 { 0 } else { 1 };
    let start = runs[s1].1[0];
    if start != 0 {
        ops.push(TraceOp::Rho(start as isize));
    }
    let len = |k: usize| runs[(s1 + k) % 4].1.len();
    let (mut a1, mut b1, mut a2, mut b2) = (len(0), len(1), len(2), len(3));
    if a1 < 2 || a2 < 2 || (b1 > 1 && b2 > 1) {
        return None;
    }
    if b1 > 1 || b2 > 1 {
        // both chains need the middle s1 run to have length 2
        if a2 != 2 {
            if a1 != 2 {
                return None;
            }
            ops.push(TraceOp::Rho((a1 + b1) as isize));
            core::mem::swap(&mut a1, &mut a2);
            core::mem::swap(&mut b1, &mut b2);
        }
        if b1 == 1 {
            // s1^a1 s2 s1^2 s2^b2
            ops.push(TraceOp::R3(a1 - 1));
            ops.extend((0..b2).map(|k| TraceOp::R3(a1 + 1 + k)));
            ops.push(TraceOp::Rho(-1));
            a2 = b2 + 1;
        } else {
            // s1^a1 s2^b1 s1^2 s2
            ops.push(TraceOp::Rho(1));
            ops.push(TraceOp::R3(a1 + b1));
            ops.extend((0..b1).rev().map(|k| TraceOp::R3(a1 - 1 + k)));
            a2 = b1 + 1;
        }
    }
    // s1^a1 s2 s1^a2 s2: put the 2 (D) or the 3 (E) second
    let table = |a: usize, b: usize| standard_type(&BraidWord::from_indices(3, &word3(a, b)).expect("valid")).is_some();
    if !table(a1, a2) {
        if !table(a2, a1) {
            return None;
        }
        ops.push(TraceOp::Rho((a1 + 1) as isize));
    }
    Some(ops)
}

fn word3(a: usize, b: usize) -> Vec<usize> {
    let mut v = alloc::vec![1; a];
    v.push(2);
    v.extend(core::iter::repeat_n(1, b));
    v.push(2);
    v
}

/// Brings a 3-strand D/E word to its table form by the rotation and R3 chains
/// of the 3-strand argument, searching over isotopic words first if the
/// word does not have four runs yet.
pub fn normalize_3strand(w: &BraidWord) -> Option<BraidWord> {
    if let Some(p) = normalize_plan(w) {
        return Some(run_ops(w, &p));
    }
    let (ops, _) = isotopy_search(w, DEFAULT_SEARCH, |x| normalize_plan(x).is_some())?;
    let x = run_ops(w, &ops);
    Some(run_ops(&x, &normalize_plan(&x)?))
}

/// Default budget for isotopy searches (visited words).
pub const DEFAULT_SEARCH: usize = 200_000;

/// Piece-local moves used by the searches: both unit rotations, every
/// applicable R3 and every far commutation.
pub(crate) fn neighbours(x: &BraidWord) -> Vec<(TraceOp, BraidWord)> {
    let mut out = Vec::new();
    if x.len() > 1 {
        out.push((TraceOp::Rho(1), x.cyclic_rotate(1)));
        if x.len() > 2 {
            out.push((TraceOp::Rho(-1), x.cyclic_rotate(-1)));
        }
    }
    for p in 0..x.len() {
        if x.r3_applies(p) {
            out.push((TraceOp::R3(p), x.r3_move(p).expect("applies")));
        }
        if x.commute_applies(p) {
            out.push((TraceOp::Commute(p), x.commute_move(p).expect("applies")));
        }
    }
    out
}

/// Breadth-first search over words isotopic to `w` by ρ, R3 and c for one
/// (other than `w` itself) satisfying `goal`. Returns the moves and the word.
pub(crate) fn isotopy_search<F: FnMut(&BraidWord) -> bool>(
    w: &BraidWord,
    budget: usize,
    mut goal: F,
) -> Option<(Vec<TraceOp>, BraidWord)> {
    let mut parent: BTreeMap<Vec<Letter>, (Vec<Letter>, TraceOp)> = BTreeMap::new();
    let mut seen: BTreeSet<Vec<Letter>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.letters().to_vec());
    queue.push_back(w.clone());
    while let Some(x) = queue.pop_front() {
        for (op, y) in neighbours(&x) {
            if seen.contains(y.letters()) {
                continue;
            }
            if seen.len() >= budget {
                return None;
            }
            seen.insert(y.letters().to_vec());
            parent.insert(y.letters().to_vec(), (x.letters().to_vec(), op));
            if goal(&y) {
                let mut ops = alloc::vec![op];
                let mut cur = x.letters().to_vec();
                while let Some((prev, op)) = parent.get(&cur) {
                    ops.push(*op);
                    cur = prev.clone();
                }
                ops.reverse();
                return Some((ops, y));
            }
            queue.push_back(y);
        }
    }
    None
}

/// True if some cut, destabilization or closed-form rewrite applies.
pub(crate) fn makes_progress(x: &BraidWord) -> bool {
    let n = x.strands();
    (1..n).any(|i| x.count(i) <= 1)
        || (1..n.saturating_sub(1)).any(|i| !has_intertwining(x, i))
        || standard_type(x).is_some()
        || lemma_plan(x).is_some()
        || (n == 3 && normalize_plan(x).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{monoid_equal, parse_braid};

    fn p(s: &str, n: usize) -> BraidWord {
        parse_braid(s, Some(n)).unwrap()
    }

    #[test]
    fn test_reduce_strands() {
        let w = p("s1 s2 s1^2 s2^3", 3);
        let (x, steps) = reduce_strands(&w).unwrap();
        assert_eq!(x.strands(), 2);
        assert!(Arena::replay(&w, &steps).is_ok());
        // only the final step changes the strand count
        for s in &steps[..steps.len() - 1] {
            assert!(!matches!(s.op, TraceOp::R1(_)));
        }
        assert!(reduce_strands(&p("s1^2 s2^2 s1^2 s2^2", 3)).is_none());
        let (x, _) = reduce_strands(&p("s1 s2", 3)).unwrap();
        assert_eq!(x.strands(), 2);
    }

    #[test]
    fn test_lemma_plan_with_far_letters() {
        // s_3 letters sit between the s_1 letters and must be commuted away
        let w = p("s1 s3 s1 s2 s3 s1 s2^2 s3", 4);
        let (ops, end) = lemma_plan(&w).unwrap();
        assert_eq!(end, StrandEnd::Bottom);
        let x = run_ops(&w, &ops);
        assert_eq!(x.count(1), 1);
        // rotation aside, the moves preserve the braid
        let rot = match ops[0] {
            TraceOp::Rho(k) => k,
            _ => 0,
        };
        assert!(monoid_equal(&w.cyclic_rotate(rot), &x).unwrap());
    }

    #[test]
    fn test_normalize_chains() {
        // first chain: s1^a s2 s1^2 s2^b -> s1^a s2 s1^(b+1) s2
        assert_eq!(normalize_3strand(&p("s1^3 s2 s1^2 s2^2", 3)).unwrap(), p("s1^3 s2 s1^3 s2", 3));
        // second chain: s1^a s2^b s1^2 s2 -> s1^a s2 s1^(b+1) s2
        assert_eq!(normalize_3strand(&p("s1^4 s2^2 s1^2 s2", 3)).unwrap(), p("s1^4 s2 s1^3 s2", 3));
        assert_eq!(normalize_3strand(&p("s1^2 s2 s1^2 s2", 3)).unwrap(), p("s1^2 s2 s1^2 s2", 3));
        // D5 written the other way round
        assert_eq!(normalize_3strand(&p("s1^2 s2 s1^3 s2", 3)).unwrap(), p("s1^3 s2 s1^2 s2", 3));
        assert!(normalize_3strand(&p("s1^6 s2 s1^3 s2", 3)).is_none());
    }

    #[test]
    fn test_normalize_chain_steps() {
        let w = p("s1^3 s2 s1^2 s2^2", 3);
        let ops = normalize_plan(&w).unwrap();
        assert_eq!(ops[..3], [TraceOp::R3(2), TraceOp::R3(4), TraceOp::R3(5)]);
        let w = p("s1^4 s2^2 s1^2 s2", 3);
        let ops = normalize_plan(&w).unwrap();
        assert_eq!(ops[..4], [TraceOp::Rho(1), TraceOp::R3(6), TraceOp::R3(4), TraceOp::R3(3)]);
    }
}
