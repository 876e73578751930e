//! Finite/infinite type decision by breadth-first search over mutation classes.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec::Vec;

use super::canon::{canonical_form, canonical_matrix, CanonicalForm};
use super::dynkin::{recognize, DynkinType};
use super::ExchangeMatrix;

/// Default node cap for searches.
pub const DEFAULT_CAP: usize = 100_000;

/// Outcome of the finite-type decision, with a replayable certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TypeVerdict {
    /// `path` mutates the input to `terminal`, an acyclic disjoint union of
    /// Dynkin quivers of the listed types.
    Finite { path: Vec<usize>, terminal: ExchangeMatrix, components: Vec<DynkinType> },
    /// `path` mutates the input to `terminal`, where `|b[i][j]| >= 2` at `pair`.
    Infinite { path: Vec<usize>, terminal: ExchangeMatrix, pair: (usize, usize) },
    /// The search hit the node cap before deciding.
    Indeterminate { explored: usize, cap: usize },
}

impl TypeVerdict {
    pub fn is_finite(&self) -> Option<bool> {
        match self {
            TypeVerdict::Finite { .. } => Some(true),
            TypeVerdict::Infinite { .. } => Some(false),
            TypeVerdict::Indeterminate { .. } => None,
        }
    }

    pub fn path(&self) -> &[usize] {
        match self {
            TypeVerdict::Finite { path, .. } | TypeVerdict::Infinite { path, .. } => path,
            TypeVerdict::Indeterminate { .. } => &[],
        }
    }

    /// Replays the path on `b` and checks the terminal claim.
    pub fn replays(&self, b: &ExchangeMatrix) -> bool {
        match self {
            TypeVerdict::Finite { path, terminal, components } => {
                b.mutate_path(path).as_ref() == Ok(terminal)
                    && terminal.is_acyclic()
                    && recognize(terminal) == *components
                    && components.iter().all(|t| t.is_finite())
            }
            TypeVerdict::Infinite { path, terminal, pair } => {
                b.mutate_path(path).as_ref() == Ok(terminal) && terminal.get(pair.0, pair.1).abs() >= 2
            }
            TypeVerdict::Indeterminate { .. } => false,
        }
    }
}

fn is_dynkin_union(b: &ExchangeMatrix) -> Option<Vec<DynkinType>> {
    if b.max_abs_entry() > 1 || !b.is_acyclic() {
        return None;
    }
    let types = recognize(b);
    types.iter().all(|t| t.is_finite()).then_some(types)
}

enum Local {
    Finite(Vec<usize>),
    Infinite(Vec<usize>),
    Indeterminate(usize),
}

/// BFS on a connected matrix until a Dynkin member or a heavy pair shows up.
fn search_component(b: &ExchangeMatrix, cap: usize) -> Local {
    if b.find_heavy_pair().is_some() {
        return Local::Infinite(Vec::new());
    }
    if is_dynkin_union(b).is_some() {
        return Local::Finite(Vec::new());
    }
    // node: (matrix, parent index, vertex)
    let mut nodes: Vec<(ExchangeMatrix, usize, usize)> = alloc::vec![(b.clone(), usize::MAX, 0)];
    let mut seen: BTreeSet<CanonicalForm> = BTreeSet::new();
    seen.insert(canonical_form(b));
    let mut queue = VecDeque::from([0usize]);
    let path_to = |nodes: &Vec<(ExchangeMatrix, usize, usize)>, mut i: usize| {
        let mut p = Vec::new();
        while nodes[i].1 != usize::MAX {
            p.push(nodes[i].2);
            i = nodes[i].1;
        }
        p.reverse();
        p
    };
    while let Some(i) = queue.pop_front() {
        for k in 0..b.size() {
            let m = match nodes[i].0.mutate(k) {
                Ok(m) => m,
                Err(_) => {
                    let mut p = path_to(&nodes, i);
                    p.push(k);
                    return Local::Infinite(p);
                }
            };
            if m.find_heavy_pair().is_some() {
                let mut p = path_to(&nodes, i);
                p.push(k);
                return Local::Infinite(p);
            }
            if !seen.insert(canonical_form(&m)) {
                continue;
            }
            let dynkin = is_dynkin_union(&m).is_some();
            nodes.push((m, i, k));
            if dynkin {
                return Local::Finite(path_to(&nodes, nodes.len() - 1));
            }
            if seen.len() >= cap {
                return Local::Indeterminate(seen.len());
            }
            queue.push_back(nodes.len() - 1);
        }
    }
    // A class without Dynkin members or heavy pairs would be a finite class of
    // non-finite type, which does not exist for skew-symmetric matrices.
    Local::Indeterminate(seen.len())
}

/// Decides finite type component by component.
pub fn is_finite_type(b: &ExchangeMatrix, cap: usize) -> TypeVerdict {
    let mut oracle = FiniteTypeOracle::new(cap);
    oracle.decide(b)
}

/// A finite-type decider with a memo table keyed by canonical forms of components.
#[derive(Clone, Debug, Default)]
pub struct FiniteTypeOracle {
    cap: usize,
    memo: BTreeMap<CanonicalForm, Memo>,
}

#[derive(Clone, Debug)]
enum Memo {
    /// Path in canonical labels.
    Finite(Vec<usize>),
    Infinite(Vec<usize>),
}

impl FiniteTypeOracle {
    pub fn new(cap: usize) -> Self {
        FiniteTypeOracle { cap, memo: BTreeMap::new() }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn decide(&mut self, b: &ExchangeMatrix) -> TypeVerdict {
        let mut path = Vec::new();
        for comp in b.connected_components() {
            let sub = b.restrict(&comp);
            let (canon, perm) = canonical_matrix(&sub);
            let key = canonical_form(&sub);
            let memo = match self.memo.get(&key) {
                Some(m) => m.clone(),
                None => {
                    let m = match search_component(&canon, self.cap) {
                        Local::Finite(p) => Memo::Finite(p),
                        Local::Infinite(p) => Memo::Infinite(p),
                        Local::Indeterminate(explored) => {
                            return TypeVerdict::Indeterminate { explored, cap: self.cap };
                        }
                    };
                    self.memo.insert(key, m.clone());
                    m
                }
            };
            // canonical vertex c is sub vertex inv[c], which is global comp[inv[c]]
            let mut inv = alloc::vec![0; perm.len()];
            for (old, &new) in perm.iter().enumerate() {
                inv[new] = old;
            }
            let to_global = |p: &[usize]| p.iter().map(|&c| comp[inv[c]]).collect::<Vec<usize>>();
            match memo {
                Memo::Finite(p) => path.extend(to_global(&p)),
                Memo::Infinite(p) => {
                    let mut ipath = to_global(&p);
                    let terminal = match b.mutate_path(&ipath) {
                        Ok(t) => t,
                        Err(_) => {
                            // overflow along the path: shorten to the last representable matrix
                            ipath.pop();
                            b.mutate_path(&ipath).expect("prefix is representable")
                        }
                    };
                    let pair = terminal.find_heavy_pair().expect("infinite certificate has a heavy pair");
                    return TypeVerdict::Infinite { path: ipath, terminal, pair };
                }
            }
        }
        let terminal = b.mutate_path(&path).expect("finite-type mutation stays small");
        let components = recognize(&terminal);
        TypeVerdict::Finite { path, terminal, components }
    }
}

/// The mutation class of `b` as canonical forms; the flag is true if truncated at `cap`.
pub fn mutation_class(b: &ExchangeMatrix, cap: usize) -> (BTreeSet<CanonicalForm>, bool) {
    let mut seen = BTreeSet::new();
    seen.insert(canonical_form(b));
    let mut queue = VecDeque::from([b.clone()]);
    while let Some(m) = queue.pop_front() {
        for k in 0..b.size() {
            let Ok(x) = m.mutate(k) else { return (seen, true) };
            if seen.insert(canonical_form(&x)) {
                if seen.len() >= cap {
                    return (seen, true);
                }
                queue.push_back(x);
            }
        }
    }
    (seen, false)
}

/// Bidirectional search for a mutation path between `a` and `b` up to relabeling.
/// `Some(false)` only when one side's class was exhausted without meeting.
pub fn mutation_equivalent(a: &ExchangeMatrix, b: &ExchangeMatrix, cap: usize) -> Option<bool> {
    if a.size() != b.size() {
        return Some(false);
    }
    let ka = canonical_form(a);
    let kb = canonical_form(b);
    if ka == kb {
        return Some(true);
    }
    let mut sides =
        [(BTreeSet::from([ka]), VecDeque::from([a.clone()])), (BTreeSet::from([kb]), VecDeque::from([b.clone()]))];
    loop {
        let side = if sides[0].1.len() <= sides[1].1.len() { 0 } else { 1 };
        if sides[side].1.is_empty() {
            return Some(false);
        }
        let level: Vec<ExchangeMatrix> = sides[side].1.drain(..).collect();
        for m in level {
            for k in 0..m.size() {
                let Ok(x) = m.mutate(k) else { continue };
                let key = canonical_form(&x);
                if sides[1 - side].0.contains(&key) {
                    return Some(true);
                }
                if sides[side].0.insert(key) {
                    sides[side].1.push_back(x);
                }
            }
        }
        if sides[0].0.len() + sides[1].0.len() >= cap {
            return None;
        }
    }
}
