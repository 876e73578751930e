use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::reduce::{isotopy_search, lemma_plan, makes_progress, normalize_plan, DEFAULT_SEARCH};
use super::standard::{standard_type, StandardLink};
use super::trace::{Arena, TraceOp, TraceStep};
use super::witness::{find_witness, Witness};
use crate::braid::{BraidWord, StrandEnd};
use crate::brick::{extract_quiver, has_intertwining};
use crate::quiver::{DynkinType, FiniteTypeOracle, TypeVerdict, DEFAULT_CAP};

/// Split union of unknots and of connect sums of standard links.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkDecomposition {
    pub unknots: usize,
    pub factors: Vec<Vec<StandardLink>>,
}

impl LinkDecomposition {
    /// Factors in order, then the unknots as trailing empty strands.
    pub fn reconstruct(&self) -> BraidWord {
        let mut out: Option<BraidWord> = None;
        for f in &self.factors {
            let mut it = f.iter();
            let first = it.next().expect("nonempty factor").word.clone();
            let sum = it.fold(first, |acc, s| acc.connect_sum(&s.word));
            out = Some(match out {
                None => sum,
                Some(w) => w.split_union(&sum),
            });
        }
        match out {
            None => BraidWord::empty(self.unknots.max(1)),
            Some(w) => w.with_extra_strands(self.unknots),
        }
    }

    /// All summand types, sorted.
    pub fn types(&self) -> Vec<DynkinType> {
        let mut t: Vec<DynkinType> = self.factors.iter().flatten().map(|s| s.ty).collect();
        t.sort_unstable();
        t
    }

    /// Per-factor sorted type lists, themselves sorted.
    pub fn type_multiset(&self) -> Vec<Vec<DynkinType>> {
        let mut out: Vec<Vec<DynkinType>> = self
            .factors
            .iter()
            .map(|f| {
                let mut t: Vec<DynkinType> = f.iter().map(|s| s.ty).collect();
                t.sort_unstable();
                t
            })
            .collect();
        out.sort();
        out
    }

    pub fn equivalent(&self, other: &LinkDecomposition) -> bool {
        self.unknots == other.unknots && self.type_multiset() == other.type_multiset()
    }
}

/// Output of [`split_decompose`]: factors are connect-sum lists of pieces
/// whose brick quivers are connected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitDecomposition {
    pub unknots: usize,
    pub factors: Vec<Vec<BraidWord>>,
    pub trace: Vec<TraceStep>,
}

/// Search limits for the classifier.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassifyOptions {
    /// Node cap of the finite-type decision.
    pub cap: usize,
    /// Visited-word budget for each isotopy search.
    pub search: usize,
    /// Visited-word budget for the infinite-type witness search.
    pub witness: usize,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions { cap: DEFAULT_CAP, search: DEFAULT_SEARCH, witness: 20_000 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassifyVerdict {
    Finite { decomposition: LinkDecomposition, trace: Vec<TraceStep>, certificate: TypeVerdict, warnings: Vec<String> },
    Infinite { witness: Option<Witness>, certificate: TypeVerdict },
    Indeterminate { reason: String },
}

impl ClassifyVerdict {
    pub fn is_finite(&self) -> Option<bool> {
        match self {
            ClassifyVerdict::Finite { .. } => Some(true),
            ClassifyVerdict::Infinite { .. } => Some(false),
            ClassifyVerdict::Indeterminate { .. } => None,
        }
    }

    pub fn decomposition(&self) -> Option<&LinkDecomposition> {
        match self {
            ClassifyVerdict::Finite { decomposition, .. } => Some(decomposition),
            _ => None,
        }
    }

    pub fn trace(&self) -> &[TraceStep] {
        match self {
            ClassifyVerdict::Finite { trace, .. } => trace,
            ClassifyVerdict::Infinite { witness: Some(w), .. } => &w.trace,
            _ => &[],
        }
    }
}

struct Engine {
    arena: Arena,
    steps: Vec<TraceStep>,
}

impl Engine {
    fn apply(&mut self, piece: usize, op: TraceOp) -> Vec<usize> {
        let (step, ids) = self.arena.apply(piece, op).expect("planned move applies");
        self.steps.push(step);
        ids
    }

    /// Cuts and destabilizations only. Returns the new pieces if `piece` was
    /// cut, `None` once no cut applies.
    fn cut_once(&mut self, piece: usize) -> Option<Vec<usize>> {
        loop {
            let x = self.arena.word(piece).clone();
            let n = x.strands();
            if n == 1 {
                return None;
            }
            if let Some(i) = (1..n).find(|&i| x.count(i) == 0) {
                return Some(self.apply(piece, TraceOp::SplitCut(i)));
            }
            if x.count(n - 1) == 1 {
                self.apply(piece, TraceOp::R1(StrandEnd::Top));
                continue;
            }
            if x.count(1) == 1 {
                self.apply(piece, TraceOp::R1(StrandEnd::Bottom));
                continue;
            }
            if let Some(i) = (2..n - 1).find(|&i| x.count(i) == 1) {
                return Some(self.apply(piece, TraceOp::Splice(i)));
            }
            if let Some(i) = (1..n - 1).find(|&i| !has_intertwining(&x, i)) {
                return Some(self.apply(piece, TraceOp::ConnectCut(i)));
            }
            return None;
        }
    }

    /// Drives `piece` to standard leaves. `Err` names a piece the searches
    /// could not reduce.
    fn reduce(&mut self, root: usize, search: usize) -> Result<(), BraidWord> {
        let mut stack = alloc::vec![root];
        while let Some(piece) = stack.pop() {
            if let Some(ids) = self.cut_once(piece) {
                stack.extend(ids.into_iter().rev());
                continue;
            }
            let x = self.arena.word(piece).clone();
            if x.strands() == 1 || standard_type(&x).is_some() {
                continue;
            }
            if let Some((ops, _)) = lemma_plan(&x) {
                for op in ops {
                    self.apply(piece, op);
                }
            } else if let Some(ops) = normalize_plan(&x) {
                for op in ops {
                    self.apply(piece, op);
                }
            } else {
                match isotopy_search(&x, search, makes_progress) {
                    Some((ops, _)) => {
                        for op in ops {
                            self.apply(piece, op);
                        }
                    }
                    None => return Err(x),
                }
            }
            stack.push(piece);
        }
        Ok(())
    }
}

fn cut_all(engine: &mut Engine) {
    let mut stack = alloc::vec![0usize];
    while let Some(p) = stack.pop() {
        if let Some(ids) = engine.cut_once(p) {
            stack.extend(ids.into_iter().rev());
        }
    }
}

/// Cuts `w` at empty levels (split union), lone letters (destabilize or
/// splice) and non-intertwined adjacent levels (connect sum), lowest level
/// first, until every piece has a connected brick quiver.
pub fn split_decompose(w: &BraidWord) -> SplitDecomposition {
    let mut engine = Engine { arena: Arena::new(w), steps: Vec::new() };
    cut_all(&mut engine);
    let (unknots, factors) = engine.arena.factors();
    SplitDecomposition { unknots, factors, trace: engine.steps }
}

/// Strands `j` of `w` whose neighbouring levels `j-1` and `j` are both
/// empty, with levels `0` and `n` counted as empty.
pub fn empty_level_unknots(w: &BraidWord) -> usize {
    let n = w.strands();
    let empty = |i: usize| i == 0 || i == n || w.count(i) == 0;
    (1..=n).filter(|&j| empty(j - 1) && empty(j)).count()
}

/// Decomposes a finite-type word into standard links. Does not consult the
/// finite-type decision; see [`classify`].
pub fn decompose(w: &BraidWord, search: usize) -> Result<(LinkDecomposition, Vec<TraceStep>), BraidWord> {
    let mut engine = Engine { arena: Arena::new(w), steps: Vec::new() };
    cut_all(&mut engine);
    for leaf in engine.arena.leaves() {
        engine.reduce(leaf, search)?;
    }
    let (unknots, raw) = engine.arena.factors();
    let factors = raw
        .into_iter()
        .map(|f| {
            f.into_iter()
                .map(|word| StandardLink { ty: standard_type(&word).expect("reduced leaves are standard"), word })
                .collect()
        })
        .collect();
    Ok((LinkDecomposition { unknots, factors }, engine.steps))
}

/// Finite/infinite classification with a decomposition or a witness.
pub fn classify(w: &BraidWord) -> ClassifyVerdict {
    classify_with(w, &mut FiniteTypeOracle::new(DEFAULT_CAP), ClassifyOptions::default())
}

pub fn classify_with(w: &BraidWord, oracle: &mut FiniteTypeOracle, opts: ClassifyOptions) -> ClassifyVerdict {
    let b = extract_quiver(w).to_matrix();
    let certificate = oracle.decide(&b);
    match &certificate {
        TypeVerdict::Indeterminate { explored, cap } => ClassifyVerdict::Indeterminate {
            reason: format!("finite-type search explored {} classes, cap {}", explored, cap),
        },
        TypeVerdict::Infinite { .. } => {
            let witness = find_witness(w, opts.witness);
            ClassifyVerdict::Infinite { witness, certificate }
        }
        TypeVerdict::Finite { components, .. } => {
            let (decomposition, trace) = match decompose(w, opts.search) {
                Ok(x) => x,
                Err(stuck) => {
                    return ClassifyVerdict::Indeterminate {
                        reason: format!("no reduction found for piece {} within {} words", stuck, opts.search),
                    }
                }
            };
            let mut expected = components.clone();
            expected.sort_unstable();
            if decomposition.types() != expected {
                return ClassifyVerdict::Indeterminate {
                    reason: format!(
                        "decomposition types {:?} disagree with the certificate {:?}",
                        decomposition.types().iter().map(|t| t.name()).collect::<Vec<_>>(),
                        expected.iter().map(|t| t.name()).collect::<Vec<_>>()
                    ),
                };
            }
            let mut warnings = Vec::new();
            let literal = empty_level_unknots(w);
            if literal != decomposition.unknots {
                warnings.push(format!(
                    "{} unknots from empty-level pairs, {} after destabilizations",
                    literal, decomposition.unknots
                ));
            }
            let (c_in, c_out) = (w.components(), decomposition.reconstruct().components());
            if c_in != c_out {
                warnings.push(format!("input has {} components, decomposition has {}", c_in, c_out));
            }
            ClassifyVerdict::Finite { decomposition, trace, certificate, warnings }
        }
    }
}
