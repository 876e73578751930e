//! Mechanical checking of braid rewrite chains.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::braid::{monoid_equal, BraidWord, StrandEnd};
use crate::brick::extract_quiver;
use crate::quiver::{is_finite_type, recognize, DynkinType};
use crate::Error;

/// A primitive move. Positions are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Move {
    /// Markov destabilization; `None` prefers the top end.
    R1(Option<StrandEnd>),
    R3(usize),
    Rho(isize),
    Commute(usize),
    Delete(Vec<usize>),
    Oppo,
    /// The result equals the previous word as a positive braid.
    Eq,
}

impl Move {
    pub fn name(&self) -> &'static str {
        match self {
            Move::R1(_) => "R1",
            Move::R3(_) => "R3",
            Move::Rho(_) => "rho",
            Move::Commute(_) => "c",
            Move::Delete(_) => "delete",
            Move::Oppo => "oppo",
            Move::Eq => "eq",
        }
    }

    /// Applies a non-`Eq` move.
    pub fn apply(&self, w: &BraidWord) -> Result<BraidWord, Error> {
        match self {
            Move::R1(None) => w.markov_destabilize().ok_or_else(|| Error::Precondition("no lone end generator".into())),
            Move::R1(Some(end)) => {
                w.destabilize(*end).ok_or_else(|| Error::Precondition("end generator is not lone".into()))
            }
            Move::R3(p) => w.r3_move(*p),
            Move::Rho(k) => Ok(w.cyclic_rotate(*k)),
            Move::Commute(p) => w.commute_move(*p),
            Move::Delete(ps) => w.delete_letters(ps),
            Move::Oppo => Ok(w.opposite()),
            Move::Eq => Err(Error::Precondition("eq has no deterministic result".into())),
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::R1(None) => f.write_str("R1"),
            Move::R1(Some(StrandEnd::Top)) => f.write_str("R1 top"),
            Move::R1(Some(StrandEnd::Bottom)) => f.write_str("R1 bottom"),
            Move::R3(p) => write!(f, "R3 {}", p),
            Move::Rho(k) => write!(f, "rho {}", k),
            Move::Commute(p) => write!(f, "c {}", p),
            Move::Delete(ps) => {
                f.write_str("delete")?;
                for p in ps {
                    write!(f, " {}", p)?;
                }
                Ok(())
            }
            Move::Oppo => f.write_str("oppo"),
            Move::Eq => f.write_str("eq"),
        }
    }
}

/// One displayed step: one or more primitive moves and the claimed result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationStep {
    pub moves: Vec<Move>,
    pub result: BraidWord,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    Isotopy,
    Dominance,
}

impl Relation {
    pub fn name(&self) -> &'static str {
        match self {
            Relation::Isotopy => "isotopy",
            Relation::Dominance => "dominance",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl core::str::FromStr for Relation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "isotopy" => Ok(Relation::Isotopy),
            "dominance" => Ok(Relation::Dominance),
            _ => Err(Error::MalformedToken(s.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    pub start: BraidWord,
    pub steps: Vec<DerivationStep>,
    pub claimed: Relation,
}

impl Derivation {
    pub fn end(&self) -> &BraidWord {
        self.steps.last().map(|s| &s.result).unwrap_or(&self.start)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckError {
    /// A move could not be applied.
    Move {
        step: usize,
        mv: String,
        error: Error,
    },
    /// The move applied but produced a different word.
    Mismatch {
        step: usize,
        expected: BraidWord,
        got: BraidWord,
    },
    /// An `eq` step whose words differ as positive braids.
    NotEqual {
        step: usize,
        prev: BraidWord,
        claimed: BraidWord,
    },
    /// `eq` combined with other moves in one step.
    MixedEq {
        step: usize,
    },
    Relation {
        claimed: Relation,
        actual: Relation,
    },
}

impl CheckError {
    /// The offending step, if the failure is local.
    pub fn step(&self) -> Option<usize> {
        match self {
            CheckError::Move { step, .. }
            | CheckError::Mismatch { step, .. }
            | CheckError::NotEqual { step, .. }
            | CheckError::MixedEq { step } => Some(*step),
            CheckError::Relation { .. } => None,
        }
    }
}

impl fmt::Display for CheckError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckError::Move { step, mv, error } => write!(f, "step {}: {} fails: {}", step, mv, error),
            CheckError::Mismatch { step, expected, got } => {
                write!(f, "step {}: claimed {} but the moves give {}", step, expected, got)
            }
            CheckError::NotEqual { step, prev, claimed } => {
                write!(f, "step {}: {} and {} are different braids", step, prev, claimed)
            }
            CheckError::MixedEq { step } => write!(f, "step {}: eq must be the only move of its step", step),
            CheckError::Relation { claimed, actual } => {
                write!(f, "chain claims {} but its steps give {}", claimed, actual)
            }
        }
    }
}

/// Dominance iff some step deletes letters.
pub fn compose_relation(steps: &[DerivationStep]) -> Relation {
    if steps.iter().flat_map(|s| &s.moves).any(|m| matches!(m, Move::Delete(_))) {
        Relation::Dominance
    } else {
        Relation::Isotopy
    }
}

/// Replays every step and compares the composite relation with the claim.
pub fn check(d: &Derivation) -> Result<Relation, CheckError> {
    let mut cur = d.start.clone();
    for (i, s) in d.steps.iter().enumerate() {
        if s.moves.contains(&Move::Eq) {
            if s.moves.len() != 1 {
                return Err(CheckError::MixedEq { step: i });
            }
            let equal = cur.strands() == s.result.strands() && monoid_equal(&cur, &s.result).unwrap_or(false);
            if !equal {
                return Err(CheckError::NotEqual { step: i, prev: cur, claimed: s.result.clone() });
            }
            cur = s.result.clone();
            continue;
        }
        for m in &s.moves {
            cur = m.apply(&cur).map_err(|error| CheckError::Move { step: i, mv: m.to_string(), error })?;
        }
        if cur != s.result {
            return Err(CheckError::Mismatch { step: i, expected: s.result.clone(), got: cur });
        }
    }
    let actual = compose_relation(&d.steps);
    if actual != d.claimed {
        return Err(CheckError::Relation { claimed: d.claimed, actual });
    }
    Ok(actual)
}

/// Brick-quiver summary of one word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverSummary {
    pub word: BraidWord,
    pub vertices: usize,
    pub types: Vec<DynkinType>,
    pub acyclic: bool,
    /// `None` if the finite-type search hit its cap.
    pub finite: Option<bool>,
}

impl QuiverSummary {
    pub fn of(w: &BraidWord, cap: usize) -> Self {
        let b = extract_quiver(w).to_matrix();
        QuiverSummary {
            word: w.clone(),
            vertices: b.size(),
            types: recognize(&b),
            acyclic: b.is_acyclic(),
            finite: is_finite_type(&b, cap).is_finite(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndpointReport {
    pub relation: Relation,
    pub start: QuiverSummary,
    pub end: QuiverSummary,
}

/// Checks `d` and summarizes the quivers of its two end words.
pub fn endpoint_quiver_report(d: &Derivation, cap: usize) -> Result<EndpointReport, CheckError> {
    let relation = check(d)?;
    Ok(EndpointReport { relation, start: QuiverSummary::of(&d.start, cap), end: QuiverSummary::of(d.end(), cap) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_braid;
    use crate::quiver::Family;
    use alloc::vec;
    use proptest::prelude::*;

    fn p(s: &str, n: usize) -> BraidWord {
        parse_braid(s, Some(n)).unwrap()
    }

    fn step(moves: Vec<Move>, r: &str, n: usize) -> DerivationStep {
        DerivationStep { moves, result: p(r, n) }
    }

    #[test]
    fn test_relations() {
        let iso = vec![step(vec![Move::R3(0)], "s2 s1 s2", 3)];
        assert_eq!(compose_relation(&iso), Relation::Isotopy);
        let dom = vec![step(vec![Move::Delete(vec![0])], "s2 s1", 3)];
        assert_eq!(compose_relation(&dom), Relation::Dominance);
        let eq = vec![step(vec![Move::Eq], "s1", 3)];
        assert_eq!(compose_relation(&eq), Relation::Isotopy);
    }

    #[test]
    fn test_check_and_errors() {
        let start = p("s1 s2 s1 s3", 4);
        let good = Derivation {
            start: start.clone(),
            steps: vec![
                step(vec![Move::R3(0)], "s2 s1 s2 s3", 4),
                step(vec![Move::Rho(-1), Move::R3(1)], "s3 s1 s2 s1", 4),
                step(vec![Move::Eq], "s3 s2 s1 s2", 4),
                step(vec![Move::R1(None)], "s2 s1 s2", 3),
            ],
            claimed: Relation::Isotopy,
        };
        assert_eq!(check(&good), Ok(Relation::Isotopy));
        let mut bad = good.clone();
        bad.steps[1].result = p("s3 s1 s2 s2", 4);
        assert_eq!(check(&bad).unwrap_err().step(), Some(1));
        let mut bad = good.clone();
        bad.steps[2].result = p("s3 s2 s2 s1", 4);
        assert!(matches!(check(&bad), Err(CheckError::NotEqual { step: 2, .. })));
        let mut bad = good.clone();
        bad.claimed = Relation::Dominance;
        assert!(matches!(check(&bad), Err(CheckError::Relation { .. })));
        let mut bad = good;
        bad.steps[0].moves = vec![Move::R3(1)];
        assert!(matches!(check(&bad), Err(CheckError::Move { step: 0, .. })));
    }

    #[test]
    fn test_endpoint_report() {
        let d = Derivation {
            start: p("s1^6 s2 s1^3 s2", 3),
            steps: vec![step(vec![Move::Rho(10)], "s2 s1^6 s2 s1^3", 3)],
            claimed: Relation::Isotopy,
        };
        let r = endpoint_quiver_report(&d, 100_000).unwrap();
        assert_eq!(r.end.types[0].family, Family::AffineE);
        assert!(r.end.acyclic);
        assert_eq!(r.end.finite, Some(false));
    }

    fn random_chain() -> impl Strategy<Value = (BraidWord, Vec<(u8, usize)>)> {
        let w = prop::collection::vec(1usize..5, 4..14).prop_map(|v| BraidWord::from_indices(5, &v).unwrap());
        (w, prop::collection::vec((0u8..5, 0usize..20), 1..25))
    }

    proptest! {
        #[test]
        fn generated_chains_pass_and_corruptions_fail((w, picks) in random_chain(), victim in 0usize..100, letter in 1usize..5) {
            let mut cur = w.clone();
            let mut steps = Vec::new();
            for (kind, x) in picks {
                let mv = match kind {
                    0 => Move::Rho(x as isize % 7 - 3),
                    1 => Move::R3(x),
                    2 => Move::Commute(x),
                    3 => Move::Oppo,
                    _ => Move::Delete(vec![x]),
                };
                if let Ok(next) = mv.apply(&cur) {
                    cur = next;
                    steps.push(DerivationStep { moves: vec![mv], result: cur.clone() });
                }
            }
            prop_assume!(!steps.is_empty());
            let d = Derivation { start: w, claimed: compose_relation(&steps), steps };
            prop_assert!(check(&d).is_ok());
            let k = victim % d.steps.len();
            let mut bad = d.clone();
            let r = &bad.steps[k].result;
            prop_assume!(!r.is_empty());
            let pos = victim % r.len();
            let mut letters: Vec<usize> = r.letters().iter().map(|&l| l as usize).collect();
            prop_assume!(letters[pos] != letter);
            letters[pos] = letter;
            bad.steps[k].result = BraidWord::from_indices(r.strands(), &letters).unwrap();
            let e = check(&bad).unwrap_err();
            prop_assert_eq!(e.step(), Some(k));
        }
    }
}
