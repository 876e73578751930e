use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_rational::BigRational;

use super::seed::{bit_lengths, exchange, is_positive, Seed};
use crate::quiver::ExchangeMatrix;
use crate::{Error, Result};

/// The DT mutation sequence of an acyclic quiver: sources first, ties broken by
/// the smallest index.
pub fn dt_sequence(b: &ExchangeMatrix) -> Result<Vec<usize>> {
    b.topological_order().ok_or(Error::Cyclic)
}

/// True iff every mutation happens at a green vertex and the final c-matrix is
/// minus a permutation matrix.
pub fn verify_maximal_green(b: &ExchangeMatrix, seq: &[usize]) -> bool {
    let mut s = Seed::unit(b);
    for &k in seq {
        if k >= s.size() || !s.is_green(k) {
            return false;
        }
        s = match s.mutate(k) {
            Ok(t) => t,
            Err(_) => return false,
        };
    }
    let n = s.size();
    (0..n).all(|j| {
        let v = s.c_vector(j);
        v.iter().filter(|&&x| x == -1).count() == 1 && v.iter().all(|&x| x == 0 || x == -1)
    }) && {
        let mut rows: Vec<usize> = (0..n).map(|j| s.c_vector(j).iter().position(|&x| x == -1).unwrap()).collect();
        rows.sort_unstable();
        rows.iter().enumerate().all(|(i, &r)| i == r)
    }
}

/// The DT transformation of an acyclic quiver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DtTransform {
    b: ExchangeMatrix,
    sequence: Vec<usize>,
}

impl DtTransform {
    pub fn new(b: &ExchangeMatrix) -> Result<Self> {
        Ok(DtTransform { b: b.clone(), sequence: dt_sequence(b)? })
    }

    pub fn quiver(&self) -> &ExchangeMatrix {
        &self.b
    }

    pub fn sequence(&self) -> &[usize] {
        &self.sequence
    }

    pub fn apply(&self, s: &Seed) -> Result<Seed> {
        if s.b != self.b {
            return Err(Error::QuiverMismatch);
        }
        s.mutate_path(&self.sequence)
    }

    /// The reversed sequence; each mutation is an involution.
    pub fn apply_inverse(&self, s: &Seed) -> Result<Seed> {
        if s.b != self.b {
            return Err(Error::QuiverMismatch);
        }
        let rev: Vec<usize> = self.sequence.iter().rev().copied().collect();
        s.mutate_path(&rev)
    }

    /// DT on a frieze point only.
    pub fn apply_point(&self, x: &[BigRational]) -> Vec<BigRational> {
        let mut b = self.b.clone();
        let mut x = x.to_vec();
        for &k in &self.sequence {
            x = exchange(&b, &x, k);
            b.mutate_in_place(k).expect("acyclic simply-laced mutation stays small");
        }
        x
    }
}

/// Per-iteration growth of a frieze orbit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Growth {
    pub numerator_bits: u64,
    pub denominator_bits: u64,
}

/// The orbit of `(1, ..., 1)` under DT.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitReport {
    /// `points[t]` is `DT^t(1, ..., 1)`.
    pub points: Vec<Vec<BigRational>>,
    /// Minimal period, if the orbit closed within the iteration bound.
    pub period: Option<usize>,
    /// `growth[t]` describes `points[t]`.
    pub growth: Vec<Growth>,
    /// False if some coordinate failed to be a positive rational.
    pub positive: bool,
}

impl OrbitReport {
    pub fn iterations(&self) -> usize {
        self.points.len() - 1
    }

    /// True if the numerator bit length strictly increases over the last `window` iterations.
    pub fn strictly_growing_tail(&self, window: usize) -> bool {
        if self.growth.len() < window + 1 {
            return false;
        }
        let tail = &self.growth[self.growth.len() - window - 1..];
        tail.windows(2).all(|w| w[1].numerator_bits > w[0].numerator_bits)
    }
}

/// Iterates DT from the unit frieze point for at most `max_iter` steps.
pub fn dt_orbit(b: &ExchangeMatrix, max_iter: usize) -> Result<OrbitReport> {
    let dt = DtTransform::new(b)?;
    let start: Vec<BigRational> = Seed::unit(b).x;
    let mut index: BTreeMap<Vec<BigRational>, usize> = BTreeMap::new();
    index.insert(start.clone(), 0);
    let g = |x: &[BigRational]| {
        let (n, d) = bit_lengths(x);
        Growth { numerator_bits: n, denominator_bits: d }
    };
    let mut report =
        OrbitReport { growth: alloc::vec![g(&start)], points: alloc::vec![start], period: None, positive: true };
    for t in 1..=max_iter {
        let next = dt.apply_point(report.points.last().expect("nonempty"));
        report.positive &= is_positive(&next);
        report.growth.push(g(&next));
        if let Some(&i) = index.get(&next) {
            report.points.push(next);
            report.period = Some(t - i);
            break;
        }
        index.insert(next.clone(), t);
        report.points.push(next);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use num_traits::One;

    fn path(n: usize) -> ExchangeMatrix {
        let arrows: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        ExchangeMatrix::from_arrows(n, &arrows).unwrap()
    }

    #[test]
    fn test_sequences() {
        assert_eq!(dt_sequence(&path(2)).unwrap(), vec![0, 1]);
        assert_eq!(dt_sequence(&ExchangeMatrix::zero(0)).unwrap(), Vec::<usize>::new());
        let cyc = ExchangeMatrix::from_arrows(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(dt_sequence(&cyc), Err(Error::Cyclic));
    }

    #[test]
    fn test_green() {
        assert!(verify_maximal_green(&path(2), &[0, 1]));
        assert!(!verify_maximal_green(&path(2), &[1, 0]));
        assert!(verify_maximal_green(&ExchangeMatrix::zero(0), &[]));
        assert!(!verify_maximal_green(&path(2), &[0]));
    }

    #[test]
    fn test_a1_period() {
        let r = dt_orbit(&ExchangeMatrix::zero(1), 10).unwrap();
        assert_eq!(r.period, Some(2));
        assert_eq!(r.points[1][0], BigRational::from_integer(2.into()));
        assert_eq!(r.points[2][0], BigRational::one());
    }

    #[test]
    fn test_roundtrip_and_mismatch() {
        let b = path(3);
        let dt = DtTransform::new(&b).unwrap();
        let s = Seed::unit(&b);
        let t = dt.apply(&s).unwrap();
        assert_eq!(t.b, b);
        assert_eq!(dt.apply_inverse(&t).unwrap(), s);
        let other = Seed::unit(&path(3).negated());
        assert_eq!(dt.apply(&other), Err(Error::QuiverMismatch));
        let e = DtTransform::new(&ExchangeMatrix::zero(0)).unwrap();
        assert_eq!(e.apply(&Seed::unit(&ExchangeMatrix::zero(0))).unwrap(), Seed::unit(&ExchangeMatrix::zero(0)));
    }
}
