use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::quiver::ExchangeMatrix;
use crate::{Error, Result};

/// A seed: exchange matrix, positive rational frieze point and c-matrix.
///
/// Column `j` of `C` is the c-vector of vertex `j`. The c-matrix follows the
/// framed quiver with one frozen arrow `i -> i'` per vertex, so entry `(i, j)`
/// counts arrows from `j` to the frozen copy of initial vertex `i`. With this
/// convention the sources-first order of an acyclic quiver is maximal green.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Seed {
    pub b: ExchangeMatrix,
    pub x: Vec<BigRational>,
    /// Row-major `size x size`.
    pub c: Vec<i64>,
}

impl Seed {
    /// `x = (1, ..., 1)`, `C = I`.
    pub fn unit(b: &ExchangeMatrix) -> Self {
        let n = b.size();
        let mut c = alloc::vec![0; n * n];
        for i in 0..n {
            c[i * n + i] = 1;
        }
        Seed { b: b.clone(), x: alloc::vec![BigRational::one(); n], c }
    }

    pub fn size(&self) -> usize {
        self.b.size()
    }

    #[inline]
    pub fn c_entry(&self, i: usize, j: usize) -> i64 {
        self.c[i * self.size() + j]
    }

    /// The c-vector of vertex `j`.
    pub fn c_vector(&self, j: usize) -> Vec<i64> {
        (0..self.size()).map(|i| self.c_entry(i, j)).collect()
    }

    /// +1 if the c-vector is nonnegative and nonzero, -1 if nonpositive and nonzero.
    pub fn c_sign(&self, j: usize) -> i32 {
        let v = self.c_vector(j);
        if v.iter().all(|&x| x >= 0) && v.iter().any(|&x| x > 0) {
            1
        } else if v.iter().all(|&x| x <= 0) && v.iter().any(|&x| x < 0) {
            -1
        } else {
            0
        }
    }

    pub fn is_green(&self, j: usize) -> bool {
        self.c_sign(j) == 1
    }

    /// Mutation at `k`; errors if a c-vector loses sign coherence.
    pub fn mutate(&self, k: usize) -> Result<Seed> {
        let n = self.size();
        if k >= n {
            return Err(Error::VertexOutOfRange { vertex: k, size: n });
        }
        let x = exchange(&self.b, &self.x, k);
        let mut c = self.c.clone();
        for i in 0..n {
            let cik = self.c_entry(i, k);
            c[i * n + k] = -cik;
            for j in 0..n {
                if j == k {
                    continue;
                }
                let bjk = self.b.get(j, k);
                let prod = bjk.checked_mul(cik).ok_or(Error::Overflow)?;
                if prod > 0 {
                    let delta = if bjk > 0 { prod } else { -prod };
                    c[i * n + j] = c[i * n + j].checked_add(delta).ok_or(Error::Overflow)?;
                }
            }
        }
        let b = self.b.mutate(k)?;
        let out = Seed { b, x, c };
        if let Some(j) = (0..n).find(|&j| out.c_sign(j) == 0) {
            return Err(Error::SignCoherence(j));
        }
        Ok(out)
    }

    pub fn mutate_path(&self, path: &[usize]) -> Result<Seed> {
        let mut s = self.clone();
        for &k in path {
            s = s.mutate(k)?;
        }
        Ok(s)
    }
}

fn pow(x: &BigRational, e: i64) -> BigRational {
    let mut out = BigRational::one();
    for _ in 0..e {
        out *= x;
    }
    out
}

/// The frieze exchange at `k`: `x'_k = (prod_{b_ik>0} x_i^{b_ik} + prod_{b_ik<0} x_i^{-b_ik}) / x_k`.
pub fn exchange(b: &ExchangeMatrix, x: &[BigRational], k: usize) -> Vec<BigRational> {
    let mut plus = BigRational::one();
    let mut minus = BigRational::one();
    for i in 0..b.size() {
        let e = b.get(i, k);
        if e > 0 {
            plus *= pow(&x[i], e);
        } else if e < 0 {
            minus *= pow(&x[i], -e);
        }
    }
    let mut out = x.to_vec();
    out[k] = (plus + minus) / &x[k];
    out
}

/// True if every coordinate is a strictly positive rational.
pub fn is_positive(x: &[BigRational]) -> bool {
    x.iter().all(|v| v.is_positive() && !v.denom().is_zero())
}

/// Bit length of the largest numerator and denominator.
pub fn bit_lengths(x: &[BigRational]) -> (u64, u64) {
    let bits = |v: &BigInt| v.bits();
    let num = x.iter().map(|v| bits(v.numer())).max().unwrap_or(0);
    let den = x.iter().map(|v| bits(v.denom())).max().unwrap_or(0);
    (num, den)
}
