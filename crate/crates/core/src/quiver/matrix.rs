use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Skew-symmetric exchange matrix; `b[i][j] > 0` means `b[i][j]` arrows `i -> j`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExchangeMatrix {
    size: usize,
    b: Vec<i64>,
}

impl ExchangeMatrix {
    pub fn zero(size: usize) -> Self {
        ExchangeMatrix { size, b: alloc::vec![0; size * size] }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let size = rows.len();
        if rows.iter().any(|r| r.len() != size) {
            return Err(Error::BadShape);
        }
        let b: Vec<i64> = rows.iter().flatten().copied().collect();
        let m = ExchangeMatrix { size, b };
        for i in 0..size {
            for j in 0..size {
                if m.get(i, j) != m.get(j, i).checked_neg().ok_or(Error::Overflow)? {
                    return Err(Error::NotSkewSymmetric(i, j));
                }
            }
        }
        Ok(m)
    }

    /// One arrow per listed pair; repeated pairs add up.
    pub fn from_arrows(size: usize, arrows: &[(usize, usize)]) -> Result<Self> {
        let mut m = Self::zero(size);
        for &(i, j) in arrows {
            for v in [i, j] {
                if v >= size {
                    return Err(Error::VertexOutOfRange { vertex: v, size });
                }
            }
            if i == j {
                return Err(Error::NotSkewSymmetric(i, j));
            }
            m.b[i * size + j] += 1;
            m.b[j * size + i] -= 1;
        }
        Ok(m)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.b[i * self.size + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.b.chunks(self.size.max(1)).take(self.size).map(|r| r.to_vec()).collect()
    }

    /// Arrows `(i, j, multiplicity)` with `b[i][j] > 0`.
    pub fn arrows(&self) -> Vec<(usize, usize, i64)> {
        let mut out = Vec::new();
        for i in 0..self.size {
            for j in 0..self.size {
                let v = self.get(i, j);
                if v > 0 {
                    out.push((i, j, v));
                }
            }
        }
        out
    }

    pub fn max_abs_entry(&self) -> i64 {
        self.b.iter().map(|v| v.abs()).max().unwrap_or(0)
    }

    /// Mutation at `k`.
    pub fn mutate(&self, k: usize) -> Result<Self> {
        let mut m = self.clone();
        m.mutate_in_place(k)?;
        Ok(m)
    }

    pub fn mutate_in_place(&mut self, k: usize) -> Result<()> {
        let n = self.size;
        if k >= n {
            return Err(Error::VertexOutOfRange { vertex: k, size: n });
        }
        let old = self.b.clone();
        let g = |i: usize, j: usize| old[i * n + j];
        for i in 0..n {
            for j in 0..n {
                if i == k || j == k {
                    self.b[i * n + j] = -g(i, j);
                } else {
                    let bik = g(i, k);
                    let bkj = g(k, j);
                    let prod = bik.checked_mul(bkj).ok_or(Error::Overflow)?;
                    if prod > 0 {
                        let delta = if bik > 0 { prod } else { -prod };
                        self.b[i * n + j] = g(i, j).checked_add(delta).ok_or(Error::Overflow)?;
                    }
                }
            }
        }
        Ok(())
    }

    /// Applies mutations in order.
    pub fn mutate_path(&self, path: &[usize]) -> Result<Self> {
        let mut m = self.clone();
        for &k in path {
            m.mutate_in_place(k)?;
        }
        Ok(m)
    }

    /// `P B Pᵀ` where vertex `i` becomes vertex `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let n = self.size;
        let mut b = alloc::vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                b[perm[i] * n + perm[j]] = self.get(i, j);
            }
        }
        ExchangeMatrix { size: n, b }
    }

    /// Principal submatrix on `vertices` (in the given order).
    pub fn restrict(&self, vertices: &[usize]) -> Self {
        let n = vertices.len();
        let mut b = alloc::vec![0; n * n];
        for (a, &i) in vertices.iter().enumerate() {
            for (c, &j) in vertices.iter().enumerate() {
                b[a * n + c] = self.get(i, j);
            }
        }
        ExchangeMatrix { size: n, b }
    }

    /// The opposite quiver.
    pub fn negated(&self) -> Self {
        ExchangeMatrix { size: self.size, b: self.b.iter().map(|v| -v).collect() }
    }

    /// Connected components of the underlying graph, each sorted, ordered by
    /// smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.size;
        let mut comp = alloc::vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = alloc::vec![s];
            comp[s] = id;
            let mut members = Vec::new();
            while let Some(v) = stack.pop() {
                members.push(v);
                for u in 0..n {
                    if self.get(v, u) != 0 && comp[u] == usize::MAX {
                        comp[u] = id;
                        stack.push(u);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Connected (the empty quiver counts as connected).
    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    /// Sources first; among available vertices the smallest index goes first.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.size;
        let mut indeg: Vec<usize> = (0..n).map(|j| (0..n).filter(|&i| self.get(i, j) > 0).count()).collect();
        let mut ready: BTreeSet<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = ready.pop_first() {
            order.push(v);
            for u in 0..n {
                if self.get(v, u) > 0 {
                    indeg[u] -= 1;
                    if indeg[u] == 0 {
                        ready.insert(u);
                    }
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    /// True if some pair has `|b_ij b_ji| >= 4`, i.e. a double arrow or worse.
    pub fn find_heavy_pair(&self) -> Option<(usize, usize)> {
        for i in 0..self.size {
            for j in i + 1..self.size {
                if self.get(i, j).abs() >= 2 {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

impl fmt::Debug for ExchangeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExchangeMatrix{:?}", self.rows())
    }
}

impl fmt::Display for ExchangeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in self.rows() {
            for (c, v) in r.iter().enumerate() {
                if c > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{:>3}", v)?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn test_a2_source_flip() {
        let a2 = ExchangeMatrix::from_arrows(2, &[(0, 1)]).unwrap();
        assert_eq!(a2.mutate(0).unwrap(), ExchangeMatrix::from_arrows(2, &[(1, 0)]).unwrap());
        assert!(a2.mutate(2).is_err());
    }

    #[test]
    fn test_markov_fixed() {
        let m = ExchangeMatrix::from_rows(&[vec![0, 2, -2], vec![-2, 0, 2], vec![2, -2, 0]]).unwrap();
        for k in 0..3 {
            let x = m.mutate(k).unwrap();
            assert_eq!(x.max_abs_entry(), 2);
            assert_eq!(x.arrows().len(), 3);
            assert!(!x.is_acyclic());
        }
    }

    #[test]
    fn test_topological() {
        let cyc = ExchangeMatrix::from_arrows(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(cyc.topological_order(), None);
        assert_eq!(ExchangeMatrix::zero(0).topological_order(), Some(vec![]));
        let q = ExchangeMatrix::from_arrows(4, &[(3, 0), (2, 1), (0, 1)]).unwrap();
        assert_eq!(q.topological_order(), Some(vec![2, 3, 0, 1]));
    }

    #[test]
    fn test_from_rows_checks() {
        assert_eq!(ExchangeMatrix::from_rows(&[vec![0, 1], vec![1, 0]]), Err(Error::NotSkewSymmetric(0, 1)));
        assert_eq!(ExchangeMatrix::from_rows(&[vec![0, 1]]), Err(Error::BadShape));
    }

    #[test]
    fn test_overflow() {
        let big = i64::MAX / 2;
        let m = ExchangeMatrix::from_rows(&[vec![0, big, 0], vec![-big, 0, big], vec![0, -big, 0]]).unwrap();
        assert_eq!(m.mutate(1), Err(Error::Overflow));
    }

    #[test]
    fn test_components() {
        let q = ExchangeMatrix::from_arrows(5, &[(0, 3), (4, 1)]).unwrap();
        assert_eq!(q.connected_components(), vec![vec![0, 3], vec![1, 4], vec![2]]);
        assert!(!q.is_connected());
    }
}
