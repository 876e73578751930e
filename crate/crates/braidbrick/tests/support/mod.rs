//! Independent reference computations for the integration tests. Everything
//! here works from plain arrow lists and nested vectors and shares no code
//! with the library's cluster module.
#![allow(dead_code, clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Mat = Vec<Vec<i64>>;

pub fn from_arrows(n: usize, arrows: &[(usize, usize)]) -> Mat {
    let mut b = vec![vec![0; n]; n];
    for &(i, j) in arrows {
        b[i][j] += 1;
        b[j][i] -= 1;
    }
    b
}

/// Matrix mutation on a possibly rectangular matrix (rows beyond the square
/// part are frozen).
pub fn mutate(b: &Mat, k: usize) -> Mat {
    let mut out = b.clone();
    for i in 0..b.len() {
        for j in 0..b[0].len() {
            out[i][j] = if i == k || j == k {
                -b[i][j]
            } else {
                let (x, y) = (b[i][k], b[k][j]);
                b[i][j] + (x.abs() * y + x * y.abs()) / 2
            };
        }
    }
    out
}

/// Sources first, smallest index breaking ties.
pub fn sources_first(b: &Mat) -> Option<Vec<usize>> {
    let n = b.len();
    let mut indeg: Vec<usize> = (0..n).map(|j| (0..n).filter(|&i| b[i][j] > 0).count()).collect();
    let mut done = vec![false; n];
    let mut order = Vec::new();
    while order.len() < n {
        let v = (0..n).find(|&v| !done[v] && indeg[v] == 0)?;
        done[v] = true;
        order.push(v);
        for j in 0..n {
            if b[v][j] > 0 {
                indeg[j] -= 1;
            }
        }
    }
    Some(order)
}

fn pow(x: &BigRational, e: i64) -> BigRational {
    (0..e).fold(BigRational::one(), |acc, _| acc * x)
}

/// Cluster exchange at `k`.
pub fn exchange(b: &Mat, x: &[BigRational], k: usize) -> Vec<BigRational> {
    let mut plus = BigRational::one();
    let mut minus = BigRational::one();
    for i in 0..x.len() {
        if b[i][k] > 0 {
            plus *= pow(&x[i], b[i][k]);
        } else if b[i][k] < 0 {
            minus *= pow(&x[i], -b[i][k]);
        }
    }
    let mut y = x.to_vec();
    y[k] = (plus + minus) / &x[k];
    y
}

/// One DT step on a frieze point: exchange at every vertex, sources first.
pub fn dt_point(b: &Mat, order: &[usize], x: &[BigRational]) -> Vec<BigRational> {
    let mut b = b.clone();
    let mut x = x.to_vec();
    for &k in order {
        x = exchange(&b, &x, k);
        b = mutate(&b, k);
    }
    x
}

/// Minimal period of the orbit of (1, ..., 1), searching `max_iter` steps.
pub fn frieze_period(b: &Mat, max_iter: usize) -> Option<usize> {
    let order = sources_first(b)?;
    let start = vec![BigRational::one(); b.len()];
    let mut x = start.clone();
    for t in 1..=max_iter {
        x = dt_point(b, &order, &x);
        if x == start {
            return Some(t);
        }
    }
    None
}

/// Numerator bit lengths (of the largest numerator) along the orbit.
pub fn frieze_growth(b: &Mat, iters: usize) -> Vec<u64> {
    let order = sources_first(b).expect("acyclic");
    let mut x = vec![BigRational::one(); b.len()];
    let bits = |x: &[BigRational]| x.iter().map(|v| v.numer().bits()).max().unwrap_or(0);
    let mut out = vec![bits(&x)];
    for _ in 0..iters {
        x = dt_point(b, &order, &x);
        assert!(x.iter().all(|v| *v > BigRational::zero()));
        out.push(bits(&x));
    }
    out
}

/// Framed quiver `[B; I]` with principal coefficients.
pub fn framed(b: &Mat) -> Mat {
    let n = b.len();
    let mut m = b.clone();
    for i in 0..n {
        let mut row = vec![0; n];
        row[i] = 1;
        m.push(row);
    }
    m
}

/// (B, C) after mutating the framed quiver along `seq`.
pub fn mutate_framed(m: &Mat, seq: &[usize]) -> Mat {
    seq.iter().fold(m.clone(), |acc, &k| mutate(&acc, k))
}

/// Equality of framed quivers up to relabeling the mutable vertices.
pub fn framed_equivalent(a: &Mat, b: &Mat) -> bool {
    let n = a[0].len();
    let col = |m: &Mat, j: usize| (n..2 * n).map(|i| m[i][j]).collect::<Vec<_>>();
    let mut perm = vec![0; n];
    let mut used = vec![false; n];
    for j in 0..n {
        match (0..n).find(|&k| !used[k] && col(b, k) == col(a, j)) {
            Some(k) => {
                perm[j] = k;
                used[k] = true;
            }
            None => return false,
        }
    }
    (0..n).all(|i| (0..n).all(|j| a[i][j] == b[perm[i]][perm[j]]))
}

/// First `(i, j)` with equivalent seeds among `DT^{-2m}`, `m = 0..=m_max`.
pub fn filling_repeat(b: &Mat, m_max: usize) -> Option<(usize, usize)> {
    let mut rev = sources_first(b).expect("acyclic");
    rev.reverse();
    let step: Vec<usize> = rev.iter().chain(rev.iter()).copied().collect();
    let mut seeds = vec![framed(b)];
    for _ in 0..m_max {
        let next = mutate_framed(seeds.last().unwrap(), &step);
        seeds.push(next);
    }
    for j in 0..seeds.len() {
        for i in 0..j {
            if framed_equivalent(&seeds[i], &seeds[j]) {
                return Some((i, j));
            }
        }
    }
    None
}

/// Closure components: cycles of the underlying permutation.
pub fn closure_components(n: usize, letters: &[usize]) -> usize {
    let mut p: Vec<usize> = (0..n).collect();
    for &l in letters {
        p.swap(l - 1, l);
    }
    let mut seen = vec![false; n];
    let mut cycles = 0;
    for s in 0..n {
        if !seen[s] {
            cycles += 1;
            let mut v = s;
            while !seen[v] {
                seen[v] = true;
                v = p[v];
            }
        }
    }
    cycles
}

/// Every word of length at most `max_len` on `n` strands.
pub fn all_words(n: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut layer: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for g in 1..n {
                let mut v = w.clone();
                v.push(g);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

pub fn big(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}
