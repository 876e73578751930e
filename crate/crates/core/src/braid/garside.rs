//! Left-greedy normal form in the positive braid monoid.
//!
//! A simple element is a permutation braid, stored as the strand labels read
//! off at each position after the braid has been applied.

use alloc::vec::Vec;

use super::{BraidWord, Letter, Permutation};
use crate::{Error, Result};

/// Left-greedy factorization of a positive braid into simple elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GreedyNormalForm {
    n: usize,
    factors: Vec<Vec<Letter>>,
}

fn identity(n: usize) -> Vec<Letter> {
    (0..n as Letter).collect()
}

fn is_identity(p: &[Letter]) -> bool {
    p.iter().enumerate().all(|(i, &x)| i == x as usize)
}

fn inverse(p: &[Letter]) -> Vec<Letter> {
    let mut q = alloc::vec![0; p.len()];
    for (pos, &label) in p.iter().enumerate() {
        q[label as usize] = pos as Letter;
    }
    q
}

/// Moves every left divisor `s_i` of `b` that can extend `a` into `a`.
/// Returns true if anything moved.
fn left_weight(a: &mut [Letter], b: &mut [Letter]) -> bool {
    let mut changed = false;
    loop {
        let q = inverse(b);
        let step = (0..a.len().saturating_sub(1)).find(|&i| q[i] > q[i + 1] && a[i] < a[i + 1]);
        match step {
            Some(i) => {
                a.swap(i, i + 1);
                let (x, y) = (q[i] as usize, q[i + 1] as usize);
                b.swap(x, y);
                changed = true;
            }
            None => return changed,
        }
    }
}

impl GreedyNormalForm {
    pub fn of_word(w: &BraidWord) -> Self {
        let n = w.strands();
        let mut factors: Vec<Vec<Letter>> = Vec::new();
        for &l in w.letters() {
            let mut s = identity(n);
            s.swap(l as usize - 1, l as usize);
            factors.push(s);
            let mut j = factors.len() - 1;
            while j > 0 {
                let (left, right) = factors.split_at_mut(j);
                if !left_weight(&mut left[j - 1], &mut right[0]) {
                    break;
                }
                j -= 1;
            }
            factors.retain(|f| !is_identity(f));
        }
        // The incremental sweep already yields a left-weighted sequence; a final
        // fixpoint pass is a cheap guard.
        loop {
            let mut changed = false;
            for j in 1..factors.len() {
                let (left, right) = factors.split_at_mut(j);
                changed |= left_weight(&mut left[j - 1], &mut right[0]);
            }
            factors.retain(|f| !is_identity(f));
            if !changed {
                break;
            }
        }
        GreedyNormalForm { n, factors }
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Factors as permutations (strand label at each final position, 1-based).
    pub fn factors(&self) -> Vec<Permutation> {
        self.factors
            .iter()
            .map(|f| {
                let images: Vec<usize> = inverse(f).iter().map(|&x| x as usize + 1).collect();
                Permutation::from_images(&images).expect("simple factor is a bijection")
            })
            .collect()
    }

    /// A positive word for the braid: each factor written as a reduced word.
    pub fn to_word(&self) -> BraidWord {
        let mut letters = Vec::new();
        for f in &self.factors {
            // bubble sort from the identity towards f, recording swaps
            let target = inverse(f);
            let mut cur = identity(self.n);
            loop {
                let i = (0..self.n - 1).find(|&i| target[cur[i] as usize] > target[cur[i + 1] as usize]);
                match i {
                    Some(i) => {
                        cur.swap(i, i + 1);
                        letters.push((i + 1) as Letter);
                    }
                    None => break,
                }
            }
        }
        BraidWord::raw(self.n, letters)
    }

    /// Canonical letter count.
    pub fn length(&self) -> usize {
        self.factors
            .iter()
            .map(|f| {
                let mut inv = 0;
                for i in 0..f.len() {
                    for j in i + 1..f.len() {
                        inv += (f[i] > f[j]) as usize;
                    }
                }
                inv
            })
            .sum()
    }
}

/// Equality in the positive braid monoid.
pub fn monoid_equal(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    if a.strands() != b.strands() {
        return Err(Error::StrandMismatch(a.strands(), b.strands()));
    }
    if a.len() != b.len() {
        return Ok(false);
    }
    Ok(GreedyNormalForm::of_word(a) == GreedyNormalForm::of_word(b))
}
