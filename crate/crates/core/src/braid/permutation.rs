use alloc::vec::Vec;

use super::BraidWord;
use crate::{Error, Result};

/// A permutation of `{1..n}`, stored 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// Builds a permutation from 1-based images.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &i in images {
            if i == 0 || i > n || seen[i - 1] {
                return Err(Error::Precondition(alloc::format!("not a bijection: {:?}", images)));
            }
            seen[i - 1] = true;
            out.push(i - 1);
        }
        Ok(Permutation { images: out })
    }

    /// Underlying permutation of a braid word: strand starting at position `p`
    /// is sent to the position where it ends, generators applied left to right.
    pub fn of_word(w: &BraidWord) -> Self {
        let n = w.strands();
        let mut at: Vec<usize> = (0..n).collect();
        for &l in w.letters() {
            at.swap(l as usize - 1, l as usize);
        }
        let mut images = alloc::vec![0; n];
        for (p, &s) in at.iter().enumerate() {
            images[s] = p;
        }
        Permutation { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// Image of `i` (1-based).
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    /// 1-based images.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn inverse(&self) -> Self {
        let mut images = alloc::vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    /// `self` then `other`.
    pub fn then(&self, other: &Permutation) -> Self {
        Permutation { images: self.images.iter().map(|&j| other.images[j]).collect() }
    }

    pub fn cycle_count(&self) -> usize {
        let mut seen = alloc::vec![false; self.images.len()];
        let mut cycles = 0;
        for s in 0..self.images.len() {
            if seen[s] {
                continue;
            }
            cycles += 1;
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
            }
        }
        cycles
    }

    /// +1 for even permutations, -1 for odd ones.
    pub fn sign(&self) -> i32 {
        if (self.images.len() - self.cycle_count()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}
