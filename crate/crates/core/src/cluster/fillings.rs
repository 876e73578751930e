use alloc::vec::Vec;

use super::{DtTransform, Seed};
use crate::braid::BraidWord;
use crate::brick::extract_quiver;
use crate::{Error, Result};

/// Seeds of the fillings `L_0, ..., L_{m_max}` and their pairwise distinctness.
#[derive(Clone, Debug)]
pub struct FillingReport {
    /// `seeds[m]` is `DT^{-2m}` applied to the unit seed.
    pub seeds: Vec<Seed>,
    /// `distinct[i][j]` is true iff seeds `i` and `j` differ up to relabeling.
    pub distinct: Vec<Vec<bool>>,
    /// Smallest `(i, j)`, `i < j`, with equivalent seeds.
    pub first_repeat: Option<(usize, usize)>,
}

impl FillingReport {
    pub fn all_distinct(&self) -> bool {
        self.first_repeat.is_none()
    }
}

/// True iff `(B, C)` of the two seeds agree after a simultaneous relabeling of
/// the mutable vertices (columns of `C`, rows and columns of `B`).
pub fn seeds_equivalent(a: &Seed, b: &Seed) -> bool {
    let n = a.size();
    if n != b.size() {
        return false;
    }
    // c-vectors of a seed are pairwise distinct, so they pin down the relabeling
    let mut perm = alloc::vec![usize::MAX; n];
    let mut used = alloc::vec![false; n];
    for j in 0..n {
        let cj = a.c_vector(j);
        match (0..n).find(|&k| !used[k] && b.c_vector(k) == cj) {
            Some(k) => {
                perm[j] = k;
                used[k] = true;
            }
            None => return false,
        }
    }
    a.b.permute(&perm) == b.b
}

/// Filling seeds by repeated `DT^{-2}`.
pub fn filling_seeds(w: &BraidWord, m_max: usize) -> Result<FillingReport> {
    let b = extract_quiver(w).to_matrix();
    if !b.is_acyclic() {
        return Err(Error::Cyclic);
    }
    let dt = DtTransform::new(&b)?;
    let mut seeds = alloc::vec![Seed::unit(&b)];
    for _ in 0..m_max {
        let last = seeds.last().expect("nonempty");
        let next = dt.apply_inverse(&dt.apply_inverse(last)?)?;
        seeds.push(next);
    }
    let k = seeds.len();
    let mut distinct = alloc::vec![alloc::vec![false; k]; k];
    let mut first_repeat = None;
    for i in 0..k {
        for j in 0..k {
            distinct[i][j] = i != j && !seeds_equivalent(&seeds[i], &seeds[j]);
            if i < j && !distinct[i][j] && first_repeat.is_none() {
                first_repeat = Some((i, j));
            }
        }
    }
    Ok(FillingReport { seeds, distinct, first_repeat })
}
