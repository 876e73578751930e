use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// A generator index. Generator `s_i` is stored as `i` (1-based).
pub type Letter = u16;

/// Which end of the strand range a destabilization removes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StrandEnd {
    /// Delete a lone `s_1` and shift the remaining indices down.
    Bottom,
    /// Delete a lone `s_{n-1}`.
    Top,
}

/// A positive braid word on `n` strands.
///
/// Letters are 1-based generator indices in `1..n`. A 1-strand word is allowed
/// (it has no letters); it is the trivial braid whose closure is an unknot.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord {
    n: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<Letter>) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoStrands);
        }
        for &l in &letters {
            if l == 0 || l as usize >= n {
                return Err(Error::IndexOutOfRange { index: l as usize, n });
            }
        }
        Ok(BraidWord { n, letters })
    }

    /// Builds a word from `usize` letters.
    pub fn from_indices(n: usize, letters: &[usize]) -> Result<Self> {
        let mut out = Vec::with_capacity(letters.len());
        for &l in letters {
            if l == 0 || l >= n || l > Letter::MAX as usize {
                return Err(Error::IndexOutOfRange { index: l, n });
            }
            out.push(l as Letter);
        }
        Ok(BraidWord { n, letters: out })
    }

    pub fn empty(n: usize) -> Self {
        assert!(n >= 1, "strand count must be positive");
        BraidWord { n, letters: Vec::new() }
    }

    /// Unchecked constructor for internal use where the invariant is known to hold.
    pub(crate) fn raw(n: usize, letters: Vec<Letter>) -> Self {
        debug_assert!(letters.iter().all(|&l| l >= 1 && (l as usize) < n));
        BraidWord { n, letters }
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of occurrences of `s_i`.
    pub fn count(&self, i: usize) -> usize {
        self.letters.iter().filter(|&&l| l as usize == i).count()
    }

    /// Rotates the letters left by `k` (negative `k` rotates right).
    pub fn cyclic_rotate(&self, k: isize) -> Self {
        let len = self.letters.len();
        if len == 0 {
            return self.clone();
        }
        let k = k.rem_euclid(len as isize) as usize;
        let mut letters = Vec::with_capacity(len);
        letters.extend_from_slice(&self.letters[k..]);
        letters.extend_from_slice(&self.letters[..k]);
        BraidWord { n: self.n, letters }
    }

    /// True if an R3 pattern `(i, i±1, i)` starts at `pos`.
    pub fn r3_applies(&self, pos: usize) -> bool {
        if pos + 2 >= self.letters.len() {
            return false;
        }
        let (a, b, c) = (self.letters[pos], self.letters[pos + 1], self.letters[pos + 2]);
        a == c && a.abs_diff(b) == 1
    }

    /// Replaces `s_i s_{i±1} s_i` at `pos` by `s_{i±1} s_i s_{i±1}`.
    pub fn r3_move(&self, pos: usize) -> Result<Self> {
        if !self.r3_applies(pos) {
            return Err(Error::R3Mismatch(pos));
        }
        let mut letters = self.letters.clone();
        let (a, b) = (letters[pos], letters[pos + 1]);
        letters[pos] = b;
        letters[pos + 1] = a;
        letters[pos + 2] = b;
        Ok(BraidWord { n: self.n, letters })
    }

    pub fn commute_applies(&self, pos: usize) -> bool {
        pos + 1 < self.letters.len() && self.letters[pos].abs_diff(self.letters[pos + 1]) >= 2
    }

    /// Swaps the letters at `pos` and `pos + 1`, which must be far commuting.
    pub fn commute_move(&self, pos: usize) -> Result<Self> {
        if pos + 1 >= self.letters.len() {
            return Err(Error::PositionOutOfRange { pos: pos + 1, len: self.letters.len() });
        }
        if !self.commute_applies(pos) {
            return Err(Error::NotCommuting(pos));
        }
        let mut letters = self.letters.clone();
        letters.swap(pos, pos + 1);
        Ok(BraidWord { n: self.n, letters })
    }

    /// Positive Markov destabilization, preferring a lone `s_{n-1}` over a lone `s_1`.
    pub fn markov_destabilize(&self) -> Option<Self> {
        self.destabilize(StrandEnd::Top).or_else(|| self.destabilize(StrandEnd::Bottom))
    }

    /// Destabilization at a fixed end; `None` unless that end's generator occurs exactly once.
    pub fn destabilize(&self, end: StrandEnd) -> Option<Self> {
        if self.n < 2 {
            return None;
        }
        let target = match end {
            StrandEnd::Top => (self.n - 1) as Letter,
            StrandEnd::Bottom => 1,
        };
        if self.letters.iter().filter(|&&l| l == target).count() != 1 {
            return None;
        }
        let shift = matches!(end, StrandEnd::Bottom) as Letter;
        let letters = self.letters.iter().filter(|&&l| l != target).map(|&l| l - shift).collect();
        Some(BraidWord { n: self.n - 1, letters })
    }

    /// Deletes the letters at the given positions (duplicates are ignored).
    pub fn delete_letters(&self, positions: &[usize]) -> Result<Self> {
        let mut drop = alloc::vec![false; self.letters.len()];
        for &p in positions {
            if p >= self.letters.len() {
                return Err(Error::PositionOutOfRange { pos: p, len: self.letters.len() });
            }
            drop[p] = true;
        }
        let letters = self.letters.iter().zip(&drop).filter(|(_, &d)| !d).map(|(&l, _)| l).collect();
        Ok(BraidWord { n: self.n, letters })
    }

    pub fn opposite(&self) -> Self {
        let mut letters = self.letters.clone();
        letters.reverse();
        BraidWord { n: self.n, letters }
    }

    /// Reflects the strand order: `s_i` becomes `s_{n-i}`.
    pub fn flip(&self) -> Self {
        let n = self.n as Letter;
        BraidWord { n: self.n, letters: self.letters.iter().map(|&l| n - l).collect() }
    }

    /// `self # other`: `other` shifted up by `n - 1` and appended, on `n + m - 1` strands.
    pub fn connect_sum(&self, other: &BraidWord) -> Self {
        self.glue(other, self.n - 1)
    }

    /// `self ⊔ other`: `other` shifted up by `n` and appended, on `n + m` strands.
    pub fn split_union(&self, other: &BraidWord) -> Self {
        self.glue(other, self.n)
    }

    fn glue(&self, other: &BraidWord, shift: usize) -> Self {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().map(|&l| l + shift as Letter));
        BraidWord { n: shift + other.n, letters }
    }

    /// Adds `k` unused strands on top.
    pub fn with_extra_strands(&self, k: usize) -> Self {
        BraidWord { n: self.n + k, letters: self.letters.clone() }
    }

    /// The subword of letters with index in `[i, j]`. With `reindex`, indices are
    /// shifted so that `s_i` becomes `s_1` and the word lives on `j - i + 2` strands.
    pub fn subword_range(&self, i: usize, j: usize, reindex: bool) -> Result<Self> {
        if i < 1 || i > j || j + 1 > self.n {
            return Err(Error::BadRange { i, j, n: self.n });
        }
        let keep = self.letters.iter().filter(|&&l| (i..=j).contains(&(l as usize)));
        if reindex {
            let letters = keep.map(|&l| l - (i as Letter - 1)).collect();
            Ok(BraidWord { n: j - i + 2, letters })
        } else {
            Ok(BraidWord { n: self.n, letters: keep.copied().collect() })
        }
    }

    /// True if `other` is a subsequence of `self` (same strand count), i.e. `self ≻ other`.
    pub fn dominates(&self, other: &BraidWord) -> bool {
        if self.n != other.n {
            return false;
        }
        let mut it = self.letters.iter();
        other.letters.iter().all(|l| it.any(|m| m == l))
    }

    /// Maximal runs of equal letters as `(letter, length)`.
    pub fn runs(&self) -> Vec<(Letter, usize)> {
        let mut out: Vec<(Letter, usize)> = Vec::new();
        for &l in &self.letters {
            match out.last_mut() {
                Some((m, c)) if *m == l => *c += 1,
                _ => out.push((l, 1)),
            }
        }
        out
    }

    /// Thurston-Bennequin number of the rainbow closure: `length - n`.
    pub fn tb(&self) -> i64 {
        self.letters.len() as i64 - self.n as i64
    }

    /// First Betti number of an admissible filling: `length - n + 1`.
    pub fn filling_b1(&self) -> i64 {
        self.tb() + 1
    }

    /// Genus of an admissible filling; only defined for knots.
    pub fn filling_genus(&self) -> Result<i64> {
        let c = self.components();
        if c != 1 {
            return Err(Error::NotAKnot(c));
        }
        Ok((self.tb() + 1) / 2)
    }

    /// Number of components of the closure.
    pub fn components(&self) -> usize {
        self.permutation().cycle_count()
    }

    pub fn permutation(&self) -> super::Permutation {
        super::Permutation::of_word(self)
    }

    /// Compact text form such as `s1^3 s2 s1^3 s2`; the empty word renders as an empty string.
    pub fn to_text(&self) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        for (idx, (l, c)) in self.runs().into_iter().enumerate() {
            if idx > 0 {
                s.push(' ');
            }
            let _ = write!(s, "s{}", l);
            if c > 1 {
                let _ = write!(s, "^{}", c);
            }
        }
        s
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BraidWord(n={}, {:?})", self.n, self.letters)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn w(n: usize, l: &[usize]) -> BraidWord {
        BraidWord::from_indices(n, l).unwrap()
    }

    #[test]
    fn test_rotate() {
        assert_eq!(w(3, &[1, 2, 2]).cyclic_rotate(1), w(3, &[2, 2, 1]));
        assert_eq!(w(3, &[2, 1, 1]).cyclic_rotate(-1), w(3, &[1, 2, 1]));
        let x = w(4, &[1, 3, 2, 2]);
        assert_eq!(x.cyclic_rotate(4), x);
        assert_eq!(BraidWord::empty(3).cyclic_rotate(5), BraidWord::empty(3));
    }

    #[test]
    fn test_r3() {
        assert_eq!(w(3, &[1, 2, 1]).r3_move(0).unwrap(), w(3, &[2, 1, 2]));
        assert_eq!(w(4, &[3, 2, 3]).r3_move(0).unwrap(), w(4, &[2, 3, 2]));
        // positions are 0-based: the pattern 1,2,1 sits at position 1, not 0
        assert!(w(3, &[1, 1, 2, 1, 2]).r3_move(0).is_err());
        assert_eq!(w(3, &[1, 1, 2, 1, 2]).r3_move(1).unwrap(), w(3, &[1, 2, 1, 2, 2]));
        assert!(w(3, &[1, 2]).r3_move(0).is_err());
    }

    #[test]
    fn test_commute() {
        assert_eq!(w(4, &[1, 3]).commute_move(0).unwrap(), w(4, &[3, 1]));
        assert_eq!(w(3, &[1, 2]).commute_move(0), Err(Error::NotCommuting(0)));
        assert_eq!(w(5, &[4, 1, 2]).commute_move(0).unwrap(), w(5, &[1, 4, 2]));
    }

    #[test]
    fn test_markov() {
        assert_eq!(w(3, &[1, 2, 2, 1, 2]).markov_destabilize(), None);
        assert_eq!(w(3, &[1, 1, 2, 1, 1]).markov_destabilize(), Some(w(2, &[1, 1, 1, 1])));
        assert_eq!(w(3, &[2, 2, 1, 2]).markov_destabilize(), Some(w(2, &[1, 1, 1])));
        assert_eq!(w(2, &[1]).markov_destabilize(), Some(BraidWord::empty(1)));
    }

    #[test]
    fn test_delete_and_opposite() {
        let x = w(3, &[1, 2, 1, 2, 2, 1, 2]);
        assert_eq!(x.delete_letters(&[]).unwrap(), x);
        assert_eq!(x.delete_letters(&[0, 1, 2, 3, 4, 5, 6]).unwrap(), BraidWord::empty(3));
        assert!(x.delete_letters(&[7]).is_err());
        assert!(x.dominates(&x.delete_letters(&[1, 4]).unwrap()));
        assert_eq!(w(3, &[1, 1, 2]).opposite(), w(3, &[2, 1, 1]));
        assert_eq!(x.opposite().opposite(), x);
    }

    #[test]
    fn test_ws4_deletion() {
        // w1 s2 w2 s2 w3 s2 w4 s2 with w1 = s1, w2 = s3, w3 = s1 s1, w4 = s3 s3
        let x = w(4, &[1, 2, 3, 2, 1, 1, 2, 3, 3, 2]);
        let y = x.delete_letters(&[2, 7, 8]).unwrap();
        assert_eq!(y, w(4, &[1, 2, 2, 1, 1, 2, 2]));
    }

    #[test]
    fn test_sums() {
        let s = w(2, &[1]);
        assert_eq!(s.connect_sum(&s), w(3, &[1, 2]));
        assert_eq!(s.split_union(&s), w(4, &[1, 3]));
        assert_eq!(s.connect_sum(&BraidWord::empty(2)), w(3, &[1]));
        let a2 = w(2, &[1, 1, 1]);
        assert_eq!(a2.connect_sum(&a2), w(3, &[1, 1, 1, 2, 2, 2]));
        assert_eq!(BraidWord::empty(2).split_union(&BraidWord::empty(2)), BraidWord::empty(4));
    }

    #[test]
    fn test_subword_range() {
        let b = w(6, &[1, 2, 3, 1, 1, 2, 5, 2, 3, 4]);
        assert_eq!(b.subword_range(2, 3, false).unwrap(), w(6, &[2, 3, 2, 2, 3]));
        assert_eq!(b.subword_range(2, 3, true).unwrap(), w(3, &[1, 2, 1, 1, 2]));
        assert_eq!(b.subword_range(1, 5, false).unwrap(), b);
        assert!(b.subword_range(3, 2, false).is_err());
        assert!(b.subword_range(1, 6, false).is_err());
    }

    #[test]
    fn test_closure_arithmetic() {
        let x = w(3, &[1, 2, 1, 1, 2, 2, 1, 1, 2, 2]);
        assert_eq!(x.tb(), 7);
        assert_eq!(x.components(), 1);
        assert_eq!(x.filling_genus(), Ok(4));
        assert_eq!(BraidWord::empty(2).tb(), -2);
        assert_eq!(BraidWord::empty(2).filling_genus(), Err(Error::NotAKnot(2)));
        assert_eq!(BraidWord::empty(4).components(), 4);
    }

    #[test]
    fn test_text() {
        assert_eq!(w(3, &[1, 1, 1, 2, 1, 1, 1, 2]).to_text(), "s1^3 s2 s1^3 s2");
        assert_eq!(BraidWord::empty(2).to_text(), "");
        assert_eq!(w(3, &[1, 2, 1]).runs(), vec![(1, 1), (2, 1), (1, 1)]);
    }
}
