use alloc::format;
use alloc::vec::Vec;

use crate::braid::BraidWord;
use crate::quiver::{DynkinType, Family};
use crate::{Error, Result};

/// A standard ADE link: its type and table word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardLink {
    pub ty: DynkinType,
    pub word: BraidWord,
}

impl StandardLink {
    pub fn new(ty: DynkinType) -> Result<Self> {
        Ok(StandardLink { ty, word: standard_link_word(ty)? })
    }
}

/// The table word: `A_r = s1^(r+1)`, `D_r = s1^(r-2) s2 s1^2 s2`,
/// `E_r = s1^(r-3) s2 s1^3 s2` for `r` in 6..=8.
pub fn standard_link_word(t: DynkinType) -> Result<BraidWord> {
    let de = |a: usize, b: usize| {
        let mut v = alloc::vec![1usize; a];
        v.push(2);
        v.extend(core::iter::repeat_n(1, b));
        v.push(2);
        BraidWord::from_indices(3, &v)
    };
    match (t.family, t.rank) {
        (Family::A, r) if r >= 1 => BraidWord::from_indices(2, &alloc::vec![1; r + 1]),
        (Family::D, r) if r >= 4 => de(r - 2, 2),
        (Family::E, r) if (6..=8).contains(&r) => de(r - 3, 3),
        _ => Err(Error::Precondition(format!("{} has no standard link", t.name()))),
    }
}

/// The type of `w` if it is literally a table word.
pub fn standard_type(w: &BraidWord) -> Option<DynkinType> {
    let l = w.letters();
    match w.strands() {
        2 if l.len() >= 2 => Some(DynkinType::a(l.len() - 1)),
        3 => {
            let runs = w.runs();
            match runs.as_slice() {
                [(1, a), (2, 1), (1, 2), (2, 1)] if *a >= 2 => Some(DynkinType::d(a + 2)),
                [(1, a), (2, 1), (1, 3), (2, 1)] if (3..=5).contains(a) => Some(DynkinType::e(a + 3)),
                _ => None,
            }
        }
        _ => None,
    }
}

/// One row of the component-count table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentRow {
    pub ty: DynkinType,
    pub components: usize,
    pub expected: usize,
}

impl ComponentRow {
    pub fn ok(&self) -> bool {
        self.components == self.expected
    }
}

/// Knots are `A_even`, `E6`, `E8`; two components for `A_odd`, `D_odd`, `E7`;
/// three for `D_even`.
pub fn expected_components(t: DynkinType) -> Option<usize> {
    match (t.family, t.rank) {
        (Family::A, r) if r >= 1 => Some(if r % 2 == 0 { 1 } else { 2 }),
        (Family::D, r) if r >= 4 => Some(if r % 2 == 0 { 3 } else { 2 }),
        (Family::E, 6) | (Family::E, 8) => Some(1),
        (Family::E, 7) => Some(2),
        _ => None,
    }
}

/// Components of every standard link, A and D up to rank `max_rank`, plus E6..E8.
pub fn component_table_check(max_rank: usize) -> Vec<ComponentRow> {
    let mut types: Vec<DynkinType> = (1..=max_rank).map(DynkinType::a).collect();
    types.extend((4..=max_rank).map(DynkinType::d));
    types.extend((6..=8).map(DynkinType::e));
    types
        .into_iter()
        .map(|ty| ComponentRow {
            ty,
            components: standard_link_word(ty).expect("table type").components(),
            expected: expected_components(ty).expect("table type"),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_braid;
    use crate::brick::extract_quiver;
    use crate::quiver::recognize;

    #[test]
    fn test_table_words() {
        assert_eq!(standard_link_word(DynkinType::a(3)).unwrap(), parse_braid("s1^4", Some(2)).unwrap());
        assert_eq!(standard_link_word(DynkinType::d(4)).unwrap(), parse_braid("s1^2 s2 s1^2 s2", Some(3)).unwrap());
        assert_eq!(standard_link_word(DynkinType::e(8)).unwrap(), parse_braid("s1^5 s2 s1^3 s2", Some(3)).unwrap());
        assert!(standard_link_word(DynkinType::e(9)).is_err());
        assert!(standard_link_word(DynkinType::d(3)).is_err());
        assert!(standard_link_word(DynkinType::a(0)).is_err());
    }

    #[test]
    fn test_table_words_have_their_type() {
        let mut types: Vec<DynkinType> = (1..=12).map(DynkinType::a).collect();
        types.extend((4..=12).map(DynkinType::d));
        types.extend((6..=8).map(DynkinType::e));
        for t in types {
            let w = standard_link_word(t).unwrap();
            assert_eq!(standard_type(&w), Some(t));
            assert_eq!(recognize(&extract_quiver(&w).to_matrix()), alloc::vec![t]);
        }
        assert_eq!(standard_type(&parse_braid("s1^6 s2 s1^3 s2", None).unwrap()), None);
        assert_eq!(standard_type(&parse_braid("s1", Some(2)).unwrap()), None);
    }

    #[test]
    fn test_component_table() {
        let rows = component_table_check(12);
        assert!(rows.iter().all(|r| r.ok()));
        let find = |t: DynkinType| rows.iter().find(|r| r.ty == t).unwrap().components;
        assert_eq!(find(DynkinType::e(7)), 2);
        assert_eq!(find(DynkinType::d(6)), 3);
        assert_eq!(find(DynkinType::a(4)), 1);
    }
}
