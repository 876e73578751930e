//! Finite/infinite classification of positive braids, with decompositions
//! into standard ADE links and replayable traces.

mod pipeline;
mod reduce;
mod standard;
mod trace;
mod witness;

pub use pipeline::{
    classify, classify_with, decompose, empty_level_unknots, split_decompose, ClassifyOptions, ClassifyVerdict,
    LinkDecomposition, SplitDecomposition,
};
pub use reduce::{normalize_3strand, reduce_strands, DEFAULT_SEARCH};
pub use standard::{
    component_table_check, expected_components, standard_link_word, standard_type, ComponentRow, StandardLink,
};
pub use trace::{Arena, Join, TraceOp, TraceStep};
pub use witness::{find_witness, Witness};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use crate::brick::extract_quiver;
    use crate::quiver::{is_finite_type, DynkinType, FiniteTypeOracle};
    use alloc::vec::Vec;
    use proptest::prelude::*;

    fn word(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
        prop::collection::vec(1..n, 0..=max_len).prop_map(move |v| BraidWord::from_indices(n, &v).unwrap())
    }

    #[test]
    fn standard_words_are_fixed_points() {
        let mut types: Vec<DynkinType> = (1..=10).map(DynkinType::a).collect();
        types.extend((4..=10).map(DynkinType::d));
        types.extend((6..=8).map(DynkinType::e));
        for t in types {
            let w = standard_link_word(t).unwrap();
            let v = classify(&w);
            let d = v.decomposition().unwrap();
            assert_eq!(d.unknots, 0);
            assert_eq!(d.factors.len(), 1);
            assert_eq!(d.factors[0], alloc::vec![StandardLink { ty: t, word: w }]);
        }
    }

    #[test]
    fn dichotomy_small_exhaustive() {
        let mut oracle = FiniteTypeOracle::new(crate::quiver::DEFAULT_CAP);
        for n in 2..=4 {
            for w in crate::brick::tests::all_words(n, 7) {
                let v = classify_with(&w, &mut oracle, ClassifyOptions::default());
                let expect = is_finite_type(&extract_quiver(&w).to_matrix(), 100_000).is_finite();
                assert_eq!(v.is_finite(), expect, "{}", w);
                if let ClassifyVerdict::Finite { warnings, .. } = &v {
                    assert!(!warnings.iter().any(|s| s.contains("components")), "{} {:?}", w, warnings);
                }
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]

        #[test]
        fn finite_verdicts_replay(w in word(5, 12)) {
            let v = classify(&w);
            if let ClassifyVerdict::Finite { decomposition, trace, .. } = &v {
                let arena = Arena::replay(&w, trace).unwrap();
                let (u, f) = arena.factors();
                prop_assert_eq!(u, decomposition.unknots);
                let words: Vec<Vec<BraidWord>> =
                    decomposition.factors.iter().map(|f| f.iter().map(|s| s.word.clone()).collect()).collect();
                prop_assert_eq!(f, words);
                prop_assert_eq!(w.components(), decomposition.reconstruct().components());
                let again = classify(&decomposition.reconstruct());
                prop_assert!(again.decomposition().unwrap().equivalent(decomposition));
            }
        }

        #[test]
        fn infinite_witnesses_are_dominated(w in word(4, 11)) {
            if let ClassifyVerdict::Infinite { witness: Some(x), .. } = classify(&w) {
                let arena = Arena::replay(&w, &x.trace).unwrap();
                prop_assert_eq!(arena.word(0), &x.word);
                prop_assert!(x.word.dominates(&x.result));
                let b = extract_quiver(&x.result).to_matrix();
                prop_assert!(b.is_acyclic());
                prop_assert_eq!(is_finite_type(&b, 100_000).is_finite(), Some(false));
            }
        }
    }
}
