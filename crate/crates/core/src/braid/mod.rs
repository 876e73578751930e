//! Braid words, rewrite moves, the positive word problem and closure arithmetic.

mod garside;
mod parse;
mod permutation;
mod word;

pub use garside::{monoid_equal, GreedyNormalForm};
pub use parse::parse_braid;
pub use permutation::Permutation;
pub use word::{BraidWord, Letter, StrandEnd};

#[cfg(test)]
mod proptests {
    use super::*;
    use alloc::vec::Vec;
    use proptest::prelude::*;

    fn word(max_n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
        (2..=max_n).prop_flat_map(move |n| {
            proptest::collection::vec(1..n, 0..=max_len).prop_map(move |l| BraidWord::from_indices(n, &l).unwrap())
        })
    }

    fn level_counts(w: &BraidWord) -> Vec<usize> {
        (1..w.strands()).map(|i| w.count(i)).collect()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn normal_form_invariant_under_moves(w in word(5, 12), moves in proptest::collection::vec((any::<bool>(), 0usize..12), 1..40)) {
            let nf = GreedyNormalForm::of_word(&w);
            let mut cur = w.clone();
            for (r3, p) in moves {
                let next = if r3 { cur.r3_move(p) } else { cur.commute_move(p) };
                if let Ok(next) = next {
                    prop_assert_eq!(next.len(), cur.len());
                    if !r3 {
                        prop_assert_eq!(level_counts(&next), level_counts(&cur));
                    }
                    cur = next;
                }
            }
            prop_assert_eq!(GreedyNormalForm::of_word(&cur), nf);
            prop_assert!(monoid_equal(&w, &cur).unwrap());
        }
    }

    proptest! {
        #[test]
        fn opposite_is_involution(w in word(6, 12)) {
            prop_assert_eq!(w.opposite().opposite(), w);
        }

        #[test]
        fn rotation_preserves_counts(w in word(6, 12), k in -20isize..20) {
            let r = w.cyclic_rotate(k);
            prop_assert_eq!(level_counts(&r), level_counts(&w));
            prop_assert_eq!(r.cyclic_rotate(-k), w);
        }

        #[test]
        fn deletion_is_subsequence(w in word(5, 12), mask in proptest::collection::vec(any::<bool>(), 12)) {
            let pos: Vec<usize> = (0..w.len()).filter(|&i| mask[i]).collect();
            let d = w.delete_letters(&pos).unwrap();
            prop_assert!(w.dominates(&d));
            prop_assert_eq!(d.len(), w.len() - pos.len());
        }

        #[test]
        fn split_union_adds_components(a in word(4, 8), b in word(4, 8)) {
            prop_assert_eq!(a.split_union(&b).components(), a.components() + b.components());
        }

        #[test]
        fn connect_sum_amalgamates(a in word(4, 8), b in word(4, 8)) {
            // the shared strand joins one component of each summand
            prop_assert_eq!(a.connect_sum(&b).components(), a.components() + b.components() - 1);
            let p = a.connect_sum(&b).permutation();
            let pa = a.permutation();
            let n = a.strands();
            // strands of the first block that never reach the shared strand stay put
            for i in 1..n {
                if pa.image(i) < n {
                    prop_assert_eq!(p.image(i), pa.image(i));
                }
            }
        }

        #[test]
        fn closure_arithmetic(w in word(5, 14)) {
            prop_assert_eq!(w.tb(), w.len() as i64 - w.strands() as i64);
            if w.components() == 1 {
                prop_assert!(w.tb().rem_euclid(2) == 1);
                prop_assert_eq!(w.filling_genus().unwrap() * 2, w.filling_b1());
                prop_assert_eq!(w.permutation().sign(), if w.len() % 2 == 0 { 1 } else { -1 });
            } else {
                prop_assert!(w.filling_genus().is_err());
            }
        }
    }
}
