//! Exchange matrices, mutation, canonical forms, Dynkin recognition and the
//! finite/infinite type decision.

mod canon;
mod dynkin;
mod finite;
mod matrix;

pub use canon::{canonical_form, canonical_matrix, canonical_order, CanonicalForm};
pub use dynkin::{recognize, recognize_component, DynkinType, Family};
pub use finite::{is_finite_type, mutation_class, mutation_equivalent, FiniteTypeOracle, TypeVerdict, DEFAULT_CAP};
pub use matrix::ExchangeMatrix;

#[cfg(test)]
mod proptests {
    use super::*;
    use alloc::vec::Vec;
    use proptest::prelude::*;

    fn skew(max_n: usize, max_entry: i64) -> impl Strategy<Value = ExchangeMatrix> {
        (1..=max_n).prop_flat_map(move |n| {
            proptest::collection::vec(-max_entry..=max_entry, n * (n - 1) / 2).prop_map(move |upper| {
                let mut rows = alloc::vec![alloc::vec![0i64; n]; n];
                let mut it = upper.into_iter();
                for i in 0..n {
                    for j in i + 1..n {
                        let v = it.next().unwrap();
                        rows[i][j] = v;
                        rows[j][i] = -v;
                    }
                }
                ExchangeMatrix::from_rows(&rows).unwrap()
            })
        })
    }

    fn simply_laced(max_n: usize) -> impl Strategy<Value = ExchangeMatrix> {
        skew(max_n, 1)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]

        #[test]
        fn mutation_is_involution(b in skew(8, 3), k in 0usize..8) {
            let k = k % b.size();
            prop_assert_eq!(b.mutate(k).unwrap().mutate(k).unwrap(), b);
        }

        #[test]
        fn skew_symmetry_preserved(b in skew(6, 1), path in proptest::collection::vec(0usize..6, 0..20)) {
            let mut m = b.clone();
            for k in path {
                match m.mutate(k % m.size()) {
                    Ok(x) => m = x,
                    Err(_) => break,
                }
                prop_assert!(ExchangeMatrix::from_rows(&m.rows()).is_ok());
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn canonical_form_is_invariant(b in skew(7, 2), seed in any::<u64>()) {
            let n = b.size();
            let mut perm: Vec<usize> = (0..n).collect();
            let mut s = seed;
            for i in (1..n).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                perm.swap(i, (s >> 33) as usize % (i + 1));
            }
            prop_assert_eq!(canonical_form(&b.permute(&perm)), canonical_form(&b));
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(60))]

        #[test]
        fn verdict_invariant_under_mutation(b in simply_laced(6), path in proptest::collection::vec(0usize..6, 20)) {
            let v = is_finite_type(&b, 20_000);
            prop_assert!(v.replays(&b) || v.is_finite().is_none());
            let mut m = b.clone();
            for k in path {
                m = match m.mutate(k % m.size()) { Ok(x) => x, Err(_) => return Ok(()) };
            }
            let w = is_finite_type(&m, 20_000);
            if let (Some(x), Some(y)) = (v.is_finite(), w.is_finite()) {
                prop_assert_eq!(x, y);
            }
            prop_assert_eq!(b.is_connected(), m.is_connected());
        }
    }
}
