//! Seeds, the DT transformation of acyclic quivers, frieze orbits and filling seeds.

mod dt;
mod fillings;
mod seed;

pub use dt::{dt_orbit, dt_sequence, verify_maximal_green, DtTransform, Growth, OrbitReport};
pub use fillings::{filling_seeds, seeds_equivalent, FillingReport};
pub use seed::{bit_lengths, exchange, is_positive, Seed};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_braid;
    use crate::brick::extract_quiver;

    #[test]
    fn test_fillings_zero() {
        let r = filling_seeds(&parse_braid("s1^3", None).unwrap(), 0).unwrap();
        assert_eq!(r.seeds.len(), 1);
        assert!(r.all_distinct());
    }

    #[test]
    fn test_fillings_cyclic_rejected() {
        let w = parse_braid("s1 s2 s1 s2 s1 s2", None).unwrap();
        assert!(filling_seeds(&w, 2).is_err());
    }

    #[test]
    fn test_dt_returns_quiver_for_e9() {
        let b = extract_quiver(&parse_braid("s1^6 s2 s1^3 s2", None).unwrap()).to_matrix();
        let dt = DtTransform::new(&b).unwrap();
        assert_eq!(dt.sequence().len(), 9);
        assert_eq!(dt.apply(&Seed::unit(&b)).unwrap().b, b);
        assert!(verify_maximal_green(&b, dt.sequence()));
    }
}
