mod common;

use adrg::classify::Analysis;
use adrg::{encode_graph6, parse_graph6, Graph, Tolerances};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn regular(seed: u64, n: usize, k: usize) -> Graph {
    common::random_regular(n, k, &mut ChaCha8Rng::seed_from_u64(seed))
}

fn check(g: Graph) -> Result<(), TestCaseError> {
    let tol = Tolerances::default();
    let a = Analysis::<f64>::new(g.clone().validate(512).unwrap(), tol).unwrap();
    let r = a.report();
    prop_assert!(r.diagnostics.invariant_violations.is_empty(), "{:?}", r.diagnostics.invariant_violations);
    prop_assert!(r.diagnostics.cross_checks.is_empty(), "{:?}", r.diagnostics.cross_checks);
    prop_assert!(r.diagnostics.idempotent_residual < 1e-8);
    prop_assert!(r.diagnostics.orthogonality_offdiagonal < 1e-8);
    prop_assert!(r.diagnostics.recurrence_residual < 1e-8);
    prop_assert!(r.diagnostics.walk_round_trip < 1e-6);
    for b in &r.bounds {
        prop_assert!(b.sandwich, "bound sandwich fails at h={}", b.h);
    }
    prop_assert!(r.spectral_excess.delta_d_value <= r.spectral_excess.polynomial + 1e-6);
    prop_assert_eq!(r.distance_regular, r.distance_regular_algebraic);
    prop_assert_eq!(r.m_pdr, r.m_pdr_algebraic);
    prop_assert_eq!(r.m_wr, r.m_wr_hadamard);
    prop_assert!(r.diameter <= r.d);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cubic_graphs(seed in any::<u64>(), half in 4usize..=12) {
        check(regular(seed, 2 * half, 3))?;
    }

    #[test]
    fn regular_graphs(seed in any::<u64>(), n in 6usize..=16, k in 2usize..=5) {
        prop_assume!(n * k % 2 == 0 && k < n);
        check(regular(seed, n, k))?;
    }

    #[test]
    fn graph6_round_trip(seed in any::<u64>(), half in 2usize..=40) {
        let g = regular(seed, 2 * half, 3.min(2 * half - 1));
        let back = parse_graph6(&encode_graph6(&g)).unwrap();
        prop_assert_eq!(back.adjacency(), g.adjacency());
    }
}
