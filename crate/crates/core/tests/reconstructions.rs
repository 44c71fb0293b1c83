//! Built-in stand-ins for four Foster census graphs.

use adrg::classify::Analysis;
use adrg::graph::families;
use adrg::{Graph, Tolerances};

fn analysis(g: Graph) -> Analysis<f64> {
    Analysis::new(g.validate(512).unwrap(), Tolerances::default()).unwrap()
}

fn clean(a: &Analysis<f64>) {
    let r = a.report();
    assert!(r.diagnostics.cross_checks.is_empty(), "{:?}", r.diagnostics.cross_checks);
    assert!(r.diagnostics.invariant_violations.is_empty(), "{:?}", r.diagnostics.invariant_violations);
}

#[test]
fn f026a() {
    let a = analysis(families::foster_f026a());
    let r = a.report();
    assert_eq!((r.n, r.diameter, r.d, r.bipartite), (26, 5, 5, true));
    assert_eq!(r.punctual_dr, [true, true, true, false, true, false]);
    assert_eq!(r.punctual_wr, [true, true, true, false, true, true]);
    assert_eq!(r.intersection.c[5], Some(3));
    assert_eq!(r.intersection.c_spread[4], Some(vec![2, 3]));
    assert_eq!(r.m_wr, Some(2));
    assert!(!r.distance_regular);
    clean(&a);
}

#[test]
fn psl28_coset_graph() {
    let a = analysis(families::psl28_cubic_84());
    let r = a.report();
    assert_eq!((r.n, r.diameter, r.d), (84, 7, 10));
    assert_eq!((r.m_wr, r.m_pdr), (Some(2), 3));
    assert!((1..=7).all(|k| r.intersection.c[k].is_some()));
    assert_eq!(r.intersection.a[3], None);
    assert!(!a.lm_walk_regular(4, 3).unwrap().combinatorial);
    assert!(a.lm_walk_regular(3, 3).unwrap().combinatorial);
    clean(&a);
}

#[test]
fn psl28_double_cover() {
    let a = analysis(families::bipartite_double(&families::psl28_cubic_84()));
    let r = a.report();
    assert_eq!((r.n, r.diameter, r.d, r.bipartite), (168, 8, 20, true));
    assert_eq!(r.intersection.well_defined_through, Some(5));
    for p in [(6, 5), (7, 4), (10, 3)] {
        assert!(r.lm_frontier.contains(&p));
    }
    assert_eq!(r.m_wr, Some(2));
    clean(&a);
}

#[test]
fn pg23_triangle_graph() {
    let a = analysis(families::pg23_triangle_graph());
    let r = a.report();
    assert_eq!((r.n, r.diameter), (234, 8));
    // Ten distinct eigenvalues: 3, (1 +- sqrt 17)/2, 2, (-1 +- sqrt 13)/2, sqrt 3 - 1, 0, -1, -1 - sqrt 3.
    assert_eq!(r.d, 9);
    assert!(r.m_wr.is_some_and(|m| m >= 5));
    assert!(!r.distance_regular);
    clean(&a);
}
