//! Library results against brute-force computations that share no code
//! with the library.

mod common;

use adrg::classify::{Analysis, IntersectionValue};
use adrg::graph::families;
use adrg::{classify, Graph, Tolerances};
use common::{drg_corpus, floyd, int_adjacency, int_mul};
use nalgebra::DMatrix;

fn analysis(g: Graph) -> Analysis<f64> {
    Analysis::new(g.validate(512).unwrap(), Tolerances::default()).unwrap()
}

fn sample() -> Vec<Graph> {
    let mut v: Vec<Graph> = drg_corpus().into_iter().map(|(g, _, _)| g).collect();
    v.push(families::foster_f026a());
    v.push(families::lcf(6, &[3, -3]).with_name("K3,3-lcf"));
    v.push(families::lcf(8, &[4]).with_name("Wagner"));
    v.push(families::lcf(12, &[5, -5]).with_name("Franklin"));
    v.push(families::lcf(14, &[5, -5]).with_name("Heawood"));
    v.push(families::lcf(20, &[10, 7, 4, -4, -7, 10, -4, 7, -7, 4]).with_name("Dodecahedron"));
    v
}

#[test]
fn drg_intersection_arrays() {
    for (g, b, c) in drg_corpus() {
        let name = g.name().unwrap().to_string();
        let r = classify(g, &Tolerances::default()).unwrap();
        assert!(r.distance_regular, "{name}");
        let diameter = r.diameter;
        assert_eq!(b.len(), diameter, "{name}");
        for k in 0..diameter {
            assert_eq!(r.intersection.b[k], Some(b[k]), "{name} b_{k}");
            assert_eq!(r.intersection.c[k + 1], Some(c[k]), "{name} c_{}", k + 1);
        }
        let degree = b[0];
        for k in 0..=diameter {
            let ck = if k == 0 { 0 } else { c[k - 1] };
            let bk = if k == diameter { 0 } else { b[k] };
            assert_eq!(r.intersection.a[k], Some(degree - ck - bk), "{name} a_{k}");
        }
    }
}

#[test]
fn walk_counts_match_matrix_powers() {
    for g in sample() {
        let a = analysis(g.clone());
        let adj = int_adjacency(&g);
        let n = g.order();
        let mut power: Vec<Vec<i128>> = (0..n).map(|u| (0..n).map(|v| i128::from(u == v)).collect()).collect();
        for l in 0..=a.d() {
            for u in 0..n {
                for v in 0..n {
                    assert_eq!(a.walks.get_u128(u, v, l), Some(power[u][v] as u128), "{:?} l={l}", g.name());
                }
            }
            power = int_mul(&power, &adj);
        }
    }
}

#[test]
fn trace_of_powers_matches_spectrum() {
    for g in sample() {
        let a = analysis(g.clone());
        let s = &a.spectrum;
        for l in 0..=a.d() {
            let spectral: f64 = (0..=s.d())
                .map(|i| s.multiplicity(i) as f64 * s.eigenvalue(i).powi(l as i32))
                .sum();
            let walks = a.walks.trace(l).to_string().parse::<f64>().unwrap();
            assert!((spectral - walks).abs() <= 1e-8 * walks.max(1.0), "{:?} l={l}", g.name());
        }
    }
}

#[test]
fn intersection_numbers_by_triple_loop() {
    for g in sample() {
        let a = analysis(g.clone());
        let dist = floyd(&g);
        let n = g.order();
        let max = a.intersection.max_index();
        for k in 0..=max {
            for i in 0..=max {
                for j in 0..=max {
                    let mut counts = std::collections::BTreeSet::new();
                    for u in 0..n {
                        for v in 0..n {
                            if dist[u][v] == k {
                                let c = (0..n).filter(|&w| dist[u][w] == i && dist[v][w] == j).count();
                                counts.insert(c as u32);
                            }
                        }
                    }
                    let expected = if counts.len() == 1 {
                        IntersectionValue::WellDefined(*counts.first().unwrap())
                    } else {
                        IntersectionValue::Spread(counts.into_iter().collect())
                    };
                    assert_eq!(a.intersection.value(i, j, k), expected, "{:?} p^{k}_{i}{j}", g.name());
                }
            }
        }
        // c, a, b over all k by the same brute force.
        for k in 0..=a.diameter() {
            let mut cs = std::collections::BTreeSet::new();
            for u in 0..n {
                for v in 0..n {
                    if dist[u][v] == k && k > 0 {
                        cs.insert(g.neighbors(v).iter().filter(|&&w| dist[u][w] + 1 == k).count() as u32);
                    }
                }
            }
            if k > 0 {
                assert_eq!(a.intersection.c(k).is_well_defined(), cs.len() == 1, "{:?} c_{k}", g.name());
            }
        }
    }
}

/// Predistance polynomials by Gram-Schmidt on `I, A, A^2, ...` with the
/// inner product `tr(M N) / n`, normalized so `<p, p> = p(lambda_0)`.
fn predistance_matrices(g: &Graph) -> Vec<DMatrix<f64>> {
    let n = g.order();
    let adj = DMatrix::from_fn(n, n, |u, v| f64::from(u8::from(g.is_adjacent(u, v))));
    let inner = |x: &DMatrix<f64>, y: &DMatrix<f64>| x.component_mul(y).sum() / n as f64;
    let row_sum = |x: &DMatrix<f64>| x.row(0).sum();
    let mut basis: Vec<DMatrix<f64>> = Vec::new();
    let mut power = DMatrix::identity(n, n);
    loop {
        let mut m = power.clone();
        for p in &basis {
            m -= p * (inner(&m, p) / inner(p, p));
        }
        let norm = inner(&m, &m);
        if norm < 1e-9 * inner(&power, &power).max(1.0) {
            break;
        }
        // <c m, c m> = c row_sum(m)  =>  c = row_sum(m) / <m, m>.
        let c = row_sum(&m) / norm;
        basis.push(m * c);
        power = &power * &adj;
    }
    basis
}

#[test]
fn predistance_polynomials_match_matrix_gram_schmidt() {
    for g in sample() {
        let a = analysis(g.clone());
        let oracle = predistance_matrices(&g);
        assert_eq!(oracle.len(), a.d() + 1, "{:?}", g.name());
        for (i, expected) in oracle.iter().enumerate() {
            let got = a.predistance.matrix_horner(i, &a.graph);
            let err = (got - expected).abs().max();
            assert!(err <= 1e-6 * expected.abs().max().max(1.0), "{:?} p_{i}: {err}", g.name());
        }
        let sum: DMatrix<f64> = oracle.iter().sum();
        assert!((sum.add_scalar(-1.0)).abs().max() < 1e-8, "{:?} Hoffman", g.name());
    }
}

#[test]
fn petersen_spectrum() {
    let a = analysis(families::petersen());
    let s = &a.spectrum;
    assert_eq!(s.multiplicities(), &[1, 5, 4]);
    for (i, x) in [3.0, 1.0, -2.0].into_iter().enumerate() {
        assert!((s.eigenvalue(i) - x).abs() < 1e-12);
    }
}

#[test]
fn drg_spectral_excess_equality() {
    for (g, _, _) in drg_corpus() {
        let name = g.name().unwrap().to_string();
        let r = classify(g, &Tolerances::default()).unwrap();
        let ex = &r.spectral_excess;
        assert!((ex.delta_d_value - ex.polynomial).abs() <= 1e-6, "{name}");
        assert!((ex.closed_form - ex.polynomial).abs() <= 1e-8, "{name}");
        assert!(r.lm_frontier.contains(&(r.d, r.diameter)), "{name}");
    }
}

#[test]
fn non_drg_spectral_excess_is_strict() {
    for g in [families::foster_f026a(), families::lcf(12, &[5, -5])] {
        let r = classify(g, &Tolerances::default()).unwrap();
        assert!(!r.distance_regular);
        if r.diameter == r.d {
            assert!(r.spectral_excess.delta_d_value < r.spectral_excess.polynomial - 1e-6);
        }
    }
}
