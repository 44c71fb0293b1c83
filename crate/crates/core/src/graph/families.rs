//! Small named graphs used as fixtures and examples.

use crate::graph::Graph;

pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v)));
    Graph::from_edges(n, edges).with_name(format!("K{n}"))
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|u| (u, (u + 1) % n))).with_name(format!("C{n}"))
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|u| (u - 1, u))).with_name(format!("P{n}"))
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (0..a).flat_map(|u| (0..b).map(move |v| (u, a + v)));
    Graph::from_edges(a + b, edges).with_name(format!("K{a},{b}"))
}

/// The `k`-dimensional cube `Q_k`.
pub fn hypercube(k: u32) -> Graph {
    let n = 1usize << k;
    let edges = (0..n).flat_map(|u| (0..k).map(move |b| (u, u ^ (1 << b))));
    Graph::from_edges(n, edges).with_name(format!("Q{k}"))
}

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner)).with_name("Petersen")
}

/// Cubic graph from LCF notation: a Hamiltonian cycle `0..n` plus the chord
/// `i -- i + pattern[i mod len]`.
///
/// Panics when the pattern does not describe a simple cubic graph.
pub fn lcf(n: usize, pattern: &[i64]) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| {
            let j = (i as i64 + pattern[i % pattern.len()]).rem_euclid(n as i64) as usize;
            [(i, (i + 1) % n), (i, j)]
        })
        .collect();
    let g = Graph::from_edges(n, edges);
    assert!(
        (0..n).all(|u| g.degree(u) == 3),
        "LCF pattern does not give a cubic graph"
    );
    g
}

/// Reconstruction of census graph F026A from its LCF notation `[7, -7]^13`.
pub fn foster_f026a() -> Graph {
    lcf(26, &[7, -7]).with_name("F026A")
}

/// The cubic graph on the 234 triangles of the projective plane PG(2,3):
/// two triangles are adjacent when they share exactly one point and their
/// four remaining points are collinear.
pub fn pg23_triangle_graph() -> Graph {
    let points: Vec<[u8; 3]> = (1..27u8)
        .map(|c| [c / 9, (c / 3) % 3, c % 3])
        .filter(|p| p.iter().find(|&&x| x != 0) == Some(&1))
        .collect();
    let det = |a: [u8; 3], b: [u8; 3], c: [u8; 3]| -> i32 {
        let [a, b, c] = [a, b, c].map(|v| v.map(i32::from));
        (a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
            + a[2] * (b[0] * c[1] - b[1] * c[0]))
            .rem_euclid(3)
    };
    let collinear = |i: usize, j: usize, k: usize| det(points[i], points[j], points[k]) == 0;
    let m = points.len();
    let mut triangles = Vec::new();
    for i in 0..m {
        for j in (i + 1)..m {
            for k in (j + 1)..m {
                if !collinear(i, j, k) {
                    triangles.push([i, j, k]);
                }
            }
        }
    }
    let mut edges = Vec::new();
    for (a, s) in triangles.iter().enumerate() {
        for (b, t) in triangles.iter().enumerate().skip(a + 1) {
            let common: Vec<usize> = s.iter().copied().filter(|x| t.contains(x)).collect();
            if common.len() != 1 {
                continue;
            }
            let rest: Vec<usize> = s
                .iter()
                .chain(t.iter())
                .copied()
                .filter(|x| *x != common[0])
                .collect();
            let all_collinear = (0..4).all(|skip| {
                let r: Vec<usize> = (0..4).filter(|&i| i != skip).map(|i| rest[i]).collect();
                collinear(r[0], r[1], r[2])
            });
            if all_collinear {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(triangles.len(), edges).with_name("PG23-triangles")
}

/// Canonical bipartite double cover: vertices `(u, s)` with `s` in `{0, 1}`,
/// `(u, 0) ~ (v, 1)` whenever `u ~ v`. Vertex `(u, s)` has index `u + s * n`.
pub fn bipartite_double(g: &Graph) -> Graph {
    let n = g.order();
    let edges: Vec<(usize, usize)> = g
        .edges()
        .flat_map(|(u, v)| [(u, v + n), (v, u + n)])
        .collect();
    let name = g.name().map_or_else(|| "double".to_string(), |s| format!("{s}x2"));
    Graph::from_edges(2 * n, edges).with_name(name)
}

type Perm = [u8; 9];

fn compose(p: &Perm, q: &Perm) -> Perm {
    std::array::from_fn(|i| q[p[i] as usize])
}

fn gf8_mul(a: u8, b: u8) -> u8 {
    let mut r: u16 = 0;
    for i in 0..3 {
        if (b >> i) & 1 == 1 {
            r ^= u16::from(a) << i;
        }
    }
    for i in [4, 3] {
        if (r >> i) & 1 == 1 {
            r ^= 0b1011 << (i - 3);
        }
    }
    r as u8
}

/// PSL(2,8) = SL(2,8) as permutations of the nine points of PG(1,8), sorted.
fn psl28() -> Vec<Perm> {
    let inv = |a: u8| (1..8).find(|&b| gf8_mul(a, b) == 1).unwrap();
    let points: Vec<(u8, u8)> = (0..8).map(|x| (1, x)).chain([(0, 1)]).collect();
    let index = |(a, b): (u8, u8)| -> u8 {
        if a != 0 {
            gf8_mul(b, inv(a))
        } else {
            8
        }
    };
    let mut group = std::collections::BTreeSet::new();
    for m in 0..4096u32 {
        let [a, b, c, d] = [0, 3, 6, 9].map(|s| ((m >> s) & 7) as u8);
        if gf8_mul(a, d) ^ gf8_mul(b, c) != 1 {
            continue;
        }
        let p: Perm = std::array::from_fn(|i| {
            let (x, y) = points[i];
            index((gf8_mul(a, x) ^ gf8_mul(b, y), gf8_mul(c, x) ^ gf8_mul(d, y)))
        });
        group.insert(p);
    }
    group.into_iter().collect()
}

fn generate(gens: &[Perm]) -> std::collections::BTreeSet<Perm> {
    let id: Perm = std::array::from_fn(|i| i as u8);
    let mut set = std::collections::BTreeSet::from([id]);
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = compose(&x, g);
            if set.insert(y) {
                frontier.push(y);
            }
        }
    }
    set
}

/// Cubic coset graph of PSL(2,8) on the cosets of a subgroup `S_3`, joined
/// through an involution `a` with `|H : H cap H^a| = 3`.
///
/// 84 vertices, diameter 7, girth 7, 2-arc-regular; used as a stand-in for
/// census graph F084A when census data is not available.
pub fn psl28_cubic_84() -> Graph {
    let group = psl28();
    let id: Perm = std::array::from_fn(|i| i as u8);
    let order = |p: &Perm| {
        let mut q = *p;
        let mut k = 1;
        while q != id {
            q = compose(&q, p);
            k += 1;
        }
        k
    };
    let involutions: Vec<Perm> = group.iter().copied().filter(|p| order(p) == 2).collect();
    let three = group.iter().copied().find(|p| order(p) == 3).unwrap();
    let h = involutions
        .iter()
        .map(|t| generate(&[three, *t]))
        .find(|s| s.len() == 6)
        .unwrap();

    let mut coset_of = std::collections::HashMap::new();
    let mut reps = Vec::new();
    for g in &group {
        if coset_of.contains_key(g) {
            continue;
        }
        for x in &h {
            coset_of.insert(compose(x, g), reps.len());
        }
        reps.push(*g);
    }

    for a in &involutions {
        if h.contains(a) {
            continue;
        }
        let conj: std::collections::BTreeSet<Perm> =
            h.iter().map(|x| compose(&compose(a, x), a)).collect();
        if h.intersection(&conj).count() != 2 {
            continue;
        }
        let double: std::collections::BTreeSet<Perm> = h
            .iter()
            .flat_map(|x| h.iter().map(move |y| compose(&compose(x, a), y)))
            .collect();
        let coset_of = &coset_of;
        let double = &double;
        let edges: Vec<(usize, usize)> = reps
            .iter()
            .enumerate()
            .flat_map(|(i, g)| double.iter().map(move |t| (i, coset_of[&compose(t, g)])))
            .collect();
        let graph = Graph::from_edges(reps.len(), edges).with_name("PSL28-coset-84");
        if (0..graph.order()).all(|u| graph.degree(u) == 3) && graph.clone().validate(usize::MAX).is_ok() {
            return graph;
        }
    }
    unreachable!("PSL(2,8) has a cubic S_3 coset graph")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(complete(5).edge_count(), 10);
        assert_eq!(cycle(6).edge_count(), 6);
        assert_eq!(complete_bipartite(3, 3).edge_count(), 9);
        assert_eq!(hypercube(3).edge_count(), 12);
        assert_eq!(petersen().edge_count(), 15);
        assert_eq!(foster_f026a().edge_count(), 39);
    }

    #[test]
    fn pg23_graph_is_cubic_on_234_vertices() {
        let g = pg23_triangle_graph();
        assert_eq!(g.order(), 234);
        assert!((0..234).all(|u| g.degree(u) == 3));
    }

    #[test]
    fn psl28_group_has_order_504() {
        assert_eq!(psl28().len(), 504);
    }

    #[test]
    fn psl28_coset_graph_is_cubic_on_84_vertices() {
        let g = psl28_cubic_84();
        assert_eq!(g.order(), 84);
        assert_eq!(g.edge_count(), 126);
    }

    #[test]
    fn double_cover_of_triangle_is_hexagon() {
        let g = bipartite_double(&complete(3));
        assert_eq!(g.order(), 6);
        assert!((0..6).all(|u| g.degree(u) == 2));
        assert!(g.clone().validate(16).is_ok());
    }
}
