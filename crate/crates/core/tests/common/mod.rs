#![allow(dead_code)]

use adrg::graph::families;
use adrg::Graph;
use rand::seq::SliceRandom;
use rand::Rng;

/// Uniform-ish random `k`-regular graph by the pairing model, retried until
/// simple and connected.
pub fn random_regular<R: Rng>(n: usize, k: usize, rng: &mut R) -> Graph {
    assert!(n * k % 2 == 0 && k < n);
    loop {
        let mut points: Vec<usize> = (0..n * k).map(|p| p / k).collect();
        points.shuffle(rng);
        let mut seen = std::collections::HashSet::new();
        let ok = points.chunks(2).all(|e| {
            let (u, v) = (e[0].min(e[1]), e[0].max(e[1]));
            u != v && seen.insert((u, v))
        });
        if !ok {
            continue;
        }
        let g = Graph::from_edges(n, seen.into_iter());
        if g.clone().validate(usize::MAX).is_ok() {
            return g;
        }
    }
}

/// Distance-regular graphs with their intersection arrays `{b_0..; c_1..}`.
pub fn drg_corpus() -> Vec<(Graph, Vec<u32>, Vec<u32>)> {
    vec![
        (families::complete(2), vec![1], vec![1]),
        (families::cycle(4), vec![2, 1], vec![1, 2]),
        (families::cycle(5), vec![2, 1], vec![1, 1]),
        (families::cycle(6), vec![2, 1, 1], vec![1, 1, 2]),
        (families::complete_bipartite(3, 3), vec![3, 2], vec![1, 3]),
        (families::hypercube(3), vec![3, 2, 1], vec![1, 2, 3]),
        (families::petersen(), vec![3, 2], vec![1, 1]),
    ]
}

/// Dense 0/1 adjacency matrix as integers.
pub fn int_adjacency(g: &Graph) -> Vec<Vec<i128>> {
    let n = g.order();
    (0..n)
        .map(|u| (0..n).map(|v| i128::from(g.is_adjacent(u, v))).collect())
        .collect()
}

pub fn int_mul(a: &[Vec<i128>], b: &[Vec<i128>]) -> Vec<Vec<i128>> {
    let n = a.len();
    let mut c = vec![vec![0i128; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] != 0 {
                for j in 0..n {
                    c[i][j] += a[i][k] * b[k][j];
                }
            }
        }
    }
    c
}

/// All-pairs distances by Floyd-Warshall.
pub fn floyd(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for &v in g.neighbors(u) {
            d[u][v] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}
