use std::collections::VecDeque;

use num_rational::Ratio;

use crate::graph::ValidatedGraph;

/// Exact distance data of a connected graph, computed by BFS from every vertex.
#[derive(Debug, Clone)]
pub struct DistanceStructure {
    n: usize,
    dist: Vec<u32>,
    diameter: usize,
    classes: Vec<Vec<(u32, u32)>>,
    eccentricities: Vec<usize>,
    girth: Option<usize>,
    bipartition: Option<Vec<u8>>,
}

impl DistanceStructure {
    pub fn new(g: &ValidatedGraph) -> DistanceStructure {
        let n = g.order();
        let mut dist = vec![u32::MAX; n * n];
        let mut girth: Option<usize> = None;
        let mut queue = VecDeque::with_capacity(n);
        let mut parent = vec![usize::MAX; n];
        for s in 0..n {
            let row = &mut dist[s * n..(s + 1) * n];
            row[s] = 0;
            parent.fill(usize::MAX);
            queue.clear();
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &w in g.neighbors(u) {
                    if row[w] == u32::MAX {
                        row[w] = row[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = (row[u] + row[w] + 1) as usize;
                        girth = Some(girth.map_or(len, |g| g.min(len)));
                    }
                }
            }
        }
        let eccentricities: Vec<usize> = (0..n)
            .map(|u| *dist[u * n..(u + 1) * n].iter().max().unwrap() as usize)
            .collect();
        let diameter = *eccentricities.iter().max().unwrap();
        let mut classes = vec![Vec::new(); diameter + 1];
        for u in 0..n {
            for v in 0..n {
                classes[dist[u * n + v] as usize].push((u as u32, v as u32));
            }
        }
        let bipartition = {
            let colour: Vec<u8> = (0..n).map(|v| (dist[v] % 2) as u8).collect();
            let proper = g
                .graph()
                .edges()
                .all(|(u, v)| colour[u] != colour[v]);
            proper.then_some(colour)
        };
        DistanceStructure {
            n,
            dist,
            diameter,
            classes,
            eccentricities,
            girth,
            bipartition,
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn dist(&self, u: usize, v: usize) -> usize {
        self.dist[u * self.n + v] as usize
    }

    /// Diameter `D`.
    pub fn diameter(&self) -> usize {
        self.diameter
    }

    /// Ordered pairs `(u, v)` at distance `h`, in row-major order.
    pub fn class(&self, h: usize) -> &[(u32, u32)] {
        &self.classes[h]
    }

    /// Number of ordered pairs at distance `h`.
    pub fn class_size(&self, h: usize) -> usize {
        self.classes.get(h).map_or(0, Vec::len)
    }

    /// Average degree of the distance-`h` graph, `class_size(h) / n`.
    pub fn average_degree(&self, h: usize) -> Ratio<u64> {
        Ratio::new(self.class_size(h) as u64, self.n as u64)
    }

    pub fn average_degree_f64(&self, h: usize) -> f64 {
        self.class_size(h) as f64 / self.n as f64
    }

    /// Row-major 0/1 distance-`h` matrix.
    pub fn distance_matrix(&self, h: usize) -> Vec<u8> {
        self.dist.iter().map(|&d| (d as usize == h) as u8).collect()
    }

    /// Whether every vertex has the same number of vertices at distance `h`.
    pub fn distance_graph_is_regular(&self, h: usize) -> bool {
        let n = self.n;
        let count = |u: usize| {
            self.dist[u * n..(u + 1) * n]
                .iter()
                .filter(|&&d| d as usize == h)
                .count()
        };
        let c0 = count(0);
        (1..n).all(|u| count(u) == c0)
    }

    pub fn eccentricities(&self) -> &[usize] {
        &self.eccentricities
    }

    /// Length of the shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        self.girth
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition.is_some()
    }

    /// Colour class (0 or 1) of each vertex when bipartite.
    pub fn bipartition(&self) -> Option<&[u8]> {
        self.bipartition.as_deref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    fn ds(g: crate::graph::Graph) -> DistanceStructure {
        DistanceStructure::new(&g.validate(512).unwrap())
    }

    #[test]
    fn four_cycle() {
        let d = ds(families::cycle(4));
        assert_eq!(d.diameter(), 2);
        assert_eq!(d.average_degree(2), Ratio::from_integer(1));
        assert_eq!(d.girth(), Some(4));
        assert!(d.is_bipartite());
    }

    #[test]
    fn petersen() {
        let d = ds(families::petersen());
        assert_eq!(d.diameter(), 2);
        assert_eq!(d.average_degree(2), Ratio::from_integer(6));
        assert_eq!(d.girth(), Some(5));
        assert!(!d.is_bipartite());
    }

    #[test]
    fn complete_graph_has_girth_three() {
        let d = ds(families::complete(4));
        assert_eq!(d.diameter(), 1);
        assert_eq!(d.girth(), Some(3));
    }

    #[test]
    fn k2_is_a_tree() {
        let d = ds(families::complete(2));
        assert_eq!(d.girth(), None);
        assert!(d.is_bipartite());
    }

    #[test]
    fn distance_matrices_partition_all_ones() {
        let d = ds(families::hypercube(3));
        let n = d.order();
        let mut sum = vec![0u8; n * n];
        for h in 0..=d.diameter() {
            for (s, a) in sum.iter_mut().zip(d.distance_matrix(h)) {
                *s += a;
            }
        }
        assert!(sum.iter().all(|&x| x == 1));
        let a1 = d.distance_matrix(1);
        let g = families::hypercube(3);
        for u in 0..n {
            for v in 0..n {
                assert_eq!(a1[u * n + v] == 1, g.is_adjacent(u, v));
            }
            assert_eq!(d.distance_matrix(0)[u * n + u], 1);
        }
        assert_eq!(d.average_degree(0), Ratio::from_integer(1));
        assert_eq!(d.average_degree(1), Ratio::from_integer(3));
    }

    #[test]
    fn f026a_reconstruction() {
        let d = ds(families::foster_f026a());
        assert_eq!(d.diameter(), 5);
        assert_eq!(d.girth(), Some(6));
        assert!(d.is_bipartite());
    }
}
