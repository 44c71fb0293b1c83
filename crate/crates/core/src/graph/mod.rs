//! Graph representation, validation and distance structure.

mod distance;
pub mod families;
mod graph6;

pub use distance::DistanceStructure;
pub use graph6::{encode_graph6, parse_graph6};

use crate::error::ValidationError;

/// A simple undirected graph on vertices `0..n` in input order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adjacency: Vec<bool>,
    neighbors: Vec<Vec<usize>>,
    name: Option<String>,
}

impl Graph {
    /// Builds a graph from an edge list. Loops and repeated edges are ignored.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
        let mut adjacency = vec![false; n * n];
        for (u, v) in edges {
            assert!(u < n && v < n, "edge ({u}, {v}) out of range for n = {n}");
            if u != v {
                adjacency[u * n + v] = true;
                adjacency[v * n + u] = true;
            }
        }
        Self::from_flat(n, adjacency)
    }

    /// Builds a graph from a row-major 0/1 matrix, rejecting loops and asymmetry.
    pub fn from_adjacency_matrix(n: usize, matrix: &[bool]) -> Result<Graph, ValidationError> {
        assert_eq!(matrix.len(), n * n, "matrix must be n x n");
        for u in 0..n {
            if matrix[u * n + u] {
                return Err(ValidationError::NotSimple { u, v: u });
            }
            for v in (u + 1)..n {
                if matrix[u * n + v] != matrix[v * n + u] {
                    return Err(ValidationError::NotSimple { u, v });
                }
            }
        }
        Ok(Self::from_flat(n, matrix.to_vec()))
    }

    fn from_flat(n: usize, adjacency: Vec<bool>) -> Graph {
        let neighbors = (0..n)
            .map(|u| (0..n).filter(|&v| adjacency[u * n + v]).collect())
            .collect();
        Graph {
            n,
            adjacency,
            neighbors,
            name: None,
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Graph {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u * self.n + v]
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.neighbors[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.neighbors[u].len()
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors[u]
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// Row-major adjacency matrix.
    pub fn adjacency(&self) -> &[bool] {
        &self.adjacency
    }

    /// Checks the standing assumptions (connected, regular, `2 <= n <= max_n`).
    pub fn validate(self, max_n: usize) -> Result<ValidatedGraph, ValidationError> {
        let n = self.n;
        if n < 2 {
            return Err(ValidationError::TooSmall { n });
        }
        if n > max_n {
            return Err(ValidationError::TooLarge { n, max: max_n });
        }
        let d0 = self.degree(0);
        if let Some(v) = (1..n).find(|&v| self.degree(v) != d0) {
            return Err(ValidationError::Irregular {
                u: 0,
                du: d0,
                v,
                dv: self.degree(v),
            });
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &w in &self.neighbors[u] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if let Some(unreachable) = seen.iter().position(|s| !s) {
            return Err(ValidationError::Disconnected { unreachable });
        }
        Ok(ValidatedGraph {
            graph: self,
            degree: d0,
        })
    }
}

/// A connected regular graph with at least two vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidatedGraph {
    graph: Graph,
    degree: usize,
}

impl ValidatedGraph {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn order(&self) -> usize {
        self.graph.n
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        self.graph.neighbors(u)
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.graph.is_adjacent(u, v)
    }

    pub fn name(&self) -> Option<&str> {
        self.graph.name()
    }

    pub fn into_inner(self) -> Graph {
        self.graph
    }
}
