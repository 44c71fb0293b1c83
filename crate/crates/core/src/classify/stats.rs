use nalgebra::DMatrix;

use crate::graph::DistanceStructure;
use crate::scalar::Real;
use crate::spectral::Spectrum;

/// Range and sum of one matrix over one distance class.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassRange {
    pub min: f64,
    pub max: f64,
    /// Sum over ordered pairs in the class.
    pub sum: f64,
}

impl ClassRange {
    const EMPTY: ClassRange = ClassRange {
        min: f64::INFINITY,
        max: f64::NEG_INFINITY,
        sum: 0.0,
    };

    /// `max |x - target|` over the class.
    pub fn deviation(&self, target: f64) -> f64 {
        (self.max - target).abs().max((self.min - target).abs())
    }

    pub fn spread(&self) -> f64 {
        self.max - self.min
    }
}

/// Per-class statistics of the matrices `f_k(A) = sum_j f_k(lambda_j) E_j`
/// for a family of polynomials given by their values at the eigenvalues.
///
/// One pass over the pairs `u <= v`; no `n x n` matrix per polynomial is
/// ever formed.
#[derive(Debug, Clone)]
pub(crate) struct ClassStats {
    ranges: Vec<Vec<ClassRange>>,
}

const BLOCK: usize = 2048;

impl ClassStats {
    /// `values` has one column per polynomial and one row per eigenvalue.
    pub fn new<T: Real>(s: &Spectrum<T>, ds: &DistanceStructure, values: &DMatrix<T>) -> ClassStats {
        let n = s.order();
        let width = s.d() + 1;
        let count = values.ncols();
        let mut ranges = vec![vec![ClassRange::EMPTY; ds.diameter() + 1]; count];
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u..n).map(move |v| (u, v))).collect();
        for chunk in pairs.chunks(BLOCK) {
            let m = DMatrix::from_fn(chunk.len(), width, |r, j| {
                let (u, v) = chunk[r];
                s.idempotent(j)[(u, v)]
            });
            let out = m * values;
            for (r, &(u, v)) in chunk.iter().enumerate() {
                let h = ds.dist(u, v);
                let weight = if u == v { 1.0 } else { 2.0 };
                for (k, range) in ranges.iter_mut().enumerate() {
                    let x = out[(r, k)].f64();
                    let c = &mut range[h];
                    c.min = c.min.min(x);
                    c.max = c.max.max(x);
                    c.sum += weight * x;
                }
            }
        }
        ClassStats { ranges }
    }

    pub fn range(&self, k: usize, h: usize) -> &ClassRange {
        &self.ranges[k][h]
    }
}
