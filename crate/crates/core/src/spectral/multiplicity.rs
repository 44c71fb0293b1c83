use nalgebra::DMatrix;

use crate::graph::DistanceStructure;
use crate::scalar::Real;
use crate::spectral::Spectrum;

/// Local multiplicities and their averages over distance classes.
///
/// Crossed multiplicities `m_uv(lambda_i)` are entries of the idempotents and
/// are read through [`Spectrum::crossed`].
#[derive(Debug, Clone)]
pub struct MultiplicityTable<T: Real> {
    local: DMatrix<T>,
    averages: DMatrix<T>,
    spread: DMatrix<T>,
}

impl<T: Real> MultiplicityTable<T> {
    pub fn new(s: &Spectrum<T>, ds: &DistanceStructure) -> MultiplicityTable<T> {
        let n = s.order();
        let width = s.d() + 1;
        let diameter = ds.diameter();
        let local = DMatrix::from_fn(n, width, |u, i| s.crossed(u, u, i));
        let mut sums = DMatrix::<T>::zeros(diameter + 1, width);
        let mut lo = DMatrix::from_element(diameter + 1, width, T::max_value().unwrap());
        let mut hi = DMatrix::from_element(diameter + 1, width, T::min_value().unwrap());
        for (i, e) in s.idempotents().iter().enumerate() {
            for v in 0..n {
                for u in 0..n {
                    let h = ds.dist(u, v);
                    let x = e[(u, v)];
                    sums[(h, i)] += x;
                    if x < lo[(h, i)] {
                        lo[(h, i)] = x;
                    }
                    if x > hi[(h, i)] {
                        hi[(h, i)] = x;
                    }
                }
            }
        }
        let averages = DMatrix::from_fn(diameter + 1, width, |h, i| {
            sums[(h, i)] / T::of_usize(ds.class_size(h))
        });
        let spread = hi - lo;
        MultiplicityTable {
            local,
            averages,
            spread,
        }
    }

    /// `m_u(lambda_i)`.
    pub fn local(&self, u: usize, i: usize) -> T {
        self.local[(u, i)]
    }

    pub fn local_matrix(&self) -> &DMatrix<T> {
        &self.local
    }

    /// Average crossed multiplicity `m_hi` over ordered pairs at distance `h`.
    pub fn average(&self, h: usize, i: usize) -> T {
        self.averages[(h, i)]
    }

    pub fn averages(&self) -> &DMatrix<T> {
        &self.averages
    }

    /// `max - min` of `m_uv(lambda_i)` over pairs at distance `h`.
    pub fn spread(&self, h: usize, i: usize) -> T {
        self.spread[(h, i)]
    }

    /// Whether `m_uv(lambda_i)` is constant (within `tol`) over the distance-`h`
    /// class for every `i`.
    pub fn constant_on_class(&self, h: usize, tol: f64) -> bool {
        (0..self.spread.ncols()).all(|i| self.spread[(h, i)].f64() <= tol)
    }

    /// Whether every local multiplicity `m_u(lambda_i)` is independent of `u`.
    pub fn spectrum_regular(&self, tol: f64) -> bool {
        self.constant_on_class(0, tol)
    }
}
