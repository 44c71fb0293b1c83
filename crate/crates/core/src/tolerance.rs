use serde::Serialize;

use crate::scalar::Real;

/// Numerical tolerances used throughout a classification run.
///
/// Exact (integer) tests never consult these values.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerances {
    /// Relative gap below which sorted eigenvalues are merged.
    pub eig_group: f64,
    /// Absolute tolerance for matrix identities and entry comparisons.
    pub mat: f64,
    /// Relative tolerance for equality in the distance-degree bounds.
    pub bound: f64,
    /// Largest accepted vertex count.
    pub max_n: usize,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            eig_group: 1e-9,
            mat: 1e-7,
            bound: 1e-6,
            max_n: 512,
        }
    }
}

impl Tolerances {
    /// Defaults scaled to the precision of `T`; identical to [`Default`] for `f64`.
    pub fn for_scalar<T: Real>() -> Self {
        if T::eps() > 1e-10 {
            Tolerances {
                eig_group: 1e-4,
                mat: 1e-3,
                bound: 1e-3,
                max_n: 512,
            }
        } else {
            Self::default()
        }
    }

    pub fn validate(&self) -> Result<(), String> {
        let ok = |x: f64| x.is_finite() && x > 0.0;
        if !ok(self.eig_group) || !ok(self.mat) || !ok(self.bound) {
            return Err("tolerances must be positive and finite".into());
        }
        if self.max_n < 2 {
            return Err("max_n must be at least 2".into());
        }
        Ok(())
    }
}
