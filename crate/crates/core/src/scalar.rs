//! Floating-point scalar abstraction.
//!
//! All numerical code is generic over [`Real`], which is implemented for
//! `f32` and `f64`. Exact quantities (walk counts, intersection numbers,
//! class sizes) never go through this trait; they use integers and
//! `BigRational`.

use nalgebra::RealField;
use num_traits::{FromPrimitive, ToPrimitive};

/// Real scalar usable by the spectral and polynomial code.
pub trait Real: RealField + Copy + FromPrimitive + ToPrimitive + Send + Sync {
    /// Lossy conversion from `f64`.
    fn of(x: f64) -> Self {
        <Self as FromPrimitive>::from_f64(x).expect("f64 is representable")
    }

    /// Conversion to `f64` (exact for `f32` and `f64`).
    fn f64(self) -> f64 {
        ToPrimitive::to_f64(&self).expect("finite scalar")
    }

    fn of_usize(x: usize) -> Self {
        Self::of(x as f64)
    }

    /// Machine epsilon of the underlying type.
    fn eps() -> f64;
}

impl Real for f32 {
    fn eps() -> f64 {
        f32::EPSILON as f64
    }
}

impl Real for f64 {
    fn eps() -> f64 {
        f64::EPSILON
    }
}
