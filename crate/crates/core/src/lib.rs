//! Almost distance-regularity of finite regular graphs.
//!
//! The pipeline is
//! graph6 line → [`Graph`] → [`ValidatedGraph`] → [`Spectrum`] →
//! [`PredistanceSystem`] → [`ClassificationReport`].
//! Numerical code is generic over the scalar type ([`Real`], implemented
//! for `f32` and `f64`); combinatorial quantities are exact.

pub mod classify;
pub mod error;
pub mod graph;
pub mod predistance;
pub mod scalar;
pub mod spectral;
pub mod tolerance;

pub use classify::{classify, classify_as, Analysis, ClassificationReport};
pub use error::{Error, ParseError, SpectralError, ValidationError};
pub use graph::{encode_graph6, parse_graph6, DistanceStructure, Graph, ValidatedGraph};
pub use predistance::{build_predistance, PredistanceSystem};
pub use scalar::Real;
pub use spectral::{MultiplicityTable, Spectrum, WalkTable};
pub use tolerance::Tolerances;

pub type Spectrum64 = Spectrum<f64>;
pub type Spectrum32 = Spectrum<f32>;
pub type Analysis64 = Analysis<f64>;
pub type Analysis32 = Analysis<f32>;
pub type PredistanceSystem64 = PredistanceSystem<f64>;
pub type PredistanceSystem32 = PredistanceSystem<f32>;
