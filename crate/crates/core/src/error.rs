use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty graph6 line")]
    Empty,
    #[error("byte {offset}: character {byte:#04x} outside the graph6 range 63..=126")]
    BadCharacter { offset: usize, byte: u8 },
    #[error("byte {offset}: malformed size header")]
    BadHeader { offset: usize },
    #[error("byte {offset}: bit vector truncated (expected {expected} data bytes, found {found})")]
    Truncated {
        offset: usize,
        expected: usize,
        found: usize,
    },
    #[error("byte {offset}: {extra} unexpected trailing data bytes")]
    TrailingData { offset: usize, extra: usize },
    #[error("byte {offset}: padding bits in the last data byte are not zero")]
    NonZeroPadding { offset: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("graph has {n} vertices; at least 2 are required")]
    TooSmall { n: usize },
    #[error("graph has {n} vertices, above the configured limit of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("graph is disconnected (vertex {unreachable} not reachable from vertex 0)")]
    Disconnected { unreachable: usize },
    #[error("graph is irregular: vertex {u} has degree {du}, vertex {v} has degree {dv}")]
    Irregular {
        u: usize,
        du: usize,
        v: usize,
        dv: usize,
    },
    #[error("adjacency matrix is not symmetric with zero diagonal at ({u}, {v})")]
    NotSimple { u: usize, v: usize },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error(
        "ambiguous eigenvalue clustering: gap {gap:.3e} between {upper} and {lower} lies in the band ({lo:.1e}, {hi:.1e})"
    )]
    ClusterAmbiguity {
        upper: f64,
        lower: f64,
        gap: f64,
        lo: f64,
        hi: f64,
    },
    #[error("eigensolver failure: {0}")]
    Eigensolver(String),
    #[error("largest eigenvalue {found} differs from the degree {degree}")]
    PerronMismatch { found: f64, degree: usize },
    #[error("invalid tolerance: {0}")]
    Tolerance(String),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PredistanceError {
    #[error("polynomial degree {degree} exceeds d = {d}")]
    DegreeOverflow { degree: usize, d: usize },
    #[error("normalization degenerate at degree {index}: q({lambda0}) = {value:.3e}")]
    NormalizationDegenerate {
        index: usize,
        lambda0: f64,
        value: f64,
    },
    #[error("recurrence coefficient gamma_{index} = {value:.3e} is not positive")]
    GammaNotPositive { index: usize, value: f64 },
    #[error("p_d vanishes at eigenvalue index {index}")]
    ZeroDenominator { index: usize },
    #[error("graph is not bipartite")]
    NotBipartite,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ClassifyError {
    #[error("distance class {h} is empty (diameter {diameter})")]
    EmptyDistanceClass { h: usize, diameter: usize },
    #[error("invalid (l, m) = ({l}, {m}): need m <= l <= d = {d} and m <= D = {diameter}")]
    InvalidRange {
        l: usize,
        m: usize,
        d: usize,
        diameter: usize,
    },
}

/// Any failure on the way from a graph6 line to a report.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("validation error: {0}")]
    Validation(#[from] ValidationError),
    #[error("spectral error: {0}")]
    Spectral(#[from] SpectralError),
    #[error("predistance error: {0}")]
    Predistance(#[from] PredistanceError),
    #[error("classification error: {0}")]
    Classify(#[from] ClassifyError),
}

impl Error {
    /// Rejections of the input graph, as opposed to numerical or internal failures.
    pub fn is_rejection(&self) -> bool {
        matches!(self, Error::Parse(_) | Error::Validation(_))
    }
}
