use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("point set is not full-dimensional: affine rank {rank} in dimension {dim}")]
    NotFullDimensional { rank: usize, dim: usize },

    #[error("polytope is not reflexive")]
    NotReflexive,

    #[error("dimension {got} out of range {min}..={max} for {family}")]
    DimensionOutOfRange { family: String, got: usize, min: usize, max: usize },

    #[error("unknown name: {0}")]
    UnknownName(String),

    #[error("lattice points generate a sublattice of index {0}, expected 1")]
    LatticeIndexNotOne(String),

    #[error("data vector has zero sample size")]
    ZeroSampleSize,

    #[error("degenerate data: {0}")]
    DegenerateData(String),

    #[error("scaling parameter must be nonzero: {0}")]
    ZeroParameter(String),

    #[error("Bezout number {bezout} exceeds the path cap {cap}")]
    TooManyPaths { bezout: u128, cap: u64 },

    #[error("Newton iteration did not converge (residual {residual:e})")]
    NoConvergence { residual: f64 },

    #[error("malformed block at line {line}: {message}")]
    MalformedBlock { line: usize, message: String },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
