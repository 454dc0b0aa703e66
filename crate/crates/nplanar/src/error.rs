//! Error type shared by every module.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Plane indices carried by errors are 1-based, matching the k = 1..n/2
/// numbering of the canonical planes.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension must be even and at least 2, got {0}")]
    InvalidDimension(usize),

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("coefficients must be finite")]
    NonFiniteCoeffs,

    #[error("coefficient count {got} does not match dimension {n}")]
    CoeffCountMismatch { n: usize, got: usize },

    #[error("axis index {k} out of range 1..{n}")]
    AxisOutOfRange { k: usize, n: usize },

    #[error("nodal singularity: vanishing radius in plane(s) {0:?}")]
    NodalSingularity(Vec<usize>),

    #[error("overflow of the real exponent range")]
    Overflow,

    #[error("convergence radius undefined: no usable trailing coefficient ratio")]
    UndefinedRadius,

    #[error("argument outside the convergence cylinder in plane(s) {0:?}")]
    OutsideConvergence(Vec<usize>),

    #[error("quadrature stalled at {max_samples} samples, last delta {last_delta:e}")]
    NonConvergence { max_samples: usize, last_delta: f64 },

    #[error("path sample {sample} lies within tolerance of a declared singularity")]
    SingularPath { sample: usize },

    #[error("point lies on the loop within tolerance")]
    OnBoundary,

    #[error("path needs at least two points")]
    PathTooShort,

    #[error("closed path must end where it starts")]
    PathNotClosed,

    #[error("root iteration failed to converge within {0} iterations")]
    RootsDiverged(usize),

    #[error("roots do not reproduce the coefficients: Vieta residual {0:e}")]
    VietaResidual(f64),

    #[error("assembly count {count} exceeds enumeration limit {limit}")]
    AssemblyOverflow { count: u128, limit: usize },

    #[error("leading coefficient is not invertible")]
    NonInvertibleLeading,

    #[error("polynomial or series must have at least one coefficient")]
    Empty,

    #[error("off-block leakage {max_off_block:e} above tolerance")]
    BlockStructureViolation { max_off_block: f64 },
}
