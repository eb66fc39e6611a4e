use thiserror::Error;

/// Errors produced by the operator lab.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("mass must be positive and finite, got {0}")]
    NonPositiveMass(f64),
    #[error("axis must be a unit vector, got norm {0}")]
    NonUnitAxis(f64),
    #[error("invalid Lorentz matrix: {0}")]
    InvalidLorentz(String),
    #[error("matrix is not a spatial rotation: {0}")]
    NotARotation(String),
    #[error("momentum grids do not match")]
    GridMismatch,
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("finite-difference step {0:e} underflows at this momentum")]
    FdStepUnderflow(f64),
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),
    #[error("operator has no analytic derivative: {0}")]
    NoAnalyticDerivative(String),
    #[error("displacement {0} is not commensurate with the grid reciprocal lattice")]
    IncommensurateDisplacement(f64),
    #[error("packet is not single-branch; the field position operator is branch-defined")]
    MixedBranch,
    #[error("invalid packet: {0}")]
    InvalidPacket(String),
    #[error("insufficient tail range: {0}")]
    InsufficientTail(String),
    #[error("cannot parse transformation word: {0}")]
    WordParse(String),
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
