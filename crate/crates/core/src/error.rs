use crate::polycore::parse::ParseError;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("variable count mismatch: expected {expected}, got {got}")]
    VariableMismatch { expected: usize, got: usize },
    #[error("variable index {index} out of range for {n} variables")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("invalid weights: {0}")]
    InvalidWeights(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("singularity is not isolated (no stabilization up to truncation {cap})")]
    NonIsolated { cap: usize },
    #[error("all partial derivatives vanish")]
    ZeroJacobian,
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("degenerate Newton boundary: {0}")]
    Degenerate(String),
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    #[error("inconsistent results: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
