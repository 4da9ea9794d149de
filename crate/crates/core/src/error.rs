use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0} vs {1}")]
    Dimension(usize, usize),

    #[error("unsupported qubit count {0}")]
    UnsupportedQubits(usize),

    #[error("operator {0} does not have a real matrix")]
    NotReal(String),

    #[error("operators {0} and {1} do not commute")]
    NotCommuting(String, String),

    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),

    #[error("operator set is not maximal: an eigenspace of dimension {0} remains")]
    Degenerate(usize),

    #[error("zero vector")]
    ZeroVector,

    #[error("invalid basis {ids:?}: {reason}")]
    InvalidBasis { ids: Vec<usize>, reason: String },

    #[error("unknown ray id {0}")]
    UnknownRay(usize),

    #[error("squared distance {0} is not in the spectrum")]
    OutOfSpectrum(String),

    #[error("kernel dimension {dim} exceeds the enumeration limit {max}")]
    Capacity { dim: usize, max: usize },

    #[error("unrecognised histogram signature {0:?}")]
    Classification(Vec<usize>),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("search failed after {0} restarts")]
    SearchFailed(usize),

    #[error("graph with {0} vertices exceeds the automorphism search bound {1}")]
    GraphTooLarge(usize, usize),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
