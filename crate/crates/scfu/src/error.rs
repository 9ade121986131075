use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScfError {
    #[error("label {0} occurs more than once")]
    DuplicateLabel(u8),

    #[error("subset contains label {0}, which is not in the ground set")]
    InvalidSubset(u8),

    #[error("arc set is not valid for the order: {0}")]
    IncompatibleArcSet(String),

    #[error("ground sets differ")]
    GroundMismatch,

    #[error("ground sets overlap")]
    GroundOverlap,

    #[error("basis mismatch: {0} vs {1}")]
    BasisMismatch(String, String),

    #[error("invalid set composition")]
    InvalidComposition,

    #[error("arc sets are not comparable in the atomic-connection order")]
    NotComparable,

    #[error("pair is not atomic")]
    NotAtomic,

    #[error("label {0} is not in the ground set")]
    LabelNotInGround(u8),

    #[error("order admits no arc factorization for this arc set")]
    NoFactorization,

    #[error("division by zero")]
    DivisionByZero,

    #[error("evaluation hits a pole")]
    Pole,

    #[error("size mismatch: expected {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },

    #[error("linear solve failed: {0}")]
    Singular(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, ScfError>;
