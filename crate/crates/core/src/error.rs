use thiserror::Error;

/// Errors raised anywhere in the engine. Mathematical failures carry enough
/// context (usually the offending object rendered as text) to reproduce them.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),

    #[error("operation requires a prime field, got the rationals")]
    RationalField,

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("all forms are zero")]
    AllZero,

    #[error("twist cap {cap} exceeded while scanning {what}")]
    TwistCapExceeded { cap: i64, what: String },

    #[error("splitting reconstruction inconsistent: {0}")]
    Inconsistent(String),

    #[error("malformed cocycle: {0}")]
    MalformedCocycle(String),

    #[error("characteristic {p} divides the curve degree {e}")]
    CharDividesDegree { p: u64, e: i64 },

    #[error("parametrization is ramified: {0}")]
    Ramified(String),

    #[error("not smooth along the curve: {0}")]
    NotSmooth(String),

    #[error("invalid presentation: {0}")]
    Presentation(String),

    #[error("normal splitting unavailable: {0}")]
    NoNormalSplitting(String),

    #[error("parameters out of range: {0}")]
    OutOfRange(String),

    #[error("no solution: {0}")]
    NoSolution(String),
}

pub type Result<T> = std::result::Result<T, Error>;
