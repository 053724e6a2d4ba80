use thiserror::Error;

/// Errors raised by the exact-arithmetic, enumerator, zeta and verification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("mismatched quadratic base: sqrt({0}) vs sqrt({1})")]
    BaseMismatch(u64, u64),

    #[error("invalid base q = {0}, expected q >= 2")]
    InvalidBase(u64),

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("reciprocal length {m} is smaller than the degree {degree}")]
    ReciprocalLength { m: usize, degree: usize },

    #[error("denominator series has zero constant term")]
    SeriesNotInvertible,

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("invalid weight enumerator: {0}")]
    InvalidEnumerator(String),

    #[error("enumerators are not a MacWilliams dual pair: {0}")]
    NotDualPair(String),

    #[error("coefficient cancelled to zero: {0}")]
    Cancellation(String),

    #[error("singular linear system at unknown {0}")]
    SingularSystem(usize),

    #[error("inconsistent code parameters: {0}")]
    InconsistentParams(String),

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: String, found: String },

    #[error("polynomial is not palindromic in the pullback basis of size {0}")]
    NotPalindromic(usize),

    #[error("coefficient layout mismatch: {0}")]
    Layout(String),
}

pub type Result<T> = std::result::Result<T, Error>;
