use thiserror::Error;

/// Errors raised by the arithmetic and curve routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("odd prime required, got {0}")]
    NotOddPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("GF({p}^{m}) exceeds the native element size")]
    FieldTooLarge { p: u64, m: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero polynomial not allowed in {0}")]
    ZeroPolynomial(&'static str),
    #[error("polynomial {0} is reducible")]
    Reducible(String),
    #[error("singular model: discriminant vanishes")]
    Singular,
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("element has a pole at {0}")]
    Pole(String),
    #[error("criterion inapplicable: {0}")]
    CriterionInapplicable(String),
    #[error("inconsistent local data: {0}")]
    Inconsistent(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
