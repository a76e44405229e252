use thiserror::Error;

/// Errors raised by the exact-arithmetic kernel and everything built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at evaluation point {0}")]
    PoleAtEvaluation(String),
    #[error("mixed field variants: {0} and {1}")]
    MixedVariants(&'static str, &'static str),
    #[error("series is not invertible: constant term is zero")]
    NonInvertibleSeries,
    #[error("series order mismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("Apostol-Euler kernel has a pole at lambda = -1")]
    EulerPole,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("unknown identity: {0}")]
    UnknownIdentity(String),
    #[error("grid out of bounds: {0}")]
    OutOfBounds(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("unknown format: {0}")]
    UnknownFormat(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
