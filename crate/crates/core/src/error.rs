use thiserror::Error;

/// Errors produced by constructors, evaluators and solvers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid exponent: {0}")]
    InvalidExponent(String),

    #[error("invalid measure space: {0}")]
    InvalidSpace(String),

    #[error("domain mismatch: {0}")]
    DomainMismatch(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("unsupported variant: {0}")]
    UnsupportedVariant(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid curve: {0}")]
    InvalidCurve(String),

    #[error("curve family is empty")]
    EmptyFamily,

    #[error("brute-force search refused: {0}")]
    BruteForceRefused(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("linear program failed: {0}")]
    LinearProgram(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
