use thiserror::Error;

/// Errors raised by the library layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("denominator {denominator} is not invertible modulo {modulus}")]
    NonInvertibleDenominator {
        denominator: String,
        modulus: String,
    },

    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(String),

    #[error("mixed moduli {0} and {1} in residue arithmetic")]
    ModulusMismatch(String, String),

    #[error("{0} is not an odd prime")]
    NotOddPrime(String),

    #[error("operator has no coefficients or a zero leading coefficient")]
    ZeroLeadingCoefficient,

    #[error("insufficient terms: need at least {needed}, got {got}")]
    InsufficientTerms { needed: usize, got: usize },

    #[error("operator is not power-partible: {0}")]
    NotPartible(String),

    #[error("unknown sequence family `{0}`")]
    UnknownFamily(String),

    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("JSON error at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid operator description: {0}")]
    InvalidOperator(String),

    #[error("reduction identity failed to reassemble: {0}")]
    AuditFailure(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
