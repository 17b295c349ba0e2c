use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid branch configuration: {0}")]
    InvalidConfig(String),

    #[error("non-integral invariant: {name} = {value}")]
    NonIntegralInvariant { name: &'static str, value: String },

    #[error("out of regime: {0}")]
    OutOfRegime(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("parity mismatch: multiplicity {mult} and degree {degree} must both be even")]
    ParityMismatch { degree: i64, mult: i64 },

    #[error("unknown case label {0:?}")]
    UnknownCase(String),
}

pub type Result<T> = std::result::Result<T, Error>;
