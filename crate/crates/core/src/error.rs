use thiserror::Error;

/// Errors produced by constructors and fallible operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("zero has no multiplicative inverse")]
    NotInvertible,

    #[error("enumeration guard exceeded: {0}")]
    GuardExceeded(String),

    #[error("set is not invariant under multiplication by {r} mod {n}")]
    NotInvariant { r: u64, n: u64 },

    #[error("degenerate configuration: {0}")]
    Degenerate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
