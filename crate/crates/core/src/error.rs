use thiserror::Error;

/// Errors raised by the Verlinde ring machinery.
///
/// Variants split into two families: bad input from the caller, and failed
/// internal assertions (an integrality or exact-division check that is a
/// theorem, so its failure points at a bug or at inconsistent input data).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("{0} needs an odd prime p; p = 2 is not supported here")]
    EvenPrime(&'static str),
    #[error("characteristic mismatch: p = {0} vs p = {1}")]
    PrimeMismatch(u32, u32),
    #[error("{0}")]
    OutOfRange(String),
    #[error("Laurent polynomial is not symmetric under z -> 1/z")]
    NotSymmetric,
    #[error("virtual class given where an actual object is required")]
    NotEffective,
    #[error("exponent {k} is not a unit modulo {modulus}")]
    NotCoprime { k: i64, modulus: i64 },
    #[error("matrix is not unipotent of order dividing p")]
    NotUnipotent,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("integrality assertion failed: {0}")]
    NonIntegral(String),
    #[error("exact division left a nonzero remainder: {0}")]
    InexactDivision(String),
}

impl Error {
    /// True for failed internal assertions, as opposed to rejected input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::NonIntegral(_) | Error::InexactDivision(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
