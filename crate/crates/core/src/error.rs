use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Argument outside the domain of the operation (gamma pole, bad
    /// polynomial spec, dimension mismatch).
    #[error("domain error: {0}")]
    Domain(String),

    /// A series or integral was refused because its parameters lie outside
    /// the convergence region.
    #[error("outside convergence region: {0}")]
    NonConvergent(String),

    /// Mutually inconsistent over-determined parameter input.
    #[error("inconsistent parameters: {0}")]
    Inconsistent(String),

    /// Integer overflow in exact dimension arithmetic.
    #[error("integer overflow: {0}")]
    Overflow(String),
}

pub type Result<T> = std::result::Result<T, Error>;
