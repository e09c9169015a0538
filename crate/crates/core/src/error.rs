use thiserror::Error;

/// Errors raised by the algebra routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed arguments: negative exponents, arity mismatches, non-permutations.
    #[error("invalid input: {0}")]
    Input(String),
    /// Well-formed arguments outside the domain of the operation (e.g. `pd` of the zero ideal).
    #[error("outside domain: {0}")]
    Domain(String),
    /// A mathematical invariant failed to hold; indicates a bug in this crate.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn arity_mismatch(left: usize, right: usize) -> Error {
    Error::Input(format!("arity mismatch: {left} vs {right}"))
}
