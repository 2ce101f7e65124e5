use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QmcError {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A value is internally inconsistent, e.g. a filling that does not fit its shape.
    #[error("structural error: {0}")]
    Structural(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("state space of dimension {dim} exceeds the limit {limit}")]
    SizeGuard { dim: u128, limit: u128 },

    #[error(
        "power iteration did not converge after {iterations} iterations \
         (last Rayleigh quotient {rayleigh}, residual {residual})"
    )]
    Convergence {
        iterations: usize,
        rayleigh: f64,
        residual: f64,
    },
}

pub type Result<T, E = QmcError> = std::result::Result<T, E>;

pub(crate) fn domain(msg: impl Into<String>) -> QmcError {
    QmcError::Domain(msg.into())
}
