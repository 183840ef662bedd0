//! Crate-wide error type.

use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A physical or numerical parameter is out of its valid domain.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// A basis truncation (charge cutoff, grid, oscillator levels) is too
    /// coarse for a converged answer.
    #[error("invalid truncation: {0}")]
    InvalidTruncation(String),

    /// An operator failed a structural requirement (hermiticity, unitarity,
    /// dimension match).
    #[error("invalid operator: {0}")]
    InvalidOperator(String),

    /// Inputs sit at or near a pole of an analytic expression, or outside the
    /// regime in which the expression is meaningful.
    #[error("invalid regime: {0}")]
    InvalidRegime(String),

    /// A time grid violates the integrator step-size rule.
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    /// Rates describe an unphysical channel (e.g. Γ₂ < Γ₁/2).
    #[error("invalid rates: {0}")]
    InvalidRates(String),

    /// NaN or divergence encountered during numerics.
    #[error("numeric failure: {0}")]
    NumericFailure(String),

    /// Adaptive quadrature failed to converge.
    #[error("quadrature failure: {0}")]
    QuadratureFailure(String),

    /// Nonlinear least squares failed to converge.
    #[error("fit failure: {0}")]
    FitFailure(String),

    /// A gate sequence cannot be compiled.
    #[error("compile error: {0}")]
    CompileError(String),

    /// Demodulation window is too short or misplaced.
    #[error("insufficient window: {0}")]
    InsufficientWindow(String),

    /// Degenerate shot statistics (zero-width clusters and similar).
    #[error("statistics error: {0}")]
    StatisticsError(String),

    /// A configuration file failed validation; the field path is included.
    #[error("config error at `{field}`: {message}")]
    Config { field: String, message: String },
}

impl Error {
    pub fn config(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Config {
            field: field.into(),
            message: message.into(),
        }
    }
}

/// Crate-wide result alias.
pub type Result<V> = std::result::Result<V, Error>;
