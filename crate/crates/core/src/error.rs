use thiserror::Error;

/// Errors surfaced by the numerical toolkit.
#[derive(Debug, Error)]
pub enum CoreError {
    /// An argument left the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A certified accuracy target cannot be met with the given resources
    /// (lattice cutoff, quadrature order, occupation cutoff).
    #[error("accuracy error: {0}")]
    Accuracy(String),

    /// An iterative solver failed to converge. Bracketed monotone solves
    /// should never hit this; it indicates an internal bug.
    #[error("convergence error (internal): {0}")]
    Convergence(String),

    /// A resource limit (shell count, Fock dimension) would be exceeded.
    #[error("resource error: {0}")]
    Resource(String),

    /// A spectral prediction was requested for the wrong phase.
    #[error("regime mismatch: {0}")]
    RegimeMismatch(String),

    /// Correlator pattern not covered by the closed forms.
    #[error("unsupported pattern: {0}")]
    UnsupportedPattern(String),

    /// Occupation-number truncation too tight for the requested state.
    #[error("truncation error: {0}")]
    Truncation(String),

    /// Malformed input data (interaction file, config file, pattern text).
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, CoreError>;
