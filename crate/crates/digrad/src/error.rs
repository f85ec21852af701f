//! Error type shared across the crate.

use thiserror::Error;

/// Failure modes of graph construction, weight building, iteration, and the
/// experiment harness.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed structural input: out-of-range indices, dimension
    /// mismatches, missing self-loops.
    #[error("structural input error: {0}")]
    Structure(String),

    /// Invalid scalar parameter (step size, momentum, tolerance, counts).
    #[error("parameter error: {0}")]
    Parameter(String),

    /// A numerical routine failed to converge or met a singular quantity.
    #[error("numerical error: {0}")]
    Numerical(String),

    /// An iterate became non-finite, typically from an oversized step size.
    #[error("divergence at iteration {iteration}: max |entry| reached {max_abs:e}")]
    Divergence { iteration: usize, max_abs: f64 },

    /// Reference solver stopped before reaching the requested gradient norm.
    #[error("convergence failure: gradient norm {grad_norm:e} after {iterations} iterations (tol {tol:e})")]
    Convergence {
        grad_norm: f64,
        iterations: usize,
        tol: f64,
    },

    /// Every tuning candidate diverged or missed the target.
    #[error("tuning failure: {0}")]
    Tuning(String),

    /// Run configuration failed validation.
    #[error("config validation error: {0}")]
    Validation(String),

    /// File I/O failure, annotated with the path involved.
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    /// JSON (de)serialization failure.
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Exit-code category for the CLI: 2 validation, 3 convergence/numerics,
    /// 4 i/o.
    pub fn category_code(&self) -> i32 {
        match self {
            Error::Structure(_) | Error::Parameter(_) | Error::Validation(_) => 2,
            Error::Numerical(_)
            | Error::Divergence { .. }
            | Error::Convergence { .. }
            | Error::Tuning(_) => 3,
            Error::Io { .. } | Error::Json(_) => 4,
        }
    }

    pub(crate) fn io(path: &std::path::Path, source: std::io::Error) -> Self {
        Error::Io {
            path: path.display().to_string(),
            source,
        }
    }
}
