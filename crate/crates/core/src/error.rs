use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid factorization energy {0}: the transform requires ε < -1 (ε ≤ -1 - 1e-9)")]
    InvalidEpsilon(f64),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("grid too narrow: |ψ(x_max)| / max|ψ| = {ratio:e} exceeds {limit:e}")]
    GridTooNarrow { ratio: f64, limit: f64 },

    #[error("eigenvalue bisection did not converge below {tolerance:e} in {iterations} iterations (width {width:e})")]
    ConvergenceFailure {
        tolerance: f64,
        iterations: usize,
        width: f64,
    },

    #[error("expected {expected} bound states below 0, found {found}")]
    BoundStateCountMismatch { expected: usize, found: usize },

    #[error("at most {max} eigenpairs may be requested, got {requested}")]
    TooManyEigenpairs { requested: usize, max: usize },
}
