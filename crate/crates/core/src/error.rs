use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not Hermitian (max |M - M^dagger| = {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("invalid quantum state: {0}")]
    InvalidState(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error(
        "quadrature failed to reach tolerance {requested:e} (achieved {achieved:e} after {intervals} intervals)"
    )]
    QuadratureFailure {
        requested: f64,
        achieved: f64,
        intervals: usize,
    },

    #[error("spectral amplitudes live on different k-grids")]
    GridMismatch,
}

impl Error {
    pub(crate) fn bad(msg: impl Into<String>) -> Self {
        Error::BadParameter(msg.into())
    }
}
