use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not Hermitian: max |M - M^dagger| = {deviation:e} exceeds tolerance {tol:e}")]
    NotHermitian { deviation: f64, tol: f64 },

    #[error("trace is {trace} but a density matrix needs trace 1 (tolerance {tol:e})")]
    TraceNotOne { trace: f64, tol: f64 },

    #[error("matrix is not positive semidefinite: minimum eigenvalue {min_eig:e} below -{tol:e}")]
    NotPositive { min_eig: f64, tol: f64 },

    #[error("Jacobi eigensolver did not converge within {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("vector is not normalized: squared norm {norm_sq}")]
    NotNormalized { norm_sq: f64 },

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid spectrum blocks: {0}")]
    InvalidBlocks(String),

    #[error("unknown {kind} '{name}'")]
    Unknown { kind: &'static str, name: String },
}

impl Error {
    /// True for errors that say the input matrix is not a valid density matrix.
    pub fn is_invalid_state(&self) -> bool {
        matches!(
            self,
            Error::DimensionMismatch(_)
                | Error::NotHermitian { .. }
                | Error::TraceNotOne { .. }
                | Error::NotPositive { .. }
        )
    }
}
