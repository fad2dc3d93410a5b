//! Dense complex linear algebra: matrices, tensor products, partial
//! trace/transpose, and the Hermitian eigensolver.
//!
//! Index convention throughout: subsystem A is the slow (left) tensor factor,
//! so the product basis vector |i, k> sits at index `i * dim_b + k`.

mod eigen;
mod matrix;
mod state;

pub use eigen::{
    eigvalsh, expm_hermitian, hermitian_eig, matrix_power, HermitianEigen, MatrixPower, PowerTrace, Spectrum,
    MAX_SWEEPS,
};
pub use matrix::{kron, ComplexMatrix, C64};
pub use state::{partial_trace, partial_transpose, schmidt_coefficients, BipartiteState, Subsystem};
