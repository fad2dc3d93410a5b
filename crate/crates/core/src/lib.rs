//! Spectrum-based separability criteria for bipartite density matrices.
//!
//! The crate provides a small dense complex linear-algebra kernel ([`linalg`]),
//! the separability tests built on top of it ([`criteria`]), constructors for
//! Werner states and their separable isospectral counterparts ([`states`]),
//! and the two-qubit controlled-phase family ([`twoqubit`]).

pub mod criteria;
pub mod error;
pub mod linalg;
pub mod random;
pub mod states;
pub mod twoqubit;

pub use error::{Error, Result};
pub use linalg::{BipartiteState, ComplexMatrix, Spectrum, Subsystem, C64};

/// Absolute tolerance for Hermiticity, positivity and rank decisions.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Equality band for sign verdicts on entropic quantities.
pub const SIGN_EPS: f64 = 1e-8;
