//! Named state constructors.

mod counterpart;
mod registry;
mod werner;

pub use counterpart::{
    isospectral_counterpart, me_basis_state, separable_projector, separable_projector_from_basis, werner_counterpart,
    SpectrumBlocks,
};
pub use registry::{StateBuilder, StateRegistry};
pub use werner::{antisymmetric_projector, flip_operator, symmetric_projector, werner, werner_from, WernerParams};

use crate::error::Result;
use crate::linalg::{BipartiteState, ComplexMatrix, C64};

/// |Phi+> = (|00> + |11>)/sqrt(2).
pub fn phi_plus_vector() -> Vec<C64> {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let z = C64::new(0.0, 0.0);
    vec![C64::new(h, 0.0), z, z, C64::new(h, 0.0)]
}

pub fn phi_plus() -> BipartiteState {
    BipartiteState::from_pure(&phi_plus_vector(), 2, 2).expect("normalized")
}

/// I / (dA dB).
pub fn maximally_mixed(dim_a: usize, dim_b: usize) -> BipartiteState {
    let n = dim_a * dim_b;
    BipartiteState::new(ComplexMatrix::identity(n).scale_real(1.0 / n as f64), dim_a, dim_b)
        .expect("maximally mixed state is valid")
}

/// (|Phi+><Phi+| + |01><01|) / 2, a rank-two two-qubit state with
/// marginal spectrum {1/4, 3/4}.
pub fn rank_counterexample() -> Result<BipartiteState> {
    let mut rho = ComplexMatrix::outer(&phi_plus_vector());
    rho[(1, 1)] += C64::new(1.0, 0.0);
    BipartiteState::new(rho.scale_real(0.5), 2, 2)
}
