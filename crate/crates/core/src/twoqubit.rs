//! Two-qubit states in the Pauli-correlation picture and the controlled-phase
//! family whose two members share spectrum and marginals but differ in
//! separability.

use crate::criteria::{CriterionRegistry, CriterionReport, EvalContext};
use crate::error::{Error, Result};
use crate::linalg::{eigvalsh, partial_transpose, BipartiteState, ComplexMatrix, Subsystem, C64};

/// Largest |r| for which the family matrices are positive semidefinite.
pub const POSITIVITY_BOUND: f64 = 0.375;

/// |r| above which the phase-gate image is entangled: sqrt(3)/8.
pub fn entanglement_threshold() -> f64 {
    3f64.sqrt() / 8.0
}

/// Slack allowed on |r| <= 3/8 when building family states.
pub const FAMILY_BAND: f64 = 1e-9;

/// sigma_0 = 1, sigma_1 = X, sigma_2 = Y = [[0, -i], [i, 0]], sigma_3 = Z.
pub fn pauli(i: usize) -> Result<ComplexMatrix> {
    let z = C64::new(0.0, 0.0);
    let one = C64::new(1.0, 0.0);
    let ii = C64::new(0.0, 1.0);
    let data = match i {
        0 => vec![one, z, z, one],
        1 => vec![z, one, one, z],
        2 => vec![z, -ii, ii, z],
        3 => vec![one, z, z, -one],
        _ => return Err(Error::IndexOutOfRange(format!("Pauli index {i} not in 0..=3"))),
    };
    ComplexMatrix::from_vec(2, 2, data)
}

fn pauli_unchecked(i: usize) -> ComplexMatrix {
    pauli(i).expect("index in range")
}

/// sigma_i ⊗ sigma_j.
pub fn pauli_product(i: usize, j: usize) -> Result<ComplexMatrix> {
    Ok(pauli(i)?.kron(&pauli(j)?))
}

/// R_ij = tr(rho sigma_i ⊗ sigma_j), i indexing subsystem A.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RMatrix {
    pub entries: [[f64; 4]; 4],
}

impl RMatrix {
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i][j]
    }

    /// The 3x3 correlation block T_ij, i, j in 1..=3.
    pub fn correlation_block(&self) -> [[f64; 3]; 3] {
        let mut t = [[0.0; 3]; 3];
        for (i, row) in t.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = self.entries[i + 1][j + 1];
            }
        }
        t
    }

    /// Bloch vector of subsystem A: (R_10, R_20, R_30).
    pub fn bloch_a(&self) -> [f64; 3] {
        [self.entries[1][0], self.entries[2][0], self.entries[3][0]]
    }

    /// Bloch vector of subsystem B: (R_01, R_02, R_03).
    pub fn bloch_b(&self) -> [f64; 3] {
        [self.entries[0][1], self.entries[0][2], self.entries[0][3]]
    }

    pub fn max_abs_diff(&self, other: &RMatrix) -> f64 {
        let mut m = 0.0_f64;
        for i in 0..4 {
            for j in 0..4 {
                m = m.max((self.entries[i][j] - other.entries[i][j]).abs());
            }
        }
        m
    }
}

/// Correlation matrix of an arbitrary 4x4 operator (no validity checks).
pub fn r_matrix_of(m: &ComplexMatrix) -> Result<RMatrix> {
    if m.rows() != 4 || m.cols() != 4 {
        return Err(Error::DimensionMismatch(format!(
            "R-matrix needs a 4x4 operator, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let mut entries = [[0.0; 4]; 4];
    for (i, row) in entries.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            let sij = pauli_unchecked(i).kron(&pauli_unchecked(j));
            *v = m.matmul(&sij).trace().re;
        }
    }
    Ok(RMatrix { entries })
}

pub fn r_matrix(s: &BipartiteState) -> Result<RMatrix> {
    require_two_qubits(s)?;
    r_matrix_of(s.matrix())
}

/// rho = 1/4 sum_ij R_ij sigma_i ⊗ sigma_j. Positivity is not checked.
pub fn rho_from_r(r: &RMatrix) -> Result<ComplexMatrix> {
    if (r.entries[0][0] - 1.0).abs() > 1e-12 {
        return Err(Error::InvalidParameter(format!(
            "R_00 = {} but normalization needs R_00 = 1",
            r.entries[0][0]
        )));
    }
    let mut rho = ComplexMatrix::zeros(4, 4);
    for i in 0..4 {
        for j in 0..4 {
            let c = r.entries[i][j];
            if c != 0.0 {
                rho = &rho + &pauli_unchecked(i).kron(&pauli_unchecked(j)).scale_real(c / 4.0);
            }
        }
    }
    Ok(rho)
}

/// Controlled phase gate |0><0| ⊗ 1 + |1><1| ⊗ sigma_3 = diag(1, 1, 1, -1).
pub fn phase_gate() -> ComplexMatrix {
    ComplexMatrix::diag_real(&[1.0, 1.0, 1.0, -1.0])
}

/// R-matrix of U rho U^dagger computed from R alone.
pub fn conjugate_r_by_phase_gate(r: &RMatrix) -> Result<RMatrix> {
    let rho = rho_from_r(r)?;
    r_matrix_of(&rho.conjugate_by(&phase_gate()))
}

/// R with R_00 = 1, R_01 = R_10 = R_13 = R_31 = r, R_11 = 1/2.
pub fn family_r(r: f64) -> RMatrix {
    let mut e = [[0.0; 4]; 4];
    e[0][0] = 1.0;
    e[0][1] = r;
    e[1][0] = r;
    e[1][3] = r;
    e[3][1] = r;
    e[1][1] = 0.5;
    RMatrix { entries: e }
}

/// The gate image of [`family_r`]: R_11 = 0 and R_22 = 1/2.
pub fn family_r_prime(r: f64) -> RMatrix {
    let mut rp = family_r(r);
    rp.entries[1][1] = 0.0;
    rp.entries[2][2] = 0.5;
    rp
}

/// Family operator for any r, without the positivity check.
pub fn family_matrix(r: f64) -> ComplexMatrix {
    rho_from_r(&family_r(r)).expect("R_00 = 1")
}

/// Gate image as U rho(r) U^dagger, for any r.
pub fn family_transformed_matrix(r: f64) -> ComplexMatrix {
    family_matrix(r).conjugate_by(&phase_gate())
}

fn check_family_param(r: f64) -> Result<()> {
    if !r.is_finite() || r.abs() > POSITIVITY_BOUND + FAMILY_BAND {
        return Err(Error::InvalidParameter(format!(
            "|r| = {} exceeds 3/8: the family matrix is not a state",
            r.abs()
        )));
    }
    Ok(())
}

fn family_state_from(m: ComplexMatrix) -> Result<BipartiteState> {
    // the positivity band on r maps to eigenvalues a few 1e-9 below zero
    Ok(BipartiteState::with_tol(m, 2, 2, 10.0 * FAMILY_BAND)?.retol(crate::DEFAULT_TOL))
}

/// rho(r), valid for |r| <= 3/8.
pub fn family_state(r: f64) -> Result<BipartiteState> {
    check_family_param(r)?;
    family_state_from(family_matrix(r))
}

/// rho'(r) = U rho(r) U^dagger, valid for |r| <= 3/8.
pub fn family_transformed(r: f64) -> Result<BipartiteState> {
    check_family_param(r)?;
    let via_gate = family_transformed_matrix(r);
    debug_assert!(
        via_gate.max_abs_diff(&rho_from_r(&family_r_prime(r))?) <= 1e-12,
        "gate conjugation and swapped R-matrix disagree"
    );
    family_state_from(via_gate)
}

fn require_two_qubits(s: &BipartiteState) -> Result<()> {
    if s.dim_a() != 2 || s.dim_b() != 2 {
        return Err(Error::DimensionMismatch(format!(
            "two-qubit state required, got {}x{}",
            s.dim_a(),
            s.dim_b()
        )));
    }
    Ok(())
}

/// det(rho^T1) as the product of its eigenvalues. Negative means entangled.
pub fn det_partial_transpose(s: &BipartiteState) -> Result<f64> {
    require_two_qubits(s)?;
    det_partial_transpose_matrix(s.matrix(), s.tol())
}

pub fn det_partial_transpose_matrix(m: &ComplexMatrix, tol: f64) -> Result<f64> {
    let pt = partial_transpose(m, 2, 2)?;
    Ok(eigvalsh(&pt, tol)?.product())
}

/// Reports for rho(r) and rho'(r) side by side.
#[derive(Debug, Clone)]
pub struct QubitPairAudit {
    pub r: f64,
    pub rho: CriterionReport,
    pub rho_prime: CriterionReport,
    pub det_pt_rho: f64,
    pub det_pt_rho_prime: f64,
    /// max |lambda_i(rho) - lambda_i(rho')|
    pub spectrum_diff: f64,
    /// max entrywise difference of both marginals
    pub reduction_diff: f64,
}

impl QubitPairAudit {
    /// Entangled-verdict for rho': det of its partial transpose below -tol.
    pub fn rho_prime_entangled(&self, tol: f64) -> bool {
        self.det_pt_rho_prime < -tol
    }
}

/// Evaluates every registered criterion on rho(r) and rho'(r) and checks
/// that they share spectrum and marginals.
pub fn qubit_pair_audit(r: f64, registry: &CriterionRegistry, ctx: &EvalContext) -> Result<QubitPairAudit> {
    let rho = family_state(r)?.retol(ctx.tol);
    let rho_prime = family_transformed(r)?.retol(ctx.tol);
    let spectrum_diff = rho.spectrum()?.max_abs_diff(&rho_prime.spectrum()?);
    let reduction_diff = rho
        .reduced(Subsystem::A)
        .max_abs_diff(&rho_prime.reduced(Subsystem::A))
        .max(rho.reduced(Subsystem::B).max_abs_diff(&rho_prime.reduced(Subsystem::B)));
    Ok(QubitPairAudit {
        r,
        det_pt_rho: det_partial_transpose(&rho)?,
        det_pt_rho_prime: det_partial_transpose(&rho_prime)?,
        rho: registry.evaluate(&rho, ctx)?,
        rho_prime: registry.evaluate(&rho_prime, ctx)?,
        spectrum_diff,
        reduction_diff,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{maximally_mixed, phi_plus};

    #[test]
    fn pauli_definitions() {
        assert_eq!(pauli(3).unwrap(), ComplexMatrix::diag_real(&[1.0, -1.0]));
        let xy = pauli(1).unwrap().matmul(&pauli(2).unwrap());
        let iz = pauli(3).unwrap().scale(C64::new(0.0, 1.0));
        assert!(xy.max_abs_diff(&iz) < 1e-16);
        assert!(pauli(4).is_err());
    }

    #[test]
    fn pauli_orthogonality() {
        for i in 0..4 {
            for j in 0..4 {
                let t = pauli(i).unwrap().matmul(&pauli(j).unwrap()).trace();
                let expected = if i == j { 2.0 } else { 0.0 };
                assert!((t - C64::new(expected, 0.0)).norm() < 1e-16);
            }
            let sq = pauli(i).unwrap().matmul(&pauli(i).unwrap());
            assert_eq!(sq, ComplexMatrix::identity(2));
        }
    }

    #[test]
    fn r_matrix_of_maximally_mixed() {
        let r = r_matrix(&maximally_mixed(2, 2)).unwrap();
        let mut expected = [[0.0; 4]; 4];
        expected[0][0] = 1.0;
        assert!(r.max_abs_diff(&RMatrix { entries: expected }) < 1e-15);
    }

    #[test]
    fn r_matrix_of_phi_plus() {
        let r = r_matrix(&phi_plus()).unwrap();
        let t = r.correlation_block();
        let expected = [[1.0, 0.0, 0.0], [0.0, -1.0, 0.0], [0.0, 0.0, 1.0]];
        for i in 0..3 {
            for j in 0..3 {
                assert!((t[i][j] - expected[i][j]).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn rho_from_r_requires_normalization() {
        let mut r = family_r(0.1);
        r.entries[0][0] = 0.9;
        assert!(rho_from_r(&r).is_err());
    }

    #[test]
    fn phase_gate_properties() {
        let u = phase_gate();
        assert_eq!(u.matmul(&u), ComplexMatrix::identity(4));
        let mut e11 = vec![C64::new(0.0, 0.0); 4];
        e11[3] = C64::new(1.0, 0.0);
        assert_eq!(u.mat_vec(&e11)[3], C64::new(-1.0, 0.0));
    }

    #[test]
    fn phase_gate_conjugation_relations() {
        let u = phase_gate();
        let s = |i, j| pauli_product(i, j).unwrap();
        assert!(s(1, 0).conjugate_by(&u).max_abs_diff(&s(1, 3)) < 1e-16);
        assert!(s(0, 1).conjugate_by(&u).max_abs_diff(&s(3, 1)) < 1e-16);
        assert!(s(1, 1).conjugate_by(&u).max_abs_diff(&s(2, 2)) < 1e-16);
    }

    #[test]
    fn family_validity_band() {
        assert!(family_state(0.375).is_ok());
        assert!(family_state(-0.375).is_ok());
        assert!(matches!(family_state(0.38), Err(Error::InvalidParameter(_))));
        assert!(family_transformed(0.4).is_err());
        let min_eig = eigvalsh(&family_matrix(0.375), 1e-10).unwrap().min();
        assert!(min_eig >= -1e-9);
        let min_eig = eigvalsh(&family_matrix(0.38), 1e-10).unwrap().min();
        assert!(min_eig < -1e-9);
    }

    #[test]
    fn family_is_its_own_partial_transpose() {
        for r in [0.0, 0.1, 0.3, 0.375] {
            let m = family_matrix(r);
            assert!(partial_transpose(&m, 2, 2).unwrap().max_abs_diff(&m) <= 1e-12);
        }
    }

    #[test]
    fn gate_route_matches_swapped_r() {
        for r in [-0.3, 0.0, 0.2, 0.375] {
            let a = family_transformed_matrix(r);
            let b = rho_from_r(&family_r_prime(r)).unwrap();
            assert!(a.max_abs_diff(&b) <= 1e-12);
            let rp = conjugate_r_by_phase_gate(&family_r(r)).unwrap();
            assert!(rp.max_abs_diff(&family_r_prime(r)) <= 1e-12);
        }
    }

    #[test]
    fn det_partial_transpose_signs() {
        assert!(det_partial_transpose(&family_transformed(0.3).unwrap()).unwrap() < 0.0);
        assert!(det_partial_transpose(&family_transformed(0.2).unwrap()).unwrap() >= -1e-9);
        for r in [0.0, 0.2, 0.3, 0.375] {
            assert!(det_partial_transpose(&family_state(r).unwrap()).unwrap() >= -1e-9);
        }
        let qutrits = maximally_mixed(3, 3);
        assert!(matches!(
            det_partial_transpose(&qutrits),
            Err(Error::DimensionMismatch(_))
        ));
    }
}
