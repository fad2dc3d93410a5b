use crate::error::{Error, Result};
use crate::linalg::eigen::{eigvalsh, Spectrum};
use crate::linalg::matrix::{ComplexMatrix, C64};
use crate::DEFAULT_TOL;

/// Which tensor factor of a bipartite space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Subsystem {
    A,
    B,
}

impl Subsystem {
    pub fn other(self) -> Self {
        match self {
            Subsystem::A => Subsystem::B,
            Subsystem::B => Subsystem::A,
        }
    }
}

fn check_dims(m: &ComplexMatrix, dim_a: usize, dim_b: usize) -> Result<()> {
    let n = dim_a * dim_b;
    if dim_a == 0 || dim_b == 0 || m.rows() != n || m.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} matrix does not act on a {dim_a}x{dim_b} bipartite space",
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

/// Traces out the subsystem *other* than `keep`.
///
/// Basis index of |i, k> is `i * dim_b + k`.
pub fn partial_trace(m: &ComplexMatrix, dim_a: usize, dim_b: usize, keep: Subsystem) -> Result<ComplexMatrix> {
    check_dims(m, dim_a, dim_b)?;
    Ok(match keep {
        Subsystem::A => ComplexMatrix::from_fn(dim_a, dim_a, |i, j| {
            (0..dim_b).map(|k| m[(i * dim_b + k, j * dim_b + k)]).sum()
        }),
        Subsystem::B => ComplexMatrix::from_fn(dim_b, dim_b, |i, j| {
            (0..dim_a).map(|k| m[(k * dim_b + i, k * dim_b + j)]).sum()
        }),
    })
}

/// Transpose on the first factor: <k l| M^T1 |m n> = <m l| M |k n>.
pub fn partial_transpose(m: &ComplexMatrix, dim_a: usize, dim_b: usize) -> Result<ComplexMatrix> {
    check_dims(m, dim_a, dim_b)?;
    let n = dim_a * dim_b;
    Ok(ComplexMatrix::from_fn(n, n, |row, col| {
        let (k, l) = (row / dim_b, row % dim_b);
        let (mm, nn) = (col / dim_b, col % dim_b);
        m[(mm * dim_b + l, k * dim_b + nn)]
    }))
}

/// A validated density matrix on C^dimA ⊗ C^dimB.
#[derive(Debug, Clone)]
pub struct BipartiteState {
    matrix: ComplexMatrix,
    dim_a: usize,
    dim_b: usize,
    tol: f64,
}

impl BipartiteState {
    pub fn new(matrix: ComplexMatrix, dim_a: usize, dim_b: usize) -> Result<Self> {
        Self::with_tol(matrix, dim_a, dim_b, DEFAULT_TOL)
    }

    /// Validates shape, Hermiticity, unit trace and positivity, in that order.
    pub fn with_tol(matrix: ComplexMatrix, dim_a: usize, dim_b: usize, tol: f64) -> Result<Self> {
        check_dims(&matrix, dim_a, dim_b)?;
        let deviation = matrix.hermiticity_deviation();
        if deviation > tol {
            return Err(Error::NotHermitian { deviation, tol });
        }
        let trace = matrix.trace().re;
        if (trace - 1.0).abs() > tol {
            return Err(Error::TraceNotOne { trace, tol });
        }
        let min_eig = eigvalsh(&matrix, tol)?.min();
        if min_eig < -tol {
            return Err(Error::NotPositive { min_eig, tol });
        }
        Ok(Self {
            matrix,
            dim_a,
            dim_b,
            tol,
        })
    }

    /// `|psi><psi|` for a normalized vector.
    pub fn from_pure(psi: &[C64], dim_a: usize, dim_b: usize) -> Result<Self> {
        check_normalized(psi, DEFAULT_TOL)?;
        Self::new(ComplexMatrix::outer(psi), dim_a, dim_b)
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dim_a(&self) -> usize {
        self.dim_a
    }

    pub fn dim_b(&self) -> usize {
        self.dim_b
    }

    pub fn dim(&self) -> usize {
        self.dim_a * self.dim_b
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    /// Same state, different decision tolerance.
    pub fn retol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn spectrum(&self) -> Result<Spectrum> {
        eigvalsh(&self.matrix, self.tol)
    }

    /// Reduced state on `keep`.
    pub fn reduced(&self, keep: Subsystem) -> ComplexMatrix {
        partial_trace(&self.matrix, self.dim_a, self.dim_b, keep).expect("dimensions validated")
    }

    /// Reduced state with the tensor factor `traced` removed.
    pub fn partial_trace(&self, traced: Subsystem) -> ComplexMatrix {
        self.reduced(traced.other())
    }

    pub fn reduced_spectrum(&self, keep: Subsystem) -> Result<Spectrum> {
        eigvalsh(&self.reduced(keep), self.tol)
    }

    pub fn partial_transpose(&self) -> ComplexMatrix {
        partial_transpose(&self.matrix, self.dim_a, self.dim_b).expect("dimensions validated")
    }

    /// U rho U^dagger, kept with the same dimensions. Validity is preserved
    /// for unitary `u`, so only shapes are checked.
    pub fn conjugated(&self, u: &ComplexMatrix) -> Result<Self> {
        if u.rows() != self.dim() || u.cols() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} unitary on a {}-dimensional state",
                u.rows(),
                u.cols(),
                self.dim()
            )));
        }
        Ok(Self {
            matrix: self.matrix.conjugate_by(u).hermitian_part(),
            dim_a: self.dim_a,
            dim_b: self.dim_b,
            tol: self.tol,
        })
    }
}

fn check_normalized(psi: &[C64], tol: f64) -> Result<()> {
    let norm_sq: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
    if (norm_sq - 1.0).abs() > tol {
        return Err(Error::NotNormalized { norm_sq });
    }
    Ok(())
}

/// Schmidt coefficients {lambda_i} of a normalized pure state, descending,
/// zeros (at or below tolerance) dropped. They are the eigenvalues of
/// tr_B |psi><psi|.
pub fn schmidt_coefficients(psi: &[C64], dim_a: usize, dim_b: usize) -> Result<Vec<f64>> {
    if psi.len() != dim_a * dim_b {
        return Err(Error::DimensionMismatch(format!(
            "vector of length {} for a {dim_a}x{dim_b} space",
            psi.len()
        )));
    }
    check_normalized(psi, DEFAULT_TOL)?;
    // rho_A = C C^dagger with C the dim_a x dim_b coefficient matrix
    let c = ComplexMatrix::from_vec(dim_a, dim_b, psi.to_vec())?;
    let rho_a = c.matmul(&c.adjoint());
    let spectrum = eigvalsh(&rho_a, DEFAULT_TOL)?;
    let mut coeffs: Vec<f64> = spectrum.values().iter().copied().filter(|&v| v > DEFAULT_TOL).collect();
    coeffs.reverse();
    Ok(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn phi_plus() -> Vec<C64> {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        vec![
            C64::new(h, 0.0),
            C64::new(0.0, 0.0),
            C64::new(0.0, 0.0),
            C64::new(h, 0.0),
        ]
    }

    fn qubit(p0: f64, coh: C64) -> ComplexMatrix {
        ComplexMatrix::from_vec(2, 2, vec![C64::new(p0, 0.0), coh, coh.conj(), C64::new(1.0 - p0, 0.0)]).unwrap()
    }

    #[test]
    fn product_state_factorizes() {
        let ra = qubit(0.7, C64::new(0.1, 0.2));
        let rb = ComplexMatrix::diag_real(&[0.2, 0.5, 0.3]);
        let s = BipartiteState::new(ra.kron(&rb), 2, 3).unwrap();
        assert!(s.partial_trace(Subsystem::B).max_abs_diff(&ra) < 1e-15);
        assert!(s.partial_trace(Subsystem::A).max_abs_diff(&rb) < 1e-15);
    }

    #[test]
    fn bell_state_marginal_is_maximally_mixed() {
        let s = BipartiteState::from_pure(&phi_plus(), 2, 2).unwrap();
        let half = ComplexMatrix::identity(2).scale_real(0.5);
        assert!(s.partial_trace(Subsystem::B).max_abs_diff(&half) < 1e-15);
    }

    #[test]
    fn partial_transpose_product_case() {
        let ra = qubit(0.7, C64::new(0.1, 0.2));
        let rb = qubit(0.4, C64::new(-0.3, 0.05));
        let s = BipartiteState::new(ra.kron(&rb), 2, 2).unwrap();
        assert!(s.partial_transpose().max_abs_diff(&ra.transpose().kron(&rb)) < 1e-15);
    }

    #[test]
    fn partial_transpose_of_bell_state() {
        let s = BipartiteState::from_pure(&phi_plus(), 2, 2).unwrap();
        let pt = s.partial_transpose();
        // PT of |Phi+><Phi+| is F/2 with F the swap; spectrum {-1/2, 1/2 x3}
        let spec = eigvalsh(&pt, 1e-10).unwrap();
        assert!((spec.min() + 0.5).abs() < 1e-14);
        assert_eq!(partial_transpose(&pt, 2, 2).unwrap(), *s.matrix());
    }

    #[test]
    fn dimension_mismatch_errors() {
        let m = ComplexMatrix::identity(4).scale_real(0.25);
        assert!(matches!(
            partial_trace(&m, 2, 3, Subsystem::A),
            Err(Error::DimensionMismatch(_))
        ));
        assert!(matches!(partial_transpose(&m, 3, 1), Err(Error::DimensionMismatch(_))));
        assert!(matches!(BipartiteState::new(m, 1, 3), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn validation_order_and_messages() {
        let bad_trace = ComplexMatrix::identity(4).scale_real(0.9 / 4.0);
        assert!(matches!(
            BipartiteState::new(bad_trace, 2, 2),
            Err(Error::TraceNotOne { .. })
        ));
        let non_psd = ComplexMatrix::diag_real(&[1.2, -0.2, 0.0, 0.0]);
        assert!(matches!(
            BipartiteState::new(non_psd, 2, 2),
            Err(Error::NotPositive { .. })
        ));
        let mut non_herm = ComplexMatrix::identity(4).scale_real(0.25);
        non_herm[(0, 1)] = C64::new(0.1, 0.0);
        assert!(matches!(
            BipartiteState::new(non_herm, 2, 2),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn schmidt_examples() {
        let mut e00 = vec![C64::new(0.0, 0.0); 4];
        e00[0] = C64::new(1.0, 0.0);
        assert_eq!(schmidt_coefficients(&e00, 2, 2).unwrap(), vec![1.0]);

        let bell = schmidt_coefficients(&phi_plus(), 2, 2).unwrap();
        assert_eq!(bell.len(), 2);
        assert!(bell.iter().all(|v| (v - 0.5).abs() < 1e-14));

        let psi = vec![
            C64::new(0.9f64.sqrt(), 0.0),
            C64::new(0.0, 0.0),
            C64::new(0.0, 0.0),
            C64::new(0.1f64.sqrt(), 0.0),
        ];
        let sc = schmidt_coefficients(&psi, 2, 2).unwrap();
        assert!((sc[0] - 0.9).abs() < 1e-14 && (sc[1] - 0.1).abs() < 1e-14);
    }

    #[test]
    fn schmidt_rejects_unnormalized() {
        let psi = vec![
            C64::new(1.0, 0.0),
            C64::new(1.0, 0.0),
            C64::new(0.0, 0.0),
            C64::new(0.0, 0.0),
        ];
        assert!(matches!(
            schmidt_coefficients(&psi, 2, 2),
            Err(Error::NotNormalized { .. })
        ));
    }
}
