//! Cyclic Jacobi eigensolver for small dense Hermitian matrices, and the
//! spectral matrix functions built on it.

use crate::error::{Error, Result};
use crate::linalg::matrix::{ComplexMatrix, C64};

/// Sweep cap for the cyclic Jacobi iteration.
pub const MAX_SWEEPS: usize = 100;

/// Real eigenvalues sorted ascending, carrying the tolerance used to produce them.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    tol: f64,
}

impl Spectrum {
    /// Sorts `values` ascending.
    pub fn new(mut values: Vec<f64>, tol: f64) -> Self {
        values.sort_by(|a, b| a.total_cmp(b));
        Self { values, tol }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn min(&self) -> f64 {
        self.values.first().copied().unwrap_or(f64::NAN)
    }

    pub fn max(&self) -> f64 {
        self.values.last().copied().unwrap_or(f64::NAN)
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    pub fn product(&self) -> f64 {
        self.values.iter().product()
    }

    /// Number of eigenvalues strictly above the tolerance.
    pub fn rank(&self) -> usize {
        self.values.iter().filter(|&&v| v > self.tol).count()
    }

    /// `tr(M^alpha)` computed on the eigenvalues.
    ///
    /// Eigenvalues at or below `tol` count as zero, so `alpha = 0` yields the
    /// rank. For `alpha < 0` they are dropped and the result is marked
    /// support-restricted.
    pub fn power_trace(&self, alpha: f64) -> PowerTrace {
        let mut value = 0.0;
        let mut support_restricted = false;
        for &v in &self.values {
            if v > self.tol {
                value += v.powf(alpha);
            } else if alpha < 0.0 {
                support_restricted = true;
            }
        }
        PowerTrace {
            value,
            support_restricted,
        }
    }

    /// `-sum v ln v` over the support.
    pub fn von_neumann(&self) -> f64 {
        -self
            .values
            .iter()
            .filter(|&&v| v > self.tol)
            .map(|&v| v * v.ln())
            .sum::<f64>()
    }

    /// Largest absolute difference between two spectra of equal length.
    pub fn max_abs_diff(&self, other: &Spectrum) -> f64 {
        if self.len() != other.len() {
            return f64::INFINITY;
        }
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerTrace {
    pub value: f64,
    pub support_restricted: bool,
}

/// Eigenvalues plus the unitary whose columns are the matching eigenvectors.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub spectrum: Spectrum,
    pub vectors: ComplexMatrix,
}

impl HermitianEigen {
    pub fn eigenvector(&self, k: usize) -> Vec<C64> {
        (0..self.vectors.rows()).map(|i| self.vectors[(i, k)]).collect()
    }

    /// `V f(diag) V^dagger`.
    pub fn reconstruct_with(&self, mut f: impl FnMut(f64) -> f64) -> ComplexMatrix {
        let n = self.vectors.rows();
        let fvals: Vec<f64> = self.spectrum.values().iter().map(|&v| f(v)).collect();
        let v = &self.vectors;
        ComplexMatrix::from_fn(n, n, |i, j| {
            (0..n).map(|k| v[(i, k)] * v[(j, k)].conj() * fvals[k]).sum()
        })
    }

    pub fn reconstruct(&self) -> ComplexMatrix {
        self.reconstruct_with(|v| v)
    }
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.rows();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi rotations.
///
/// The input must be Hermitian to within `tol * max(1, max|m_ij|)`; its
/// Hermitian part is diagonalized. Eigenvalues come back sorted ascending
/// with eigenvectors permuted to match.
pub fn hermitian_eig(m: &ComplexMatrix, tol: f64) -> Result<HermitianEigen> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "eigensolver needs a square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let scale = m.max_abs().max(1.0);
    let deviation = m.hermiticity_deviation();
    if deviation > tol * scale {
        return Err(Error::NotHermitian { deviation, tol });
    }

    let n = m.rows();
    let mut a = m.hermitian_part();
    let mut v = ComplexMatrix::identity(n);
    let norm = a.frobenius_norm();
    let target = f64::EPSILON * norm.max(f64::MIN_POSITIVE);

    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&a);
        if off <= target || n < 2 {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps: MAX_SWEEPS,
                off_norm: off,
            });
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
        sweeps += 1;
    }

    let mut pairs: Vec<(f64, usize)> = (0..n).map(|i| (a[(i, i)].re, i)).collect();
    pairs.sort_by(|x, y| x.0.total_cmp(&y.0));
    let vectors = ComplexMatrix::from_fn(n, n, |i, k| v[(i, pairs[k].1)]);
    let values = pairs.iter().map(|&(e, _)| e).collect();
    Ok(HermitianEigen {
        spectrum: Spectrum { values, tol },
        vectors,
    })
}

/// Annihilates `a[p][q]` with the unitary G = diag(1, e^{-i phi}) R(c, s)
/// on the (p, q) plane, where a[p][q] = |a_pq| e^{i phi}.
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let mag = apq.norm();
    if mag == 0.0 {
        return;
    }
    let phase = apq / mag;
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let tau = (aqq - app) / (2.0 * mag);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let n = a.rows();
    let phase_conj = phase.conj();

    // A <- A G
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * c - akq * phase_conj * s;
        a[(k, q)] = akp * s + akq * phase_conj * c;
    }
    // A <- G^dagger A
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = apk * c - aqk * phase * s;
        a[(q, k)] = apk * s + aqk * phase * c;
    }
    a[(p, q)] = C64::new(0.0, 0.0);
    a[(q, p)] = C64::new(0.0, 0.0);
    a[(p, p)] = C64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = C64::new(a[(q, q)].re, 0.0);

    // V <- V G
    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * c - vkq * phase_conj * s;
        v[(k, q)] = vkp * s + vkq * phase_conj * c;
    }
}

/// Eigenvalues only.
pub fn eigvalsh(m: &ComplexMatrix, tol: f64) -> Result<Spectrum> {
    hermitian_eig(m, tol).map(|e| e.spectrum)
}

/// Result of [`matrix_power`].
#[derive(Debug, Clone)]
pub struct MatrixPower {
    pub matrix: ComplexMatrix,
    /// Set when `alpha < 0` and some eigenvalues were excluded as zero.
    pub support_restricted: bool,
}

/// `M^alpha` for positive semidefinite `M`.
///
/// Eigenvalues at or below `tol` are treated as exact zeros: they map to
/// zero for every exponent (so `0^0 = 0`), and for negative exponents the
/// power is taken on the support only.
pub fn matrix_power(m: &ComplexMatrix, alpha: f64, tol: f64) -> Result<MatrixPower> {
    let eig = hermitian_eig(m, tol)?;
    let min_eig = eig.spectrum.min();
    if min_eig < -tol {
        return Err(Error::NotPositive { min_eig, tol });
    }
    let support_restricted = alpha < 0.0 && eig.spectrum.rank() < eig.spectrum.len();
    let matrix = eig.reconstruct_with(|v| if v > tol { v.powf(alpha) } else { 0.0 });
    Ok(MatrixPower {
        matrix,
        support_restricted,
    })
}

/// `exp(H)` for Hermitian `H`, via the eigendecomposition.
pub fn expm_hermitian(m: &ComplexMatrix, tol: f64) -> Result<ComplexMatrix> {
    Ok(hermitian_eig(m, tol)?.reconstruct_with(f64::exp))
}
