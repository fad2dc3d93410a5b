#![allow(dead_code)]

//! Independent oracles shared by the integration tests. Nothing here calls
//! the crate's eigensolver, Kronecker product or partial operations.

use nalgebra::DMatrix;
use num_complex::Complex64;
use sepcheck::ComplexMatrix;

pub fn to_na(m: &ComplexMatrix) -> DMatrix<Complex64> {
    DMatrix::from_fn(m.rows(), m.cols(), |i, j| m[(i, j)])
}

/// Eigenvalues of a Hermitian matrix via nalgebra, ascending.
pub fn eigvals_oracle(m: &ComplexMatrix) -> Vec<f64> {
    let eig = nalgebra::SymmetricEigen::new(to_na(m));
    let mut v: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    v.sort_by(|a, b| a.total_cmp(b));
    v
}

pub fn min_eig_oracle(m: &ComplexMatrix) -> f64 {
    eigvals_oracle(m)[0]
}

/// Entry-by-entry Kronecker product from four nested loops.
pub fn kron_oracle(a: &ComplexMatrix, b: &ComplexMatrix) -> Vec<Vec<Complex64>> {
    let mut out = vec![vec![Complex64::new(0.0, 0.0); a.cols() * b.cols()]; a.rows() * b.rows()];
    for i1 in 0..a.rows() {
        for j1 in 0..a.cols() {
            for i2 in 0..b.rows() {
                for j2 in 0..b.cols() {
                    out[i1 * b.rows() + i2][j1 * b.cols() + j2] = a[(i1, j1)] * b[(i2, j2)];
                }
            }
        }
    }
    out
}

/// tr(M^2) = sum |m_ij|^2 for Hermitian M.
pub fn trace_square_oracle(m: &ComplexMatrix) -> f64 {
    m.as_slice().iter().map(|z| z.norm_sqr()).sum()
}

/// Sum of lambda^alpha over eigenvalues above `cut`, from nalgebra eigenvalues.
pub fn power_sum_oracle(m: &ComplexMatrix, alpha: f64, cut: f64) -> f64 {
    eigvals_oracle(m)
        .into_iter()
        .filter(|&v| v > cut)
        .map(|v| v.powf(alpha))
        .sum()
}

/// A-marginal by explicit summation over the B index, |i,k> at i*db + k.
pub fn marginal_a_oracle(m: &ComplexMatrix, da: usize, db: usize) -> ComplexMatrix {
    let mut out = ComplexMatrix::zeros(da, da);
    for i in 0..da {
        for j in 0..da {
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 0..db {
                acc += m[(i * db + k, j * db + k)];
            }
            out[(i, j)] = acc;
        }
    }
    out
}

/// Determinant by Laplace expansion along the first row.
pub fn det_oracle(m: &[Vec<Complex64>]) -> Complex64 {
    let n = m.len();
    if n == 1 {
        return m[0][0];
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for col in 0..n {
        let minor: Vec<Vec<Complex64>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != col)
                    .map(|(_, v)| *v)
                    .collect()
            })
            .collect();
        let sign = if col % 2 == 0 { 1.0 } else { -1.0 };
        acc += m[0][col] * det_oracle(&minor) * sign;
    }
    acc
}

pub fn rows_of(m: &ComplexMatrix) -> Vec<Vec<Complex64>> {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

/// Locates the sign change of `f` on [lo, hi]; `f(lo)` and `f(hi)` must differ in sign.
pub fn bisect(mut f: impl FnMut(f64) -> f64, mut lo: f64, mut hi: f64, width: f64) -> f64 {
    let f_lo = f(lo);
    assert!(f_lo.signum() != f(hi).signum(), "no sign change on [{lo}, {hi}]");
    while hi - lo > width {
        let mid = 0.5 * (lo + hi);
        if f(mid).signum() == f_lo.signum() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}
