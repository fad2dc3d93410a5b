use crate::error::Result;
use crate::linalg::BipartiteState;
use crate::linalg::{eigvalsh, ComplexMatrix};
use crate::twoqubit::r_matrix;

/// M(rho): sum of the two largest eigenvalues of T^T T, with T the 3x3
/// correlation block of the R-matrix. CHSH is violated iff M > 1.
pub fn horodecki_chsh(s: &BipartiteState) -> Result<f64> {
    let t = r_matrix(s)?.correlation_block();
    let mut tt = [0.0; 9];
    for i in 0..3 {
        for j in 0..3 {
            tt[i * 3 + j] = (0..3).map(|k| t[k][i] * t[k][j]).sum();
        }
    }
    let spec = eigvalsh(&ComplexMatrix::from_real(3, 3, &tt)?, s.tol())?;
    Ok(spec.values()[1] + spec.values()[2])
}
