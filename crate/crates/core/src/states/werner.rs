use crate::error::{Error, Result};
use crate::linalg::{BipartiteState, ComplexMatrix, C64};

/// Parameters of a Werner state on C^d ⊗ C^d.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WernerParams {
    pub d: usize,
    pub p: f64,
}

impl WernerParams {
    pub fn new(d: usize, p: f64) -> Result<Self> {
        if d < 2 {
            return Err(Error::InvalidParameter(format!(
                "Werner dimension d = {d} must be >= 2"
            )));
        }
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidParameter(format!("Werner weight p = {p} outside [0, 1]")));
        }
        Ok(Self { d, p })
    }

    /// Dimension of the symmetric subspace, (d^2 + d) / 2.
    pub fn r_plus(&self) -> usize {
        (self.d * self.d + self.d) / 2
    }

    /// Dimension of the antisymmetric subspace, (d^2 - d) / 2.
    pub fn r_minus(&self) -> usize {
        (self.d * self.d - self.d) / 2
    }

    /// The two eigenvalues with their multiplicities: symmetric block first.
    pub fn eigen_blocks(&self) -> [(f64, usize); 2] {
        let (rp, rm) = (self.r_plus(), self.r_minus());
        [((1.0 - self.p) / rp as f64, rp), (self.p / rm as f64, rm)]
    }
}

/// The swap F|i, j> = |j, i>.
pub fn flip_operator(d: usize) -> ComplexMatrix {
    let n = d * d;
    ComplexMatrix::from_fn(n, n, |row, col| {
        let (i, j) = (row / d, row % d);
        if col == j * d + i {
            C64::new(1.0, 0.0)
        } else {
            C64::new(0.0, 0.0)
        }
    })
}

/// (1 + F) / 2.
pub fn symmetric_projector(d: usize) -> ComplexMatrix {
    (&ComplexMatrix::identity(d * d) + &flip_operator(d)).scale_real(0.5)
}

/// (1 - F) / 2.
pub fn antisymmetric_projector(d: usize) -> ComplexMatrix {
    (&ComplexMatrix::identity(d * d) - &flip_operator(d)).scale_real(0.5)
}

/// (1 - p) P+/r+ + p P-/r-.
pub fn werner(d: usize, p: f64) -> Result<BipartiteState> {
    let params = WernerParams::new(d, p)?;
    werner_from(&params)
}

pub fn werner_from(params: &WernerParams) -> Result<BipartiteState> {
    let d = params.d;
    let sym = symmetric_projector(d).scale_real((1.0 - params.p) / params.r_plus() as f64);
    let anti = antisymmetric_projector(d).scale_real(params.p / params.r_minus() as f64);
    BipartiteState::new(&sym + &anti, d, d)
}
