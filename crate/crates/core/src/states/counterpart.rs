//! Maximally entangled basis, the separable projectors built from it, and
//! separable states sharing a given spectrum with maximally mixed marginals.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::linalg::{BipartiteState, ComplexMatrix, C64};
use crate::states::werner::WernerParams;
use crate::DEFAULT_TOL;

fn check_index(name: &str, value: usize, d: usize) -> Result<()> {
    if value == 0 || value > d {
        return Err(Error::IndexOutOfRange(format!("{name} = {value} not in 1..={d}")));
    }
    Ok(())
}

/// |Psi_jk> = d^{-1/2} sum_n exp(2 pi i j n / d) |n, n + k mod d>.
///
/// `j` and `k` are 1-based (`1..=d`); `k = d` is the same shift as `k = 0`.
pub fn me_basis_state(d: usize, j: usize, k: usize) -> Result<Vec<C64>> {
    if d < 2 {
        return Err(Error::InvalidParameter(format!("dimension d = {d} must be >= 2")));
    }
    check_index("j", j, d)?;
    check_index("k", k, d)?;
    let amp = 1.0 / (d as f64).sqrt();
    let mut psi = vec![C64::new(0.0, 0.0); d * d];
    for n in 0..d {
        let phase = 2.0 * PI * (j * n) as f64 / d as f64;
        psi[n * d + (n + k) % d] = C64::from_polar(amp, phase);
    }
    Ok(psi)
}

/// P_k as the sum over j of |Psi_jk><Psi_jk|.
pub fn separable_projector_from_basis(d: usize, k: usize) -> Result<ComplexMatrix> {
    let mut acc = ComplexMatrix::zeros(d * d, d * d);
    for j in 1..=d {
        acc = &acc + &ComplexMatrix::outer(&me_basis_state(d, j, k)?);
    }
    Ok(acc)
}

/// P_k = sum_n |n><n| ⊗ |n + k><n + k|, a rank-d diagonal projector.
pub fn separable_projector(d: usize, k: usize) -> Result<ComplexMatrix> {
    if d < 2 {
        return Err(Error::InvalidParameter(format!("dimension d = {d} must be >= 2")));
    }
    check_index("k", k, d)?;
    let mut p = ComplexMatrix::zeros(d * d, d * d);
    for n in 0..d {
        let idx = n * d + (n + k) % d;
        p[(idx, idx)] = C64::new(1.0, 0.0);
    }
    Ok(p)
}

/// Eigenvalue blocks `(value, multiplicity)` of a target spectrum.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumBlocks {
    blocks: Vec<(f64, usize)>,
}

impl SpectrumBlocks {
    pub fn new(blocks: Vec<(f64, usize)>) -> Result<Self> {
        for &(value, mult) in &blocks {
            if !value.is_finite() || value < -DEFAULT_TOL {
                return Err(Error::InvalidBlocks(format!(
                    "eigenvalue {value} is negative or not finite"
                )));
            }
            if mult == 0 {
                return Err(Error::InvalidBlocks("zero multiplicity".into()));
            }
        }
        Ok(Self { blocks })
    }

    pub fn blocks(&self) -> &[(f64, usize)] {
        &self.blocks
    }

    pub fn total_multiplicity(&self) -> usize {
        self.blocks.iter().map(|b| b.1).sum()
    }

    pub fn weight(&self) -> f64 {
        self.blocks.iter().map(|&(v, m)| v * m as f64).sum()
    }

    /// Expanded eigenvalues, ascending.
    pub fn sorted_values(&self) -> Vec<f64> {
        let mut v: Vec<f64> = self
            .blocks
            .iter()
            .flat_map(|&(value, mult)| std::iter::repeat_n(value, mult))
            .collect();
        v.sort_by(|a, b| a.total_cmp(b));
        v
    }
}

/// Separable state with spectrum `blocks` and both marginals equal to I/d.
///
/// Each block of multiplicity `m` receives `m / d` projectors P_k, with `k`
/// running upward from 1 across the blocks in input order.
pub fn isospectral_counterpart(blocks: &SpectrumBlocks, d: usize) -> Result<BipartiteState> {
    if d < 2 {
        return Err(Error::InvalidParameter(format!("dimension d = {d} must be >= 2")));
    }
    for &(value, mult) in blocks.blocks() {
        if mult % d != 0 {
            return Err(Error::InvalidBlocks(format!(
                "multiplicity {mult} of eigenvalue {value} is not a multiple of d = {d}"
            )));
        }
    }
    let needed: usize = blocks.blocks().iter().map(|b| b.1 / d).sum();
    if needed > d {
        return Err(Error::InvalidBlocks(format!(
            "blocks need {needed} projectors but only {d} exist"
        )));
    }
    if blocks.total_multiplicity() != d * d {
        return Err(Error::InvalidBlocks(format!(
            "multiplicities sum to {} instead of d^2 = {}",
            blocks.total_multiplicity(),
            d * d
        )));
    }
    let weight = blocks.weight();
    if (weight - 1.0).abs() > DEFAULT_TOL {
        return Err(Error::InvalidBlocks(format!("spectrum sums to {weight}, not 1")));
    }

    let mut rho = ComplexMatrix::zeros(d * d, d * d);
    let mut k = 1;
    for &(value, mult) in blocks.blocks() {
        for _ in 0..mult / d {
            rho = &rho + &separable_projector(d, k)?.scale_real(value);
            k += 1;
        }
    }
    BipartiteState::new(rho, d, d)
}

/// The separable isospectral partner of `werner(d, p)`; needs odd `d`.
pub fn werner_counterpart(d: usize, p: f64) -> Result<BipartiteState> {
    let params = WernerParams::new(d, p)?;
    if d.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "no counterpart for even d = {d}: r+ = {} and r- = {} are not multiples of d",
            params.r_plus(),
            params.r_minus()
        )));
    }
    let blocks = SpectrumBlocks::new(params.eigen_blocks().to_vec())?;
    isospectral_counterpart(&blocks, d)
}
