//! Rényi and conditional Tsallis entropies, and the eigenvalue tests
//! (PPT, reduction) they are compared against.

use crate::error::{Error, Result};
use crate::linalg::{eigvalsh, BipartiteState, ComplexMatrix, Spectrum, Subsystem};

/// A computed quantity plus whether negative powers had to be restricted to
/// the support of a singular matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropicValue {
    pub value: f64,
    pub support_restricted: bool,
}

impl EntropicValue {
    fn plain(value: f64) -> Self {
        Self {
            value,
            support_restricted: false,
        }
    }
}

/// Spectra of a state and of its A-marginal, computed once.
#[derive(Debug, Clone)]
pub struct SpectralPair {
    pub joint: Spectrum,
    pub marginal: Spectrum,
}

impl SpectralPair {
    pub fn of(s: &BipartiteState) -> Result<Self> {
        Ok(Self {
            joint: s.spectrum()?,
            marginal: s.reduced_spectrum(Subsystem::A)?,
        })
    }

    /// tr(rho_A^alpha) - tr(rho^alpha).
    pub fn gap(&self, alpha: f64) -> EntropicValue {
        let a = self.marginal.power_trace(alpha);
        let j = self.joint.power_trace(alpha);
        EntropicValue {
            value: a.value - j.value,
            support_restricted: a.support_restricted || j.support_restricted,
        }
    }

    /// T_alpha, with the alpha = 1 and alpha = inf limits.
    pub fn conditional_tsallis(&self, alpha: f64) -> EntropicValue {
        if alpha == f64::INFINITY {
            let tol = self.joint.tol();
            let value = if self.joint.max() <= self.marginal.max() * (1.0 + tol) {
                0.0
            } else {
                f64::NEG_INFINITY
            };
            return EntropicValue::plain(value);
        }
        if alpha == 1.0 {
            return EntropicValue::plain(self.joint.von_neumann() - self.marginal.von_neumann());
        }
        let a = self.marginal.power_trace(alpha);
        let j = self.joint.power_trace(alpha);
        EntropicValue {
            value: (a.value - j.value) / ((alpha - 1.0) * a.value),
            support_restricted: a.support_restricted || j.support_restricted,
        }
    }
}

/// S_alpha from eigenvalues, natural log. alpha = 0 gives log rank, 1 the
/// von Neumann entropy, infinity -log(lambda_max).
pub fn renyi_from_spectrum(spectrum: &Spectrum, alpha: f64) -> Result<f64> {
    if alpha.is_nan() || alpha < 0.0 {
        return Err(Error::InvalidParameter(format!("Renyi parameter {alpha} must be >= 0")));
    }
    Ok(if alpha == 0.0 {
        (spectrum.rank() as f64).ln()
    } else if alpha == 1.0 {
        spectrum.von_neumann()
    } else if alpha == f64::INFINITY {
        -spectrum.max().ln()
    } else {
        spectrum.power_trace(alpha).value.ln() / (1.0 - alpha)
    })
}

/// S_alpha(rho) for a density matrix.
pub fn renyi_entropy(rho: &ComplexMatrix, alpha: f64, tol: f64) -> Result<f64> {
    let spectrum = eigvalsh(rho, tol)?;
    let trace = rho.trace().re;
    if (trace - 1.0).abs() > tol {
        return Err(Error::TraceNotOne { trace, tol });
    }
    if spectrum.min() < -tol {
        return Err(Error::NotPositive {
            min_eig: spectrum.min(),
            tol,
        });
    }
    renyi_from_spectrum(&spectrum, alpha)
}

/// tr(rho_A^alpha) - tr(rho^alpha), for alpha >= 0.
pub fn entropic_gap(s: &BipartiteState, alpha: f64) -> Result<f64> {
    if alpha.is_nan() || alpha < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "entropic gap needs alpha >= 0, got {alpha}"
        )));
    }
    Ok(SpectralPair::of(s)?.gap(alpha).value)
}

/// Conditional Tsallis entropy T_alpha; -inf encodes divergence at alpha = inf.
pub fn conditional_tsallis(s: &BipartiteState, alpha: f64) -> Result<EntropicValue> {
    if alpha.is_nan() {
        return Err(Error::InvalidParameter("alpha is NaN".into()));
    }
    Ok(SpectralPair::of(s)?.conditional_tsallis(alpha))
}

/// tr(rho^alpha) - tr(rho_A^alpha) for alpha < 0; nonnegative for every state.
pub fn negative_alpha_bound(s: &BipartiteState, alpha: f64) -> Result<EntropicValue> {
    if alpha.is_nan() || alpha >= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "negative-power bound needs alpha < 0, got {alpha}"
        )));
    }
    let g = SpectralPair::of(s)?.gap(alpha);
    Ok(EntropicValue {
        value: -g.value,
        support_restricted: g.support_restricted,
    })
}

/// rho_A ⊗ 1 - rho.
pub fn reduction_operator(s: &BipartiteState) -> ComplexMatrix {
    let rho_a = s.reduced(Subsystem::A);
    &rho_a.kron(&ComplexMatrix::identity(s.dim_b())) - s.matrix()
}

/// Smallest eigenvalue of rho_A ⊗ 1 - rho; the criterion holds iff >= -tol.
pub fn reduction_criterion(s: &BipartiteState) -> Result<f64> {
    Ok(eigvalsh(&reduction_operator(s), s.tol())?.min())
}

/// Smallest eigenvalue of the partial transpose; PPT holds iff >= -tol.
pub fn ppt_criterion(s: &BipartiteState) -> Result<f64> {
    Ok(eigvalsh(&s.partial_transpose(), s.tol())?.min())
}
