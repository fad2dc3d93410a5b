//! Sign checks for the entropic gap on states that satisfy the reduction
//! criterion, and the ppt => reduction => sign-pattern chain.

use rayon::prelude::*;

use crate::criteria::entropic::{ppt_criterion, reduction_criterion, SpectralPair};
use crate::error::Result;
use crate::linalg::BipartiteState;

/// alpha grid for the sign-pattern checks.
pub const SIGN_CHECK_ALPHAS: [f64; 7] = [0.25, 0.5, 0.75, 1.5, 2.0, 3.0, 5.0];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaCheck {
    pub alpha: f64,
    /// tr(rho_A^alpha) - tr(rho^alpha)
    pub gap: f64,
    pub holds: bool,
    /// How far past the equality band the gap went; zero when it holds.
    pub violation: f64,
}

/// Expected signs: gap >= 0 for alpha > 1, gap <= 0 for 0 <= alpha < 1.
#[derive(Debug, Clone, PartialEq)]
pub struct SignPatternRecord {
    /// False when the state violates the reduction criterion, in which case
    /// no sign is expected and `checks` is empty.
    pub applicable: bool,
    pub reduction_min_eig: f64,
    pub checks: Vec<AlphaCheck>,
}

impl SignPatternRecord {
    pub fn violations(&self) -> impl Iterator<Item = &AlphaCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }

    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

fn sign_checks(spectra: &SpectralPair, alphas: &[f64], eps: f64) -> Vec<AlphaCheck> {
    alphas
        .iter()
        .filter(|&&a| a >= 0.0 && a != 1.0 && a.is_finite())
        .map(|&alpha| {
            let gap = spectra.gap(alpha).value;
            let excess = if alpha > 1.0 { -gap - eps } else { gap - eps };
            AlphaCheck {
                alpha,
                gap,
                holds: excess <= 0.0,
                violation: excess.max(0.0),
            }
        })
        .collect()
}

/// Checks the gap signs on `s` if it satisfies the reduction criterion.
pub fn sign_pattern_harness(s: &BipartiteState, alphas: &[f64], eps: f64) -> Result<SignPatternRecord> {
    let reduction_min_eig = reduction_criterion(s)?;
    if reduction_min_eig < -s.tol() {
        return Ok(SignPatternRecord {
            applicable: false,
            reduction_min_eig,
            checks: Vec::new(),
        });
    }
    let spectra = SpectralPair::of(s)?;
    Ok(SignPatternRecord {
        applicable: true,
        reduction_min_eig,
        checks: sign_checks(&spectra, alphas, eps),
    })
}

/// One state's position in the chain ppt => reduction => sign pattern.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainRecord {
    pub ppt_min_eig: f64,
    pub ppt_pass: bool,
    pub reduction_pass: bool,
    pub sign: SignPatternRecord,
}

impl ChainRecord {
    /// PPT holds but the reduction criterion fails.
    pub fn ppt_without_reduction(&self) -> bool {
        self.ppt_pass && !self.reduction_pass
    }

    /// The reduction criterion holds but some gap has the wrong sign.
    pub fn reduction_without_sign(&self) -> bool {
        self.reduction_pass && !self.sign.all_hold()
    }

    pub fn is_exception(&self) -> bool {
        self.ppt_without_reduction() || self.reduction_without_sign()
    }
}

pub fn chain_record(s: &BipartiteState, alphas: &[f64], eps: f64) -> Result<ChainRecord> {
    let ppt_min_eig = ppt_criterion(s)?;
    let sign = sign_pattern_harness(s, alphas, eps)?;
    Ok(ChainRecord {
        ppt_min_eig,
        ppt_pass: ppt_min_eig >= -s.tol(),
        reduction_pass: sign.applicable,
        sign,
    })
}

/// Chain records for many states, evaluated in parallel, returned in input order.
pub fn implication_chain(states: &[BipartiteState], alphas: &[f64], eps: f64) -> Result<Vec<ChainRecord>> {
    states.par_iter().map(|s| chain_record(s, alphas, eps)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{phi_plus, werner};
    use crate::SIGN_EPS;

    #[test]
    fn bell_state_not_applicable() {
        let r = sign_pattern_harness(&phi_plus(), &SIGN_CHECK_ALPHAS, SIGN_EPS).unwrap();
        assert!(!r.applicable);
        assert!(r.checks.is_empty());
    }

    #[test]
    fn werner_below_threshold_has_no_violations() {
        let s = werner(3, 0.4).unwrap();
        let r = sign_pattern_harness(&s, &SIGN_CHECK_ALPHAS, SIGN_EPS).unwrap();
        assert!(r.applicable);
        assert_eq!(r.checks.len(), SIGN_CHECK_ALPHAS.len());
        assert_eq!(r.violations().count(), 0);
    }

    #[test]
    fn alpha_one_and_infinity_skipped() {
        let s = werner(3, 0.4).unwrap();
        let r = sign_pattern_harness(&s, &[1.0, f64::INFINITY, 2.0], SIGN_EPS).unwrap();
        assert_eq!(r.checks.len(), 1);
    }

    #[test]
    fn chain_on_entangled_werner() {
        // for d >= 3 the reduction criterion misses entangled Werner states
        let rec = chain_record(&werner(3, 0.9).unwrap(), &SIGN_CHECK_ALPHAS, SIGN_EPS).unwrap();
        assert!(!rec.ppt_pass && rec.reduction_pass);
        assert!(!rec.is_exception());
        let rec = chain_record(&werner(2, 0.9).unwrap(), &SIGN_CHECK_ALPHAS, SIGN_EPS).unwrap();
        assert!(!rec.ppt_pass && !rec.reduction_pass);
    }
}
