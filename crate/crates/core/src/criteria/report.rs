use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Outcome of a single separability test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(pass: bool) -> Self {
        if pass {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn passed(self) -> bool {
        self == Verdict::Pass
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Entropic quantities at one value of alpha.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaEntry {
    pub alpha: f64,
    /// S_alpha(rho); NaN for alpha < 0.
    pub renyi: f64,
    /// S_alpha(rho_A); NaN for alpha < 0.
    pub renyi_marginal: f64,
    /// tr(rho_A^alpha) - tr(rho^alpha)
    pub gap: f64,
    /// T_alpha, possibly -inf
    pub tsallis: f64,
}

pub const FLAG_SUPPORT_RESTRICTED: &str = "support_restricted";

/// Everything the registered criteria computed for one state.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct CriterionReport {
    pub dim_a: usize,
    pub dim_b: usize,
    /// Eigenvalues of rho, ascending.
    pub spectrum: Vec<f64>,
    /// Eigenvalues of rho_A, ascending.
    pub spectrum_a: Vec<f64>,
    pub ppt_min_eig: Option<f64>,
    pub reduction_min_eig: Option<f64>,
    pub entropic: Vec<AlphaEntry>,
    pub chsh: Option<f64>,
    pub verdicts: BTreeMap<String, Verdict>,
    pub flags: BTreeSet<String>,
}

impl CriterionReport {
    pub fn verdict(&self, name: &str) -> Option<Verdict> {
        self.verdicts.get(name).copied()
    }

    pub fn set_verdict(&mut self, name: impl Into<String>, pass: bool) {
        self.verdicts.insert(name.into(), Verdict::from_bool(pass));
    }

    pub fn at_alpha(&self, alpha: f64) -> Option<&AlphaEntry> {
        self.entropic.iter().find(|e| e.alpha == alpha)
    }

    pub fn tsallis(&self, alpha: f64) -> Option<f64> {
        self.at_alpha(alpha).map(|e| e.tsallis)
    }

    pub fn gap(&self, alpha: f64) -> Option<f64> {
        self.at_alpha(alpha).map(|e| e.gap)
    }

    pub fn has_flag(&self, flag: &str) -> bool {
        self.flags.contains(flag)
    }

    /// Largest difference over the quantities that depend only on the
    /// spectra of rho and rho_A. Infinite sentinels compare equal to
    /// themselves. Returns infinity when the reports are not comparable.
    pub fn spectral_distance(&self, other: &CriterionReport) -> f64 {
        fn diff(a: f64, b: f64) -> f64 {
            if a == b || (a.is_nan() && b.is_nan()) {
                0.0
            } else {
                (a - b).abs()
            }
        }
        if self.spectrum.len() != other.spectrum.len()
            || self.spectrum_a.len() != other.spectrum_a.len()
            || self.entropic.len() != other.entropic.len()
        {
            return f64::INFINITY;
        }
        let mut d = 0.0_f64;
        for (a, b) in self.spectrum.iter().zip(&other.spectrum) {
            d = d.max(diff(*a, *b));
        }
        for (a, b) in self.spectrum_a.iter().zip(&other.spectrum_a) {
            d = d.max(diff(*a, *b));
        }
        for (a, b) in self.entropic.iter().zip(&other.entropic) {
            if a.alpha != b.alpha {
                return f64::INFINITY;
            }
            d = d
                .max(diff(a.renyi, b.renyi))
                .max(diff(a.renyi_marginal, b.renyi_marginal))
                .max(diff(a.gap, b.gap))
                .max(diff(a.tsallis, b.tsallis));
        }
        d
    }

    /// Largest difference over every numeric field, including PPT,
    /// reduction and CHSH values.
    pub fn distance(&self, other: &CriterionReport) -> f64 {
        fn opt(a: Option<f64>, b: Option<f64>) -> f64 {
            match (a, b) {
                (Some(x), Some(y)) => (x - y).abs(),
                (None, None) => 0.0,
                _ => f64::INFINITY,
            }
        }
        self.spectral_distance(other)
            .max(opt(self.ppt_min_eig, other.ppt_min_eig))
            .max(opt(self.reduction_min_eig, other.reduction_min_eig))
            .max(opt(self.chsh, other.chsh))
    }
}
