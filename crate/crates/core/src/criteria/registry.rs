use std::sync::Arc;

use crate::criteria::chsh::horodecki_chsh;
use crate::criteria::entropic::{ppt_criterion, reduction_criterion, renyi_from_spectrum, SpectralPair};
use crate::criteria::report::{AlphaEntry, CriterionReport, FLAG_SUPPORT_RESTRICTED};
use crate::error::{Error, Result};
use crate::linalg::BipartiteState;
use crate::{DEFAULT_TOL, SIGN_EPS};

/// Default entropic parameter grid.
pub const DEFAULT_ALPHAS: [f64; 10] = [0.0, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 3.0, 5.0, f64::INFINITY];

/// Shared inputs for one evaluation.
#[derive(Debug, Clone)]
pub struct EvalContext {
    /// Eigenvalue tolerance for PSD and rank decisions.
    pub tol: f64,
    /// Equality band for entropic sign verdicts.
    pub eps: f64,
    pub alphas: Vec<f64>,
}

impl Default for EvalContext {
    fn default() -> Self {
        Self {
            tol: DEFAULT_TOL,
            eps: SIGN_EPS,
            alphas: DEFAULT_ALPHAS.to_vec(),
        }
    }
}

/// Everything a criterion sees: the state and its precomputed spectra.
pub struct Subject<'a> {
    pub state: &'a BipartiteState,
    pub spectra: &'a SpectralPair,
}

/// One separability test. Implementations write their quantities and
/// verdicts into the shared report.
pub trait Criterion: Send + Sync {
    fn name(&self) -> &'static str;

    fn describe(&self) -> &'static str;

    /// Whether the criterion is defined for this state; skipped otherwise.
    fn applies_to(&self, _state: &BipartiteState) -> bool {
        true
    }

    fn evaluate(&self, subject: &Subject<'_>, ctx: &EvalContext, report: &mut CriterionReport) -> Result<()>;
}

pub struct PptCriterion;

impl Criterion for PptCriterion {
    fn name(&self) -> &'static str {
        "ppt"
    }

    fn describe(&self) -> &'static str {
        "minimum eigenvalue of the partial transpose on A"
    }

    fn evaluate(&self, subject: &Subject<'_>, ctx: &EvalContext, report: &mut CriterionReport) -> Result<()> {
        let v = ppt_criterion(subject.state)?;
        report.ppt_min_eig = Some(v);
        report.set_verdict("ppt", v >= -ctx.tol);
        Ok(())
    }
}

pub struct ReductionCriterion;

impl Criterion for ReductionCriterion {
    fn name(&self) -> &'static str {
        "reduction"
    }

    fn describe(&self) -> &'static str {
        "minimum eigenvalue of rho_A ⊗ 1 - rho"
    }

    fn evaluate(&self, subject: &Subject<'_>, ctx: &EvalContext, report: &mut CriterionReport) -> Result<()> {
        let v = reduction_criterion(subject.state)?;
        report.reduction_min_eig = Some(v);
        report.set_verdict("reduction", v >= -ctx.tol);
        Ok(())
    }
}

/// Rényi entropies, entropic gaps and conditional Tsallis entropies on the
/// context's alpha grid.
pub struct EntropicCriterion;

impl Criterion for EntropicCriterion {
    fn name(&self) -> &'static str {
        "entropic"
    }

    fn describe(&self) -> &'static str {
        "conditional Renyi/Tsallis entropies and tr(rho_A^a) - tr(rho^a) over the alpha grid"
    }

    fn evaluate(&self, subject: &Subject<'_>, ctx: &EvalContext, report: &mut CriterionReport) -> Result<()> {
        let sp = subject.spectra;
        for &alpha in &ctx.alphas {
            if alpha.is_nan() {
                return Err(Error::InvalidParameter("alpha grid contains NaN".into()));
            }
            let (renyi, renyi_marginal) = if alpha >= 0.0 {
                (
                    renyi_from_spectrum(&sp.joint, alpha)?,
                    renyi_from_spectrum(&sp.marginal, alpha)?,
                )
            } else {
                (f64::NAN, f64::NAN)
            };
            let gap = sp.gap(alpha);
            let tsallis = sp.conditional_tsallis(alpha);
            if gap.support_restricted || tsallis.support_restricted {
                report.flags.insert(FLAG_SUPPORT_RESTRICTED.to_string());
            }
            report.set_verdict(format!("tsallis[{}]", alpha_label(alpha)), tsallis.value >= -ctx.eps);
            report.entropic.push(AlphaEntry {
                alpha,
                renyi,
                renyi_marginal,
                gap: gap.value,
                tsallis: tsallis.value,
            });
        }
        Ok(())
    }
}

/// Operator-norm condition ||rho|| <= ||rho_A||, the S_inf inequality.
pub struct OperatorNormCriterion;

impl Criterion for OperatorNormCriterion {
    fn name(&self) -> &'static str {
        "s-inf"
    }

    fn describe(&self) -> &'static str {
        "largest eigenvalue of rho not above that of rho_A"
    }

    fn evaluate(&self, subject: &Subject<'_>, ctx: &EvalContext, report: &mut CriterionReport) -> Result<()> {
        let sp = subject.spectra;
        report.set_verdict("s_inf", sp.joint.max() <= sp.marginal.max() + ctx.eps);
        Ok(())
    }
}

/// Horodecki CHSH quantity, two qubits only.
pub struct ChshCriterion;

impl Criterion for ChshCriterion {
    fn name(&self) -> &'static str {
        "chsh"
    }

    fn describe(&self) -> &'static str {
        "sum of the two largest eigenvalues of T^T T (two qubits)"
    }

    fn applies_to(&self, state: &BipartiteState) -> bool {
        state.dim_a() == 2 && state.dim_b() == 2
    }

    fn evaluate(&self, subject: &Subject<'_>, ctx: &EvalContext, report: &mut CriterionReport) -> Result<()> {
        let m = horodecki_chsh(subject.state)?;
        report.chsh = Some(m);
        // pass = no Bell violation
        report.set_verdict("chsh", m <= 1.0 + ctx.tol);
        Ok(())
    }
}

/// Name used for alpha values in verdict keys and report columns.
pub fn alpha_label(alpha: f64) -> String {
    if alpha == f64::INFINITY {
        "inf".to_string()
    } else if alpha == f64::NEG_INFINITY {
        "-inf".to_string()
    } else {
        format!("{alpha}")
    }
}

/// Criteria in registration order, selectable by name.
#[derive(Clone, Default)]
pub struct CriterionRegistry {
    criteria: Vec<Arc<dyn Criterion>>,
}

impl CriterionRegistry {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn with_defaults() -> Self {
        let mut r = Self::empty();
        r.register(Arc::new(PptCriterion));
        r.register(Arc::new(ReductionCriterion));
        r.register(Arc::new(EntropicCriterion));
        r.register(Arc::new(OperatorNormCriterion));
        r.register(Arc::new(ChshCriterion));
        r
    }

    /// Adds a criterion, replacing one with the same name in place.
    pub fn register(&mut self, criterion: Arc<dyn Criterion>) {
        match self.criteria.iter().position(|c| c.name() == criterion.name()) {
            Some(i) => self.criteria[i] = criterion,
            None => self.criteria.push(criterion),
        }
    }

    pub fn get(&self, name: &str) -> Option<&Arc<dyn Criterion>> {
        self.criteria.iter().find(|c| c.name() == name)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Arc<dyn Criterion>> {
        self.criteria.iter()
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.criteria.iter().map(|c| c.name()).collect()
    }

    /// Sub-registry with only the named criteria, in the order given.
    pub fn select<S: AsRef<str>>(&self, names: &[S]) -> Result<Self> {
        let mut out = Self::empty();
        for name in names {
            let c = self.get(name.as_ref()).ok_or_else(|| Error::Unknown {
                kind: "criterion",
                name: name.as_ref().to_string(),
            })?;
            out.register(Arc::clone(c));
        }
        Ok(out)
    }

    /// Runs every applicable criterion on `state`.
    pub fn evaluate(&self, state: &BipartiteState, ctx: &EvalContext) -> Result<CriterionReport> {
        let state = state.clone().retol(ctx.tol);
        let spectra = SpectralPair::of(&state)?;
        let mut report = CriterionReport {
            dim_a: state.dim_a(),
            dim_b: state.dim_b(),
            spectrum: spectra.joint.values().to_vec(),
            spectrum_a: spectra.marginal.values().to_vec(),
            ..Default::default()
        };
        let subject = Subject {
            state: &state,
            spectra: &spectra,
        };
        for c in self.criteria.iter().filter(|c| c.applies_to(&state)) {
            c.evaluate(&subject, ctx, &mut report)?;
        }
        Ok(report)
    }
}
