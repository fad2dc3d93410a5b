//! Report rows for each subcommand.

use std::path::Path;

use rayon::prelude::*;
use sepcheck::criteria::{
    alpha_label, implication_chain, ChainRecord, CriterionRegistry, CriterionReport, EvalContext,
};
use sepcheck::random::StateSampler;
use sepcheck::states::{werner, werner_counterpart, StateRegistry};
use sepcheck::twoqubit::qubit_pair_audit;
use sepcheck::{BipartiteState, Subsystem};

use crate::report::ReportRow;
use crate::statefile::read_state;
use crate::CliError;

/// A resolved `eval` target: where it came from and its parameters.
pub struct Target {
    pub scenario: String,
    pub params: Vec<(String, f64)>,
    pub state: BipartiteState,
}

/// Builder specs win over paths; anything else is a usage error.
pub fn resolve_state(spec: &str, states: &StateRegistry, tol: f64) -> Result<Target, CliError> {
    let name = spec.split(':').next().unwrap_or_default();
    if states.get(name).is_some() {
        let (builder, args) = states.parse(spec).map_err(CliError::usage)?;
        let state = builder.build(&args).map_err(CliError::usage)?;
        let params = builder.params().iter().map(|p| p.to_string()).zip(args).collect();
        return Ok(Target {
            scenario: name.to_string(),
            params,
            state,
        });
    }
    let path = Path::new(spec);
    if path.exists() || spec.ends_with(".json") {
        let state = read_state(path, tol)?;
        return Ok(Target {
            scenario: spec.to_string(),
            params: Vec::new(),
            state,
        });
    }
    Err(CliError::Usage(format!(
        "unknown state spec '{spec}' (builders: {})",
        states.names().collect::<Vec<_>>().join(", ")
    )))
}

/// Every quantity in a report, in a fixed order.
fn push_report(row: &mut ReportRow, prefix: &str, report: &CriterionReport, spectra: bool) {
    let key = |name: &str| format!("{prefix}{name}");
    if let Some(v) = report.ppt_min_eig {
        row.quantity(key("ppt_min_eig"), v);
    }
    if let Some(v) = report.reduction_min_eig {
        row.quantity(key("reduction_min_eig"), v);
    }
    if let Some(v) = report.chsh {
        row.quantity(key("chsh_m"), v);
    }
    for e in &report.entropic {
        let a = alpha_label(e.alpha);
        row.quantity(key(&format!("S[{a}]")), e.renyi);
        row.quantity(key(&format!("S_A[{a}]")), e.renyi_marginal);
        row.quantity(key(&format!("gap[{a}]")), e.gap);
        row.quantity(key(&format!("T[{a}]")), e.tsallis);
    }
    if spectra {
        for (i, v) in report.spectrum.iter().enumerate() {
            row.quantity(key(&format!("eig{i}")), *v);
        }
        for (i, v) in report.spectrum_a.iter().enumerate() {
            row.quantity(key(&format!("eigA{i}")), *v);
        }
    }
    for (name, v) in &report.verdicts {
        row.verdict(key(name), v.as_str());
    }
    for flag in &report.flags {
        row.verdict(key(flag), "set");
    }
}

pub fn eval(target: &Target, criteria: &CriterionRegistry, ctx: &EvalContext) -> Result<ReportRow, CliError> {
    let report = criteria.evaluate(&target.state, ctx).map_err(CliError::runtime)?;
    let mut row = ReportRow::new(&target.scenario);
    for (k, v) in &target.params {
        row.param(k, *v);
    }
    row.param("dimA", report.dim_a as f64)
        .param("dimB", report.dim_b as f64);
    push_report(&mut row, "", &report, true);
    Ok(row)
}

fn marginal_diff(a: &BipartiteState, b: &BipartiteState) -> f64 {
    let side = |s| a.reduced(s).max_abs_diff(&b.reduced(s));
    side(Subsystem::A).max(side(Subsystem::B))
}

fn spectrum_diff(a: &CriterionReport, b: &CriterionReport) -> f64 {
    a.spectrum
        .iter()
        .zip(&b.spectrum)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

/// Counterpart columns mirror the Werner ones; they hold NaN and verdict
/// `unavailable` when no counterpart exists (even d).
fn nan_like(row: &mut ReportRow, from: &str, to: &str) {
    let quantities: Vec<String> = row
        .quantities
        .iter()
        .filter_map(|(k, _)| k.strip_prefix(from))
        .map(String::from)
        .collect();
    let verdicts: Vec<String> = row
        .verdicts
        .iter()
        .filter_map(|(k, _)| k.strip_prefix(from))
        .map(String::from)
        .collect();
    for q in quantities {
        row.quantity(format!("{to}{q}"), f64::NAN);
    }
    for v in verdicts {
        row.verdict(format!("{to}{v}"), "unavailable");
    }
}

fn werner_row(d: usize, p: f64, criteria: &CriterionRegistry, ctx: &EvalContext) -> Result<ReportRow, CliError> {
    let w = werner(d, p).map_err(CliError::usage)?;
    let wr = criteria.evaluate(&w, ctx).map_err(CliError::runtime)?;
    let mut row = ReportRow::new("werner-sweep");
    row.param("d", d as f64).param("p", p);
    push_report(&mut row, "werner.", &wr, false);
    if d % 2 == 1 {
        let c = werner_counterpart(d, p).map_err(CliError::runtime)?;
        let cr = criteria.evaluate(&c, ctx).map_err(CliError::runtime)?;
        push_report(&mut row, "counterpart.", &cr, false);
        row.quantity("spectrum_diff", spectrum_diff(&wr, &cr));
        row.quantity("marginal_diff", marginal_diff(&w, &c));
    } else {
        nan_like(&mut row, "werner.", "counterpart.");
        row.quantity("spectrum_diff", f64::NAN);
        row.quantity("marginal_diff", f64::NAN);
    }
    Ok(row)
}

pub fn sweep_werner(
    d: usize,
    grid: &[f64],
    criteria: &CriterionRegistry,
    ctx: &EvalContext,
) -> Result<Vec<ReportRow>, CliError> {
    if d < 2 {
        return Err(CliError::Usage(format!("d = {d}: Werner states need d >= 2")));
    }
    grid.par_iter().map(|&p| werner_row(d, p, criteria, ctx)).collect()
}

fn family_row(r: f64, criteria: &CriterionRegistry, ctx: &EvalContext) -> Result<ReportRow, CliError> {
    let audit = qubit_pair_audit(r, criteria, ctx).map_err(CliError::usage)?;
    let mut row = ReportRow::new("family-sweep");
    row.param("r", r);
    push_report(&mut row, "rho.", &audit.rho, false);
    push_report(&mut row, "rho_prime.", &audit.rho_prime, false);
    row.quantity("rho.det_pt", audit.det_pt_rho);
    row.quantity("rho_prime.det_pt", audit.det_pt_rho_prime);
    row.quantity("spectrum_diff", audit.spectrum_diff);
    row.quantity("marginal_diff", audit.reduction_diff);
    // pass = determinant of the partial transpose not negative (separable)
    row.verdict("rho.det", if audit.det_pt_rho < -ctx.tol { "fail" } else { "pass" });
    row.verdict(
        "rho_prime.det",
        if audit.rho_prime_entangled(ctx.tol) {
            "fail"
        } else {
            "pass"
        },
    );
    Ok(row)
}

pub fn sweep_family(grid: &[f64], criteria: &CriterionRegistry, ctx: &EvalContext) -> Result<Vec<ReportRow>, CliError> {
    grid.par_iter().map(|&r| family_row(r, criteria, ctx)).collect()
}

/// Random states (induced mixed and separable, alternating) run through
/// the PPT => reduction => entropic-sign chain; one summary row.
pub fn harness(
    dim_a: usize,
    dim_b: usize,
    samples: usize,
    seed: u64,
    ctx: &EvalContext,
) -> Result<ReportRow, CliError> {
    if dim_a < 2 || dim_b < 2 {
        return Err(CliError::Usage(format!(
            "dimensions {dim_a}x{dim_b}: both must be at least 2"
        )));
    }
    let mut sampler = StateSampler::new(seed);
    let states: Vec<BipartiteState> = (0..samples)
        .map(|i| {
            let s = if i % 2 == 0 {
                sampler.mixed_state(dim_a, dim_b)
            } else {
                sampler.separable_state(dim_a, dim_b)
            };
            s.retol(ctx.tol)
        })
        .collect();
    let alphas: Vec<f64> = ctx
        .alphas
        .iter()
        .copied()
        .filter(|a| a.is_finite() && *a >= 0.0)
        .collect();
    let records = implication_chain(&states, &alphas, ctx.eps).map_err(CliError::runtime)?;
    let count = |f: &dyn Fn(&ChainRecord) -> bool| records.iter().filter(|r| f(r)).count() as f64;
    let worst = records
        .iter()
        .filter(|r| r.reduction_pass)
        .flat_map(|r| r.sign.checks.iter().map(|c| c.violation))
        .fold(0.0, f64::max);
    let exceptions = count(&|r| r.is_exception());

    let mut row = ReportRow::new("chain");
    row.param("dimA", dim_a as f64)
        .param("dimB", dim_b as f64)
        .param("samples", samples as f64)
        .param("seed", seed as f64);
    row.quantity("ppt_pass", count(&|r| r.ppt_pass))
        .quantity("reduction_pass", count(&|r| r.reduction_pass))
        .quantity("sign_hold", count(&|r| r.sign.applicable && r.sign.all_hold()))
        .quantity("ppt_without_reduction", count(&|r| r.ppt_without_reduction()))
        .quantity("reduction_without_sign", count(&|r| r.reduction_without_sign()))
        .quantity("max_violation", worst);
    row.verdict("chain", if exceptions == 0.0 { "pass" } else { "fail" });
    Ok(row)
}
