//! `sepcheck`: evaluate separability criteria on bipartite states and sweep
//! the Werner and two-qubit families.

mod commands;
mod grid;
mod report;
mod statefile;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use sepcheck::criteria::{CriterionRegistry, EvalContext};
use sepcheck::states::StateRegistry;
use sepcheck::{DEFAULT_TOL, SIGN_EPS};

use crate::report::{write_rows, Format, ReportRow};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("invalid state: {0}")]
    InvalidState(String),
    #[error("{0}")]
    Runtime(String),
}

impl CliError {
    pub fn usage(e: impl std::fmt::Display) -> Self {
        Self::Usage(e.to_string())
    }

    pub fn runtime(e: impl std::fmt::Display) -> Self {
        Self::Runtime(e.to_string())
    }

    fn exit_code(&self) -> u8 {
        match self {
            Self::Usage(_) => 2,
            Self::InvalidState(_) => 3,
            Self::Runtime(_) => 1,
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "sepcheck",
    version,
    about = "Spectrum-based separability criteria on bipartite density matrices"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "csv", global = true)]
    format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Eigenvalue tolerance for validation and verdicts.
    #[arg(long, default_value_t = DEFAULT_TOL, global = true)]
    tol: f64,

    /// Seed for randomized commands.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct CriteriaArgs {
    /// Comma-separated alpha values; `inf` allowed.
    #[arg(long)]
    alphas: Option<String>,

    /// Comma-separated criterion names (default: all).
    #[arg(long, value_delimiter = ',')]
    criteria: Vec<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate every criterion on one state (builder spec or JSON file).
    Eval {
        /// e.g. `werner:3:0.9`, `counterpart:3:0.9`, `family:0.3`, `rank-counterexample`, or a path
        state: String,
        #[command(flatten)]
        criteria: CriteriaArgs,
    },
    /// Parameter sweeps, one row per grid point.
    Sweep {
        #[command(subcommand)]
        kind: SweepKind,
    },
    /// Write a built state as a JSON density-matrix file.
    WriteState { state: String },
    /// Count exceptions to ppt => reduction => entropic signs on random states.
    Harness {
        /// Dimensions as `dAxdB`.
        #[arg(long, default_value = "2x2")]
        dims: String,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long)]
        alphas: Option<String>,
    },
    /// List state builders and criteria.
    List,
}

#[derive(Subcommand, Debug)]
enum SweepKind {
    /// Werner state of dimension d against its separable counterpart, over p.
    Werner {
        #[arg(long)]
        d: usize,
        /// `start:stop:step` or comma list; empty for no points.
        #[arg(long, allow_hyphen_values = true)]
        grid: String,
        #[command(flatten)]
        criteria: CriteriaArgs,
    },
    /// Two-qubit family rho(r) against its controlled-phase image rho'(r).
    Family {
        #[arg(long, allow_hyphen_values = true)]
        grid: String,
        #[command(flatten)]
        criteria: CriteriaArgs,
    },
}

fn context(tol: f64, alphas: Option<&str>) -> Result<EvalContext, CliError> {
    let mut ctx = EvalContext {
        tol,
        eps: SIGN_EPS,
        ..Default::default()
    };
    if let Some(a) = alphas {
        ctx.alphas = grid::parse_alphas(a)?;
    }
    Ok(ctx)
}

fn registry(args: &CriteriaArgs) -> Result<CriterionRegistry, CliError> {
    let all = CriterionRegistry::with_defaults();
    if args.criteria.is_empty() {
        Ok(all)
    } else {
        all.select(&args.criteria).map_err(CliError::usage)
    }
}

fn parse_dims(s: &str) -> Result<(usize, usize), CliError> {
    s.split_once('x')
        .and_then(|(a, b)| Some((a.parse().ok()?, b.parse().ok()?)))
        .ok_or_else(|| CliError::Usage(format!("invalid dims '{s}', expected e.g. 2x3")))
}

fn emit(bytes: &[u8], out: Option<&PathBuf>) -> Result<(), CliError> {
    match out {
        Some(path) => {
            fs::write(path, bytes).map_err(|e| CliError::Runtime(format!("cannot write {}: {e}", path.display())))
        }
        None => io::stdout().write_all(bytes).map_err(CliError::runtime),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    if !(cli.tol.is_finite() && cli.tol >= 0.0) {
        return Err(CliError::Usage(format!(
            "--tol {} must be a non-negative number",
            cli.tol
        )));
    }
    let states = StateRegistry::with_defaults();
    let rows: Vec<ReportRow> = match &cli.command {
        Command::Eval { state, criteria } => {
            let ctx = context(cli.tol, criteria.alphas.as_deref())?;
            let target = commands::resolve_state(state, &states, cli.tol)?;
            vec![commands::eval(&target, &registry(criteria)?, &ctx)?]
        }
        Command::Sweep { kind } => match kind {
            SweepKind::Werner { d, grid, criteria } => {
                let ctx = context(cli.tol, criteria.alphas.as_deref())?;
                commands::sweep_werner(*d, &grid::parse_grid(grid)?, &registry(criteria)?, &ctx)?
            }
            SweepKind::Family { grid, criteria } => {
                let ctx = context(cli.tol, criteria.alphas.as_deref())?;
                commands::sweep_family(&grid::parse_grid(grid)?, &registry(criteria)?, &ctx)?
            }
        },
        Command::WriteState { state } => {
            let target = commands::resolve_state(state, &states, cli.tol)?;
            return emit(statefile::to_json(&target.state).as_bytes(), cli.out.as_ref());
        }
        Command::Harness { dims, samples, alphas } => {
            let (da, db) = parse_dims(dims)?;
            let ctx = context(cli.tol, alphas.as_deref())?;
            vec![commands::harness(da, db, *samples, cli.seed, &ctx)?]
        }
        Command::List => {
            let mut text = String::from("states:\n");
            for name in states.names() {
                let params = states.get(name).map(|b| b.params().join(":")).unwrap_or_default();
                let spec = if params.is_empty() {
                    name.to_string()
                } else {
                    format!("{name}:{params}")
                };
                text.push_str(&format!("  {spec}\n"));
            }
            text.push_str("criteria:\n");
            for c in CriterionRegistry::with_defaults().iter() {
                text.push_str(&format!("  {:<10} {}\n", c.name(), c.describe()));
            }
            return emit(text.as_bytes(), cli.out.as_ref());
        }
    };
    let mut buf = Vec::new();
    write_rows(&rows, cli.format, &mut buf).map_err(CliError::runtime)?;
    emit(&buf, cli.out.as_ref())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("sepcheck: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
