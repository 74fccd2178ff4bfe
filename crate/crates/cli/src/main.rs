mod build;
mod parse;

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write as _};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use build::{BuildArgs, Family};
use simplex_core::io::write_operator;
use simplex_core::tensor::{frobenius_distance, is_unitary};
use simplex_core::verifier::{
    campaign, find_check, CampaignConfig, CampaignReport, Mode, CHECKS, DEFAULT_VECTORS,
};
use simplex_core::{Error, Seed, Tolerance};

/// `writeln!` into a `String`, which cannot fail.
macro_rules! say {
    ($out:expr, $($arg:tt)*) => {{
        let _ = writeln!($out, $($arg)*);
    }};
}

#[derive(Debug, Parser)]
#[command(
    name = "simplex",
    version,
    about = "Build simplex-equation operators and verify the identities they satisfy"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[allow(clippy::large_enum_variant)]
#[derive(Debug, Subcommand)]
enum Command {
    /// Construct an operator, report unitarity and reduction distance, and write it to a file.
    Build(BuildArgs),
    /// Run registered checks as a seeded campaign and emit a JSON report.
    Verify(VerifyArgs),
    /// List operator families and verification checks.
    List(ListArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Dense,
    Matrixfree,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Registered check names (see `simplex list --checks`).
    #[arg(required = true)]
    checks: Vec<String>,
    /// Simplex order for checks that accept one.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,
    #[arg(long, env = "SIMPLEX_SEED", default_value_t = 0)]
    seed: u64,
    /// Absolute tolerance replacing each check's own.
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
    /// Random vectors per trial in matrix-free mode.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    vectors: Option<u64>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ListArgs {
    /// Only list checks.
    #[arg(long, conflicts_with = "families")]
    checks: bool,
    /// Only list operator families.
    #[arg(long)]
    families: bool,
    /// Machine-readable catalog.
    #[arg(long)]
    json: bool,
}

#[derive(Debug)]
pub enum CliError {
    /// Bad flags or names; exit 2.
    Usage(String),
    /// Construction or run failure; exit 1.
    Failure(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownCheck(_) | Error::DenseTooLarge { .. } => CliError::Usage(e.to_string()),
            _ => CliError::Failure(e.to_string()),
        }
    }
}

#[derive(Serialize)]
struct RunConfig {
    command: &'static str,
    #[serde(flatten)]
    campaign: CampaignConfig,
}

#[derive(Serialize)]
struct VerifyOutput {
    config: RunConfig,
    #[serde(flatten)]
    report: CampaignReport,
}

fn write_text(path: &PathBuf, text: &str) -> Result<(), CliError> {
    fs::write(path, text)
        .map_err(|e| CliError::Failure(format!("cannot write {}: {e}", path.display())))
}

fn cmd_build(args: &BuildArgs, out: &mut String) -> Result<bool, CliError> {
    let built = args.build()?;
    let op = &built.operator;
    say!(out, "family: {}", args.family.name());
    say!(out, "arity: {}", op.arity());
    say!(out, "dimension: {}", op.dim());
    say!(
        out,
        "unitary: {}",
        if is_unitary(op, Tolerance::default()) {
            "yes"
        } else {
            "no"
        }
    );
    if let Some((label, reference)) = &built.reference {
        say!(
            out,
            "distance to {label}: {:.3e}",
            frobenius_distance(op, reference)?
        );
    }
    let path = args.output_path();
    write_operator(&path, op)?;
    say!(out, "wrote: {}", path.display());
    Ok(true)
}

fn cmd_verify(args: &VerifyArgs, out: &mut String) -> Result<bool, CliError> {
    for name in &args.checks {
        find_check(name)?;
    }
    let mode = match (args.mode, args.vectors) {
        (Some(ModeArg::Dense), Some(_)) => {
            return Err(CliError::Usage(
                "--vectors only applies to --mode matrixfree".into(),
            ))
        }
        (Some(ModeArg::Dense), None) => Some(Mode::Dense),
        (Some(ModeArg::Matrixfree), v) | (None, v @ Some(_)) => Some(Mode::MatrixFree {
            vectors: v.map_or(DEFAULT_VECTORS, |v| v as usize),
        }),
        (None, None) => None,
    };
    if let Some(tol) = args.tol {
        if !(tol.is_finite() && tol >= 0.0) {
            return Err(CliError::Usage(format!("bad --tol {tol}")));
        }
    }
    if let Some(n) = args.n {
        if n < 2 {
            return Err(CliError::Usage(format!("--n must be at least 2, got {n}")));
        }
    }
    let config = CampaignConfig {
        checks: args.checks.clone(),
        trials: args.trials as usize,
        seed: Seed(args.seed),
        tolerance: args.tol.map(Tolerance::absolute),
        mode,
        n: args.n,
    };
    let report = campaign(&config)?;
    for r in &report.checks {
        eprintln!(
            "{}: {} (max {:.3e}, tolerance {:.1e}, {} trials, {}, {} ms)",
            r.check, r.verdict, r.max_residual, r.tolerance.absolute, r.trials, r.mode, r.ms
        );
    }
    let passed = report.verdict.passed();
    let output = VerifyOutput {
        config: RunConfig {
            command: "verify",
            campaign: config,
        },
        report,
    };
    let json =
        serde_json::to_string_pretty(&output).map_err(|e| CliError::Failure(e.to_string()))?;
    match &args.out {
        Some(path) => write_text(path, &(json + "\n"))?,
        None => say!(out, "{json}"),
    }
    Ok(passed)
}

#[derive(Serialize)]
struct FamilyEntry {
    name: String,
    description: &'static str,
}

#[derive(Serialize)]
struct CheckEntry {
    name: &'static str,
    description: &'static str,
    equation: &'static str,
    n: Option<usize>,
    variable_n: bool,
    tolerance: Tolerance,
}

#[derive(Serialize)]
struct Catalog {
    #[serde(skip_serializing_if = "Option::is_none")]
    families: Option<Vec<FamilyEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    checks: Option<Vec<CheckEntry>>,
}

fn cmd_list(args: &ListArgs, out: &mut String) -> Result<bool, CliError> {
    let show_families = !args.checks;
    let show_checks = !args.families;
    let families: Vec<FamilyEntry> = Family::value_variants()
        .iter()
        .map(|f| FamilyEntry {
            name: f.name(),
            description: f.description(),
        })
        .collect();
    let checks: Vec<CheckEntry> = CHECKS
        .iter()
        .map(|c| CheckEntry {
            name: c.name,
            description: c.description,
            equation: c.equation,
            n: c.n,
            variable_n: c.variable_n,
            tolerance: c.tolerance,
        })
        .collect();
    if args.json {
        let catalog = Catalog {
            families: show_families.then_some(families),
            checks: show_checks.then_some(checks),
        };
        let json =
            serde_json::to_string_pretty(&catalog).map_err(|e| CliError::Failure(e.to_string()))?;
        say!(out, "{json}");
        return Ok(true);
    }
    if show_families {
        say!(out, "families:");
        for f in &families {
            say!(out, "  {:<26} {}", f.name, f.description);
        }
    }
    if show_checks {
        say!(out, "checks:");
        for c in &checks {
            say!(out, "  {:<28} {}", c.name, c.description);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = match &cli.command {
        Command::Build(args) => cmd_build(args, &mut out),
        Command::Verify(args) => cmd_verify(args, &mut out),
        Command::List(args) => cmd_list(args, &mut out),
    };
    // a closed pipe (e.g. `| head`) is not an error
    let _ = io::stdout().lock().write_all(out.as_bytes());
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
