//! Batch commands behind the `oscfield` binary.
//!
//! Every command reads a JSON [`RunConfig`], writes CSV tables plus a
//! `summary.json` into the output directory and maps its outcome to an exit
//! code: 0 when all checks pass, 1 on a failed check, 2 on a usage or
//! configuration error.

mod commands;
mod config;
mod output;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

pub use config::{BoxModes, Component, EmissionSettings, NamedState, Resolved, RunConfig, TimeGrid};
pub use output::format_float;

#[derive(Debug, Parser)]
#[command(name = "oscfield", version, about = "Single-oscillator field quantization: checks and reports")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// JSON run configuration (built-in 4-mode, N = 5 config when omitted).
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Output directory.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Override the command's primary tolerance.
    #[arg(long, global = true)]
    pub tolerance: Option<f64>,
    /// Seed for randomized sample points.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Corrupt the operators under test (exercises the failure path).
    #[arg(long, global = true, hide = true)]
    pub inject_fault: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Oscillator algebra relations and truncation boundary terms.
    VerifyAlgebra,
    /// <H> and <P> of the configured states against the zero-photon formula.
    VacuumEnergy,
    /// Coherent-state field averages over a (t, x) grid.
    FieldSweep,
    /// Energy and momentum identities at random spacetime points.
    FieldIdentities,
    /// First-order emission amplitudes and convergence against exact evolution.
    Emission,
    /// Side-by-side report against the tensor-product Fock baseline.
    CompareStandard,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::VerifyAlgebra => "verify-algebra",
            Command::VacuumEnergy => "vacuum-energy",
            Command::FieldSweep => "field-sweep",
            Command::FieldIdentities => "field-identities",
            Command::Emission => "emission",
            Command::CompareStandard => "compare-standard",
        }
    }
}

/// Usage, configuration or I/O failure (exit code 2).
#[derive(Debug, Clone, PartialEq)]
pub struct CliError(pub String);

impl CliError {
    pub fn config(msg: impl Into<String>) -> Self {
        CliError(msg.into())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for CliError {}

impl From<crate::Error> for CliError {
    fn from(e: crate::Error) -> Self {
        CliError(e.to_string())
    }
}

/// Result of a command that ran to completion.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub pass: bool,
    pub message: String,
    pub files: Vec<PathBuf>,
}

pub const EXIT_PASS: u8 = 0;
pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// Runs one command and returns its outcome without touching the process exit code.
pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let mut config = match &cli.config {
        Some(path) => RunConfig::from_path(path)?,
        None => RunConfig::default(),
    };
    if cli.tolerance.is_some() {
        config.tolerance = cli.tolerance;
    }
    if cli.seed.is_some() {
        config.seed = cli.seed;
    }
    let out = cli
        .out
        .clone()
        .or_else(|| config.out.as_ref().map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("."));
    let resolved = config.resolve()?;
    std::fs::create_dir_all(&out).map_err(|e| CliError(format!("{}: {e}", out.display())))?;
    commands::run(cli.command, &resolved, &out, cli.inject_fault)
}

/// [`execute`] plus diagnostics on stderr and the exit-code contract.
pub fn run(cli: &Cli) -> ExitCode {
    match execute(cli) {
        Ok(outcome) => {
            println!("{}: {} ({})", cli.command.name(), if outcome.pass { "pass" } else { "FAIL" }, outcome.message);
            ExitCode::from(if outcome.pass { EXIT_PASS } else { EXIT_CHECK_FAILED })
        }
        Err(e) => {
            eprintln!("oscfield {}: {e}", cli.command.name());
            ExitCode::from(EXIT_USAGE)
        }
    }
}
