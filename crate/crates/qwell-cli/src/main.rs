//! `qwell` — engine cycles for a single particle in a 1D box.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use qwell::{CycleKind, UnitSystem};
use qwell_cli::config::{OutputFormat, RunConfig};
use qwell_cli::error::CliError;
use qwell_cli::report::execute_run;
use qwell_cli::verify::{execute_verify, VerifyConfig, VerifyTarget};

#[derive(Parser)]
#[command(
    name = "qwell",
    version,
    about = "Quantum engine cycles for a particle in a 1D box: metrics, P-L diagrams, oracle verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stirling-style cycle (requires L3 > 2·L1): metrics plus diagram samples
    Stirling(RunArgs),
    /// Ericsson-style cycle (requires L1 > 2·L3): metrics plus diagram samples
    Ericsson(RunArgs),
    /// Recompute the closed forms with the quadrature oracle and report residuals
    Verify(VerifyArgs),
}

#[derive(Args)]
struct RunArgs {
    /// Vertex width L1
    #[arg(long)]
    l1: f64,
    /// Vertex width L3
    #[arg(long)]
    l3: f64,
    #[command(flatten)]
    units: UnitArgs,
    /// Diagram samples per leg
    #[arg(long, default_value_t = 128)]
    samples: usize,
    /// Relative tolerance of the quadrature oracle
    #[arg(long = "quad-tol", default_value_t = 1e-10)]
    quad_tol: f64,
    /// Largest accepted relative residual between closed forms and the oracle
    #[arg(long, default_value_t = 1e-9)]
    threshold: f64,
    /// Report encoding
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
    /// Write the report to this path instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct UnitArgs {
    /// Unit system scaling all energies and pressures
    #[arg(long, value_enum, default_value_t = UnitsChoice::Natural)]
    units: UnitsChoice,
    /// Reduced Planck constant (only with --units explicit)
    #[arg(long)]
    hbar: Option<f64>,
    /// Particle mass (only with --units explicit)
    #[arg(long)]
    mass: Option<f64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum UnitsChoice {
    /// hbar = 1, m = 1
    Natural,
    /// Take hbar and m from --hbar and --mass
    Explicit,
}

impl UnitArgs {
    fn resolve(&self) -> Result<UnitSystem, CliError> {
        match self.units {
            UnitsChoice::Natural => {
                if self.hbar.is_some() || self.mass.is_some() {
                    Err(CliError::Parameter(
                        "--hbar and --mass are only meaningful with --units explicit".into(),
                    ))
                } else {
                    Ok(UnitSystem::natural())
                }
            }
            UnitsChoice::Explicit => match (self.hbar, self.mass) {
                (Some(hbar), Some(mass)) => Ok(UnitSystem::new(hbar, mass)?),
                _ => Err(CliError::Parameter(
                    "--units explicit requires both --hbar and --mass".into(),
                )),
            },
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    /// Which cycle family to verify
    #[arg(value_enum, default_value_t = VerifyTarget::Both)]
    cycle: VerifyTarget,
    /// Vertex width L1 (together with --l3: verify exactly this geometry)
    #[arg(long, requires = "l3")]
    l1: Option<f64>,
    /// Vertex width L3 (together with --l1)
    #[arg(long, requires = "l1")]
    l3: Option<f64>,
    #[command(flatten)]
    units: UnitArgs,
    /// Relative tolerance of the quadrature oracle
    #[arg(long = "quad-tol", default_value_t = 1e-10)]
    quad_tol: f64,
    /// Largest accepted relative residual
    #[arg(long, default_value_t = 1e-9)]
    threshold: f64,
    /// Seed for the random-geometry sweep used when no geometry is given
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the report to this path instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Stirling(args) => run_cycle(CycleKind::Stirling, args),
        Command::Ericsson(args) => run_cycle(CycleKind::Ericsson, args),
        Command::Verify(args) => verify(args),
    }
}

fn run_cycle(kind: CycleKind, args: RunArgs) -> Result<(), CliError> {
    let config = RunConfig {
        cycle: kind,
        l1: args.l1,
        l3: args.l3,
        units: args.units.resolve()?,
        samples_per_leg: args.samples,
        quad_rel_tol: args.quad_tol,
        threshold: args.threshold,
        format: args.format,
        out: args.out.clone(),
    };
    let mut buffer = Vec::new();
    execute_run(&config, &mut buffer)?;
    emit(&buffer, args.out.as_deref())
}

fn verify(args: VerifyArgs) -> Result<(), CliError> {
    let config = VerifyConfig {
        target: args.cycle,
        geometry: args.l1.zip(args.l3),
        units: args.units.resolve()?,
        quad_rel_tol: args.quad_tol,
        threshold: args.threshold,
        seed: args.seed,
    };
    let mut buffer = Vec::new();
    // The residual report is emitted even when verification fails; only the
    // exit status tells them apart.
    let outcome = execute_verify(&config, &mut buffer);
    emit(&buffer, args.out.as_deref())?;
    outcome
}

fn emit(bytes: &[u8], out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, bytes)?,
        None => std::io::stdout().write_all(bytes)?,
    }
    Ok(())
}
