//! Report assembly and rendering for the `stirling` and `ericsson`
//! subcommands.
//!
//! Both encodings are deterministic: the same configuration produces
//! byte-identical output. CSV floats carry 17 significant digits so the
//! values round-trip through text.

use std::io::Write;

use serde::Serialize;

use qwell::CycleMetrics;

use crate::config::{OutputFormat, RunConfig};
use crate::error::CliError;
use crate::sample::{sample_cycle, DiagramSample};

/// Everything one run emits.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub config: ReportConfig,
    pub metrics: CycleMetrics,
    pub samples: Vec<DiagramSample>,
}

/// The configuration echo embedded in every report.
#[derive(Debug, Serialize)]
pub struct ReportConfig {
    pub cycle: String,
    pub l1: f64,
    pub l3: f64,
    pub hbar: f64,
    pub mass: f64,
    pub samples_per_leg: usize,
    pub quad_rel_tol: f64,
    pub threshold: f64,
    pub format: OutputFormat,
}

/// Builds the cycle, runs the metrics with the oracle cross-check, and
/// samples the diagram. Fails with a verification error when the oracle
/// residual exceeds the configured threshold.
pub fn build_report(config: &RunConfig) -> Result<RunReport, CliError> {
    config.validate()?;
    let cycle = config.build_cycle()?;
    let metrics = cycle.metrics(config.quad_rel_tol)?;
    if metrics.oracle_residual > config.threshold {
        return Err(CliError::Verification(format!(
            "oracle residual {:.3e} exceeds threshold {:.3e}",
            metrics.oracle_residual, config.threshold
        )));
    }
    let samples = sample_cycle(&cycle, config.samples_per_leg)?;
    Ok(RunReport {
        config: ReportConfig {
            cycle: config.cycle.name().to_string(),
            l1: config.l1,
            l3: config.l3,
            hbar: config.units.hbar(),
            mass: config.units.mass(),
            samples_per_leg: config.samples_per_leg,
            quad_rel_tol: config.quad_rel_tol,
            threshold: config.threshold,
            format: config.format,
        },
        metrics,
        samples,
    })
}

/// Runs the full pipeline and renders into `out`.
pub fn execute_run(config: &RunConfig, out: &mut impl Write) -> Result<(), CliError> {
    let report = build_report(config)?;
    match config.format {
        OutputFormat::Csv => write_csv(&report, out),
        OutputFormat::Json => write_json(&report, out),
    }
}

/// 17 significant digits, locale-independent.
pub fn sig17(x: f64) -> String {
    format!("{x:.16e}")
}

fn join17(values: &[f64]) -> String {
    values
        .iter()
        .map(|&v| sig17(v))
        .collect::<Vec<_>>()
        .join(",")
}

fn write_csv(report: &RunReport, out: &mut impl Write) -> Result<(), CliError> {
    let c = &report.config;
    let m = &report.metrics;
    writeln!(out, "# metrics: cycle={}", c.cycle)?;
    writeln!(out, "# metrics: l1={}", sig17(c.l1))?;
    writeln!(out, "# metrics: l3={}", sig17(c.l3))?;
    writeln!(out, "# metrics: hbar={}", sig17(c.hbar))?;
    writeln!(out, "# metrics: mass={}", sig17(c.mass))?;
    writeln!(out, "# metrics: samples_per_leg={}", c.samples_per_leg)?;
    writeln!(out, "# metrics: quad_rel_tol={}", sig17(c.quad_rel_tol))?;
    writeln!(out, "# metrics: per_leg_work={}", join17(&m.per_leg_work))?;
    writeln!(out, "# metrics: per_leg_heat={}", join17(&m.per_leg_heat))?;
    writeln!(out, "# metrics: total_work={}", sig17(m.total_work))?;
    writeln!(out, "# metrics: heat_in={}", sig17(m.heat_in))?;
    writeln!(out, "# metrics: efficiency={}", sig17(m.efficiency))?;
    writeln!(out, "# metrics: e_hot={}", sig17(m.e_hot))?;
    writeln!(out, "# metrics: e_cold={}", sig17(m.e_cold))?;
    writeln!(
        out,
        "# metrics: oracle_residual={}",
        sig17(m.oracle_residual)
    )?;
    writeln!(out, "leg_id,L,P,E,a1_sq")?;
    for s in &report.samples {
        writeln!(
            out,
            "{},{},{},{},{}",
            s.leg_id,
            sig17(s.width),
            sig17(s.pressure),
            sig17(s.energy),
            sig17(s.a1_sq)
        )?;
    }
    Ok(())
}

fn write_json(report: &RunReport, out: &mut impl Write) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, report)
        .map_err(|e| CliError::Io(std::io::Error::other(e)))?;
    writeln!(out)?;
    Ok(())
}
