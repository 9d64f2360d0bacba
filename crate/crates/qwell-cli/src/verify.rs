//! The `verify` subcommand: recompute every closed form with the quadrature
//! oracle and report the residuals.

use std::io::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qwell::{
    build_ericsson, build_stirling, leg_quadrature_config, leg_work_quadrature, Cycle, CycleKind,
    LegKind, UnitSystem,
};

use crate::error::CliError;

/// Number of random geometries per cycle family in sweep mode.
pub const SWEEP_GEOMETRIES: usize = 10;

/// Which cycle families a `verify` invocation covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum VerifyTarget {
    Stirling,
    Ericsson,
    Both,
}

impl VerifyTarget {
    fn kinds(self) -> Vec<CycleKind> {
        match self {
            VerifyTarget::Stirling => vec![CycleKind::Stirling],
            VerifyTarget::Ericsson => vec![CycleKind::Ericsson],
            VerifyTarget::Both => vec![CycleKind::Stirling, CycleKind::Ericsson],
        }
    }
}

/// One fully-resolved `verify` invocation.
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub target: VerifyTarget,
    /// `(l1, l3)` to verify; `None` runs the seeded random sweep.
    pub geometry: Option<(f64, f64)>,
    pub units: UnitSystem,
    pub quad_rel_tol: f64,
    pub threshold: f64,
    pub seed: u64,
}

struct Check {
    name: String,
    closed: f64,
    oracle: f64,
    residual: f64,
}

fn rel_dev(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).abs() / a.abs().max(b.abs())
    }
}

/// Writes the residual report and returns an error (exit 3) when any check
/// exceeds the threshold. The report is written either way.
pub fn execute_verify(config: &VerifyConfig, out: &mut impl Write) -> Result<(), CliError> {
    if !(config.quad_rel_tol > 0.0 && config.quad_rel_tol.is_finite()) {
        return Err(CliError::Parameter(format!(
            "--quad-tol must be positive and finite: got {}",
            config.quad_rel_tol
        )));
    }
    if !(config.threshold > 0.0 && config.threshold.is_finite()) {
        return Err(CliError::Parameter(format!(
            "--threshold must be positive and finite: got {}",
            config.threshold
        )));
    }
    if config.geometry.is_some() && config.target == VerifyTarget::Both {
        return Err(CliError::Parameter(
            "an explicit geometry applies to one cycle family; pass stirling or ericsson".into(),
        ));
    }

    let mut max_residual = 0.0f64;
    let mut n_checks = 0usize;
    let mut n_geometries = 0usize;

    for kind in config.target.kinds() {
        let geometries = match config.geometry {
            Some(g) => vec![g],
            None => sweep_geometries(config.seed, kind),
        };
        for (l1, l3) in geometries {
            let cycle = match kind {
                CycleKind::Stirling => build_stirling(l1, l3, config.units)?,
                CycleKind::Ericsson => build_ericsson(l3, l1, config.units)?,
            };
            n_geometries += 1;
            writeln!(
                out,
                "# verify cycle={} l1={:e} l3={:e} hbar={:e} mass={:e}",
                kind,
                l1,
                l3,
                config.units.hbar(),
                config.units.mass()
            )?;
            for check in geometry_checks(&cycle, config.quad_rel_tol)? {
                let status = if check.residual <= config.threshold {
                    "ok"
                } else {
                    "FAIL"
                };
                writeln!(
                    out,
                    "check={} closed={:e} oracle={:e} residual={:.3e} status={}",
                    check.name, check.closed, check.oracle, check.residual, status
                )?;
                max_residual = max_residual.max(check.residual);
                n_checks += 1;
            }
        }
    }

    let pass = max_residual <= config.threshold;
    writeln!(
        out,
        "# summary geometries={} checks={} max_residual={:.3e} threshold={:.3e} status={}",
        n_geometries,
        n_checks,
        max_residual,
        config.threshold,
        if pass { "PASS" } else { "FAIL" }
    )?;
    if pass {
        Ok(())
    } else {
        Err(CliError::Verification(format!(
            "max residual {max_residual:.3e} exceeds threshold {:.3e}",
            config.threshold
        )))
    }
}

// Valid geometries with the narrow width in [0.1, 1) and the width ratio in
// [0.1, 0.45), keeping every wall position inside [0.1, 10].
fn sweep_geometries(seed: u64, kind: CycleKind) -> Vec<(f64, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..SWEEP_GEOMETRIES)
        .map(|_| {
            let narrow = rng.gen_range(0.1..1.0);
            let ratio = rng.gen_range(0.1..0.45);
            let wide = narrow / ratio;
            match kind {
                CycleKind::Stirling => (narrow, wide),
                CycleKind::Ericsson => (wide, narrow),
            }
        })
        .collect()
}

// Closed form vs oracle for each leg's work, the heat input, the total
// work, the efficiency, and the constant-n cancellation.
fn geometry_checks(cycle: &Cycle, quad_rel_tol: f64) -> Result<Vec<Check>, CliError> {
    let units = cycle.units();
    let legs = cycle.legs();
    let mut checks = Vec::new();
    let mut closed_total = 0.0;
    let mut oracle_total = 0.0;
    let mut closed_heat_in = 0.0;
    let mut oracle_heat_in = 0.0;
    let mut pair_closed = 0.0;
    let mut pair_oracle = 0.0;
    let mut pair_scale = 0.0f64;
    let mut has_constant_n = false;

    for (k, leg) in legs.iter().enumerate() {
        let closed = leg.work(units);
        let cfg = leg_quadrature_config(leg, units, quad_rel_tol);
        let oracle = leg_work_quadrature(leg, units, cfg)?;
        checks.push(Check {
            name: format!("work[{}→{}]", k + 1, (k + 1) % legs.len() + 1),
            closed,
            oracle,
            residual: rel_dev(closed, oracle),
        });
        closed_total += closed;
        oracle_total += oracle;
        if leg.heat(units) > 0.0 {
            closed_heat_in += leg.heat(units);
            oracle_heat_in += oracle;
        }
        if matches!(leg.kind(), LegKind::ConstantN { .. }) {
            has_constant_n = true;
            pair_closed += closed;
            pair_oracle += oracle;
            pair_scale = pair_scale.max(closed.abs());
        }
    }

    checks.push(Check {
        name: "heat_in".into(),
        closed: closed_heat_in,
        oracle: oracle_heat_in,
        residual: rel_dev(closed_heat_in, oracle_heat_in),
    });
    checks.push(Check {
        name: "total_work".into(),
        closed: closed_total,
        oracle: oracle_total,
        residual: rel_dev(closed_total, oracle_total),
    });
    checks.push(Check {
        name: "efficiency".into(),
        closed: closed_total / closed_heat_in,
        oracle: oracle_total / oracle_heat_in,
        residual: rel_dev(closed_total / closed_heat_in, oracle_total / oracle_heat_in),
    });
    if has_constant_n {
        checks.push(Check {
            name: "constant_n_pair_sum".into(),
            closed: pair_closed,
            oracle: pair_oracle,
            residual: pair_closed.abs().max(pair_oracle.abs()) / pair_scale,
        });
    }
    Ok(checks)
}
