//! Validated run configuration shared by the subcommands.

use std::path::PathBuf;

use serde::Serialize;

use qwell::{build_ericsson, build_stirling, Cycle, CycleKind, UnitSystem};

use crate::error::CliError;

/// Report encodings the CLI can emit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
}

/// One fully-resolved invocation of `stirling` or `ericsson`.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub cycle: CycleKind,
    pub l1: f64,
    pub l3: f64,
    pub units: UnitSystem,
    pub samples_per_leg: usize,
    pub quad_rel_tol: f64,
    /// Largest accepted relative residual between closed forms and the
    /// quadrature oracle.
    pub threshold: f64,
    pub format: OutputFormat,
    /// Report destination; `None` means standard output.
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.samples_per_leg < 2 {
            return Err(CliError::Parameter(format!(
                "--samples must be at least 2: got {}",
                self.samples_per_leg
            )));
        }
        if !(self.quad_rel_tol > 0.0 && self.quad_rel_tol.is_finite()) {
            return Err(CliError::Parameter(format!(
                "--quad-tol must be positive and finite: got {}",
                self.quad_rel_tol
            )));
        }
        if !(self.threshold > 0.0 && self.threshold.is_finite()) {
            return Err(CliError::Parameter(format!(
                "--threshold must be positive and finite: got {}",
                self.threshold
            )));
        }
        Ok(())
    }

    /// Builds the requested cycle from the configured geometry.
    pub fn build_cycle(&self) -> Result<Cycle, CliError> {
        let cycle = match self.cycle {
            CycleKind::Stirling => build_stirling(self.l1, self.l3, self.units)?,
            CycleKind::Ericsson => build_ericsson(self.l3, self.l1, self.units)?,
        };
        Ok(cycle)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config() -> RunConfig {
        RunConfig {
            cycle: CycleKind::Stirling,
            l1: 1.0,
            l3: 4.0,
            units: UnitSystem::natural(),
            samples_per_leg: 8,
            quad_rel_tol: 1e-10,
            threshold: 1e-9,
            format: OutputFormat::Csv,
            out: None,
        }
    }

    #[test]
    fn accepts_a_sane_config() {
        assert!(config().validate().is_ok());
        assert!(config().build_cycle().is_ok());
    }

    #[test]
    fn rejects_single_sample() {
        let mut c = config();
        c.samples_per_leg = 1;
        assert_eq!(c.validate().unwrap_err().exit_code(), 2);
    }

    #[test]
    fn rejects_bad_tolerances() {
        let mut c = config();
        c.quad_rel_tol = 0.0;
        assert_eq!(c.validate().unwrap_err().exit_code(), 2);
        let mut c = config();
        c.threshold = f64::NAN;
        assert_eq!(c.validate().unwrap_err().exit_code(), 2);
    }

    #[test]
    fn ericsson_geometry_flags_keep_their_names() {
        // --l1 4 --l3 1 is a valid Ericsson geometry (L1 > 2·L3).
        let c = RunConfig {
            cycle: CycleKind::Ericsson,
            l1: 4.0,
            l3: 1.0,
            ..config()
        };
        assert!(c.build_cycle().is_ok());
        // The Stirling reading of the same widths is invalid.
        let c = RunConfig {
            cycle: CycleKind::Stirling,
            l1: 4.0,
            l3: 1.0,
            ..config()
        };
        assert!(c.build_cycle().is_err());
    }
}
