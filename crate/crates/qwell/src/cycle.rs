//! Assembly of the two four-leg engine cycles, cycle validation, and the
//! work/heat/efficiency metrics with their quadrature cross-check.
//!
//! Both cycles traverse the same shape: a hot isoenergetic expansion where
//! heat enters, a constant-n expansion, a cold isoenergetic compression
//! where heat leaves, and a constant-n compression back to the start. The
//! two constant-n legs do equal and opposite work, so only the isoenergetic
//! legs contribute to the net work.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::legs::{LegKind, ProcessLeg};
use crate::quad::{leg_quadrature_config, leg_work_quadrature};
use crate::units::UnitSystem;
use crate::well::WellState;

/// Tolerance on occupation matching at leg joints.
pub const CLOSURE_OCCUPATION_TOL: f64 = 1e-12;

/// Relative tolerance on energy matching at leg joints.
pub const CLOSURE_ENERGY_RTOL: f64 = 1e-10;

/// The two cycle families this crate builds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CycleKind {
    Stirling,
    Ericsson,
}

impl CycleKind {
    pub fn name(self) -> &'static str {
        match self {
            CycleKind::Stirling => "stirling",
            CycleKind::Ericsson => "ericsson",
        }
    }

    /// Closed-form efficiency `η = 1 − 4·ratio²`.
    ///
    /// `ratio` is L1/L3 for the Stirling cycle and L3/L1 for the Ericsson
    /// cycle; either way it must lie in (0, 1/2) for the cycle to produce
    /// net work.
    pub fn closed_form_efficiency(self, ratio: f64) -> Result<f64> {
        if !(ratio > 0.0 && ratio < 0.5) {
            return Err(Error::RatioOutOfRange { ratio });
        }
        Ok(1.0 - 4.0 * ratio * ratio)
    }
}

impl fmt::Display for CycleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CycleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "stirling" => Ok(CycleKind::Stirling),
            "ericsson" => Ok(CycleKind::Ericsson),
            other => Err(Error::UnknownCycle(other.to_string())),
        }
    }
}

/// An ordered, closed sequence of legs.
#[derive(Debug, Clone, PartialEq)]
pub struct Cycle {
    name: String,
    legs: Vec<ProcessLeg>,
    units: UnitSystem,
}

impl Cycle {
    /// Validates closure (each leg ends where the next begins: widths
    /// exactly, occupations within [`CLOSURE_OCCUPATION_TOL`], energies
    /// within [`CLOSURE_ENERGY_RTOL`] relative) and that at least one leg
    /// absorbs heat.
    pub fn new(name: impl Into<String>, legs: Vec<ProcessLeg>, units: UnitSystem) -> Result<Self> {
        if legs.is_empty() {
            return Err(Error::DegenerateCycle(
                "a cycle needs at least one leg".into(),
            ));
        }
        for (k, leg) in legs.iter().enumerate() {
            let here = leg.end();
            let next = legs[(k + 1) % legs.len()].start();
            if here.width() != next.width() {
                return Err(Error::CycleNotClosed {
                    leg: k,
                    reason: format!(
                        "width {} does not match the next leg's {}",
                        here.width(),
                        next.width()
                    ),
                });
            }
            let levels = here.occupations().len().max(next.occupations().len());
            for n in 1..=levels as u32 {
                let gap = (here.occupation(n) - next.occupation(n)).abs();
                if gap > CLOSURE_OCCUPATION_TOL {
                    return Err(Error::CycleNotClosed {
                        leg: k,
                        reason: format!("occupation of level {n} jumps by {gap}"),
                    });
                }
            }
            let e_here = here.energy(units);
            let e_next = next.energy(units);
            if (e_here - e_next).abs() > CLOSURE_ENERGY_RTOL * e_here.abs().max(e_next.abs()) {
                return Err(Error::CycleNotClosed {
                    leg: k,
                    reason: format!("energy {e_here} does not match the next leg's {e_next}"),
                });
            }
        }
        if !legs.iter().any(|leg| leg.heat(units) > 0.0) {
            return Err(Error::DegenerateCycle("no leg absorbs heat".into()));
        }
        Ok(Self {
            name: name.into(),
            legs,
            units,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn legs(&self) -> &[ProcessLeg] {
        &self.legs
    }

    pub fn units(&self) -> UnitSystem {
        self.units
    }

    /// Per-leg and total work, heat input, efficiency, and the worst
    /// relative deviation between closed-form and quadrature work.
    ///
    /// `quad_rel_tol` is handed to the oracle quadrature; the absolute
    /// tolerance floor follows each leg's energy scale.
    pub fn metrics(&self, quad_rel_tol: f64) -> Result<CycleMetrics> {
        if !(quad_rel_tol > 0.0 && quad_rel_tol.is_finite()) {
            return Err(Error::InvalidQuadratureConfig);
        }
        let units = self.units;
        let per_leg_work: Vec<f64> = self.legs.iter().map(|leg| leg.work(units)).collect();
        let per_leg_heat: Vec<f64> = self.legs.iter().map(|leg| leg.heat(units)).collect();
        let total_work: f64 = per_leg_work.iter().sum();
        let heat_in: f64 = per_leg_heat.iter().filter(|&&q| q > 0.0).sum();
        if heat_in <= 0.0 {
            return Err(Error::DegenerateCycle("no heat input".into()));
        }

        let isotherm_energies: Vec<f64> = self
            .legs
            .iter()
            .filter_map(|leg| match *leg.kind() {
                LegKind::Isothermal { energy } => Some(energy),
                _ => None,
            })
            .collect();
        let (e_hot, e_cold) = match (
            isotherm_energies.iter().copied().reduce(f64::max),
            isotherm_energies.iter().copied().reduce(f64::min),
        ) {
            (Some(hot), Some(cold)) => (hot, cold),
            _ => {
                return Err(Error::DegenerateCycle(
                    "no isothermal leg to read reservoir energies from".into(),
                ))
            }
        };

        let mut oracle_residual = 0.0f64;
        for (leg, &closed) in self.legs.iter().zip(&per_leg_work) {
            let cfg = leg_quadrature_config(leg, units, quad_rel_tol);
            let numeric = leg_work_quadrature(leg, units, cfg)?;
            oracle_residual = oracle_residual.max(relative_deviation(closed, numeric));
        }

        Ok(CycleMetrics {
            per_leg_work,
            per_leg_heat,
            total_work,
            heat_in,
            efficiency: total_work / heat_in,
            e_hot,
            e_cold,
            oracle_residual,
        })
    }
}

fn relative_deviation(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).abs() / a.abs().max(b.abs())
    }
}

/// Work, heat, and efficiency of one cycle, with the oracle cross-check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CycleMetrics {
    /// Signed work per leg, in cycle order.
    pub per_leg_work: Vec<f64>,
    /// Signed heat per leg, in cycle order.
    pub per_leg_heat: Vec<f64>,
    /// Net work over the cycle.
    pub total_work: f64,
    /// Heat absorbed, summed over the legs with positive heat.
    pub heat_in: f64,
    /// `total_work / heat_in`.
    pub efficiency: f64,
    /// Energy expectation pinned on the hot isoenergetic leg.
    pub e_hot: f64,
    /// Energy expectation pinned on the cold isoenergetic leg.
    pub e_cold: f64,
    /// Worst relative deviation of closed-form leg work from the
    /// quadrature oracle.
    pub oracle_residual: f64,
}

/// Stirling-style cycle: hot isoenergetic leg at `E_H = π²ℏ²/(2mL1²)` from
/// L1 to 2·L1, constant-n (n = 2) to L3, cold isoenergetic leg at
/// `E_C = 2π²ℏ²/(mL3²)` down to L3/2, constant-n (n = 1) back to L1.
///
/// Requires `L3 > 2·L1`; at equality the cycle degenerates to zero net work.
pub fn build_stirling(l1: f64, l3: f64, units: UnitSystem) -> Result<Cycle> {
    build_four_legs("stirling", "L3 > 2·L1", l1, l3, units)
}

/// Ericsson-style cycle: hot isoenergetic leg at `E_H = π²ℏ²/(2mL3²)` from
/// L3 to 2·L3, constant-n (n = 2) to L1, cold isoenergetic leg at
/// `E_C = 2π²ℏ²/(mL1²)` down to L1/2, constant-n (n = 1) back to L3.
///
/// Requires `L1 > 2·L3`.
pub fn build_ericsson(l3: f64, l1: f64, units: UnitSystem) -> Result<Cycle> {
    build_four_legs("ericsson", "L1 > 2·L3", l3, l1, units)
}

// Both cycles share one geometry: `narrow` is the pure-ground vertex of the
// hot leg, `wide` the pure-excited vertex of the cold leg.
fn build_four_legs(
    name: &'static str,
    constraint: &'static str,
    narrow: f64,
    wide: f64,
    units: UnitSystem,
) -> Result<Cycle> {
    for width in [narrow, wide] {
        if !(width > 0.0 && width.is_finite()) {
            return Err(Error::InvalidWidth { width });
        }
    }
    if wide <= 2.0 * narrow {
        let (l1, l3) = match name {
            "stirling" => (narrow, wide),
            _ => (wide, narrow),
        };
        return Err(Error::InvalidGeometry {
            cycle: name,
            constraint,
            l1,
            l3,
        });
    }
    let v1 = WellState::pure(1, narrow)?;
    let v2 = WellState::pure(2, 2.0 * narrow)?;
    let v3 = WellState::pure(2, wide)?;
    let v4 = WellState::pure(1, 0.5 * wide)?;
    let legs = vec![
        ProcessLeg::isothermal(v1.clone(), v2.clone(), units)?,
        ProcessLeg::constant_n(2, v2.width(), v3.width())?,
        ProcessLeg::isothermal(v3, v4.clone(), units)?,
        ProcessLeg::constant_n(1, v4.width(), v1.width())?,
    ];
    Cycle::new(name, legs, units)
}
