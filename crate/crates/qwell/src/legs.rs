//! The three reversible process primitives the engine cycles are assembled
//! from, each with an exact pressure law, closed-form work, and heat
//! bookkeeping.
//!
//! Sign conventions: positive heat flows into the system, positive work is
//! done by the system on the wall. Work is the signed integral ∫P dL from
//! the start width to the end width, so expansion is positive.

use crate::error::{Error, Result};
use crate::units::UnitSystem;
use crate::well::{eigen_energy, eigen_pressure, WellState};

/// Relative tolerance on the energy match between isothermal endpoints.
pub const ISOTHERM_ENERGY_RTOL: f64 = 1e-10;

/// Ground-state fraction |a_1|² along an isoenergetic two-level sweep whose
/// pure ground-state width is `ground_width`.
///
/// Holding `E = (π²ℏ²/2mL²)(4 − 3|a_1|²)` fixed at its pure-ground value
/// gives `L² = L_ref²·(4 − 3|a_1|²)`, i.e. `|a_1|² = (4 − L²/L_ref²)/3`:
/// 1 at `L = L_ref`, 0 at `L = 2·L_ref`.
pub fn isothermal_occupation(width: f64, ground_width: f64) -> Result<f64> {
    if !(ground_width > 0.0 && ground_width.is_finite()) {
        return Err(Error::InvalidWidth {
            width: ground_width,
        });
    }
    let lo = ground_width;
    let hi = 2.0 * ground_width;
    if !(width >= lo && width <= hi) {
        return Err(Error::WidthOutsideLeg { width, lo, hi });
    }
    let ratio_sq = (width * width) / (ground_width * ground_width);
    // The formula lands on 0 and 1 exactly at the endpoints in real
    // arithmetic; clamp away the last-ulp excursions.
    Ok(((4.0 - ratio_sq) / 3.0).clamp(0.0, 1.0))
}

/// Which pressure law governs a leg.
#[derive(Debug, Clone, PartialEq)]
pub enum LegKind {
    /// Energy expectation pinned at `energy` while the wall moves and the
    /// state mixes n = 1 with n = 2. Equation of state: `L·P = 2E`.
    Isothermal { energy: f64 },
    /// Eigenstate n kept while the wall moves. Equation of state:
    /// `L³·P = n²π²ℏ²/m`.
    ConstantN { n: u32 },
    /// Wall fixed at `width` while the occupations change; no work, and
    /// pressure is not a function of width.
    ConstantWidth { width: f64 },
}

/// One reversible leg: its governing law plus both endpoint states.
#[derive(Debug, Clone, PartialEq)]
pub struct ProcessLeg {
    kind: LegKind,
    start: WellState,
    end: WellState,
}

impl ProcessLeg {
    /// Isoenergetic leg between two states that mix only n = 1 and n = 2.
    ///
    /// The pinned energy is taken from `start`; `end` must agree with it to
    /// [`ISOTHERM_ENERGY_RTOL`] relative.
    pub fn isothermal(start: WellState, end: WellState, units: UnitSystem) -> Result<Self> {
        for state in [&start, &end] {
            if state.occupations().iter().skip(2).any(|&p| p != 0.0) {
                return Err(Error::IsothermalLevelTooHigh);
            }
        }
        let e_start = start.energy(units);
        let e_end = end.energy(units);
        if (e_start - e_end).abs() > ISOTHERM_ENERGY_RTOL * e_start.max(e_end) {
            return Err(Error::IsothermalEnergyMismatch {
                start: e_start,
                end: e_end,
            });
        }
        Ok(Self {
            kind: LegKind::Isothermal { energy: e_start },
            start,
            end,
        })
    }

    /// Leg that keeps the pure eigenstate n while the wall moves from
    /// `from_width` to `to_width`.
    pub fn constant_n(n: u32, from_width: f64, to_width: f64) -> Result<Self> {
        let start = WellState::pure(n, from_width)?;
        let end = WellState::pure(n, to_width)?;
        if from_width == to_width {
            return Err(Error::ConstantNSameWidth { width: from_width });
        }
        Ok(Self {
            kind: LegKind::ConstantN { n },
            start,
            end,
        })
    }

    /// Leg that changes occupations at a fixed wall position.
    pub fn constant_width(start: WellState, end: WellState) -> Result<Self> {
        if start.width() != end.width() {
            return Err(Error::ConstantWidthMismatch {
                start: start.width(),
                end: end.width(),
            });
        }
        let width = start.width();
        Ok(Self {
            kind: LegKind::ConstantWidth { width },
            start,
            end,
        })
    }

    pub fn kind(&self) -> &LegKind {
        &self.kind
    }

    pub fn start(&self) -> &WellState {
        &self.start
    }

    pub fn end(&self) -> &WellState {
        &self.end
    }

    /// The leg's width interval as (lo, hi).
    pub fn width_interval(&self) -> (f64, f64) {
        let a = self.start.width();
        let b = self.end.width();
        (a.min(b), a.max(b))
    }

    fn expanding(&self) -> bool {
        self.end.width() >= self.start.width()
    }

    /// Pressure on the wall at width `width` along this leg.
    ///
    /// Isothermal legs obey `P = 2E/L`; constant-n legs `P = n²π²ℏ²/(mL³)`.
    /// Constant-width legs have no pressure law in L and return an error,
    /// as do queries outside the leg's width interval.
    pub fn pressure_at(&self, width: f64, units: UnitSystem) -> Result<f64> {
        let (lo, hi) = self.width_interval();
        match self.kind {
            LegKind::ConstantWidth { .. } => Err(Error::PressureUndefinedOnConstantWidth),
            LegKind::Isothermal { energy } => {
                if !(width >= lo && width <= hi) {
                    return Err(Error::WidthOutsideLeg { width, lo, hi });
                }
                Ok(2.0 * energy / width)
            }
            LegKind::ConstantN { n } => {
                if !(width >= lo && width <= hi) {
                    return Err(Error::WidthOutsideLeg { width, lo, hi });
                }
                eigen_pressure(n, width, units)
            }
        }
    }

    /// Signed work ∫P dL from the start width to the end width.
    ///
    /// Closed forms: `2E·ln(L_end/L_start)` on an isothermal leg,
    /// `n²π²ℏ²/(2m)·(1/L_start² − 1/L_end²)` on a constant-n leg (evaluated
    /// as the eigenenergy drop `E_n(L_start) − E_n(L_end)`, which is the
    /// same expression), and exactly 0 on a constant-width leg.
    ///
    /// The magnitude is always computed on the ordered interval so that
    /// reversing a leg negates its work exactly.
    pub fn work(&self, units: UnitSystem) -> f64 {
        let (lo, hi) = self.width_interval();
        let magnitude = match self.kind {
            LegKind::Isothermal { energy } => 2.0 * energy * (hi / lo).ln(),
            LegKind::ConstantN { n } => {
                let e_lo = eigen_energy(n, lo, units).expect("leg widths are valid");
                let e_hi = eigen_energy(n, hi, units).expect("leg widths are valid");
                e_lo - e_hi
            }
            LegKind::ConstantWidth { .. } => return 0.0,
        };
        if self.expanding() {
            magnitude
        } else {
            -magnitude
        }
    }

    /// Heat absorbed by the system over the leg.
    ///
    /// Isothermal: `Q = W` (the energy expectation is constant, so the first
    /// law leaves nothing else). Constant-n: `Q = 0`; the work is paid out
    /// of internal energy. Constant-width: `Q = E_end − E_start`.
    pub fn heat(&self, units: UnitSystem) -> f64 {
        match self.kind {
            LegKind::Isothermal { .. } => self.work(units),
            LegKind::ConstantN { .. } => 0.0,
            LegKind::ConstantWidth { .. } => self.end.energy(units) - self.start.energy(units),
        }
    }

    /// The same leg traversed backwards.
    pub fn reversed(&self) -> Self {
        Self {
            kind: self.kind.clone(),
            start: self.end.clone(),
            end: self.start.clone(),
        }
    }
}
