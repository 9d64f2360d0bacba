//! Closed-form physics of a particle of mass m in a 1D infinite square well
//! of width L: eigenenergies, superposition-state energy expectation, and the
//! pressure the state exerts on the moving wall.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::units::UnitSystem;

/// Highest eigenstate index an occupation vector may address.
pub const MAX_LEVEL: usize = 64;

/// Tolerance on |Σ|a_n|² − 1| when constructing a [`WellState`].
pub const NORMALIZATION_TOL: f64 = 1e-12;

fn check_width(width: f64) -> Result<f64> {
    if width > 0.0 && width.is_finite() {
        Ok(width)
    } else {
        Err(Error::InvalidWidth { width })
    }
}

/// Energy of the n-th eigenstate, `E_n = n²·π²·ℏ²/(2·m·L²)`.
pub fn eigen_energy(n: u32, width: f64, units: UnitSystem) -> Result<f64> {
    if n == 0 {
        return Err(Error::ZeroQuantumNumber);
    }
    check_width(width)?;
    Ok(eigen_energy_raw(n, width, units))
}

/// Wall pressure of the n-th eigenstate, `P_n = −dE_n/dL = n²·π²·ℏ²/(m·L³)`.
pub fn eigen_pressure(n: u32, width: f64, units: UnitSystem) -> Result<f64> {
    if n == 0 {
        return Err(Error::ZeroQuantumNumber);
    }
    check_width(width)?;
    Ok(eigen_pressure_raw(n, width, units))
}

// The factor-of-two relations between cycle vertices (widths doubling while
// n swaps 1 <-> 2) must survive floating point exactly, so both raw forms
// keep a plain left-to-right product whose vertex-to-vertex ratios are
// powers of two.
fn eigen_energy_raw(n: u32, width: f64, units: UnitSystem) -> f64 {
    let n2 = f64::from(n) * f64::from(n);
    n2 * PI * PI * units.hbar() * units.hbar() / (2.0 * units.mass() * width * width)
}

fn eigen_pressure_raw(n: u32, width: f64, units: UnitSystem) -> f64 {
    let n2 = f64::from(n) * f64::from(n);
    n2 * PI * PI * units.hbar() * units.hbar() / (units.mass() * width * width * width)
}

/// Instantaneous configuration of the working medium: the well width L
/// together with the occupation probabilities |a_n|² over eigenstates,
/// indexed from n = 1.
///
/// Construction enforces the normalization condition Σ|a_n|² = 1 (within
/// [`NORMALIZATION_TOL`]), so a value of this type is always a valid state
/// and its energy and pressure are total functions.
///
/// Only the probabilities |a_n|² are stored, never the amplitudes: no
/// formula in this crate depends on the relative phases.
#[derive(Debug, Clone, PartialEq)]
pub struct WellState {
    width: f64,
    occupations: Vec<f64>,
}

impl WellState {
    /// Builds a state from raw occupation probabilities (`occupations[0]`
    /// is |a_1|²).
    pub fn new(width: f64, occupations: Vec<f64>) -> Result<Self> {
        check_width(width)?;
        if occupations.len() > MAX_LEVEL {
            return Err(Error::TooManyLevels {
                len: occupations.len(),
            });
        }
        for (i, &p) in occupations.iter().enumerate() {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::OccupationOutOfRange { n: i + 1, value: p });
            }
        }
        let sum: f64 = occupations.iter().sum();
        if (sum - 1.0).abs() > NORMALIZATION_TOL {
            return Err(Error::NotNormalized { sum });
        }
        Ok(Self { width, occupations })
    }

    /// Pure eigenstate n at the given width.
    pub fn pure(n: u32, width: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroQuantumNumber);
        }
        if n as usize > MAX_LEVEL {
            return Err(Error::TooManyLevels { len: n as usize });
        }
        let mut occupations = vec![0.0; n as usize];
        occupations[n as usize - 1] = 1.0;
        Self::new(width, occupations)
    }

    /// Two-level mixture of n = 1 and n = 2 with |a_1|² = `ground_fraction`.
    pub fn two_level(width: f64, ground_fraction: f64) -> Result<Self> {
        Self::new(width, vec![ground_fraction, 1.0 - ground_fraction])
    }

    /// Same occupations, different width.
    pub fn with_width(&self, width: f64) -> Result<Self> {
        check_width(width)?;
        Ok(Self {
            width,
            occupations: self.occupations.clone(),
        })
    }

    pub fn width(&self) -> f64 {
        self.width
    }

    pub fn occupations(&self) -> &[f64] {
        &self.occupations
    }

    /// |a_n|², zero for any level beyond the stored vector.
    pub fn occupation(&self, n: u32) -> f64 {
        match n {
            0 => 0.0,
            _ => self.occupations.get(n as usize - 1).copied().unwrap_or(0.0),
        }
    }

    /// Energy expectation `E(L) = Σ |a_n|²·E_n(L)`.
    ///
    /// For a two-level state this reduces to `(π²ℏ²/2mL²)·(4 − 3|a_1|²)`.
    pub fn energy(&self, units: UnitSystem) -> f64 {
        self.occupations
            .iter()
            .enumerate()
            .map(|(i, &p)| p * eigen_energy_raw(i as u32 + 1, self.width, units))
            .sum()
    }

    /// Wall pressure `P(L) = −dE/dL = Σ |a_n|²·n²π²ℏ²/(mL³)`, the
    /// occupations held fixed while the wall moves.
    pub fn pressure(&self, units: UnitSystem) -> f64 {
        self.occupations
            .iter()
            .enumerate()
            .map(|(i, &p)| p * eigen_pressure_raw(i as u32 + 1, self.width, units))
            .sum()
    }
}
