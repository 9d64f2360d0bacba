//! Unit system: the values of ℏ and the particle mass that scale every
//! energy and pressure in the crate.

use crate::error::{Error, Result};

/// Values of the reduced Planck constant and the particle mass.
///
/// All formulas are covariant in these two constants, so the library never
/// fixes them globally; every operation takes the `UnitSystem` it should
/// evaluate in. [`UnitSystem::natural`] (ℏ = m = 1) is the usual choice.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitSystem {
    hbar: f64,
    mass: f64,
}

impl UnitSystem {
    /// Natural units, ℏ = 1 and m = 1.
    pub fn natural() -> Self {
        Self {
            hbar: 1.0,
            mass: 1.0,
        }
    }

    /// Explicit units. Both constants must be positive and finite.
    pub fn new(hbar: f64, mass: f64) -> Result<Self> {
        if !(hbar > 0.0 && hbar.is_finite() && mass > 0.0 && mass.is_finite()) {
            return Err(Error::InvalidUnits { hbar, mass });
        }
        Ok(Self { hbar, mass })
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }
}

impl Default for UnitSystem {
    fn default() -> Self {
        Self::natural()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn natural_units_are_unity() {
        let u = UnitSystem::natural();
        assert_eq!(u.hbar(), 1.0);
        assert_eq!(u.mass(), 1.0);
    }

    #[test]
    fn rejects_non_positive_constants() {
        assert!(UnitSystem::new(0.0, 1.0).is_err());
        assert!(UnitSystem::new(1.0, -2.0).is_err());
        assert!(UnitSystem::new(f64::NAN, 1.0).is_err());
        assert!(UnitSystem::new(1.0, f64::INFINITY).is_err());
    }

    #[test]
    fn si_constants_accepted() {
        let u = UnitSystem::new(1.054_571_817e-34, 9.109_383_701_5e-31).unwrap();
        assert!(u.hbar() > 0.0 && u.mass() > 0.0);
    }
}
