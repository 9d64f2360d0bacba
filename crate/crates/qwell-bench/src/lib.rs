//! Shared fixtures for the criterion benchmarks.

use qwell::{build_ericsson, build_stirling, Cycle, UnitSystem, WellState};

pub fn reference_stirling() -> Cycle {
    build_stirling(1.0, 4.0, UnitSystem::natural()).unwrap()
}

pub fn reference_ericsson() -> Cycle {
    build_ericsson(1.0, 4.0, UnitSystem::natural()).unwrap()
}

/// A mixed eight-level state for the pressure/energy micro-benchmarks.
pub fn mixed_state() -> WellState {
    let weights = [0.30, 0.25, 0.15, 0.10, 0.08, 0.06, 0.04, 0.02];
    WellState::new(1.7, weights.to_vec()).unwrap()
}
