//! Quantum engine cycles for a single particle in a 1D infinite square well.
//!
//! The working medium is one particle of mass m confined to a box of width
//! L. The box wall plays the role of the piston: the state exerts the
//! pressure `P = −dE/dL` on it, where E is the energy expectation of the
//! occupied eigenstates. Two four-leg reversible cycles — quantum analogues
//! of the Stirling and Ericsson engines — are assembled from three process
//! primitives:
//!
//! * isoenergetic ("isothermal") legs that mix the two lowest eigenstates
//!   so that E stays constant while the wall moves (`L·P = const`),
//! * constant-n legs that keep a single eigenstate while the wall moves
//!   (`L³·P = const`, no heat exchanged),
//! * constant-width legs that change occupations at a fixed wall.
//!
//! Every closed form (per-leg work, heat input, efficiency) comes with an
//! independent numerical oracle: adaptive Simpson quadrature over the
//! pressure laws and central finite differences for the pressure itself.
//!
//! ```
//! use qwell::{build_stirling, UnitSystem};
//!
//! let cycle = build_stirling(1.0, 4.0, UnitSystem::natural()).unwrap();
//! let metrics = cycle.metrics(1e-10).unwrap();
//! assert!((metrics.efficiency - 0.75).abs() < 1e-12);
//! ```

pub mod cycle;
pub mod error;
pub mod legs;
pub mod quad;
pub mod units;
pub mod well;

pub use cycle::{build_ericsson, build_stirling, Cycle, CycleKind, CycleMetrics};
pub use error::{Error, Result};
pub use legs::{isothermal_occupation, LegKind, ProcessLeg};
pub use quad::{
    finite_diff_pressure, integrate, leg_quadrature_config, leg_work_quadrature, QuadratureConfig,
};
pub use units::UnitSystem;
pub use well::{eigen_energy, eigen_pressure, WellState};
