//! Error type shared by every module in the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while building states, legs, cycles, or
/// running the numerical oracle.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("hbar and mass must be positive and finite: hbar = {hbar}, mass = {mass}")]
    InvalidUnits { hbar: f64, mass: f64 },

    #[error("well width must be positive and finite: {width}")]
    InvalidWidth { width: f64 },

    #[error("quantum number must be at least 1")]
    ZeroQuantumNumber,

    #[error("occupations cover levels n = 1..=64: got {len} levels")]
    TooManyLevels { len: usize },

    #[error("occupation |a_{n}|^2 must lie in [0, 1]: {value}")]
    OccupationOutOfRange { n: usize, value: f64 },

    #[error("occupations must sum to 1 within 1e-12: sum = {sum}")]
    NotNormalized { sum: f64 },

    #[error("width {width} is outside the leg interval [{lo}, {hi}]")]
    WidthOutsideLeg { width: f64, lo: f64, hi: f64 },

    #[error("pressure is not a function of width on a constant-width leg")]
    PressureUndefinedOnConstantWidth,

    #[error(
        "isothermal endpoints must share one energy expectation: start = {start}, end = {end}"
    )]
    IsothermalEnergyMismatch { start: f64, end: f64 },

    #[error("isothermal endpoints may occupy only the two lowest levels")]
    IsothermalLevelTooHigh,

    #[error("constant-n legs need distinct start and end widths: both are {width}")]
    ConstantNSameWidth { width: f64 },

    #[error("constant-width legs need identical start and end widths: {start} vs {end}")]
    ConstantWidthMismatch { start: f64, end: f64 },

    #[error("cycle is not closed at leg {leg}: {reason}")]
    CycleNotClosed { leg: usize, reason: String },

    #[error("cycle is degenerate: {0}")]
    DegenerateCycle(String),

    #[error("{cycle} geometry requires {constraint}: got L1 = {l1}, L3 = {l3}")]
    InvalidGeometry {
        cycle: &'static str,
        constraint: &'static str,
        l1: f64,
        l3: f64,
    },

    #[error("width ratio must satisfy 0 < ratio < 1/2 for positive efficiency: {ratio}")]
    RatioOutOfRange { ratio: f64 },

    #[error("unknown cycle name {0:?} (expected \"stirling\" or \"ericsson\")")]
    UnknownCycle(String),

    #[error("quadrature tolerances must be positive and finite with max_depth >= 1")]
    InvalidQuadratureConfig,

    #[error("integration bounds must be finite: [{a}, {b}]")]
    NonFiniteBounds { a: f64, b: f64 },

    #[error(
        "quadrature did not converge within max_depth: estimate = {estimate}, error bound = {error_bound}"
    )]
    QuadratureDidNotConverge { estimate: f64, error_bound: f64 },

    #[error("finite-difference step must be positive and finite: {h_rel}")]
    InvalidStep { h_rel: f64 },

    #[error("finite-difference step {h} collapses the well width {width}")]
    DegenerateStep { width: f64, h: f64 },
}
