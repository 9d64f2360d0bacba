//! Independent numerical machinery: adaptive quadrature for work integrals
//! and central finite differences for pressure. Everything here is built to
//! cross-check the closed forms elsewhere in the crate, so it deliberately
//! shares no code path with them.

use crate::error::{Error, Result};
use crate::legs::ProcessLeg;
use crate::units::UnitSystem;
use crate::well::WellState;

/// Tolerances and depth limit for [`integrate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    /// Target relative error against the first whole-interval estimate.
    pub rel_tol: f64,
    /// Absolute error floor.
    pub abs_tol: f64,
    /// Maximum number of interval halvings.
    pub max_depth: u32,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            rel_tol: 1e-10,
            abs_tol: 1e-14,
            max_depth: 50,
        }
    }
}

impl QuadratureConfig {
    fn validate(&self) -> Result<()> {
        let ok = self.rel_tol > 0.0
            && self.rel_tol.is_finite()
            && self.abs_tol > 0.0
            && self.abs_tol.is_finite()
            && self.max_depth >= 1;
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidQuadratureConfig)
        }
    }
}

fn simpson(a: f64, fa: f64, fm: f64, b: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

struct Refined {
    value: f64,
    error_bound: f64,
    converged: bool,
}

// Adaptive Simpson with Richardson extrapolation. Subdivision is always
// left half before right half, so the evaluation order (and hence the
// result) is fixed for a given configuration.
#[allow(clippy::too_many_arguments)]
fn refine<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    fa: f64,
    m: f64,
    fm: f64,
    b: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
    max_depth: u32,
) -> Refined {
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(a, fa, flm, m, fm);
    let right = simpson(m, fm, frm, b, fb);
    let delta = left + right - whole;
    // The factor 15 is the Richardson estimate for Simpson's rule: the
    // halved composite is in error by ~delta/15.
    if delta.abs() <= 15.0 * tol || depth >= max_depth {
        return Refined {
            value: left + right + delta / 15.0,
            error_bound: delta.abs() / 15.0,
            converged: delta.abs() <= 15.0 * tol,
        };
    }
    let half_tol = 0.5 * tol;
    let l = refine(
        f,
        a,
        fa,
        lm,
        flm,
        m,
        fm,
        left,
        half_tol,
        depth + 1,
        max_depth,
    );
    let r = refine(
        f,
        m,
        fm,
        rm,
        frm,
        b,
        fb,
        right,
        half_tol,
        depth + 1,
        max_depth,
    );
    Refined {
        value: l.value + r.value,
        error_bound: l.error_bound + r.error_bound,
        converged: l.converged && r.converged,
    }
}

/// Signed integral ∫ₐᵇ f, antisymmetric under bound exchange.
///
/// Returns [`Error::QuadratureDidNotConverge`] (carrying the best estimate
/// and the achieved error bound) when `max_depth` halvings cannot meet the
/// tolerances.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, cfg: QuadratureConfig) -> Result<f64> {
    cfg.validate()?;
    if !a.is_finite() || !b.is_finite() {
        return Err(Error::NonFiniteBounds { a, b });
    }
    if a == b {
        return Ok(0.0);
    }
    if a > b {
        // Evaluate on the ordered interval and negate, so swapping the
        // bounds negates the result exactly.
        return integrate(f, b, a, cfg).map(|v| -v);
    }
    let m = 0.5 * (a + b);
    let fa = f(a);
    let fm = f(m);
    let fb = f(b);
    let whole = simpson(a, fa, fm, b, fb);
    let tol = f64::max(cfg.abs_tol, cfg.rel_tol * whole.abs());
    let refined = refine(&f, a, fa, m, fm, b, fb, whole, tol, 1, cfg.max_depth);
    if refined.converged {
        Ok(refined.value)
    } else {
        Err(Error::QuadratureDidNotConverge {
            estimate: refined.value,
            error_bound: refined.error_bound,
        })
    }
}

/// Quadrature configuration for one leg's work integral: the requested
/// relative tolerance with the absolute floor tied to the leg's energy
/// scale, so the oracle resolves work integrals in any unit system (an
/// SI-scale work of ~1e-20 J would otherwise vanish under a fixed floor).
pub fn leg_quadrature_config(
    leg: &ProcessLeg,
    units: UnitSystem,
    rel_tol: f64,
) -> QuadratureConfig {
    let defaults = QuadratureConfig::default();
    let scale = leg
        .start()
        .energy(units)
        .abs()
        .max(leg.end().energy(units).abs());
    QuadratureConfig {
        rel_tol,
        abs_tol: (defaults.abs_tol * scale).max(f64::MIN_POSITIVE),
        max_depth: defaults.max_depth,
    }
}

/// Work integral ∫P dL along a leg, taken with the oracle quadrature rather
/// than the leg's closed form. Constant-width legs integrate over an empty
/// interval and give 0.
pub fn leg_work_quadrature(
    leg: &ProcessLeg,
    units: UnitSystem,
    cfg: QuadratureConfig,
) -> Result<f64> {
    let a = leg.start().width();
    let b = leg.end().width();
    if a == b {
        return Ok(0.0);
    }
    // In-interval queries cannot fail; a NaN would only surface through a
    // convergence error, which is the right outcome for a broken integrand.
    integrate(|l| leg.pressure_at(l, units).unwrap_or(f64::NAN), a, b, cfg)
}

/// Central-difference pressure `−(E(L+h) − E(L−h))/(2h)` with `h = h_rel·L`,
/// occupations held fixed.
pub fn finite_diff_pressure(state: &WellState, units: UnitSystem, h_rel: f64) -> Result<f64> {
    if !(h_rel > 0.0 && h_rel.is_finite()) {
        return Err(Error::InvalidStep { h_rel });
    }
    let width = state.width();
    let h = h_rel * width;
    if width - h <= 0.0 {
        return Err(Error::DegenerateStep { width, h });
    }
    let e_plus = state.with_width(width + h)?.energy(units);
    let e_minus = state.with_width(width - h)?.energy(units);
    Ok(-(e_plus - e_minus) / (2.0 * h))
}
