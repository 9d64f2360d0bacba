//! Property suites for the physics invariants: equation-of-state laws,
//! first-law bookkeeping, closed-form vs oracle agreement, and the exact
//! symmetries the API promises.

use proptest::prelude::*;
use std::f64::consts::PI;

use qwell::{
    build_ericsson, build_stirling, eigen_energy, finite_diff_pressure, integrate,
    isothermal_occupation, leg_work_quadrature, CycleKind, ProcessLeg, QuadratureConfig,
    UnitSystem, WellState,
};

fn natural() -> UnitSystem {
    UnitSystem::natural()
}

/// Random occupation vector over up to eight levels, normalized to 1.
fn occupations() -> impl Strategy<Value = Vec<f64>> {
    proptest::collection::vec(0.0f64..1.0, 1..8)
        .prop_filter("total weight must not vanish", |v| {
            v.iter().sum::<f64>() > 1e-3
        })
        .prop_map(|v| {
            let total: f64 = v.iter().sum();
            v.into_iter().map(|w| w / total).collect()
        })
}

fn width() -> impl Strategy<Value = f64> {
    0.1f64..10.0
}

/// A generic isoenergetic leg: endpoints anywhere on the two-level sweep
/// between `l_ref` and `2·l_ref`.
fn isotherm_between(l_ref: f64, t_start: f64, t_end: f64) -> ProcessLeg {
    let make = |t: f64| {
        let l = l_ref * (1.0 + t);
        let a1 = isothermal_occupation(l, l_ref).unwrap();
        WellState::two_level(l, a1).unwrap()
    };
    ProcessLeg::isothermal(make(t_start), make(t_end), natural()).unwrap()
}

fn rel_dev(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).abs() / a.abs().max(b.abs())
    }
}

proptest! {
    // ── well physics ────────────────────────────────────────────────

    /// Occupations that do not sum to 1 within 1e-12 are rejected.
    #[test]
    fn deficient_normalization_is_rejected(occ in occupations(), deficit in 1e-9f64..1e-3) {
        let skewed: Vec<f64> = occ.iter().map(|p| p * (1.0 - deficit)).collect();
        prop_assert!(WellState::new(1.0, skewed).is_err());
    }

    /// Closed-form pressure agrees with the central finite difference of
    /// the energy at h_rel = 1e-5 to 1e-6 relative.
    #[test]
    fn pressure_matches_finite_difference(occ in occupations(), l in width()) {
        let state = WellState::new(l, occ).unwrap();
        let p = state.pressure(natural());
        let fd = finite_diff_pressure(&state, natural(), 1e-5).unwrap();
        prop_assert!(((p - fd) / p).abs() <= 1e-6, "p = {p}, fd = {fd}");
    }

    /// E scales as 1/L²: energy(cL)·c² reproduces energy(L).
    #[test]
    fn energy_scaling_law(occ in occupations(), l in width(), c in 0.1f64..10.0) {
        let state = WellState::new(l, occ).unwrap();
        let scaled = state.with_width(c * l).unwrap();
        let lhs = scaled.energy(natural()) * (c * c);
        let rhs = state.energy(natural());
        prop_assert!(rel_dev(lhs, rhs) <= 1e-12);
    }

    /// E_n = n²·E_1 at any width.
    #[test]
    fn eigen_energy_n_squared_law(n in 1u32..=64, l in width()) {
        let en = eigen_energy(n, l, natural()).unwrap();
        let e1 = eigen_energy(1, l, natural()).unwrap();
        prop_assert!(rel_dev(en, f64::from(n * n) * e1) <= 1e-12);
    }

    // ── process legs ────────────────────────────────────────────────

    /// Isoenergetic equation of state: L·P(L) = 2E everywhere on the leg.
    #[test]
    fn isothermal_equation_of_state(l_ref in width(), t in 0.0f64..=1.0) {
        let leg = isotherm_between(l_ref, 0.0, 1.0);
        let l = l_ref * (1.0 + t);
        let p = leg.pressure_at(l, natural()).unwrap();
        let e_leg = WellState::pure(1, l_ref).unwrap().energy(natural());
        prop_assert!(rel_dev(l * p, 2.0 * e_leg) <= 1e-12);
    }

    /// Constant-n equation of state: L³·P(L) = n²π²ℏ²/m everywhere.
    #[test]
    fn constant_n_equation_of_state(n in 1u32..=8, lo in width(), stretch in 1.1f64..4.0, t in 0.0f64..=1.0) {
        let hi = lo * stretch;
        let leg = ProcessLeg::constant_n(n, lo, hi).unwrap();
        let l = lo + t * (hi - lo);
        let p = leg.pressure_at(l, natural()).unwrap();
        let constant = f64::from(n * n) * PI * PI;
        prop_assert!(rel_dev(l * l * l * p, constant) <= 1e-12);
    }

    /// Closed-form work agrees with adaptive quadrature of the pressure law.
    #[test]
    fn work_matches_quadrature(l_ref in width(), stretch in 1.1f64..4.0, n in 1u32..=4, flip in any::<bool>()) {
        let iso = isotherm_between(l_ref, 0.0, 1.0);
        let cn = ProcessLeg::constant_n(n, l_ref, l_ref * stretch).unwrap();
        for leg in [iso, cn] {
            let leg = if flip { leg.reversed() } else { leg };
            let closed = leg.work(natural());
            let numeric = leg_work_quadrature(&leg, natural(), QuadratureConfig::default()).unwrap();
            prop_assert!(rel_dev(closed, numeric) <= 1e-9, "closed = {closed}, numeric = {numeric}");
        }
    }

    /// First law per leg: heat − work = ΔE for every leg kind.
    #[test]
    fn leg_energy_balance(l_ref in width(), t0 in 0.0f64..0.5, t1 in 0.5f64..=1.0, n in 1u32..=4, stretch in 1.1f64..4.0, a1 in 0.0f64..=1.0) {
        let units = natural();
        let legs = vec![
            isotherm_between(l_ref, t0, t1),
            ProcessLeg::constant_n(n, l_ref, l_ref * stretch).unwrap(),
            ProcessLeg::constant_width(
                WellState::pure(1, l_ref).unwrap(),
                WellState::two_level(l_ref, a1).unwrap(),
            )
            .unwrap(),
        ];
        for leg in legs {
            let delta_e = leg.end().energy(units) - leg.start().energy(units);
            let balance = leg.heat(units) - leg.work(units);
            let scale = leg.start().energy(units).abs().max(delta_e.abs());
            prop_assert!((balance - delta_e).abs() <= 1e-10 * scale);
        }
    }

    /// The occupation law keeps the energy pinned along the whole sweep.
    #[test]
    fn isothermal_endpoint_consistency(l_ref in width(), t in 0.0f64..=1.0) {
        let l = l_ref * (1.0 + t);
        let a1 = isothermal_occupation(l, l_ref).unwrap();
        let state = WellState::two_level(l, a1).unwrap();
        let e_leg = WellState::pure(1, l_ref).unwrap().energy(natural());
        prop_assert!(rel_dev(state.energy(natural()), e_leg) <= 1e-12);
    }

    /// Reversing a leg negates work and heat exactly.
    #[test]
    fn reversal_antisymmetry(l_ref in width(), n in 1u32..=4, stretch in 1.1f64..4.0, a1 in 0.0f64..=1.0) {
        let units = natural();
        let legs = vec![
            isotherm_between(l_ref, 0.0, 1.0),
            ProcessLeg::constant_n(n, l_ref, l_ref * stretch).unwrap(),
            ProcessLeg::constant_width(
                WellState::pure(2, l_ref).unwrap(),
                WellState::two_level(l_ref, a1).unwrap(),
            )
            .unwrap(),
        ];
        for leg in legs {
            let back = leg.reversed();
            prop_assert_eq!(back.work(units), -leg.work(units));
            prop_assert_eq!(back.heat(units), -leg.heat(units));
        }
    }

    // ── cycles ──────────────────────────────────────────────────────

    /// Metrics efficiency reproduces 1 − 4·ratio² and 1 − E_C/E_H for both
    /// cycle families over random valid geometries.
    #[test]
    fn efficiency_identities(narrow in 0.1f64..2.0, ratio in 0.05f64..0.49, ericsson in any::<bool>()) {
        let wide = narrow / ratio;
        let (cycle, kind) = if ericsson {
            (build_ericsson(narrow, wide, natural()).unwrap(), CycleKind::Ericsson)
        } else {
            (build_stirling(narrow, wide, natural()).unwrap(), CycleKind::Stirling)
        };
        let metrics = cycle.metrics(1e-10).unwrap();
        let r = narrow / wide;
        let closed = kind.closed_form_efficiency(r).unwrap();
        prop_assert!((metrics.efficiency - closed).abs() <= 1e-10);
        prop_assert!((metrics.efficiency - (1.0 - metrics.e_cold / metrics.e_hot)).abs() <= 1e-10);
    }

    /// The two constant-n legs cancel, which is what reduces the work
    /// integral to its two isoenergetic terms.
    #[test]
    fn constant_n_works_cancel(narrow in 0.1f64..2.0, ratio in 0.05f64..0.49, ericsson in any::<bool>()) {
        let wide = narrow / ratio;
        let cycle = if ericsson {
            build_ericsson(narrow, wide, natural()).unwrap()
        } else {
            build_stirling(narrow, wide, natural()).unwrap()
        };
        let w2 = cycle.legs()[1].work(natural());
        let w4 = cycle.legs()[3].work(natural());
        prop_assert!((w2 + w4).abs() <= 1e-12 * w2.abs().max(w4.abs()));
    }

    /// First law over the closed cycle: net work equals net heat.
    #[test]
    fn cycle_first_law(narrow in 0.1f64..2.0, ratio in 0.05f64..0.49, ericsson in any::<bool>()) {
        let wide = narrow / ratio;
        let cycle = if ericsson {
            build_ericsson(narrow, wide, natural()).unwrap()
        } else {
            build_stirling(narrow, wide, natural()).unwrap()
        };
        let metrics = cycle.metrics(1e-10).unwrap();
        let net_heat: f64 = metrics.per_leg_heat.iter().sum();
        prop_assert!(rel_dev(metrics.total_work, net_heat) <= 1e-10);
    }

    /// Scaling ℏ by c scales work and heat by c²; scaling every width by c
    /// scales them by 1/c²; the efficiency never moves.
    #[test]
    fn unit_covariance(narrow in 0.1f64..2.0, ratio in 0.05f64..0.45, c in 0.1f64..10.0) {
        let wide = narrow / ratio;
        let base = build_stirling(narrow, wide, natural()).unwrap().metrics(1e-10).unwrap();

        let scaled_units = UnitSystem::new(c, 1.0).unwrap();
        let hbar_scaled = build_stirling(narrow, wide, scaled_units).unwrap().metrics(1e-10).unwrap();
        prop_assert!(rel_dev(hbar_scaled.total_work, c * c * base.total_work) <= 1e-12);
        prop_assert!(rel_dev(hbar_scaled.heat_in, c * c * base.heat_in) <= 1e-12);
        prop_assert!((hbar_scaled.efficiency - base.efficiency).abs() <= 1e-12);

        let width_scaled = build_stirling(c * narrow, c * wide, natural()).unwrap().metrics(1e-10).unwrap();
        prop_assert!(rel_dev(width_scaled.total_work, base.total_work / (c * c)) <= 1e-12);
        prop_assert!((width_scaled.efficiency - base.efficiency).abs() <= 1e-12);
    }

    /// The quadrature cross-check stays below its advertised ceiling over
    /// the supported geometry range.
    #[test]
    fn oracle_agreement(narrow in 0.1f64..1.0, ratio in 0.1f64..0.49, ericsson in any::<bool>()) {
        let wide = narrow / ratio;
        let cycle = if ericsson {
            build_ericsson(narrow, wide, natural()).unwrap()
        } else {
            build_stirling(narrow, wide, natural()).unwrap()
        };
        let quad_tol = 1e-10;
        let metrics = cycle.metrics(quad_tol).unwrap();
        prop_assert!(metrics.oracle_residual <= f64::max(quad_tol * 10.0, 1e-9));
    }

    // ── oracle machinery ────────────────────────────────────────────

    /// Swapping the bounds negates the integral exactly.
    #[test]
    fn quadrature_antisymmetry(a in 0.1f64..5.0, span in 0.1f64..5.0) {
        let b = a + span;
        let fwd = integrate(|x| 1.0 / x + x.sin(), a, b, QuadratureConfig::default()).unwrap();
        let back = integrate(|x| 1.0 / x + x.sin(), b, a, QuadratureConfig::default()).unwrap();
        prop_assert_eq!(back, -fwd);
    }

    /// Splitting the interval splits the integral.
    #[test]
    fn quadrature_additivity(a in 0.1f64..2.0, s1 in 0.1f64..2.0, s2 in 0.1f64..2.0) {
        let (b, c) = (a + s1, a + s1 + s2);
        let cfg = QuadratureConfig::default();
        let f = |x: f64| 1.0 / (x * x) + x.cos();
        let whole = integrate(f, a, c, cfg).unwrap();
        let parts = integrate(f, a, b, cfg).unwrap() + integrate(f, b, c, cfg).unwrap();
        prop_assert!((whole - parts).abs() <= 1e-9 * whole.abs().max(1.0));
    }

    /// Cubic polynomials are integrated exactly (up to rounding).
    #[test]
    fn quadrature_cubic_exactness(
        c3 in -3.0f64..3.0, c2 in -3.0f64..3.0, c1 in -3.0f64..3.0, c0 in -3.0f64..3.0,
        a in -2.0f64..2.0, span in 0.5f64..3.0,
    ) {
        let b = a + span;
        let f = move |x: f64| ((c3 * x + c2) * x + c1) * x + c0;
        let antiderivative = move |x: f64| (((c3 / 4.0 * x + c2 / 3.0) * x + c1 / 2.0) * x + c0) * x;
        let exact = antiderivative(b) - antiderivative(a);
        prop_assume!(exact.abs() > 1e-3);
        let v = integrate(f, a, b, QuadratureConfig::default()).unwrap();
        prop_assert!(rel_dev(v, exact) <= 1e-13);
    }

    /// Central differences converge at second order in the step.
    #[test]
    fn finite_difference_second_order(l in width(), a1 in 0.0f64..=1.0) {
        let state = WellState::two_level(l, a1).unwrap();
        let exact = state.pressure(natural());
        let err = |h_rel: f64| {
            let fd = finite_diff_pressure(&state, natural(), h_rel).unwrap();
            ((fd - exact) / exact).abs()
        };
        let ratio = err(1e-2) / err(1e-3);
        prop_assert!((50.0..200.0).contains(&ratio), "ratio = {ratio}");
    }
}
