mod common;

use std::f64::consts::PI;

use mordellkit::quad::{
    integrate_quadrant, integrate_semi_infinite, truncation_cutoff, Decay, DecayKind, Integrand1D, Integrand2D,
};
use mordellkit::Error;
use proptest::prelude::*;

#[test]
fn elementary_integrals() {
    let g = integrate_semi_infinite(Integrand1D::new(|x: f64| (-x * x).exp(), Decay::gauss(1.0)), 1e-10).unwrap();
    assert!((g.value - PI.sqrt() / 2.0).abs() < 1e-10);
    assert!(g.abs_error_estimate >= 0.0 && g.evaluations >= 1);
    let e = integrate_semi_infinite(Integrand1D::new(|x: f64| (-x).exp(), Decay::exp(1.0)), 1e-10).unwrap();
    assert!((e.value - 1.0).abs() < 1e-10);
}

#[test]
fn hyperbolic_gaussian_against_dense_trapezoid() {
    // cosh(x/2)e^{−x²}/cosh x, even and entire in a strip, so the
    // trapezoid rule with 10⁶ panels on [0, 40] is exact to rounding.
    let f = |x: f64| (x / 2.0).cosh() * (-x * x).exp() / x.cosh();
    let n = 1_000_000;
    let h = 40.0 / n as f64;
    let oracle = h * (0.5 * f(0.0) + (1..n).map(|k| f(k as f64 * h)).sum::<f64>());
    let r = integrate_semi_infinite(Integrand1D::new(f, Decay::gauss(1.0)), 1e-11).unwrap();
    assert!((r.value - oracle).abs() < 1e-9, "{} vs {oracle}", r.value);
}

#[test]
fn quadrant_elementary_integrals() {
    let g = integrate_quadrant(
        Integrand2D::new(|x: f64, y: f64| (-x * x - y * y).exp(), Decay::gauss(1.0), Decay::gauss(1.0)),
        1e-10,
    )
    .unwrap();
    assert!((g.value - PI / 4.0).abs() < 1e-10);
    let e = integrate_quadrant(
        Integrand2D::new(|x: f64, y: f64| (-x - y).exp(), Decay::exp(1.0), Decay::exp(1.0)),
        1e-10,
    )
    .unwrap();
    assert!((e.value - 1.0).abs() < 1e-10);
}

#[test]
fn cutoff_examples() {
    let x = truncation_cutoff(PI, DecayKind::Exp, 1e-10).unwrap();
    let solved = (1e11 / PI).ln() / PI;
    assert!(x >= solved - 1e-12 && x < solved + 1e-6, "{x}");
    // ln(10¹¹/π)/π = 7.697.
    assert!((solved - 7.697).abs() < 1e-3);
    assert!(matches!(truncation_cutoff(0.0, DecayKind::Gauss, 1e-8), Err(Error::InvalidDecay(_))));
    assert!(matches!(truncation_cutoff(-1.0, DecayKind::Exp, 1e-8), Err(Error::InvalidDecay(_))));
}

#[test]
fn invalid_decay_is_rejected() {
    let r = integrate_semi_infinite(Integrand1D::new(|x: f64| x, Decay::exp(0.0)), 1e-8);
    assert!(matches!(r, Err(Error::InvalidDecay(_))));
    let r = integrate_quadrant(Integrand2D::new(|x: f64, _y: f64| x, Decay::exp(1.0), Decay::gauss(-2.0)), 1e-8);
    assert!(matches!(r, Err(Error::InvalidDecay(_))));
}

#[test]
fn oracle_suite_and_estimate_soundness() {
    for &tol in &[1e-8, 1e-10, 1e-12] {
        let rep = common::run_suite(tol);
        assert!(rep.failures.is_empty(), "tol {tol:e}: {:?}", rep.failures);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn linearity(a in -3.0f64..3.0, b in -3.0f64..3.0, p in 0.3f64..3.0, q in 0.2f64..2.5, w in 0.0f64..4.0) {
        let tol = 1e-10;
        let f = move |x: f64| (-p * x * x).exp() * (w * x).cos();
        let g = move |x: f64| 1.0 / (q * x).cosh();
        let df = Decay::gauss(p);
        let dg = Decay::exp(q).with_amplitude(2.0);
        let rf = integrate_semi_infinite(Integrand1D::new(f, df).oscillating(w, 0.0), tol).unwrap();
        let rg = integrate_semi_infinite(Integrand1D::new(g, dg), tol).unwrap();
        // e^{−px²} ≤ e^{q²/(4p)}·e^{−qx}, so a·f + b·g sits under one exponential envelope.
        let env = Decay::exp(q).with_amplitude((a.abs() * (q * q / (4.0 * p)).exp() + 2.0 * b.abs()).max(1e-300));
        let combo = integrate_semi_infinite(
            Integrand1D::new(move |x| a * f(x) + b * g(x), env).oscillating(w, 0.0),
            tol,
        ).unwrap();
        let bound = combo.abs_error_estimate + a.abs() * rf.abs_error_estimate + b.abs() * rg.abs_error_estimate + 1e-14;
        prop_assert!((combo.value - (a * rf.value + b * rg.value)).abs() <= bound);
    }

    #[test]
    fn iteration_order_swap(a in 0.4f64..2.0, b in 0.4f64..2.0, c in 0.0f64..2.0, d in 0.2f64..2.0) {
        let tol = 1e-10;
        let f = move |x: f64, y: f64| (-a * x * x - b * y * y).exp() * (c * x * y).cos() / (d * x).cosh();
        let r1 = integrate_quadrant(
            Integrand2D::new(f, Decay::gauss(a), Decay::gauss(b)).oscillating_y(0.0, 0.0, c),
            tol,
        ).unwrap();
        let r2 = integrate_quadrant(
            Integrand2D::new(move |x, y| f(y, x), Decay::gauss(b), Decay::gauss(a)).oscillating_y(0.0, 0.0, c),
            tol,
        ).unwrap();
        prop_assert!((r1.value - r2.value).abs() <= r1.abs_error_estimate + r2.abs_error_estimate + 1e-15);
    }

    #[test]
    fn cutoff_is_monotone(c in 0.05f64..50.0, k in 1.0f64..4.0, e in 3.0f64..13.0, gauss in any::<bool>()) {
        let kind = if gauss { DecayKind::Gauss } else { DecayKind::Exp };
        let tol = 10f64.powf(-e);
        let x = truncation_cutoff(c, kind, tol).unwrap();
        prop_assert!(x >= 0.0);
        prop_assert!(truncation_cutoff(c * k, kind, tol).unwrap() <= x);
        prop_assert!(truncation_cutoff(c, kind, tol / k).unwrap() >= x);
        // The unit-amplitude tail beyond X is within tol/10.
        let d = if gauss { Decay::gauss(c) } else { Decay::exp(c) };
        prop_assert!(d.tail(x) <= tol / 10.0 * (1.0 + 1e-9));
    }
}
