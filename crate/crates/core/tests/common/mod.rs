//! Fixed suite of smooth, even, decaying integrands with brute-force
//! trapezoid oracles. For an even analytic integrand the half-line trapezoid
//! rule with a half-weight at the origin converges geometrically in 1/h.

#![allow(dead_code)]

use std::f64::consts::PI;

use mordellkit::quad::{integrate_semi_infinite, Decay, Integrand1D};

pub struct Case {
    pub name: &'static str,
    pub f: fn(f64) -> f64,
    pub decay: Decay<f64>,
    /// Oscillation slope hint (`ω = slope·x`) and base.
    pub osc: (f64, f64),
    /// Trapezoid range; the envelope tail beyond it is below 1e−17.
    pub range: f64,
}

fn sech(x: f64) -> f64 {
    1.0 / x.cosh()
}

pub fn suite() -> Vec<Case> {
    let g = |r: f64| Decay::gauss(r);
    let e = |r: f64, a: f64| Decay::exp(r).with_amplitude(a);
    vec![
        Case { name: "gauss", f: |x| (-x * x).exp(), decay: g(1.0), osc: (0.0, 0.0), range: 8.0 },
        Case { name: "sech", f: sech, decay: e(1.0, 2.0), osc: (0.0, 0.0), range: 45.0 },
        Case { name: "sech^2", f: |x| sech(x).powi(2), decay: e(2.0, 4.0), osc: (0.0, 0.0), range: 25.0 },
        Case { name: "gauss·cos3x", f: |x| (-x * x).exp() * (3.0 * x).cos(), decay: g(1.0), osc: (3.0, 0.0), range: 8.0 },
        Case { name: "cos(x²)·sech πx", f: |x| (x * x).cos() * sech(PI * x), decay: e(PI, 2.0), osc: (0.0, 2.0), range: 15.0 },
        Case { name: "x²·gauss", f: |x| x * x * (-x * x).exp(), decay: g(0.5), osc: (0.0, 0.0), range: 10.0 },
        Case { name: "1/(cosh x + 2)", f: |x| 1.0 / (x.cosh() + 2.0), decay: e(1.0, 2.0), osc: (0.0, 0.0), range: 45.0 },
        Case {
            name: "x·sin x·gauss",
            f: |x| x * x.sin() * (-x * x).exp(),
            decay: g(0.5),
            osc: (1.0, 0.0),
            range: 10.0,
        },
        Case { name: "sech x·cos 2x", f: |x| sech(x) * (2.0 * x).cos(), decay: e(1.0, 2.0), osc: (2.0, 0.0), range: 45.0 },
        Case {
            name: "cosh(x²/2)/cosh x²",
            f: |x| (x * x / 2.0).cosh() / (x * x).cosh(),
            decay: g(0.5).with_amplitude(2.0),
            osc: (0.0, 0.0),
            range: 10.0,
        },
    ]
}

/// Half-line trapezoid with `n` panels on `[0, range]`.
pub fn trapezoid(f: fn(f64) -> f64, range: f64, n: usize) -> f64 {
    let h = range / n as f64;
    let mut s = 0.5 * (f(0.0) + f(range));
    for k in 1..n {
        s += f(k as f64 * h);
    }
    s * h
}

pub struct SuiteReport {
    pub worst_oracle_gap: f64,
    pub worst_soundness_ratio: f64,
    pub failures: Vec<String>,
}

/// Runs the suite at `tol`: engine within `10·tol` of the oracle, and the
/// true error within 5× the reported estimate. Both sides carry rounding
/// of order 1e−16 relative, allowed for by `ROUNDING`.
pub fn run_suite(tol: f64) -> SuiteReport {
    const ROUNDING: f64 = 4e-16;
    let mut rep = SuiteReport { worst_oracle_gap: 0.0, worst_soundness_ratio: 0.0, failures: Vec::new() };
    for c in suite() {
        let oracle = trapezoid(c.f, c.range, 400_000);
        let r = integrate_semi_infinite(Integrand1D::new(c.f, c.decay).oscillating(c.osc.0, c.osc.1), tol).unwrap();
        let gap = (r.value - oracle).abs();
        let noise = ROUNDING * oracle.abs().max(1.0);
        rep.worst_oracle_gap = rep.worst_oracle_gap.max(gap);
        let ratio = (gap - noise).max(0.0) / r.abs_error_estimate.max(f64::MIN_POSITIVE);
        rep.worst_soundness_ratio = rep.worst_soundness_ratio.max(ratio);
        if gap > 10.0 * tol {
            rep.failures.push(format!("{}: |engine − oracle| = {gap:e} > 10·tol", c.name));
        }
        if gap > 5.0 * r.abs_error_estimate + noise {
            rep.failures.push(format!("{}: error {gap:e} exceeds 5× estimate {:e}", c.name, r.abs_error_estimate));
        }
    }
    rep
}
