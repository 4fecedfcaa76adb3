use std::f64::consts::PI;

use mordellkit::identities::{
    evaluate_side, find, list_identities, phi, psi, records, verify, ParamMap, Side, Status,
    VerificationOutcome,
};
use mordellkit::quad::{integrate_semi_infinite, Decay, Integrand1D};
use mordellkit::Error;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

fn params(kv: &[(&str, f64)]) -> ParamMap {
    kv.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

fn check(id: &str, kv: &[(&str, f64)], tol: f64) -> VerificationOutcome {
    let o = verify(id, &params(kv), Some(tol)).unwrap_or_else(|e| panic!("{id} {kv:?}: {e}"));
    assert_eq!(o.status, Status::Pass, "{id} {kv:?}: {o:?}");
    o
}

fn lhs(id: &str, kv: &[(&str, f64)], tol: f64) -> f64 {
    evaluate_side(id, Side::Lhs, &params(kv), tol).unwrap()[0].value
}

#[test]
fn registry_listing() {
    let list = list_identities();
    assert!(list.len() >= 40);
    let ids: Vec<_> = list.iter().map(|s| s.id).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(ids, sorted);
    for s in &list {
        if let (Some(text), Some(derived)) = (s.constraint, s.derived) {
            // The constraint mentions only declared parameters and the derived one.
            let mut names: Vec<_> = s.params.iter().map(|p| p.name).collect();
            names.push(derived);
            let stripped = names.iter().fold(text.to_string(), |t, n| t.replace(n, ""));
            assert!(stripped.chars().all(|c| !c.is_ascii_alphabetic() || "pi".contains(c)), "{}: {text}", s.id);
        }
    }
    let fact1 = list.iter().find(|s| s.id == "FACT1").unwrap();
    assert_eq!(fact1.constraint, Some("alpha*beta=2*pi"));
    for id in ["ELL2", "PHI-COMBINED", "LAT-BESSEL"] {
        assert!(!find(id).unwrap().asserted);
    }
}

#[test]
fn side_examples() {
    let ex1 = lhs("EX1", &[], 1e-8);
    assert!((ex1 - (3f64.sqrt() - 1.0) / (2.0 * 6f64.sqrt())).abs() < 1e-7);
    assert!((ex1 - 0.149_429_2).abs() < 1e-7);
    assert!(lhs("ZERO", &[("alpha", PI)], 1e-9).abs() < 1e-8);
    let ram = evaluate_side("RAM", Side::Rhs, &params(&[("alpha", 2.0)]), 1e-9).unwrap()[0].value;
    assert!((ram - 0.438_791_280_9).abs() < 1e-10);
}

#[test]
fn verify_examples() {
    check("FACT1", &[("alpha", (2.0 * PI).sqrt())], 1e-7);
    let o = check("HR-1", &[("alpha", PI.sqrt())], 1e-9);
    assert_eq!(o.abs_diff, Some(0.0));
    check("COR2a", &[("n", 1.0)], 1e-6);
    check("HR-1", &[("alpha", 1.2)], 1e-9);
}

#[test]
fn parameter_errors() {
    let r = verify("HR-1", &params(&[("alpha", 1.0), ("beta", 2.0)]), None);
    assert!(matches!(r, Err(Error::ConstraintViolation { .. })), "{r:?}");
    // A consistent partner is accepted.
    verify("HR-1", &params(&[("alpha", 1.0), ("beta", PI)]), None).unwrap();
    assert!(matches!(verify("HR-1", &params(&[("gamma", 1.0)]), None), Err(Error::UnknownParameter { .. })));
    assert!(matches!(verify("HR-1", &params(&[("alpha", -1.0)]), None), Err(Error::Domain(_))));
    assert!(matches!(verify("NOSUCH", &ParamMap::new(), None), Err(Error::UnknownIdentity(_))));
    assert!(matches!(verify("HR-1", &ParamMap::new(), Some(0.0)), Err(Error::InvalidTolerance(_))));
    assert!(matches!(verify("LAT-K0", &params(&[("m", 0.5)]), None), Err(Error::Domain(_))));
}

#[test]
fn factorizations() {
    for &a in &[(2.0 * PI).sqrt(), 2.0, 3.0] {
        check("FACT1", &[("alpha", a)], 1e-7);
        check("FACT2", &[("alpha", a)], 1e-7);
    }
    // Reference magnitudes at the self-dual point.
    let s = (2.0 * PI).sqrt();
    assert!((lhs("FACT1", &[("alpha", s)], 1e-9) - 0.223_170_2).abs() < 1e-7);
    assert!((lhs("FACT2", &[("alpha", s)], 1e-9) - 0.012_069_1).abs() < 1e-7);
}

#[test]
fn corollaries_and_examples() {
    for &n in &[1.0, 3.0, 0.5] {
        for id in ["COR1a", "COR1b", "COR2a", "COR2b"] {
            check(id, &[("n", n)], 1e-6);
        }
    }
    for id in ["EX1", "EX2", "EX3"] {
        check(id, &[], 1e-6);
    }
    // The corollary left side at n = 1 is the EX3 integral.
    let ex3 = lhs("EX3", &[], 1e-9);
    assert!((ex3 - 1.0 / (8.0 * 2f64.sqrt() * PI * PI)).abs() < 1e-9);
    assert!((ex3 - 0.008_955_6).abs() < 1e-7);
}

#[test]
fn chirp_integral_suite() {
    for &a in &[1.0, 2.0] {
        check("ABS", &[("alpha", a)], 1e-8);
        check("SQRT2-COS", &[("alpha", a)], 1e-8);
        check("SQRT2-SIN", &[("alpha", a)], 1e-8);
        check("BYPRODUCT", &[("alpha", a)], 1e-8);
    }
    for &a in &[1.0, 1.7] {
        let o = check("HALF", &[("alpha", a)], 1e-8);
        assert_eq!(o.components.len(), 3);
    }
    for &a in &[1.0, 2.5, PI] {
        assert!(lhs("ZERO", &[("alpha", a)], 1e-9).abs() < 1e-8, "alpha {a}");
    }
    for &a in &[1.0, 2.0, PI] {
        check("RAM", &[("alpha", a)], 1e-9);
    }
    check("CUBE", &[("alpha", 1.0)], 1e-9);
    check("CUBE", &[("alpha", 2.2)], 1e-9);
    assert!((lhs("CUBE", &[("alpha", 1.0)], 1e-10) - 0.224_199_08).abs() < 1e-8);
}

#[test]
fn zero_against_asymptote_subtraction() {
    // ∫cos 2αx² = ½√(π/(4α)), and 1 − tanh πx·tanh αx decays exponentially,
    // so the integral is ½√(π/(4α)) − ∫(1 − tanh πx tanh αx)cos 2αx²: a route
    // without regularization.
    for &a in &[1.0, 2.5, PI] {
        let f = move |x: f64| (1.0 - (PI * x).tanh() * (a * x).tanh()) * (2.0 * a * x * x).cos();
        let rate = 2.0 * a.min(PI);
        let r = integrate_semi_infinite(Integrand1D::new(f, Decay::exp(rate).with_amplitude(4.0)).oscillating(0.0, 4.0 * a), 1e-12)
            .unwrap();
        let direct = 0.5 * (PI / (4.0 * a)).sqrt() - r.value;
        let regularized = lhs("ZERO", &[("alpha", a)], 1e-10);
        assert!(direct.abs() < 1e-10, "{direct}");
        assert!((direct - regularized).abs() < 1e-9, "{direct} vs {regularized}");
    }
}

#[test]
fn gaussian_chirp_integrals() {
    let kv = [("x", 0.7), ("y", 0.4), ("alpha", 1.3)];
    let o = check("GAUSS-COS", &kv, 1e-9);
    assert!((o.components[0].rhs - 0.930_650_223_64).abs() < 1e-10);
    assert!((o.components[1].rhs - 0.499_913_824_20).abs() < 1e-10);
    check("GAUSS-SIN", &kv, 1e-9);
    check("GAUSS-COS", &[("x", 0.0), ("y", 1.1), ("alpha", 0.8)], 1e-9);
}

#[test]
fn phi_function() {
    // x = √(π/2)u maps the FACT1 integral at α = √(2π) onto (π/2)·Φ_{1,1}(0, 0).
    let (re, im) = phi(1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1e-11).unwrap();
    assert_eq!(im.value, 0.0);
    let fact1 = lhs("FACT1", &[("alpha", (2.0 * PI).sqrt())], 1e-11);
    assert!((PI / 2.0 * re.value - fact1).abs() < 1e-9);
    // A real integrand has no imaginary part even when computed.
    let (_, im) = phi(1.2, 0.8, 0.3, 1e-300, 0.5, 0.0, 1e-10).unwrap();
    assert!(im.value.abs() < 1e-10);
    let o = check("PHI-FUNC", &[("alpha", 1.0), ("beta", 1.0), ("theta", 0.3), ("phi", 0.3)], 1e-6);
    assert!((o.lhs.unwrap() - 0.288_251_65).abs() < 1e-7);
    check("PHI-FUNC", &[("alpha", 1.4), ("beta", 0.7), ("theta", 0.5), ("phi", -0.2)], 1e-6);
    check("PHI-SHIFT", &[("alpha", 1.0), ("beta", 1.0), ("theta", 0.4), ("phi", 0.2)], 1e-6);
}

#[test]
fn phi_shift_through_complex_arguments() {
    // The shift identity's left side, evaluated with Φ at θ ± πi directly.
    let (a, b, t, f) = (1.0, 1.0, 0.4, 0.2);
    let (p1, i1) = phi(a, b, t, PI, f, 0.0, 1e-11).unwrap();
    let (p2, i2) = phi(a, b, t, -PI, f, 0.0, 1e-11).unwrap();
    let via_real = lhs("PHI-SHIFT", &[("alpha", a), ("beta", b), ("theta", t), ("phi", f)], 1e-11);
    assert!((p1.value + p2.value - via_real).abs() < 1e-9);
    assert!((i1.value + i2.value).abs() < 1e-9);
}

#[test]
fn psi_function() {
    assert_eq!(psi(1.0, 1.3, 0.0, 0.7, 1e-10).unwrap().value, 0.0);
    let a = psi(1.2, 0.8, 0.6, 0.3, 1e-11).unwrap();
    let b = psi(0.8, 1.2, 0.3, 0.6, 1e-11).unwrap();
    assert!((a.value - b.value).abs() <= 2e-11);

    // Monte Carlo: x, y half-normal with density √2·e^{−πx²/2}.
    let psi_value = psi(1.0, 1.0, 0.5, 0.5, 1e-11).unwrap().value;
    let normal = Normal::new(0.0, (1.0 / PI).sqrt()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let n = 10_000_000;
    let (mut s, mut s2) = (0.0, 0.0);
    for _ in 0..n {
        let x: f64 = normal.sample(&mut rng);
        let y: f64 = normal.sample(&mut rng);
        let (x, y) = (x.abs(), y.abs());
        let h = (PI * x * y).sin() * (0.5 * x).sin() * (0.5 * y).sin() / ((PI * x).cosh() * (PI * y).cosh()) / 2.0;
        s += h;
        s2 += h * h;
    }
    let mean = s / n as f64;
    let sigma = ((s2 / n as f64 - mean * mean) / n as f64).sqrt();
    assert!((mean - psi_value).abs() < 3.0 * sigma, "mc {mean} ± {sigma}, quadrature {psi_value}");
}

#[test]
fn lattice_suite() {
    let o = check("LAT1", &[], 1e-6);
    assert!((o.lhs.unwrap() - 1.902_120_120_3).abs() < 1e-6);
    let o = check("LAT2", &[], 1e-6);
    assert!((o.lhs.unwrap() - 0.219_354_631_8).abs() < 1e-6);
    for &(n, x) in &[(0.0, 1.0), (1.0, 2.0)] {
        check("LAT-INNER", &[("n", n), ("x", x)], 1e-10);
    }
    for &(m, n) in &[(0.0, 0.0), (0.0, 1.0), (1.0, 1.0)] {
        check("LAT-K0", &[("m", m), ("n", n)], 1e-8);
    }
    for &x in &[2.0, 5.0, 10.0] {
        check("K0-JY", &[("x", x)], 1e-9);
    }
}

#[test]
fn transform_and_series_entries() {
    for r in records().iter().filter(|r| r.id.starts_with("SR") || r.id.starts_with('I') && r.id.len() == 2) {
        check(r.id, &[], r.default_tol);
    }
    check("SINE-ANALOG2", &[("a", 1.1), ("b", 0.3)], 1e-7);
    check("PARTIAL-SINE", &[("a", 1.5), ("y", 0.2)], 1e-9);
    for &a in &[1.0, 2.0] {
        check("POISSON-ELL", &[("alpha", a)], 1e-10);
        check("KSERIES", &[("alpha", a)], 1e-10);
    }
    check("LERCH", &[("p", 1.2)], 1e-4);
}

#[test]
fn exploratory_entries_never_fail() {
    for &b in &[0.3, 0.5, 0.9, 1.5] {
        let o = verify("ELL2", &params(&[("alpha", 2.0), ("beta", b)]), None).unwrap();
        assert_eq!(o.status, Status::Exploratory);
        assert!(!o.is_failure() && o.abs_diff.unwrap().is_finite());
    }
    let o = verify("LAT-BESSEL", &params(&[("terms", 10.0)]), None).unwrap();
    assert_eq!(o.status, Status::Exploratory);
    let o = verify("PHI-COMBINED", &params(&[("alpha", 1.2), ("beta", 0.9)]), None).unwrap();
    assert!(!o.is_failure());
}

#[test]
fn outcome_round_trips_through_json() {
    let o = verify("GAUSS-SIN", &ParamMap::new(), None).unwrap();
    let s = serde_json::to_string(&o).unwrap();
    let back: VerificationOutcome = serde_json::from_str(&s).unwrap();
    assert_eq!(o, back);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn hardy_ramanujan_duality(a in 0.4f64..4.0, which in 1usize..4) {
        let id = ["HR-1", "HR-2", "HR-3"][which - 1];
        let c = if which == 1 { PI } else { 2.0 * PI };
        let here = lhs(id, &[("alpha", a)], 1e-11);
        let there = lhs(id, &[("alpha", c / a)], 1e-11);
        prop_assert!((here - there).abs() <= 1e-9 * here.abs().max(1e-3));
    }

    #[test]
    fn pass_flag_matches_differences(a in 0.5f64..3.0, e in 2.0f64..15.0) {
        let tol = 10f64.powf(-e);
        let o = verify("HR-2", &params(&[("alpha", a)]), Some(tol.max(1e-13))).unwrap();
        let (ad, rd) = (o.abs_diff.unwrap(), o.rel_diff.unwrap());
        prop_assert_eq!(o.pass, ad <= o.tol || rd <= o.tol);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn landen2_duality(a in 1.0f64..5.0) {
        let here = lhs("LANDEN2", &[("alpha", a)], 1e-8);
        let there = lhs("LANDEN2", &[("alpha", 2.0 * PI / a)], 1e-8);
        prop_assert!((here - there).abs() <= 1e-7);
    }
}
