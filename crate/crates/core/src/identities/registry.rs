//! The identity table.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, PI, SQRT_2};

use num_complex::Complex64;

use super::integrals::*;
use super::{Constraint, Domain, IdentityRecord, ParamSpec, Params, SideValue};
use crate::error::Result;
use crate::series::{
    elliptic1_check, elliptic2_check, fbeta_check, landen_sum_check, legendre_sum_check, poisson_check_1d,
    poisson_f1_check, poisson_odd_check, sum_bilateral, sum_lerch, SeriesTerm,
};
use crate::specfun::kernels::ratio;
use crate::specfun::{
    bessel_k0_imag, dn_quarter_check, modulus_from_ratio, sech, shc, sinc, EllipticValues, Kernel,
    KernelDescriptor,
};
use crate::transforms::{fourier_1d_result, fourier_2d_result, TransformKind};

type Out = Result<Vec<SideValue>>;

const TOL_1D: f64 = 1e-9;
const TOL_2D: f64 = 1e-7;

struct B(IdentityRecord);

fn rec(id: &'static str, citation: &'static str, lhs: fn(&Params, f64) -> Out, rhs: fn(&Params, f64) -> Out) -> B {
    B(IdentityRecord {
        id,
        citation,
        params: Vec::new(),
        constraint: None,
        components: vec!["value"],
        lhs_spec: "",
        rhs_spec: "",
        default_tol: TOL_1D,
        asserted: true,
        lhs,
        rhs,
    })
}

impl B {
    fn param(mut self, name: &'static str, default: f64, domain: Domain, sample: (f64, f64)) -> Self {
        self.0.params.push(ParamSpec { name, default, domain, sample });
        self
    }

    fn alpha(self, default: f64) -> Self {
        self.param("alpha", default, Domain::positive(), (0.5, 4.0))
    }

    fn derive(mut self, text: &'static str, derived: &'static str, derive: fn(&Params) -> f64) -> Self {
        self.0.constraint = Some(Constraint { text, derived, derive });
        self
    }

    fn beta_from(self, text: &'static str, derive: fn(&Params) -> f64) -> Self {
        self.derive(text, "beta", derive)
    }

    fn specs(mut self, lhs: &'static str, rhs: &'static str) -> Self {
        self.0.lhs_spec = lhs;
        self.0.rhs_spec = rhs;
        self
    }

    fn tol(mut self, t: f64) -> Self {
        self.0.default_tol = t;
        self
    }

    fn complex(mut self) -> Self {
        self.0.components = vec!["re", "im"];
        self
    }

    fn components(mut self, c: &[&'static str]) -> Self {
        self.0.components = c.to_vec();
        self
    }

    fn exploratory(mut self) -> Self {
        self.0.asserted = false;
        self
    }
}

fn one(v: SideValue) -> Out {
    Ok(vec![v])
}

fn exact(v: f64) -> Out {
    one(SideValue::exact(v))
}

fn pair(z: Complex64) -> Out {
    Ok(vec![SideValue::exact(z.re), SideValue::exact(z.im)])
}

fn kd(k: Kernel<f64>) -> Result<KernelDescriptor<f64>> {
    KernelDescriptor::new(k)
}

fn alpha_beta(p: &Params) -> (f64, f64) {
    (p.get("alpha"), p.get("beta"))
}

// ---- self-reciprocal catalogs ---------------------------------------------

fn sr_kernel<const I: u8, const SINE: bool>() -> Result<KernelDescriptor<f64>> {
    kd(if SINE { Kernel::Srs(I) } else { Kernel::Src(I) })
}

fn sr_lhs<const I: u8, const SINE: bool>(p: &Params, tol: f64) -> Out {
    let kind = if SINE { TransformKind::Sine } else { TransformKind::Cosine };
    one(fourier_1d_result(&sr_kernel::<I, SINE>()?, kind, p.get("t"), floor(tol))?.into())
}

fn sr_rhs<const I: u8, const SINE: bool>(p: &Params, _: f64) -> Out {
    exact(sr_kernel::<I, SINE>()?.value(p.get("t")))
}

fn sr(id: &'static str, citation: &'static str, lhs: fn(&Params, f64) -> Out, rhs: fn(&Params, f64) -> Out) -> IdentityRecord {
    rec(id, citation, lhs, rhs)
        .param("t", 0.7, Domain::non_negative(), (0.0, 4.0))
        .specs("normalised one-dimensional Fourier transform at t", "kernel value at t")
        .0
}

fn sr2d_kernel(id: &str) -> (Kernel<f64>, TransformKind) {
    match id {
        "cos1" => (Kernel::Cos1, TransformKind::CosCos),
        "sinsin" => (Kernel::SinSin, TransformKind::CosCos),
        _ => (Kernel::OneMinusCos, TransformKind::SinSin),
    }
}

fn sr2d_lhs<const W: u8>(p: &Params, tol: f64) -> Out {
    let (k, kind) = sr2d_kernel(["cos1", "sinsin", "omc"][W as usize]);
    one(fourier_2d_result(&kd(k)?, kind, p.get("a"), p.get("b"), floor(tol))?.into())
}

fn sr2d_rhs<const W: u8>(p: &Params, _: f64) -> Out {
    let (k, _) = sr2d_kernel(["cos1", "sinsin", "omc"][W as usize]);
    exact(kd(k)?.value_2d(p.get("a"), p.get("b")))
}

fn ab(b: B, a: f64, bb: f64) -> B {
    b.param("a", a, Domain::non_negative(), (0.0, 2.0)).param("b", bb, Domain::non_negative(), (0.0, 2.0))
}

// ---- mixed two-dimensional kernels ----------------------------------------

fn ki_lhs<const W: u8>(p: &Params, tol: f64) -> Out {
    let (k, kind) = match W {
        1 => (Kernel::Ki { which: 1, p: p.get("p") }, TransformKind::CosCos),
        2 => (Kernel::Ki { which: 2, p: p.get("p") }, TransformKind::SinSin),
        3 => (Kernel::Ki34 { which: 3 }, TransformKind::CosCos),
        _ => (Kernel::Ki34 { which: 4 }, TransformKind::SinSin),
    };
    one(fourier_2d_result(&kd(k)?, kind, p.get("a"), p.get("b"), floor(tol))?.into())
}

fn ki_rhs<const W: u8>(p: &Params, _: f64) -> Out {
    let (a, b) = (p.get("a"), p.get("b"));
    let v = match W {
        1 | 2 => {
            let s = p.get("p");
            let sine = W == 2;
            let den = sech(PI * a / s) * sech(s * b);
            let first = SQRT_2 * ratio(!sine, PI / (2.0 * s), PI / s, 0.0, a) * ratio(!sine, s / 2.0, s, 0.0, b);
            let second = if sine { (a * b).sin() } else { (a * b).cos() } * den;
            first - second
        }
        _ => {
            let r3 = 3f64.sqrt();
            // cosh(b/2)/sinh(3b/2)·cosh(πa/3)/sinh(πa) times sin ab or (1 − cos ab),
            // with the removable singularities folded into sinc/shc.
            let hyper = (b / 2.0).cosh() * (PI * a / 3.0).cosh() / ((1.5 * PI) * shc(1.5 * b) * shc(PI * a));
            let cube = |z: f64| 1.0 / (1.0 + 2.0 * z.cosh());
            let tail = cube(2.0 * PI * a / 3.0) * cube(b);
            if W == 3 {
                r3 * sinc(a * b) * hyper - (1.0 + (a * b).cos()) * tail
            } else {
                r3 * a * b * sinc(a * b / 2.0).powi(2) / 2.0 * hyper - (a * b).sin() * tail
            }
        }
    };
    exact(v)
}

fn sine_analog_lhs(p: &Params, tol: f64) -> Out {
    let (a, b) = (p.get("a"), p.get("b"));
    let rp = PI.sqrt();
    let f = move |x: f64, y: f64| (x * y).cos() * a * b * sinc(a * x) * sinc(b * y) / (PI * shc(rp * x) * shc(rp * y));
    // |sin(ax)/sinh(√πx)| ≤ max(2.32, 2.12a/√π)·e^{−0.75√πx}.
    let d = |s: f64| crate::quad::Decay::exp(0.75 * rp).with_amplitude(2.32f64.max(2.12 * s / rp));
    let norm = 2.0 / PI;
    let v = q2(f, (d(a), d(b)), (a, 0.0), osc_y(b, 0.0, 1.0), tol / norm)?;
    one(v.scale(norm))
}

fn sine_analog_rhs(p: &Params, _: f64) -> Out {
    let (a, b) = (p.get("a"), p.get("b"));
    let h = PI.sqrt() / 2.0;
    exact(0.5 * (h * a).tanh() * (h * b).tanh() - kd(Kernel::OneMinusCos)?.value_2d(a, b))
}

fn f1_lhs(p: &Params, tol: f64) -> Out {
    one(fourier_2d_result(&kd(Kernel::F1)?, TransformKind::CosCos, p.get("a"), p.get("b"), floor(tol))?.into())
}

fn f1_rhs(p: &Params, _: f64) -> Out {
    let (a, b) = (p.get("a"), p.get("b"));
    let c = FRAC_PI_2.sqrt();
    exact(sinc(a * b) / (c * c * shc(c * a) * shc(c * b)))
}

fn partial_lhs(p: &Params, tol: f64) -> Out {
    let (a, y) = (p.get("a"), p.get("y"));
    let rp = PI.sqrt();
    let f = move |x: f64| y * sinc(x * y) * (a * x).cos() / (rp * shc(rp * x));
    let d = crate::quad::Decay::exp(0.75 * rp).with_amplitude(2.32f64.max(2.12 * y / rp));
    one(q1(f, d, a + y, 0.0, tol)?)
}

fn partial_rhs(p: &Params, _: f64) -> Out {
    let rp = PI.sqrt();
    let (u, v) = (rp * p.get("y"), rp * p.get("a"));
    let m = u.max(v);
    let e = |z: f64| (z - m).exp();
    exact(rp / 2.0 * (e(u) - e(-u)) / (e(u) + e(-u) + e(v) + e(-v)))
}

// ---- Hardy–Ramanujan transformations --------------------------------------

fn hr_side<const W: u8, const RIGHT: bool>(p: &Params, tol: f64) -> Out {
    let a = if RIGHT { p.get("beta") } else { p.get("alpha") };
    let k = match W {
        1 => Kernel::Hr1 { alpha: a },
        2 => Kernel::Hr2 { alpha: a },
        _ => Kernel::Hr3 { alpha: a },
    };
    let s = a.sqrt();
    one(kernel_integral(&kd(k)?, tol / s)?.scale(s))
}

// ---- series identities ------------------------------------------------------

fn sech_sum(a: f64, tol: f64) -> Result<SideValue> {
    Ok(sum_bilateral(&SeriesTerm::new(|n: i64| sech(PI * a * n as f64), PI * a), floor(tol))?.into())
}

fn poisson_ell_side<const RIGHT: bool>(p: &Params, tol: f64) -> Out {
    let a = if RIGHT { p.get("beta") } else { p.get("alpha") };
    one(sech_sum(a, tol / a.sqrt())?.scale(a.sqrt()))
}

fn kseries_lhs(p: &Params, tol: f64) -> Out {
    one(sech_sum(p.get("alpha"), tol)?.scale(FRAC_PI_2))
}

fn kseries_rhs(p: &Params, _: f64) -> Out {
    let (k, kp) = modulus_from_ratio(p.get("alpha"))?;
    exact(EllipticValues::from_pair(k, kp).big_k)
}

fn dn_side<const RIGHT: bool>(p: &Params, _: f64) -> Out {
    let (series, closed) = dn_quarter_check(p.get("k"))?;
    exact(if RIGHT { closed } else { series })
}

fn side_of(pair: crate::series::SidePair<f64>, right: bool) -> Out {
    one(if right { pair.rhs } else { pair.lhs }.into())
}

fn poisson_odd_side<const RIGHT: bool>(p: &Params, tol: f64) -> Out {
    let (a, b) = alpha_beta(p);
    side_of(poisson_odd_check(&kd(Kernel::Srs(1))?, a, b, floor(tol))?, RIGHT)
}

fn poisson_f1_side<const RIGHT: bool>(p: &Params, tol: f64) -> Out {
    side_of(poisson_f1_check(p.get("alpha"), p.get("beta"), floor(tol))?, RIGHT)
}

fn poisson_gauss_side<const RIGHT: bool>(p: &Params, tol: f64) -> Out {
    let (a, b) = alpha_beta(p);
    side_of(poisson_check_1d(&kd(Kernel::Hr1 { alpha: p.get("p") })?, a, b, floor(tol))?, RIGHT)
}

fn legendre_side<const RIGHT: bool>(p: &Params, tol: f64) -> Out {
    side_of(legendre_sum_check(p.get("alpha"), floor(tol))?, RIGHT)
}

fn landen_side<const RIGHT: bool>(p: &Params, tol: f64) -> Out {
    side_of(landen_sum_check(p.get("alpha"), floor(tol))?, RIGHT)
}

fn ell1_side<const RIGHT: bool>(p: &Params, tol: f64) -> Out {
    side_of(elliptic1_check(p.get("alpha"), floor(tol))?, RIGHT)
}

fn ell2_side<const RIGHT: bool>(p: &Params, tol: f64) -> Out {
    side_of(elliptic2_check(p.get("alpha"), p.get("beta"), floor(tol))?, RIGHT)
}

fn fbeta_side<const RIGHT: bool>(p: &Params, tol: f64) -> Out {
    side_of(fbeta_check(p.get("beta"), p.get("theta"), floor(tol))?, RIGHT)
}

fn lerch_side<const RIGHT: bool>(p: &Params, tol: f64) -> Out {
    one(sum_lerch(if RIGHT { p.get("q") } else { p.get("p") }, floor(tol))?.into())
}

// ---- Mordell factorizations ---------------------------------------------------

fn hr_integral(w: u8, a: f64, tol: f64) -> Result<SideValue> {
    kernel_integral(&kd(if w == 2 { Kernel::Hr2 { alpha: a } } else { Kernel::Hr3 { alpha: a } })?, tol)
}

fn landen2_lhs(p: &Params, tol: f64) -> Out {
    let (a, b) = alpha_beta(p);
    one(fact1_lhs(a, b, tol / SQRT_2)?.scale(SQRT_2))
}

fn landen2_rhs(p: &Params, tol: f64) -> Out {
    let (a, b) = alpha_beta(p);
    one(hr_integral(2, a, tol / 4.0)?.mul(hr_integral(2, b, tol / 4.0)?))
}

fn fact_lhs<const W: u8>(p: &Params, tol: f64) -> Out {
    let (a, b) = alpha_beta(p);
    one(if W == 1 { fact1_lhs(a, b, tol)? } else { fact2_lhs(a, b, tol)? })
}

fn fact_rhs<const W: u8>(p: &Params, tol: f64) -> Out {
    let a = p.get("alpha");
    let c = a / (2.0 * PI.sqrt());
    one(hr_integral(if W == 1 { 2 } else { 3 }, a, tol / (4.0 * c.max(1.0)))?.sq().scale(c))
}

// ---- corollaries and examples ---------------------------------------------

fn cor_lhs_eval<const SINE: bool, const ODD: bool>(p: &Params, tol: f64) -> Out {
    one(cor_lhs(p.get("n"), SINE, ODD, tol)?)
}

fn cor_rhs_eval<const SINE: bool, const ODD: bool>(p: &Params, tol: f64) -> Out {
    let n = p.get("n");
    let t = tol / 8.0;
    let v = if !ODD {
        let (i1, i2) = (cor_i(1, n, t)?, cor_i(2, n, t)?);
        let sq = if SINE { i2.sq().sub(i1.sq()) } else { i1.sq().sub(i2.sq()) };
        sq.scale(n.sqrt() / 2.0).add(i1.mul(i2).scale(n.sqrt()))
    } else {
        let (i3, i4) = (cor_i(3, n, t)?, cor_i(4, n, t)?);
        let cross = i3.mul(i4).scale(if SINE { -2.0 } else { 2.0 });
        i4.sq().sub(i3.sq()).add(cross).scale(n.powf(1.5) / 2.0)
    };
    one(v)
}

fn ex_lhs<const W: u8>(_: &Params, tol: f64) -> Out {
    one(match W {
        1 => cor_lhs(3.0, false, false, tol)?,
        2 => cor_lhs(3.0, true, false, tol)?,
        _ => cor_lhs(1.0, false, true, tol)?,
    })
}

fn ex_rhs<const W: u8>(_: &Params, _: f64) -> Out {
    let r2 = SQRT_2;
    let r3 = 3f64.sqrt();
    exact(match W {
        1 => (r3 - 1.0) / (2.0 * 6f64.sqrt()),
        2 => (2.0 - r3) / (4.0 * r2),
        _ => 1.0 / (8.0 * r2 * PI * PI),
    })
}

// ---- Φ identities -------------------------------------------------------------

fn phi_params(b: B) -> B {
    b.param("alpha", 1.0, Domain::positive(), (0.5, 2.0))
        .param("beta", 1.0, Domain::positive(), (0.5, 2.0))
        .param("theta", 0.3, Domain::open(f64::NEG_INFINITY, f64::INFINITY), (0.0, 1.0))
        .param("phi", 0.3, Domain::open(f64::NEG_INFINITY, f64::INFINITY), (0.0, 1.0))
}

fn phi_args(p: &Params) -> (f64, f64, f64, f64) {
    (p.get("alpha"), p.get("beta"), p.get("theta"), p.get("phi"))
}

fn phi_func_lhs(p: &Params, tol: f64) -> Out {
    let (a, b, t, f) = phi_args(p);
    let w = (a * b).sqrt() * ((t * t / a + f * f / b) / (2.0 * PI)).exp();
    let first = phi_value(a, b, (t, 0.0), (f, 0.0), tol / (2.0 * w))?.scale(w);
    let second = phi_value(1.0 / a, 1.0 / b, (0.0, t / a), (0.0, f / b), tol / 2.0)?;
    one(first.add(second))
}

fn phi_func_rhs(p: &Params, tol: f64) -> Out {
    let (a, b, t, f) = phi_args(p);
    let t4 = tol / 8.0;
    one(phi_marginal(t / a, a, t4)?.mul(phi_marginal(f / b, b, t4)?).scale(SQRT_2))
}

fn phi_shift_lhs_eval(p: &Params, tol: f64) -> Out {
    let (a, b, t, f) = phi_args(p);
    one(phi_shift_lhs(a, b, t, f, tol)?)
}

fn phi_shift_rhs(p: &Params, tol: f64) -> Out {
    let (a, b, t, f) = phi_args(p);
    let s = (-t * t / (2.0 * PI * a)).exp() * (2.0 / a).sqrt();
    let c = FRAC_PI_2 * (b + 1.0 / a);
    one(cos_cosh_gauss(f, t / a, c, tol / s.max(1e-300))?.scale(s))
}

fn phi_combined_lhs(p: &Params, tol: f64) -> Out {
    let (a, b, t, f) = phi_args(p);
    let pre = (b / 2.0).sqrt() * (f * f / (2.0 * PI * b)).exp();
    let term = |shift: f64| -> Result<SideValue> {
        let th = t + shift;
        let w = pre * (th * th / (2.0 * PI * a)).exp();
        Ok(phi_value(a, b, (th, 0.0), (f, 0.0), tol / (2.0 * w))?.scale(w))
    };
    one(term(PI * a)?.add(term(-PI * a)?))
}

fn phi_combined_rhs(p: &Params, tol: f64) -> Out {
    let (a, b, t, f) = phi_args(p);
    let e = (t * t / (2.0 * PI * a)).exp();
    let first = cos_cosh_gauss(t, f / a, FRAC_PI_2 * (a + 1.0 / b), tol / (2.0 * e))?.scale(-e);
    let w = SQRT_2 * (PI * a / 8.0 + t * t / (2.0 * PI * a)).exp() * (t / 2.0).cosh();
    let second = phi_marginal(f / b, b, tol / (2.0 * w))?.scale(w);
    one(first.add(second))
}

// ---- chirp-integral identities ------------------------------------------------

fn abs_lhs(p: &Params, tol: f64) -> Out {
    let a = p.get("alpha");
    one(sin_over_sinh_sinh(a, a, tol)?)
}

fn abs_rhs(p: &Params, tol: f64) -> Out {
    let a = p.get("alpha");
    one(mordell_abs_sq(|x| sech(PI * x), crate::quad::Decay::exp(PI).with_amplitude(2.0), a, tol)?)
}

// The three members of the half-angle chain.
fn half_a(a: f64, tol: f64) -> Result<SideValue> {
    sin_over_sinh_sinh(a, 2.0 * a, tol)
}

fn half_b(a: f64, tol: f64) -> Result<SideValue> {
    trig_over_cosh_cosh(a, 2.0 * a, false, tol)
}

fn half_c(a: f64, tol: f64) -> Result<SideValue> {
    mordell_abs_sq(w_even, crate::quad::Decay::exp(FRAC_PI_2).with_amplitude(2.0), a / 2.0, tol)
}

fn half_lhs(p: &Params, tol: f64) -> Out {
    let a = p.get("alpha");
    let (x, y) = (half_a(a, tol)?, half_b(a, tol)?);
    Ok(vec![x, y, x])
}

fn half_rhs(p: &Params, tol: f64) -> Out {
    let a = p.get("alpha");
    let (y, z) = (half_b(a, tol)?, half_c(a, tol)?);
    Ok(vec![y, z, z])
}

fn cube_lhs_eval(p: &Params, tol: f64) -> Out {
    one(cube_lhs(p.get("alpha"), tol)?)
}

fn cube_rhs_eval(p: &Params, tol: f64) -> Out {
    one(cube_rhs(p.get("alpha"), tol)?)
}

fn zero_lhs(p: &Params, tol: f64) -> Out {
    one(tanh_tanh_regularized(p.get("alpha"), false, tol)?)
}

fn byproduct_lhs(p: &Params, tol: f64) -> Out {
    let a = p.get("alpha");
    one(sin_over_sinh_sinh(a, a / 2.0, tol / 2.0)?.scale(2.0))
}

fn byproduct_rhs(p: &Params, tol: f64) -> Out {
    one(tanh_tanh_regularized(p.get("alpha"), true, tol)?)
}

fn gauss_side<const SINE: bool, const RIGHT: bool>(p: &Params, tol: f64) -> Out {
    let (x, y, a) = (p.get("x"), p.get("y"), p.get("alpha"));
    if RIGHT {
        pair(gauss_rhs(x, y, a, SINE))
    } else {
        Ok(gauss_lhs(x, y, a, SINE, tol)?.to_vec())
    }
}

fn ram_lhs(p: &Params, tol: f64) -> Out {
    one(ramanujan(p.get("alpha"), tol)?)
}

fn ram_rhs(p: &Params, _: f64) -> Out {
    exact(0.5 * (p.get("alpha") / 4.0).cos())
}

fn sqrt2_lhs<const SINE: bool>(p: &Params, tol: f64) -> Out {
    let a = p.get("alpha");
    one(trig_over_cosh_cosh(a, a, SINE, tol / SQRT_2)?.scale(SQRT_2))
}

fn sqrt2_rhs<const SINE: bool>(p: &Params, tol: f64) -> Out {
    one(half_ratio_product(p.get("alpha"), SINE, tol)?)
}

// ---- lattice identities ---------------------------------------------------------

fn lat_lhs<const SINE: bool>(_: &Params, tol: f64) -> Out {
    one(kernel_integral_2d(&kd(Kernel::Lattice { sine: SINE })?, tol / SQRT_2)?.scale(SQRT_2))
}

fn lat_rhs<const SINE: bool>(_: &Params, tol: f64) -> Out {
    one(kernel_integral(&kd(Kernel::LatticeMarginal { sine: SINE })?, tol / 4.0)?.sq())
}

fn lat_inner_side<const RIGHT: bool>(p: &Params, tol: f64) -> Out {
    let (n, x) = (p.get("n"), p.get("x"));
    if RIGHT {
        exact(lat_inner_rhs(n, x))
    } else {
        one(lat_inner_lhs(n, x, tol)?)
    }
}

fn lat_k0_side<const RIGHT: bool>(p: &Params, tol: f64) -> Out {
    let (m, n) = (p.get("m"), p.get("n"));
    if RIGHT {
        pair(lat_k0_rhs(m, n)?)
    } else {
        Ok(lat_k0_lhs(m, n, tol)?.to_vec())
    }
}

fn k0_jy_lhs(p: &Params, tol: f64) -> Out {
    let (v, re, im) = crate::specfun::bessel::k0_imag_integral(p.get("x"), tol / 4.0)?;
    let err = 2.0 * (re.abs_error_estimate + im.abs_error_estimate);
    let ev = re.evaluations + im.evaluations;
    Ok(vec![
        SideValue { value: v.re, error_estimate: err, evaluations: ev },
        SideValue { value: v.im, error_estimate: err, evaluations: 0 },
    ])
}

fn k0_jy_rhs(p: &Params, _: f64) -> Out {
    pair(bessel_k0_imag(p.get("x"))?)
}

fn lat_bessel_rhs(p: &Params, _: f64) -> Out {
    one(lattice_bessel_partial(p.get("terms") as u64)?)
}

// ---- the table -------------------------------------------------------------------

pub(super) fn build() -> Vec<IdentityRecord> {
    let two_pi = |p: &Params| 2.0 * PI / p.get("alpha");
    let mut v = vec![
        sr("SR-C1", "cosine self-reciprocal 1/cosh(√(π/2)x)", sr_lhs::<1, false>, sr_rhs::<1, false>),
        sr("SR-C2", "cosine self-reciprocal cosh(√π x/2)/cosh(√π x)", sr_lhs::<2, false>, sr_rhs::<2, false>),
        sr("SR-C3", "cosine self-reciprocal 1/(1 + 2cosh(√(2π/3)x))", sr_lhs::<3, false>, sr_rhs::<3, false>),
        sr("SR-C4", "cosine self-reciprocal cosh(√(3π)x/2)/(2cosh(√(4π/3)x) − 1)", sr_lhs::<4, false>, sr_rhs::<4, false>),
        sr("SR-C5", "cosine self-reciprocal cosh(√(3π/2)x)/(cosh(√(2π)x) − cos(√3π))", sr_lhs::<5, false>, sr_rhs::<5, false>),
        sr("SR-S1", "sine self-reciprocal sinh(√π x/2)/cosh(√π x)", sr_lhs::<1, true>, sr_rhs::<1, true>),
        sr("SR-S2", "sine self-reciprocal sinh(√(π/6)x)/(2cosh(√(2π/3)x) − 1)", sr_lhs::<2, true>, sr_rhs::<2, true>),
        sr("SR-S3", "sine self-reciprocal sinh(√(2π/3)x)/cosh(√(3π/2)x)", sr_lhs::<3, true>, sr_rhs::<3, true>),
        sr("SR-S4", "sine self-reciprocal sinh(√π x)/(cosh(√(2π)x) − cos(√2π))", sr_lhs::<4, true>, sr_rhs::<4, true>),
        ab(rec("SR2D-COS1", "two-dimensional kernel 1/(cosh √πx + cosh √πy)", sr2d_lhs::<0>, sr2d_rhs::<0>), 0.4, 0.9)
            .specs("cos-cos transform", "kernel value")
            .tol(TOL_2D)
            .0,
        ab(rec("SR2D-SINSIN", "two-dimensional kernel sin xy/(sinh √πx sinh √πy)", sr2d_lhs::<1>, sr2d_rhs::<1>), 0.4, 0.9)
            .specs("cos-cos transform", "kernel value")
            .tol(TOL_2D)
            .0,
        ab(
            rec("SR2D-ONEMINUSCOS", "two-dimensional kernel (1 − cos xy)/(sinh √πx sinh √πy)", sr2d_lhs::<2>, sr2d_rhs::<2>),
            0.4,
            0.9,
        )
        .specs("sin-sin transform", "kernel value")
        .tol(TOL_2D)
        .0,
        ab(rec("SINE-ANALOG2", "sine transform of cos xy/(sinh √πx sinh √πy)", sine_analog_lhs, sine_analog_rhs), 0.4, 0.9)
            .specs("sin-sin transform by two-dimensional quadrature", "tanh product minus the (1 − cos) kernel")
            .tol(TOL_2D)
            .0,
        ab(rec("F1", "cos-cos transform of cos xy/(cosh cx cosh cy), c = √(π/2)", f1_lhs, f1_rhs), 0.5, 0.5)
            .specs("cos-cos transform", "sin ab/(sinh ca sinh cb)")
            .tol(TOL_2D)
            .0,
        ab(rec("I1", "mixed kernel cos xy/(cosh px cosh(πy/p))", ki_lhs::<1>, ki_rhs::<1>), 0.4, 0.9)
            .param("p", 1.3, Domain::positive(), (0.5, 3.0))
            .specs("cos-cos transform", "closed form")
            .tol(TOL_2D)
            .0,
        ab(rec("I2", "mixed kernel sin xy/(cosh px cosh(πy/p))", ki_lhs::<2>, ki_rhs::<2>), 0.4, 0.9)
            .param("p", 1.3, Domain::positive(), (0.5, 3.0))
            .specs("sin-sin transform", "closed form")
            .tol(TOL_2D)
            .0,
        ab(rec("I3", "mixed kernel 2cos xy/((1 + 2cosh x)(1 + 2cosh(2πy/3)))", ki_lhs::<3>, ki_rhs::<3>), 0.4, 0.9)
            .specs("cos-cos transform", "closed form")
            .tol(TOL_2D)
            .0,
        ab(rec("I4", "mixed kernel 2sin xy/((1 + 2cosh x)(1 + 2cosh(2πy/3)))", ki_lhs::<4>, ki_rhs::<4>), 0.4, 0.9)
            .specs("sin-sin transform", "closed form")
            .tol(TOL_2D)
            .0,
        rec("PARTIAL-SINE", "inner cosine transform of sin xy/sinh √πx", partial_lhs, partial_rhs)
            .param("a", 0.2, Domain::non_negative(), (0.0, 2.0))
            .param("y", 0.9, Domain::non_negative(), (0.0, 2.0))
            .specs("∫ sin(xy)cos(ax)/sinh(√πx) dx", "(√π/2) sinh √πy/(cosh √πy + cosh √πa)")
            .0,
        rec("HR-1", "Hardy–Ramanujan transformation of e^{−x²}/cosh αx", hr_side::<1, false>, hr_side::<1, true>)
            .alpha(1.0)
            .beta_from("alpha*beta=pi", |p| PI / p.get("alpha"))
            .specs("√α ∫ e^{−x²}/cosh αx", "√β ∫ e^{−x²}/cosh βx")
            .0,
        rec("HR-2", "Hardy–Ramanujan transformation of cosh(αx/2)/cosh αx·e^{−x²}", hr_side::<2, false>, hr_side::<2, true>)
            .alpha(1.0)
            .beta_from("alpha*beta=2*pi", two_pi)
            .specs("√α ∫ cosh(αx/2)/cosh αx·e^{−x²}", "same with β")
            .0,
        rec("HR-3", "Hardy–Ramanujan transformation of sinh(αx/2)/cosh αx·x e^{−x²}", hr_side::<3, false>, hr_side::<3, true>)
            .alpha(1.0)
            .beta_from("alpha*beta=2*pi", two_pi)
            .specs("√α ∫ sinh(αx/2)/cosh αx·x e^{−x²}", "same with β")
            .0,
        rec("POISSON-ELL", "Poisson summation of sech", poisson_ell_side::<false>, poisson_ell_side::<true>)
            .alpha(1.3)
            .beta_from("alpha*beta=1", |p| 1.0 / p.get("alpha"))
            .specs("√α Σ sech(παn)", "√β Σ sech(πβn)")
            .0,
        rec("POISSON-HR1", "Poisson summation of e^{−x²}/cosh px", poisson_gauss_side::<false>, poisson_gauss_side::<true>)
            .alpha(1.3)
            .param("p", 1.0, Domain::positive(), (0.5, 2.0))
            .beta_from("alpha*beta=2*pi", two_pi)
            .specs("√α Σ f(αn)", "√β Σ f̂(βn) with the transform by quadrature")
            .0,
        rec("KSERIES", "complete elliptic integral as a sech sum", kseries_lhs, kseries_rhs)
            .alpha(1.0)
            .specs("(π/2) Σ sech(παn)", "K(k) by AGM with K′/K = α")
            .0,
        rec("DN-QUARTER", "dn at a quarter period as a cosh ratio sum", dn_side::<false>, dn_side::<true>)
            .param("k", 0.6, Domain::open(0.0, 1.0), (0.1, 0.9))
            .specs("cosh-ratio series", "√(1 + k)")
            .0,
        rec("POISSON-ODD", "odd Poisson summation of the first sine kernel", poisson_odd_side::<false>, poisson_odd_side::<true>)
            .alpha(1.0)
            .beta_from("alpha*beta=pi/2", |p| FRAC_PI_2 / p.get("alpha"))
            .specs("√α Σ χ(n) f(αn)", "√β Σ χ(n) f(βn)")
            .0,
        rec("POISSON-F1", "two-dimensional Poisson summation of the f1 kernel", poisson_f1_side::<false>, poisson_f1_side::<true>)
            .alpha(1.3)
            .param("beta", 0.9, Domain::positive(), (0.5, 4.0))
            .specs("double sum of the kernel", "double sum of its transform")
            .0,
        rec("LERCH", "Lerch-type sum symmetric under p ↔ 1/p", lerch_side::<false>, lerch_side::<true>)
            .param("p", 1.2, Domain::open(FRAC_1_SQRT_2, SQRT_2), (0.75, 1.4))
            .derive("p*q=1", "q", |p| 1.0 / p.get("p"))
            .specs("accelerated bilateral sum at p", "same at 1/p")
            .tol(1e-4)
            .0,
        rec("LEGENDRE", "Legendre relation as a sum identity", legendre_side::<false>, legendre_side::<true>)
            .alpha(1.3)
            .specs("(Σ sech παn)(Σ sech πn/α)", "2/π + 4α Σ n/sinh παn + 4/α Σ n/sinh πn/α")
            .0,
        rec("LANDEN", "Landen transformation as a sum identity", landen_side::<false>, landen_side::<true>)
            .alpha(SQRT_2)
            .specs("sum at α", "sum at β = 2/α")
            .0,
        rec("ELL1", "first elliptic sum identity", ell1_side::<false>, ell1_side::<true>)
            .alpha(1.0)
            .specs("series", "series")
            .0,
        rec("ELL2", "second elliptic sum identity", ell2_side::<false>, ell2_side::<true>)
            .alpha(2.0)
            .param("beta", 0.5, Domain::positive(), (0.1, 2.0))
            .specs("series", "series")
            .exploratory()
            .0,
        rec("FBETA", "f_β(θ) sum identity", fbeta_side::<false>, fbeta_side::<true>)
            .param("beta", 2.0, Domain::positive(), (0.5, 4.0))
            .param("theta", PI / 3.0, Domain::open(0.0, PI), (0.2, 3.0))
            .specs("square of the sum", "weighted sum")
            .0,
        rec("LANDEN2", "symmetric two-dimensional Mordell integral", landen2_lhs, landen2_rhs)
            .alpha(2.0)
            .beta_from("alpha*beta=2*pi", two_pi)
            .specs("√2 ∫∫ cos 2xy·e^{−x²−y²}/(cosh αx cosh βy)", "product of two one-dimensional integrals")
            .tol(TOL_2D)
            .0,
        rec("FACT1", "factorization of the even two-dimensional Mordell integral", fact_lhs::<1>, fact_rhs::<1>)
            .alpha((2.0 * PI).sqrt())
            .beta_from("alpha*beta=2*pi", two_pi)
            .specs("∫∫ cos 2xy·e^{−x²−y²}/(cosh αx cosh βy)", "(α/2√π)(∫ cosh(αx/2)/cosh αx·e^{−x²})²")
            .tol(TOL_2D)
            .0,
        rec("FACT2", "factorization of the odd two-dimensional Mordell integral", fact_lhs::<2>, fact_rhs::<2>)
            .alpha((2.0 * PI).sqrt())
            .beta_from("alpha*beta=2*pi", two_pi)
            .specs("∫∫ xy sin 2xy·e^{−x²−y²}/(cosh αx cosh βy)", "(α/2√π)(∫ sinh(αx/2)/cosh αx·x e^{−x²})²")
            .tol(TOL_2D)
            .0,
    ];
    let n_param = |b: B| b.param("n", 3.0, Domain::positive(), (0.5, 3.0)).tol(1e-6);
    v.extend([
        n_param(rec("COR1a", "even corollary, cosine phase", cor_lhs_eval::<false, false>, cor_rhs_eval::<false, false>))
            .specs("∫∫ cos(π(nx² − y²/n)/2) cos πxy/(cosh πx cosh πy)", "(√n/2)(I₁² − I₂²) + √n I₁I₂")
            .0,
        n_param(rec("COR1b", "even corollary, sine phase", cor_lhs_eval::<true, false>, cor_rhs_eval::<true, false>))
            .specs("∫∫ sin(π(nx² − y²/n)/2) cos πxy/(cosh πx cosh πy)", "(√n/2)(I₂² − I₁²) + √n I₁I₂")
            .0,
        n_param(rec("COR2a", "odd corollary, cosine phase", cor_lhs_eval::<false, true>, cor_rhs_eval::<false, true>))
            .specs("∫∫ cos(π(nx² − y²/n)/2) xy sin πxy/(cosh πx cosh πy)", "(n^{3/2}/2)(I₄² − I₃² + 2I₃I₄)")
            .0,
        n_param(rec("COR2b", "odd corollary, sine phase", cor_lhs_eval::<true, true>, cor_rhs_eval::<true, true>))
            .specs("∫∫ sin(π(nx² − y²/n)/2) xy sin πxy/(cosh πx cosh πy)", "(n^{3/2}/2)(I₄² − I₃² − 2I₃I₄)")
            .0,
        rec("EX1", "even corollary closed form at n = 3", ex_lhs::<1>, ex_rhs::<1>)
            .specs("two-dimensional quadrature", "(√3 − 1)/(2√6)")
            .tol(1e-6)
            .0,
        rec("EX2", "even corollary closed form at n = 3, sine phase", ex_lhs::<2>, ex_rhs::<2>)
            .specs("two-dimensional quadrature", "(2 − √3)/(4√2)")
            .tol(1e-6)
            .0,
        rec("EX3", "odd corollary closed form at n = 1", ex_lhs::<3>, ex_rhs::<3>)
            .specs("two-dimensional quadrature", "1/(8√2π²)")
            .tol(1e-6)
            .0,
        phi_params(rec("PHI-FUNC", "functional equation of Φ", phi_func_lhs, phi_func_rhs))
            .specs("weighted Φ plus Φ at reciprocal parameters and imaginary arguments", "√2 times two marginal integrals")
            .tol(1e-6)
            .0,
        phi_params(rec("PHI-SHIFT", "Φ summed over θ ± πi", phi_shift_lhs_eval, phi_shift_rhs))
            .specs("Φ(θ + πi, φ) + Φ(θ − πi, φ)", "one-dimensional Gaussian integral")
            .tol(1e-6)
            .0,
        phi_params(rec("PHI-COMBINED", "Φ at θ ± πα combined", phi_combined_lhs, phi_combined_rhs))
            .specs("weighted Φ(θ ± πα, φ)", "two one-dimensional integrals")
            .tol(1e-6)
            .exploratory()
            .0,
        rec("ABS", "sin αx²/(sinh πx sinh αx) as a squared modulus", abs_lhs, abs_rhs)
            .alpha(1.0)
            .specs("∫ sin αx²/(sinh πx sinh αx)", "|∫ e^{iαx²}/cosh πx|²")
            .0,
        rec("HALF", "half-angle chain of Mordell integrals", half_lhs, half_rhs)
            .alpha(1.0)
            .components(&["sinh-cosh", "cosh-modulus", "sinh-modulus"])
            .specs(
                "∫ sin 2αx²/(sinh πx sinh αx), ∫ cos 2αx²/(cosh πx cosh αx)",
                "∫ cos 2αx²/(cosh πx cosh αx), |∫ cosh(πx/2)/cosh πx·e^{iαx²/2}|²",
            )
            .0,
        rec("CUBE", "Mordell integral with the 1 + 2cosh weight", cube_lhs_eval, cube_rhs_eval)
            .alpha(1.0)
            .specs("π ∫ [sin kx² coth(x/2) coth(αx/2) − cos kx²/√3]/((1 + 2cosh x)(1 + 2cosh αx))", "|∫ e^{ikx²}/(1 + 2cosh x)|², k = 3α/4π")
            .0,
        rec("ZERO", "vanishing tanh-tanh chirp integral", zero_lhs, |_, _| exact(0.0))
            .alpha(PI)
            .specs("∫ tanh πx tanh αx cos 2αx² by Gaussian regularization", "0")
            .tol(1e-8)
            .0,
        rec("BYPRODUCT", "sine companion of the vanishing integral", byproduct_lhs, byproduct_rhs)
            .alpha(1.0)
            .specs("∫ 2 sin(αx²/2)/(sinh πx sinh αx)", "∫ tanh πx tanh αx sin 2αx² by Gaussian regularization")
            .tol(1e-8)
            .0,
        rec("GAUSS-COS", "Gaussian chirp integral of cos ax cos αay", gauss_side::<false, false>, gauss_side::<false, true>)
            .param("x", 0.7, Domain::non_negative(), (0.0, 2.0))
            .param("y", 0.4, Domain::non_negative(), (0.0, 2.0))
            .alpha(1.3)
            .complex()
            .specs("∫ cos ax cos αay e^{iαa²/2} da by Gaussian regularization", "√(πi/2α) e^{−i(x² + α²y²)/2α} cos xy")
            .0,
        rec("GAUSS-SIN", "Gaussian chirp integral of sin ax sin αay", gauss_side::<true, false>, gauss_side::<true, true>)
            .param("x", 0.7, Domain::non_negative(), (0.0, 2.0))
            .param("y", 0.4, Domain::non_negative(), (0.0, 2.0))
            .alpha(1.3)
            .complex()
            .specs("∫ sin ax sin αay e^{iαa²/2} da by Gaussian regularization", "i√(πi/2α) e^{−i(x² + α²y²)/2α} sin xy")
            .0,
        rec("RAM", "Ramanujan's cosh-ratio chirp integral", ram_lhs, ram_rhs)
            .param("alpha", 2.0, Domain::left_open(0.0, PI), (0.5, PI))
            .specs("∫ cosh αx/cosh πx·cos αx²", "½cos(α/4)")
            .0,
        rec("SQRT2-COS", "√2 product identity, cosine case", sqrt2_lhs::<false>, sqrt2_rhs::<false>)
            .alpha(1.0)
            .specs("√2 ∫ cos αx²/(cosh πx cosh αx)", "∫ cosh(πx/2)cosh(αx/2)/(cosh πx cosh αx)")
            .0,
        rec("SQRT2-SIN", "√2 product identity, sine case", sqrt2_lhs::<true>, sqrt2_rhs::<true>)
            .alpha(1.0)
            .specs("√2 ∫ sin αx²/(cosh πx cosh αx)", "∫ sinh(πx/2)sinh(αx/2)/(cosh πx cosh αx)")
            .0,
        rec("LAT1", "lattice integral with cos(x²y²/π)", lat_lhs::<false>, lat_rhs::<false>)
            .specs("√2 ∫∫ cos(x²y²/π)/(cosh x² cosh y²)", "(∫ cosh(x²/2)/cosh x²)²")
            .tol(1e-6)
            .0,
        rec("LAT2", "lattice integral with sin(x²y²/π)", lat_lhs::<true>, lat_rhs::<true>)
            .specs("√2 ∫∫ sin(x²y²/π)/(cosh x² cosh y²)", "(∫ sinh(x²/2)/cosh x²)²")
            .tol(1e-6)
            .0,
        rec("LAT-INNER", "inner Gaussian integral of the lattice reduction", lat_inner_side::<false>, lat_inner_side::<true>)
            .param("n", 0.0, Domain::counting(0.0, 1e6), (0.0, 5.0))
            .param("x", 1.0, Domain::non_negative(), (0.0, 3.0))
            .specs("∫ e^{−(2n+1)y²} cos(x²y²/π) dy", "(π/4)(1/√(π(2n+1) + ix²) + 1/√(π(2n+1) − ix²))")
            .tol(1e-10)
            .0,
        rec("LAT-K0", "Gaussian integral against an inverse square root as K₀", lat_k0_side::<false>, lat_k0_side::<true>)
            .param("m", 0.0, Domain::counting(0.0, 1e3), (0.0, 3.0))
            .param("n", 0.0, Domain::counting(0.0, 1e3), (0.0, 3.0))
            .complex()
            .specs("∫ e^{−(2n+1)x²}/√(π(2m+1) + ix²) dx", "½(−1)^{m+n} e^{−3πi/4} K₀(−(πi/2)(2m+1)(2n+1))")
            .tol(1e-8)
            .0,
        rec("K0-JY", "K₀ on the imaginary axis through J₀ and Y₀", k0_jy_lhs, k0_jy_rhs)
            .param("x", 2.0, Domain::positive(), (0.5, 20.0))
            .complex()
            .specs("integral representation of K₀(ix)", "−(π/2)(Y₀(x) + iJ₀(x))")
            .0,
        rec("LAT-BESSEL", "lattice integral as a formal Bessel double sum", lat_lhs::<false>, lat_bessel_rhs)
            .param("terms", 20.0, Domain::counting(1.0, 2000.0), (1.0, 200.0))
            .specs("√2 ∫∫ cos(x²y²/π)/(cosh x² cosh y²)", "(π²/2) Σ_{m,n<terms} (J₀ + Y₀)((π/2)(2m+1)(2n+1))")
            .tol(1e-6)
            .exploratory()
            .0,
    ]);
    v
}
