//! Integrals behind the registry evaluators, in f64.
//!
//! Envelope amplitudes below are rigorous but generous bounds; they only
//! move the truncation point.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use super::SideValue;
use crate::error::{Error, Result};
use crate::real::Real;
use crate::quad::{
    integrate_quadrant, integrate_semi_infinite, regularized_limit, AxisOscillation, Decay, Integrand1D,
    Integrand2D, QuadResult,
};
use crate::specfun::kernels::ratio;
use crate::specfun::{sech, shc, sinc, KernelDescriptor};

/// Evaluators split and rescale their tolerance; the engines reject
/// anything below the working floor.
pub(super) fn floor(tol: f64) -> f64 {
    tol.max(f64::min_tol())
}

/// `∫₀^∞ f`, oscillating at `base + slope·x`.
pub(super) fn q1(f: impl FnMut(f64) -> f64, decay: Decay<f64>, base: f64, slope: f64, tol: f64) -> Result<SideValue> {
    Ok(integrate_semi_infinite(Integrand1D::new(f, decay).oscillating(base, slope), floor(tol))?.into())
}

/// `∫∫ f` over the quadrant, outer `x` oscillating at `bx + own_x·x`.
pub(super) fn q2(
    f: impl FnMut(f64, f64) -> f64,
    (dx, dy): (Decay<f64>, Decay<f64>),
    (bx, own_x): (f64, f64),
    osc_y: AxisOscillation<f64>,
    tol: f64,
) -> Result<SideValue> {
    Ok(integrate_quadrant(Integrand2D::new(f, dx, dy).oscillating_x(bx, own_x).with_osc_y(osc_y), floor(tol))?.into())
}

pub(super) fn osc_y(base: f64, own: f64, cross: f64) -> AxisOscillation<f64> {
    AxisOscillation { base: base.abs(), own: own.abs(), cross: cross.abs(), own_cross_sq: 0.0 }
}

fn trig(sine: bool, z: f64) -> f64 {
    if sine {
        z.sin()
    } else {
        z.cos()
    }
}

/// `∫₀^∞` of a one-dimensional catalog kernel.
pub(super) fn kernel_integral(desc: &KernelDescriptor<f64>, tol: f64) -> Result<SideValue> {
    q1(|x| desc.value(x), desc.decay(), 0.0, 0.0, tol)
}

/// `∫∫` of a two-dimensional catalog kernel.
pub(super) fn kernel_integral_2d(desc: &KernelDescriptor<f64>, tol: f64) -> Result<SideValue> {
    q2(|x, y| desc.value_2d(x, y), desc.decay_xy(), (0.0, 0.0), desc.oscillation_y(), tol)
}

/// Envelope of `A·e^{m·x − c·x²}`: `A·e^{−c x²}` when `m ≤ 0`, otherwise
/// `A·e^{m²/(2c)}·e^{−c x²/2}`.
fn shifted_gauss(c: f64, m: f64, amplitude: f64) -> Result<Decay<f64>> {
    let d = if m <= 0.0 {
        Decay::gauss(c).with_amplitude(amplitude)
    } else {
        Decay::gauss(c / 2.0).with_amplitude(amplitude * (m * m / (2.0 * c)).exp())
    };
    if d.amplitude.is_finite() {
        Ok(d)
    } else {
        Err(Error::domain("cosh growth of the imaginary argument overwhelms the Gaussian factor"))
    }
}

// ---- Mordell-type one-dimensional integrals -------------------------------

/// `cosh(πx/2)/cosh πx`.
pub(super) fn w_even(x: f64) -> f64 {
    ratio(true, FRAC_PI_2, PI, 0.0, x)
}

/// `x·sinh(πx/2)/cosh πx`.
pub(super) fn w_odd(x: f64) -> f64 {
    x * ratio(false, FRAC_PI_2, PI, 0.0, x)
}

fn w_even_decay() -> Decay<f64> {
    Decay::exp(FRAC_PI_2).with_amplitude(2.0)
}

// x·e^{−πx/4} ≤ 4/(πe), so x·sinh(πx/2)/cosh πx ≤ 0.94·e^{−πx/4}.
fn w_odd_decay() -> Decay<f64> {
    Decay::exp(PI / 4.0)
}

/// `I₁..I₄` of the corollaries: `{cosh(πx/2), x·sinh(πx/2)}/cosh πx`
/// against `{cos, sin}(πnx²/2)`.
pub(super) fn cor_i(which: u8, n: f64, tol: f64) -> Result<SideValue> {
    let a = PI * n / 2.0;
    let sine = which % 2 == 0;
    if which <= 2 {
        q1(|x| w_even(x) * trig(sine, a * x * x), w_even_decay(), 0.0, 2.0 * a, tol)
    } else {
        q1(|x| w_odd(x) * trig(sine, a * x * x), w_odd_decay(), 0.0, 2.0 * a, tol)
    }
}

/// Left sides of the corollaries:
/// `∫∫ {cos, sin}(π/2(nx² − y²/n))·{cos πxy, xy·sin πxy}/(cosh πx cosh πy)`.
pub(super) fn cor_lhs(n: f64, sine_phase: bool, odd: bool, tol: f64) -> Result<SideValue> {
    let f = move |x: f64, y: f64| {
        let ph = FRAC_PI_2 * (n * x * x - y * y / n);
        let core = if odd { x * y * (PI * x * y).sin() } else { (PI * x * y).cos() };
        trig(sine_phase, ph) * core * sech(PI * x) * sech(PI * y)
    };
    // x·sech πx ≤ 2x·e^{−πx} ≤ 0.47·e^{−πx/2}.
    let d = if odd { Decay::exp(FRAC_PI_2).with_amplitude(0.5) } else { Decay::exp(PI).with_amplitude(2.0) };
    q2(f, (d, d), (0.0, PI * n), osc_y(0.0, PI / n, PI), tol)
}

/// `∫ w(x)·{cos, sin}(a x²)` for an exponentially decaying weight.
pub(super) fn mordell_trig(
    w: impl Fn(f64) -> f64,
    decay: Decay<f64>,
    a: f64,
    sine: bool,
    tol: f64,
) -> Result<SideValue> {
    q1(|x| w(x) * trig(sine, a * x * x), decay, 0.0, 2.0 * a, tol)
}

/// `|∫ w(x)·e^{i a x²}|²`.
pub(super) fn mordell_abs_sq(w: impl Fn(f64) -> f64 + Copy, decay: Decay<f64>, a: f64, tol: f64) -> Result<SideValue> {
    let part = tol / (4.0 * decay.mass().max(1.0));
    let c = mordell_trig(w, decay, a, false, part)?;
    let s = mordell_trig(w, decay, a, true, part)?;
    Ok(c.sq().add(s.sq()))
}

// ---- Gaussian two-dimensional Mordell integrals ---------------------------

/// `∫∫ e^{−x²−y²}·cos 2xy/(cosh αx·cosh βy)`.
pub(super) fn fact1_lhs(alpha: f64, beta: f64, tol: f64) -> Result<SideValue> {
    let f = move |x: f64, y: f64| (-x * x - y * y).exp() * (2.0 * x * y).cos() * sech(alpha * x) * sech(beta * y);
    let d = Decay::gauss(1.0);
    q2(f, (d, d), (0.0, 0.0), osc_y(0.0, 0.0, 2.0), tol)
}

/// `∫∫ xy·e^{−x²−y²}·sin 2xy/(cosh αx·cosh βy)`.
pub(super) fn fact2_lhs(alpha: f64, beta: f64, tol: f64) -> Result<SideValue> {
    let f = move |x: f64, y: f64| {
        x * y * (-x * x - y * y).exp() * (2.0 * x * y).sin() * sech(alpha * x) * sech(beta * y)
    };
    // x·e^{−x²/2} ≤ e^{−1/2}.
    let d = Decay::gauss(0.5);
    q2(f, (d, d), (0.0, 0.0), osc_y(0.0, 0.0, 2.0), tol)
}

// ---- Φ and Ψ ---------------------------------------------------------------

/// Per-axis factor `cos((t_re + i t_im)s)/cosh πs · e^{−π a s²/2}` as
/// `(real, imaginary)`, with the cosh quotient formed without overflow.
fn phi_axis(t_re: f64, t_im: f64, a: f64, s: f64) -> (f64, f64) {
    let g = (-FRAC_PI_2 * a * s * s).exp();
    let ti = t_im.abs();
    let ch = ratio(true, ti, PI, 0.0, s);
    let sh = ratio(false, ti, PI, 0.0, s) * t_im.signum();
    let (sr, cr) = (t_re * s).sin_cos();
    (cr * ch * g, -sr * sh * g)
}

fn phi_decay(t_im: f64, a: f64) -> Result<Decay<f64>> {
    // |cosh(t_im s)/cosh πs| ≤ 2e^{(|t_im| − π)s}.
    shifted_gauss(FRAC_PI_2 * a, t_im.abs() - PI, 2.0)
}

/// `Φ_{α,β}(θ, φ) = ∫∫ cos πxy·cos θx·cos φy/(cosh πx cosh πy)·e^{−π(αx² + βy²)/2}`
/// for complex `θ`, `φ`, as (real, imaginary) parts.
pub fn phi(
    alpha: f64,
    beta: f64,
    theta_re: f64,
    theta_im: f64,
    phi_re: f64,
    phi_im: f64,
    tol: f64,
) -> Result<(QuadResult<f64>, QuadResult<f64>)> {
    if !(alpha > 0.0 && beta > 0.0) {
        return Err(Error::domain(format!("phi needs alpha, beta > 0, got ({alpha}, {beta})")));
    }
    let decays = (phi_decay(theta_im, alpha)?, phi_decay(phi_im, beta)?);
    let part = |im: bool| {
        let f = move |x: f64, y: f64| {
            let (ax, bx) = phi_axis(theta_re, theta_im, alpha, x);
            let (ay, by) = phi_axis(phi_re, phi_im, beta, y);
            let v = if im { ax * by + bx * ay } else { ax * ay - bx * by };
            (PI * x * y).cos() * v
        };
        integrate_quadrant(
            Integrand2D::new(f, decays.0, decays.1)
                .oscillating_x(theta_re, 0.0)
                .with_osc_y(osc_y(phi_re, 0.0, PI)),
            floor(tol / 2.0),
        )
    };
    let re = part(false)?;
    let im = if theta_im == 0.0 && phi_im == 0.0 { QuadResult::exact(0.0) } else { part(true)? };
    Ok((re, im))
}

/// `Ψ_{α,β}(θ, φ) = ∫∫ sin πxy·sin θx·sin φy/(cosh πx cosh πy)·e^{−π(αx² + βy²)/2}`.
pub fn psi(alpha: f64, beta: f64, theta: f64, phi: f64, tol: f64) -> Result<QuadResult<f64>> {
    if !(alpha > 0.0 && beta > 0.0) {
        return Err(Error::domain(format!("psi needs alpha, beta > 0, got ({alpha}, {beta})")));
    }
    let f = move |x: f64, y: f64| {
        (PI * x * y).sin() * (theta * x).sin() * (phi * y).sin() * sech(PI * x) * sech(PI * y)
            * (-FRAC_PI_2 * (alpha * x * x + beta * y * y)).exp()
    };
    let dx = Decay::gauss(FRAC_PI_2 * alpha);
    let dy = Decay::gauss(FRAC_PI_2 * beta);
    integrate_quadrant(
        Integrand2D::new(f, dx, dy).oscillating_x(theta, 0.0).with_osc_y(osc_y(phi, 0.0, PI)),
        floor(tol),
    )
}

/// `∫ cosh(πs/2)·cosh(t s)/cosh πs · e^{−π s²/(2a)}`.
pub(super) fn phi_marginal(t: f64, a: f64, tol: f64) -> Result<SideValue> {
    let c = FRAC_PI_2 / a;
    let t = t.abs();
    let f = move |s: f64| {
        let g = (t * s - c * s * s).exp() * (1.0 + (-2.0 * t * s).exp()) / 2.0;
        w_even(s) * g
    };
    q1(f, shifted_gauss(c, t - FRAC_PI_2, 2.0)?, 0.0, 0.0, tol)
}

/// `∫ cos(u s)·cosh(v s)/cosh πs · e^{−c s²}`, `|v| ≤ π` or `c` large enough.
pub(super) fn cos_cosh_gauss(u: f64, v: f64, c: f64, tol: f64) -> Result<SideValue> {
    let v = v.abs();
    let f = move |s: f64| (u * s).cos() * ratio(true, v, PI, 0.0, s) * (-c * s * s).exp();
    q1(f, shifted_gauss(c, v - PI, 2.0)?, u, 0.0, tol)
}

/// `2∫∫ cos πxy·cos θx·cos φy/cosh πy·e^{−π(αx² + βy²)/2}`: the sum
/// `Φ(θ + πi, φ) + Φ(θ − πi, φ)` after `cos((θ ± iπ)x)` are combined into
/// `2cos θx·cosh πx`.
pub(super) fn phi_shift_lhs(alpha: f64, beta: f64, theta: f64, phi: f64, tol: f64) -> Result<SideValue> {
    let f = move |x: f64, y: f64| {
        2.0 * (PI * x * y).cos() * (theta * x).cos() * (phi * y).cos() * sech(PI * y)
            * (-FRAC_PI_2 * (alpha * x * x + beta * y * y)).exp()
    };
    let d = (Decay::gauss(FRAC_PI_2 * alpha).with_amplitude(2.0), Decay::gauss(FRAC_PI_2 * beta));
    q2(f, d, (theta, 0.0), osc_y(phi, 0.0, PI), tol)
}

pub(super) fn phi_value(alpha: f64, beta: f64, theta: (f64, f64), phi_: (f64, f64), tol: f64) -> Result<SideValue> {
    let (re, im) = phi(alpha, beta, theta.0, theta.1, phi_.0, phi_.1, tol)?;
    if im.value.abs() > 10.0 * tol.max(im.abs_error_estimate) {
        return Err(Error::domain("Φ at these arguments is not real"));
    }
    Ok(re.into())
}

// ---- Chirp integrals against hyperbolic weights ---------------------------

/// `sin(a x²)/(sinh πx·sinh αx) = a·sinc(a x²)/(πα·shc πx·shc αx)`; with
/// `shc z ≥ e^{z/2}/2` the envelope is `(4a/(πα))·e^{−(π+α)x/2}`.
pub(super) fn sin_over_sinh_sinh(alpha: f64, a: f64, tol: f64) -> Result<SideValue> {
    let f = move |x: f64| a * sinc(a * x * x) / (PI * alpha * shc(PI * x) * shc(alpha * x));
    let d = Decay::exp((PI + alpha) / 2.0).with_amplitude(4.0 * a / (PI * alpha));
    q1(f, d, 0.0, 2.0 * a, tol)
}

/// `∫ cos(a x²)/(cosh πx·cosh αx)` (or sin).
pub(super) fn trig_over_cosh_cosh(alpha: f64, a: f64, sine: bool, tol: f64) -> Result<SideValue> {
    let f = move |x: f64| trig(sine, a * x * x) * sech(PI * x) * sech(alpha * x);
    q1(f, Decay::exp(PI + alpha).with_amplitude(4.0), 0.0, 2.0 * a, tol)
}

/// `∫ {cosh, sinh}(πx/2)·{cosh, sinh}(αx/2)/(cosh πx·cosh αx)`.
pub(super) fn half_ratio_product(alpha: f64, sine: bool, tol: f64) -> Result<SideValue> {
    let f = move |x: f64| ratio(!sine, FRAC_PI_2, PI, 0.0, x) * ratio(!sine, alpha / 2.0, alpha, 0.0, x);
    q1(f, Decay::exp((PI + alpha) / 2.0).with_amplitude(4.0), 0.0, 0.0, tol)
}

/// `∫ tanh πx·tanh αx·{cos, sin}(2αx²)` as the limit of its Gaussian
/// regularization.
pub(super) fn tanh_tanh_regularized(alpha: f64, sine: bool, tol: f64) -> Result<SideValue> {
    let a = 2.0 * alpha;
    let g = |eps: f64, t: f64| {
        integrate_semi_infinite(
            Integrand1D::new(
                |x: f64| (PI * x).tanh() * (alpha * x).tanh() * trig(sine, a * x * x) * (-eps * x * x).exp(),
                Decay::gauss(eps),
            )
            .oscillating(0.0, 2.0 * a),
            t,
        )
    };
    Ok(regularized_limit(g, reg_eps0(a), REG_POINTS, floor(tol))?.into())
}

const REG_POINTS: usize = 8;

/// Largest regularization parameter for a chirp `e^{i a x²/2}`-type factor;
/// the regularized integral is analytic in `ε` within radius of order `a`.
fn reg_eps0(a: f64) -> f64 {
    0.05 * a.min(1.0)
}

/// `∫ cosh αx/cosh πx·cos αx²`, `0 < α ≤ π`.
pub(super) fn ramanujan(alpha: f64, tol: f64) -> Result<SideValue> {
    let f = move |x: f64| ratio(true, alpha, PI, 0.0, x);
    if PI - alpha >= 0.5 {
        return q1(move |x| f(x) * (alpha * x * x).cos(), Decay::exp(PI - alpha).with_amplitude(2.0), 0.0, 2.0 * alpha, tol);
    }
    // Too slow a decay near α = π: regularize.
    let g = |eps: f64, t: f64| {
        integrate_semi_infinite(
            Integrand1D::new(|x: f64| f(x) * (alpha * x * x).cos() * (-eps * x * x).exp(), Decay::gauss(eps).with_amplitude(2.0))
                .oscillating(0.0, 2.0 * alpha),
            t,
        )
    };
    Ok(regularized_limit(g, reg_eps0(2.0 * alpha), REG_POINTS, floor(tol))?.into())
}

/// `π∫[sin(kx²)·coth(x/2)·coth(αx/2) − cos(kx²)/√3]/((1 + 2cosh x)(1 + 2cosh αx))`,
/// `k = 3α/(4π)`.
pub(super) fn cube_lhs(alpha: f64, tol: f64) -> Result<SideValue> {
    let k = 3.0 * alpha / (4.0 * PI);
    let r3 = 3f64.sqrt();
    // 1/(1 + 2cosh z) = ratio(0, 1, −½)/2 and cosh(z/2)/(1 + 2cosh z) = ratio(½, 1, −½)/2.
    let f = move |x: f64| {
        let dx = ratio(true, 0.0, 1.0, -0.5, x) / 2.0;
        let da = ratio(true, 0.0, 1.0, -0.5, alpha * x) / 2.0;
        let cc = if x * alpha.min(1.0) > 1e-3 {
            (k * x * x).sin() / ((x / 2.0).tanh() * (alpha * x / 2.0).tanh())
        } else {
            4.0 * k / alpha * sinc(k * x * x) * (x / 2.0).cosh() * (alpha * x / 2.0).cosh()
                / (shc(x / 2.0) * shc(alpha * x / 2.0))
        };
        PI * (cc - (k * x * x).cos() / r3) * dx * da
    };
    // |coth(x/2)coth(αx/2)·sin kx²| ≤ (1 + 2/x)(1 + 2/(αx))·min(1, kx²);
    // 1/(1 + 2cosh z) ≤ e^{−z}.
    let numerator = 1.0 / r3 + 1.0 + 2.0 * k.sqrt() * (1.0 + 1.0 / alpha) + 4.0 * k / alpha;
    q1(f, Decay::exp(1.0 + alpha).with_amplitude(PI * numerator), 0.0, 2.0 * k, tol)
}

/// `|∫ e^{ikx²}/(1 + 2cosh x)|²`, `k = 3α/(4π)`.
pub(super) fn cube_rhs(alpha: f64, tol: f64) -> Result<SideValue> {
    let k = 3.0 * alpha / (4.0 * PI);
    mordell_abs_sq(|x| ratio(true, 0.0, 1.0, -0.5, x) / 2.0, Decay::exp(1.0), k, tol)
}

/// `∫ {cos, sin}(ax)·{cos, sin}(αay)·e^{iαa²/2} da` by regularization, as
/// (real, imaginary) parts.
pub(super) fn gauss_lhs(x: f64, y: f64, alpha: f64, sine: bool, tol: f64) -> Result<[SideValue; 2]> {
    let part = |imag: bool| -> Result<SideValue> {
        let g = |eps: f64, t: f64| {
            integrate_semi_infinite(
                Integrand1D::new(
                    |a: f64| {
                        trig(sine, a * x) * trig(sine, alpha * a * y) * trig(imag, alpha * a * a / 2.0)
                            * (-eps * a * a).exp()
                    },
                    Decay::gauss(eps),
                )
                .oscillating(x.abs() + alpha * y.abs(), alpha),
                t,
            )
        };
        Ok(regularized_limit(g, reg_eps0(alpha), REG_POINTS, floor(tol / 2.0))?.into())
    };
    Ok([part(false)?, part(true)?])
}

/// `√(πi/(2α))·e^{−i(x² + α²y²)/(2α)}·cos xy`, or `i·(…)·sin xy`.
pub(super) fn gauss_rhs(x: f64, y: f64, alpha: f64, sine: bool) -> Complex64 {
    let root = (Complex64::i() * (PI / (2.0 * alpha))).sqrt();
    let phase = Complex64::from_polar(1.0, -(x * x + alpha * alpha * y * y) / (2.0 * alpha));
    if sine {
        Complex64::i() * root * phase * (x * y).sin()
    } else {
        root * phase * (x * y).cos()
    }
}

// ---- Lattice integrals -----------------------------------------------------

/// `∫ e^{−(2n+1)y²}·cos(x²y²/π) dy`.
pub(super) fn lat_inner_lhs(n: f64, x: f64, tol: f64) -> Result<SideValue> {
    let a = 2.0 * n + 1.0;
    let b = x * x / PI;
    q1(move |y| (-a * y * y).exp() * (b * y * y).cos(), Decay::gauss(a), 0.0, 2.0 * b, tol)
}

/// `(π/4)(1/√(π(2n+1) + ix²) + 1/√(π(2n+1) − ix²))`.
pub(super) fn lat_inner_rhs(n: f64, x: f64) -> f64 {
    let z = Complex64::new(PI * (2.0 * n + 1.0), x * x);
    PI / 2.0 * z.sqrt().inv().re
}

/// `∫ e^{−(2n+1)x²}/√(π(2m+1) + ix²) dx` as (real, imaginary) parts.
pub(super) fn lat_k0_lhs(m: f64, n: f64, tol: f64) -> Result<[SideValue; 2]> {
    let a = 2.0 * n + 1.0;
    let c = PI * (2.0 * m + 1.0);
    let w = move |x: f64| Complex64::new(c, x * x).sqrt().inv() * (-a * x * x).exp();
    let d = Decay::gauss(a).with_amplitude(c.sqrt().recip());
    Ok([q1(move |x| w(x).re, d, 0.0, 0.0, tol / 2.0)?, q1(move |x| w(x).im, d, 0.0, 0.0, tol / 2.0)?])
}

/// `½(−1)^{m+n}·e^{−3πi/4}·K₀(−(πi/2)(2m+1)(2n+1))`.
pub(super) fn lat_k0_rhs(m: f64, n: f64) -> Result<Complex64> {
    let z = FRAC_PI_2 * (2.0 * m + 1.0) * (2.0 * n + 1.0);
    let sign = if (m + n) % 2.0 == 0.0 { 1.0 } else { -1.0 };
    let k0 = crate::specfun::bessel_k0_imag(-z)?;
    Ok(Complex64::from_polar(0.5 * sign, -3.0 * PI / 4.0) * k0)
}

/// `(π²/2)·Σ_{m,n<N} (J₀ + Y₀)((π/2)(2m+1)(2n+1))`.
pub(super) fn lattice_bessel_partial(terms: u64) -> Result<SideValue> {
    let mut acc = Vec::with_capacity((terms * terms) as usize);
    for m in 0..terms {
        for n in 0..terms {
            let z = FRAC_PI_2 * (2 * m + 1) as f64 * (2 * n + 1) as f64;
            acc.push(crate::specfun::bessel_j0(z) + crate::specfun::bessel_y0(z)?);
        }
    }
    let s = crate::quad::neumaier(acc);
    Ok(SideValue { value: PI * PI / 2.0 * s, error_estimate: 0.0, evaluations: terms * terms })
}
