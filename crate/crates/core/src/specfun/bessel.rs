//! Order-zero Bessel functions `J₀`, `Y₀`, `K₀` and `K₀` on the imaginary axis.
//!
//! `J₀` and `Y₀` switch regimes twice: ascending series below 8, Miller's
//! backward recurrence on `[8, 20)`, Hankel's asymptotic expansion from 20.
//! The series loses digits to cancellation beyond 8, and the asymptotic
//! expansion truncated at its smallest term is only good to about `e^{−2x}`,
//! which is too coarse below 20.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::quad::{integrate_semi_infinite, Decay, Integrand1D, QuadResult};
use crate::real::Real;

pub const SERIES_LIMIT: f64 = 8.0;
pub const HANKEL_LIMIT: f64 = 20.0;

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// `J₀`, `Y₀` and `K₀` at one positive argument.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BesselValue<T> {
    pub x: T,
    pub j0: T,
    pub y0: T,
    pub k0: T,
}

impl<T: Real> BesselValue<T> {
    pub fn at(x: T) -> Result<Self> {
        Ok(BesselValue { x, j0: bessel_j0(x), y0: bessel_y0(x)?, k0: bessel_k0(x)? })
    }
}

/// `J₀(x)`; even, so negative arguments are accepted.
pub fn bessel_j0<T: Real>(x: T) -> T {
    let x = x.abs();
    if x < T::lit(SERIES_LIMIT) {
        j0y0_series(x).0
    } else if x < T::lit(HANKEL_LIMIT) {
        j0y0_miller(x).0
    } else {
        j0y0_hankel(x).0
    }
}

pub fn bessel_y0<T: Real>(x: T) -> Result<T> {
    if !(x > T::zero()) {
        return Err(Error::domain(format!("Y0 needs a positive argument, got {x}")));
    }
    Ok(if x < T::lit(SERIES_LIMIT) {
        j0y0_series(x).1
    } else if x < T::lit(HANKEL_LIMIT) {
        j0y0_miller(x).1
    } else {
        j0y0_hankel(x).1
    })
}

/// Ascending series. `Y₀` uses the harmonic-number form.
pub fn j0y0_series<T: Real>(x: T) -> (T, T) {
    let q = -x * x / T::lit(4.0);
    let mut term = T::one();
    let mut j = T::one();
    let mut harmonic = T::zero();
    let mut ysum = T::zero();
    for k in 1..200 {
        let kf = T::lit(k as f64);
        term = term * q / (kf * kf);
        harmonic += kf.recip();
        j += term;
        ysum += harmonic * term;
        if term.abs() < T::epsilon() * T::lit(1e-3) * j.abs().max(T::lit(1e-3)) {
            break;
        }
    }
    let log_term = (x / T::lit(2.0)).ln() + T::lit(EULER_GAMMA);
    (j, T::FRAC_2_PI() * (log_term * j - ysum))
}

/// Miller's backward recurrence normalised by `1 = J₀ + 2ΣJ_{2k}`, with `Y₀`
/// from the Neumann series `Y₀ = (2/π)[(ln(x/2) + γ)J₀ − 2Σ(−1)^k J_{2k}/k]`.
pub fn j0y0_miller<T: Real>(x: T) -> (T, T) {
    let xf = x.as_f64();
    let start = 2 * ((xf + 30.0 + 3.0 * xf.sqrt()) / 2.0) as usize + 2;
    let big = T::max_value().sqrt();
    let shrink = big.recip();
    let two = T::lit(2.0);
    let (mut jp, mut j) = (T::zero(), T::min_positive_value().sqrt());
    let (mut even_sum, mut neumann) = (T::zero(), T::zero());
    for k in (1..=start).rev() {
        let jm = two * T::lit(k as f64) / x * j - jp;
        jp = j;
        j = jm;
        // j is now J_{k−1}.
        let order = k - 1;
        if order > 0 && order % 2 == 0 {
            let half = order / 2;
            even_sum += j;
            let sign = if half % 2 == 0 { T::one() } else { -T::one() };
            neumann += sign * j / T::lit(half as f64);
        }
        if j.abs() > big {
            j = j * shrink;
            jp = jp * shrink;
            even_sum = even_sum * shrink;
            neumann = neumann * shrink;
        }
    }
    let norm = j + two * even_sum;
    let j0 = j / norm;
    let log_term = (x / two).ln() + T::lit(EULER_GAMMA);
    (j0, T::FRAC_2_PI() * (log_term * j0 - two * neumann / norm))
}

/// Hankel's expansion truncated at its smallest term.
pub fn j0y0_hankel<T: Real>(x: T) -> (T, T) {
    let eight_x = T::lit(8.0) * x;
    let (mut p, mut q) = (T::one(), T::zero());
    let mut t = T::one();
    for k in 1..200usize {
        let odd = T::lit((2 * k - 1) as f64);
        let next = t * (-(odd * odd) / (T::lit(k as f64) * eight_x));
        if next.abs() >= t.abs() {
            break;
        }
        t = next;
        // (−1)^{⌊k/2⌋} sign pattern splits P (even k) and Q (odd k).
        let sign = if (k / 2) % 2 == 0 { T::one() } else { -T::one() };
        if k % 2 == 0 {
            p += sign * t;
        } else {
            q += sign * t;
        }
        if t.abs() < T::epsilon() * T::lit(1e-3) {
            break;
        }
    }
    let chi = x - T::FRAC_PI_4();
    let f = (T::FRAC_2_PI() / x).sqrt();
    let (s, c) = chi.sin_cos();
    (f * (p * c - q * s), f * (p * s + q * c))
}

pub fn bessel_k0<T: Real>(x: T) -> Result<T> {
    if !(x > T::zero()) {
        return Err(Error::domain(format!("K0 needs a positive argument, got {x}")));
    }
    Ok(if x <= T::lit(2.0) { k0_series(x) } else { k0_continued_fraction(x) })
}

/// `K₀ = −(ln(x/2) + γ)I₀ + Σ H_k (x²/4)^k/(k!)²`.
pub fn k0_series<T: Real>(x: T) -> T {
    let q = x * x / T::lit(4.0);
    let mut term = T::one();
    let mut i0 = T::one();
    let mut harmonic = T::zero();
    let mut sum = T::zero();
    for k in 1..200 {
        let kf = T::lit(k as f64);
        term = term * q / (kf * kf);
        harmonic += kf.recip();
        i0 += term;
        sum += harmonic * term;
        if term < T::epsilon() * T::lit(1e-3) {
            break;
        }
    }
    -((x / T::lit(2.0)).ln() + T::lit(EULER_GAMMA)) * i0 + sum
}

/// Steed's evaluation of the second continued fraction for `K₀`, `x > 0`.
pub fn k0_continued_fraction<T: Real>(x: T) -> T {
    let two = T::lit(2.0);
    let mut b = two * (T::one() + x);
    let mut d = b.recip();
    let mut delh = d;
    let (mut q1, mut q2) = (T::zero(), T::one());
    let a1 = T::lit(0.25);
    let mut q = a1;
    let mut c = a1;
    let mut a = -a1;
    let mut s = T::one() + q * delh;
    for i in 2..100_000 {
        let fi = T::lit(i as f64);
        a -= two * T::lit((i - 1) as f64);
        c = -a * c / fi;
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += two;
        d = (b + a * d).recip();
        delh = (b * d - T::one()) * delh;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() < T::epsilon() * T::lit(0.1) {
            break;
        }
    }
    (T::PI() / (two * x)).sqrt() * (-x).exp() / s
}

/// `K₀(ix) = −(π/2)(Y₀(x) + iJ₀(x))` for real `x ≠ 0`; negative `x` gives
/// the conjugate.
pub fn bessel_k0_imag<T: Real>(x: T) -> Result<Complex<T>> {
    let ax = x.abs();
    let v = Complex::new(bessel_y0(ax)?, bessel_j0(ax)) * (-T::FRAC_PI_2());
    Ok(if x < T::zero() { v.conj() } else { v })
}

/// `K₀(iz)` for `z > 0` from
/// `K₀(iz) = 2e^{−iπ/4}e^{−iz}∫₀^∞ e^{−2zt²}/√(1 − it²) dt`,
/// with the real and imaginary parts of the integral as separate real
/// quadratures.
pub fn k0_imag_integral<T: Real>(z: T, tol: T) -> Result<(Complex<T>, QuadResult<T>, QuadResult<T>)> {
    if !(z > T::zero()) {
        return Err(Error::domain(format!("K0(iz) integral needs z > 0, got {z}")));
    }
    let weight = |t: T| Complex::new(T::one(), -t * t).sqrt().inv() * (-T::lit(2.0) * z * t * t).exp();
    let decay = Decay::gauss(T::lit(2.0) * z);
    let part_tol = (tol / T::lit(4.0)).max(T::min_tol());
    let re = integrate_semi_infinite(Integrand1D::new(|t| weight(t).re, decay), part_tol)?;
    let im = integrate_semi_infinite(Integrand1D::new(|t| weight(t).im, decay), part_tol)?;
    let phase = Complex::from_polar(T::lit(2.0), -T::FRAC_PI_4() - z);
    Ok((phase * Complex::new(re.value, im.value), re, im))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values_at_origin_and_domain() {
        assert_eq!(bessel_j0(0.0f64), 1.0);
        assert!(bessel_y0(0.0f64).is_err());
        assert!(bessel_k0(-1.0f64).is_err());
        assert!(bessel_k0_imag(0.0f64).is_err());
    }

    #[test]
    fn regimes_agree_at_switch_points() {
        for &x in &[SERIES_LIMIT, SERIES_LIMIT + 0.5] {
            let (a, b) = (j0y0_series(x), j0y0_miller(x));
            assert!((a.0 - b.0).abs() < 1e-11 && (a.1 - b.1).abs() < 1e-11, "x = {x}");
        }
        for &x in &[HANKEL_LIMIT, HANKEL_LIMIT + 3.0] {
            let (a, b) = (j0y0_miller(x), j0y0_hankel(x));
            assert!((a.0 - b.0).abs() < 1e-11 && (a.1 - b.1).abs() < 1e-11, "x = {x}");
        }
        for &x in &[1.5f64, 2.0, 2.5] {
            assert!((k0_series(x) - k0_continued_fraction(x)).abs() < 1e-13, "x = {x}");
        }
    }

    #[test]
    fn wronskian() {
        // J₀Y₀′ − J₀′Y₀ = 2/(πx), with J₀′ = −J₁ obtained by central differences.
        for &x in &[0.5f64, 3.0, 8.0, 12.0, 19.0, 21.0, 45.0] {
            let h = 1e-5;
            let jd = (bessel_j0(x + h) - bessel_j0(x - h)) / (2.0 * h);
            let yd = (bessel_y0(x + h).unwrap() - bessel_y0(x - h).unwrap()) / (2.0 * h);
            let w = bessel_j0(x) * yd - jd * bessel_y0(x).unwrap();
            assert!((w - 2.0 / (std::f64::consts::PI * x)).abs() < 1e-8, "x = {x}");
        }
    }

    #[test]
    fn f32_is_usable() {
        assert!((bessel_j0(2.0f32) - 0.223_890_78).abs() < 1e-6);
        assert!((bessel_k0(1.0f32).unwrap() - 0.421_024_43).abs() < 1e-6);
    }
}
