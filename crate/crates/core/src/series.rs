//! Bilateral, character-weighted and conditionally convergent series, and
//! the Poisson-summation identities built on them.
//!
//! Bilateral sums add the `n = 0` term first and then the pairs `(n, −n)`
//! in increasing `n`, with compensated accumulation. Summation stops once a
//! geometric bound on the remaining terms falls below the tolerance; the
//! ratio used is the larger of the declared decay factor and the observed
//! ratio of the last two term magnitudes.

use crate::error::{Error, Result};
use crate::real::Real;
use crate::specfun::kernels::{ratio, Kernel, KernelDescriptor};
use crate::specfun::{sech, shc, sinc};
use crate::transforms::{fourier_1d, TransformKind};

const N_CAP: i64 = 1_000_000;

/// A summand with a declared exponential decay rate `c`: `|t(n)| ≲ e^{−c|n|}`.
pub struct SeriesTerm<F, T> {
    pub term: F,
    pub decay_rate: T,
}

impl<F, T> SeriesTerm<F, T> {
    pub fn new(term: F, decay_rate: T) -> Self {
        SeriesTerm { term, decay_rate }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesResult<T> {
    pub value: T,
    pub tail_bound: T,
    pub terms_used: u64,
}

impl<T: Real> SeriesResult<T> {
    fn exact(value: T) -> Self {
        SeriesResult { value, tail_bound: T::zero(), terms_used: 0 }
    }

    /// Product of two sums with first-order error propagation.
    pub fn mul(self, other: Self) -> Self {
        SeriesResult {
            value: self.value * other.value,
            tail_bound: self.value.abs() * other.tail_bound + other.value.abs() * self.tail_bound
                + self.tail_bound * other.tail_bound,
            terms_used: self.terms_used + other.terms_used,
        }
    }

    pub fn scale(self, s: T) -> Self {
        SeriesResult { value: self.value * s, tail_bound: self.tail_bound * s.abs(), terms_used: self.terms_used }
    }

    pub fn add(self, other: Self) -> Self {
        SeriesResult {
            value: self.value + other.value,
            tail_bound: self.tail_bound + other.tail_bound,
            terms_used: self.terms_used + other.terms_used,
        }
    }
}

/// Streaming compensated sum.
#[derive(Debug, Clone, Copy, Default)]
struct Acc<T> {
    sum: T,
    comp: T,
}

impl<T: Real> Acc<T> {
    fn add(&mut self, t: T) {
        let s = self.sum + t;
        if self.sum.abs() >= t.abs() {
            self.comp += (self.sum - s) + t;
        } else {
            self.comp += (t - s) + self.sum;
        }
        self.sum = s;
    }

    fn value(&self) -> T {
        self.sum + self.comp
    }
}

/// Geometric tail tracker over successive term magnitudes.
struct Tail<T> {
    r: T,
    prev: T,
}

impl<T: Real> Tail<T> {
    fn new(rate: T) -> Self {
        Tail { r: (-rate).exp(), prev: T::zero() }
    }

    /// Bound on everything after a block of magnitude `mag`.
    fn bound(&mut self, mag: T) -> T {
        let observed = if self.prev > T::zero() && mag > T::zero() { mag / self.prev } else { T::zero() };
        let rho = self.r.max(observed);
        let m = mag.max(self.prev * self.r);
        self.prev = m;
        if rho >= T::one() {
            return T::infinity();
        }
        T::lit(2.0) * m * rho / (T::one() - rho)
    }
}

fn check_rate<T: Real>(rate: T) -> Result<()> {
    if rate > T::zero() && rate.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidDecay(rate.as_f64()))
    }
}

/// `Σ_{n=−∞}^{∞} t(n)`.
pub fn sum_bilateral<T, F>(t: &SeriesTerm<F, T>, tol: T) -> Result<SeriesResult<T>>
where
    T: Real,
    F: Fn(i64) -> T,
{
    try_sum_bilateral(|n| Ok((t.term)(n)), t.decay_rate, tol)
}

/// As [`sum_bilateral`], for fallible summands.
pub fn try_sum_bilateral<T, F>(mut term: F, rate: T, tol: T) -> Result<SeriesResult<T>>
where
    T: Real,
    F: FnMut(i64) -> Result<T>,
{
    check_rate(rate)?;
    let mut acc = Acc::default();
    acc.add(term(0)?);
    let mut tail = Tail::new(rate);
    for n in 1..=N_CAP {
        let a = term(n)?;
        let b = term(-n)?;
        acc.add(a);
        acc.add(b);
        let bound = tail.bound(a.abs() + b.abs());
        if n >= 2 && bound <= tol {
            return Ok(SeriesResult { value: acc.value(), tail_bound: bound, terms_used: 2 * n as u64 + 1 });
        }
    }
    Err(Error::NonConvergence { estimate: f64::INFINITY, tol: tol.as_f64() })
}

/// `Σ_{n=start}^{∞} t(n)`.
pub fn sum_from<T, F>(start: i64, mut term: F, rate: T, tol: T) -> Result<SeriesResult<T>>
where
    T: Real,
    F: FnMut(i64) -> T,
{
    check_rate(rate)?;
    let mut acc = Acc::default();
    let mut tail = Tail::new(rate);
    for (i, n) in (start..=start + N_CAP).enumerate() {
        let a = term(n);
        acc.add(a);
        let bound = tail.bound(a.abs());
        if i >= 2 && bound <= tol {
            return Ok(SeriesResult { value: acc.value(), tail_bound: bound, terms_used: i as u64 + 1 });
        }
    }
    Err(Error::NonConvergence { estimate: f64::INFINITY, tol: tol.as_f64() })
}

/// The primitive character modulo 4: `χ(n) = sin(πn/2)`.
#[inline]
pub fn chi(n: i64) -> i32 {
    [0, 1, 0, -1][n.rem_euclid(4) as usize]
}

/// `Σ_{n≥1} χ(n)·t(n)`, summed over odd `n` only.
pub fn sum_character<T, F>(t: &SeriesTerm<F, T>, tol: T) -> Result<SeriesResult<T>>
where
    T: Real,
    F: Fn(i64) -> T,
{
    let r = sum_from(0, |j| {
        let n = 2 * j + 1;
        T::lit(chi(n) as f64) * (t.term)(n)
    }, T::lit(2.0) * t.decay_rate, tol)?;
    Ok(r)
}

/// `Σ_m Σ_n t(m, n)` over all integer pairs, as nested bilateral sums.
pub fn sum_double_bilateral<T, F>(term: F, rate_m: T, rate_n: T, tol: T) -> Result<SeriesResult<T>>
where
    T: Real,
    F: Fn(i64, i64) -> T,
{
    let inner_tol = (tol * (T::one() - (-rate_m).exp()) / T::lit(8.0)).max(T::epsilon() * T::epsilon());
    let mut inner_terms = 0u64;
    let mut inner_bound = T::zero();
    let outer = try_sum_bilateral(
        |m| {
            let r = sum_bilateral(&SeriesTerm::new(|n| term(m, n), rate_n), inner_tol)?;
            inner_terms += r.terms_used;
            inner_bound = inner_bound + r.tail_bound;
            Ok(r.value)
        },
        rate_m,
        (tol / T::lit(2.0)).max(T::min_tol()),
    )?;
    Ok(SeriesResult { value: outer.value, tail_bound: outer.tail_bound + inner_bound, terms_used: inner_terms })
}

/// Result of the Lerch-type conditionally convergent sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LerchSum<T> {
    pub result: SeriesResult<T>,
    /// Number of filter passes selected.
    pub depth: usize,
    /// Accelerated values at the selected depth and at twice that depth.
    pub value_at_depth: T,
    pub value_at_double_depth: T,
}

/// `Σ_n sin(√2·π·n/p)/|n + p/√2|^{1/2}` for `1/√2 < p < √2`.
///
/// Terms `n` and `−n` are paired, which leaves an absolutely convergent
/// series whose partial sums oscillate at the angular frequency
/// `c = √2·π/p`. The partial sums are then passed repeatedly through the
/// filter `A′_n = (A_{n+1} − 2cos c·A_n + A_{n−1})/(2 − 2cos c)`, which
/// removes a pure `e^{±icn}` component and keeps constants. The number of
/// passes is the one in {2, 4, 8, 16} with the smallest change from half
/// as many passes. The tail bound adds the larger of that change and the
/// change at twice the depth to the change from halving the number of terms.
pub fn sum_lerch<T: Real>(p: T, tol: T) -> Result<SeriesResult<T>> {
    Ok(sum_lerch_detailed(p, tol)?.result)
}

pub fn sum_lerch_detailed<T: Real>(p: T, tol: T) -> Result<LerchSum<T>> {
    let lo = T::FRAC_1_SQRT_2();
    if !(p > lo && p < T::SQRT_2()) {
        return Err(Error::domain(format!("Lerch parameter p must lie in (1/√2, √2), got {p}")));
    }
    let c = T::SQRT_2() * T::PI() / p;
    let s = p / T::SQRT_2();
    let mut n_terms: usize = 4096;
    loop {
        let mut partial = Vec::with_capacity(n_terms);
        let mut acc = Acc::default();
        for n in 1..=n_terms {
            let x = T::lit(n as f64);
            acc.add((c * x).sin() * ((x + s).abs().sqrt().recip() - (s - x).abs().sqrt().recip()));
            partial.push(acc.value());
        }
        let filtered = |len: usize, depth: usize| filter(&partial[..len], c, depth);
        let values: Vec<T> = [1usize, 2, 4, 8, 16, 32].iter().map(|&d| filtered(n_terms, d)).collect();
        // values[i] is the result after 2^i passes; candidates are 2, 4, 8, 16.
        let change = |i: usize| (values[i] - values[i - 1]).abs();
        let best = (1..=4).min_by(|&i, &j| change(i).partial_cmp(&change(j)).expect("finite changes")).unwrap_or(1);
        let depth = 1usize << best;
        let value = values[best];
        let shorter = filtered(n_terms / 2, depth);
        // Rounding grows with depth, so the next depth up is part of the bound.
        let bound = change(best).max(change(best + 1)) + (value - shorter).abs();
        if bound <= tol || n_terms >= 1 << 20 {
            if bound > tol {
                return Err(Error::NonConvergence { estimate: bound.as_f64(), tol: tol.as_f64() });
            }
            return Ok(LerchSum {
                result: SeriesResult { value, tail_bound: bound, terms_used: 2 * n_terms as u64 + 1 },
                depth,
                value_at_depth: value,
                value_at_double_depth: values[best + 1],
            });
        }
        n_terms *= 4;
    }
}

/// Last element after `depth` passes of the frequency-`c` averaging filter.
fn filter<T: Real>(partial: &[T], c: T, depth: usize) -> T {
    let w = T::lit(2.0) * c.cos();
    let norm = T::lit(2.0) - w;
    let mut a: Vec<T> = partial[partial.len().saturating_sub(2 * depth + 1)..].to_vec();
    for _ in 0..depth {
        a = a.windows(3).map(|v| (v[2] - w * v[1] + v[0]) / norm).collect();
    }
    a[a.len() - 1]
}

/// Two sides of a series identity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SidePair<T> {
    pub lhs: SeriesResult<T>,
    pub rhs: SeriesResult<T>,
}

impl<T: Real> SidePair<T> {
    pub fn abs_diff(&self) -> T {
        (self.lhs.value - self.rhs.value).abs()
    }
}

/// Checks a product constraint `a·b = target` to relative `1e−14`.
pub fn check_product<T: Real>(name: &str, a: T, b: T, target: T) -> Result<()> {
    let mismatch = ((a * b - target) / target).abs();
    if mismatch <= T::lit(1e-14) {
        Ok(())
    } else {
        Err(Error::ConstraintViolation { constraint: name.to_string(), mismatch: mismatch.as_f64() })
    }
}

fn inner_tol<T: Real>(tol: T) -> T {
    (tol / T::lit(20.0)).max(T::epsilon())
}

fn series_rate<T: Real>(desc: &KernelDescriptor<T>, scale: T) -> T {
    let d = desc.decay();
    match d.kind {
        crate::quad::DecayKind::Exp => d.rate * scale,
        crate::quad::DecayKind::Gauss => d.rate * scale * scale,
    }
}

/// `√α·Σ φ(αn)` against `√β·Σ φ_c(βn)` for an even kernel, `αβ = 2π`.
///
/// Self-reciprocal kernels use `φ_c = φ`; any other kernel has its cosine
/// transform evaluated by quadrature, term by term.
pub fn poisson_check_1d<T: Real>(desc: &KernelDescriptor<T>, alpha: T, beta: T, tol: T) -> Result<SidePair<T>> {
    if desc.dim() != 1 || desc.is_odd() {
        return Err(Error::domain(format!("{} is not an even one-dimensional kernel", desc.name())));
    }
    check_product("alpha*beta=2*pi", alpha, beta, T::lit(2.0) * T::PI())?;
    let t = inner_tol(tol);
    let lhs = sum_bilateral(&SeriesTerm::new(|n| desc.value(alpha * T::lit(n as f64)), series_rate(desc, alpha)), t)?
        .scale(alpha.sqrt());
    let self_reciprocal = matches!(desc.kernel(), Kernel::Src(_) | Kernel::GaussHalf);
    let rhs = if self_reciprocal {
        sum_bilateral(&SeriesTerm::new(|n| desc.value(beta * T::lit(n as f64)), series_rate(desc, beta)), t)?
    } else {
        try_sum_bilateral(
            |n| fourier_1d(desc, TransformKind::Cosine, beta * T::lit(n.unsigned_abs() as f64), t / T::lit(10.0)),
            series_rate(desc, beta).min(T::one()),
            t,
        )?
    }
    .scale(beta.sqrt());
    Ok(SidePair { lhs, rhs })
}

/// `√α·Σ χ(n)ψ(αn)` against `√β·Σ χ(n)ψ_s(βn)` for a sine self-reciprocal
/// kernel, `αβ = π/2`.
pub fn poisson_odd_check<T: Real>(desc: &KernelDescriptor<T>, alpha: T, beta: T, tol: T) -> Result<SidePair<T>> {
    if !matches!(desc.kernel(), Kernel::Srs(_)) {
        return Err(Error::domain(format!("{} is not a sine self-reciprocal kernel", desc.name())));
    }
    check_product("alpha*beta=pi/2", alpha, beta, T::FRAC_PI_2())?;
    let t = inner_tol(tol);
    let side = |a: T| -> Result<SeriesResult<T>> {
        Ok(sum_character(&SeriesTerm::new(|n| desc.value(a * T::lit(n as f64)), series_rate(desc, a)), t)?
            .scale(a.sqrt()))
    };
    Ok(SidePair { lhs: side(alpha)?, rhs: side(beta)? })
}

/// Summand of the sine side of the two-dimensional Poisson identity for the
/// `cos xy` kernel, with its limits on the axes built in:
/// `sin(γδmn)/(sinh(cγm)·sinh(cδn))`, `c = √(π/2)`.
pub fn poisson_f1_rhs_term<T: Real>(gamma: T, delta: T, m: T, n: T) -> T {
    let c = (T::PI() / T::lit(2.0)).sqrt();
    sinc(gamma * delta * m * n) / (c * c * shc(c * gamma * m) * shc(c * delta * n))
}

/// Two-dimensional Poisson summation applied to the `cos xy` kernel:
/// `√(αβ)ΣΣ cos(αβmn)/(cosh cαm·cosh cβn) = √(γδ)ΣΣ sin(γδmn)/(sinh cγm·sinh cδn)`
/// with `αγ = βδ = 2π`.
pub fn poisson_f1_check<T: Real>(alpha: T, beta: T, tol: T) -> Result<SidePair<T>> {
    let two_pi = T::lit(2.0) * T::PI();
    let (gamma, delta) = (two_pi / alpha, two_pi / beta);
    let c = (T::PI() / T::lit(2.0)).sqrt();
    let t = inner_tol(tol);
    let f = |m: i64| T::lit(m as f64);
    let lhs = sum_double_bilateral(
        |m, n| (alpha * beta * f(m) * f(n)).cos() * sech(c * alpha * f(m)) * sech(c * beta * f(n)),
        c * alpha,
        c * beta,
        t,
    )?
    .scale((alpha * beta).sqrt());
    let rhs = sum_double_bilateral(|m, n| poisson_f1_rhs_term(gamma, delta, f(m), f(n)), c * gamma, c * delta, t)?
        .scale((gamma * delta).sqrt());
    Ok(SidePair { lhs, rhs })
}

fn sech_sum<T: Real>(a: T, tol: T) -> Result<SeriesResult<T>> {
    sum_bilateral(&SeriesTerm::new(|n| sech(T::PI() * a * T::lit(n as f64)), T::PI() * a), tol)
}

/// `Σ_{n≥1} n/sinh(π·a·n)`.
fn n_over_sinh<T: Real>(a: T, tol: T) -> Result<SeriesResult<T>> {
    sum_from(1, |n| {
        let x = T::PI() * a * T::lit(n as f64);
        T::lit(n as f64) / x.sinh()
    }, T::PI() * a, tol)
}

/// `(Σ sech πnα)(Σ sech πnβ)` against `2/π + 4Σ αn/sinh πnα + 4Σ βn/sinh πnβ`,
/// `αβ = 1`.
pub fn legendre_sum_check<T: Real>(alpha: T, tol: T) -> Result<SidePair<T>> {
    let beta = T::one() / alpha;
    let t = inner_tol(tol);
    let lhs = sech_sum(alpha, t)?.mul(sech_sum(beta, t)?);
    let four = T::lit(4.0);
    let rhs = SeriesResult::exact(T::lit(2.0) / T::PI())
        .add(n_over_sinh(alpha, t)?.scale(four * alpha))
        .add(n_over_sinh(beta, t)?.scale(four * beta));
    Ok(SidePair { lhs, rhs })
}

fn cosh_half_sum<T: Real>(a: T, tol: T) -> Result<SeriesResult<T>> {
    let half = T::lit(0.5);
    sum_bilateral(
        &SeriesTerm::new(
            |n: i64| ratio(true, half, T::one(), T::zero(), T::PI() * a * T::lit(n.unsigned_abs() as f64)),
            half * T::PI() * a,
        ),
        tol,
    )
}

/// `√2·Σ sech παm·Σ sech πβn` against
/// `Σ cosh(παm/2)/cosh παm · Σ cosh(πβn/2)/cosh πβn`, `αβ = 2`.
pub fn landen_sum_check<T: Real>(alpha: T, tol: T) -> Result<SidePair<T>> {
    let beta = T::lit(2.0) / alpha;
    let t = inner_tol(tol);
    let lhs = sech_sum(alpha, t)?.mul(sech_sum(beta, t)?).scale(T::SQRT_2());
    let rhs = cosh_half_sum(alpha, t)?.mul(cosh_half_sum(beta, t)?);
    Ok(SidePair { lhs, rhs })
}

/// `cosh(a·x)/sinh(b·x)` for `x > 0`, `b > a ≥ 0`.
fn cosh_over_sinh<T: Real>(a: T, b: T, x: T) -> T {
    let ea = (-T::lit(2.0) * a * x).exp();
    let eb = (-T::lit(2.0) * b * x).exp();
    ((a - b) * x).exp() * (T::one() + ea) / (T::one() - eb)
}

/// The identity built from the `(1 + 2cosh)` kernels:
/// `αΣ n·cosh(παn/√3)/sinh(παn√3) + α⁻¹Σ n·cosh(πn/(α√3))/sinh(πn√3/α)`
/// against `−1/(2π√3) + (α/4)(Σ 1/(cosh(2παn/√3) + 1/2))²`.
pub fn elliptic1_check<T: Real>(alpha: T, tol: T) -> Result<SidePair<T>> {
    let s3 = T::lit(3.0).sqrt();
    let t = inner_tol(tol);
    let weighted = |a: T| {
        let (lo, hi) = (T::PI() * a / s3, T::PI() * a * s3);
        sum_from(1, |n| T::lit(n as f64) * cosh_over_sinh(lo, hi, T::lit(n as f64)), hi - lo, t)
    };
    let lhs = weighted(alpha)?.scale(alpha).add(weighted(T::one() / alpha)?.scale(T::one() / alpha));
    let b = T::lit(2.0) * T::PI() * alpha / s3;
    let sq = sum_bilateral(
        &SeriesTerm::new(|n: i64| ratio(true, T::zero(), b, -T::lit(0.5), T::lit(n.unsigned_abs() as f64)), b),
        t,
    )?;
    let rhs = SeriesResult::exact(-T::one() / (T::lit(2.0) * T::PI() * s3))
        .add(sq.mul(sq).scale(alpha / T::lit(4.0)));
    Ok(SidePair { lhs, rhs })
}

/// The odd-index companion of [`elliptic1_check`], with the summation index
/// inside the `sinh` on the right:
/// `(√3/4)·Σ_{n≥0} 1/(1/2 + cosh(πα(2n+1)/√3))·(same in β)` against
/// `Σ χ(n)cosh(παn/(2√3))/sinh(παn√3/2)·(same in β)`.
///
/// No relation between `α` and `β` is imposed.
pub fn elliptic2_check<T: Real>(alpha: T, beta: T, tol: T) -> Result<SidePair<T>> {
    let s3 = T::lit(3.0).sqrt();
    let t = inner_tol(tol);
    let odd = |a: T| {
        let b = T::PI() * a / s3;
        sum_from(0, |n| ratio(true, T::zero(), b, -T::lit(0.5), T::lit((2 * n + 1) as f64)), T::lit(2.0) * b, t)
    };
    let chis = |a: T| {
        let (lo, hi) = (T::PI() * a / (T::lit(2.0) * s3), T::PI() * a * s3 / T::lit(2.0));
        sum_character(&SeriesTerm::new(|n| cosh_over_sinh(lo, hi, T::lit(n as f64)), hi - lo), t)
    };
    let lhs = odd(alpha)?.mul(odd(beta)?).scale(s3 / T::lit(4.0));
    let rhs = chis(alpha)?.mul(chis(beta)?);
    Ok(SidePair { lhs, rhs })
}

/// `f_β(θ) = Σ 1/(cosh βn − cos θ)`.
pub fn f_beta<T: Real>(beta: T, theta: T, tol: T) -> Result<SeriesResult<T>> {
    let c = theta.cos();
    if (T::one() - c) <= T::zero() {
        return Err(Error::domain("f_beta diverges at θ ≡ 0 (mod 2π)"));
    }
    sum_bilateral(&SeriesTerm::new(|n| T::one() / ((beta * T::lit(n as f64)).cosh() - c), beta), tol)
}

/// `f² − 2cos θ·f(θ)f(2θ) + (cos θ/sin²θ)f` against
/// `Σ 1/(cosh βn − cos θ)² + 4Σ_{n≥1} n·coth(βn/2)/(cosh βn − cos 2θ)`.
pub fn fbeta_check<T: Real>(beta: T, theta: T, tol: T) -> Result<SidePair<T>> {
    let desc = KernelDescriptor::new(Kernel::FBeta { beta, theta })?;
    let t = inner_tol(tol);
    let f1 = f_beta(beta, theta, t)?;
    let f2 = f_beta(beta, T::lit(2.0) * theta, t)?;
    let (c, s) = (theta.cos(), theta.sin());
    let lhs = f1
        .mul(f1)
        .add(f1.mul(f2).scale(-T::lit(2.0) * c))
        .add(f1.scale(c / (s * s)));
    let sq = sum_bilateral(&SeriesTerm::new(|n| desc.value(T::lit(n as f64)).powi(2), T::lit(2.0) * beta), t)?;
    let c2 = (T::lit(2.0) * theta).cos();
    let weighted = sum_from(1, |n| {
        let x = beta * T::lit(n as f64);
        T::lit(n as f64) / (T::lit(0.5) * x).tanh() / (x.cosh() - c2)
    }, beta, t)?;
    Ok(SidePair { lhs, rhs: sq.add(weighted.scale(T::lit(4.0))) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_sums() {
        let r = sum_bilateral(&SeriesTerm::new(|n: i64| if n == 0 { 1.0 } else { 0.0 }, 1.0), 1e-14).unwrap();
        assert_eq!(r.value, 1.0);
        let r = sum_bilateral(&SeriesTerm::new(|n: i64| n as f64 * sech(std::f64::consts::PI * n as f64), 3.0), 1e-14)
            .unwrap();
        assert!(r.value.abs() < 1e-16);
    }

    #[test]
    fn character_sum_geometric_oracle() {
        let r = sum_character(&SeriesTerm::new(|n: i64| (-(n as f64)).exp(), 1.0), 1e-15).unwrap();
        let e1 = (-1f64).exp();
        assert!((r.value - e1 / (1.0 + e1 * e1)).abs() < 1e-15);
        let r = sum_character(&SeriesTerm::new(|_: i64| 0.0, 1.0), 1e-15).unwrap();
        assert_eq!(r.value, 0.0);
    }

    #[test]
    fn chi_pattern() {
        let v: Vec<i32> = (0..8).map(chi).collect();
        assert_eq!(v, vec![0, 1, 0, -1, 0, 1, 0, -1]);
        assert_eq!(chi(-1), -1);
    }

    #[test]
    fn constraint_guard() {
        let d = KernelDescriptor::new(Kernel::Src(1)).unwrap();
        assert!(matches!(poisson_check_1d(&d, 1.0, 1.0, 1e-10), Err(Error::ConstraintViolation { .. })));
    }

    #[test]
    fn lerch_domain() {
        assert!(sum_lerch(1.5f64, 1e-4).is_err());
        assert!(sum_lerch(0.7f64, 1e-4).is_err());
    }
}
