//! Adaptive quadrature on `[0, ∞)` and on the positive quadrant.
//!
//! Integrals are truncated at a cutoff derived from a declared decay
//! envelope, the finite range is split into panels no wider than one
//! oscillation period, and each panel is integrated with a nested tanh-sinh
//! rule. Panels are refined globally, largest error first, until the summed
//! level-to-level differences plus the truncated tail fit the tolerance.

use std::cell::Cell;

use crate::error::{Error, Result};
use crate::real::Real;

/// Finest tanh-sinh level stored in the node table.
pub const MAX_LEVEL: usize = 12;
const DEFAULT_MAX_LEVEL: usize = 10;
const MIN_LEVEL: usize = 3;
const T_MAX: f64 = 3.5;
const MAX_PANELS: usize = 4_000_000;

/// Tanh-sinh nodes for `t > 0`, grouped by the level that introduces them.
///
/// A node is stored as `(δ, w)` where `δ = 1 − tanh(π/2·sinh t)` is the
/// distance to the right endpoint of `[−1, 1]`, kept separately so that
/// endpoints are resolved without cancellation.
#[derive(Debug, Clone)]
pub struct NodeTable<T> {
    center_weight: T,
    levels: Vec<Vec<(T, T)>>,
}

impl NodeTable<f64> {
    pub(crate) fn build() -> Self {
        let half_pi = std::f64::consts::FRAC_PI_2;
        let node = |t: f64| {
            let s = half_pi * t.sinh();
            let delta = 2.0 / (1.0 + (2.0 * s).exp());
            let w = half_pi * t.cosh() / (s.cosh() * s.cosh());
            (delta, w)
        };
        let mut levels = Vec::with_capacity(MAX_LEVEL + 1);
        levels.push((1..=T_MAX as usize).map(|k| node(k as f64)).collect());
        for level in 1..=MAX_LEVEL {
            let h = (-(level as f64)).exp2();
            let count = (T_MAX / h) as usize;
            levels.push((1..=count).step_by(2).map(|k| node(k as f64 * h)).collect());
        }
        NodeTable { center_weight: half_pi, levels }
    }

    pub(crate) fn cast<T: Real>(&self) -> NodeTable<T> {
        NodeTable {
            center_weight: T::lit(self.center_weight),
            levels: self
                .levels
                .iter()
                .map(|lv| lv.iter().map(|&(d, w)| (T::lit(d), T::lit(w))).collect())
                .collect(),
        }
    }
}

/// Shape of the envelope bounding an integrand at large `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DecayKind {
    /// `A·e^{−c·x}`
    Exp,
    /// `A·e^{−c·x²}`
    Gauss,
}

/// Envelope `A·e^{−c·x}` or `A·e^{−c·x²}` dominating `|f(x)|` on `[0, ∞)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Decay<T> {
    pub rate: T,
    pub kind: DecayKind,
    pub amplitude: T,
}

impl<T: Real> Decay<T> {
    pub fn exp(rate: T) -> Self {
        Decay { rate, kind: DecayKind::Exp, amplitude: T::one() }
    }

    pub fn gauss(rate: T) -> Self {
        Decay { rate, kind: DecayKind::Gauss, amplitude: T::one() }
    }

    pub fn with_amplitude(mut self, amplitude: T) -> Self {
        self.amplitude = amplitude;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rate > T::zero() && self.rate.is_finite()) {
            return Err(Error::InvalidDecay(self.rate.as_f64()));
        }
        if !(self.amplitude > T::zero() && self.amplitude.is_finite()) {
            return Err(Error::InvalidDecay(self.amplitude.as_f64()));
        }
        Ok(())
    }

    pub fn envelope(&self, x: T) -> T {
        match self.kind {
            DecayKind::Exp => self.amplitude * (-self.rate * x).exp(),
            DecayKind::Gauss => self.amplitude * (-self.rate * x * x).exp(),
        }
    }

    /// Upper bound on `∫_x^∞` of the envelope.
    pub fn tail(&self, x: T) -> T {
        let c = self.rate;
        let full = self.mass();
        let bound = match self.kind {
            DecayKind::Exp => self.amplitude * (-c * x).exp() / c,
            DecayKind::Gauss if x > T::zero() => {
                self.amplitude * (-c * x * x).exp() / (T::lit(2.0) * c * x)
            }
            DecayKind::Gauss => full,
        };
        bound.min(full)
    }

    /// `∫_0^∞` of the envelope.
    pub fn mass(&self) -> T {
        match self.kind {
            DecayKind::Exp => self.amplitude / self.rate,
            DecayKind::Gauss => self.amplitude * T::lit(0.5) * (T::PI() / self.rate).sqrt(),
        }
    }

    /// Smallest `X` with `tail(X) ≤ tol/10`.
    pub fn cutoff(&self, tol: T) -> Result<T> {
        self.validate()?;
        truncation_cutoff(self.rate, self.kind, tol / self.amplitude)
    }
}

/// Local angular frequency hint `ω(x) = base + slope·x` for oscillatory factors.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Oscillation<T> {
    pub base: T,
    pub slope: T,
}

impl<T: Real> Oscillation<T> {
    pub fn none() -> Self {
        Oscillation { base: T::zero(), slope: T::zero() }
    }

    pub fn new(base: T, slope: T) -> Self {
        Oscillation { base: base.abs(), slope: slope.abs() }
    }

    fn at(&self, x: T) -> T {
        self.base + self.slope * x
    }
}

/// Outcome of a quadrature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult<T> {
    pub value: T,
    pub abs_error_estimate: T,
    pub evaluations: u64,
}

impl<T: Real> QuadResult<T> {
    pub fn exact(value: T) -> Self {
        QuadResult { value, abs_error_estimate: T::zero(), evaluations: 1 }
    }

    pub fn scale(self, s: T) -> Self {
        QuadResult {
            value: self.value * s,
            abs_error_estimate: self.abs_error_estimate * s.abs(),
            evaluations: self.evaluations,
        }
    }
}

/// A function on `[0, ∞)` with its decay envelope.
pub struct Integrand1D<T, F> {
    pub f: F,
    pub decay: Decay<T>,
    pub oscillation: Oscillation<T>,
}

impl<T: Real, F> Integrand1D<T, F> {
    pub fn new(f: F, decay: Decay<T>) -> Self {
        Integrand1D { f, decay, oscillation: Oscillation::none() }
    }

    pub fn oscillating(mut self, base: T, slope: T) -> Self {
        self.oscillation = Oscillation::new(base, slope);
        self
    }
}

/// Frequency hint for one axis of a 2D integrand, with `s` this coordinate
/// and `t` the other: `ω = base + cross·t + (own + own_cross_sq·t²)·s`.
///
/// The outer axis sees `t = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct AxisOscillation<T> {
    pub base: T,
    pub own: T,
    pub cross: T,
    pub own_cross_sq: T,
}

/// A function on the closed positive quadrant.
///
/// `|f(x, y)| ≤ A·env_x(x)·env_y(y)`, with `A` the product of the two
/// amplitudes.
pub struct Integrand2D<T, F> {
    pub f: F,
    pub decay_x: Decay<T>,
    pub decay_y: Decay<T>,
    pub osc_x: AxisOscillation<T>,
    pub osc_y: AxisOscillation<T>,
}

impl<T: Real, F> Integrand2D<T, F> {
    pub fn new(f: F, decay_x: Decay<T>, decay_y: Decay<T>) -> Self {
        Integrand2D {
            f,
            decay_x,
            decay_y,
            osc_x: AxisOscillation::default(),
            osc_y: AxisOscillation::default(),
        }
    }

    pub fn oscillating_x(mut self, base: T, own: T) -> Self {
        self.osc_x = AxisOscillation { base: base.abs(), own: own.abs(), ..Default::default() };
        self
    }

    pub fn oscillating_y(mut self, base: T, own: T, cross: T) -> Self {
        self.osc_y = AxisOscillation { base: base.abs(), own: own.abs(), cross: cross.abs(), ..self.osc_y };
        self
    }

    pub fn with_osc_y(mut self, osc: AxisOscillation<T>) -> Self {
        self.osc_y = osc;
        self
    }
}

/// Cutoff `X` such that the unit-amplitude tail beyond `X` is at most `tol/10`.
pub fn truncation_cutoff<T: Real>(rate: T, kind: DecayKind, tol: T) -> Result<T> {
    if !(rate > T::zero() && rate.is_finite()) {
        return Err(Error::InvalidDecay(rate.as_f64()));
    }
    if !(tol > T::zero()) {
        return Err(Error::InvalidTolerance(tol.as_f64()));
    }
    let target = tol / T::lit(10.0);
    let c = rate;
    match kind {
        DecayKind::Exp => Ok(((T::one() / (c * target)).ln() / c).max(T::zero())),
        DecayKind::Gauss => {
            let half = T::lit(0.5);
            if half * (T::PI() / c).sqrt() <= target {
                return Ok(T::zero());
            }
            // g(X) = c·X² + ln(2cX) − ln(1/target) increases strictly on X > 0.
            let l = (T::one() / target).ln();
            let g = |x: T| c * x * x + (T::lit(2.0) * c * x).ln() - l;
            let mut hi = (l.max(T::one()) / c).sqrt();
            while g(hi) < T::zero() {
                hi = hi * T::lit(2.0);
            }
            let mut lo = T::zero();
            for _ in 0..200 {
                let mid = half * (lo + hi);
                if mid <= lo || mid >= hi {
                    break;
                }
                if g(mid) < T::zero() {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            Ok(hi)
        }
    }
}

fn check_tol<T: Real>(tol: T) -> Result<()> {
    if tol >= T::min_tol() && tol.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidTolerance(tol.as_f64()))
    }
}

/// Integrates `f` over `[0, ∞)` to absolute tolerance `tol`.
pub fn integrate_semi_infinite<T, F>(f: Integrand1D<T, F>, tol: T) -> Result<QuadResult<T>>
where
    T: Real,
    F: FnMut(T) -> T,
{
    let Integrand1D { mut f, decay, oscillation } = f;
    try_integrate_semi_infinite(Integrand1D { f: |x| Ok(f(x)), decay, oscillation }, tol)
}

/// As [`integrate_semi_infinite`], for integrands that can themselves fail.
pub fn try_integrate_semi_infinite<T, F>(f: Integrand1D<T, F>, tol: T) -> Result<QuadResult<T>>
where
    T: Real,
    F: FnMut(T) -> Result<T>,
{
    check_tol(tol)?;
    let Integrand1D { mut f, decay, oscillation } = f;
    let x_end = decay.cutoff(tol)?.max(T::lit(0.5));
    let tail = decay.tail(x_end);
    let breaks = breakpoints(x_end, oscillation)?;
    let max_level = if oscillation.at(x_end) > T::lit(10.0) { MAX_LEVEL } else { DEFAULT_MAX_LEVEL };
    let (value, est, evaluations) = adapt(&mut f, &breaks, tol - tail, max_level)?;
    Ok(QuadResult { value, abs_error_estimate: est + tail, evaluations })
}

/// Integrates `f` over the finite interval `[a, b]`.
pub fn integrate_interval<T, F>(mut f: F, a: T, b: T, oscillation: Oscillation<T>, tol: T) -> Result<QuadResult<T>>
where
    T: Real,
    F: FnMut(T) -> T,
{
    check_tol(tol)?;
    let (lo, hi, sign) = if a <= b { (a, b, T::one()) } else { (b, a, -T::one()) };
    let breaks: Vec<T> = breakpoints(hi - lo, oscillation)?.into_iter().map(|x| lo + x).collect();
    let max_level = if oscillation.at(hi - lo) > T::lit(10.0) { MAX_LEVEL } else { DEFAULT_MAX_LEVEL };
    let (value, est, evaluations) = adapt(&mut |x| Ok(f(x)), &breaks, tol, max_level)?;
    Ok(QuadResult { value: sign * value, abs_error_estimate: est, evaluations })
}

/// Integrates `f` over `[0, ∞)²` as an iterated integral, outer variable `x`.
pub fn integrate_quadrant<T, F>(f: Integrand2D<T, F>, tol: T) -> Result<QuadResult<T>>
where
    T: Real,
    F: FnMut(T, T) -> T,
{
    let Integrand2D { mut f, decay_x, decay_y, osc_x, osc_y } = f;
    try_integrate_quadrant(Integrand2D { f: |x, y| Ok(f(x, y)), decay_x, decay_y, osc_x, osc_y }, tol)
}

/// As [`integrate_quadrant`], for integrands that can themselves fail.
pub fn try_integrate_quadrant<T, F>(f: Integrand2D<T, F>, tol: T) -> Result<QuadResult<T>>
where
    T: Real,
    F: FnMut(T, T) -> Result<T>,
{
    check_tol(tol)?;
    let Integrand2D { mut f, decay_x, decay_y, osc_x, osc_y } = f;
    decay_x.validate()?;
    decay_y.validate()?;
    let two = T::lit(2.0);
    // Marginal envelope of x ↦ ∫ f(x, y) dy.
    let outer_decay = Decay { amplitude: decay_x.amplitude * decay_y.mass(), ..decay_x };
    let outer_tol = (tol / two).max(T::min_tol());
    let x_end = outer_decay.cutoff(outer_tol)?.max(T::lit(0.5));
    let inner_tol = (tol / (two * x_end.max(T::one()))).max(T::min_tol());
    let inner_decay = Decay { amplitude: decay_y.amplitude * decay_x.amplitude, ..decay_y };

    let inner_evals = Cell::new(0u64);
    let inner_err = Cell::new(T::zero());
    let outer = {
        let g = |x: T| {
            let osc = Oscillation::new(osc_y.base + osc_y.cross * x, osc_y.own + osc_y.own_cross_sq * x * x);
            let inner = Integrand1D { f: |y: T| f(x, y), decay: inner_decay, oscillation: osc };
            let r = try_integrate_semi_infinite(inner, inner_tol)?;
            inner_evals.set(inner_evals.get() + r.evaluations);
            inner_err.set(inner_err.get().max(r.abs_error_estimate));
            Ok(r.value)
        };
        let osc = Oscillation::new(osc_x.base, osc_x.own);
        try_integrate_semi_infinite(Integrand1D { f: g, decay: outer_decay, oscillation: osc }, outer_tol)?
    };
    Ok(QuadResult {
        value: outer.value,
        abs_error_estimate: outer.abs_error_estimate + inner_err.get() * x_end,
        evaluations: inner_evals.get(),
    })
}

/// Limit as `ε → 0⁺` of `F(ε)`, sampled on `ε_j = ε₀·2^{−j}`, `j < points`,
/// and extrapolated to `ε = 0` with Neville's scheme.
///
/// `F` receives `(ε, tol)` and must return its value to that tolerance. The
/// reported error is the change from dropping the coarsest sample plus the
/// sampled errors amplified by the Lebesgue constant of extrapolation.
pub fn regularized_limit<T, G>(mut g: G, eps0: T, points: usize, tol: T) -> Result<QuadResult<T>>
where
    T: Real,
    G: FnMut(T, T) -> Result<QuadResult<T>>,
{
    check_tol(tol)?;
    if points < 3 || !(eps0 > T::zero()) {
        return Err(Error::domain("regularized limit needs eps0 > 0 and at least 3 points"));
    }
    let eps: Vec<T> = (0..points).map(|j| eps0 * T::lit(-(j as f64)).exp2()).collect();
    let lebesgue: T = (0..points)
        .map(|j| {
            (0..points)
                .filter(|&i| i != j)
                .fold(T::one(), |acc, i| acc * eps[i] / (eps[i] - eps[j]))
                .abs()
        })
        .sum();
    let sample_tol = (tol / (T::lit(4.0) * lebesgue)).max(T::min_tol());
    let mut values = Vec::with_capacity(points);
    let mut max_err = T::zero();
    let mut evaluations = 0;
    for &e in &eps {
        let r = g(e, sample_tol)?;
        values.push(r.value);
        max_err = max_err.max(r.abs_error_estimate);
        evaluations += r.evaluations;
    }
    let full = neville_at_zero(&eps, &values);
    let reduced = neville_at_zero(&eps[1..], &values[1..]);
    Ok(QuadResult {
        value: full,
        abs_error_estimate: (full - reduced).abs() + lebesgue * max_err,
        evaluations,
    })
}

/// Value at 0 of the interpolating polynomial through `(xs[i], ys[i])`.
pub fn neville_at_zero<T: Real>(xs: &[T], ys: &[T]) -> T {
    let mut p = ys.to_vec();
    let n = xs.len();
    for k in 1..n {
        for i in 0..n - k {
            p[i] = (xs[i + k] * p[i] - xs[i] * p[i + 1]) / (xs[i + k] - xs[i]);
        }
    }
    p[0]
}

/// Panel endpoints on `[0, x_end]`, each panel at most one local period wide.
fn breakpoints<T: Real>(x_end: T, osc: Oscillation<T>) -> Result<Vec<T>> {
    let two_pi = T::lit(2.0) * T::PI();
    let width = |x: T| {
        let w = osc.at(x);
        if w > two_pi { two_pi / w } else { T::one() }
    };
    let mut breaks = vec![T::zero()];
    let mut x = T::zero();
    while x < x_end {
        let w = width(x);
        let w = w.min(width(x + w));
        x = if x + w >= x_end - w * T::lit(0.25) { x_end } else { x + w };
        breaks.push(x);
        if breaks.len() > MAX_PANELS {
            return Err(Error::domain("oscillation too fast for the panel budget"));
        }
    }
    Ok(breaks)
}

struct Panel<T> {
    a: T,
    b: T,
    level: usize,
    sum: T,
    abs_sum: T,
    value: T,
    est: T,
    settled: bool,
}

impl<T: Real> Panel<T> {
    fn new<F: FnMut(T) -> Result<T>>(a: T, b: T, f: &mut F, evals: &mut u64) -> Result<Self> {
        let table = T::node_table();
        let r = (b - a) * T::lit(0.5);
        let fc = f(a + r)?;
        *evals += 1;
        let mut p = Panel {
            a,
            b,
            level: 0,
            sum: table.center_weight * fc,
            abs_sum: table.center_weight * fc.abs(),
            value: T::zero(),
            est: T::zero(),
            settled: false,
        };
        p.accumulate(0, f, evals)?;
        p.value = r * p.sum;
        for _ in 1..=MIN_LEVEL {
            p.refine(f, evals)?;
        }
        Ok(p)
    }

    fn accumulate<F: FnMut(T) -> Result<T>>(&mut self, level: usize, f: &mut F, evals: &mut u64) -> Result<()> {
        let r = (self.b - self.a) * T::lit(0.5);
        let mut s = T::zero();
        let mut sa = T::zero();
        for &(d, w) in &T::node_table().levels[level] {
            let off = r * d;
            let fl = f(self.a + off)?;
            let fr = f(self.b - off)?;
            s += w * (fl + fr);
            sa += w * (fl.abs() + fr.abs());
        }
        *evals += 2 * T::node_table().levels[level].len() as u64;
        self.sum += s;
        self.abs_sum += sa;
        Ok(())
    }

    fn refine<F: FnMut(T) -> Result<T>>(&mut self, f: &mut F, evals: &mut u64) -> Result<()> {
        self.level += 1;
        self.accumulate(self.level, f, evals)?;
        let r = (self.b - self.a) * T::lit(0.5);
        let h = T::lit(-(self.level as f64)).exp2();
        let next = r * h * self.sum;
        self.est = (next - self.value).abs();
        self.value = next;
        let noise = T::lit(64.0) * T::epsilon() * r * h * self.abs_sum;
        self.settled = self.est <= noise;
        Ok(())
    }
}

fn adapt<T, F>(f: &mut F, breaks: &[T], budget: T, max_level: usize) -> Result<(T, T, u64)>
where
    T: Real,
    F: FnMut(T) -> Result<T>,
{
    let mut evals = 0u64;
    let mut panels = Vec::with_capacity(breaks.len().saturating_sub(1));
    for w in breaks.windows(2) {
        panels.push(Panel::new(w[0], w[1], f, &mut evals)?);
    }
    loop {
        let total: T = panels.iter().map(|p| p.est).sum();
        if total <= budget {
            break;
        }
        let open = |p: &Panel<T>| !p.settled && p.level < max_level;
        let worst = panels.iter().filter(|p| open(p)).map(|p| p.est).fold(T::zero(), T::max);
        if worst == T::zero() {
            if panels.iter().any(|p| !p.settled) {
                return Err(Error::NonConvergence { estimate: total.as_f64(), tol: budget.as_f64() });
            }
            break;
        }
        let threshold = worst * T::lit(0.1);
        for p in panels.iter_mut().filter(|p| !p.settled && p.level < max_level && p.est >= threshold) {
            p.refine(f, &mut evals)?;
        }
    }
    let value = neumaier(panels.iter().map(|p| p.value));
    let est: T = panels.iter().map(|p| p.est).sum();
    Ok((value, est, evals))
}

/// Compensated (Neumaier) summation.
pub fn neumaier<T: Real>(terms: impl IntoIterator<Item = T>) -> T {
    let mut sum = T::zero();
    let mut comp = T::zero();
    for t in terms {
        let s = sum + t;
        if sum.abs() >= t.abs() {
            comp += (sum - s) + t;
        } else {
            comp += (t - s) + sum;
        }
        sum = s;
    }
    sum + comp
}
