//! Catalog of the hyperbolic integrands.
//!
//! Every kernel carries a decay envelope that dominates it on `[0, ∞)` (or
//! on the quadrant) and evaluates finitely everywhere, removable
//! singularities included. Ratios of hyperbolic functions are evaluated in
//! factored exponential form so that large arguments do not overflow.

use crate::error::{Error, Result};
use crate::quad::{AxisOscillation, Decay};
use crate::real::Real;
use crate::specfun::{sech, shc, sinc};

/// Kernel family and its parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Kernel<T> {
    /// Cosine self-reciprocal functions, numbered 1 to 5.
    Src(u8),
    /// Sine self-reciprocal functions, numbered 1 to 4.
    Srs(u8),
    /// `e^{−x²/2}`
    GaussHalf,
    /// `e^{−x²}/cosh αx`
    Hr1 { alpha: T },
    /// `cosh(αx/2)/cosh(αx)·e^{−x²}`
    Hr2 { alpha: T },
    /// `sinh(αx/2)/cosh(αx)·x·e^{−x²}`
    Hr3 { alpha: T },
    /// Summand `1/(cosh βn − cos θ)` of `f_β(θ)`.
    FBeta { beta: T, theta: T },
    /// `1/(cosh √π x + cosh √π y)`
    Cos1,
    /// `sin xy/(sinh √π x · sinh √π y)`
    SinSin,
    /// `cos xy/(cosh c x · cosh c y)`, `c = √(π/2)`
    F1,
    /// `(1 − cos xy)/(sinh √π x · sinh √π y)`
    OneMinusCos,
    /// Mixed kernels with scale `p`: `cos xy` (1) or `sin xy` (2) over
    /// `cosh px · cosh(πy/p)`.
    Ki { which: u8, p: T },
    /// `2 cos xy` (3) or `2 sin xy` (4) over `(1 + 2cosh x)(1 + 2cosh(2πy/3))`.
    Ki34 { which: u8 },
    /// `cos(x²y²/π)` or `sin(x²y²/π)` over `cosh x² · cosh y²`.
    Lattice { sine: bool },
    /// `cosh(x²/2)/cosh x²` or `sinh(x²/2)/cosh x²`.
    LatticeMarginal { sine: bool },
}

/// A validated kernel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelDescriptor<T> {
    kernel: Kernel<T>,
}

fn positive<T: Real>(name: &str, v: T) -> Result<()> {
    if v > T::zero() && v.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!("kernel parameter {name} must be positive, got {v}")))
    }
}

impl<T: Real> KernelDescriptor<T> {
    pub fn new(kernel: Kernel<T>) -> Result<Self> {
        match kernel {
            Kernel::Src(i) if !(1..=5).contains(&i) => return Err(Error::domain(format!("no SRC{i} kernel"))),
            Kernel::Srs(i) if !(1..=4).contains(&i) => return Err(Error::domain(format!("no SRS{i} kernel"))),
            Kernel::Hr1 { alpha } | Kernel::Hr2 { alpha } | Kernel::Hr3 { alpha } => positive("alpha", alpha)?,
            Kernel::FBeta { beta, theta } => {
                positive("beta", beta)?;
                if !(theta > T::zero() && theta < T::PI()) {
                    return Err(Error::domain(format!("theta must lie in (0, π), got {theta}")));
                }
            }
            Kernel::Ki { which, p } => {
                positive("p", p)?;
                if !(1..=2).contains(&which) {
                    return Err(Error::domain(format!("no KI{which} kernel with scale p")));
                }
            }
            Kernel::Ki34 { which } if !(3..=4).contains(&which) => {
                return Err(Error::domain(format!("no KI{which} kernel without scale")))
            }
            _ => {}
        }
        Ok(KernelDescriptor { kernel })
    }

    pub fn kernel(&self) -> Kernel<T> {
        self.kernel
    }

    pub fn name(&self) -> String {
        match self.kernel {
            Kernel::Src(i) => format!("SRC{i}"),
            Kernel::Srs(i) => format!("SRS{i}"),
            Kernel::GaussHalf => "GAUSS_HALF".into(),
            Kernel::Hr1 { .. } => "KHR1".into(),
            Kernel::Hr2 { .. } => "KHR2".into(),
            Kernel::Hr3 { .. } => "KHR3".into(),
            Kernel::FBeta { .. } => "KFBETA".into(),
            Kernel::Cos1 => "K2D_COS1".into(),
            Kernel::SinSin => "K2D_SINSIN".into(),
            Kernel::F1 => "K2D_F1".into(),
            Kernel::OneMinusCos => "K2D_ONEMINUSCOS".into(),
            Kernel::Ki { which, .. } | Kernel::Ki34 { which } => format!("KI{which}"),
            Kernel::Lattice { sine: false } => "K2D_LATTICE_COS".into(),
            Kernel::Lattice { sine: true } => "K2D_LATTICE_SIN".into(),
            Kernel::LatticeMarginal { sine: false } => "KLATTICE_COSH".into(),
            Kernel::LatticeMarginal { sine: true } => "KLATTICE_SINH".into(),
        }
    }

    pub fn dim(&self) -> usize {
        match self.kernel {
            Kernel::Cos1
            | Kernel::SinSin
            | Kernel::F1
            | Kernel::OneMinusCos
            | Kernel::Ki { .. }
            | Kernel::Ki34 { .. }
            | Kernel::Lattice { .. } => 2,
            _ => 1,
        }
    }

    /// Whether the kernel is odd in `x` (1D kernels only).
    pub fn is_odd(&self) -> bool {
        matches!(self.kernel, Kernel::Srs(_))
    }

    /// Value at `x`; the caller guarantees `dim() == 1`.
    #[inline]
    pub fn value(&self, x: T) -> T {
        let k = Consts::<T>::new();
        let ax = x.abs();
        let odd = x.signum();
        let half = T::lit(0.5);
        match self.kernel {
            Kernel::Src(1) => sech(k.rt_half_pi * x),
            Kernel::Src(2) => ratio(true, k.rt_pi * half, k.rt_pi, T::zero(), ax),
            Kernel::Src(3) => half * ratio(true, T::zero(), k.rt_2pi_3, -half, ax),
            Kernel::Src(4) => half * ratio(true, k.rt_3pi * half, k.rt_4pi_3, half, ax),
            Kernel::Src(_) => ratio(true, k.rt_3pi_2, k.rt_2pi, (T::lit(3.0).sqrt() * T::PI()).cos(), ax),
            Kernel::Srs(1) => odd * ratio(false, k.rt_pi * half, k.rt_pi, T::zero(), ax),
            Kernel::Srs(2) => odd * half * ratio(false, k.rt_pi_6, k.rt_2pi_3, half, ax),
            Kernel::Srs(3) => odd * ratio(false, k.rt_2pi_3, k.rt_3pi_2, T::zero(), ax),
            Kernel::Srs(_) => odd * ratio(false, k.rt_pi, k.rt_2pi, (T::SQRT_2() * T::PI()).cos(), ax),
            Kernel::GaussHalf => (-half * x * x).exp(),
            Kernel::Hr1 { alpha } => (-x * x).exp() * sech(alpha * x),
            Kernel::Hr2 { alpha } => (-x * x).exp() * ratio(true, alpha * half, alpha, T::zero(), ax),
            Kernel::Hr3 { alpha } => x * (-x * x).exp() * odd * ratio(false, alpha * half, alpha, T::zero(), ax),
            Kernel::FBeta { beta, theta } => T::one() / ((beta * x).cosh() - theta.cos()),
            Kernel::LatticeMarginal { sine } => {
                ratio(!sine, half * x * x, x * x, T::zero(), T::one())
            }
            _ => T::nan(),
        }
    }

    /// Value at `(x, y)`; the caller guarantees `dim() == 2`.
    #[inline]
    pub fn value_2d(&self, x: T, y: T) -> T {
        let k = Consts::<T>::new();
        let half = T::lit(0.5);
        match self.kernel {
            Kernel::Cos1 => T::one() / ((k.rt_pi * x).cosh() + (k.rt_pi * y).cosh()),
            Kernel::SinSin => sinc(x * y) / (T::PI() * shc(k.rt_pi * x) * shc(k.rt_pi * y)),
            Kernel::F1 => (x * y).cos() * sech(k.rt_half_pi * x) * sech(k.rt_half_pi * y),
            Kernel::OneMinusCos => {
                let s = sinc(half * x * y);
                x * y * s * s / (T::lit(2.0) * T::PI() * shc(k.rt_pi * x) * shc(k.rt_pi * y))
            }
            Kernel::Ki { which, p } => {
                let trig = if which == 1 { (x * y).cos() } else { (x * y).sin() };
                trig * sech(p * x) * sech(T::PI() * y / p)
            }
            Kernel::Ki34 { which } => {
                let trig = if which == 3 { (x * y).cos() } else { (x * y).sin() };
                let two = T::lit(2.0);
                let tpi3 = two * T::PI() / T::lit(3.0);
                two * trig * ratio(true, T::zero(), T::one(), -half, x) * ratio(true, T::zero(), tpi3, -half, y)
                    * T::lit(0.25)
            }
            Kernel::Lattice { sine } => {
                let arg = x * x * y * y / T::PI();
                let trig = if sine { arg.sin() } else { arg.cos() };
                trig * sech(x * x) * sech(y * y)
            }
            _ => T::nan(),
        }
    }

    /// Decay envelope of a 1D kernel.
    pub fn decay(&self) -> Decay<T> {
        let k = Consts::<T>::new();
        let half = T::lit(0.5);
        match self.kernel {
            Kernel::Src(1) => Decay::exp(k.rt_half_pi).with_amplitude(T::lit(2.0)),
            Kernel::Src(2) => Decay::exp(half * k.rt_pi).with_amplitude(T::lit(2.0)),
            Kernel::Src(3) => Decay::exp(k.rt_2pi_3),
            Kernel::Src(4) => Decay::exp(k.rt_4pi_3 - half * k.rt_3pi).with_amplitude(T::lit(4.0 / 3.0)),
            Kernel::Src(_) => Decay::exp(k.rt_2pi - k.rt_3pi_2).with_amplitude(T::lit(4.0)),
            Kernel::Srs(1) => Decay::exp(half * k.rt_pi),
            Kernel::Srs(2) => Decay::exp(k.rt_2pi_3 - k.rt_pi_6).with_amplitude(T::lit(2.0 / 3.0)),
            Kernel::Srs(3) => Decay::exp(k.rt_3pi_2 - k.rt_2pi_3),
            Kernel::Srs(_) => Decay::exp(k.rt_2pi - k.rt_pi),
            Kernel::GaussHalf => Decay::gauss(half),
            Kernel::Hr1 { .. } | Kernel::Hr2 { .. } => Decay::gauss(T::one()),
            Kernel::Hr3 { .. } => Decay::gauss(half),
            Kernel::FBeta { beta, theta } => {
                Decay::exp(beta).with_amplitude(T::lit(2.0) / (T::one() - theta.cos()))
            }
            Kernel::LatticeMarginal { .. } => Decay::gauss(half).with_amplitude(T::lit(2.0)),
            _ => Decay::exp(T::one()),
        }
    }

    /// Per-axis decay envelopes of a 2D kernel.
    pub fn decay_xy(&self) -> (Decay<T>, Decay<T>) {
        let k = Consts::<T>::new();
        let two = T::lit(2.0);
        match self.kernel {
            Kernel::Cos1 => {
                let d = Decay::exp(T::lit(0.5) * k.rt_pi);
                (d, d)
            }
            Kernel::SinSin | Kernel::OneMinusCos => {
                let d = Decay::exp(T::lit(0.75) * k.rt_pi).with_amplitude(two);
                (d, d)
            }
            Kernel::F1 => {
                let d = Decay::exp(k.rt_half_pi).with_amplitude(two);
                (d, d)
            }
            Kernel::Ki { p, .. } => {
                (Decay::exp(p).with_amplitude(two), Decay::exp(T::PI() / p).with_amplitude(two))
            }
            Kernel::Ki34 { .. } => (
                Decay::exp(T::one()).with_amplitude(two),
                Decay::exp(two * T::PI() / T::lit(3.0)),
            ),
            Kernel::Lattice { .. } => {
                let d = Decay::gauss(T::one()).with_amplitude(two);
                (d, d)
            }
            _ => (self.decay(), self.decay()),
        }
    }

    /// Oscillation of the inner (`y`) integrand as a function of `x`.
    pub fn oscillation_y(&self) -> AxisOscillation<T> {
        match self.kernel {
            Kernel::SinSin | Kernel::F1 | Kernel::OneMinusCos | Kernel::Ki { .. } | Kernel::Ki34 { .. } => {
                AxisOscillation { base: T::zero(), own: T::zero(), cross: T::one(), own_cross_sq: T::zero() }
            }
            Kernel::Lattice { .. } => AxisOscillation {
                base: T::zero(),
                own: T::zero(),
                cross: T::zero(),
                own_cross_sq: T::lit(2.0) / T::PI(),
            },
            _ => AxisOscillation::default(),
        }
    }
}

/// Evaluates a 1D kernel.
pub fn kernel_eval_1d<T: Real>(desc: &KernelDescriptor<T>, x: T) -> Result<T> {
    if desc.dim() != 1 {
        return Err(Error::domain(format!("{} is a two-dimensional kernel", desc.name())));
    }
    Ok(desc.value(x))
}

/// Evaluates a 2D kernel.
pub fn kernel_eval_2d<T: Real>(desc: &KernelDescriptor<T>, x: T, y: T) -> Result<T> {
    if desc.dim() != 2 {
        return Err(Error::domain(format!("{} is a one-dimensional kernel", desc.name())));
    }
    Ok(desc.value_2d(x, y))
}

struct Consts<T> {
    rt_pi: T,
    rt_half_pi: T,
    rt_2pi: T,
    rt_3pi: T,
    rt_2pi_3: T,
    rt_4pi_3: T,
    rt_3pi_2: T,
    rt_pi_6: T,
}

impl<T: Real> Consts<T> {
    #[inline]
    fn new() -> Self {
        let pi = T::PI();
        Consts {
            rt_pi: pi.sqrt(),
            rt_half_pi: (pi / T::lit(2.0)).sqrt(),
            rt_2pi: (T::lit(2.0) * pi).sqrt(),
            rt_3pi: (T::lit(3.0) * pi).sqrt(),
            rt_2pi_3: (T::lit(2.0) * pi / T::lit(3.0)).sqrt(),
            rt_4pi_3: (T::lit(4.0) * pi / T::lit(3.0)).sqrt(),
            rt_3pi_2: (T::lit(3.0) * pi / T::lit(2.0)).sqrt(),
            rt_pi_6: (pi / T::lit(6.0)).sqrt(),
        }
    }
}

/// `cosh(a·x)/(cosh(b·x) − c)` (or `sinh` on top) for `x ≥ 0`, `|c| < 1`,
/// written as `e^{(a−b)x}·(1 ± e^{−2ax})/(1 + e^{−2bx} − 2c·e^{−bx})`.
#[inline]
pub(crate) fn ratio<T: Real>(cosh_top: bool, a: T, b: T, c: T, x: T) -> T {
    let ea = (-T::lit(2.0) * a * x).exp();
    let eb = (-b * x).exp();
    let top = if cosh_top { T::one() + ea } else { T::one() - ea };
    ((a - b) * x).exp() * top / (T::one() + eb * eb - T::lit(2.0) * c * eb)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(k: Kernel<f64>) -> KernelDescriptor<f64> {
        KernelDescriptor::new(k).unwrap()
    }

    #[test]
    fn catalog_values_at_origin() {
        assert_eq!(kernel_eval_1d(&d(Kernel::Src(1)), 0.0).unwrap(), 1.0);
        assert_eq!(kernel_eval_1d(&d(Kernel::Srs(1)), 0.0).unwrap(), 0.0);
        let fb = d(Kernel::FBeta { beta: 1.0, theta: std::f64::consts::FRAC_PI_2 });
        assert!((kernel_eval_1d(&fb, 0.0).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(kernel_eval_2d(&d(Kernel::Cos1), 0.0, 0.0).unwrap(), 0.5);
        let x = 0.8;
        let c = (std::f64::consts::PI / 2.0).sqrt();
        assert!((kernel_eval_2d(&d(Kernel::F1), x, 0.0).unwrap() - 1.0 / (c * x).cosh()).abs() < 1e-15);
    }

    #[test]
    fn sinsin_limit_on_axis() {
        let rp = std::f64::consts::PI.sqrt();
        let k = d(Kernel::SinSin);
        let exact = 1.0 / (rp * rp.sinh());
        assert!((kernel_eval_2d(&k, 0.0, 1.0).unwrap() - exact).abs() < 1e-15);
        // Third-order expansion in x of sin(xy)/(sinh(√π x) sinh(√π y)) at y = 1.
        let x: f64 = 1e-6;
        let series = (1.0 - x * x / 6.0) / (rp.sinh() * rp * (1.0 + std::f64::consts::PI * x * x / 6.0));
        assert!((kernel_eval_2d(&k, x, 1.0).unwrap() - series).abs() < 1e-12);
        assert_eq!(kernel_eval_2d(&d(Kernel::OneMinusCos), 0.0, 2.0).unwrap(), 0.0);
    }

    #[test]
    fn factored_ratios_match_direct_formulas() {
        let rp = std::f64::consts::PI.sqrt();
        for &x in &[0.0, 0.3, 1.7, 4.0] {
            let direct = [
                (rp * x / 2.0).cosh() / (rp * x).cosh(),
                1.0 / (1.0 + 2.0 * ((2.0 * std::f64::consts::PI / 3.0).sqrt() * x).cosh()),
                ((3.0 * std::f64::consts::PI).sqrt() * x / 2.0).cosh()
                    / (2.0 * ((4.0 * std::f64::consts::PI / 3.0).sqrt() * x).cosh() - 1.0),
                ((1.5 * std::f64::consts::PI).sqrt() * x).cosh()
                    / (((2.0 * std::f64::consts::PI).sqrt() * x).cosh() - ((3f64).sqrt() * std::f64::consts::PI).cos()),
            ];
            for (i, v) in direct.iter().enumerate() {
                let got = d(Kernel::Src(i as u8 + 2)).value(x);
                assert!((got - v).abs() < 1e-15 * v.abs().max(1.0), "SRC{} at {x}", i + 2);
            }
            let s4 = (rp * x).sinh()
                / (((2.0 * std::f64::consts::PI).sqrt() * x).cosh() - (std::f64::consts::SQRT_2 * std::f64::consts::PI).cos());
            assert!((d(Kernel::Srs(4)).value(x) - s4).abs() < 1e-15);
        }
    }

    #[test]
    fn parity() {
        for &x in &[0.1, 0.9, 2.5] {
            for i in 1..=5 {
                let k = d(Kernel::Src(i));
                assert_eq!(k.value(x), k.value(-x));
            }
            for i in 1..=4 {
                let k = d(Kernel::Srs(i));
                assert_eq!(k.value(x), -k.value(-x));
            }
        }
    }

    #[test]
    fn envelopes_dominate_kernels() {
        let one_d = [
            Kernel::Src(1),
            Kernel::Src(2),
            Kernel::Src(3),
            Kernel::Src(4),
            Kernel::Src(5),
            Kernel::Srs(1),
            Kernel::Srs(2),
            Kernel::Srs(3),
            Kernel::Srs(4),
            Kernel::GaussHalf,
            Kernel::Hr1 { alpha: 0.7 },
            Kernel::Hr2 { alpha: 3.0 },
            Kernel::Hr3 { alpha: 0.4 },
            Kernel::FBeta { beta: 2.0, theta: 1.0 },
            Kernel::LatticeMarginal { sine: false },
            Kernel::LatticeMarginal { sine: true },
        ];
        for k in one_d {
            let k = d(k);
            let env = k.decay();
            for i in 0..=400 {
                let x = i as f64 * 0.1;
                assert!(k.value(x).abs() <= env.envelope(x) * (1.0 + 1e-12), "{} at {x}", k.name());
            }
        }
        let two_d = [
            Kernel::Cos1,
            Kernel::SinSin,
            Kernel::F1,
            Kernel::OneMinusCos,
            Kernel::Ki { which: 1, p: 1.3 },
            Kernel::Ki { which: 2, p: 0.8 },
            Kernel::Ki34 { which: 3 },
            Kernel::Ki34 { which: 4 },
            Kernel::Lattice { sine: false },
            Kernel::Lattice { sine: true },
        ];
        for k in two_d {
            let k = d(k);
            let (ex, ey) = k.decay_xy();
            for i in 0..=60 {
                for j in 0..=60 {
                    let (x, y) = (i as f64 * 0.25, j as f64 * 0.25);
                    let bound = ex.envelope(x) * ey.envelope(y) * (1.0 + 1e-12);
                    assert!(k.value_2d(x, y).abs() <= bound, "{} at ({x}, {y})", k.name());
                }
            }
        }
    }

    #[test]
    fn finite_on_log_grid() {
        let all = [
            Kernel::Src(1),
            Kernel::Src(5),
            Kernel::Srs(2),
            Kernel::Srs(4),
            Kernel::Hr3 { alpha: 2.0 },
            Kernel::LatticeMarginal { sine: true },
        ];
        for i in 0..=100 {
            let x = 1e-8 * (5e9f64).powf(i as f64 / 100.0);
            for k in all {
                assert!(d(k).value(x).is_finite());
            }
            for k in [Kernel::SinSin, Kernel::OneMinusCos, Kernel::Cos1, Kernel::Ki34 { which: 4 }] {
                assert!(d(k).value_2d(x, x).is_finite());
                assert!(d(k).value_2d(x, 0.0).is_finite());
            }
        }
    }

    #[test]
    fn invalid_descriptors_rejected() {
        assert!(KernelDescriptor::<f64>::new(Kernel::Src(6)).is_err());
        assert!(KernelDescriptor::new(Kernel::Hr1 { alpha: -1.0 }).is_err());
        assert!(KernelDescriptor::new(Kernel::FBeta { beta: 1.0, theta: 4.0 }).is_err());
        assert!(kernel_eval_1d(&d(Kernel::Cos1), 1.0).is_err());
        assert!(kernel_eval_2d(&d(Kernel::Src(1)), 1.0, 1.0).is_err());
    }
}
