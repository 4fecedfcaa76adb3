//! Fourier cosine and sine transforms on the half line and the quadrant,
//! normalised as `√(2/π)∫₀^∞` and `(2/π)∫∫`, computed by direct quadrature at
//! each target point.

use crate::error::{Error, Result};
use crate::quad::{
    integrate_quadrant, integrate_semi_infinite, AxisOscillation, Integrand1D, Integrand2D, QuadResult,
};
use crate::real::Real;
use crate::specfun::kernels::KernelDescriptor;

/// Default residual grid.
pub const DEFAULT_GRID: [f64; 6] = [0.0, 0.25, 0.5, 1.0, 2.0, 4.0];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TransformKind {
    Cosine,
    Sine,
    CosCos,
    SinSin,
    /// Cosine in `x`, sine in `y`.
    CosSin,
}

impl TransformKind {
    pub fn dim(self) -> usize {
        match self {
            TransformKind::Cosine | TransformKind::Sine => 1,
            _ => 2,
        }
    }

    fn trig<T: Real>(sine: bool, z: T) -> T {
        if sine {
            z.sin()
        } else {
            z.cos()
        }
    }

    fn sines(self) -> (bool, bool) {
        match self {
            TransformKind::Cosine | TransformKind::CosCos => (false, false),
            TransformKind::Sine | TransformKind::SinSin => (true, true),
            TransformKind::CosSin => (false, true),
        }
    }
}

fn check_kind<T: Real>(desc: &KernelDescriptor<T>, kind: TransformKind) -> Result<()> {
    if desc.dim() != kind.dim() {
        return Err(Error::domain(format!(
            "{:?} transform does not apply to the {}-dimensional kernel {}",
            kind,
            desc.dim(),
            desc.name()
        )));
    }
    Ok(())
}

/// `√(2/π)∫₀^∞ f(x)·{cos, sin}(tx) dx`.
pub fn fourier_1d<T: Real>(desc: &KernelDescriptor<T>, kind: TransformKind, t: T, tol: T) -> Result<T> {
    Ok(fourier_1d_result(desc, kind, t, tol)?.value)
}

/// As [`fourier_1d`], with the quadrature error estimate and cost.
pub fn fourier_1d_result<T: Real>(
    desc: &KernelDescriptor<T>,
    kind: TransformKind,
    t: T,
    tol: T,
) -> Result<QuadResult<T>> {
    check_kind(desc, kind)?;
    let norm = (T::FRAC_2_PI()).sqrt();
    let sine = kind.sines().0;
    let f = Integrand1D::new(|x: T| desc.value(x) * TransformKind::trig(sine, t * x), desc.decay())
        .oscillating(t, T::zero());
    Ok(integrate_semi_infinite(f, (tol / norm).max(T::min_tol()))?.scale(norm))
}

/// `(2/π)∫∫ f(x, y)·{cos, sin}(tx)·{cos, sin}(sy) dx dy`.
pub fn fourier_2d<T: Real>(desc: &KernelDescriptor<T>, kind: TransformKind, t: T, s: T, tol: T) -> Result<T> {
    Ok(fourier_2d_result(desc, kind, t, s, tol)?.value)
}

pub fn fourier_2d_result<T: Real>(
    desc: &KernelDescriptor<T>,
    kind: TransformKind,
    t: T,
    s: T,
    tol: T,
) -> Result<QuadResult<T>> {
    check_kind(desc, kind)?;
    let norm = T::FRAC_2_PI();
    let (sx, sy) = kind.sines();
    let (dx, dy) = desc.decay_xy();
    let osc_y = desc.oscillation_y();
    let f = Integrand2D::new(
        |x: T, y: T| desc.value_2d(x, y) * TransformKind::trig(sx, t * x) * TransformKind::trig(sy, s * y),
        dx,
        dy,
    )
    .oscillating_x(t, T::zero())
    .with_osc_y(AxisOscillation { base: osc_y.base + s.abs(), ..osc_y });
    Ok(integrate_quadrant(f, (tol / norm).max(T::min_tol()))?.scale(norm))
}

/// `max_t |F(f)(t) − f(t)|` over `grid`.
pub fn self_reciprocity_residual<T: Real>(
    desc: &KernelDescriptor<T>,
    kind: TransformKind,
    grid: &[T],
    tol: T,
) -> Result<T> {
    if grid.is_empty() || grid.iter().any(|&t| !(t >= T::zero())) {
        return Err(Error::domain("residual grid must be non-empty with entries ≥ 0"));
    }
    grid.iter().try_fold(T::zero(), |worst, &t| {
        Ok(worst.max((fourier_1d(desc, kind, t, tol)? - desc.value(t)).abs()))
    })
}

/// `max |F(f)(a, b) − f(a, b)|` over the probe points of a 2D kernel.
pub fn self_reciprocity_residual_2d<T: Real>(
    desc: &KernelDescriptor<T>,
    kind: TransformKind,
    points: &[(T, T)],
    tol: T,
) -> Result<T> {
    if points.is_empty() {
        return Err(Error::domain("probe list must be non-empty"));
    }
    points.iter().try_fold(T::zero(), |worst, &(a, b)| {
        Ok(worst.max((fourier_2d(desc, kind, a, b, tol)? - desc.value_2d(a, b)).abs()))
    })
}

/// Cosine transform in the first slot only:
/// `g(a, y) = √(2/π)∫₀^∞ f(x, y)·cos(ax) dx`.
pub fn partial_transform<T: Real>(desc: &KernelDescriptor<T>, a: T, y: T, tol: T) -> Result<QuadResult<T>> {
    if desc.dim() != 2 {
        return Err(Error::domain(format!("{} is not a two-dimensional kernel", desc.name())));
    }
    let norm = (T::FRAC_2_PI()).sqrt();
    let osc = desc.oscillation_y();
    // By symmetry the x-axis oscillation mirrors the y-axis hint with y fixed.
    let freq = a.abs() + osc.cross * y.abs() + osc.own_cross_sq * y * y;
    let f = Integrand1D::new(|x: T| desc.value_2d(x, y) * (a * x).cos(), desc.decay_xy().0).oscillating(freq, T::zero());
    Ok(integrate_semi_infinite(f, (tol / norm).max(T::min_tol()))?.scale(norm))
}

/// `max |g(a, y) − g(y, a)|` over `pairs`, `g` the partial transform.
pub fn partial_transform_symmetry_check<T: Real>(desc: &KernelDescriptor<T>, pairs: &[(T, T)], tol: T) -> Result<T> {
    pairs.iter().try_fold(T::zero(), |worst, &(a, y)| {
        let g1 = partial_transform(desc, a, y, tol)?.value;
        let g2 = partial_transform(desc, y, a, tol)?.value;
        Ok(worst.max((g1 - g2).abs()))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::kernels::Kernel;

    fn d(k: Kernel<f64>) -> KernelDescriptor<f64> {
        KernelDescriptor::new(k).unwrap()
    }

    #[test]
    fn gaussian_is_its_own_cosine_transform() {
        let g = d(Kernel::GaussHalf);
        let v = fourier_1d(&g, TransformKind::Cosine, 1.3, 1e-12).unwrap();
        assert!((v - (-0.5f64 * 1.3 * 1.3).exp()).abs() < 1e-11);
    }

    #[test]
    fn kind_must_match_dimension() {
        assert!(fourier_1d(&d(Kernel::Cos1), TransformKind::Cosine, 1.0, 1e-8).is_err());
        assert!(fourier_2d(&d(Kernel::Src(1)), TransformKind::CosCos, 1.0, 1.0, 1e-8).is_err());
        assert!(self_reciprocity_residual(&d(Kernel::Src(1)), TransformKind::Cosine, &[], 1e-8).is_err());
    }

    #[test]
    fn diagonal_symmetry_is_exact() {
        let r = partial_transform_symmetry_check(&d(Kernel::Cos1), &[(0.7, 0.7), (1.9, 1.9)], 1e-10).unwrap();
        assert_eq!(r, 0.0);
    }

    #[test]
    fn sinsin_partial_transform_closed_form() {
        // √(2/π)·(√π/2)·sinh(√π y)/(cosh √π y + cosh √π a), divided by sinh √π y.
        let (a, y) = (0.2f64, 0.9f64);
        let rp = std::f64::consts::PI.sqrt();
        let g = partial_transform(&d(Kernel::SinSin), a, y, 1e-12).unwrap().value;
        let closed = 1.0 / (2f64.sqrt() * ((rp * y).cosh() + (rp * a).cosh()));
        assert!((g - closed).abs() < 1e-10);
    }
}
