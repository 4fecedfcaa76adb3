//! Hyperbolic kernel catalog, complete elliptic integrals and order-zero
//! Bessel functions.

pub mod bessel;
pub mod elliptic;
pub mod kernels;

pub use bessel::{bessel_j0, bessel_k0, bessel_k0_imag, bessel_y0, BesselValue};
pub use elliptic::{agm, dn_quarter_check, elliptic_e, elliptic_k, modulus_from_ratio, series_k_check, EllipticValues};
pub use kernels::{kernel_eval_1d, kernel_eval_2d, Kernel, KernelDescriptor};

use crate::real::Real;

const SMALL: f64 = 1e-6;

/// `sin z / z`, equal to 1 at 0.
#[inline]
pub fn sinc<T: Real>(z: T) -> T {
    if z.abs() < T::lit(SMALL) {
        let z2 = z * z;
        T::one() - z2 / T::lit(6.0) + z2 * z2 / T::lit(120.0)
    } else {
        z.sin() / z
    }
}

/// `sinh z / z`, equal to 1 at 0.
#[inline]
pub fn shc<T: Real>(z: T) -> T {
    if z.abs() < T::lit(SMALL) {
        let z2 = z * z;
        T::one() + z2 / T::lit(6.0) + z2 * z2 / T::lit(120.0)
    } else {
        z.sinh() / z
    }
}

#[inline]
pub fn sech<T: Real>(z: T) -> T {
    let a = z.abs();
    if a > T::lit(700.0) {
        T::zero()
    } else {
        T::one() / a.cosh()
    }
}
