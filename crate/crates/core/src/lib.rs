//! Numerical verification of self-reciprocal Fourier kernels, Mordell-type
//! integrals, Poisson-summation sums and lattice integrals.
//!
//! The engines (`quad`, `specfun`, `series`, `transforms`) are generic over
//! [`Real`], implemented for `f32` and `f64`. The identity registry works in
//! `f64`.

pub mod error;
pub mod identities;
pub mod quad;
pub mod real;
pub mod series;
pub mod specfun;
pub mod transforms;

pub use error::{Error, Result};
pub use real::Real;

pub type QuadResult64 = quad::QuadResult<f64>;
pub type SeriesResult64 = series::SeriesResult<f64>;
pub type KernelDescriptor64 = specfun::KernelDescriptor<f64>;
pub type EllipticValues64 = specfun::EllipticValues<f64>;
pub type BesselValue64 = specfun::BesselValue<f64>;
