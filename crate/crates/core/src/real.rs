//! Scalar abstraction shared by the numeric engines.

use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;
use std::sync::OnceLock;

use num_traits::{Float, FloatConst, NumAssign};

use crate::quad::NodeTable;

/// Floating-point type the engines are generic over.
///
/// Implemented for `f32` and `f64`. Every tolerance quoted in the identity
/// registry assumes `f64`; `f32` is useful for the engines alone.
pub trait Real:
    Float + FloatConst + NumAssign + Sum + Debug + Display + LowerExp + Default + Send + Sync + 'static
{
    /// Converts an `f64` literal, rounding to the nearest representable value.
    fn lit(x: f64) -> Self;

    /// Tanh-sinh abscissae and weights, built once per type.
    fn node_table() -> &'static NodeTable<Self>;

    /// Smallest quadrature tolerance the engines accept for this type.
    fn min_tol() -> Self;

    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f64 {
    #[inline]
    fn lit(x: f64) -> Self {
        x
    }

    fn node_table() -> &'static NodeTable<f64> {
        static TABLE: OnceLock<NodeTable<f64>> = OnceLock::new();
        TABLE.get_or_init(NodeTable::build)
    }

    fn min_tol() -> Self {
        1e-13
    }
}

impl Real for f32 {
    #[inline]
    fn lit(x: f64) -> Self {
        x as f32
    }

    fn node_table() -> &'static NodeTable<f32> {
        static TABLE: OnceLock<NodeTable<f32>> = OnceLock::new();
        TABLE.get_or_init(|| NodeTable::build().cast())
    }

    fn min_tol() -> Self {
        1e-5
    }
}
