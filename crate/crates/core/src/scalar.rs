//! Scalar abstraction for the numeric layer.

use nalgebra::RealField;
use num_traits::ToPrimitive;

/// Real scalar for the matrix computations: `f32` or `f64`.
pub trait Real: RealField + Copy + ToPrimitive {
    fn lit(x: f64) -> Self {
        nalgebra::convert(x)
    }

    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f32 {}
impl Real for f64 {}
