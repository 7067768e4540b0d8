//! Scalar abstraction shared by every formula in the crate.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive};

/// Real floating-point scalar: `f32` or `f64`.
pub trait Real:
    Float + FloatConst + FromPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Converts an `f64` literal into the scalar type.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable in scalar type")
    }

    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Hyperbolic cotangent for `x > 0`.
///
/// Written as `1 + 2/expm1(2x)` so that small arguments keep full relative
/// precision, and saturated to one past `x = 40`.
#[inline]
pub fn coth<T: Real>(x: T) -> T {
    if x > T::lit(40.0) {
        return T::one();
    }
    let two = T::lit(2.0);
    T::one() + two / (two * x).exp_m1()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coth_matches_reciprocal_tanh() {
        for &x in &[1e-6, 1e-3, 0.1, 0.5, 1.0, 3.0, 10.0, 39.0] {
            let want = 1.0 / f64::tanh(x);
            assert!((coth(x) - want).abs() <= 1e-14 * want, "x = {x}");
        }
    }

    #[test]
    fn coth_saturates() {
        assert_eq!(coth(41.0_f64), 1.0);
        assert_eq!(coth(1e6_f64), 1.0);
        assert_eq!(coth(1e6_f32), 1.0);
    }

    #[test]
    fn coth_small_argument_is_reciprocal() {
        let x = 1e-9_f64;
        assert!((coth(x) * x - 1.0).abs() < 1e-15);
    }
}
