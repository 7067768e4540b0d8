//! Real roots of a real cubic by the trigonometric method.
//!
//! For `x^3 + A x^2 + B x + C` with `d0 = A^2 - 3B` and
//! `d1 = 2A^3 - 9AB + 27C`, the roots are
//! `-A/3 + (2/3) sqrt(d0) cos((acos(-d1 / (2 d0^{3/2})) - 2 pi k) / 3)`.
//! When the `acos` argument leaves `[-1, 1]` only one root is real and the
//! cosine continues to a `cosh`; when `d0 < 0` it continues to a `sinh`.

use serde::Serialize;

use crate::error::{OttoError, Result};
use crate::scalar::Real;

/// Half-width of the band around `|arg| = 1` routed to the repeated-root form.
pub const REPEATED_ROOT_BAND: f64 = 1e-9;

/// Coefficients of `a x^3 + b x^2 + c x + d`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CubicCoefficients<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
}

impl<T: Real> CubicCoefficients<T> {
    pub fn new(a: T, b: T, c: T, d: T) -> Result<Self> {
        if a == T::zero() {
            return Err(OttoError::DegenerateCubic);
        }
        Ok(Self { a, b, c, d })
    }

    /// `18abcd - 4b^3 d + b^2 c^2 - 4ac^3 - 27a^2 d^2`; positive iff three
    /// distinct real roots, zero iff a repeated root.
    pub fn discriminant(&self) -> T {
        let Self { a, b, c, d } = *self;
        let lit = T::lit;
        lit(18.0) * a * b * c * d - lit(4.0) * b * b * b * d + b * b * c * c
            - lit(4.0) * a * c * c * c
            - lit(27.0) * a * a * d * d
    }

    pub fn eval(&self, x: T) -> T {
        ((self.a * x + self.b) * x + self.c) * x + self.d
    }

    fn eval_with_slope(&self, x: T) -> (T, T) {
        let three = T::lit(3.0);
        let two = T::lit(2.0);
        (
            self.eval(x),
            (three * self.a * x + two * self.b) * x + self.c,
        )
    }

    /// Natural magnitude of the terms at `x`: `max_k |coef_k| |x|^k`.
    pub fn scale_at(&self, x: T) -> T {
        let ax = x.abs();
        (self.a.abs() * ax * ax * ax)
            .max(self.b.abs() * ax * ax)
            .max(self.c.abs() * ax)
            .max(self.d.abs())
    }

    /// `(A, B, C)` of the monic form.
    pub fn monic(&self) -> (T, T, T) {
        (self.b / self.a, self.c / self.a, self.d / self.a)
    }
}

fn polish<T: Real>(poly: &CubicCoefficients<T>, mut x: T) -> T {
    let mut fx = poly.eval(x).abs();
    for _ in 0..4 {
        let (f, df) = poly.eval_with_slope(x);
        if df == T::zero() || fx == T::zero() {
            break;
        }
        let next = x - f / df;
        let fnext = poly.eval(next).abs();
        if !(fnext < fx) {
            break;
        }
        x = next;
        fx = fnext;
    }
    x
}

/// All real roots in ascending order, repeated roots listed with multiplicity.
pub fn cubic_real_roots<T: Real>(poly: &CubicCoefficients<T>) -> Result<Vec<T>> {
    if poly.a == T::zero() {
        return Err(OttoError::DegenerateCubic);
    }
    let lit = T::lit;
    let (ca, cb, cc) = poly.monic();
    let shift = -ca / lit(3.0);
    let d0 = ca * ca - lit(3.0) * cb;
    let d1 = lit(2.0) * ca * ca * ca - lit(9.0) * ca * cb + lit(27.0) * cc;
    let two_thirds = lit(2.0) / lit(3.0);

    let mut roots = if d0 > T::zero() {
        let s = d0.sqrt();
        let arg = -d1 / (lit(2.0) * s * s * s);
        let band = lit(REPEATED_ROOT_BAND);
        if arg.abs() <= T::one() || (arg.abs() - T::one()).abs() < band {
            let arg = if (arg.abs() - T::one()).abs() < band {
                arg.signum()
            } else {
                arg
            };
            let theta = arg.acos();
            let two_pi = lit(2.0) * T::PI();
            (0..3)
                .map(|k| {
                    let kf = T::from_usize(k).unwrap_or_else(T::zero);
                    shift + two_thirds * s * ((theta - two_pi * kf) / lit(3.0)).cos()
                })
                .collect::<Vec<_>>()
        } else {
            let hyp = (arg.abs().acosh() / lit(3.0)).cosh();
            vec![shift + two_thirds * s * arg.signum() * hyp]
        }
    } else if d0 < T::zero() {
        let s = (-d0).sqrt();
        let arg = -d1 / (lit(2.0) * s * s * s);
        vec![shift + two_thirds * s * (arg.asinh() / lit(3.0)).sinh()]
    } else if d1 == T::zero() {
        vec![shift; 3]
    } else {
        vec![shift + (-d1 / lit(27.0)).cbrt()]
    };

    for r in roots.iter_mut() {
        *r = polish(poly, *r);
    }
    roots.sort_by(|x, y| x.partial_cmp(y).unwrap_or(std::cmp::Ordering::Equal));
    Ok(roots)
}
