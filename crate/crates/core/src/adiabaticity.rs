//! Adiabaticity parameter of a work stroke.
//!
//! The closed-form sudden-quench value is used by the cycle formulas. For an
//! arbitrary frequency ramp the parameter is obtained numerically by
//! propagating the two fundamental solutions of the classical oscillator
//! `x'' + omega(t)^2 x = 0` with fixed-step RK4.

use std::fmt;
use std::sync::Arc;

use crate::cycle::FrequencyPair;
use crate::error::{invalid, OttoError, Result};
use crate::scalar::Real;

/// `(omega_c^2 + omega_h^2) / (2 omega_c omega_h)`, never below one.
pub fn lambda_sudden<T: Real>(freq: &FrequencyPair<T>) -> T {
    lambda_sudden_between(freq.omega_c(), freq.omega_h())
}

/// Sudden-quench parameter between two positive frequencies, in either order.
pub fn lambda_sudden_between<T: Real>(a: T, b: T) -> T {
    let two = T::lit(2.0);
    ((a * a + b * b) / (two * a * b)).max(T::one())
}

/// Shape of a frequency ramp `omega(t)` over `[0, duration]`.
#[derive(Clone)]
pub enum Ramp<T> {
    Constant,
    Linear,
    Exponential,
    /// Instantaneous jump at `t = 0+`, then constant `omega_end`.
    SuddenStep,
    /// User-supplied map; must hit both endpoint frequencies.
    Custom(Arc<dyn Fn(T) -> T + Send + Sync>),
}

impl<T> fmt::Debug for Ramp<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Ramp::Constant => "Constant",
            Ramp::Linear => "Linear",
            Ramp::Exponential => "Exponential",
            Ramp::SuddenStep => "SuddenStep",
            Ramp::Custom(_) => "Custom",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone)]
pub struct FrequencyProtocol<T> {
    duration: T,
    omega_start: T,
    omega_end: T,
    ramp: Ramp<T>,
}

impl<T: Real> FrequencyProtocol<T> {
    pub fn new(ramp: Ramp<T>, omega_start: T, omega_end: T, duration: T) -> Result<Self> {
        if !(duration.is_finite() && duration > T::zero()) {
            return Err(invalid(format!(
                "duration must be positive, got {duration}"
            )));
        }
        for w in [omega_start, omega_end] {
            if !(w.is_finite() && w > T::zero()) {
                return Err(invalid(format!("frequencies must be positive, got {w}")));
            }
        }
        if matches!(ramp, Ramp::Constant) && omega_start != omega_end {
            return Err(invalid("constant protocol needs omega_start == omega_end"));
        }
        let protocol = Self {
            duration,
            omega_start,
            omega_end,
            ramp,
        };
        if let Ramp::Custom(_) = protocol.ramp {
            let tol = T::lit(1e-9) * omega_start.max(omega_end);
            let at_start = protocol.omega_of_t(T::zero());
            let at_end = protocol.omega_of_t(duration);
            if (at_start - omega_start).abs() > tol || (at_end - omega_end).abs() > tol {
                return Err(invalid(
                    "custom ramp does not match its endpoint frequencies",
                ));
            }
        }
        Ok(protocol)
    }

    pub fn constant(omega: T, duration: T) -> Result<Self> {
        Self::new(Ramp::Constant, omega, omega, duration)
    }

    pub fn linear(omega_start: T, omega_end: T, duration: T) -> Result<Self> {
        Self::new(Ramp::Linear, omega_start, omega_end, duration)
    }

    pub fn exponential(omega_start: T, omega_end: T, duration: T) -> Result<Self> {
        Self::new(Ramp::Exponential, omega_start, omega_end, duration)
    }

    pub fn sudden_step(omega_start: T, omega_end: T, duration: T) -> Result<Self> {
        Self::new(Ramp::SuddenStep, omega_start, omega_end, duration)
    }

    pub fn duration(&self) -> T {
        self.duration
    }

    pub fn omega_start(&self) -> T {
        self.omega_start
    }

    pub fn omega_end(&self) -> T {
        self.omega_end
    }

    pub fn ramp(&self) -> &Ramp<T> {
        &self.ramp
    }

    pub fn omega_of_t(&self, t: T) -> T {
        let s = (t / self.duration).max(T::zero()).min(T::one());
        match &self.ramp {
            Ramp::Constant => self.omega_start,
            Ramp::Linear => self.omega_start + (self.omega_end - self.omega_start) * s,
            Ramp::Exponential => self.omega_start * (self.omega_end / self.omega_start).powf(s),
            Ramp::SuddenStep => {
                if t <= T::zero() {
                    self.omega_start
                } else {
                    self.omega_end
                }
            }
            Ramp::Custom(f) => f(t),
        }
    }

    // The step's single point t = 0 carries no weight in the integral.
    fn integrand_omega(&self, t: T) -> T {
        match self.ramp {
            Ramp::SuddenStep => self.omega_end,
            _ => self.omega_of_t(t),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntegratorConfig {
    step_count: usize,
}

impl IntegratorConfig {
    pub const DEFAULT_STEPS: usize = 100_000;
    pub const MIN_STEPS: usize = 100;

    pub fn new(step_count: usize) -> Result<Self> {
        if step_count < Self::MIN_STEPS {
            return Err(invalid(format!(
                "step_count must be >= {}, got {step_count}",
                Self::MIN_STEPS
            )));
        }
        Ok(Self { step_count })
    }

    pub fn step_count(&self) -> usize {
        self.step_count
    }
}

impl Default for IntegratorConfig {
    fn default() -> Self {
        Self {
            step_count: Self::DEFAULT_STEPS,
        }
    }
}

/// Phase-space state of the two fundamental solutions: `[X, X', Y, Y']`.
type State<T> = [T; 4];

fn derivative<T: Real>(omega: T, s: &State<T>) -> State<T> {
    let w2 = omega * omega;
    [s[1], -w2 * s[0], s[3], -w2 * s[2]]
}

fn axpy<T: Real>(s: &State<T>, k: &State<T>, h: T) -> State<T> {
    [
        s[0] + h * k[0],
        s[1] + h * k[1],
        s[2] + h * k[2],
        s[3] + h * k[3],
    ]
}

fn propagate<T: Real>(protocol: &FrequencyProtocol<T>, steps: usize) -> Result<State<T>> {
    let n = T::from_usize(steps).ok_or_else(|| invalid("step count not representable"))?;
    let dt = protocol.duration / n;
    let half = T::lit(0.5);
    let sixth = T::one() / T::lit(6.0);
    let two = T::lit(2.0);
    let mut s: State<T> = [T::zero(), T::one(), T::one(), T::zero()];
    for i in 0..steps {
        let t = T::from_usize(i).unwrap_or_else(T::zero) * dt;
        let w0 = protocol.integrand_omega(t);
        let wm = protocol.integrand_omega(t + half * dt);
        let w1 = protocol.integrand_omega(t + dt);
        if !(w0 > T::zero() && wm > T::zero() && w1 > T::zero()) {
            return Err(invalid(format!("frequency must stay positive (t = {t})")));
        }
        let k1 = derivative(w0, &s);
        let k2 = derivative(wm, &axpy(&s, &k1, half * dt));
        let k3 = derivative(wm, &axpy(&s, &k2, half * dt));
        let k4 = derivative(w1, &axpy(&s, &k3, dt));
        for j in 0..4 {
            s[j] = s[j] + dt * sixth * (k1[j] + two * k2[j] + two * k3[j] + k4[j]);
        }
    }
    Ok(s)
}

fn lambda_from_state<T: Real>(protocol: &FrequencyProtocol<T>, s: &State<T>) -> T {
    let wi = protocol.omega_start;
    let wf = protocol.omega_end;
    let [x, xd, y, yd] = *s;
    let wf2 = wf * wf;
    (wi * wi * (wf2 * x * x + xd * xd) + (wf2 * y * y + yd * yd)) / (T::lit(2.0) * wi * wf)
}

/// Single propagation at exactly `cfg.step_count` steps, no convergence check.
pub fn lambda_at_steps<T: Real>(
    protocol: &FrequencyProtocol<T>,
    cfg: IntegratorConfig,
) -> Result<T> {
    let state = propagate(protocol, cfg.step_count)?;
    Ok(lambda_from_state(protocol, &state))
}

/// Adiabaticity parameter of `protocol`.
///
/// Runs at `step_count` and `2 * step_count`; if the two disagree by more
/// than `1e-6` (or a precision-scaled floor for narrow scalars) the result is
/// rejected as unconverged. Otherwise the finer value is returned.
pub fn lambda_numeric<T: Real>(
    protocol: &FrequencyProtocol<T>,
    cfg: IntegratorConfig,
) -> Result<T> {
    let coarse = lambda_at_steps(protocol, cfg)?;
    let fine = lambda_at_steps(
        protocol,
        IntegratorConfig {
            step_count: cfg.step_count * 2,
        },
    )?;
    let tol = T::lit(1e-6).max(T::lit(1e4) * T::epsilon());
    if !((fine - coarse).abs() <= tol) {
        return Err(OttoError::NonConvergence {
            coarse: coarse.to_f64_lossy(),
            fine: fine.to_f64_lossy(),
        });
    }
    Ok(fine)
}
