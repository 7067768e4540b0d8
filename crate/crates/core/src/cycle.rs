//! Finite-temperature energetics of one harmonic Otto cycle.
//!
//! Units: ħ = k_B = 1. The oscillator starts thermal at `(omega_c, beta_c)`
//! (corner A), is driven to `omega_h` (B), thermalises with the hot bath (C),
//! is driven back to `omega_c` (D) and thermalises with the cold bath.
//! Heat and work are signed so that fluxes into the working medium are
//! positive; `w_ext = q_h + q_c` is the work extracted per cycle.

use serde::Serialize;

use crate::adiabaticity::lambda_sudden;
use crate::error::{invalid, OttoError, Result};
use crate::scalar::{coth, Real};

fn check_finite<T: Real>(name: &str, v: T) -> Result<()> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(invalid(format!("{name} must be finite, got {v}")))
    }
}

/// Inverse temperatures of the cold and hot reservoirs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BathPair<T> {
    beta_c: T,
    beta_h: T,
}

impl<T: Real> BathPair<T> {
    pub fn new(beta_c: T, beta_h: T) -> Result<Self> {
        check_finite("beta_c", beta_c)?;
        check_finite("beta_h", beta_h)?;
        if beta_c <= T::zero() || beta_h <= T::zero() {
            return Err(invalid("inverse temperatures must be positive"));
        }
        if beta_c < beta_h {
            return Err(invalid(format!(
                "cold bath must be colder: beta_c = {beta_c} < beta_h = {beta_h}"
            )));
        }
        Ok(Self { beta_c, beta_h })
    }

    pub fn beta_c(&self) -> T {
        self.beta_c
    }

    pub fn beta_h(&self) -> T {
        self.beta_h
    }

    /// Temperature ratio `beta_h / beta_c`, in (0, 1].
    pub fn tau(&self) -> T {
        self.beta_h / self.beta_c
    }

    pub fn carnot(&self) -> T {
        T::one() - self.tau()
    }
}

/// Cold- and hot-stroke oscillator frequencies.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FrequencyPair<T> {
    omega_c: T,
    omega_h: T,
}

impl<T: Real> FrequencyPair<T> {
    pub fn new(omega_c: T, omega_h: T) -> Result<Self> {
        check_finite("omega_c", omega_c)?;
        check_finite("omega_h", omega_h)?;
        if omega_c <= T::zero() {
            return Err(invalid(format!("omega_c must be positive, got {omega_c}")));
        }
        if omega_c > omega_h {
            return Err(invalid(format!(
                "omega_c = {omega_c} exceeds omega_h = {omega_h}"
            )));
        }
        Ok(Self { omega_c, omega_h })
    }

    pub fn omega_c(&self) -> T {
        self.omega_c
    }

    pub fn omega_h(&self) -> T {
        self.omega_h
    }

    /// Compression ratio `omega_c / omega_h`, in (0, 1].
    pub fn z(&self) -> T {
        self.omega_c / self.omega_h
    }
}

/// Adiabaticity parameters of the compression (A→B) and expansion (C→D) strokes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AdiabaticityPair<T> {
    lambda_ab: T,
    lambda_cd: T,
}

impl<T: Real> AdiabaticityPair<T> {
    pub fn new(lambda_ab: T, lambda_cd: T) -> Result<Self> {
        check_finite("lambda_ab", lambda_ab)?;
        check_finite("lambda_cd", lambda_cd)?;
        if lambda_ab < T::one() || lambda_cd < T::one() {
            return Err(invalid(format!(
                "adiabaticity parameters must be >= 1, got ({lambda_ab}, {lambda_cd})"
            )));
        }
        Ok(Self {
            lambda_ab,
            lambda_cd,
        })
    }

    /// Both strokes quasi-static.
    pub fn adiabatic() -> Self {
        Self {
            lambda_ab: T::one(),
            lambda_cd: T::one(),
        }
    }

    pub fn lambda_ab(&self) -> T {
        self.lambda_ab
    }

    pub fn lambda_cd(&self) -> T {
        self.lambda_cd
    }
}

/// Which work strokes are sudden quenches; the others are quasi-static.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DrivingScheme {
    /// Both strokes adiabatic.
    Ad,
    /// Sudden expansion, adiabatic compression.
    Se,
    /// Sudden compression, adiabatic expansion.
    Sc,
    /// Both strokes sudden.
    Ss,
}

impl DrivingScheme {
    pub const ALL: [DrivingScheme; 4] = [Self::Ad, Self::Se, Self::Sc, Self::Ss];

    pub fn label(self) -> &'static str {
        match self {
            Self::Ad => "ad",
            Self::Se => "se",
            Self::Sc => "sc",
            Self::Ss => "ss",
        }
    }

    pub fn adiabaticity<T: Real>(self, freq: &FrequencyPair<T>) -> AdiabaticityPair<T> {
        let sudden = lambda_sudden(freq);
        let one = T::one();
        let (lambda_ab, lambda_cd) = match self {
            Self::Ad => (one, one),
            Self::Se => (one, sudden),
            Self::Sc => (sudden, one),
            Self::Ss => (sudden, sudden),
        };
        AdiabaticityPair {
            lambda_ab,
            lambda_cd,
        }
    }
}

impl std::str::FromStr for DrivingScheme {
    type Err = OttoError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ad" => Ok(Self::Ad),
            "se" => Ok(Self::Se),
            "sc" => Ok(Self::Sc),
            "ss" => Ok(Self::Ss),
            other => Err(invalid(format!("unknown driving scheme '{other}'"))),
        }
    }
}

/// Mean oscillator energies at the four cycle corners.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StrokeEnergies<T> {
    pub h_a: T,
    pub h_b: T,
    pub h_c: T,
    pub h_d: T,
}

/// Heats, extracted work and (engine mode only) efficiency of one cycle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CycleOutcome<T> {
    pub q_h: T,
    pub q_c: T,
    pub w_ext: T,
    pub eta: Option<T>,
}

impl<T: Real> CycleOutcome<T> {
    pub(crate) fn from_heats(q_h: T, q_c: T) -> Self {
        let w_ext = q_h + q_c;
        let eta = if w_ext > T::zero() && q_h > T::zero() {
            Some(w_ext / q_h)
        } else {
            None
        };
        Self {
            q_h,
            q_c,
            w_ext,
            eta,
        }
    }

    pub fn is_engine(&self) -> bool {
        self.eta.is_some()
    }
}

fn thermal_factors<T: Real>(freq: &FrequencyPair<T>, bath: &BathPair<T>) -> (T, T) {
    let half = T::lit(0.5);
    (
        coth(half * bath.beta_c * freq.omega_c),
        coth(half * bath.beta_h * freq.omega_h),
    )
}

pub fn stroke_energies<T: Real>(
    freq: &FrequencyPair<T>,
    bath: &BathPair<T>,
    lam: &AdiabaticityPair<T>,
) -> StrokeEnergies<T> {
    let half = T::lit(0.5);
    let (coth_c, coth_h) = thermal_factors(freq, bath);
    StrokeEnergies {
        h_a: half * freq.omega_c * coth_c,
        h_b: half * freq.omega_h * lam.lambda_ab * coth_c,
        h_c: half * freq.omega_h * coth_h,
        h_d: half * freq.omega_c * lam.lambda_cd * coth_h,
    }
}

/// `Q_h = <H>_C - <H>_B`, `Q_c = <H>_A - <H>_D`, `W_ext = Q_h + Q_c`.
pub fn heats_and_work<T: Real>(
    freq: &FrequencyPair<T>,
    bath: &BathPair<T>,
    lam: &AdiabaticityPair<T>,
) -> CycleOutcome<T> {
    let half = T::lit(0.5);
    let (coth_c, coth_h) = thermal_factors(freq, bath);
    let q_h = half * freq.omega_h * (coth_h - lam.lambda_ab * coth_c);
    let q_c = half * freq.omega_c * (coth_c - lam.lambda_cd * coth_h);
    CycleOutcome::from_heats(q_h, q_c)
}

/// `W_ext / Q_h`; fails unless both are positive.
pub fn efficiency<T: Real>(outcome: &CycleOutcome<T>) -> Result<T> {
    if outcome.w_ext > T::zero() && outcome.q_h > T::zero() {
        Ok(outcome.w_ext / outcome.q_h)
    } else {
        Err(OttoError::NotAnEngine {
            work: outcome.w_ext.to_f64_lossy(),
            heat_hot: outcome.q_h.to_f64_lossy(),
        })
    }
}
