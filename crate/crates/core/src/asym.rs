//! Exact, all-temperature closed forms for the two asymmetric cycles:
//! sudden expansion (SE: adiabatic compression, quenched expansion) and
//! sudden compression (SC: quenched compression, adiabatic expansion).

use crate::cycle::{BathPair, FrequencyPair};
use crate::error::{OttoError, Result};
use crate::scalar::{coth, Real};

/// `|W|` below which a positive-work test is treated as sitting on its boundary.
pub const PWC_BOUNDARY_TOL: f64 = 1e-12;

struct Factors<T> {
    wc: T,
    wh: T,
    coth_c: T,
    coth_h: T,
}

fn factors<T: Real>(freq: &FrequencyPair<T>, bath: &BathPair<T>) -> Factors<T> {
    let half = T::lit(0.5);
    Factors {
        wc: freq.omega_c(),
        wh: freq.omega_h(),
        coth_c: coth(half * bath.beta_c() * freq.omega_c()),
        coth_h: coth(half * bath.beta_h() * freq.omega_h()),
    }
}

fn not_an_engine<T: Real>(work: T, heat_hot: T) -> OttoError {
    OttoError::NotAnEngine {
        work: work.to_f64_lossy(),
        heat_hot: heat_hot.to_f64_lossy(),
    }
}

/// Extracted work of the sudden-expansion cycle.
pub fn work_se<T: Real>(freq: &FrequencyPair<T>, bath: &BathPair<T>) -> T {
    let Factors {
        wc,
        wh,
        coth_c,
        coth_h,
    } = factors(freq, bath);
    let two = T::lit(2.0);
    (wh - wc) * ((wc + wh) * coth_h - two * wh * coth_c) / (T::lit(4.0) * wh)
}

/// Hot-bath heat of the sudden-expansion cycle (adiabatic compression).
pub fn heat_hot_se<T: Real>(freq: &FrequencyPair<T>, bath: &BathPair<T>) -> T {
    let Factors {
        wh, coth_c, coth_h, ..
    } = factors(freq, bath);
    T::lit(0.5) * wh * (coth_h - coth_c)
}

/// `coth(b_h w_h / 2) / coth(b_c w_c / 2) >= 2 w_h / (w_c + w_h)`.
pub fn pwc_se<T: Real>(freq: &FrequencyPair<T>, bath: &BathPair<T>) -> bool {
    let Factors {
        wc,
        wh,
        coth_c,
        coth_h,
    } = factors(freq, bath);
    coth_h / coth_c >= T::lit(2.0) * wh / (wc + wh)
}

/// Sudden-expansion efficiency. Never exceeds one half.
pub fn eta_se<T: Real>(freq: &FrequencyPair<T>, bath: &BathPair<T>) -> Result<T> {
    let work = work_se(freq, bath);
    let heat = heat_hot_se(freq, bath);
    if !(pwc_se(freq, bath) && work > T::zero() && heat > T::zero()) {
        return Err(not_an_engine(work, heat));
    }
    let Factors {
        wc,
        wh,
        coth_c,
        coth_h,
    } = factors(freq, bath);
    let two = T::lit(2.0);
    let num = (wh - wc) * ((wc + wh) * coth_h - two * wh * coth_c);
    Ok(num / (two * wh * wh * (coth_h - coth_c)))
}

/// The same efficiency in its ratio form
/// `(1 - z^2)/2 * (r - 2/(1+z)) / (r - 1)` with `r = coth_h / coth_c`,
/// which makes the one-half bound evident.
pub fn eta_se_ratio_form<T: Real>(freq: &FrequencyPair<T>, bath: &BathPair<T>) -> Result<T> {
    eta_se(freq, bath)?;
    let Factors {
        wc,
        wh,
        coth_c,
        coth_h,
    } = factors(freq, bath);
    let one = T::one();
    let z = wc / wh;
    let r = coth_h / coth_c;
    Ok(T::lit(0.5) * (one - z * z) * (r - T::lit(2.0) / (one + z)) / (r - one))
}

/// Extracted work of the sudden-compression cycle.
pub fn work_sc<T: Real>(freq: &FrequencyPair<T>, bath: &BathPair<T>) -> T {
    let Factors {
        wc,
        wh,
        coth_c,
        coth_h,
    } = factors(freq, bath);
    let two = T::lit(2.0);
    (wc - wh) * ((wc + wh) * coth_c - two * wc * coth_h) / (T::lit(4.0) * wc)
}

/// Hot-bath heat of the sudden-compression cycle (quenched compression).
pub fn heat_hot_sc<T: Real>(freq: &FrequencyPair<T>, bath: &BathPair<T>) -> T {
    let Factors {
        wc,
        wh,
        coth_c,
        coth_h,
    } = factors(freq, bath);
    let two = T::lit(2.0);
    (two * wc * wh * coth_h - (wc * wc + wh * wh) * coth_c) / (T::lit(4.0) * wc)
}

/// `(w_c + w_h) coth(b_c w_c / 2) <= 2 w_c coth(b_h w_h / 2)`.
pub fn pwc_sc<T: Real>(freq: &FrequencyPair<T>, bath: &BathPair<T>) -> bool {
    let Factors {
        wc,
        wh,
        coth_c,
        coth_h,
    } = factors(freq, bath);
    (wc + wh) * coth_c <= T::lit(2.0) * wc * coth_h
}

pub fn eta_sc<T: Real>(freq: &FrequencyPair<T>, bath: &BathPair<T>) -> Result<T> {
    let work = work_sc(freq, bath);
    let heat = heat_hot_sc(freq, bath);
    if !(pwc_sc(freq, bath) && work > T::zero() && heat > T::zero()) {
        return Err(not_an_engine(work, heat));
    }
    let Factors {
        wc,
        wh,
        coth_c,
        coth_h,
    } = factors(freq, bath);
    let two = T::lit(2.0);
    let num = (wc - wh) * ((wc + wh) * coth_c - two * wc * coth_h);
    let den = two * wc * wh * coth_h - (wc * wc + wh * wh) * coth_c;
    Ok(num / den)
}
