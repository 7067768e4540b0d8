//! Operational modes of the high-temperature cycle and their phase diagrams.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::cycle::DrivingScheme;
use crate::error::{invalid, Result};
use crate::high_temp::{heats_ht, work_ht, ReducedParams};
use crate::scalar::Real;

/// Flux magnitude below which a cell is tagged [`OperationalMode::Boundary`].
pub const FLUX_ZERO_TOL: f64 = 1e-12;

/// Distance from a closed-form threshold below which a predicate is ambiguous.
pub const CURVE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OperationalMode {
    Engine,
    Refrigerator,
    Heater,
    Accelerator,
    Boundary,
}

impl OperationalMode {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Engine => "engine",
            Self::Refrigerator => "refrigerator",
            Self::Heater => "heater",
            Self::Accelerator => "accelerator",
            Self::Boundary => "boundary",
        }
    }

    /// Mode from the signs of `(W, Q_h, Q_c)`.
    ///
    /// `None` for the sign triples that match no thermal device
    /// (e.g. `W > 0` with `Q_h < 0`).
    pub fn from_signs<T: Real>(w: T, qh: T, qc: T, zero_tol: T) -> Option<Self> {
        if w.abs() <= zero_tol || qh.abs() <= zero_tol || qc.abs() <= zero_tol {
            return Some(Self::Boundary);
        }
        let zero = T::zero();
        match (w > zero, qh > zero, qc > zero) {
            (true, true, false) => Some(Self::Engine),
            (false, false, true) => Some(Self::Refrigerator),
            (false, false, false) => Some(Self::Heater),
            (false, true, false) => Some(Self::Accelerator),
            _ => None,
        }
    }
}

impl fmt::Display for OperationalMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

fn check_phase_scheme(scheme: DrivingScheme) -> Result<()> {
    match scheme {
        DrivingScheme::Se | DrivingScheme::Sc => Ok(()),
        other => Err(invalid(format!(
            "phase maps are defined for the se and sc schemes, got {}",
            other.label()
        ))),
    }
}

/// Sign-based mode of the high-temperature cycle.
///
/// Any of the four schemes is accepted. For SE and SC the forbidden sign
/// triples never occur; should one appear it is reported as `Boundary`.
pub fn classify<T: Real>(scheme: DrivingScheme, p: &ReducedParams<T>) -> OperationalMode {
    let w = work_ht(scheme, p.z(), p.tau());
    let (qh, qc) = heats_ht(scheme, p.z(), p.tau());
    OperationalMode::from_signs(w, qh, qc, T::lit(FLUX_ZERO_TOL))
        .unwrap_or(OperationalMode::Boundary)
}

/// Closed-form mode thresholds along `z` at fixed `tau`.
///
/// Intervals are closed `[lo, hi]`; `None` marks an empty region.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RegionBoundaries<T> {
    pub scheme: DrivingScheme,
    pub tau: T,
    /// Engine for `z >= engine_min_z`.
    pub engine_min_z: T,
    /// Refrigerator for `z <= refrigerator_max_z`.
    pub refrigerator_max_z: Option<T>,
    pub heater_interval: Option<(T, T)>,
    pub accelerator_interval: Option<(T, T)>,
}

impl<T: Real> RegionBoundaries<T> {
    fn thresholds(&self) -> impl Iterator<Item = T> + '_ {
        [Some(self.engine_min_z), self.refrigerator_max_z]
            .into_iter()
            .flatten()
            .chain(self.heater_interval.into_iter().flat_map(|(a, b)| [a, b]))
            .chain(
                self.accelerator_interval
                    .into_iter()
                    .flat_map(|(a, b)| [a, b]),
            )
    }

    /// Mode predicted by the closed-form thresholds; `Boundary` within
    /// [`CURVE_TOL`] of any threshold.
    pub fn predict(&self, z: T) -> OperationalMode {
        let tol = T::lit(CURVE_TOL);
        if self.thresholds().any(|b| (z - b).abs() <= tol) {
            return OperationalMode::Boundary;
        }
        let inside = |iv: Option<(T, T)>| iv.is_some_and(|(lo, hi)| z >= lo && z <= hi);
        if z >= self.engine_min_z {
            OperationalMode::Engine
        } else if self.refrigerator_max_z.is_some_and(|m| z <= m) {
            OperationalMode::Refrigerator
        } else if inside(self.accelerator_interval) {
            OperationalMode::Accelerator
        } else if inside(self.heater_interval) {
            OperationalMode::Heater
        } else {
            OperationalMode::Boundary
        }
    }
}

pub fn region_boundaries<T: Real>(scheme: DrivingScheme, tau: T) -> Result<RegionBoundaries<T>> {
    check_phase_scheme(scheme)?;
    if !(tau > T::zero() && tau < T::one()) {
        return Err(invalid(format!("tau must lie in (0, 1), got {tau}")));
    }
    let lit = T::lit;
    let (one, two) = (T::one(), lit(2.0));
    let b = match scheme {
        DrivingScheme::Se => {
            let engine = ((lit(8.0) * tau + one).sqrt() - one) / two;
            let cold_pump = two * tau - one;
            let fridge = (cold_pump >= T::zero()).then(|| cold_pump.sqrt());
            RegionBoundaries {
                scheme,
                tau,
                engine_min_z: engine,
                refrigerator_max_z: fridge,
                heater_interval: Some((fridge.unwrap_or_else(T::zero), tau)),
                accelerator_interval: Some((tau, engine)),
            }
        }
        _ => {
            let engine = ((tau * (lit(8.0) + tau)).sqrt() + tau) / lit(4.0);
            let hot_zero = (tau / (two - tau)).sqrt();
            RegionBoundaries {
                scheme,
                tau,
                engine_min_z: engine,
                refrigerator_max_z: Some(tau),
                heater_interval: Some((tau, hot_zero)),
                accelerator_interval: Some((hot_zero, engine)),
            }
        }
    };
    Ok(b)
}

/// Rasterised mode map over `(tau, z)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PhaseGrid<T> {
    pub scheme: DrivingScheme,
    pub tau_axis: Vec<T>,
    pub z_axis: Vec<T>,
    /// Row-major: `cells[i * z_axis.len() + j]` is at `(tau_axis[i], z_axis[j])`.
    pub cells: Vec<OperationalMode>,
}

impl<T: Real> PhaseGrid<T> {
    pub fn mode(&self, tau_index: usize, z_index: usize) -> OperationalMode {
        self.cells[tau_index * self.z_axis.len() + z_index]
    }

    pub fn iter(&self) -> impl Iterator<Item = (T, T, OperationalMode)> + '_ {
        let nz = self.z_axis.len();
        self.cells
            .iter()
            .enumerate()
            .map(move |(k, &m)| (self.tau_axis[k / nz], self.z_axis[k % nz], m))
    }

    pub fn count(&self, mode: OperationalMode) -> usize {
        self.cells.iter().filter(|&&m| m == mode).count()
    }
}

/// Cell-centred axis of `n` points over `(lo, hi]`.
fn cell_centres<T: Real>(lo: T, hi: T, n: usize) -> Vec<T> {
    let nf = T::from_usize(n).unwrap_or_else(T::one);
    let width = (hi - lo) / nf;
    (0..n)
        .map(|i| lo + (T::from_usize(i).unwrap_or_else(T::zero) + T::lit(0.5)) * width)
        .collect()
}

/// Classifies every cell centre of an `n_tau x n_z` grid.
///
/// Ranges must sit inside the unit square: `0 <= lo < hi <= 1`.
pub fn phase_grid<T: Real>(
    scheme: DrivingScheme,
    tau_range: (T, T),
    z_range: (T, T),
    resolution: (usize, usize),
) -> Result<PhaseGrid<T>> {
    check_phase_scheme(scheme)?;
    let (n_tau, n_z) = resolution;
    if n_tau < 2 || n_z < 2 {
        return Err(invalid(format!(
            "resolution must be >= 2 per axis, got {n_tau}x{n_z}"
        )));
    }
    for (name, (lo, hi)) in [("tau", tau_range), ("z", z_range)] {
        if !(lo >= T::zero() && hi <= T::one() && lo < hi) {
            return Err(invalid(format!(
                "{name} range [{lo}, {hi}] is empty or outside [0, 1]"
            )));
        }
    }
    let tau_axis = cell_centres(tau_range.0, tau_range.1, n_tau);
    let z_axis = cell_centres(z_range.0, z_range.1, n_z);
    let cells = (0..n_tau * n_z)
        .into_par_iter()
        .map(|k| {
            let p = ReducedParams::new(z_axis[k % n_z], tau_axis[k / n_z])?;
            Ok(classify(scheme, &p))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PhaseGrid {
        scheme,
        tau_axis,
        z_axis,
        cells,
    })
}
