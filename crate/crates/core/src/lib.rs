//! Thermodynamics of harmonic quantum Otto cycles whose work strokes are
//! driven asymmetrically: one stroke quasi-static, the other a sudden quench.
//!
//! * [`cycle`]: exact stroke energies, heats, work and efficiency for any
//!   adiabaticity parameters.
//! * [`adiabaticity`]: the sudden-quench parameter and a numeric oracle for
//!   arbitrary frequency ramps.
//! * [`asym`]: closed forms and positive-work conditions for the
//!   sudden-expansion and sudden-compression cycles.
//! * [`high_temp`]: the reduced high-temperature model, maximum efficiency,
//!   efficiency at maximum work and curve intersections.
//! * [`phase`]: engine / refrigerator / heater / accelerator classification.
//! * [`sampling`]: Monte-Carlo checks of the efficiency bounds.
//! * [`acceptance`]: the reproducible end-to-end checks.
//!
//! Everything is generic over [`Real`] (`f32` or `f64`); the `*64` aliases
//! below fix the scalar to `f64`.

// `!(a < b)` is used deliberately so that NaN fails the check.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod acceptance;
pub mod adiabaticity;
pub mod asym;
pub mod cycle;
pub mod error;
pub mod high_temp;
pub mod phase;
pub mod sampling;
pub mod scalar;

pub use adiabaticity::{lambda_numeric, lambda_sudden, FrequencyProtocol, IntegratorConfig, Ramp};
pub use asym::{eta_sc, eta_se, pwc_sc, pwc_se, work_sc, work_se};
pub use cycle::{
    efficiency, heats_and_work, stroke_energies, AdiabaticityPair, BathPair, CycleOutcome,
    DrivingScheme, FrequencyPair, StrokeEnergies,
};
pub use error::{OttoError, Result};
pub use high_temp::{
    cubic_real_roots, eta_mw_sc, eta_mw_se, eta_up_sc, eta_up_se, ht_quantities, intersections,
    taylor_coefficients, zstar_se, BoundCurve, CubicCoefficients, HtQuantities, Intersections,
    ReducedParams, TrigAuxiliaries,
};
pub use phase::{
    classify, phase_grid, region_boundaries, OperationalMode, PhaseGrid, RegionBoundaries,
};
pub use sampling::{sample_efficiencies, Histogram, SamplingPlan};
pub use scalar::Real;

pub type BathPair64 = BathPair<f64>;
pub type FrequencyPair64 = FrequencyPair<f64>;
pub type AdiabaticityPair64 = AdiabaticityPair<f64>;
pub type StrokeEnergies64 = StrokeEnergies<f64>;
pub type CycleOutcome64 = CycleOutcome<f64>;
pub type FrequencyProtocol64 = FrequencyProtocol<f64>;
pub type ReducedParams64 = ReducedParams<f64>;
pub type HtQuantities64 = HtQuantities<f64>;
pub type CubicCoefficients64 = CubicCoefficients<f64>;
pub type Intersections64 = Intersections<f64>;
pub type PhaseGrid64 = PhaseGrid<f64>;
pub type SamplingPlan64 = SamplingPlan<f64>;
pub type Histogram64 = Histogram<f64>;

pub type BathPair32 = BathPair<f32>;
pub type FrequencyPair32 = FrequencyPair<f32>;
pub type ReducedParams32 = ReducedParams<f32>;
