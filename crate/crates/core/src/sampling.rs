//! Monte-Carlo check of the high-temperature efficiency bounds against the
//! exact, finite-temperature efficiencies.
//!
//! Frequencies are drawn uniformly from `[0, omega_max]^2` and ordered so
//! that `omega_c <= omega_h`. Only working engines (positive work and
//! positive hot heat) contribute to the histogram; everything else is
//! counted as rejected.
//!
//! Draws come from ChaCha8 addressed by sample index (four 32-bit words per
//! sample), so the histogram is identical for any thread count.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::asym::{eta_sc, eta_se};
use crate::cycle::{BathPair, DrivingScheme, FrequencyPair};
use crate::error::{invalid, Result};
use crate::high_temp::{eta_up_sc, eta_up_se};
use crate::scalar::Real;

const BLOCK: usize = 4096;
const WORDS_PER_SAMPLE: u128 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SamplingPlan<T> {
    pub scheme: DrivingScheme,
    pub beta_c: T,
    pub beta_h: T,
    pub omega_max: T,
    pub n_samples: usize,
    pub seed: u64,
    pub bin_width: T,
}

impl<T: Real> SamplingPlan<T> {
    /// Settings of the published histograms: `beta_c = 1`, `beta_h = 1/10`,
    /// `omega in [0, 100]`, `10^6` draws, bins of `0.01`.
    pub fn reference(scheme: DrivingScheme, seed: u64) -> Self {
        Self {
            scheme,
            beta_c: T::one(),
            beta_h: T::lit(0.1),
            omega_max: T::lit(100.0),
            n_samples: 1_000_000,
            seed,
            bin_width: T::lit(0.01),
        }
    }

    pub fn validate(&self) -> Result<BathPair<T>> {
        if !matches!(self.scheme, DrivingScheme::Se | DrivingScheme::Sc) {
            return Err(invalid(format!(
                "sampling supports the se and sc schemes, got {}",
                self.scheme.label()
            )));
        }
        if self.n_samples == 0 {
            return Err(invalid("n_samples must be >= 1"));
        }
        if !(self.bin_width > T::zero() && self.bin_width <= T::one()) {
            return Err(invalid(format!(
                "bin_width must lie in (0, 1], got {}",
                self.bin_width
            )));
        }
        if !(self.omega_max.is_finite() && self.omega_max > T::zero()) {
            return Err(invalid(format!(
                "omega_max must be positive, got {}",
                self.omega_max
            )));
        }
        BathPair::new(self.beta_c, self.beta_h)
    }

    /// High-temperature maximum efficiency at this plan's temperature ratio.
    pub fn bound(&self) -> Result<T> {
        let tau = self.validate()?.tau();
        match self.scheme {
            DrivingScheme::Se => eta_up_se(tau),
            _ => eta_up_sc(tau),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HistogramBin<T> {
    pub lo: T,
    pub hi: T,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Histogram<T> {
    pub bins: Vec<HistogramBin<T>>,
    /// `None` when no sample was a working engine.
    pub max_eta: Option<T>,
    pub accepted: u64,
    pub rejected: u64,
    /// High-temperature bound for the plan's temperature ratio.
    pub bound: T,
    /// Accepted samples strictly above `bound`.
    pub exceeding: u64,
}

impl<T: Real> Histogram<T> {
    /// `bound - max_eta`, if any engine was sampled.
    pub fn margin(&self) -> Option<T> {
        self.max_eta.map(|m| self.bound - m)
    }
}

struct Tally<T> {
    counts: Vec<u64>,
    max_eta: Option<T>,
    accepted: u64,
    rejected: u64,
    exceeding: u64,
}

impl<T: Real> Tally<T> {
    fn empty(n_bins: usize) -> Self {
        Self {
            counts: vec![0; n_bins],
            max_eta: None,
            accepted: 0,
            rejected: 0,
            exceeding: 0,
        }
    }

    fn merge(mut self, other: Self) -> Self {
        for (a, b) in self.counts.iter_mut().zip(other.counts) {
            *a += b;
        }
        self.max_eta = match (self.max_eta, other.max_eta) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        };
        self.accepted += other.accepted;
        self.rejected += other.rejected;
        self.exceeding += other.exceeding;
        self
    }
}

/// Efficiency of one drawn frequency pair, if it is a working engine.
pub fn sample_efficiency<T: Real>(
    scheme: DrivingScheme,
    a: T,
    b: T,
    bath: &BathPair<T>,
) -> Option<T> {
    let freq = FrequencyPair::new(a.min(b), a.max(b)).ok()?;
    match scheme {
        DrivingScheme::Se => eta_se(&freq, bath).ok(),
        _ => eta_sc(&freq, bath).ok(),
    }
}

pub fn sample_efficiencies<T: Real>(plan: &SamplingPlan<T>) -> Result<Histogram<T>> {
    let bath = plan.validate()?;
    let bound = plan.bound()?;
    let n_bins = (T::one() / plan.bin_width)
        .ceil()
        .to_usize()
        .ok_or_else(|| invalid("bin count not representable"))?
        .max(1);
    let omega_max = plan.omega_max.to_f64_lossy();
    let n_blocks = plan.n_samples.div_ceil(BLOCK);

    let tally = (0..n_blocks)
        .into_par_iter()
        .map(|block| {
            let start = block * BLOCK;
            let end = (start + BLOCK).min(plan.n_samples);
            let mut rng = ChaCha8Rng::seed_from_u64(plan.seed);
            rng.set_word_pos(start as u128 * WORDS_PER_SAMPLE);
            let mut tally = Tally::empty(n_bins);
            for _ in start..end {
                let a = T::lit(rng.gen::<f64>() * omega_max);
                let b = T::lit(rng.gen::<f64>() * omega_max);
                match sample_efficiency(plan.scheme, a, b, &bath) {
                    Some(eta) => {
                        let idx = (eta / plan.bin_width)
                            .floor()
                            .to_usize()
                            .unwrap_or(0)
                            .min(n_bins - 1);
                        tally.counts[idx] += 1;
                        tally.accepted += 1;
                        tally.exceeding += u64::from(eta > bound);
                        tally.max_eta = Some(tally.max_eta.map_or(eta, |m: T| m.max(eta)));
                    }
                    None => tally.rejected += 1,
                }
            }
            tally
        })
        .reduce(|| Tally::empty(n_bins), Tally::merge);

    let bins = tally
        .counts
        .iter()
        .enumerate()
        .map(|(i, &count)| {
            let lo = T::from_usize(i).unwrap_or_else(T::zero) * plan.bin_width;
            HistogramBin {
                lo,
                hi: lo + plan.bin_width,
                count,
            }
        })
        .collect();
    Ok(Histogram {
        bins,
        max_eta: tally.max_eta,
        accepted: tally.accepted,
        rejected: tally.rejected,
        bound,
        exceeding: tally.exceeding,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(scheme: DrivingScheme, seed: u64, n: usize) -> SamplingPlan<f64> {
        SamplingPlan {
            n_samples: n,
            ..SamplingPlan::reference(scheme, seed)
        }
    }

    #[test]
    fn counts_add_up() {
        let h = sample_efficiencies(&small(DrivingScheme::Se, 3, 50_000)).unwrap();
        assert_eq!(h.accepted + h.rejected, 50_000);
        assert_eq!(h.bins.iter().map(|b| b.count).sum::<u64>(), h.accepted);
        assert_eq!(h.bins.len(), 100);
        assert!(h.accepted > 0 && h.rejected > 0);
    }

    #[test]
    fn deterministic_for_fixed_seed() {
        let plan = small(DrivingScheme::Sc, 42, 20_000);
        let a = sample_efficiencies(&plan).unwrap();
        let b = sample_efficiencies(&plan).unwrap();
        assert_eq!(a, b);
        let c = sample_efficiencies(&small(DrivingScheme::Sc, 43, 20_000)).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn independent_of_thread_count() {
        let plan = small(DrivingScheme::Se, 9, 30_000);
        let one = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap();
        let four = rayon::ThreadPoolBuilder::new()
            .num_threads(4)
            .build()
            .unwrap();
        let a = one.install(|| sample_efficiencies(&plan)).unwrap();
        let b = four.install(|| sample_efficiencies(&plan)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn prefix_of_a_longer_run() {
        // sample k uses the same draws whatever n_samples is
        let short = sample_efficiencies(&small(DrivingScheme::Se, 5, 1)).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let a = rng.gen::<f64>() * 100.0;
        let b = rng.gen::<f64>() * 100.0;
        let bath = BathPair::new(1.0, 0.1).unwrap();
        let expected = sample_efficiency(DrivingScheme::Se, a, b, &bath);
        assert_eq!(short.accepted + short.rejected, 1);
        assert_eq!(short.max_eta, expected);
    }

    #[test]
    fn stays_below_bounds() {
        for scheme in [DrivingScheme::Se, DrivingScheme::Sc] {
            let plan = small(scheme, 11, 200_000);
            let h = sample_efficiencies(&plan).unwrap();
            assert!(h.max_eta.unwrap() < h.bound);
            assert!(h.margin().unwrap() > 0.0);
            assert_eq!(h.exceeding, 0);
        }
    }

    #[test]
    fn no_engines_reported_without_error() {
        // cold baths: nothing works as an engine
        let plan = SamplingPlan {
            beta_c: 100.0,
            beta_h: 90.0,
            ..small(DrivingScheme::Se, 1, 1000)
        };
        let h = sample_efficiencies(&plan).unwrap();
        assert_eq!(h.accepted, 0);
        assert!(h.max_eta.is_none());
    }

    #[test]
    fn plan_validation() {
        let base = small(DrivingScheme::Se, 1, 10);
        assert!(sample_efficiencies(&SamplingPlan {
            n_samples: 0,
            ..base
        })
        .is_err());
        assert!(sample_efficiencies(&SamplingPlan {
            bin_width: 0.0,
            ..base
        })
        .is_err());
        assert!(sample_efficiencies(&SamplingPlan {
            omega_max: -1.0,
            ..base
        })
        .is_err());
        assert!(sample_efficiencies(&SamplingPlan {
            beta_h: 2.0,
            ..base
        })
        .is_err());
        assert!(sample_efficiencies(&SamplingPlan {
            scheme: DrivingScheme::Ad,
            ..base
        })
        .is_err());
    }
}
