//! High-temperature reduced model.
//!
//! With `coth(x/2) ~ 2/x` every quantity depends only on the compression
//! ratio `z = omega_c / omega_h` and the temperature ratio
//! `tau = beta_h / beta_c`. Work and heats are reported in units of
//! `1 / beta_h`.

pub mod cubic;

use serde::Serialize;

pub use cubic::{cubic_real_roots, CubicCoefficients};

use crate::cycle::DrivingScheme;
use crate::error::{invalid, Result};
use crate::scalar::Real;

/// Reduced parameters `(z, tau)`, both in (0, 1].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ReducedParams<T> {
    z: T,
    tau: T,
}

impl<T: Real> ReducedParams<T> {
    pub fn new(z: T, tau: T) -> Result<Self> {
        for (name, v) in [("z", z), ("tau", tau)] {
            if !(v > T::zero() && v <= T::one()) {
                return Err(invalid(format!("{name} must lie in (0, 1], got {v}")));
            }
        }
        Ok(Self { z, tau })
    }

    pub fn z(&self) -> T {
        self.z
    }

    pub fn tau(&self) -> T {
        self.tau
    }
}

/// Dimensionless `beta_h`-scaled work and heats; `eta` only in engine mode.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HtQuantities<T> {
    pub w: T,
    pub qh: T,
    pub qc: T,
    pub eta: Option<T>,
}

/// Extracted work `beta_h W` of each scheme.
pub fn work_ht<T: Real>(scheme: DrivingScheme, z: T, tau: T) -> T {
    let one = T::one();
    let two = T::lit(2.0);
    match scheme {
        DrivingScheme::Ad => (one - z) * (one - tau / z),
        DrivingScheme::Se => (one - z) * ((z + one) / two - tau / z),
        DrivingScheme::Sc => (z - one) * (tau * (z + one) / (two * z * z) - one),
        DrivingScheme::Ss => (one - z * z) * (z * z - tau) / (two * z * z),
    }
}

/// `(beta_h Q_h, beta_h Q_c)` of each scheme.
pub fn heats_ht<T: Real>(scheme: DrivingScheme, z: T, tau: T) -> (T, T) {
    let one = T::one();
    let half = T::lit(0.5);
    let adiabatic_hot = one - tau / z;
    let sudden_hot = one - (one + z * z) * tau * half / (z * z);
    let adiabatic_cold = tau - z;
    let sudden_cold = tau - half * (one + z * z);
    match scheme {
        DrivingScheme::Ad => (adiabatic_hot, adiabatic_cold),
        DrivingScheme::Se => (adiabatic_hot, sudden_cold),
        DrivingScheme::Sc => (sudden_hot, adiabatic_cold),
        DrivingScheme::Ss => (sudden_hot, sudden_cold),
    }
}

/// Closed-form efficiency curve of each scheme, evaluated for any `z`.
///
/// Not restricted to the engine region; returns the limiting value 0 at `z = 1`.
pub fn eta_ht_curve<T: Real>(scheme: DrivingScheme, z: T, tau: T) -> T {
    let one = T::one();
    let two = T::lit(2.0);
    if z == one {
        return T::zero();
    }
    match scheme {
        DrivingScheme::Ad => one - z,
        DrivingScheme::Se => (one - z) * (z * z + z - two * tau) / (two * (z - tau)),
        DrivingScheme::Sc => {
            (z - one) * (two * z * z - tau * (z + one)) / (tau + (tau - two) * z * z)
        }
        DrivingScheme::Ss => (z * z - one) * (z * z - tau) / (tau - z * z * (two - tau)),
    }
}

pub fn ht_quantities<T: Real>(p: &ReducedParams<T>, scheme: DrivingScheme) -> HtQuantities<T> {
    let (z, tau) = (p.z, p.tau);
    let w = work_ht(scheme, z, tau);
    let (qh, qc) = heats_ht(scheme, z, tau);
    let eta = (w > T::zero() && qh > T::zero()).then(|| eta_ht_curve(scheme, z, tau));
    HtQuantities { w, qh, qc, eta }
}

fn check_tau<T: Real>(tau: T) -> Result<()> {
    if tau > T::zero() && tau <= T::one() {
        Ok(())
    } else {
        Err(invalid(format!("tau must lie in (0, 1], got {tau}")))
    }
}

fn check_carnot<T: Real>(eta_c: T) -> Result<()> {
    if eta_c >= T::zero() && eta_c < T::one() {
        Ok(())
    } else {
        Err(invalid(format!(
            "Carnot efficiency must lie in [0, 1), got {eta_c}"
        )))
    }
}

/// Trigonometric auxiliaries of the two maximum-efficiency formulas.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TrigAuxiliaries<T> {
    /// `K`, with `z* = tau/2 + K` the SE efficiency maximiser.
    pub k_aux: T,
    /// `B = acos(-sqrt((2 - tau) tau)) / 3`, in `[pi/6, pi/3]`.
    pub b_aux: T,
}

impl<T: Real> TrigAuxiliaries<T> {
    /// The `acos` argument of `K` exceeds one for `tau < 1/2`, where the
    /// cubic has a single real root; there `cos(acos(.)/3)` is continued to
    /// `cosh(acosh(.)/3)`.
    pub fn new(tau: T) -> Result<Self> {
        check_tau(tau)?;
        let one = T::one();
        let three = T::lit(3.0);
        let arg = ((tau - T::lit(4.0)) * tau + T::lit(2.0)) / (tau * tau);
        let k_aux = if (arg - one).abs() < T::lit(cubic::REPEATED_ROOT_BAND) {
            tau
        } else if arg < one {
            tau * (arg.max(-one).acos() / three).cos()
        } else {
            tau * (arg.acosh() / three).cosh()
        };
        let b_aux = (-((T::lit(2.0) - tau) * tau).sqrt()).max(-one).acos() / three;
        Ok(Self { k_aux, b_aux })
    }
}

/// Compression ratio maximising the sudden-expansion efficiency: the largest
/// root of `2z^3 - 3 tau z^2 + tau(2 tau - 1) = 0`.
pub fn zstar_se<T: Real>(tau: T) -> Result<T> {
    check_tau(tau)?;
    if tau == T::one() {
        return Ok(T::one());
    }
    Ok(tau * T::lit(0.5) + TrigAuxiliaries::new(tau)?.k_aux)
}

/// Maximum sudden-expansion efficiency in the high-temperature limit.
pub fn eta_up_se<T: Real>(tau: T) -> Result<T> {
    check_tau(tau)?;
    if tau == T::one() {
        return Ok(T::zero());
    }
    let k = TrigAuxiliaries::new(tau)?.k_aux;
    let lit = T::lit;
    let num = (lit(2.0) * k + tau - lit(2.0))
        * (lit(4.0) * k * k + lit(4.0) * k * (T::one() + tau) - (lit(6.0) - tau) * tau);
    Ok(num / (lit(8.0) * tau - lit(16.0) * k))
}

/// Compression ratio maximising the sudden-compression efficiency,
/// `2 sqrt(tau / (2 - tau)) cos B`.
pub fn zstar_sc<T: Real>(tau: T) -> Result<T> {
    check_tau(tau)?;
    if tau == T::one() {
        return Ok(T::one());
    }
    let b = TrigAuxiliaries::new(tau)?.b_aux;
    let two = T::lit(2.0);
    Ok(two * (tau / (two - tau)).sqrt() * b.cos())
}

/// Maximum sudden-compression efficiency in the high-temperature limit.
pub fn eta_up_sc<T: Real>(tau: T) -> Result<T> {
    check_tau(tau)?;
    if tau == T::one() {
        return Ok(T::zero());
    }
    let lit = T::lit;
    let b = TrigAuxiliaries::new(tau)?.b_aux;
    let (cb, two) = (b.cos(), lit(2.0));
    let num = two - tau + lit(16.0) * (tau / (two - tau)).sqrt() * cb * cb * cb
        - lit(4.0) * (two + tau) * cb * cb;
    Ok(num / ((tau - two) * (two * (two * b).cos() + T::one())))
}

/// `u = 1 - (1 - eta_c)^{1/3} = 1 - tau^{1/3}`, computed without cancellation.
fn one_minus_cbrt_tau<T: Real>(eta_c: T) -> T {
    -((-eta_c).ln_1p() / T::lit(3.0)).exp_m1()
}

/// Sudden-expansion efficiency at maximum work, i.e. at `z = tau^{1/3}`.
///
/// Evaluated as `u (3 - 2u) / (2 (2 - u))` with `u = 1 - tau^{1/3}`, an exact
/// rearrangement that stays accurate as `eta_c -> 0`.
pub fn eta_mw_se<T: Real>(eta_c: T) -> Result<T> {
    check_carnot(eta_c)?;
    let u = one_minus_cbrt_tau(eta_c);
    let lit = T::lit;
    Ok(u * (lit(3.0) - lit(2.0) * u) / (lit(2.0) * (lit(2.0) - u)))
}

/// Sudden-compression efficiency at maximum work, `u (3 - u) / (z^2 + z + 2)`
/// with `z = tau^{1/3} = 1 - u`.
pub fn eta_mw_sc<T: Real>(eta_c: T) -> Result<T> {
    check_carnot(eta_c)?;
    let u = one_minus_cbrt_tau(eta_c);
    let z = T::one() - u;
    let lit = T::lit;
    Ok(u * (lit(3.0) - u) / (z * z + z + lit(2.0)))
}

/// Efficiency-versus-Carnot curves with known series at small `eta_c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum BoundCurve {
    UpSe,
    UpSc,
    MwSe,
    MwSc,
}

impl BoundCurve {
    pub const ALL: [BoundCurve; 4] = [Self::UpSe, Self::UpSc, Self::MwSe, Self::MwSc];

    /// Evaluates the curve at Carnot efficiency `eta_c`.
    pub fn eval<T: Real>(self, eta_c: T) -> Result<T> {
        check_carnot(eta_c)?;
        let tau = T::one() - eta_c;
        match self {
            Self::UpSe => eta_up_se(tau),
            Self::UpSc => eta_up_sc(tau),
            Self::MwSe => eta_mw_se(eta_c),
            Self::MwSc => eta_mw_sc(eta_c),
        }
    }
}

/// First three series coefficients `(c1, c2, c3)` of `eta(eta_c)` about 0.
pub fn taylor_coefficients<T: Real>(curve: BoundCurve) -> (T, T, T) {
    let lit = T::lit;
    let s3 = lit(3.0).sqrt();
    let two = lit(2.0);
    match curve {
        BoundCurve::UpSe => (
            two - s3,
            s3 - lit(5.0) / lit(3.0),
            T::one() / (lit(18.0) * s3),
        ),
        BoundCurve::UpSc => (
            two - s3,
            two / lit(3.0) * (lit(3.0) * s3 - lit(5.0)),
            (lit(252.0) - lit(143.0) * s3) / lit(54.0),
        ),
        BoundCurve::MwSe => (lit(0.25), lit(5.0) / lit(72.0), lit(5.0) / lit(144.0)),
        BoundCurve::MwSc => (lit(0.25), lit(17.0) / lit(144.0), lit(41.0) / lit(576.0)),
    }
}

/// Special points where the SE and SC curves meet, at fixed `tau`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Intersections<T> {
    /// Equal SE/SC work; also where the sudden-switch work vanishes.
    pub z_work: T,
    /// Equal SE/SC efficiency.
    pub z_eff: T,
    /// Common efficiency there, equal to the sudden-switch maximum.
    pub eta_intsec: T,
    /// Work maximiser shared by SE and SC.
    pub z_maxwork: T,
}

pub fn intersections<T: Real>(tau: T) -> Result<Intersections<T>> {
    check_tau(tau)?;
    let lit = T::lit;
    let one = T::one();
    let two = lit(2.0);
    let eta_c = one - tau;
    let z_eff = (tau + (two * tau).sqrt() * (one - tau)) / (two - tau);
    let eta_intsec = (lit(3.0) - two * (two * (one - eta_c)).sqrt() - eta_c) * eta_c
        / ((one + eta_c) * (one + eta_c));
    Ok(Intersections {
        z_work: tau.sqrt(),
        z_eff,
        eta_intsec,
        z_maxwork: tau.cbrt(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use DrivingScheme::*;

    fn p(z: f64, tau: f64) -> ReducedParams<f64> {
        ReducedParams::new(z, tau).unwrap()
    }

    /// Golden-section maximiser on `[lo, hi]`.
    fn golden_max(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> (f64, f64) {
        let g = (5f64.sqrt() - 1.0) / 2.0;
        let mut x1 = hi - g * (hi - lo);
        let mut x2 = lo + g * (hi - lo);
        let (mut f1, mut f2) = (f(x1), f(x2));
        while hi - lo > 1e-12 {
            if f1 < f2 {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + g * (hi - lo);
                f2 = f(x2);
            } else {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - g * (hi - lo);
                f1 = f(x1);
            }
        }
        let x = 0.5 * (lo + hi);
        (x, f(x))
    }

    #[test]
    fn worked_examples_at_tau_036() {
        let q = ht_quantities(&p(0.6, 0.36), Se);
        assert_relative_eq!(q.w, 0.08, max_relative = 1e-12);
        let q = ht_quantities(&p(0.6, 0.36), Sc);
        assert_relative_eq!(q.w, 0.08, max_relative = 1e-12);
        for tau in [0.1_f64, 0.36, 0.8] {
            let q = ht_quantities(&p(tau.sqrt(), tau), Ss);
            assert!(q.w.abs() < 1e-15);
            assert!(q.eta.is_none());
        }
    }

    #[test]
    fn work_is_sum_of_heats() {
        for scheme in DrivingScheme::ALL {
            for i in 1..=20 {
                for j in 1..=20 {
                    let (z, tau) = (i as f64 / 20.0, j as f64 / 20.0);
                    let q = ht_quantities(&p(z, tau), scheme);
                    assert!(
                        (q.w - (q.qh + q.qc)).abs() < 1e-12 * q.qh.abs().max(1.0),
                        "{scheme:?} z={z} tau={tau}"
                    );
                }
            }
        }
    }

    #[test]
    fn efficiency_is_work_over_heat_in_engine_mode() {
        for scheme in DrivingScheme::ALL {
            for i in 1..100 {
                let q = ht_quantities(&p(i as f64 / 100.0, 0.3), scheme);
                if let Some(eta) = q.eta {
                    assert_relative_eq!(eta, q.w / q.qh, max_relative = 1e-10);
                }
            }
        }
        assert_relative_eq!(
            ht_quantities(&p(0.4, 0.1), Ad).eta.unwrap(),
            0.6,
            max_relative = 1e-14
        );
    }

    #[test]
    fn zero_compression_ratio_rejected() {
        assert!(ReducedParams::new(0.0, 0.5).is_err());
        assert!(ReducedParams::new(0.5, 0.0).is_err());
        assert!(ReducedParams::new(1.1, 0.5).is_err());
        assert!(ReducedParams::new(0.5, f64::NAN).is_err());
    }

    #[test]
    fn curve_limits_at_unit_ratio() {
        for scheme in DrivingScheme::ALL {
            assert_eq!(eta_ht_curve(scheme, 1.0_f64, 1.0), 0.0);
        }
    }

    #[test]
    fn zstar_examples() {
        assert_relative_eq!(zstar_se(0.1_f64).unwrap(), 0.4, max_relative = 1e-12);
        assert_relative_eq!(zstar_se(0.5_f64).unwrap(), 0.75, max_relative = 1e-12);
        assert!((zstar_se(0.999999_f64).unwrap() - 1.0).abs() < 1e-5);
        assert_eq!(zstar_se(1.0_f64).unwrap(), 1.0);
        assert!(zstar_se(0.0_f64).is_err());
        assert!(zstar_se(1.5_f64).is_err());
    }

    #[test]
    fn zstar_matches_cubic_solver() {
        for k in 1..100 {
            let tau = k as f64 / 100.0;
            let poly =
                CubicCoefficients::new(2.0, -3.0 * tau, 0.0, tau * (2.0 * tau - 1.0)).unwrap();
            let roots = cubic_real_roots(&poly).unwrap();
            let largest = *roots.last().unwrap();
            let z = zstar_se(tau).unwrap();
            assert!(
                (z - largest).abs() < 1e-7,
                "tau={tau} z={z} roots={roots:?}"
            );
            assert!(z > 0.0 && z <= 1.0);
        }
    }

    #[test]
    fn eta_up_se_examples() {
        assert_relative_eq!(eta_up_se(0.1_f64).unwrap(), 0.36, max_relative = 1e-12);
        assert_relative_eq!(eta_up_se(0.5_f64).unwrap(), 0.15625, max_relative = 1e-12);
        assert_eq!(eta_up_se(1.0_f64).unwrap(), 0.0);
        assert!(eta_up_se(1.0_f64 - 1e-9).unwrap() < 1e-9);
        for k in 1..1000 {
            let tau = k as f64 / 1000.0;
            let up = eta_up_se(tau).unwrap();
            assert!(up < 0.5);
            let at_zstar = eta_ht_curve(Se, zstar_se(tau).unwrap(), tau);
            assert!((up - at_zstar).abs() < 1e-10, "tau={tau}");
        }
    }

    #[test]
    fn eta_up_sc_examples() {
        assert!((eta_up_sc(0.1_f64).unwrap() - 0.539).abs() < 1e-3);
        assert!(eta_up_sc(1e-8_f64).unwrap() > 0.999);
        assert_eq!(eta_up_sc(1.0_f64).unwrap(), 0.0);
        for k in 1..1000 {
            let tau = k as f64 / 1000.0;
            let up = eta_up_sc(tau).unwrap();
            let at_zstar = eta_ht_curve(Sc, zstar_sc(tau).unwrap(), tau);
            assert!((up - at_zstar).abs() < 1e-10, "tau={tau}");
            let aux = TrigAuxiliaries::new(tau).unwrap();
            let pi = std::f64::consts::PI;
            assert!(aux.b_aux >= pi / 6.0 - 1e-12 && aux.b_aux <= pi / 3.0 + 1e-12);
        }
    }

    #[test]
    fn maxima_match_golden_section() {
        for k in 1..100 {
            let tau = k as f64 / 100.0;
            let (_, best) = golden_max(
                |z| eta_ht_curve(Se, z, tau),
                ((8.0 * tau + 1.0).sqrt() - 1.0) / 2.0,
                1.0,
            );
            assert!((eta_up_se(tau).unwrap() - best).abs() < 1e-10);
            let lo = ((tau * (8.0 + tau)).sqrt() + tau) / 4.0;
            let (_, best) = golden_max(|z| eta_ht_curve(Sc, z, tau), lo, 1.0);
            assert!((eta_up_sc(tau).unwrap() - best).abs() < 1e-10);
            assert!(eta_up_sc(tau).unwrap() > eta_up_se(tau).unwrap());
        }
    }

    #[test]
    fn eta_mw_examples() {
        assert_eq!(eta_mw_se(0.0_f64).unwrap(), 0.0);
        assert_eq!(eta_mw_sc(0.0_f64).unwrap(), 0.0);
        assert!((eta_mw_se(0.9_f64).unwrap() - 0.35285).abs() < 1e-4);
        assert!((eta_mw_sc(0.9_f64).unwrap() - 0.49276).abs() < 1e-4);
        assert_relative_eq!(eta_mw_se(1e-3_f64).unwrap(), 0.25e-3, max_relative = 1e-2);
        assert_relative_eq!(eta_mw_sc(1e-3_f64).unwrap(), 0.25e-3, max_relative = 1e-2);
        assert!(eta_mw_se(1.0_f64).is_err());
        assert!(eta_mw_se(-0.1_f64).is_err());
    }

    #[test]
    fn eta_mw_equals_printed_closed_forms() {
        for k in 1..100 {
            let ec = k as f64 / 100.0;
            let t = (1.0 - ec).cbrt();
            let se = (3.0 * t - 2.0 * ec * t + 3.0 * ec - 3.0) / (2.0 * (t + ec - 1.0));
            let t2 = (1.0 - ec).powf(2.0 / 3.0);
            let sc = -(4.0 * (t + t2 - 2.0) + ec * (4.0 * t + ec - 1.0)) / (4.0 + ec * (ec + 3.0));
            assert!((eta_mw_se(ec).unwrap() - se).abs() < 1e-10, "ec={ec}");
            assert!((eta_mw_sc(ec).unwrap() - sc).abs() < 1e-10, "ec={ec}");
            // both equal the efficiency curves at z = tau^{1/3}
            let tau = 1.0 - ec;
            assert!((eta_mw_se(ec).unwrap() - eta_ht_curve(Se, tau.cbrt(), tau)).abs() < 1e-10);
            assert!((eta_mw_sc(ec).unwrap() - eta_ht_curve(Sc, tau.cbrt(), tau)).abs() < 1e-10);
            assert!(eta_up_se(tau).unwrap() >= eta_mw_se(ec).unwrap());
            assert!(eta_up_sc(tau).unwrap() >= eta_mw_sc(ec).unwrap());
        }
    }

    /// Polynomial fit through `f(k h)`, `k = 1..=n`, of `f(x) = sum_j c_j x^j`
    /// (no constant term); returns `c_1..c_n`.
    #[allow(clippy::needless_range_loop)]
    fn series_fit(f: impl Fn(f64) -> f64, h: f64, n: usize) -> Vec<f64> {
        let mut m = vec![vec![0.0; n + 1]; n];
        for (i, row) in m.iter_mut().enumerate() {
            let x = (i + 1) as f64 * h;
            for j in 0..n {
                row[j] = x.powi(j as i32 + 1);
            }
            row[n] = f(x);
        }
        for col in 0..n {
            let piv = (col..n)
                .max_by(|&a, &b| m[a][col].abs().partial_cmp(&m[b][col].abs()).unwrap())
                .unwrap();
            m.swap(col, piv);
            for r in 0..n {
                if r != col {
                    let factor = m[r][col] / m[col][col];
                    for c in col..=n {
                        m[r][c] -= factor * m[col][c];
                    }
                }
            }
        }
        (0..n).map(|i| m[i][n] / m[i][i]).collect()
    }

    #[test]
    fn series_coefficients_match_fits() {
        for curve in BoundCurve::ALL {
            let fit = series_fit(|x| curve.eval(x).unwrap(), 1e-2, 8);
            let (c1, c2, c3): (f64, f64, f64) = taylor_coefficients(curve);
            assert!((fit[0] - c1).abs() < 1e-6 * c1.abs(), "{curve:?} {fit:?}");
            assert!((fit[1] - c2).abs() < 1e-4 * c2.abs(), "{curve:?} {fit:?}");
            assert!((fit[2] - c3).abs() < 1e-3 * c3.abs(), "{curve:?} {fit:?}");
        }
    }

    #[test]
    fn series_relations() {
        let (a1, a2, _): (f64, f64, f64) = taylor_coefficients(BoundCurve::UpSe);
        let (b1, b2, _): (f64, f64, f64) = taylor_coefficients(BoundCurve::UpSc);
        assert_eq!(a1, b1);
        assert_relative_eq!(b2, 2.0 * a2, max_relative = 1e-14);
    }

    #[test]
    fn intersections_at_tau_036() {
        let x = intersections(0.36_f64).unwrap();
        assert_relative_eq!(x.z_work, 0.6, max_relative = 1e-14);
        assert!((x.z_maxwork - 0.711).abs() < 1e-3);
        assert!((x.eta_intsec - 0.158).abs() < 1e-3);
        assert!((x.z_eff - 0.5507).abs() < 1e-4);
        let se = eta_ht_curve(Se, x.z_eff, 0.36);
        let sc = eta_ht_curve(Sc, x.z_eff, 0.36);
        assert!((se - sc).abs() < 1e-8);
        assert!((se - x.eta_intsec).abs() < 1e-8);
    }

    #[test]
    fn intersection_residuals_across_tau() {
        for k in 1..100 {
            let tau = k as f64 / 100.0;
            let x = intersections(tau).unwrap();
            let w_equal = (1.0 - tau.sqrt()).powi(2) / 2.0;
            assert!((work_ht(Se, x.z_work, tau) - w_equal).abs() <= 1e-12 * w_equal.max(1e-300));
            assert!((work_ht(Sc, x.z_work, tau) - w_equal).abs() <= 1e-12 * w_equal.max(1e-300));
            assert!(work_ht(Ss, x.z_work, tau).abs() < 1e-15);
            let se = eta_ht_curve(Se, x.z_eff, tau);
            assert!((se - eta_ht_curve(Sc, x.z_eff, tau)).abs() < 1e-10);
            assert!((se - x.eta_intsec).abs() < 1e-10);
            let (_, ss_max) = golden_max(|z| eta_ht_curve(Ss, z, tau), tau.sqrt(), 1.0);
            assert!((ss_max - x.eta_intsec).abs() < 1e-8, "tau={tau}");
            let (zw, _) = golden_max(|z| work_ht(Se, z, tau), 1e-3, 1.0);
            assert!((zw - x.z_maxwork).abs() < 1e-6);
            let (zw, _) = golden_max(|z| work_ht(Sc, z, tau), 1e-3, 1.0);
            assert!((zw - x.z_maxwork).abs() < 1e-6);
        }
    }

    #[test]
    fn single_precision_bounds() {
        assert!((eta_up_se(0.1_f32).unwrap() - 0.36).abs() < 1e-5);
        assert!((eta_up_sc(0.1_f32).unwrap() - 0.5392).abs() < 1e-3);
    }
}
