use approx::assert_relative_eq;
use otto_core::high_temp::{work_ht, zstar_sc};
use otto_core::{
    eta_se, eta_up_sc, eta_up_se, heats_and_work, intersections, lambda_sudden, AdiabaticityPair,
    BathPair32, BathPair64, DrivingScheme, FrequencyPair32, FrequencyPair64, OttoError,
};

#[test]
fn adiabatic_cycle_reaches_one_minus_z() {
    let freq = FrequencyPair64::new(1.0, 2.0).unwrap();
    let bath = BathPair64::new(1.0, 0.1).unwrap();
    let out = heats_and_work(&freq, &bath, &AdiabaticityPair::adiabatic());
    assert_relative_eq!(out.eta.unwrap(), 0.5, epsilon = 1e-14);
}

#[test]
fn single_precision_agrees_with_double() {
    let f64_out = heats_and_work(
        &FrequencyPair64::new(1.0, 2.0).unwrap(),
        &BathPair64::new(1.0, 0.1).unwrap(),
        &DrivingScheme::Se.adiabaticity(&FrequencyPair64::new(1.0, 2.0).unwrap()),
    );
    let freq32 = FrequencyPair32::new(1.0, 2.0).unwrap();
    let f32_out = heats_and_work(
        &freq32,
        &BathPair32::new(1.0, 0.1).unwrap(),
        &DrivingScheme::Se.adiabaticity(&freq32),
    );
    assert_relative_eq!(f64::from(f32_out.w_ext), f64_out.w_ext, max_relative = 1e-5);
    assert_relative_eq!(
        f64::from(eta_up_se(0.1_f32).unwrap()),
        0.36,
        max_relative = 1e-5
    );
}

#[test]
fn sudden_quench_parameter() {
    let freq = FrequencyPair64::new(1.0, 2.0).unwrap();
    assert_relative_eq!(lambda_sudden(&freq), 1.25);
}

#[test]
fn bounds_are_ordered() {
    for i in 1..100 {
        let tau = i as f64 / 100.0;
        assert!(eta_up_sc(tau).unwrap() > eta_up_se(tau).unwrap());
        let z = zstar_sc(tau).unwrap();
        assert!(z > tau && z < 1.0);
    }
}

#[test]
fn work_intersection_is_shared() {
    let x = intersections(0.36_f64).unwrap();
    assert_relative_eq!(x.z_work, 0.6, epsilon = 1e-14);
    let (se, sc) = (
        work_ht(DrivingScheme::Se, x.z_work, 0.36),
        work_ht(DrivingScheme::Sc, x.z_work, 0.36),
    );
    assert_relative_eq!(se, sc, epsilon = 1e-14);
    assert_relative_eq!(se, 0.08, epsilon = 1e-14);
}

#[test]
fn non_engine_efficiency_is_an_error() {
    let freq = FrequencyPair64::new(1.0, 2.0).unwrap();
    let bath = BathPair64::new(10.0, 5.0).unwrap();
    assert!(matches!(
        eta_se(&freq, &bath),
        Err(OttoError::NotAnEngine { .. })
    ));
}

#[test]
fn constructors_reject_bad_input() {
    assert!(FrequencyPair64::new(2.0, 1.0).is_err());
    assert!(FrequencyPair64::new(0.0, 1.0).is_err());
    assert!(BathPair64::new(0.1, 1.0).is_err());
    assert!(BathPair64::new(f64::NAN, 1.0).is_err());
}
