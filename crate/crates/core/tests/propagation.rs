use std::f64::consts::PI;

use proptest::prelude::*;
use qfield::propagation::{
    bob_profile_2d_fb1, bob_profiles_2d_numeric, bob_profiles_3d, bob_spectra, propagate_gaussian,
};
use qfield::smearing::{gaussian_profile, Dim, Propagator, SpectralProfile};
use qfield::verify::{amplitude_identity_residual, shell_leakage};

fn peak(f: impl Fn(f64) -> f64, r_max: f64) -> f64 {
    (0..=4000).map(|i| f(r_max * i as f64 / 4000.0).abs()).fold(0.0, f64::max)
}

#[test]
fn zero_delta_is_the_identity() {
    for dim in [Dim::Three, Dim::Two] {
        let fa = SpectralProfile::gaussian(1.0, dim).unwrap();
        let [s1, s2, s3] = bob_spectra(&fa, 0.0).unwrap();
        for k in [0.1, 1.0, 5.0] {
            assert_eq!(s1.eval(k).unwrap(), 0.0);
            assert_eq!(s2.eval(k).unwrap(), fa.eval(k).unwrap());
            assert_eq!(s3.eval(k).unwrap(), 0.0);
        }
    }
    let g = gaussian_profile(1.0, 2).unwrap();
    let [f1, f2, f3] = bob_profiles_2d_numeric(1.0, 0.0).unwrap();
    for r in [0.0, 0.5, 1.5, 3.0] {
        assert!((f2.eval(r).unwrap() - g.eval(r).unwrap()).abs() < 1e-9, "r={r}");
        assert!(f1.eval(r).unwrap().abs() < 1e-12 && f3.eval(r).unwrap().abs() < 1e-12);
    }
}

#[test]
fn cos_and_sin_parts_recombine() {
    let fa = SpectralProfile::gaussian(1.0, Dim::Three).unwrap();
    let [_, s2, s3] = bob_spectra(&fa, 10.0).unwrap();
    for i in 1..=200 {
        let k = 0.03 * i as f64;
        let (a, b2, b3) = (fa.eval(k).unwrap(), s2.eval(k).unwrap(), s3.eval(k).unwrap());
        assert!((b2 * b2 + (b3 / k).powi(2) - a * a).abs() <= 1e-15 * a * a + 1e-300);
    }
}

#[test]
fn propagating_back_recovers_alice() {
    // Φ̂[F_B2](t_B) + π̂[F_B1](t_B), carried back by −Δ, is Φ̂[F](t_A) with no π̂ part.
    let delta = 7.5;
    let fa = SpectralProfile::gaussian(1.0, Dim::Three).unwrap();
    let [s1, s2, _] = bob_spectra(&fa, delta).unwrap();
    let back = |p: Propagator, k: f64| p.multiplier(-delta, k);
    for i in 1..=300 {
        let k = 0.04 * i as f64;
        let (b1, b2) = (s1.eval(k).unwrap(), s2.eval(k).unwrap());
        let phi = back(Propagator::Cos, k) * b2 + back(Propagator::KSin, k) * b1;
        let pi = back(Propagator::Sinc, k) * b2 + back(Propagator::Cos, k) * b1;
        let a = fa.eval(k).unwrap();
        assert!((phi - a).abs() <= 1e-12 * fa.eval(0.0).unwrap(), "k={k}");
        assert!(pi.abs() <= 1e-12 * fa.eval(0.0).unwrap(), "k={k}");
    }
}

#[test]
fn shell_profiles_are_finite_at_the_origin() {
    for delta in [0.0, 0.5, 3.0] {
        for p in bob_profiles_3d(1.0, delta).unwrap() {
            let (at0, near) = (p.eval(0.0).unwrap(), p.eval(1e-7).unwrap());
            assert!(at0.is_finite());
            assert!((at0 - near).abs() <= 1e-6 * at0.abs().max(1e-12), "Δ={delta}: {at0} vs {near}");
        }
    }
}

#[test]
fn three_dimensional_profiles_live_on_the_lightcone() {
    assert!(shell_leakage(1.0, 10.0).unwrap() <= 1e-6);
    let [fb1, _, _] = bob_profiles_3d(1.0, 10.0).unwrap();
    let pk = peak(|r| fb1.eval(r).unwrap(), 18.0);
    assert!(fb1.eval(5.0).unwrap().abs() <= 1e-10 * pk);
}

#[test]
fn two_dimensional_fb1_fills_the_disk() {
    let delta = 10.0;
    let fb1 = bob_profile_2d_fb1(1.0, delta).unwrap();
    let at0 = fb1.eval(0.0).unwrap();
    let kernel = -1.0 / (2.0 * PI * delta);
    assert!((at0 - kernel).abs() <= 0.01 * kernel.abs(), "{at0} vs {kernel}");
    let pk = peak(|r| fb1.eval(r).unwrap(), delta + 8.0);
    assert!(fb1.eval(0.5 * delta).unwrap().abs() >= 1e-3 * pk);
    // A narrow source leaves nothing outside the disk.
    let sharp = bob_profile_2d_fb1(0.05, delta).unwrap();
    for r in [10.5, 11.0, 14.0] {
        assert!(sharp.eval(r).unwrap().abs() < 1e-12, "r={r}");
    }
}

#[test]
fn two_dimensional_profiles_have_interior_support() {
    let delta = 10.0;
    let r = propagate_gaussian(Dim::Two, 1.0, delta).unwrap();
    for p in &r.profiles {
        let pk = peak(|x| p.eval(x).unwrap(), delta + 5.0);
        assert!(p.eval(0.5 * delta).unwrap().abs() >= 1e-3 * pk);
    }
}

#[test]
fn disk_kernel_matches_inverse_transform() {
    let (sigma, delta) = (1.0, 10.0);
    let [numeric, _, _] = bob_profiles_2d_numeric(sigma, delta).unwrap();
    let closed = bob_profile_2d_fb1(sigma, delta).unwrap();
    let pk = peak(|r| closed.eval(r).unwrap(), delta + 8.0);
    for i in 0..50 {
        let r = (delta + 4.0) * i as f64 / 49.0;
        assert!((numeric.eval(r).unwrap() - closed.eval(r).unwrap()).abs() <= 1e-4 * pk, "r={r}");
    }
}

#[test]
fn amplitude_identities_hold_on_a_fine_grid() {
    for dim in [Dim::Three, Dim::Two] {
        assert!(amplitude_identity_residual(dim, 1.0, 10.0, 500).unwrap() <= 1e-10);
    }
}

#[test]
fn negative_delta_is_rejected() {
    let fa = SpectralProfile::gaussian(1.0, Dim::Three).unwrap();
    assert!(bob_spectra(&fa, -1.0).is_err());
    assert!(bob_profiles_3d(1.0, f64::NAN).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn identities_hold_for_any_geometry(sigma in 0.3..3.0f64, delta in 0.0..20.0f64) {
        prop_assert!(amplitude_identity_residual(Dim::Three, sigma, delta, 200).unwrap() <= 1e-10);
    }
}
