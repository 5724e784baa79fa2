use std::f64::consts::{FRAC_PI_4, PI};
use std::sync::Arc;

use num_complex::Complex64;
use proptest::prelude::*;
use qfield::channel::ChannelConfig;
use qfield::observables::{
    check_conditions, commutator_constant, fine_tuned_lambda_pi, gaussian_W_closed_form,
    gaussian_commutator_closed_form, momentum_amplitude, overlap_W, wick_expectation,
    ExponentString, FieldObservableSpec, KGrid, ProfileSource, SpectralAmplitude,
};
use qfield::smearing::{Dim, SpectralProfile};

fn grid3() -> Arc<KGrid> {
    KGrid::new(Dim::Three, 1.0, 8.0, 40.0).unwrap()
}

fn gaussian() -> ProfileSource {
    ProfileSource::Momentum(SpectralProfile::gaussian(1.0, Dim::Three).unwrap())
}

fn phi(grid: &Arc<KGrid>, t: f64, lambda: f64) -> SpectralAmplitude {
    momentum_amplitude(&FieldObservableSpec::phi(gaussian(), t, lambda), grid).unwrap()
}

fn pi(grid: &Arc<KGrid>, t: f64, lambda: f64) -> SpectralAmplitude {
    momentum_amplitude(&FieldObservableSpec::pi(gaussian(), t, lambda), grid).unwrap()
}

#[test]
fn pi_amplitude_at_zero_time_is_negative_imaginary() {
    let g = grid3();
    for b in pi(&g, 0.0, 1.0).values() {
        assert_eq!(b.re, 0.0);
        assert!(b.im <= 0.0);
    }
}

#[test]
fn time_evolution_is_a_pure_phase() {
    let g = grid3();
    let (a0, at) = (phi(&g, 0.0, 1.0), phi(&g, 2.7, 1.0));
    for ((b0, bt), &k) in a0.values().iter().zip(at.values()).zip(g.nodes()) {
        let want = b0 * Complex64::from_polar(1.0, -k * 2.7);
        assert!((bt - want).norm() <= 1e-15 * b0.norm().max(1e-300));
    }
}

#[test]
fn phi_phi_overlap_of_unit_gaussian() {
    let g = grid3();
    for z in [1.0, -1.0] {
        let w = overlap_W(&phi(&g, 0.0, z), &phi(&g, 0.0, z)).unwrap();
        let want = 1.0 / (4.0 * PI * PI);
        assert!((w.re - want).abs() < 1e-12 * want, "{w}");
        assert!(w.im.abs() < 1e-15);
    }
    let w = gaussian_W_closed_form(0.0, 1.0, 0.0, 1.0, 1.0, 1.0, 0.0);
    assert!((w.re - 1.0 / (4.0 * PI * PI)).abs() < 1e-15);
}

#[test]
fn phi_pi_overlap_imaginary_part() {
    let g = grid3();
    let (lp, lq) = (1.3, 0.4);
    let w = overlap_W(&phi(&g, 0.0, lp), &pi(&g, 0.0, lq)).unwrap();
    let want = lp * lq / (2.0 * (2.0 * PI).powf(1.5));
    assert!(w.re.abs() < 1e-15);
    assert!((w.im - want).abs() < 1e-12 * want, "{w}");
    let back = overlap_W(&pi(&g, 0.0, lq), &phi(&g, 0.0, lp)).unwrap();
    assert!((back.im + want).abs() < 1e-12 * want);
}

#[test]
fn closed_form_antisymmetric_part_vanishes_for_equal_signs() {
    assert_eq!(gaussian_W_closed_form(1.0, 1.0, 1.0, 1.0, 1.0, 3.0, 2.0).im, 0.0);
}

#[test]
fn closed_form_matches_quadrature_for_every_sign_pattern() {
    let g = grid3();
    let (lp, lq) = (2.0, 0.7);
    let (f, p) = (phi(&g, 0.0, lp), pi(&g, 0.0, lq));
    let obs = |x: f64, z: f64| p.scaled(x).add_scaled(&f, z).unwrap();
    for bits in 0..16u32 {
        let s = |i: u32| if bits >> i & 1 == 1 { -1.0 } else { 1.0 };
        let (xl, zl, xm, zm) = (s(0), s(1), s(2), s(3));
        let got = overlap_W(&obs(xl, zl), &obs(xm, zm)).unwrap();
        let want = gaussian_W_closed_form(xl, zl, xm, zm, 1.0, lp, lq);
        assert!((got - want).norm() <= 1e-10 * want.norm(), "{bits}: {got} vs {want}");
    }
}

#[test]
fn commutator_constant_anchors() {
    let g = grid3();
    let c = commutator_constant(&phi(&g, 0.0, 1.0), &pi(&g, 0.0, 1.0)).unwrap();
    let want = -1.0 / (2.0 * (2.0 * PI).powf(1.5));
    assert!(c.re.abs() < 1e-15 && (c.im - want).abs() < 1e-12, "{c}");
    assert!((c.im + 0.0317).abs() < 1e-4);
    assert!((gaussian_commutator_closed_form(1.0, 1.0, 1.0) - c).norm() < 1e-12);
    let zero = commutator_constant(&phi(&g, 0.0, 1.0), &pi(&g, 0.0, 0.0)).unwrap();
    assert_eq!(zero, Complex64::new(0.0, 0.0));
}

#[test]
fn empty_string_has_unit_expectation() {
    assert_eq!(wick_expectation(&ExponentString::new()).unwrap(), Complex64::new(1.0, 0.0));
}

#[test]
fn single_exponent_is_half_the_variance() {
    let g = grid3();
    let a = phi(&g, 0.0, 0.8);
    let w = overlap_W(&a, &a).unwrap().re;
    let e = wick_expectation(&ExponentString::new().with(1, a).unwrap()).unwrap();
    assert!((e.re - (-0.5 * w).exp()).abs() < 1e-15 && e.im.abs() < 1e-15);
    // |⟨+α|−α⟩| from e^{iÔ} e^{iÔ}
    let a = phi(&g, 0.0, 0.8);
    let two = ExponentString::new().with(1, a.clone()).unwrap().with(1, a).unwrap();
    let e2 = wick_expectation(&two).unwrap();
    assert!((e2.norm() - (-2.0 * w).exp()).abs() < 1e-14);
}

#[test]
fn exponent_strings_reject_bad_signs_and_overflow() {
    let g = grid3();
    assert!(ExponentString::new().with(0, phi(&g, 0.0, 1.0)).is_err());
    let mut s = ExponentString::new();
    for _ in 0..8 {
        s.push(1, phi(&g, 0.0, 1.0)).unwrap();
    }
    assert!(s.push(1, phi(&g, 0.0, 1.0)).is_err());
}

#[test]
fn gaussian_fine_tuning_condition() {
    let lp = 100.0;
    let lq = fine_tuned_lambda_pi(Dim::Three, 1.0, lp).unwrap();
    let report = check_conditions(&ChannelConfig::gaussian(Dim::Three, 1.0, lp).with_lambda_pi(lq)).unwrap();
    assert!((report.gamma - lp * lq / (2.0 * PI).powf(1.5)).abs() < 1e-12);
    assert!((report.gamma - FRAC_PI_4).abs() < 1e-12);
    assert!(report.fine_tuned && report.strong_coupling);
    let weak = check_conditions(&ChannelConfig::gaussian(Dim::Three, 1.0, 1.0)).unwrap();
    assert!(!weak.strong_coupling);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn overlaps_are_conjugate_symmetric(
        c1 in -3.0..3.0f64, c2 in -3.0..3.0f64, t1 in 0.0..5.0f64, t2 in 0.0..5.0f64, mix in -1.0..1.0f64,
    ) {
        let g = grid3();
        let l = phi(&g, t1, c1).add_scaled(&pi(&g, t1, 1.0), mix).unwrap();
        let m = pi(&g, t2, c2);
        let (lm, ml) = (overlap_W(&l, &m).unwrap(), overlap_W(&m, &l).unwrap());
        prop_assert!((lm - ml.conj()).norm() <= 1e-14 * lm.norm().max(1e-300));
        prop_assert!(overlap_W(&l, &l).unwrap().re >= 0.0);
    }

    #[test]
    fn commutator_is_bilinear(lp in 0.01..50.0f64, lq in 0.01..50.0f64) {
        let g = grid3();
        let c = commutator_constant(&phi(&g, 0.0, lp), &pi(&g, 0.0, lq)).unwrap();
        let c2 = commutator_constant(&phi(&g, 0.0, 2.0 * lp), &pi(&g, 0.0, lq)).unwrap();
        prop_assert!((c2 - 2.0 * c).norm() <= 1e-14 * c.norm());
    }

    #[test]
    fn wick_expectation_is_bounded(signs in proptest::collection::vec(prop_oneof![Just(1i8), Just(-1i8)], 1..8), lp in 0.0..5.0f64) {
        let g = grid3();
        let mut s = ExponentString::new();
        for (i, &sg) in signs.iter().enumerate() {
            let a = if i % 2 == 0 { phi(&g, 0.0, lp) } else { pi(&g, 0.0, 1.0) };
            s.push(sg, a).unwrap();
        }
        prop_assert!(wick_expectation(&s).unwrap().norm() <= 1.0 + 1e-12);
    }
}
