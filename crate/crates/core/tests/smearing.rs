use std::f64::consts::PI;

use qfield::smearing::{
    fourier_radial, gaussian_profile, integrate, integrate_to_infinity, inverse_fourier_radial,
    numeric_fourier, numeric_inverse, Dim, QuadOptions, RadialKind, RadialProfile,
    SpectralProfile,
};

fn shell(sigma: f64, delta: f64, order: u8) -> RadialProfile {
    RadialProfile::new(
        Dim::Three,
        RadialKind::GaussianShell {
            sigma,
            delta,
            order,
            scale: 1.0,
        },
    )
    .unwrap()
}

#[test]
fn gaussian_has_unit_mass_in_both_dimensions() {
    let opts = QuadOptions::default();
    let g3 = gaussian_profile(1.0, 3).unwrap();
    let m3 = integrate_to_infinity(|r| 4.0 * PI * r * r * g3.eval(r).unwrap(), 0.0, &opts).unwrap();
    assert!((m3 - 1.0).abs() < 1e-10, "{m3}");
    let g2 = gaussian_profile(0.7, 2).unwrap();
    let m2 = integrate_to_infinity(|r| 2.0 * PI * r * g2.eval(r).unwrap(), 0.0, &opts).unwrap();
    assert!((m2 - 1.0).abs() < 1e-10, "{m2}");
}

#[test]
fn analytic_gaussian_spectrum() {
    let g = gaussian_profile(1.0, 3).unwrap();
    let s = fourier_radial(&g).unwrap();
    for k in [0.0_f64, 0.5, 2.0, 7.0] {
        let want = (2.0 * PI).powf(-1.5) * (-k * k / 4.0).exp();
        assert!((s.eval(k).unwrap() - want).abs() <= 1e-15 * want.max(1e-300));
    }
}

#[test]
fn numeric_and_analytic_spectra_agree() {
    // Over [0, 6/σ] the spectrum stays above ~1e-4 of its peak, where a relative
    // comparison is meaningful in double precision.
    for (d, sigma) in [(3, 1.0), (2, 1.0), (3, 0.6)] {
        let g = gaussian_profile(sigma, d).unwrap();
        let analytic = fourier_radial(&g).unwrap();
        let numeric = numeric_fourier(&g, &QuadOptions::transform());
        let mut worst = 0.0_f64;
        for i in 0..100 {
            let k = 6.0 / sigma * i as f64 / 99.0;
            let a = analytic.eval(k).unwrap();
            let n = numeric.eval(k).unwrap();
            worst = worst.max(((a - n) / a).abs());
        }
        assert!(worst <= 1e-9, "d={d} sigma={sigma}: {worst:e}");
    }
}

#[test]
fn zero_frequency_is_total_mass() {
    let g = gaussian_profile(1.7, 3).unwrap();
    let numeric = numeric_fourier(&g, &QuadOptions::transform());
    assert!((numeric.eval(0.0).unwrap() - (2.0 * PI).powf(-1.5)).abs() < 1e-13);
}

#[test]
fn inverse_of_gaussian_spectrum_is_the_gaussian() {
    let s = SpectralProfile::gaussian(1.0, Dim::Three).unwrap();
    let analytic = inverse_fourier_radial(&s).unwrap();
    let numeric = numeric_inverse(&s, s.k_max(), &QuadOptions::transform());
    let g = gaussian_profile(1.0, 3).unwrap();
    let peak = g.eval(0.0).unwrap();
    for r in [0.0, 0.3, 1.0, 2.5, 4.0] {
        let want = g.eval(r).unwrap();
        assert_eq!(analytic.eval(r).unwrap(), want);
        assert!((numeric.eval(r).unwrap() - want).abs() <= 1e-10 * peak, "r={r}");
    }
    let zero = inverse_fourier_radial(&SpectralProfile::zero(Dim::Two)).unwrap();
    assert_eq!(zero.eval(1.0).unwrap(), 0.0);
}

fn round_trip_defect(p: &RadialProfile, rs: &[f64]) -> f64 {
    let opts = QuadOptions::transform();
    let fwd = numeric_fourier(p, &opts);
    let back = numeric_inverse(&fwd, fwd.k_max(), &opts);
    let peak = rs
        .iter()
        .map(|&r| p.eval(r).unwrap().abs())
        .fold(0.0, f64::max);
    rs.iter()
        .map(|&r| (back.eval(r).unwrap() - p.eval(r).unwrap()).abs() / peak)
        .fold(0.0, f64::max)
}

#[test]
fn round_trip_gaussians() {
    let rs: Vec<f64> = (0..12).map(|i| i as f64 * 0.35).collect();
    for d in [2, 3] {
        let g = gaussian_profile(1.0, d).unwrap();
        let defect = round_trip_defect(&g, &rs);
        assert!(defect <= 1e-8, "d={d}: {defect:e}");
    }
}

#[test]
fn round_trip_gaussian_shells() {
    let rs: Vec<f64> = (0..12).map(|i| 1.0 + i as f64 * 0.45).collect();
    for order in 0..=2 {
        let defect = round_trip_defect(&shell(1.0, 3.5, order), &rs);
        assert!(defect <= 1e-8, "order={order}: {defect:e}");
    }
}

#[test]
fn round_trip_two_dimensional_disk_profile() {
    let p = RadialProfile::new(
        Dim::Two,
        RadialKind::GaussianDisk {
            sigma: 1.0,
            delta: 2.0,
        },
    )
    .unwrap();
    let rs: Vec<f64> = (0..8).map(|i| i as f64 * 0.55).collect();
    let defect = round_trip_defect(&p, &rs);
    assert!(defect <= 1e-8, "{defect:e}");
}

#[test]
fn shell_closed_forms_match_inverse_of_propagated_spectra() {
    let opts = QuadOptions::transform();
    let fa = SpectralProfile::gaussian(1.0, Dim::Three).unwrap();
    let cases = [
        (0u8, fa.propagated(qfield::smearing::Propagator::Sinc, 4.0, -1.0)),
        (1, fa.propagated(qfield::smearing::Propagator::Cos, 4.0, 1.0)),
        (2, fa.propagated(qfield::smearing::Propagator::KSin, 4.0, -1.0)),
    ];
    for (order, spectrum) in cases {
        let closed = shell(1.0, 4.0, order);
        let numeric = numeric_inverse(&spectrum, spectrum.k_max(), &opts);
        let mut peak = 0.0_f64;
        let mut worst = 0.0_f64;
        for i in 0..40 {
            let r = i as f64 * 0.25;
            let c = closed.eval(r).unwrap();
            peak = peak.max(c.abs());
            worst = worst.max((numeric.eval(r).unwrap() - c).abs());
        }
        assert!(worst <= 1e-9 * peak, "order={order}: {worst:e} vs peak {peak:e}");
    }
}

#[test]
fn parseval() {
    let opts = QuadOptions::default();
    let profiles = [
        gaussian_profile(1.0, 3).unwrap(),
        gaussian_profile(1.0, 2).unwrap(),
        shell(1.0, 2.0, 1),
    ];
    for p in profiles {
        let dim = p.dim();
        let (lo, hi) = p.support();
        let x_norm = integrate(|r| dim.shell(r) * p.eval(r).unwrap().powi(2), lo, hi, &opts).unwrap();
        let s = numeric_fourier(&p, &QuadOptions::transform());
        let k_norm =
            integrate(|k| dim.shell(k) * s.eval(k).unwrap().powi(2), 0.0, s.k_max(), &opts).unwrap();
        assert!(((x_norm - k_norm) / x_norm).abs() <= 1e-8, "{dim:?}: {x_norm} vs {k_norm}");
    }
}

#[test]
fn oscillatory_gaussian_cosine_at_ten_sigma() {
    // ∫_0^∞ e^{-k²/4} cos(10k) dk = √π e^{-100}, which is ~e^{-100} times the integrand scale;
    // a relative check is only possible against the full-range l1 scale.
    let opts = QuadOptions::default().l1();
    let got = integrate(|k| (-k * k / 4.0).exp() * (10.0 * k).cos(), 0.0, 40.0, &opts).unwrap();
    let want = PI.sqrt() * (-100.0_f64).exp();
    assert!((got - want).abs() <= 1e-10 * PI.sqrt());
    // With a k² weight the result is O(1): ∫ k² e^{-k²/4} cos(10k) dk, from the
    // second derivative in Δ of √π e^{-Δ²}.
    let opts = QuadOptions::default();
    let got = integrate(
        |k| k * k * (-k * k / 4.0).exp() * (3.0 * k).cos(),
        0.0,
        40.0,
        &opts,
    )
    .unwrap();
    let want = -PI.sqrt() * (4.0 * 9.0 - 2.0) * (-9.0_f64).exp();
    assert!(((got - want) / want).abs() <= 1e-10, "{got} vs {want}");
}
