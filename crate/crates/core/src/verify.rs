//! Invariant suites over every module, with a machine-readable report.

use std::f64::consts::PI;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::channel::{
    all_signs, assemble_rho, assemble_rho_merged, broadcast_sweep, channel_amplitudes,
    coherent_info_of, default_r0_grid, gram, merged_vacuum_factor, wick_factor, BobSpec,
    ChannelConfig, Fault, GramRoute,
};
use crate::error::{Error, Result};
use crate::observables::{
    gaussian_W_closed_form, overlap_W, wick_expectation, ExponentString, KGrid, SpectralAmplitude,
};
use crate::propagation::{bob_profile_2d_fb1, bob_profiles_2d_numeric, bob_profiles_3d, bob_spectra};
use crate::qmath::{
    conditional_entropy, hermitian_eigen, hermitian_eigenvalues, random_density_matrix,
    random_separable_state, von_neumann_entropy, coherent_information, CMat,
};
use crate::smearing::{
    gaussian_profile, integrate, numeric_fourier, numeric_inverse, Dim, QuadOptions, RadialKind,
    RadialProfile, SpectralProfile,
};

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub passed: bool,
    /// Largest observed violation measure; compared against `tolerance`.
    pub worst_residual: f64,
    pub tolerance: f64,
    pub detail: String,
}

impl SuiteReport {
    fn bound(name: &'static str, worst: f64, tolerance: f64, detail: impl Into<String>) -> Self {
        Self {
            name,
            passed: worst <= tolerance,
            worst_residual: worst,
            tolerance,
            detail: detail.into(),
        }
    }

    fn errored(name: &'static str, e: Error) -> Self {
        Self {
            name,
            passed: false,
            worst_residual: f64::INFINITY,
            tolerance: 0.0,
            detail: format!("error: {e}"),
        }
    }
}

impl fmt::Display for SuiteReport {
    /// `name<TAB>PASS|FAIL<TAB>worst<TAB>tolerance<TAB>detail`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}\t{}\t{:.6e}\t{:.1e}\t{}",
            self.name,
            if self.passed { "PASS" } else { "FAIL" },
            self.worst_residual,
            self.tolerance,
            self.detail
        )
    }
}

#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    pub fault: Option<Fault>,
    /// Run only suites whose name contains one of these.
    pub filter: Vec<String>,
}

type Suite = fn(&VerifyOptions) -> Result<SuiteReport>;

const SUITES: &[(&str, Suite)] = &[
    ("qmath.entropy_axioms", entropy_axioms),
    ("qmath.eigen_residuals", eigen_residuals),
    ("qmath.concavity", concavity),
    ("qmath.separability_bound", separability_bound),
    ("smearing.round_trip", round_trip),
    ("smearing.parseval", parseval),
    ("smearing.oscillatory", oscillatory),
    ("observables.conjugate_symmetry", conjugate_symmetry),
    ("observables.positivity", positivity),
    ("observables.closed_form_vs_quadrature", closed_form_vs_quadrature),
    ("observables.bch_consistency", bch_consistency),
    ("observables.amplitude_identities", amplitude_identities),
    ("propagation.lightlike_localization", lightlike_localization),
    ("propagation.huygens_contrast", huygens_contrast),
    ("propagation.dual_route", dual_route),
    ("channel.state_validity", state_validity),
    ("channel.perfect_reduction", perfect_reduction),
    ("channel.rank1_null", rank1_null),
    ("channel.complementarity", complementarity),
    ("channel.no_simultaneous_broadcast", no_simultaneous_broadcast),
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|(n, _)| *n).collect()
}

/// Runs the selected suites in a fixed order. Suites that error are reported as failures.
pub fn run_suites(opts: &VerifyOptions) -> Vec<SuiteReport> {
    SUITES
        .iter()
        .filter(|(name, _)| opts.filter.is_empty() || opts.filter.iter().any(|f| name.contains(f.as_str())))
        .map(|(name, suite)| {
            suite(opts)
                .map(|mut r| {
                    r.name = name;
                    r
                })
                .unwrap_or_else(|e| SuiteReport::errored(name, e))
        })
        .collect()
}

fn rng(stream: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x5eed_0000 + stream)
}

// ---------------------------------------------------------------- qmath

fn entropy_axioms(_: &VerifyOptions) -> Result<SuiteReport> {
    let mut worst: f64 = 0.0;
    for seed in 0..200 {
        let c = random_density_matrix(2, 2 * seed)?;
        let b = random_density_matrix(2, 2 * seed + 1)?;
        let s_c = von_neumann_entropy(&c)?;
        let s_b = von_neumann_entropy(&b)?;
        let s_cb = von_neumann_entropy(&c.tensor(&b)?)?;
        worst = worst.max((s_cb - s_c - s_b).abs()).max(-s_c).max(-s_b);
    }
    Ok(SuiteReport::bound("", worst, 1e-9, "additivity on 200 products, S >= 0"))
}

fn eigen_residuals(_: &VerifyOptions) -> Result<SuiteReport> {
    let mut worst: f64 = 0.0;
    for seed in 0..200 {
        let rho = random_density_matrix(if seed % 2 == 0 { 2 } else { 4 }, 1000 + seed)?;
        let m = rho.matrix();
        let e = hermitian_eigen(m)?;
        for (val, vec) in e.values.iter().zip(&e.vectors) {
            let mv = m.apply(vec);
            let r = mv
                .iter()
                .zip(vec)
                .map(|(a, b)| (a - b * val).norm_sqr())
                .sum::<f64>()
                .sqrt();
            worst = worst.max(r);
        }
    }
    Ok(SuiteReport::bound("", worst, 1e-10, "|A v - λ v| over 200 random states"))
}

fn concavity(_: &VerifyOptions) -> Result<SuiteReport> {
    let mut r = rng(1);
    let mut worst: f64 = 0.0;
    for i in 0..1000u64 {
        let a = random_density_matrix(4, 20_000 + 2 * i)?;
        let b = random_density_matrix(4, 20_001 + 2 * i)?;
        let w: f64 = r.gen();
        let mixed = conditional_entropy(&a.mix(&b, w))?;
        let bound = w * conditional_entropy(&a)? + (1.0 - w) * conditional_entropy(&b)?;
        worst = worst.max(bound - mixed);
    }
    Ok(SuiteReport::bound("", worst, 1e-9, "S(C|B) concave on 1000 triples"))
}

fn separability_bound(_: &VerifyOptions) -> Result<SuiteReport> {
    let mut worst = f64::NEG_INFINITY;
    for i in 0..1000u64 {
        let n = 1 + (i % 6) as usize;
        let rho = random_separable_state(n, 40_000 + i)?;
        worst = worst.max(coherent_information(&rho)?);
    }
    Ok(SuiteReport::bound("", worst, 1e-9, "max I_c over 1000 separable states"))
}

// ---------------------------------------------------------------- smearing

fn shell(sigma: f64, delta: f64, order: u8) -> Result<RadialProfile> {
    RadialProfile::new(
        Dim::Three,
        RadialKind::GaussianShell {
            sigma,
            delta,
            order,
            scale: 1.0,
        },
    )
}

fn round_trip(_: &VerifyOptions) -> Result<SuiteReport> {
    let opts = QuadOptions::transform();
    let mut worst: f64 = 0.0;
    let cases = [
        (gaussian_profile(1.0, 3)?, 0.0),
        (gaussian_profile(1.0, 2)?, 0.0),
        (shell(1.0, 3.5, 0)?, 1.0),
        (shell(1.0, 3.5, 1)?, 1.0),
        (shell(1.0, 3.5, 2)?, 1.0),
    ];
    for (p, r_lo) in cases {
        let fwd = numeric_fourier(&p, &opts);
        let back = numeric_inverse(&fwd, fwd.k_max(), &opts);
        let rs: Vec<f64> = (0..10).map(|i| r_lo + 0.45 * i as f64).collect();
        let mut peak: f64 = 0.0;
        let mut err: f64 = 0.0;
        for &r in &rs {
            let v = p.eval(r)?;
            peak = peak.max(v.abs());
            err = err.max((back.eval(r)? - v).abs());
        }
        worst = worst.max(err / peak);
    }
    Ok(SuiteReport::bound("", worst, 1e-8, "forward then inverse, sup-norm over peak"))
}

fn parseval(_: &VerifyOptions) -> Result<SuiteReport> {
    let opts = QuadOptions::default();
    let mut worst: f64 = 0.0;
    for p in [gaussian_profile(1.0, 3)?, gaussian_profile(1.0, 2)?, shell(1.0, 2.0, 1)?] {
        let dim = p.dim();
        let (lo, hi) = p.support();
        let x = integrate(|r| dim.shell(r) * p.eval(r).unwrap_or(f64::NAN).powi(2), lo, hi, &opts)?;
        let s = numeric_fourier(&p, &QuadOptions::transform());
        let k = integrate(|k| dim.shell(k) * s.eval(k).unwrap_or(f64::NAN).powi(2), 0.0, s.k_max(), &opts)?;
        worst = worst.max(((x - k) / x).abs());
    }
    Ok(SuiteReport::bound("", worst, 1e-8, "position vs momentum L2 norms"))
}

fn oscillatory(_: &VerifyOptions) -> Result<SuiteReport> {
    let rel_tol = crate::smearing::DEFAULT_REL_TOL;
    let opts = QuadOptions::default();
    // ∫_0^∞ k² e^{-k²/4} cos(Δk) dk = −√π (4Δ² − 2) e^{-Δ²}; at Δ = 10 this is checked
    // against the integrand's own scale, at Δ = 3 relatively.
    let f = |d: f64| move |k: f64| k * k * (-k * k / 4.0).exp() * (d * k).cos();
    let exact = |d: f64| -PI.sqrt() * (4.0 * d * d - 2.0) * (-d * d).exp();
    let got3 = integrate(f(3.0), 0.0, 40.0, &opts)?;
    let got10 = integrate(f(10.0), 0.0, 40.0, &QuadOptions::default().l1())?;
    let scale = PI.sqrt() * 2.0;
    let worst = ((got3 - exact(3.0)) / exact(3.0)).abs().max((got10 - exact(10.0)).abs() / scale);
    Ok(SuiteReport::bound("", worst, rel_tol, "Gaussian times cos(Δk) at Δ/σ = 3, 10"))
}

// ---------------------------------------------------------------- observables

fn alice_pair(dim: Dim, lambda_phi: f64, lambda_pi: f64) -> Result<(SpectralAmplitude, SpectralAmplitude)> {
    let cfg = ChannelConfig::gaussian(dim, 1.0, lambda_phi)
        .with_lambda_pi(lambda_pi)
        .with_route(GramRoute::Quadrature);
    let a = channel_amplitudes(&cfg)?;
    Ok((a.slots[0].clone(), a.slots[1].clone()))
}

fn conjugate_symmetry(_: &VerifyOptions) -> Result<SuiteReport> {
    let mut worst: f64 = 0.0;
    for dim in [Dim::Three, Dim::Two] {
        let cfg = ChannelConfig::gaussian(dim, 1.0, 7.0).with_route(GramRoute::Quadrature);
        let a = channel_amplitudes(&cfg)?;
        for l in &a.slots {
            for m in &a.slots {
                let lm = overlap_W(l, m)?;
                let ml = overlap_W(m, l)?;
                worst = worst.max((lm - ml.conj()).norm() / lm.norm().max(1e-300));
            }
        }
    }
    Ok(SuiteReport::bound("", worst, 1e-12, "W_lm vs conj W_ml, relative"))
}

fn positivity(_: &VerifyOptions) -> Result<SuiteReport> {
    let mut worst: f64 = 0.0;
    let mut r = rng(2);
    let cfg = ChannelConfig::gaussian(Dim::Three, 1.0, 3.0).with_route(GramRoute::Quadrature);
    let a = channel_amplitudes(&cfg)?;
    for s in &a.slots {
        worst = worst.max(-overlap_W(s, s)?.re);
    }
    for _ in 0..100 {
        let mut string = ExponentString::new();
        let n = r.gen_range(0..=8);
        for _ in 0..n {
            let sign = if r.gen::<bool>() { 1 } else { -1 };
            string.push(sign, a.slots[r.gen_range(0..4)].clone())?;
        }
        worst = worst.max(wick_expectation(&string)?.norm() - 1.0);
    }
    Ok(SuiteReport::bound("", worst, 1e-10, "Re W_ll >= 0 and |<0|S|0>| <= 1"))
}

fn closed_form_vs_quadrature(_: &VerifyOptions) -> Result<SuiteReport> {
    let mut worst: f64 = 0.0;
    for ratio in [1.0, 10.0, 100.0] {
        let lambda_pi = crate::observables::fine_tuned_lambda_pi(Dim::Three, 1.0, ratio)?;
        let (phi, pi) = alice_pair(Dim::Three, ratio, lambda_pi)?;
        for bits in 0..16u32 {
            let s = |i: u32| if bits >> i & 1 == 1 { -1.0 } else { 1.0 };
            let (xl, zl, xm, zm) = (s(0), s(1), s(2), s(3));
            let ol = pi.scaled(xl).add_scaled(&phi, zl)?;
            let om = pi.scaled(xm).add_scaled(&phi, zm)?;
            let q = overlap_W(&ol, &om)?;
            let c = gaussian_W_closed_form(xl, zl, xm, zm, 1.0, ratio, lambda_pi);
            worst = worst.max((q - c).norm() / c.norm());
        }
    }
    Ok(SuiteReport::bound("", worst, 1e-8, "16 sign patterns x 3 coupling ratios"))
}

fn bch_consistency(opts: &VerifyOptions) -> Result<SuiteReport> {
    let mut r = rng(3);
    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        let dim = if r.gen::<bool>() { Dim::Three } else { Dim::Two };
        let sigma = r.gen_range(0.5..2.0);
        let lambda_phi = 10f64.powf(r.gen_range(-1.0..3.0)) * sigma;
        let lambda_pi = r.gen_range(0.0..2.0)
            * crate::observables::fine_tuned_lambda_pi(dim, sigma, lambda_phi)?;
        let cfg = ChannelConfig::gaussian(dim, sigma, lambda_phi).with_lambda_pi(lambda_pi);
        let g = gram(&cfg)?.with_fault(opts.fault);
        for s in all_signs() {
            let eight = wick_factor(&g, &s);
            let four = merged_vacuum_factor(dim, sigma, lambda_phi, lambda_pi, &s);
            worst = worst.max((eight - four).norm());
        }
    }
    Ok(SuiteReport::bound("", worst, 1e-10, "8-slot vs merged 4-slot vacuum factors, 50 configs"))
}

/// Worst pointwise residual of both amplitude identities, relative to the peak amplitude.
pub fn amplitude_identity_residual(dim: Dim, sigma: f64, delta: f64, n: usize) -> Result<f64> {
    let grid = KGrid::uniform(dim, crate::smearing::GAUSSIAN_KMAX_FACTOR / sigma, n)?;
    let sample = |s: &SpectralProfile| -> Result<Vec<f64>> { grid.nodes().iter().map(|&k| s.eval(k)).collect() };
    let fa_spec = SpectralProfile::gaussian(sigma, dim)?;
    let fa = sample(&fa_spec)?;
    let [s1, s2, s3] = bob_spectra(&fa_spec, delta)?;
    let (f1, f2, f3) = (sample(&s1)?, sample(&s2)?, sample(&s3)?);
    let g = || std::sync::Arc::clone(&grid);
    let amp = |t: f64, phi: Option<&[f64]>, pi: Option<&[f64]>| SpectralAmplitude::from_spectra(g(), 1.0, t, phi, pi);
    // Φ̂[F](0) = Φ̂[F_B2](Δ) + π̂[F_B1](Δ)
    let lhs_phi = amp(0.0, Some(&fa), None)?;
    let rhs_phi = amp(delta, Some(&f2), None)?.add_scaled(&amp(delta, None, Some(&f1))?, 1.0)?;
    // π̂[F](0) = π̂[F_B2](Δ) + Φ̂[F_B3](Δ)
    let lhs_pi = amp(0.0, None, Some(&fa))?;
    let rhs_pi = amp(delta, None, Some(&f2))?.add_scaled(&amp(delta, Some(&f3), None)?, 1.0)?;
    Ok((lhs_phi.max_abs_diff(&rhs_phi)? / lhs_phi.peak()).max(lhs_pi.max_abs_diff(&rhs_pi)? / lhs_pi.peak()))
}

fn amplitude_identities(_: &VerifyOptions) -> Result<SuiteReport> {
    let mut worst: f64 = 0.0;
    for dim in [Dim::Three, Dim::Two] {
        for delta in [0.0, 1.0, 10.0] {
            worst = worst.max(amplitude_identity_residual(dim, 1.0, delta, 500)?);
        }
    }
    Ok(SuiteReport::bound("", worst, 1e-10, "500-point grid, both identities, relative to peak"))
}

// ---------------------------------------------------------------- propagation

/// Largest fraction of `∫|F_Bi| d^3x` outside `|r − Δ| ≤ 5σ`, over the three d = 3 profiles.
pub fn shell_leakage(sigma: f64, delta: f64) -> Result<f64> {
    let opts = QuadOptions::default().l1();
    let mut worst: f64 = 0.0;
    for p in bob_profiles_3d(sigma, delta)? {
        let f = |r: f64| 4.0 * PI * r * r * p.eval(r).unwrap_or(f64::NAN).abs();
        let lo = (delta - 5.0 * sigma).max(0.0);
        let hi = delta + 5.0 * sigma;
        let far = delta + 12.0 * sigma;
        let inside = integrate(f, lo, hi, &opts)?;
        let outside = integrate(f, 0.0, lo, &opts)? + integrate(f, hi, far, &opts)?;
        worst = worst.max(outside / (inside + outside));
    }
    Ok(worst)
}

fn lightlike_localization(_: &VerifyOptions) -> Result<SuiteReport> {
    let leak = shell_leakage(1.0, 10.0)?;
    Ok(SuiteReport::bound("", leak, 1e-6, "L1 mass outside |r - Δ| <= 5σ at Δ = 10σ"))
}

fn peak_abs(p: &RadialProfile, r_max: f64) -> Result<f64> {
    let mut peak: f64 = 0.0;
    for i in 0..=2000 {
        peak = peak.max(p.eval(r_max * i as f64 / 2000.0)?.abs());
    }
    Ok(peak)
}

/// `|F_B1(Δ/2)| / max|F_B1|` in d = 3 and d = 2.
pub fn interior_ratios(sigma: f64, delta: f64) -> Result<(f64, f64)> {
    let [fb1_3d, _, _] = bob_profiles_3d(sigma, delta)?;
    let fb1_2d = bob_profile_2d_fb1(sigma, delta)?;
    let r_max = delta + 8.0 * sigma;
    let r3 = fb1_3d.eval(0.5 * delta)?.abs() / peak_abs(&fb1_3d, r_max)?;
    let r2 = fb1_2d.eval(0.5 * delta)?.abs() / peak_abs(&fb1_2d, r_max)?;
    Ok((r3, r2))
}

fn huygens_contrast(_: &VerifyOptions) -> Result<SuiteReport> {
    let (r3, r2) = interior_ratios(1.0, 10.0)?;
    // Pass needs r3 <= 1e-20 and r2 >= 1e-3; the residual is the worse of the two log-margins.
    let margin = (r3 / 1e-20).log10().max((1e-3 / r2).log10());
    let mut rep = SuiteReport::bound(
        "",
        margin.max(0.0),
        0.0,
        format!("interior ratio d=3 {r3:.3e} (<= 1e-20), d=2 {r2:.3e} (>= 1e-3)"),
    );
    rep.passed = r3 <= 1e-20 && r2 >= 1e-3;
    Ok(rep)
}

fn dual_route(_: &VerifyOptions) -> Result<SuiteReport> {
    let opts = QuadOptions::transform();
    let (sigma, delta) = (1.0, 10.0);
    let fa = SpectralProfile::gaussian(sigma, Dim::Three)?;
    let spectra = bob_spectra(&fa, delta)?;
    let closed = bob_profiles_3d(sigma, delta)?;
    let mut worst3: f64 = 0.0;
    for (s, c) in spectra.iter().zip(&closed) {
        let numeric = numeric_inverse(s, s.k_max(), &opts);
        let rs: Vec<f64> = (0..200).map(|i| delta - 5.0 * sigma + 10.0 * sigma * i as f64 / 199.0).collect();
        let peak = rs.iter().map(|&r| c.eval(r).map(f64::abs)).collect::<Result<Vec<_>>>()?;
        let peak = peak.into_iter().fold(0.0, f64::max);
        for &r in &rs {
            worst3 = worst3.max((numeric.eval(r)? - c.eval(r)?).abs() / peak);
        }
    }
    let [fb1_numeric, _, _] = bob_profiles_2d_numeric(sigma, delta)?;
    let fb1 = bob_profile_2d_fb1(sigma, delta)?;
    let peak = peak_abs(&fb1, delta + 8.0 * sigma)?;
    let mut worst2: f64 = 0.0;
    for i in 0..50 {
        let r = (delta + 4.0 * sigma) * i as f64 / 49.0;
        worst2 = worst2.max((fb1_numeric.eval(r)? - fb1.eval(r)?).abs() / peak);
    }
    // Tolerances differ (1e-6 in d = 3, 1e-4 in d = 2); report the worse normalised margin.
    let margin = (worst3 / 1e-6).max(worst2 / 1e-4);
    Ok(SuiteReport::bound(
        "",
        margin,
        1.0,
        format!("d=3 closed vs inverse {worst3:.2e} (<= 1e-6), d=2 F_B1 {worst2:.2e} (<= 1e-4); residual is max ratio to tolerance"),
    ))
}

// ---------------------------------------------------------------- channel

/// `(Hermiticity defect, |Tr − 1|, −min eigenvalue)` of an assembled matrix.
pub fn state_defects(m: &CMat) -> Result<(f64, f64, f64)> {
    let herm = m.hermiticity_defect();
    let trace = (m.trace() - 1.0).norm();
    let sym = &(m + &m.adjoint()).scale_real(0.5);
    let min_eig = hermitian_eigenvalues(sym)?.into_iter().fold(f64::INFINITY, f64::min);
    Ok((herm, trace, -min_eig))
}

fn validity_configs() -> Vec<ChannelConfig> {
    let mut out = Vec::new();
    for dim in [Dim::Three, Dim::Two] {
        for l in [0.0, 0.1, 1.0, 10.0, 100.0, 1000.0] {
            let base = ChannelConfig::gaussian(dim, 1.0, l);
            out.push(base.clone());
            out.push(base.clone().with_bob(BobSpec::Rank1Only));
            out.push(base.clone().with_bob(BobSpec::None));
            out.push(base.clone().with_alice_rank1(true));
            if l > 0.0 {
                out.push(base.with_lambda_pi(0.0));
            }
        }
    }
    for l in [10.0, 1000.0] {
        for r0 in [3.0, 9.5, 10.0, 17.0] {
            let base = ChannelConfig::gaussian(Dim::Three, 1.0, l);
            out.push(base.clone().with_bob(BobSpec::TruncatedInner { r0, eps: 0.1 }));
            out.push(base.with_bob(BobSpec::TruncatedOuter { r0, eps: 0.1 }));
        }
    }
    out
}

fn state_validity(opts: &VerifyOptions) -> Result<SuiteReport> {
    let mut worst: f64 = 0.0;
    let configs = validity_configs();
    for cfg in &configs {
        let m = assemble_rho(&gram(cfg)?, opts.fault);
        let (h, t, e) = state_defects(&m)?;
        worst = worst.max(h).max(t).max(e);
    }
    Ok(SuiteReport::bound(
        "",
        worst,
        crate::qmath::STATE_TOL,
        format!("Hermiticity, trace and positivity over {} configs", configs.len()),
    ))
}

fn perfect_reduction(opts: &VerifyOptions) -> Result<SuiteReport> {
    let mut worst: f64 = 0.0;
    for dim in [Dim::Three, Dim::Two] {
        for l in [0.1, 1.0, 3.0, 10.0, 100.0, 1000.0] {
            let cfg = ChannelConfig::gaussian(dim, 1.0, l);
            let eight = assemble_rho(&gram(&cfg)?, opts.fault);
            let merged = assemble_rho_merged(dim, 1.0, l, cfg.resolved_lambda_pi()?);
            worst = worst.max(eight.max_abs_diff(&merged));
        }
    }
    Ok(SuiteReport::bound("", worst, 1e-10, "per-entry ρ_CB, 8-slot vs merged, Full Bob"))
}

fn rank1_null(_: &VerifyOptions) -> Result<SuiteReport> {
    let mut worst = f64::NEG_INFINITY;
    for dim in [Dim::Three, Dim::Two] {
        for l in [1.0, 10.0, 100.0] {
            let base = ChannelConfig::gaussian(dim, 1.0, l);
            for cfg in [
                base.clone().with_alice_rank1(true),
                base.clone().with_bob(BobSpec::Rank1Only),
                base.clone().with_lambda_pi(0.0),
            ] {
                worst = worst.max(coherent_info_of(&cfg)?);
            }
        }
    }
    Ok(SuiteReport::bound("", worst, 1e-9, "max I_c with a rank-1 encoder or decoder"))
}

fn complementarity(_: &VerifyOptions) -> Result<SuiteReport> {
    let mut worst: f64 = 0.0;
    for l in [10.0, 1000.0] {
        let base = ChannelConfig::gaussian(Dim::Three, 1.0, l);
        let full = coherent_info_of(&base)?;
        for eps in [0.1, 0.05] {
            let outer = base.clone().with_bob(BobSpec::TruncatedOuter { r0: 0.5, eps });
            worst = worst.max((coherent_info_of(&outer)? - full).abs());
        }
    }
    Ok(SuiteReport::bound("", worst, 1e-3, "outer Bob at small r0 vs Full Bob"))
}

fn no_simultaneous_broadcast(_: &VerifyOptions) -> Result<SuiteReport> {
    let mut worst = f64::NEG_INFINITY;
    for l in [10.0, 1000.0] {
        let t = ChannelConfig::gaussian(Dim::Three, 1.0, l);
        let eps = crate::channel::DEFAULT_EPS_OVER_SIGMA * t.sigma;
        for row in broadcast_sweep(&default_r0_grid(t.delta, t.sigma), &t, eps)? {
            worst = worst.max(row.ic_bob1.min(row.ic_bob2));
        }
    }
    Ok(SuiteReport::bound("", worst, 1e-6, "max over r0 of min(I_c bob1, I_c bob2)"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn census() {
        assert!(suite_names().len() >= 12);
        let mut names = suite_names();
        names.dedup();
        assert_eq!(names.len(), SUITES.len());
    }

    #[test]
    fn fault_breaks_bch_consistency() {
        let opts = VerifyOptions {
            fault: Some(Fault::WSign),
            filter: vec!["bch_consistency".into()],
        };
        let r = run_suites(&opts);
        assert_eq!(r.len(), 1);
        assert!(!r[0].passed);
        let clean = run_suites(&VerifyOptions {
            fault: None,
            filter: vec!["bch_consistency".into()],
        });
        assert!(clean[0].passed, "{}", clean[0]);
    }
}
