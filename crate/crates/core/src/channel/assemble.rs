//! Assembly of `ρ_CB` from the controlled-unitary decomposition of the encoder and decoder.
//!
//! Conventions, fixed here and nowhere else:
//!
//! * `U_A = exp(iσ_x π̂_A) exp(iσ_z Φ̂_A) = Σ_{x,z} P_x P_z ⊗ e^{ixπ̂_A} e^{izΦ̂_A}`, where
//!   `Φ̂_A = λ_φ Φ̂[F_A](0)` and `π̂_A = λ_π π̂[F_A](0)`.
//! * `U_B = exp(−iσ_z Ẑ_B) exp(−iσ_x X̂_B)` with `Ẑ_B`, `X̂_B` Bob's observables at `t = Δ`.
//!   For an untruncated Bob, `Ẑ_B = Φ̂_A` and `X̂_B = π̂_A` as operators.
//! * `|ψ_CA⟩ = (|−z⟩|+z⟩ + |+z⟩|−z⟩)/√2`, Bob starts in `|+y⟩`.
//! * After relabelling `x₁, z₁, x₃, z₃ → −x₁, −z₁, −x₃, −z₃`,
//!   `ρ_CB = ½ Σ_{j,k,x,z} ⟨0|S|0⟩ ⟨k|P_{−z₁}P_{−x₁}P_{x₄}P_{z₄}|j⟩ |−j⟩⟨−k| ⊗ P_{−z₃}P_{−x₃}|+y⟩⟨+y|P_{x₂}P_{z₂}`
//!   with the vacuum string
//!   `S = e^{iz₁Φ̂_A} e^{ix₁π̂_A} e^{ix₂X̂_B} e^{iz₂Ẑ_B} e^{iz₃Ẑ_B} e^{ix₃X̂_B} e^{ix₄π̂_A} e^{iz₄Φ̂_A}`.
//! * Merging neighbours, `e^{izΦ̂}e^{ixπ̂} = e^{xzC} e^{i(xπ̂ + zΦ̂)}` with `C = −½⟨[Φ̂_A, π̂_A]⟩`;
//!   the merged string carries `e^{(x₁z₁ − x₂z₂ + x₃z₃ − x₄z₄)C}`.

use std::sync::Arc;

use num_complex::Complex64;

use super::config::{BobSpec, ChannelConfig, GramRoute};
use crate::error::{Error, Result};
use crate::observables::{
    check_conditions, gaussian_W_closed_form, overlap_W, ConditionReport, ExponentString,
    GaussianMoments, KGrid, SpectralAmplitude,
};
use crate::propagation::{bob_profiles_3d, bob_spectra};
use crate::qmath::{coherent_information, ket, projector, Axis, CMat, DensityMatrix};
use crate::smearing::{bulk_fourier_3d, Dim, RadialProfile, SpectralProfile, Window, WindowSide};

/// Position-space reach of a Gaussian, in units of `σ`.
const REACH_SIGMAS: f64 = 8.0;

/// The four distinct observables of the vacuum string.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SlotKind {
    AlicePhi = 0,
    AlicePi = 1,
    BobX = 2,
    BobZ = 3,
}

/// Observable in each of the eight slots of the vacuum string.
pub const SLOT_KINDS: [SlotKind; 8] = [
    SlotKind::AlicePhi,
    SlotKind::AlicePi,
    SlotKind::BobX,
    SlotKind::BobZ,
    SlotKind::BobZ,
    SlotKind::BobX,
    SlotKind::AlicePi,
    SlotKind::AlicePhi,
];

/// Sign variables of the eight slots, after relabelling: `[z₁, x₁, x₂, z₂, z₃, x₃, x₄, z₄]`.
pub type SlotSigns = [i8; 8];

/// Deliberate corruptions, used to check that the verification suites can fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Flips the imaginary part of every two-point function.
    WSign,
}

/// `G_ab = ⟨0|Ô_a Ô_b|0⟩` over the four slot observables, couplings included.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Gram {
    pub g: [[Complex64; 4]; 4],
}

impl Gram {
    pub fn entry(&self, a: SlotKind, b: SlotKind) -> Complex64 {
        self.g[a as usize][b as usize]
    }

    /// `max |G_ab − conj(G_ba)|`
    pub fn hermiticity_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for a in 0..4 {
            for b in 0..4 {
                worst = worst.max((self.g[a][b] - self.g[b][a].conj()).norm());
            }
        }
        worst
    }

    pub fn max_abs_diff(&self, other: &Gram) -> f64 {
        let mut worst: f64 = 0.0;
        for a in 0..4 {
            for b in 0..4 {
                worst = worst.max((self.g[a][b] - other.g[a][b]).norm());
            }
        }
        worst
    }

    /// The same Gram with `fault` applied.
    pub fn with_fault(mut self, fault: Option<Fault>) -> Self {
        if let Some(Fault::WSign) = fault {
            for row in &mut self.g {
                for v in row {
                    *v = v.conj();
                }
            }
        }
        self
    }
}

/// Sampled amplitudes of the four slot observables on one grid.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelAmplitudes {
    pub grid: Arc<KGrid>,
    pub slots: [SpectralAmplitude; 4],
}

impl ChannelAmplitudes {
    pub fn slot(&self, kind: SlotKind) -> &SpectralAmplitude {
        &self.slots[kind as usize]
    }

    pub fn gram(&self) -> Result<Gram> {
        let mut g = [[Complex64::new(0.0, 0.0); 4]; 4];
        for (a, row) in g.iter_mut().enumerate() {
            for (b, v) in row.iter_mut().enumerate() {
                *v = overlap_W(&self.slots[a], &self.slots[b])?;
            }
        }
        Ok(Gram { g })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChannelResult {
    pub rho_cb: DensityMatrix,
    /// In bits.
    pub coherent_info: f64,
    pub condition_report: ConditionReport,
}

/// Effective couplings `(λ_φ, λ_π^A, λ_π^B, λ_φ^B)` after the rank-1 switches.
fn slot_couplings(config: &ChannelConfig) -> Result<[f64; 4]> {
    let lambda_pi = config.resolved_lambda_pi()?;
    let alice_pi = if config.alice_rank1 { 0.0 } else { lambda_pi };
    let (bob_x, bob_z) = match config.bob {
        BobSpec::Rank1Only => (0.0, config.lambda_phi),
        BobSpec::None => (0.0, 0.0),
        _ => (lambda_pi, config.lambda_phi),
    };
    Ok([config.lambda_phi, alice_pi, bob_x, bob_z])
}

/// Closed-form Gram for Gaussian Alice and an untruncated Bob.
fn closed_form_gram(config: &ChannelConfig) -> Result<Gram> {
    let m = GaussianMoments::new(config.dim, config.sigma);
    let half = 0.5 * m.norm2;
    // Unit two-point functions indexed by (Φ̂ = 0, π̂ = 1).
    let unit = [
        [Complex64::new(m.phi2, 0.0), Complex64::new(0.0, half)],
        [Complex64::new(0.0, -half), Complex64::new(m.pi2, 0.0)],
    ];
    let quadrature = [0, 1, 1, 0];
    let c = slot_couplings(config)?;
    let mut g = [[Complex64::new(0.0, 0.0); 4]; 4];
    for a in 0..4 {
        for b in 0..4 {
            g[a][b] = unit[quadrature[a]][quadrature[b]] * (c[a] * c[b]);
        }
    }
    Ok(Gram { g })
}

fn channel_grid(config: &ChannelConfig) -> Result<Arc<KGrid>> {
    let reach = config.delta + REACH_SIGMAS * config.sigma;
    KGrid::new(config.dim, config.sigma, reach, config.resolved_k_max())
}

fn sample(s: &SpectralProfile, grid: &KGrid) -> Result<Vec<f64>> {
    grid.nodes().iter().map(|&k| s.eval(k)).collect()
}

/// Bob's `(X̂_B, Ẑ_B)` amplitudes from `(F̃_B1, F̃_B2, F̃_B3)` sampled on the grid.
fn bob_amplitudes(
    grid: &Arc<KGrid>,
    couplings: &[f64; 4],
    delta: f64,
    fb: [&[f64]; 3],
) -> Result<(SpectralAmplitude, SpectralAmplitude)> {
    // X̂_B = λ_π (π̂[F_B2] + Φ̂[F_B3]),  Ẑ_B = λ_φ (Φ̂[F_B2] + π̂[F_B1]).
    let x = SpectralAmplitude::from_spectra(Arc::clone(grid), couplings[2], delta, Some(fb[2]), Some(fb[1]))?;
    let z = SpectralAmplitude::from_spectra(Arc::clone(grid), couplings[3], delta, Some(fb[1]), Some(fb[0]))?;
    Ok((x, z))
}

fn alice_amplitudes(
    config: &ChannelConfig,
    grid: &Arc<KGrid>,
    couplings: &[f64; 4],
) -> Result<(SpectralAmplitude, SpectralAmplitude)> {
    let fa = sample(&SpectralProfile::gaussian(config.sigma, config.dim)?, grid)?;
    let phi = SpectralAmplitude::from_spectra(Arc::clone(grid), couplings[0], 0.0, Some(&fa), None)?;
    let pi = SpectralAmplitude::from_spectra(Arc::clone(grid), couplings[1], 0.0, None, Some(&fa))?;
    Ok((phi, pi))
}

/// Trapezoid step for the windowed shell transforms: the integrand bandwidth is
/// below `k_max + 12/ε + 12/σ`.
fn bulk_step(k_max: f64, eps: f64, sigma: f64) -> f64 {
    0.9 * 2.0 * std::f64::consts::PI / (k_max + 12.0 / eps + 12.0 / sigma)
}

/// Spectra of `w · F_Bi` for each window, on the grid nodes. Output is `[window][i][node]`.
fn windowed_bob_spectra(
    config: &ChannelConfig,
    grid: &KGrid,
    windows: &[Window],
) -> Result<Vec<[Vec<f64>; 3]>> {
    let base = bob_profiles_3d(config.sigma, config.delta)?;
    let profiles: Vec<RadialProfile> = windows
        .iter()
        .flat_map(|w| base.iter().map(move |p| p.windowed(*w)))
        .collect();
    let refs: Vec<&RadialProfile> = profiles.iter().collect();
    let eps = windows.iter().map(|w| w.eps).fold(f64::INFINITY, f64::min);
    let r_lo = (config.delta - REACH_SIGMAS * config.sigma).max(0.0);
    let r_hi = config.delta + REACH_SIGMAS * config.sigma;
    let h = bulk_step(grid.k_max(), eps, config.sigma);
    let mut spectra = bulk_fourier_3d(&refs, grid.nodes(), r_lo, r_hi, h)?.into_iter();
    let mut out = Vec::with_capacity(windows.len());
    for _ in windows {
        let mut next = || spectra.next().ok_or_else(|| Error::bad("bulk transform lost a profile"));
        out.push([next()?, next()?, next()?]);
    }
    Ok(out)
}

fn window_of(bob: BobSpec) -> Option<Window> {
    match bob {
        BobSpec::TruncatedInner { r0, eps } => Some(Window { r0, eps, side: WindowSide::Inner }),
        BobSpec::TruncatedOuter { r0, eps } => Some(Window { r0, eps, side: WindowSide::Outer }),
        _ => None,
    }
}

/// Samples all four slot amplitudes on a common k-grid.
pub fn channel_amplitudes(config: &ChannelConfig) -> Result<ChannelAmplitudes> {
    config.validate()?;
    let grid = channel_grid(config)?;
    let c = slot_couplings(config)?;
    let (a_phi, a_pi) = alice_amplitudes(config, &grid, &c)?;
    let (bx, bz) = match window_of(config.bob) {
        Some(w) => {
            let [s1, s2, s3] = windowed_bob_spectra(config, &grid, &[w])?
                .pop()
                .expect("one window in, one out");
            bob_amplitudes(&grid, &c, config.delta, [&s1, &s2, &s3])?
        }
        None => {
            let fa_spec = SpectralProfile::gaussian(config.sigma, config.dim)?;
            let [s1, s2, s3] = bob_spectra(&fa_spec, config.delta)?;
            let (s1, s2, s3) = (sample(&s1, &grid)?, sample(&s2, &grid)?, sample(&s3, &grid)?);
            bob_amplitudes(&grid, &c, config.delta, [&s1, &s2, &s3])?
        }
    };
    Ok(ChannelAmplitudes {
        grid,
        slots: [a_phi, a_pi, bx, bz],
    })
}

/// Gram matrix on the route selected by the config.
pub fn gram(config: &ChannelConfig) -> Result<Gram> {
    config.validate()?;
    let truncated = window_of(config.bob).is_some();
    if config.route == GramRoute::Auto && !truncated {
        return closed_form_gram(config);
    }
    channel_amplitudes(config)?.gram()
}

/// Grams of the inner and outer truncated Bobs at one `r0`, sharing a single transform pass.
/// `template.bob` is ignored.
pub fn truncated_pair_grams(template: &ChannelConfig, r0: f64, eps: f64) -> Result<(Gram, Gram)> {
    let inner_cfg = template.clone().with_bob(BobSpec::TruncatedInner { r0, eps });
    inner_cfg.validate()?;
    let grid = channel_grid(&inner_cfg)?;
    let c = slot_couplings(&inner_cfg)?;
    let (a_phi, a_pi) = alice_amplitudes(&inner_cfg, &grid, &c)?;
    let windows = [
        Window::new(r0, eps, WindowSide::Inner)?,
        Window::new(r0, eps, WindowSide::Outer)?,
    ];
    let mut grams = Vec::with_capacity(2);
    for [s1, s2, s3] in windowed_bob_spectra(&inner_cfg, &grid, &windows)? {
        let (bx, bz) = bob_amplitudes(&grid, &c, inner_cfg.delta, [&s1, &s2, &s3])?;
        let amps = ChannelAmplitudes {
            grid: Arc::clone(&grid),
            slots: [a_phi.clone(), a_pi.clone(), bx, bz],
        };
        grams.push(amps.gram()?);
    }
    let outer = grams.pop().expect("two windows");
    let inner = grams.pop().expect("two windows");
    Ok((inner, outer))
}

/// The 8-slot vacuum string for one sign assignment.
pub fn build_exponent_string(amps: &ChannelAmplitudes, signs: &SlotSigns) -> Result<ExponentString> {
    let mut s = ExponentString::new();
    for (kind, &sign) in SLOT_KINDS.iter().zip(signs) {
        s.push(sign, amps.slot(*kind).clone())?;
    }
    Ok(s)
}

/// `⟨0|S|0⟩` from the Gram matrix. The real part of the exponent is collected as a
/// quadratic form in the per-kind sign totals, which keeps it exact when the
/// individual two-point functions are large.
pub fn wick_factor(gram: &Gram, signs: &SlotSigns) -> Complex64 {
    let mut totals = [0.0f64; 4];
    for (kind, &s) in SLOT_KINDS.iter().zip(signs) {
        totals[*kind as usize] += f64::from(s);
    }
    let mut re = 0.0;
    for a in 0..4 {
        for b in 0..4 {
            re -= 0.5 * totals[a] * totals[b] * gram.g[a][b].re;
        }
    }
    let mut im = 0.0;
    for l in 0..8 {
        for m in l + 1..8 {
            let w = gram.g[SLOT_KINDS[l] as usize][SLOT_KINDS[m] as usize];
            im -= f64::from(signs[l] * signs[m]) * w.im;
        }
    }
    Complex64::new(re, im).exp()
}

/// The 256 sign assignments, in a fixed order.
pub fn all_signs() -> impl Iterator<Item = SlotSigns> {
    (0u32..256).map(|bits| {
        let mut s = [1i8; 8];
        for (i, v) in s.iter_mut().enumerate() {
            if bits >> i & 1 == 1 {
                *v = -1;
            }
        }
        s
    })
}

/// `Σ_{j,k} ⟨k|A|j⟩ |−j⟩⟨−k|` for `A = P_{−z₁}P_{−x₁}P_{x₄}P_{z₄}`.
fn reference_factor(z1: i8, x1: i8, x4: i8, z4: i8) -> CMat {
    let a = &(&(&projector(Axis::Z, -z1) * &projector(Axis::X, -x1)) * &projector(Axis::X, x4))
        * &projector(Axis::Z, z4);
    let mut m = CMat::zeros(2);
    for r in 0..2 {
        for c in 0..2 {
            m[(r, c)] = a[(1 - c, 1 - r)];
        }
    }
    m
}

/// `P_{−z₃}P_{−x₃}|+y⟩⟨+y|P_{x₂}P_{z₂}`
fn bob_factor(z3: i8, x3: i8, x2: i8, z2: i8) -> CMat {
    let y = ket(Axis::Y, 1);
    let left = &projector(Axis::Z, -z3) * &projector(Axis::X, -x3);
    let right = &projector(Axis::X, x2) * &projector(Axis::Z, z2);
    &(&left * &CMat::outer(&y, &y)) * &right
}

/// Qubit factor of one term: `reference ⊗ bob`.
fn qubit_factor(s: &SlotSigns) -> CMat {
    let [z1, x1, x2, z2, z3, x3, x4, z4] = *s;
    reference_factor(z1, x1, x4, z4).kron(&bob_factor(z3, x3, x2, z2))
}

fn sum_terms(mut vacuum: impl FnMut(&SlotSigns) -> Result<Complex64>) -> Result<CMat> {
    let mut rho = CMat::zeros(4);
    for s in all_signs() {
        let w = vacuum(&s)?;
        rho += &qubit_factor(&s).scale(w * 0.5);
    }
    Ok(rho)
}

/// Unvalidated `ρ_CB` from the 8-slot string.
pub fn assemble_rho(gram: &Gram, fault: Option<Fault>) -> CMat {
    let g = gram.with_fault(fault);
    sum_terms(|s| Ok(wick_factor(&g, s))).expect("infallible vacuum factor")
}

/// Unvalidated `ρ_CB` from the 8-slot string, each vacuum factor evaluated directly by
/// the Wick product formula on sampled amplitudes.
pub fn assemble_rho_from_strings(amps: &ChannelAmplitudes) -> Result<CMat> {
    sum_terms(|s| crate::observables::wick_expectation(&build_exponent_string(amps, s)?))
}

/// Two-point function of `xλ_π π̂_A + zλ_φ Φ̂_A` pairs from the Gaussian moments.
fn merged_w(dim: Dim, sigma: f64, lp: f64, lpi: f64, l: (f64, f64), m: (f64, f64)) -> Complex64 {
    match dim {
        Dim::Three => gaussian_W_closed_form(l.0, l.1, m.0, m.1, sigma, lp, lpi),
        Dim::Two => {
            let mo = GaussianMoments::new(dim, sigma);
            Complex64::new(
                l.0 * m.0 * lpi * lpi * mo.pi2 + l.1 * m.1 * lp * lp * mo.phi2,
                0.5 * mo.norm2 * lp * lpi * (m.0 * l.1 - l.0 * m.1),
            )
        }
    }
}

/// Unvalidated `ρ_CB` for an untruncated Bob from the merged four-exponent string
/// `e^{iO₁}e^{iO₂}e^{iO₃}e^{iO₄}`, `O_i = x_i π̂_A + z_i Φ̂_A`, with its BCH constants.
pub fn assemble_rho_merged(dim: Dim, sigma: f64, lambda_phi: f64, lambda_pi: f64) -> CMat {
    sum_terms(|s| Ok(merged_vacuum_factor(dim, sigma, lambda_phi, lambda_pi, s)))
        .expect("infallible vacuum factor")
}

/// Vacuum factor of one sign assignment from the merged string, BCH constants included.
pub fn merged_vacuum_factor(
    dim: Dim,
    sigma: f64,
    lambda_phi: f64,
    lambda_pi: f64,
    signs: &SlotSigns,
) -> Complex64 {
    let c = Complex64::new(
        0.0,
        -0.5 * lambda_phi * lambda_pi * GaussianMoments::new(dim, sigma).norm2,
    );
    let [z1, x1, x2, z2, z3, x3, x4, z4] = signs.map(f64::from);
    let o = [(x1, z1), (x2, z2), (x3, z3), (x4, z4)];
    let bch = c * (x1 * z1 - x2 * z2 + x3 * z3 - x4 * z4);
    let (xs, zs) = o.iter().fold((0.0, 0.0), |(a, b), p| (a + p.0, b + p.1));
    let re = -0.5 * merged_w(dim, sigma, lambda_phi, lambda_pi, (xs, zs), (xs, zs)).re;
    let mut im = 0.0;
    for l in 0..4 {
        for m in l + 1..4 {
            im -= merged_w(dim, sigma, lambda_phi, lambda_pi, o[l], o[m]).im;
        }
    }
    (bch + Complex64::new(re, im)).exp()
}

pub fn result_from_gram(config: &ChannelConfig, gram: &Gram) -> Result<ChannelResult> {
    let rho_cb = DensityMatrix::new(assemble_rho(gram, None))?;
    let coherent_info = coherent_information(&rho_cb)?;
    Ok(ChannelResult {
        rho_cb,
        coherent_info,
        condition_report: check_conditions(config)?,
    })
}

pub fn rho_cb(config: &ChannelConfig) -> Result<ChannelResult> {
    result_from_gram(config, &gram(config)?)
}

pub fn coherent_info_of(config: &ChannelConfig) -> Result<f64> {
    Ok(rho_cb(config)?.coherent_info)
}
