//! Spherically symmetric smearing functions and their spectra.
//!
//! Transform convention: `F̃(k) = (2π)^{-d/2} ∫ F(x) e^{ik·x} d^dx`. For radial
//! functions this reduces to
//! `F̃(k) = √(2/π) ∫ r² F(r) sinc(kr) dr` (d = 3) and `F̃(k) = ∫ r F(r) J0(kr) dr` (d = 2),
//! and the inverse kernels are identical with `r ↔ k`. All profiles here are real
//! and even, so their spectra are real.

use std::f64::consts::PI;

use super::bessel::{bessel_i0_scaled, bessel_j0};
use super::quadrature::{integrate, QuadOptions};
use super::spline::EvenSpline;
use crate::error::{Error, Result};

/// Gaussian spectra are cut at `40/σ`, where they have decayed by `e^{-400}`.
pub const GAUSSIAN_KMAX_FACTOR: f64 = 40.0;
/// Default cutoff for windowed profiles, whose spectra decay only on the window scale.
pub const WINDOWED_KMAX_FACTOR: f64 = 200.0;
/// Gaussian tails are dropped beyond `8σ` (relative size `e^{-64}`).
const GAUSSIAN_REACH: f64 = 8.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dim {
    Two,
    Three,
}

impl Dim {
    pub fn new(d: usize) -> Result<Self> {
        match d {
            2 => Ok(Dim::Two),
            3 => Ok(Dim::Three),
            _ => Err(Error::bad(format!("dimension must be 2 or 3, got {d}"))),
        }
    }

    pub fn value(self) -> usize {
        match self {
            Dim::Two => 2,
            Dim::Three => 3,
        }
    }

    /// `(2π)^{-d/2}`
    pub fn fourier_norm(self) -> f64 {
        (2.0 * PI).powf(-(self.value() as f64) / 2.0)
    }

    /// Area of the sphere of radius `k`: `4πk²` or `2πk`.
    pub fn shell(self, k: f64) -> f64 {
        match self {
            Dim::Two => 2.0 * PI * k,
            Dim::Three => 4.0 * PI * k * k,
        }
    }

    /// Radial transform kernel `K(k, r)`, such that `F̃(k) = ∫ K(k,r) F(r) dr`.
    pub fn kernel(self, k: f64, r: f64) -> f64 {
        match self {
            Dim::Two => r * bessel_j0(k * r),
            Dim::Three => (2.0 / PI).sqrt() * r * r * sinc(k * r),
        }
    }
}

/// `sin(x)/x` with the removable singularity filled in.
pub fn sinc(x: f64) -> f64 {
    if x.abs() < 1e-4 {
        let x2 = x * x;
        1.0 - x2 / 6.0 * (1.0 - x2 / 20.0)
    } else {
        x.sin() / x
    }
}

/// Smooth step `w_ε(s) = (1 + erf(s/ε))/2`.
pub fn smooth_step(s: f64, eps: f64) -> f64 {
    0.5 * libm::erfc(-s / eps)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WindowSide {
    /// Keeps `r < r0`.
    Inner,
    /// Keeps `r > r0`.
    Outer,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Window {
    pub r0: f64,
    pub eps: f64,
    pub side: WindowSide,
}

impl Window {
    pub fn new(r0: f64, eps: f64, side: WindowSide) -> Result<Self> {
        if !(r0 > 0.0 && eps > 0.0) {
            return Err(Error::bad("window needs r0 > 0 and eps > 0"));
        }
        Ok(Self { r0, eps, side })
    }

    pub fn weight(&self, r: f64) -> f64 {
        match self.side {
            WindowSide::Inner => smooth_step(self.r0 - r, self.eps),
            WindowSide::Outer => smooth_step(r - self.r0, self.eps),
        }
    }
}

/// Uniformly sampled even function on `[0, (n-1)h]`, cubic-spline interpolated,
/// zero beyond the last sample.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledGrid {
    spline: EvenSpline,
}

impl SampledGrid {
    pub fn new(h: f64, values: Vec<f64>) -> Result<Self> {
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::bad("sampled values must be finite"));
        }
        Ok(Self {
            spline: EvenSpline::new(h, values)?,
        })
    }

    pub fn tabulate(h: f64, x_max: f64, f: impl Fn(f64) -> Result<f64>) -> Result<Self> {
        let n = (x_max / h).ceil() as usize + 1;
        let values = (0..n).map(|i| f(i as f64 * h)).collect::<Result<Vec<_>>>()?;
        Self::new(h, values)
    }

    pub fn h(&self) -> f64 {
        self.spline.h()
    }

    pub fn values(&self) -> &[f64] {
        self.spline.samples()
    }

    pub fn x_max(&self) -> f64 {
        self.spline.x_max()
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.spline.eval(x)
    }
}

/// Multiplier applied to a spectrum by free massless propagation over a time `Δ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Propagator {
    /// `−Δ sinc(Δk)`
    Sinc,
    /// `cos(Δk)`
    Cos,
    /// `k sin(Δk)`
    KSin,
}

impl Propagator {
    pub fn multiplier(self, delta: f64, k: f64) -> f64 {
        match self {
            Propagator::Sinc => -delta * sinc(delta * k),
            Propagator::Cos => (delta * k).cos(),
            Propagator::KSin => k * (delta * k).sin(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum RadialKind {
    /// `(√π σ)^{-d} e^{-r²/σ²}`
    Gaussian { sigma: f64 },
    /// `scale · ∂^order_Δ S₀(r; Δ)` with the d = 3 lightcone shell
    /// `S₀ = [e^{-(r-Δ)²/σ²} − e^{-(r+Δ)²/σ²}] / (4π^{3/2} σ r)`.
    GaussianShell {
        sigma: f64,
        delta: f64,
        order: u8,
        scale: f64,
    },
    /// d = 2 Gaussian convolved with the interior kernel `−1/(2π√(Δ²−|y|²))`, `|y| < Δ`.
    GaussianDisk { sigma: f64, delta: f64 },
    Windowed {
        base: Box<RadialProfile>,
        window: Window,
    },
    Sampled(SampledGrid),
    /// Inverse transform of a spectrum, evaluated pointwise.
    InverseTransform {
        spectrum: Box<SpectralProfile>,
        k_max: f64,
        opts: QuadOptions,
    },
    Zero,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RadialProfile {
    dim: Dim,
    kind: RadialKind,
}

pub fn gaussian_profile(sigma: f64, d: usize) -> Result<RadialProfile> {
    if !(sigma > 0.0 && sigma.is_finite()) {
        return Err(Error::bad(format!("sigma must be positive, got {sigma}")));
    }
    Ok(RadialProfile {
        dim: Dim::new(d)?,
        kind: RadialKind::Gaussian { sigma },
    })
}

impl RadialProfile {
    pub fn new(dim: Dim, kind: RadialKind) -> Result<Self> {
        match &kind {
            RadialKind::Gaussian { sigma } if !(*sigma > 0.0) => {
                return Err(Error::bad("sigma must be positive"))
            }
            RadialKind::GaussianShell {
                sigma,
                delta,
                order,
                ..
            } => {
                if dim != Dim::Three {
                    return Err(Error::bad("shell profiles exist only in three dimensions"));
                }
                if !(*sigma > 0.0 && *delta >= 0.0 && *order <= 2) {
                    return Err(Error::bad("shell needs sigma > 0, delta >= 0, order <= 2"));
                }
            }
            RadialKind::GaussianDisk { sigma, delta } => {
                if dim != Dim::Two {
                    return Err(Error::bad("disk profiles exist only in two dimensions"));
                }
                if !(*sigma > 0.0 && *delta >= 0.0) {
                    return Err(Error::bad("disk needs sigma > 0 and delta >= 0"));
                }
            }
            RadialKind::Windowed { base, .. } if base.dim != dim => {
                return Err(Error::bad("window base has the wrong dimension"))
            }
            RadialKind::InverseTransform { spectrum, .. } if spectrum.dim != dim => {
                return Err(Error::bad("spectrum has the wrong dimension"))
            }
            _ => {}
        }
        Ok(Self { dim, kind })
    }

    pub fn zero(dim: Dim) -> Self {
        Self {
            dim,
            kind: RadialKind::Zero,
        }
    }

    pub fn sampled(dim: Dim, grid: SampledGrid) -> Self {
        Self {
            dim,
            kind: RadialKind::Sampled(grid),
        }
    }

    pub fn windowed(&self, window: Window) -> Self {
        Self {
            dim: self.dim,
            kind: RadialKind::Windowed {
                base: Box::new(self.clone()),
                window,
            },
        }
    }

    pub fn dim(&self) -> Dim {
        self.dim
    }

    pub fn kind(&self) -> &RadialKind {
        &self.kind
    }

    pub fn eval(&self, r: f64) -> Result<f64> {
        let r = r.abs();
        Ok(match &self.kind {
            RadialKind::Gaussian { sigma } => {
                (PI.sqrt() * sigma).powi(-(self.dim.value() as i32)) * (-(r * r) / (sigma * sigma)).exp()
            }
            RadialKind::GaussianShell {
                sigma,
                delta,
                order,
                scale,
            } => scale * shell_derivative(*sigma, *delta, r, *order),
            RadialKind::GaussianDisk { sigma, delta } => disk_value(*sigma, *delta, r)?,
            RadialKind::Windowed { base, window } => {
                let w = window.weight(r);
                if w == 0.0 {
                    0.0
                } else {
                    w * base.eval(r)?
                }
            }
            RadialKind::Sampled(g) => g.eval(r),
            RadialKind::InverseTransform {
                spectrum,
                k_max,
                opts,
            } => {
                let dim = self.dim;
                integrate(
                    |k| dim.kernel(r, k) * spectrum.eval(k).unwrap_or(f64::NAN),
                    0.0,
                    *k_max,
                    opts,
                )?
            }
            RadialKind::Zero => 0.0,
        })
    }

    /// An interval outside which the profile is negligible (below ~1e-25 of its peak).
    pub fn support(&self) -> (f64, f64) {
        match &self.kind {
            RadialKind::Gaussian { sigma } => (0.0, GAUSSIAN_REACH * sigma),
            RadialKind::GaussianShell { sigma, delta, .. } => (
                (delta - GAUSSIAN_REACH * sigma).max(0.0),
                delta + GAUSSIAN_REACH * sigma,
            ),
            RadialKind::GaussianDisk { sigma, delta } => (0.0, delta + GAUSSIAN_REACH * sigma),
            RadialKind::Windowed { base, window } => {
                let (lo, hi) = base.support();
                let reach = 7.0 * window.eps;
                match window.side {
                    WindowSide::Inner => (lo, hi.min(window.r0 + reach).max(lo)),
                    WindowSide::Outer => (lo.max(window.r0 - reach).min(hi), hi),
                }
            }
            RadialKind::Sampled(g) => (0.0, g.x_max()),
            RadialKind::InverseTransform { spectrum, .. } => (0.0, spectrum.reach()),
            RadialKind::Zero => (0.0, 0.0),
        }
    }

    /// Spectral cutoff adequate for this profile.
    pub fn k_max(&self) -> f64 {
        match &self.kind {
            RadialKind::Gaussian { sigma }
            | RadialKind::GaussianShell { sigma, .. }
            | RadialKind::GaussianDisk { sigma, .. } => GAUSSIAN_KMAX_FACTOR / sigma,
            // 20/ε equals WINDOWED_KMAX_FACTOR/σ at the default ε = σ/10.
            RadialKind::Windowed { base, window } => base.k_max().max(20.0 / window.eps),
            RadialKind::Sampled(g) => PI / g.h(),
            RadialKind::InverseTransform { k_max, .. } => *k_max,
            RadialKind::Zero => 0.0,
        }
    }
}

/// `∂^order_Δ S₀(r; Δ)` in closed form; finite at `r = 0`.
fn shell_derivative(sigma: f64, delta: f64, r: f64, order: u8) -> f64 {
    let s2 = sigma * sigma;
    let norm = 1.0 / (4.0 * PI.powf(1.5) * sigma);
    let g = (-(r - delta) * (r - delta) / s2).exp();
    if g == 0.0 {
        return 0.0;
    }
    let x = 4.0 * r * delta / s2;
    let e = (-x).exp();
    // m = (1 − e^{-4rΔ/σ²}) / r
    let m = if r == 0.0 {
        4.0 * delta / s2
    } else {
        -(-x).exp_m1() / r
    };
    match order {
        0 => norm * g * m,
        1 => norm * g * (2.0 / s2) * ((1.0 + e) - delta * m),
        _ => {
            norm * g
                * ((4.0 / (s2 * s2)) * ((r * r + delta * delta) * m - 2.0 * delta * (1.0 + e))
                    - (2.0 / s2) * m)
        }
    }
}

/// `F(r) = −(1/2π) ∫_{|y|<Δ} F_A(x − y) / √(Δ² − |y|²) d²y` for a unit Gaussian `F_A`.
/// The angular integral is analytic, `∫ e^{a cos ψ} dψ = 2π I0(a)`, and the radial
/// singularity is removed by `|y| = Δ sin θ`.
fn disk_value(sigma: f64, delta: f64, r: f64) -> Result<f64> {
    if delta == 0.0 {
        return Ok(0.0);
    }
    let s2 = sigma * sigma;
    let integrand = |theta: f64| {
        let rho = delta * theta.sin();
        let a = 2.0 * r * rho / s2;
        delta * theta.sin() * (-(r - rho) * (r - rho) / s2).exp() * bessel_i0_scaled(a)
    };
    // Split at the angle where the ring through r peaks, so both sides are unimodal.
    let peak = (r / delta).min(1.0).asin();
    let opts = QuadOptions::default();
    let lo = integrate(integrand, 0.0, peak, &opts)?;
    let hi = integrate(integrand, peak, PI / 2.0, &opts)?;
    Ok(-(lo + hi) / (PI * s2))
}

#[derive(Debug, Clone, PartialEq)]
pub enum SpectralKind {
    /// `(2π)^{-d/2} e^{-k²σ²/4}`
    Gaussian { sigma: f64 },
    /// `scale · multiplier(Δ, k) · base(k)`
    Propagated {
        base: Box<SpectralProfile>,
        kernel: Propagator,
        delta: f64,
        scale: f64,
    },
    Sampled(SampledGrid),
    /// Forward transform of a profile, evaluated pointwise.
    Transform {
        profile: Box<RadialProfile>,
        opts: QuadOptions,
    },
    Zero,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralProfile {
    dim: Dim,
    kind: SpectralKind,
}

impl SpectralProfile {
    pub fn new(dim: Dim, kind: SpectralKind) -> Result<Self> {
        match &kind {
            SpectralKind::Gaussian { sigma } if !(*sigma > 0.0) => {
                return Err(Error::bad("sigma must be positive"))
            }
            SpectralKind::Propagated { base, delta, .. } => {
                if base.dim != dim {
                    return Err(Error::bad("base spectrum has the wrong dimension"));
                }
                if !delta.is_finite() {
                    return Err(Error::bad("delta must be finite"));
                }
            }
            SpectralKind::Transform { profile, .. } if profile.dim != dim => {
                return Err(Error::bad("profile has the wrong dimension"))
            }
            _ => {}
        }
        Ok(Self { dim, kind })
    }

    pub fn gaussian(sigma: f64, dim: Dim) -> Result<Self> {
        Self::new(dim, SpectralKind::Gaussian { sigma })
    }

    pub fn zero(dim: Dim) -> Self {
        Self {
            dim,
            kind: SpectralKind::Zero,
        }
    }

    pub fn propagated(&self, kernel: Propagator, delta: f64, scale: f64) -> Self {
        Self {
            dim: self.dim,
            kind: SpectralKind::Propagated {
                base: Box::new(self.clone()),
                kernel,
                delta,
                scale,
            },
        }
    }

    pub fn dim(&self) -> Dim {
        self.dim
    }

    pub fn kind(&self) -> &SpectralKind {
        &self.kind
    }

    pub fn eval(&self, k: f64) -> Result<f64> {
        let k = k.abs();
        Ok(match &self.kind {
            SpectralKind::Gaussian { sigma } => {
                self.dim.fourier_norm() * (-k * k * sigma * sigma / 4.0).exp()
            }
            SpectralKind::Propagated {
                base,
                kernel,
                delta,
                scale,
            } => scale * kernel.multiplier(*delta, k) * base.eval(k)?,
            SpectralKind::Sampled(g) => g.eval(k),
            SpectralKind::Transform { profile, opts } => {
                let (lo, hi) = profile.support();
                let dim = self.dim;
                integrate(
                    |r| dim.kernel(k, r) * profile.eval(r).unwrap_or(f64::NAN),
                    lo,
                    hi,
                    opts,
                )?
            }
            SpectralKind::Zero => 0.0,
        })
    }

    /// Suggested integration cutoff in `k`.
    pub fn k_max(&self) -> f64 {
        match &self.kind {
            SpectralKind::Gaussian { sigma } => GAUSSIAN_KMAX_FACTOR / sigma,
            SpectralKind::Propagated { base, .. } => base.k_max(),
            SpectralKind::Sampled(g) => g.x_max(),
            SpectralKind::Transform { profile, .. } => profile.k_max(),
            SpectralKind::Zero => 0.0,
        }
    }

    /// Radius outside which the position-space counterpart is negligible.
    fn reach(&self) -> f64 {
        match &self.kind {
            SpectralKind::Gaussian { sigma } => GAUSSIAN_REACH * sigma,
            SpectralKind::Propagated { base, delta, .. } => base.reach() + delta.abs(),
            SpectralKind::Sampled(g) => PI / g.h(),
            SpectralKind::Transform { profile, .. } => profile.support().1,
            SpectralKind::Zero => 0.0,
        }
    }
}

/// Spectrum of `p`. Analytic descriptors map to analytic spectra; everything else
/// becomes a pointwise quadrature transform.
pub fn fourier_radial(p: &RadialProfile) -> Result<SpectralProfile> {
    fourier_radial_with(p, &QuadOptions::transform())
}

pub fn fourier_radial_with(p: &RadialProfile, opts: &QuadOptions) -> Result<SpectralProfile> {
    let dim = p.dim;
    Ok(match &p.kind {
        RadialKind::Gaussian { sigma } => SpectralProfile::gaussian(*sigma, dim)?,
        RadialKind::GaussianShell {
            sigma,
            delta,
            order,
            scale,
        } => {
            // FT ∂^n S₀ = F̃_A · (Δ sinc, cos, −k sin)[n]
            let (kernel, sign) = match order {
                0 => (Propagator::Sinc, -1.0),
                1 => (Propagator::Cos, 1.0),
                _ => (Propagator::KSin, -1.0),
            };
            SpectralProfile::gaussian(*sigma, dim)?.propagated(kernel, *delta, sign * scale)
        }
        RadialKind::GaussianDisk { sigma, delta } => {
            SpectralProfile::gaussian(*sigma, dim)?.propagated(Propagator::Sinc, *delta, 1.0)
        }
        RadialKind::Zero => SpectralProfile::zero(dim),
        _ => numeric_fourier(p, opts),
    })
}

/// Forces the quadrature route even for analytic descriptors.
pub fn numeric_fourier(p: &RadialProfile, opts: &QuadOptions) -> SpectralProfile {
    SpectralProfile {
        dim: p.dim,
        kind: SpectralKind::Transform {
            profile: Box::new(p.clone()),
            opts: *opts,
        },
    }
}

/// Position-space profile of `s`, with the inverse kernel symmetric to [`fourier_radial`].
pub fn inverse_fourier_radial(s: &SpectralProfile) -> Result<RadialProfile> {
    inverse_fourier_radial_with(s, &QuadOptions::transform())
}

pub fn inverse_fourier_radial_with(s: &SpectralProfile, opts: &QuadOptions) -> Result<RadialProfile> {
    let dim = s.dim;
    match &s.kind {
        SpectralKind::Gaussian { sigma } => {
            return RadialProfile::new(dim, RadialKind::Gaussian { sigma: *sigma })
        }
        SpectralKind::Zero => return Ok(RadialProfile::zero(dim)),
        SpectralKind::Propagated {
            base,
            kernel,
            delta,
            scale,
        } if dim == Dim::Three && *delta >= 0.0 => {
            if let SpectralKind::Gaussian { sigma } = base.kind {
                let (order, sign) = match kernel {
                    Propagator::Sinc => (0, -1.0),
                    Propagator::Cos => (1, 1.0),
                    Propagator::KSin => (2, -1.0),
                };
                return RadialProfile::new(
                    dim,
                    RadialKind::GaussianShell {
                        sigma,
                        delta: *delta,
                        order,
                        scale: sign * scale,
                    },
                );
            }
        }
        _ => {}
    }
    Ok(numeric_inverse(s, s.k_max(), opts))
}

/// Forces the quadrature route.
pub fn numeric_inverse(s: &SpectralProfile, k_max: f64, opts: &QuadOptions) -> RadialProfile {
    RadialProfile {
        dim: s.dim,
        kind: RadialKind::InverseTransform {
            spectrum: Box::new(s.clone()),
            k_max,
            opts: *opts,
        },
    }
}

/// Spectra of several d = 3 profiles on a common `k` list, by a uniform trapezoid
/// sum over `r ∈ [r_lo, r_hi]`. The profiles must be negligible (with all
/// derivatives) at both ends, which makes the trapezoid rule spectrally accurate
/// once `2π/h` exceeds the integrand bandwidth.
pub fn bulk_fourier_3d(
    profiles: &[&RadialProfile],
    ks: &[f64],
    r_lo: f64,
    r_hi: f64,
    h: f64,
) -> Result<Vec<Vec<f64>>> {
    if profiles.iter().any(|p| p.dim != Dim::Three) {
        return Err(Error::bad("bulk transform is three-dimensional only"));
    }
    if !(h > 0.0 && r_hi > r_lo && r_lo >= 0.0) {
        return Err(Error::bad("bulk transform needs h > 0 and 0 <= r_lo < r_hi"));
    }
    let n = ((r_hi - r_lo) / h).ceil() as usize;
    let h = (r_hi - r_lo) / n as f64;
    let rs: Vec<f64> = (0..=n).map(|j| r_lo + j as f64 * h).collect();
    // Endpoint weights are 1/2 when the profile touches r = 0, else the ends are negligible.
    let weights: Vec<f64> = rs
        .iter()
        .enumerate()
        .map(|(j, _)| if j == 0 || j == n { 0.5 * h } else { h })
        .collect();
    let samples: Vec<Vec<f64>> = profiles
        .iter()
        .map(|p| {
            rs.iter()
                .zip(&weights)
                .map(|(&r, &w)| Ok(w * r * r * p.eval(r)?))
                .collect::<Result<Vec<f64>>>()
        })
        .collect::<Result<_>>()?;
    let c = (2.0 / PI).sqrt();
    let mut out = vec![vec![0.0; ks.len()]; profiles.len()];
    for (ik, &k) in ks.iter().enumerate() {
        let mut acc = vec![0.0; profiles.len()];
        for (j, &r) in rs.iter().enumerate() {
            let s = sinc(k * r);
            for (a, col) in acc.iter_mut().zip(&samples) {
                *a += col[j] * s;
            }
        }
        for (o, a) in out.iter_mut().zip(acc) {
            o[ik] = c * a;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_normalisation_anchors() {
        let g3 = gaussian_profile(1.0, 3).unwrap();
        assert!((g3.eval(0.0).unwrap() - PI.powf(-1.5)).abs() < 1e-15);
        let g2 = gaussian_profile(2.0, 2).unwrap();
        assert!((g2.eval(0.0).unwrap() - 1.0 / (4.0 * PI)).abs() < 1e-15);
        assert!(gaussian_profile(0.0, 3).is_err());
        assert!(gaussian_profile(-1.0, 2).is_err());
        assert!(gaussian_profile(1.0, 4).is_err());
    }

    #[test]
    fn shell_at_zero_delta_is_the_gaussian() {
        let g = gaussian_profile(1.3, 3).unwrap();
        for r in [0.0, 0.2, 1.0, 3.0] {
            let f2 = shell_derivative(1.3, 0.0, r, 1);
            assert!((f2 - g.eval(r).unwrap()).abs() < 1e-15);
            assert_eq!(shell_derivative(1.3, 0.0, r, 0), 0.0);
        }
    }

    #[test]
    fn shell_derivatives_match_finite_differences() {
        let (sigma, delta, h) = (1.0, 3.0, 1e-4);
        for r in [0.0, 1e-9, 0.5, 2.0, 3.0, 4.5] {
            for order in [0u8, 1] {
                let fd = (shell_derivative(sigma, delta + h, r, order)
                    - shell_derivative(sigma, delta - h, r, order))
                    / (2.0 * h);
                let exact = shell_derivative(sigma, delta, r, order + 1);
                assert!((fd - exact).abs() < 1e-7, "r={r} order={order}: {fd} vs {exact}");
            }
        }
    }

    #[test]
    fn window_is_complementary() {
        let inner = Window::new(3.0, 0.1, WindowSide::Inner).unwrap();
        let outer = Window::new(3.0, 0.1, WindowSide::Outer).unwrap();
        for r in [0.0, 2.9, 3.0, 3.05, 10.0] {
            assert!((inner.weight(r) + outer.weight(r) - 1.0).abs() < 1e-15);
        }
        assert!(Window::new(0.0, 0.1, WindowSide::Inner).is_err());
    }

    #[test]
    fn sinc_series_branch_is_continuous() {
        for x in [9.9e-5, 1e-4, 1.01e-4] {
            assert!((sinc(x) - x.sin() / x).abs() < 1e-15);
        }
    }
}
