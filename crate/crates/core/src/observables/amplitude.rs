//! Momentum-space amplitudes of smeared field observables on a shared `|k|` grid.
//!
//! A smeared observable `λ Φ̂[F](t)` has annihilation coefficient
//! `b(k) = λ F̃(k) e^{-iωt} / √(2ω)`, and `λ π̂[F](t)` has `b(k) = −iω λ F̃(k) e^{-iωt} / √(2ω)`,
//! with `ω = |k|`. Every vacuum two-point function is then `W_lm = ∫ d^dk b_l b_m*`.

use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::smearing::{fourier_radial, gauss_legendre, Dim, RadialProfile, SpectralProfile};

const GL_ORDER: usize = 16;
/// Width of the dedicated infrared panel, in units of `1/σ`.
const INFRARED_PANEL: f64 = 1e-3;

/// Composite Gauss-Legendre nodes on `[0, k_max]` with the sphere measure folded into the weights.
#[derive(Debug, Clone, PartialEq)]
pub struct KGrid {
    dim: Dim,
    k_max: f64,
    k: Vec<f64>,
    w: Vec<f64>,
}

impl KGrid {
    /// `reach` bounds the position-space support of every profile sampled on this grid;
    /// products of two spectra oscillate at most at frequency `2·reach`, and each
    /// 16-point panel spans about one such period.
    pub fn new(dim: Dim, sigma: f64, reach: f64, k_max: f64) -> Result<Arc<Self>> {
        if !(sigma > 0.0 && reach > 0.0 && k_max > INFRARED_PANEL / sigma) {
            return Err(Error::bad("k-grid needs sigma, reach > 0 and k_max above the infrared panel"));
        }
        let (x, w) = gauss_legendre(GL_ORDER);
        let ir = INFRARED_PANEL / sigma;
        let width = 3.0 / reach.max(sigma);
        let n_panels = ((k_max - ir) / width).ceil() as usize;
        let width = (k_max - ir) / n_panels as f64;
        let mut edges = vec![0.0, ir];
        edges.extend((1..=n_panels).map(|i| ir + i as f64 * width));
        *edges.last_mut().expect("non-empty") = k_max;

        let mut ks = Vec::with_capacity((edges.len() - 1) * GL_ORDER);
        let mut ws = Vec::with_capacity(ks.capacity());
        for pair in edges.windows(2) {
            let (a, b) = (pair[0], pair[1]);
            let half = 0.5 * (b - a);
            let mid = 0.5 * (a + b);
            for (xi, wi) in x.iter().zip(&w) {
                let k = mid + half * xi;
                ks.push(k);
                ws.push(half * wi * dim.shell(k));
            }
        }
        Ok(Arc::new(Self {
            dim,
            k_max,
            k: ks,
            w: ws,
        }))
    }

    /// `n` midpoint nodes on `(0, k_max)`. Meant for pointwise comparisons; as a
    /// quadrature rule it is only second order.
    pub fn uniform(dim: Dim, k_max: f64, n: usize) -> Result<Arc<Self>> {
        if !(k_max > 0.0 && n > 0) {
            return Err(Error::bad("uniform k-grid needs k_max > 0 and n > 0"));
        }
        let h = k_max / n as f64;
        let k: Vec<f64> = (0..n).map(|i| (i as f64 + 0.5) * h).collect();
        let w = k.iter().map(|&k| h * dim.shell(k)).collect();
        Ok(Arc::new(Self { dim, k_max, k, w }))
    }

    pub fn dim(&self) -> Dim {
        self.dim
    }

    pub fn k_max(&self) -> f64 {
        self.k_max
    }

    pub fn nodes(&self) -> &[f64] {
        &self.k
    }

    /// Quadrature weights including `4πk²` (d = 3) or `2πk` (d = 2).
    pub fn weights(&self) -> &[f64] {
        &self.w
    }

    pub fn len(&self) -> usize {
        self.k.len()
    }

    pub fn is_empty(&self) -> bool {
        self.k.is_empty()
    }

    /// `∫ d^dk f(|k|)`
    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.k.iter().zip(&self.w).map(|(&k, &w)| w * f(k)).sum()
    }
}

/// Which canonical field a detector couples to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quadrature {
    Phi,
    Pi,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ProfileSource {
    Position(RadialProfile),
    Momentum(SpectralProfile),
}

impl ProfileSource {
    fn dim(&self) -> Dim {
        match self {
            ProfileSource::Position(p) => p.dim(),
            ProfileSource::Momentum(s) => s.dim(),
        }
    }
}

/// `coupling · Φ̂[profile](time)` or `coupling · π̂[profile](time)`.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldObservableSpec {
    pub kind: Quadrature,
    pub profile: ProfileSource,
    pub time: f64,
    pub coupling: f64,
}

impl FieldObservableSpec {
    pub fn phi(profile: ProfileSource, time: f64, coupling: f64) -> Self {
        Self {
            kind: Quadrature::Phi,
            profile,
            time,
            coupling,
        }
    }

    pub fn pi(profile: ProfileSource, time: f64, coupling: f64) -> Self {
        Self {
            kind: Quadrature::Pi,
            profile,
            time,
            coupling,
        }
    }
}

/// Annihilation coefficient `b(k)` of a linear field observable, sampled on a [`KGrid`].
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralAmplitude {
    grid: Arc<KGrid>,
    values: Vec<Complex64>,
}

impl SpectralAmplitude {
    pub fn new(grid: Arc<KGrid>, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::DimensionMismatch {
                expected: grid.len(),
                got: values.len(),
            });
        }
        if values.iter().any(|v| !(v.re.is_finite() && v.im.is_finite())) {
            return Err(Error::bad("amplitude must be finite on the grid"));
        }
        Ok(Self { grid, values })
    }

    pub fn zero(grid: Arc<KGrid>) -> Self {
        let n = grid.len();
        Self {
            grid,
            values: vec![Complex64::new(0.0, 0.0); n],
        }
    }

    /// `λ e^{-iωt} [F̃_φ(k) − iω F̃_π(k)] / √(2ω)` from spectra sampled at the grid nodes:
    /// the amplitude of `λ(Φ̂[F_φ](t) + π̂[F_π](t))`.
    pub fn from_spectra(
        grid: Arc<KGrid>,
        coupling: f64,
        time: f64,
        phi_spectrum: Option<&[f64]>,
        pi_spectrum: Option<&[f64]>,
    ) -> Result<Self> {
        for s in [phi_spectrum, pi_spectrum].into_iter().flatten() {
            if s.len() != grid.len() {
                return Err(Error::DimensionMismatch {
                    expected: grid.len(),
                    got: s.len(),
                });
            }
        }
        let values = grid
            .nodes()
            .iter()
            .enumerate()
            .map(|(i, &k)| {
                let phase = Complex64::from_polar(1.0, -k * time);
                let re = phi_spectrum.map_or(0.0, |s| s[i]);
                let im = pi_spectrum.map_or(0.0, |s| -k * s[i]);
                phase * Complex64::new(re, im) * (coupling / (2.0 * k).sqrt())
            })
            .collect();
        Self::new(grid, values)
    }

    pub fn grid(&self) -> &Arc<KGrid> {
        &self.grid
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn dim(&self) -> Dim {
        self.grid.dim()
    }

    pub fn same_grid(&self, other: &SpectralAmplitude) -> bool {
        Arc::ptr_eq(&self.grid, &other.grid) || self.grid == other.grid
    }

    pub fn scaled(&self, c: f64) -> Self {
        Self {
            grid: Arc::clone(&self.grid),
            values: self.values.iter().map(|v| v * c).collect(),
        }
    }

    /// `self + c · other`
    pub fn add_scaled(&self, other: &SpectralAmplitude, c: f64) -> Result<Self> {
        if !self.same_grid(other) {
            return Err(Error::GridMismatch);
        }
        Ok(Self {
            grid: Arc::clone(&self.grid),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b * c)
                .collect(),
        })
    }

    /// `max_k |b(k)|`
    pub fn peak(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// `max_k |self(k) − other(k)|`
    pub fn max_abs_diff(&self, other: &SpectralAmplitude) -> Result<f64> {
        if !self.same_grid(other) {
            return Err(Error::GridMismatch);
        }
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }
}

/// Spectrum of `source` sampled at the grid nodes.
pub fn sample_spectrum(source: &ProfileSource, grid: &KGrid) -> Result<Vec<f64>> {
    if source.dim() != grid.dim() {
        return Err(Error::bad("profile dimension differs from the k-grid dimension"));
    }
    let spectrum = match source {
        ProfileSource::Position(p) => fourier_radial(p)?,
        ProfileSource::Momentum(s) => s.clone(),
    };
    grid.nodes().iter().map(|&k| spectrum.eval(k)).collect()
}

pub fn momentum_amplitude(spec: &FieldObservableSpec, grid: &Arc<KGrid>) -> Result<SpectralAmplitude> {
    let f = sample_spectrum(&spec.profile, grid)?;
    let (phi, pi) = match spec.kind {
        Quadrature::Phi => (Some(f.as_slice()), None),
        Quadrature::Pi => (None, Some(f.as_slice())),
    };
    SpectralAmplitude::from_spectra(Arc::clone(grid), spec.coupling, spec.time, phi, pi)
}

/// `W_lm = ⟨0|Ô_l Ô_m|0⟩ = ∫ d^dk b_l(k) b_m*(k)`.
#[allow(non_snake_case)]
pub fn overlap_W(l: &SpectralAmplitude, m: &SpectralAmplitude) -> Result<Complex64> {
    if !l.same_grid(m) {
        return Err(Error::GridMismatch);
    }
    Ok(l.values
        .iter()
        .zip(&m.values)
        .zip(l.grid.weights())
        .map(|((a, b), w)| a * b.conj() * w)
        .sum())
}
