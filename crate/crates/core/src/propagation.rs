//! Free massless propagation of Alice's smearing data to Bob's time `t_B = t_A + Δ`.
//!
//! `Φ̂[F](t_A) = Φ̂[F_B2](t_B) + π̂[F_B1](t_B)` and `π̂[F](t_A) = π̂[F_B2](t_B) + Φ̂[F_B3](t_B)` with
//! `F̃_B1 = −Δ sinc(Δk) F̃`, `F̃_B2 = cos(Δk) F̃`, `F̃_B3 = k sin(Δk) F̃`.

use crate::error::{Error, Result};
use crate::smearing::{
    inverse_fourier_radial, numeric_inverse, Dim, Propagator, QuadOptions, RadialKind,
    RadialProfile, SpectralProfile,
};

#[derive(Debug, Clone, PartialEq)]
pub struct PropagationResult {
    /// `(F̃_B1, F̃_B2, F̃_B3)`
    pub spectra: [SpectralProfile; 3],
    /// `(F_B1, F_B2, F_B3)`
    pub profiles: [RadialProfile; 3],
    pub delta: f64,
}

fn check_delta(delta: f64) -> Result<()> {
    if !(delta >= 0.0 && delta.is_finite()) {
        return Err(Error::bad(format!("delta must be finite and >= 0, got {delta}")));
    }
    Ok(())
}

fn check_sigma(sigma: f64) -> Result<()> {
    if !(sigma > 0.0 && sigma.is_finite()) {
        return Err(Error::bad(format!("sigma must be positive, got {sigma}")));
    }
    Ok(())
}

pub fn bob_spectra(fa: &SpectralProfile, delta: f64) -> Result<[SpectralProfile; 3]> {
    check_delta(delta)?;
    Ok([
        fa.propagated(Propagator::Sinc, delta, 1.0),
        fa.propagated(Propagator::Cos, delta, 1.0),
        fa.propagated(Propagator::KSin, delta, 1.0),
    ])
}

/// Closed forms for a d = 3 Gaussian: `F_B1 = −S₀`, `F_B2 = ∂_Δ S₀`, `F_B3 = −∂²_Δ S₀`,
/// supported on the shell `|r − Δ| ≲ σ`.
pub fn bob_profiles_3d(sigma: f64, delta: f64) -> Result<[RadialProfile; 3]> {
    check_sigma(sigma)?;
    check_delta(delta)?;
    let shell = |order, scale| {
        RadialProfile::new(
            Dim::Three,
            RadialKind::GaussianShell {
                sigma,
                delta,
                order,
                scale,
            },
        )
    };
    Ok([shell(0, -1.0)?, shell(1, 1.0)?, shell(2, -1.0)?])
}

/// d = 2 `F_B1` from the interior kernel `−1/√(Δ² − |y|²)`, `|y| < Δ`, convolved with the Gaussian.
pub fn bob_profile_2d_fb1(sigma: f64, delta: f64) -> Result<RadialProfile> {
    check_sigma(sigma)?;
    check_delta(delta)?;
    RadialProfile::new(Dim::Two, RadialKind::GaussianDisk { sigma, delta })
}

/// d = 2 profiles as inverse Hankel transforms of the propagated spectra.
pub fn bob_profiles_2d_numeric(sigma: f64, delta: f64) -> Result<[RadialProfile; 3]> {
    check_sigma(sigma)?;
    let fa = SpectralProfile::gaussian(sigma, Dim::Two)?;
    let spectra = bob_spectra(&fa, delta)?;
    let opts = QuadOptions::transform();
    Ok(spectra.map(|s| numeric_inverse(&s, s.k_max(), &opts)))
}

/// Bob's spectra and profiles for a Gaussian Alice of width `sigma`. Position-space
/// profiles use the shell closed forms in d = 3, the interior kernel for `F_B1` in
/// d = 2, and inverse Hankel transforms for `F_B2`, `F_B3` in d = 2.
pub fn propagate_gaussian(dim: Dim, sigma: f64, delta: f64) -> Result<PropagationResult> {
    check_sigma(sigma)?;
    let fa = SpectralProfile::gaussian(sigma, dim)?;
    let spectra = bob_spectra(&fa, delta)?;
    let profiles = match dim {
        Dim::Three => bob_profiles_3d(sigma, delta)?,
        Dim::Two => {
            let [_, fb2, fb3] = bob_profiles_2d_numeric(sigma, delta)?;
            [bob_profile_2d_fb1(sigma, delta)?, fb2, fb3]
        }
    };
    Ok(PropagationResult {
        spectra,
        profiles,
        delta,
    })
}

/// Generic route: inverse transforms of the propagated spectra of any Alice spectrum.
pub fn propagate(fa: &SpectralProfile, delta: f64) -> Result<PropagationResult> {
    let spectra = bob_spectra(fa, delta)?;
    let profiles = [
        inverse_fourier_radial(&spectra[0])?,
        inverse_fourier_radial(&spectra[1])?,
        inverse_fourier_radial(&spectra[2])?,
    ];
    Ok(PropagationResult {
        spectra,
        profiles,
        delta,
    })
}
