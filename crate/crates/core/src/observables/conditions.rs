//! Gaussian moments of Alice's smearing and the two encoding conditions
//! (strong coupling and the `γ_A = π/4` fine tuning).

use std::f64::consts::{FRAC_PI_4, PI};

use crate::channel::ChannelConfig;
use crate::error::{Error, Result};
use crate::smearing::Dim;

/// A ratio `γ_A² / ⟨π̂_A²⟩` at or above this counts as strong coupling.
pub const STRONG_COUPLING_RATIO: f64 = 100.0;
pub const FINE_TUNING_TOL: f64 = 1e-12;

/// Vacuum moments of the unit-coupling observables `Φ̂[F_A]`, `π̂[F_A]` for a Gaussian `F_A`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianMoments {
    /// `⟨Φ̂²⟩ = ½ ∫ |F̃|²/ω d^dk`
    pub phi2: f64,
    /// `⟨π̂²⟩ = ½ ∫ ω |F̃|² d^dk`
    pub pi2: f64,
    /// `∫ |F̃|² d^dk`
    pub norm2: f64,
}

impl GaussianMoments {
    pub fn new(dim: Dim, sigma: f64) -> Self {
        match dim {
            Dim::Three => Self {
                phi2: 1.0 / (4.0 * PI * PI * sigma * sigma),
                pi2: 1.0 / (2.0 * PI * PI * sigma.powi(4)),
                norm2: (2.0 * PI).powf(-1.5) / sigma.powi(3),
            },
            Dim::Two => {
                let r = 1.0 / (4.0 * (2.0 * PI).sqrt());
                Self {
                    phi2: r / sigma,
                    pi2: r / sigma.powi(3),
                    norm2: 1.0 / (2.0 * PI * sigma * sigma),
                }
            }
        }
    }
}

/// `λ_π` on the smallest positive branch of `λ_φ λ_π ∫|F̃_A|² = π/4`.
pub fn fine_tuned_lambda_pi(dim: Dim, sigma: f64, lambda_phi: f64) -> Result<f64> {
    if !(lambda_phi > 0.0) {
        return Err(Error::bad("the fine-tuning rule needs lambda_phi > 0"));
    }
    Ok(FRAC_PI_4 / (lambda_phi * GaussianMoments::new(dim, sigma).norm2))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConditionReport {
    /// `γ_A = λ_φ λ_π ∫ |F̃_A|² d^dk`
    pub gamma: f64,
    /// `γ_A² / ⟨π̂_A²⟩` with both at the configured couplings.
    pub strong_coupling_ratio: f64,
    pub strong_coupling: bool,
    /// `γ_A ≡ π/4 (mod 2π)` within [`FINE_TUNING_TOL`].
    pub fine_tuned: bool,
}

pub fn check_conditions(config: &ChannelConfig) -> Result<ConditionReport> {
    config.validate()?;
    let m = GaussianMoments::new(config.dim, config.sigma);
    let lambda_pi = config.resolved_lambda_pi()?;
    let gamma = config.lambda_phi * lambda_pi * m.norm2;
    // γ²/⟨π̂²⟩ does not depend on λ_π.
    let ratio = config.lambda_phi.powi(2) * m.norm2.powi(2) / m.pi2;
    let offset = (gamma - FRAC_PI_4).rem_euclid(2.0 * PI);
    let distance = offset.min(2.0 * PI - offset);
    Ok(ConditionReport {
        gamma,
        strong_coupling_ratio: ratio,
        strong_coupling: ratio >= STRONG_COUPLING_RATIO,
        fine_tuned: distance <= FINE_TUNING_TOL,
    })
}
