//! Vacuum expectations of ordered exponentials of linear field observables.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::amplitude::{overlap_W, SpectralAmplitude};
use crate::error::{Error, Result};

pub const MAX_EXPONENTS: usize = 8;

/// Ordered product `∏_j e^{i s_j Ô_j}` with `s_j = ±1`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ExponentString {
    terms: Vec<(i8, SpectralAmplitude)>,
}

impl ExponentString {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, sign: i8, amplitude: SpectralAmplitude) -> Result<()> {
        if sign != 1 && sign != -1 {
            return Err(Error::bad("exponent sign must be ±1"));
        }
        if self.terms.len() == MAX_EXPONENTS {
            return Err(Error::bad(format!("at most {MAX_EXPONENTS} exponents")));
        }
        if let Some((_, first)) = self.terms.first() {
            if !first.same_grid(&amplitude) {
                return Err(Error::GridMismatch);
            }
        }
        self.terms.push((sign, amplitude));
        Ok(())
    }

    pub fn with(mut self, sign: i8, amplitude: SpectralAmplitude) -> Result<Self> {
        self.push(sign, amplitude)?;
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(i8, SpectralAmplitude)] {
        &self.terms
    }
}

/// `⟨0|∏_j e^{i s_j Ô_j}|0⟩ = ∏_{l<m} e^{-s_l s_m W_lm} ∏_l e^{-W_ll/2}`.
pub fn wick_expectation(s: &ExponentString) -> Result<Complex64> {
    let mut exponent = Complex64::new(0.0, 0.0);
    for (l, (sl, bl)) in s.terms.iter().enumerate() {
        exponent -= 0.5 * overlap_W(bl, bl)?;
        for (sm, bm) in &s.terms[l + 1..] {
            exponent -= f64::from(sl * sm) * overlap_W(bl, bm)?;
        }
    }
    Ok(exponent.exp())
}

/// `C = −½⟨0|[Φ̂, π̂]|0⟩` from equal-time amplitudes; purely imaginary.
pub fn commutator_constant(phi_amp: &SpectralAmplitude, pi_amp: &SpectralAmplitude) -> Result<Complex64> {
    let w = overlap_W(phi_amp, pi_amp)?;
    let w_rev = overlap_W(pi_amp, phi_amp)?;
    Ok(-0.5 * (w - w_rev))
}

/// Two-point function of `Ô_l = x_l λ_π π̂_A + z_l λ_φ Φ̂_A` and `Ô_m` for a d = 3
/// Gaussian of width `σ` at equal times:
/// `(1/(8π²σ⁴)) [4 x_l x_m λ_π² + 2 z_l z_m σ² λ_φ² + i √(2π) σ λ_φ λ_π (x_m z_l − x_l z_m)]`.
#[allow(non_snake_case, clippy::too_many_arguments)]
pub fn gaussian_W_closed_form(
    x_l: f64,
    z_l: f64,
    x_m: f64,
    z_m: f64,
    sigma: f64,
    lambda_phi: f64,
    lambda_pi: f64,
) -> Complex64 {
    let s2 = sigma * sigma;
    let pre = 1.0 / (8.0 * PI * PI * s2 * s2);
    let re = 4.0 * x_l * x_m * lambda_pi * lambda_pi + 2.0 * z_l * z_m * s2 * lambda_phi * lambda_phi;
    let im = (2.0 * PI).sqrt() * sigma * lambda_phi * lambda_pi * (x_m * z_l - x_l * z_m);
    Complex64::new(pre * re, pre * im)
}

/// `C = −i λ_φ λ_π / (2 (2π)^{3/2} σ³)` for the d = 3 Gaussian.
pub fn gaussian_commutator_closed_form(sigma: f64, lambda_phi: f64, lambda_pi: f64) -> Complex64 {
    Complex64::new(
        0.0,
        -lambda_phi * lambda_pi / (2.0 * (2.0 * PI).powf(1.5) * sigma.powi(3)),
    )
}
