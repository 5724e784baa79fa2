//! Parameter sweeps. Grid points run in parallel; rows come back in grid order.

use rayon::prelude::*;

use super::assemble::{result_from_gram, rho_cb, truncated_pair_grams};
use super::config::{BobSpec, ChannelConfig};
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CapacityRow {
    pub lambda_phi_over_sigma: f64,
    pub ic: f64,
    /// `max(0, ic)`
    pub ic_clamped: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BroadcastRow {
    pub r0: f64,
    /// Bob keeping `r < r0`.
    pub ic_bob1: f64,
    /// Bob keeping `r > r0`.
    pub ic_bob2: f64,
}

/// `n` points log-spaced from `lo` to `hi` inclusive.
pub fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => {
            let (a, b) = (lo.ln(), hi.ln());
            (0..n)
                .map(|i| (a + (b - a) * i as f64 / (n - 1) as f64).exp())
                .collect()
        }
    }
}

/// `n` points evenly spaced from `lo` to `hi` inclusive.
pub fn linear_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => (0..n)
            .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
            .collect(),
    }
}

/// Coherent information against `λ_φ/σ`, with `λ_π` re-derived at every point unless
/// the template fixes it.
pub fn capacity_sweep(lambda_grid: &[f64], template: &ChannelConfig) -> Result<Vec<CapacityRow>> {
    lambda_grid
        .par_iter()
        .map(|&ratio| {
            let mut cfg = template.clone();
            cfg.lambda_phi = ratio * template.sigma;
            let ic = rho_cb(&cfg)?.coherent_info;
            Ok(CapacityRow {
                lambda_phi_over_sigma: ratio,
                ic,
                ic_clamped: ic.max(0.0),
            })
        })
        .collect()
}

/// Coherent information of the inner and outer truncated Bobs against `r0`.
pub fn broadcast_sweep(r0_grid: &[f64], template: &ChannelConfig, eps: f64) -> Result<Vec<BroadcastRow>> {
    r0_grid
        .par_iter()
        .map(|&r0| {
            let (inner, outer) = truncated_pair_grams(template, r0, eps)?;
            let c1 = template.clone().with_bob(BobSpec::TruncatedInner { r0, eps });
            let c2 = template.clone().with_bob(BobSpec::TruncatedOuter { r0, eps });
            Ok(BroadcastRow {
                r0,
                ic_bob1: result_from_gram(&c1, &inner)?.coherent_info,
                ic_bob2: result_from_gram(&c2, &outer)?.coherent_info,
            })
        })
        .collect()
}

/// Twenty radii spaced by `max(Δ, σ)/10`, symmetric about `r = max(Δ, σ)`.
pub fn default_r0_grid(delta: f64, sigma: f64) -> Vec<f64> {
    let step = delta.max(sigma) / 10.0;
    linear_grid(0.5 * step, 19.5 * step, 20)
}
