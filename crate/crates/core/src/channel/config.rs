use crate::error::{Error, Result};
use crate::observables::fine_tuned_lambda_pi;
use crate::smearing::{Dim, GAUSSIAN_KMAX_FACTOR};

/// Default window roll-off, in units of `σ`.
pub const DEFAULT_EPS_OVER_SIGMA: f64 = 0.1;
/// Default Alice–Bob time separation, in units of `σ`.
pub const DEFAULT_DELTA_OVER_SIGMA: f64 = 10.0;

/// Bob's decoding geometry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BobSpec {
    /// Decodes with Alice's observables carried to `t_B`.
    Full,
    /// Full profiles multiplied by `w_ε(r0 − r)`.
    TruncatedInner { r0: f64, eps: f64 },
    /// Full profiles multiplied by `w_ε(r − r0)`.
    TruncatedOuter { r0: f64, eps: f64 },
    /// Decodes with the `Φ̂` exponent only.
    Rank1Only,
    /// No decoding.
    None,
}

/// Which Gram-matrix evaluation to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GramRoute {
    /// Closed Gaussian moments wherever Bob is untruncated, quadrature otherwise.
    Auto,
    /// Always sample amplitudes on a k-grid.
    Quadrature,
}

/// Everything that defines one channel evaluation. Alice's smearing is a Gaussian
/// of width `sigma` at `t = 0`; Bob acts at `t = delta`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelConfig {
    pub dim: Dim,
    pub sigma: f64,
    pub lambda_phi: f64,
    /// `None` selects the `γ_A = π/4` rule.
    pub lambda_pi: Option<f64>,
    pub delta: f64,
    pub bob: BobSpec,
    /// Alice encodes with the `Φ̂` exponent only.
    pub alice_rank1: bool,
    /// Spectral cutoff; `None` picks `40/σ`, or `20/ε` for truncated Bobs if larger.
    pub k_max: Option<f64>,
    pub route: GramRoute,
}

impl ChannelConfig {
    pub fn gaussian(dim: Dim, sigma: f64, lambda_phi: f64) -> Self {
        Self {
            dim,
            sigma,
            lambda_phi,
            lambda_pi: None,
            delta: DEFAULT_DELTA_OVER_SIGMA * sigma,
            bob: BobSpec::Full,
            alice_rank1: false,
            k_max: None,
            route: GramRoute::Auto,
        }
    }

    pub fn with_lambda_pi(mut self, lambda_pi: f64) -> Self {
        self.lambda_pi = Some(lambda_pi);
        self
    }

    pub fn with_delta(mut self, delta: f64) -> Self {
        self.delta = delta;
        self
    }

    pub fn with_bob(mut self, bob: BobSpec) -> Self {
        self.bob = bob;
        self
    }

    pub fn with_route(mut self, route: GramRoute) -> Self {
        self.route = route;
        self
    }

    pub fn with_k_max(mut self, k_max: f64) -> Self {
        self.k_max = Some(k_max);
        self
    }

    pub fn with_alice_rank1(mut self, on: bool) -> Self {
        self.alice_rank1 = on;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.sigma > 0.0 && self.sigma.is_finite()) {
            return Err(Error::bad(format!("sigma must be positive, got {}", self.sigma)));
        }
        if !(self.delta >= 0.0 && self.delta.is_finite()) {
            return Err(Error::bad(format!("delta must be >= 0, got {}", self.delta)));
        }
        if !(self.lambda_phi >= 0.0 && self.lambda_phi.is_finite()) {
            return Err(Error::bad(format!(
                "lambda_phi must be >= 0, got {}",
                self.lambda_phi
            )));
        }
        if let Some(lp) = self.lambda_pi {
            if !lp.is_finite() {
                return Err(Error::bad("lambda_pi must be finite"));
            }
        }
        if let Some(k) = self.k_max {
            if !(k > 0.0 && k.is_finite()) {
                return Err(Error::bad("k_max must be positive"));
            }
        }
        if let BobSpec::TruncatedInner { r0, eps } | BobSpec::TruncatedOuter { r0, eps } = self.bob {
            if !(r0 > 0.0 && eps > 0.0 && r0.is_finite() && eps.is_finite()) {
                return Err(Error::bad("truncated Bob needs r0 > 0 and eps > 0"));
            }
            if self.dim != Dim::Three {
                return Err(Error::bad("truncated Bobs are implemented in three dimensions only"));
            }
        }
        Ok(())
    }

    /// The configured `λ_π`, or the fine-tuned one. Zero when `λ_φ = 0` and unset.
    pub fn resolved_lambda_pi(&self) -> Result<f64> {
        match self.lambda_pi {
            Some(v) => Ok(v),
            None if self.lambda_phi == 0.0 => Ok(0.0),
            None => fine_tuned_lambda_pi(self.dim, self.sigma, self.lambda_phi),
        }
    }

    pub fn window_eps(&self) -> Option<f64> {
        match self.bob {
            BobSpec::TruncatedInner { eps, .. } | BobSpec::TruncatedOuter { eps, .. } => Some(eps),
            _ => None,
        }
    }

    pub fn resolved_k_max(&self) -> f64 {
        self.k_max.unwrap_or_else(|| {
            let base = GAUSSIAN_KMAX_FACTOR / self.sigma;
            match self.window_eps() {
                Some(eps) => base.max(20.0 / eps),
                None => base,
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        let ok = ChannelConfig::gaussian(Dim::Three, 1.0, 10.0);
        assert!(ok.validate().is_ok());
        assert!(ChannelConfig::gaussian(Dim::Three, 0.0, 1.0).validate().is_err());
        assert!(ok.clone().with_delta(-1.0).validate().is_err());
        assert!(ChannelConfig::gaussian(Dim::Three, 1.0, -1.0).validate().is_err());
        let bad_window = ok.clone().with_bob(BobSpec::TruncatedInner { r0: 0.0, eps: 0.1 });
        assert!(bad_window.validate().is_err());
        let two_d = ChannelConfig::gaussian(Dim::Two, 1.0, 1.0)
            .with_bob(BobSpec::TruncatedOuter { r0: 3.0, eps: 0.1 });
        assert!(two_d.validate().is_err());
    }

    #[test]
    fn default_cutoffs() {
        let c = ChannelConfig::gaussian(Dim::Three, 1.0, 10.0);
        assert_eq!(c.resolved_k_max(), 40.0);
        let t = c.with_bob(BobSpec::TruncatedInner { r0: 5.0, eps: 0.1 });
        assert!((t.resolved_k_max() - 200.0).abs() < 1e-12);
    }
}
