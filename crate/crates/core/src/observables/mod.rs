//! Gaussian field algebra: amplitudes of smeared observables, two-point overlaps,
//! commutator constants and the Wick identity for exponentials.

pub mod amplitude;
pub mod conditions;
pub mod wick;

pub use amplitude::{
    momentum_amplitude, overlap_W, sample_spectrum, FieldObservableSpec, KGrid, ProfileSource,
    Quadrature, SpectralAmplitude,
};
pub use conditions::{
    check_conditions, fine_tuned_lambda_pi, ConditionReport, GaussianMoments,
    FINE_TUNING_TOL, STRONG_COUPLING_RATIO,
};
pub use wick::{
    commutator_constant, gaussian_W_closed_form, gaussian_commutator_closed_form,
    wick_expectation, ExponentString, MAX_EXPONENTS,
};
