//! Radial smearing functions, their spectra, and the quadrature machinery behind both.

pub mod bessel;
pub mod profile;
pub mod quadrature;
pub mod spline;

pub use bessel::{bessel_i0_scaled, bessel_j0};
pub use profile::{
    bulk_fourier_3d, fourier_radial, fourier_radial_with, gaussian_profile,
    inverse_fourier_radial, inverse_fourier_radial_with, numeric_fourier, numeric_inverse, sinc,
    smooth_step, Dim, Propagator, RadialKind, RadialProfile, SampledGrid, SpectralKind,
    SpectralProfile, Window, WindowSide, GAUSSIAN_KMAX_FACTOR, WINDOWED_KMAX_FACTOR,
};
pub use quadrature::{
    gauss_legendre, integrate, integrate_inverse_sqrt, integrate_to_infinity, QuadOptions,
    DEFAULT_REL_TOL, MAX_INTERVALS,
};
