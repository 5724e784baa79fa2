//! Validated density matrices, entropies and the C⊗B bipartite quantities.
//!
//! Tensor order is fixed project-wide: C is the left factor, so the joint
//! index is `c * 2 + b`.

use num_complex::Complex64;

use super::eigen::hermitian_eigenvalues;
use super::matrix::CMat;
use crate::error::{Error, Result};

/// Tolerance on Hermiticity, trace and positivity.
pub const STATE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    m: CMat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    C,
    B,
}

impl DensityMatrix {
    /// Validates Hermiticity, unit trace and positivity, all to [`STATE_TOL`].
    pub fn new(m: CMat) -> Result<Self> {
        let n = m.dim();
        if n != 2 && n != 4 {
            return Err(Error::DimensionMismatch {
                expected: 4,
                got: n,
            });
        }
        let defect = m.hermiticity_defect();
        if !(defect <= STATE_TOL) {
            return Err(Error::NotHermitian { deviation: defect });
        }
        let tr = m.trace();
        if !((tr - Complex64::new(1.0, 0.0)).norm() <= STATE_TOL) {
            return Err(Error::InvalidState(format!("trace {tr} differs from 1")));
        }
        let min = *hermitian_eigenvalues(&m)?.last().expect("non-empty");
        if min < -STATE_TOL {
            return Err(Error::InvalidState(format!(
                "negative eigenvalue {min:e}"
            )));
        }
        Ok(Self { m })
    }

    /// Wraps without validation. Only for states that are valid by construction.
    pub(crate) fn new_unchecked(m: CMat) -> Self {
        Self { m }
    }

    pub fn maximally_mixed(dim: usize) -> Self {
        Self::new_unchecked(CMat::identity(dim).scale_real(1.0 / dim as f64))
    }

    /// `|psi><psi|` for a normalised `psi`.
    pub fn pure(psi: &[Complex64]) -> Result<Self> {
        Self::new(CMat::outer(psi, psi))
    }

    pub fn dim(&self) -> usize {
        self.m.dim()
    }

    pub fn matrix(&self) -> &CMat {
        &self.m
    }

    pub fn into_matrix(self) -> CMat {
        self.m
    }

    /// `self ⊗ other` with `self` the left factor.
    pub fn tensor(&self, other: &DensityMatrix) -> Result<DensityMatrix> {
        if self.dim() != 2 || other.dim() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                got: self.dim().max(other.dim()),
            });
        }
        Ok(Self::new_unchecked(self.m.kron(&other.m)))
    }

    /// `w * self + (1 - w) * other`.
    pub fn mix(&self, other: &DensityMatrix, w: f64) -> DensityMatrix {
        Self::new_unchecked(&self.m.scale_real(w) + &other.m.scale_real(1.0 - w))
    }
}

/// Eigenvalues of `rho` with the small-negative clamp applied.
fn clamped_spectrum(rho: &DensityMatrix) -> Result<Vec<f64>> {
    let vals = hermitian_eigenvalues(rho.matrix())?;
    vals.into_iter()
        .map(|v| {
            if v < -STATE_TOL {
                Err(Error::InvalidState(format!("negative eigenvalue {v:e}")))
            } else {
                Ok(v.max(0.0))
            }
        })
        .collect()
}

/// `-Tr rho log2 rho`, in bits.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> Result<f64> {
    let s = clamped_spectrum(rho)?
        .into_iter()
        .filter(|&p| p > 0.0)
        .map(|p| -p * p.log2())
        .sum::<f64>();
    Ok(s.max(0.0))
}

pub fn partial_trace(rho_cb: &DensityMatrix, keep: Subsystem) -> Result<DensityMatrix> {
    if rho_cb.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            got: rho_cb.dim(),
        });
    }
    let m = rho_cb.matrix();
    let mut out = CMat::zeros(2);
    for i in 0..2 {
        for j in 0..2 {
            out[(i, j)] = (0..2)
                .map(|t| match keep {
                    Subsystem::B => m[(t * 2 + i, t * 2 + j)],
                    Subsystem::C => m[(i * 2 + t, j * 2 + t)],
                })
                .sum();
        }
    }
    Ok(DensityMatrix::new_unchecked(out))
}

/// `S(CB) - S(B)`.
pub fn conditional_entropy(rho_cb: &DensityMatrix) -> Result<f64> {
    let rho_b = partial_trace(rho_cb, Subsystem::B)?;
    Ok(von_neumann_entropy(rho_cb)? - von_neumann_entropy(&rho_b)?)
}

/// `S(B) - S(CB)`, in bits.
pub fn coherent_information(rho_cb: &DensityMatrix) -> Result<f64> {
    Ok(-conditional_entropy(rho_cb)?)
}
