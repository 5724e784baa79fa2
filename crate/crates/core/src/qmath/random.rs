//! Seeded random states for property tests.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::matrix::CMat;
use super::state::DensityMatrix;
use crate::error::{Error, Result};

fn gaussian(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// `G G† / Tr(G G†)` with `G` filled by independent standard complex normals.
pub fn random_density_matrix(dim: usize, seed: u64) -> Result<DensityMatrix> {
    if dim != 2 && dim != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            got: dim,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = CMat::from_rows(&(0..dim * dim).map(|_| gaussian(&mut rng)).collect::<Vec<_>>());
    let ggd = &g * &g.adjoint();
    let tr = ggd.trace().re;
    Ok(DensityMatrix::new_unchecked(ggd.scale_real(1.0 / tr)))
}

fn random_qubit(rng: &mut ChaCha8Rng) -> [Complex64; 2] {
    let v = [gaussian(rng), gaussian(rng)];
    let n = (v[0].norm_sqr() + v[1].norm_sqr()).sqrt();
    [v[0] / n, v[1] / n]
}

/// `sum_i p_i |c_i><c_i| ⊗ |b_i><b_i|` with Haar-random pure qubits and
/// uniformly drawn, normalised weights.
pub fn random_separable_state(n_terms: usize, seed: u64) -> Result<DensityMatrix> {
    if n_terms == 0 {
        return Err(Error::bad("random_separable_state needs n_terms >= 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let weights: Vec<f64> = (0..n_terms).map(|_| rng.gen::<f64>() + 1e-3).collect();
    let total: f64 = weights.iter().sum();
    let mut acc = CMat::zeros(4);
    for w in weights {
        let c = random_qubit(&mut rng);
        let b = random_qubit(&mut rng);
        let term = CMat::outer(&c, &c).kron(&CMat::outer(&b, &b));
        acc += &term.scale_real(w / total);
    }
    Ok(DensityMatrix::new_unchecked(acc))
}
