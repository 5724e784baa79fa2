//! Cyclic Jacobi diagonalisation of small complex Hermitian matrices.

use num_complex::Complex64;

use super::matrix::CMat;
use crate::error::{Error, Result};

/// Symmetry tolerance accepted on input.
pub const HERMITIAN_TOL: f64 = 1e-9;
/// Sweeps stop once the off-diagonal Frobenius norm falls below this.
pub const OFF_DIAGONAL_TOL: f64 = 1e-14;
const MAX_SWEEPS: usize = 64;

#[derive(Debug, Clone)]
pub struct HermitianEigen {
    /// Descending.
    pub values: Vec<f64>,
    /// `vectors[i]` is the unit eigenvector for `values[i]`.
    pub vectors: Vec<Vec<Complex64>>,
}

/// Full eigendecomposition. The input is symmetrised (`(M + M†)/2`) after the
/// tolerance check so that rounding-level asymmetry does not leak into the result.
pub fn hermitian_eigen(m: &CMat) -> Result<HermitianEigen> {
    let defect = m.hermiticity_defect();
    if !(defect <= HERMITIAN_TOL) {
        return Err(Error::NotHermitian { deviation: defect });
    }
    let n = m.dim();
    let mut a = (m + &m.adjoint()).scale_real(0.5);
    let mut v = CMat::identity(n);

    let scale = a.entries().iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt().max(1.0);
    for _ in 0..MAX_SWEEPS {
        if a.off_diagonal_norm() <= OFF_DIAGONAL_TOL * scale {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(j, j)].re.total_cmp(&a[(i, i)].re));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = order
        .iter()
        .map(|&i| (0..n).map(|r| v[(r, i)]).collect())
        .collect();
    Ok(HermitianEigen { values, vectors })
}

/// Eigenvalues in descending order.
pub fn hermitian_eigenvalues(m: &CMat) -> Result<Vec<f64>> {
    Ok(hermitian_eigen(m)?.values)
}

fn rotate(a: &mut CMat, v: &mut CMat, p: usize, q: usize) {
    let apq = a[(p, q)];
    let g = apq.norm();
    if g == 0.0 {
        return;
    }
    // Phase the pivot to a real positive number, then use a real Jacobi rotation.
    let phase = apq / g;
    let theta = (a[(q, q)].re - a[(p, p)].re) / (2.0 * g);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let t = if theta == 0.0 { 1.0 } else { t };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    let n = a.dim();
    let mut u = CMat::identity(n);
    let conj_phase = phase.conj();
    u[(p, p)] = Complex64::new(c, 0.0);
    u[(p, q)] = Complex64::new(s, 0.0);
    u[(q, p)] = conj_phase * (-s);
    u[(q, q)] = conj_phase * c;

    let ua = &u.adjoint() * &*a;
    *a = &ua * &u;
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    *v = &*v * &u;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn residual(m: &CMat, eig: &HermitianEigen) -> f64 {
        let mut worst = 0.0_f64;
        for (lam, vec) in eig.values.iter().zip(&eig.vectors) {
            let mv = m.apply(vec);
            let r: f64 = mv
                .iter()
                .zip(vec)
                .map(|(a, b)| (a - b * lam).norm_sqr())
                .sum::<f64>()
                .sqrt();
            worst = worst.max(r);
        }
        worst
    }

    #[test]
    fn half_identity() {
        let m = CMat::identity(2).scale_real(0.5);
        assert_eq!(hermitian_eigenvalues(&m).unwrap(), vec![0.5, 0.5]);
    }

    #[test]
    fn already_diagonal() {
        let m = CMat::from_real_diag(&[0.0, 1.0, 0.0, 0.0]);
        assert_eq!(hermitian_eigenvalues(&m).unwrap(), vec![1.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = CMat::from_rows(&[c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]);
        assert!(matches!(
            hermitian_eigenvalues(&m),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn two_by_two_matches_quadratic_formula() {
        // closed form: (a+d)/2 ± sqrt(((a-d)/2)^2 + |b|^2)
        let cases = [
            (0.3, -1.2, c(0.7, -0.4)),
            (2.0, 2.0, c(0.0, 1e-3)),
            (-5.0, 1.0, c(-3.0, 2.5)),
            (1e-8, 0.0, c(1e-9, 1e-9)),
        ];
        for (a, d, b) in cases {
            let m = CMat::from_rows(&[c(a, 0.0), b, b.conj(), c(d, 0.0)]);
            let mean = 0.5 * (a + d);
            let rad = (0.25 * (a - d) * (a - d) + b.norm_sqr()).sqrt();
            let got = hermitian_eigenvalues(&m).unwrap();
            assert!((got[0] - (mean + rad)).abs() <= 1e-10, "{got:?}");
            assert!((got[1] - (mean - rad)).abs() <= 1e-10, "{got:?}");
        }
    }

    #[test]
    fn residuals_on_dense_4x4() {
        let mut m = CMat::zeros(4);
        let mut x = 0.37_f64;
        for i in 0..4 {
            for j in i..4 {
                x = (x * 3.7 + 0.11).fract();
                let y = (x * 5.3 + 0.29).fract();
                if i == j {
                    m[(i, i)] = c(x - 0.5, 0.0);
                } else {
                    m[(i, j)] = c(x - 0.5, y - 0.5);
                    m[(j, i)] = c(x - 0.5, 0.5 - y);
                }
            }
        }
        let eig = hermitian_eigen(&m).unwrap();
        assert!(residual(&m, &eig) <= 1e-10);
        assert!(eig.values.windows(2).all(|w| w[0] >= w[1]));
        let tr: f64 = eig.values.iter().sum();
        assert!((tr - m.trace().re).abs() < 1e-12);
    }
}
