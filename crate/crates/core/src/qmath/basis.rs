//! Pauli eigenstates and projectors. Convention: `|+z> = (1, 0)`, `|-z> = (0, 1)`,
//! `sigma_y = [[0, -i], [i, 0]]`.

use num_complex::Complex64;

use super::matrix::CMat;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Z,
}

/// Eigenvector of `sigma_axis` with eigenvalue `sign` (which must be +1 or -1).
pub fn ket(axis: Axis, sign: i8) -> [Complex64; 2] {
    assert!(sign == 1 || sign == -1, "sign must be ±1");
    let s = f64::from(sign);
    let h = std::f64::consts::FRAC_1_SQRT_2;
    match (axis, sign) {
        (Axis::Z, 1) => [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
        (Axis::Z, _) => [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)],
        (Axis::X, _) => [Complex64::new(h, 0.0), Complex64::new(s * h, 0.0)],
        (Axis::Y, _) => [Complex64::new(h, 0.0), Complex64::new(0.0, s * h)],
    }
}

pub fn projector(axis: Axis, sign: i8) -> CMat {
    let k = ket(axis, sign);
    CMat::outer(&k, &k)
}

pub fn pauli(axis: Axis) -> CMat {
    let (o, z, i) = (
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::new(0.0, 1.0),
    );
    match axis {
        Axis::X => CMat::from_rows(&[z, o, o, z]),
        Axis::Y => CMat::from_rows(&[z, -i, i, z]),
        Axis::Z => CMat::from_rows(&[o, z, z, -o]),
    }
}
