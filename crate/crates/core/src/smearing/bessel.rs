//! `J0` and exponentially scaled `I0`, both to absolute accuracy ~1e-13 or better.

use std::f64::consts::{FRAC_PI_4, PI};

const SERIES_LIMIT: f64 = 8.0;
const ASYMPTOTIC_LIMIT: f64 = 25.0;
/// Trapezoid nodes on `[0, π]` for the integral representation; aliasing error is `~2 J_128(x)`.
const TRAPEZOID_NODES: usize = 64;

/// Bessel function of the first kind, order zero. Even in `x`.
pub fn bessel_j0(x: f64) -> f64 {
    let x = x.abs();
    if x < SERIES_LIMIT {
        j0_series(x)
    } else if x < ASYMPTOTIC_LIMIT {
        j0_trapezoid(x)
    } else {
        j0_asymptotic(x)
    }
}

fn j0_series(x: f64) -> f64 {
    let q = -0.25 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..80 {
        let kf = k as f64;
        term *= q / (kf * kf);
        sum += term;
        if term.abs() < 1e-18 * sum.abs().max(1e-3) {
            break;
        }
    }
    sum
}

/// `(1/π) ∫_0^π cos(x sin θ) dθ`; the integrand is smooth and periodic, so the
/// trapezoid rule converges geometrically.
fn j0_trapezoid(x: f64) -> f64 {
    let n = TRAPEZOID_NODES;
    let h = PI / n as f64;
    let mut s = 0.5 * (1.0 + 1.0);
    for i in 1..n {
        s += (x * (i as f64 * h).sin()).cos();
    }
    s / n as f64
}

/// Hankel expansion `√(2/πx) (P cos χ − Q sin χ)`, `χ = x − π/4`, summed to its smallest term.
fn j0_asymptotic(x: f64) -> f64 {
    let (mut p, mut q) = (0.0, 0.0);
    // a_k = prod_{j=1..k} (-(2j-1)^2) / (k! 8^k x^k)
    let mut a = 1.0;
    let mut prev = f64::INFINITY;
    for k in 0..200 {
        if k > 0 {
            let m = (2 * k - 1) as f64;
            a *= -m * m / (k as f64 * 8.0 * x);
        }
        if a.abs() > prev || a.abs() < 1e-18 {
            break;
        }
        prev = a.abs();
        // P collects even k with sign (-1)^(k/2); Q odd k with sign (-1)^((k-1)/2).
        match k % 4 {
            0 => p += a,
            1 => q += a,
            2 => p -= a,
            _ => q -= a,
        }
    }
    let chi = x - FRAC_PI_4;
    (2.0 / (PI * x)).sqrt() * (p * chi.cos() - q * chi.sin())
}

/// `e^{-x} I0(x)` for `x >= 0`.
pub fn bessel_i0_scaled(x: f64) -> f64 {
    let x = x.abs();
    if x < 30.0 {
        let q = 0.25 * x * x;
        let mut term = 1.0;
        let mut sum = 1.0;
        for k in 1..200 {
            let kf = k as f64;
            term *= q / (kf * kf);
            sum += term;
            if term < 1e-17 * sum {
                break;
            }
        }
        sum * (-x).exp()
    } else {
        // e^{-x} I0(x) ~ (2πx)^{-1/2} Σ ((2k-1)!!)^2 / (k! 8^k x^k)
        let mut term = 1.0;
        let mut sum = 1.0;
        for k in 1..200 {
            let m = (2 * k - 1) as f64;
            let next = term * m * m / (k as f64 * 8.0 * x);
            if next > term || next < 1e-17 * sum {
                break;
            }
            term = next;
            sum += term;
        }
        sum / (2.0 * PI * x).sqrt()
    }
}
