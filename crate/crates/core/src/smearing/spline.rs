//! Natural cubic spline on a uniform grid, used for sampled radial and spectral data.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct UniformSpline {
    x0: f64,
    h: f64,
    y: Vec<f64>,
    /// Second derivatives at the nodes.
    m: Vec<f64>,
}

impl UniformSpline {
    pub fn new(x0: f64, h: f64, y: Vec<f64>) -> Result<Self> {
        if !(h > 0.0) || y.len() < 2 {
            return Err(Error::bad("spline needs h > 0 and at least two samples"));
        }
        let n = y.len();
        let mut m = vec![0.0; n];
        if n > 2 {
            // Tridiagonal system for interior second derivatives (Thomas algorithm).
            let k = n - 2;
            let mut c = vec![0.0; k];
            let mut d = vec![0.0; k];
            for i in 0..k {
                let rhs = 6.0 * (y[i] - 2.0 * y[i + 1] + y[i + 2]) / (h * h);
                let (prev_c, prev_d) = if i == 0 { (0.0, 0.0) } else { (c[i - 1], d[i - 1]) };
                let denom = 4.0 - prev_c;
                c[i] = 1.0 / denom;
                d[i] = (rhs - prev_d) / denom;
            }
            for i in (0..k).rev() {
                let next = if i + 1 < k { m[i + 2] } else { 0.0 };
                m[i + 1] = d[i] - c[i] * next;
            }
        }
        Ok(Self { x0, h, y, m })
    }

    pub fn x_max(&self) -> f64 {
        self.x0 + self.h * (self.y.len() - 1) as f64
    }

    /// Interpolated value; `None` outside the sampled range.
    pub fn eval(&self, x: f64) -> Option<f64> {
        let t = (x - self.x0) / self.h;
        let last = (self.y.len() - 1) as f64;
        if !(t >= 0.0 && t <= last) {
            return None;
        }
        let i = (t.floor() as usize).min(self.y.len() - 2);
        let a = t - i as f64;
        let b = 1.0 - a;
        let h2 = self.h * self.h / 6.0;
        Some(
            b * self.y[i]
                + a * self.y[i + 1]
                + h2 * ((b * b * b - b) * self.m[i] + (a * a * a - a) * self.m[i + 1]),
        )
    }
}

/// Spline of an even function sampled at `0, h, 2h, ...`: the data are mirrored
/// so that the origin is an interior node.
#[derive(Debug, Clone, PartialEq)]
pub struct EvenSpline {
    inner: UniformSpline,
    samples: Vec<f64>,
    h: f64,
}

impl EvenSpline {
    pub fn new(h: f64, samples: Vec<f64>) -> Result<Self> {
        if samples.len() < 2 {
            return Err(Error::bad("need at least two samples"));
        }
        let n = samples.len();
        let mut full = Vec::with_capacity(2 * n - 1);
        full.extend(samples.iter().rev());
        full.extend(&samples[1..]);
        let x0 = -(h * (n - 1) as f64);
        Ok(Self {
            inner: UniformSpline::new(x0, h, full)?,
            samples,
            h,
        })
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn x_max(&self) -> f64 {
        self.inner.x_max()
    }

    /// Zero beyond the last sample.
    pub fn eval(&self, x: f64) -> f64 {
        self.inner.eval(x.abs()).unwrap_or(0.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproduces_nodes_and_cubics_interior() {
        let h = 0.1;
        let f = |x: f64| 1.0 + x - 0.5 * x * x;
        let y: Vec<f64> = (0..41).map(|i| f(i as f64 * h)).collect();
        let s = UniformSpline::new(0.0, h, y.clone()).unwrap();
        for (i, v) in y.iter().enumerate() {
            assert!((s.eval(i as f64 * h).unwrap() - v).abs() < 1e-14);
        }
        assert!(s.eval(-0.01).is_none());
        assert!((s.eval(2.03).unwrap() - f(2.03)).abs() < 1e-4);
    }

    #[test]
    fn even_gaussian_accuracy_at_fiftieth_spacing() {
        let h = 1.0 / 50.0;
        let y: Vec<f64> = (0..=500).map(|i| (-(i as f64 * h).powi(2)).exp()).collect();
        let s = EvenSpline::new(h, y).unwrap();
        let mut worst = 0.0_f64;
        for j in 0..997 {
            let x = j as f64 * 0.01003;
            worst = worst.max((s.eval(x) - (-x * x).exp()).abs());
        }
        assert!(worst < 1e-7, "{worst}");
        assert_eq!(s.eval(11.0), 0.0);
        assert_eq!(s.eval(-0.3), s.eval(0.3));
    }
}
