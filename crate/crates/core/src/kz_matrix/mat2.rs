use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A complex 2×2 matrix, row major.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Mat2(pub [[Complex64; 2]; 2]);

impl Mat2 {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Mat2 {
        Mat2([[a, b], [c, d]])
    }

    pub fn real(a: f64, b: f64, c: f64, d: f64) -> Mat2 {
        Mat2::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn zero() -> Mat2 {
        Mat2::default()
    }

    pub fn identity() -> Mat2 {
        Mat2::real(1.0, 0.0, 0.0, 1.0)
    }

    pub fn scalar(s: Complex64) -> Mat2 {
        Mat2::new(s, 0.0.into(), 0.0.into(), s)
    }

    pub fn det(&self) -> Complex64 {
        let m = &self.0;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    pub fn trace(&self) -> Complex64 {
        self.0[0][0] + self.0[1][1]
    }

    pub fn transpose(&self) -> Mat2 {
        let m = &self.0;
        Mat2::new(m[0][0], m[1][0], m[0][1], m[1][1])
    }

    pub fn inv(&self) -> Result<Mat2> {
        let d = self.det();
        if d.norm() == 0.0 || !d.is_finite() {
            return Err(Error::Degenerate(format!("singular matrix {self}")));
        }
        let m = &self.0;
        Ok(Mat2::new(m[1][1], -m[0][1], -m[1][0], m[0][0]) * (1.0 / d))
    }

    /// `max |aᵢⱼ|`.
    pub fn norm_max(&self) -> f64 {
        self.0.iter().flatten().map(|v| v.norm()).fold(0.0, f64::max)
    }

    pub fn dist(&self, other: &Mat2) -> f64 {
        (*self - *other).norm_max()
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().flatten().all(|v| v.is_finite())
    }

    /// Matrix exponential, via `exp(sI + B) = eˢ(cosh δ·I + sinh δ/δ·B)`
    /// with `B` traceless and `δ² = −det B`.
    pub fn exp(&self) -> Mat2 {
        let s = self.trace() * 0.5;
        let b = *self - Mat2::scalar(s);
        let delta = (-b.det()).sqrt();
        let sinhc = if delta.norm() < 1e-4 {
            let d2 = delta * delta;
            1.0 + d2 / 6.0 + d2 * d2 / 120.0
        } else {
            delta.sinh() / delta
        };
        (Mat2::scalar(delta.cosh()) + b * sinhc) * s.exp()
    }

    /// `z^M = exp(log z·M)` with the supplied logarithm.
    pub fn pow_log(&self, log_z: Complex64) -> Mat2 {
        (*self * log_z).exp()
    }

    /// Flattened `[a, b, c, d]`.
    pub fn to_vec(&self) -> [Complex64; 4] {
        let m = &self.0;
        [m[0][0], m[0][1], m[1][0], m[1][1]]
    }

    pub fn from_slice(v: &[Complex64]) -> Mat2 {
        Mat2::new(v[0], v[1], v[2], v[3])
    }
}

impl Index<(usize, usize)> for Mat2 {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.0[i][j]
    }
}

impl IndexMut<(usize, usize)> for Mat2 {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.0[i][j]
    }
}

impl Add for Mat2 {
    type Output = Mat2;
    fn add(self, rhs: Mat2) -> Mat2 {
        let (a, b) = (self.0, rhs.0);
        Mat2::new(a[0][0] + b[0][0], a[0][1] + b[0][1], a[1][0] + b[1][0], a[1][1] + b[1][1])
    }
}

impl Sub for Mat2 {
    type Output = Mat2;
    fn sub(self, rhs: Mat2) -> Mat2 {
        self + -rhs
    }
}

impl Neg for Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        self * Complex64::new(-1.0, 0.0)
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: Mat2) -> Mat2 {
        let (a, b) = (self.0, rhs.0);
        Mat2::new(
            a[0][0] * b[0][0] + a[0][1] * b[1][0],
            a[0][0] * b[0][1] + a[0][1] * b[1][1],
            a[1][0] * b[0][0] + a[1][1] * b[1][0],
            a[1][0] * b[0][1] + a[1][1] * b[1][1],
        )
    }
}

impl Mul<Complex64> for Mat2 {
    type Output = Mat2;
    fn mul(self, s: Complex64) -> Mat2 {
        let a = self.0;
        Mat2::new(a[0][0] * s, a[0][1] * s, a[1][0] * s, a[1][1] * s)
    }
}

impl Mul<f64> for Mat2 {
    type Output = Mat2;
    fn mul(self, s: f64) -> Mat2 {
        self * Complex64::new(s, 0.0)
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.0;
        write!(f, "[[{}, {}], [{}, {}]]", m[0][0], m[0][1], m[1][0], m[1][1])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse() {
        let a = Mat2::new(
            Complex64::new(1.0, 2.0),
            Complex64::new(0.5, 0.0),
            Complex64::new(-1.0, 0.3),
            Complex64::new(2.0, -1.0),
        );
        assert!((a * a.inv().unwrap()).dist(&Mat2::identity()) < 1e-15);
        assert!(Mat2::real(1.0, 2.0, 2.0, 4.0).inv().is_err());
    }

    #[test]
    fn exponential_against_taylor() {
        let a = Mat2::new(
            Complex64::new(0.3, 0.1),
            Complex64::new(-0.7, 0.0),
            Complex64::new(0.2, 0.5),
            Complex64::new(-0.4, 0.0),
        );
        let mut term = Mat2::identity();
        let mut sum = Mat2::identity();
        for n in 1..40 {
            term = term * a * (1.0 / n as f64);
            sum = sum + term;
        }
        assert!(a.exp().dist(&sum) < 1e-14);
        let nilpotent = Mat2::real(0.0, 1.0, 0.0, 0.0);
        assert!(nilpotent.exp().dist(&Mat2::real(1.0, 1.0, 0.0, 1.0)) < 1e-15);
    }
}
