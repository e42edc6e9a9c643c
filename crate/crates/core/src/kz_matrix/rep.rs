use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::mat2::Mat2;
use super::poly::{Poly, PolyMatrix, Var};
use crate::error::{Error, Result};
use crate::series_eval::ParamSet;
use crate::word_algebra::{Letter, Word};

/// Which of the three representations of the formal KZ equation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RepName {
    Rho0,
    Rho1,
    RhoInfty,
}

impl fmt::Display for RepName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RepName::Rho0 => "rho0",
            RepName::Rho1 => "rho1",
            RepName::RhoInfty => "rhoinfty",
        })
    }
}

impl FromStr for RepName {
    type Err = Error;
    fn from_str(s: &str) -> Result<RepName> {
        match s {
            "rho0" => Ok(RepName::Rho0),
            "rho1" => Ok(RepName::Rho1),
            "rhoinfty" | "rhoinf" => Ok(RepName::RhoInfty),
            _ => Err(Error::Parse(format!("unknown representation {s:?}"))),
        }
    }
}

/// A representation given by the images of `X` and `Y`.
#[derive(Debug, Clone, PartialEq)]
pub struct Representation {
    pub name: RepName,
    pub x: PolyMatrix,
    pub y: PolyMatrix,
}

fn rho0_x() -> PolyMatrix {
    PolyMatrix::new(Poly::zero(), Var::Beta.into(), Poly::zero(), Var::P.into())
}

fn rho0_y() -> PolyMatrix {
    PolyMatrix::new(Poly::zero(), Poly::zero(), Var::Alpha.into(), Var::Q.into())
}

impl Representation {
    pub fn new(name: RepName) -> Representation {
        match name {
            RepName::Rho0 => Representation::rho0(),
            RepName::Rho1 => Representation::rho1(),
            RepName::RhoInfty => Representation::rho_infty(),
        }
    }

    /// `ρ₀(X) = [[0, β], [0, p]]`, `ρ₀(Y) = [[0, 0], [α, q]]`.
    pub fn rho0() -> Representation {
        Representation {
            name: RepName::Rho0,
            x: rho0_x(),
            y: rho0_y(),
        }
    }

    /// `ρ₁(X) = ᵗρ₀(Y)`, `ρ₁(Y) = ᵗρ₀(X)`.
    pub fn rho1() -> Representation {
        Representation {
            name: RepName::Rho1,
            x: rho0_y().transpose(),
            y: rho0_x().transpose(),
        }
    }

    /// `ρ∞(X) = ρ₀(Y) − ρ₀(X)`, `ρ∞(Y) = ρ₀(Y)`, the images for the
    /// coordinate `u = 1/z`.
    pub fn rho_infty() -> Representation {
        Representation {
            name: RepName::RhoInfty,
            x: &rho0_y() - &rho0_x(),
            y: rho0_y(),
        }
    }

    pub fn letter(&self, l: Letter) -> &PolyMatrix {
        match l {
            Letter::X => &self.x,
            Letter::Y => &self.y,
        }
    }

    /// Numeric images of `X` and `Y`.
    pub fn eval(&self, ps: &ParamSet) -> (Mat2, Mat2) {
        (self.x.eval_params(ps), self.y.eval_params(ps))
    }
}

/// `ρ(W)` as the ordered product of letter images.
pub fn rep_word(rep: &Representation, w: Word) -> PolyMatrix {
    w.letters()
        .fold(PolyMatrix::identity(), |acc, l| &acc * rep.letter(l))
}

/// Numeric `ρ(W)` at a parameter set.
pub fn rep_word_numeric(x: &Mat2, y: &Mat2, w: Word) -> Mat2 {
    w.letters().fold(Mat2::identity(), |acc, l| {
        acc * match l {
            Letter::X => *x,
            Letter::Y => *y,
        }
    })
}

/// `ρ₀(W) = p^{|W|−d−h} q^{d−h} (αβ+pq)^{h−1} M` with `M` chosen by the
/// first and last letters of `W`.
pub fn rho0_closed_form(w: Word) -> Result<PolyMatrix> {
    let (first, last) = match (w.first(), w.last()) {
        (Some(f), Some(l)) => (f, l),
        _ => return Err(Error::Domain("the closed form needs a nonempty word".into())),
    };
    let (k, d, h) = (w.len() as i32, w.depth() as i32, w.height() as i32);
    let a = Poly::var(Var::Alpha);
    let b = Poly::var(Var::Beta);
    let p = Poly::var(Var::P);
    let q = Poly::var(Var::Q);
    let ab = &a * &b;
    let pq = &p * &q;
    let z = Poly::zero;
    let m = match (first, last) {
        (Letter::X, Letter::Y) => PolyMatrix::new(ab.clone(), &b * &q, &a * &p, pq.clone()),
        (Letter::Y, Letter::Y) => PolyMatrix::new(z(), z(), &a * &p, pq.clone()),
        (Letter::X, Letter::X) => PolyMatrix::new(z(), &b * &q, z(), pq.clone()),
        (Letter::Y, Letter::X) => PolyMatrix::new(z(), z(), z(), pq.clone()),
    };
    let r = &ab + &pq;
    let factor = &(&Poly::var_pow(Var::P, k - d - h) * &Poly::var_pow(Var::Q, d - h)) * &r.pow((h - 1) as u32);
    Ok(m.scale(&factor))
}

/// `lim_{β→0} ρ∞(W) = α^{|W|−d}(α+p)^{d−1} M′` where `M′` is
/// `[[0, 0], [α, α+p]]` for `W` ending in `Y` and `[[0, 0], [α+p, α+p]]`
/// for `W` ending in `X`.
pub fn rho_infty_beta0(w: Word, alpha: Complex64, p: Complex64) -> Result<Mat2> {
    let last = w
        .last()
        .ok_or_else(|| Error::Domain("the β → 0 limit needs a nonempty word".into()))?;
    let (k, d) = (w.len() as i32, w.depth() as i32);
    let ap = alpha + p;
    let zero = Complex64::new(0.0, 0.0);
    let m = match last {
        Letter::Y => Mat2::new(zero, zero, alpha, ap),
        Letter::X => Mat2::new(zero, zero, ap, ap),
    };
    Ok(m * (alpha.powi(k - d) * ap.powi(d - 1)))
}
