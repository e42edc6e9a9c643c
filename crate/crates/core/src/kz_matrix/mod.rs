//! The 2×2 representations ρ₀, ρ₁, ρ∞ of the formal KZ equation: exact
//! word images, truncated fundamental solutions `ρ(H₀(z))` and their
//! inverses, the matrices matching them with the local solutions, and the
//! Γ-function connection matrices.

mod gamma;
mod mat2;
mod poly;
mod rep;
mod series;

use std::collections::HashMap;
use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub use gamma::{gamma, rgamma};
pub use mat2::Mat2;
pub use poly::{param_values, Exponents, Poly, PolyMatrix, Var};
pub use rep::{rep_word, rep_word_numeric, rho0_closed_form, rho_infty_beta0, RepName, Representation};
pub use series::{
    fundamental_series, fundamental_series_by_words, fundamental_series_unchecked, graded_series,
    inverse_series, inverse_series_by_words, inverse_series_unchecked, numeric_images, series_along,
    solve_along,
};

use crate::continuation::Path;
use crate::error::{Error, Result};
use crate::series_eval::{local_solution_theta, mpl, EvalParams, ParamSet, Singularity};
use crate::word_algebra::MultiIndex;

/// The constant matrices relating `ρ(H₀)` to the local solution matrices:
/// `Φ₀ = ρ₀(H₀(z))·rho0`, `ᵗΦ₁⁻¹ = ρ₁(H₀(1−z))·rho1` and
/// `Φ∞ = ρ∞(H₀(1/z))·rho_infty`, where
/// `rho0 = [[1, 1], [0, p/β]]`,
/// `rho1 = [[1, αβ/((α+β−γ)q)], [0, β/(α+β−γ)]]` and
/// `rho_infty = [[1, 1], [−α/β, −1]]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TransferMatrices {
    pub rho0: Mat2,
    pub rho1: Mat2,
    pub rho_infty: Mat2,
}

fn nonzero(v: Complex64, what: &str) -> Result<Complex64> {
    if v.norm() < 1e-300 {
        return Err(Error::Degenerate(format!("{what} vanishes")));
    }
    Ok(v)
}

pub fn transfer_matrices(ps: &ParamSet) -> Result<TransferMatrices> {
    let (a, b, c) = (ps.alpha, ps.beta, ps.gamma);
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let beta = nonzero(b, "β")?;
    let s = nonzero(a + b - c, "α+β−γ")?;
    let q = nonzero(ps.q(), "q")?;
    Ok(TransferMatrices {
        rho0: Mat2::new(one, one, zero, ps.p() / beta),
        rho1: Mat2::new(one, a * b / (s * q), zero, b / s),
        rho_infty: Mat2::new(one, one, -a / beta, -one),
    })
}

/// `z^{−ρ₀(X)} = [[1, β/p·(z^{−p}−1)], [0, z^{−p}]]` with the principal
/// branch of `log z`.
pub fn z_pow_minus_rho0x(ps: &ParamSet, z: Complex64) -> Result<Mat2> {
    let p = nonzero(ps.p(), "p")?;
    let zp = (-p * z.ln()).exp();
    Ok(Mat2::new(1.0.into(), ps.beta / p * (zp - 1.0), 0.0.into(), zp))
}

/// `Φᵢ(z) = [[φ₀, φ₁], [zφ₀′/β, zφ₁′/β]]` from the local solutions at `at`.
pub fn phi_matrix(ps: &ParamSet, at: Singularity, z: Complex64) -> Result<Mat2> {
    let beta = nonzero(ps.beta, "β")?;
    let (f0, t0) = local_solution_theta(ps, at, 0, z)?;
    let (f1, t1) = local_solution_theta(ps, at, 1, z)?;
    Ok(Mat2::new(f0, f1, t0 / beta, t1 / beta))
}

/// `Φᵢ` built from local solutions at the start of `path` and continued as
/// a solution of the hypergeometric system to its end.
pub fn phi_matrix_along(ps: &ParamSet, at: Singularity, path: &Path, tol: f64) -> Result<Mat2> {
    let start = phi_matrix(ps, at, path.start())?;
    let (x, y) = Representation::rho0().eval(ps);
    solve_along(&x, &y, path, &start, tol)
}

/// `Φ₀ = ρ₀(H₀(z))·[[1, 1], [0, p/β]]` with the series truncated at weight
/// `k_max`.
pub fn phi0_from_series(ps: &ParamSet, z: Complex64, k_max: usize, evalp: &EvalParams) -> Result<Mat2> {
    let t = transfer_matrices(ps)?;
    Ok(fundamental_series(&Representation::rho0(), ps, z, k_max, evalp)? * t.rho0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ConnectionTag {
    C01,
    C0Infty,
}

impl std::str::FromStr for ConnectionTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<ConnectionTag> {
        match s.to_ascii_lowercase().as_str() {
            "c01" | "01" => Ok(ConnectionTag::C01),
            "c0infty" | "0infty" | "c0inf" => Ok(ConnectionTag::C0Infty),
            _ => Err(Error::Parse(format!("unknown connection {s:?}"))),
        }
    }
}

/// A connection matrix `C` with `Φ₀ = Φᵢ·C`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConnectionMatrix {
    pub tag: ConnectionTag,
    pub matrix: Mat2,
}

fn gamma_ratio(num: [Complex64; 2], den: [Complex64; 2]) -> Result<Complex64> {
    Ok(gamma(num[0])? * gamma(num[1])? * rgamma(den[0]) * rgamma(den[1]))
}

/// The Γ-function expressions for `Φ₁⁻¹Φ₀` (`C01`) and `Φ∞⁻¹Φ₀` (`C0Infty`).
pub fn connection_matrix(tag: ConnectionTag, ps: &ParamSet) -> Result<ConnectionMatrix> {
    let (a, b, c) = (ps.alpha, ps.beta, ps.gamma);
    let one = Complex64::new(1.0, 0.0);
    let matrix = match tag {
        ConnectionTag::C01 => Mat2::new(
            gamma_ratio([c, c - a - b], [c - a, c - b])?,
            gamma_ratio([2.0 - c, c - a - b], [one - a, one - b])?,
            gamma_ratio([c, a + b - c], [a, b])?,
            gamma_ratio([2.0 - c, a + b - c], [a + 1.0 - c, b + 1.0 - c])?,
        ),
        ConnectionTag::C0Infty => {
            let ipi = Complex64::new(0.0, PI);
            Mat2::new(
                (-ipi * a).exp() * gamma_ratio([c, b - a], [b, c - a])?,
                (ipi * (c - a - 1.0)).exp() * gamma_ratio([2.0 - c, b - a], [b + 1.0 - c, one - a])?,
                (-ipi * b).exp() * gamma_ratio([c, a - b], [a, c - b])?,
                (ipi * (c - b - 1.0)).exp() * gamma_ratio([2.0 - c, a - b], [a + 1.0 - c, one - b])?,
            )
        }
    };
    Ok(ConnectionMatrix { tag, matrix })
}

/// Memoized `Li_{m,1,…,1}(u)` values.
struct OnesTable<'a> {
    u: Complex64,
    evalp: &'a EvalParams,
    cache: HashMap<(u32, usize), Complex64>,
}

impl OnesTable<'_> {
    /// `Li_{m, 1^{ones}}(u)`.
    fn get(&mut self, m: u32, ones: usize) -> Result<Complex64> {
        if let Some(v) = self.cache.get(&(m, ones)) {
            return Ok(*v);
        }
        let v = mpl(&MultiIndex::with_ones(m, ones), self.u, self.evalp)?.value;
        self.cache.insert((m, ones), v);
        Ok(v)
    }
}

fn factorials(n: usize) -> Vec<f64> {
    let mut f = vec![1.0; n + 1];
    for i in 1..=n {
        f[i] = f[i - 1] * i as f64;
    }
    f
}

fn check_u(u: Complex64) -> Result<()> {
    if !(u.norm() < 1.0) || u == Complex64::new(0.0, 0.0) {
        return Err(Error::OutsideDisk { z: u, radius: 1.0 });
    }
    Ok(())
}

/// `H₂₁` and `H₂₂` in `lim_{β→0} ρ∞(H₀(u))⁻¹ = [[1, 0], [H₂₁, H₂₂]]`,
/// truncated at total weight `k ≤ n_max`, with `L = log u` (principal):
///
/// `H₂₂ = Σ_{k≥n≥0} (−1)ᵏ Li_{1ⁿ}(u) L^{k−n}/(k−n)! α^{k−n}(α+p)ⁿ`,
///
/// `H₂₁ = Σ_{k≥1} (−1)ᵏ Lᵏαᵏ/k!
///       + Σ_{k≥n≥1} (−1)ᵏ Li_{1ⁿ}(u) L^{k−n}/(k−n)! α^{k−n+1}(α+p)^{n−1}
///       + p Σ_{k>n≥1} (−1)ᵏ Σ_{i<k−n} (−1)^{k−n−1−i} Li_{k−n−i+1,1^{n−1}}(u) Lⁱ/i! α^{k−n}(α+p)^{n−1}`.
pub fn h21_h22_series(alpha: Complex64, p: Complex64, u: Complex64, n_max: usize) -> Result<(Complex64, Complex64)> {
    h21_h22_impl(alpha, p, u, n_max, false)
}

/// The same sums with the sign and exponent pattern `α^{k−n}(α+p)ⁿ` (no
/// `(−1)ᵏ` in the second sum of `H₂₁`) that appears in the literature
/// statement. It does not reproduce the β → 0 limit and is kept for
/// comparison only.
pub fn h21_as_printed(alpha: Complex64, p: Complex64, u: Complex64, n_max: usize) -> Result<Complex64> {
    Ok(h21_h22_impl(alpha, p, u, n_max, true)?.0)
}

fn h21_h22_impl(
    alpha: Complex64,
    p: Complex64,
    u: Complex64,
    n_max: usize,
    printed: bool,
) -> Result<(Complex64, Complex64)> {
    check_u(u)?;
    let evalp = EvalParams::default();
    let mut li = OnesTable {
        u,
        evalp: &evalp,
        cache: HashMap::new(),
    };
    let fact = factorials(n_max);
    let l = u.ln();
    let ap = alpha + p;
    let lp: Vec<Complex64> = (0..=n_max).map(|i| l.powi(i as i32) / fact[i]).collect();
    let a_pow: Vec<Complex64> = (0..=n_max + 1).map(|i| alpha.powi(i as i32)).collect();
    let ap_pow: Vec<Complex64> = (0..=n_max).map(|i| ap.powi(i as i32)).collect();
    let sign = |k: usize| if k % 2 == 0 { 1.0 } else { -1.0 };

    let mut h21 = Complex64::new(0.0, 0.0);
    let mut h22 = Complex64::new(0.0, 0.0);
    for k in 0..=n_max {
        for n in 0..=k {
            let ones = if n == 0 { Complex64::new(1.0, 0.0) } else { li.get(1, n - 1)? };
            h22 += sign(k) * ones * lp[k - n] * a_pow[k - n] * ap_pow[n];
        }
        if k == 0 {
            continue;
        }
        h21 += sign(k) * lp[k] * a_pow[k];
        for n in 1..=k {
            let ones = li.get(1, n - 1)?;
            h21 += if printed {
                ones * lp[k - n] * a_pow[k - n] * ap_pow[n]
            } else {
                sign(k) * ones * lp[k - n] * a_pow[k - n + 1] * ap_pow[n - 1]
            };
        }
        for n in 1..k {
            let mut inner = Complex64::new(0.0, 0.0);
            for i in 0..k - n {
                inner += sign(k - n - 1 - i) * li.get((k - n - i + 1) as u32, n - 1)? * lp[i];
            }
            let weight = if printed { ap_pow[n] } else { ap_pow[n - 1] };
            h21 += p * sign(k) * inner * a_pow[k - n] * weight;
        }
    }
    Ok((h21, h22))
}
