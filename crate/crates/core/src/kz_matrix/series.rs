use num_complex::Complex64;

use super::mat2::Mat2;
use super::rep::{rep_word, rep_word_numeric, rho0_closed_form, RepName, Representation};
use crate::continuation::{integrate_path, OdeOptions, Path};
use crate::error::{Error, Result};
use crate::series_eval::{mpl_extended, mpl_extended_lin, EvalParams, ParamSet};
use crate::word_algebra::{antipode, Word};

const MAX_TERMS: usize = 400_000;

fn check_regime(rep: &Representation, ps: &ParamSet) -> Result<()> {
    if rep.name != RepName::RhoInfty && !ps.convergence_regime() {
        return Err(Error::RegimeViolation(format!(
            "{} needs |p|, |α+1−γ|, |β+1−γ|, |q| < 1/2 (α = {}, β = {}, γ = {})",
            rep.name, ps.alpha, ps.beta, ps.gamma
        )));
    }
    Ok(())
}

fn check_point(z: Complex64, k: usize) -> Result<()> {
    if !(z.norm() < 1.0) {
        return Err(Error::OutsideDisk { z, radius: 1.0 });
    }
    if k > 0 && z == Complex64::new(0.0, 0.0) {
        return Err(Error::LogSingularity("fundamental solution at z = 0".into()));
    }
    Ok(())
}

fn series_terms(z: Complex64, evalp: &EvalParams) -> usize {
    let r = z.norm();
    let need = if r > 0.0 { (45.0 / -r.ln()).ceil() as usize } else { 1 };
    need.max(evalp.series_terms).min(MAX_TERMS)
}

fn commutator(a: &Mat2, b: &Mat2) -> Mat2 {
    *a * *b - *b * *a
}

/// Values at `z` of the holomorphic graded pieces `P_k` in `H₀ = P·z^X`
/// (`inverse = false`) or `U_k` in `H₀⁻¹ = z^{−X}·U` (`inverse = true`).
///
/// The power-series coefficients obey
/// `m·A_{k,m} = [X, A_{k−1,m}] + Y·Σ_{j<m} A_{k−1,j}` and
/// `m·A_{k,m} = [X, A_{k−1,m}] − (Σ_{j<m} A_{k−1,j})·Y` respectively.
fn holomorphic_parts(x: &Mat2, y: &Mat2, z: Complex64, k_max: usize, n: usize, inverse: bool) -> Vec<Mat2> {
    let mut out = vec![Mat2::identity()];
    let mut prev = vec![Mat2::zero(); n];
    prev[0] = Mat2::identity();
    for _ in 1..=k_max {
        let mut next = vec![Mat2::zero(); n];
        let mut prefix = prev[0];
        for m in 1..n {
            let tail = if inverse { -(prefix * *y) } else { *y * prefix };
            next[m] = (commutator(x, &prev[m]) + tail) * (1.0 / m as f64);
            prefix = prefix + prev[m];
        }
        let mut acc = Mat2::zero();
        for c in next.iter().rev() {
            acc = acc * z + *c;
        }
        out.push(acc);
        prev = next;
    }
    out
}

/// `ℓʲ Xʲ / j!` for `j = 0..=k_max`.
fn log_powers(x: &Mat2, log: Complex64, k_max: usize) -> Vec<Mat2> {
    let mut out = vec![Mat2::identity()];
    for j in 1..=k_max {
        let last = out[j - 1];
        out.push(last * *x * (log / j as f64));
    }
    out
}

/// Weight-graded pieces `H_n`, `n = 0..=k_max`, of `ρ(H₀(z))` or of
/// `ρ(H₀(z))⁻¹`, with the principal branch of `log z`.
pub fn graded_series(
    rep: &Representation,
    ps: &ParamSet,
    z: Complex64,
    k_max: usize,
    evalp: &EvalParams,
    inverse: bool,
) -> Result<Vec<Mat2>> {
    check_point(z, k_max)?;
    let (x, y) = rep.eval(ps);
    Ok(graded_from_matrices(&x, &y, z, z.ln(), k_max, evalp, inverse))
}

fn graded_from_matrices(
    x: &Mat2,
    y: &Mat2,
    z: Complex64,
    log: Complex64,
    k_max: usize,
    evalp: &EvalParams,
    inverse: bool,
) -> Vec<Mat2> {
    let n = series_terms(z, evalp);
    let parts = holomorphic_parts(x, y, z, k_max, n, inverse);
    let logs = log_powers(x, if inverse { -log } else { log }, k_max);
    (0..=k_max)
        .map(|w| {
            (0..=w).fold(Mat2::zero(), |acc, j| {
                acc + if inverse { logs[j] * parts[w - j] } else { parts[w - j] * logs[j] }
            })
        })
        .collect()
}

fn sum(v: &[Mat2]) -> Mat2 {
    v.iter().fold(Mat2::zero(), |a, b| a + *b)
}

/// `ρ(H₀(z))` truncated to words of weight `≤ k_max`, for `|z| < 1` on the
/// principal branch. `ρ₀` and `ρ₁` require the convergence regime.
pub fn fundamental_series(
    rep: &Representation,
    ps: &ParamSet,
    z: Complex64,
    k_max: usize,
    evalp: &EvalParams,
) -> Result<Mat2> {
    check_regime(rep, ps)?;
    fundamental_series_unchecked(rep, ps, z, k_max, evalp)
}

/// [`fundamental_series`] without the regime check.
pub fn fundamental_series_unchecked(
    rep: &Representation,
    ps: &ParamSet,
    z: Complex64,
    k_max: usize,
    evalp: &EvalParams,
) -> Result<Mat2> {
    Ok(sum(&graded_series(rep, ps, z, k_max, evalp, false)?))
}

/// `ρ(H₀(z))⁻¹ = Σ Li(S(w); z) ρ(W)` truncated to weight `≤ k_max`.
pub fn inverse_series(
    rep: &Representation,
    ps: &ParamSet,
    z: Complex64,
    k_max: usize,
    evalp: &EvalParams,
) -> Result<Mat2> {
    check_regime(rep, ps)?;
    inverse_series_unchecked(rep, ps, z, k_max, evalp)
}

/// [`inverse_series`] without the regime check.
pub fn inverse_series_unchecked(
    rep: &Representation,
    ps: &ParamSet,
    z: Complex64,
    k_max: usize,
    evalp: &EvalParams,
) -> Result<Mat2> {
    Ok(sum(&graded_series(rep, ps, z, k_max, evalp, true)?))
}

fn word_image(rep: &Representation, ps: &ParamSet, w: Word) -> Result<Mat2> {
    if rep.name == RepName::Rho0 && !w.is_empty() {
        return Ok(rho0_closed_form(w)?.eval_params(ps));
    }
    Ok(rep_word(rep, w).eval_params(ps))
}

fn all_words(k_max: usize) -> impl Iterator<Item = Word> {
    (0..=k_max).flat_map(Word::all_of_length)
}

/// `Σ_{|w| ≤ k_max} Li(w; z) ρ(W)`, summed word by word with the
/// extended polylogarithms and exact word images.
pub fn fundamental_series_by_words(
    rep: &Representation,
    ps: &ParamSet,
    z: Complex64,
    k_max: usize,
    evalp: &EvalParams,
) -> Result<Mat2> {
    check_regime(rep, ps)?;
    check_point(z, k_max)?;
    let mut acc = Mat2::zero();
    for w in all_words(k_max) {
        let li = mpl_extended(w, z, evalp)?.value;
        acc = acc + word_image(rep, ps, w)? * li;
    }
    Ok(acc)
}

/// `Σ_{|w| ≤ k_max} Li(S(w); z) ρ(W)`, summed word by word.
pub fn inverse_series_by_words(
    rep: &Representation,
    ps: &ParamSet,
    z: Complex64,
    k_max: usize,
    evalp: &EvalParams,
) -> Result<Mat2> {
    check_regime(rep, ps)?;
    check_point(z, k_max)?;
    let mut acc = Mat2::zero();
    for w in all_words(k_max) {
        let li = mpl_extended_lin(&antipode(w), z, evalp)?.value;
        acc = acc + word_image(rep, ps, w)? * li;
    }
    Ok(acc)
}

/// Numeric `ρ(W)` for all words of weight `≤ k_max`, keyed by word.
pub fn numeric_images(rep: &Representation, ps: &ParamSet, k_max: usize) -> Vec<(Word, Mat2)> {
    let (x, y) = rep.eval(ps);
    all_words(k_max).map(|w| (w, rep_word_numeric(&x, &y, w))).collect()
}

fn connection_form(x: Mat2, y: Mat2) -> impl Fn(Complex64) -> Mat2 {
    move |z: Complex64| x * (1.0 / z) + y * (1.0 / (1.0 - z))
}

/// Truncated `ρ(H₀)` or `ρ(H₀)⁻¹` continued along `path`, which must start
/// at a real base point in `(0, 1)`. The graded pieces satisfy
/// `dH_n = Ω·H_{n−1}` and `dV_n = −V_{n−1}·Ω` with
/// `Ω = ρ(X)dz/z + ρ(Y)dz/(1−z)`.
pub fn series_along(
    rep: &Representation,
    ps: &ParamSet,
    path: &Path,
    k_max: usize,
    evalp: &EvalParams,
    inverse: bool,
) -> Result<Mat2> {
    let base = path
        .base()
        .ok_or_else(|| Error::InvalidPath("path must start at a real base point in (0, 1)".into()))?;
    let z0 = Complex64::new(base, 0.0);
    let (x, y) = rep.eval(ps);
    let start = graded_from_matrices(&x, &y, z0, z0.ln(), k_max, evalp, inverse);
    let y0: Vec<Complex64> = start.iter().flat_map(|m| m.to_vec()).collect();
    let omega = connection_form(x, y);
    let f = move |z: Complex64, v: &[Complex64], dv: &mut [Complex64]| {
        let om = omega(z);
        dv[..4].fill(Complex64::new(0.0, 0.0));
        for n in 1..=k_max {
            let lower = Mat2::from_slice(&v[4 * (n - 1)..4 * n]);
            let d = if inverse { -(lower * om) } else { om * lower };
            dv[4 * n..4 * n + 4].copy_from_slice(&d.to_vec());
        }
    };
    let end = integrate_path(path, &y0, f, &OdeOptions::with_tol(evalp.tolerance.min(1e-10)))?;
    Ok((0..=k_max).fold(Mat2::zero(), |acc, n| acc + Mat2::from_slice(&end[4 * n..4 * n + 4])))
}

/// Continues a solution `Φ` of `dΦ/dz = (A/z + B/(1−z))Φ` from the start of
/// `path` (where it equals `phi0`) to its end.
pub fn solve_along(a: &Mat2, b: &Mat2, path: &Path, phi0: &Mat2, tol: f64) -> Result<Mat2> {
    let omega = connection_form(*a, *b);
    let f = move |z: Complex64, v: &[Complex64], dv: &mut [Complex64]| {
        let d = omega(z) * Mat2::from_slice(v);
        dv.copy_from_slice(&d.to_vec());
    };
    let end = integrate_path(path, &phi0.to_vec(), f, &OdeOptions::with_tol(tol))?;
    Ok(Mat2::from_slice(&end))
}
