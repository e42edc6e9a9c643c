use num_complex::Complex64;
use num_traits::ToPrimitive;

use super::params::{EvalParams, ValueWithError};
use super::power::{horner, horner_theta, tail_bound, tail_bound_theta, word_coefficients};
use crate::error::{Error, Result};
use crate::word_algebra::{reg1, LinComb, Letter, MultiIndex, Word};

fn check_disk(z: Complex64) -> Result<()> {
    if z.norm() >= 1.0 || !z.is_finite() {
        return Err(Error::OutsideDisk { z, radius: 1.0 });
    }
    Ok(())
}

/// Leading index `k₁` and depth of a nonempty word of `h¹`.
pub(crate) fn shape(w: Word) -> (u32, u32) {
    let lead_x = w.letters().take_while(|&l| l == Letter::X).count() as u32;
    (lead_x + 1, w.depth() as u32)
}

/// `Li(w; z)` for `w ∈ h¹` and `|z| < 1` by the truncated power series.
pub fn mpl_word(w: Word, z: Complex64, params: &EvalParams) -> Result<ValueWithError> {
    if !w.in_h1() {
        return Err(Error::NotInH1(w.to_string()));
    }
    check_disk(z)?;
    if w.is_empty() {
        return Ok(ValueWithError::exact(Complex64::new(1.0, 0.0)));
    }
    let n = params.series_terms;
    let c = word_coefficients(w, n);
    let (k, r) = shape(w);
    Ok(ValueWithError::new(horner(&c, z), tail_bound(z.norm(), n, k, r - 1)))
}

/// `z·d/dz Li(w; z)` for `w ∈ h¹`, `|z| < 1`.
pub fn mpl_word_theta(w: Word, z: Complex64, params: &EvalParams) -> Result<ValueWithError> {
    if !w.in_h1() {
        return Err(Error::NotInH1(w.to_string()));
    }
    check_disk(z)?;
    if w.is_empty() {
        return Ok(ValueWithError::exact(Complex64::new(0.0, 0.0)));
    }
    let n = params.series_terms;
    let c = word_coefficients(w, n);
    let (k, r) = shape(w);
    Ok(ValueWithError::new(horner_theta(&c, z), tail_bound_theta(z.norm(), n, k, r - 1)))
}

/// `Li_{k₁,…,k_r}(z) = Σ_{m₁>⋯>m_r>0} z^{m₁}/(m₁^{k₁}⋯m_r^{k_r})` for `|z| < 1`.
pub fn mpl(index: &MultiIndex, z: Complex64, params: &EvalParams) -> Result<ValueWithError> {
    mpl_word(index.to_word(), z, params)
}

/// `Σ c·Li(w; z)` over an element of `h¹`.
pub fn mpl_lin(a: &LinComb, z: Complex64, params: &EvalParams) -> Result<ValueWithError> {
    let mut acc = ValueWithError::exact(Complex64::new(0.0, 0.0));
    for (w, c) in a.iter() {
        let v = mpl_word(*w, z, params)?;
        acc = acc + v * Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0);
    }
    Ok(acc)
}

/// Expands `Li(w·xⁿ)` (`w ∈ h¹`) as `Σⱼ Li(reg¹(w·x^{n−j})) logʲ/j!`, calling
/// `eval` on each `h¹` component and combining with the supplied logarithm.
pub fn extended_with<F>(w: Word, log_z: Complex64, mut eval: F) -> Result<ValueWithError>
where
    F: FnMut(&LinComb) -> Result<ValueWithError>,
{
    let n = w.trailing_x();
    let u = w.slice(0, w.len() - n);
    let mut acc = ValueWithError::exact(Complex64::new(0.0, 0.0));
    let mut pow = Complex64::new(1.0, 0.0);
    for j in 0..=n {
        if j > 0 {
            pow = pow * log_z / j as f64;
        }
        let r = reg1(u.concat(Word::x_pow(n - j)));
        if r.is_zero() {
            continue;
        }
        acc = acc + eval(&r)? * pow;
    }
    Ok(acc)
}

/// The extended polylogarithm `Li(w; z)` for any word, with the principal
/// branch of `log z`.
pub fn mpl_extended(w: Word, z: Complex64, params: &EvalParams) -> Result<ValueWithError> {
    if w.in_h1() {
        return mpl_word(w, z, params);
    }
    if z == Complex64::new(0.0, 0.0) {
        return Err(Error::LogSingularity(format!("Li({w}; 0) with trailing x")));
    }
    check_disk(z)?;
    extended_with(w, z.ln(), |a| mpl_lin(a, z, params))
}

/// Linear extension of [`mpl_extended`].
pub fn mpl_extended_lin(a: &LinComb, z: Complex64, params: &EvalParams) -> Result<ValueWithError> {
    let mut acc = ValueWithError::exact(Complex64::new(0.0, 0.0));
    for (w, c) in a.iter() {
        let v = mpl_extended(*w, z, params)?;
        acc = acc + v * Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0);
    }
    Ok(acc)
}
