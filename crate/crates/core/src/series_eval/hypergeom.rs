use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::gsum::GTable;
use super::params::{is_integer, EvalParams, ParamSet, ValueWithError};
use crate::error::{Error, Result};

/// Gauss series `F(a, b, c; z) = Σ (a)ₙ(b)ₙ/((c)ₙ n!) zⁿ` for `|z| < 1`.
///
/// Summation stops after `terms` terms or once the tail bound falls below
/// a quarter ulp of the partial sum. The tail is bounded by the geometric
/// majorant of the term ratio `(a+n)(b+n)z/((c+n)(n+1))`.
pub fn gauss_2f1(a: Complex64, b: Complex64, c: Complex64, z: Complex64, terms: usize) -> Result<ValueWithError> {
    if is_integer(c) && c.re <= 0.5 {
        return Err(Error::SeriesPole(format!("c = {c} is a nonpositive integer")));
    }
    if z.norm() >= 1.0 || !z.is_finite() {
        return Err(Error::OutsideDisk { z, radius: 1.0 });
    }
    let absz = z.norm();
    let mut sum = Complex64::new(0.0, 0.0);
    let mut term = Complex64::new(1.0, 0.0);
    let mut n = 0usize;
    loop {
        if term == Complex64::new(0.0, 0.0) {
            return Ok(ValueWithError::exact(sum));
        }
        let nf = n as f64;
        let bound = if nf > c.norm() + 1.0 {
            let q = absz * (1.0 + (a - 1.0).norm() / (nf + 1.0)) * (1.0 + (b - c).norm() / (nf - c.norm()));
            if q < 1.0 {
                term.norm() / (1.0 - q)
            } else {
                f64::INFINITY
            }
        } else {
            f64::INFINITY
        };
        if n >= terms || bound <= 0.25 * f64::EPSILON * sum.norm() {
            return Ok(ValueWithError::new(sum, bound));
        }
        sum += term;
        term = term * (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * z;
        n += 1;
    }
}

/// `F(α, β, γ; z)` for a parameter set.
pub fn hypergeom_2f1(ps: &ParamSet, z: Complex64, terms: usize) -> Result<ValueWithError> {
    gauss_2f1(ps.alpha, ps.beta, ps.gamma, z, terms)
}

/// `F` and `dF/dz = (ab/c)·F(a+1, b+1, c+1; z)`.
pub fn gauss_2f1_with_derivative(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    z: Complex64,
    terms: usize,
) -> Result<(ValueWithError, ValueWithError)> {
    let f = gauss_2f1(a, b, c, z, terms)?;
    let d = gauss_2f1(a + 1.0, b + 1.0, c + 1.0, z, terms)? * (a * b / c);
    Ok((f, d))
}

/// The singular points of the hypergeometric equation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Singularity {
    Zero,
    One,
    Infinity,
}

const LOCAL_TERMS: usize = 100_000;

/// The local solution `φ⁽ⁱ⁾ⱼ(z)` and its `z·d/dz`, on principal branches.
pub fn local_solution_theta(ps: &ParamSet, at: Singularity, j: u8, z: Complex64) -> Result<(Complex64, Complex64)> {
    let (al, be, ga) = (ps.alpha, ps.beta, ps.gamma);
    let one = Complex64::new(1.0, 0.0);
    match (at, j) {
        (Singularity::Zero, 0) => {
            let (f, d) = gauss_2f1_with_derivative(al, be, ga, z, LOCAL_TERMS)?;
            Ok((f.value, z * d.value))
        }
        (Singularity::Zero, 1) => {
            let e = 1.0 - ga;
            let (f, d) = gauss_2f1_with_derivative(al + e, be + e, 2.0 - ga, z, LOCAL_TERMS)?;
            let zp = (e * z.ln()).exp();
            let phi = zp * f.value;
            Ok((phi, e * phi + zp * z * d.value))
        }
        (Singularity::One, 0) => {
            let w = one - z;
            let (f, d) = gauss_2f1_with_derivative(al, be, al + be + 1.0 - ga, w, LOCAL_TERMS)?;
            Ok((f.value, -z * d.value))
        }
        (Singularity::One, 1) => {
            let w = one - z;
            let e = ga - al - be;
            let (f, d) = gauss_2f1_with_derivative(ga - al, ga - be, e + 1.0, w, LOCAL_TERMS)?;
            let wp = (e * w.ln()).exp();
            let phi = wp * f.value;
            // d/dz = −d/dw
            let dphi_dw = e * phi / w + wp * d.value;
            Ok((phi, -z * dphi_dw))
        }
        (Singularity::Infinity, j) if j <= 1 => {
            if z.norm() <= 1.0 {
                return Err(Error::Domain(format!("|z| = {} must exceed 1 near infinity", z.norm())));
            }
            let u = one / z;
            let (e, other) = if j == 0 { (al, be) } else { (be, al) };
            let (f, d) = gauss_2f1_with_derivative(e, e + 1.0 - ga, e - other + 1.0, u, LOCAL_TERMS)?;
            let zp = (-e * z.ln()).exp();
            let phi = zp * f.value;
            Ok((phi, -e * phi - zp * u * d.value))
        }
        _ => Err(Error::Domain(format!("no local solution with index {j}"))),
    }
}

/// `φ⁽ⁱ⁾ⱼ(z)` on principal branches.
pub fn local_solution(ps: &ParamSet, at: Singularity, j: u8, z: Complex64) -> Result<Complex64> {
    local_solution_theta(ps, at, j, z).map(|v| v.0)
}

fn check_regime(ps: &ParamSet, override_regime: bool) -> Result<()> {
    if !override_regime && !ps.convergence_regime() {
        return Err(Error::RegimeViolation(format!(
            "|p| = {:.3}, |α+1−γ| = {:.3}, |β+1−γ| = {:.3}, |q| = {:.3} must all be < 1/2",
            ps.p().norm(),
            (ps.alpha + 1.0 - ps.gamma).norm(),
            (ps.beta + 1.0 - ps.gamma).norm(),
            ps.q().norm()
        )));
    }
    Ok(())
}

/// `1 + c·Σ_{k≤K} G₀(k,n,s;z)·p^{k−n−s} q^{n−s} r^{s−1}` with its error bound.
///
/// Beyond weight `K` each admissible word contributes at most its zeta
/// value times `ρ^{k−2}`, `ρ = max(|p|, |q|, √|r|)`, and the zeta values of
/// fixed weight `k` sum to `(k−1)ζ(k) ≤ (k−1)ζ(2)`.
fn parametric_g0_sum(
    table: &GTable,
    j: usize,
    c: Complex64,
    p: Complex64,
    q: Complex64,
    r: Complex64,
    k_max: usize,
) -> ValueWithError {
    let mut sum = Complex64::new(0.0, 0.0);
    let mut trunc = 0.0;
    for k in 1..=k_max as i64 {
        let mut mono_abs = 0.0;
        for n in 1..=k {
            for s in 1..=n.min(k - n) {
                let mono = p.powi((k - n - s) as i32) * q.powi((n - s) as i32) * r.powi((s - 1) as i32);
                sum += table.get(0, k, n, s, j) * mono;
                mono_abs += mono.norm();
            }
        }
        trunc += table.tail(k as usize, j) * mono_abs;
    }
    let rho = p.norm().max(q.norm()).max(r.norm().sqrt());
    let zeta2 = std::f64::consts::PI.powi(2) / 6.0;
    let mut weight_tail = 0.0;
    if rho < 1.0 {
        let mut k = k_max + 1;
        loop {
            let t = (k as f64 - 1.0) * rho.powi(k as i32 - 2);
            weight_tail += t;
            if t < 1e-30 * weight_tail.max(1e-300) || k > 100_000 {
                break;
            }
            k += 1;
        }
        weight_tail *= zeta2;
    } else {
        weight_tail = f64::INFINITY;
    }
    ValueWithError::new(
        1.0 + c * sum,
        c.norm() * (trunc + weight_tail),
    )
}

/// `F(α, β, γ; z)` as `1 + αβ Σ G₀(k,n,s;z) p^{k−n−s} q^{n−s} r^{s−1}`
/// truncated at weight `K`.
pub fn theorem31_series(ps: &ParamSet, z: Complex64, k_max: usize, params: &EvalParams) -> Result<ValueWithError> {
    theorem31_series_with(ps, z, k_max, params, false)
}

/// [`theorem31_series`] with an optional override of the regime check.
pub fn theorem31_series_with(
    ps: &ParamSet,
    z: Complex64,
    k_max: usize,
    params: &EvalParams,
    override_regime: bool,
) -> Result<ValueWithError> {
    check_regime(ps, override_regime)?;
    let table = GTable::build(k_max, &[z], params)?;
    Ok(parametric_g0_sum(&table, 0, ps.alpha * ps.beta, ps.p(), ps.q(), ps.r(), k_max))
}

/// The solution with exponent `1 − γ` at the origin,
/// `z^{1−γ}(1 + r Σ G₀(k,n,s;z)(γ−1)^{k−n−s} q^{n−s} (αβ)^{s−1})`.
pub fn corollary_phi01_series(ps: &ParamSet, z: Complex64, k_max: usize, params: &EvalParams) -> Result<ValueWithError> {
    corollary_phi01_series_with(ps, z, k_max, params, false)
}

/// [`corollary_phi01_series`] with an optional override of the regime check.
pub fn corollary_phi01_series_with(
    ps: &ParamSet,
    z: Complex64,
    k_max: usize,
    params: &EvalParams,
    override_regime: bool,
) -> Result<ValueWithError> {
    check_regime(ps, override_regime)?;
    if z == Complex64::new(0.0, 0.0) {
        return Err(Error::LogSingularity("z^{1−γ} at z = 0".into()));
    }
    let table = GTable::build(k_max, &[z], params)?;
    let inner = parametric_g0_sum(&table, 0, ps.r(), ps.gamma - 1.0, ps.q(), ps.alpha * ps.beta, k_max);
    let zp = (ps.p() * z.ln()).exp();
    Ok(inner * zp)
}

/// `exp(l/p + max|log z|)` for the compact interval `[a, b] ⊂ (0, 1)`,
/// bounding `|Li(w; z)|` for every word and every `z ∈ [a, b]`.
pub fn boundedness_constant(a: f64, b: f64) -> Result<f64> {
    if !(0.0 < a && a <= b && b < 1.0) {
        return Err(Error::Domain(format!("[{a}, {b}] is not a compact subset of (0, 1)")));
    }
    let p = a.min(1.0 - b).min(0.5);
    let l = (b - p).max(0.0);
    let max_log = a.ln().abs().max(b.ln().abs());
    Ok((l / p + max_log).exp())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_values() {
        let one = Complex64::new(1.0, 0.0);
        let v = gauss_2f1(one, one, 2.0 * one, 0.5 * one, 10_000).unwrap();
        assert!((v.value.re - 4f64.ln()).abs() < 1e-14);
        assert!(v.error_bound < 1e-15);
        assert_eq!(gauss_2f1(0.3 * one, one, 2.0 * one, 0.0 * one, 10).unwrap().value, one);
        assert!(gauss_2f1(one, one, -2.0 * one, 0.1 * one, 10).is_err());
    }
}
