//! Power-series kernels for iterated integrals on `h¹`.
//!
//! The series of `Li(w; z)` for `w ∈ h¹` is built from the constant series
//! `1` by reading `w` right to left: prepending `x` divides the `m`-th
//! coefficient by `m`, prepending `y` replaces it by the partial sum of the
//! lower coefficients divided by `m`.

use num_complex::Complex64;

use crate::word_algebra::{Letter, Word};

/// `∫₀ᶻ f(t) dt/t` on coefficient arrays. Requires `c[0] = 0`.
pub fn integrate_x(c: &mut [f64]) {
    debug_assert!(c[0] == 0.0);
    for (m, v) in c.iter_mut().enumerate().skip(1) {
        *v /= m as f64;
    }
}

/// `∫₀ᶻ f(t) dt/(1−t)` on coefficient arrays.
pub fn integrate_y(c: &mut [f64]) {
    let mut acc = 0.0;
    let mut prev = 0.0;
    for m in 0..c.len() {
        acc += prev;
        prev = c[m];
        c[m] = if m == 0 { 0.0 } else { acc / m as f64 };
    }
}

/// Applies the letter `l` to the front of the word whose series is `c`.
pub fn prepend(l: Letter, c: &mut [f64]) {
    match l {
        Letter::X => integrate_x(c),
        Letter::Y => integrate_y(c),
    }
}

/// Coefficients `c₀ … c_N` of `Li(w; z)` for `w ∈ h¹`.
pub fn word_coefficients(w: Word, n: usize) -> Vec<f64> {
    debug_assert!(w.in_h1());
    let mut c = vec![0.0; n + 1];
    c[0] = 1.0;
    for l in w.letters().rev() {
        prepend(l, &mut c);
    }
    c
}

/// `Σ cₘ zᵐ` by Horner's rule.
pub fn horner(c: &[f64], z: Complex64) -> Complex64 {
    c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a)
}

/// `Σ m·cₘ zᵐ`, the series of `z·d/dz`.
pub fn horner_theta(c: &[f64], z: Complex64) -> Complex64 {
    c.iter()
        .enumerate()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, (m, &a)| acc * z + a * m as f64)
}

/// Bound on `Σ_{m>N} |z|ᵐ (1+ln m)^{e}/mᵏ`.
///
/// The coefficients of `Li(w)` for a word with leading index `k` and depth
/// `r` are at most `(1+ln m)^{r−1}/mᵏ`; this bounds the neglected tail
/// through the ratio of consecutive majorant terms.
pub fn tail_bound(absz: f64, n: usize, k: u32, e: u32) -> f64 {
    if absz == 0.0 {
        return 0.0;
    }
    let m = (n + 1) as f64;
    let growth = ((1.0 + (m + 1.0).ln()) / (1.0 + m.ln())).powi(e as i32);
    let ratio = absz * growth;
    if ratio >= 1.0 {
        return f64::INFINITY;
    }
    let first = (absz.ln() * m + (e as f64) * (1.0 + m.ln()).ln() - (k as f64) * m.ln()).exp();
    first / (1.0 - ratio)
}

/// [`tail_bound`] for the majorant of `z·d/dz Li(w)`, whose coefficients
/// carry one extra factor `m`.
pub fn tail_bound_theta(absz: f64, n: usize, k: u32, e: u32) -> f64 {
    if k >= 1 {
        return tail_bound(absz, n, k - 1, e);
    }
    if absz == 0.0 {
        return 0.0;
    }
    let m = (n + 1) as f64;
    let growth = ((1.0 + (m + 1.0).ln()) / (1.0 + m.ln())).powi(e as i32) * (m + 1.0) / m;
    let ratio = absz * growth;
    if ratio >= 1.0 {
        return f64::INFINITY;
    }
    let first = (absz.ln() * m + (e as f64) * (1.0 + m.ln()).ln() + m.ln()).exp();
    first / (1.0 - ratio)
}
