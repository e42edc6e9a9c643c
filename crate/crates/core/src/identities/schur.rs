use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::series_eval::{EvalParams, MzvCache};
use crate::word_algebra::{MultiIndex, Rational};

/// The Euler constant `c` in `1/Γ(1−z) = exp(−cz − Σ_{n≥2} ζ(n)zⁿ/n)`.
/// It cancels from every Γ-ratio used here.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// The sequence `(0, ζ(2)/2, ζ(3)/3, …)` truncated at order `N`, or any
/// other real sequence `a₁, a₂, …` fed to the Schur polynomials.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ZetaSequence {
    /// `a[n]` for `n = 0..=N`; `a[0]` is unused and zero.
    a: Vec<f64>,
}

impl ZetaSequence {
    /// `aₙ = ζ(n)/n` for `2 ≤ n ≤ order`, with `a₁ = 0` and the zeta
    /// values taken from the nested-sum oracle.
    pub fn zeta(order: usize, params: &EvalParams, cache: &MzvCache) -> Result<ZetaSequence> {
        let idx: Vec<MultiIndex> = (2..=order as u32).map(|n| MultiIndex::with_ones(n, 0)).collect();
        cache.prefetch(&idx, params);
        let mut a = vec![0.0; order + 1];
        for (n, i) in (2..=order).zip(&idx) {
            a[n] = cache.get(i, params)?.value.re / n as f64;
        }
        Ok(ZetaSequence { a })
    }

    /// A sequence from explicit values `a₁, a₂, …`.
    pub fn from_values(values: &[f64]) -> ZetaSequence {
        let mut a = vec![0.0];
        a.extend_from_slice(values);
        ZetaSequence { a }
    }

    pub fn order(&self) -> usize {
        self.a.len() - 1
    }

    /// `aₙ` (zero beyond the truncation and at `n = 0`).
    pub fn get(&self, n: usize) -> f64 {
        self.a.get(n).copied().unwrap_or(0.0)
    }

    /// `(−a₁, −a₂, …)`.
    pub fn negated(&self) -> ZetaSequence {
        ZetaSequence { a: self.a.iter().map(|v| -v).collect() }
    }

    /// `P₀, …, P_n` from `exp(Σ aₖtᵏ) = Σ Pₙ tⁿ`.
    pub fn schur_all(&self, n: usize) -> Result<Vec<f64>> {
        if n > self.order() {
            return Err(Error::Domain(format!(
                "Schur polynomial P_{n} needs the sequence to order {n}, have {}",
                self.order()
            )));
        }
        let mut p = vec![0.0; n + 1];
        p[0] = 1.0;
        for j in 1..=n {
            p[j] = (1..=j).map(|k| k as f64 * self.a[k] * p[j - k]).sum::<f64>() / j as f64;
        }
        Ok(p)
    }
}

/// The Schur polynomial `Pₙ(a)`, the coefficient of `tⁿ` in `exp(Σ aₖtᵏ)`,
/// by the recurrence `n·Pₙ = Σ k·aₖ·P_{n−k}`.
pub fn schur_p(n: usize, seq: &ZetaSequence) -> Result<f64> {
    Ok(seq.schur_all(n)?[n])
}

/// Coefficients of `aⁿ + bⁿ = Σ N⁽ⁿ⁾_{i,j}(a+b)ⁱ(ab)ʲ` for `n = 0..=n_max`,
/// indexed `[n][i]` with `j = (n − i)/2`, from `s_n = (a+b)s_{n−1} − ab·s_{n−2}`,
/// `s₀ = 2`, `s₁ = a + b`. The entry `N⁽⁰⁾_{0,0}` is then set to `1`.
pub fn n_table(n_max: usize) -> Vec<Vec<i64>> {
    let mut s: Vec<Vec<i64>> = Vec::with_capacity(n_max + 1);
    for t in 0..=n_max {
        let mut row = vec![0i64; t + 1];
        match t {
            0 => row[0] = 2,
            1 => row[1] = 1,
            _ => {
                for (i, c) in s[t - 1].iter().enumerate() {
                    row[i + 1] += c;
                }
                for (i, c) in s[t - 2].iter().enumerate() {
                    row[i] -= c;
                }
            }
        }
        s.push(row);
    }
    s[0][0] = 1;
    s
}

/// `N_{i,j} = N⁽ⁱ⁺²ʲ⁾_{i,j}`, with `N_{0,0} = 1`.
pub fn n_coeff(i: usize, j: usize) -> i64 {
    let n = i + 2 * j;
    n_table(n)[n][i]
}

/// `N⁽ⁿ⁾_{i,j}`, zero unless `i + 2j = n`.
pub fn n_coeff_general(n: usize, i: usize, j: usize) -> i64 {
    if i + 2 * j != n {
        return 0;
    }
    n_coeff(i, j)
}

/// Outcome of the exact product-expansion check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProductExpansionReport {
    pub degree: usize,
    /// The value of `N_{0,0}` the expansion is evaluated with.
    pub n00: i64,
    /// Whether the two sides agree up to total degree `degree`.
    pub holds: bool,
    /// Whether they also agree with the other candidate value of `N_{0,0}`.
    pub holds_with_alternative: bool,
    /// Monomials `aⁱbʲ` where the sides differ, with the convention `n00`.
    pub mismatches: Vec<(usize, usize)>,
}

type Bivariate = BTreeMap<(usize, usize), Rational>;

fn add_to(p: &mut Bivariate, key: (usize, usize), c: Rational) {
    if c.is_zero() {
        return;
    }
    let e = p.entry(key).or_insert_with(Rational::zero);
    *e += c;
    if e.is_zero() {
        p.remove(&key);
    }
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

/// `Σ_{k,l} (Σ_{i≤l} Aᵢ A_{2l+k−i} N_{k,l−i}) (a+b)ᵏ(ab)ˡ` expanded in `a`, `b`
/// up to total degree `degree`, with a chosen value of `N_{0,0}`.
fn product_rhs(a: &[Rational], degree: usize, n00: i64) -> Bivariate {
    let coef = |i: usize| a.get(i).cloned().unwrap_or_else(Rational::zero);
    let mut table = n_table(degree);
    table[0][0] = n00;
    let mut out = Bivariate::new();
    for l in 0..=degree / 2 {
        for k in 0..=degree - 2 * l {
            let mut c = Rational::zero();
            for i in 0..=l {
                let n = table[k + 2 * (l - i)][k];
                c += coef(i) * coef(2 * l + k - i) * Rational::from_integer(BigInt::from(n));
            }
            if c.is_zero() {
                continue;
            }
            // (a+b)ᵏ(ab)ˡ = Σ_t C(k,t) a^{t+l} b^{k−t+l}
            for t in 0..=k {
                let b = Rational::from_integer(binomial(k, t));
                add_to(&mut out, (t + l, k - t + l), &c * b);
            }
        }
    }
    out
}

fn product_lhs(a: &[Rational], degree: usize) -> Bivariate {
    let coef = |i: usize| a.get(i).cloned().unwrap_or_else(Rational::zero);
    let mut out = Bivariate::new();
    for i in 0..=degree {
        for j in 0..=degree - i {
            add_to(&mut out, (i, j), coef(i) * coef(j));
        }
    }
    out
}

fn mismatches(lhs: &Bivariate, rhs: &Bivariate) -> Vec<(usize, usize)> {
    let mut keys: Vec<(usize, usize)> = lhs.keys().chain(rhs.keys()).copied().collect();
    keys.sort();
    keys.dedup();
    keys.into_iter().filter(|k| lhs.get(k) != rhs.get(k)).collect()
}

/// Expands `(Σ Aᵢaⁱ)(Σ Aᵢbⁱ)` and `Σ_{k,l}(Σ_{i≤l} AᵢA_{2l+k−i}N_{k,l−i})(a+b)ᵏ(ab)ˡ`
/// exactly up to total degree `degree` and compares them, with
/// `N_{0,0} = 1` and, for reference, with `N_{0,0} = 2 = a⁰ + b⁰`.
pub fn product_expand_check(a: &[Rational], degree: usize) -> ProductExpansionReport {
    let lhs = product_lhs(a, degree);
    let bad = mismatches(&lhs, &product_rhs(a, degree, 1));
    let alt = mismatches(&lhs, &product_rhs(a, degree, 2));
    ProductExpansionReport {
        degree,
        n00: 1,
        holds: bad.is_empty(),
        holds_with_alternative: alt.is_empty(),
        mismatches: bad,
    }
}

fn binomial_f64(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Coefficient of `pᵏqˡrᵐ` in `Γ(γ)Γ(γ−α−β)/(Γ(γ−α)Γ(γ−β))`:
/// `Σ_{i≤k, j≤l, μ≤m} C(i+j, i)·P_{k−i}(ζ)·P_{l−j}(ζ)·P_μ(−ζ)·P_{i+j+2m−μ}(−ζ)·N_{i+j,m−μ}`.
pub fn gamma_ratio_coeff(k: usize, l: usize, m: usize, zeta: &ZetaSequence) -> Result<f64> {
    let w = k + l + 2 * m;
    if w > zeta.order() {
        return Err(Error::Domain(format!(
            "coefficient of weight {w} needs the zeta sequence to order {w}, have {}",
            zeta.order()
        )));
    }
    let pp = zeta.schur_all(w)?;
    let pm = zeta.negated().schur_all(w)?;
    let nt = n_table(w);
    let mut acc = 0.0;
    for i in 0..=k {
        for j in 0..=l {
            for mu in 0..=m {
                let n = nt[i + j + 2 * (m - mu)][i + j] as f64;
                if n == 0.0 {
                    continue;
                }
                acc += binomial_f64(i + j, i) * pp[k - i] * pp[l - j] * pm[mu] * pm[i + j + 2 * m - mu] * n;
            }
        }
    }
    Ok(acc)
}

/// `Σ_{k+l+2m ≤ order} coeff(k, l, m)·pᵏqˡrᵐ` for real `p`, `q`, `r`.
pub fn gamma_ratio_series(p: f64, q: f64, r: f64, order: usize, zeta: &ZetaSequence) -> Result<f64> {
    let mut acc = 0.0;
    for m in 0..=order / 2 {
        for l in 0..=order - 2 * m {
            for k in 0..=order - 2 * m - l {
                acc += gamma_ratio_coeff(k, l, m, zeta)? * p.powi(k as i32) * q.powi(l as i32) * r.powi(m as i32);
            }
        }
    }
    Ok(acc)
}

/// Bernoulli numbers with `Σ Bₘtᵐ/m! = t·eᵗ/(eᵗ−1)`, so `B₁ = +1/2`.
pub fn bernoulli(m: usize) -> Rational {
    // Σ_{k≤n} C(n+1, k) B⁻ₖ = 0 for the t/(eᵗ−1) numbers, then B⁺ₘ = (−1)ᵐB⁻ₘ
    let mut b: Vec<Rational> = Vec::with_capacity(m + 1);
    for n in 0..=m {
        if n == 0 {
            b.push(Rational::one());
            continue;
        }
        let mut s = Rational::zero();
        for (k, bk) in b.iter().enumerate() {
            s += Rational::from_integer(binomial(n + 1, k)) * bk;
        }
        b.push(-s / Rational::from_integer(BigInt::from(n + 1)));
    }
    let v = b.pop().unwrap_or_else(Rational::one);
    if m % 2 == 1 {
        -v
    } else {
        v
    }
}
