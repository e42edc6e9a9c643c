use std::collections::HashMap;
use std::sync::Mutex;

use num_complex::Complex64;

use super::params::{EvalParams, ValueWithError};
use crate::error::{Error, Result};
use crate::word_algebra::MultiIndex;

/// Compensated running sum.
#[derive(Clone, Copy, Default)]
struct Kahan {
    sum: f64,
    comp: f64,
}

impl Kahan {
    fn add(&mut self, v: f64) {
        let y = v - self.comp;
        let t = self.sum + y;
        self.comp = (t - self.sum) - y;
        self.sum = t;
    }
}

/// Multiple zeta value `ζ(k₁,…,k_r)` for an admissible index.
///
/// The nested sum is streamed over `m = 1…M` with one compensated
/// accumulator per depth level. The tail `Σ_{m>M} m^{−k₁}·S(m−1)`, where
/// `S` is the inner sum, lies between
/// `L = S(M)·Σ_{m>M} m^{−k₁}` and
/// `U = ∫_M^∞ t^{−k₁}(1+ln t)^{r−1}/(r−1)! dt`.
/// The tail estimate fits the partial sums at `M, M/2, …, M/2^r` to
/// `ζ − M^{1−k₁}·Σ_{j<r} cⱼ(ln M)ʲ`, clamped to `[L, U]`; for small `M` it
/// is the midpoint. The reported error is the distance to the far end of
/// the bracket plus a floating-point allowance.
pub fn mzv(index: &MultiIndex, params: &EvalParams) -> Result<ValueWithError> {
    if !index.is_admissible() {
        return Err(Error::NotAdmissible(index.to_string()));
    }
    let ks = index.parts();
    let r = ks.len();
    let big_m = params.mzv_terms.max(10);
    // acc[i] = Σ over m_i ≤ m of the nested sum starting at level i
    let mut acc = vec![Kahan::default(); r];
    let checkpoints: Vec<u64> = (0..=r).map(|j| big_m >> j).collect();
    let use_fit = checkpoints[r] >= 1000;
    let mut partial = vec![0.0; r + 1];
    for m in 1..=big_m {
        let inv = 1.0 / m as f64;
        for i in 0..r {
            let inner = if i + 1 < r { acc[i + 1].sum } else { 1.0 };
            if inner == 0.0 {
                continue;
            }
            acc[i].add(inv.powi(ks[i] as i32) * inner);
        }
        if use_fit {
            if let Some(j) = checkpoints.iter().position(|&c| c == m) {
                partial[j] = acc[0].sum;
            }
        }
    }
    let head = acc[0].sum;
    let inner_at_m = if r > 1 { acc[1].sum } else { 1.0 };
    let k = ks[0] as f64;
    let mf = big_m as f64;
    let lower = inner_at_m * (mf + 1.0).powf(1.0 - k) / (k - 1.0);
    let s0 = 1.0 + mf.ln();
    let a = k - 1.0;
    let mut upper = 0.0;
    let mut fact = 1.0;
    for j in 0..r {
        if j > 0 {
            fact *= j as f64;
        }
        upper += s0.powi(j as i32) / (fact * a.powi((r - j) as i32));
    }
    upper *= mf.powf(1.0 - k);
    let tail = if use_fit {
        fitted_limit(&checkpoints, &partial, k).map(|z| z - head).unwrap_or(0.5 * (lower + upper))
    } else {
        0.5 * (lower + upper)
    };
    let tail = tail.clamp(lower, upper.max(lower));
    let value = head + tail;
    let roundoff = 8.0 * (index.weight() as f64 + 2.0) * f64::EPSILON * value.abs();
    Ok(ValueWithError::new(
        Complex64::new(value, 0.0),
        (tail - lower).max(upper - tail).max(0.0) + roundoff,
    ))
}

/// Solves `P(Mᵢ) = ζ − Mᵢ^{1−k}·Σ_{j<r} cⱼ(ln Mᵢ)ʲ` for `ζ` by Gaussian
/// elimination with scaled columns and partial pivoting.
fn fitted_limit(ms: &[u64], partial: &[f64], k: f64) -> Option<f64> {
    let n = ms.len();
    let mut a: Vec<Vec<f64>> = ms
        .iter()
        .zip(partial)
        .map(|(&m, &p)| {
            let mf = m as f64;
            let base = mf.powf(1.0 - k);
            let lm = mf.ln();
            let mut row: Vec<f64> = vec![1.0];
            row.extend((0..n - 1).map(|j| -base * lm.powi(j as i32)));
            row.push(p);
            row
        })
        .collect();
    for c in 1..n {
        let scale = a.iter().map(|row| row[c].abs()).fold(0.0, f64::max);
        if scale == 0.0 {
            return None;
        }
        a.iter_mut().for_each(|row| row[c] /= scale);
    }
    for c in 0..n {
        let p = (c..n).max_by(|&i, &j| a[i][c].abs().total_cmp(&a[j][c].abs()))?;
        if a[p][c] == 0.0 {
            return None;
        }
        a.swap(c, p);
        for i in c + 1..n {
            let f = a[i][c] / a[c][c];
            for j in c..=n {
                a[i][j] -= f * a[c][j];
            }
        }
    }
    let mut x = vec![0.0; n];
    for c in (0..n).rev() {
        let s: f64 = (c + 1..n).map(|j| a[c][j] * x[j]).sum();
        x[c] = (a[c][n] - s) / a[c][c];
    }
    x[0].is_finite().then_some(x[0])
}

/// Thread-safe memo of [`mzv`] results keyed by index and truncation.
#[derive(Default)]
pub struct MzvCache {
    map: Mutex<HashMap<(MultiIndex, u64), ValueWithError>>,
}

impl MzvCache {
    pub fn new() -> MzvCache {
        MzvCache::default()
    }

    pub fn get(&self, index: &MultiIndex, params: &EvalParams) -> Result<ValueWithError> {
        let key = (index.clone(), params.mzv_terms);
        if let Some(v) = self.map.lock().expect("cache poisoned").get(&key) {
            return Ok(*v);
        }
        let v = mzv(index, params)?;
        self.map.lock().expect("cache poisoned").insert(key, v);
        Ok(v)
    }

    /// Fills the cache for many indices in parallel.
    pub fn prefetch(&self, indices: &[MultiIndex], params: &EvalParams) {
        use rayon::prelude::*;
        let todo: Vec<MultiIndex> = {
            let map = self.map.lock().expect("cache poisoned");
            let mut v: Vec<MultiIndex> = indices
                .iter()
                .filter(|i| i.is_admissible() && !map.contains_key(&((*i).clone(), params.mzv_terms)))
                .cloned()
                .collect();
            v.sort();
            v.dedup();
            v
        };
        let done: Vec<(MultiIndex, ValueWithError)> = todo
            .into_par_iter()
            .filter_map(|i| mzv(&i, params).ok().map(|v| (i, v)))
            .collect();
        let mut map = self.map.lock().expect("cache poisoned");
        for (i, v) in done {
            map.insert((i, params.mzv_terms), v);
        }
    }

    pub fn len(&self) -> usize {
        self.map.lock().expect("cache poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
