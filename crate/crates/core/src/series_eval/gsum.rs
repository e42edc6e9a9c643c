use std::collections::HashMap;

use num_complex::Complex64;

use super::mpl::mpl_word;
use super::mzv::{mzv, MzvCache};
use super::params::{EvalParams, ValueWithError};
use super::power::{horner, horner_theta, integrate_x, integrate_y, tail_bound, tail_bound_theta};
use crate::error::{Error, Result};
use crate::word_algebra::{g_words, MultiIndex};

/// `Gᵢ(k, n, s; z)`: the sum of `Li(w; z)` over the words of `gᵢ(k, n, s)`.
///
/// At `z = 1` every member index must be admissible and the sum is taken
/// over multiple zeta values.
pub fn g_sum(i: u8, k: i64, n: i64, s: i64, z: Complex64, params: &EvalParams) -> Result<ValueWithError> {
    g_sum_cached(i, k, n, s, z, params, None)
}

/// [`g_sum`] that reads multiple zeta values through a cache.
pub fn g_sum_cached(
    i: u8,
    k: i64,
    n: i64,
    s: i64,
    z: Complex64,
    params: &EvalParams,
    cache: Option<&MzvCache>,
) -> Result<ValueWithError> {
    let words = g_words(i, k, n, s);
    let mut acc = ValueWithError::exact(Complex64::new(0.0, 0.0));
    if z == Complex64::new(1.0, 0.0) {
        let idx: Vec<MultiIndex> = words
            .iter()
            .map(MultiIndex::from_word)
            .collect::<Result<_>>()?;
        if let Some(bad) = idx.iter().find(|m| !m.is_admissible()) {
            return Err(Error::NotAdmissible(bad.to_string()));
        }
        if let Some(c) = cache {
            c.prefetch(&idx, params);
        }
        for m in &idx {
            acc = acc + match cache {
                Some(c) => c.get(m, params)?,
                None => mzv(m, params)?,
            };
        }
        return Ok(acc);
    }
    for w in words {
        acc = acc + mpl_word(w, z, params)?;
    }
    Ok(acc)
}

/// `Ḡᵢ(k, n, s; z) = Gᵢ(k, n, s; z) − Gᵢ(k, n, s+1; z)`.
pub fn g_bar(i: u8, k: i64, n: i64, s: i64, z: Complex64, params: &EvalParams) -> Result<ValueWithError> {
    let a = g_sum(i, k, n, s, z, params)?;
    let b = g_sum(i, k, n, s + 1, z, params)?;
    Ok(a + b * Complex64::new(-1.0, 0.0))
}

/// Values of `G₀` and `G₁` for every `(k, n, s)` with `k ≤ K` at a fixed
/// set of points inside the unit disk, together with their `z·d/dz`.
///
/// Words of `h¹` are grown right to left from `y`, so the state of a layer
/// of weight `k` only needs the depth, the number of `yx` factors and the
/// first letter; each state carries the coefficient array of the sum of
/// its words. Only two layers are alive at a time.
pub struct GTable {
    k_max: usize,
    points: Vec<Complex64>,
    /// (i, k, n, s) -> per-point values
    values: HashMap<(u8, usize, usize, usize), Vec<Complex64>>,
    thetas: HashMap<(u8, usize, usize, usize), Vec<Complex64>>,
    /// truncation bound of any one `Gᵢ(k, ·, ·)` at each point, by weight
    tails: Vec<Vec<f64>>,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct State {
    depth: usize,
    yx: usize,
    starts_with_x: bool,
}

impl GTable {
    pub fn build(k_max: usize, points: &[Complex64], params: &EvalParams) -> Result<GTable> {
        for &z in points {
            if z.norm() >= 1.0 {
                return Err(Error::OutsideDisk { z, radius: 1.0 });
            }
        }
        let nt = params.series_terms;
        let mut values = HashMap::new();
        let mut thetas = HashMap::new();
        let mut tails = vec![vec![0.0; points.len()]; k_max + 1];
        let mut layer: HashMap<State, Vec<f64>> = HashMap::new();
        if k_max >= 1 {
            let mut c = vec![0.0; nt + 1];
            c[0] = 1.0;
            integrate_y(&mut c);
            layer.insert(State { depth: 1, yx: 0, starts_with_x: false }, c);
        }
        for k in 1..=k_max {
            // the sum over every h¹ word of weight k has coefficients
            // at most (1+ln m)^{k−1}/m, which bounds each partial sum
            for (j, z) in points.iter().enumerate() {
                tails[k][j] = tail_bound(z.norm(), nt, 1, (k - 1) as u32);
            }
            let mut sums: HashMap<(u8, usize, usize), Vec<f64>> = HashMap::new();
            for (st, c) in &layer {
                let s = st.yx + 1;
                add_into(sums.entry((1, st.depth, s)).or_insert_with(|| vec![0.0; nt + 1]), c);
                if st.starts_with_x {
                    add_into(sums.entry((0, st.depth, s)).or_insert_with(|| vec![0.0; nt + 1]), c);
                }
            }
            for ((i, n, s), c) in sums {
                values.insert((i, k, n, s), points.iter().map(|&z| horner(&c, z)).collect());
                thetas.insert((i, k, n, s), points.iter().map(|&z| horner_theta(&c, z)).collect());
            }
            if k == k_max {
                break;
            }
            let mut next: HashMap<State, Vec<f64>> = HashMap::new();
            for (st, c) in &layer {
                let mut cx = c.clone();
                integrate_x(&mut cx);
                let sx = State { starts_with_x: true, ..*st };
                add_owned(&mut next, sx, cx);
                let mut cy = c.clone();
                integrate_y(&mut cy);
                let sy = State {
                    depth: st.depth + 1,
                    yx: st.yx + usize::from(st.starts_with_x),
                    starts_with_x: false,
                };
                add_owned(&mut next, sy, cy);
            }
            layer = next;
        }
        Ok(GTable { k_max, points: points.to_vec(), values, thetas, tails })
    }

    pub fn k_max(&self) -> usize {
        self.k_max
    }

    pub fn points(&self) -> &[Complex64] {
        &self.points
    }

    /// `Gᵢ(k, n, s; z_j)` for the `j`-th build point; zero outside the range.
    pub fn get(&self, i: u8, k: i64, n: i64, s: i64, j: usize) -> Complex64 {
        self.lookup(&self.values, i, k, n, s, j)
    }

    /// `z·d/dz Gᵢ(k, n, s; z)` at the `j`-th build point.
    pub fn theta(&self, i: u8, k: i64, n: i64, s: i64, j: usize) -> Complex64 {
        self.lookup(&self.thetas, i, k, n, s, j)
    }

    fn lookup(
        &self,
        map: &HashMap<(u8, usize, usize, usize), Vec<Complex64>>,
        i: u8,
        k: i64,
        n: i64,
        s: i64,
        j: usize,
    ) -> Complex64 {
        if k <= 0 || n <= 0 || s <= 0 {
            return Complex64::new(0.0, 0.0);
        }
        assert!(k as usize <= self.k_max, "weight {k} beyond table");
        map.get(&(i, k as usize, n as usize, s as usize))
            .map(|v| v[j])
            .unwrap_or_default()
    }

    /// Truncation bound for any `Gᵢ(k, ·, ·)` value at point `j`.
    pub fn tail(&self, k: usize, j: usize) -> f64 {
        self.tails[k][j]
    }

    /// Truncation bound for `z·d/dz Gᵢ(k, ·, ·)` at point `j`.
    pub fn theta_tail(&self, k: usize, j: usize, params: &EvalParams) -> f64 {
        tail_bound_theta(self.points[j].norm(), params.series_terms, 1, (k - 1) as u32)
    }
}

fn add_into(acc: &mut [f64], c: &[f64]) {
    for (a, b) in acc.iter_mut().zip(c) {
        *a += b;
    }
}

fn add_owned(map: &mut HashMap<State, Vec<f64>>, st: State, c: Vec<f64>) {
    match map.get_mut(&st) {
        Some(acc) => add_into(acc, &c),
        None => {
            map.insert(st, c);
        }
    }
}
