//! Analytic continuation of multiple polylogarithms along polylines in
//! `ℂ ∖ {0, 1}`.
//!
//! For a word `w ∈ h¹` the values `Li(v; z)` over all suffixes `v` of `w`
//! satisfy the triangular linear system `d Li(a·v)/dz = ω_a(z) Li(v)`,
//! `ω_x = 1/z`, `ω_y = 1/(1−z)`. It is started from the power series at a
//! base point on `(0, 1)` and integrated segment by segment.

mod ode;
mod path;

use std::collections::HashMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub use ode::{integrate_path, OdeOptions};
pub use path::{parse_complex, segment_distance, singular_distance, Path};

use crate::error::{Error, Result};
use crate::series_eval::{extended_with, mpl_word, EvalParams};
use crate::word_algebra::{Letter, Word};

/// Continued values of `log z` and `log(1 − z)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BranchState {
    pub log_z: Complex64,
    pub log_one_minus_z: Complex64,
}

impl BranchState {
    /// Principal (real) values at a base point of `(0, 1)`.
    pub fn at_base(p: f64) -> BranchState {
        BranchState {
            log_z: Complex64::new(p.ln(), 0.0),
            log_one_minus_z: Complex64::new((1.0 - p).ln(), 0.0),
        }
    }

    /// Principal values at an arbitrary point.
    pub fn principal(z: Complex64) -> BranchState {
        BranchState {
            log_z: z.ln(),
            log_one_minus_z: (1.0 - z).ln(),
        }
    }

    /// Follows both logarithms along `path`. On a straight segment that
    /// misses the branch point the change of argument is the principal
    /// argument of the ratio of the end points, so this is exact.
    pub fn along(self, path: &Path) -> BranchState {
        let mut s = self;
        for (a, b) in path.segments() {
            s.log_z += (b / a).ln();
            s.log_one_minus_z += ((1.0 - b) / (1.0 - a)).ln();
        }
        s
    }
}

/// The state vector of the suffix system for a family of words.
struct SuffixSystem {
    words: Vec<Word>,
    index: HashMap<Word, usize>,
    /// (letter, index of the tail) for every nonempty word
    links: Vec<Option<(Letter, usize)>>,
}

impl SuffixSystem {
    fn new(targets: &[Word]) -> SuffixSystem {
        let mut words: Vec<Word> = targets.iter().flat_map(|w| w.suffix_closure()).collect();
        words.push(Word::EMPTY);
        words.sort();
        words.dedup();
        let index: HashMap<Word, usize> = words.iter().enumerate().map(|(i, w)| (*w, i)).collect();
        let links = words
            .iter()
            .map(|w| w.first().map(|l| (l, index[&w.tail()])))
            .collect();
        SuffixSystem { words, index, links }
    }

    fn rhs(&self, z: Complex64, y: &[Complex64], dy: &mut [Complex64]) {
        let wx = 1.0 / z;
        let wy = 1.0 / (1.0 - z);
        for (j, link) in self.links.iter().enumerate() {
            dy[j] = match link {
                None => Complex64::new(0.0, 0.0),
                Some((Letter::X, t)) => y[*t] * wx,
                Some((Letter::Y, t)) => y[*t] * wy,
            };
        }
    }

    fn solve(&self, path: &Path, y0: Vec<Complex64>, tol: f64) -> Result<Vec<Complex64>> {
        integrate_path(path, &y0, |z, y, dy| self.rhs(z, y, dy), &OdeOptions::with_tol(tol))
    }
}

fn base_of(path: &Path) -> Result<f64> {
    path.base()
        .ok_or_else(|| Error::InvalidPath(format!("path must start on (0, 1), starts at {}", path.start())))
}

/// Series parameters accurate to roundoff at a base point `p ∈ (0, 1)`.
fn base_params(p: f64) -> EvalParams {
    let n = (45.0 / -p.ln()).ceil() as usize;
    EvalParams::default().with_series_terms(n.max(256))
}

/// `Li(w; z)` at the end of `path` for every `w ∈ h¹` in `words`.
pub fn continue_words(words: &[Word], path: &Path, tol: f64) -> Result<Vec<Complex64>> {
    if let Some(w) = words.iter().find(|w| !w.in_h1()) {
        return Err(Error::NotInH1(w.to_string()));
    }
    let p = base_of(path)?;
    let sys = SuffixSystem::new(words);
    let params = base_params(p);
    let y0 = sys
        .words
        .iter()
        .map(|w| mpl_word(*w, Complex64::new(p, 0.0), &params).map(|v| v.value))
        .collect::<Result<Vec<_>>>()?;
    let y = sys.solve(path, y0, tol)?;
    Ok(words.iter().map(|w| y[sys.index[w]]).collect())
}

/// `Li(w; z)` for `w ∈ h¹` at the end of `path`, on the branch the path
/// selects.
pub fn continue_word(w: Word, path: &Path, tol: f64) -> Result<Complex64> {
    continue_words(&[w], path, tol).map(|v| v[0])
}

/// The extended `Li(w; z)` for any word: the `h¹` components of the
/// regularization are continued and combined with the continued `log z`.
pub fn continue_extended(w: Word, path: &Path, tol: f64) -> Result<Complex64> {
    let p = base_of(path)?;
    let n = w.trailing_x();
    let u = w.slice(0, w.len() - n);
    let mut needed: Vec<Word> = Vec::new();
    for j in 0..=n {
        let r = crate::word_algebra::reg1(u.concat(Word::x_pow(n - j)));
        needed.extend(r.words().copied());
    }
    needed.sort();
    needed.dedup();
    let values = continue_words(&needed, path, tol)?;
    let table: HashMap<Word, Complex64> = needed.iter().copied().zip(values).collect();
    let log_z = BranchState::at_base(p).along(path).log_z;
    let v = extended_with(w, log_z, |a| {
        let mut acc = Complex64::new(0.0, 0.0);
        for (x, c) in a.iter() {
            acc += table[x] * num_traits::ToPrimitive::to_f64(c).unwrap_or(f64::NAN);
        }
        Ok(crate::series_eval::ValueWithError::exact(acc))
    })?;
    Ok(v.value)
}

/// Iterated integrals `Li_{p,C}(w; z)` anchored at the start of `path`
/// (value `1` for the empty word and `0` for every other word at the
/// start), for arbitrary words.
pub fn continue_anchored(words: &[Word], path: &Path, tol: f64) -> Result<Vec<Complex64>> {
    let sys = SuffixSystem::new(words);
    let y0 = sys
        .words
        .iter()
        .map(|w| if w.is_empty() { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 0.0) })
        .collect();
    let y = sys.solve(path, y0, tol)?;
    Ok(words.iter().map(|w| y[sys.index[w]]).collect())
}

/// Both sides of the path-composition formula
/// `Li(w; z) = Σᵢ Li_{p,C₂}(a₁⋯aᵢ; z)·Li(a_{i+1}⋯a_r; p)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CompositionCheck {
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub abs_err: f64,
}

/// Checks the composition formula for `w ∈ h¹` over `path1` followed by
/// `path2`, with `p` the junction point.
pub fn compose_check(w: Word, path1: &Path, path2: &Path, tol: f64) -> Result<CompositionCheck> {
    let whole = path1.concat(path2)?;
    let lhs = continue_word(w, &whole, tol)?;
    let r = w.len();
    let prefixes: Vec<Word> = (0..=r).map(|i| w.slice(0, i)).collect();
    let suffixes: Vec<Word> = (0..=r).map(|i| w.slice(i, r)).collect();
    let anchored = continue_anchored(&prefixes, path2, tol)?;
    let at_mid = continue_words(&suffixes, path1, tol)?;
    let rhs = anchored.iter().zip(&at_mid).map(|(a, b)| a * b).sum::<Complex64>();
    Ok(CompositionCheck { lhs, rhs, abs_err: (lhs - rhs).norm() })
}

/// `(σ/δ)^{|w|}/|w|!`, bounding the anchored iterated integral of `w`
/// along a path of length `σ` at distance `δ` from `{0, 1}`.
pub fn lappo_bound(w: Word, path: &Path) -> f64 {
    let ratio = path.sigma() / path.delta();
    let n = w.len();
    (1..=n).fold(1.0, |acc, k| acc * ratio / k as f64)
}

/// `Li_{1,…,1}(1/z) = (Li₁(z) + log z + πi)ⁿ/n!` for `z ∈ (0, 1)`, the
/// branch reached through the upper half plane.
pub fn li_at_inverse_ones(n: usize, z: f64) -> Result<Complex64> {
    if !(z > 0.0 && z < 1.0) {
        return Err(Error::Domain(format!("{z} is not in (0, 1)")));
    }
    let base = Complex64::new(-(1.0 - z).ln() + z.ln(), std::f64::consts::PI);
    let mut acc = Complex64::new(1.0, 0.0);
    for k in 1..=n {
        acc = acc * base / k as f64;
    }
    Ok(acc)
}

/// The extended `Li(w; 1/z)` for `z ∈ (0, 1)` on the branch of
/// [`Path::to_inverse`].
pub fn continue_at_inverse(w: Word, z: f64, tol: f64) -> Result<Complex64> {
    continue_extended(w, &Path::to_inverse(z)?, tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_path_returns_series_value() {
        let p = Path::new(0.5, vec![]).unwrap();
        let v = continue_word("y".parse().unwrap(), &p, 1e-12).unwrap();
        assert!((v.re - 2f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn inverse_ones_examples() {
        let pi = std::f64::consts::PI;
        assert!((li_at_inverse_ones(1, 0.5).unwrap() - Complex64::new(0.0, pi)).norm() < 1e-15);
        assert_eq!(li_at_inverse_ones(0, 0.5).unwrap(), Complex64::new(1.0, 0.0));
        assert!((li_at_inverse_ones(2, 0.5).unwrap() - Complex64::new(-pi * pi / 2.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn lappo_examples() {
        let w: Word = "xyx".parse().unwrap();
        let p = Path::new(0.5, vec![]).unwrap();
        assert_eq!(lappo_bound(w, &p), 0.0);
        let p = Path::from_points(vec![Complex64::new(2.0, 0.0), Complex64::new(3.0, 0.0)]).unwrap();
        assert!((lappo_bound("x".parse().unwrap(), &p) - 1.0).abs() < 1e-15);
        let p = Path::from_points(vec![Complex64::new(2.0, 0.0), Complex64::new(4.0, 0.0)]).unwrap();
        assert!((lappo_bound(w, &p) - 8.0 / 6.0).abs() < 1e-15);
    }
}
