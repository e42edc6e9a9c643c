//! Words over `{x, y}`, exact linear combinations, the shuffle product,
//! the regularizations `reg⁰`/`reg¹`, the antipode and the fixed
//! weight/depth/height sums `gᵢ(k, n, s)`.

mod lincomb;
mod reg;
mod shuffle;
mod word;

pub use lincomb::{rat, LinComb, LinCombTerm, Rational};
pub use reg::{reg0, reg0_decompose, reg0_lin, reg1, reg1_decompose, reg1_lin};
pub use shuffle::{shuffle, shuffle_counts, shuffle_lin, shuffle_power};
pub use word::{Letter, MultiIndex, Word, MAX_WORD_LEN};

use num_traits::One;

/// `S(w) = (−1)^{|w|}·reverse(w)`.
pub fn antipode(w: Word) -> LinComb {
    let sign = if w.len() % 2 == 0 { Rational::one() } else { -Rational::one() };
    LinComb::term(w.reversed(), sign)
}

/// Linear extension of [`antipode`].
pub fn antipode_lin(a: &LinComb) -> LinComb {
    let mut out = LinComb::zero();
    for (w, c) in a.iter() {
        out.add_scaled(&antipode(*w), c);
    }
    out
}

/// Suffixes of `w`, shortest first.
pub fn suffix_closure(w: Word) -> Vec<Word> {
    w.suffix_closure()
}

/// Nonempty words of `hⁱ` with weight `k`, depth `n` and height `s`.
///
/// Out-of-range triples (any argument `≤ 0`, `n < s`, too small a weight)
/// give the empty list. For `i = 1` only words ending in `y` are counted.
pub fn g_words(i: u8, k: i64, n: i64, s: i64) -> Vec<Word> {
    assert!(i <= 1, "g_i is defined for i in {{0, 1}}");
    if k <= 0 || n <= 0 || s <= 0 || n < s || k < n {
        return Vec::new();
    }
    let (k, n, s) = (k as usize, n as usize, s as usize);
    let mut out = Vec::new();
    let mut parts = Vec::with_capacity(n);
    compositions(k, n, &mut parts, &mut |p: &[usize]| {
        if i == 0 && p[0] < 2 {
            return;
        }
        // yx adjacencies sit in front of every later part ≥ 2
        let h = 1 + p[1..].iter().filter(|&&kj| kj >= 2).count();
        if h == s {
            out.push(parts_to_word(p));
        }
    });
    out.sort();
    out
}

/// `gᵢ(k, n, s)`: the sum of all words of [`g_words`] with coefficient 1.
pub fn enumerate_g(i: u8, k: i64, n: i64, s: i64) -> LinComb {
    g_words(i, k, n, s)
        .into_iter()
        .map(|w| (w, Rational::one()))
        .collect()
}

fn parts_to_word(p: &[usize]) -> Word {
    p.iter().fold(Word::EMPTY, |w, &kj| {
        w.concat(Word::x_pow(kj - 1)).push_back(Letter::Y)
    })
}

fn compositions(k: usize, n: usize, parts: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if n == 0 {
        if k == 0 {
            f(parts);
        }
        return;
    }
    if k < n {
        return;
    }
    for first in 1..=(k - (n - 1)) {
        parts.push(first);
        compositions(k - first, n - 1, parts, f);
        parts.pop();
    }
}
