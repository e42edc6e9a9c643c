use std::collections::HashMap;

use num_bigint::BigInt;

use super::lincomb::{LinComb, Rational};
use super::word::Word;

/// Shuffle of two words as a multiset of words with integer multiplicities.
///
/// Dynamic programming over pairs of suffixes: `S(i, j)` is the shuffle of
/// `u[i..]` and `v[j..]`, built from `S(i+1, j)` and `S(i, j+1)`.
pub fn shuffle_counts(u: Word, v: Word) -> HashMap<Word, u64> {
    let (a, b) = (u.len(), v.len());
    assert!(a + b <= super::word::MAX_WORD_LEN, "shuffle result too long");
    if a == 0 || b == 0 {
        return HashMap::from([(u.concat(v), 1)]);
    }
    // row[j] holds S(i, j) for the current i; prev holds S(i+1, j).
    let mut prev: Vec<HashMap<Word, u64>> = (0..=b)
        .map(|j| HashMap::from([(v.slice(j, b), 1u64)]))
        .collect();
    for i in (0..a).rev() {
        let ui = u.get(i);
        let mut row: Vec<HashMap<Word, u64>> = vec![HashMap::new(); b + 1];
        row[b] = HashMap::from([(u.slice(i, a), 1u64)]);
        for j in (0..b).rev() {
            let vj = v.get(j);
            let mut acc: HashMap<Word, u64> = HashMap::with_capacity(prev[j].len() + row[j + 1].len());
            for (w, c) in &prev[j] {
                *acc.entry(w.push_front(ui)).or_insert(0) += c;
            }
            for (w, c) in &row[j + 1] {
                *acc.entry(w.push_front(vj)).or_insert(0) += c;
            }
            row[j] = acc;
        }
        prev = row;
    }
    prev.swap_remove(0)
}

/// `u ⧢ v` as a linear combination.
pub fn shuffle(u: Word, v: Word) -> LinComb {
    shuffle_counts(u, v)
        .into_iter()
        .map(|(w, c)| (w, Rational::from_integer(BigInt::from(c))))
        .collect()
}

/// Bilinear extension of the shuffle product.
pub fn shuffle_lin(a: &LinComb, b: &LinComb) -> LinComb {
    let mut out = LinComb::zero();
    for (u, cu) in a.iter() {
        for (v, cv) in b.iter() {
            let c = cu * cv;
            for (w, n) in shuffle_counts(*u, *v) {
                out.add_term(w, &c * Rational::from_integer(BigInt::from(n)));
            }
        }
    }
    out
}

/// `x ⧢ ⋯ ⧢ x` with `n` factors, which equals `n!·xⁿ`.
pub fn shuffle_power(w: Word, n: usize) -> LinComb {
    (0..n).fold(LinComb::one(), |acc, _| shuffle_lin(&acc, &LinComb::from(w)))
}
