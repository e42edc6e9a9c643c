use std::collections::BTreeMap;

use num_traits::Zero;

use super::lincomb::LinComb;
use super::shuffle::shuffle_lin;
use super::word::Word;

/// Full decomposition `a = Σₙ aₙ ⧢ xⁿ` with every `aₙ ∈ h¹`.
///
/// Triangular elimination: the word `u·xᵐ` (`u ∈ h¹`) with the largest
/// number `m > 0` of trailing `x` is the unique such word in `u ⧢ xᵐ`, and
/// every other word there has fewer trailing `x`. Moving `c·u` into the
/// component `m` and subtracting `c·(u ⧢ xᵐ)` terminates with the `n = 0`
/// component.
pub fn reg1_decompose(a: &LinComb) -> BTreeMap<usize, LinComb> {
    let mut parts: BTreeMap<usize, LinComb> = BTreeMap::new();
    let mut cur = a.clone();
    loop {
        let pick = cur
            .iter()
            .filter(|(w, _)| w.trailing_x() > 0)
            .max_by_key(|(w, _)| (w.trailing_x(), **w))
            .map(|(w, c)| (*w, c.clone()));
        let Some((w, c)) = pick else { break };
        let m = w.trailing_x();
        let u = w.slice(0, w.len() - m);
        let part = shuffle_lin(&LinComb::from(u), &LinComb::from(Word::x_pow(m)));
        cur.add_scaled(&part, &-c.clone());
        parts.entry(m).or_default().add_term(u, c);
        debug_assert!(cur.coeff(&w).is_zero());
    }
    parts.insert(0, cur);
    parts.retain(|_, v| !v.is_zero());
    parts
}

/// Constant term of `w` in the decomposition `h = ⊕ₙ h¹ ⧢ x^{⧢n}`.
pub fn reg1(w: Word) -> LinComb {
    reg1_lin(&LinComb::from(w))
}

/// Linear extension of [`reg1`].
pub fn reg1_lin(a: &LinComb) -> LinComb {
    reg1_decompose(a).remove(&0).unwrap_or_default()
}

/// Full decomposition `a = Σ a_{m,n} ⧢ xᵐ ⧢ yⁿ` with every `a_{m,n} ∈ h⁰`,
/// keyed by `(m, n)`.
///
/// Same elimination keyed on the leading-`y` and trailing-`x` counts of
/// `w = yⁿ·u·xᵐ`: the shuffle `u ⧢ xᵐ ⧢ yⁿ` contains `w` once and otherwise
/// only words with fewer leading `y` or fewer trailing `x`.
pub fn reg0_decompose(a: &LinComb) -> BTreeMap<(usize, usize), LinComb> {
    let mut parts: BTreeMap<(usize, usize), LinComb> = BTreeMap::new();
    let mut cur = a.clone();
    loop {
        let pick = cur
            .iter()
            .filter(|(w, _)| w.leading_y() + w.trailing_x() > 0)
            .max_by_key(|(w, _)| (w.leading_y() + w.trailing_x(), **w))
            .map(|(w, c)| (*w, c.clone()));
        let Some((w, c)) = pick else { break };
        let n = w.leading_y();
        let m = w.trailing_x();
        let u = w.slice(n, w.len() - m);
        let part = shuffle_lin(
            &shuffle_lin(&LinComb::from(u), &LinComb::from(Word::x_pow(m))),
            &LinComb::from(Word::y_pow(n)),
        );
        cur.add_scaled(&part, &-c.clone());
        parts.entry((m, n)).or_default().add_term(u, c);
        debug_assert!(cur.coeff(&w).is_zero());
    }
    parts.insert((0, 0), cur);
    parts.retain(|_, v| !v.is_zero());
    parts
}

/// Constant term of `w` in the decomposition `h = ⊕ h⁰ ⧢ x^{⧢m} ⧢ y^{⧢n}`.
pub fn reg0(w: Word) -> LinComb {
    reg0_lin(&LinComb::from(w))
}

/// Linear extension of [`reg0`].
pub fn reg0_lin(a: &LinComb) -> LinComb {
    reg0_decompose(a).remove(&(0, 0)).unwrap_or_default()
}
