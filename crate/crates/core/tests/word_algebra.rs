use std::collections::HashMap;

use hypkz::word_algebra::*;
use num_bigint::BigInt;
use num_traits::One;
use proptest::prelude::*;

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

fn words_up_to(n: usize) -> Vec<Word> {
    (0..=n).flat_map(Word::all_of_length).collect()
}

/// Shuffle of multisets with machine-integer multiplicities.
fn shuffle_map(a: &HashMap<Word, u64>, b: &HashMap<Word, u64>) -> HashMap<Word, u64> {
    let mut out = HashMap::new();
    for (u, cu) in a {
        for (v, cv) in b {
            for (x, n) in shuffle_counts(*u, *v) {
                *out.entry(x).or_insert(0) += cu * cv * n;
            }
        }
    }
    out
}

/// Independent shuffle by enumerating which positions carry the first word.
fn shuffle_by_positions(u: Word, v: Word) -> HashMap<Word, u64> {
    let n = u.len() + v.len();
    let mut out = HashMap::new();
    for mask in 0u64..(1u64 << n) {
        if mask.count_ones() as usize != u.len() {
            continue;
        }
        let (mut i, mut j) = (0, 0);
        let mut letters = Vec::with_capacity(n);
        for pos in 0..n {
            if mask >> pos & 1 == 1 {
                letters.push(u.get(i));
                i += 1;
            } else {
                letters.push(v.get(j));
                j += 1;
            }
        }
        *out.entry(Word::from_letters(letters)).or_insert(0) += 1;
    }
    out
}

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn shuffle_matches_position_enumeration() {
    for u in words_up_to(4) {
        for v in words_up_to(4) {
            assert_eq!(shuffle_counts(u, v), shuffle_by_positions(u, v), "{u} ⧢ {v}");
        }
    }
}

#[test]
fn shuffle_is_commutative_up_to_weight_9() {
    let ws = words_up_to(9);
    for &u in &ws {
        for &v in &ws {
            if u.len() + v.len() <= 9 && u <= v {
                assert_eq!(shuffle_counts(u, v), shuffle_counts(v, u));
            }
        }
    }
}

#[test]
fn shuffle_is_associative_up_to_weight_9() {
    let by_len: Vec<Vec<Word>> = (0..=9).map(|n| Word::all_of_length(n).collect()).collect();
    for a in 0..=9usize {
        for b in 0..=(9 - a) {
            for c in 0..=(9 - a - b) {
                for ((&u, &v), &x) in by_len[a]
                    .iter()
                    .flat_map(|u| by_len[b].iter().map(move |v| (u, v)))
                    .flat_map(|uv| by_len[c].iter().map(move |x| (uv, x)))
                {
                    let one = |t: Word| HashMap::from([(t, 1u64)]);
                    let left = shuffle_map(&shuffle_counts(u, v), &one(x));
                    let right = shuffle_map(&one(u), &shuffle_counts(v, x));
                    assert_eq!(left, right, "({u} ⧢ {v}) ⧢ {x}");
                }
            }
        }
    }
}

#[test]
fn coefficient_sum_is_binomial() {
    for u in words_up_to(6) {
        for v in words_up_to(6) {
            let total: u64 = shuffle_counts(u, v).values().sum();
            assert_eq!(total, binom((u.len() + v.len()) as u64, u.len() as u64));
        }
    }
}

#[test]
fn reg1_reconstruction() {
    for u in words_up_to(5).into_iter().filter(Word::in_h1) {
        for n in 0..=4 {
            let target = LinComb::from(u.concat(Word::x_pow(n)));
            let mut sum = LinComb::zero();
            for j in 0..=n {
                let r = reg1(u.concat(Word::x_pow(n - j)));
                sum += &shuffle_lin(&r, &LinComb::from(Word::x_pow(j)));
            }
            assert_eq!(sum, target, "w = {u}, n = {n}");
        }
    }
}

#[test]
fn reg1_of_y_followed_by_x_power() {
    for u in words_up_to(5) {
        for n in 0..=3usize {
            let lhs = reg1(u.push_back(Letter::Y).concat(Word::x_pow(n)));
            let sign = if n % 2 == 0 { Rational::one() } else { -Rational::one() };
            let rhs = shuffle(u, Word::x_pow(n)).append(Letter::Y).scale(&sign);
            assert_eq!(lhs, rhs, "w = {u}, n = {n}");
        }
    }
}

#[test]
fn regularizations_fix_their_subalgebras() {
    for u in words_up_to(7) {
        if u.in_h1() {
            assert_eq!(reg1(u), LinComb::from(u));
        }
        if u.in_h0() {
            assert_eq!(reg0(u), LinComb::from(u));
        }
    }
}

#[test]
fn reg0_full_decomposition_reconstructs() {
    for u in words_up_to(6) {
        let parts = reg0_decompose(&LinComb::from(u));
        let mut sum = LinComb::zero();
        for ((m, n), a) in &parts {
            assert!(a.all_in_h0());
            let t = shuffle_lin(a, &LinComb::from(Word::x_pow(*m)));
            sum += &shuffle_lin(&t, &LinComb::from(Word::y_pow(*n)));
        }
        assert_eq!(sum, LinComb::from(u), "w = {u}");
    }
}

#[test]
fn reg_examples() {
    assert_eq!(reg1(w("y")), LinComb::from(w("y")));
    assert_eq!(reg1(w("yx")), LinComb::term(w("xy"), rat(-1)));
    assert!(reg1(w("x")).is_zero());
    assert_eq!(reg0(w("xy")), LinComb::from(w("xy")));
    assert!(reg0(w("y")).is_zero());
    assert_eq!(reg0(w("yx")), LinComb::term(w("xy"), rat(-1)));
}

fn compositions(k: usize, n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return if k == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 1..=k {
        for mut rest in compositions(k - first, n - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[test]
fn g0_matches_composition_enumeration() {
    for k in 1..=10i64 {
        for n in 1..=k {
            for s in 1..=n {
                let expected: Vec<Word> = {
                    let mut v: Vec<Word> = compositions(k as usize, n as usize)
                        .into_iter()
                        .filter(|p| p[0] >= 2 && p.iter().filter(|&&q| q >= 2).count() == s as usize)
                        .map(|p| MultiIndex::new(p.iter().map(|&q| q as u32).collect()).unwrap().to_word())
                        .collect();
                    v.sort();
                    v
                };
                assert_eq!(g_words(0, k, n, s), expected, "g0({k},{n},{s})");
                for x in &expected {
                    assert_eq!((x.weight(), x.depth(), x.height()), (k as usize, n as usize, s as usize));
                }
            }
        }
    }
}

#[test]
fn g1_counts_every_h1_word_once() {
    for k in 1..=10usize {
        let mut total = 0;
        for n in 1..=k as i64 {
            for s in 1..=n {
                for x in g_words(1, k as i64, n, s) {
                    assert!(x.in_h1());
                    assert_eq!(x.height(), s as usize);
                    total += 1;
                }
            }
        }
        assert_eq!(total, 1usize << (k - 1));
    }
}

#[test]
fn g_vanishing_conventions() {
    assert!(enumerate_g(0, 2, 2, 1).is_zero());
    assert!(enumerate_g(0, 4, 1, 2).is_zero());
    assert!(enumerate_g(1, 3, 0, 1).is_zero());
    assert!(enumerate_g(1, -1, 1, 1).is_zero());
    assert!(enumerate_g(0, 3, 1, 0).is_zero());
}

#[test]
fn serialization_round_trip() {
    let a = shuffle(w("xyy"), w("yx"));
    let json = serde_json::to_string(&a.to_records()).unwrap();
    let recs: Vec<LinCombTerm> = serde_json::from_str(&json).unwrap();
    assert_eq!(LinComb::from_records(&recs).unwrap(), a);
    let idx: MultiIndex = "3,1".parse().unwrap();
    assert_eq!(idx.to_word(), w("xxyy"));
}

fn arb_word(max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(prop::bool::ANY, 0..=max).prop_map(|bits| {
        Word::from_letters(bits.into_iter().map(|b| if b { Letter::Y } else { Letter::X }))
    })
}

proptest! {
    #[test]
    fn prop_shuffle_commutes(u in arb_word(6), v in arb_word(6)) {
        prop_assert_eq!(shuffle(u, v), shuffle(v, u));
    }

    #[test]
    fn prop_coefficients_sum_to_binomial(u in arb_word(7), v in arb_word(7)) {
        let s = shuffle(u, v).coefficient_sum();
        let b = binom((u.len() + v.len()) as u64, u.len() as u64);
        prop_assert_eq!(s, Rational::from_integer(BigInt::from(b)));
    }

    #[test]
    fn prop_antipode_is_involution(u in arb_word(20)) {
        prop_assert_eq!(antipode_lin(&antipode(u)), LinComb::from(u));
    }

    #[test]
    fn prop_antipode_is_shuffle_compatible(u in arb_word(4), v in arb_word(4)) {
        // S is an algebra map for the (commutative) shuffle product
        let lhs = antipode_lin(&shuffle(u, v));
        let rhs = shuffle_lin(&antipode(u), &antipode(v));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn prop_reg_lands_in_subalgebra(u in arb_word(8)) {
        prop_assert!(reg1(u).all_in_h1());
        prop_assert!(reg0(u).all_in_h0());
        prop_assert!(reg1(u).is_homogeneous_of_weight(u.len()));
    }

    #[test]
    fn prop_reg1_decomposition_reconstructs(u in arb_word(8)) {
        let mut sum = LinComb::zero();
        for (m, a) in reg1_decompose(&LinComb::from(u)) {
            prop_assert!(a.all_in_h1());
            sum += &shuffle_lin(&a, &LinComb::from(Word::x_pow(m)));
        }
        prop_assert_eq!(sum, LinComb::from(u));
    }

    #[test]
    fn prop_reg1_is_shuffle_homomorphism_on_h1_times_x(u in arb_word(4), n in 0usize..3) {
        // reg1(u ⧢ xⁿ) vanishes for n ≥ 1 whenever u ∈ h¹
        let u = u.push_back(Letter::Y);
        let r = reg1_lin(&shuffle(u, Word::x_pow(n)));
        if n == 0 {
            prop_assert_eq!(r, LinComb::from(u));
        } else {
            prop_assert!(r.is_zero());
        }
    }
}
