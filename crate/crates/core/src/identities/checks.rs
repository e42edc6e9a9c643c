//! Structural checks of the algebra and of the continuation, reported in
//! the same form as the identities.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_traits::One;

use super::report::{Params, VerificationReport};
use super::schur::{n_table, product_expand_check};
use crate::continuation::{compose_check, continue_word, continue_words, Path};
use crate::kz_matrix::{rep_word, rho0_closed_form, Representation};
use crate::series_eval::{mpl_extended, mpl_extended_lin, EvalParams};
use crate::word_algebra::{reg1, shuffle, shuffle_lin, LinComb, Rational, Word};

const ODE_TOL: f64 = 1e-12;

fn words_up_to(n: usize) -> Vec<Word> {
    (0..=n).flat_map(Word::all_of_length).collect()
}

fn count_report(id: &str, params: Params, failures: usize, checked: usize) -> VerificationReport {
    VerificationReport::compare(id, params, Complex64::new(failures as f64, 0.0), Complex64::new(0.0, 0.0), 0.0)
        .with_detail(format!("{failures} failures out of {checked} exact comparisons"))
}

fn deviation_report(id: &str, params: Params, dev: f64, tol: f64) -> VerificationReport {
    VerificationReport::with_errors(id, params, Complex64::new(dev, 0.0), Complex64::new(0.0, 0.0), dev, f64::INFINITY, tol)
        .with_detail("lhs is the largest deviation found")
}

/// Commutativity of ⧢ on pairs of weight `≤ max_weight`, associativity on
/// triples of total weight `≤ max_weight + 1`, the reconstruction
/// `w·xⁿ = Σⱼ reg¹(w·x^{n−j}) ⧢ xʲ` and `reg¹(w·y·xⁿ) = (−1)ⁿ(w ⧢ xⁿ)·y`
/// for `n ≤ 3`.
pub fn check_shuffle_algebra(max_weight: usize) -> VerificationReport {
    let words = words_up_to(max_weight);
    let (mut bad, mut total) = (0usize, 0usize);
    for &u in &words {
        for &v in &words {
            total += 1;
            bad += usize::from(shuffle(u, v) != shuffle(v, u));
        }
    }
    let small = words_up_to(max_weight + 1);
    for &u in &small {
        for &v in small.iter().filter(|v| u.len() + v.len() <= max_weight + 1) {
            let uv = shuffle(u, v);
            for &x in small.iter().filter(|x| u.len() + v.len() + x.len() <= max_weight + 1) {
                total += 1;
                let left = shuffle_lin(&uv, &LinComb::from(x));
                let right = shuffle_lin(&LinComb::from(u), &shuffle(v, x));
                bad += usize::from(left != right);
            }
        }
    }
    for &u in words.iter().filter(|u| u.in_h1()) {
        for n in 0..=3 {
            total += 1;
            let mut sum = LinComb::zero();
            for j in 0..=n {
                sum += &shuffle_lin(&reg1(u.concat(Word::x_pow(n - j))), &LinComb::from(Word::x_pow(j)));
            }
            bad += usize::from(sum != LinComb::from(u.concat(Word::x_pow(n))));
        }
    }
    for &u in words.iter().filter(|u| u.len() < max_weight) {
        for n in 0..=3usize {
            total += 1;
            let sign = if n % 2 == 0 { Rational::one() } else { -Rational::one() };
            let lhs = reg1(u.push_back(crate::word_algebra::Letter::Y).concat(Word::x_pow(n)));
            let rhs = shuffle(u, Word::x_pow(n)).append(crate::word_algebra::Letter::Y).scale(&sign);
            bad += usize::from(lhs != rhs);
        }
    }
    count_report("shuffle-algebra", Params::new().with("max_weight", max_weight), bad, total)
}

/// The closed form of `ρ₀(W)` against the ordered matrix product for every
/// nonempty word of weight `≤ max_weight`.
pub fn check_rho0_closed_form(max_weight: usize) -> VerificationReport {
    let rep = Representation::rho0();
    let (mut bad, mut total) = (0usize, 0usize);
    for w in (1..=max_weight).flat_map(Word::all_of_length) {
        total += 1;
        match rho0_closed_form(w) {
            Ok(m) => bad += usize::from(m != rep_word(&rep, w)),
            Err(_) => bad += 1,
        }
    }
    count_report("closed-form-rho0", Params::new().with("max_weight", max_weight), bad, total)
}

/// `max |Li(u ⧢ v; z) − Li(u; z)Li(v; z)|` over pairs of total weight
/// `≤ max_weight` at three points.
pub fn check_shuffle_homomorphism(max_weight: usize) -> VerificationReport {
    let p = EvalParams::default();
    let words = words_up_to(max_weight);
    let id = "shuffle-homomorphism";
    let params = Params::new().with("max_weight", max_weight);
    let mut dev: f64 = 0.0;
    for z in [Complex64::new(0.2, 0.0), Complex64::new(0.0, 0.5), Complex64::new(-0.3, 0.4)] {
        for &a in &words {
            for &b in words.iter().filter(|b| a.len() + b.len() <= max_weight && a <= **b) {
                let r = (|| {
                    let lhs = mpl_extended_lin(&shuffle(a, b), z, &p)?.value;
                    let rhs = mpl_extended(a, z, &p)?.value * mpl_extended(b, z, &p)?.value;
                    Ok::<_, crate::Error>((lhs - rhs).norm())
                })();
                match r {
                    Ok(d) => dev = dev.max(d),
                    Err(e) => return VerificationReport::error(id, params, 1e-9, &e),
                }
            }
        }
    }
    deviation_report(id, params, dev, 1e-9)
}

/// `Li₁` continued once clockwise around `z = 1` from `0.5` gains `2πi`.
pub fn check_monodromy() -> VerificationReport {
    let id = "monodromy";
    let params = Params::new().with("loop", "clockwise around 1");
    let r = (|| {
        let cw = Path::loop_around(0.5, Complex64::new(1.0, 0.0), 0.5, -1, 64)?;
        let v = continue_word("y".parse()?, &cw, ODE_TOL)?;
        Ok::<_, crate::Error>(v - Complex64::new(2f64.ln(), 0.0))
    })();
    match r {
        Ok(jump) => VerificationReport::compare(id, params, jump, Complex64::new(0.0, 2.0 * PI), 1e-8),
        Err(e) => VerificationReport::error(id, params, 1e-8, &e),
    }
}

fn h1_words(max: usize) -> Vec<Word> {
    (1..=max).flat_map(Word::all_of_length).filter(Word::in_h1).collect()
}

/// The path-composition formula for every `w ∈ h¹` of weight `≤ max_weight`,
/// split at interior points of a bent path.
pub fn check_path_composition(max_weight: usize) -> VerificationReport {
    let id = "path-composition";
    let params = Params::new().with("max_weight", max_weight);
    let r = (|| {
        let bent: Path = "0.4 -> 0.6+0.8i -> 1.8+0.2i -> 1.5-0.7i".parse()?;
        let mut dev: f64 = 0.0;
        for s in [0.3, 0.55, 0.8] {
            let (p1, p2) = bent.split_at_fraction(s)?;
            for u in h1_words(max_weight) {
                dev = dev.max(compose_check(u, &p1, &p2, ODE_TOL)?.abs_err);
            }
        }
        Ok::<_, crate::Error>(dev)
    })();
    match r {
        Ok(dev) => deviation_report(id, params, dev, 1e-8),
        Err(e) => VerificationReport::error(id, params, 1e-8, &e),
    }
}

/// Continuation along two homotopic paths gives the same values for every
/// `w ∈ h¹` of weight `≤ max_weight`.
pub fn check_homotopy(max_weight: usize) -> VerificationReport {
    let id = "homotopy";
    let params = Params::new().with("max_weight", max_weight);
    let r = (|| {
        let words = h1_words(max_weight);
        let a: Path = "0.5 -> 0.5+1i -> 2+0.5i".parse()?;
        let b: Path = "0.5 -> 0.2+0.6i -> 1+1.5i -> 2.5+1i -> 2+0.5i".parse()?;
        let va = continue_words(&words, &a, ODE_TOL)?;
        let vb = continue_words(&words, &b, ODE_TOL)?;
        Ok::<_, crate::Error>(va.iter().zip(&vb).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max))
    })();
    match r {
        Ok(dev) => deviation_report(id, params, dev, 1e-7),
        Err(e) => VerificationReport::error(id, params, 1e-7, &e),
    }
}

/// Deterministic pseudo-random rationals with numerators and denominators
/// below 100 (a linear congruential generator).
pub fn sample_rationals(count: usize, seed: u64) -> Vec<Rational> {
    let mut s = seed;
    let mut next = move || {
        s = s.wrapping_mul(6_364_136_223_846_793_005).wrapping_add(1_442_695_040_888_963_407);
        (s >> 33) as i64
    };
    (0..count)
        .map(|_| {
            let num = next() % 199 - 99;
            let den = next() % 99 + 1;
            Rational::new(num.into(), den.into())
        })
        .collect()
}

/// The product expansion with `Aᵢ ≡ 1`, `Aᵢ = δᵢ₀` and pseudo-random
/// rational coefficients, exactly to total degree `degree`.
pub fn check_product_expansion(degree: usize) -> VerificationReport {
    let mut families = vec![vec![Rational::one(); degree + 1], vec![Rational::one()]];
    for seed in 1..=5 {
        families.push(sample_rationals(degree + 1, seed));
    }
    let bad = families.iter().filter(|a| !product_expand_check(a, degree).holds).count();
    count_report("product-expansion", Params::new().with("degree", degree).with("n00", 1), bad, families.len())
}

/// `N⁽ⁿ⁾_{i,j} = N⁽ⁿ⁻¹⁾_{i−1,j} − N⁽ⁿ⁻²⁾_{i,j−1}` for `3 ≤ n ≤ n_max` and
/// `aⁿ + bⁿ = Σ N⁽ⁿ⁾_{i,j}(a+b)ⁱ(ab)ʲ` at integer points for `1 ≤ n ≤ n_max`.
pub fn check_n_recurrence(n_max: usize) -> VerificationReport {
    let t = n_table(n_max);
    let get = |n: usize, i: i64| -> i64 {
        if i < 0 || i as usize > n {
            0
        } else {
            t[n][i as usize]
        }
    };
    let (mut bad, mut total) = (0usize, 0usize);
    for n in 3..=n_max {
        for i in 0..=n as i64 {
            if (n as i64 - i) % 2 != 0 {
                continue;
            }
            total += 1;
            bad += usize::from(get(n, i) != get(n - 1, i - 1) - get(n - 2, i));
        }
    }
    for n in 1..=n_max {
        for (a, b) in [(1i128, 2i128), (-3, 5), (2, 2), (7, -1)] {
            total += 1;
            let lhs = a.pow(n as u32) + b.pow(n as u32);
            let mut rhs = 0i128;
            for i in 0..=n {
                if (n - i) % 2 == 0 {
                    rhs += t[n][i] as i128 * (a + b).pow(i as u32) * (a * b).pow(((n - i) / 2) as u32);
                }
            }
            bad += usize::from(lhs != rhs);
        }
    }
    count_report("n-recurrence", Params::new().with("n_max", n_max), bad, total)
}
