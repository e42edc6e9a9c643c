use hypkz::series_eval::*;
use hypkz::word_algebra::*;
use hypkz::Complex64;
use num_traits::ToPrimitive;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

fn idx(s: &str) -> MultiIndex {
    s.parse().unwrap()
}

const ZETA: [f64; 9] = [
    1.64493406684822643647,
    1.20205690315959428540,
    1.08232323371113819152,
    1.03692775514336992633,
    1.01734306198444913971,
    1.00834927738192282684,
    1.00407735619794433938,
    1.00200839282608221442,
    1.00099457512781808534,
];

/// Brute-force nested sum over all m₁ > ⋯ > m_r, by explicit recursion.
fn nested_sum_oracle(ks: &[u32], z: Complex64, limit: usize) -> Complex64 {
    fn rec(ks: &[u32], below: usize, z: Complex64) -> Complex64 {
        if ks.is_empty() {
            return c(1.0, 0.0);
        }
        let mut acc = c(0.0, 0.0);
        for m in 1..below {
            acc += rec(&ks[1..], m, z) * (1.0 / (m as f64).powi(ks[0] as i32));
        }
        acc
    }
    // only the outermost variable carries z^{m₁}
    let mut acc = c(0.0, 0.0);
    for m in 1..=limit {
        acc += z.powu(m as u32) * rec(&ks[1..], m, z) / (m as f64).powi(ks[0] as i32);
    }
    acc
}

#[test]
fn depth_one_against_closed_forms() {
    let p = EvalParams::default();
    for z in [c(0.5, 0.0), c(-0.3, 0.4), c(0.0, 0.9), c(0.7, -0.1)] {
        let v = mpl(&idx("1"), z, &p).unwrap().value;
        assert!((v + (c(1.0, 0.0) - z).ln()).norm() < 1e-13, "Li1({z})");
    }
    let v = mpl(&idx("2"), c(0.5, 0.0), &p).unwrap();
    assert!((v.value.re - 0.58224052646501250590).abs() < 1e-15);
    let v = mpl(&idx("2"), c(-0.3, 0.4), &p).unwrap().value;
    assert!((v - c(-0.307498288033581661617, 0.346024306579368605809)).norm() < 1e-15);
    let v = mpl(&idx("3"), c(0.0, 0.5), &p).unwrap().value;
    assert!((v - c(-0.0303390004173645381438, 0.495599953571453580645)).norm() < 1e-15);
    assert_eq!(mpl(&idx("2"), c(0.0, 0.0), &p).unwrap().value, c(0.0, 0.0));
}

#[test]
fn nested_sums_against_brute_force() {
    let p = EvalParams::default();
    for s in ["2,1", "1,1", "3,1,2", "1,2,1"] {
        let i = idx(s);
        let z = c(0.3, 0.2);
        let v = mpl(&i, z, &p).unwrap().value;
        let o = nested_sum_oracle(i.parts(), z, 60);
        assert!((v - o).norm() < 1e-14, "{s}: {v} vs {o}");
    }
}

#[test]
fn extended_examples() {
    let p = EvalParams::default();
    let z = c(0.5, 0.0);
    let lz = z.ln();
    assert!((mpl_extended(w("x"), z, &p).unwrap().value - lz).norm() < 1e-15);
    let y = mpl_extended(w("y"), z, &p).unwrap().value;
    assert!((y - mpl(&idx("1"), z, &p).unwrap().value).norm() == 0.0);
    let yx = mpl_extended(w("yx"), z, &p).unwrap().value;
    let expect = -mpl(&idx("2"), z, &p).unwrap().value + mpl(&idx("1"), z, &p).unwrap().value * lz;
    assert!((yx - expect).norm() < 1e-15);
    assert!(mpl_extended(w("yx"), c(0.0, 0.0), &p).is_err());
}

fn words_up_to(n: usize) -> Vec<Word> {
    (0..=n).flat_map(Word::all_of_length).collect()
}

#[test]
fn shuffle_homomorphism() {
    let p = EvalParams::default();
    let ws = words_up_to(6);
    for z in [c(0.2, 0.0), c(0.0, 0.5), c(-0.3, 0.4)] {
        for &a in &ws {
            for &b in &ws {
                if a.len() + b.len() > 6 || a > b {
                    continue;
                }
                let lhs = mpl_extended_lin(&shuffle(a, b), z, &p).unwrap().value;
                let rhs = mpl_extended(a, z, &p).unwrap().value * mpl_extended(b, z, &p).unwrap().value;
                assert!((lhs - rhs).norm() <= 1e-9, "{a} ⧢ {b} at {z}: {}", (lhs - rhs).norm());
            }
        }
    }
}

#[test]
fn differential_relations() {
    let p = EvalParams::default();
    let z = c(0.4, 0.0);
    let h = 1e-4;
    for u in words_up_to(4) {
        for (l, weight) in [(Letter::X, 1.0 / z), (Letter::Y, 1.0 / (1.0 - z))] {
            let lw = u.push_front(l);
            let f = |t: Complex64| mpl_extended(lw, t, &p).unwrap().value;
            let d = (f(z + h) - f(z - h)) / (2.0 * h);
            let target = mpl_extended(u, z, &p).unwrap().value * weight;
            assert!((d - target).norm() < 1e-6, "d Li({lw})");
        }
    }
}

#[test]
fn g_examples() {
    let p = EvalParams::default().with_mzv_terms(1_000_000);
    let z = c(0.5, 0.0);
    let g = g_sum(0, 2, 1, 1, z, &p).unwrap().value;
    assert!((g - mpl(&idx("2"), z, &p).unwrap().value).norm() < 1e-15);
    assert_eq!(g_sum(0, 2, 2, 1, z, &p).unwrap().value, c(0.0, 0.0));
    let g = g_sum(0, 4, 2, 1, c(1.0, 0.0), &p).unwrap();
    let z31 = mzv(&idx("3,1"), &p).unwrap();
    assert_eq!(g.value, z31.value);
    assert!(g_sum(1, 2, 2, 1, c(1.0, 0.0), &p).is_err());
}

#[test]
fn theta_g0_is_g1_of_lower_weight() {
    let p = EvalParams::default();
    let z = c(0.4, 0.0);
    let h = 1e-4;
    let table = GTable::build(7, &[z], &p).unwrap();
    for k in 2..=7i64 {
        for n in 1..k {
            for s in 1..=n {
                let f = |t: Complex64| g_sum(0, k, n, s, t, &p).unwrap().value;
                let d = z * (f(z + h) - f(z - h)) / (2.0 * h);
                let target = g_sum(1, k - 1, n, s, z, &p).unwrap().value;
                assert!((d - target).norm() < 1e-6, "({k},{n},{s})");
                assert!((table.theta(0, k, n, s, 0) - target).norm() < 1e-13);
            }
        }
    }
}

#[test]
fn error_bounds_are_honest() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let base = EvalParams::default().with_series_terms(64);
    let double = base.with_series_terms(128);
    for _ in 0..100 {
        let depth = rng.gen_range(1..=3);
        let parts: Vec<u32> = (0..depth).map(|_| rng.gen_range(1..=3)).collect();
        let i = MultiIndex::new(parts).unwrap();
        let r = rng.gen_range(0.0..0.85f64);
        let t = rng.gen_range(0.0..std::f64::consts::TAU);
        let z = Complex64::from_polar(r, t);
        let a = mpl(&i, z, &base).unwrap();
        let b = mpl(&i, z, &double).unwrap();
        assert!((a.value - b.value).norm() <= a.error_bound + 1e-15, "{i} at {z}");
    }
}

#[test]
fn boundedness_on_compact_interval() {
    let p = EvalParams::default();
    let m = boundedness_constant(0.1, 0.9).unwrap();
    for k in 0..=8 {
        for u in Word::all_of_length(k) {
            for z in [0.1, 0.3, 0.5, 0.7, 0.9] {
                let v = mpl_extended(u, c(z, 0.0), &p).unwrap().value;
                assert!(v.norm() < m, "Li({u}; {z}) = {v}");
            }
        }
    }
}

#[test]
fn mzv_against_reference_values() {
    let p = EvalParams::default();
    for (j, &zeta) in ZETA.iter().enumerate() {
        let k = (j + 2) as u32;
        let v = mzv(&MultiIndex::new(vec![k]).unwrap(), &p).unwrap();
        assert!((v.value.re - zeta).abs() <= v.error_bound.max(1e-15), "zeta({k})");
    }
    let z21 = mzv(&idx("2,1"), &p).unwrap();
    assert!((z21.value.re - ZETA[1]).abs() < 1e-4);
    assert!((z21.value.re - ZETA[1]).abs() <= z21.error_bound);
    // ζ(3,1) = π⁴/360
    let z31 = mzv(&idx("3,1"), &p).unwrap();
    let exact = std::f64::consts::PI.powi(4) / 360.0;
    assert!((z31.value.re - exact).abs() <= z31.error_bound);
}

/// Naive term-by-term Gauss series.
fn gauss_oracle(a: Complex64, b: Complex64, cc: Complex64, z: Complex64, n: usize) -> Complex64 {
    let mut sum = c(0.0, 0.0);
    for k in 0..n {
        let mut t = c(1.0, 0.0);
        for j in 0..k {
            let jf = j as f64;
            t = t * (a + jf) * (b + jf) / ((cc + jf) * (jf + 1.0)) * z;
        }
        sum += t;
        if t.norm() < 1e-20 {
            break;
        }
    }
    sum
}

#[test]
fn hypergeometric_series() {
    let ps = ParamSet::real(0.1, 0.2, 0.9);
    let v = hypergeom_2f1(&ps, c(0.0, 0.0), 10).unwrap();
    assert_eq!(v.value, c(1.0, 0.0));
    let v = hypergeom_2f1(&ps, c(0.3, 0.0), 10_000).unwrap();
    assert!((v.value.re - 1.00749896014261528136).abs() < 1e-15);
    let o = gauss_oracle(ps.alpha, ps.beta, ps.gamma, c(0.3, 0.0), 10_000);
    assert!((v.value - o).norm() < 1e-15);
    let v = hypergeom_2f1(&ps, c(0.3, 0.4), 10_000).unwrap();
    assert!((v.value - c(1.00552941237810132849, 0.01076893051023709932)).norm() < 1e-15);
    let v = hypergeom_2f1(&ParamSet::real(1.0, 1.0, 2.0), c(0.5, 0.0), 10_000).unwrap();
    assert!((v.value.re - 1.38629436111989061883).abs() < 1e-15);
    assert!(hypergeom_2f1(&ParamSet::real(0.1, 0.2, -1.0), c(0.3, 0.0), 100).is_err());
}

fn ode_residual(ps: &ParamSet, at: Singularity, j: u8, z: Complex64) -> f64 {
    let h = 1e-3;
    let f = |t: Complex64| local_solution(ps, at, j, t).unwrap();
    let (f0, fp, fm) = (f(z), f(z + h), f(z - h));
    let d1 = (fp - fm) / (2.0 * h);
    let d2 = (fp - 2.0 * f0 + fm) / (h * h);
    (z * (1.0 - z) * d2 + (ps.gamma - (ps.alpha + ps.beta + 1.0) * z) * d1 - ps.alpha * ps.beta * f0).norm()
}

#[test]
fn local_solutions_solve_the_equation() {
    let ps = ParamSet::real(0.1, 0.2, 0.9);
    for (at, z) in [
        (Singularity::Zero, c(0.3, 0.1)),
        (Singularity::One, c(0.6, -0.2)),
        (Singularity::Infinity, c(2.5, 1.0)),
    ] {
        for j in 0..=1 {
            assert!(ode_residual(&ps, at, j, z) < 1e-5, "{at:?} {j}");
            // analytic z·d/dz against central differences
            let (phi, theta) = local_solution_theta(&ps, at, j, z).unwrap();
            let h = 1e-5;
            let fd = z * (local_solution(&ps, at, j, z + h).unwrap() - local_solution(&ps, at, j, z - h).unwrap()) / (2.0 * h);
            assert!((theta - fd).norm() < 1e-8, "{at:?} {j}: {theta} vs {fd}");
            assert!(phi.is_finite());
        }
    }
}

#[test]
fn local_solution_examples() {
    let ps = ParamSet::real(0.1, 0.2, 0.9);
    let z = c(0.25, 0.0);
    let v = local_solution(&ps, Singularity::Zero, 1, z).unwrap();
    let e = 0.25f64.powf(0.1) * gauss_oracle(c(0.2, 0.0), c(0.3, 0.0), c(1.1, 0.0), z, 10_000);
    assert!((v - e).norm() < 1e-14);
    assert!((local_solution(&ps, Singularity::One, 0, c(1.0, 0.0)).unwrap() - 1.0).norm() < 1e-15);
    let v = local_solution(&ps, Singularity::Infinity, 0, c(4.0, 0.0)).unwrap();
    let e = 4f64.powf(-0.1) * gauss_oracle(c(0.1, 0.0), c(0.2, 0.0), c(0.9, 0.0), c(0.25, 0.0), 10_000);
    assert!((v - e).norm() < 1e-14);
    assert!(local_solution(&ps, Singularity::Infinity, 0, c(0.5, 0.0)).is_err());
}

#[test]
fn theorem31_matches_gauss_series() {
    let ps = ParamSet::real(0.1, 0.2, 0.9);
    let p = EvalParams::default();
    for z in [0.1, 0.3, 0.5] {
        let z = c(z, 0.0);
        let f = hypergeom_2f1(&ps, z, 10_000).unwrap().value;
        let t = theorem31_series(&ps, z, 40, &p).unwrap();
        assert!((t.value - f).norm() <= 1e-8, "{z}: {}", (t.value - f).norm());
        assert!((t.value - f).norm() <= t.error_bound + 1e-14);
        let phi = local_solution(&ps, Singularity::Zero, 1, z).unwrap();
        let cor = corollary_phi01_series(&ps, z, 40, &p).unwrap();
        assert!((cor.value - phi).norm() <= 1e-8);
    }
}

#[test]
fn theorem31_trivial_cases() {
    let p = EvalParams::default();
    let ps = ParamSet::real(0.0, 0.2, 0.9);
    assert_eq!(theorem31_series_with(&ps, c(0.3, 0.0), 10, &p, true).unwrap().value, c(1.0, 0.0));
    let ps = ParamSet::real(0.1, 0.2, 0.9);
    assert_eq!(theorem31_series(&ps, c(0.0, 0.0), 10, &p).unwrap().value, c(1.0, 0.0));
    assert!(theorem31_series(&ParamSet::real(0.1, 0.2, 0.2), c(0.3, 0.0), 10, &p).is_err());
    // α + 1 − γ = 0 kills the sum
    let ps = ParamSet::real(-0.1, 0.2, 0.9);
    let v = corollary_phi01_series_with(&ps, c(0.3, 0.0), 10, &p, true).unwrap().value;
    assert!((v - 0.3f64.powf(0.1)).norm() < 1e-15);
}

#[test]
fn theorem31_error_decreases_geometrically() {
    let ps = ParamSet::real(0.1, 0.2, 0.9);
    let p = EvalParams::default();
    let z = c(0.5, 0.0);
    let f = hypergeom_2f1(&ps, z, 10_000).unwrap().value;
    let errs: Vec<f64> = [4, 8, 12, 16]
        .iter()
        .map(|&k| (theorem31_series(&ps, z, k, &p).unwrap().value - f).norm())
        .collect();
    for pair in errs.windows(2) {
        assert!(pair[1] < pair[0], "{errs:?}");
    }
    let ratio = (errs[3] / errs[0]).powf(1.0 / 12.0);
    assert!(ratio < 1.0, "per-weight ratio {ratio}");
}

proptest! {
    #[test]
    fn prop_extended_is_linear(a in 0usize..64, b in 0usize..64, z in 0.05f64..0.9) {
        let p = EvalParams::default();
        let wa = Word::all_of_length(6).nth(a).unwrap();
        let wb = Word::all_of_length(6).nth(b).unwrap();
        let mut comb = LinComb::term(wa, rat(3));
        comb.add_term(wb, rat(-2));
        let lhs = mpl_extended_lin(&comb, c(z, 0.0), &p).unwrap().value;
        let rhs = mpl_extended(wa, c(z, 0.0), &p).unwrap().value * 3.0 - mpl_extended(wb, c(z, 0.0), &p).unwrap().value * 2.0;
        prop_assert!((lhs - rhs).norm() < 1e-12);
    }

    #[test]
    fn prop_reg1_value_matches_h1_part(k in 1usize..7, bits in 0u64..64, z in 0.05f64..0.9) {
        // Li of a word in h¹ equals Li of its reg¹ image
        let p = EvalParams::default();
        let u = Word::all_of_length(k).nth((bits % (1 << k)) as usize).unwrap().push_back(Letter::Y);
        let r = reg1(u);
        let a = mpl_extended(u, c(z, 0.0), &p).unwrap().value;
        let b = mpl_lin(&r, c(z, 0.0), &p).unwrap().value;
        prop_assert!((a - b).norm() < 1e-14);
        prop_assert!(r.iter().all(|(_, q)| q.to_f64().is_some()));
    }
}
