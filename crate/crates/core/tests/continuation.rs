use std::f64::consts::PI;

use hypkz::continuation::*;
use hypkz::series_eval::{mpl_extended, EvalParams};
use hypkz::word_algebra::*;
use hypkz::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

/// Gauss–Legendre nodes and weights on [0, 1] by Newton iteration.
fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    for i in 1..=n {
        let mut x = (PI * (i as f64 - 0.25) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let wgt = 2.0 / ((1.0 - x * x) * dp * dp);
        out.push(((1.0 - x) / 2.0, wgt / 2.0));
    }
    out
}

/// Panels `(a, b)` covering the polyline, each short compared with its
/// distance to the singular points.
fn panels(points: &[Complex64]) -> Vec<(Complex64, Complex64)> {
    let mut out = Vec::new();
    for p in points.windows(2) {
        let n = 200;
        for j in 0..n {
            let a = p[0] + (p[1] - p[0]) * (j as f64 / n as f64);
            let b = p[0] + (p[1] - p[0]) * ((j + 1) as f64 / n as f64);
            out.push((a, b));
        }
    }
    out
}

/// `∫ f(t) dt` along the polyline by composite Gauss–Legendre.
fn quad(points: &[Complex64], f: impl Fn(Complex64) -> Complex64) -> Complex64 {
    let gl = gauss_legendre(20);
    let mut acc = c(0.0, 0.0);
    for (a, b) in panels(points) {
        for &(x, wt) in &gl {
            acc += f(a + (b - a) * x) * (b - a) * wt;
        }
    }
    acc
}

/// Nested quadrature of `Li₂` from `Li₂(p)`: `Li₁` at each node is itself
/// a quadrature of `dt/(1−t)` from the base point.
fn li2_by_quadrature(points: &[Complex64]) -> Complex64 {
    let p = points[0].re;
    let li1_p = -(1.0 - p).ln();
    let li2_p = (1..2000).map(|m| p.powi(m) / (m * m) as f64).sum::<f64>();
    let gl = gauss_legendre(20);
    let mut acc = c(li2_p, 0.0);
    let mut li1_start = c(li1_p, 0.0);
    for (a, b) in panels(points) {
        for &(x, wt) in &gl {
            let t = a + (b - a) * x;
            // Li₁(t) = Li₁(a) + ∫_a^t ds/(1−s)
            let mut inner = li1_start;
            for &(y, v) in &gl {
                let s = a + (t - a) * y;
                inner += (t - a) * v / (1.0 - s);
            }
            acc += inner / t * (b - a) * wt;
        }
        for &(y, v) in &gl {
            let s = a + (b - a) * y;
            li1_start += (b - a) * v / (1.0 - s);
        }
    }
    acc
}

#[test]
fn li1_monodromy_around_one() {
    let y = w("y");
    let li1 = c(2f64.ln(), 0.0);
    let ccw = Path::loop_around(0.5, c(1.0, 0.0), 0.5, 1, 64).unwrap();
    let v = continue_word(y, &ccw, 1e-12).unwrap();
    assert!((v - li1 - c(0.0, -2.0 * PI)).norm() < 1e-8, "ccw: {}", v - li1);
    let q = quad(ccw.points(), |t| 1.0 / (1.0 - t));
    assert!((q - c(0.0, -2.0 * PI)).norm() < 1e-10);
    let cw = Path::loop_around(0.5, c(1.0, 0.0), 0.5, -1, 64).unwrap();
    let v = continue_word(y, &cw, 1e-12).unwrap();
    assert!((v - li1 - c(0.0, 2.0 * PI)).norm() < 1e-8);
    for turns in [-3, 2] {
        let p = Path::loop_around(0.5, c(1.0, 0.0), 0.3, turns, 48).unwrap();
        let v = continue_word(y, &p, 1e-12).unwrap();
        assert!((v - li1 - c(0.0, -2.0 * PI * turns as f64)).norm() < 1e-8);
    }
    // a loop around 0 leaves Li₁ unchanged
    let p = Path::loop_around(0.5, c(0.0, 0.0), 0.5, 1, 64).unwrap();
    assert!((continue_word(y, &p, 1e-12).unwrap() - li1).norm() < 1e-9);
}

#[test]
fn li2_against_nested_quadrature() {
    let path: Path = "0.5 -> 0.5+1i -> 2".parse().unwrap();
    let v = continue_word(w("xy"), &path, 1e-12).unwrap();
    let q = li2_by_quadrature(path.points());
    assert!((v - q).norm() < 1e-8, "{v} vs {q}");
    assert!((v - c(2.46740110027233965471, 2.17758609030360213050)).norm() < 1e-9);
}

#[test]
fn tighter_tolerance_reduces_error() {
    let path: Path = "0.5 -> 0.5+1i -> 2".parse().unwrap();
    let exact = c(2.46740110027233965471, 2.17758609030360213050);
    let errs: Vec<f64> = [1e-5, 1e-7, 1e-9, 1e-11]
        .iter()
        .map(|&tol| (continue_word(w("xy"), &path, tol).unwrap() - exact).norm())
        .collect();
    assert!(errs[3] < errs[0], "{errs:?}");
    assert!(errs[2] < errs[0] && errs[3] < errs[1], "{errs:?}");
}

#[test]
fn log_along_upper_path() {
    let path: Path = "0.5 -> 0.5i -> -0.5".parse().unwrap();
    let v = continue_extended(w("x"), &path, 1e-12).unwrap();
    assert!((v - c(0.5f64.ln(), PI)).norm() < 1e-12);
    let q = c(0.5f64.ln(), 0.0) + quad(path.points(), |t| 1.0 / t);
    assert!((v - q).norm() < 1e-10);
}

#[test]
fn extended_matches_series_on_trivial_path() {
    let p = EvalParams::default();
    let path = Path::new(0.3, vec![]).unwrap();
    for u in (0..=5).flat_map(Word::all_of_length) {
        let a = continue_extended(u, &path, 1e-12).unwrap();
        let b = mpl_extended(u, c(0.3, 0.0), &p).unwrap().value;
        assert!((a - b).norm() < 1e-14, "{u}");
        if u.in_h1() {
            assert_eq!(continue_word(u, &path, 1e-12).unwrap(), a);
        }
    }
}

#[test]
fn continued_extended_inside_disk_matches_series() {
    let p = EvalParams::default();
    let path: Path = "0.5 -> 0.2+0.3i -> -0.4+0.1i".parse().unwrap();
    for u in (1..=4).flat_map(Word::all_of_length) {
        let a = continue_extended(u, &path, 1e-12).unwrap();
        let b = mpl_extended(u, c(-0.4, 0.1), &p).unwrap().value;
        assert!((a - b).norm() < 1e-9, "{u}: {a} vs {b}");
    }
}

fn h1_words(max: usize) -> Vec<Word> {
    (1..=max).flat_map(Word::all_of_length).filter(Word::in_h1).collect()
}

#[test]
fn homotopy_invariance() {
    let words = h1_words(5);
    let a: Path = "0.5 -> 0.5+1i -> 2+0.5i".parse().unwrap();
    let b: Path = "0.5 -> 0.2+0.6i -> 1+1.5i -> 2.5+1i -> 2+0.5i".parse().unwrap();
    let va = continue_words(&words, &a, 1e-12).unwrap();
    let vb = continue_words(&words, &b, 1e-12).unwrap();
    for ((u, x), y) in words.iter().zip(&va).zip(&vb) {
        assert!((x - y).norm() < 1e-7, "{u}: {x} vs {y}");
    }
    // paths on opposite sides of 1 are not homotopic and differ for Li₁
    let lower: Path = "0.5 -> 0.5-1i -> 2+0.5i".parse().unwrap();
    let low = continue_word(w("y"), &lower, 1e-12).unwrap();
    let up = continue_word(w("y"), &a, 1e-12).unwrap();
    // lower then reversed upper encircles 1 counterclockwise
    assert!(((low - up) - c(0.0, -2.0 * PI)).norm() < 1e-8);
}

#[test]
fn composition_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let straight: Path = "0.3 -> 0.7".parse().unwrap();
    let bent: Path = "0.4 -> 0.6+0.8i -> 1.8+0.2i -> 1.5-0.7i".parse().unwrap();
    for u in h1_words(4) {
        let (p1, p2) = straight.split_at_fraction(0.5).unwrap();
        let r = compose_check(u, &p1, &p2, 1e-12).unwrap();
        assert!(r.abs_err < 1e-8, "{u}: {r:?}");
        for _ in 0..2 {
            let s = rng.gen_range(0.05..0.95);
            let (p1, p2) = bent.split_at_fraction(s).unwrap();
            let r = compose_check(u, &p1, &p2, 1e-12).unwrap();
            assert!(r.abs_err < 1e-8, "{u} split at {s}: {r:?}");
        }
    }
    // trivial second half
    let end = Path::from_points(vec![straight.end()]).unwrap();
    let r = compose_check(w("xyy"), &straight, &end, 1e-12).unwrap();
    assert_eq!(r.abs_err, 0.0);
}

#[test]
fn li1_additivity_matches_quadrature() {
    let path: Path = "0.4 -> 0.3+0.9i -> 1.7+0.4i".parse().unwrap();
    let (p1, p2) = path.split_at_fraction(0.37).unwrap();
    let r = compose_check(w("y"), &p1, &p2, 1e-12).unwrap();
    let q = c(-(0.6f64).ln(), 0.0) + quad(path.points(), |t| 1.0 / (1.0 - t));
    assert!((r.lhs - q).norm() < 1e-10);
    assert!((r.rhs - q).norm() < 1e-10);
}

#[test]
fn branch_state_tracks_endpoint() {
    for lit in ["0.5 -> 0.5+1i -> 2", "0.2 -> -1+1i -> -1-1i -> 0.3-0.2i", "0.9 -> 1.5+0.5i -> 1.5-0.5i -> 0.9"] {
        let path: Path = lit.parse().unwrap();
        let b = BranchState::at_base(path.base().unwrap()).along(&path);
        assert!((b.log_z.exp() - path.end()).norm() < 1e-10);
        assert!((b.log_one_minus_z.exp() - (1.0 - path.end())).norm() < 1e-10);
    }
    let loop1 = Path::loop_around(0.5, c(1.0, 0.0), 0.5, 1, 16).unwrap();
    let b = BranchState::at_base(0.5).along(&loop1);
    assert!((b.log_one_minus_z - c(0.5f64.ln(), 2.0 * PI)).norm() < 1e-12);
}

#[test]
fn lappo_bound_on_random_paths() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let words: Vec<Word> = (1..=6).flat_map(Word::all_of_length).collect();
    for _ in 0..20 {
        let mut pts = vec![c(rng.gen_range(0.2..0.8), 0.0)];
        for _ in 0..3 {
            pts.push(c(rng.gen_range(-1.5..2.5), rng.gen_range(-1.5..1.5)));
        }
        let Ok(path) = Path::from_points(pts) else { continue };
        if path.delta() < 0.05 {
            continue;
        }
        let vals = continue_anchored(&words, &path, 1e-12).unwrap();
        for (u, v) in words.iter().zip(vals) {
            assert!(v.norm() < lappo_bound(*u, &path), "{u}: {} vs {}", v.norm(), lappo_bound(*u, &path));
        }
    }
}

#[test]
fn inverse_argument_branch() {
    for z in [0.3, 0.4, 0.7] {
        for n in 1..=4 {
            let v = continue_at_inverse(Word::y_pow(n), z, 1e-12).unwrap();
            let e = li_at_inverse_ones(n, z).unwrap();
            assert!((v - e).norm() < 1e-9, "n = {n}, z = {z}: {v} vs {e}");
        }
    }
}

#[test]
fn invalid_paths_are_rejected() {
    assert!(Path::new(1.2, vec![]).is_err());
    assert!("0.5 -> 0".parse::<Path>().is_err());
    assert!("0.5 -> 1.5 -> 0.5+0i".parse::<Path>().is_err());
    let off = Path::from_points(vec![c(2.0, 1.0), c(3.0, 1.0)]).unwrap();
    assert!(continue_word(w("y"), &off, 1e-12).is_err());
    assert!(continue_word(w("yx"), &"0.5 -> 0.6".parse().unwrap(), 1e-12).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn prop_inside_disk_paths_agree_with_series(r in 0.1f64..0.8, t in -3.0f64..3.0, k in 1usize..5, bits in 0u64..16) {
        let target = Complex64::from_polar(r, t);
        let mid = Complex64::from_polar(0.45, t / 2.0);
        let path = Path::new(0.5, vec![mid, target]).unwrap();
        let u = Word::all_of_length(k).nth((bits % (1 << k)) as usize).unwrap().push_back(Letter::Y);
        let a = continue_word(u, &path, 1e-12).unwrap();
        let b = mpl_extended(u, target, &EvalParams::default()).unwrap().value;
        prop_assert!((a - b).norm() < 1e-9);
    }
}
