use std::process::{Command, Output};

use hypkz::continuation::{continue_extended, Path};
use hypkz::identities::{Case, IdentityId, Verifier};
use hypkz::series_eval::{gauss_2f1, mpl_extended, mzv, EvalParams};
use hypkz::Complex64;
use serde_json::Value;

fn hypkz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hypkz"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&o.stdout));
    })
}

fn complex(v: &Value) -> Complex64 {
    Complex64::new(v[0].as_f64().unwrap(), v[1].as_f64().unwrap())
}

fn tmp(name: &str) -> std::path::PathBuf {
    std::env::temp_dir().join(format!("hypkz-cli-{}-{name}", std::process::id()))
}

#[test]
fn eval_examples() {
    let o = hypkz(&["eval", "--index", "2", "--z", "0.5", "--json"]);
    assert_eq!(code(&o), 0);
    let v = complex(&json(&o)["value"]);
    assert!((v.re - 0.582_240_526_465_012_5).abs() < 1e-15);

    let o = hypkz(&["eval", "--index", "1", "--z", "0", "--json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(complex(&json(&o)["value"]), Complex64::new(0.0, 0.0));

    let o = hypkz(&["eval", "--word", "x", "--z", "0.5", "--json"]);
    assert_eq!(code(&o), 0);
    assert!((complex(&json(&o)["value"]).re + std::f64::consts::LN_2).abs() < 1e-15);
}

#[test]
fn results_match_library_calls_bit_for_bit() {
    let p = EvalParams::default();
    let z = Complex64::new(-0.3, 0.4);
    let o = hypkz(&["eval", "--word", "xxyxy", "--z", "-0.3+0.4i", "--json"]);
    let lib = mpl_extended("xxyxy".parse().unwrap(), z, &p).unwrap();
    assert_eq!(complex(&json(&o)["value"]), lib.value);
    assert_eq!(json(&o)["error_bound"].as_f64().unwrap(), lib.error_bound);

    let o = hypkz(&["mzv", "--index", "3,1", "--terms", "100000", "--json"]);
    let lib = mzv(&"3,1".parse().unwrap(), &p.with_mzv_terms(100_000)).unwrap();
    assert_eq!(complex(&json(&o)["value"]), lib.value);

    let o = hypkz(&["hyp", "--alpha", "0.1", "--beta", "0.2", "--gamma", "0.9", "--z", "0.3i", "--json"]);
    let c = |x: f64| Complex64::new(x, 0.0);
    let lib = gauss_2f1(c(0.1), c(0.2), c(0.9), Complex64::new(0.0, 0.3), p.series_terms).unwrap();
    assert_eq!(complex(&json(&o)["value"]), lib.value);

    let path = "0.5 -> 0.5+1i -> 2";
    let o = hypkz(&["continue", "--word", "xy", "--path", path, "--json"]);
    let lib = continue_extended("xy".parse().unwrap(), &path.parse::<Path>().unwrap(), 1e-12).unwrap();
    assert_eq!(complex(&json(&o)["value"]), lib);

    let o = hypkz(&["verify", "euler-inversion", "--k", "3", "--z", "0.25", "--json"]);
    let lib = Verifier::default().run(&Case::new(IdentityId::EulerInversion).k(3).z(c(0.25)));
    let r = &json(&o)[0];
    assert_eq!(complex(&r["lhs"]), lib.lhs);
    assert_eq!(complex(&r["rhs"]), lib.rhs);
}

#[test]
fn continuation_reaches_the_upper_branch() {
    let o = hypkz(&["continue", "--index", "1", "--path", "0.5 -> 0.5+1i -> 2", "--json"]);
    assert_eq!(code(&o), 0);
    let v = complex(&json(&o)["value"]);
    assert!(v.re.abs() < 1e-10 && (v.im - std::f64::consts::PI).abs() < 1e-10, "{v}");
}

#[test]
fn verify_examples_pass() {
    for args in [
        &["verify", "ohno-zagier", "--k", "1", "--l", "1", "--m", "0"][..],
        &["verify", "ohno-zagier", "--k", "0", "--l", "1", "--m", "1"],
        &["verify", "mzv0infty-n1odd", "--m", "3"],
        &["verify", "connection-01", "--alpha", "0.1", "--beta", "0.2", "--gamma", "0.9", "--z", "0.5"],
        &["verify", "theorem31", "--z", "0.3"],
    ] {
        let o = hypkz(args);
        assert_eq!(code(&o), 0, "{args:?}: {}", String::from_utf8_lossy(&o.stdout));
        assert!(String::from_utf8_lossy(&o.stdout).contains("pass"));
    }
}

#[test]
fn exit_codes() {
    // usage errors
    assert_eq!(code(&hypkz(&["verify", "no-such-identity"])), 2);
    assert_eq!(code(&hypkz(&["eval", "--index", "2", "--z", "0.5", "--bogus"])), 2);
    assert_eq!(code(&hypkz(&["eval", "--index", "2,a", "--z", "0.5"])), 2);
    assert_eq!(code(&hypkz(&["eval", "--index", "2", "--word", "xy", "--z", "0.5"])), 2);
    assert_eq!(code(&hypkz(&["eval", "--index", "2", "--z", "1+"])), 2);
    assert_eq!(code(&hypkz(&["continue", "--index", "1", "--path", "1.5 -> 2i"])), 2);
    assert_eq!(code(&hypkz(&["suite", "--max-weight", "9"])), 2);
    // domain errors
    assert_eq!(code(&hypkz(&["eval", "--index", "2", "--z", "1.5"])), 3);
    assert_eq!(code(&hypkz(&["mzv", "--index", "1,2"])), 3);
    assert_eq!(code(&hypkz(&["verify", "thm-mplrel01", "--z", "-0.5"])), 3);
    // a failing identity: the 0–∞ connection relation in the upper half plane
    assert_eq!(code(&hypkz(&["verify", "connection-0infty", "--z", "0.5+0.5i"])), 1);
    assert_eq!(code(&hypkz(&["verify", "connection-0infty", "--z", "0.5-0.5i"])), 0);
}

#[test]
fn verify_json_and_csv_files() {
    let path = tmp("verify.json");
    let o = hypkz(&["verify", "sum-formula", "--k", "4", "--n", "2", "--json", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    let r = &v[0];
    assert_eq!(r["id"], "sum-formula");
    assert_eq!(r["params"]["k"], "4");
    assert_eq!(r["verdict"], "pass");
    for key in ["abs_err", "rel_err", "tol"] {
        assert!(r[key].is_f64(), "{key}");
    }

    let o = hypkz(&["verify", "euler-zeta", "--k", "2", "--csv"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "id,params,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,tol,verdict,detail"
    );
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(row[0], "euler-zeta");
    assert_eq!(row[9], "pass");
}

#[test]
fn small_suite_passes_and_conforms_to_schema() {
    let path = tmp("suite.json");
    let o = hypkz(&["suite", "--max-weight", "4", "--jobs", "2", "--json", path.to_str().unwrap()]);
    let summary = String::from_utf8_lossy(&o.stderr);
    assert_eq!(code(&o), 0, "{summary}");
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    let items = v.as_array().unwrap();
    assert!(items.len() > 50);
    let mut criteria: Vec<u64> = items.iter().map(|r| r["criterion"].as_u64().unwrap()).collect();
    criteria.dedup();
    assert_eq!(criteria, (1..=11).collect::<Vec<_>>());
    for r in items {
        assert_eq!(r["verdict"], "pass", "{r}");
        assert!(r["lhs"].as_array().unwrap().len() == 2);
        assert!(r["id"].is_string() && r["params"].is_object());
    }
    assert!(summary.contains("criterion"));
}
