//! `hypkz`: evaluate multiple polylogarithms, MZVs and the Gauss
//! hypergeometric function, continue MPLs along paths and verify the
//! functional relations.

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hypkz::continuation::{continue_extended, parse_complex, Path};
use hypkz::identities::{
    run_items, suite_items, summarize, Case, IdentityId, SuiteReport, Verdict, VerificationReport, Verifier,
};
use hypkz::series_eval::{
    corollary_phi01_series, gauss_2f1, mpl_extended, mzv, theorem31_series, EvalParams, ParamSet, ValueWithError,
};
use hypkz::word_algebra::{MultiIndex, Word};
use hypkz::{Complex64, Error};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_DOMAIN: u8 = 3;

#[derive(Parser)]
#[command(name = "hypkz", version, about = "Multiple polylogarithms and the KZ form of the Gauss hypergeometric equation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Li(w; z) for a word or multi-index inside the unit disk
    Eval(EvalArgs),
    /// ζ(k₁,…,k_r) by the truncated nested sum
    Mzv(MzvArgs),
    /// ₂F₁(α, β; γ; z) or its MPL expansions
    Hyp(HypArgs),
    /// Li(w; z) continued along a polygonal path
    Continue(ContinueArgs),
    /// Checks one identity at one parameter tuple
    Verify(VerifyArgs),
    /// Runs the acceptance battery
    Suite(SuiteArgs),
}

#[derive(Args)]
struct Output {
    /// JSON output, to FILE if given
    #[arg(long, value_name = "FILE", num_args = 0..=1, conflicts_with = "csv")]
    json: Option<Option<PathBuf>>,
    /// CSV output, to FILE if given
    #[arg(long, value_name = "FILE", num_args = 0..=1)]
    csv: Option<Option<PathBuf>>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct WordArg {
    /// Multi-index such as 2,1
    #[arg(long, value_parser = parse_index)]
    index: Option<MultiIndex>,
    /// Word in x, y such as xxy (1 is the empty word)
    #[arg(long, value_parser = parse_word)]
    word: Option<Word>,
}

impl WordArg {
    fn word(&self) -> Word {
        match (&self.index, self.word) {
            (Some(i), _) => i.to_word(),
            (None, Some(w)) => w,
            (None, None) => unreachable!("clap requires one of the two"),
        }
    }
}

#[derive(Args)]
struct EvalArgs {
    #[command(flatten)]
    what: WordArg,
    #[arg(long, value_parser = parse_z, allow_hyphen_values = true)]
    z: Complex64,
    /// Number of power-series coefficients
    #[arg(long)]
    terms: Option<usize>,
    #[arg(long)]
    tol: Option<f64>,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct MzvArgs {
    #[arg(long, value_parser = parse_index)]
    index: MultiIndex,
    /// Outer summation limit
    #[arg(long)]
    terms: Option<u64>,
    #[command(flatten)]
    out: Output,
}

#[derive(Clone, Copy, ValueEnum)]
enum HypKind {
    /// The Gauss series
    Gauss,
    /// The MPL expansion of ₂F₁ at the origin
    Theorem31,
    /// The MPL expansion of the second local solution at the origin
    CorollaryPhi01,
}

#[derive(Args)]
struct HypArgs {
    #[arg(long, value_parser = parse_z, allow_hyphen_values = true)]
    alpha: Complex64,
    #[arg(long, value_parser = parse_z, allow_hyphen_values = true)]
    beta: Complex64,
    #[arg(long, value_parser = parse_z, allow_hyphen_values = true)]
    gamma: Complex64,
    #[arg(long, value_parser = parse_z, allow_hyphen_values = true)]
    z: Complex64,
    #[arg(long, value_enum, default_value = "gauss")]
    kind: HypKind,
    /// Series terms (gauss) or weight cutoff (MPL expansions)
    #[arg(long)]
    terms: Option<usize>,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct ContinueArgs {
    #[command(flatten)]
    what: WordArg,
    /// Path literal such as "0.5 -> 0.5+1i -> 2"
    #[arg(long, value_parser = parse_path, allow_hyphen_values = true)]
    path: Path,
    /// ODE tolerance
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct VerifyArgs {
    /// Identity id, e.g. ohno-zagier or mzv0infty-n1odd
    #[arg(value_parser = parse_id)]
    id: IdentityId,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    l: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_parser = parse_z, allow_hyphen_values = true)]
    z: Option<Complex64>,
    #[arg(long, value_parser = parse_z, allow_hyphen_values = true)]
    alpha: Option<Complex64>,
    #[arg(long, value_parser = parse_z, allow_hyphen_values = true)]
    beta: Option<Complex64>,
    #[arg(long, value_parser = parse_z, allow_hyphen_values = true)]
    gamma: Option<Complex64>,
    /// Weight cutoff of the hypergeometric series identities
    #[arg(long)]
    cutoff: Option<usize>,
    #[arg(long)]
    tol: Option<f64>,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct SuiteArgs {
    /// Weight cap of the battery (6 is the full battery)
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(2..=6))]
    max_weight: u64,
    /// Worker threads (0 uses every core)
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    #[command(flatten)]
    out: Output,
}

fn parse_z(s: &str) -> Result<Complex64, String> {
    parse_complex(s).map_err(|e| e.to_string())
}

fn parse_index(s: &str) -> Result<MultiIndex, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_word(s: &str) -> Result<Word, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_path(s: &str) -> Result<Path, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_id(s: &str) -> Result<IdentityId, String> {
    s.parse().map_err(|e: Error| {
        let ids: Vec<String> = IdentityId::all().iter().map(ToString::to_string).collect();
        format!("{e}; known ids: {}", ids.join(", "))
    })
}

/// Failures of a command: a library error or an I/O problem.
enum Failure {
    Lib(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.into())
    }
}

fn sink(file: &Option<PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match file {
        Some(p) => Box::new(File::create(p)?),
        None => Box::new(io::stdout().lock()),
    })
}

#[derive(Serialize)]
struct Value<'a> {
    what: &'a str,
    value: Complex64,
    #[serde(skip_serializing_if = "Option::is_none")]
    error_bound: Option<f64>,
}

fn emit_value(out: &Output, what: &str, value: Complex64, error_bound: Option<f64>) -> Result<(), Failure> {
    let v = Value { what, value, error_bound };
    if let Some(f) = &out.json {
        let mut w = sink(f)?;
        serde_json::to_writer_pretty(&mut w, &v)?;
        writeln!(w)?;
    } else if let Some(f) = &out.csv {
        let mut w = csv::Writer::from_writer(sink(f)?);
        w.write_record(["what", "re", "im", "error_bound"])?;
        let bound = error_bound.map(|b| b.to_string()).unwrap_or_default();
        w.write_record([what.to_string(), value.re.to_string(), value.im.to_string(), bound])?;
        w.flush()?;
    } else {
        let mut w = io::stdout().lock();
        write!(w, "{what} = {:.16e} {:+.16e}i", value.re, value.im)?;
        match error_bound {
            Some(b) => writeln!(w, "  (error bound {b:.3e})")?,
            None => writeln!(w)?,
        }
    }
    Ok(())
}

fn emit_with_error(out: &Output, what: &str, v: ValueWithError) -> Result<(), Failure> {
    emit_value(out, what, v.value, Some(v.error_bound))
}

fn emit_reports<T: Serialize>(
    out: &Output,
    reports: &[T],
    header: &[&str],
    records: &[Vec<String>],
    lines: &[String],
) -> Result<(), Failure> {
    if let Some(f) = &out.json {
        let mut w = sink(f)?;
        serde_json::to_writer_pretty(&mut w, reports)?;
        writeln!(w)?;
    } else if let Some(f) = &out.csv {
        let mut w = csv::Writer::from_writer(sink(f)?);
        w.write_record(header)?;
        for r in records {
            w.write_record(r)?;
        }
        w.flush()?;
    } else {
        let mut w = io::stdout().lock();
        for l in lines {
            writeln!(w, "{l}")?;
        }
    }
    Ok(())
}

fn exit_for(reports: &[&VerificationReport]) -> u8 {
    if reports.iter().any(|r| r.verdict == Verdict::Fail) {
        EXIT_FAIL
    } else if reports.iter().any(|r| r.verdict == Verdict::Error) {
        EXIT_DOMAIN
    } else {
        0
    }
}

fn eval_params(terms: Option<usize>, tol: Option<f64>) -> EvalParams {
    let mut p = EvalParams::default();
    if let Some(n) = terms {
        p = p.with_series_terms(n);
    }
    if let Some(t) = tol {
        p = p.with_tolerance(t);
    }
    p
}

fn cmd_eval(a: &EvalArgs) -> Result<u8, Failure> {
    let w = a.what.word();
    let v = mpl_extended(w, a.z, &eval_params(a.terms, a.tol))?;
    emit_with_error(&a.out, &format!("Li({w}; {})", a.z), v)?;
    Ok(0)
}

fn cmd_mzv(a: &MzvArgs) -> Result<u8, Failure> {
    let mut p = EvalParams::default();
    if let Some(m) = a.terms {
        p = p.with_mzv_terms(m);
    }
    let v = mzv(&a.index, &p)?;
    emit_with_error(&a.out, &format!("zeta({})", a.index), v)?;
    Ok(0)
}

fn cmd_hyp(a: &HypArgs) -> Result<u8, Failure> {
    let ps = ParamSet::new(a.alpha, a.beta, a.gamma);
    let p = EvalParams::default();
    let (label, v) = match a.kind {
        HypKind::Gauss => ("2F1", gauss_2f1(a.alpha, a.beta, a.gamma, a.z, a.terms.unwrap_or(p.series_terms))?),
        HypKind::Theorem31 => ("2F1 (MPL expansion)", theorem31_series(&ps, a.z, a.terms.unwrap_or(40), &p)?),
        HypKind::CorollaryPhi01 => ("phi01 (MPL expansion)", corollary_phi01_series(&ps, a.z, a.terms.unwrap_or(40), &p)?),
    };
    emit_with_error(&a.out, &format!("{label}({}, {}; {}; {})", a.alpha, a.beta, a.gamma, a.z), v)?;
    Ok(0)
}

fn cmd_continue(a: &ContinueArgs) -> Result<u8, Failure> {
    let w = a.what.word();
    let v = continue_extended(w, &a.path, a.tol)?;
    emit_value(&a.out, &format!("Li({w}; {})", a.path.end()), v, None)?;
    Ok(0)
}

fn cmd_verify(a: &VerifyArgs) -> Result<u8, Failure> {
    let mut c = Case::new(a.id);
    c.k = a.k.unwrap_or(c.k);
    c.l = a.l.unwrap_or(c.l);
    c.m = a.m.unwrap_or(c.m);
    c.n = a.n.unwrap_or(c.n);
    c.z = a.z.unwrap_or(c.z);
    c.ps.alpha = a.alpha.unwrap_or(c.ps.alpha);
    c.ps.beta = a.beta.unwrap_or(c.ps.beta);
    c.ps.gamma = a.gamma.unwrap_or(c.ps.gamma);
    c.cutoff = a.cutoff.unwrap_or(c.cutoff);
    c.tol = a.tol.or(c.tol);
    let r = Verifier::default().run(&c);
    if let Some(d) = r.detail.as_ref().filter(|_| r.verdict == Verdict::Error) {
        eprintln!("hypkz: {} could not be evaluated: {d}", r.id);
    }
    let header = VerificationReport::csv_header();
    emit_reports(&a.out, std::slice::from_ref(&r), &header, &[r.csv_record().to_vec()], &[r.to_string()])?;
    Ok(exit_for(&[&r]))
}

fn cmd_suite(a: &SuiteArgs) -> Result<u8, Failure> {
    let items = suite_items(a.max_weight as usize);
    let verifier = Verifier::default();
    let start = std::time::Instant::now();
    let reports: Vec<SuiteReport> = run_items(&verifier, &items, a.jobs)?;
    let elapsed = start.elapsed().as_secs_f64();
    let mut header = vec!["criterion"];
    header.extend(VerificationReport::csv_header());
    let records: Vec<Vec<String>> = reports
        .iter()
        .map(|r| std::iter::once(r.criterion.to_string()).chain(r.report.csv_record()).collect())
        .collect();
    let mut lines: Vec<String> = reports.iter().map(|r| format!("[{:>2}] {}", r.criterion, r.report)).collect();
    lines.push(String::new());
    lines.push(format!("{:<10} {:>6} {:>6}  verdict", "criterion", "pass", "total"));
    for (c, (pass, total)) in summarize(&reports) {
        let verdict = if pass == total { "pass" } else { "FAIL" };
        lines.push(format!("{c:<10} {pass:>6} {total:>6}  {verdict}"));
    }
    lines.push(format!("{} items in {elapsed:.1} s", reports.len()));
    emit_reports(&a.out, &reports, &header, &records, &lines)?;
    if a.out.json.is_some() || a.out.csv.is_some() {
        for l in &lines[reports.len() + 1..] {
            eprintln!("{l}");
        }
    }
    let all: Vec<&VerificationReport> = reports.iter().map(|r| &r.report).collect();
    Ok(exit_for(&all))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Eval(a) => cmd_eval(a),
        Command::Mzv(a) => cmd_mzv(a),
        Command::Hyp(a) => cmd_hyp(a),
        Command::Continue(a) => cmd_continue(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Suite(a) => cmd_suite(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Lib(e)) => {
            eprintln!("hypkz: {e}");
            ExitCode::from(match e {
                Error::Parse(_) | Error::InvalidIndex(_) => EXIT_USAGE,
                _ => EXIT_DOMAIN,
            })
        }
        Err(Failure::Io(e)) => {
            eprintln!("hypkz: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
