use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use serde::ser::SerializeTuple;
use serde::{Serialize, Serializer};

use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// The identity could not be evaluated (domain violation, degenerate
    /// parameters, …); the reason is in the report.
    Error,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Error => "error",
        })
    }
}

fn complex_pair<S: Serializer>(z: &Complex64, s: S) -> std::result::Result<S::Ok, S::Error> {
    let mut t = s.serialize_tuple(2)?;
    t.serialize_element(&z.re)?;
    t.serialize_element(&z.im)?;
    t.end()
}

/// Outcome of checking one identity at one parameter tuple.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub id: String,
    pub params: BTreeMap<String, String>,
    #[serde(serialize_with = "complex_pair")]
    pub lhs: Complex64,
    #[serde(serialize_with = "complex_pair")]
    pub rhs: Complex64,
    pub abs_err: f64,
    pub rel_err: f64,
    pub tol: f64,
    pub verdict: Verdict,
    /// Failure reason, or extra information about the check.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// `|a − b| / max(|a|, |b|)`, zero when both vanish.
pub fn relative_error(a: Complex64, b: Complex64) -> f64 {
    let d = (a - b).norm();
    let s = a.norm().max(b.norm());
    if d == 0.0 {
        0.0
    } else {
        d / s
    }
}

impl VerificationReport {
    /// A report comparing `lhs` with `rhs`; the verdict is `pass` exactly
    /// when `abs_err ≤ tol` or `rel_err ≤ tol`.
    pub fn compare(id: &str, params: Params, lhs: Complex64, rhs: Complex64, tol: f64) -> VerificationReport {
        let abs_err = (lhs - rhs).norm();
        let rel_err = relative_error(lhs, rhs);
        VerificationReport::with_errors(id, params, lhs, rhs, abs_err, rel_err, tol)
    }

    /// A report with precomputed error measures.
    pub fn with_errors(
        id: &str,
        params: Params,
        lhs: Complex64,
        rhs: Complex64,
        abs_err: f64,
        rel_err: f64,
        tol: f64,
    ) -> VerificationReport {
        let verdict = if abs_err <= tol || rel_err <= tol { Verdict::Pass } else { Verdict::Fail };
        VerificationReport {
            id: id.to_string(),
            params: params.0,
            lhs,
            rhs,
            abs_err,
            rel_err,
            tol,
            verdict,
            detail: None,
        }
    }

    /// A report for an identity that could not be evaluated.
    pub fn error(id: &str, params: Params, tol: f64, err: &Error) -> VerificationReport {
        let nan = Complex64::new(f64::NAN, f64::NAN);
        VerificationReport {
            id: id.to_string(),
            params: params.0,
            lhs: nan,
            rhs: nan,
            abs_err: f64::NAN,
            rel_err: f64::NAN,
            tol,
            verdict: Verdict::Error,
            detail: Some(err.to_string()),
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> VerificationReport {
        self.detail = Some(detail.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// `k=1;l=1;m=0`
    pub fn params_string(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(";")
    }

    pub fn csv_header() -> [&'static str; 11] {
        [
            "id", "params", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "abs_err", "rel_err", "tol", "verdict", "detail",
        ]
    }

    /// The fields of [`csv_header`](Self::csv_header) as strings.
    pub fn csv_record(&self) -> [String; 11] {
        [
            self.id.clone(),
            self.params_string(),
            self.lhs.re.to_string(),
            self.lhs.im.to_string(),
            self.rhs.re.to_string(),
            self.rhs.im.to_string(),
            self.abs_err.to_string(),
            self.rel_err.to_string(),
            self.tol.to_string(),
            self.verdict.to_string(),
            self.detail.clone().unwrap_or_default(),
        ]
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<18} {:<28} lhs = {:.12e}{:+.3e}i  rhs = {:.12e}{:+.3e}i  abs = {:.2e}  rel = {:.2e}  tol = {:.0e}  {}",
            self.id,
            self.params_string(),
            self.lhs.re,
            self.lhs.im,
            self.rhs.re,
            self.rhs.im,
            self.abs_err,
            self.rel_err,
            self.tol,
            self.verdict
        )?;
        if let Some(d) = &self.detail {
            write!(f, "  ({d})")?;
        }
        Ok(())
    }
}

/// Ordered parameter tuple of a report.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Params(pub BTreeMap<String, String>);

impl Params {
    pub fn new() -> Params {
        Params::default()
    }

    pub fn with(mut self, name: &str, value: impl fmt::Display) -> Params {
        self.0.insert(name.to_string(), value.to_string());
        self
    }
}
