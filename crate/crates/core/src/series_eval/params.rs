use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Truncation controls shared by the series evaluators.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalParams {
    /// Number of power-series coefficients kept inside the unit disk.
    pub series_terms: usize,
    /// Outer summation limit for multiple zeta values.
    pub mzv_terms: u64,
    pub tolerance: f64,
}

impl Default for EvalParams {
    fn default() -> Self {
        EvalParams {
            series_terms: 256,
            mzv_terms: 10_000_000,
            tolerance: 1e-9,
        }
    }
}

impl EvalParams {
    pub fn with_series_terms(mut self, n: usize) -> Self {
        self.series_terms = n;
        self
    }

    pub fn with_mzv_terms(mut self, m: u64) -> Self {
        self.mzv_terms = m;
        self
    }

    pub fn with_tolerance(mut self, tol: f64) -> Self {
        self.tolerance = tol;
        self
    }
}

/// Parameters `(α, β, γ)` of the Gauss hypergeometric equation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParamSet {
    pub alpha: Complex64,
    pub beta: Complex64,
    pub gamma: Complex64,
}

impl ParamSet {
    pub fn new(alpha: Complex64, beta: Complex64, gamma: Complex64) -> ParamSet {
        ParamSet { alpha, beta, gamma }
    }

    pub fn real(alpha: f64, beta: f64, gamma: f64) -> ParamSet {
        ParamSet::new(alpha.into(), beta.into(), gamma.into())
    }

    /// `p = 1 − γ`
    pub fn p(&self) -> Complex64 {
        1.0 - self.gamma
    }

    /// `q = α + β + 1 − γ`
    pub fn q(&self) -> Complex64 {
        self.alpha + self.beta + 1.0 - self.gamma
    }

    /// `r = (α + 1 − γ)(β + 1 − γ) = αβ + pq`
    pub fn r(&self) -> Complex64 {
        (self.alpha + 1.0 - self.gamma) * (self.beta + 1.0 - self.gamma)
    }

    /// `|p|, |α+1−γ|, |β+1−γ|, |q|` all below `1/2`.
    pub fn convergence_regime(&self) -> bool {
        [
            self.p(),
            self.alpha + 1.0 - self.gamma,
            self.beta + 1.0 - self.gamma,
            self.q(),
        ]
        .iter()
        .all(|v| v.norm() < 0.5)
    }

    /// `α, β, γ, γ−α−β` all non-integers.
    pub fn is_generic(&self) -> bool {
        [
            self.alpha,
            self.beta,
            self.gamma,
            self.gamma - self.alpha - self.beta,
        ]
        .iter()
        .all(|v| !is_integer(*v))
    }

    /// The parameters `(α+1−γ, β+1−γ, 2−γ)` of the solution with exponent
    /// `1 − γ` at the origin.
    pub fn shifted(&self) -> ParamSet {
        ParamSet::new(
            self.alpha + 1.0 - self.gamma,
            self.beta + 1.0 - self.gamma,
            2.0 - self.gamma,
        )
    }
}

pub(crate) fn is_integer(v: Complex64) -> bool {
    v.im.abs() < 1e-12 && (v.re - v.re.round()).abs() < 1e-12
}

/// A computed value together with a bound on its truncation error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ValueWithError {
    pub value: Complex64,
    pub error_bound: f64,
}

impl ValueWithError {
    pub fn new(value: Complex64, error_bound: f64) -> ValueWithError {
        ValueWithError { value, error_bound }
    }

    pub fn exact(value: Complex64) -> ValueWithError {
        ValueWithError::new(value, 0.0)
    }
}

impl std::ops::Add for ValueWithError {
    type Output = ValueWithError;
    fn add(self, o: ValueWithError) -> ValueWithError {
        ValueWithError::new(self.value + o.value, self.error_bound + o.error_bound)
    }
}

impl std::ops::Mul<Complex64> for ValueWithError {
    type Output = ValueWithError;
    fn mul(self, c: Complex64) -> ValueWithError {
        ValueWithError::new(self.value * c, self.error_bound * c.norm())
    }
}
