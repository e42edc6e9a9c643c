use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("argument {z} lies outside the convergence disk |z| < {radius}")]
    OutsideDisk { z: Complex64, radius: f64 },

    #[error("index ({0}) is not admissible: the first entry must be at least 2")]
    NotAdmissible(String),

    #[error("invalid multi-index: {0}")]
    InvalidIndex(String),

    #[error("word {0} is not in h1 (it must be empty or end in y)")]
    NotInH1(String),

    #[error("logarithmic singularity: {0}")]
    LogSingularity(String),

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("ODE integration failed: {0}")]
    Integration(String),

    #[error("Gamma function pole at {0}")]
    GammaPole(Complex64),

    #[error("degenerate parameters: {0}")]
    Degenerate(String),

    #[error("parameters outside the convergence regime: {0}")]
    RegimeViolation(String),

    #[error("pole of the hypergeometric series: {0}")]
    SeriesPole(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("domain error: {0}")]
    Domain(String),
}
