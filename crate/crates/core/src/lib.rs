//! Multiple polylogarithms of one variable, the shuffle algebra on two
//! letters, and the 2×2 representations of the formal KZ equation that
//! realise the Gauss hypergeometric system.
//!
//! The crate is split along the computation pipeline:
//!
//! * [`word_algebra`]: exact combinatorics on words in `x`, `y`.
//! * [`series_eval`]: nested-series evaluation of MPLs, MZVs, the
//!   `G`-sums of fixed weight/depth/height and the hypergeometric series.
//! * [`continuation`]: analytic continuation along polygonal paths.
//! * [`kz_matrix`]: exact word images under ρ₀, ρ₁, ρ∞, fundamental
//!   solutions and Γ-function connection matrices.
//! * [`identities`]: Schur polynomials, Bernoulli numbers and the
//!   verification engine for the functional relations.

pub mod continuation;
pub mod error;
pub mod identities;
pub mod kz_matrix;
pub mod series_eval;
pub mod word_algebra;

pub use error::{Error, Result};
pub use num_complex::Complex64;
