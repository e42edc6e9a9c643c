//! Floating-point evaluation inside the unit disk: multiple polylogarithms
//! by nested power series, their log-regularized extension to all words,
//! multiple zeta values, the sums `Gᵢ(k, n, s; z)` and the Gauss
//! hypergeometric function with its local solutions.

mod gsum;
mod hypergeom;
mod mpl;
mod mzv;
mod params;
pub mod power;

pub use gsum::{g_bar, g_sum, g_sum_cached, GTable};
pub use hypergeom::{
    boundedness_constant, corollary_phi01_series, corollary_phi01_series_with, gauss_2f1,
    gauss_2f1_with_derivative, hypergeom_2f1, local_solution, local_solution_theta,
    theorem31_series, theorem31_series_with, Singularity,
};
pub use mpl::{extended_with, mpl, mpl_extended, mpl_extended_lin, mpl_lin, mpl_word, mpl_word_theta};
pub use mzv::{mzv, MzvCache};
pub use params::{EvalParams, ParamSet, ValueWithError};
pub(crate) use params::is_integer;
