//! Schur polynomials, the integers `N_{i,j}`, the zeta expansion of the
//! Γ-ratio, Bernoulli numbers and the verification engine for the
//! functional relations of multiple polylogarithms and multiple zeta
//! values.

mod checks;
mod report;
mod schur;
mod suite;
mod verify;

pub use checks::{
    check_homotopy, check_monodromy, check_n_recurrence, check_path_composition, check_product_expansion,
    check_rho0_closed_form, check_shuffle_algebra, check_shuffle_homomorphism, sample_rationals,
};
pub use report::{relative_error, Params, VerificationReport, Verdict};
pub use schur::{
    bernoulli, gamma_ratio_coeff, gamma_ratio_series, n_coeff, n_coeff_general, n_table, product_expand_check,
    schur_p, ProductExpansionReport, ZetaSequence, EULER_GAMMA,
};
pub use suite::{run_items, suite_items, summarize, Check, SuiteItem, SuiteReport, Tagged};
pub use verify::{
    zeta_even_closed_form, Case, IdentityId, Mzv0InftyVariant, Verifier, TOL_C01, TOL_C0INFTY, TOL_HYPERGEOMETRIC,
    TOL_MZV, TOL_SERIES,
};
