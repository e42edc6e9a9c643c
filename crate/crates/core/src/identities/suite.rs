use std::collections::BTreeMap;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use super::checks::{
    check_homotopy, check_monodromy, check_n_recurrence, check_path_composition, check_product_expansion,
    check_rho0_closed_form, check_shuffle_algebra, check_shuffle_homomorphism,
};
use super::report::VerificationReport;
use super::verify::{Case, IdentityId, Mzv0InftyVariant, Verifier};
use crate::error::{Error, Result};

/// The structural checks of the battery.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Check {
    ShuffleAlgebra(usize),
    Rho0ClosedForm(usize),
    ShuffleHomomorphism(usize),
    Monodromy,
    PathComposition(usize),
    Homotopy(usize),
    ProductExpansion(usize),
    NRecurrence(usize),
}

impl Check {
    pub fn run(&self) -> VerificationReport {
        match *self {
            Check::ShuffleAlgebra(w) => check_shuffle_algebra(w),
            Check::Rho0ClosedForm(w) => check_rho0_closed_form(w),
            Check::ShuffleHomomorphism(w) => check_shuffle_homomorphism(w),
            Check::Monodromy => check_monodromy(),
            Check::PathComposition(w) => check_path_composition(w),
            Check::Homotopy(w) => check_homotopy(w),
            Check::ProductExpansion(d) => check_product_expansion(d),
            Check::NRecurrence(n) => check_n_recurrence(n),
        }
    }
}

/// One item of the battery, tagged with the acceptance criterion it
/// belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum SuiteItem {
    Identity(Case),
    Check(Check),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tagged {
    pub criterion: u8,
    pub item: SuiteItem,
}

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// The acceptance battery with weights capped at `max_weight` (6 gives the
/// full battery).
pub fn suite_items(max_weight: usize) -> Vec<Tagged> {
    let w = max_weight.max(2);
    let mut out = Vec::new();
    let mut push = |criterion: u8, item: SuiteItem| out.push(Tagged { criterion, item });
    let id = |c: Case| SuiteItem::Identity(c);
    let chk = SuiteItem::Check;

    push(1, chk(Check::ShuffleAlgebra(w.min(5))));
    push(2, chk(Check::Rho0ClosedForm(w + 2)));
    for x in [0.1, 0.3, 0.5] {
        push(3, id(Case::new(IdentityId::Theorem31).z(real(x))));
        push(3, id(Case::new(IdentityId::CorollaryPhi01).z(real(x))));
    }
    push(4, chk(Check::ShuffleHomomorphism(w)));
    push(5, chk(Check::Monodromy));
    push(5, chk(Check::PathComposition(w.min(4))));
    push(5, chk(Check::Homotopy(w.min(5))));

    let triples: Vec<(usize, usize, usize)> = (0..=w / 2)
        .flat_map(|m| (0..=w - 2 * m).flat_map(move |l| (0..=w - 2 * m - l).map(move |k| (k, l, m))))
        .filter(|&(k, l, m)| k + l + m > 0)
        .collect();
    for x in [0.3, 0.5, 0.7] {
        for &(k, l, m) in &triples {
            push(6, id(Case::new(IdentityId::ThmMplrel01).klm(k, l, m).z(real(x)).tol(1e-5)));
        }
    }

    for &(k, l, m) in &triples {
        push(7, id(Case::new(IdentityId::OhnoZagier).klm(k, l, m)));
    }
    for k in 1..=w {
        push(7, id(Case::new(IdentityId::EulerInversion).k(k).z(real(0.5)).tol(1e-4)));
        push(7, id(Case::new(IdentityId::EulerZeta).k(k)));
        for n in 1..k {
            for x in [0.5, 1.0] {
                push(7, id(Case::new(IdentityId::SumFormula).k(k).n(n).z(real(x)).tol(1e-4)));
            }
        }
    }

    for m in (2..=8).step_by(2).filter(|&m| m <= w + 2) {
        push(8, id(Case::new(IdentityId::ZetaEven).m(m)));
    }

    for m in 2..=w {
        let v = if m % 2 == 1 {
            [Mzv0InftyVariant::N1Odd, Mzv0InftyVariant::N2Odd]
        } else {
            [Mzv0InftyVariant::N1Even, Mzv0InftyVariant::N2Even]
        };
        for variant in v {
            push(9, id(Case::new(IdentityId::Mzv0Infty(variant)).m(m)));
        }
    }
    for m in 1..=w.min(4) {
        push(9, id(Case::new(IdentityId::Rel0Infty1).m(m).z(real(0.4)).tol(1e-5)));
        for n in [1, 2] {
            push(9, id(Case::new(IdentityId::Rel0Infty2).m(m).n(n).z(real(0.4)).tol(1e-5)));
        }
    }

    push(10, id(Case::new(IdentityId::Connection01)));
    push(10, id(Case::new(IdentityId::Connection0Infty)));

    push(11, chk(Check::ProductExpansion(6)));
    push(11, chk(Check::NRecurrence(20)));
    out
}

/// A report tagged with its acceptance criterion.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub criterion: u8,
    #[serde(flatten)]
    pub report: VerificationReport,
}

/// Runs the items on a pool of `jobs` threads (all cores for `0`),
/// preserving their order.
pub fn run_items(verifier: &Verifier, items: &[Tagged], jobs: usize) -> Result<Vec<SuiteReport>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Domain(format!("cannot start worker pool: {e}")))?;
    Ok(pool.install(|| {
        items
            .par_iter()
            .map(|t| SuiteReport {
                criterion: t.criterion,
                report: match &t.item {
                    SuiteItem::Identity(c) => verifier.run(c),
                    SuiteItem::Check(c) => c.run(),
                },
            })
            .collect()
    }))
}

/// Pass and total counts by criterion.
pub fn summarize(reports: &[SuiteReport]) -> BTreeMap<u8, (usize, usize)> {
    let mut out = BTreeMap::new();
    for r in reports {
        let e = out.entry(r.criterion).or_insert((0, 0));
        e.0 += usize::from(r.report.passed());
        e.1 += 1;
    }
    out
}
