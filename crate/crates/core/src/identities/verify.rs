use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::report::{relative_error, Params, VerificationReport};
use super::schur::{bernoulli, gamma_ratio_coeff, ZetaSequence};
use crate::continuation::{continue_words, Path};
use crate::error::{Error, Result};
use crate::kz_matrix::{connection_matrix, phi_matrix, phi_matrix_along, ConnectionTag};
use crate::series_eval::{
    corollary_phi01_series, g_sum_cached, hypergeom_2f1, local_solution, mpl, theorem31_series, EvalParams, GTable,
    MzvCache, ParamSet, Singularity,
};
use crate::word_algebra::{MultiIndex, Word};

/// Tolerance for identities evaluated by power series and continuation.
pub const TOL_SERIES: f64 = 1e-6;
/// Tolerance for identities that involve multiple zeta values of depth ≥ 2.
pub const TOL_MZV: f64 = 1e-4;
/// Tolerance for the hypergeometric series identities.
pub const TOL_HYPERGEOMETRIC: f64 = 1e-8;
/// Tolerance for the full connection matrices.
pub const TOL_C01: f64 = 1e-6;
pub const TOL_C0INFTY: f64 = 1e-5;

const ODE_TOL: f64 = 1e-12;
const MAX_SERIES_TERMS: usize = 200_000;

/// The four relations among multiple zeta values obtained from the
/// connection between `0` and `∞`, indexed by `n ∈ {1, 2}` and the parity
/// of `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mzv0InftyVariant {
    N1Odd,
    N1Even,
    N2Odd,
    N2Even,
}

impl Mzv0InftyVariant {
    pub const ALL: [Mzv0InftyVariant; 4] = [
        Mzv0InftyVariant::N1Odd,
        Mzv0InftyVariant::N1Even,
        Mzv0InftyVariant::N2Odd,
        Mzv0InftyVariant::N2Even,
    ];

    pub fn odd(self) -> bool {
        matches!(self, Mzv0InftyVariant::N1Odd | Mzv0InftyVariant::N2Odd)
    }
}

impl fmt::Display for Mzv0InftyVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mzv0InftyVariant::N1Odd => "n1odd",
            Mzv0InftyVariant::N1Even => "n1even",
            Mzv0InftyVariant::N2Odd => "n2odd",
            Mzv0InftyVariant::N2Even => "n2even",
        })
    }
}

/// Identifiers of the checkable relations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IdentityId {
    ThmMplrel01,
    OhnoZagier,
    SumFormula,
    EulerInversion,
    EulerZeta,
    ZetaEven,
    Rel0Infty1,
    Rel0Infty2,
    Mzv0Infty(Mzv0InftyVariant),
    Connection01,
    Connection0Infty,
    Theorem31,
    CorollaryPhi01,
}

impl IdentityId {
    pub fn all() -> Vec<IdentityId> {
        let mut v = vec![
            IdentityId::ThmMplrel01,
            IdentityId::OhnoZagier,
            IdentityId::SumFormula,
            IdentityId::EulerInversion,
            IdentityId::EulerZeta,
            IdentityId::ZetaEven,
            IdentityId::Rel0Infty1,
            IdentityId::Rel0Infty2,
        ];
        v.extend(Mzv0InftyVariant::ALL.map(IdentityId::Mzv0Infty));
        v.extend([
            IdentityId::Connection01,
            IdentityId::Connection0Infty,
            IdentityId::Theorem31,
            IdentityId::CorollaryPhi01,
        ]);
        v
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdentityId::ThmMplrel01 => f.write_str("thm-mplrel01"),
            IdentityId::OhnoZagier => f.write_str("ohno-zagier"),
            IdentityId::SumFormula => f.write_str("sum-formula"),
            IdentityId::EulerInversion => f.write_str("euler-inversion"),
            IdentityId::EulerZeta => f.write_str("euler-zeta"),
            IdentityId::ZetaEven => f.write_str("zeta-even"),
            IdentityId::Rel0Infty1 => f.write_str("rel0infty-1"),
            IdentityId::Rel0Infty2 => f.write_str("rel0infty-2"),
            IdentityId::Mzv0Infty(v) => write!(f, "mzv0infty-{v}"),
            IdentityId::Connection01 => f.write_str("connection-01"),
            IdentityId::Connection0Infty => f.write_str("connection-0infty"),
            IdentityId::Theorem31 => f.write_str("theorem31"),
            IdentityId::CorollaryPhi01 => f.write_str("corollary-phi01"),
        }
    }
}

impl FromStr for IdentityId {
    type Err = Error;
    fn from_str(s: &str) -> Result<IdentityId> {
        IdentityId::all()
            .into_iter()
            .find(|id| id.to_string() == s)
            .ok_or_else(|| Error::Parse(format!("unknown identity {s:?}")))
    }
}

/// One identity at one parameter tuple. Fields an identity does not use
/// are ignored.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Case {
    pub id: IdentityId,
    pub k: usize,
    pub l: usize,
    pub m: usize,
    pub n: usize,
    pub z: Complex64,
    pub ps: ParamSet,
    /// Weight cutoff of the hypergeometric series identities.
    pub cutoff: usize,
    /// Overrides the default tolerance of the identity.
    pub tol: Option<f64>,
}

impl Case {
    /// `k = l = n = 1`, `m = 0`, `z = 0.5` (`0.5 − 0.5i` for the `0`–`∞`
    /// connection), `(α, β, γ) = (0.1, 0.2, 0.9)`, cutoff 40.
    pub fn new(id: IdentityId) -> Case {
        let z = match id {
            IdentityId::Connection0Infty => Complex64::new(0.5, -0.5),
            _ => Complex64::new(0.5, 0.0),
        };
        Case {
            id,
            k: 1,
            l: 1,
            m: 0,
            n: 1,
            z,
            ps: ParamSet::real(0.1, 0.2, 0.9),
            cutoff: 40,
            tol: None,
        }
    }

    pub fn klm(mut self, k: usize, l: usize, m: usize) -> Case {
        self.k = k;
        self.l = l;
        self.m = m;
        self
    }

    pub fn k(mut self, k: usize) -> Case {
        self.k = k;
        self
    }

    pub fn m(mut self, m: usize) -> Case {
        self.m = m;
        self
    }

    pub fn n(mut self, n: usize) -> Case {
        self.n = n;
        self
    }

    pub fn z(mut self, z: impl Into<Complex64>) -> Case {
        self.z = z.into();
        self
    }

    pub fn ps(mut self, ps: ParamSet) -> Case {
        self.ps = ps;
        self
    }

    pub fn cutoff(mut self, k: usize) -> Case {
        self.cutoff = k;
        self
    }

    pub fn tol(mut self, tol: f64) -> Case {
        self.tol = Some(tol);
        self
    }
}

fn fmt_z(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else {
        format!("{}{:+}i", z.re, z.im)
    }
}

fn real_in_unit_interval(z: Complex64) -> Result<f64> {
    if z.im != 0.0 || !(z.re > 0.0 && z.re < 1.0) {
        return Err(Error::Domain(format!("z = {z} must be real in (0, 1)")));
    }
    Ok(z.re)
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

fn factorial(n: usize) -> f64 {
    (1..=n).fold(1.0, |acc, i| acc * i as f64)
}

fn index(first: u32, ones: usize) -> MultiIndex {
    MultiIndex::with_ones(first, ones)
}

/// `ζ(2k) = (−1)^{k+1} B_{2k} (2π)^{2k} / (2·(2k)!)`.
pub fn zeta_even_closed_form(m: usize) -> f64 {
    let b = bernoulli(m).to_f64().unwrap_or(f64::NAN);
    let sign = if (m / 2) % 2 == 1 { 1.0 } else { -1.0 };
    sign * b * (2.0 * PI).powi(m as i32) / (2.0 * factorial(m))
}

/// Evaluates identities, sharing one cache of multiple zeta values.
pub struct Verifier {
    pub evalp: EvalParams,
    cache: MzvCache,
}

impl Default for Verifier {
    fn default() -> Self {
        Verifier::new(EvalParams::default())
    }
}

impl Verifier {
    pub fn new(evalp: EvalParams) -> Verifier {
        Verifier { evalp, cache: MzvCache::new() }
    }

    pub fn cache(&self) -> &MzvCache {
        &self.cache
    }

    /// `ζ(k₁, …, k_r)` from the nested-sum oracle.
    pub fn zeta(&self, idx: &MultiIndex) -> Result<f64> {
        Ok(self.cache.get(idx, &self.evalp)?.value.re)
    }

    fn zeta1(&self, n: usize) -> Result<f64> {
        self.zeta(&index(n as u32, 0))
    }

    /// The sequence `(0, ζ(2)/2, …)` to the given order (at least 2).
    pub fn zeta_sequence(&self, order: usize) -> Result<ZetaSequence> {
        ZetaSequence::zeta(order.max(2), &self.evalp, &self.cache)
    }

    fn series_params(&self, points: &[f64]) -> EvalParams {
        let r = points.iter().fold(0.0f64, |a, b| a.max(b.abs()));
        let need = if r > 0.0 { (45.0 / -r.ln()).ceil() as usize } else { 1 };
        self.evalp
            .with_series_terms(need.max(self.evalp.series_terms).min(MAX_SERIES_TERMS))
    }

    fn table(&self, k_max: usize, z: f64) -> Result<GTable> {
        let pts = [Complex64::new(z, 0.0), Complex64::new(1.0 - z, 0.0)];
        GTable::build(k_max.max(1), &pts, &self.series_params(&[z, 1.0 - z]))
    }

    /// Runs one case and reports; evaluation errors give an `error` verdict.
    pub fn run(&self, case: &Case) -> VerificationReport {
        match case.id {
            IdentityId::ThmMplrel01 => self.verify_thm_mplrel01(case.k, case.l, case.m, case.z, case.tol),
            IdentityId::OhnoZagier => self.verify_ohno_zagier(case.k, case.l, case.m, case.tol),
            IdentityId::SumFormula => self.verify_sum_formula(case.k, case.n, case.z, case.tol),
            IdentityId::EulerInversion => self.verify_euler_inversion(case.k, case.z, case.tol),
            IdentityId::EulerZeta => self.verify_euler_zeta(case.k, case.tol),
            IdentityId::ZetaEven => self.verify_zeta_even(case.m),
            IdentityId::Rel0Infty1 => self.verify_rel0infty_1(case.m, case.z, case.tol),
            IdentityId::Rel0Infty2 => self.verify_rel0infty_2(case.m, case.n, case.z, case.tol),
            IdentityId::Mzv0Infty(v) => self.verify_mzv0infty(v, case.m, case.tol),
            IdentityId::Connection01 => self.verify_connection_full(ConnectionTag::C01, &case.ps, case.z, case.tol),
            IdentityId::Connection0Infty => {
                self.verify_connection_full(ConnectionTag::C0Infty, &case.ps, case.z, case.tol)
            }
            IdentityId::Theorem31 => self.verify_theorem31(&case.ps, case.z, case.cutoff, case.tol),
            IdentityId::CorollaryPhi01 => self.verify_corollary_phi01(&case.ps, case.z, case.cutoff, case.tol),
        }
    }

    fn finish(
        id: IdentityId,
        params: Params,
        tol: f64,
        sides: Result<(Complex64, Complex64)>,
    ) -> VerificationReport {
        let id = id.to_string();
        match sides {
            Ok((l, r)) => VerificationReport::compare(&id, params, l, r, tol),
            Err(e) => VerificationReport::error(&id, params, tol, &e),
        }
    }

    /// `Ḡ₀(k+l+2m, l+m, m; z) + Ḡ₀(k+l+2m, k+m, m; 1−z)
    ///  + Σ [Ḡ₀(k′+l′+2m′, l′+m′, m′; z)·Ḡ₀(k″+l″+2m″, k″+m″, m″; 1−z)
    ///       + Ḡ₁(k′+l′+2m′−1, l′+m′, m′; z)·G₁(k″+l″+2m″+1, k″+m″+1, m″+1; 1−z)]`
    /// against the coefficient of `pᵏqˡrᵐ` in the Γ-ratio, the sum running
    /// over `k′+k″ = k`, `l′+l″ = l`, `m′+m″ = m`.
    pub fn verify_thm_mplrel01(&self, k: usize, l: usize, m: usize, z: Complex64, tol: Option<f64>) -> VerificationReport {
        let params = Params::new().with("k", k).with("l", l).with("m", m).with("z", fmt_z(z));
        let sides = (|| {
            let w = k + l + 2 * m;
            if w == 0 {
                return Err(Error::Domain("k, l, m must not all vanish".into()));
            }
            let z = real_in_unit_interval(z)?;
            let t = self.table(w + 1, z)?;
            let g = |i: u8, k: usize, n: usize, s: usize, j: usize| t.get(i, k as i64, n as i64, s as i64, j);
            let gb = |i: u8, k: i64, n: i64, s: i64, j: usize| t.get(i, k, n, s, j) - t.get(i, k, n, s + 1, j);
            let (wi, li, ki, mi) = (w as i64, l as i64, k as i64, m as i64);
            let mut lhs = gb(0, wi, li + mi, mi, 0) + gb(0, wi, ki + mi, mi, 1);
            for k1 in 0..=k {
                for l1 in 0..=l {
                    for m1 in 0..=m {
                        let (k2, l2, m2) = (k - k1, l - l1, m - m1);
                        let w1 = (k1 + l1 + 2 * m1) as i64;
                        let w2 = k2 + l2 + 2 * m2;
                        let (l1, m1) = (l1 as i64, m1 as i64);
                        lhs += gb(0, w1, l1 + m1, m1, 0) * gb(0, w2 as i64, (k2 + m2) as i64, m2 as i64, 1);
                        lhs += gb(1, w1 - 1, l1 + m1, m1, 0) * g(1, w2 + 1, k2 + m2 + 1, m2 + 1, 1);
                    }
                }
            }
            let rhs = gamma_ratio_coeff(k, l, m, &self.zeta_sequence(w)?)?;
            Ok((lhs, Complex64::new(rhs, 0.0)))
        })();
        Self::finish(IdentityId::ThmMplrel01, params, tol.unwrap_or(TOL_SERIES), sides)
    }

    fn g_bar_at_one(&self, k: usize, n: usize, s: usize) -> Result<f64> {
        let one = Complex64::new(1.0, 0.0);
        let (k, n, s) = (k as i64, n as i64, s as i64);
        let a = g_sum_cached(0, k, n, s, one, &self.evalp, Some(&self.cache))?;
        let b = g_sum_cached(0, k, n, s + 1, one, &self.evalp, Some(&self.cache))?;
        Ok((a.value - b.value).re)
    }

    /// `Ḡ₀(k+l+2m, l+m, m; 1) = Ḡ₀(k+l+2m, k+m, m; 1)` = coefficient of
    /// `pᵏqˡrᵐ` in the Γ-ratio. The error is the larger of the two sides'
    /// deviations.
    pub fn verify_ohno_zagier(&self, k: usize, l: usize, m: usize, tol: Option<f64>) -> VerificationReport {
        let id = IdentityId::OhnoZagier.to_string();
        let params = Params::new().with("k", k).with("l", l).with("m", m);
        let tol = tol.unwrap_or(TOL_MZV);
        let sides = (|| {
            let w = k + l + 2 * m;
            if w == 0 {
                return Err(Error::Domain("k, l, m must not all vanish".into()));
            }
            let a = self.g_bar_at_one(w, l + m, m)?;
            let b = self.g_bar_at_one(w, k + m, m)?;
            let rhs = gamma_ratio_coeff(k, l, m, &self.zeta_sequence(w)?)?;
            Ok((a, b, rhs))
        })();
        match sides {
            Ok((a, b, rhs)) => {
                let (a, b, r) = (Complex64::new(a, 0.0), Complex64::new(b, 0.0), Complex64::new(rhs, 0.0));
                let abs = (a - r).norm().max((b - r).norm());
                let rel = relative_error(a, r).max(relative_error(b, r));
                VerificationReport::with_errors(&id, params, a, r, abs, rel, tol)
                    .with_detail(format!("symmetric side {:.12e}", b.re))
            }
            Err(e) => VerificationReport::error(&id, params, tol, &e),
        }
    }

    /// `Σₛ G₀(k,n,s;z) + Σₛ G₀(k,k−n,s;1−z)
    ///  + Σ_{k′+k″=k, n′+n″=n} Σₛ G₁(k′,n′,s;z)·Σₛ G₁(k″,k″−n″,s;1−z) = ζ(k)`,
    /// and `Σₛ G₀(k,n,s;1) = ζ(k)` at `z = 1`.
    pub fn verify_sum_formula(&self, k: usize, n: usize, z: Complex64, tol: Option<f64>) -> VerificationReport {
        let params = Params::new().with("k", k).with("n", n).with("z", fmt_z(z));
        let at_one = z == Complex64::new(1.0, 0.0);
        let default_tol = if at_one && n >= 2 { TOL_MZV } else { TOL_SERIES };
        let sides = (|| {
            if !(k > n && n > 0) {
                return Err(Error::Domain(format!("need k > n > 0, got k = {k}, n = {n}")));
            }
            let rhs = self.zeta1(k)?;
            let (ki, ni) = (k as i64, n as i64);
            if at_one {
                let mut lhs = 0.0;
                for s in 1..=ki {
                    lhs += g_sum_cached(0, ki, ni, s, z, &self.evalp, Some(&self.cache))?.value.re;
                }
                return Ok((Complex64::new(lhs, 0.0), Complex64::new(rhs, 0.0)));
            }
            let z = real_in_unit_interval(z)?;
            let t = self.table(k, z)?;
            let gs = |i: u8, k: i64, n: i64, j: usize| (1..=k.max(0)).map(|s| t.get(i, k, n, s, j)).sum::<Complex64>();
            let mut lhs = gs(0, ki, ni, 0) + gs(0, ki, ki - ni, 1);
            for k1 in 0..=ki {
                for n1 in 0..=ni {
                    let (k2, n2) = (ki - k1, ni - n1);
                    lhs += gs(1, k1, n1, 0) * gs(1, k2, k2 - n2, 1);
                }
            }
            Ok((lhs, Complex64::new(rhs, 0.0)))
        })();
        Self::finish(IdentityId::SumFormula, params, tol.unwrap_or(default_tol), sides)
    }

    /// `Li_{k+1}(z) + Li_{2,1^{k−1}}(1−z) + Σ_{i=1}^{k} Liᵢ(z)·Li_{1^{k−i+1}}(1−z) = ζ(k+1)`.
    pub fn verify_euler_inversion(&self, k: usize, z: Complex64, tol: Option<f64>) -> VerificationReport {
        let params = Params::new().with("k", k).with("z", fmt_z(z));
        let sides = (|| {
            if k == 0 {
                return Err(Error::Domain("need k ≥ 1".into()));
            }
            let x = real_in_unit_interval(z)?;
            let ep = self.series_params(&[x, 1.0 - x]);
            let w = Complex64::new(1.0 - x, 0.0);
            let li = |idx: MultiIndex, at: Complex64| mpl(&idx, at, &ep).map(|v| v.value);
            let mut lhs = li(index(k as u32 + 1, 0), z)? + li(index(2, k - 1), w)?;
            for i in 1..=k {
                lhs += li(index(i as u32, 0), z)? * li(MultiIndex::ones(k - i + 1), w)?;
            }
            Ok((lhs, Complex64::new(self.zeta1(k + 1)?, 0.0)))
        })();
        Self::finish(IdentityId::EulerInversion, params, tol.unwrap_or(TOL_SERIES), sides)
    }

    /// `ζ(k+1, 1) = (k+1)/2·ζ(k+2) − ½ Σ_{i=1}^{k−1} ζ(i+1)ζ(k−i+1)`.
    pub fn verify_euler_zeta(&self, k: usize, tol: Option<f64>) -> VerificationReport {
        let params = Params::new().with("k", k);
        let sides = (|| {
            if k == 0 {
                return Err(Error::Domain("need k ≥ 1".into()));
            }
            let lhs = self.zeta(&index(k as u32 + 1, 1))?;
            let mut rhs = (k + 1) as f64 / 2.0 * self.zeta1(k + 2)?;
            for i in 1..k {
                rhs -= 0.5 * self.zeta1(i + 1)? * self.zeta1(k - i + 1)?;
            }
            Ok((Complex64::new(lhs, 0.0), Complex64::new(rhs, 0.0)))
        })();
        Self::finish(IdentityId::EulerZeta, params, tol.unwrap_or(TOL_MZV), sides)
    }

    /// `−2ζ(m) = Bₘ(2πi)ᵐ/m!` for even `m ≥ 2`. The tolerance is the
    /// oracle's error bound on `2ζ(m)` plus a few ulps of the closed form.
    pub fn verify_zeta_even(&self, m: usize) -> VerificationReport {
        let id = IdentityId::ZetaEven.to_string();
        let params = Params::new().with("m", m);
        if m < 2 || m % 2 == 1 {
            let e = Error::Domain(format!("m = {m} must be even and at least 2"));
            return VerificationReport::error(&id, params, 0.0, &e);
        }
        match self.cache.get(&index(m as u32, 0), &self.evalp) {
            Ok(v) => {
                let lhs = -2.0 * v.value.re;
                let b = bernoulli(m).to_f64().unwrap_or(f64::NAN);
                // (2πi)ᵐ = (−1)^{m/2}(2π)ᵐ
                let sign = if (m / 2) % 2 == 1 { -1.0 } else { 1.0 };
                let rhs = b * sign * (2.0 * PI).powi(m as i32) / factorial(m);
                let tol = 2.0 * v.error_bound + 4.0 * f64::EPSILON * rhs.abs();
                let (l, r) = (Complex64::new(lhs, 0.0), Complex64::new(rhs, 0.0));
                let abs = (l - r).norm();
                VerificationReport::with_errors(&id, params, l, r, abs, f64::INFINITY, tol)
            }
            Err(e) => VerificationReport::error(&id, params, 0.0, &e),
        }
    }

    /// `Li(w; 1/z)` for several `w ∈ h¹` on the branch reached through the
    /// upper half plane.
    fn li_inverse(&self, words: &[Word], z: f64) -> Result<Vec<Complex64>> {
        continue_words(words, &Path::to_inverse(z)?, ODE_TOL)
    }

    /// `logᵐ(1/z)/m! − Σ_{i<m} (Li_{m−i}(z) + (−1)^{m−i} Li_{m−i}(1/z)) logⁱ(1/z)/i!
    ///  = (−1)ᵐ B⁻ₘ (2πi)ᵐ/m!`, with `B⁻ₘ = (−1)ᵐBₘ` the Bernoulli numbers of
    /// `t/(eᵗ−1)`.
    pub fn verify_rel0infty_1(&self, m: usize, z: Complex64, tol: Option<f64>) -> VerificationReport {
        let params = Params::new().with("m", m).with("z", fmt_z(z));
        let sides = (|| {
            if m == 0 {
                return Err(Error::Domain("need m ≥ 1".into()));
            }
            let x = real_in_unit_interval(z)?;
            let ep = self.series_params(&[x]);
            let log = -x.ln();
            let words: Vec<Word> = (1..=m).map(|j| index(j as u32, 0).to_word()).collect();
            let at_inv = self.li_inverse(&words, x)?;
            let mut lhs = Complex64::new(log.powi(m as i32) / factorial(m), 0.0);
            for i in 0..m {
                let j = m - i;
                let li_z = mpl(&index(j as u32, 0), z, &ep)?.value;
                let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
                lhs -= (li_z + at_inv[j - 1] * sign) * (log.powi(i as i32) / factorial(i));
            }
            let b_plus = bernoulli(m).to_f64().unwrap_or(f64::NAN);
            let parity = if m % 2 == 0 { 1.0 } else { -1.0 };
            let b_minus = parity * b_plus;
            let rhs = Complex64::new(0.0, 2.0 * PI).powi(m as i32) * (parity * b_minus / factorial(m));
            Ok((lhs, rhs))
        })();
        Self::finish(IdentityId::Rel0Infty1, params, tol.unwrap_or(TOL_SERIES), sides)
    }

    /// The depth-`n` relation between `z` and `1/z`:
    ///
    /// ```text
    /// Σ_{i<m} [(−1)^{n+i+1} Li_{m−i,1ⁿ}(1/z) + (−1)^{n+i+1} Li_{m−i+1,1^{n−1}}(1/z)
    ///   + Σ_{j≤n} (−1)^{m+n−j−1} Li_{1^{n−j}}(1/z) Σ_{k≤j} C(m−i−1+j−k, m−i−1) G₁(m−i+j, k+1; z)]
    ///   · logⁱ(1/z)/i!
    /// ```
    /// `= Σ C(m₁+n₁, m₁)(−1)^{m₁} P_{m₁+n₁}(ζ) P_{m₂}(ζ) (−πi)^{m₃}/m₃! P_{n₂}(−ζ)`
    /// over `m₁+m₂+m₃ = m`, `n₁+n₂ = n`, where `G₁(w, d; z)` sums `Li` over all
    /// indices of weight `w` and depth `d`.
    pub fn verify_rel0infty_2(&self, m: usize, n: usize, z: Complex64, tol: Option<f64>) -> VerificationReport {
        let params = Params::new().with("m", m).with("n", n).with("z", fmt_z(z));
        let sides = (|| {
            if m == 0 || n == 0 {
                return Err(Error::Domain("need m ≥ 1 and n ≥ 1".into()));
            }
            let x = real_in_unit_interval(z)?;
            let log = -x.ln();
            let mut words = Vec::new();
            for i in 0..m {
                words.push(index((m - i) as u32, n).to_word());
                words.push(index((m - i + 1) as u32, n - 1).to_word());
            }
            for j in 0..n {
                words.push(Word::y_pow(n - j));
            }
            words.sort();
            words.dedup();
            let vals = self.li_inverse(&words, x)?;
            let inv = |w: Word| -> Complex64 {
                if w.is_empty() {
                    return Complex64::new(1.0, 0.0);
                }
                vals[words.binary_search(&w).expect("word requested")]
            };
            let t = GTable::build(m + n, &[z], &self.series_params(&[x]))?;
            let g1all = |w: usize, d: usize| -> Complex64 {
                (1..=w as i64).map(|s| t.get(1, w as i64, d as i64, s, 0)).sum()
            };
            let sgn = |e: usize| if e % 2 == 0 { 1.0 } else { -1.0 };
            let mut lhs = Complex64::new(0.0, 0.0);
            for i in 0..m {
                let f = log.powi(i as i32) / factorial(i);
                let mut term = inv(index((m - i) as u32, n).to_word()) * sgn(n + i + 1);
                term += inv(index((m - i + 1) as u32, n - 1).to_word()) * sgn(n + i + 1);
                for j in 0..=n {
                    let s: Complex64 = (0..=j)
                        .map(|k| g1all(m - i + j, k + 1) * binomial(m - i - 1 + j - k, m - i - 1))
                        .sum();
                    // (−1)^{m+n−j−1}
                    term += inv(Word::y_pow(n - j)) * s * sgn(m + n + 1 - j);
                }
                lhs += term * f;
            }
            let seq = self.zeta_sequence(m + n)?;
            let pp = seq.schur_all(m + n)?;
            let pm = seq.negated().schur_all(m + n)?;
            let mpi = Complex64::new(0.0, -PI);
            let mut rhs = Complex64::new(0.0, 0.0);
            for m1 in 0..=m {
                for m2 in 0..=m - m1 {
                    let m3 = m - m1 - m2;
                    for n1 in 0..=n {
                        let n2 = n - n1;
                        let c = binomial(m1 + n1, m1) * sgn(m1) * pp[m1 + n1] * pp[m2] * pm[n2] / factorial(m3);
                        rhs += mpi.powi(m3 as i32) * c;
                    }
                }
            }
            Ok((lhs, rhs))
        })();
        Self::finish(IdentityId::Rel0Infty2, params, tol.unwrap_or(TOL_SERIES), sides)
    }

    /// `ζ(n)` with the closed form for even `n` and the oracle for odd `n`.
    fn zeta_int(&self, n: usize) -> Result<f64> {
        if n % 2 == 0 {
            Ok(zeta_even_closed_form(n))
        } else {
            self.zeta1(n)
        }
    }

    /// `Σ_{i+2k=m, i,k≥1} f(i, k)`
    fn sum2(&self, m: usize, f: impl Fn(usize, usize) -> Result<f64>) -> Result<f64> {
        let mut acc = 0.0;
        for k in 1..=m / 2 {
            if m > 2 * k {
                acc += f(m - 2 * k, k)?;
            }
        }
        Ok(acc)
    }

    /// `Σ_{i+j+2k=m, i,j,k≥1} f(i, j, k)`
    fn sum3(&self, m: usize, f: impl Fn(usize, usize, usize) -> Result<f64>) -> Result<f64> {
        let mut acc = 0.0;
        for k in 1..=m / 2 {
            for i in 1..m {
                if i + 2 * k < m {
                    acc += f(i, m - i - 2 * k, k)?;
                }
            }
        }
        Ok(acc)
    }

    /// The relations among multiple zeta values from the `z → 1` limit of
    /// the `0`–`∞` relations, for `m ≥ 2` of matching parity:
    ///
    /// * n1odd: `(m+2)ζ(m+1) = 2Σ ζ(i+1)ζ(2k)`
    /// * n1even: `2ζ(m,1) = mζ(m+1) − 2Σ ζ(i+1)ζ(2k)`
    /// * n2odd: `(m+2)ζ(m+1,1) = −π²/2·ζ(m) + (m+2)(m+1)/2·ζ(m+2)
    ///   − Σ (i+1)ζ(i+2)ζ(2k) − Σ ζ(i+1)ζ(j+1)ζ(2k)`
    /// * n2even: `2ζ(m,1,1) = mζ(m+1,1) + π²/2·ζ(m) − (m+2)(m+1)/2·ζ(m+2)
    ///   + Σ (i+1)ζ(i+2)ζ(2k) + Σ ζ(i+1)ζ(j+1)ζ(2k)`
    ///
    /// with `i + 2k = m` and `i + j + 2k = m`, all indices `≥ 1`.
    pub fn verify_mzv0infty(&self, variant: Mzv0InftyVariant, m: usize, tol: Option<f64>) -> VerificationReport {
        let params = Params::new().with("m", m);
        let sides = (|| {
            if m < 2 || (m % 2 == 1) != variant.odd() {
                return Err(Error::Domain(format!(
                    "{variant} needs m ≥ 2 with {} parity, got {m}",
                    if variant.odd() { "odd" } else { "even" }
                )));
            }
            let z = |n: usize| self.zeta_int(n);
            let mf = m as f64;
            let pi2 = PI * PI / 2.0;
            let (lhs, rhs) = match variant {
                Mzv0InftyVariant::N1Odd => (
                    (mf + 2.0) * z(m + 1)?,
                    2.0 * self.sum2(m, |i, k| Ok(z(i + 1)? * z(2 * k)?))?,
                ),
                Mzv0InftyVariant::N1Even => (
                    2.0 * self.zeta(&index(m as u32, 1))?,
                    mf * z(m + 1)? - 2.0 * self.sum2(m, |i, k| Ok(z(i + 1)? * z(2 * k)?))?,
                ),
                Mzv0InftyVariant::N2Odd => (
                    (mf + 2.0) * self.zeta(&index(m as u32 + 1, 1))?,
                    -pi2 * z(m)? + (mf + 2.0) * (mf + 1.0) / 2.0 * z(m + 2)?
                        - self.sum2(m, |i, k| Ok((i + 1) as f64 * z(i + 2)? * z(2 * k)?))?
                        - self.sum3(m, |i, j, k| Ok(z(i + 1)? * z(j + 1)? * z(2 * k)?))?,
                ),
                Mzv0InftyVariant::N2Even => (
                    2.0 * self.zeta(&index(m as u32, 2))?,
                    mf * self.zeta(&index(m as u32 + 1, 1))? + pi2 * z(m)?
                        - (mf + 2.0) * (mf + 1.0) / 2.0 * z(m + 2)?
                        + self.sum2(m, |i, k| Ok((i + 1) as f64 * z(i + 2)? * z(2 * k)?))?
                        + self.sum3(m, |i, j, k| Ok(z(i + 1)? * z(j + 1)? * z(2 * k)?))?,
                ),
            };
            Ok((Complex64::new(lhs, 0.0), Complex64::new(rhs, 0.0)))
        })();
        Self::finish(IdentityId::Mzv0Infty(variant), params, tol.unwrap_or(TOL_MZV), sides)
    }

    /// `‖Φ₁⁻¹Φ₀ − C⁰¹‖_max` or `‖Φ∞⁻¹Φ₀ − C⁰∞‖_max` at `z`, with the local
    /// solution matrices built from their series. For `|z| ≤ 1`, `Φ∞` is
    /// continued radially inward from `2z/|z|`. The report carries the
    /// entry of largest deviation.
    pub fn verify_connection_full(
        &self,
        tag: ConnectionTag,
        ps: &ParamSet,
        z: Complex64,
        tol: Option<f64>,
    ) -> VerificationReport {
        let (id, default_tol) = match tag {
            ConnectionTag::C01 => (IdentityId::Connection01, TOL_C01),
            ConnectionTag::C0Infty => (IdentityId::Connection0Infty, TOL_C0INFTY),
        };
        let id = id.to_string();
        let tol = tol.unwrap_or(default_tol);
        let params = Params::new()
            .with("alpha", fmt_z(ps.alpha))
            .with("beta", fmt_z(ps.beta))
            .with("gamma", fmt_z(ps.gamma))
            .with("z", fmt_z(z));
        let result = (|| {
            if !ps.is_generic() {
                return Err(Error::Degenerate("α, β, γ and γ−α−β must not be integers".into()));
            }
            let c = connection_matrix(tag, ps)?.matrix;
            let phi0 = phi_matrix(ps, Singularity::Zero, z)?;
            let other = match tag {
                ConnectionTag::C01 => phi_matrix(ps, Singularity::One, z)?,
                ConnectionTag::C0Infty if z.norm() > 1.0 => phi_matrix(ps, Singularity::Infinity, z)?,
                ConnectionTag::C0Infty => {
                    let start = z * (2.0 / z.norm());
                    let path = Path::from_points(vec![start, z])?;
                    phi_matrix_along(ps, Singularity::Infinity, &path, ODE_TOL)?
                }
            };
            Ok((other.inv()? * phi0, c))
        })();
        match result {
            Ok((got, c)) => {
                let mut worst = (0, 0);
                for i in 0..2 {
                    for j in 0..2 {
                        if (got[(i, j)] - c[(i, j)]).norm() > (got[worst] - c[worst]).norm() {
                            worst = (i, j);
                        }
                    }
                }
                let abs = got.dist(&c);
                let rel = abs / c.norm_max();
                VerificationReport::with_errors(&id, params, got[worst], c[worst], abs, rel, tol)
                    .with_detail(format!("max deviation at entry ({}, {})", worst.0 + 1, worst.1 + 1))
            }
            Err(e) => VerificationReport::error(&id, params, tol, &e),
        }
    }

    fn hypergeom_terms(&self, z: Complex64) -> usize {
        self.series_params(&[z.norm()]).series_terms.max(1000)
    }

    /// `F(α,β,γ;z) = 1 + αβ Σ G₀(k,n,s;z) p^{k−n−s} q^{n−s} r^{s−1}` with the
    /// sum truncated at weight `cutoff`, against the Gauss series.
    pub fn verify_theorem31(&self, ps: &ParamSet, z: Complex64, cutoff: usize, tol: Option<f64>) -> VerificationReport {
        let params = self.hyp_params(ps, z, cutoff);
        let sides = (|| {
            let lhs = theorem31_series(ps, z, cutoff, &self.series_params(&[z.norm()]))?.value;
            let rhs = hypergeom_2f1(ps, z, self.hypergeom_terms(z))?.value;
            Ok((lhs, rhs))
        })();
        Self::finish(IdentityId::Theorem31, params, tol.unwrap_or(TOL_HYPERGEOMETRIC), sides)
    }

    /// The series in `G₀` for the solution with exponent `1−γ` at the origin
    /// against `z^{1−γ}F(α+1−γ, β+1−γ, 2−γ; z)`.
    pub fn verify_corollary_phi01(
        &self,
        ps: &ParamSet,
        z: Complex64,
        cutoff: usize,
        tol: Option<f64>,
    ) -> VerificationReport {
        let params = self.hyp_params(ps, z, cutoff);
        let sides = (|| {
            let lhs = corollary_phi01_series(ps, z, cutoff, &self.series_params(&[z.norm()]))?.value;
            let rhs = local_solution(ps, Singularity::Zero, 1, z)?;
            Ok((lhs, rhs))
        })();
        Self::finish(IdentityId::CorollaryPhi01, params, tol.unwrap_or(TOL_HYPERGEOMETRIC), sides)
    }

    fn hyp_params(&self, ps: &ParamSet, z: Complex64, cutoff: usize) -> Params {
        Params::new()
            .with("alpha", fmt_z(ps.alpha))
            .with("beta", fmt_z(ps.beta))
            .with("gamma", fmt_z(ps.gamma))
            .with("z", fmt_z(z))
            .with("cutoff", cutoff)
    }
}
