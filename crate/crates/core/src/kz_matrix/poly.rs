use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Index, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::mat2::Mat2;
use crate::series_eval::ParamSet;
use crate::word_algebra::{rat, Rational};

/// Exponents of `(α, β, p, q)`. Negative exponents are allowed.
pub type Exponents = [i32; 4];

/// The four indeterminates of the polynomial ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    Alpha,
    Beta,
    P,
    Q,
}

impl Var {
    fn index(self) -> usize {
        match self {
            Var::Alpha => 0,
            Var::Beta => 1,
            Var::P => 2,
            Var::Q => 3,
        }
    }
}

const NAMES: [&str; 4] = ["α", "β", "p", "q"];

/// A Laurent polynomial in `α, β, p, q` with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Exponents, Rational>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn one() -> Poly {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Poly {
        Poly::monomial([0; 4], c)
    }

    pub fn int(n: i64) -> Poly {
        Poly::constant(rat(n))
    }

    pub fn var(v: Var) -> Poly {
        Poly::var_pow(v, 1)
    }

    /// `v^e` for any integer `e`.
    pub fn var_pow(v: Var, e: i32) -> Poly {
        let mut exps = [0; 4];
        exps[v.index()] = e;
        Poly::monomial(exps, Rational::one())
    }

    pub fn monomial(exps: Exponents, c: Rational) -> Poly {
        let mut out = Poly::zero();
        out.add_term(exps, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &Exponents) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, exps: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut out = Poly::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Evaluates at `(α, β, p, q) = vals`.
    pub fn eval(&self, vals: &[Complex64; 4]) -> Complex64 {
        let mut acc = Complex64::zero();
        for (e, c) in self.terms() {
            let mut t = Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0);
            for (v, &k) in vals.iter().zip(e) {
                if k != 0 {
                    t *= v.powi(k);
                }
            }
            acc += t;
        }
        acc
    }

    pub fn eval_params(&self, ps: &ParamSet) -> Complex64 {
        self.eval(&param_values(ps))
    }
}

/// `(α, β, p, q)` for a parameter set.
pub fn param_values(ps: &ParamSet) -> [Complex64; 4] {
    [ps.alpha, ps.beta, ps.p(), ps.q()]
}

impl From<Var> for Poly {
    fn from(v: Var) -> Poly {
        Poly::var(v)
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (e, c) in rhs.terms() {
            self.add_term(*e, c.clone());
        }
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &-rhs
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                let e = [e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]];
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let a = c.abs();
            let constant = e.iter().all(|&k| k == 0);
            if !a.is_one() || constant {
                write!(f, "{a}")?;
            }
            for (name, &k) in NAMES.iter().zip(e) {
                match k {
                    0 => {}
                    1 => f.write_str(name)?,
                    _ => write!(f, "{name}^{k}")?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// A 2×2 matrix over [`Poly`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    entries: [[Poly; 2]; 2],
}

impl PolyMatrix {
    pub fn new(a: Poly, b: Poly, c: Poly, d: Poly) -> PolyMatrix {
        PolyMatrix {
            entries: [[a, b], [c, d]],
        }
    }

    pub fn zero() -> PolyMatrix {
        PolyMatrix::new(Poly::zero(), Poly::zero(), Poly::zero(), Poly::zero())
    }

    pub fn identity() -> PolyMatrix {
        PolyMatrix::new(Poly::one(), Poly::zero(), Poly::zero(), Poly::one())
    }

    pub fn transpose(&self) -> PolyMatrix {
        let e = &self.entries;
        PolyMatrix::new(e[0][0].clone(), e[1][0].clone(), e[0][1].clone(), e[1][1].clone())
    }

    pub fn scale(&self, c: &Poly) -> PolyMatrix {
        let e = &self.entries;
        PolyMatrix::new(&e[0][0] * c, &e[0][1] * c, &e[1][0] * c, &e[1][1] * c)
    }

    pub fn eval(&self, vals: &[Complex64; 4]) -> Mat2 {
        let e = &self.entries;
        Mat2::new(e[0][0].eval(vals), e[0][1].eval(vals), e[1][0].eval(vals), e[1][1].eval(vals))
    }

    pub fn eval_params(&self, ps: &ParamSet) -> Mat2 {
        self.eval(&param_values(ps))
    }
}

impl Index<(usize, usize)> for PolyMatrix {
    type Output = Poly;
    fn index(&self, (i, j): (usize, usize)) -> &Poly {
        &self.entries[i][j]
    }
}

impl Add for &PolyMatrix {
    type Output = PolyMatrix;
    fn add(self, rhs: &PolyMatrix) -> PolyMatrix {
        let (a, b) = (&self.entries, &rhs.entries);
        PolyMatrix::new(
            &a[0][0] + &b[0][0],
            &a[0][1] + &b[0][1],
            &a[1][0] + &b[1][0],
            &a[1][1] + &b[1][1],
        )
    }
}

impl Sub for &PolyMatrix {
    type Output = PolyMatrix;
    fn sub(self, rhs: &PolyMatrix) -> PolyMatrix {
        self + &rhs.scale(&Poly::int(-1))
    }
}

impl Mul for &PolyMatrix {
    type Output = PolyMatrix;
    fn mul(self, rhs: &PolyMatrix) -> PolyMatrix {
        let (a, b) = (&self.entries, &rhs.entries);
        let entry = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
        PolyMatrix::new(entry(0, 0), entry(0, 1), entry(1, 0), entry(1, 1))
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = &self.entries;
        write!(f, "[[{}, {}], [{}, {}]]", e[0][0], e[0][1], e[1][0], e[1][1])
    }
}
