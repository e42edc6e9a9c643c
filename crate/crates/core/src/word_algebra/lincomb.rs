use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::word::{Letter, Word};

pub type Rational = BigRational;

/// A finite formal linear combination of words with exact rational
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LinComb {
    terms: BTreeMap<Word, Rational>,
}

impl LinComb {
    pub fn zero() -> LinComb {
        LinComb::default()
    }

    pub fn one() -> LinComb {
        LinComb::from(Word::EMPTY)
    }

    pub fn term(w: Word, c: Rational) -> LinComb {
        let mut out = LinComb::zero();
        out.add_term(w, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
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

    pub fn add_scaled(&mut self, other: &LinComb, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (w, a) in other.iter() {
            self.add_term(*w, a * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> LinComb {
        let mut out = LinComb::zero();
        out.add_scaled(self, c);
        out
    }

    /// Concatenates `l` on the left of every word.
    pub fn prepend(&self, l: Letter) -> LinComb {
        self.map_words(|w| w.push_front(l))
    }

    /// Concatenates `l` on the right of every word.
    pub fn append(&self, l: Letter) -> LinComb {
        self.map_words(|w| w.push_back(l))
    }

    /// Right concatenation with a fixed word.
    pub fn concat_right(&self, v: Word) -> LinComb {
        self.map_words(|w| w.concat(v))
    }

    fn map_words(&self, f: impl Fn(Word) -> Word) -> LinComb {
        LinComb {
            terms: self.terms.iter().map(|(w, c)| (f(*w), c.clone())).collect(),
        }
    }

    /// Sum of all coefficients.
    pub fn coefficient_sum(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |a, c| a + c)
    }

    pub fn is_homogeneous_of_weight(&self, k: usize) -> bool {
        self.words().all(|w| w.weight() == k)
    }

    pub fn all_in_h1(&self) -> bool {
        self.words().all(Word::in_h1)
    }

    pub fn all_in_h0(&self) -> bool {
        self.words().all(Word::in_h0)
    }

    /// Exact serialization as `{word, numerator, denominator}` records.
    pub fn to_records(&self) -> Vec<LinCombTerm> {
        self.iter()
            .map(|(w, c)| LinCombTerm {
                word: w.to_string(),
                numerator: c.numer().to_string(),
                denominator: c.denom().to_string(),
            })
            .collect()
    }

    pub fn from_records(records: &[LinCombTerm]) -> crate::Result<LinComb> {
        let mut out = LinComb::zero();
        for r in records {
            let w: Word = r.word.parse()?;
            let num: BigInt = r
                .numerator
                .parse()
                .map_err(|e| crate::Error::Parse(format!("numerator {:?}: {e}", r.numerator)))?;
            let den: BigInt = r
                .denominator
                .parse()
                .map_err(|e| crate::Error::Parse(format!("denominator {:?}: {e}", r.denominator)))?;
            if den.is_zero() {
                return Err(crate::Error::Parse("zero denominator".into()));
            }
            out.add_term(w, Rational::new(num, den));
        }
        Ok(out)
    }
}

/// Serialized form of one term of a [`LinComb`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinCombTerm {
    pub word: String,
    pub numerator: String,
    pub denominator: String,
}

impl From<Word> for LinComb {
    fn from(w: Word) -> LinComb {
        LinComb::term(w, Rational::one())
    }
}

impl FromIterator<(Word, Rational)> for LinComb {
    fn from_iter<I: IntoIterator<Item = (Word, Rational)>>(iter: I) -> Self {
        let mut out = LinComb::zero();
        for (w, c) in iter {
            out.add_term(w, c);
        }
        out
    }
}

impl AddAssign<&LinComb> for LinComb {
    fn add_assign(&mut self, rhs: &LinComb) {
        for (w, c) in rhs.iter() {
            self.add_term(*w, c.clone());
        }
    }
}

impl Add for &LinComb {
    type Output = LinComb;
    fn add(self, rhs: &LinComb) -> LinComb {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LinComb {
    type Output = LinComb;
    fn sub(self, rhs: &LinComb) -> LinComb {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl Neg for &LinComb {
    type Output = LinComb;
    fn neg(self) -> LinComb {
        self.scale(&-Rational::one())
    }
}

impl Mul<&Rational> for &LinComb {
    type Output = LinComb;
    fn mul(self, rhs: &Rational) -> LinComb {
        self.scale(rhs)
    }
}

impl fmt::Display for LinComb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if a.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{a}·{w}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LinComb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinComb({self})")
    }
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}
