use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One of the two letters of the alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Letter {
    X,
    Y,
}

impl Letter {
    fn bit(self) -> u64 {
        match self {
            Letter::X => 0,
            Letter::Y => 1,
        }
    }

    fn from_bit(bit: u64) -> Letter {
        if bit & 1 == 0 {
            Letter::X
        } else {
            Letter::Y
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::X => 'x',
            Letter::Y => 'y',
        }
    }
}

/// Maximum number of letters a [`Word`] can hold.
pub const MAX_WORD_LEN: usize = 64;

/// A word over `{x, y}`, packed into a machine word.
///
/// The first letter sits in the most significant of the `len` used bits,
/// so for equal lengths the numeric order of `bits` is the lexicographic
/// order with `x < y`. Words are `Copy` and hash cheaply.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Word {
    bits: u64,
    len: u8,
}

impl Word {
    pub const EMPTY: Word = Word { bits: 0, len: 0 };

    pub fn empty() -> Word {
        Word::EMPTY
    }

    pub fn letter(l: Letter) -> Word {
        Word { bits: l.bit(), len: 1 }
    }

    pub fn x() -> Word {
        Word::letter(Letter::X)
    }

    pub fn y() -> Word {
        Word::letter(Letter::Y)
    }

    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Word {
        letters
            .into_iter()
            .fold(Word::EMPTY, |w, l| w.push_back(l))
    }

    /// `x^n`
    pub fn x_pow(n: usize) -> Word {
        Word::from_letters(std::iter::repeat(Letter::X).take(n))
    }

    /// `y^n`
    pub fn y_pow(n: usize) -> Word {
        Word::from_letters(std::iter::repeat(Letter::Y).take(n))
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Number of letters.
    pub fn weight(&self) -> usize {
        self.len()
    }

    /// Number of `y` letters.
    pub fn depth(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// Number of adjacent `yx` pairs plus one. Only meaningful for nonempty words.
    pub fn height(&self) -> usize {
        debug_assert!(!self.is_empty(), "height of the empty word is undefined");
        let n = self.len();
        if n < 2 {
            return 1;
        }
        // bit i+1 = y and bit i = x, reading from the most significant end
        let mask = (1u64 << (n - 1)) - 1;
        let yx = (self.bits >> 1) & !self.bits & mask;
        yx.count_ones() as usize + 1
    }

    pub fn get(&self, i: usize) -> Letter {
        assert!(i < self.len(), "letter index out of range");
        Letter::from_bit(self.bits >> (self.len() - 1 - i))
    }

    pub fn first(&self) -> Option<Letter> {
        (!self.is_empty()).then(|| self.get(0))
    }

    pub fn last(&self) -> Option<Letter> {
        (!self.is_empty()).then(|| Letter::from_bit(self.bits))
    }

    pub fn letters(&self) -> impl DoubleEndedIterator<Item = Letter> + ExactSizeIterator + '_ {
        (0..self.len()).map(move |i| self.get(i))
    }

    pub fn push_back(self, l: Letter) -> Word {
        assert!(self.len() < MAX_WORD_LEN, "word too long");
        Word {
            bits: (self.bits << 1) | l.bit(),
            len: self.len + 1,
        }
    }

    pub fn push_front(self, l: Letter) -> Word {
        assert!(self.len() < MAX_WORD_LEN, "word too long");
        Word {
            bits: (l.bit() << self.len) | self.bits,
            len: self.len + 1,
        }
    }

    pub fn concat(self, other: Word) -> Word {
        assert!(self.len() + other.len() <= MAX_WORD_LEN, "word too long");
        if other.len == 0 {
            return self;
        }
        Word {
            bits: (self.bits << other.len) | other.bits,
            len: self.len + other.len,
        }
    }

    /// Letters `start..end`.
    pub fn slice(&self, start: usize, end: usize) -> Word {
        assert!(start <= end && end <= self.len());
        let n = end - start;
        if n == 0 {
            return Word::EMPTY;
        }
        let shifted = self.bits >> (self.len() - end);
        let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Word {
            bits: shifted & mask,
            len: n as u8,
        }
    }

    /// Drops the first letter.
    pub fn tail(&self) -> Word {
        self.slice(1, self.len())
    }

    pub fn reversed(&self) -> Word {
        Word::from_letters(self.letters().rev())
    }

    /// `w ∈ h¹`: empty or ending in `y`.
    pub fn in_h1(&self) -> bool {
        self.is_empty() || self.last() == Some(Letter::Y)
    }

    /// `w ∈ h⁰`: empty, or starting with `x` and ending in `y`.
    pub fn in_h0(&self) -> bool {
        self.is_empty() || (self.first() == Some(Letter::X) && self.last() == Some(Letter::Y))
    }

    /// Number of trailing `x` letters.
    pub fn trailing_x(&self) -> usize {
        if self.is_empty() {
            return 0;
        }
        (self.bits.trailing_zeros() as usize).min(self.len())
    }

    /// Number of leading `y` letters.
    pub fn leading_y(&self) -> usize {
        let n = self.len();
        if n == 0 {
            return 0;
        }
        let top = self.bits << (64 - n);
        (top.leading_ones() as usize).min(n)
    }

    /// All suffixes, shortest first, starting at the empty word.
    pub fn suffix_closure(&self) -> Vec<Word> {
        (0..=self.len())
            .map(|k| self.slice(self.len() - k, self.len()))
            .collect()
    }

    /// All words of the given length, in lexicographic order.
    pub fn all_of_length(n: usize) -> impl Iterator<Item = Word> {
        assert!(n < 64);
        (0..(1u64 << n)).map(move |bits| Word { bits, len: n as u8 })
    }
}

impl Default for Word {
    fn default() -> Self {
        Word::EMPTY
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len.cmp(&other.len).then(self.bits.cmp(&other.bits))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        for l in self.letters() {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses `"xxyxy"`; `"1"` is the empty word.
    fn from_str(s: &str) -> Result<Word> {
        let s = s.trim();
        if s == "1" || s.is_empty() {
            return Ok(Word::EMPTY);
        }
        if s.len() > MAX_WORD_LEN {
            return Err(Error::Parse(format!("word longer than {MAX_WORD_LEN} letters")));
        }
        s.chars()
            .map(|c| match c {
                'x' | 'X' => Ok(Letter::X),
                'y' | 'Y' => Ok(Letter::Y),
                other => Err(Error::Parse(format!("unexpected letter {other:?} in word {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word::from_letters)
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Word, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A composition `(k₁, …, k_r)` of positive integers naming an MPL.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(parts: Vec<u32>) -> Result<MultiIndex> {
        if parts.is_empty() {
            return Err(Error::InvalidIndex("empty index".into()));
        }
        if parts.iter().any(|&k| k == 0) {
            return Err(Error::InvalidIndex(format!("{parts:?} has a zero entry")));
        }
        Ok(MultiIndex(parts))
    }

    /// `(k, 1, …, 1)` with `ones` trailing ones.
    pub fn with_ones(k: u32, ones: usize) -> MultiIndex {
        let mut parts = vec![k];
        parts.extend(std::iter::repeat(1).take(ones));
        MultiIndex::new(parts).expect("k >= 1")
    }

    /// `(1, …, 1)` of length `n ≥ 1`.
    pub fn ones(n: usize) -> MultiIndex {
        MultiIndex::new(vec![1; n]).expect("n >= 1")
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().map(|&k| k as usize).sum()
    }

    pub fn is_admissible(&self) -> bool {
        self.0[0] >= 2
    }

    /// Number of entries `≥ 2`; equals the word height for admissible indices.
    pub fn height(&self) -> usize {
        self.0.iter().filter(|&&k| k >= 2).count()
    }

    /// `x^{k₁−1} y ⋯ x^{k_r−1} y`
    pub fn to_word(&self) -> Word {
        self.0
            .iter()
            .fold(Word::EMPTY, |w, &k| {
                w.concat(Word::x_pow(k as usize - 1)).push_back(Letter::Y)
            })
    }

    /// Inverse of [`MultiIndex::to_word`] on nonempty words of `h¹`.
    pub fn from_word(w: &Word) -> Result<MultiIndex> {
        if w.is_empty() || !w.in_h1() {
            return Err(Error::NotInH1(w.to_string()));
        }
        let mut parts = Vec::with_capacity(w.depth());
        let mut k = 1;
        for l in w.letters() {
            match l {
                Letter::X => k += 1,
                Letter::Y => {
                    parts.push(k);
                    k = 1;
                }
            }
        }
        MultiIndex::new(parts)
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|k| k.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for MultiIndex {
    type Err = Error;

    /// Parses a comma list such as `"3,1"`.
    fn from_str(s: &str) -> Result<MultiIndex> {
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("bad index entry {p:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        MultiIndex::new(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn statistics() {
        let v = w("xyyxxy");
        assert_eq!(v.weight(), 6);
        assert_eq!(v.depth(), 3);
        assert_eq!(v.height(), 2);
        assert_eq!(w("yxyx").height(), 3);
        assert_eq!(w("x").height(), 1);
        assert_eq!(w("y").height(), 1);
    }

    #[test]
    fn membership() {
        assert!(Word::EMPTY.in_h0() && Word::EMPTY.in_h1());
        assert!(w("xy").in_h0());
        assert!(!w("y").in_h0());
        assert!(w("y").in_h1());
        assert!(!w("yx").in_h1());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(w("1"), Word::EMPTY);
        assert_eq!(w("xxyxy").to_string(), "xxyxy");
        assert!("xz".parse::<Word>().is_err());
    }

    #[test]
    fn slicing() {
        let v = w("xxyxy");
        assert_eq!(v.slice(1, 4), w("xyx"));
        assert_eq!(v.tail(), w("xyxy"));
        assert_eq!(v.reversed(), w("yxyxx"));
        assert_eq!(w("yyxyxx").trailing_x(), 2);
        assert_eq!(w("yyxyxx").leading_y(), 2);
        assert_eq!(w("xxx").trailing_x(), 3);
        assert_eq!(w("yyy").leading_y(), 3);
    }

    #[test]
    fn suffix_closure_examples() {
        assert_eq!(w("xy").suffix_closure(), vec![Word::EMPTY, w("y"), w("xy")]);
        assert_eq!(w("y").suffix_closure(), vec![Word::EMPTY, w("y")]);
        assert_eq!(
            w("xxy").suffix_closure(),
            vec![Word::EMPTY, w("y"), w("xy"), w("xxy")]
        );
    }

    #[test]
    fn index_word_bijection() {
        let idx: MultiIndex = "3,1,2".parse().unwrap();
        assert_eq!(idx.to_word(), w("xxyyxy"));
        assert_eq!(MultiIndex::from_word(&idx.to_word()).unwrap(), idx);
        assert_eq!(idx.weight(), 6);
        assert_eq!(idx.depth(), 3);
        assert_eq!(idx.height(), 2);
        assert_eq!(idx.height(), idx.to_word().height());
        assert!(MultiIndex::from_word(&w("yx")).is_err());
        assert!("0,1".parse::<MultiIndex>().is_err());
    }

    #[test]
    fn ordering_is_length_then_lex() {
        let mut v = vec![w("y"), w("xx"), w("x"), w("xy"), Word::EMPTY];
        v.sort();
        assert_eq!(v, vec![Word::EMPTY, w("x"), w("y"), w("xx"), w("xy")]);
    }
}
