use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraError, Clopen, Word};

use super::CuntzError;

/// An eventually periodic point `prefix · period^ω` of Cantor space.
///
/// Canonical: the period is primitive and the prefix as short as possible,
/// so equal points have equal representations.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PointRepr", into = "PointRepr")]
pub struct Point {
    arity: u8,
    prefix: Word,
    period: Word,
}

impl Point {
    pub fn new(arity: u8, prefix: Word, period: Word) -> Result<Self, CuntzError> {
        crate::algebra::CantorAlgebra::new(arity)?;
        if period.is_empty() {
            return Err(CuntzError::EmptyPeriod);
        }
        for w in [&prefix, &period] {
            if let Some(&letter) = w.letters().iter().find(|&&l| l >= arity) {
                return Err(AlgebraError::InvalidLetter { letter, arity }.into());
            }
        }
        Ok(Self::canonical(arity, prefix.letters().to_vec(), period.letters().to_vec()))
    }

    /// `w · a^ω`.
    pub fn constant_tail(arity: u8, w: &Word, letter: u8) -> Self {
        Self::canonical(arity, w.letters().to_vec(), vec![letter])
    }

    fn canonical(arity: u8, mut prefix: Vec<u8>, period: Vec<u8>) -> Self {
        let mut period = primitive_root(&period).to_vec();
        while let (Some(&a), Some(&b)) = (prefix.last(), period.last()) {
            if a != b {
                break;
            }
            prefix.pop();
            period.rotate_right(1);
        }
        Point {
            arity,
            prefix: Word::from_letters_unchecked(prefix),
            period: Word::from_letters_unchecked(period),
        }
    }

    pub fn arity(&self) -> u8 {
        self.arity
    }

    pub fn prefix(&self) -> &Word {
        &self.prefix
    }

    pub fn period(&self) -> &Word {
        &self.period
    }

    /// The `i`-th letter of the infinite sequence.
    pub fn letter(&self, i: usize) -> u8 {
        let p = self.prefix.letters();
        if i < p.len() {
            p[i]
        } else {
            let q = self.period.letters();
            q[(i - p.len()) % q.len()]
        }
    }

    /// The first `k` letters.
    pub fn take(&self, k: usize) -> Word {
        Word::from_letters_unchecked((0..k).map(|i| self.letter(i)).collect())
    }

    pub fn in_cylinder(&self, w: &Word) -> bool {
        w.letters().iter().enumerate().all(|(i, &l)| self.letter(i) == l)
    }

    pub fn in_clopen(&self, e: &Clopen) -> bool {
        e.words().iter().any(|w| self.in_cylinder(w))
    }

    /// The point with the first `k` letters removed.
    pub fn drop_front(&self, k: usize) -> Point {
        let p = self.prefix.letters();
        if k <= p.len() {
            return Self::canonical(self.arity, p[k..].to_vec(), self.period.letters().to_vec());
        }
        let mut period = self.period.letters().to_vec();
        let shift = (k - p.len()) % period.len();
        period.rotate_left(shift);
        Self::canonical(self.arity, Vec::new(), period)
    }

    /// `w · self`.
    pub fn prepend(&self, w: &Word) -> Point {
        let prefix = w.concat(&self.prefix);
        Self::canonical(self.arity, prefix.letters().to_vec(), self.period.letters().to_vec())
    }

    /// Parses `01(10)*`; the prefix may be empty as in `(0)*`.
    pub fn parse(arity: u8, text: &str) -> Result<Point, CuntzError> {
        let t = text.trim();
        let lead = text.len() - text.trim_start().len();
        let err = |position: usize, message: &str| -> CuntzError {
            AlgebraError::Parse { position: lead + position, message: message.into() }.into()
        };
        let open = t.find('(').ok_or_else(|| err(t.len(), "expected '(period)*'"))?;
        let close = t.rfind(")*").ok_or_else(|| err(t.len(), "expected ')*'"))?;
        if close + 2 != t.len() || close < open {
            return Err(err(close, "unexpected text after ')*'"));
        }
        let prefix = Word::parse(arity, &t[..open]).map_err(|e| CuntzError::from(e.at(lead)))?;
        let period = Word::parse(arity, &t[open + 1..close]).map_err(|e| CuntzError::from(e.at(lead + open + 1)))?;
        if period.is_empty() {
            return Err(err(open + 1, "period must be nonempty"));
        }
        Point::new(arity, prefix, period)
    }
}

/// The shortest word `r` with `w = r^k`.
fn primitive_root(w: &[u8]) -> &[u8] {
    let n = w.len();
    (1..=n)
        .find(|&d| n % d == 0 && (d..n).all(|i| w[i] == w[i - d]))
        .map(|d| &w[..d])
        .unwrap_or(w)
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})*", self.prefix.digits(), self.period.digits())
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Point[{}]{self}", self.arity)
    }
}

#[derive(Serialize, Deserialize)]
struct PointRepr {
    arity: u8,
    point: String,
}

impl From<Point> for PointRepr {
    fn from(p: Point) -> Self {
        PointRepr { arity: p.arity, point: p.to_string() }
    }
}

impl TryFrom<PointRepr> for Point {
    type Error = CuntzError;

    fn try_from(r: PointRepr) -> Result<Self, CuntzError> {
        Point::parse(r.arity, &r.point)
    }
}
