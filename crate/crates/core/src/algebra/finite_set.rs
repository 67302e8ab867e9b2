use std::fmt;

use serde::{Deserialize, Serialize};

use super::{split_delimited, AlgebraError};

/// Largest universe a [`FiniteSet`] can hold.
pub const MAX_UNIVERSE: u8 = 64;

/// A subset of `{0, .., n-1}` held as a bitset. Bits at or above `n` are clear.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "FiniteSetRepr", into = "FiniteSetRepr")]
pub struct FiniteSet {
    n: u8,
    bits: u64,
}

fn mask(n: u8) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl FiniteSet {
    pub fn empty(n: u8) -> Self {
        assert!(n <= MAX_UNIVERSE, "universe of size {n} exceeds {MAX_UNIVERSE}");
        FiniteSet { n, bits: 0 }
    }

    pub fn full(n: u8) -> Self {
        FiniteSet { n, bits: mask(n) }
    }

    pub fn from_bits(n: u8, bits: u64) -> Result<Self, AlgebraError> {
        if n > MAX_UNIVERSE {
            return Err(AlgebraError::UniverseTooLarge(n));
        }
        if bits & !mask(n) != 0 {
            return Err(AlgebraError::PointOutOfRange { point: (64 - bits.leading_zeros() - 1) as u8, n });
        }
        Ok(FiniteSet { n, bits })
    }

    pub fn from_points<I: IntoIterator<Item = u8>>(n: u8, points: I) -> Result<Self, AlgebraError> {
        let mut s = FiniteSet::empty(n);
        for p in points {
            if p >= n {
                return Err(AlgebraError::PointOutOfRange { point: p, n });
            }
            s.bits |= 1 << p;
        }
        Ok(s)
    }

    pub fn singleton(n: u8, point: u8) -> Result<Self, AlgebraError> {
        Self::from_points(n, [point])
    }

    pub fn universe(&self) -> u8 {
        self.n
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn contains(&self, point: u8) -> bool {
        point < self.n && self.bits >> point & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_full(&self) -> bool {
        self.bits == mask(self.n)
    }

    pub fn points(&self) -> impl Iterator<Item = u8> + '_ {
        (0..self.n).filter(move |&p| self.contains(p))
    }

    fn same_universe(&self, other: &FiniteSet) -> Result<(), AlgebraError> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(AlgebraError::ArityMismatch { left: self.n, right: other.n })
        }
    }

    pub fn union(&self, other: &FiniteSet) -> Result<FiniteSet, AlgebraError> {
        self.same_universe(other)?;
        Ok(FiniteSet { n: self.n, bits: self.bits | other.bits })
    }

    pub fn intersect(&self, other: &FiniteSet) -> Result<FiniteSet, AlgebraError> {
        self.same_universe(other)?;
        Ok(FiniteSet { n: self.n, bits: self.bits & other.bits })
    }

    pub fn complement(&self) -> FiniteSet {
        FiniteSet { n: self.n, bits: !self.bits & mask(self.n) }
    }

    pub fn leq(&self, other: &FiniteSet) -> Result<bool, AlgebraError> {
        Ok(self.intersect(&other.complement())?.is_empty())
    }

    /// Every subset of the universe, in increasing bit order.
    pub fn all_subsets(n: u8) -> impl Iterator<Item = FiniteSet> {
        assert!(n < 64, "cannot enumerate subsets of a universe of size {n}");
        (0..1u64 << n).map(move |bits| FiniteSet { n, bits })
    }

    /// Parses `{0, 2}` for a universe of size `n`.
    pub fn parse(n: u8, text: &str) -> Result<FiniteSet, AlgebraError> {
        let mut points = Vec::new();
        for (pos, item) in split_delimited(text, '{', '}')? {
            let p: u8 = item.trim().parse().map_err(|_| AlgebraError::Parse {
                position: pos,
                message: format!("expected a point index, found {item:?}"),
            })?;
            points.push(p);
        }
        FiniteSet::from_points(n, points)
    }
}

impl fmt::Display for FiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.points().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for FiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteSet[{}]{self}", self.n)
    }
}

#[derive(Serialize, Deserialize)]
struct FiniteSetRepr {
    n: u8,
    points: Vec<u8>,
}

impl TryFrom<FiniteSetRepr> for FiniteSet {
    type Error = AlgebraError;

    fn try_from(r: FiniteSetRepr) -> Result<Self, Self::Error> {
        FiniteSet::from_points(r.n, r.points)
    }
}

impl From<FiniteSet> for FiniteSetRepr {
    fn from(s: FiniteSet) -> Self {
        FiniteSetRepr { n: s.n, points: s.points().collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_keeps_high_bits_clear() {
        let s = FiniteSet::from_points(3, [0]).unwrap();
        assert_eq!(s.complement().bits(), 0b110);
        assert!(FiniteSet::full(3).complement().is_empty());
        assert!(FiniteSet::from_bits(3, 0b1000).is_err());
    }

    #[test]
    fn parse_and_print() {
        let s = FiniteSet::parse(4, "{2, 0}").unwrap();
        assert_eq!(s.to_string(), "{0, 2}");
        assert!(FiniteSet::parse(2, "{2}").is_err());
        assert!(FiniteSet::parse(2, "{}").unwrap().is_empty());
    }
}
