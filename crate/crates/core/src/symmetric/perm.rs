use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{split_delimited, AlgebraError, FiniteSet};

use super::SymmetricError;

/// Largest `n` for which `I_n` can be represented.
pub const MAX_POINTS: u8 = 16;

const UNDEFINED: u8 = u8::MAX;

/// A partial injective map on `{0, .., n-1}`, an element of `I_n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PartialPermRepr", into = "PartialPermRepr")]
pub struct PartialPerm {
    n: u8,
    map: [u8; MAX_POINTS as usize],
}

impl PartialPerm {
    fn blank(n: u8) -> Self {
        assert!(n <= MAX_POINTS, "I_{n} exceeds the supported size {MAX_POINTS}");
        PartialPerm { n, map: [UNDEFINED; MAX_POINTS as usize] }
    }

    pub fn new<I: IntoIterator<Item = (u8, u8)>>(n: u8, pairs: I) -> Result<Self, SymmetricError> {
        if n > MAX_POINTS {
            return Err(SymmetricError::TooManyPoints(n));
        }
        let mut s = Self::blank(n);
        let mut hit = 0u32;
        for (x, y) in pairs {
            for p in [x, y] {
                if p >= n {
                    return Err(SymmetricError::PointOutOfRange { point: p, n });
                }
            }
            if s.map[x as usize] != UNDEFINED {
                if s.map[x as usize] == y {
                    continue;
                }
                return Err(SymmetricError::NotAFunction { point: x });
            }
            if hit >> y & 1 == 1 {
                return Err(SymmetricError::NotInjective { point: y });
            }
            hit |= 1 << y;
            s.map[x as usize] = y;
        }
        Ok(s)
    }

    pub fn zero(n: u8) -> Self {
        Self::blank(n)
    }

    pub fn identity(n: u8) -> Self {
        Self::identity_on(&FiniteSet::full(n))
    }

    /// The partial identity on `e`.
    pub fn identity_on(e: &FiniteSet) -> Self {
        let mut s = Self::blank(e.universe());
        for p in e.points() {
            s.map[p as usize] = p;
        }
        s
    }

    /// The permutation `i ↦ images[i]`.
    pub fn from_images(images: &[u8]) -> Result<Self, SymmetricError> {
        let n = u8::try_from(images.len()).map_err(|_| SymmetricError::TooManyPoints(u8::MAX))?;
        Self::new(n, images.iter().enumerate().map(|(i, &y)| (i as u8, y)))
    }

    /// The permutation given by disjoint cycles, fixing every other point.
    pub fn from_cycles(n: u8, cycles: &[&[u8]]) -> Result<Self, SymmetricError> {
        let mut images: Vec<u8> = (0..n).collect();
        let mut seen = 0u32;
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x >= n {
                    return Err(SymmetricError::PointOutOfRange { point: x, n });
                }
                if seen >> x & 1 == 1 {
                    return Err(SymmetricError::NotInjective { point: x });
                }
                seen |= 1 << x;
                images[x as usize] = cycle[(i + 1) % cycle.len()];
            }
        }
        Self::from_images(&images)
    }

    pub fn transposition(n: u8, a: u8, b: u8) -> Result<Self, SymmetricError> {
        Self::from_cycles(n, &[&[a, b]])
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn apply(&self, x: u8) -> Option<u8> {
        match self.map.get(x as usize) {
            Some(&y) if x < self.n && y != UNDEFINED => Some(y),
            _ => None,
        }
    }

    /// The graph of the map, sorted by source point.
    pub fn pairs(&self) -> impl Iterator<Item = (u8, u8)> + '_ {
        (0..self.n).filter_map(move |x| self.apply(x).map(|y| (x, y)))
    }

    pub fn domain(&self) -> FiniteSet {
        FiniteSet::from_points(self.n, self.pairs().map(|(x, _)| x)).expect("points in range")
    }

    pub fn range(&self) -> FiniteSet {
        FiniteSet::from_points(self.n, self.pairs().map(|(_, y)| y)).expect("points in range")
    }

    pub fn fixed_points(&self) -> FiniteSet {
        FiniteSet::from_points(self.n, self.pairs().filter(|(x, y)| x == y).map(|(x, _)| x))
            .expect("points in range")
    }

    pub fn len(&self) -> usize {
        self.pairs().count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_permutation(&self) -> bool {
        self.len() == self.n as usize
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &PartialPerm) -> PartialPerm {
        assert_eq!(self.n, other.n, "composing elements of different I_n");
        let mut s = Self::blank(self.n);
        for (x, y) in other.pairs() {
            if let Some(z) = self.apply(y) {
                s.map[x as usize] = z;
            }
        }
        s
    }

    pub fn inverse(&self) -> PartialPerm {
        let mut s = Self::blank(self.n);
        for (x, y) in self.pairs() {
            s.map[y as usize] = x;
        }
        s
    }

    pub fn restrict(&self, e: &FiniteSet) -> PartialPerm {
        let mut s = Self::blank(self.n);
        for (x, y) in self.pairs().filter(|(x, _)| e.contains(*x)) {
            s.map[x as usize] = y;
        }
        s
    }

    /// Union of graphs, `None` if the result is not a partial injection.
    pub fn union(&self, other: &PartialPerm) -> Option<PartialPerm> {
        assert_eq!(self.n, other.n, "joining elements of different I_n");
        PartialPerm::new(self.n, self.pairs().chain(other.pairs())).ok()
    }

    /// Parses `[0:1, 2:2]`; `↦` and `->` are accepted in place of `:`.
    pub fn parse(n: u8, text: &str) -> Result<PartialPerm, SymmetricError> {
        let items = split_delimited(text, '[', ']')?;
        let mut pairs = Vec::with_capacity(items.len());
        for (pos, item) in items {
            let (lhs, rhs) = ["->", "↦", ":"]
                .iter()
                .find_map(|sep| item.split_once(sep))
                .ok_or_else(|| parse_error(pos, "expected 'x:y'"))?;
            let point = |s: &str, at: usize| {
                s.trim().parse::<u8>().map_err(|_| parse_error(at, "expected a point"))
            };
            pairs.push((point(lhs, pos)?, point(rhs, pos + item.len() - rhs.len())?));
        }
        PartialPerm::new(n, pairs)
    }

    /// Parses cycle notation such as `(0 1)(2 3 4)`; `()` is the identity.
    pub fn parse_cycles(n: u8, text: &str) -> Result<PartialPerm, SymmetricError> {
        let mut cycles: Vec<Vec<u8>> = Vec::new();
        let mut current: Option<Vec<u8>> = None;
        let mut number = String::new();
        let flush = |number: &mut String, current: &mut Option<Vec<u8>>, at: usize| {
            if number.is_empty() {
                return Ok(());
            }
            let p = number.parse::<u8>().map_err(|_| parse_error(at, "expected a point"))?;
            number.clear();
            current.as_mut().ok_or_else(|| parse_error(at, "point outside a cycle"))?.push(p);
            Ok::<(), SymmetricError>(())
        };
        for (i, ch) in text.char_indices() {
            match ch {
                '(' if current.is_none() => current = Some(Vec::new()),
                ')' => {
                    flush(&mut number, &mut current, i)?;
                    cycles.push(current.take().ok_or_else(|| parse_error(i, "unmatched ')'"))?);
                }
                c if c.is_ascii_digit() => number.push(c),
                c if c.is_whitespace() || c == ',' => flush(&mut number, &mut current, i)?,
                _ => return Err(parse_error(i, "unexpected character")),
            }
        }
        if current.is_some() || !number.is_empty() {
            return Err(parse_error(text.len(), "unterminated cycle"));
        }
        let refs: Vec<&[u8]> = cycles.iter().map(Vec::as_slice).collect();
        PartialPerm::from_cycles(n, &refs)
    }

    /// Disjoint cycle notation of a permutation, fixed points omitted.
    pub fn cycle_string(&self) -> Option<String> {
        if !self.is_permutation() {
            return None;
        }
        let mut seen = 0u32;
        let mut out = String::new();
        for start in 0..self.n {
            if seen >> start & 1 == 1 || self.apply(start) == Some(start) {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while seen >> x & 1 == 0 {
                seen |= 1 << x;
                cycle.push(x.to_string());
                x = self.apply(x).expect("permutation is total");
            }
            out.push_str(&format!("({})", cycle.join(" ")));
        }
        Some(if out.is_empty() { "()".into() } else { out })
    }
}

fn parse_error(position: usize, message: &str) -> SymmetricError {
    SymmetricError::Algebra(AlgebraError::Parse { position, message: message.into() })
}

impl fmt::Display for PartialPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.pairs().map(|(x, y)| format!("{x}:{y}")).collect();
        write!(f, "[{}]", items.join(", "))
    }
}

impl fmt::Debug for PartialPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "I{}{}", self.n, self)
    }
}

#[derive(Serialize, Deserialize)]
struct PartialPermRepr {
    n: u8,
    map: Vec<(u8, u8)>,
}

impl From<PartialPerm> for PartialPermRepr {
    fn from(s: PartialPerm) -> Self {
        PartialPermRepr { n: s.n, map: s.pairs().collect() }
    }
}

impl TryFrom<PartialPermRepr> for PartialPerm {
    type Error = SymmetricError;

    fn try_from(r: PartialPermRepr) -> Result<Self, SymmetricError> {
        PartialPerm::new(r.n, r.map)
    }
}

/// Every element of `I_n`, ordered by domain size, then domain bitmask, then
/// the image sequence lexicographically.
pub fn enumerate_all(n: u8) -> Vec<PartialPerm> {
    assert!(n <= MAX_POINTS);
    let mut out = Vec::new();
    for k in 0..=n as u32 {
        let mut domains: Vec<u32> = (0u32..1 << n).filter(|m| m.count_ones() == k).collect();
        domains.sort_unstable();
        for mask in domains {
            let dom: Vec<u8> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            let mut images = Vec::with_capacity(dom.len());
            extend_injections(n, &dom, &mut images, 0, &mut out);
        }
    }
    out
}

fn extend_injections(n: u8, dom: &[u8], images: &mut Vec<u8>, used: u32, out: &mut Vec<PartialPerm>) {
    if images.len() == dom.len() {
        let mut s = PartialPerm::blank(n);
        for (&x, &y) in dom.iter().zip(images.iter()) {
            s.map[x as usize] = y;
        }
        out.push(s);
        return;
    }
    for y in 0..n {
        if used >> y & 1 == 0 {
            images.push(y);
            extend_injections(n, dom, images, used | 1 << y, out);
            images.pop();
        }
    }
}

/// The `n!` permutations of `S_n` in lexicographic order of image sequences.
pub fn enumerate_units(n: u8) -> Vec<PartialPerm> {
    let dom: Vec<u8> = (0..n).collect();
    let mut out = Vec::new();
    extend_injections(n, &dom, &mut Vec::new(), 0, &mut out);
    out
}
