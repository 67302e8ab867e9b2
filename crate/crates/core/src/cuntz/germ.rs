use std::fmt;
use std::hash::{Hash, Hasher};

use serde::Serialize;

use crate::algebra::Word;

use super::bijection::PrefixBijection;
use super::point::Point;
use super::CuntzError;

/// The pair `(u, v)` of `s` whose domain cylinder contains `x`.
pub fn local_pair<'a>(s: &'a PrefixBijection, x: &Point) -> Option<&'a (Word, Word)> {
    s.pairs().iter().find(|(u, _)| x.in_cylinder(u))
}

/// The image of `x` under `s`.
pub fn act(s: &PrefixBijection, x: &Point) -> Result<Point, CuntzError> {
    if s.arity() != x.arity() {
        return Err(crate::algebra::AlgebraError::ArityMismatch { left: s.arity(), right: x.arity() }.into());
    }
    let (u, v) = local_pair(s, x).ok_or_else(|| CuntzError::PointOutsideDomain(x.to_string()))?;
    Ok(x.drop_front(u.len()).prepend(v))
}

/// The germ of an element at a point of its domain.
///
/// Two germs are equal when their base points agree and their elements agree
/// on some cylinder around the base.
#[derive(Clone, Serialize)]
pub struct Germ {
    element: PrefixBijection,
    base: Point,
}

impl Germ {
    pub fn new(element: PrefixBijection, base: Point) -> Result<Self, CuntzError> {
        act(&element, &base)?;
        Ok(Germ { element, base })
    }

    pub fn element(&self) -> &PrefixBijection {
        &self.element
    }

    pub fn base(&self) -> &Point {
        &self.base
    }

    /// The image of the base point.
    pub fn target(&self) -> Point {
        act(&self.element, &self.base).expect("base lies in the domain")
    }

    /// The substitution acting near the base with common trailing letters
    /// removed; two germs at one base are equal iff these agree.
    pub fn local_substitution(&self) -> (Word, Word) {
        let (u, v) = local_pair(&self.element, &self.base).expect("base lies in the domain");
        let (mut a, mut b) = (u.letters().to_vec(), v.letters().to_vec());
        while let (Some(x), Some(y)) = (a.last(), b.last()) {
            if x != y {
                break;
            }
            a.pop();
            b.pop();
        }
        (Word::from_letters_unchecked(a), Word::from_letters_unchecked(b))
    }

    pub fn inverse(&self) -> Germ {
        Germ { element: self.element.inverse(), base: self.target() }
    }

    /// `self · other`, defined when the base of `self` is the target of `other`.
    pub fn compose(&self, other: &Germ) -> Result<Germ, CuntzError> {
        if self.base != other.target() {
            return Err(CuntzError::GermsNotComposable);
        }
        Ok(Germ { element: self.element.compose(&other.element)?, base: other.base.clone() })
    }

    pub fn is_idempotent(&self) -> bool {
        let (u, v) = self.local_substitution();
        u == v
    }
}

pub fn germ_compose(a: &Germ, b: &Germ) -> Result<Germ, CuntzError> {
    a.compose(b)
}

impl PartialEq for Germ {
    fn eq(&self, other: &Germ) -> bool {
        self.base == other.base && self.local_substitution() == other.local_substitution()
    }
}

impl Eq for Germ {}

impl Hash for Germ {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.base.hash(state);
        self.local_substitution().hash(state);
    }
}

impl fmt::Debug for Germ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "germ({} at {})", self.element, self.base)
    }
}
