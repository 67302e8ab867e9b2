//! Boolean algebras of idempotents.
//!
//! Two concrete algebras live here: clopen subsets of n-ary Cantor space
//! ([`Clopen`], the countable atomless algebra) and subsets of a finite set
//! ([`FiniteSet`]). Both are reached by the monoid models through the
//! [`BooleanAlgebra`] interface so that downstream code is model-generic.

mod clopen;
mod finite_set;
mod word;

use std::fmt::Debug;
use std::hash::Hash;

use thiserror::Error;

pub use clopen::{equalize_decompositions, Clopen};
pub use finite_set::{FiniteSet, MAX_UNIVERSE};
pub use word::{words_of_length, words_up_to, Word, MAX_ARITY};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("letter {letter} is not in the alphabet of size {arity}")]
    InvalidLetter { letter: u8, arity: u8 },
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: u8, right: u8 },
    #[error("arity {0} is not supported (expected 2..=10)")]
    UnsupportedArity(u8),
    #[error("universe of size {0} is too large")]
    UniverseTooLarge(u8),
    #[error("point {point} is outside the universe of size {n}")]
    PointOutOfRange { point: u8, n: u8 },
    #[error("the clopen set is empty")]
    ZeroClopen,
    #[error("cannot equalize {left} and {right} cylinders for arity {arity}: counts differ modulo arity - 1")]
    IncompatibleCounts { left: usize, right: usize, arity: u8 },
    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },
}

impl AlgebraError {
    /// Shifts a parse error position by `offset`.
    pub(crate) fn at(self, offset: usize) -> Self {
        match self {
            AlgebraError::Parse { position, message } => {
                AlgebraError::Parse { position: position + offset, message }
            }
            other => other,
        }
    }
}

/// A Boolean algebra given as a context object; values of the wrong arity or
/// universe are a caller bug and cause a panic.
pub trait BooleanAlgebra {
    type Value: Clone + Eq + Hash + Debug;

    fn zero(&self) -> Self::Value;
    fn one(&self) -> Self::Value;
    fn join(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn meet(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn complement(&self, a: &Self::Value) -> Self::Value;

    fn minus(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        self.meet(a, &self.complement(b))
    }

    fn is_zero(&self, a: &Self::Value) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Value) -> bool {
        *a == self.one()
    }

    /// `a <= b` iff `a` meets the complement of `b` trivially.
    fn leq(&self, a: &Self::Value, b: &Self::Value) -> bool {
        self.is_zero(&self.minus(a, b))
    }

    fn disjoint(&self, a: &Self::Value, b: &Self::Value) -> bool {
        self.is_zero(&self.meet(a, b))
    }

    fn join_all<'a, I>(&self, values: I) -> Self::Value
    where
        I: IntoIterator<Item = &'a Self::Value>,
        Self::Value: 'a,
    {
        values.into_iter().fold(self.zero(), |acc, v| self.join(&acc, v))
    }
}

/// Clopen subsets of Cantor space over an alphabet of `arity` letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CantorAlgebra {
    arity: u8,
}

impl CantorAlgebra {
    pub fn new(arity: u8) -> Result<Self, AlgebraError> {
        word::check_arity(arity)?;
        Ok(CantorAlgebra { arity })
    }

    pub fn arity(&self) -> u8 {
        self.arity
    }
}

impl BooleanAlgebra for CantorAlgebra {
    type Value = Clopen;

    fn zero(&self) -> Clopen {
        Clopen::zero(self.arity)
    }

    fn one(&self) -> Clopen {
        Clopen::one(self.arity)
    }

    fn join(&self, a: &Clopen, b: &Clopen) -> Clopen {
        a.union(b).expect("clopen arity matches its algebra")
    }

    fn meet(&self, a: &Clopen, b: &Clopen) -> Clopen {
        a.intersect(b).expect("clopen arity matches its algebra")
    }

    fn complement(&self, a: &Clopen) -> Clopen {
        a.complement()
    }
}

/// The powerset of `{0, .., n-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PowersetAlgebra {
    n: u8,
}

impl PowersetAlgebra {
    pub fn new(n: u8) -> Result<Self, AlgebraError> {
        if n > MAX_UNIVERSE {
            return Err(AlgebraError::UniverseTooLarge(n));
        }
        Ok(PowersetAlgebra { n })
    }

    pub fn size(&self) -> u8 {
        self.n
    }

    /// Singletons: the atoms of the algebra.
    pub fn atoms(&self) -> Vec<FiniteSet> {
        (0..self.n).map(|p| FiniteSet::singleton(self.n, p).expect("point in range")).collect()
    }
}

impl BooleanAlgebra for PowersetAlgebra {
    type Value = FiniteSet;

    fn zero(&self) -> FiniteSet {
        FiniteSet::empty(self.n)
    }

    fn one(&self) -> FiniteSet {
        FiniteSet::full(self.n)
    }

    fn join(&self, a: &FiniteSet, b: &FiniteSet) -> FiniteSet {
        a.union(b).expect("set universe matches its algebra")
    }

    fn meet(&self, a: &FiniteSet, b: &FiniteSet) -> FiniteSet {
        a.intersect(b).expect("set universe matches its algebra")
    }

    fn complement(&self, a: &FiniteSet) -> FiniteSet {
        a.complement()
    }
}

/// The product of two Boolean algebras, with componentwise operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProductAlgebra<A, B>(pub A, pub B);

impl<A: BooleanAlgebra, B: BooleanAlgebra> BooleanAlgebra for ProductAlgebra<A, B> {
    type Value = (A::Value, B::Value);

    fn zero(&self) -> Self::Value {
        (self.0.zero(), self.1.zero())
    }

    fn one(&self) -> Self::Value {
        (self.0.one(), self.1.one())
    }

    fn join(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        (self.0.join(&a.0, &b.0), self.1.join(&a.1, &b.1))
    }

    fn meet(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        (self.0.meet(&a.0, &b.0), self.1.meet(&a.1, &b.1))
    }

    fn complement(&self, a: &Self::Value) -> Self::Value {
        (self.0.complement(&a.0), self.1.complement(&a.1))
    }
}

/// Splits `"{a, b, c}"` (with the given delimiters) into trimmed items and
/// their byte offsets. Commas nested in parentheses or brackets are kept.
pub(crate) fn split_delimited(
    text: &str,
    open: char,
    close: char,
) -> Result<Vec<(usize, &str)>, AlgebraError> {
    let lead = text.len() - text.trim_start().len();
    let t = text.trim();
    if !t.starts_with(open) {
        return Err(AlgebraError::Parse { position: lead, message: format!("expected '{open}'") });
    }
    if !t.ends_with(close) || t.len() < 2 {
        return Err(AlgebraError::Parse {
            position: lead + t.len(),
            message: format!("expected '{close}'"),
        });
    }
    let inner_start = lead + open.len_utf8();
    let inner = &t[open.len_utf8()..t.len() - close.len_utf8()];
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut items = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in inner.char_indices() {
        match ch {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => depth -= 1,
            ',' if depth == 0 => {
                items.push((start, &inner[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    items.push((start, &inner[start..]));
    let mut out = Vec::with_capacity(items.len());
    for (s, item) in items {
        let pad = item.len() - item.trim_start().len();
        let trimmed = item.trim();
        if trimmed.is_empty() {
            return Err(AlgebraError::Parse {
                position: inner_start + s,
                message: "empty item".into(),
            });
        }
        out.push((inner_start + s + pad, trimmed));
    }
    Ok(out)
}
