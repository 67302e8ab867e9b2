//! Model-generic calculus for Boolean inverse ∧-monoids.
//!
//! A [`Model`] supplies multiplication, inversion, the idempotent Boolean
//! algebra and a fixed-point operator. Everything else (domains and ranges,
//! the natural order, compatibility, meets, supports, special involutions and
//! 3-cycles) is derived once in [`Calculus`] and shared by every model.

mod calculus;
mod clifford;
mod semilattice;

use std::fmt::Debug;
use std::hash::Hash;

use thiserror::Error;

use crate::algebra::BooleanAlgebra;

pub use calculus::{Calculus, SpecialThreeCycle};
pub use clifford::{clifford_report, CliffordReport};
pub use semilattice::SemilatticeModel;

/// The idempotent algebra value type of a model.
pub type Idem<M> = <<M as Model>::Algebra as BooleanAlgebra>::Value;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("parts {first} and {second} are not compatible")]
    IncompatibleParts { first: usize, second: usize },
    #[error("element is not a nonzero infinitesimal")]
    NotInfinitesimal,
    #[error("pair is not a 2-infinitesimal: {0}")]
    NotTwoInfinitesimal(&'static str),
    #[error("element is not a unit")]
    NotAUnit,
    #[error("element is not an idempotent")]
    NotIdempotent,
    #[error("idempotent must be nonzero")]
    ZeroIdempotent,
}

/// An executable Boolean inverse ∧-monoid.
///
/// Elements handed to a model must belong to it (same arity or universe);
/// implementations panic otherwise. `mul(s, t)` is the composite "first `t`,
/// then `s`" for models of partial maps.
pub trait Model {
    type Elem: Clone + Eq + Hash + Debug;
    type Algebra: BooleanAlgebra;

    fn algebra(&self) -> &Self::Algebra;
    fn mul(&self, s: &Self::Elem, t: &Self::Elem) -> Self::Elem;
    fn inv(&self, s: &Self::Elem) -> Self::Elem;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;

    fn is_idempotent(&self, s: &Self::Elem) -> bool {
        self.mul(s, s) == *s
    }

    /// The largest idempotent below `s`, as an algebra value.
    fn phi_raw(&self, s: &Self::Elem) -> Idem<Self>;

    /// The idempotent element corresponding to an algebra value.
    fn embed(&self, e: &Idem<Self>) -> Self::Elem;

    /// The algebra value of an idempotent element, `None` for non-idempotents.
    fn extract(&self, s: &Self::Elem) -> Option<Idem<Self>>;

    /// Least upper bound of pairwise compatible elements. Callers check
    /// compatibility; see [`Calculus::join`].
    fn join_compatible(&self, parts: &[Self::Elem]) -> Self::Elem;

    /// A meet computed natively by the model, used only as a cross-check.
    fn native_meet(&self, _s: &Self::Elem, _t: &Self::Elem) -> Option<Self::Elem> {
        None
    }
}

/// A model small enough to enumerate.
pub trait FiniteModel: Model {
    fn elements(&self) -> Vec<Self::Elem>;

    fn units(&self) -> Vec<Self::Elem> {
        let one = self.one();
        self.elements()
            .into_iter()
            .filter(|s| self.mul(s, &self.inv(s)) == one && self.mul(&self.inv(s), s) == one)
            .collect()
    }

    fn idempotents(&self) -> Vec<Self::Elem> {
        self.elements().into_iter().filter(|s| self.is_idempotent(s)).collect()
    }
}

#[cfg(test)]
mod tests;
