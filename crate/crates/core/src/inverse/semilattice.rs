use crate::algebra::{BooleanAlgebra, FiniteSet, PowersetAlgebra};

use super::{FiniteModel, Idem, Model};

/// A Boolean algebra viewed as an inverse monoid in which every element is
/// idempotent: multiplication is meet and every element is its own inverse.
#[derive(Debug, Clone)]
pub struct SemilatticeModel<A> {
    algebra: A,
}

impl<A: BooleanAlgebra> SemilatticeModel<A> {
    pub fn new(algebra: A) -> Self {
        SemilatticeModel { algebra }
    }
}

impl<A: BooleanAlgebra> Model for SemilatticeModel<A> {
    type Elem = A::Value;
    type Algebra = A;

    fn algebra(&self) -> &A {
        &self.algebra
    }

    fn mul(&self, s: &A::Value, t: &A::Value) -> A::Value {
        self.algebra.meet(s, t)
    }

    fn inv(&self, s: &A::Value) -> A::Value {
        s.clone()
    }

    fn zero(&self) -> A::Value {
        self.algebra.zero()
    }

    fn one(&self) -> A::Value {
        self.algebra.one()
    }

    fn is_idempotent(&self, _s: &A::Value) -> bool {
        true
    }

    fn phi_raw(&self, s: &A::Value) -> Idem<Self> {
        s.clone()
    }

    fn embed(&self, e: &Idem<Self>) -> A::Value {
        e.clone()
    }

    fn extract(&self, s: &A::Value) -> Option<Idem<Self>> {
        Some(s.clone())
    }

    fn join_compatible(&self, parts: &[A::Value]) -> A::Value {
        self.algebra.join_all(parts)
    }
}

impl FiniteModel for SemilatticeModel<PowersetAlgebra> {
    fn elements(&self) -> Vec<FiniteSet> {
        FiniteSet::all_subsets(self.algebra.size()).collect()
    }
}
