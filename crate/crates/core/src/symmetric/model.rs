use crate::algebra::{FiniteSet, PowersetAlgebra, ProductAlgebra};
use crate::inverse::{FiniteModel, Idem, Model};

use super::perm::{enumerate_all, enumerate_units, PartialPerm, MAX_POINTS};
use super::SymmetricError;

/// The symmetric inverse monoid `I_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymmetricModel {
    algebra: PowersetAlgebra,
}

impl SymmetricModel {
    pub fn new(n: u8) -> Result<Self, SymmetricError> {
        if n > MAX_POINTS {
            return Err(SymmetricError::TooManyPoints(n));
        }
        Ok(SymmetricModel { algebra: PowersetAlgebra::new(n)? })
    }

    pub fn n(&self) -> u8 {
        self.algebra.size()
    }

    /// Singleton idempotents.
    pub fn atoms(&self) -> Vec<FiniteSet> {
        self.algebra.atoms()
    }

    /// All transpositions `(i j)`, `i < j`, in lexicographic order.
    pub fn transpositions(&self) -> Vec<PartialPerm> {
        let n = self.n();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| PartialPerm::transposition(n, i, j).expect("points in range"))
            .collect()
    }
}

impl Model for SymmetricModel {
    type Elem = PartialPerm;
    type Algebra = PowersetAlgebra;

    fn algebra(&self) -> &PowersetAlgebra {
        &self.algebra
    }

    fn mul(&self, s: &PartialPerm, t: &PartialPerm) -> PartialPerm {
        s.compose(t)
    }

    fn inv(&self, s: &PartialPerm) -> PartialPerm {
        s.inverse()
    }

    fn zero(&self) -> PartialPerm {
        PartialPerm::zero(self.n())
    }

    fn one(&self) -> PartialPerm {
        PartialPerm::identity(self.n())
    }

    fn is_idempotent(&self, s: &PartialPerm) -> bool {
        s.pairs().all(|(x, y)| x == y)
    }

    fn phi_raw(&self, s: &PartialPerm) -> FiniteSet {
        s.fixed_points()
    }

    fn embed(&self, e: &FiniteSet) -> PartialPerm {
        PartialPerm::identity_on(e)
    }

    fn extract(&self, s: &PartialPerm) -> Option<FiniteSet> {
        self.is_idempotent(s).then(|| s.domain())
    }

    fn join_compatible(&self, parts: &[PartialPerm]) -> PartialPerm {
        parts.iter().fold(self.zero(), |acc, p| {
            acc.union(p).expect("join of compatible partial bijections is injective")
        })
    }

    fn native_meet(&self, s: &PartialPerm, t: &PartialPerm) -> Option<PartialPerm> {
        let common: Vec<(u8, u8)> = s.pairs().filter(|&(x, y)| t.apply(x) == Some(y)).collect();
        Some(PartialPerm::new(self.n(), common).expect("subset of a partial bijection"))
    }
}

impl FiniteModel for SymmetricModel {
    fn elements(&self) -> Vec<PartialPerm> {
        enumerate_all(self.n())
    }

    fn units(&self) -> Vec<PartialPerm> {
        enumerate_units(self.n())
    }

    fn idempotents(&self) -> Vec<PartialPerm> {
        FiniteSet::all_subsets(self.n()).map(|e| PartialPerm::identity_on(&e)).collect()
    }
}

/// The direct product of two models with componentwise operations.
#[derive(Debug, Clone)]
pub struct ProductModel<A: Model, B: Model> {
    pub left: A,
    pub right: B,
    algebra: ProductAlgebra<A::Algebra, B::Algebra>,
}

impl<A: Model, B: Model> ProductModel<A, B>
where
    A::Algebra: Clone,
    B::Algebra: Clone,
{
    pub fn new(left: A, right: B) -> Self {
        let algebra = ProductAlgebra(left.algebra().clone(), right.algebra().clone());
        ProductModel { left, right, algebra }
    }
}

impl<A: Model, B: Model> Model for ProductModel<A, B> {
    type Elem = (A::Elem, B::Elem);
    type Algebra = ProductAlgebra<A::Algebra, B::Algebra>;

    fn algebra(&self) -> &Self::Algebra {
        &self.algebra
    }

    fn mul(&self, s: &Self::Elem, t: &Self::Elem) -> Self::Elem {
        (self.left.mul(&s.0, &t.0), self.right.mul(&s.1, &t.1))
    }

    fn inv(&self, s: &Self::Elem) -> Self::Elem {
        (self.left.inv(&s.0), self.right.inv(&s.1))
    }

    fn zero(&self) -> Self::Elem {
        (self.left.zero(), self.right.zero())
    }

    fn one(&self) -> Self::Elem {
        (self.left.one(), self.right.one())
    }

    fn is_idempotent(&self, s: &Self::Elem) -> bool {
        self.left.is_idempotent(&s.0) && self.right.is_idempotent(&s.1)
    }

    fn phi_raw(&self, s: &Self::Elem) -> Idem<Self> {
        (self.left.phi_raw(&s.0), self.right.phi_raw(&s.1))
    }

    fn embed(&self, e: &Idem<Self>) -> Self::Elem {
        (self.left.embed(&e.0), self.right.embed(&e.1))
    }

    fn extract(&self, s: &Self::Elem) -> Option<Idem<Self>> {
        Some((self.left.extract(&s.0)?, self.right.extract(&s.1)?))
    }

    fn join_compatible(&self, parts: &[Self::Elem]) -> Self::Elem {
        let (l, r): (Vec<A::Elem>, Vec<B::Elem>) = parts.iter().cloned().unzip();
        (self.left.join_compatible(&l), self.right.join_compatible(&r))
    }

    fn native_meet(&self, s: &Self::Elem, t: &Self::Elem) -> Option<Self::Elem> {
        Some((self.left.native_meet(&s.0, &t.0)?, self.right.native_meet(&s.1, &t.1)?))
    }
}

impl<A: FiniteModel, B: FiniteModel> FiniteModel for ProductModel<A, B> {
    fn elements(&self) -> Vec<Self::Elem> {
        let right = self.right.elements();
        self.left
            .elements()
            .into_iter()
            .flat_map(|a| right.iter().map(move |b| (a.clone(), b.clone())))
            .collect()
    }

    fn units(&self) -> Vec<Self::Elem> {
        let right = self.right.units();
        self.left
            .units()
            .into_iter()
            .flat_map(|a| right.iter().map(move |b| (a.clone(), b.clone())))
            .collect()
    }
}
