use serde::Serialize;

use crate::algebra::{BooleanAlgebra, Clopen, FiniteSet, Word};
use crate::cuntz::{extend_to_unit, unit_extension, CuntzError, CuntzModel, PrefixBijection};
use crate::inverse::{Calculus, Idem, Model};
use crate::symmetric::{PartialPerm, SymmetricModel};

use super::AxiomError;

/// How an element is cut into restrictions of units.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FactorOrder {
    /// One unit above the whole element when possible.
    #[default]
    Whole,
    /// One unit per substitution pair or point.
    Pairwise,
}

/// `s = ⋁ g_i e_i` with units `g_i` and idempotents `e_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Factorization<E, I> {
    pub pieces: Vec<(E, I)>,
}

impl<E: Clone, I: Clone> Factorization<E, I> {
    /// The join `⋁ g_i e_i`.
    pub fn recompose<M>(&self, model: &M) -> Result<E, AxiomError>
    where
        M: Model<Elem = E>,
        M::Algebra: BooleanAlgebra<Value = I>,
    {
        let parts: Vec<E> = self.pieces.iter().map(|(g, e)| model.mul(g, &model.embed(e))).collect();
        Ok(model.join(&parts)?)
    }
}

/// Models in which every element is a join of restrictions of units.
pub trait Factorizable: Model {
    /// Unmerged pieces `(g_i, e_i)`; `s` is nonzero.
    fn factor_pieces(&self, s: &Self::Elem, order: FactorOrder) -> Result<Vec<(Self::Elem, Idem<Self>)>, AxiomError>;
}

/// Factorizes a nonzero element using [`FactorOrder::Whole`].
pub fn piecewise_factorize<M: Factorizable>(model: &M, s: &M::Elem) -> Result<Factorization<M::Elem, Idem<M>>, AxiomError> {
    factorize_with(model, s, FactorOrder::Whole)
}

/// Factorizes `s`, merges pieces sharing a unit, and checks that every `g_i`
/// is a unit and that the pieces join back to `s`.
pub fn factorize_with<M: Factorizable>(
    model: &M,
    s: &M::Elem,
    order: FactorOrder,
) -> Result<Factorization<M::Elem, Idem<M>>, AxiomError> {
    if model.is_zero(s) {
        return Err(AxiomError::ZeroElement);
    }
    let alg = model.algebra();
    let mut pieces: Vec<(M::Elem, Idem<M>)> = Vec::new();
    for (g, e) in model.factor_pieces(s, order)? {
        match pieces.iter_mut().find(|(h, _)| *h == g) {
            Some((_, f)) => *f = alg.join(f, &e),
            None => pieces.push((g, e)),
        }
    }
    if !pieces.iter().all(|(g, _)| model.is_unit(g)) {
        return Err(AxiomError::PostconditionFailed("factor is not a unit"));
    }
    let factorization = Factorization { pieces };
    if factorization.recompose(model)? != *s {
        return Err(AxiomError::PostconditionFailed("pieces do not join to the element"));
    }
    Ok(factorization)
}

impl Factorizable for SymmetricModel {
    /// `Whole` completes `s` to a permutation by matching the missing points
    /// in increasing order; `Pairwise` uses the transposition `(x y)` for each
    /// `x ↦ y`.
    fn factor_pieces(&self, s: &PartialPerm, order: FactorOrder) -> Result<Vec<(PartialPerm, FiniteSet)>, AxiomError> {
        let n = self.n();
        match order {
            FactorOrder::Whole => {
                let free_sources = s.domain().complement();
                let free_targets = s.range().complement();
                let rest = free_sources.points().zip(free_targets.points());
                let g = PartialPerm::new(n, s.pairs().chain(rest)).expect("completion is a bijection");
                Ok(vec![(g, s.domain())])
            }
            FactorOrder::Pairwise => Ok(s
                .pairs()
                .map(|(x, y)| {
                    let g = if x == y {
                        PartialPerm::identity(n)
                    } else {
                        PartialPerm::transposition(n, x, y).expect("points in range")
                    };
                    (g, FiniteSet::singleton(n, x).expect("point in range"))
                })
                .collect()),
        }
    }
}

impl Factorizable for CuntzModel {
    /// `Whole` extends `s` to one unit when the complements of its domain and
    /// range can be matched, falling back to `Pairwise` otherwise. `Pairwise`
    /// extends each pair separately; a pair with exactly one empty side is
    /// first split into its children.
    fn factor_pieces(&self, s: &PrefixBijection, order: FactorOrder) -> Result<Vec<(PrefixBijection, Clopen)>, AxiomError> {
        if order == FactorOrder::Whole {
            match extend_to_unit(s) {
                Ok(g) => return Ok(vec![(g, s.domain())]),
                Err(CuntzError::UnitExtensionImpossible) | Err(CuntzError::Algebra(_)) => {}
                Err(other) => return Err(other.into()),
            }
        }
        let arity = self.arity();
        let mut pending: Vec<(Word, Word)> = s.pairs().to_vec();
        let mut out = Vec::new();
        while let Some((u, v)) = pending.pop() {
            if u.is_empty() != v.is_empty() {
                pending.extend((0..arity).map(|a| (u.child(a), v.child(a))));
                continue;
            }
            let g = unit_extension(arity, &u, &v)?;
            out.push((g, Clopen::cylinder(arity, u)?));
        }
        out.reverse();
        Ok(out)
    }
}
