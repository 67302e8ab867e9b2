use std::collections::HashSet;

use serde::Serialize;

use crate::algebra::{BooleanAlgebra, Clopen, FiniteSet};
use crate::axioms::Generators;
use crate::cuntz::{CuntzModel, Point, PrefixBijection};
use crate::inverse::{Calculus, FiniteModel, Idem, Model};
use crate::symmetric::{PartialPerm, SymmetricModel};

/// Supports of involutions lying in an ultrafilter, each paired with its
/// involution.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkeletonFilter<E, I> {
    pub generators: Vec<(I, E)>,
}

impl<E, I: Clone + PartialEq> SkeletonFilter<E, I> {
    pub fn supports(&self) -> Vec<I> {
        let mut out: Vec<I> = Vec::new();
        for (e, _) in &self.generators {
            if !out.contains(e) {
                out.push(e.clone());
            }
        }
        out
    }

    /// The meet of all supports; `1` when there are none.
    pub fn meet<A: BooleanAlgebra<Value = I>>(&self, alg: &A) -> I {
        self.generators.iter().fold(alg.one(), |acc, (e, _)| alg.meet(&acc, e))
    }

    /// Whether the meet of any two supports lies above some support.
    pub fn is_down_directed<A: BooleanAlgebra<Value = I>>(&self, alg: &A) -> bool {
        let supports = self.supports();
        supports.iter().all(|a| {
            supports.iter().all(|b| {
                let both = alg.meet(a, b);
                supports.iter().any(|c| alg.leq(c, &both))
            })
        })
    }
}

/// Keeps the involutions among `units` whose support satisfies `contains`.
pub fn support_skeleton<M: Model>(
    model: &M,
    contains: impl Fn(&Idem<M>) -> bool,
    units: impl IntoIterator<Item = M::Elem>,
) -> SkeletonFilter<M::Elem, Idem<M>> {
    let one = model.one();
    let mut seen = HashSet::new();
    let generators = units
        .into_iter()
        .filter(|t| *t != one && model.mul(t, t) == one)
        .filter(|t| seen.insert(t.clone()))
        .map(|t| (model.sigma_idem(&t), t))
        .filter(|(e, _)| contains(e))
        .collect();
    SkeletonFilter { generators }
}

/// The skeleton of the ultrafilter at a point of `I_n`, over the whole unit group.
pub fn skeleton_at_atom(model: &SymmetricModel, atom: u8) -> SkeletonFilter<PartialPerm, FiniteSet> {
    support_skeleton(model, |e: &FiniteSet| e.contains(atom), model.units())
}

/// The skeleton of the ultrafilter at a point of Cantor space, over products
/// of at most `length_cap` cylinder swaps on words of length at most `depth`.
pub fn skeleton_at_point(
    model: &CuntzModel,
    x: &Point,
    depth: usize,
    length_cap: usize,
) -> SkeletonFilter<PrefixBijection, Clopen> {
    let generators = model.sym_generators(depth);
    let mut seen: HashSet<PrefixBijection> = HashSet::from([model.one()]);
    let mut layer = vec![model.one()];
    let mut products = Vec::new();
    for _ in 0..length_cap {
        let mut next = Vec::new();
        for g in &layer {
            for s in &generators {
                let h = model.mul(s, g);
                if seen.insert(h.clone()) {
                    products.push(h.clone());
                    next.push(h);
                }
            }
        }
        layer = next;
    }
    support_skeleton(model, |e: &Clopen| x.in_clopen(e), products)
}
