use std::collections::HashMap;

use serde::Serialize;

use crate::algebra::{BooleanAlgebra, FiniteSet};
use crate::axioms::{factorize_with, FactorOrder};
use crate::inverse::{Calculus, FiniteModel, Idem, Model};
use crate::symmetric::{enumerate_all, PartialPerm, SymmetricModel};

use super::iso::GroupIso;
use super::skeleton::skeleton_at_atom;
use super::ReconstructionError;

/// The image under `β` of the ultrafilter at `atom`: the filter generated by
/// the supports `σ(α(t))` for involutions `t` moving `atom`, which must be
/// the ultrafilter at a single point of the target.
pub fn beta(
    source: &SymmetricModel,
    target: &SymmetricModel,
    alpha: &GroupIso<PartialPerm>,
    atom: u8,
) -> Result<u8, ReconstructionError> {
    let skeleton = skeleton_at_atom(source, atom);
    let alg = target.algebra();
    let meet = skeleton
        .generators
        .iter()
        .fold(alg.one(), |acc, (_, t)| alg.meet(&acc, &target.sigma_idem(&alpha.forward(t))));
    match meet.len() {
        1 => Ok(meet.points().next().expect("one point")),
        _ => Err(ReconstructionError::SkeletonNotUltrafilter { atom, meet: meet.to_string() }),
    }
}

/// The idempotent map induced by `β`, acting pointwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Gamma {
    images: Vec<u8>,
    target_n: u8,
}

impl Gamma {
    /// `β` on every point of the source; must be injective.
    pub fn from_beta(
        source: &SymmetricModel,
        target: &SymmetricModel,
        alpha: &GroupIso<PartialPerm>,
    ) -> Result<Self, ReconstructionError> {
        let images = (0..source.n()).map(|x| beta(source, target, alpha, x)).collect::<Result<Vec<u8>, _>>()?;
        for (i, a) in images.iter().enumerate() {
            if let Some(j) = images[..i].iter().position(|b| b == a) {
                return Err(ReconstructionError::NotAnIsomorphism {
                    first: format!("{{{j}}}"),
                    second: format!("{{{i}}}"),
                });
            }
        }
        Ok(Gamma { images, target_n: target.n() })
    }

    pub fn point(&self, x: u8) -> u8 {
        self.images[x as usize]
    }

    /// `γ(e)`: the join of the images of the points of `e`.
    pub fn apply(&self, e: &FiniteSet) -> FiniteSet {
        FiniteSet::from_points(self.target_n, e.points().map(|x| self.point(x))).expect("images in range")
    }
}

/// Checks `β(g F g⁻¹) = α(g) β(F) α(g)⁻¹` for every unit `g` and point `F`.
pub fn check_beta_equivariance(
    source: &SymmetricModel,
    gamma: &Gamma,
    alpha: &GroupIso<PartialPerm>,
) -> Result<(), ReconstructionError> {
    for g in source.units() {
        let a = alpha.forward(&g);
        for x in 0..source.n() {
            let moved = g.apply(x).expect("units are total");
            if gamma.point(moved) != a.apply(gamma.point(x)).expect("units are total") {
                return Err(ReconstructionError::EquivarianceFailure { g: g.to_string(), e: format!("{{{x}}}") });
            }
        }
    }
    Ok(())
}

/// Checks `γ(σ(t)) = σ(α(t))` for involutions `t` and
/// `γ(g e g⁻¹) = α(g) γ(e) α(g)⁻¹` for all units `g` and points `e`.
pub fn check_gamma_equivariance(
    source: &SymmetricModel,
    target: &SymmetricModel,
    gamma: &Gamma,
    alpha: &GroupIso<PartialPerm>,
) -> Result<(), ReconstructionError> {
    let units = source.units();
    let one = source.one();
    for t in units.iter().filter(|t| **t != one && source.mul(t, t) == one) {
        if gamma.apply(&source.sigma_idem(t)) != target.sigma_idem(&alpha.forward(t)) {
            return Err(ReconstructionError::EquivarianceFailure {
                g: t.to_string(),
                e: source.sigma_idem(t).to_string(),
            });
        }
    }
    for g in &units {
        let a = alpha.forward(g);
        for e in source.atoms() {
            let lhs = gamma.apply(&source.extract(&source.conjugate(g, &source.embed(&e))).expect("idempotent"));
            let rhs = target.extract(&target.conjugate(&a, &target.embed(&gamma.apply(&e)))).expect("idempotent");
            if lhs != rhs {
                return Err(ReconstructionError::EquivarianceFailure { g: g.to_string(), e: e.to_string() });
            }
        }
    }
    Ok(())
}

/// `θ(g e) = α(g) γ(e)` for a unit `g` and idempotent `e`, after checking
/// `e ≤ g ⇔ γ(e) ≤ α(g)`. `gamma` may be any oracle on idempotents.
pub fn theta_with<M: Model>(
    model: &M,
    alpha: &GroupIso<M::Elem>,
    gamma: impl Fn(&Idem<M>) -> Idem<M>,
    g: &M::Elem,
    e: &Idem<M>,
) -> Result<M::Elem, ReconstructionError>
where
    M::Elem: std::fmt::Debug + 'static,
    Idem<M>: std::fmt::Debug,
{
    let alg = model.algebra();
    let a = alpha.forward(g);
    let image = gamma(e);
    if alg.leq(e, &model.phi_raw(g)) != alg.leq(&image, &model.phi_raw(&a)) {
        return Err(ReconstructionError::OrderTransferFailure { g: format!("{g:?}"), e: format!("{e:?}") });
    }
    Ok(model.mul(&a, &model.embed(&image)))
}

/// `θ` on `I_n` with `γ` induced by `β`.
pub fn theta(
    target: &SymmetricModel,
    alpha: &GroupIso<PartialPerm>,
    gamma: &Gamma,
    g: &PartialPerm,
    e: &FiniteSet,
) -> Result<PartialPerm, ReconstructionError> {
    let source_order = e.leq(&g.fixed_points()).expect("same universe");
    let a = alpha.forward(g);
    let image = gamma.apply(e);
    if source_order != image.leq(&a.fixed_points()).expect("same universe") {
        return Err(ReconstructionError::OrderTransferFailure { g: g.to_string(), e: e.to_string() });
    }
    Ok(target.mul(&a, &target.embed(&image)))
}

/// The rebuilt monoid isomorphism as an explicit table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiniteTable {
    pub entries: Vec<(PartialPerm, PartialPerm)>,
    #[serde(skip)]
    index: HashMap<PartialPerm, usize>,
}

impl FiniteTable {
    fn new(entries: Vec<(PartialPerm, PartialPerm)>) -> Self {
        let index = entries.iter().enumerate().map(|(i, (s, _))| (*s, i)).collect();
        FiniteTable { entries, index }
    }

    pub fn get(&self, s: &PartialPerm) -> Option<&PartialPerm> {
        self.index.get(s).map(|&i| &self.entries[i].1)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Checks that the table is a bijection onto `target` and multiplicative.
    pub fn verify_isomorphism(&self, source: &SymmetricModel, target: &SymmetricModel) -> Result<(), ReconstructionError> {
        let mut preimage: HashMap<PartialPerm, PartialPerm> = HashMap::new();
        for (s, image) in &self.entries {
            if let Some(other) = preimage.insert(*image, *s) {
                return Err(ReconstructionError::NotAnIsomorphism { first: other.to_string(), second: s.to_string() });
            }
        }
        if preimage.len() != enumerate_all(target.n()).len() {
            return Err(ReconstructionError::NotAnIsomorphism {
                first: format!("{} images", preimage.len()),
                second: format!("{} target elements", enumerate_all(target.n()).len()),
            });
        }
        for (s, x) in &self.entries {
            for (t, y) in &self.entries {
                let st = source.mul(s, t);
                if *self.get(&st).expect("table covers the source") != target.mul(x, y) {
                    return Err(ReconstructionError::NotAnIsomorphism { first: s.to_string(), second: t.to_string() });
                }
            }
        }
        Ok(())
    }
}

/// Rebuilds a monoid isomorphism `I_n → I_m` from a unit group isomorphism:
/// `β` on points, `γ` on idempotents, `θ` on restrictions of units, and `Θ`
/// on every element via a factorization in the given order. The result is
/// checked against the full multiplication table.
pub fn reconstruct_with(
    source: &SymmetricModel,
    target: &SymmetricModel,
    alpha: &GroupIso<PartialPerm>,
    order: FactorOrder,
) -> Result<FiniteTable, ReconstructionError> {
    let gamma = Gamma::from_beta(source, target, alpha)?;
    check_beta_equivariance(source, &gamma, alpha)?;
    check_gamma_equivariance(source, target, &gamma, alpha)?;
    let mut entries = Vec::new();
    for s in enumerate_all(source.n()) {
        if s.is_empty() {
            entries.push((s, target.zero()));
            continue;
        }
        let factorization = factorize_with(source, &s, order)?;
        let parts = factorization
            .pieces
            .iter()
            .map(|(g, e)| theta(target, alpha, &gamma, g, e))
            .collect::<Result<Vec<_>, _>>()?;
        let image = target
            .join(&parts)
            .map_err(|_| ReconstructionError::NotAnIsomorphism { first: s.to_string(), second: "pieces".into() })?;
        entries.push((s, image));
    }
    let table = FiniteTable::new(entries);
    table.verify_isomorphism(source, target)?;
    Ok(table)
}

/// [`reconstruct_with`] using the default factorization order.
pub fn reconstruct(
    source: &SymmetricModel,
    target: &SymmetricModel,
    alpha: &GroupIso<PartialPerm>,
) -> Result<FiniteTable, ReconstructionError> {
    reconstruct_with(source, target, alpha, FactorOrder::default())
}
