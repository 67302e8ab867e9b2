use serde::Serialize;

use crate::algebra::BooleanAlgebra;
use crate::axioms::{f3_witness, orthogonal_piece, AxiomError, Generators, PieceModel};
use crate::cuntz::CuntzModel;
use crate::inverse::{Calculus, FiniteModel, Idem, Model};
use crate::symmetric::{ProductModel, SymmetricModel};

use super::ReconstructionError;

/// Models whose unit group can be listed in full.
pub trait EnumerableUnits: Model {
    fn unit_group(&self) -> Result<Vec<Self::Elem>, ReconstructionError>;
}

impl EnumerableUnits for SymmetricModel {
    fn unit_group(&self) -> Result<Vec<Self::Elem>, ReconstructionError> {
        Ok(self.units())
    }
}

impl<A: FiniteModel, B: FiniteModel> EnumerableUnits for ProductModel<A, B>
where
    A::Algebra: Clone,
    B::Algebra: Clone,
{
    fn unit_group(&self) -> Result<Vec<Self::Elem>, ReconstructionError> {
        Ok(self.units())
    }
}

impl EnumerableUnits for CuntzModel {
    fn unit_group(&self) -> Result<Vec<Self::Elem>, ReconstructionError> {
        Err(ReconstructionError::InfiniteGroup)
    }
}

fn require_unit<M: Model>(model: &M, g: &M::Elem) -> Result<(), ReconstructionError> {
    if model.is_unit(g) {
        Ok(())
    } else {
        Err(ReconstructionError::NotAUnit)
    }
}

fn require_involution<M: Model>(model: &M, t: &M::Elem) -> Result<(), ReconstructionError> {
    if model.is_unit(t) && model.mul(t, t) == model.one() && *t != model.one() {
        Ok(())
    } else {
        Err(ReconstructionError::NotAnInvolution)
    }
}

fn commute<M: Model>(model: &M, a: &M::Elem, b: &M::Elem) -> bool {
    model.mul(a, b) == model.mul(b, a)
}

/// Whether the unit `g` lies in the local subgroup at `e`, that is `σ(g) ≤ e`.
pub fn local_subgroup_contains<M: Model>(model: &M, g: &M::Elem, e: &Idem<M>) -> Result<bool, ReconstructionError> {
    require_unit(model, g)?;
    Ok(model.algebra().leq(&model.sigma_idem(g), e))
}

/// The centralizer `C_t` of `t` in the unit group.
pub fn centralizer<M: EnumerableUnits>(model: &M, t: &M::Elem) -> Result<Vec<M::Elem>, ReconstructionError> {
    Ok(model.unit_group()?.into_iter().filter(|g| commute(model, g, t)).collect())
}

/// `Z_t`: involutions (and 1) `s` of `C_t` commuting with `a s a⁻¹` for every `a ∈ C_t`.
pub fn zt_set<M: EnumerableUnits>(model: &M, t: &M::Elem) -> Result<Vec<M::Elem>, ReconstructionError> {
    require_involution(model, t)?;
    let ct = centralizer(model, t)?;
    let one = model.one();
    Ok(ct
        .iter()
        .filter(|s| model.mul(s, s) == one && ct.iter().all(|a| commute(model, s, &model.conjugate(a, s))))
        .cloned()
        .collect())
}

fn squares_commuting_with<M: EnumerableUnits>(model: &M, units: &[M::Elem], zt: &[M::Elem]) -> Vec<M::Elem> {
    let mut out: Vec<M::Elem> = Vec::new();
    for a in units {
        if zt.iter().all(|s| commute(model, a, s)) {
            let square = model.mul(a, a);
            if !out.contains(&square) {
                out.push(square);
            }
        }
    }
    out
}

/// `S_t`: squares of units commuting with all of `Z_t`.
pub fn st_set<M: EnumerableUnits>(model: &M, t: &M::Elem) -> Result<Vec<M::Elem>, ReconstructionError> {
    let zt = zt_set(model, t)?;
    let units = model.unit_group()?;
    Ok(squares_commuting_with(model, &units, &zt))
}

/// `W_t`: units commuting with all of `S_t`.
pub fn wt_set<M: EnumerableUnits>(model: &M, t: &M::Elem) -> Result<Vec<M::Elem>, ReconstructionError> {
    let st = st_set(model, t)?;
    Ok(model.unit_group()?.into_iter().filter(|a| st.iter().all(|b| commute(model, a, b))).collect())
}

/// Sizes of `Z_t`, `S_t`, `W_t` and of the local subgroup at `σ(t)`, and
/// whether `W_t` equals that local subgroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WtReport<E> {
    pub t: E,
    pub zt: usize,
    pub st: usize,
    pub wt: usize,
    pub local: usize,
    pub agrees: bool,
}

/// Evaluates `Z_t`, `S_t`, `W_t` by brute force and compares `W_t` with the
/// local subgroup at `σ(t)`. Disagreement is reported, not treated as an error.
pub fn wt_report<M: EnumerableUnits>(model: &M, t: &M::Elem) -> Result<WtReport<M::Elem>, ReconstructionError> {
    let units = model.unit_group()?;
    let zt = zt_set(model, t)?;
    let st = squares_commuting_with(model, &units, &zt);
    let wt: Vec<M::Elem> = units.iter().filter(|a| st.iter().all(|b| commute(model, a, b))).cloned().collect();
    let support = model.sigma_idem(t);
    let local: Vec<&M::Elem> = units.iter().filter(|g| model.algebra().leq(&model.sigma_idem(g), &support)).collect();
    let agrees = wt.len() == local.len() && local.iter().all(|g| wt.contains(g));
    Ok(WtReport { t: t.clone(), zt: zt.len(), st: st.len(), wt: wt.len(), local: local.len(), agrees })
}

/// The characterization of `W_t` as the local subgroup at `σ(t)`: `σ(g) ≤ σ(t)`.
pub fn wt_membership_theorem<M: Model>(model: &M, g: &M::Elem, t: &M::Elem) -> Result<bool, ReconstructionError> {
    require_unit(model, g)?;
    require_involution(model, t)?;
    Ok(model.algebra().leq(&model.sigma_idem(g), &model.sigma_idem(t)))
}

/// An element `b` of `S_t` with `[a, b] ≠ 1`, the 3-cycle `c` with `b = c²`,
/// and the idempotent `e ≤ φ(t)` carrying `c`.
#[derive(Debug, Clone, Serialize)]
pub struct SeparatingWitness<E, I> {
    pub b: E,
    pub cycle: E,
    pub support: I,
}

/// Separates a unit `a` with `σ(a) ≰ σ(t)` from `W_t`.
///
/// A piece `e` of `σ(a) ∧ φ(t)` with `e ⊥ a e a⁻¹` carries a special 3-cycle
/// `c`; then `b = c²` lies in `S_t`, and `b`, `a b a⁻¹` have disjoint
/// nonzero supports, so they do not commute.
/// When `e` is an atom of a finite model no 3-cycle fits inside it and the
/// 3-cycles supported in `φ(t)` are searched instead.
pub fn separating_witness<M>(
    model: &M,
    a: &M::Elem,
    t: &M::Elem,
    depth_cap: usize,
) -> Result<SeparatingWitness<M::Elem, Idem<M>>, ReconstructionError>
where
    M: PieceModel + Generators,
{
    require_unit(model, a)?;
    require_involution(model, t)?;
    let alg = model.algebra();
    let fixed = model.phi_raw(t);
    let moved = alg.meet(&model.sigma_idem(a), &fixed);
    if alg.is_zero(&moved) {
        return Err(ReconstructionError::PreconditionViolated);
    }
    let piece = orthogonal_piece(model, a, &moved, depth_cap)?;
    let e = model.piece_idem(&piece);
    let (cycle, support) = match f3_witness(model, &e) {
        Ok(w) => (w.cycle, e),
        Err(AxiomError::AtomObstruction { .. }) => {
            let bound = model.pieces(&alg.one()).len();
            let cycle = model
                .alt_generators(bound)
                .into_iter()
                .find(|c| {
                    alg.leq(&model.sigma_idem(c), &fixed)
                        && model.commutator(a, &model.mul(c, c)).expect("units") != model.one()
                })
                .ok_or(ReconstructionError::NoSeparatingElement)?;
            (cycle, fixed)
        }
        Err(other) => return Err(other.into()),
    };
    let b = model.mul(&cycle, &cycle);
    if model.commutator(a, &b)? == model.one() {
        return Err(ReconstructionError::NoSeparatingElement);
    }
    if !commute(model, &b, t) {
        return Err(AxiomError::PostconditionFailed("b does not commute with t").into());
    }
    Ok(SeparatingWitness { b, cycle, support })
}
