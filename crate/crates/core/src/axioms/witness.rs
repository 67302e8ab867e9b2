use std::collections::VecDeque;

use serde::Serialize;

use crate::algebra::BooleanAlgebra;
use crate::inverse::{Calculus, Idem, SpecialThreeCycle};

use super::pieces::PieceModel;
use super::AxiomError;

/// Default bound on the refinement depth of breadth-first searches.
pub const DEFAULT_DEPTH_CAP: usize = 32;

/// Special involutions whose supports join to a given idempotent.
#[derive(Debug, Clone, Serialize)]
pub struct F1Witness<E> {
    pub involutions: Vec<E>,
}

/// A special involution `g` with `σ(g) ≤ e(te)` and `σ(g) ≤ φ(tg)`, built
/// from a piece `f ≤ e` with `f ⊥ tft`.
#[derive(Debug, Clone, Serialize)]
pub struct F2Witness<E, I> {
    pub involution: E,
    pub piece: I,
}

/// A special 3-cycle `g` supported in `e`, with the 2-infinitesimal `(b, a)`
/// it was built from and the involutions `h`, `k` with `g = [h, k]`.
#[derive(Debug, Clone, Serialize)]
pub struct F3Witness<E> {
    pub cycle: E,
    pub h: E,
    pub k: E,
    pub b: E,
    pub a: E,
}

fn nonzero<M: PieceModel>(model: &M, e: &Idem<M>) -> Result<(), AxiomError> {
    if model.algebra().is_zero(e) {
        Err(AxiomError::ZeroClopen)
    } else {
        Ok(())
    }
}

/// Splits the first splittable piece until at least `count` pieces exist.
fn at_least<M: PieceModel>(model: &M, mut pieces: Vec<M::Piece>, count: usize) -> Result<Vec<M::Piece>, AxiomError> {
    while pieces.len() < count {
        let (i, parts) = pieces
            .iter()
            .enumerate()
            .find_map(|(i, p)| model.refine(p).map(|parts| (i, parts)))
            .ok_or(AxiomError::AtomObstruction { needed: count, available: pieces.len() })?;
        pieces.splice(i..=i, parts);
    }
    Ok(pieces)
}

/// Decomposes `e` into pieces (splitting once if there is only one) and
/// swaps consecutive pairs of pieces; with an odd count the last two pairs
/// overlap. The supports join to exactly `e`.
pub fn f1_witness<M: PieceModel>(model: &M, e: &Idem<M>) -> Result<F1Witness<M::Elem>, AxiomError> {
    nonzero(model, e)?;
    let pieces = at_least(model, model.pieces(e), 2)?;
    let mut pairs: Vec<(usize, usize)> = (0..pieces.len() / 2).map(|i| (2 * i, 2 * i + 1)).collect();
    if pieces.len() % 2 == 1 {
        pairs.push((pieces.len() - 2, pieces.len() - 1));
    }
    let mut involutions = Vec::with_capacity(pairs.len());
    for (i, j) in pairs {
        let a = model.transfer(&pieces[i], &pieces[j]);
        involutions.push(model.special_involution(&a)?);
    }
    let alg = model.algebra();
    let supports: Vec<Idem<M>> = involutions.iter().map(|t| model.sigma_idem(t)).collect();
    if alg.join_all(&supports) != *e {
        return Err(AxiomError::PostconditionFailed("supports do not join to e"));
    }
    if !involutions.iter().all(|t| model.mul(t, t) == model.one() && *t != model.one()) {
        return Err(AxiomError::PostconditionFailed("not a nontrivial involution"));
    }
    Ok(F1Witness { involutions })
}

/// Breadth-first search, by depth, for a piece `f ≤ e` with `f ⊥ g f g⁻¹`.
///
/// In a finite model every point moved by `g` is such a piece. In `C_n` a
/// cylinder around a moved point works once it is small enough, and moved
/// points are dense in the support of `g`.
pub fn orthogonal_piece<M: PieceModel>(
    model: &M,
    g: &M::Elem,
    e: &Idem<M>,
    depth_cap: usize,
) -> Result<M::Piece, AxiomError> {
    let alg = model.algebra();
    let mut queue: VecDeque<M::Piece> = model.pieces(e).into();
    while let Some(p) = queue.pop_front() {
        let f = model.piece_idem(&p);
        let moved = model.extract(&model.conjugate(g, &model.embed(&f))).expect("conjugate of an idempotent");
        if alg.disjoint(&f, &moved) {
            return Ok(p);
        }
        if model.depth(&p) < depth_cap {
            if let Some(parts) = model.refine(&p) {
                queue.extend(parts);
            }
        }
    }
    Err(AxiomError::SearchExhausted { depth_cap })
}

/// The shrinking witness for an involution `t` and `0 ≠ e ≤ σ(t)`: with
/// `f ≤ e` and `f ⊥ tft`, the element `tf` is infinitesimal and
/// `g = tf ∨ ft ∨ ¬e(tf)` is the required special involution.
pub fn f2_witness<M: PieceModel>(
    model: &M,
    t: &M::Elem,
    e: &Idem<M>,
    depth_cap: usize,
) -> Result<F2Witness<M::Elem, M::Piece>, AxiomError> {
    if !model.is_unit(t) || model.mul(t, t) != model.one() || *t == model.one() {
        return Err(AxiomError::NotAnInvolution);
    }
    nonzero(model, e)?;
    let alg = model.algebra();
    if !alg.leq(e, &model.sigma_idem(t)) {
        return Err(AxiomError::NotBelowSupport);
    }
    let piece = orthogonal_piece(model, t, e, depth_cap)?;
    let tf = model.mul(t, &model.embed(&model.piece_idem(&piece)));
    let g = model.special_involution(&tf)?;
    let support = model.sigma_idem(&g);
    let te = model.mul(t, &model.embed(e));
    if !alg.leq(&support, &model.extent_idem(&te)) {
        return Err(AxiomError::PostconditionFailed("σ(g) is not below e(te)"));
    }
    if !alg.leq(&support, &model.phi_raw(&model.mul(t, &g))) {
        return Err(AxiomError::PostconditionFailed("σ(g) is not below φ(tg)"));
    }
    Ok(F2Witness { involution: g, piece })
}

/// A special 3-cycle supported in `e`: three disjoint pieces `e1, e2, e3` of
/// `e` (refining as needed), `a: e1 → e2`, `b: e2 → e3`.
pub fn f3_witness<M: PieceModel>(model: &M, e: &Idem<M>) -> Result<F3Witness<M::Elem>, AxiomError> {
    nonzero(model, e)?;
    let pieces = at_least(model, model.pieces(e), 3)?;
    let a = model.transfer(&pieces[0], &pieces[1]);
    let b = model.transfer(&pieces[1], &pieces[2]);
    let SpecialThreeCycle { g, h, k } = model.special_three_cycle(&b, &a)?;
    let alg = model.algebra();
    if !alg.leq(&model.sigma_idem(&g), e) {
        return Err(AxiomError::PostconditionFailed("σ(g) is not below e"));
    }
    if g == model.one() || model.pow(&g, 3) != model.one() {
        return Err(AxiomError::PostconditionFailed("g is not of order 3"));
    }
    Ok(F3Witness { cycle: g, h, k, b, a })
}
