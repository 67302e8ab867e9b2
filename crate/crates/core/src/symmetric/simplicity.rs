use crate::algebra::BooleanAlgebra;
use crate::inverse::{Calculus, FiniteModel, Idem};

use super::pencil::{pencil_exists, Pencils};

/// A proper nonzero ideal showing that a finite model is not 0-simplifying.
#[derive(Debug, Clone)]
pub struct IdealWitness<E, I> {
    /// An idempotent with no pencil into `to`.
    pub from: I,
    pub to: I,
    /// `{s : s = 0 or d(s) has a pencil into to}`.
    pub ideal: Vec<E>,
    /// Whether `ideal` was checked to be a two-sided ideal closed under
    /// compatible joins, containing a nonzero element but not `from`.
    pub verified: bool,
}

#[derive(Debug, Clone)]
pub struct ZeroSimplifyingReport<E, I> {
    pub holds: bool,
    pub obstruction: Option<IdealWitness<E, I>>,
}

/// Checks pencils in both directions between every pair of nonzero
/// idempotents. On failure the first obstructed pair yields an ideal witness.
pub fn zero_simplifying_report<M>(model: &M) -> ZeroSimplifyingReport<M::Elem, Idem<M>>
where
    M: FiniteModel + Pencils,
{
    let alg = model.algebra();
    let idempotents: Vec<Idem<M>> = model
        .idempotents()
        .iter()
        .filter_map(|e| model.extract(e))
        .filter(|e| !alg.is_zero(e))
        .collect();
    for e in &idempotents {
        for f in &idempotents {
            let found = pencil_exists(model, e, f).expect("idempotents are nonzero");
            if found.is_none() {
                let ideal = pencil_ideal(model, f);
                let verified = verify_ideal(model, &ideal, e);
                let witness = IdealWitness { from: e.clone(), to: f.clone(), ideal, verified };
                return ZeroSimplifyingReport { holds: false, obstruction: Some(witness) };
            }
        }
    }
    ZeroSimplifyingReport { holds: true, obstruction: None }
}

pub fn is_zero_simplifying<M: FiniteModel + Pencils>(model: &M) -> bool {
    zero_simplifying_report(model).holds
}

fn pencil_ideal<M: FiniteModel + Pencils>(model: &M, f: &Idem<M>) -> Vec<M::Elem> {
    let alg = model.algebra();
    model
        .elements()
        .into_iter()
        .filter(|s| {
            let d = model.dom_idem(s);
            alg.is_zero(&d) || pencil_exists(model, &d, f).expect("nonzero").is_some()
        })
        .collect()
}

fn verify_ideal<M: FiniteModel>(model: &M, ideal: &[M::Elem], excluded: &Idem<M>) -> bool {
    let members: std::collections::HashSet<&M::Elem> = ideal.iter().collect();
    let all = model.elements();
    let nonzero = ideal.iter().any(|s| !model.is_zero(s));
    let proper = !members.contains(&model.embed(excluded));
    let absorbing = ideal.iter().all(|s| {
        all.iter().all(|a| members.contains(&model.mul(a, s)) && members.contains(&model.mul(s, a)))
    });
    let join_closed = ideal.iter().all(|s| {
        ideal
            .iter()
            .filter(|t| model.compatible(s, t))
            .all(|t| members.contains(&model.join_compatible(&[s.clone(), t.clone()])))
    });
    nonzero && proper && absorbing && join_closed
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FundamentalReport {
    /// Only idempotents commute with every idempotent.
    pub direct: bool,
    /// Every unit other than 1 moves some idempotent under conjugation.
    pub unit_action_faithful: bool,
}

pub fn fundamental_report<M: FiniteModel>(model: &M) -> FundamentalReport {
    let idempotents = model.idempotents();
    let centralizes = |s: &M::Elem| idempotents.iter().all(|e| model.mul(s, e) == model.mul(e, s));
    let direct = model
        .elements()
        .iter()
        .filter(|s| centralizes(s))
        .all(|s| model.is_idempotent(s));
    let one = model.one();
    let unit_action_faithful = model
        .units()
        .iter()
        .filter(|g| **g != one)
        .all(|g| idempotents.iter().any(|e| model.conjugate(g, e) != *e));
    FundamentalReport { direct, unit_action_faithful }
}

/// The direct check, after asserting that it agrees with faithfulness of the
/// unit action on idempotents.
///
/// # Panics
///
/// If the two characterizations disagree.
pub fn is_fundamental<M: FiniteModel>(model: &M) -> bool {
    let report = fundamental_report(model);
    assert_eq!(
        report.direct, report.unit_action_faithful,
        "fundamentality checks disagree: {report:?}"
    );
    report.direct
}
