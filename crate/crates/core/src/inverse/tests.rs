use super::*;
use crate::algebra::{FiniteSet, PowersetAlgebra};

fn powerset(n: u8) -> SemilatticeModel<PowersetAlgebra> {
    SemilatticeModel::new(PowersetAlgebra::new(n).unwrap())
}

#[test]
fn semilattice_has_no_infinitesimals() {
    let m = powerset(3);
    let all = m.elements();
    assert_eq!(all.len(), 8);
    let report = clifford_report(&m, &all);
    assert!(report.is_clifford_on_sample);
    assert!(report.infinitesimal_witness.is_none());
}

#[test]
fn semilattice_meet_is_intersection() {
    let m = powerset(3);
    for s in m.elements() {
        for t in m.elements() {
            assert_eq!(m.meet(&s, &t), s.intersect(&t).unwrap());
            assert!(m.compatible(&s, &t));
        }
        assert_eq!(m.sigma_idem(&s), FiniteSet::empty(3));
        assert_eq!(m.phi(&s), s);
    }
}

#[test]
fn only_the_top_is_a_unit() {
    let m = powerset(2);
    assert_eq!(m.units(), vec![FiniteSet::full(2)]);
    assert_eq!(m.idempotents().len(), 4);
}

#[test]
fn special_involution_rejects_idempotents() {
    let m = powerset(2);
    assert_eq!(m.special_involution(&FiniteSet::full(2)), Err(CoreError::NotInfinitesimal));
    assert_eq!(m.special_involution(&FiniteSet::empty(2)), Err(CoreError::NotInfinitesimal));
}

#[test]
fn commutator_needs_units() {
    let m = powerset(2);
    let half = FiniteSet::singleton(2, 0).unwrap();
    assert_eq!(m.commutator(&half, &m.one()), Err(CoreError::NotAUnit));
    assert_eq!(m.commutator(&m.one(), &m.one()), Ok(m.one()));
}
