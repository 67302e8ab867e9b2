mod common;

use common::sym;
use tarski_core::algebra::FiniteSet;
use tarski_core::inverse::{Calculus, FiniteModel, Model};
use tarski_core::symmetric::{
    enumerate_all, fundamental_report, germ_groupoid, pencil_exists, structure_space, verify_pencil, PartialPerm,
    ProductModel,
};

#[test]
fn partial_permutations_round_trip_through_text_and_json() {
    for s in enumerate_all(4) {
        assert_eq!(PartialPerm::parse(4, &s.to_string()).unwrap(), s);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(serde_json::from_str::<PartialPerm>(&json).unwrap(), s);
    }
}

#[test]
fn pencils_between_nonzero_idempotents() {
    let m = sym(4);
    for e in FiniteSet::all_subsets(4).filter(|e| !e.is_empty()) {
        for f in FiniteSet::all_subsets(4).filter(|f| !f.is_empty()) {
            let xs = pencil_exists(&m, &e, &f).unwrap().expect("I_4 is 0-simplifying");
            assert!(verify_pencil(&m, &e, &f, &xs));
        }
    }
}

#[test]
fn product_pencils_exist_exactly_between_matching_components() {
    let m = ProductModel::new(sym(2), sym(2));
    let idempotents: Vec<_> = m.idempotents().into_iter().filter(|e| !m.is_zero(e)).collect();
    for e in &idempotents {
        for f in &idempotents {
            let (ei, fi) = (m.extract(e).unwrap(), m.extract(f).unwrap());
            let found = pencil_exists(&m, &ei, &fi).unwrap();
            let possible = (ei.0.is_empty() || !fi.0.is_empty()) && (ei.1.is_empty() || !fi.1.is_empty());
            assert_eq!(found.is_some(), possible, "{e:?} to {f:?}");
        }
    }
}

#[test]
fn fundamental_checks_agree() {
    for n in 1..=4 {
        let report = fundamental_report(&sym(n));
        assert!(report.direct && report.unit_action_faithful);
    }
}

#[test]
fn structure_space_and_groupoid_sizes() {
    for n in 1..=5u8 {
        let m = sym(n);
        assert_eq!(structure_space(&m).len(), n as usize);
        let groupoid = germ_groupoid(&m);
        assert_eq!(groupoid.arrows.len(), (n as usize).pow(2));
        assert_eq!(groupoid.identities().len(), n as usize);
    }
}
