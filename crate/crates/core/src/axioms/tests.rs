use super::*;
use crate::algebra::{BooleanAlgebra, Clopen, FiniteSet, Word};
use crate::cuntz::{swap_involution, unit_extension, CuntzModel, CuntzSampler, Germ, Point, PrefixBijection};
use crate::inverse::{Calculus, Model};
use crate::symmetric::{enumerate_all, PartialPerm, SymmetricModel};

fn c2() -> CuntzModel {
    CuntzModel::new(2).unwrap()
}

fn el(s: &str) -> PrefixBijection {
    PrefixBijection::parse(2, s).unwrap()
}

fn c(s: &str) -> Clopen {
    Clopen::parse(2, s).unwrap()
}

fn w(s: &str) -> Word {
    Word::parse(2, s).unwrap()
}

fn set(n: u8, points: &[u8]) -> FiniteSet {
    FiniteSet::from_points(n, points.iter().copied()).unwrap()
}

#[test]
fn f1_swaps_halves_of_a_single_cylinder() {
    let m = c2();
    assert_eq!(f1_witness(&m, &c("{e}")).unwrap().involutions, vec![el("{0->1, 1->0}")]);
    assert_eq!(f1_witness(&m, &c("{0}")).unwrap().involutions, vec![swap_involution(2, &w("00"), &w("01")).unwrap()]);
    assert_eq!(f1_witness(&m, &Clopen::zero(2)).unwrap_err(), AxiomError::ZeroClopen);
}

#[test]
fn f1_overlaps_last_pair_for_odd_piece_counts() {
    let m = c2();
    let e = c("{00, 011, 10}");
    let witness = f1_witness(&m, &e).unwrap();
    assert_eq!(witness.involutions.len(), 2);
    let supports: Vec<Clopen> = witness.involutions.iter().map(|t| m.sigma_idem(t)).collect();
    assert_eq!(m.algebra().join_all(&supports), e);
}

#[test]
fn atoms_obstruct_f1_and_f3_in_finite_models() {
    let m = SymmetricModel::new(3).unwrap();
    assert_eq!(f1_witness(&m, &set(3, &[0])).unwrap_err(), AxiomError::AtomObstruction { needed: 2, available: 1 });
    assert_eq!(f3_witness(&m, &set(3, &[0, 1])).unwrap_err(), AxiomError::AtomObstruction { needed: 3, available: 2 });
    assert_eq!(f1_witness(&m, &set(3, &[0, 2])).unwrap().involutions, vec![PartialPerm::transposition(3, 0, 2).unwrap()]);
}

#[test]
fn f2_on_a_half_swap() {
    let m = c2();
    let t = el("{0->1, 1->0}");
    let witness = f2_witness(&m, &t, &c("{0}"), DEFAULT_DEPTH_CAP).unwrap();
    assert_eq!(witness.piece, w("0"));
    assert_eq!(witness.involution, t);
    assert_eq!(m.sigma_idem(&witness.involution), Clopen::one(2));
}

#[test]
fn f2_rejects_bad_inputs() {
    let m = c2();
    let t = el("{00->01, 01->00, 1->1}");
    assert_eq!(f2_witness(&m, &t, &c("{1}"), 8).unwrap_err(), AxiomError::NotBelowSupport);
    assert_eq!(f2_witness(&m, &m.one(), &c("{1}"), 8).unwrap_err(), AxiomError::NotAnInvolution);
    assert_eq!(f2_witness(&m, &t, &Clopen::zero(2), 8).unwrap_err(), AxiomError::ZeroClopen);
}

#[test]
fn f2_searches_below_cylinders_that_meet_their_image() {
    let m = c2();
    // Swaps 00 with 01 inside {0}; the cylinder {0} itself is mapped onto itself.
    let t = el("{00->01, 01->00, 1->1}");
    let witness = f2_witness(&m, &t, &c("{0}"), DEFAULT_DEPTH_CAP).unwrap();
    assert_eq!(witness.piece, w("00"));
    assert!(matches!(f2_witness(&m, &t, &c("{0}"), 0), Err(AxiomError::SearchExhausted { depth_cap: 0 })));
}

#[test]
fn f3_splits_the_whole_space_into_three() {
    let m = c2();
    let witness = f3_witness(&m, &c("{e}")).unwrap();
    assert_eq!(witness.a, el("{00->01}"));
    assert_eq!(witness.b, el("{01->1}"));
    assert_eq!(m.pow(&witness.cycle, 3), m.one());
    assert_eq!(m.sigma_idem(&witness.cycle), Clopen::one(2));
    let small = f3_witness(&m, &c("{0}")).unwrap();
    assert!(m.sigma_idem(&small.cycle).leq(&c("{0}")).unwrap());
}

#[test]
fn factorization_examples() {
    let m = c2();
    let s = el("{0->00}");
    let f = piecewise_factorize(&m, &s).unwrap();
    assert_eq!(f.pieces, vec![(unit_extension(2, &w("0"), &w("00")).unwrap(), c("{0}"))]);
    assert_eq!(f.recompose(&m).unwrap(), s);

    let g = el("{00->11, 01->10, 1->0}");
    assert_eq!(piecewise_factorize(&m, &g).unwrap().pieces, vec![(g.clone(), Clopen::one(2))]);
    let e = c("{01, 1}");
    assert_eq!(piecewise_factorize(&m, &m.embed(&e)).unwrap().pieces, vec![(m.one(), e)]);
    assert_eq!(piecewise_factorize(&m, &m.zero()).unwrap_err(), AxiomError::ZeroElement);
}

#[test]
fn whole_space_onto_a_cylinder_needs_several_units() {
    let m = c2();
    let s = el("{e->0}");
    let f = piecewise_factorize(&m, &s).unwrap();
    assert_eq!(f.pieces.len(), 2);
    assert_eq!(f.recompose(&m).unwrap(), s);
}

#[test]
fn factorization_orders_agree_on_recomposition() {
    let m = c2();
    let mut sampler = CuntzSampler::new(2, 11).unwrap();
    for _ in 0..200 {
        let s = sampler.nonzero_element();
        for order in [FactorOrder::Whole, FactorOrder::Pairwise] {
            let f = factorize_with(&m, &s, order).unwrap();
            assert_eq!(f.recompose(&m).unwrap(), s);
        }
    }
}

#[test]
fn symmetric_factorizations_cover_i3() {
    let m = SymmetricModel::new(3).unwrap();
    for s in enumerate_all(3).into_iter().filter(|s| !s.is_empty()) {
        let whole = piecewise_factorize(&m, &s).unwrap();
        assert_eq!(whole.pieces.len(), 1);
        assert_eq!(whole.pieces[0].1, s.domain());
        let pairwise = factorize_with(&m, &s, FactorOrder::Pairwise).unwrap();
        assert_eq!(pairwise.recompose(&m).unwrap(), s);
    }
}

#[test]
fn germ_unit_examples() {
    let one = PrefixBijection::identity(2);
    let x = Point::parse(2, "0(1)*").unwrap();
    assert_eq!(germ_unit(&Germ::new(one.clone(), x.clone()).unwrap()), one);

    let a = Germ::new(el("{0->1}"), Point::parse(2, "(0)*").unwrap()).unwrap();
    assert_eq!(germ_unit(&a), el("{0->1, 1->0}"));

    let b = Germ::new(el("{0->00}"), Point::parse(2, "0(1)*").unwrap()).unwrap();
    let g = germ_unit(&b);
    assert_eq!(g, unit_extension(2, &w("0"), &w("00")).unwrap());
    assert!(agrees_at_base(&g, &b));
}

#[test]
fn germ_involutions_reproduce_the_germ() {
    let fixed = Germ::new(el("{0->00}"), Point::parse(2, "(0)*").unwrap()).unwrap();
    let ts = germ_involutions(&fixed);
    assert_eq!(ts.len(), 2);
    assert!(agrees_at_base(&compose_involutions(2, &ts), &fixed));

    let moving = Germ::new(el("{0->01}"), Point::parse(2, "(0)*").unwrap()).unwrap();
    let ts = germ_involutions(&moving);
    assert_eq!(ts.len(), 1);
    assert!(agrees_at_base(&ts[0], &moving));

    let identity = Germ::new(el("{0->0}"), Point::parse(2, "(0)*").unwrap()).unwrap();
    assert!(germ_involutions(&identity).is_empty());

    let mut sampler = CuntzSampler::new(2, 5).unwrap();
    let m = c2();
    for _ in 0..200 {
        let a = sampler.germ();
        let ts = germ_involutions(&a);
        assert!(ts.len() <= 2);
        assert!(ts.iter().all(|t| m.mul(t, t) == m.one()));
        assert!(agrees_at_base(&compose_involutions(2, &ts), &a), "{a:?}");
    }
}

#[test]
fn generator_lists() {
    assert_eq!(SymmetricModel::new(3).unwrap().sym_generators(3).len(), 3);
    assert_eq!(SymmetricModel::new(4).unwrap().alt_generators(4).len(), 8);
    let m = c2();
    assert_eq!(m.sym_generators(1), vec![el("{0->1, 1->0}")]);
    // Incomparable pairs among 0, 1, 00, 01, 10, 11.
    let oracle = [("0", "1"), ("0", "10"), ("0", "11"), ("1", "00"), ("1", "01"), ("00", "01"), ("00", "10"), ("00", "11"), ("01", "10"), ("01", "11"), ("10", "11")];
    let mut expected: Vec<PrefixBijection> = oracle.iter().map(|(u, v)| swap_involution(2, &w(u), &w(v)).unwrap()).collect();
    let mut got = m.sym_generators(2);
    expected.sort_by_key(|g| g.to_string());
    got.sort_by_key(|g| g.to_string());
    assert_eq!(got, expected);
    let cycles = m.alt_generators(2);
    assert!(cycles.iter().all(|g| m.pow(g, 3) == m.one() && *g != m.one()));
}
