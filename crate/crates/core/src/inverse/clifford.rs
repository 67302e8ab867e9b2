use crate::algebra::BooleanAlgebra;

use super::{Calculus, Model};

/// Whether a sample is Clifford (`d(s) = r(s)` throughout), and an
/// infinitesimal when it is not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliffordReport<E> {
    pub is_clifford_on_sample: bool,
    pub infinitesimal_witness: Option<E>,
}

/// Scans `sample` for a nonzero infinitesimal. If none occurs but some
/// element has `d(a) ≠ r(a)`, one is manufactured from it by restricting `a`
/// to `d(a) ∧ ¬r(a)` (or `a^-1` to `r(a) ∧ ¬d(a)`), so the two findings are
/// always consistent: not Clifford iff a witness is returned.
pub fn clifford_report<M: Model>(model: &M, sample: &[M::Elem]) -> CliffordReport<M::Elem> {
    let direct = sample
        .iter()
        .find(|a| !model.is_zero(a) && model.is_infinitesimal(a))
        .cloned();
    let non_clifford = sample.iter().find(|s| model.dom(s) != model.ran(s));
    let witness = direct.or_else(|| {
        non_clifford.map(|a| {
            let alg = model.algebra();
            let d = model.dom_idem(a);
            let r = model.ran_idem(a);
            let d_only = alg.minus(&d, &r);
            let w = if !alg.is_zero(&d_only) {
                model.mul(a, &model.embed(&d_only))
            } else {
                model.mul(&model.embed(&alg.minus(&r, &d)), a)
            };
            assert!(model.is_infinitesimal(&w) && !model.is_zero(&w));
            w
        })
    });
    CliffordReport { is_clifford_on_sample: non_clifford.is_none(), infinitesimal_witness: witness }
}
