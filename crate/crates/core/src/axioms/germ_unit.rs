use crate::algebra::Word;
use crate::cuntz::{local_pair, swap_involution, CuntzModel, Germ, Point, PrefixBijection};

use super::factor::piecewise_factorize;

/// A unit with the same germ as `a` at its base point: the unit of the
/// factorization piece whose domain contains the base.
pub fn germ_unit(a: &Germ) -> PrefixBijection {
    let s = a.element();
    let model = CuntzModel::new(s.arity()).expect("arity of a valid element");
    let factorization = piecewise_factorize(&model, s).expect("a germ's element is nonzero");
    let (g, _) = factorization
        .pieces
        .into_iter()
        .find(|(_, e)| a.base().in_clopen(e))
        .expect("the pieces cover the domain");
    debug_assert!(Germ::new(g.clone(), a.base().clone()).is_ok_and(|h| h == *a));
    g
}

/// At most two special involutions whose product `k · h` (or the single
/// involution) has the germ `a`. Empty when `a` is an identity germ.
///
/// When `a` moves its base, the local substitution is refined along the base
/// until its two sides are incomparable and swapped directly. When it fixes
/// the base, both sides are prefixes of the base; they are exchanged through
/// the sibling cylinder of the shorter one.
pub fn germ_involutions(a: &Germ) -> Vec<PrefixBijection> {
    if a.is_idempotent() {
        return Vec::new();
    }
    let arity = a.element().arity();
    let base = a.base();
    let (u, v) = local_pair(a.element(), base).expect("base lies in the domain").clone();
    let refine = |k: usize| -> (Word, Word) {
        let grown = base.take(k);
        let tail = grown.strip_prefix(&u).expect("base lies in the cylinder of u");
        (grown, v.concat(&tail))
    };
    if a.target() != *base {
        let (u1, v1) = (u.len()..)
            .map(refine)
            .find(|(p, q)| !p.is_comparable(q))
            .expect("distinct points have incomparable prefixes");
        return vec![swap_involution(arity, &u1, &v1).expect("incomparable words")];
    }
    let (u1, v1) = (u.len()..).map(refine).find(|(p, q)| !p.is_empty() && !q.is_empty()).expect("words grow");
    let shorter = if u1.len() <= v1.len() { &u1 } else { &v1 };
    let w = sibling(arity, shorter);
    let h = swap_involution(arity, &u1, &w).expect("sibling is incomparable");
    let k = swap_involution(arity, &w, &v1).expect("sibling is incomparable");
    vec![h, k]
}

/// The product of [`germ_involutions`]: the last involution applied last.
pub fn compose_involutions(arity: u8, involutions: &[PrefixBijection]) -> PrefixBijection {
    involutions
        .iter()
        .fold(PrefixBijection::identity(arity), |acc, t| t.compose(&acc).expect("same arity"))
}

fn sibling(arity: u8, w: &Word) -> Word {
    let parent = w.parent().expect("nonempty word");
    let last = w.last().expect("nonempty word");
    parent.child((last + 1) % arity)
}

/// Whether `g` acts on the base point of `a` as `a` does, and their germs agree.
pub fn agrees_at_base(g: &PrefixBijection, a: &Germ) -> bool {
    let base: &Point = a.base();
    Germ::new(g.clone(), base.clone()).is_ok_and(|h| h == *a && h.target() == a.target())
}
