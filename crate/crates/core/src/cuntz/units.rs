use std::collections::VecDeque;

use crate::algebra::{Clopen, Word};

use super::bijection::PrefixBijection;
use super::germ::act;
use super::point::Point;
use super::CuntzError;

/// The involution exchanging the cylinders of `u` and `v` and fixing the
/// rest of the space.
pub fn swap_involution(arity: u8, u: &Word, v: &Word) -> Result<PrefixBijection, CuntzError> {
    if u.is_comparable(v) {
        return Err(CuntzError::ComparableWords { u: u.clone(), v: v.clone() });
    }
    let both = Clopen::canonicalize(arity, [u.clone(), v.clone()])?;
    let mut pairs = vec![(u.clone(), v.clone()), (v.clone(), u.clone())];
    pairs.extend(both.complement().words().iter().map(|w| (w.clone(), w.clone())));
    PrefixBijection::new(arity, pairs)
}

/// The 3-cycle `u1 → u2 → u3 → u1` on three pairwise incomparable cylinders,
/// identity elsewhere.
pub fn cylinder_three_cycle(arity: u8, u1: &Word, u2: &Word, u3: &Word) -> Result<PrefixBijection, CuntzError> {
    for (a, b) in [(u1, u2), (u2, u3), (u1, u3)] {
        if a.is_comparable(b) {
            return Err(CuntzError::ComparableWords { u: a.clone(), v: b.clone() });
        }
    }
    let all = Clopen::canonicalize(arity, [u1.clone(), u2.clone(), u3.clone()])?;
    let mut pairs = vec![(u1.clone(), u2.clone()), (u2.clone(), u3.clone()), (u3.clone(), u1.clone())];
    pairs.extend(all.complement().words().iter().map(|w| (w.clone(), w.clone())));
    PrefixBijection::new(arity, pairs)
}

/// A bijection from the cylinders of `from` onto those of `to`, pairing the
/// two equalized decompositions in order.
fn clopen_bijection(from: &Clopen, to: &Clopen) -> Result<Vec<(Word, Word)>, CuntzError> {
    match (from.is_zero(), to.is_zero()) {
        (true, true) => return Ok(Vec::new()),
        (false, false) => {}
        _ => return Err(CuntzError::UnitExtensionImpossible),
    }
    let (a, b) = from.equalize(to)?;
    debug_assert_eq!(a.len(), b.len());
    Ok(a.into_iter().zip(b).collect())
}

/// A unit above the single substitution `u·x ↦ v·x`: the complement of
/// `cyl(u)` is sent onto the complement of `cyl(v)` via equalized cylinder
/// decompositions. Impossible when exactly one of `u`, `v` is empty.
pub fn unit_extension(arity: u8, u: &Word, v: &Word) -> Result<PrefixBijection, CuntzError> {
    let s = PrefixBijection::single(arity, u.clone(), v.clone())?;
    extend_to_unit(&s)
}

/// A unit `g` with `s ≤ g`: `s` joined with a bijection from the complement
/// of its domain onto the complement of its range.
pub fn extend_to_unit(s: &PrefixBijection) -> Result<PrefixBijection, CuntzError> {
    let arity = s.arity();
    let rest = clopen_bijection(&s.domain().complement(), &s.range().complement())?;
    let g = PrefixBijection::new(arity, s.pairs().iter().cloned().chain(rest))?;
    debug_assert!(g.is_unit());
    Ok(g)
}

/// An eventually periodic point of `e` moved by the unit `g`, or `None`
/// exactly when `g` fixes `e` pointwise.
///
/// Candidates `w · a^ω` are tried for cylinders `w` inside `e` ∧ σ(g) in
/// breadth-first order. Each pair of `g` other than an identity pair fixes at
/// most one point, so some candidate is moved once `w` is longer than every
/// word of `g` and two letters are available.
pub fn moved_point_in(g: &PrefixBijection, e: &Clopen) -> Result<Option<Point>, CuntzError> {
    if !g.is_unit() {
        return Err(CuntzError::NotAUnit);
    }
    let arity = g.arity();
    let support = g.fixed_clopen().complement();
    let target = e.intersect(&support)?;
    let Some(start) = target.words().first() else {
        return Ok(None);
    };
    let depth_bound = start.len() + g.pairs().iter().map(|(u, v)| u.len().max(v.len())).max().unwrap_or(0) + 2;
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(w) = queue.pop_front() {
        for letter in 0..arity {
            let x = Point::constant_tail(arity, &w, letter);
            if act(g, &x)? != x {
                return Ok(Some(x));
            }
        }
        if w.len() < depth_bound {
            queue.extend(w.children(arity));
        }
    }
    unreachable!("a unit moving a cylinder moves one of the candidate points")
}
