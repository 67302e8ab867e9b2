use crate::algebra::BooleanAlgebra;

use super::{CoreError, Idem, Model};

/// A special 3-cycle `g` together with the two special involutions whose
/// commutator it is: `g = [h, k] = (hk)^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialThreeCycle<E> {
    pub g: E,
    pub h: E,
    pub k: E,
}

/// Derived operations available on every [`Model`].
pub trait Calculus: Model {
    fn dom(&self, s: &Self::Elem) -> Self::Elem {
        self.mul(&self.inv(s), s)
    }

    fn ran(&self, s: &Self::Elem) -> Self::Elem {
        self.mul(s, &self.inv(s))
    }

    fn dom_idem(&self, s: &Self::Elem) -> Idem<Self> {
        self.extract(&self.dom(s)).expect("s^-1 s is idempotent")
    }

    fn ran_idem(&self, s: &Self::Elem) -> Idem<Self> {
        self.extract(&self.ran(s)).expect("s s^-1 is idempotent")
    }

    fn is_zero(&self, s: &Self::Elem) -> bool {
        *s == self.zero()
    }

    /// `s <= t` iff `s = t s^-1 s`.
    fn natural_leq(&self, s: &Self::Elem, t: &Self::Elem) -> bool {
        *s == self.mul(t, &self.dom(s))
    }

    /// `s ~ t` iff `s^-1 t` and `s t^-1` are idempotents.
    fn compatible(&self, s: &Self::Elem, t: &Self::Elem) -> bool {
        self.is_idempotent(&self.mul(&self.inv(s), t)) && self.is_idempotent(&self.mul(s, &self.inv(t)))
    }

    /// `s ⊥ t` iff `s^-1 t = 0 = s t^-1`.
    fn orthogonal(&self, s: &Self::Elem, t: &Self::Elem) -> bool {
        let zero = self.zero();
        self.mul(&self.inv(s), t) == zero && self.mul(s, &self.inv(t)) == zero
    }

    /// The fixed-point operator `φ(s) = s ∧ 1`.
    fn phi(&self, s: &Self::Elem) -> Self::Elem {
        self.embed(&self.phi_raw(s))
    }

    /// `s ∧ t = φ(s t^-1) t`.
    fn meet(&self, s: &Self::Elem, t: &Self::Elem) -> Self::Elem {
        self.mul(&self.phi(&self.mul(s, &self.inv(t))), t)
    }

    /// The support `σ(s) = ¬φ(s) ∧ d(s)`.
    fn sigma_idem(&self, s: &Self::Elem) -> Idem<Self> {
        let alg = self.algebra();
        alg.meet(&alg.complement(&self.phi_raw(s)), &self.dom_idem(s))
    }

    fn sigma(&self, s: &Self::Elem) -> Self::Elem {
        self.embed(&self.sigma_idem(s))
    }

    /// The extent `d(a) ∨ r(a)`.
    fn extent_idem(&self, a: &Self::Elem) -> Idem<Self> {
        self.algebra().join(&self.dom_idem(a), &self.ran_idem(a))
    }

    fn extent(&self, a: &Self::Elem) -> Self::Elem {
        self.embed(&self.extent_idem(a))
    }

    /// Complement of an idempotent element inside the idempotent algebra.
    fn complement(&self, e: &Self::Elem) -> Result<Self::Elem, CoreError> {
        let v = self.extract(e).ok_or(CoreError::NotIdempotent)?;
        Ok(self.embed(&self.algebra().complement(&v)))
    }

    /// Least upper bound of a pairwise compatible family.
    fn join(&self, parts: &[Self::Elem]) -> Result<Self::Elem, CoreError> {
        for i in 0..parts.len() {
            for j in i + 1..parts.len() {
                if !self.compatible(&parts[i], &parts[j]) {
                    return Err(CoreError::IncompatibleParts { first: i, second: j });
                }
            }
        }
        Ok(self.join_compatible(parts))
    }

    fn is_unit(&self, s: &Self::Elem) -> bool {
        let one = self.one();
        self.dom(s) == one && self.ran(s) == one
    }

    fn conjugate(&self, g: &Self::Elem, s: &Self::Elem) -> Self::Elem {
        self.mul(&self.mul(g, s), &self.inv(g))
    }

    fn pow(&self, s: &Self::Elem, k: u32) -> Self::Elem {
        (0..k).fold(self.one(), |acc, _| self.mul(&acc, s))
    }

    /// `[g, h] = g h g^-1 h^-1` for units.
    fn commutator(&self, g: &Self::Elem, h: &Self::Elem) -> Result<Self::Elem, CoreError> {
        if !self.is_unit(g) || !self.is_unit(h) {
            return Err(CoreError::NotAUnit);
        }
        let gh = self.mul(g, h);
        let hg = self.mul(h, g);
        Ok(self.mul(&gh, &self.inv(&hg)))
    }

    /// `a^2 = 0`, double-checked against `d(a) ⊥ r(a)`.
    ///
    /// # Panics
    ///
    /// If the two characterizations disagree, which means the model violates
    /// the inverse monoid axioms.
    fn is_infinitesimal(&self, a: &Self::Elem) -> bool {
        let squares_to_zero = self.is_zero(&self.mul(a, a));
        let ends_orthogonal = self.orthogonal(&self.dom(a), &self.ran(a));
        assert_eq!(
            squares_to_zero, ends_orthogonal,
            "model inconsistency: a^2 = 0 and d(a) ⊥ r(a) disagree for {a:?}"
        );
        squares_to_zero
    }

    /// The involution `a^-1 ∨ a ∨ ¬e(a)` above a nonzero infinitesimal `a`.
    fn special_involution(&self, a: &Self::Elem) -> Result<Self::Elem, CoreError> {
        if self.is_zero(a) || !self.is_infinitesimal(a) {
            return Err(CoreError::NotInfinitesimal);
        }
        let outside = self.embed(&self.algebra().complement(&self.extent_idem(a)));
        Ok(self.join_compatible(&[self.inv(a), a.clone(), outside]))
    }

    /// The 3-cycle `a ∨ b ∨ (ba)^-1 ∨ ¬e(b,a)` of a 2-infinitesimal `(b, a)`,
    /// returned with the special involutions `h` over `a` and `k` over
    /// `(ba)^-1`, after checking `g = [h, k] = (hk)^2`.
    fn special_three_cycle(
        &self,
        b: &Self::Elem,
        a: &Self::Elem,
    ) -> Result<SpecialThreeCycle<Self::Elem>, CoreError> {
        if self.is_zero(a) || !self.is_infinitesimal(a) {
            return Err(CoreError::NotTwoInfinitesimal("a is not a nonzero infinitesimal"));
        }
        if !self.is_infinitesimal(b) {
            return Err(CoreError::NotTwoInfinitesimal("b is not an infinitesimal"));
        }
        if self.dom(b) != self.ran(a) {
            return Err(CoreError::NotTwoInfinitesimal("d(b) differs from r(a)"));
        }
        let ba = self.mul(b, a);
        if !self.is_infinitesimal(&ba) {
            return Err(CoreError::NotTwoInfinitesimal("ba is not an infinitesimal"));
        }
        let c = self.inv(&ba);
        let alg = self.algebra();
        let extent = alg.join(&alg.join(&self.ran_idem(b), &self.dom_idem(b)), &self.dom_idem(a));
        let outside = self.embed(&alg.complement(&extent));
        let g = self.join_compatible(&[a.clone(), b.clone(), c.clone(), outside]);
        let h = self.special_involution(a)?;
        let k = self.special_involution(&c)?;
        let hk = self.mul(&h, &k);
        debug_assert_eq!(self.commutator(&h, &k)?, g, "g = [h, k]");
        debug_assert_eq!(self.mul(&hk, &hk), g, "g = (hk)^2");
        Ok(SpecialThreeCycle { g, h, k })
    }
}

impl<M: Model + ?Sized> Calculus for M {}
