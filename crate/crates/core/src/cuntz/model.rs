use crate::algebra::{CantorAlgebra, Clopen};
use crate::inverse::{CoreError, Model};
use crate::symmetric::Pencils;

use super::bijection::PrefixBijection;
use super::CuntzError;

/// The Cuntz inverse monoid `C_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CuntzModel {
    algebra: CantorAlgebra,
}

impl CuntzModel {
    pub fn new(arity: u8) -> Result<Self, CuntzError> {
        Ok(CuntzModel { algebra: CantorAlgebra::new(arity)? })
    }

    pub fn arity(&self) -> u8 {
        self.algebra.arity()
    }

    fn check(&self, s: &PrefixBijection) {
        assert_eq!(s.arity(), self.arity(), "element of C_{} used in C_{}", s.arity(), self.arity());
    }
}

impl Model for CuntzModel {
    type Elem = PrefixBijection;
    type Algebra = CantorAlgebra;

    fn algebra(&self) -> &CantorAlgebra {
        &self.algebra
    }

    fn mul(&self, s: &PrefixBijection, t: &PrefixBijection) -> PrefixBijection {
        self.check(s);
        s.compose(t).expect("arity checked")
    }

    fn inv(&self, s: &PrefixBijection) -> PrefixBijection {
        self.check(s);
        s.inverse()
    }

    fn zero(&self) -> PrefixBijection {
        PrefixBijection::zero(self.arity())
    }

    fn one(&self) -> PrefixBijection {
        PrefixBijection::identity(self.arity())
    }

    fn is_idempotent(&self, s: &PrefixBijection) -> bool {
        self.check(s);
        s.is_idempotent()
    }

    fn phi_raw(&self, s: &PrefixBijection) -> Clopen {
        self.check(s);
        s.fixed_clopen()
    }

    fn embed(&self, e: &Clopen) -> PrefixBijection {
        assert_eq!(e.arity(), self.arity());
        PrefixBijection::identity_on(e)
    }

    fn extract(&self, s: &PrefixBijection) -> Option<Clopen> {
        self.check(s);
        s.is_idempotent().then(|| s.domain())
    }

    fn join_compatible(&self, parts: &[PrefixBijection]) -> PrefixBijection {
        parts.iter().fold(self.zero(), |acc, p| {
            self.check(p);
            acc.union(p).expect("arity checked").expect("compatible elements have a union")
        })
    }

    fn native_meet(&self, s: &PrefixBijection, t: &PrefixBijection) -> Option<PrefixBijection> {
        Some(s.intersection(t).expect("arity checked"))
    }
}

impl Pencils for CuntzModel {
    /// Sends each cylinder of `e` onto the first cylinder of `f`.
    fn pencil(&self, e: &Clopen, f: &Clopen) -> Result<Option<Vec<PrefixBijection>>, CoreError> {
        if e.is_zero() || f.is_zero() {
            return Err(CoreError::ZeroIdempotent);
        }
        let target = &f.words()[0];
        let xs = e
            .words()
            .iter()
            .map(|u| PrefixBijection::single(self.arity(), u.clone(), target.clone()).expect("valid words"))
            .collect();
        Ok(Some(xs))
    }
}
