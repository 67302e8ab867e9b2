use crate::algebra::{BooleanAlgebra, FiniteSet, PowersetAlgebra};
use crate::inverse::{Calculus, CoreError, Idem, Model, SemilatticeModel};

use super::model::{ProductModel, SymmetricModel};
use super::perm::PartialPerm;

/// Models that can search for pencils: finite families `x_1, .., x_m` with
/// `e = ⋁ d(x_i)` and every `r(x_i) ≤ f`.
pub trait Pencils: Model {
    /// A pencil from `e` to `f`, or `None` when there is none.
    fn pencil(&self, e: &Idem<Self>, f: &Idem<Self>) -> Result<Option<Vec<Self::Elem>>, CoreError>;
}

/// Whether `xs` is a pencil from `e` to `f`.
pub fn verify_pencil<M: Model>(model: &M, e: &Idem<M>, f: &Idem<M>, xs: &[M::Elem]) -> bool {
    let alg = model.algebra();
    let domains: Vec<Idem<M>> = xs.iter().map(|x| model.dom_idem(x)).collect();
    alg.join_all(&domains) == *e && xs.iter().all(|x| alg.leq(&model.ran_idem(x), f))
}

/// `pencil` wrapped as a yes/no answer whose witness has been re-verified.
pub fn pencil_exists<M: Pencils>(model: &M, e: &Idem<M>, f: &Idem<M>) -> Result<Option<Vec<M::Elem>>, CoreError> {
    let found = model.pencil(e, f)?;
    if let Some(xs) = &found {
        assert!(verify_pencil(model, e, f, xs), "pencil search returned an invalid pencil");
    }
    Ok(found)
}

fn check_nonzero<A: BooleanAlgebra>(alg: &A, e: &A::Value, f: &A::Value) -> Result<(), CoreError> {
    if alg.is_zero(e) || alg.is_zero(f) {
        return Err(CoreError::ZeroIdempotent);
    }
    Ok(())
}

impl Pencils for SymmetricModel {
    /// Maps the points of `e`, in blocks of `|f|`, injectively onto the points
    /// of `f`; the points of `f` are reused from block to block.
    fn pencil(&self, e: &FiniteSet, f: &FiniteSet) -> Result<Option<Vec<PartialPerm>>, CoreError> {
        check_nonzero(self.algebra(), e, f)?;
        if e.leq(f).expect("same universe") {
            return Ok(Some(vec![PartialPerm::identity_on(e)]));
        }
        let targets: Vec<u8> = f.points().collect();
        let sources: Vec<u8> = e.points().collect();
        let xs = sources
            .chunks(targets.len())
            .map(|block| {
                PartialPerm::new(self.n(), block.iter().copied().zip(targets.iter().copied()))
                    .expect("block maps injectively")
            })
            .collect();
        Ok(Some(xs))
    }
}

impl Pencils for SemilatticeModel<PowersetAlgebra> {
    fn pencil(&self, e: &FiniteSet, f: &FiniteSet) -> Result<Option<Vec<FiniteSet>>, CoreError> {
        check_nonzero(self.algebra(), e, f)?;
        Ok(self.algebra().leq(e, f).then(|| vec![*e]))
    }
}

impl<A: Pencils, B: Pencils> Pencils for ProductModel<A, B> {
    /// Pencils of the two factors padded with zeros; a factor where `e` is
    /// nonzero but `f` is zero admits none.
    fn pencil(&self, e: &Idem<Self>, f: &Idem<Self>) -> Result<Option<Vec<Self::Elem>>, CoreError> {
        check_nonzero(self.algebra(), e, f)?;
        // Some(needed) for a usable factor, None for an obstructed one.
        let side = |e_zero: bool, f_zero: bool| match (e_zero, f_zero) {
            (true, _) => Some(false),
            (false, true) => None,
            (false, false) => Some(true),
        };
        let (la, ra) = (self.left.algebra(), self.right.algebra());
        let (Some(use_left), Some(use_right)) =
            (side(la.is_zero(&e.0), la.is_zero(&f.0)), side(ra.is_zero(&e.1), ra.is_zero(&f.1)))
        else {
            return Ok(None);
        };
        let mut xs = Vec::new();
        if use_left {
            let Some(left) = self.left.pencil(&e.0, &f.0)? else { return Ok(None) };
            xs.extend(left.into_iter().map(|x| (x, self.right.zero())));
        }
        if use_right {
            let Some(right) = self.right.pencil(&e.1, &f.1)? else { return Ok(None) };
            xs.extend(right.into_iter().map(|y| (self.left.zero(), y)));
        }
        Ok(Some(xs))
    }
}
