//! Executable Boolean inverse ∧-monoids.
//!
//! The crate provides two concrete models, the finite symmetric inverse
//! monoids `I_n` and the Cuntz inverse monoids `C_n` of prefix-substitution
//! maps on Cantor space, a model-generic calculus of supports and fixed
//! points, constructive witnesses for the involution and 3-cycle axioms, and
//! the pipeline that rebuilds a monoid isomorphism from an isomorphism of
//! unit groups.

pub mod algebra;
pub mod inverse;
pub mod symmetric;
pub mod cuntz;
pub mod axioms;
pub mod reconstruction;
