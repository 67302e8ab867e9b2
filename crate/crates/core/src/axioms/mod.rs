//! Constructive witnesses for the involution and 3-cycle axioms, piecewise
//! factorization into restrictions of units, and generator enumeration.

mod factor;
mod generators;
mod germ_unit;
mod pieces;
mod witness;

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::cuntz::CuntzError;
use crate::inverse::CoreError;

pub use factor::{factorize_with, piecewise_factorize, FactorOrder, Factorizable, Factorization};
pub use generators::Generators;
pub use germ_unit::{agrees_at_base, compose_involutions, germ_involutions, germ_unit};
pub use pieces::PieceModel;
pub use witness::{
    f1_witness, f2_witness, f3_witness, orthogonal_piece, F1Witness, F2Witness, F3Witness, DEFAULT_DEPTH_CAP,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AxiomError {
    #[error("idempotent must be nonzero")]
    ZeroClopen,
    #[error("element must be nonzero")]
    ZeroElement,
    #[error("need {needed} disjoint pieces but the idempotent has only {available} atoms")]
    AtomObstruction { needed: usize, available: usize },
    #[error("no piece found within refinement depth {depth_cap}")]
    SearchExhausted { depth_cap: usize },
    #[error("element is not an involution other than 1")]
    NotAnInvolution,
    #[error("idempotent is not below the support")]
    NotBelowSupport,
    #[error("postcondition failed: {0}")]
    PostconditionFailed(&'static str),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Cuntz(#[from] CuntzError),
}

#[cfg(test)]
mod tests;
