//! The finite symmetric inverse monoids `I_n`.
//!
//! Small enough to enumerate (`|I_5| = 1546`), so every generic statement can
//! be checked exhaustively here. Also: pencils and the simplicity checkers,
//! products of models, and finite Stone duality (points and the pair groupoid).

mod duality;
mod model;
mod pencil;
mod perm;
mod simplicity;

use thiserror::Error;

use crate::algebra::AlgebraError;

pub use duality::{germ_groupoid, structure_space, Arrow, PairGroupoid, PointFilter};
pub use model::{ProductModel, SymmetricModel};
pub use pencil::{pencil_exists, verify_pencil, Pencils};
pub use perm::{enumerate_all, enumerate_units, PartialPerm, MAX_POINTS};
pub use simplicity::{
    fundamental_report, is_fundamental, is_zero_simplifying, zero_simplifying_report, FundamentalReport,
    IdealWitness, ZeroSimplifyingReport,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymmetricError {
    #[error("I_{0} is larger than supported")]
    TooManyPoints(u8),
    #[error("point {point} is outside {{0..{n}}}")]
    PointOutOfRange { point: u8, n: u8 },
    #[error("point {point} is sent to two different images")]
    NotAFunction { point: u8 },
    #[error("point {point} is hit twice")]
    NotInjective { point: u8 },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
