//! The Cuntz inverse monoids `C_n`.
//!
//! Elements are partial bijections of n-ary Cantor space built from finitely
//! many prefix substitutions; idempotents are clopen sets and the units form
//! Thompson's group `V_n`. Points are restricted to eventually periodic
//! sequences, which every element maps to eventually periodic sequences.

mod bijection;
mod germ;
mod model;
mod point;
pub mod sample;
mod units;

use thiserror::Error;

use crate::algebra::{AlgebraError, Word};

pub use bijection::PrefixBijection;
pub use germ::{act, germ_compose, local_pair, Germ};
pub use model::CuntzModel;
pub use point::Point;
pub use sample::CuntzSampler;
pub use units::{cylinder_three_cycle, extend_to_unit, moved_point_in, swap_involution, unit_extension};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CuntzError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("{side} words {first} and {second} are comparable")]
    NotAntichain { side: &'static str, first: Word, second: Word },
    #[error("words {u} and {v} are comparable")]
    ComparableWords { u: Word, v: Word },
    #[error("no unit extends a map between the whole space and a proper subset")]
    UnitExtensionImpossible,
    #[error("point {0} is outside the domain")]
    PointOutsideDomain(String),
    #[error("germs are not composable")]
    GermsNotComposable,
    #[error("a point needs a nonempty period")]
    EmptyPeriod,
    #[error("element is not a unit")]
    NotAUnit,
}
