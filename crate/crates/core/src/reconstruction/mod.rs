//! Rebuilding monoid isomorphisms from unit group isomorphisms.
//!
//! Local subgroups and the centralizer-defined sets `Z_t`, `S_t`, `W_t`
//! recover supports of units from group data alone. A group isomorphism `α`
//! then transports ultrafilters through their support skeletons (`β`),
//! idempotents pointwise (`γ`), and elements through factorizations into
//! restrictions of units (`θ`, `Θ`). The full pipeline runs on `I_n`; on
//! `C_n` the local pieces run against caller-supplied oracles.

mod iso;
mod local;
mod pipeline;
mod skeleton;

use thiserror::Error;

use crate::axioms::AxiomError;
use crate::inverse::CoreError;

pub use iso::{GroupIso, S6_OUTER};
pub use local::{
    centralizer, local_subgroup_contains, separating_witness, st_set, wt_membership_theorem, wt_report, wt_set, zt_set,
    EnumerableUnits, SeparatingWitness, WtReport,
};
pub use pipeline::{
    beta, check_beta_equivariance, check_gamma_equivariance, reconstruct, reconstruct_with, theta, theta_with,
    FiniteTable, Gamma,
};
pub use skeleton::{skeleton_at_atom, skeleton_at_point, support_skeleton, SkeletonFilter};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReconstructionError {
    #[error("element is not a unit")]
    NotAUnit,
    #[error("element is not an involution other than 1")]
    NotAnInvolution,
    #[error("the unit group is infinite")]
    InfiniteGroup,
    #[error("σ(a) ≤ σ(t): nothing to separate")]
    PreconditionViolated,
    #[error("no element of S_t fails to commute with the unit")]
    NoSeparatingElement,
    #[error("SkeletonNotUltrafilter: supports of images of involutions moving {atom} meet in {meet}")]
    SkeletonNotUltrafilter { atom: u8, meet: String },
    #[error("EquivarianceFailure at g = {g}, e = {e}")]
    EquivarianceFailure { g: String, e: String },
    #[error("OrderTransferFailure at g = {g}, e = {e}")]
    OrderTransferFailure { g: String, e: String },
    #[error("NotAnIsomorphism at ({first}, {second})")]
    NotAnIsomorphism { first: String, second: String },
    #[error("not a group isomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("invalid group isomorphism data: {0}")]
    Fixture(String),
    #[error(transparent)]
    Axiom(#[from] AxiomError),
    #[error(transparent)]
    Core(#[from] CoreError),
}
