//! Whittaker character, the left ideal `I_q`, Whittaker vectors and
//! low-degree elements of the q-W algebra.

pub mod character;
pub mod invariants;
pub mod reduce;

pub use character::{certify, CertifiedRelation, KPoly, WhittakerCharacter};
pub use invariants::{coset_basis, equivalence_on_basis, torus_generators, w_elements, wh_of_module, EquivalenceReport, InvariantReport};
pub use reduce::IdealReducer;

use crate::hopf::HopfError;
use crate::pbw::PbwError;
use crate::rep::RepError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WqError {
    #[error("the gammas of the first involution are not simple roots")]
    NotSimple,
    #[error("the segment is empty")]
    EmptySegment,
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Pbw(#[from] PbwError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Rep(#[from] RepError),
}

#[cfg(test)]
mod tests;
