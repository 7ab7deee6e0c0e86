//! PBW normal forms, root vectors and the realization isomorphism.

mod algebra;
mod base;
pub mod checks;
pub mod classical;
mod engine;
mod mono;
mod shuffle;
mod word;

#[cfg(test)]
mod tests;

pub use algebra::{kappa_of, Algebra};
pub use base::{base_table, BaseTable};
pub use engine::{Engine, DEFAULT_DEGREE_BOUND};
pub use mono::{letter_key, Elem, Form, Letter, Mono, RootLetter};
pub use shuffle::{Echelon, ShVec, Shuffler, Word};
pub use word::{WElem, WKey, WordModel};

use crate::coeff::CoeffError;
use crate::lie::LieError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PbwError {
    #[error("degree bound {bound} exceeded (found {found})")]
    DegreeBound { bound: u32, found: u32 },
    #[error("torus exponent of {0} is not integral in v-powers")]
    NonIntegral(String),
    #[error("commutator does not vanish at v = 1")]
    NotClassical,
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}
