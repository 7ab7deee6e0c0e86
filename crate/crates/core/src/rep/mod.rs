//! Weight modules, R-matrices on tensor products, L-operators.

pub mod action;
pub mod loperator;
pub mod module;
pub mod rmatrix;

pub use action::{act_tensor, Action};
pub use loperator::{ad_orbit_probe, l_operator, l_square_check, ElemMatrix, OrbitReport};
pub use module::{RelationReport, WeightModule};
pub use rmatrix::{check_comult, check_quasitriangular, check_ybe, Conjugator, RData};

use crate::coeff::{Coeff, CoeffError};
use crate::linalg::Matrix;
use crate::pbw::PbwError;
use thiserror::Error;

pub type CMat = Matrix<Coeff>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("unsupported module: {0}")]
    Unsupported(String),
    #[error("non-integral exponent: {0}")]
    NonIntegral(String),
    #[error("{0}")]
    Mismatch(String),
    #[error(transparent)]
    Pbw(#[from] PbwError),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}

#[cfg(test)]
mod tests;
