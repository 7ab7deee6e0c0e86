//! Exact computer algebra for Weyl-element realizations of quantum groups.

pub mod coeff;
pub mod hopf;
pub mod lie;
pub mod linalg;
pub mod pbw;
pub mod realization;
pub mod report;
pub mod rep;
pub mod slice;
pub mod wq;
