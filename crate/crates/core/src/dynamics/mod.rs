//! Orbits over the rationals, pre-periodicity certificates, the polynomial
//! classes P1/P2/P3 and their distinguished critical point γ, and the
//! empirical square-product searches over odd parts of iterate resultants.

mod classify;
mod orbit;
mod squares;

pub use classify::{classify, ClassInfo, P1Witness};
pub use orbit::{is_preperiodic, EscapeCertificate, OrbitStatus};
pub use squares::{eisenstein_member, find_square_products, verify_res_product_formula};

use thiserror::Error;

use crate::exactalg::ExactError;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DynamicsError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("polynomial degree must be at least {needed}")]
    DegreeTooLow { needed: usize },
    #[error("operation requires a polynomial of class {required}")]
    ClassMismatch { required: &'static str },
}

#[cfg(test)]
mod tests;
