//! Prime-field machinery: Jacobi/Legendre symbols, modular polynomial
//! arithmetic, Rabin irreducibility testing, and the per-prime stability
//! certificate driven by critical-orbit resultant characters.
//!
//! Everything here is a pure function over immutable inputs and safe to call
//! concurrently.  Only odd primes are supported; primes of bad reduction
//! (dividing `2·f_d·lc(f')` or the discriminant numerator) are recognised and
//! excluded from certificates.

mod chars;
mod jacobi;
mod poly;
mod stability;

pub use chars::{iter_resultant_chars, CharIter};
pub use jacobi::{jacobi, jacobi_u64};
pub use poly::{rabin_irreducible, rabin_irreducible_with_cap, reduce_mod_p, ModPoly, ModReduction};
pub use stability::{
    stability_scan_single, ElimReason, Outcome, StabilityScanner, StabilityVerdict,
};

use thiserror::Error;

/// Default cap on the degree of a polynomial handed to the Rabin test.
pub const DEFAULT_RABIN_CAP: u64 = 4096;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ModpError {
    #[error("modulus of a Jacobi symbol must be odd and nonzero")]
    EvenModulus,
    #[error("degree {degree} exceeds the cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },
    #[error("bad reduction at p = {p}")]
    BadReduction { p: u64 },
    #[error("polynomial degree must be at least {needed}")]
    DegreeTooLow { needed: usize },
}
