//! Exact arbitrary-precision integer and rational polynomial arithmetic.
//!
//! Everything in this module is computed exactly: iterates of a polynomial,
//! resultants via the subresultant polynomial remainder sequence,
//! discriminants, Yun squarefree decomposition, the odd-part decomposition
//! `m = 2^ν·u` and Weil logarithmic heights.  All values are immutable after
//! construction and safe to share across threads.

mod poly;
mod resultant;
mod squarefree;

pub use poly::{IntPoly, RatPoly};
pub use resultant::{res_decompose, res_decompose_expanded, resultant, ResDecomp};
pub use squarefree::squarefree_decompose;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

/// Rational number in lowest terms with positive denominator (zero is `0/1`).
pub type BigRat = num_rational::BigRational;

/// Default cap on the coefficient count of an expanded iterate.
pub const DEFAULT_DEGREE_CAP: usize = 1 << 20;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExactError {
    #[error("iterate degree {needed} exceeds the configured cap {cap}")]
    DegreeCapExceeded { needed: u128, cap: usize },
    #[error("zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("zero input")]
    ZeroInput,
    #[error("resultant of the iterate with the derivative vanishes")]
    ZeroResultant,
    #[error("division by the zero polynomial")]
    DivisionByZeroPolynomial,
    #[error("polynomial degree must be at least {needed}")]
    DegreeTooLow { needed: usize },
    #[error("iterate index must be at least {needed}")]
    IterateIndexTooLow { needed: u32 },
}

/// n-fold self-composition `f∘f∘…∘f`, with the 0th iterate equal to `X`.
///
/// Fails with [`ExactError::DegreeCapExceeded`] when `deg(f)^n` would exceed
/// `degree_cap` coefficients.
pub fn iterate(f: &IntPoly, n: u32, degree_cap: usize) -> Result<IntPoly, ExactError> {
    let d = f.degree().unwrap_or(0) as u128;
    if d > 1 {
        let needed = d
            .checked_pow(n)
            .ok_or(ExactError::DegreeCapExceeded { needed: u128::MAX, cap: degree_cap })?;
        if needed > degree_cap as u128 {
            return Err(ExactError::DegreeCapExceeded { needed, cap: degree_cap });
        }
    }
    let mut r = IntPoly::x();
    for _ in 0..n {
        r = f.compose(&r);
    }
    Ok(r)
}

/// Discriminant `(−1)^{d(d−1)/2}·Res(f, f')/f_d` for `deg f ≥ 2`.
pub fn discriminant(f: &IntPoly) -> Result<BigRat, ExactError> {
    let d = f.degree().unwrap_or(0);
    if d < 2 {
        return Err(ExactError::DegreeTooLow { needed: 2 });
    }
    let r = resultant(f, &f.derivative())?;
    let sign = if (d * (d - 1) / 2) % 2 == 1 { -1 } else { 1 };
    Ok(BigRat::new(BigInt::from(sign) * r, f.lc().clone()))
}

/// Writes `m = 2^ν·u` with `u` odd; the sign of `m` is carried by `u`.
pub fn odd_part(m: &BigInt) -> Result<(u64, BigInt), ExactError> {
    if m.is_zero() {
        return Err(ExactError::ZeroInput);
    }
    let nu = m.trailing_zeros().expect("nonzero");
    Ok((nu, m >> nu))
}

/// Weil logarithmic height `h(a/b) = max(log|a|, log b)` for `a/b` in lowest
/// terms, with `h(0) = 0`.
pub fn weil_height(r: &BigRat) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    ln_abs(r.numer()).max(ln_abs(r.denom()))
}

/// Natural log of `|x|` for nonzero `x`, accurate for values far beyond the
/// f64 range.
pub fn ln_abs(x: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    debug_assert!(!x.is_zero());
    let mag = x.abs();
    let bits = mag.magnitude().bits();
    if bits <= 53 {
        return mag.to_f64().expect("fits").ln();
    }
    let shift = bits - 53;
    let top = (&mag >> shift).to_f64().expect("53 bits");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// `A = B·q + r` with `deg r < deg B`, in exact rational arithmetic.
pub fn divide_with_remainder(a: &IntPoly, b: &IntPoly) -> Result<(RatPoly, RatPoly), ExactError> {
    if b.is_zero() {
        return Err(ExactError::DivisionByZeroPolynomial);
    }
    Ok(RatPoly::from_int(a).div_rem(&RatPoly::from_int(b)))
}
