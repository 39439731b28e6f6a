//! Dense univariate polynomials over the integers and the rationals.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::BigRat;

/// Dense integer-coefficient polynomial, coefficients ascending (`c_0..c_d`).
///
/// The zero polynomial is the empty coefficient vector; otherwise the leading
/// coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `X`.
    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Leading coefficient; panics on the zero polynomial.
    pub fn lc(&self) -> &BigInt {
        self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    /// Coefficient of `X^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rat(&self, x: &BigRat) -> BigRat {
        let mut acc = BigRat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRat::from_integer(c.clone());
        }
        acc
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigInt::from(i + 1))
                .collect(),
        )
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn mul_scalar(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides every coefficient by `c`, which must divide exactly.
    pub fn div_scalar_exact(&self, c: &BigInt) -> IntPoly {
        assert!(!c.is_zero());
        IntPoly::new(
            self.coeffs
                .iter()
                .map(|a| {
                    let (q, r) = a.div_rem(c);
                    debug_assert!(r.is_zero(), "inexact scalar division");
                    q
                })
                .collect(),
        )
    }

    /// Multiplies by `X^k`.
    pub fn shift_up(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); k];
        out.extend_from_slice(&self.coeffs);
        IntPoly { coeffs: out }
    }

    /// Substitutes `g` for `X` (Horner).
    pub fn compose(&self, g: &IntPoly) -> IntPoly {
        let mut acc = IntPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(g).add(&IntPoly::constant(c.clone()));
        }
        acc
    }

    /// `f(X + u)`.
    pub fn shift_arg(&self, u: &BigInt) -> IntPoly {
        self.compose(&IntPoly::new(vec![u.clone(), BigInt::one()]))
    }

    /// Positive gcd of the coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_abs(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut c = self.content();
        if self.lc().is_negative() {
            c = -c;
        }
        self.div_scalar_exact(&c)
    }

    /// Exact polynomial division; panics if `d` does not divide `self`.
    pub fn div_exact(&self, d: &IntPoly) -> IntPoly {
        assert!(!d.is_zero());
        if self.is_zero() {
            return IntPoly::zero();
        }
        let dd = d.degree().unwrap();
        let mut rem = self.clone();
        let mut q = vec![BigInt::zero(); self.coeffs.len() - d.coeffs.len() + 1];
        while !rem.is_zero() && rem.degree().unwrap() >= dd {
            let dr = rem.degree().unwrap();
            let (c, r) = rem.lc().div_rem(d.lc());
            debug_assert!(r.is_zero(), "inexact polynomial division");
            q[dr - dd] = c.clone();
            rem = rem.sub(&d.mul_scalar(&c).shift_up(dr - dd));
        }
        debug_assert!(rem.is_zero(), "inexact polynomial division");
        IntPoly::new(q)
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

/// Canonical form: descending powers, `*` between coefficient and variable,
/// `^` only for exponents ≥ 2, unit coefficients elided on variable terms.
/// `parse_poly` round-trips this exactly.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            if i == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if i == 1 {
                    write!(f, "x")?;
                } else {
                    write!(f, "x^{i}")?;
                }
            }
        }
        Ok(())
    }
}

/// Primitive gcd (positive leading coefficient) of two integer polynomials,
/// via the primitive pseudo-remainder sequence.  Content of the inputs is
/// discarded.
pub(crate) fn int_poly_gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut a = a.primitive_abs();
    let mut b = b.primitive_abs();
    if a.is_zero() {
        return b;
    }
    while !b.is_zero() {
        if b.degree().unwrap() == 0 {
            return IntPoly::constant(BigInt::one());
        }
        if a.degree().unwrap() < b.degree().unwrap() {
            std::mem::swap(&mut a, &mut b);
            continue;
        }
        let delta = (a.degree().unwrap() - b.degree().unwrap()) as u32;
        let r = pseudo_rem(&a, &b, delta);
        a = b;
        b = r.primitive_abs();
    }
    a
}

/// Pseudo-remainder of `lc(b)^{delta+1}·a` by `b`, where
/// `delta = deg a − deg b`.
pub(crate) fn pseudo_rem(a: &IntPoly, b: &IntPoly, delta: u32) -> IntPoly {
    let lb = b.lc().clone();
    let db = b.degree().unwrap();
    let mut r = a.clone();
    let mut e = delta as i64 + 1;
    while !r.is_zero() && r.degree().unwrap() >= db {
        let dr = r.degree().unwrap();
        let lr = r.lc().clone();
        r = r.mul_scalar(&lb).sub(&b.mul_scalar(&lr).shift_up(dr - db));
        e -= 1;
    }
    debug_assert!(e >= 0);
    if e > 0 {
        r = r.mul_scalar(&num_traits::Pow::pow(&lb, e as u32));
    }
    r
}

/// Dense rational-coefficient polynomial (exact arithmetic).
#[derive(Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<BigRat>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn from_int(p: &IntPoly) -> Self {
        RatPoly {
            coeffs: p.coeffs().iter().map(|c| BigRat::from_integer(c.clone())).collect(),
        }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: vec![] }
    }

    pub fn constant(c: BigRat) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::new(vec![BigRat::zero(), BigRat::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> &BigRat {
        self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    pub fn coeff(&self, i: usize) -> BigRat {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    pub fn eval(&self, x: &BigRat) -> BigRat {
        let mut acc = BigRat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![BigRat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }

    pub fn mul_scalar(&self, c: &BigRat) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Quotient and remainder with `deg rem < deg d`.
    pub fn div_rem(&self, d: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!d.is_zero());
        let dd = d.degree().unwrap();
        let mut rem = self.clone();
        let mut q = vec![BigRat::zero(); self.coeffs.len().saturating_sub(dd)];
        while !rem.is_zero() && rem.degree().unwrap() >= dd {
            let dr = rem.degree().unwrap();
            let c = rem.lc() / d.lc();
            rem = rem.sub(&d.mul_scalar(&c).shift_up(dr - dd));
            // the subtraction may leave a stale leading term of rounding-free
            // exact zero; RatPoly::new trimmed it, but guard against a
            // non-decreasing degree loop all the same
            debug_assert!(rem.degree().map_or(true, |nd| nd < dr));
            q[dr - dd] = c;
        }
        (RatPoly::new(q), rem)
    }

    pub fn shift_up(&self, k: usize) -> RatPoly {
        if self.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![BigRat::zero(); k];
        out.extend_from_slice(&self.coeffs);
        RatPoly { coeffs: out }
    }

    /// Scales to integer coefficients: returns `(L·self, L)` with `L ≥ 1` the
    /// least common multiple of the denominators.
    pub fn clear_denominators(&self) -> (IntPoly, BigInt) {
        let mut l = BigInt::one();
        for c in &self.coeffs {
            l = l.lcm(c.denom());
        }
        let p = IntPoly::new(
            self.coeffs
                .iter()
                .map(|c| {
                    let (q, r) = (c.numer() * &l).div_rem(c.denom());
                    debug_assert!(r.is_zero());
                    q
                })
                .collect(),
        );
        (p, l)
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}
