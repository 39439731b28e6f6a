//! Resultants via the subresultant polynomial remainder sequence, and the
//! odd-part decomposition `f_d·Res(f^{(n)}, f') = 2^ν·u`.
//!
//! Sign convention throughout: `Res(g, h)` is the Sylvester determinant,
//! equivalently `lc(g)^{deg h}·∏_{g(α)=0} h(α)`, so that
//! `Res(g, h) = (−1)^{deg g·deg h}·Res(h, g)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};

use super::poly::{pseudo_rem, IntPoly, RatPoly};
use super::{iterate, BigRat, ExactError};

/// The decomposition `f_d·Res(f^{(n)}, f') = 2^ν·u` with `u` odd.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResDecomp {
    /// Iterate index (≥ 2).
    pub n: u32,
    /// 2-adic valuation.
    pub nu: u64,
    /// Odd part, sign included.
    pub u: BigInt,
}

/// Resultant of two nonzero integer polynomials, computed exactly by the
/// subresultant remainder sequence (no rational blowup).
pub fn resultant(g: &IntPoly, h: &IntPoly) -> Result<BigInt, ExactError> {
    if g.is_zero() || h.is_zero() {
        return Err(ExactError::ZeroPolynomial);
    }
    Ok(subresultant(g.clone(), h.clone()))
}

fn subresultant(mut a: IntPoly, mut b: IntPoly) -> BigInt {
    let mut s = 1i8;
    let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
    if da < db {
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
        std::mem::swap(&mut a, &mut b);
    }
    if a.degree().unwrap() == 0 {
        // both constant: empty Sylvester matrix
        return BigInt::one();
    }
    if b.degree().unwrap() == 0 {
        let r = Pow::pow(b.lc(), a.degree().unwrap() as u32);
        return if s < 0 { -r } else { r };
    }

    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        let delta = (da - db) as u32;
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
        let r = pseudo_rem(&a, &b, delta);
        a = b;
        let divisor = &g * Pow::pow(&h, delta);
        b = r.div_scalar_exact(&divisor);
        g = a.lc().clone();
        if delta >= 1 {
            h = exact_div(Pow::pow(&g, delta), Pow::pow(&h, delta - 1));
        }
        if b.is_zero() {
            return BigInt::zero();
        }
        if b.degree().unwrap() == 0 {
            let dega = a.degree().unwrap() as u32;
            let res = exact_div(Pow::pow(b.lc(), dega), Pow::pow(&h, dega.saturating_sub(1)));
            return if s < 0 { -res } else { res };
        }
    }
}

fn exact_div(a: BigInt, b: BigInt) -> BigInt {
    let (q, r) = a.div_rem(&b);
    debug_assert!(r.is_zero(), "inexact division in subresultant sequence");
    q
}

/// Odd-part decomposition of `f_d·Res(f^{(n)}, f')`, computed without ever
/// expanding `f^{(n)}`: the iterate is tracked in the quotient ring
/// `Q[X]/(f')` and finished with a small resultant.  No degree cap applies.
pub fn res_decompose(f: &IntPoly, n: u32) -> Result<ResDecomp, ExactError> {
    let r = res_iterate_derivative(f, n)?;
    decomp_from_res(f, n, r)
}

/// Same decomposition via full expansion of `f^{(n)}` followed by one big
/// resultant; subject to `degree_cap`.  Kept as an independent route for
/// cross-checking [`res_decompose`].
pub fn res_decompose_expanded(
    f: &IntPoly,
    n: u32,
    degree_cap: usize,
) -> Result<ResDecomp, ExactError> {
    check_decomp_args(f, n)?;
    let fn_ = iterate(f, n, degree_cap)?;
    let r = resultant(&fn_, &f.derivative())?;
    decomp_from_res(f, n, r)
}

fn check_decomp_args(f: &IntPoly, n: u32) -> Result<(), ExactError> {
    if f.degree().unwrap_or(0) < 2 {
        return Err(ExactError::DegreeTooLow { needed: 2 });
    }
    if n < 2 {
        return Err(ExactError::IterateIndexTooLow { needed: 2 });
    }
    Ok(())
}

fn decomp_from_res(f: &IntPoly, n: u32, res: BigInt) -> Result<ResDecomp, ExactError> {
    if res.is_zero() {
        return Err(ExactError::ZeroResultant);
    }
    let (nu, u) = super::odd_part(&(f.lc() * res))?;
    Ok(ResDecomp { n, nu, u })
}

/// `Res(f^{(n)}, f')` through the quotient ring `Q[X]/(f')`.
///
/// With `y_n = f^{(n)} mod f'` (computed by iterating `y ↦ f(y)` in the
/// quotient) and `k = deg f'`:
///
/// `Res(f^{(n)}, f') = (−1)^{d^n·k} · lc(f')^{d^n − deg y_n} · Res(f', y_n)`.
fn res_iterate_derivative(f: &IntPoly, n: u32) -> Result<BigInt, ExactError> {
    check_decomp_args(f, n)?;
    let d = f.degree().unwrap();
    let fp = f.derivative();
    let k = fp.degree().unwrap();
    // monic modulus: same remainders, cheaper reduction
    let lc_inv = BigRat::new(BigInt::one(), fp.lc().clone());
    let modulus = RatPoly::from_int(&fp).mul_scalar(&lc_inv);

    let mut y = RatPoly::x().div_rem(&modulus).1;
    for _ in 0..n {
        y = compose_mod(f, &y, &modulus);
    }
    if y.is_zero() {
        // f^{(n)} ≡ 0 mod f': every root of f' is a root of the iterate
        return Ok(BigInt::zero());
    }

    let dn = (d as u64)
        .checked_pow(n)
        .ok_or(ExactError::DegreeCapExceeded { needed: u128::MAX, cap: usize::MAX })?;
    let deg_y = y.degree().unwrap() as u64;
    let exp = u32::try_from(dn - deg_y)
        .map_err(|_| ExactError::DegreeCapExceeded { needed: dn as u128, cap: usize::MAX })?;

    let (ytilde, l) = y.clear_denominators();
    let small = resultant(&fp, &ytilde)?;
    // Res(f', y) = Res(f', ỹ)/L^k
    let num = Pow::pow(fp.lc(), exp) * small;
    let den = Pow::pow(&l, k as u32);
    let signed = if d % 2 == 1 && k % 2 == 1 { -num } else { num };
    let ratio = BigRat::new(signed, den);
    assert!(ratio.is_integer(), "resultant of integer polynomials must be an integer");
    Ok(ratio.to_integer())
}

/// Horner evaluation of `f` at `y` in `Q[X]/(modulus)` (modulus monic).
fn compose_mod(f: &IntPoly, y: &RatPoly, modulus: &RatPoly) -> RatPoly {
    let mut acc = RatPoly::zero();
    for c in f.coeffs().iter().rev() {
        acc = acc
            .mul(y)
            .add(&RatPoly::constant(BigRat::from_integer(c.clone())))
            .div_rem(modulus)
            .1;
    }
    acc
}

#[cfg(test)]
pub(crate) fn sylvester_resultant(g: &IntPoly, h: &IntPoly) -> BigInt {
    // Test oracle: determinant of the Sylvester matrix by exact rational
    // Gaussian elimination.  Only sensible for small degrees.
    let m = g.degree().unwrap();
    let n = h.degree().unwrap();
    if m == 0 && n == 0 {
        return BigInt::one();
    }
    let size = m + n;
    let mut mat = vec![vec![BigRat::zero(); size]; size];
    for row in 0..n {
        for (j, idx) in (0..=m).rev().enumerate() {
            mat[row][row + j] = BigRat::from_integer(g.coeff(idx));
        }
    }
    for row in 0..m {
        for (j, idx) in (0..=n).rev().enumerate() {
            mat[n + row][row + j] = BigRat::from_integer(h.coeff(idx));
        }
    }
    let mut det = BigRat::one();
    for col in 0..size {
        let Some(pivot) = (col..size).find(|&r| !mat[r][col].is_zero()) else {
            return BigInt::zero();
        };
        if pivot != col {
            mat.swap(pivot, col);
            det = -det;
        }
        let p = mat[col][col].clone();
        det *= &p;
        for r in col + 1..size {
            if mat[r][col].is_zero() {
                continue;
            }
            let factor = &mat[r][col] / &p;
            for c in col..size {
                let delta = &factor * &mat[col][c];
                mat[r][c] -= delta;
            }
        }
    }
    assert!(det.is_integer());
    det.to_integer()
}
