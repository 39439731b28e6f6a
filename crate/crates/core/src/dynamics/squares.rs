//! The Eisenstein trinomial family, the empirical square-product search over
//! odd parts, and exact verification of the resultant product identity for
//! trinomial-shaped (P2) polynomials.

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Pow, Signed, Zero};

use crate::exactalg::{iterate, res_decompose, resultant, BigRat, IntPoly, DEFAULT_DEGREE_CAP};

use super::classify::classify;
use super::DynamicsError;

/// Builds `f = aX^d − acX^{d−1} + c` (for which `f(0) = c` and `f(c) = c`,
/// so 0 is pre-periodic) and searches the prime factors of c for a witness
/// prime `p` with `p ∤ a`, `p | c`, `p² ∤ c`.  Such a pair certifies
/// dynamical irreducibility over Q by the Eisenstein criterion, which every
/// iterate inherits: leading coefficients are powers of a, all other
/// coefficients are multiples of c, and `f^{(n)}(0) = c`.
pub fn eisenstein_member(a: i64, c: i64, d: u32) -> (IntPoly, Option<u64>) {
    assert!(a != 0 && c != 0 && d >= 2);
    let mut coeffs = vec![BigInt::zero(); d as usize + 1];
    coeffs[0] = BigInt::from(c);
    coeffs[d as usize - 1] = BigInt::from(-a * c);
    coeffs[d as usize] = BigInt::from(a);
    let f = IntPoly::new(coeffs);

    let mut witness = None;
    let mut m = c.unsigned_abs();
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            if e == 1 && a.unsigned_abs() % p != 0 {
                witness = Some(p);
                break;
            }
        }
        p += 1;
    }
    if witness.is_none() && m > 1 && a.unsigned_abs() % m != 0 {
        witness = Some(m);
    }
    (f, witness)
}

/// All pairs `m < n` in `[n_lo, n_hi]` whose odd-part product `|u_m·u_n|` is
/// a perfect square, decided by exact integer square root.
pub fn find_square_products(
    f: &IntPoly,
    n_lo: u32,
    n_hi: u32,
) -> Result<Vec<(u32, u32)>, DynamicsError> {
    if n_lo >= n_hi {
        return Ok(Vec::new());
    }
    let decomps: Vec<_> = (n_lo..=n_hi)
        .map(|n| res_decompose(f, n))
        .collect::<Result<_, _>>()?;
    let mut out = Vec::new();
    for i in 0..decomps.len() {
        for j in i + 1..decomps.len() {
            let prod = (&decomps[i].u * &decomps[j].u).abs();
            let root = prod.sqrt();
            if &root * &root == prod {
                out.push((decomps[i].n, decomps[j].n));
            }
        }
    }
    Ok(out)
}

/// Exact check of the closed form for `Res(f^{(m)}·f^{(n)}, f')` on the P2
/// trinomial shape: the critical points are 0 (multiplicity d−2) and γ, so
///
/// `Res = (−1)^{(d−1)(d^m+d^n)} (d·f_d)^{d^m+d^n}
///        (f^{(m)}(0)·f^{(n)}(0))^{d−2} f^{(m)}(γ)·f^{(n)}(γ)`.
///
/// The left side is an independently computed integer resultant; agreement
/// also pins the resultant sign convention.
pub fn verify_res_product_formula(f: &IntPoly, m: u32, n: u32) -> Result<bool, DynamicsError> {
    let info = classify(f, 10_000)?;
    if !info.in_p2 {
        return Err(DynamicsError::ClassMismatch { required: "P2" });
    }
    assert!(2 <= m && m < n);
    let d = f.degree().expect("degree checked") as u32;
    let gamma = info.gamma.expect("P2 has a critical point");

    let fm = iterate(f, m, DEFAULT_DEGREE_CAP)?;
    let fn_ = iterate(f, n, DEFAULT_DEGREE_CAP)?;
    let lhs = BigRat::from_integer(resultant(&fm.mul(&fn_), &f.derivative())?);

    let dm_dn = BigInt::from(d).pow(m) + BigInt::from(d).pow(n);
    let sign = if ((BigInt::from(d) - 1u32) * &dm_dn).is_odd() { -1 } else { 1 };
    let base = BigRat::from_integer(BigInt::from(d) * f.lc());
    let zero = BigInt::zero();
    let at0 = BigRat::from_integer(fm.eval(&zero) * fn_.eval(&zero));
    let at_gamma = fm.eval_rat(&gamma) * fn_.eval_rat(&gamma);
    let exp = u32::try_from(&dm_dn).expect("iterate budget keeps this small");
    let rhs = BigRat::from_integer(BigInt::from(sign))
        * base.pow(exp as i32)
        * at0.pow(d as i32 - 2)
        * at_gamma;

    Ok(lhs == rhs)
}
