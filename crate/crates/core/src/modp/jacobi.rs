//! Jacobi symbols via the binary algorithm (quadratic reciprocity plus the
//! supplementary law for 2).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ModpError;

/// Jacobi symbol `(a/v)` for odd `v`; for `v < 0` the symbol of `|v|` is
/// returned, and `(a/±1) = 1`.  Multiplicative in both arguments.
pub fn jacobi(a: &BigInt, v: &BigInt) -> Result<i32, ModpError> {
    if v.is_zero() {
        return Err(ModpError::EvenModulus);
    }
    let vabs = v.abs();
    if vabs.is_one() {
        return Ok(1);
    }
    if vabs.is_even() {
        return Err(ModpError::EvenModulus);
    }
    let a = a.mod_floor(&vabs);
    if let (Some(a), Some(v)) = (a.to_u64(), vabs.to_u64()) {
        return Ok(jacobi_u64(a, v));
    }
    Ok(jacobi_big(a, vabs))
}

fn jacobi_big(mut a: BigInt, mut n: BigInt) -> i32 {
    let three = BigInt::from(3);
    let five = BigInt::from(5);
    let seven = BigInt::from(7);
    let mut t = 1i32;
    while !a.is_zero() {
        let tz = a.trailing_zeros().expect("nonzero");
        if tz > 0 {
            a >>= tz;
            if tz % 2 == 1 {
                let r = &n & &seven;
                if r == three || r == five {
                    t = -t;
                }
            }
        }
        std::mem::swap(&mut a, &mut n);
        if (&a & &three) == three && (&n & &three) == three {
            t = -t;
        }
        a %= &n;
    }
    if n.is_one() {
        t
    } else {
        0
    }
}

/// Machine-word Jacobi symbol `(a/v)` for odd `v ≥ 1`.
pub fn jacobi_u64(a: u64, v: u64) -> i32 {
    debug_assert!(v % 2 == 1, "modulus must be odd");
    if v == 1 {
        return 1;
    }
    let mut a = a % v;
    let mut n = v;
    let mut t = 1i32;
    while a != 0 {
        while a & 1 == 0 {
            a >>= 1;
            let r = n & 7;
            if r == 3 || r == 5 {
                t = -t;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a & 3 == 3 && n & 3 == 3 {
            t = -t;
        }
        a %= n;
    }
    if n == 1 {
        t
    } else {
        0
    }
}
