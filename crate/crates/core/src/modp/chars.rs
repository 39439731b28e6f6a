//! Legendre symbols of `f_d·Res(f^{(n)}, f')` modulo p, computed without
//! expanding `f^{(n)}`.
//!
//! The iterate is tracked in the quotient ring `F_p[X]/(f̄')`: with
//! `y_n = f̄^{(n)} mod f̄'` and `k = deg f'`,
//!
//! `Res(f^{(n)}, f') mod p = (−1)^{d^n·k} · lc(f̄')^{d^n − deg y_n} · Res(f̄', y_n)`,
//!
//! which costs O(d·k²) ring operations per level.  The reduction law
//! `Res(f^{(n)}, f') mod p = Res(f̄^{(n)}, f̄')` needs `p ∤ f_d·lc(f')`
//! (good reduction), which is enforced at construction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::exactalg::IntPoly;

use super::jacobi::jacobi_u64;
use super::poly::{mulmod, powmod, reduce_mod_p, ModPoly};
use super::ModpError;

/// Streams the characters χ_n for n = 2, 3, … for one polynomial and prime.
#[derive(Debug)]
pub struct CharIter {
    p: u64,
    fbar: ModPoly,
    fpbar_monic: ModPoly,
    lc_fp: u64,
    fd: u64,
    d: u64,
    k: usize,
    k_odd_sign: bool,
    /// y = f̄^{(i)} mod f̄'
    y: ModPoly,
    i: u32,
}

impl CharIter {
    pub fn new(f: &IntPoly, p: u64) -> Result<Self, ModpError> {
        if p < 3 || p % 2 == 0 {
            return Err(ModpError::EvenModulus);
        }
        let d = f.degree().unwrap_or(0);
        if d < 2 {
            return Err(ModpError::DegreeTooLow { needed: 2 });
        }
        let fred = reduce_mod_p(f, p);
        let fpred = reduce_mod_p(&f.derivative(), p);
        if fred.degree_drop || fpred.degree_drop {
            return Err(ModpError::BadReduction { p });
        }
        let fpbar = fpred.poly;
        let k = fpbar.degree().expect("derivative nonzero");
        let fpbar_monic = fpbar.make_monic();
        let y = ModPoly::x(p).rem_monic(&fpbar_monic);
        let fd = f
            .lc()
            .mod_floor(&BigInt::from(p))
            .to_u64()
            .expect("residue fits");
        let mut it = CharIter {
            p,
            fbar: fred.poly,
            fpbar_monic,
            lc_fp: fpbar.lc(),
            fd,
            d: d as u64,
            k,
            k_odd_sign: d % 2 == 1 && k % 2 == 1,
            y,
            i: 0,
        };
        it.step();
        Ok(it)
    }

    fn step(&mut self) {
        self.y = self.fbar.compose_mod(&self.y, &self.fpbar_monic);
        self.i += 1;
    }

    /// Advances to the next iterate index (first call yields n = 2) and
    /// returns the Legendre symbol of `f_d·Res(f^{(n)}, f') mod p`.
    pub fn next_char(&mut self) -> i8 {
        self.step();
        let p = self.p;
        if self.y.is_zero() {
            return 0;
        }
        // d^n and the lc exponent live in exponents of F_p^*: reduce mod p−1
        let dn_mod = powmod(self.d, self.i as u64, p - 1);
        let deg_y = self.y.degree().unwrap() as u64 % (p - 1);
        let exp = (dn_mod + (p - 1) - deg_y) % (p - 1);
        let small = resultant_fp(&ModPoly::new(p, fp_coeffs(self)), &self.y);
        let mut v = mulmod(powmod(self.lc_fp, exp, p), small, p);
        // (−1)^{d^n·k}: nonzero only when d and k are both odd
        if self.k_odd_sign {
            v = (p - v) % p;
        }
        v = mulmod(v, self.fd, p);
        if v == 0 {
            return 0;
        }
        jacobi_u64(v, p) as i8
    }

    /// Index n of the character most recently returned.
    pub fn current_n(&self) -> u32 {
        self.i
    }
}

fn fp_coeffs(it: &CharIter) -> Vec<u64> {
    // reconstruct f̄' from its monic form: monic · lc
    it.fpbar_monic
        .coeffs()
        .iter()
        .map(|&c| mulmod(c, it.lc_fp, it.p))
        .collect()
}

/// Characters for n = 2..=n_max as a vector (entry j is n = j + 2).
pub fn iter_resultant_chars(f: &IntPoly, p: u64, n_max: u32) -> Result<Vec<i8>, ModpError> {
    let mut it = CharIter::new(f, p)?;
    Ok((2..=n_max).map(|_| it.next_char()).collect())
}

/// Resultant of two polynomials over F_p (Euclidean descent).
pub(crate) fn resultant_fp(a: &ModPoly, b: &ModPoly) -> u64 {
    let p = a.modulus();
    let mut a = a.clone();
    let mut b = b.clone();
    let mut res = 1u64;
    let mut neg = false;
    loop {
        if a.is_zero() || b.is_zero() {
            return 0;
        }
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        if da == 0 {
            res = mulmod(res, powmod(a.lc(), db as u64, p), p);
            break;
        }
        if db == 0 {
            res = mulmod(res, powmod(b.lc(), da as u64, p), p);
            break;
        }
        if da < db {
            if da % 2 == 1 && db % 2 == 1 {
                neg = !neg;
            }
            std::mem::swap(&mut a, &mut b);
            continue;
        }
        // Res(a,b) = (−1)^{da·db} · lc(b)^{da − deg r} · Res(b, r),  r = a mod b
        // (the remainder is unchanged by scaling b monic)
        let r = a.rem_monic(&b.make_monic());
        if da % 2 == 1 && db % 2 == 1 {
            neg = !neg;
        }
        if r.is_zero() {
            return 0;
        }
        let dr = r.degree().unwrap();
        res = mulmod(res, powmod(b.lc(), (da - dr) as u64, p), p);
        a = b;
        b = r;
    }
    if neg {
        (p - res) % p
    } else {
        res
    }
}
