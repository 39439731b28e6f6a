//! Dense polynomials over a prime field F_p (p an odd machine-word prime),
//! with the Rabin irreducibility test.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::exactalg::IntPoly;

use super::{ModpError, DEFAULT_RABIN_CAP};

#[inline]
pub(crate) fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn powmod(mut base: u64, mut e: u64, p: u64) -> u64 {
    base %= p;
    let mut acc = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        e >>= 1;
    }
    acc
}

/// Inverse of `a` modulo the prime `p`.
pub(crate) fn invmod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    powmod(a, p - 2, p)
}

/// Polynomial over F_p, residues ascending, leading residue nonzero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl ModPoly {
    /// Builds from residues already in `[0, p)`.
    pub fn new(p: u64, mut coeffs: Vec<u64>) -> Self {
        debug_assert!(coeffs.iter().all(|&c| c < p));
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ModPoly { p, coeffs }
    }

    pub fn zero(p: u64) -> Self {
        ModPoly { p, coeffs: vec![] }
    }

    pub fn constant(p: u64, c: u64) -> Self {
        Self::new(p, vec![c % p])
    }

    pub fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> u64 {
        *self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn add(&self, other: &ModPoly) -> ModPoly {
        let p = self.p;
        let n = self.coeffs.len().max(other.coeffs.len());
        ModPoly::new(p, (0..n).map(|i| (self.coeff(i) + other.coeff(i)) % p).collect())
    }

    pub fn sub(&self, other: &ModPoly) -> ModPoly {
        let p = self.p;
        let n = self.coeffs.len().max(other.coeffs.len());
        ModPoly::new(p, (0..n).map(|i| (self.coeff(i) + p - other.coeff(i)) % p).collect())
    }

    pub fn mul_scalar(&self, c: u64) -> ModPoly {
        let p = self.p;
        ModPoly::new(p, self.coeffs.iter().map(|&a| mulmod(a, c, p)).collect())
    }

    pub fn mul(&self, other: &ModPoly) -> ModPoly {
        if self.is_zero() || other.is_zero() {
            return ModPoly::zero(self.p);
        }
        let p = self.p;
        let n = self.coeffs.len() + other.coeffs.len() - 1;
        let mut out = vec![0u64; n];
        if p < (1 << 32) {
            // products fit 64 bits; a u128 accumulator cannot overflow
            for t in 0..n {
                let lo = (t + 1).saturating_sub(other.coeffs.len());
                let hi = t.min(self.coeffs.len() - 1);
                let mut acc: u128 = 0;
                for i in lo..=hi {
                    acc += self.coeffs[i] as u128 * other.coeffs[t - i] as u128;
                }
                out[t] = (acc % p as u128) as u64;
            }
        } else {
            for (i, &a) in self.coeffs.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                for (j, &b) in other.coeffs.iter().enumerate() {
                    out[i + j] = (out[i + j] + mulmod(a, b, p)) % p;
                }
            }
        }
        ModPoly::new(p, out)
    }

    /// Plain composition `self(g)` with no reduction modulus.
    pub fn compose(&self, g: &ModPoly) -> ModPoly {
        let mut acc = ModPoly::zero(self.p);
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul(g).add(&ModPoly::constant(self.p, c));
        }
        acc
    }

    pub fn make_monic(&self) -> ModPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.mul_scalar(invmod(self.lc(), self.p))
    }

    /// Remainder of `self` by a monic `m`.
    pub fn rem_monic(&self, m: &ModPoly) -> ModPoly {
        debug_assert_eq!(m.lc(), 1);
        let p = self.p;
        let dm = m.degree().expect("nonzero modulus");
        if dm == 0 {
            return ModPoly::zero(p);
        }
        let mut r = self.coeffs.clone();
        while r.len() > dm {
            let lead = *r.last().unwrap();
            let top = r.len() - 1;
            if lead != 0 {
                for (i, &mc) in m.coeffs[..dm].iter().enumerate() {
                    let idx = top - dm + i;
                    r[idx] = (r[idx] + p - mulmod(lead, mc, p)) % p;
                }
            }
            r.pop();
        }
        ModPoly::new(p, r)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let p = self.p;
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = (mulmod(acc, x, p) + c) % p;
        }
        acc
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &ModPoly) -> ModPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let bm = b.make_monic();
            let r = a.rem_monic(&bm);
            a = bm;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.make_monic()
        }
    }

    /// `X^e mod m` for monic `m` of degree ≥ 1.
    pub fn pow_x_mod(e: u64, m: &ModPoly) -> ModPoly {
        let p = m.p;
        let mut acc = ModPoly::constant(p, 1).rem_monic(m);
        let mut base = ModPoly::x(p).rem_monic(m);
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem_monic(m);
            }
            base = base.mul(&base).rem_monic(m);
            e >>= 1;
        }
        acc
    }

    /// Modular composition `self(g) mod m` (Brent–Kung baby-step/giant-step);
    /// `m` monic, `deg g < deg m`.
    pub fn compose_mod(&self, g: &ModPoly, m: &ModPoly) -> ModPoly {
        let p = self.p;
        let dm = m.degree().expect("nonzero modulus");
        let len = self.coeffs.len();
        if len == 0 {
            return ModPoly::zero(p);
        }
        if len == 1 || dm == 0 {
            return ModPoly::constant(p, self.coeff(0)).rem_monic(m);
        }
        let bs = (len as f64).sqrt().ceil() as usize;
        let mut pows = Vec::with_capacity(bs + 1);
        pows.push(ModPoly::constant(p, 1));
        for i in 1..=bs {
            pows.push(pows[i - 1].mul(g).rem_monic(m));
        }
        let giant = pows[bs].clone();
        let nchunks = len.div_ceil(bs);
        let mut acc = ModPoly::zero(p);
        for j in (0..nchunks).rev() {
            let mut chunk = vec![0u64; dm];
            for (i, pw) in pows.iter().enumerate().take(bs) {
                let Some(&c) = self.coeffs.get(bs * j + i) else { break };
                if c == 0 {
                    continue;
                }
                for (t, &pc) in pw.coeffs.iter().enumerate() {
                    chunk[t] = (chunk[t] + mulmod(c, pc, p)) % p;
                }
            }
            acc = acc.mul(&giant).rem_monic(m).add(&ModPoly::new(p, chunk));
        }
        acc
    }
}

/// Result of reducing an integer polynomial modulo p.
#[derive(Clone, Debug)]
pub struct ModReduction {
    pub poly: ModPoly,
    /// True when p divides the leading coefficient, so the degree dropped.
    pub degree_drop: bool,
}

/// Coefficient-wise reduction of `f` modulo the odd prime `p`.
pub fn reduce_mod_p(f: &IntPoly, p: u64) -> ModReduction {
    let pbig = BigInt::from(p);
    let coeffs: Vec<u64> = f
        .coeffs()
        .iter()
        .map(|c| c.mod_floor(&pbig).to_u64().expect("residue fits"))
        .collect();
    let poly = ModPoly::new(p, coeffs);
    let degree_drop = !f.is_zero() && poly.degree() != f.degree();
    ModReduction { poly, degree_drop }
}

/// Rabin irreducibility over F_p with the default degree cap.
pub fn rabin_irreducible(fp: &ModPoly) -> Result<bool, ModpError> {
    rabin_irreducible_with_cap(fp, DEFAULT_RABIN_CAP as usize)
}

/// Rabin's criterion: `fp` of degree D is irreducible over F_p iff
/// `X^{p^D} ≡ X (mod fp)` and `gcd(X^{p^{D/r}} − X, fp) = 1` for every prime
/// `r | D`.  Frobenius powers are assembled by modular composition.
pub fn rabin_irreducible_with_cap(fp: &ModPoly, cap: usize) -> Result<bool, ModpError> {
    let Some(d) = fp.degree() else {
        return Err(ModpError::DegreeTooLow { needed: 1 });
    };
    if d == 0 {
        return Err(ModpError::DegreeTooLow { needed: 1 });
    }
    if d > cap {
        return Err(ModpError::DegreeCapExceeded { degree: d, cap });
    }
    if d == 1 {
        return Ok(true);
    }
    let p = fp.modulus();
    let m = fp.make_monic();
    let x = ModPoly::x(p).rem_monic(&m);

    // Frobenius ladder: frob[&e] = X^{p^e} mod m.
    let mut frob: std::collections::HashMap<usize, ModPoly> = std::collections::HashMap::new();
    frob.insert(1, ModPoly::pow_x_mod(p, &m));
    fn get(e: usize, frob: &mut std::collections::HashMap<usize, ModPoly>, m: &ModPoly) -> ModPoly {
        if let Some(v) = frob.get(&e) {
            return v.clone();
        }
        let half = get(e / 2, frob, m);
        let mut v = half.compose_mod(&half, m);
        if e % 2 == 1 {
            let one = frob.get(&1).expect("seeded").clone();
            v = one.compose_mod(&v, m);
        }
        frob.insert(e, v.clone());
        v
    }

    for r in prime_factors(d) {
        let fr = get(d / r, &mut frob, &m);
        let g = fr.sub(&x).gcd(&m);
        if g.degree() != Some(0) {
            return Ok(false);
        }
    }
    let fd = get(d, &mut frob, &m);
    Ok(fd == x)
}

/// Distinct prime factors of `n ≥ 2`, ascending.
pub(crate) fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
