//! The character sums S and T over prime windows, a Pólya–Vinogradov style
//! progression sum, and character sums over primes.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::exactalg::{BigRat, IntPoly, ResDecomp};
use crate::modp::{jacobi, jacobi_u64, CharIter, StabilityScanner};

use super::primes::primes_in;
use super::selberg::SelbergWeights;
use super::windows::WindowSets;
use super::SieveError;

/// How the inner character sum is evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SMode {
    /// Legendre symbols of `f_d·Res(f^{(n)}, f') mod p` from the critical
    /// orbit in `F_p[X]/(f̄')`.
    Direct,
    /// Reciprocity-flipped form `±(p/|u_n|)` evaluated from the exact
    /// odd-part decompositions.
    Flipped,
}

#[derive(Clone, Debug)]
pub struct CharSumS {
    /// `Σ_p (Σ_{n∈M} χ_n(p))²` over good primes in the range.
    pub s: u64,
    /// Inner sum per prime, ascending.
    pub per_prime: BTreeMap<u64, i64>,
    /// Primes skipped for bad reduction.
    pub bad_reduction: Vec<u64>,
}

/// Sign factor `(−1)^{((u−1)/2)((p−1)/2) + ν(p²−1)/8}` from flipping
/// `(2^ν u / p)` by reciprocity; negative u is absorbed by the same
/// exponent read modulo 4.
pub(crate) fn flip_sign(dec: &ResDecomp, p: u64) -> i64 {
    let u_mod4 = dec.u.mod_floor(&BigInt::from(4)).to_u64().expect("small");
    let half_u_odd = u_mod4 == 3;
    let half_p_odd = p % 4 == 3;
    let two_char_odd = matches!(p % 8, 3 | 5);
    let exp = (half_u_odd && half_p_odd) ^ (dec.nu % 2 == 1 && two_char_odd);
    if exp {
        -1
    } else {
        1
    }
}

pub fn compute_s(
    f: &IntPoly,
    q_lo: u64,
    q_hi: u64,
    w: &WindowSets,
    mode: SMode,
) -> Result<CharSumS, SieveError> {
    if w.m_set.is_empty() {
        return Err(SieveError::EmptyWindow);
    }
    let scanner = StabilityScanner::new(f)?;
    let n_max = w.max_index();
    let mut out = CharSumS { s: 0, per_prime: BTreeMap::new(), bad_reduction: Vec::new() };
    for p in primes_in(q_lo, q_hi) {
        if scanner.is_bad_reduction(p) {
            out.bad_reduction.push(p);
            continue;
        }
        let inner: i64 = match mode {
            SMode::Direct => {
                let mut it = CharIter::new(f, p).expect("good reduction");
                let mut sum = 0i64;
                for n in 2..=n_max {
                    let chi = it.next_char() as i64;
                    if w.m_set.contains(&n) {
                        sum += chi;
                    }
                }
                sum
            }
            SMode::Flipped => w
                .m_set
                .iter()
                .map(|n| {
                    let dec = &w.decomp[n];
                    let j = jacobi(&BigInt::from(p), &dec.u).expect("odd u") as i64;
                    flip_sign(dec, p) * j
                })
                .sum(),
        };
        out.s += (inner * inner) as u64;
        out.per_prime.insert(p, inner);
    }
    Ok(out)
}

/// Off-diagonal weighted sum
/// `T = Σ_{n₁≠n₂∈M} Σ_e λ⁺_e Σ_{q∈[Q,2Q], e|q} (q/u_{n₁}u_{n₂})`.
pub fn compute_t(
    q_lo: u64,
    q_hi: u64,
    w: &WindowSets,
    weights: &SelbergWeights,
) -> Result<BigRat, SieveError> {
    let mut total = BigRat::new(BigInt::zero(), BigInt::from(1));
    let m = &w.m_set;
    for (i, &n1) in m.iter().enumerate() {
        for &n2 in &m[i + 1..] {
            let v = &w.decomp[&n1].u * &w.decomp[&n2].u;
            if !v.is_positive() {
                return Err(SieveError::NonPositivePair);
            }
            for (&e, lam) in &weights.combined {
                let mut inner = 0i64;
                let mut q = q_lo.div_ceil(e) * e;
                while q <= q_hi {
                    inner += jacobi(&BigInt::from(q), &v).expect("odd positive v") as i64;
                    q += e;
                }
                // ordered pairs (n1,n2) and (n2,n1) contribute equally
                total += lam * BigRat::from_integer(BigInt::from(2 * inner));
            }
        }
    }
    Ok(total)
}

/// Exact `Σ_{k≤K, e|k} (k/v)` for odd non-square `v ≥ 3`, via the factored
/// identity `(e/v)·Σ_{m≤K/e} (m/v)` when `gcd(e,v) = 1` (the sum vanishes
/// otherwise).
pub fn pv_progression_sum(e: u64, k: u64, v: u64) -> Result<i64, SieveError> {
    if v < 3 || v % 2 == 0 {
        return Err(SieveError::BadModulus);
    }
    if v.isqrt() * v.isqrt() == v {
        return Err(SieveError::SquareModulus { v });
    }
    if e == 0 {
        return Err(SieveError::BadModulus);
    }
    if e.gcd(&v) > 1 {
        return Ok(0);
    }
    let je = jacobi_u64(e % v, v) as i64;
    let mut sum = 0i64;
    for m in 1..=k / e {
        sum += jacobi_u64(m % v, v) as i64;
    }
    Ok(je * sum)
}

/// Exact `Σ_{p ≤ M} (p/q)` over primes, for odd non-square `q ≥ 3`.
///
/// Reported against the envelope `√M·log(qM)` for exploration; the bound
/// itself is never asserted.
pub fn prime_char_sum(q: u64, m_bound: u64) -> Result<i64, SieveError> {
    if q < 3 || q % 2 == 0 {
        return Err(SieveError::BadModulus);
    }
    if q.isqrt() * q.isqrt() == q {
        return Err(SieveError::SquareModulus { v: q });
    }
    Ok(primes_in(2, m_bound)
        .into_iter()
        .map(|p| jacobi_u64(p % q, q) as i64)
        .sum())
}
