//! Selberg sieve weights for sifting out small prime factors.
//!
//! With `h(r) = ∏_{p|r} 1/(p−1)` and `G(z) = Σ_{r≤z} μ²(r)h(r)`, the inner
//! weights are
//!
//! `Λ_r = μ(r)·(r/φ(r))·(Σ_{t≤z/r, gcd(t,r)=1} μ²(t)h(t))/G(z)`
//!
//! for squarefree `r ≤ z`, and the combined weights are
//! `λ⁺_e = Σ_{lcm(r,s)=e} Λ_r·Λ_s`, supported on squarefree `e ≤ z²` whose
//! prime factors are all ≤ z.  Then `Σ_{e|q} λ⁺_e = (Σ_{r|q} Λ_r)² ≥ 0`, with
//! equality to 1 whenever q has no prime factor ≤ z.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::exactalg::BigRat;

/// Inner weights Λ_r and combined weights λ⁺_e, exact rationals.
#[derive(Clone, Debug)]
pub struct SelbergWeights {
    pub z: u64,
    pub inner: BTreeMap<u64, BigRat>,
    pub combined: BTreeMap<u64, BigRat>,
}

/// f64 variant of [`SelbergWeights`] for levels where exact rationals get
/// expensive (z above ~10³).
#[derive(Clone, Debug)]
pub struct SelbergWeightsF64 {
    pub z: u64,
    pub inner: BTreeMap<u64, f64>,
    pub combined: BTreeMap<u64, f64>,
}

/// Squarefree r ≤ z with μ(r) and φ(r) (= ∏(p−1), the denominator of h).
fn squarefree_table(z: u64) -> Vec<(u64, i8, u64)> {
    let z = z as usize;
    let mut spf = vec![0usize; z + 1];
    for i in 2..=z {
        if spf[i] == 0 {
            let mut j = i;
            while j <= z {
                if spf[j] == 0 {
                    spf[j] = i;
                }
                j += i;
            }
        }
    }
    let mut out = vec![(1u64, 1i8, 1u64)];
    'next: for r in 2..=z {
        let mut n = r;
        let mut mu = 1i8;
        let mut phi = 1u64;
        while n > 1 {
            let p = spf[n];
            n /= p;
            if n % p == 0 {
                continue 'next; // not squarefree
            }
            mu = -mu;
            phi *= (p - 1) as u64;
        }
        out.push((r as u64, mu, phi));
    }
    out
}

pub fn selberg_weights(z: u64) -> SelbergWeights {
    assert!(z >= 2, "sieve level must be at least 2");
    let table = squarefree_table(z);
    let rat = |n: u64, d: u64| BigRat::new(BigInt::from(n), BigInt::from(d));

    let mut g = BigRat::new(BigInt::from(0), BigInt::from(1));
    for &(_, _, phi) in &table {
        g += rat(1, phi);
    }

    let mut inner = BTreeMap::new();
    for &(r, mu, phi) in &table {
        let mut tail = BigRat::new(BigInt::from(0), BigInt::from(1));
        for &(t, _, tphi) in &table {
            if t > z / r {
                break;
            }
            if t.gcd(&r) == 1 {
                tail += rat(1, tphi);
            }
        }
        let mut lam = rat(r, phi) * tail / &g;
        if mu < 0 {
            lam = -lam;
        }
        inner.insert(r, lam);
    }

    let mut combined: BTreeMap<u64, BigRat> = BTreeMap::new();
    for (&r, lr) in &inner {
        for (&s, ls) in &inner {
            let e = r / r.gcd(&s) * s;
            let term = lr * ls;
            combined
                .entry(e)
                .and_modify(|v| *v += &term)
                .or_insert(term);
        }
    }
    combined.retain(|_, v| !num_traits::Zero::is_zero(v));
    SelbergWeights { z, inner, combined }
}

pub fn selberg_weights_f64(z: u64) -> SelbergWeightsF64 {
    assert!(z >= 2, "sieve level must be at least 2");
    let table = squarefree_table(z);
    let g: f64 = table.iter().map(|&(_, _, phi)| 1.0 / phi as f64).sum();

    let mut inner = BTreeMap::new();
    for &(r, mu, phi) in &table {
        let mut tail = 0.0;
        for &(t, _, tphi) in &table {
            if t > z / r {
                break;
            }
            if t.gcd(&r) == 1 {
                tail += 1.0 / tphi as f64;
            }
        }
        let lam = mu as f64 * (r as f64 / phi as f64) * tail / g;
        inner.insert(r, lam);
    }

    let mut combined: BTreeMap<u64, f64> = BTreeMap::new();
    for (&r, lr) in &inner {
        for (&s, ls) in &inner {
            let e = r / r.gcd(&s) * s;
            *combined.entry(e).or_insert(0.0) += lr * ls;
        }
    }
    SelbergWeightsF64 { z, inner, combined }
}

/// `Σ_{e|q} λ⁺_e`, which equals `(Σ_{r|q, r≤z} Λ_r)²`.
pub fn sieve_indicator_sum(q: u64, w: &SelbergWeights) -> BigRat {
    let mut sum = BigRat::new(BigInt::from(0), BigInt::from(1));
    for (&e, lam) in &w.combined {
        if q % e == 0 {
            sum += lam;
        }
    }
    sum
}

pub fn sieve_indicator_sum_f64(q: u64, w: &SelbergWeightsF64) -> f64 {
    w.combined
        .iter()
        .filter(|(&e, _)| q % e == 0)
        .map(|(_, lam)| lam)
        .sum()
}

/// `Σ_{r|q, r≤z} Λ_r` (the quantity whose square the indicator sum equals).
pub fn inner_divisor_sum(q: u64, w: &SelbergWeights) -> BigRat {
    let mut sum = BigRat::new(BigInt::from(0), BigInt::from(1));
    for (&r, lam) in &w.inner {
        if q % r == 0 {
            sum += lam;
        }
    }
    sum
}
