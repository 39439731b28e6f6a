use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use crate::exactalg::{res_decompose, BigRat, IntPoly, ResDecomp};
use crate::modp::jacobi_u64;

use super::*;

fn p(coeffs: &[i64]) -> IntPoly {
    IntPoly::from_i64(coeffs)
}

fn rat(n: i64, d: i64) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

#[test]
fn primes_in_examples() {
    assert_eq!(primes_in(10, 20), vec![11, 13, 17, 19]);
    assert_eq!(primes_in(14, 16), Vec::<u64>::new());
    assert_eq!(primes_in(2, 2), vec![2]);
    assert_eq!(primes_in(2, 1_000_000).len(), 78498);
}

#[test]
fn primes_in_matches_naive_on_segment_boundaries() {
    let naive: Vec<u64> = (65_530..65_550)
        .filter(|&n| n > 1 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0))
        .collect();
    assert_eq!(primes_in(65_530, 65_549), naive);
}

#[test]
fn selberg_weights_z2() {
    let w = selberg_weights(2);
    assert_eq!(w.inner[&1], rat(1, 1));
    assert_eq!(w.inner[&2], rat(-1, 1));
    assert_eq!(w.combined[&1], rat(1, 1));
    assert_eq!(w.combined[&2], rat(-1, 1));
    assert_eq!(w.combined.len(), 2);
}

#[test]
fn selberg_weights_z3() {
    let w = selberg_weights(3);
    assert_eq!(w.inner[&1], rat(1, 1));
    assert_eq!(w.inner[&2], rat(-4, 5));
    assert_eq!(w.inner[&3], rat(-3, 5));
    assert_eq!(w.combined[&1], rat(1, 1));
    assert_eq!(w.combined[&2], rat(-24, 25));
    assert_eq!(w.combined[&3], rat(-21, 25));
    assert_eq!(w.combined[&6], rat(24, 25));
}

#[test]
fn selberg_normalization_and_size() {
    for z in [2u64, 3, 10, 30, 100] {
        let w = selberg_weights(z);
        assert_eq!(w.inner[&1], rat(1, 1), "z={z}");
        for (&r, lam) in &w.inner {
            assert!(lam.abs() <= rat(1, 1), "|Λ_{r}| > 1 at z={z}");
        }
    }
}

#[test]
fn combined_weight_support() {
    for z in [10u64, 30] {
        let w = selberg_weights(z);
        for &e in w.combined.keys() {
            assert!(e <= z * z);
            let mut n = e;
            let mut d = 2;
            while d * d <= n {
                if n % d == 0 {
                    assert!(d <= z, "prime factor {d} of {e} above z={z}");
                    n /= d;
                    assert!(n % d != 0, "{e} not squarefree");
                }
                d += 1;
            }
            if n > 1 {
                assert!(n <= z);
            }
        }
    }
}

#[test]
fn indicator_examples() {
    let w3 = selberg_weights(3);
    assert_eq!(sieve_indicator_sum(5, &w3), rat(1, 1));
    assert_eq!(sieve_indicator_sum(6, &w3), rat(4, 25));
    let w2 = selberg_weights(2);
    assert_eq!(sieve_indicator_sum(4, &w2), rat(0, 1));
}

#[test]
fn indicator_is_square_of_inner_sum() {
    for z in [2u64, 3, 10, 30] {
        let w = selberg_weights(z);
        for q in 1..=2000u64 {
            let lhs = sieve_indicator_sum(q, &w);
            let inner = inner_divisor_sum(q, &w);
            assert_eq!(lhs, &inner * &inner, "q={q} z={z}");
            assert!(lhs >= rat(0, 1));
        }
    }
}

#[test]
fn f64_weights_cross_check_at_z30() {
    let exact = selberg_weights(30);
    let approx = selberg_weights_f64(30);
    for q in 1..=10_000u64 {
        let e = sieve_indicator_sum(q, &exact).to_f64().expect("finite");
        let a = sieve_indicator_sum_f64(q, &approx);
        assert!((e - a).abs() <= 1e-9, "q={q}: {e} vs {a}");
    }
}

#[test]
fn combined_weight_magnitude_decreases_relative_to_z_squared() {
    let mut prev = f64::INFINITY;
    for z in [10u64, 30, 100] {
        let w = selberg_weights(z);
        let total: f64 = w.combined.values().map(|l| l.abs().to_f64().expect("finite")).sum();
        let scaled = total / (z * z) as f64;
        assert!(scaled.is_finite());
        assert!(scaled < prev, "Σ|λ⁺|/z² not decreasing at z={z}");
        prev = scaled;
    }
}

#[test]
fn window_sets_for_x2p1() {
    let f = p(&[1, 0, 1]);
    let w = build_window_sets(&f, 2, 3).unwrap();
    let want: &[(u32, u64, i64)] = &[(2, 5, 1), (3, 8, 5), (4, 17, 13), (5, 32, 677)];
    for &(n, nu, u) in want {
        let dec = &w.decomp[&n];
        assert_eq!((dec.nu, dec.u.clone()), (nu, BigInt::from(u)));
    }
    // classes: n=2,4 have (u mod 4, ν mod 2) = (1,1); n=3,5 have (1,0);
    // tie broken toward the lower class index (1,0) → {3,5}
    assert_eq!(w.n_set, vec![3, 5]);
    assert_eq!(w.m_set, vec![3, 5]);
    assert!(4 * w.n_set.len() >= 3);
    assert!(8 * w.m_set.len() >= 3);
}

#[test]
fn window_residue_conditions_and_parity_identity() {
    for f in [p(&[1, 0, 1]), p(&[2, 0, 0, -2, 1])] {
        let w = build_window_sets(&f, 2, 4).unwrap();
        for &r in &w.n_set {
            for &s in &w.n_set {
                let ur = &w.decomp[&r].u;
                let us = &w.decomp[&s].u;
                let nur = w.decomp[&r].nu;
                let nus = w.decomp[&s].nu;
                assert_eq!((ur + us).mod_floor(&BigInt::from(4)), BigInt::from(2));
                assert_eq!((nur + nus) % 2, 0);
                // the combined reciprocity exponent vanishes for every odd m
                for m in (3..100u64).step_by(2) {
                    let half = ((ur + us - BigInt::from(2)) / BigInt::from(2))
                        .mod_floor(&BigInt::from(2))
                        .to_u64()
                        .unwrap();
                    let exp = half * ((m - 1) / 2) + (nur + nus) * ((m * m - 1) / 8);
                    assert_eq!(exp % 2, 0, "m={m}");
                }
            }
        }
        for &m in &w.m_set {
            for &n in &w.m_set {
                assert!((&w.decomp[&m].u * &w.decomp[&n].u).is_positive());
            }
        }
    }
}

#[test]
fn window_budget_and_start_errors() {
    let f = p(&[1, 0, 1]);
    assert!(matches!(build_window_sets(&f, 1, 3), Err(SieveError::WindowStartTooLow)));
    assert!(matches!(
        build_window_sets(&f, 2, 40),
        Err(SieveError::BudgetExceeded { .. })
    ));
}

fn manual_windows(f: &IntPoly, m_set: Vec<u32>) -> WindowSets {
    let lo = *m_set.iter().min().unwrap();
    let hi = *m_set.iter().max().unwrap();
    let mut decomp = BTreeMap::new();
    for n in lo..=hi {
        decomp.insert(n, res_decompose(f, n).unwrap());
    }
    WindowSets { n_param: lo, t: hi - lo, decomp, n_set: m_set.clone(), m_set }
}

#[test]
fn compute_s_single_prime_example() {
    // f = x²+1, M = {3,4}: both characters at p = 3 are −1, inner sum −2
    let f = p(&[1, 0, 1]);
    let w = manual_windows(&f, vec![3, 4]);
    let out = compute_s(&f, 3, 3, &w, SMode::Direct).unwrap();
    assert_eq!(out.per_prime[&3], -2);
    assert_eq!(out.s, 4);
    let flipped = compute_s(&f, 3, 3, &w, SMode::Flipped).unwrap();
    assert_eq!(flipped.per_prime[&3], -2);
}

#[test]
fn compute_s_empty_range() {
    let f = p(&[1, 0, 1]);
    let w = manual_windows(&f, vec![3, 4]);
    let out = compute_s(&f, 24, 28, &w, SMode::Direct).unwrap();
    assert_eq!(out.s, 0);
    assert!(out.per_prime.is_empty());
}

#[test]
fn compute_s_modes_agree_small() {
    let f = p(&[1, 0, 1]);
    let w = build_window_sets(&f, 2, 3).unwrap();
    let a = compute_s(&f, 3, 200, &w, SMode::Direct).unwrap();
    let b = compute_s(&f, 3, 200, &w, SMode::Flipped).unwrap();
    assert_eq!(a.per_prime, b.per_prime);
    assert_eq!(a.s, b.s);
}

#[test]
fn compute_t_singleton_is_zero() {
    let f = p(&[1, 0, 1]);
    let w = manual_windows(&f, vec![3]);
    let weights = selberg_weights(2);
    assert_eq!(compute_t(8, 16, &w, &weights).unwrap(), rat(0, 1));
}

#[test]
fn compute_t_matches_bruteforce_triple_sum() {
    // hand-built window with u values 3 and 5 (product 15)
    let mut decomp = BTreeMap::new();
    decomp.insert(3, ResDecomp { n: 3, nu: 2, u: BigInt::from(3) });
    decomp.insert(4, ResDecomp { n: 4, nu: 4, u: BigInt::from(5) });
    let w = WindowSets { n_param: 3, t: 1, decomp, n_set: vec![3, 4], m_set: vec![3, 4] };
    let weights = selberg_weights(2);
    let got = compute_t(8, 16, &w, &weights).unwrap();

    let mut brute = rat(0, 1);
    for n1 in [3u32, 4] {
        for n2 in [3u32, 4] {
            if n1 == n2 {
                continue;
            }
            for (&e, lam) in &weights.combined {
                for q in 8..=16u64 {
                    if q % e == 0 {
                        brute += lam * BigRat::from_integer(BigInt::from(jacobi_u64(q % 15, 15)));
                    }
                }
            }
        }
    }
    assert_eq!(got, brute);
}

#[test]
fn pv_progression_examples() {
    // full-period sum over a prime modulus vanishes
    assert_eq!(pv_progression_sum(1, 13, 13).unwrap(), 0);
    assert_eq!(pv_progression_sum(1, 101, 101).unwrap(), 0);
    // shared factor with the modulus kills every term
    assert_eq!(pv_progression_sum(5, 100, 15).unwrap(), 0);
    // factored identity against the direct sum
    let direct: i64 = (1..=30u64)
        .filter(|k| k % 2 == 0)
        .map(|k| jacobi_u64(k % 15, 15) as i64)
        .sum();
    assert_eq!(pv_progression_sum(2, 30, 15).unwrap(), direct);
    assert_eq!(
        pv_progression_sum(2, 30, 9).unwrap_err(),
        SieveError::SquareModulus { v: 9 }
    );
    assert_eq!(pv_progression_sum(2, 30, 4).unwrap_err(), SieveError::BadModulus);
}

#[test]
fn pv_factored_equals_direct_various() {
    for v in [15u64, 21, 33, 35, 1001] {
        for e in 1..=10u64 {
            for k in [7u64, 50, 333] {
                let direct: i64 = (1..=k)
                    .filter(|x| x % e == 0)
                    .map(|x| jacobi_u64(x % v, v) as i64)
                    .sum();
                assert_eq!(pv_progression_sum(e, k, v).unwrap(), direct, "e={e} k={k} v={v}");
            }
        }
    }
}

#[test]
fn prime_char_sum_examples() {
    assert_eq!(prime_char_sum(3, 10).unwrap(), -1);
    assert_eq!(prime_char_sum(3, 1).unwrap(), 0);
    for q in [3u64, 5, 15, 21] {
        let s = prime_char_sum(q, 500).unwrap();
        assert!(s.unsigned_abs() <= primes_in(2, 500).len() as u64);
    }
    assert_eq!(prime_char_sum(9, 10).unwrap_err(), SieveError::SquareModulus { v: 9 });
}

#[test]
fn sifted_count_bounds() {
    // Σ_{q∈[Z,2Z]} indicator(q) stays under 3·Z/log Z and above the prime
    // count of the window (every prime > z passes the sieve with value 1).
    let z_param = 10_000u64;
    let level = 10; // ⌊Z^{1/4}⌋
    let w = selberg_weights(level);
    let mut total = rat(0, 1);
    for (&e, lam) in &w.combined {
        let count = z_param * 2 / e - (z_param - 1) / e;
        total += lam * BigRat::from_integer(BigInt::from(count));
    }
    let bound = 3.0 * z_param as f64 / (z_param as f64).ln();
    let total_f = total.to_f64().expect("finite");
    assert!(total_f <= bound, "sifted count {total_f} above {bound}");
    let prime_count = primes_in(z_param, 2 * z_param).len() as f64;
    assert!(total_f >= prime_count, "sifted count {total_f} below prime count {prime_count}");
}

#[test]
fn indicator_one_on_rough_numbers() {
    let w = selberg_weights(10);
    let primorial: u64 = 2 * 3 * 5 * 7;
    for q in 1..=500u64 {
        if num_integer::gcd(q, primorial) == 1 {
            assert_eq!(sieve_indicator_sum(q, &w), BigRat::one(), "q={q}");
        }
    }
}
