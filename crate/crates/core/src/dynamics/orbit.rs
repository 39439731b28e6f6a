//! Forward orbits over Q and sound pre-periodicity certificates.
//!
//! A starting point is pre-periodic exactly when its forward orbit is
//! finite.  Three certificates decide most cases:
//!
//! * a repeated value proves pre-periodicity (tail and cycle recorded);
//! * once `|x| ≥ B` with `B = max(1, (2 + Σ_{i<d}|f_i|)/|f_d|)`, every later
//!   value at least doubles in absolute value (real escape);
//! * once some prime `p ∤ f_d` has negative valuation in x, that valuation
//!   multiplies by d at every step (valuation escape).
//!
//! When no certificate fires within the step budget the answer is
//! `Undecided` — never a silent guess.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exactalg::{BigRat, IntPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EscapeCertificate {
    /// `|x| ≥ B` at this step, so `|f(x)| ≥ 2|x|` from here on.
    RealEscape { step: u32 },
    /// `v_p(x) < 0` for a prime not dividing the leading coefficient, so
    /// `v_p` strictly decreases from here on.
    ValuationEscape { prime: u64, step: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrbitStatus {
    Preperiodic {
        tail_length: u32,
        cycle_length: u32,
        /// The pairwise-distinct orbit values, starting at x₀
        /// (`tail_length + cycle_length` of them).
        orbit: Vec<BigRat>,
    },
    NotPreperiodic(EscapeCertificate),
    Undecided {
        steps_taken: u32,
    },
}

impl OrbitStatus {
    pub fn is_preperiodic(&self) -> bool {
        matches!(self, OrbitStatus::Preperiodic { .. })
    }

    pub fn is_undecided(&self) -> bool {
        matches!(self, OrbitStatus::Undecided { .. })
    }
}

/// Decides whether the forward orbit of `x0` under `f` is finite.
///
/// Escape certificates are evaluated along `f(x0), f^{(2)}(x0), …` (step n
/// is the n-th iterate); cycle detection includes `x0` itself.
pub fn is_preperiodic(f: &IntPoly, x0: &BigRat, max_steps: u32) -> OrbitStatus {
    let d = f.degree().expect("nonzero polynomial");
    debug_assert!(d >= 2);
    let escape_bound = real_escape_bound(f);

    let mut seen: HashMap<BigRat, u32> = HashMap::new();
    let mut orbit: Vec<BigRat> = Vec::new();
    seen.insert(x0.clone(), 0);
    orbit.push(x0.clone());
    let mut x = x0.clone();
    // denominator primes never grow: once unfactorable, always unfactorable
    let mut valuation_check = true;
    for step in 1..=max_steps {
        x = f.eval_rat(&x);
        if x.abs() >= escape_bound {
            // |f(x)| ≥ 2|x| must hold right now for the certificate to be sound
            let fx = f.eval_rat(&x);
            assert!(fx.abs() >= BigRat::from_integer(BigInt::from(2)) * x.abs());
            return OrbitStatus::NotPreperiodic(EscapeCertificate::RealEscape { step });
        }
        if valuation_check && !x.denom().is_one() {
            match escaping_denominator_prime(&x, f.lc()) {
                Some(p) => {
                    let fx = f.eval_rat(&x);
                    assert_eq!(
                        valuation(&fx, p),
                        d as i64 * valuation(&x, p),
                        "valuation must multiply by the degree at fire time"
                    );
                    return OrbitStatus::NotPreperiodic(EscapeCertificate::ValuationEscape {
                        prime: p,
                        step,
                    });
                }
                None => valuation_check = false,
            }
        }
        if let Some(&first) = seen.get(&x) {
            return OrbitStatus::Preperiodic {
                tail_length: first,
                cycle_length: step - first,
                orbit,
            };
        }
        seen.insert(x.clone(), step);
        orbit.push(x.clone());
    }
    OrbitStatus::Undecided { steps_taken: max_steps }
}

/// `B = max(1, (2 + Σ_{i<d}|f_i|)/|f_d|)`; for `|x| ≥ B`,
/// `|f(x)| ≥ |x|^{d−1}(|f_d||x| − Σ|f_i|) ≥ 2|x|`.
fn real_escape_bound(f: &IntPoly) -> BigRat {
    let d = f.degree().expect("nonzero");
    let mut tail = BigInt::from(2);
    for i in 0..d {
        tail += f.coeff(i).abs();
    }
    let b = BigRat::new(tail, f.lc().abs());
    b.max(BigRat::one())
}

/// Smallest prime dividing den(x) but not `lc`, when one can be named.
///
/// Primes shared with the leading coefficient cannot certify escape (they
/// are stripped first); a huge cofactor with no factor below the trial
/// bound is abandoned rather than mis-certified.
fn escaping_denominator_prime(x: &BigRat, lc: &BigInt) -> Option<u64> {
    let mut den = x.denom().clone();
    if den.is_one() {
        return None;
    }
    loop {
        let g = den.gcd(lc);
        if g.is_one() {
            break;
        }
        while (&den % &g).is_zero() {
            den /= &g;
        }
    }
    if den.is_one() {
        return None;
    }
    smallest_prime_factor(&den, 1_000_000)
}

fn smallest_prime_factor(n: &BigInt, trial_bound: u64) -> Option<u64> {
    debug_assert!(n.is_positive());
    if let Some(small) = n.to_u64() {
        if small <= trial_bound.saturating_mul(trial_bound) {
            let m = small;
            let mut d = 2u64;
            while d * d <= m {
                if m % d == 0 {
                    return Some(d);
                }
                d += 1;
            }
            return Some(m);
        }
    }
    let mut d = 2u64;
    while d <= trial_bound {
        if (n % BigInt::from(d)).is_zero() {
            return Some(d);
        }
        d += 1;
    }
    None
}

/// p-adic valuation of a nonzero rational.
pub(crate) fn valuation(x: &BigRat, p: u64) -> i64 {
    debug_assert!(!x.is_zero());
    let pb = BigInt::from(p);
    let count = |mut n: BigInt| {
        let mut v = 0i64;
        while (&n % &pb).is_zero() {
            n /= &pb;
            v += 1;
        }
        v
    };
    count(x.numer().clone()) - count(x.denom().clone())
}
