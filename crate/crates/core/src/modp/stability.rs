//! Depth-limited stability certificate for a single prime.
//!
//! A prime survives to depth D when no necessary condition fails: the
//! discriminant lies in the right square class, every critical-orbit
//! character up to depth D has the required constant sign, and every Rabin
//! test within the degree cap confirms the expanded iterate irreducible.
//! Survival is an upper-bound proxy: it never claims the polynomial stays
//! irreducible at depths beyond the evidence recorded.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::exactalg::{discriminant, IntPoly};

use super::chars::CharIter;
use super::jacobi::jacobi_u64;
use super::poly::{rabin_irreducible_with_cap, reduce_mod_p};
use super::ModpError;

/// Why a prime was eliminated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ElimReason {
    /// Discriminant in the wrong square class for the degree parity.
    DiscSquare,
    /// A critical-orbit character differs from the required constant sign.
    CharacterViolation,
    /// A character vanished: the iterate shares a root with f' mod p.
    SharedRoot,
    /// Rabin found the (expanded) iterate reducible.
    RabinReducible,
}

impl ElimReason {
    pub fn as_str(&self) -> &'static str {
        match self {
            ElimReason::DiscSquare => "disc_square",
            ElimReason::CharacterViolation => "character_violation",
            ElimReason::SharedRoot => "shared_root",
            ElimReason::RabinReducible => "rabin_reducible",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Eliminated {
        at_n: u32,
        reason: ElimReason,
    },
    SurvivedToDepth {
        n_max: u32,
        /// Deepest level at which Rabin confirmed irreducibility (levels
        /// beyond rely on the character filter only).
        rabin_confirmed_to: u32,
    },
    BadReduction,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityVerdict {
    pub p: u64,
    pub outcome: Outcome,
}

/// Per-polynomial context reused across many primes.
pub struct StabilityScanner {
    f: IntPoly,
    d: usize,
    /// 2·f_d·lc(f')·num(Disc f): p is of bad reduction iff p divides this.
    bad_product: BigInt,
    disc_num: BigInt,
    disc_den: BigInt,
}

impl StabilityScanner {
    pub fn new(f: &IntPoly) -> Result<Self, ModpError> {
        let d = f.degree().unwrap_or(0);
        if d < 2 {
            return Err(ModpError::DegreeTooLow { needed: 2 });
        }
        let disc = discriminant(f).expect("degree checked");
        let fp = f.derivative();
        let bad_product = BigInt::from(2) * f.lc() * fp.lc() * disc.numer();
        Ok(StabilityScanner {
            f: f.clone(),
            d,
            bad_product,
            disc_num: disc.numer().clone(),
            disc_den: disc.denom().clone(),
        })
    }

    pub fn poly(&self) -> &IntPoly {
        &self.f
    }

    pub fn is_bad_reduction(&self, p: u64) -> bool {
        p == 2 || self.bad_product.mod_floor(&BigInt::from(p)).is_zero()
    }

    /// Stability certificate for one odd prime.
    pub fn verdict(&self, p: u64, depth: u32, rabin_cap: u64) -> StabilityVerdict {
        if self.is_bad_reduction(p) {
            return StabilityVerdict { p, outcome: Outcome::BadReduction };
        }
        let eliminated = |at_n, reason| StabilityVerdict {
            p,
            outcome: Outcome::Eliminated { at_n, reason },
        };
        let d_even = self.d % 2 == 0;

        // Discriminant square class: non-square required for even degree,
        // square required for odd degree.
        let leg_disc = legendre_big(&self.disc_num, p) * legendre_big(&self.disc_den, p);
        debug_assert!(leg_disc != 0, "good reduction implies nonzero discriminant");
        if (d_even && leg_disc == 1) || (!d_even && leg_disc == -1) {
            return eliminated(1, ElimReason::DiscSquare);
        }

        // Base irreducibility of f itself.
        let fbar = reduce_mod_p(&self.f, p).poly;
        let mut expanded = fbar.clone();
        if !rabin_irreducible_with_cap(&fbar, usize::MAX).expect("degree >= 2") {
            return eliminated(1, ElimReason::RabinReducible);
        }
        let mut rabin_confirmed_to = 1u32;

        // Required constant sign of every character: −1 for even degree,
        // the symbol of (−1)^{(d−1)/2} mod p for odd degree.
        let required: i8 = if d_even {
            -1
        } else if ((self.d - 1) / 2) % 2 == 1 {
            jacobi_u64(p - 1, p) as i8
        } else {
            1
        };

        let mut chars = CharIter::new(&self.f, p).expect("good reduction checked");
        for n in 2..=depth {
            let chi = chars.next_char();
            if chi == 0 {
                return eliminated(n, ElimReason::SharedRoot);
            }
            if chi != required {
                return eliminated(n, ElimReason::CharacterViolation);
            }
            // The character filter is necessary, not sufficient; confirm by
            // Rabin on the expanded iterate while it fits under the cap.
            let within_cap = (self.d as u128)
                .checked_pow(n)
                .is_some_and(|dn| dn <= rabin_cap as u128);
            if within_cap {
                expanded = fbar.compose(&expanded);
                if !rabin_irreducible_with_cap(&expanded, usize::MAX).expect("degree >= 1") {
                    return eliminated(n, ElimReason::RabinReducible);
                }
                rabin_confirmed_to = n;
            }
        }
        StabilityVerdict {
            p,
            outcome: Outcome::SurvivedToDepth { n_max: depth, rabin_confirmed_to },
        }
    }
}

/// One-shot variant of [`StabilityScanner::verdict`].
pub fn stability_scan_single(
    f: &IntPoly,
    p: u64,
    depth: u32,
    rabin_cap: u64,
) -> Result<StabilityVerdict, ModpError> {
    Ok(StabilityScanner::new(f)?.verdict(p, depth, rabin_cap))
}

fn legendre_big(x: &BigInt, p: u64) -> i32 {
    let r = x.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits");
    jacobi_u64(r, p)
}
