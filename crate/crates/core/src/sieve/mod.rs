//! Prime enumeration, Selberg sieve weights, window sets of iterate indices
//! with matched odd-part residues, and the character sums S and T.

mod charsums;
mod primes;
mod selberg;
mod windows;

pub use charsums::{compute_s, compute_t, prime_char_sum, pv_progression_sum, CharSumS, SMode};
pub use primes::primes_in;
pub use selberg::{
    inner_divisor_sum, selberg_weights, selberg_weights_f64, sieve_indicator_sum,
    sieve_indicator_sum_f64, SelbergWeights, SelbergWeightsF64,
};
pub use windows::{build_window_sets, WindowSets, WINDOW_BUDGET};

use thiserror::Error;

use crate::exactalg::ExactError;
use crate::modp::ModpError;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SieveError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Modp(#[from] ModpError),
    #[error("modulus {v} is a perfect square")]
    SquareModulus { v: u64 },
    #[error("modulus must be odd and at least 3")]
    BadModulus,
    #[error("window sets are empty")]
    EmptyWindow,
    #[error("window budget exceeded: deg^(N+t) = {needed} > {cap}")]
    BudgetExceeded { needed: u128, cap: u128 },
    #[error("window must start at iterate index 2 or later")]
    WindowStartTooLow,
    #[error("off-diagonal pair with non-positive odd-part product")]
    NonPositivePair,
}

#[cfg(test)]
mod tests;
