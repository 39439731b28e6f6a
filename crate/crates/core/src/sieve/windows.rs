//! Window sets of iterate indices with matched odd-part residues.
//!
//! Over a window `n ∈ [N, N+t]` the odd-part decompositions
//! `f_d·Res(f^{(n)}, f') = 2^{ν_n}·u_n` are pigeonholed on
//! `(u_n mod 4, ν_n mod 2)` into 8 residue classes (only classes with odd u
//! are inhabited).  A largest class forms the set N; for r, s in N this
//! forces `u_r + u_s ≡ 2 (mod 4)` and `ν_r + ν_s ≡ 0 (mod 2)`.  The larger
//! constant-sign half of N forms M, on which `u_m·u_n > 0`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use crate::exactalg::{res_decompose, IntPoly, ResDecomp};

use super::SieveError;

/// Exact-arithmetic budget for `deg(f)^{N+t}` in a window build.
pub const WINDOW_BUDGET: u128 = 1 << 20;

#[derive(Clone, Debug)]
pub struct WindowSets {
    pub n_param: u32,
    pub t: u32,
    /// Odd-part decompositions for every n in `[N, N+t]`.
    pub decomp: BTreeMap<u32, ResDecomp>,
    /// Largest residue class (ascending iterate indices).
    pub n_set: Vec<u32>,
    /// Larger constant-sign half of `n_set`.
    pub m_set: Vec<u32>,
}

impl WindowSets {
    pub fn max_index(&self) -> u32 {
        *self.m_set.last().expect("m_set nonempty")
    }
}

pub fn build_window_sets(f: &IntPoly, n_param: u32, t: u32) -> Result<WindowSets, SieveError> {
    if n_param < 2 {
        return Err(SieveError::WindowStartTooLow);
    }
    let d = f.degree().unwrap_or(0) as u128;
    let needed = d
        .checked_pow(n_param + t)
        .ok_or(SieveError::BudgetExceeded { needed: u128::MAX, cap: WINDOW_BUDGET })?;
    if needed > WINDOW_BUDGET {
        return Err(SieveError::BudgetExceeded { needed, cap: WINDOW_BUDGET });
    }

    let mut decomp = BTreeMap::new();
    for n in n_param..=n_param + t {
        decomp.insert(n, res_decompose(f, n)?);
    }

    // class index (u mod 4)·2 + (ν mod 2); u odd, so only 4 of 8 inhabited
    let mut classes: Vec<Vec<u32>> = vec![Vec::new(); 8];
    for (&n, dec) in &decomp {
        let u_mod4 = dec.u.mod_floor(&BigInt::from(4)).to_u64().expect("small");
        let idx = (u_mod4 * 2 + dec.nu % 2) as usize;
        classes[idx].push(n);
    }
    let best = classes
        .iter()
        .enumerate()
        .max_by(|(ia, a), (ib, b)| a.len().cmp(&b.len()).then(ib.cmp(ia)))
        .map(|(i, _)| i)
        .expect("nonempty");
    let n_set = classes[best].clone();

    let (pos, neg): (Vec<u32>, Vec<u32>) = n_set
        .iter()
        .partition(|&&n| decomp[&n].u.is_positive());
    let m_set = if pos.len() >= neg.len() { pos } else { neg };

    // pigeonhole guarantees, asserted on every build
    assert!(4 * n_set.len() as u64 >= t as u64, "window class too small");
    assert!(2 * m_set.len() >= n_set.len());
    assert!(8 * m_set.len() as u64 >= t as u64);

    Ok(WindowSets { n_param, t, decomp, n_set, m_set })
}
