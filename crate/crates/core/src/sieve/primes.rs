//! Segmented sieve of Eratosthenes.

const SEGMENT: u64 = 1 << 16;

/// Primes in `[lo, hi]`, ascending.  Memory is O(√hi + segment).
pub fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    if hi < 2 || hi < lo {
        return Vec::new();
    }
    let lo = lo.max(2);
    let root = hi.isqrt();
    let base = simple_sieve(root);
    let mut out = Vec::new();
    let mut start = lo;
    loop {
        let end = hi.min(start.saturating_add(SEGMENT - 1));
        let mut composite = vec![false; (end - start + 1) as usize];
        for &q in &base {
            if q.saturating_mul(q) > end {
                break;
            }
            let first = (q * q).max(start.div_ceil(q) * q);
            let mut m = first;
            while m <= end {
                composite[(m - start) as usize] = true;
                m += q;
            }
        }
        for (i, c) in composite.iter().enumerate() {
            if !c {
                out.push(start + i as u64);
            }
        }
        if end >= hi {
            break;
        }
        start = end + 1;
    }
    out
}

/// All primes up to `n` by a plain sieve.
fn simple_sieve(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut is_prime = vec![true; n + 1];
    is_prime[0] = false;
    is_prime[1] = false;
    let mut i = 2;
    while i * i <= n {
        if is_prime[i] {
            let mut j = i * i;
            while j <= n {
                is_prime[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    is_prime
        .iter()
        .enumerate()
        .filter_map(|(i, &p)| p.then_some(i as u64))
        .collect()
}
