//! Classification of integer polynomials into the classes P1, P2, P3.
//!
//! * P1: the derivative factors as `f' = g(X)²·(aX+b)` over Z; the
//!   distinguished critical point is `γ = −b/a`.
//! * P2: `f = f_d X^d + f_{d−1} X^{d−1} + f_0` with `f_d, f_{d−1} ≠ 0` and 0
//!   pre-periodic; `γ = −f_{d−1}(d−1)/(d·f_d)` is the nonzero critical point.
//! * P3: P1 together with 0 pre-periodic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exactalg::{squarefree_decompose, BigRat, IntPoly};

use super::orbit::{is_preperiodic, OrbitStatus};
use super::DynamicsError;

/// Integer witness for the P1 shape `f' = g²·(aX+b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct P1Witness {
    pub g: IntPoly,
    pub a: BigInt,
    pub b: BigInt,
}

#[derive(Clone, Debug)]
pub struct ClassInfo {
    /// Present iff the derivative has the P1 shape.
    pub p1: Option<P1Witness>,
    pub in_p2: bool,
    pub in_p3: bool,
    /// Distinguished critical point; present iff the polynomial is in P1 or
    /// has the P2 trinomial shape.
    pub gamma: Option<BigRat>,
    /// Orbit verdict for γ (present with γ).  An `Undecided` status is
    /// surfaced as-is.
    pub gamma_preperiodic: Option<OrbitStatus>,
    /// Orbit verdict for 0.
    pub zero_preperiodic: OrbitStatus,
}

impl ClassInfo {
    pub fn in_p1(&self) -> bool {
        self.p1.is_some()
    }
}

/// Classifies `f` (degree ≥ 2); `max_steps` bounds each orbit computation.
pub fn classify(f: &IntPoly, max_steps: u32) -> Result<ClassInfo, DynamicsError> {
    let d = f.degree().unwrap_or(0);
    if d < 2 {
        return Err(DynamicsError::DegreeTooLow { needed: 2 });
    }

    let p1 = p1_witness(f)?;
    let p2_shape = p2_shape(f, d);
    let zero_preperiodic = is_preperiodic(f, &BigRat::zero(), max_steps);
    let zero_pre = zero_preperiodic.is_preperiodic();

    let gamma_p1 = p1.as_ref().map(|w| -BigRat::new(w.b.clone(), w.a.clone()));
    let gamma_p2 = p2_shape.then(|| {
        BigRat::new(
            -(f.coeff(d - 1) * BigInt::from(d as u64 - 1)),
            BigInt::from(d as u64) * f.lc(),
        )
    });
    if let (Some(g1), Some(g2)) = (&gamma_p1, &gamma_p2) {
        assert_eq!(g1, g2, "P1 and P2 critical points must agree when both apply");
    }
    let gamma = gamma_p1.or(gamma_p2);
    let gamma_preperiodic = gamma.as_ref().map(|g| is_preperiodic(f, g, max_steps));

    Ok(ClassInfo {
        in_p3: p1.is_some() && zero_pre,
        in_p2: p2_shape && zero_pre,
        p1,
        gamma,
        gamma_preperiodic,
        zero_preperiodic,
    })
}

fn p2_shape(f: &IntPoly, d: usize) -> bool {
    if f.coeff(d - 1).is_zero() {
        return false;
    }
    (1..d - 1).all(|i| f.coeff(i).is_zero())
}

/// Reconstructs integer `(g, a, b)` with `f' = g²(aX+b)` exactly, when the
/// product of odd-multiplicity factors of `f'` is linear.
fn p1_witness(f: &IntPoly) -> Result<Option<P1Witness>, DynamicsError> {
    let fp = f.derivative();
    let (content, factors) = squarefree_decompose(&fp)?;

    let mut odd_part = IntPoly::constant(BigInt::one());
    let mut even_part = IntPoly::constant(BigInt::one());
    for (s, m) in &factors {
        if m % 2 == 1 {
            odd_part = odd_part.mul(s);
        }
        for _ in 0..m / 2 {
            even_part = even_part.mul(s);
        }
    }
    if odd_part.degree() != Some(1) {
        return Ok(None);
    }

    // content = sign·c0²·c1 with c1 squarefree: g picks up c0, the linear
    // factor picks up sign·c1
    let sign = if content.is_negative() { -BigInt::one() } else { BigInt::one() };
    let mag = content.abs();
    let (c0, c1) = split_square(&mag);
    let g = even_part.mul_scalar(&c0);
    let scale = sign * c1;
    let a = odd_part.coeff(1) * &scale;
    let b = odd_part.coeff(0) * &scale;

    let rebuilt = g.mul(&g).mul(&IntPoly::new(vec![b.clone(), a.clone()]));
    assert_eq!(rebuilt, fp, "witness must reproduce the derivative exactly");
    Ok(Some(P1Witness { g, a, b }))
}

/// Writes `n = c0²·c1` (n ≥ 1), pulling square factors found by trial
/// division into c0.  Any unfactored cofactor goes to c1; the witness stays
/// exact either way, c1 is merely not guaranteed squarefree past the bound.
fn split_square(n: &BigInt) -> (BigInt, BigInt) {
    let mut c0 = BigInt::one();
    let mut c1 = BigInt::one();
    let mut n = n.clone();
    let mut d = BigInt::from(2);
    let bound = BigInt::from(1_000_000u64);
    while &d * &d <= n && d <= bound {
        let mut e = 0u32;
        while (&n % &d).is_zero() {
            n /= &d;
            e += 1;
        }
        if e > 0 {
            c0 *= d.pow(e / 2);
            if e % 2 == 1 {
                c1 *= &d;
            }
        }
        d += 1;
    }
    c1 *= n;
    (c0, c1)
}
