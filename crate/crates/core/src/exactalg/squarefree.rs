//! Yun squarefree decomposition over the integers.

use num_bigint::BigInt;
use num_traits::Signed;

use super::poly::{int_poly_gcd, IntPoly};
use super::ExactError;

/// Writes `f = content·∏ s_i^{m_i}` with the `s_i` pairwise coprime,
/// squarefree, primitive and with positive leading coefficient.  Constant
/// factors are absorbed into `content` (which carries the sign of `f`).
pub fn squarefree_decompose(f: &IntPoly) -> Result<(BigInt, Vec<(IntPoly, u32)>), ExactError> {
    if f.is_zero() {
        return Err(ExactError::ZeroPolynomial);
    }
    let mut content = f.content();
    if f.lc().is_negative() {
        content = -content;
    }
    let p = f.div_scalar_exact(&content);
    if p.degree().unwrap() == 0 {
        return Ok((content, vec![]));
    }

    // Yun's algorithm on the primitive part.  All divisions are exact over
    // the integers because each gcd is primitive.
    let dp = p.derivative();
    let g = int_poly_gcd(&p, &dp);
    let mut c = p.div_exact(&g);
    let mut d = dp.div_exact(&g).sub(&c.derivative());
    let mut factors = Vec::new();
    let mut mult = 1u32;
    while c.degree().unwrap() > 0 {
        let a = int_poly_gcd(&c, &d);
        if a.degree().unwrap() > 0 {
            factors.push((a.clone(), mult));
        }
        c = c.div_exact(&a);
        d = d.div_exact(&a).sub(&c.derivative());
        mult += 1;
    }
    Ok((content, factors))
}
