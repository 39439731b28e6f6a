use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactalg::{iterate, resultant, BigRat, IntPoly, DEFAULT_DEGREE_CAP};

use super::orbit::valuation;
use super::*;

fn p(coeffs: &[i64]) -> IntPoly {
    IntPoly::from_i64(coeffs)
}

fn rat(n: i64, d: i64) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

#[test]
fn orbit_real_escape_for_x2p1() {
    let f = p(&[1, 0, 1]);
    let st = is_preperiodic(&f, &BigRat::zero(), 100);
    assert_eq!(st, OrbitStatus::NotPreperiodic(EscapeCertificate::RealEscape { step: 3 }));
}

#[test]
fn orbit_fixed_point_after_one_step() {
    let f = p(&[2, 0, 0, -2, 1]);
    let st = is_preperiodic(&f, &BigRat::zero(), 100);
    match st {
        OrbitStatus::Preperiodic { tail_length, cycle_length, orbit } => {
            assert_eq!((tail_length, cycle_length), (1, 1));
            assert_eq!(orbit, vec![rat(0, 1), rat(2, 1)]);
        }
        other => panic!("expected preperiodic, got {other:?}"),
    }
}

#[test]
fn orbit_valuation_escape() {
    let f = p(&[2, 0, 0, -2, 1]);
    let st = is_preperiodic(&f, &rat(3, 2), 100);
    assert_eq!(
        st,
        OrbitStatus::NotPreperiodic(EscapeCertificate::ValuationEscape { prime: 2, step: 1 })
    );
    // the fired value is f(3/2) = 5/16
    assert_eq!(f.eval_rat(&rat(3, 2)), rat(5, 16));
    assert_eq!(valuation(&rat(5, 16), 2), -4);
}

#[test]
fn orbit_two_cycle() {
    let f = p(&[1, 0, -3, 2]);
    let st = is_preperiodic(&f, &BigRat::zero(), 100);
    match st {
        OrbitStatus::Preperiodic { tail_length, cycle_length, orbit } => {
            assert_eq!((tail_length, cycle_length), (0, 2));
            assert_eq!(orbit, vec![rat(0, 1), rat(1, 1)]);
        }
        other => panic!("expected 2-cycle, got {other:?}"),
    }
}

#[test]
fn orbit_undecided_when_denominator_divides_leading_coefficient() {
    // f = 2x²−1 (conjugate of the angle-doubling map): with f_d = 2, the
    // prime 2 in a denominator cannot certify escape.
    let f = p(&[-1, 0, 2]);
    // 1/2 → −1/2 → −1/2: still decided, via the cycle certificate
    let st = is_preperiodic(&f, &rat(1, 2), 50);
    assert!(st.is_preperiodic());
    // 1/4 corresponds to an irrational angle: bounded, never repeats, and
    // every denominator is a power of 2 — honestly Undecided
    let st = is_preperiodic(&f, &rat(1, 4), 12);
    assert_eq!(st, OrbitStatus::Undecided { steps_taken: 12 });
}

#[test]
fn orbit_reproducible() {
    let f = p(&[2, 0, 0, -2, 1]);
    let a = is_preperiodic(&f, &BigRat::zero(), 100);
    let b = is_preperiodic(&f, &BigRat::zero(), 100);
    assert_eq!(a, b);
}

#[test]
fn classify_x2p1() {
    let f = p(&[1, 0, 1]);
    let info = classify(&f, 1000).unwrap();
    let w = info.p1.as_ref().expect("quadratics are P1");
    assert_eq!(w.g, IntPoly::constant(BigInt::one()));
    assert_eq!(w.a, BigInt::from(2));
    assert_eq!(w.b, BigInt::zero());
    assert_eq!(info.gamma, Some(BigRat::zero()));
    assert!(!info.gamma_preperiodic.as_ref().unwrap().is_preperiodic());
    assert!(!info.zero_preperiodic.is_preperiodic());
    assert!(!info.in_p2);
    assert!(!info.in_p3);
}

#[test]
fn classify_quartic_p1_and_p3() {
    let f = p(&[2, 0, 0, -2, 1]);
    let info = classify(&f, 1000).unwrap();
    let w = info.p1.as_ref().expect("P1");
    // f' = 4x³−6x² = x²·(4x−6)
    assert_eq!(w.g.mul(&w.g).mul(&IntPoly::new(vec![w.b.clone(), w.a.clone()])), f.derivative());
    assert_eq!(info.gamma, Some(rat(3, 2)));
    assert_eq!(
        info.gamma_preperiodic,
        Some(OrbitStatus::NotPreperiodic(EscapeCertificate::ValuationEscape {
            prime: 2,
            step: 1
        }))
    );
    assert!(info.zero_preperiodic.is_preperiodic());
    assert!(info.in_p3);
    // the trinomial shape with 0 pre-periodic puts it in P2 as well, with
    // the same critical point
    assert!(info.in_p2);
}

#[test]
fn classify_cubic_p2() {
    let f = p(&[1, 0, -3, 2]);
    let info = classify(&f, 1000).unwrap();
    assert!(info.p1.is_none(), "odd-multiplicity part of f' is quadratic");
    assert!(info.in_p2);
    assert!(!info.in_p3);
    assert_eq!(info.gamma, Some(rat(1, 1)));
    // γ = 1 is itself pre-periodic here (1 → 0 → 1): classification and
    // hypothesis checking stay separate outputs
    assert!(info.gamma_preperiodic.as_ref().unwrap().is_preperiodic());
    assert!(info.zero_preperiodic.is_preperiodic());
}

#[test]
fn classify_rejects_low_degree() {
    assert!(matches!(
        classify(&p(&[1, 2]), 10),
        Err(DynamicsError::DegreeTooLow { needed: 2 })
    ));
}

fn random_p1_member(rng: &mut ChaCha8Rng) -> (IntPoly, BigRat) {
    // integrate g²·(aX+b), clearing denominators; the P1 shape survives the
    // integer scaling with γ = −b/a unchanged
    loop {
        let g = IntPoly::from_i64(&[rng.gen_range(-3..=3), rng.gen_range(1..=3)]);
        let a = rng.gen_range(1..=3i64);
        let b = rng.gen_range(-3..=3i64);
        let h = g.mul(&g).mul(&p(&[b, a]));
        let deg = h.degree().unwrap();
        let lcm: i64 = (1..=deg as i64 + 1).fold(1, num_integer::lcm);
        let mut coeffs = vec![BigInt::from(rng.gen_range(-4..=4i64))];
        for (i, c) in h.coeffs().iter().enumerate() {
            coeffs.push(c * BigInt::from(lcm / (i as i64 + 1)));
        }
        let f = IntPoly::new(coeffs);
        if f.degree() == Some(deg + 1) {
            return (f, rat(-b, a));
        }
    }
}

#[test]
fn p1_shape_stable_under_argument_shift() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..20 {
        let (f, gamma) = random_p1_member(&mut rng);
        let info = classify(&f, 200).unwrap();
        assert!(info.in_p1(), "f={f}");
        assert_eq!(info.gamma, Some(gamma.clone()));
        for u in -2..=2i64 {
            let shifted = f.shift_arg(&BigInt::from(u));
            let sinfo = classify(&shifted, 200).unwrap();
            assert!(sinfo.in_p1(), "f={f} u={u}");
            assert_eq!(sinfo.gamma, Some(&gamma - rat(u, 1)), "γ shifts by −u");
        }
    }
}

#[test]
fn shifted_monomial_family_is_p1() {
    // r(X−u)^d + s(X−u)^{d−1} + t for even d
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    for _ in 0..10 {
        let (r, s, t, u) = (
            rng.gen_range(1..=3i64),
            rng.gen_range(-3..=3i64),
            rng.gen_range(-3..=3i64),
            rng.gen_range(-2..=2i64),
        );
        let d = 2 * rng.gen_range(1..=2usize);
        let base = p(&[-u, 1]);
        let mut f = IntPoly::constant(BigInt::from(t));
        let mut pw = IntPoly::constant(BigInt::one());
        for _ in 0..d - 1 {
            pw = pw.mul(&base);
        }
        f = f.add(&pw.mul_scalar(&BigInt::from(s)));
        pw = pw.mul(&base);
        f = f.add(&pw.mul_scalar(&BigInt::from(r)));
        let info = classify(&f, 100).unwrap();
        assert!(info.in_p1(), "f={f}");
        let want = rat(u, 1) - rat((d as i64 - 1) * s, d as i64 * r);
        assert_eq!(info.gamma, Some(want));
    }
}

#[test]
fn eisenstein_examples() {
    let (f, w) = eisenstein_member(1, 2, 4);
    assert_eq!(f, p(&[2, 0, 0, -2, 1]));
    assert_eq!(w, Some(2));

    let (_, w) = eisenstein_member(1, 4, 3);
    assert_eq!(w, None, "4 = 2² fails the squarefree condition");

    let (f, _) = eisenstein_member(1, 2, 4);
    for n in 1..=4 {
        let fn_ = iterate(&f, n, DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(fn_.eval(&BigInt::zero()), BigInt::from(2), "f^{{({n})}}(0) = c");
    }
    // leading coefficient stays a power of a
    let (f, w) = eisenstein_member(3, 10, 2);
    assert_eq!(w, Some(2));
    let f2 = iterate(&f, 2, DEFAULT_DEGREE_CAP).unwrap();
    assert_eq!(f2.lc(), &BigInt::from(27));
}

#[test]
fn square_products_empty_on_fixtures() {
    let f = p(&[1, 0, 1]);
    assert_eq!(find_square_products(&f, 3, 6).unwrap(), vec![]);
    let g = p(&[2, 0, 0, -2, 1]);
    assert_eq!(find_square_products(&g, 2, 4).unwrap(), vec![]);
    // empty range
    assert_eq!(find_square_products(&f, 4, 4).unwrap(), vec![]);
}

#[test]
fn square_products_detects_unit_pairing() {
    // u₂ = 1 for x²+1, so (2, n) is reported exactly when |u_n| is square;
    // none of u₃, u₄ are, so the range [2,4] stays empty
    let f = p(&[1, 0, 1]);
    assert_eq!(find_square_products(&f, 2, 4).unwrap(), vec![]);
    // a synthetic square product: u₂·u₂ would be square, but pairs are m < n
    let hits = find_square_products(&f, 2, 6).unwrap();
    assert!(hits.is_empty());
}

#[test]
fn res_product_formula_on_p2_fixture() {
    let f = p(&[1, 0, -3, 2]);
    for (m, n) in [(2u32, 3u32), (2, 4), (3, 4)] {
        assert!(verify_res_product_formula(&f, m, n).unwrap(), "(m,n)=({m},{n})");
    }
}

#[test]
fn res_product_formula_nondegenerate_instance() {
    // X³+X²−1: 0 → −1 → −1 fixed, P2, and f^{(m)}(γ) ≠ 0 at γ = −2/3
    let f = p(&[-1, 0, 1, 1]);
    let info = classify(&f, 100).unwrap();
    assert!(info.in_p2);
    assert_eq!(info.gamma, Some(rat(-2, 3)));
    assert!(verify_res_product_formula(&f, 2, 3).unwrap());
    // multiplicativity of the resultant in the first argument
    let f2 = iterate(&f, 2, DEFAULT_DEGREE_CAP).unwrap();
    let f3 = iterate(&f, 3, DEFAULT_DEGREE_CAP).unwrap();
    let fp = f.derivative();
    assert_eq!(
        resultant(&f2.mul(&f3), &fp).unwrap(),
        resultant(&f2, &fp).unwrap() * resultant(&f3, &fp).unwrap()
    );
}

#[test]
fn res_product_formula_class_mismatch() {
    let f = p(&[1, 0, 1]); // not P2: 0 escapes
    assert_eq!(
        verify_res_product_formula(&f, 2, 3).unwrap_err(),
        DynamicsError::ClassMismatch { required: "P2" }
    );
}
