use dynirr_core::dynamics::is_preperiodic;
use dynirr_core::exactalg::{BigRat, IntPoly};
use num_bigint::BigInt;

fn main() {
    let f = IntPoly::from_i64(&[1, 5, 2]);
    let g = BigRat::new(BigInt::from(-5), BigInt::from(4));
    let st = is_preperiodic(&f, &g, 100);
    println!("{st:?}");
}
