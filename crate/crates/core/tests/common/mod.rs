#![allow(dead_code)]

use std::sync::Arc;

use kummer_core::{CurveShape, Divisor, FiniteField, KummerCurve};
use rand::Rng;

pub fn field(p: u32, e: u32, modulus: &[u32]) -> Arc<FiniteField> {
    Arc::new(FiniteField::new(p, e, modulus).unwrap())
}

/// `y^3 = x^2 + x` over GF(4): genus 1, nine rational places.
pub fn hermitian_gf4() -> KummerCurve {
    KummerCurve::from_polynomial(field(2, 2, &[1, 1, 1]), 3, 1, &[0, 1, 1]).unwrap()
}

/// `y^4 = x^3 - x` over GF(9): r = 3, genus 3.
pub fn quartic_gf9() -> KummerCurve {
    KummerCurve::from_polynomial(field(3, 2, &[1, 0, 1]), 4, 1, &[0, 2, 0, 1]).unwrap()
}

/// `y^5 = x^9 + x` over GF(81).
pub fn example1() -> KummerCurve {
    KummerCurve::from_polynomial(
        field(3, 4, &[2, 0, 0, 2, 1]),
        5,
        1,
        &[0, 1, 0, 0, 0, 0, 0, 0, 0, 1],
    )
    .unwrap()
}

/// `y^6 = x^5 + x` over GF(25).
pub fn example2() -> KummerCurve {
    KummerCurve::from_polynomial(field(5, 2, &[2, 4, 1]), 6, 1, &[0, 1, 0, 0, 0, 1]).unwrap()
}

/// `y^9 = x^4 + x^2 + x` over GF(64).
pub fn example4() -> KummerCurve {
    KummerCurve::from_polynomial(field(2, 6, &[1, 1, 0, 0, 0, 0, 1]), 9, 1, &[0, 1, 1, 0, 1])
        .unwrap()
}

pub const SHAPES: [(i64, usize); 4] = [(3, 2), (5, 9), (6, 5), (9, 4)];

pub fn shape(m: i64, r: usize) -> CurveShape {
    CurveShape::new(m, r).unwrap()
}

pub fn divisor(s: &[i64], t: i64) -> Divisor {
    Divisor::new(s.to_vec(), t)
}

/// A divisor with coefficients in `lo..=hi`.
pub fn random_divisor<R: Rng>(rng: &mut R, r: usize, lo: i64, hi: i64) -> Divisor {
    let s = (0..r).map(|_| rng.gen_range(lo..=hi)).collect();
    Divisor::new(s, rng.gen_range(lo..=hi))
}
