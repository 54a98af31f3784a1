#![allow(dead_code)]

use lefschetz_core::arith::BivarPoly;
use lefschetz_core::colon::{gen_f1, gen_f2, gen_g1, gen_g2, gen_h, reduce_mod_x_pow};

pub fn c(v: i64) -> BivarPoly {
    BivarPoly::constant(v)
}

pub fn lin(cx: i64, cy: i64) -> BivarPoly {
    BivarPoly::from_terms([((1, 0), cx.into()), ((0, 1), cy.into())])
}

/// The four identities expressing the generators at `a + 1` through those
/// at `a`, for `n = 0` and `x^d, y^d`. Returns the names of the failing ones.
pub fn step_identities(d: u32, a: u32) -> Vec<&'static str> {
    let di = d as i64;
    let s = BivarPoly::x_plus_y_pow(1);
    let y = BivarPoly::y();
    let mut bad = Vec::new();
    if a % 2 == 1 {
        let b = (a as i64 - 1) / 2;
        let (f1, f2) = (gen_f1(d, a, 0).unwrap(), gen_f2(d, a, 0).unwrap());
        let (g1, g2) = (gen_g1(d, a + 1, 0).unwrap(), gen_g2(d, a + 1, 0).unwrap());
        let lhs = &(&c(di - 1) * &s) * &g1;
        let rhs = &(&c(di - b - 1) * &(&y * &f1)) + &(&c(di + b) * &f2);
        if lhs != rhs {
            bad.push("g1");
        }
        let lhs = &(&c(1 - di) * &s) * &g2;
        let rhs = &(&lin(di - 1, (di - 1) + (b + 1) * (di - b - 1)) * &f1) + &(&c((b + 1) * (di + b)) * &f2);
        if lhs != rhs {
            bad.push("g2");
        }
    } else {
        let (g1, g2) = (gen_g1(d, a, 0).unwrap(), gen_g2(d, a, 0).unwrap());
        let (f1, f2) = (gen_f1(d, a + 1, 0).unwrap(), gen_f2(d, a + 1, 0).unwrap());
        let b = a as i64 / 2;
        let lhs = &(&c(b) * &s) * &f1;
        let rhs = &(&c(b * (b + 2 - di)) * &g1) + &(&c(b - di) * &g2);
        if lhs != rhs {
            bad.push("f1");
        }
        let b = (a as i64 - 2) / 2;
        let lhs = &(&c(-(b + 2)) * &s) * &f2;
        let rhs = &(&lin(di - 1, (b + 2) * (di - b - 2)) * &g1) + &(&c(di - b - 1) * &(&y * &g2));
        if lhs != rhs {
            bad.push("f2");
        }
    }
    bad
}

/// `(x+y) H(d1, a+1, k) == H(d1, a, k)` modulo `x^d1`.
pub fn h_step(d1: u32, a: u32, k: u32) -> bool {
    let lhs = &BivarPoly::x_plus_y_pow(1) * &gen_h(d1, a + 1, k).unwrap();
    reduce_mod_x_pow(&lhs, d1) == reduce_mod_x_pow(&gen_h(d1, a, k).unwrap(), d1)
}
