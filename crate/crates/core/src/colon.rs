//! Closed-form generators of the colon ideal `(x^d1, y^d2) : (x+y)^a`.

use num_bigint::BigInt;
use num_traits::One;

use crate::arith::{binom, sign_pow, BivarPoly};
use crate::error::{Error, Result};

/// Parameters `(d1, d2, a)` with `d1 <= d2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ColonParams {
    pub d1: u32,
    pub d2: u32,
    pub a: u32,
}

impl ColonParams {
    pub fn new(d1: u32, d2: u32, a: u32) -> Result<Self> {
        if d1 < 2 || d2 < 2 {
            return Err(Error::InvalidParams(format!("need d1, d2 >= 2, got ({d1}, {d2})")));
        }
        if d1 > d2 {
            return Err(Error::InvalidParams(format!("need d1 <= d2, got ({d1}, {d2}); use ColonParams::sorted")));
        }
        if a < 1 {
            return Err(Error::InvalidParams("need a >= 1".into()));
        }
        Ok(Self { d1, d2, a })
    }

    /// Orders `d1, d2` increasingly. The second component reports whether a
    /// swap happened; generators of the swapped ideal are recovered by
    /// exchanging `x` and `y`.
    pub fn sorted(d1: u32, d2: u32, a: u32) -> Result<(Self, bool)> {
        if d1 <= d2 {
            Ok((Self::new(d1, d2, a)?, false))
        } else {
            Ok((Self::new(d2, d1, a)?, true))
        }
    }

    pub fn k(&self) -> u32 {
        self.d2 - self.d1
    }

    pub fn regime(&self) -> Regime {
        let k = self.k();
        if self.a >= self.d1 + self.d2 - 1 {
            Regime::UnitIdeal
        } else if self.a <= k {
            Regime::CaseSmallA
        } else if (self.a - k) % 2 == 1 {
            Regime::CaseOddAminusK
        } else {
            Regime::CaseEvenAminusK
        }
    }

    /// Degrees of the two generators, or `None` for the unit ideal.
    pub fn expected_degrees(&self) -> Option<(u32, u32)> {
        let k = self.k();
        match self.regime() {
            Regime::UnitIdeal => None,
            Regime::CaseSmallA => Some((self.d1, self.d2 - self.a)),
            _ => {
                let s = self.a + k;
                Some((self.d2 - s.div_ceil(2), self.d2 - s / 2))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Regime {
    /// `a <= k`: generators `x^d1` and `H`.
    CaseSmallA,
    /// `a - k` odd: the `F` pair.
    CaseOddAminusK,
    /// `a - k` even: the `G` pair.
    CaseEvenAminusK,
    /// `a >= d1 + d2 - 1`.
    UnitIdeal,
}

impl Regime {
    pub fn as_str(&self) -> &'static str {
        match self {
            Regime::CaseSmallA => "small_a",
            Regime::CaseOddAminusK => "odd_a_minus_k",
            Regime::CaseEvenAminusK => "even_a_minus_k",
            Regime::UnitIdeal => "unit_ideal",
        }
    }
}

/// The two generators. For the unit ideal `q1 = 1` and `q2 = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColonGens {
    pub q1: BivarPoly,
    pub q2: BivarPoly,
    pub regime: Regime,
}

impl ColonGens {
    pub fn degrees(&self) -> Option<(u32, u32)> {
        match self.regime {
            Regime::UnitIdeal => None,
            _ => Some((self.q1.degree()?, self.q2.degree()?)),
        }
    }

    pub fn as_vec(&self) -> Vec<BivarPoly> {
        if self.regime == Regime::UnitIdeal {
            vec![self.q1.clone()]
        } else {
            vec![self.q1.clone(), self.q2.clone()]
        }
    }
}

/// `y^shift * sum_{i=0}^{top} c(i) x^{xdeg - i} y^i`, dropping terms whose
/// `x` exponent would be negative.
fn family_sum(top: i64, xdeg: i64, shift: u32, c: impl Fn(i64) -> BigInt) -> BivarPoly {
    BivarPoly::from_terms((0..=top).filter(|&i| xdeg - i >= 0).map(|i| (((xdeg - i) as u32, i as u32 + shift), c(i))))
}

/// `F_{1,d,a,n}` for odd `a`.
pub fn gen_f1(d: u32, a: u32, n: u32) -> Result<BivarPoly> {
    if a % 2 == 0 {
        return Err(Error::OddRequired(a as i64));
    }
    let (d, h, n) = (d as i64, (a as i64 - 1) / 2, n as i64);
    Ok(family_sum(d - h - 1, d - h - 1 - n, 0, |i| {
        sign_pow(i) * binom(d - 1 - i, h + n) * binom(h + i, h)
    }))
}

/// `F_{2,d,a,n}` for odd `a`.
///
/// For `a = 1` and `n >= 1` the last summand has a negative `x` exponent
/// but a nonzero coefficient `C(-1, n-1)`; it is dropped with the rest of
/// the out-of-range terms.
pub fn gen_f2(d: u32, a: u32, n: u32) -> Result<BivarPoly> {
    if a % 2 == 0 {
        return Err(Error::OddRequired(a as i64));
    }
    let (d, a, n) = (d as i64, a as i64, n as i64);
    let (lo, hi) = ((a - 3) / 2, (a + 1) / 2);
    Ok(family_sum(d - (a + 3) / 2, d - (a + 3) / 2 - n, 2, |i| {
        sign_pow(i) * binom(d - 3 - i, lo + n) * binom(hi + i, hi)
    }))
}

/// `G_{1,d,a,n}` for even `a >= 2`.
pub fn gen_g1(d: u32, a: u32, n: u32) -> Result<BivarPoly> {
    if a % 2 == 1 || a == 0 {
        return Err(Error::EvenRequired(a as i64));
    }
    let (d, h, n) = (d as i64, a as i64 / 2, n as i64);
    Ok(family_sum(d - h - 1, d - h - 1 - n, 1, |i| {
        sign_pow(i) * binom(d - 2 - i, h - 1 + n) * binom(h + i, h)
    }))
}

/// `G_{2,d,a,n}` for even `a >= 2`.
pub fn gen_g2(d: u32, a: u32, n: u32) -> Result<BivarPoly> {
    if a % 2 == 1 || a == 0 {
        return Err(Error::EvenRequired(a as i64));
    }
    let (d, h, n) = (d as i64, a as i64 / 2, n as i64);
    Ok(family_sum(d - h, d - h - n, 0, |i| {
        sign_pow(i) * binom(d - 1 - i, h - 1 + n) * binom(h - 1 + i, h - 1) * (i - 1)
    }))
}

/// `H_{d1,a,k}` for `1 <= a <= k`.
pub fn gen_h(d1: u32, a: u32, k: u32) -> Result<BivarPoly> {
    if a < 1 || a > k {
        return Err(Error::SmallARequired { a: a as i64, k: k as i64 });
    }
    let (d1, ai) = (d1 as i64, a as i64);
    Ok(family_sum(d1 - 1, d1 - 1, k - a + 1, |i| sign_pow(i) * binom(d1 + ai - 2 - i, ai - 1)))
}

/// The alternative single-sum expression of `H`. Modulo multiples of
/// `x^d1` it equals `(-1)^(k-a+1)` times [`gen_h`].
pub fn gen_h_alt(d1: u32, a: u32, k: u32) -> Result<BivarPoly> {
    if a < 1 || a > k {
        return Err(Error::SmallARequired { a: a as i64, k: k as i64 });
    }
    let (d2, ai) = ((d1 + k) as i64, a as i64);
    Ok(family_sum(d2 - ai, d2 - ai, 0, |j| sign_pow(j) * binom(d2 - j - 1, ai - 1)))
}

/// Generators of `(x^d1, y^d2) : (x+y)^a`, returned in the order of the
/// closed forms: `(x^d1, H)`, `(F1, F2)` or `(G1, G2)`. This order
/// always has `deg q1 <= deg q2`.
pub fn colon_generators(p: ColonParams) -> ColonGens {
    let k = p.k();
    let regime = p.regime();
    let (q1, q2) = match regime {
        Regime::UnitIdeal => (BivarPoly::one(), BivarPoly::zero()),
        Regime::CaseSmallA => (BivarPoly::monomial(1, p.d1, 0), gen_h(p.d1, p.a, k).expect("a <= k")),
        Regime::CaseOddAminusK => {
            (gen_f1(p.d2, p.a - k, k).expect("odd"), gen_f2(p.d2, p.a - k, k).expect("odd"))
        }
        Regime::CaseEvenAminusK => {
            (gen_g1(p.d2, p.a - k, k).expect("even"), gen_g2(p.d2, p.a - k, k).expect("even"))
        }
    };
    ColonGens { q1, q2, regime }
}

/// Generators for unsorted exponents: swaps `x` and `y` back when
/// `d1 > d2`.
pub fn colon_generators_any(d1: u32, d2: u32, a: u32) -> Result<ColonGens> {
    let (p, swapped) = ColonParams::sorted(d1, d2, a)?;
    let g = colon_generators(p);
    if swapped {
        Ok(ColonGens { q1: g.q1.swap_vars(), q2: g.q2.swap_vars(), regime: g.regime })
    } else {
        Ok(g)
    }
}

pub fn nth_x_derivative(p: &BivarPoly, n: u32) -> BivarPoly {
    p.derivative_x(n)
}

/// `prod_{j=1}^{n} (base + j)`, the scalar relating `d^n/dx^n` of a family
/// member at `n = 0` to the member at `n`.
pub fn derivative_scalar(base: i64, n: u32) -> BigInt {
    (1..=n as i64).fold(BigInt::one(), |acc, j| acc * (base + j))
}

/// True iff every monomial of `p` is divisible by `x^d1` or `y^d2`.
pub fn in_monomial_ci(p: &BivarPoly, d1: u32, d2: u32) -> bool {
    p.terms().all(|(&(i, j), _)| i >= d1 || j >= d2)
}

/// `p` with every multiple of `x^e` removed.
pub fn reduce_mod_x_pow(p: &BivarPoly, e: u32) -> BivarPoly {
    p.filter_terms(|i, _| i < e)
}

/// Identity check: `q` lies in the colon ideal.
pub fn in_colon(q: &BivarPoly, p: ColonParams) -> bool {
    in_monomial_ci(&(&BivarPoly::x_plus_y_pow(p.a) * q), p.d1, p.d2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn poly(terms: &[((u32, u32), i64)]) -> BivarPoly {
        BivarPoly::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn small_families() {
        assert_eq!(gen_f1(2, 1, 0).unwrap(), poly(&[((1, 0), 1), ((0, 1), -1)]));
        assert_eq!(gen_f2(2, 1, 0).unwrap(), poly(&[((0, 2), 1)]));
        assert_eq!(gen_f1(4, 3, 0).unwrap().coeff(2, 0), BigInt::from(3));
        assert_eq!(gen_h(2, 1, 2).unwrap(), poly(&[((1, 2), 1), ((0, 3), -1)]));
        assert!(gen_f1(4, 2, 0).is_err());
        assert!(gen_g1(4, 3, 0).is_err());
        assert!(gen_h(3, 3, 2).is_err());
    }

    #[test]
    fn f2_base_case_is_scaled_power_of_y() {
        for d in 2..10u32 {
            let f2 = gen_f2(d, 1, 0).unwrap();
            // only the i = d-2 summand survives, with sign (-1)^(d-2)
            let c = sign_pow(d as i64) * (d as i64 - 1);
            assert_eq!(f2, BivarPoly::monomial(c, 0, d));
        }
    }

    #[test]
    fn g2_has_no_linear_y_term() {
        for d in 2..9 {
            for a in (2..=2 * d - 2).step_by(2) {
                for n in 0..3 {
                    let g = gen_g2(d, a, n).unwrap();
                    if let Some(deg) = g.degree() {
                        assert!(g.coeff(deg.saturating_sub(1), 1).is_zero() || deg == 0);
                    }
                }
            }
        }
    }

    #[test]
    fn h_times_linear_form() {
        let (d1, k) = (3, 2);
        let lhs = &BivarPoly::x_plus_y_pow(1) * &gen_h(d1, 1, k).unwrap();
        let rhs = poly(&[((3, 2), 1), ((0, 5), 1)]);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn dispatch() {
        let g = colon_generators(ColonParams::new(2, 2, 1).unwrap());
        assert_eq!(g.regime, Regime::CaseOddAminusK);
        assert_eq!(g.q1.to_string(), "x - y");
        assert_eq!(g.q2.to_string(), "y^2");
        let g = colon_generators(ColonParams::new(2, 4, 1).unwrap());
        assert_eq!(g.regime, Regime::CaseSmallA);
        assert_eq!(g.q1.to_string(), "x^2");
        assert_eq!(g.q2.to_string(), "x*y^2 - y^3");
        let g = colon_generators(ColonParams::new(2, 2, 3).unwrap());
        assert_eq!(g.regime, Regime::UnitIdeal);
        assert!(ColonParams::new(1, 2, 1).is_err());
        assert!(ColonParams::new(3, 2, 1).is_err());
    }

    #[test]
    fn swapped_inputs() {
        let g = colon_generators_any(4, 2, 1).unwrap();
        assert_eq!(g.q1.to_string(), "y^2");
        assert!(in_monomial_ci(&(&BivarPoly::x_plus_y_pow(1) * &g.q2), 4, 2));
    }

    #[test]
    fn membership_and_degrees_small_grid() {
        for d2 in 2..=7 {
            for d1 in 2..=d2 {
                for a in 1..=d1 + d2 - 2 {
                    let p = ColonParams::new(d1, d2, a).unwrap();
                    let g = colon_generators(p);
                    assert!(in_colon(&g.q1, p) && in_colon(&g.q2, p), "{p:?}");
                    assert_eq!(g.degrees(), p.expected_degrees(), "{p:?}");
                    assert!(g.q1.is_homogeneous() && g.q2.is_homogeneous());
                }
            }
        }
    }
}
