//! Rewriting symmetric polynomials in `a1, a2` through `S = a1 + a2` and
//! `P = a1 a2`.

use num_bigint::BigInt;

use crate::arith::{BivarPoly, UniPoly};
use crate::error::{Error, Result};

/// `S = a1 + a2` as a polynomial in `(a1, a2)`.
pub fn s_poly() -> BivarPoly {
    BivarPoly::x() + BivarPoly::y()
}

/// `P = a1 a2` as a polynomial in `(a1, a2)`.
pub fn p_poly() -> BivarPoly {
    BivarPoly::monomial(1, 1, 1)
}

/// The `(S, P)` form of a symmetric polynomial in `(a1, a2)`. The result
/// uses the first variable for `S` and the second for `P`.
pub fn to_sym(p: &BivarPoly) -> Result<BivarPoly> {
    if p.swap_vars() != *p {
        return Err(Error::NotSymmetric);
    }
    let (s, pp) = (s_poly(), p_poly());
    let mut rest = p.clone();
    let mut out = Vec::new();
    // the lex-leading term a1^i a2^j of a symmetric polynomial has i >= j
    // and is the leading term of S^(i-j) P^j
    while let Some(((i, j), c)) = rest.leading_term().map(|(e, c)| (e, c.clone())) {
        debug_assert!(i >= j);
        let term = (&s.pow(i - j) * &pp.pow(j)).scale(&c);
        rest = &rest - &term;
        out.push(((i - j, j), c));
    }
    Ok(BivarPoly::from_terms(out))
}

/// Expands an `(S, P)` form back into `(a1, a2)`.
pub fn from_sym(q: &BivarPoly) -> BivarPoly {
    q.compose(&s_poly(), &p_poly())
}

/// Coefficient of `P^m` in an `(S, P)` form, as a polynomial in `S`.
pub fn p_coefficient(q: &BivarPoly, m: u32) -> UniPoly {
    let deg = q.degree().unwrap_or(0);
    UniPoly::new((0..=deg).map(|i| q.coeff(i, m)).collect())
}

/// Highest power of `P` present.
pub fn p_degree(q: &BivarPoly) -> u32 {
    q.terms().map(|(&(_, j), _)| j).max().unwrap_or(0)
}

/// Substitutes `S = s`, giving a polynomial in `P`.
pub fn at_s(q: &BivarPoly, s: i64) -> UniPoly {
    let s = BigInt::from(s);
    let top = p_degree(q);
    UniPoly::new((0..=top).map(|m| p_coefficient(q, m).eval(&s)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, u32, u32)]) -> BivarPoly {
        BivarPoly::from_terms(terms.iter().map(|&(c, i, j)| ((i, j), BigInt::from(c))))
    }

    #[test]
    fn small_rewrites() {
        // a1^2 + a2^2 = S^2 - 2P
        assert_eq!(to_sym(&p(&[(1, 2, 0), (1, 0, 2)])).unwrap(), p(&[(1, 2, 0), (-2, 0, 1)]));
        assert_eq!(to_sym(&p(&[(1, 1, 1)])).unwrap(), p(&[(1, 0, 1)]));
        assert_eq!(to_sym(&p(&[(1, 1, 0)])), Err(Error::NotSymmetric));
    }

    #[test]
    fn level_two_form() {
        // (a1+a2-3)(a1^2+a2^2-a1-a2) - 2(a1+a2-2) a1 a2
        let s = s_poly();
        let f = &(&(&s - &BivarPoly::constant(3)) * &p(&[(1, 2, 0), (1, 0, 2), (-1, 1, 0), (-1, 0, 1)]))
            - &(&(&s - &BivarPoly::constant(2)) * &p(&[(2, 1, 1)]));
        let sp = to_sym(&f).unwrap();
        // S^3 - 4S^2 + 3S - (4S - 10) P
        assert_eq!(sp, p(&[(1, 3, 0), (-4, 2, 0), (3, 1, 0), (-4, 1, 1), (10, 0, 1)]));
        assert_eq!(from_sym(&sp), f);
        assert_eq!(p_coefficient(&sp, 1), UniPoly::from_i64(&[10, -4]));
        assert_eq!(at_s(&sp, 10), UniPoly::from_i64(&[630, -30]));
    }
}
