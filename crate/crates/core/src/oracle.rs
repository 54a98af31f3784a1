//! Brute-force linear algebra on graded pieces.
//!
//! Nothing here uses the closed forms: colon ideals come from kernels of
//! multiplication maps and the weak Lefschetz property from ranks of
//! `x + y + z` between consecutive graded pieces.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{binom, BivarPoly};
use crate::error::{Error, Result};
use crate::linalg::{rank_mod_p_rows, span_rank, IntMatrix, MODULUS};

/// Dimension of the degree `deg` piece of `F[x,y]/(x^d1, y^d2)`.
pub fn hilbert_function_ci2(d1: u32, d2: u32, deg: u32) -> u32 {
    (0..=deg).filter(|&i| i < d1 && deg - i < d2).count() as u32
}

/// First degree in which `x (x+y)^a` fails to be injective on
/// `F[x,y]/(x^d1, y^d2)` (`d1 <= d2`), by the closed formula.
pub fn injectivity_failure_degree(d1: u32, d2: u32, a: u32) -> i64 {
    let (d2i, a, k) = (d2 as i64, a as i64, (d2 - d1) as i64);
    if a <= k {
        d2i - a
    } else {
        d2i - (a + k + 1) / 2
    }
}

/// First degree `t` with `HF(t) > HF(t + a)`, found by scanning.
pub fn injectivity_failure_degree_by_hf(d1: u32, d2: u32, a: u32) -> Option<u32> {
    (0..d1 + d2).find(|&t| hilbert_function_ci2(d1, d2, t) > hilbert_function_ci2(d1, d2, t + a))
}

/// Coefficient vector of a homogeneous `p` of degree `deg` in the basis
/// `x^deg, x^(deg-1) y, ..., y^deg`.
pub fn coeff_vector(p: &BivarPoly, deg: u32) -> Vec<BigInt> {
    (0..=deg).map(|j| p.coeff(deg - j, j)).collect()
}

pub fn from_coeff_vector(v: &[BigInt]) -> BivarPoly {
    let deg = v.len() as u32 - 1;
    BivarPoly::from_terms(v.iter().enumerate().map(|(j, c)| ((deg - j as u32, j as u32), c.clone())))
}

/// Matrix of `f -> (x+y)^a f` from `P_deg` to the degree `deg + a` piece of
/// `P/(x^d1, y^d2)`. Columns follow [`coeff_vector`]; rows are the
/// surviving monomials `x^i y^(deg+a-i)` with `i < d1`, `deg+a-i < d2`.
fn colon_map(d1: u32, d2: u32, a: u32, deg: u32) -> IntMatrix {
    let top = deg + a;
    let rows: Vec<u32> = (0..=top).filter(|&i| i < d1 && top - i < d2).collect();
    let mut m = IntMatrix::zeros(rows.len(), deg as usize + 1);
    for (r, &i) in rows.iter().enumerate() {
        // x^i y^(top-i) from x^(deg-j) y^j times x^(i-deg+j) y^(...)
        for j in 0..=deg {
            let xi = i as i64 - (deg - j) as i64;
            if (0..=a as i64).contains(&xi) {
                m.set(r, j as usize, binom(a as i64, xi));
            }
        }
    }
    m
}

/// Basis (as coefficient vectors) of the degree `deg` piece of
/// `(x^d1, y^d2) : (x+y)^a`.
pub fn colon_piece(d1: u32, d2: u32, a: u32, deg: u32) -> Vec<Vec<BigInt>> {
    let m = colon_map(d1, d2, a, deg);
    if m.rows() == 0 {
        return (0..=deg as usize).map(|j| unit_vector(deg as usize + 1, j)).collect();
    }
    m.kernel()
}

fn unit_vector(n: usize, j: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); n];
    v[j] = BigInt::from(1);
    v
}

/// Spanning set of the degree `deg` piece of the ideal generated by `gens`.
pub fn ideal_piece(gens: &[BivarPoly], deg: u32) -> Vec<Vec<BigInt>> {
    let mut out = Vec::new();
    for g in gens {
        let Some(dg) = g.degree() else { continue };
        if dg > deg {
            continue;
        }
        let e = deg - dg;
        for j in 0..=e {
            out.push(coeff_vector(&g.shift(e - j, j), deg));
        }
    }
    out
}

/// Minimal homogeneous generators of `(x^d1, y^d2) : (x+y)^a`, found by
/// walking degrees `0..=d1+d2` and keeping kernel elements not already
/// generated in lower degrees.
pub fn brute_colon2(d1: u32, d2: u32, a: u32) -> Vec<BivarPoly> {
    let mut gens: Vec<BivarPoly> = Vec::new();
    for deg in 0..=d1 + d2 {
        let piece = colon_piece(d1, d2, a, deg);
        if piece.is_empty() {
            continue;
        }
        let mut span = ideal_piece(&gens, deg);
        let mut r = span_rank(&span);
        if r == piece.len() {
            continue;
        }
        for v in piece {
            span.push(v.clone());
            let nr = span_rank(&span);
            if nr > r {
                r = nr;
                gens.push(from_coeff_vector(&v));
            } else {
                span.pop();
            }
        }
    }
    gens
}

/// Degreewise equality of the ideals generated by `a` and `b` for all
/// degrees up to `cap`. Returns the first degree where they differ.
pub fn first_graded_difference(a: &[BivarPoly], b: &[BivarPoly], cap: u32) -> Option<u32> {
    (0..=cap).find(|&deg| {
        let pa = ideal_piece(a, deg);
        let pb = ideal_piece(b, deg);
        let ra = span_rank(&pa);
        if ra != span_rank(&pb) {
            return true;
        }
        let both: Vec<_> = pa.into_iter().chain(pb).collect();
        span_rank(&both) != ra
    })
}

/// Smallest degree where the colon ideal has an element outside
/// `(x^d1, y^d2)`, found from kernel dimensions.
pub fn first_kernel_degree(d1: u32, d2: u32, a: u32) -> Option<u32> {
    (0..d1 + d2).find(|&deg| {
        let in_ci = (0..=deg).filter(|&i| i >= d1 || deg - i >= d2).count();
        colon_piece(d1, d2, a, deg).len() > in_ci
    })
}

/// True iff every monomial of `p` is divisible by `x^d1` or `y^d2`.
pub fn ideal_membership2(p: &BivarPoly, d1: u32, d2: u32) -> bool {
    p.terms().all(|(&(i, j), _)| i >= d1 || j >= d2)
}

/// Ranks of `x (x+y)^a` between degrees `deg` and `deg + a` of
/// `F[x,y]/(x^d1, y^d2)`, for every `deg` up to the socle degree.
pub fn multiplication_ranks2(d1: u32, d2: u32, a: u32) -> Vec<DegreeRank> {
    (0..=d1 + d2 - 2)
        .map(|deg| {
            // restrict the map to the quotient basis of the source
            let m = colon_map(d1, d2, a, deg);
            let keep: Vec<usize> = (0..=deg).filter(|&j| deg - j < d1 && j < d2).map(|j| j as usize).collect();
            let sub = IntMatrix::from_rows((0..m.rows()).map(|r| keep.iter().map(|&c| m.get(r, c).clone()).collect()).collect());
            let rank = if sub.rows() == 0 || sub.cols() == 0 { 0 } else { sub.rank() };
            let dim_from = keep.len();
            let dim_to = m.rows();
            DegreeRank { degree: deg, dim_from, dim_to, rank, maximal: rank == dim_from.min(dim_to) }
        })
        .collect()
}

/// `(x^d1, y^d2, z^d3)` plus an optional mixed monomial `x^a1 y^a2 z^a3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal3 {
    pub powers: [u32; 3],
    pub mixed: Option<[u32; 3]>,
}

impl MonomialIdeal3 {
    pub fn complete_intersection(d: [u32; 3]) -> Result<Self> {
        if d.contains(&0) {
            return Err(Error::NotArtinian(format!("pure powers {d:?} must be positive")));
        }
        Ok(Self { powers: d, mixed: None })
    }

    /// Requires `0 < a_i < d_i`, so the generating set is minimal.
    pub fn almost_complete_intersection(d: [u32; 3], a: [u32; 3]) -> Result<Self> {
        let mut ideal = Self::complete_intersection(d)?;
        if (0..3).any(|i| a[i] == 0 || a[i] >= d[i]) {
            return Err(Error::InvalidParams(format!("mixed exponents {a:?} must satisfy 0 < a_i < d_i = {d:?}")));
        }
        ideal.mixed = Some(a);
        Ok(ideal)
    }

    /// The level ideal `(x^(t+a1), y^(t+a2), z^(t+a3), x^a1 y^a2 z^a3)`.
    pub fn level(a: [u32; 3], t: u32) -> Result<Self> {
        Self::almost_complete_intersection([t + a[0], t + a[1], t + a[2]], a)
    }

    fn contains(&self, e: [u32; 3]) -> bool {
        (0..3).any(|i| e[i] >= self.powers[i]) || self.mixed.is_some_and(|m| (0..3).all(|i| e[i] >= m[i]))
    }

    /// Monomials of degree `deg` outside the ideal, in lex order.
    pub fn basis(&self, deg: u32) -> Vec<[u32; 3]> {
        let mut out = Vec::new();
        for i in (0..=deg.min(self.powers[0] - 1)).rev() {
            for j in (0..=(deg - i).min(self.powers[1] - 1)).rev() {
                let e = [i, j, deg - i - j];
                if !self.contains(e) {
                    out.push(e);
                }
            }
        }
        out
    }

    /// Largest degree with a nonzero graded piece.
    pub fn socle_bound(&self) -> u32 {
        self.powers.iter().map(|d| d - 1).sum()
    }
}

/// Multiplication by `x + y + z` between two graded pieces.
#[derive(Clone, Debug)]
pub struct GradedMap {
    pub domain: Vec<[u32; 3]>,
    pub codomain: Vec<[u32; 3]>,
    pub matrix: IntMatrix,
}

impl GradedMap {
    pub fn linear_form(ideal: &MonomialIdeal3, deg: u32) -> Self {
        let domain = ideal.basis(deg);
        let codomain = ideal.basis(deg + 1);
        let index: HashMap<[u32; 3], usize> = codomain.iter().enumerate().map(|(r, &e)| (e, r)).collect();
        let mut matrix = IntMatrix::zeros(codomain.len(), domain.len());
        for (c, e) in domain.iter().enumerate() {
            for v in 0..3 {
                let mut f = *e;
                f[v] += 1;
                if let Some(&r) = index.get(&f) {
                    matrix.set(r, c, BigInt::from(1));
                }
            }
        }
        Self { domain, codomain, matrix }
    }

    /// Exact rank. A full-rank reduction modulo a prime certifies maximal
    /// rank; otherwise the fraction-free integer elimination decides.
    pub fn rank(&self) -> usize {
        let m = &self.matrix;
        if m.rows() == 0 || m.cols() == 0 {
            return 0;
        }
        let mut rows: Vec<Vec<u64>> = (0..m.rows())
            .map(|r| m.row(r).iter().map(|v| if v.is_zero() { 0 } else { 1 }).collect())
            .collect();
        let rp = rank_mod_p_rows(&mut rows, m.cols(), MODULUS);
        if rp == m.rows().min(m.cols()) {
            rp
        } else {
            m.rank()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeRank {
    pub degree: u32,
    pub dim_from: usize,
    pub dim_to: usize,
    pub rank: usize,
    pub maximal: bool,
}

#[derive(Clone, Debug)]
pub struct WlpReport {
    pub holds: bool,
    pub degrees: Vec<DegreeRank>,
}

impl WlpReport {
    pub fn failing_degrees(&self) -> Vec<u32> {
        self.degrees.iter().filter(|d| !d.maximal).map(|d| d.degree).collect()
    }
}

/// Decides the weak Lefschetz property with the linear form `x + y + z`
/// by computing the rank in every degree.
pub fn wlp_direct(ideal: &MonomialIdeal3) -> WlpReport {
    let degrees: Vec<DegreeRank> = (0..=ideal.socle_bound())
        .map(|deg| {
            let map = GradedMap::linear_form(ideal, deg);
            let rank = map.rank();
            let (dim_from, dim_to) = (map.domain.len(), map.codomain.len());
            DegreeRank { degree: deg, dim_from, dim_to, rank, maximal: rank == dim_from.min(dim_to) }
        })
        .collect();
    WlpReport { holds: degrees.iter().all(|d| d.maximal), degrees }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hilbert_values() {
        let hf: Vec<u32> = (0..5).map(|d| hilbert_function_ci2(2, 2, d)).collect();
        assert_eq!(hf, vec![1, 2, 1, 0, 0]);
        assert_eq!(hilbert_function_ci2(3, 5, 4), 3);
        for (d1, d2) in [(2, 2), (3, 5), (4, 9), (6, 6)] {
            let socle = d1 + d2 - 2;
            for d in 0..=socle {
                assert_eq!(hilbert_function_ci2(d1, d2, d), hilbert_function_ci2(d1, d2, socle - d));
            }
        }
    }

    #[test]
    fn injectivity_examples() {
        assert_eq!(injectivity_failure_degree(2, 2, 1), 1);
        assert_eq!(injectivity_failure_degree(3, 5, 1), 4);
        assert_eq!(injectivity_failure_degree(3, 5, 4), 2);
        assert_eq!(injectivity_failure_degree_by_hf(3, 5, 1), Some(4));
        assert_eq!(injectivity_failure_degree_by_hf(3, 5, 4), Some(2));
    }

    #[test]
    fn brute_colon_small() {
        let gens = brute_colon2(2, 2, 1);
        let expected = [BivarPoly::x() - BivarPoly::y(), BivarPoly::monomial(1, 0, 2)];
        assert_eq!(first_graded_difference(&gens, &expected, 4), None);
        assert_eq!(brute_colon2(2, 2, 3), vec![BivarPoly::one()]);
        let gens = brute_colon2(2, 4, 1);
        let expected = [BivarPoly::monomial(1, 2, 0), BivarPoly::monomial(1, 1, 2) - BivarPoly::monomial(1, 0, 3)];
        assert_eq!(first_graded_difference(&gens, &expected, 6), None);
        // a different ideal is told apart
        assert!(first_graded_difference(&gens, &[BivarPoly::x()], 6).is_some());
    }

    #[test]
    fn membership() {
        let x2 = BivarPoly::monomial(1, 2, 0);
        let y2 = BivarPoly::monomial(1, 0, 2);
        assert!(ideal_membership2(&(&x2 - &y2), 2, 2));
        assert!(!ideal_membership2(&BivarPoly::x_plus_y_pow(1), 2, 2));
        let prod = &(BivarPoly::x() + BivarPoly::y()) * &(BivarPoly::x() - BivarPoly::y());
        assert!(ideal_membership2(&prod, 2, 2));
    }

    #[test]
    fn two_variable_ranks_follow_hilbert_function() {
        for (d1, d2) in [(2, 3), (3, 3), (3, 6), (4, 7)] {
            for a in 1..4 {
                for r in multiplication_ranks2(d1, d2, a) {
                    let hf = hilbert_function_ci2(d1, d2, r.degree).min(hilbert_function_ci2(d1, d2, r.degree + a));
                    assert_eq!(r.rank as u32, hf);
                    assert!(r.maximal);
                }
            }
        }
    }

    #[test]
    fn wlp_direct_examples() {
        let maximal = MonomialIdeal3::complete_intersection([1, 1, 1]).unwrap();
        assert!(wlp_direct(&maximal).holds);
        assert!(!wlp_direct(&MonomialIdeal3::level([3, 3, 3], 4).unwrap()).holds);
        assert!(wlp_direct(&MonomialIdeal3::level([1, 1, 1], 1).unwrap()).holds);
        assert!(MonomialIdeal3::almost_complete_intersection([3, 3, 3], [3, 1, 1]).is_err());
        assert!(MonomialIdeal3::complete_intersection([0, 2, 2]).is_err());
    }

    #[test]
    fn basis_counts_match_ci_hilbert_function() {
        let ci = MonomialIdeal3::complete_intersection([2, 3, 4]).unwrap();
        let dims: Vec<usize> = (0..=ci.socle_bound() + 1).map(|d| ci.basis(d).len()).collect();
        // (1+t)(1+t+t^2)(1+t+t^2+t^3)
        assert_eq!(dims, vec![1, 3, 5, 6, 5, 3, 1, 0]);
    }
}
