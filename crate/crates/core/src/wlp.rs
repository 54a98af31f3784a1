//! The determinant criterion for level almost complete intersections
//! `(x^(t+a1), y^(t+a2), z^(t+a3), x^a1 y^a2 z^a3)`.
//!
//! The weak Lefschetz property fails exactly when a square linear system
//! in the coefficients of `H1, H2, C` with
//! `H1 Q1 + H2 Q2 = C (x+y)^t  (mod x^a1 y^a2)` has a nonzero solution,
//! where `Q1, Q2` generate `(x^(t+a1), y^(t+a2)) : (x+y)^a3`.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::arith::{binom, interpolate, BivarPoly, ScaledPoly};
use crate::colon::{colon_generators, ColonParams};
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::par::Exec;

/// Exponents `(a1, a2, a3)` and the shift `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AciCase {
    pub a1: u32,
    pub a2: u32,
    pub a3: u32,
    pub t: u32,
}

impl AciCase {
    /// Checks `a_i > 0`, `max(a1, a2) <= a3 <= 2(a1 + a2)`, `3 | s` and
    /// `3t >= s`.
    pub fn new(a1: u32, a2: u32, a3: u32, t: u32) -> Result<Self> {
        check_triple(a1, a2, a3)?;
        let s = a1 + a2 + a3;
        if 3 * t < s {
            return Err(Error::Hypothesis(format!("need t >= s/3 = {}, got t = {t}", s / 3)));
        }
        Ok(Self { a1, a2, a3, t })
    }

    pub fn s(&self) -> u32 {
        self.a1 + self.a2 + self.a3
    }

    /// `(2(a1 + a2) - a3) / 3`, one more than the degree of `C`.
    pub fn a(&self) -> u32 {
        (2 * (self.a1 + self.a2) - self.a3) / 3
    }

    /// The same case with `a1 <= a2`, and whether a swap was needed.
    pub fn normalized(&self) -> (Self, bool) {
        if self.a1 <= self.a2 {
            (*self, false)
        } else {
            (Self { a1: self.a2, a2: self.a1, ..*self }, true)
        }
    }
}

fn check_triple(a1: u32, a2: u32, a3: u32) -> Result<()> {
    if a1 == 0 || a2 == 0 || a3 == 0 {
        return Err(Error::Hypothesis(format!("exponents must be positive, got ({a1}, {a2}, {a3})")));
    }
    let s = a1 + a2 + a3;
    if s % 3 != 0 {
        return Err(Error::Hypothesis(format!("a1 + a2 + a3 = {s} is not divisible by 3")));
    }
    if a3 < a1.max(a2) {
        return Err(Error::Hypothesis(format!("need a3 >= max(a1, a2), got ({a1}, {a2}, {a3})")));
    }
    if a3 > 2 * (a1 + a2) {
        return Err(Error::Hypothesis(format!("need a3 <= 2(a1 + a2), got a3 = {a3}")));
    }
    Ok(())
}

/// The square system, with rows labelled by monomials `(i, j)` of
/// `x^i y^j` and columns split into the `H1`, `H2` and `C` blocks.
#[derive(Clone, Debug)]
pub struct WlpMatrix {
    pub case: AciCase,
    pub swapped: bool,
    pub rows: Vec<(u32, u32)>,
    pub widths: [usize; 3],
    pub q1: BivarPoly,
    pub q2: BivarPoly,
    pub matrix: IntMatrix,
}

impl WlpMatrix {
    /// Turns a kernel vector into `(H1, H2, C)` with
    /// `H1 Q1 + H2 Q2 = C (x+y)^t` modulo multiples of `x^a1 y^a2`.
    pub fn solution_from_kernel(&self, v: &[BigInt]) -> (BivarPoly, BivarPoly, BivarPoly) {
        let [w1, w2, w3] = self.widths;
        let block = |off: usize, w: usize| {
            BivarPoly::from_terms((0..w).map(|j| (((w - 1 - j) as u32, j as u32), v[off + j].clone())))
        };
        let h1 = block(0, w1);
        let h2 = block(w1, w2);
        // the C block is stored on the same side as H1 Q1 + H2 Q2
        let c = -block(w1 + w2, w3);
        (h1, h2, c)
    }
}

/// Builds the `(a1 + a2) x (a1 + a2)` system. Inputs with `a1 > a2` are
/// swapped first; the determinant's vanishing does not depend on the order.
pub fn build_wlp_matrix(case: AciCase) -> Result<WlpMatrix> {
    let (c, swapped) = case.normalized();
    let a = c.a();
    if a == 0 {
        return Err(Error::Hypothesis("a3 = 2(a1 + a2): the system is empty and the property holds".into()));
    }
    let (a1, a2, t) = (c.a1, c.a2, c.t);
    let top = t + a - 1;
    if t + a < a2 + a1 {
        return Err(Error::Hypothesis(format!("row monomials collide for t = {t}")));
    }
    let mut rows: Vec<(u32, u32)> = (0..a2).map(|r| (top - r, r)).collect();
    rows.extend((0..a1).rev().map(|i| (i, top - i)));

    let gens = colon_generators(ColonParams::new(t + a1, t + a2, c.a3)?);
    let (d1, d2) = gens.degrees().ok_or_else(|| Error::Hypothesis("colon ideal is the unit ideal".into()))?;
    if d1 > top + 1 || d2 > top + 1 {
        return Err(Error::Hypothesis("generator degree exceeds the relation degree".into()));
    }
    let w1 = (top + 1 - d1) as usize;
    let w2 = (top + 1 - d2) as usize;
    let w3 = a as usize;
    let n = rows.len();
    if w1 + w2 + w3 != n {
        return Err(Error::Hypothesis(format!("block widths {w1}+{w2}+{w3} do not match {n} rows")));
    }

    let mut m = IntMatrix::zeros(n, n);
    let mut fill = |col: usize, p: &BivarPoly| {
        for (r, &(i, j)) in rows.iter().enumerate() {
            let v = p.coeff(i, j);
            if !v.is_zero() {
                m.set(r, col, v);
            }
        }
    };
    for j in 0..w1 {
        fill(j, &gens.q1.shift((w1 - 1 - j) as u32, j as u32));
    }
    for j in 0..w2 {
        fill(w1 + j, &gens.q2.shift((w2 - 1 - j) as u32, j as u32));
    }
    // x^(a-1-j) y^j (x+y)^t read off directly from binomials
    for j in 0..w3 {
        for (r, &(i, _)) in rows.iter().enumerate() {
            let xi = i as i64 - (w3 - 1 - j) as i64;
            let v = binom(t as i64, xi);
            if xi >= 0 && !v.is_zero() {
                m.set(r, w1 + w2 + j, v);
            }
        }
    }
    Ok(WlpMatrix { case: c, swapped, rows, widths: [w1, w2, w3], q1: gens.q1, q2: gens.q2, matrix: m })
}

pub fn det_exact(m: &WlpMatrix) -> BigInt {
    m.matrix.det()
}

/// Verdict of the determinant criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DetVerdict {
    pub holds: bool,
    /// `None` when `a = 0` and no system is built.
    pub det: Option<BigInt>,
}

pub fn wlp_by_determinant(case: AciCase) -> Result<DetVerdict> {
    if case.a() == 0 {
        return Ok(DetVerdict { holds: true, det: None });
    }
    let det = det_exact(&build_wlp_matrix(case)?);
    Ok(DetVerdict { holds: !det.is_zero(), det: Some(det) })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(t: i64) -> Self {
        if t.rem_euclid(2) == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn matches(self, t: i64) -> bool {
        Parity::of(t) == self
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

/// Upper bound on the degree in `t` of the determinant.
pub fn degree_bound(a1: u32, a2: u32, a3: u32) -> u32 {
    let (lo, hi) = (a1.min(a2), a1.max(a2));
    (a1 + a2) * ((hi - lo + a3).div_ceil(2) + hi + 1)
}

/// The determinant as a polynomial in `t` on one parity class.
#[derive(Clone, Debug)]
pub struct DetPoly {
    pub parity: Parity,
    pub poly: ScaledPoly,
    pub degree_bound: u32,
    pub samples: Vec<(i64, BigInt)>,
    pub held_out: Vec<i64>,
}

impl DetPoly {
    pub fn degree(&self) -> Option<usize> {
        self.poly.numer.degree()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.numer.is_zero()
    }
}

pub const HELD_OUT: usize = 3;

/// Samples the determinant at `B + 1` consecutive admissible `t` of the
/// given parity, interpolates, and checks three more samples.
pub fn determinant_polynomial(a1: u32, a2: u32, a3: u32, parity: Parity, exec: Exec) -> Result<DetPoly> {
    check_triple(a1, a2, a3)?;
    let s = a1 + a2 + a3;
    if a3 == 2 * (a1 + a2) {
        return Err(Error::Hypothesis("a3 = 2(a1 + a2): no determinant to interpolate".into()));
    }
    let bound = degree_bound(a1, a2, a3);
    let mut t0 = s.div_ceil(3) as i64;
    if !parity.matches(t0) {
        t0 += 1;
    }
    let ts: Vec<i64> = (0..bound as i64 + 1 + HELD_OUT as i64).map(|i| t0 + 2 * i).collect();
    let dets = exec.map(&ts, |&t| build_wlp_matrix(AciCase::new(a1, a2, a3, t as u32)?).map(|m| det_exact(&m)));
    let samples: Vec<(i64, BigInt)> = ts.iter().copied().zip(dets).map(|(t, d)| d.map(|d| (t, d))).collect::<Result<_>>()?;
    let fit = samples.len() - HELD_OUT;
    let poly = interpolate(&samples[..fit])?;
    for (t, d) in &samples[fit..] {
        let v = poly.eval_i64(*t);
        if !v.is_integer() || v.numer() != d {
            return Err(Error::HeldOutMismatch { t: *t });
        }
    }
    let held_out = samples[fit..].iter().map(|(t, _)| *t).collect();
    Ok(DetPoly { parity, poly, degree_bound: bound, samples, held_out })
}

/// Integer zeros of a polynomial in `[lo, hi]` of one parity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootScan {
    /// The polynomial vanishes identically: every `t` is a root.
    pub identically_zero: bool,
    pub roots: Vec<i64>,
}

pub fn integer_root_scan(p: &ScaledPoly, lo: i64, hi: i64, parity: Parity) -> RootScan {
    if p.numer.is_zero() {
        return RootScan { identically_zero: true, roots: (lo..=hi).filter(|&t| parity.matches(t)).collect() };
    }
    let roots = p
        .numer
        .integer_roots_in(&BigInt::from(lo), &BigInt::from(hi))
        .expect("nonzero polynomial")
        .into_iter()
        .map(|r| i64::try_from(r).expect("root within i64 range"))
        .filter(|&t| parity.matches(t))
        .collect();
    RootScan { identically_zero: false, roots }
}

/// Checks a claimed relation: `H1 Q1 + H2 Q2 - C (x+y)^t` must consist of
/// multiples of `x^a1 y^a2`.
pub fn relation_holds(m: &WlpMatrix, h1: &BivarPoly, h2: &BivarPoly, c: &BivarPoly) -> bool {
    let lhs = &(h1 * &m.q1) + &(h2 * &m.q2);
    let rhs = c * &BivarPoly::x_plus_y_pow(m.case.t);
    let diff = &lhs - &rhs;
    let ok = diff.terms().all(|(&(i, j), _)| i >= m.case.a1 && j >= m.case.a2);
    ok
}

/// Sign of the determinant, used in reports.
pub fn det_sign(d: &BigInt) -> i8 {
    if d.is_zero() {
        0
    } else if d.is_negative() {
        -1
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn case_validation() {
        assert!(AciCase::new(3, 7, 14, 9).is_ok());
        assert!(AciCase::new(3, 7, 13, 9).is_err());
        assert!(AciCase::new(1, 1, 5, 9).is_err());
        assert!(AciCase::new(3, 7, 14, 7).is_err());
        assert_eq!(AciCase::new(3, 7, 14, 9).unwrap().a(), 2);
        assert_eq!(degree_bound(3, 7, 14), 170);
    }

    #[test]
    fn example_blocks() {
        let m = build_wlp_matrix(AciCase::new(3, 7, 14, 9).unwrap()).unwrap();
        assert_eq!(m.widths, [4, 4, 2]);
        assert_eq!(m.matrix.rows(), 10);
        assert_eq!(m.matrix.get(1, 0), &binom(14, 8));
        assert_eq!(m.matrix.get(0, 4), &-binom(15, 8));
        assert!(det_exact(&m).is_zero());
    }

    #[test]
    fn short_circuit_and_swap() {
        let v = wlp_by_determinant(AciCase::new(1, 1, 4, 2).unwrap()).unwrap();
        assert!(v.holds && v.det.is_none());
        let a = wlp_by_determinant(AciCase::new(7, 3, 14, 9).unwrap()).unwrap();
        assert!(!a.holds);
        assert!(build_wlp_matrix(AciCase::new(7, 3, 14, 9).unwrap()).unwrap().swapped);
    }

    #[test]
    fn kernel_gives_relation() {
        let m = build_wlp_matrix(AciCase::new(3, 7, 14, 9).unwrap()).unwrap();
        let ker = m.matrix.kernel();
        assert_eq!(ker.len(), 1);
        let (h1, h2, c) = m.solution_from_kernel(&ker[0]);
        assert!(!c.is_zero());
        assert!(relation_holds(&m, &h1, &h2, &c));
    }

    #[test]
    fn root_scan_basics() {
        use crate::arith::UniPoly;
        let p = ScaledPoly { numer: UniPoly::from_i64(&[-9, 1]), denom: BigInt::from(1) };
        assert_eq!(integer_root_scan(&p, 8, 100, Parity::Odd).roots, vec![9]);
        let c = ScaledPoly { numer: UniPoly::from_i64(&[5]), denom: BigInt::from(1) };
        assert!(integer_root_scan(&c, 8, 100, Parity::Odd).roots.is_empty());
    }
}
