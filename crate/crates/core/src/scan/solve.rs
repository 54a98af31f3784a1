//! The polynomial `F(a1, a2)` for a fixed level `a` and the enumeration of
//! its positive integer zeros.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::symmetric::{at_s, p_coefficient, p_degree, s_poly, to_sym};
use super::tau::{tau, A1Regime};
use crate::arith::{binom, BivarPoly, UniPoly};
use crate::error::{Error, Result};
use crate::par::Exec;

pub const DEFAULT_A_MAX: u32 = 6;

/// Normalized weights of the binomials `C(a3, (a3 - a)/2 + j)` for
/// `j = 0..=top`, after `a3 = 2S - 3a` is substituted. Each weight is a
/// product of linear factors `S - m`, listed by `m`.
fn weight_roots(a: u32, top: u32) -> (Vec<Vec<i64>>, Vec<i64>) {
    let a = a as i64;
    let mut lists: Vec<Vec<i64>> = (0..=top as i64)
        .map(|j| {
            let mut v: Vec<i64> = (a..2 * a - j).chain(a..a + j).collect();
            v.sort_unstable();
            v
        })
        .collect();
    let mut common = lists[0].clone();
    for l in &lists[1..] {
        common = multiset_meet(&common, l);
    }
    for l in &mut lists {
        for m in &common {
            let pos = l.iter().position(|x| x == m).expect("common factor present");
            l.remove(pos);
        }
    }
    (lists, common)
}

fn multiset_meet(a: &[i64], b: &[i64]) -> Vec<i64> {
    let (mut i, mut j, mut out) = (0, 0, Vec::new());
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// What was divided out of the raw coefficient to reach `F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Divided {
    /// Integer content (with sign).
    pub scalar: BigInt,
    /// Linear factors `S - m` common to every weight.
    pub s_roots: Vec<i64>,
    /// Whether `a1 - a2` was divided out.
    pub a1_minus_a2: bool,
}

/// `F` for one level and one `a1` regime.
#[derive(Clone, Debug)]
pub struct FPoly {
    pub a: u32,
    pub regime: A1Regime,
    /// `F` in `(a1, a2)`. In a fixed regime only `a2` occurs.
    pub poly: BivarPoly,
    /// `(S, P)` form, symbolic regime only.
    pub sym: Option<BivarPoly>,
    pub divided: Divided,
}

impl FPoly {
    /// `F` as a polynomial in `a2` (fixed regimes).
    pub fn in_a2(&self) -> UniPoly {
        let deg = self.poly.degree().unwrap_or(0);
        UniPoly::new((0..=deg).map(|j| self.poly.coeff(0, j)).collect())
    }
}

/// Builds `F` from the coefficient of `tau^a` times `(x+y)^(a3)` that must
/// vanish for a failure of WLP at `t = s/3 + 1`.
pub fn build_f(a: u32, regime: A1Regime) -> Result<FPoly> {
    if a == 0 {
        return Err(Error::InvalidParams("level a must be positive".into()));
    }
    if let A1Regime::Fixed(c) = regime {
        if c == 0 || c >= a {
            return Err(Error::InvalidParams(format!("fixed a1 = {c} must lie in 1..{a}")));
        }
    }
    let t = tau(a, regime)?;
    let top = t.degree().unwrap_or(0);
    let s = match regime {
        A1Regime::Symbolic => s_poly(),
        A1Regime::Fixed(c) => &BivarPoly::constant(c) + &BivarPoly::y(),
    };
    let (weights, common) = weight_roots(a, top);
    let mut g = BivarPoly::zero();
    for (j, roots) in weights.iter().enumerate() {
        let w = roots.iter().fold(BivarPoly::one(), |acc, &m| &acc * &(&s - &BivarPoly::constant(m)));
        g = &g + &(&t.coeff(top - j as u32, j as u32) * &w);
    }
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }

    let mut a1_minus_a2 = false;
    if regime == A1Regime::Symbolic && g.swap_vars() == -&g {
        let diff = &BivarPoly::x() - &BivarPoly::y();
        g = g.div_poly(&diff).ok_or_else(|| Error::Hypothesis("antisymmetric F not divisible by a1 - a2".into()))?;
        a1_minus_a2 = true;
    }
    let mut scalar = g.content();
    let sym = match regime {
        A1Regime::Symbolic => {
            let sp = to_sym(&g)?;
            let free = p_coefficient(&sp, 0);
            let lead = if free.is_zero() { sp.leading_term().map(|(_, c)| c.clone()) } else { free.leading().cloned() };
            if lead.is_some_and(|c| c.is_negative()) {
                scalar = -scalar;
            }
            Some(sp.div_exact(&scalar))
        }
        A1Regime::Fixed(_) => {
            if g.leading_term().is_some_and(|(_, c)| c.is_negative()) {
                scalar = -scalar;
            }
            None
        }
    };
    let poly = g.div_exact(&scalar);
    Ok(FPoly { a, regime, poly, sym, divided: Divided { scalar, s_roots: common, a1_minus_a2 } })
}

/// `c(a)`: `3a - 2` for odd `a`, `3a - 1` for even `a`.
pub fn c_of(a: u32) -> i64 {
    let a = a as i64;
    if a % 2 == 1 {
        3 * a - 2
    } else {
        3 * a - 1
    }
}

/// The conjectured `P`-free part of `F` in `(S, P)` form.
pub fn pattern_constant(a: u32) -> UniPoly {
    let a = a as i64;
    let roots: Vec<i64> = if a % 2 == 1 {
        (1..a).chain((3 * a + 1) / 2..2 * a).collect()
    } else {
        (0..a).chain(3 * a / 2..2 * a).collect()
    };
    roots.iter().fold(UniPoly::from_i64(&[1]), |acc, &m| mul_uni(&acc, &UniPoly::from_i64(&[-m, 1])))
}

fn mul_uni(p: &UniPoly, q: &UniPoly) -> UniPoly {
    if p.is_zero() || q.is_zero() {
        return UniPoly::zero();
    }
    let mut out = vec![BigInt::zero(); p.coeffs().len() + q.coeffs().len() - 1];
    for (i, a) in p.coeffs().iter().enumerate() {
        for (j, b) in q.coeffs().iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    UniPoly::new(out)
}

/// Outcome of checking the constant-term and divisibility pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternCheck {
    pub c: i64,
    /// The `P`-free part equals the conjectured product.
    pub constant_matches: bool,
    /// Every other `P` coefficient vanishes at `S = c/2`.
    pub multiples_ok: bool,
}

impl PatternCheck {
    pub fn holds(&self) -> bool {
        self.constant_matches && self.multiples_ok
    }
}

pub fn check_pattern(f: &FPoly) -> Option<PatternCheck> {
    let sym = f.sym.as_ref()?;
    let c = c_of(f.a);
    let half = BigRational::new(BigInt::from(c), BigInt::from(2));
    let multiples_ok = (1..=p_degree(sym)).all(|m| p_coefficient(sym, m).eval_rat(&half).is_zero());
    Some(PatternCheck { c, constant_matches: p_coefficient(sym, 0) == pattern_constant(f.a), multiples_ok })
}

/// Positive and negative divisors of a nonzero integer, in increasing order.
fn divisors(n: &BigInt) -> Option<Vec<i64>> {
    let n = n.abs().to_u64()?;
    if n == 0 {
        return None;
    }
    let mut pos = BTreeSet::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            pos.insert(d as i64);
            pos.insert((n / d) as i64);
        }
        d += 1;
    }
    Some(pos.iter().rev().map(|d| -d).chain(pos.iter().copied()).collect())
}

/// Values of `S` allowed by `2S - c | 2^deg P(c/2)`. `None` when the
/// scaled constant is zero or too large to factor.
pub fn divisor_candidates(a: u32) -> Option<Vec<i64>> {
    let p = pattern_constant(a);
    let c = c_of(a);
    let deg = p.degree().unwrap_or(0);
    // 2^deg P(c/2) = sum p_i c^i 2^(deg - i)
    let q: BigInt = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, k)| k * BigInt::from(c).pow(i as u32) * (BigInt::one() << (deg - i)))
        .sum();
    let ds = divisors(&q)?;
    let mut out: Vec<i64> = ds.iter().map(|d| (d + c) / 2).collect();
    out.sort_unstable();
    out.dedup();
    Some(out)
}

/// A solution triple `a1 <= a2 <= a3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple {
    pub a1: i64,
    pub a2: i64,
    pub a3: i64,
}

impl Triple {
    pub fn s(&self) -> i64 {
        self.a1 + self.a2 + self.a3
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Class {
    /// `s` odd and two entries equal: the known failure family.
    KnownEqual,
    /// `(2, 9, 13)` or `(3, 7, 14)`.
    KnownRogue,
    New,
}

impl Class {
    pub fn of(t: &Triple) -> Self {
        let distinct = t.a1 != t.a2 && t.a2 != t.a3;
        if t.s() % 2 == 1 && !distinct {
            Class::KnownEqual
        } else if [(2, 9, 13), (3, 7, 14)].contains(&(t.a1, t.a2, t.a3)) {
            Class::KnownRogue
        } else {
            Class::New
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Class::KnownEqual => "known_equal",
            Class::KnownRogue => "known_rogue",
            Class::New => "new",
        }
    }
}

/// The vanishing coefficient computed from scratch at integer values: the
/// coefficient of `x^(t + min(a1, a) - a - 1) y^(t-1)` in
/// `tau^a(1) (x+y)^(a3)` with `a3 = 2(a1 + a2) - 3a` and `t = a1 + a2 - a + 1`.
pub fn direct_coefficient(a: u32, a1: i64, a2: i64) -> Result<BigInt> {
    let a3 = 2 * (a1 + a2) - 3 * a as i64;
    if a1 < 1 || a2 < 1 || a3 < 0 {
        return Err(Error::InvalidParams(format!("({a1}, {a2}, {a3}) is not a valid triple")));
    }
    let tp = tau(a, A1Regime::Fixed(a1 as u32))?.evaluate(a1, a2);
    let t = a1 + a2 - a as i64 + 1;
    let xe = t + a1.min(a as i64) - a as i64 - 1;
    let ye = t - 1;
    let mut out = BigInt::zero();
    for (&(i, j), c) in tp.terms() {
        let m = ye - j as i64;
        if (0..=a3).contains(&m) && xe - i as i64 == a3 - m {
            out += c * binom(a3, m);
        }
    }
    Ok(out)
}

/// How the candidate values of `S` were obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Divisors,
    DirectScan,
    Univariate,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Divisors => "divisors",
            Method::DirectScan => "direct_scan",
            Method::Univariate => "univariate",
        }
    }
}

/// One candidate `S` in the symbolic regime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub s: i64,
    pub p_roots: Vec<BigInt>,
    /// Integer pairs `a1 <= a2` with `a1 + a2 = S`, `a1 a2 = P`, before filtering.
    pub pairs: Vec<(i64, i64)>,
}

#[derive(Clone, Debug)]
pub struct RegimeReport {
    pub regime: A1Regime,
    pub f: FPoly,
    pub method: Method,
    pub pattern: Option<PatternCheck>,
    /// Candidates `S >= 2` (symbolic regime).
    pub candidates: Vec<Candidate>,
    pub solutions: Vec<Triple>,
}

impl RegimeReport {
    /// Candidate `S` with `a3 = 2S - 3a >= 1`.
    pub fn admissible_s(&self, a: u32) -> Vec<i64> {
        self.candidates.iter().map(|c| c.s).filter(|&s| 2 * s - 3 * a as i64 >= 1).collect()
    }
}

#[derive(Clone, Debug)]
pub struct ScanReport {
    pub a: u32,
    pub max_s: i64,
    /// Every `a1 = a2` triple is a zero (the `a1 - a2` factor was divided out).
    pub family: bool,
    pub regimes: Vec<RegimeReport>,
}

impl ScanReport {
    pub fn solutions(&self) -> Vec<Triple> {
        let mut all: Vec<Triple> = self.regimes.iter().flat_map(|r| r.solutions.iter().copied()).collect();
        all.sort();
        all.dedup();
        all
    }

    pub fn pattern_holds(&self) -> Option<bool> {
        self.regimes.iter().find_map(|r| r.pattern.as_ref()).map(PatternCheck::holds)
    }

    pub fn new_solutions(&self) -> Vec<Triple> {
        self.solutions().into_iter().filter(|t| Class::of(t) == Class::New).collect()
    }
}

fn valid(a: u32, a1: i64, a2: i64) -> Option<Triple> {
    let a3 = 2 * (a1 + a2) - 3 * a as i64;
    (a1 >= 1 && a1 <= a2 && a2 <= a3).then_some(Triple { a1, a2, a3 })
}

fn pairs_for(s: i64, p: &BigInt) -> Vec<(i64, i64)> {
    let disc: BigInt = BigInt::from(s) * s - p * 4;
    if disc.is_negative() {
        return Vec::new();
    }
    let r = disc.sqrt();
    if &r * &r != disc {
        return Vec::new();
    }
    let Some(r) = r.to_i64() else { return Vec::new() };
    if (s - r).is_odd() {
        return Vec::new();
    }
    vec![((s - r) / 2, (s + r) / 2)]
}

fn candidate_at(f: &FPoly, s: i64) -> Result<Candidate> {
    let sym = f.sym.as_ref().expect("symbolic regime");
    let in_p = at_s(sym, s);
    if in_p.is_zero() {
        // every split of S is a zero
        let pairs: Vec<(i64, i64)> = (0..=s / 2).map(|a1| (a1, s - a1)).collect();
        let p_roots = pairs.iter().map(|&(x, y)| BigInt::from(x * y)).collect();
        return Ok(Candidate { s, p_roots, pairs });
    }
    let hi = BigInt::from(s) * s / 4;
    let lo = -(BigInt::from(s) * s);
    let p_roots = in_p.integer_roots_in(&lo, &hi)?;
    let pairs = p_roots.iter().flat_map(|p| pairs_for(s, p)).collect();
    Ok(Candidate { s, p_roots, pairs })
}

/// Zeros at `S = m` for a factor `S - m` divided out of every weight,
/// confirmed on the raw coefficient.
fn divided_root_solutions(a: u32, regime: A1Regime, m: i64) -> Result<Vec<Triple>> {
    let a1s: Vec<i64> = match regime {
        A1Regime::Symbolic => (a as i64..=m / 2).collect(),
        A1Regime::Fixed(c) => vec![c as i64],
    };
    let mut out = Vec::new();
    for a1 in a1s {
        if let Some(tr) = valid(a, a1, m - a1) {
            if direct_coefficient(a, tr.a1, tr.a2)?.is_zero() {
                out.push(tr);
            }
        }
    }
    Ok(out)
}

fn symbolic_regime(a: u32, max_s: i64, exec: Exec) -> Result<RegimeReport> {
    let f = build_f(a, A1Regime::Symbolic)?;
    let pattern = check_pattern(&f);
    let divisor_list = pattern.as_ref().filter(|p| p.holds()).and_then(|_| divisor_candidates(a));
    let (method, s_values): (Method, Vec<i64>) = match divisor_list {
        Some(list) => (Method::Divisors, list.into_iter().filter(|&s| s >= 2).collect()),
        None => (Method::DirectScan, (2..=max_s).collect()),
    };
    let candidates: Vec<Candidate> =
        exec.map(&s_values, |&s| candidate_at(&f, s)).into_iter().collect::<Result<_>>()?;
    let mut solutions = BTreeSet::new();
    for cand in &candidates {
        for &(a1, a2) in &cand.pairs {
            if a1 >= a as i64 {
                if let Some(tr) = valid(a, a1, a2) {
                    solutions.insert(tr);
                }
            }
        }
    }
    for &m in &f.divided.s_roots {
        solutions.extend(divided_root_solutions(a, A1Regime::Symbolic, m)?);
    }
    Ok(RegimeReport {
        regime: A1Regime::Symbolic,
        f,
        method,
        pattern,
        candidates,
        solutions: solutions.into_iter().collect(),
    })
}

fn fixed_regime(a: u32, c: u32) -> Result<RegimeReport> {
    let regime = A1Regime::Fixed(c);
    let f = build_f(a, regime)?;
    let u = f.in_a2();
    let mut solutions = BTreeSet::new();
    if u.degree() == Some(0) {
        // no zeros
    } else {
        let bound = u.root_bound();
        for r in u.integer_roots_in(&BigInt::from(c), &bound)? {
            let a2 = r.to_i64().ok_or_else(|| Error::InvalidParams("root out of range".into()))?;
            if let Some(tr) = valid(a, c as i64, a2) {
                solutions.insert(tr);
            }
        }
    }
    for &m in &f.divided.s_roots {
        solutions.extend(divided_root_solutions(a, regime, m)?);
    }
    Ok(RegimeReport {
        regime,
        f,
        method: Method::Univariate,
        pattern: None,
        candidates: Vec::new(),
        solutions: solutions.into_iter().collect(),
    })
}

/// Runs the symbolic regime `a1 >= a` and each fixed regime `a1 = 1..a-1`.
/// `max_s` bounds the direct scan used when the divisor pattern fails.
pub fn solve_integer_cases(a: u32, max_s: i64, exec: Exec) -> Result<ScanReport> {
    let sym = symbolic_regime(a, max_s, exec)?;
    let family = sym.f.divided.a1_minus_a2;
    let mut regimes = vec![sym];
    for c in (1..a).rev() {
        regimes.push(fixed_regime(a, c)?);
    }
    Ok(ScanReport { a, max_s, family, regimes })
}
