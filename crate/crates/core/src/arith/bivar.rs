use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::binom;

/// Polynomial in two variables with exact integer coefficients.
///
/// Terms are keyed by the exponent pair `(i, j)` of `x^i y^j`; zero
/// coefficients are never stored. The same type doubles as a polynomial in
/// any other pair of variables (the conjecture scan uses it over `a1, a2`
/// and over `S, P`).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BivarPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
    degree: Option<u32>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, i: u32, j: u32) -> Self {
        Self::from_terms([((i, j), c.into())])
    }

    pub fn x() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing
    /// repeated exponents and dropping zeros.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = ((u32, u32), BigInt)>,
    {
        let mut map: BTreeMap<(u32, u32), BigInt> = BTreeMap::new();
        for (e, c) in terms {
            if c.is_zero() {
                continue;
            }
            *map.entry(e).or_default() += c;
        }
        Self::from_map(map)
    }

    fn from_map(mut terms: BTreeMap<(u32, u32), BigInt>) -> Self {
        terms.retain(|_, c| !c.is_zero());
        let degree = terms.keys().map(|&(i, j)| i + j).max();
        Self { terms, degree }
    }

    /// `(x + y)^a`.
    pub fn x_plus_y_pow(a: u32) -> Self {
        Self::from_terms((0..=a).map(|i| ((a - i, i), binom(a as i64, i as i64))))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.degree
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|&(i, j)| i + j);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_map(self.terms.iter().map(|(&e, v)| (e, v * c)).collect())
    }

    /// Multiplication by the monomial `x^i y^j`.
    pub fn shift(&self, i: u32, j: u32) -> Self {
        Self {
            terms: self.terms.iter().map(|(&(a, b), c)| ((a + i, b + j), c.clone())).collect(),
            degree: self.degree.map(|d| d + i + j),
        }
    }

    /// Keeps only the terms whose exponents satisfy `keep`.
    pub fn filter_terms(&self, mut keep: impl FnMut(u32, u32) -> bool) -> Self {
        Self::from_map(
            self.terms
                .iter()
                .filter(|(&(i, j), _)| keep(i, j))
                .map(|(&e, c)| (e, c.clone()))
                .collect(),
        )
    }

    /// Exchanges the roles of the two variables.
    pub fn swap_vars(&self) -> Self {
        Self::from_map(self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect())
    }

    /// `n`-th partial derivative with respect to the first variable.
    pub fn derivative_x(&self, n: u32) -> Self {
        Self::from_map(
            self.terms
                .iter()
                .filter(|(&(i, _), _)| i >= n)
                .map(|(&(i, j), c)| ((i - n, j), c * falling_factorial(i, n)))
                .collect(),
        )
    }

    /// `n`-th partial derivative with respect to the second variable.
    pub fn derivative_y(&self, n: u32) -> Self {
        self.swap_vars().derivative_x(n).swap_vars()
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(&(i, j), c)| c * num_traits::pow(x.clone(), i as usize) * num_traits::pow(y.clone(), j as usize))
            .sum()
    }

    /// Greatest common divisor of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        use num_integer::Integer;
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Exact division by an integer that divides every coefficient.
    pub fn div_exact(&self, c: &BigInt) -> Self {
        Self::from_map(
            self.terms
                .iter()
                .map(|(&e, v)| {
                    debug_assert!((v % c).is_zero());
                    (e, v / c)
                })
                .collect(),
        )
    }

    /// Leading term in lexicographic order (largest first exponent, then second).
    pub fn leading_term(&self) -> Option<((u32, u32), &BigInt)> {
        self.terms.iter().next_back().map(|(&e, c)| (e, c))
    }

    /// Exact quotient `self / divisor` when the division leaves no
    /// remainder. Uses lexicographic long division over the rationals.
    pub fn div_poly(&self, divisor: &BivarPoly) -> Option<BivarPoly> {
        let (lead_e, lead_c) = divisor.leading_term()?;
        let lead_c = BigRational::from_integer(lead_c.clone());
        let mut rem: BTreeMap<(u32, u32), BigRational> = self
            .terms
            .iter()
            .map(|(&e, c)| (e, BigRational::from_integer(c.clone())))
            .collect();
        let mut quot: BTreeMap<(u32, u32), BigRational> = BTreeMap::new();
        while let Some((&(i, j), c)) = rem.iter().next_back() {
            if i < lead_e.0 || j < lead_e.1 {
                return None;
            }
            let q = c / &lead_c;
            let qe = (i - lead_e.0, j - lead_e.1);
            for (&(di, dj), dc) in &divisor.terms {
                let e = (di + qe.0, dj + qe.1);
                let v = rem.entry(e).or_insert_with(BigRational::zero);
                *v -= &q * dc;
                if v.is_zero() {
                    rem.remove(&e);
                }
            }
            quot.insert(qe, q);
        }
        let mut out = BTreeMap::new();
        for (e, q) in quot {
            if !q.is_integer() {
                return None;
            }
            out.insert(e, q.to_integer());
        }
        Some(Self::from_map(out))
    }

    pub fn divides(&self, other: &BivarPoly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_poly(self).is_some()
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Substitutes polynomials for both variables.
    pub fn compose(&self, first: &BivarPoly, second: &BivarPoly) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            out = &out + &(&first.pow(i) * &second.pow(j)).scale(c);
        }
        out
    }

    /// Renders the polynomial with the given variable names.
    pub fn display_with(&self, names: [&str; 2]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        // highest total degree first, then descending in the first variable
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| {
            let (da, db) = (a.0 .0 + a.0 .1, b.0 .0 + b.0 .1);
            db.cmp(&da).then(b.0 .0.cmp(&a.0 .0))
        });
        for (k, (&(i, j), c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mag = c.abs();
            let mono = monomial_str(names, i, j);
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                    out.push('*');
                }
                out.push_str(&mono);
            }
        }
        out
    }
}

fn monomial_str(names: [&str; 2], i: u32, j: u32) -> String {
    let part = |n: &str, e: u32| match e {
        0 => String::new(),
        1 => n.to_string(),
        _ => format!("{n}^{e}"),
    };
    let (a, b) = (part(names[0], i), part(names[1], j));
    match (a.is_empty(), b.is_empty()) {
        (true, _) => b,
        (_, true) => a,
        _ => format!("{a}*{b}"),
    }
}

fn falling_factorial(i: u32, n: u32) -> BigInt {
    (0..n).fold(BigInt::one(), |acc, k| acc * (i - k))
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(["x", "y"]))
    }
}

impl Add for &BivarPoly {
    type Output = BivarPoly;
    fn add(self, rhs: &BivarPoly) -> BivarPoly {
        let mut terms = self.terms.clone();
        for (&e, c) in &rhs.terms {
            *terms.entry(e).or_default() += c;
        }
        BivarPoly::from_map(terms)
    }
}

impl Sub for &BivarPoly {
    type Output = BivarPoly;
    fn sub(self, rhs: &BivarPoly) -> BivarPoly {
        let mut terms = self.terms.clone();
        for (&e, c) in &rhs.terms {
            *terms.entry(e).or_default() -= c;
        }
        BivarPoly::from_map(terms)
    }
}

impl Mul for &BivarPoly {
    type Output = BivarPoly;
    fn mul(self, rhs: &BivarPoly) -> BivarPoly {
        let mut terms: BTreeMap<(u32, u32), BigInt> = BTreeMap::new();
        for (&(i, j), c) in &self.terms {
            for (&(k, l), d) in &rhs.terms {
                *terms.entry((i + k, j + l)).or_default() += c * d;
            }
        }
        BivarPoly::from_map(terms)
    }
}

impl Neg for &BivarPoly {
    type Output = BivarPoly;
    fn neg(self) -> BivarPoly {
        BivarPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
            degree: self.degree,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for BivarPoly {
            type Output = BivarPoly;
            fn $m(self, rhs: BivarPoly) -> BivarPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for BivarPoly {
    type Output = BivarPoly;
    fn neg(self) -> BivarPoly {
        -&self
    }
}
