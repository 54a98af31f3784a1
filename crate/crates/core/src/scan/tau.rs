//! The operator `Delta = d/dx - d/dy` and the recursion `tau^k` on
//! polynomials in `x, y` whose coefficients are polynomials in `a1, a2`.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::arith::BivarPoly;
use crate::error::{Error, Result};

/// `sum c_{ij}(a1, a2) x^i y^j`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TauPoly {
    terms: BTreeMap<(u32, u32), BivarPoly>,
}

impl TauPoly {
    pub fn one() -> Self {
        Self::from_terms([((0, 0), BivarPoly::one())])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), BivarPoly)>) -> Self {
        let mut map: BTreeMap<(u32, u32), BivarPoly> = BTreeMap::new();
        for (e, c) in terms {
            let slot = map.entry(e).or_default();
            *slot = &*slot + &c;
        }
        map.retain(|_, c| !c.is_zero());
        Self { terms: map }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    /// Coefficient of `x^i y^j` as a polynomial in `(a1, a2)`.
    pub fn coeff(&self, i: u32, j: u32) -> BivarPoly {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BivarPoly)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_terms(self.terms.iter().chain(&other.terms).map(|(&e, c)| (e, c.clone())))
    }

    /// Multiplies by `x^i y^j` and a coefficient.
    pub fn mul_term(&self, i: u32, j: u32, c: &BivarPoly) -> Self {
        Self::from_terms(self.terms.iter().map(|(&(a, b), v)| ((a + i, b + j), v * c)))
    }

    /// `Delta = d/dx - d/dy`.
    pub fn delta(&self) -> Self {
        let mut out = Vec::new();
        for (&(i, j), c) in &self.terms {
            if i > 0 {
                out.push(((i - 1, j), c.scale(&BigInt::from(i))));
            }
            if j > 0 {
                out.push(((i, j - 1), c.scale(&BigInt::from(-(j as i64)))));
            }
        }
        Self::from_terms(out)
    }

    /// Substitutes integer values for `(a1, a2)`, giving a plain polynomial
    /// in `x, y`.
    pub fn evaluate(&self, a1: i64, a2: i64) -> BivarPoly {
        let (a1, a2) = (BigInt::from(a1), BigInt::from(a2));
        BivarPoly::from_terms(self.terms.iter().map(|(&e, c)| (e, c.eval(&a1, &a2))))
    }

    pub fn display(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by(|a, b| (b.0 + b.1).cmp(&(a.0 + a.1)).then(b.0.cmp(&a.0)));
        keys.iter()
            .map(|&(i, j)| {
                let mono = BivarPoly::monomial(1, i, j).to_string();
                format!("({})*{}", self.terms[&(i, j)].display_with(["a1", "a2"]), mono)
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// How `a1` enters the recursion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum A1Regime {
    /// `a1` is a free symbol assumed to be at least the level.
    Symbolic,
    /// `a1` equals a fixed positive integer.
    Fixed(u32),
}

impl A1Regime {
    /// `a1` as a polynomial in `(a1, a2)`.
    pub fn a1_poly(self) -> BivarPoly {
        match self {
            A1Regime::Symbolic => BivarPoly::x(),
            A1Regime::Fixed(c) => BivarPoly::constant(c),
        }
    }
}

/// `tau^k(1)`.
///
/// Step `j` uses `xy Delta + ((a1-j+1) y - (a2-j+1) x)` while `j <= a1`,
/// and `y Delta - (a2-j+1)` once `j > a1`. In the symbolic regime every
/// step is taken to satisfy `j <= a1`.
pub fn tau(k: u32, regime: A1Regime) -> Result<TauPoly> {
    if let A1Regime::Fixed(0) = regime {
        return Err(Error::InvalidParams("a1 must be positive".into()));
    }
    let a1 = regime.a1_poly();
    let a2 = BivarPoly::y();
    let mut cur = TauPoly::one();
    for j in 1..=k {
        let shift = BivarPoly::constant(j as i64 - 1);
        let m2 = &a2 - &shift;
        let first_branch = match regime {
            A1Regime::Symbolic => true,
            A1Regime::Fixed(c) => j <= c,
        };
        cur = if first_branch {
            let m1 = &a1 - &shift;
            cur.delta()
                .mul_term(1, 1, &BivarPoly::one())
                .add(&cur.mul_term(0, 1, &m1))
                .add(&cur.mul_term(1, 0, &-&m2))
        } else {
            cur.delta().mul_term(0, 1, &BivarPoly::one()).add(&cur.mul_term(0, 0, &-&m2))
        };
    }
    Ok(cur)
}

/// Degree of `tau^k` predicted by the branch structure.
pub fn tau_degree(k: u32, regime: A1Regime) -> u32 {
    match regime {
        A1Regime::Symbolic => k,
        A1Regime::Fixed(c) => k.min(c),
    }
}
