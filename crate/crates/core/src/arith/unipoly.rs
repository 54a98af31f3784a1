use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Univariate polynomial with integer coefficients, lowest power first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    pub fn eval_i64(&self, t: i64) -> BigInt {
        self.eval(&BigInt::from(t))
    }

    /// Evaluates at a rational point.
    pub fn eval_rat(&self, t: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * t + BigRational::from_integer(c.clone()))
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * i).collect())
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> Self {
        let mut g = self.content();
        if g.is_zero() {
            return Self::zero();
        }
        if self.leading().is_some_and(|l| l.is_negative()) {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// All integer roots in `[lo, hi]`, in increasing order.
    ///
    /// Roots are isolated by bisection on Sturm sequence sign counts, so the
    /// cost depends on the number of roots rather than on the interval width.
    pub fn integer_roots_in(&self, lo: &BigInt, hi: &BigInt) -> Result<Vec<BigInt>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if lo > hi || self.degree() == Some(0) {
            return Ok(Vec::new());
        }
        let sturm = SturmChain::new(self);
        let mut out = Vec::new();
        let start = lo - 1;
        sturm.isolate(&start, hi, &mut out);
        Ok(out)
    }

    /// Bound on the absolute value of every real root (Cauchy).
    pub fn root_bound(&self) -> BigInt {
        let Some(lead) = self.leading() else {
            return BigInt::zero();
        };
        let lead = lead.abs();
        let max = self.coeffs[..self.coeffs.len() - 1].iter().map(|c| c.abs()).max().unwrap_or_default();
        BigInt::one() + max.div_ceil(&lead)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let mag = c.abs();
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        f.write_str("t")?;
                    } else {
                        write!(f, "t^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Sturm chain of the square-free part of a polynomial, every member
/// scaled to integer coefficients (positive scalings keep the signs).
struct SturmChain {
    chain: Vec<UniPoly>,
}

impl SturmChain {
    fn new(p: &UniPoly) -> Self {
        let p = to_rat(p);
        let dp = rat_derivative(&p);
        let g = rat_gcd(&p, &dp);
        let sf = rat_div(&p, &g).0;
        let mut chain = vec![sf.clone(), rat_derivative(&sf)];
        loop {
            let n = chain.len();
            if chain[n - 1].is_empty() {
                chain.pop();
                break;
            }
            let r = rat_div(&chain[n - 2], &chain[n - 1]).1;
            if r.is_empty() {
                break;
            }
            chain.push(r.into_iter().map(|c| -c).collect());
        }
        Self { chain: chain.iter().map(clear_denominators).collect() }
    }

    fn sign_changes(&self, t: &BigInt) -> usize {
        let mut last = 0i8;
        let mut changes = 0;
        for p in &self.chain {
            let v = p.eval(t);
            let s = if v.is_positive() {
                1
            } else if v.is_negative() {
                -1
            } else {
                0
            };
            if s != 0 {
                if last != 0 && s != last {
                    changes += 1;
                }
                last = s;
            }
        }
        changes
    }

    /// Integer roots in the half-open interval `(lo, hi]`.
    fn isolate(&self, lo: &BigInt, hi: &BigInt, out: &mut Vec<BigInt>) {
        let count = self.sign_changes(lo).saturating_sub(self.sign_changes(hi));
        if count == 0 {
            return;
        }
        if hi - lo == BigInt::one() {
            if self.chain[0].eval(hi).is_zero() {
                out.push(hi.clone());
            }
            return;
        }
        let mid: BigInt = (lo + hi).div_floor(&BigInt::from(2));
        self.isolate(lo, &mid, out);
        self.isolate(&mid, hi, out);
    }
}

type RatPoly = Vec<BigRational>;

fn to_rat(p: &UniPoly) -> RatPoly {
    p.coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect()
}

fn trim(p: &mut RatPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn rat_derivative(p: &RatPoly) -> RatPoly {
    let mut d: RatPoly = p.iter().enumerate().skip(1).map(|(i, c)| c * BigRational::from_integer(i.into())).collect();
    trim(&mut d);
    d
}

/// Quotient and remainder; `b` must be nonzero.
fn rat_div(a: &RatPoly, b: &RatPoly) -> (RatPoly, RatPoly) {
    let mut r = a.clone();
    trim(&mut r);
    let db = b.len() - 1;
    let lb = b[db].clone();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() / &lb;
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= &c * bc;
        }
        q[shift] = c;
        r.pop();
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

fn rat_gcd(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let (mut a, mut b) = (a.clone(), b.clone());
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = rat_div(&a, &b).1;
        a = b;
        b = r;
    }
    a
}

fn clear_denominators(p: &RatPoly) -> UniPoly {
    let l = p.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    UniPoly::new(p.iter().map(|c| (c * BigRational::from_integer(l.clone())).to_integer()).collect())
}

/// A rational polynomial stored as an integer numerator polynomial over a
/// positive common denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaledPoly {
    pub numer: UniPoly,
    pub denom: BigInt,
}

impl ScaledPoly {
    pub fn is_integral(&self) -> bool {
        self.denom.is_one()
    }

    pub fn into_integral(self) -> Option<UniPoly> {
        self.is_integral().then_some(self.numer)
    }

    pub fn eval(&self, t: &BigInt) -> BigRational {
        BigRational::new(self.numer.eval(t), self.denom.clone())
    }

    pub fn eval_i64(&self, t: i64) -> BigRational {
        self.eval(&BigInt::from(t))
    }

    /// Coefficients as reduced rationals, lowest power first.
    pub fn coefficients(&self) -> Vec<BigRational> {
        self.numer.coeffs().iter().map(|c| BigRational::new(c.clone(), self.denom.clone())).collect()
    }
}

/// Exact interpolation through `points` using Newton divided differences
/// over the rationals.
pub fn interpolate(points: &[(i64, BigInt)]) -> Result<ScaledPoly> {
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            if points[i].0 == points[j].0 {
                return Err(Error::DuplicateAbscissa(points[i].0));
            }
        }
    }
    let xs: Vec<BigRational> = points.iter().map(|p| BigRational::from_integer(p.0.into())).collect();
    let mut dd: Vec<BigRational> = points.iter().map(|p| BigRational::from_integer(p.1.clone())).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    // Horner on the Newton form: p = dd[0] + (t - x0)(dd[1] + (t - x1)(...)).
    let mut acc: RatPoly = Vec::new();
    for i in (0..n).rev() {
        // acc = acc * (t - x_i) + dd[i]
        let mut next = vec![BigRational::zero(); acc.len() + 1];
        for (k, c) in acc.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * &xs[i];
        }
        next[0] += &dd[i];
        trim(&mut next);
        acc = next;
    }
    let denom = acc.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let numer =
        UniPoly::new(acc.iter().map(|c| (c * BigRational::from_integer(denom.clone())).to_integer()).collect());
    Ok(ScaledPoly { numer, denom })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[(i64, i64)]) -> Vec<(i64, BigInt)> {
        v.iter().map(|&(a, b)| (a, BigInt::from(b))).collect()
    }

    #[test]
    fn interpolate_small() {
        let c = interpolate(&pts(&[(0, 1), (1, 1)])).unwrap();
        assert_eq!(c.into_integral(), Some(UniPoly::from_i64(&[1])));
        let sq = interpolate(&pts(&[(0, 0), (1, 1), (2, 4)])).unwrap();
        assert_eq!(sq.into_integral(), Some(UniPoly::from_i64(&[0, 0, 1])));
    }

    #[test]
    fn interpolate_rational_coefficients() {
        // t(t-1)/2 through t = 0..3
        let p = interpolate(&pts(&[(0, 0), (1, 0), (2, 1), (3, 3)])).unwrap();
        assert_eq!(p.denom, BigInt::from(2));
        assert_eq!(p.numer, UniPoly::from_i64(&[0, -1, 1]));
        assert!(!p.is_integral());
    }

    #[test]
    fn duplicate_abscissa_rejected() {
        assert!(matches!(interpolate(&pts(&[(1, 0), (1, 2)])), Err(Error::DuplicateAbscissa(1))));
    }

    #[test]
    fn integer_roots() {
        // (t - 9)(t + 2)(2t - 1)(t^2 + 1)
        let q = {
            let a = UniPoly::from_i64(&[-9, 1]);
            let b = UniPoly::from_i64(&[2, 1]);
            let c = UniPoly::from_i64(&[-1, 2]);
            let d = UniPoly::from_i64(&[1, 0, 1]);
            mul(&mul(&mul(&a, &b), &c), &d)
        };
        let roots = q.integer_roots_in(&BigInt::from(-100), &BigInt::from(100)).unwrap();
        assert_eq!(roots, vec![BigInt::from(-2), BigInt::from(9)]);
        let roots = q.integer_roots_in(&BigInt::from(9), &BigInt::from(9)).unwrap();
        assert_eq!(roots, vec![BigInt::from(9)]);
        assert!(q.integer_roots_in(&BigInt::from(10), &BigInt::from(1000)).unwrap().is_empty());
    }

    #[test]
    fn repeated_roots_reported_once() {
        let a = UniPoly::from_i64(&[-3, 1]);
        let p = mul(&mul(&a, &a), &mul(&a, &UniPoly::from_i64(&[0, 1])));
        let r = p.integer_roots_in(&BigInt::from(-5), &BigInt::from(5)).unwrap();
        assert_eq!(r, vec![BigInt::from(0), BigInt::from(3)]);
    }

    fn mul(a: &UniPoly, b: &UniPoly) -> UniPoly {
        let mut c = vec![BigInt::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            for (j, y) in b.coeffs.iter().enumerate() {
                c[i + j] += x * y;
            }
        }
        UniPoly::new(c)
    }

    #[test]
    fn display() {
        assert_eq!(UniPoly::from_i64(&[-9, 1]).to_string(), "t - 9");
        assert_eq!(UniPoly::from_i64(&[0, -3, 0, 2]).to_string(), "2*t^3 - 3*t");
    }
}
