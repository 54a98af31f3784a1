//! Exact dense linear algebra over the integers.
//!
//! Everything here is fraction-free: determinants use Bareiss elimination,
//! ranks and kernels use integer row reduction with content removal.
//! A modular rank is provided as a certified shortcut: a matrix with full
//! rank modulo a prime has full rank over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| self.row(r).iter().zip(v).filter(|(a, _)| !a.is_zero()).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Exact determinant by Bareiss fraction-free elimination.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.to_rows();
        let mut sign = 1;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap(k, p);
                sign = -sign;
            }
            let (head, tail) = a.split_at_mut(k + 1);
            let pivot_row = &head[k];
            for row in tail.iter_mut() {
                for j in k + 1..n {
                    let v = (&pivot_row[k] * &row[j] - &row[k] * &pivot_row[j]) / &prev;
                    row[j] = v;
                }
                row[k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        if sign < 0 {
            -d
        } else {
            d
        }
    }

    /// Exact rank over the rationals.
    pub fn rank(&self) -> usize {
        Echelon::new(self.to_rows(), false).pivots.len()
    }

    /// Rank with a modular shortcut: if the rank modulo a 32-bit prime is
    /// already maximal the answer is certified; otherwise the exact
    /// fraction-free reduction decides.
    pub fn rank_fast(&self) -> usize {
        let full = self.rows.min(self.cols);
        let r = self.rank_mod_p(MODULUS);
        if r == full {
            r
        } else {
            self.rank()
        }
    }

    /// Rank of the reduction modulo the prime `p` (`p < 2^32`).
    pub fn rank_mod_p(&self, p: u64) -> usize {
        let mut a: Vec<Vec<u64>> = (0..self.rows)
            .map(|r| self.row(r).iter().map(|v| reduce_mod(v, p)).collect())
            .collect();
        rank_mod_p_rows(&mut a, self.cols, p)
    }

    /// Integer basis of the right kernel `{v : M v = 0}`; each vector is
    /// primitive. The basis is indexed by the free columns of the reduced
    /// echelon form, in increasing order.
    pub fn kernel(&self) -> Vec<Vec<BigInt>> {
        let ech = Echelon::new(self.to_rows(), true);
        let pivot_cols: Vec<usize> = ech.pivots.iter().map(|&(_, c)| c).collect();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivot_cols.contains(c)) {
            // Rows are reduced: row i has pivot p_i at column c_i and zeros
            // in every other pivot column.
            let l = ech.pivots.iter().fold(BigInt::one(), |l, &(r, c)| {
                if ech.rows[r][free].is_zero() {
                    l
                } else {
                    l.lcm(&ech.rows[r][c])
                }
            });
            let mut v = vec![BigInt::zero(); self.cols];
            v[free] = l.clone();
            for &(r, c) in &ech.pivots {
                let e = &ech.rows[r][free];
                if !e.is_zero() {
                    v[c] = -(e * &l) / &ech.rows[r][c];
                }
            }
            make_primitive(&mut v);
            basis.push(v);
        }
        basis
    }
}

pub(crate) const MODULUS: u64 = 4_294_967_291;

fn reduce_mod(v: &BigInt, p: u64) -> u64 {
    let r = v.mod_floor(&BigInt::from(p));
    r.try_into().expect("residue fits in u64")
}

pub(crate) fn rank_mod_p_rows(a: &mut [Vec<u64>], cols: usize, p: u64) -> usize {
    let nrows = a.len();
    let mut rank = 0;
    for c in 0..cols {
        if rank == nrows {
            break;
        }
        let Some(piv) = (rank..nrows).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = pow_mod(a[rank][c], p - 2, p);
        for j in c..cols {
            a[rank][j] = a[rank][j] * inv % p;
        }
        let (head, tail) = a.split_at_mut(rank + 1);
        let prow = &head[rank];
        for row in tail.iter_mut() {
            let f = row[c];
            if f == 0 {
                continue;
            }
            for j in c..cols {
                if prow[j] != 0 {
                    row[j] = (row[j] + (p - f) * prow[j]) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

pub(crate) fn make_primitive(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return;
    }
    let first_neg = v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    let g = if first_neg { -g } else { g };
    if !g.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// Fraction-free row echelon form with primitive rows.
pub(crate) struct Echelon {
    pub rows: Vec<Vec<BigInt>>,
    /// `(row, column)` of every pivot, in column order.
    pub pivots: Vec<(usize, usize)>,
}

impl Echelon {
    pub fn new(mut rows: Vec<Vec<BigInt>>, reduced: bool) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        let nrows = rows.len();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for c in 0..ncols {
            if rank == nrows {
                break;
            }
            // smallest nonzero magnitude keeps the numbers short
            let Some(piv) = (rank..nrows)
                .filter(|&r| !rows[r][c].is_zero())
                .min_by(|&x, &y| rows[x][c].magnitude().cmp(rows[y][c].magnitude()))
            else {
                continue;
            };
            rows.swap(rank, piv);
            make_primitive(&mut rows[rank]);
            let prow = rows[rank].clone();
            let targets: Vec<usize> =
                if reduced { (0..nrows).filter(|&r| r != rank).collect() } else { (rank + 1..nrows).collect() };
            for r in targets {
                if rows[r][c].is_zero() {
                    continue;
                }
                let g = prow[c].gcd(&rows[r][c]);
                let mp = &prow[c] / &g;
                let mr = &rows[r][c] / &g;
                let row = &mut rows[r];
                for j in 0..ncols {
                    if prow[j].is_zero() {
                        if !row[j].is_zero() {
                            row[j] *= &mp;
                        }
                    } else {
                        row[j] = &row[j] * &mp - &mr * &prow[j];
                    }
                }
                make_primitive(row);
            }
            pivots.push((rank, c));
            rank += 1;
        }
        Self { rows, pivots }
    }
}

/// Rank of the span of the given integer vectors.
pub fn span_rank(vectors: &[Vec<BigInt>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    Echelon::new(vectors.to_vec(), false).pivots.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_small() {
        assert_eq!(IntMatrix::identity(3).det(), BigInt::one());
        let m = IntMatrix::from_i64(&[&[1, 2, 3], &[4, 5, 6], &[1, 2, 3]]);
        assert_eq!(m.det(), BigInt::zero());
        let m = IntMatrix::from_i64(&[&[0, 2, 1], &[3, -1, 4], &[5, 9, 2]]);
        // cofactor expansion along the first row
        let expected = -2 * (3 * 2 - 4 * 5) + (3 * 9 - (-1) * 5);
        assert_eq!(m.det(), BigInt::from(expected));
    }

    /// Leibniz expansion, used as an independent check of Bareiss.
    fn det_leibniz(m: &IntMatrix) -> BigInt {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for i in 0..n {
                    let mut q = p.clone();
                    q.insert(i, n - 1);
                    out.push(q);
                }
            }
            out
        }
        let n = m.rows();
        perms(n)
            .into_iter()
            .map(|p| {
                let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
                let prod: BigInt = (0..n).map(|i| m.get(i, p[i]).clone()).product();
                if inversions % 2 == 0 {
                    prod
                } else {
                    -prod
                }
            })
            .sum()
    }

    #[test]
    fn det_matches_leibniz() {
        let mut seed = 12345u64;
        let mut next = || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((seed >> 33) % 7) as i64 - 3
        };
        for n in 1..=5 {
            for _ in 0..20 {
                let rows: Vec<Vec<BigInt>> = (0..n).map(|_| (0..n).map(|_| BigInt::from(next())).collect()).collect();
                let m = IntMatrix::from_rows(rows);
                assert_eq!(m.det(), det_leibniz(&m));
            }
        }
    }

    #[test]
    fn rank_and_kernel() {
        let m = IntMatrix::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.rank_fast(), 2);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        assert!(m.mul_vec(&k[0]).iter().all(Zero::is_zero));
        assert_eq!(k[0], vec![BigInt::from(1), BigInt::from(1), BigInt::from(-1)]);
    }

    #[test]
    fn rank_mod_p_agrees_on_full_rank() {
        let m = IntMatrix::from_i64(&[&[1, 1, 0, 0], &[0, 1, 1, 0], &[0, 0, 1, 1]]);
        assert_eq!(m.rank_mod_p(MODULUS), 3);
        assert_eq!(m.rank(), 3);
        assert_eq!(m.kernel().len(), 1);
    }

    #[test]
    fn empty_shapes() {
        assert_eq!(IntMatrix::zeros(0, 0).det(), BigInt::one());
        assert_eq!(IntMatrix::zeros(0, 3).rank(), 0);
        assert_eq!(IntMatrix::zeros(2, 3).kernel().len(), 3);
    }
}
