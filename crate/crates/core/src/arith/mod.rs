//! Exact integer arithmetic: generalized binomial coefficients and the
//! polynomial carriers used by the rest of the crate.

mod bivar;
mod unipoly;

pub use bivar::BivarPoly;
pub use unipoly::{interpolate, ScaledPoly, UniPoly};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Binomial coefficient extended to all integer arguments.
///
/// For `n >= 0` this is the usual coefficient, zero outside `0..=n`. For
/// negative `n` it follows the reflection rules
/// `C(n, k) = (-1)^k C(-n+k-1, k)` when `k >= 0` and
/// `C(n, k) = (-1)^(n-k) C(-k-1, n-k)` when `k <= n`; every other pair is 0.
/// In particular `C(-1, -1) = 1`.
pub fn binom(n: i64, k: i64) -> BigInt {
    if n >= 0 {
        if k < 0 || k > n {
            return BigInt::zero();
        }
        return binom_nonneg(n as u64, k as u64);
    }
    if k >= 0 {
        let v = binom_nonneg((-n + k - 1) as u64, k as u64);
        return if k % 2 == 0 { v } else { -v };
    }
    if k <= n {
        let v = binom_nonneg((-k - 1) as u64, (n - k) as u64);
        return if (n - k) % 2 == 0 { v } else { -v };
    }
    BigInt::zero()
}

fn binom_nonneg(n: u64, k: u64) -> BigInt {
    debug_assert!(k <= n);
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `(-1)^e` as an `i64`.
pub(crate) fn sign_pow(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}
