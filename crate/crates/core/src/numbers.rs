//! Exact integer and rational helpers shared by every counting route.
//!
//! Out-of-range binomials and Catalan numbers evaluate to zero, so the
//! alternating sums elsewhere in the crate can run over unrestricted
//! index ranges.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision count. Public counting operations only return
/// nonnegative values; signed intermediates use the same type.
pub type Count = BigInt;

/// Exact rational, always normalised to lowest terms with a positive denominator.
pub type Rational = BigRational;

/// `C(n, k)`, or zero when `n < 0`, `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> Count {
    if n < 0 || k < 0 || k > n {
        return Count::zero();
    }
    let k = k.min(n - k);
    let mut acc = Count::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// The `m`-th Catalan number; zero for negative `m`.
pub fn catalan(m: i64) -> Count {
    if m < 0 {
        return Count::zero();
    }
    binomial(2 * m, m) / (m + 1)
}

pub fn factorial(n: u64) -> Count {
    (1..=n).fold(Count::one(), |acc, i| acc * i)
}
