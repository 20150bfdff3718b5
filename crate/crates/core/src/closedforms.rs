//! Closed forms for `k = 2` and `k = 3` and the holonomic recursions they
//! satisfy, used as independent checks on the inclusion-exclusion layer.

use num_traits::Zero;

use crate::numbers::{binomial, catalan, Count};

fn half_defect(n: i64, l: i64) -> Option<i64> {
    (l >= 0 && n >= l && (n - l) % 2 == 0).then_some((n - l) / 2)
}

/// `C(n, l) · Catalan((n - l) / 2)`.
pub fn f2_closed(n: i64, l: i64) -> Count {
    match half_defect(n, l) {
        Some(m) => binomial(n, l) * catalan(m),
        None => Count::zero(),
    }
}

/// `C(n, l) · (C_m C_(m+2) - C_(m+1)^2)` with `m = (n - l) / 2`.
pub fn f3_closed(n: i64, l: i64) -> Count {
    match half_defect(n, l) {
        Some(m) => binomial(n, l) * (catalan(m) * catalan(m + 2) - catalan(m + 1) * catalan(m + 1)),
        None => Count::zero(),
    }
}

/// Waterman's count of secondary structures with `h` arcs on `n` vertices:
/// `(1/h) C(n-h, h+1) C(n-h-1, h-1)`. `h = 0` gives 1 (the empty structure).
pub fn waterman_arcs(n: i64, h: i64) -> Count {
    if h < 0 || n < 0 {
        return Count::zero();
    }
    if h == 0 {
        return Count::from(1);
    }
    binomial(n - h, h + 1) * binomial(n - h - 1, h - 1) / h
}

/// Secondary structures with exactly `l` isolated vertices:
/// `(2/(n-l)) C((n+l)/2, (n-l)/2 + 1) C((n+l)/2 - 1, (n-l)/2 - 1)`, and 1 when `l = n`.
pub fn s2_waterman(n: i64, l: i64) -> Count {
    let Some(h) = half_defect(n, l) else {
        return Count::zero();
    };
    if h == 0 {
        return Count::from(1);
    }
    let p = (n + l) / 2;
    Count::from(2) * binomial(p, h + 1) * binomial(p - 1, h - 1) / (n - l)
}

/// The two-term recursion
/// `(n-l)(n-l+2) S(n,l) - (n+l)(n+l-2) S(n-2,l) = 0`
/// evaluated on `s(n, l)`.
pub fn s2_recursion_holds(n: i64, l: i64, s: impl Fn(i64, i64) -> Count) -> bool {
    let lhs = Count::from((n - l) * (n - l + 2)) * s(n, l) - Count::from((n + l) * (n + l - 2)) * s(n - 2, l);
    lhs.is_zero()
}

/// The two-term recursion against the inclusion-exclusion values for `k = 2`.
pub fn s2_recursion_check(n: i64, l: i64) -> bool {
    s2_recursion_holds(n, l, structures_k(2))
}

fn structures_k(k: usize) -> impl Fn(i64, i64) -> Count {
    move |n, l| {
        if n < 0 || l < 0 || l > n {
            return Count::zero();
        }
        crate::transforms::s(k, n as usize, l as usize).expect("inclusion-exclusion result is nonnegative")
    }
}

/// `Σ_b (-1)^b C(n-b, b) f3_closed(n - 2b, l)`.
pub fn s3_closed(n: i64, l: i64) -> Count {
    (0..=n.max(0) / 2)
        .map(|b| {
            let term = binomial(n - b, b) * f3_closed(n - 2 * b, l);
            if b % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// Twice the four recursion coefficients `p_1..p_4`, so every entry is an integer.
pub fn s3_recursion_coefficients(n: i64, l: i64) -> [Count; 4] {
    let p1 = n * (n - 1) * (n - 10 + l) * (n - 4 + l) * (n - 8 + l);
    let p2 = n
        * (n - 3)
        * (13 * n.pow(3) - 126 * n.pow(2) + 13 * n.pow(2) * l - 88 * n * l + 392 * n + 3 * n * l.pow(2) + 216 * l
            - 384
            - 42 * l.pow(2)
            + 3 * l.pow(3));
    // (n-1)(n/2 - 2)(...) doubled is (n-1)(n-4)(...)
    let p3 = (n - 1)
        * (n - 4)
        * (13 * n.pow(3) - 30 * n.pow(2) - 13 * n.pow(2) * l + 8 * n + 16 * n * l + 3 * n * l.pow(2) + 30 * l.pow(2)
            - 72 * l
            - 3 * l.pow(3));
    let p4 = (n - 3) * (n - 4) * (n - l) * (n - l + 6) * (n - l + 4);
    [p1, p2, p3, p4].map(Count::from)
}

/// `p1 S(n-6,l) - p2 S(n-4,l) - p3 S(n-2,l) + p4 S(n,l) = 0`, multiplied by 2.
pub fn s3_recursion_holds(n: i64, l: i64, s: impl Fn(i64, i64) -> Count) -> bool {
    let [p1, p2, p3, p4] = s3_recursion_coefficients(n, l);
    (p1 * s(n - 6, l) - p2 * s(n - 4, l) - p3 * s(n - 2, l) + p4 * s(n, l)).is_zero()
}

/// The four-term recursion against the inclusion-exclusion values for `k = 3`.
pub fn s3_recursion_check(n: i64, l: i64) -> bool {
    s3_recursion_holds(n, l, structures_k(3))
}
