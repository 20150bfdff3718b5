//! Three independent ways to count walks that stay strictly inside the
//! chamber `x_1 > x_2 > ... > x_(k-1) > 0`:
//!
//! * [`chamber_walk_count`]: layered DP over interior points only;
//! * [`reflection_count`]: unconstrained counts combined in a signed sum over
//!   the hyperoctahedral group;
//! * [`coefficient_counts`]: `n!` times the coefficients of
//!   `det[I_(i-j)(2x) - I_(i+j)(2x)]`, optionally multiplied by `e^x`.
//!
//! With zero steps allowed the walks from the base point back to itself are
//! in bijection with `k`-noncrossing partial matchings; without them, with
//! perfect matchings.

mod dp;
mod group;

pub use group::{signed_group_elements, SignedPermutation};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numbers::{factorial, Count, Rational};
use crate::series::{series_determinant, Series};
use crate::walk::{is_interior, ChamberPoint};
use dp::{l1_distance, run_layers, step_set};

/// Largest `k` accepted by the routes that enumerate the group or build a
/// `(k-1) x (k-1)` determinant.
pub const MAX_GROUP_K: usize = 7;

fn check_k(k: usize) {
    assert!(k >= 2, "k must be at least 2, got {k}");
}

/// Number of closed walks of each length `0..=n_max` from `start` to `end`
/// that stay strictly inside the chamber.
pub fn confined_walk_counts(
    k: usize,
    n_max: usize,
    start: &ChamberPoint,
    end: &ChamberPoint,
    allow_zero_steps: bool,
) -> Result<Vec<Count>> {
    check_k(k);
    for p in [start, end] {
        if p.0.len() != k - 1 || !p.is_interior() {
            return Err(Error::NotInterior(p.0.clone()));
        }
    }
    let steps = step_set(k - 1, allow_zero_steps);
    let target = end.0.clone();
    let mut out = Vec::with_capacity(n_max + 1);
    run_layers(
        start.0.clone(),
        &steps,
        n_max,
        |p, m| is_interior(p) && l1_distance(p, &target) <= (n_max - m) as i64,
        |_, layer| out.push(layer.get(&target).cloned().unwrap_or_else(Count::zero)),
    );
    Ok(out)
}

/// `chamber_walk_count(k, n, z)` for every `n` in `0..=n_max` from one DP run.
pub fn chamber_walk_counts(k: usize, n_max: usize, allow_zero_steps: bool) -> Vec<Count> {
    let a = ChamberPoint::base(k);
    confined_walk_counts(k, n_max, &a, &a, allow_zero_steps).expect("base point is interior")
}

/// Walks of length `n` from `(k-1, ..., 1)` back to itself, strictly inside
/// the chamber, with steps `±e_i` (and `0` when `allow_zero_steps`).
pub fn chamber_walk_count(k: usize, n: usize, allow_zero_steps: bool) -> Count {
    chamber_walk_counts(k, n, allow_zero_steps).pop().expect("n + 1 layers")
}

/// Unconfined walks of length `n` from `start` to `end`.
pub fn unconstrained_walk_count(k: usize, n: usize, start: &[i64], end: &[i64], allow_zero_steps: bool) -> Count {
    check_k(k);
    assert!(
        start.len() == k - 1 && end.len() == k - 1,
        "points must have k - 1 coordinates"
    );
    let steps = step_set(k - 1, allow_zero_steps);
    let mut result = Count::zero();
    run_layers(
        start.to_vec(),
        &steps,
        n,
        |p, m| l1_distance(p, end) <= (n - m) as i64,
        |m, layer| {
            if m == n {
                result = layer.get(end).cloned().unwrap_or_else(Count::zero);
            }
        },
    );
    result
}

/// Reflection-principle counts for every length `0..=n_max`:
/// `Σ_β det(β) Γ_n(β(start), end)`.
///
/// The unconstrained counts come from one DP run outward from `end`; the
/// step set is symmetric, so `Γ_n(x, end) = Γ_n(end, x)`.
pub fn reflection_counts(
    k: usize,
    n_max: usize,
    start: &ChamberPoint,
    end: &ChamberPoint,
    allow_zero_steps: bool,
) -> Result<Vec<Count>> {
    check_k(k);
    if k > MAX_GROUP_K {
        return Err(Error::Precondition(format!(
            "reflection route supports k <= {MAX_GROUP_K}"
        )));
    }
    for p in [start, end] {
        if p.0.len() != k - 1 || !p.is_interior() {
            return Err(Error::NotInterior(p.0.clone()));
        }
    }
    let images: Vec<(Vec<i64>, i32)> = signed_group_elements(k)
        .into_iter()
        .map(|(g, sign)| (g.apply(&start.0), sign))
        .collect();
    let steps = step_set(k - 1, allow_zero_steps);
    let mut out = Vec::with_capacity(n_max + 1);
    run_layers(
        end.0.clone(),
        &steps,
        n_max,
        |_, _| true,
        |_, layer| {
            let mut total = Count::zero();
            for (image, sign) in &images {
                if let Some(c) = layer.get(image) {
                    if *sign > 0 {
                        total += c;
                    } else {
                        total -= c;
                    }
                }
            }
            out.push(total);
        },
    );
    Ok(out)
}

pub fn reflection_count(
    k: usize,
    n: usize,
    start: &ChamberPoint,
    end: &ChamberPoint,
    allow_zero_steps: bool,
) -> Result<Count> {
    Ok(reflection_counts(k, n, start, end, allow_zero_steps)?
        .pop()
        .expect("n + 1 layers"))
}

/// `I_r(2x) = Σ_j x^(r+2j) / (j! (r+j)!)`, truncated at `order`; `I_(-r) = I_r`.
pub fn bessel_series(r: i64, order: usize) -> Series {
    let r = r.unsigned_abs() as usize;
    let mut coefficients = vec![Rational::zero(); order + 1];
    let mut j = 0;
    while r + 2 * j <= order {
        coefficients[r + 2 * j] = Rational::new(Count::from(1), factorial(j as u64) * factorial((r + j) as u64));
        j += 1;
    }
    Series::from_coefficients(coefficients, order)
}

/// The walk generating function `det[I_(i-j)(2x) - I_(i+j)(2x)]_(i,j=1..k-1)`,
/// times `e^x` when zero steps are allowed.
pub fn walk_generating_function(k: usize, order: usize, allow_zero_steps: bool) -> Result<Series> {
    check_k(k);
    if k > MAX_GROUP_K {
        return Err(Error::Precondition(format!("series route supports k <= {MAX_GROUP_K}")));
    }
    let dim = k as i64 - 1;
    let matrix: Vec<Vec<Series>> = (1..=dim)
        .map(|i| {
            (1..=dim)
                .map(|j| &bessel_series(i - j, order) - &bessel_series(i + j, order))
                .collect()
        })
        .collect();
    let det = series_determinant(&matrix, order)?;
    Ok(if allow_zero_steps {
        &det * &Series::exp(order)
    } else {
        det
    })
}

/// Entry `n` is `n!` times the coefficient of `x^n` in
/// [`walk_generating_function`], for `n` in `0..=n_max`.
pub fn coefficient_counts(k: usize, n_max: usize, allow_zero_steps: bool) -> Result<Vec<Count>> {
    let gf = walk_generating_function(k, n_max, allow_zero_steps)?;
    (0..=n_max).map(|n| gf.egf_coefficient(n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: i64) -> Count {
        Count::from(v)
    }

    /// Enumerates every step string; independent of the layered DP.
    fn brute_walks(k: usize, n: usize, start: &[i64], zero: bool, mut f: impl FnMut(&[Vec<i64>])) {
        let steps = step_set(k - 1, zero);
        let total = steps.len().pow(n as u32);
        for code in 0..total {
            let mut rest = code;
            let mut p = start.to_vec();
            let mut path = vec![p.clone()];
            for _ in 0..n {
                steps[rest % steps.len()].apply(&mut p);
                rest /= steps.len();
                path.push(p.clone());
            }
            f(&path);
        }
    }

    #[test]
    fn chamber_examples() {
        assert_eq!(chamber_walk_count(2, 3, true), c(4));
        assert_eq!(chamber_walk_count(2, 4, false), c(2));
        assert_eq!(chamber_walk_count(3, 4, false), c(3));
        for k in 2..6 {
            assert_eq!(chamber_walk_count(k, 0, true), c(1));
            assert_eq!(chamber_walk_count(k, 0, false), c(1));
        }
    }

    #[test]
    fn chamber_matches_brute_enumeration() {
        for k in 2..=4 {
            for n in 0..=6 {
                for zero in [false, true] {
                    let a = ChamberPoint::base(k).0;
                    let mut count = 0i64;
                    brute_walks(k, n, &a, zero, |path| {
                        if path.iter().all(|p| is_interior(p)) && path.last() == Some(&a) {
                            count += 1;
                        }
                    });
                    assert_eq!(chamber_walk_count(k, n, zero), c(count), "k={k} n={n} zero={zero}");
                }
            }
        }
    }

    #[test]
    fn unconstrained_examples() {
        assert_eq!(unconstrained_walk_count(2, 2, &[1], &[1], true), c(3));
        assert_eq!(unconstrained_walk_count(2, 2, &[-1], &[1], true), c(1));
        assert_eq!(unconstrained_walk_count(2, 1, &[0], &[5], true), c(0));
        let mut count = 0;
        brute_walks(3, 4, &[2, 1], true, |path| {
            if path.last() == Some(&vec![1, 2]) {
                count += 1;
            }
        });
        assert_eq!(unconstrained_walk_count(3, 4, &[2, 1], &[1, 2], true), c(count));
    }

    #[test]
    fn reflection_examples() {
        let one = ChamberPoint(vec![1]);
        assert_eq!(reflection_count(2, 2, &one, &one, true).unwrap(), c(2));
        assert_eq!(reflection_count(2, 0, &one, &one, true).unwrap(), c(1));
        let a = ChamberPoint(vec![2, 1]);
        assert_eq!(reflection_count(3, 4, &a, &a, false).unwrap(), c(3));
        assert!(matches!(
            reflection_count(3, 2, &ChamberPoint(vec![1, 1]), &a, true),
            Err(Error::NotInterior(_))
        ));
    }

    #[test]
    fn reflection_matches_confined_dp_off_base() {
        let start = ChamberPoint(vec![4, 1]);
        let end = ChamberPoint(vec![3, 2]);
        for zero in [false, true] {
            assert_eq!(
                reflection_counts(3, 10, &start, &end, zero).unwrap(),
                confined_walk_counts(3, 10, &start, &end, zero).unwrap()
            );
        }
    }

    #[test]
    fn bessel_coefficients() {
        let r = |n, d| Rational::new(c(n), c(d));
        let i0 = bessel_series(0, 4);
        assert_eq!(i0.coefficients(), &[r(1, 1), r(0, 1), r(1, 1), r(0, 1), r(1, 4)]);
        let i2 = bessel_series(2, 4);
        assert_eq!(i2.coefficients(), &[r(0, 1), r(0, 1), r(1, 2), r(0, 1), r(1, 6)]);
        assert!(bessel_series(5, 4).is_zero());
        assert_eq!(bessel_series(-3, 7), bessel_series(3, 7));
    }

    #[test]
    fn coefficient_examples() {
        let counts = coefficient_counts(2, 4, false).unwrap();
        assert_eq!(counts[4], c(2));
        assert_eq!(counts[3], c(0));
        assert_eq!(coefficient_counts(3, 4, false).unwrap()[4], c(3));
    }

    #[test]
    fn normalisation_fixed_by_walk_counts() {
        for k in [2, 3] {
            for zero in [false, true] {
                assert_eq!(coefficient_counts(k, 8, zero).unwrap(), chamber_walk_counts(k, 8, zero));
            }
        }
    }

    #[test]
    fn leaving_walks_touch_a_wall_first() {
        // any walk from the base point that ends outside the open chamber has
        // a prefix position with x_2 = 0 or x_1 = x_2
        for n in 0..=6 {
            brute_walks(3, n, &[2, 1], true, |path| {
                if !is_interior(path.last().unwrap()) {
                    assert!(path.iter().any(|p| p[1] == 0 || p[0] == p[1]));
                }
            });
        }
    }
}
