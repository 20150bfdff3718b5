//! Inclusion-exclusion from raw matching counts `f_k(n, l)` to structure
//! counts: plain (no 1-arcs), circular (no 1-arcs modulo `n`) and
//! restricted (no 1- or 2-arcs).
//!
//! The raw counts come from a [`WalkTable`], which can be filled by any of the
//! three walk routes. The free functions at the bottom use a process-wide
//! cache filled by the chamber DP.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::numbers::{binomial, Count};
use crate::oracle::{brute_cycle_selections, Variant};
use crate::walk::ChamberPoint;
use crate::walks::{chamber_walk_counts, coefficient_counts, reflection_counts};

/// How `f_k(m, 0)` (perfect matchings with crossing number below `k`) is obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WalkRoute {
    Chamber,
    Reflection,
    Series,
}

/// `f_k(m, 0)` for `m = 0..=n_max`, plus the formulas built on top of it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkTable {
    k: usize,
    perfect: Vec<Count>,
}

fn table_k_check(k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::Precondition(format!("k = {k} must be at least 2")));
    }
    Ok(())
}

fn nonnegative(value: Count, what: impl FnOnce() -> String) -> Result<Count> {
    if value.is_negative() {
        return Err(Error::NegativeCount(format!("{} = {value}", what())));
    }
    Ok(value)
}

impl WalkTable {
    pub fn build(k: usize, n_max: usize, route: WalkRoute) -> Result<Self> {
        table_k_check(k)?;
        let perfect = match route {
            WalkRoute::Chamber => chamber_walk_counts(k, n_max, false),
            WalkRoute::Reflection => {
                let a = ChamberPoint::base(k);
                reflection_counts(k, n_max, &a, &a, false)?
            }
            WalkRoute::Series => coefficient_counts(k, n_max, false)?,
        };
        Ok(WalkTable { k, perfect })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n_max(&self) -> usize {
        self.perfect.len() - 1
    }

    fn perfect(&self, m: usize) -> &Count {
        assert!(
            m <= self.n_max(),
            "walk table covers n <= {}, asked for {m}",
            self.n_max()
        );
        &self.perfect[m]
    }

    /// `f_k(n, l) = C(n, l) f_k(n - l, 0)`: matchings with exactly `l` isolated vertices.
    pub fn f(&self, n: usize, l: usize) -> Count {
        if l > n || (n - l) % 2 == 1 {
            return Count::zero();
        }
        binomial(n as i64, l as i64) * self.perfect(n - l)
    }

    /// `Σ_l f_k(n, l)`, all matchings with crossing number below `k`.
    pub fn f_total(&self, n: usize) -> Count {
        (0..=n).map(|l| self.f(n, l)).sum()
    }

    /// Structures with exactly `l` isolated vertices and no 1-arcs.
    pub fn s(&self, n: usize, l: usize) -> Result<Count> {
        let value = (0..=n / 2)
            .map(|b| signed(b) * lambda_linear(n as i64, b as i64) * self.f(n - 2 * b, l))
            .sum();
        nonnegative(value, || format!("S_{}({n},{l})", self.k))
    }

    pub fn s_total(&self, n: usize) -> Result<Count> {
        let value = (0..=n / 2)
            .map(|b| signed(b) * lambda_linear(n as i64, b as i64) * self.f_total(n - 2 * b))
            .sum();
        nonnegative(value, || format!("S_{}({n})", self.k))
    }

    pub fn s_circular(&self, n: usize, l: usize) -> Result<Count> {
        let value = (0..=n / 2)
            .map(|b| signed(b) * lambda_circular(n as i64, b as i64) * self.f(n - 2 * b, l))
            .sum();
        nonnegative(value, || format!("S^c_{}({n},{l})", self.k))
    }

    pub fn s_circular_total(&self, n: usize) -> Result<Count> {
        let value = (0..=n / 2)
            .map(|b| signed(b) * lambda_circular(n as i64, b as i64) * self.f_total(n - 2 * b))
            .sum();
        nonnegative(value, || format!("S^c_{}({n})", self.k))
    }

    fn restricted_sum(&self, n: usize, mut f: impl FnMut(usize) -> Count) -> Result<Count> {
        if self.k <= 2 {
            return Err(Error::Precondition("restricted structures need k > 2".into()));
        }
        let mut value = Count::zero();
        for b1 in 0..=n / 2 {
            for b2 in 0..=(n / 2 - b1) {
                let lambda = lambda_restricted(n as i64, b1 as i64, b2 as i64);
                if lambda.is_zero() {
                    continue;
                }
                value += signed(b1 + b2) * lambda * f(n - 2 * (b1 + b2));
            }
        }
        Ok(value)
    }

    /// Structures with exactly `l` isolated vertices, no 1-arcs and no 2-arcs. Needs `k > 2`.
    pub fn s_restricted(&self, n: usize, l: usize) -> Result<Count> {
        let value = self.restricted_sum(n, |m| self.f(m, l))?;
        nonnegative(value, || format!("S^r_{}({n},{l})", self.k))
    }

    pub fn s_restricted_total(&self, n: usize) -> Result<Count> {
        let value = self.restricted_sum(n, |m| self.f_total(m))?;
        nonnegative(value, || format!("S^r_{}({n})", self.k))
    }

    /// Dispatches on the variant; `isolated = None` sums over all `l`.
    pub fn structures(&self, variant: Variant, n: usize, isolated: Option<usize>) -> Result<Count> {
        match (variant, isolated) {
            (Variant::Plain, Some(l)) => self.s(n, l),
            (Variant::Plain, None) => self.s_total(n),
            (Variant::Circular, Some(l)) => self.s_circular(n, l),
            (Variant::Circular, None) => self.s_circular_total(n),
            (Variant::Restricted, Some(l)) => self.s_restricted(n, l),
            (Variant::Restricted, None) => self.s_restricted_total(n),
        }
    }
}

fn signed(b: usize) -> Count {
    if b.is_multiple_of(2) {
        Count::from(1)
    } else {
        Count::from(-1)
    }
}

/// Ways to choose `b` disjoint 1-arcs on `{1..n}`: `C(n - b, b)`.
pub fn lambda_linear(n: i64, b: i64) -> Count {
    binomial(n - b, b)
}

/// Ways to choose `b` disjoint 1-arcs on the `n`-cycle, `(n, 1)` included:
/// `C((n-2) - (b-1), b-1) + C(n - b, b)` for `n >= 3`. For `n <= 2` the
/// cycle degenerates and the count is taken from direct enumeration
/// (`(1,2)` is the only arc on two vertices).
pub fn lambda_circular(n: i64, b: i64) -> Count {
    if n < 0 || b < 0 {
        return Count::zero();
    }
    if n <= 2 {
        return Count::from(brute_cycle_selections(n as usize, b as usize));
    }
    binomial((n - 2) - (b - 1), b - 1) + binomial(n - b, b)
}

type LambdaKey = (i64, i64, i64);

fn lambda_cache() -> &'static RwLock<HashMap<LambdaKey, Count>> {
    static CACHE: OnceLock<RwLock<HashMap<LambdaKey, Count>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Ways to choose `b1` 1-arcs and `b2` 2-arcs on `{1..n}`, all pairwise
/// vertex-disjoint, by the recursion on whether `(1,2)`, `(1,3)` and `(2,4)`
/// are chosen.
pub fn lambda_restricted(n: i64, b1: i64, b2: i64) -> Count {
    if n < 0 || b1 < 0 || b2 < 0 || 2 * (b1 + b2) > n {
        return Count::zero();
    }
    if b1 == 0 && b2 == 0 {
        return Count::from(1);
    }
    if let Some(v) = lambda_cache().read().expect("lambda cache poisoned").get(&(n, b1, b2)) {
        return v.clone();
    }
    let mut local = HashMap::new();
    let value = lambda_recurse(n, b1, b2, &mut local);
    let mut cache = lambda_cache().write().expect("lambda cache poisoned");
    for (key, v) in local {
        cache.entry(key).or_insert(v);
    }
    value
}

fn lambda_recurse(n: i64, b1: i64, b2: i64, memo: &mut HashMap<LambdaKey, Count>) -> Count {
    if n < 0 || b1 < 0 || b2 < 0 || 2 * (b1 + b2) > n {
        return Count::zero();
    }
    if b1 == 0 && b2 == 0 {
        return Count::from(1);
    }
    if let Some(v) = memo.get(&(n, b1, b2)) {
        return v.clone();
    }
    let value = lambda_recurse(n - 2, b1 - 1, b2, memo)
        + lambda_recurse(n - 1, b1, b2, memo)
        + lambda_recurse(n - 4, b1, b2 - 2, memo)
        + lambda_recurse(n - 3, b1, b2 - 1, memo);
    memo.insert((n, b1, b2), value.clone());
    value
}

fn table_cache() -> &'static RwLock<HashMap<usize, Arc<WalkTable>>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<WalkTable>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Shared chamber-DP table for `k` covering at least `n`. Tables only grow;
/// a reader never sees a table shorter than one it already obtained.
pub fn cached_table(k: usize, n: usize) -> Result<Arc<WalkTable>> {
    table_k_check(k)?;
    if let Some(t) = table_cache().read().expect("table cache poisoned").get(&k) {
        if t.n_max() >= n {
            return Ok(Arc::clone(t));
        }
    }
    // round up so that sweeps over n do not rebuild every step
    let n_max = n.max(16).next_power_of_two();
    let table = Arc::new(WalkTable::build(k, n_max, WalkRoute::Chamber)?);
    let mut cache = table_cache().write().expect("table cache poisoned");
    let entry = cache.entry(k).or_insert_with(|| Arc::clone(&table));
    if entry.n_max() < table.n_max() {
        *entry = Arc::clone(&table);
    }
    Ok(Arc::clone(entry))
}

fn with_table<T>(k: usize, n: usize, f: impl FnOnce(&WalkTable) -> Result<T>) -> Result<T> {
    f(cached_table(k, n)?.as_ref())
}

/// `f_k(n, l)`.
///
/// # Panics
/// When `k < 2`.
pub fn f(k: usize, n: usize, l: usize) -> Count {
    with_table(k, n, |t| Ok(t.f(n, l))).expect("k >= 2")
}

/// # Panics
/// When `k < 2`.
pub fn f_total(k: usize, n: usize) -> Count {
    with_table(k, n, |t| Ok(t.f_total(n))).expect("k >= 2")
}

pub fn s(k: usize, n: usize, l: usize) -> Result<Count> {
    with_table(k, n, |t| t.s(n, l))
}

pub fn s_total(k: usize, n: usize) -> Result<Count> {
    with_table(k, n, |t| t.s_total(n))
}

pub fn s_circular(k: usize, n: usize, l: usize) -> Result<Count> {
    with_table(k, n, |t| t.s_circular(n, l))
}

pub fn s_circular_total(k: usize, n: usize) -> Result<Count> {
    with_table(k, n, |t| t.s_circular_total(n))
}

pub fn s_restricted(k: usize, n: usize, l: usize) -> Result<Count> {
    with_table(k, n, |t| t.s_restricted(n, l))
}

pub fn s_restricted_total(k: usize, n: usize) -> Result<Count> {
    with_table(k, n, |t| t.s_restricted_total(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{brute_short_arc_selections, oracle_count};

    fn c(v: i64) -> Count {
        Count::from(v)
    }

    #[test]
    fn f_examples() {
        assert_eq!(f(2, 4, 2), c(6));
        assert_eq!(f(3, 4, 0), c(3));
        for k in 2..5 {
            for n in 0..8 {
                assert_eq!(f(k, n, n), c(1));
            }
        }
        assert_eq!(f(3, 5, 0), c(0));
        assert_eq!(f(3, 3, 5), c(0));
    }

    #[test]
    fn f_total_examples() {
        assert_eq!(f_total(3, 3), c(4));
        assert_eq!(f_total(2, 0), c(1));
        for k in 2..6 {
            assert_eq!(f_total(k, 1), c(1));
        }
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(lambda_linear(4, 2), c(1));
        assert_eq!(lambda_linear(7, 0), c(1));
        for n in 1..10 {
            assert_eq!(lambda_linear(n, 1), c(n - 1));
        }
        assert_eq!(lambda_circular(4, 1), c(4));
        assert_eq!(lambda_circular(5, 2), c(5));
        for n in 3..10 {
            assert_eq!(lambda_circular(n, 0), c(1));
        }
        assert_eq!(lambda_circular(2, 1), c(1));
        assert_eq!(lambda_circular(2, 0), c(1));
        assert_eq!(lambda_circular(1, 1), c(0));
        assert_eq!(lambda_restricted(5, 0, 1), c(3));
        assert_eq!(lambda_restricted(6, 1, 1), c(6));
        for n in 0..14 {
            for b1 in 0..6 {
                assert_eq!(lambda_restricted(n, b1, 0), binomial(n - b1, b1));
            }
            if n >= 2 {
                assert_eq!(lambda_restricted(n, 0, 1), c(n - 2));
            }
        }
    }

    #[test]
    fn lambda_restricted_matches_selection_oracle() {
        for n in 0..=10 {
            for b1 in 0..=4 {
                for b2 in 0..=(4 - b1) {
                    assert_eq!(
                        lambda_restricted(n as i64, b1 as i64, b2 as i64),
                        Count::from(brute_short_arc_selections(n, b1, b2)),
                        "n={n} b1={b1} b2={b2}"
                    );
                }
            }
        }
    }

    #[test]
    fn structure_examples() {
        assert_eq!(s(3, 4, 4).unwrap(), c(1));
        assert_eq!(s(2, 4, 2).unwrap(), c(3));
        assert_eq!(s(3, 4, 0).unwrap(), c(1));
        assert_eq!(s_total(3, 7).unwrap(), c(105));
        assert_eq!(s_total(3, 15).unwrap(), c(1_769_500));
        assert_eq!(s_total(2, 4).unwrap(), c(4));
        assert_eq!(s_circular_total(3, 4).unwrap(), c(4));
        assert_eq!(s_restricted_total(3, 5).unwrap(), c(5));
        assert_eq!(s_restricted_total(3, 15).unwrap(), c(482_214));
        for n in 0..9 {
            assert_eq!(s_circular(3, n, n).unwrap(), c(1));
            assert_eq!(s_restricted(3, n, n).unwrap(), c(1));
        }
    }

    #[test]
    fn circular_never_exceeds_plain() {
        for n in 3..20 {
            assert!(s_circular_total(3, n).unwrap() <= s_total(3, n).unwrap());
        }
    }

    #[test]
    fn restricted_needs_k_above_two() {
        assert!(matches!(s_restricted(2, 6, 0), Err(Error::Precondition(_))));
        assert!(matches!(s_restricted_total(2, 6), Err(Error::Precondition(_))));
    }

    #[test]
    fn odd_defect_vanishes_and_isolated_sum() {
        for k in 2..5 {
            for n in 0..14 {
                let mut total = Count::zero();
                for l in 0..=n {
                    let v = s(k, n, l).unwrap();
                    if (n - l) % 2 == 1 {
                        assert!(v.is_zero());
                    }
                    total += v;
                }
                assert_eq!(total, s_total(k, n).unwrap());
            }
        }
    }

    #[test]
    fn small_oracle_agreement() {
        for k in 2..=4 {
            for n in 0..=7 {
                assert_eq!(
                    s_total(k, n).unwrap(),
                    oracle_count(n, k, Variant::Plain, None).unwrap()
                );
                assert_eq!(
                    s_circular_total(k, n).unwrap(),
                    oracle_count(n, k, Variant::Circular, None).unwrap()
                );
            }
        }
    }

    #[test]
    fn routes_fill_identical_tables() {
        for k in 2..=4 {
            let chamber = WalkTable::build(k, 12, WalkRoute::Chamber).unwrap();
            assert_eq!(WalkTable::build(k, 12, WalkRoute::Reflection).unwrap(), chamber);
            assert_eq!(WalkTable::build(k, 12, WalkRoute::Series).unwrap(), chamber);
        }
    }

    #[test]
    fn negative_results_are_errors() {
        let broken = WalkTable {
            k: 3,
            perfect: vec![c(1), c(0), c(0)],
        };
        // S(2, 0) = f(2, 0) - C(1, 1) f(0, 0) = 0 - 1
        assert!(matches!(broken.s(2, 0), Err(Error::NegativeCount(_))));
    }
}
