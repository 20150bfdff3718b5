//! Brute-force ground truth over every partial matching on `{1..n}`.

use std::fmt;
use std::str::FromStr;

use crate::bijection::crossing_number;
use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::numbers::Count;

/// Hard cap for [`enumerate_diagrams`]; `I(14)` is about 2.4e7.
pub const ORACLE_MAX_N: usize = 14;

/// Which short arcs a structure must avoid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    /// No 1-arcs `(i, i+1)`.
    Plain,
    /// No 1-arcs modulo `n`, so `(1, n)` is banned as well.
    Circular,
    /// No 1-arcs and no 2-arcs `(i, i+2)`.
    Restricted,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::Plain, Variant::Circular, Variant::Restricted];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Plain => "plain",
            Variant::Circular => "circular",
            Variant::Restricted => "restricted",
        }
    }

    pub fn admits(self, d: &Diagram) -> bool {
        match self {
            Variant::Plain => !d.has_arc_of_length(1),
            Variant::Circular => !d.has_circular_one_arc(),
            Variant::Restricted => !d.has_arc_of_length(1) && !d.has_arc_of_length(2),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Variant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::Parse {
                what: "variant",
                token: s.to_string(),
            })
    }
}

/// A structure class: variant plus crossing parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VariantSpec {
    pub variant: Variant,
    pub k: usize,
}

impl VariantSpec {
    /// The counting formulas for `Restricted` need `k > 2`.
    pub fn new(variant: Variant, k: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::Precondition(format!("k = {k} must be at least 2")));
        }
        if variant == Variant::Restricted && k <= 2 {
            return Err(Error::Precondition("restricted structures need k > 2".into()));
        }
        Ok(VariantSpec { variant, k })
    }
}

/// Streams every partial matching on `{1..n}` once, in lexicographic order
/// of the sorted arc list (the empty diagram first).
pub fn enumerate_diagrams(n: usize) -> Result<Diagrams> {
    if n > ORACLE_MAX_N {
        return Err(Error::OracleCap { n, cap: ORACLE_MAX_N });
    }
    Ok(Diagrams {
        n,
        arcs: Vec::new(),
        used: vec![false; n + 2],
        started: false,
        done: false,
    })
}

/// Iterator returned by [`enumerate_diagrams`]. Preorder DFS over
/// increasing arc sequences with pairwise disjoint endpoints.
pub struct Diagrams {
    n: usize,
    arcs: Vec<(usize, usize)>,
    used: Vec<bool>,
    started: bool,
    done: bool,
}

impl Diagrams {
    /// First free arc strictly after `after` in lexicographic order.
    fn next_arc(&self, after: (usize, usize)) -> Option<(usize, usize)> {
        let (mut i, mut j) = (after.0, after.1 + 1);
        while i <= self.n {
            if i >= 1 && !self.used[i] {
                j = j.max(i + 1);
                while j <= self.n {
                    if !self.used[j] {
                        return Some((i, j));
                    }
                    j += 1;
                }
            }
            i += 1;
            j = i + 1;
        }
        None
    }

    fn push(&mut self, arc: (usize, usize)) {
        self.used[arc.0] = true;
        self.used[arc.1] = true;
        self.arcs.push(arc);
    }

    fn pop(&mut self) -> Option<(usize, usize)> {
        let arc = self.arcs.pop()?;
        self.used[arc.0] = false;
        self.used[arc.1] = false;
        Some(arc)
    }
}

impl Iterator for Diagrams {
    type Item = Diagram;

    fn next(&mut self) -> Option<Diagram> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(Diagram::empty(self.n));
        }
        // descend to the first child, otherwise move to the next sibling of
        // the deepest ancestor that has one
        let last = self.arcs.last().copied().unwrap_or((0, 0));
        if let Some(arc) = self.next_arc(last) {
            self.push(arc);
            return Some(Diagram::from_sorted_unchecked(self.n, self.arcs.clone()));
        }
        while let Some(arc) = self.pop() {
            if let Some(sibling) = self.next_arc(arc) {
                self.push(sibling);
                return Some(Diagram::from_sorted_unchecked(self.n, self.arcs.clone()));
            }
        }
        self.done = true;
        None
    }
}

/// Diagrams on `n` vertices with crossing number below `k` that avoid the
/// variant's short arcs, optionally with exactly `isolated` unpaired vertices.
pub fn oracle_count(n: usize, k: usize, variant: Variant, isolated: Option<usize>) -> Result<Count> {
    let mut count = 0u64;
    for d in enumerate_diagrams(n)? {
        if isolated.is_some_and(|l| d.isolated_count() != l) {
            continue;
        }
        if variant.admits(&d) && crossing_number(&d) < k {
            count += 1;
        }
    }
    Ok(Count::from(count))
}

/// Tallies of one pass over all diagrams on `n` vertices, bucketed by
/// variant membership, crossing number and isolated-vertex count.
#[derive(Clone, Debug)]
pub struct OracleProfile {
    n: usize,
    // buckets[variant][crossing][isolated]
    buckets: [Vec<Vec<u64>>; 3],
}

impl OracleProfile {
    pub fn build(n: usize) -> Result<Self> {
        let empty = || vec![vec![0u64; n + 1]; n / 2 + 1];
        let mut buckets = [empty(), empty(), empty()];
        for d in enumerate_diagrams(n)? {
            let crossing = crossing_number(&d);
            let l = d.isolated_count();
            for (slot, variant) in Variant::ALL.into_iter().enumerate() {
                if variant.admits(&d) {
                    buckets[slot][crossing][l] += 1;
                }
            }
        }
        Ok(OracleProfile { n, buckets })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Same as [`oracle_count`] for this profile's `n`.
    pub fn count(&self, k: usize, variant: Variant, isolated: Option<usize>) -> Count {
        let slot = Variant::ALL.iter().position(|&v| v == variant).expect("known variant");
        let total: u64 = self.buckets[slot]
            .iter()
            .take(k)
            .map(|by_l| match isolated {
                Some(l) => by_l.get(l).copied().unwrap_or(0),
                None => by_l.iter().sum(),
            })
            .sum();
        Count::from(total)
    }
}

/// Number of vertex-disjoint selections of `b1` 1-arcs and `b2` 2-arcs on
/// `{1..n}`, by enumerating subsets of candidate arcs.
pub fn brute_short_arc_selections(n: usize, b1: usize, b2: usize) -> u64 {
    let mut ones: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
    let twos: Vec<(usize, usize)> = (1..n.saturating_sub(1)).map(|i| (i, i + 2)).collect();
    let split = ones.len();
    ones.extend(twos);
    count_disjoint(&ones, split, b1, b2, n)
}

/// Number of ways to pick `b` pairwise disjoint edges of the `n`-cycle,
/// treating arcs as unordered label pairs (so `n = 2` has the single arc
/// `(1,2)` and `n = 1` has none).
pub fn brute_cycle_selections(n: usize, b: usize) -> u64 {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
    if n >= 3 {
        edges.push((1, n));
    }
    let len = edges.len();
    count_disjoint(&edges, len, b, 0, n)
}

fn count_disjoint(candidates: &[(usize, usize)], split: usize, b1: usize, b2: usize, n: usize) -> u64 {
    fn go(candidates: &[(usize, usize)], split: usize, idx: usize, b1: usize, b2: usize, used: &mut [bool]) -> u64 {
        if b1 == 0 && b2 == 0 {
            return 1;
        }
        if idx == candidates.len() {
            return 0;
        }
        let mut total = go(candidates, split, idx + 1, b1, b2, used);
        let (i, j) = candidates[idx];
        let need = if idx < split { b1 } else { b2 };
        if need > 0 && !used[i] && !used[j] {
            used[i] = true;
            used[j] = true;
            total += if idx < split {
                go(candidates, split, idx + 1, b1 - 1, b2, used)
            } else {
                go(candidates, split, idx + 1, b1, b2 - 1, used)
            };
            used[i] = false;
            used[j] = false;
        }
        total
    }
    go(candidates, split, 0, b1, b2, &mut vec![false; n + 1])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn involutions(n: usize) -> u64 {
        let mut a = vec![1u64, 1];
        for m in 2..=n {
            a.push(a[m - 1] + (m as u64 - 1) * a[m - 2]);
        }
        a[n]
    }

    #[test]
    fn stream_sizes_are_involution_numbers() {
        assert_eq!(enumerate_diagrams(0).unwrap().count(), 1);
        for n in 0..=10 {
            assert_eq!(enumerate_diagrams(n).unwrap().count() as u64, involutions(n), "n={n}");
        }
        assert_eq!(enumerate_diagrams(8).unwrap().count(), 764);
    }

    #[test]
    fn small_stream_is_lexicographic() {
        let all: Vec<String> = enumerate_diagrams(3).unwrap().map(|d| d.to_string()).collect();
        assert_eq!(all, ["3;", "3;1-2", "3;1-3", "3;2-3"]);
        let four: Vec<Diagram> = enumerate_diagrams(4).unwrap().collect();
        assert!(four.windows(2).all(|w| w[0].arcs() < w[1].arcs()));
        assert_eq!(four.len(), 10);
    }

    #[test]
    fn deterministic_and_distinct() {
        let a: Vec<Diagram> = enumerate_diagrams(7).unwrap().collect();
        let b: Vec<Diagram> = enumerate_diagrams(7).unwrap().collect();
        assert_eq!(a, b);
        let set: std::collections::HashSet<_> = a.iter().collect();
        assert_eq!(set.len(), a.len());
    }

    #[test]
    fn cap_enforced() {
        assert!(matches!(
            enumerate_diagrams(15),
            Err(Error::OracleCap { n: 15, cap: 14 })
        ));
        assert!(oracle_count(15, 3, Variant::Plain, None).is_err());
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(oracle_count(4, 3, Variant::Plain, None).unwrap(), Count::from(5));
        assert_eq!(oracle_count(5, 3, Variant::Restricted, None).unwrap(), Count::from(5));
        assert_eq!(oracle_count(4, 2, Variant::Plain, Some(2)).unwrap(), Count::from(3));
        assert_eq!(oracle_count(4, 3, Variant::Circular, None).unwrap(), Count::from(4));
        // restricted with k = 2 is still answerable here
        assert!(oracle_count(6, 2, Variant::Restricted, None).is_ok());
    }

    #[test]
    fn profile_matches_direct_counts() {
        let profile = OracleProfile::build(7).unwrap();
        for k in 2..=4 {
            for variant in Variant::ALL {
                assert_eq!(
                    profile.count(k, variant, None),
                    oracle_count(7, k, variant, None).unwrap()
                );
                for l in 0..=7 {
                    assert_eq!(
                        profile.count(k, variant, Some(l)),
                        oracle_count(7, k, variant, Some(l)).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn selection_brute_force() {
        assert_eq!(brute_short_arc_selections(5, 0, 1), 3);
        assert_eq!(brute_short_arc_selections(6, 1, 1), 6);
        assert_eq!(brute_short_arc_selections(4, 2, 0), 1);
        assert_eq!(brute_cycle_selections(4, 1), 4);
        assert_eq!(brute_cycle_selections(5, 2), 5);
        assert_eq!(brute_cycle_selections(2, 1), 1);
        assert_eq!(brute_cycle_selections(1, 0), 1);
        assert_eq!(brute_cycle_selections(1, 1), 0);
    }

    #[test]
    fn variant_parsing() {
        assert_eq!("circular".parse::<Variant>().unwrap(), Variant::Circular);
        assert!("linear".parse::<Variant>().is_err());
        assert!(VariantSpec::new(Variant::Restricted, 2).is_err());
        assert!(VariantSpec::new(Variant::Restricted, 3).is_ok());
        assert!(VariantSpec::new(Variant::Plain, 1).is_err());
    }
}
