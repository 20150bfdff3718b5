//! Partial matchings on `{1..n}` and their `n;i-j,...` text form.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A labelled partial matching on `{1..n}`: every vertex lies on at most
/// one arc and every arc `(i, j)` has `i < j`. Arcs are kept sorted by
/// their first endpoint.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl Diagram {
    pub fn new(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut arcs: Vec<(usize, usize)> = arcs.into_iter().collect();
        let mut seen = vec![false; n + 1];
        for &(i, j) in &arcs {
            if i == 0 || j > n || i >= j {
                return Err(Error::InvalidDiagram(format!("arc ({i},{j}) is not an arc on 1..{n}")));
            }
            for v in [i, j] {
                if seen[v] {
                    return Err(Error::InvalidDiagram(format!("vertex {v} lies on two arcs")));
                }
                seen[v] = true;
            }
        }
        arcs.sort_unstable();
        Ok(Diagram { n, arcs })
    }

    pub fn empty(n: usize) -> Self {
        Diagram { n, arcs: Vec::new() }
    }

    pub(crate) fn from_sorted_unchecked(n: usize, arcs: Vec<(usize, usize)>) -> Self {
        debug_assert!(arcs.windows(2).all(|w| w[0] < w[1]));
        Diagram { n, arcs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// `partners()[v]` is the other endpoint of the arc at `v`, for `v` in `1..=n`.
    /// Index 0 is unused.
    pub fn partners(&self) -> Vec<Option<usize>> {
        let mut p = vec![None; self.n + 1];
        for &(i, j) in &self.arcs {
            p[i] = Some(j);
            p[j] = Some(i);
        }
        p
    }

    pub fn isolated_count(&self) -> usize {
        self.n - 2 * self.arcs.len()
    }

    /// Arcs of length exactly `d`, i.e. `(i, i + d)`.
    pub fn has_arc_of_length(&self, d: usize) -> bool {
        self.arcs.iter().any(|&(i, j)| j - i == d)
    }

    /// Whether some arc joins neighbours on the `n`-cycle, including `(1, n)`.
    pub fn has_circular_one_arc(&self) -> bool {
        self.has_arc_of_length(1) || (self.n >= 2 && self.arcs.contains(&(1, self.n)))
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.n)?;
        for (idx, (i, j)) in self.arcs.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}-{j}")?;
        }
        Ok(())
    }
}

impl FromStr for Diagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |token: &str| Error::Parse {
            what: "diagram",
            token: token.to_string(),
        };
        let (n_part, arcs_part) = s.split_once(';').ok_or_else(|| bad(s))?;
        let n: usize = n_part.trim().parse().map_err(|_| bad(n_part))?;
        let mut arcs = Vec::new();
        let arcs_part = arcs_part.trim();
        if !arcs_part.is_empty() {
            for token in arcs_part.split(',') {
                let (a, b) = token.trim().split_once('-').ok_or_else(|| bad(token))?;
                let i: usize = a.trim().parse().map_err(|_| bad(token))?;
                let j: usize = b.trim().parse().map_err(|_| bad(token))?;
                arcs.push((i, j));
            }
        }
        Diagram::new(n, arcs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let d = Diagram::new(6, [(2, 5), (1, 3)]).unwrap();
        assert_eq!(d.to_string(), "6;1-3,2-5");
        assert_eq!("6;1-3,2-5".parse::<Diagram>().unwrap(), d);
        assert_eq!("3;".parse::<Diagram>().unwrap(), Diagram::empty(3));
        assert_eq!(Diagram::empty(3).to_string(), "3;");
    }

    #[test]
    fn parse_errors_name_the_token() {
        let err = "4;1-3,2x4".parse::<Diagram>().unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                what: "diagram",
                token: "2x4".into()
            }
        );
        assert!(matches!("abc".parse::<Diagram>(), Err(Error::Parse { .. })));
    }

    #[test]
    fn degree_and_range_checked() {
        assert!(Diagram::new(4, [(1, 3), (3, 4)]).is_err());
        assert!(Diagram::new(4, [(1, 5)]).is_err());
        assert!(Diagram::new(4, [(3, 2)]).is_err());
        assert!(Diagram::new(4, [(0, 2)]).is_err());
    }

    #[test]
    fn short_arc_predicates() {
        let d = Diagram::new(5, [(1, 5), (2, 4)]).unwrap();
        assert!(!d.has_arc_of_length(1));
        assert!(d.has_arc_of_length(2));
        assert!(d.has_circular_one_arc());
        assert_eq!(d.isolated_count(), 1);
        assert_eq!(d.partners()[4], Some(2));
    }
}
