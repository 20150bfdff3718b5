//! Partial matchings <-> oscillating tableaux <-> chamber walks.
//!
//! Both directions produce the same [`TableauTrace`]: the standard tableaux
//! `T_0, ..., T_n` whose shapes form the oscillating tableau. The walk's
//! position at step `i` is `(k-1, ..., 1)` plus the row lengths of `T_i`.
//!
//! * diagram -> trace runs right to left: at a terminus `i` of `(j, i)` the
//!   origin `j` is row-inserted, at an origin the (maximal) entry `i` is
//!   deleted.
//! * trace -> diagram runs left to right: a new square receives the label
//!   `i`, a removed square is unbumped, and the extracted value `j` becomes
//!   the origin of the arc `(j, i)`.
//!
//! The number of rows of `T_i` is the longest decreasing subsequence of the
//! origins waiting at `i`, which is why the maximal row count equals the
//! crossing number.

use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::tableau::{Shape, Tableau};
use crate::walk::{ChamberPoint, Step, Walk};

/// Schensted row insertion of `value` into `t`.
pub fn rsk_insert(t: &Tableau, value: u32) -> Result<Tableau> {
    if t.contains(value) {
        return Err(Error::DuplicateValue(value));
    }
    let mut out = t.clone();
    let rows = out.rows_mut();
    let mut carry = value;
    for row in rows.iter_mut() {
        // smallest entry greater than `carry`
        let pos = row.partition_point(|&e| e < carry);
        if pos == row.len() {
            row.push(carry);
            return Ok(out);
        }
        carry = std::mem::replace(&mut row[pos], carry);
    }
    rows.push(vec![carry]);
    Ok(out)
}

/// Inverse of [`rsk_insert`]: returns the unique `(T, j)` with
/// `rsk_insert(T, j) == t_prev` and `T` of shape `target`.
pub fn rsk_reverse(t_prev: &Tableau, target: &Shape) -> Result<(Tableau, u32)> {
    let from = t_prev.shape();
    let not_corner = || Error::NotACorner {
        source_shape: from.rows().to_vec(),
        target: target.rows().to_vec(),
    };
    if target.size() + 1 != from.size() {
        return Err(not_corner());
    }
    let padded_target = target.padded(from.row_count());
    let diffs: Vec<usize> = (0..from.row_count())
        .filter(|&r| from.rows()[r] != padded_target[r])
        .collect();
    if target.row_count() > from.row_count() || diffs.len() != 1 || from.rows()[diffs[0]] != padded_target[diffs[0]] + 1
    {
        return Err(not_corner());
    }
    let row = diffs[0];

    let mut out = t_prev.clone();
    let rows = out.rows_mut();
    let mut carry = rows[row].pop().expect("corner row is nonempty");
    if rows[row].is_empty() {
        rows.pop();
    }
    for r in (0..row).rev() {
        // largest entry smaller than `carry`; exists because columns increase
        let pos = rows[r].partition_point(|&e| e < carry) - 1;
        carry = std::mem::replace(&mut rows[r][pos], carry);
    }
    Ok((out, carry))
}

/// `T_0, ..., T_n`, with `T_0` and `T_n` empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableauTrace {
    tableaux: Vec<Tableau>,
}

impl TableauTrace {
    pub fn tableaux(&self) -> &[Tableau] {
        &self.tableaux
    }

    pub fn shapes(&self) -> Vec<Shape> {
        self.tableaux.iter().map(Tableau::shape).collect()
    }

    pub fn max_rows(&self) -> usize {
        self.tableaux.iter().map(|t| t.rows().len()).max().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.tableaux.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Steps `μ^(i-1) -> μ^i`.
    pub fn steps(&self) -> Vec<Step> {
        self.tableaux
            .windows(2)
            .map(|w| {
                let (before, after) = (w[0].rows(), w[1].rows());
                let len = before.len().max(after.len());
                let row_len = |rows: &[Vec<u32>], r: usize| rows.get(r).map_or(0, Vec::len);
                for r in 0..len {
                    let (b, a) = (row_len(before, r), row_len(after, r));
                    if a > b {
                        return Step::Up(r + 1);
                    }
                    if a < b {
                        return Step::Down(r + 1);
                    }
                }
                Step::Stay
            })
            .collect()
    }

    /// Shapes as the bracketed row-length lists used by the CLI, e.g. `[],[1],[]`.
    pub fn shape_sequence_string(&self) -> String {
        self.shapes()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// The oscillating tableau of `d`, built right to left by RSK insertion.
pub fn diagram_trace(d: &Diagram) -> TableauTrace {
    let n = d.n();
    let partners = d.partners();
    let mut tableaux = vec![Tableau::empty(); n + 1];
    for i in (1..=n).rev() {
        let current = &tableaux[i];
        let previous = match partners[i] {
            None => current.clone(),
            Some(j) if j < i => rsk_insert(current, j as u32).expect("origins are distinct"),
            Some(_) => {
                // `i` is an origin and the largest entry, hence at the end of the last row holding it
                let mut rows = current.rows().to_vec();
                let r = rows
                    .iter()
                    .position(|row| row.last() == Some(&(i as u32)))
                    .expect("origin is present at a corner");
                rows[r].pop();
                if rows[r].is_empty() {
                    rows.truncate(r);
                }
                Tableau::from_rows_unchecked(rows)
            }
        };
        tableaux[i - 1] = previous;
    }
    TableauTrace { tableaux }
}

/// Maximal number of rows over the oscillating tableau of `d`.
pub fn max_shape_rows(d: &Diagram) -> usize {
    diagram_trace(d).max_rows()
}

/// The chamber walk of a diagram with crossing number below `k`.
pub fn diagram_to_walk(k: usize, d: &Diagram) -> Result<Walk> {
    if k < 2 {
        return Err(Error::Precondition(format!("k = {k} must be at least 2")));
    }
    let trace = diagram_trace(d);
    let rows = trace.max_rows();
    if rows >= k {
        return Err(Error::CrossingTooLarge { crossing: rows, k });
    }
    Walk::from_base(k, trace.steps())
}

/// Rebuilds the tableau sequence of a walk left to right. The walk must
/// start and end at the base point and stay strictly inside the chamber.
pub fn walk_trace(w: &Walk) -> Result<(TableauTrace, Diagram)> {
    let k = w.k();
    let base = ChamberPoint::base(k).0;
    if w.start() != base.as_slice() {
        return Err(Error::NotClosed);
    }
    let n = w.len();
    let mut tableaux = Vec::with_capacity(n + 1);
    let mut arcs = Vec::new();
    let mut current = Tableau::empty();
    tableaux.push(current.clone());
    let mut position = base.clone();
    for (idx, step) in w.steps().iter().enumerate() {
        let i = idx + 1;
        step.apply(&mut position);
        if !ChamberPoint(position.clone()).is_interior() {
            return Err(Error::LeavesChamber { step: i });
        }
        current = match *step {
            Step::Stay => current,
            Step::Up(r) => {
                let mut rows = current.rows().to_vec();
                if r > rows.len() {
                    rows.push(Vec::new());
                }
                rows[r - 1].push(i as u32);
                Tableau::from_rows_unchecked(rows)
            }
            Step::Down(_) => {
                let shape: Vec<usize> = position
                    .iter()
                    .zip(&base)
                    .map(|(x, a)| (x - a) as usize)
                    .filter(|&len| len > 0)
                    .collect();
                let target = Shape::new(shape).expect("interior points give partitions");
                let (t, j) = rsk_reverse(&current, &target)?;
                arcs.push((j as usize, i));
                t
            }
        };
        tableaux.push(current.clone());
    }
    if position != base {
        return Err(Error::NotClosed);
    }
    arcs.sort_unstable();
    Ok((TableauTrace { tableaux }, Diagram::from_sorted_unchecked(n, arcs)))
}

/// The unique diagram whose walk is `w`.
pub fn walk_to_diagram(w: &Walk) -> Result<Diagram> {
    walk_trace(w).map(|(_, d)| d)
}

/// Largest `m` such that `m` arcs satisfy `i_1 < ... < i_m < j_1 < ... < j_m`.
///
/// A mutually crossing family is threaded by the cut just after its last
/// origin, and among arcs spanning a cut the crossing families are exactly
/// the increasing runs of termini when ordered by origin.
pub fn crossing_number(d: &Diagram) -> usize {
    let arcs = d.arcs();
    let mut best = 0;
    for &(cut, _) in arcs {
        // longest strictly increasing subsequence of termini among arcs spanning (cut, cut + 1)
        let mut tails: Vec<usize> = Vec::new();
        for &(i, j) in arcs {
            if i <= cut && cut < j {
                let pos = tails.partition_point(|&t| t < j);
                if pos == tails.len() {
                    tails.push(j);
                } else {
                    tails[pos] = j;
                }
            }
        }
        best = best.max(tails.len());
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tab(rows: &[&[u32]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn insertion_replay() {
        let mut t = Tableau::empty();
        let mut history = Vec::new();
        for v in [5, 2, 4, 1, 6, 3] {
            t = rsk_insert(&t, v).unwrap();
            history.push(t.clone());
        }
        assert_eq!(history[0], tab(&[&[5]]));
        assert_eq!(history[1], tab(&[&[2], &[5]]));
        assert_eq!(history[3], tab(&[&[1, 4], &[2], &[5]]));
        assert_eq!(history[4], tab(&[&[1, 4, 6], &[2], &[5]]));
        assert_eq!(t, tab(&[&[1, 3, 6], &[2, 4], &[5]]));
        assert!(Tableau::new(t.rows().to_vec()).is_ok());
    }

    #[test]
    fn insertion_rejects_duplicates() {
        assert_eq!(rsk_insert(&tab(&[&[1, 3]]), 3), Err(Error::DuplicateValue(3)));
    }

    #[test]
    fn reverse_examples() {
        let (t, v) = rsk_reverse(&tab(&[&[1, 4, 6], &[2], &[5]]), &Shape::new(vec![2, 1, 1]).unwrap()).unwrap();
        assert_eq!((t, v), (tab(&[&[1, 4], &[2], &[5]]), 6));
        let (t, v) = rsk_reverse(&tab(&[&[2], &[5]]), &Shape::new(vec![1]).unwrap()).unwrap();
        assert_eq!((t, v), (tab(&[&[5]]), 2));
    }

    #[test]
    fn reverse_rejects_non_corners() {
        let t = tab(&[&[1, 3, 6], &[2, 4], &[5]]);
        for bad in [vec![3, 2, 1], vec![3, 1], vec![2, 2, 2], vec![4, 1], vec![3, 1, 1, 1]] {
            let shape = Shape::new(bad).unwrap();
            assert!(
                matches!(rsk_reverse(&t, &shape), Err(Error::NotACorner { .. })),
                "{shape}"
            );
        }
    }

    #[test]
    fn walk_examples() {
        let w = diagram_to_walk(2, &Diagram::empty(3)).unwrap();
        assert_eq!(w.steps(), &[Step::Stay; 3]);
        assert!(w.positions().iter().all(|p| p == &vec![1]));

        let w = diagram_to_walk(2, &Diagram::new(2, [(1, 2)]).unwrap()).unwrap();
        assert_eq!(w.to_string(), "+1,-1");
        assert_eq!(w.positions(), vec![vec![1], vec![2], vec![1]]);

        let d = Diagram::new(4, [(1, 3), (2, 4)]).unwrap();
        let w = diagram_to_walk(3, &d).unwrap();
        assert_eq!(
            w.positions(),
            vec![vec![2, 1], vec![3, 1], vec![3, 2], vec![3, 1], vec![2, 1]]
        );
        assert_eq!(walk_to_diagram(&w).unwrap(), d);
        assert_eq!(
            diagram_to_walk(2, &d),
            Err(Error::CrossingTooLarge { crossing: 2, k: 2 })
        );
    }

    #[test]
    fn walk_to_diagram_examples() {
        let w = Walk::parse_steps(2, "+1,0,-1").unwrap();
        assert_eq!(walk_to_diagram(&w).unwrap(), Diagram::new(3, [(1, 3)]).unwrap());
        assert_eq!(
            walk_to_diagram(&Walk::parse_steps(2, "").unwrap()).unwrap(),
            Diagram::empty(0)
        );
        assert_eq!(
            walk_to_diagram(&Walk::parse_steps(2, "0").unwrap()).unwrap(),
            Diagram::empty(1)
        );
        assert_eq!(
            walk_to_diagram(&Walk::parse_steps(3, "+1,+2,-1,-2").unwrap()),
            Err(Error::LeavesChamber { step: 3 })
        );
        assert_eq!(
            walk_to_diagram(&Walk::parse_steps(2, "+1").unwrap()),
            Err(Error::NotClosed)
        );
        assert_eq!(
            walk_to_diagram(&Walk::parse_steps(2, "-1").unwrap()),
            Err(Error::LeavesChamber { step: 1 })
        );
    }

    #[test]
    fn crossing_examples() {
        let cn = |n, arcs: &[(usize, usize)]| crossing_number(&Diagram::new(n, arcs.iter().copied()).unwrap());
        assert_eq!(cn(4, &[(1, 3), (2, 4)]), 2);
        assert_eq!(cn(6, &[(1, 4), (2, 5), (3, 6)]), 3);
        assert_eq!(cn(4, &[(1, 2), (3, 4)]), 1);
        assert_eq!(cn(4, &[(1, 4), (2, 3)]), 1);
        assert_eq!(cn(5, &[]), 0);
        // (1,4),(2,6) cross, (3,5) crosses (1,4) but nests in (2,6)
        assert_eq!(cn(6, &[(1, 4), (2, 6), (3, 5)]), 2);
    }

    #[test]
    fn shape_rows_examples() {
        assert_eq!(max_shape_rows(&Diagram::empty(4)), 0);
        assert_eq!(max_shape_rows(&Diagram::new(4, [(1, 3), (2, 4)]).unwrap()), 2);
        let trace = diagram_trace(&Diagram::new(4, [(1, 3), (2, 4)]).unwrap());
        assert_eq!(trace.shape_sequence_string(), "[],[1],[1,1],[1],[]");
    }

    #[test]
    fn traces_agree_in_both_directions() {
        let d = Diagram::new(8, [(1, 5), (2, 7), (3, 4), (6, 8)]).unwrap();
        let w = diagram_to_walk(4, &d).unwrap();
        let (trace, back) = walk_trace(&w).unwrap();
        assert_eq!(back, d);
        assert_eq!(trace, diagram_trace(&d));
    }
}
