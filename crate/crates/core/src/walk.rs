//! Lattice walks in `Z^(k-1)` with steps `0, +e_i, -e_i`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// One step of a walk. Coordinates are numbered from 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    Stay,
    Up(usize),
    Down(usize),
}

impl Step {
    pub fn apply(self, point: &mut [i64]) {
        match self {
            Step::Stay => {}
            Step::Up(i) => point[i - 1] += 1,
            Step::Down(i) => point[i - 1] -= 1,
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Stay => write!(f, "0"),
            Step::Up(i) => write!(f, "+{i}"),
            Step::Down(i) => write!(f, "-{i}"),
        }
    }
}

impl FromStr for Step {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let token = s.trim();
        let bad = || Error::Parse {
            what: "walk step",
            token: token.to_string(),
        };
        if token == "0" {
            return Ok(Step::Stay);
        }
        let (sign, digits) = token.split_at(token.len().min(1));
        let i: usize = digits.parse().map_err(|_| bad())?;
        if i == 0 {
            return Err(bad());
        }
        match sign {
            "+" => Ok(Step::Up(i)),
            "-" => Ok(Step::Down(i)),
            _ => Err(bad()),
        }
    }
}

/// A point of `Z^(k-1)`; interior of the chamber means
/// `x_1 > x_2 > ... > x_(k-1) > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChamberPoint(pub Vec<i64>);

impl ChamberPoint {
    /// The base point `(k-1, k-2, ..., 1)`.
    pub fn base(k: usize) -> Self {
        ChamberPoint((1..k).rev().map(|c| c as i64).collect())
    }

    pub fn is_interior(&self) -> bool {
        is_interior(&self.0)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }
}

pub(crate) fn is_interior(x: &[i64]) -> bool {
    x.last().is_none_or(|&last| last > 0) && x.windows(2).all(|w| w[0] > w[1])
}

/// A walk with a fixed crossing parameter `k` (dimension `k - 1`) and start point.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Walk {
    k: usize,
    start: Vec<i64>,
    steps: Vec<Step>,
}

impl Walk {
    pub fn new(k: usize, start: Vec<i64>, steps: Vec<Step>) -> Result<Self> {
        if k < 2 {
            return Err(Error::Precondition(format!("k = {k} must be at least 2")));
        }
        if start.len() != k - 1 {
            return Err(Error::Precondition(format!(
                "start point has {} coordinates, expected {}",
                start.len(),
                k - 1
            )));
        }
        if let Some(step) = steps
            .iter()
            .find(|s| matches!(s, Step::Up(i) | Step::Down(i) if *i >= k))
        {
            return Err(Error::Precondition(format!("step {step} is out of range for k = {k}")));
        }
        Ok(Walk { k, start, steps })
    }

    /// A walk starting at the chamber base point.
    pub fn from_base(k: usize, steps: Vec<Step>) -> Result<Self> {
        Self::new(k, ChamberPoint::base(k).0, steps)
    }

    /// Parses the comma-separated step list (`+1,-1,0,...`). The empty
    /// string is the empty walk.
    pub fn parse_steps(k: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        let steps = if text.is_empty() {
            Vec::new()
        } else {
            text.split(',').map(str::parse).collect::<Result<Vec<Step>>>()?
        };
        Self::from_base(k, steps)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn start(&self) -> &[i64] {
        &self.start
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Position after the first `r` steps.
    pub fn position(&self, r: usize) -> Vec<i64> {
        let mut p = self.start.clone();
        for s in &self.steps[..r] {
            s.apply(&mut p);
        }
        p
    }

    /// All `len() + 1` positions, starting with the start point.
    pub fn positions(&self) -> Vec<Vec<i64>> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut p = self.start.clone();
        out.push(p.clone());
        for s in &self.steps {
            s.apply(&mut p);
            out.push(p.clone());
        }
        out
    }
}

impl fmt::Display for Walk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.steps.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}
