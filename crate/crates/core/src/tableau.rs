//! Young shapes and standard tableaux (rows and columns strictly increasing).

use std::fmt;

use crate::error::{Error, Result};

/// Row lengths of a Young diagram, weakly decreasing, with no zero rows.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shape(Vec<usize>);

impl Shape {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.contains(&0) || rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidTableau(format!("{rows:?} is not a partition")));
        }
        Ok(Shape(rows))
    }

    pub fn empty() -> Self {
        Shape(Vec::new())
    }

    pub fn rows(&self) -> &[usize] {
        &self.0
    }

    pub fn row_count(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Row lengths padded with zeros (or cut) to `len` entries.
    pub fn padded(&self, len: usize) -> Vec<usize> {
        (0..len).map(|r| self.0.get(r).copied().unwrap_or(0)).collect()
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "]")
    }
}

/// A standard Young tableau with distinct positive entries.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn empty() -> Self {
        Tableau { rows: Vec::new() }
    }

    /// Validates shape, strict monotonicity along rows and columns, and distinctness.
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        Shape::new(rows.iter().map(Vec::len).collect())?;
        for (r, row) in rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidTableau(format!("row {} is not increasing", r + 1)));
            }
            if let Some(above) = r.checked_sub(1).map(|a| &rows[a]) {
                if row.iter().zip(above).any(|(below, above)| below <= above) {
                    return Err(Error::InvalidTableau(format!(
                        "column condition fails between rows {r} and {}",
                        r + 1
                    )));
                }
            }
        }
        let mut all: Vec<u32> = rows.iter().flatten().copied().collect();
        all.sort_unstable();
        if all.first() == Some(&0) {
            return Err(Error::InvalidTableau("entries must be positive".into()));
        }
        if all.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidTableau("entries are not distinct".into()));
        }
        Ok(Tableau { rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<u32>>) -> Self {
        Tableau { rows }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub(crate) fn rows_mut(&mut self) -> &mut Vec<Vec<u32>> {
        &mut self.rows
    }

    pub fn shape(&self) -> Shape {
        Shape(self.rows.iter().map(Vec::len).collect())
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn contains(&self, value: u32) -> bool {
        self.rows.iter().any(|row| row.binary_search(&value).is_ok())
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{row:?}")?;
        }
        write!(f, "]")
    }
}
