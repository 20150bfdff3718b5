//! Truncated univariate power series with exact rational coefficients.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numbers::{factorial, Count, Rational};

/// Power series `c_0 + c_1 x + ... + c_N x^N` where everything above
/// `x^N` has been discarded. `coefficients.len() == order + 1` always.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series {
    coefficients: Vec<Rational>,
}

impl Series {
    pub fn zero(order: usize) -> Self {
        Series {
            coefficients: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn constant(value: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coefficients[0] = value;
        s
    }

    /// The monomial `x^degree` (the zero series when `degree > order`).
    pub fn monomial(degree: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if degree <= order {
            s.coefficients[degree] = Rational::one();
        }
        s
    }

    /// Builds a series from leading coefficients; missing ones are zero and
    /// extra ones are truncated.
    pub fn from_coefficients(coefficients: Vec<Rational>, order: usize) -> Self {
        let mut coefficients = coefficients;
        coefficients.resize(order + 1, Rational::zero());
        Series { coefficients }
    }

    pub fn from_integers(coefficients: &[i64], order: usize) -> Self {
        Self::from_coefficients(
            coefficients
                .iter()
                .map(|&c| Rational::from_integer(Count::from(c)))
                .collect(),
            order,
        )
    }

    /// `e^x` truncated at `order`.
    pub fn exp(order: usize) -> Self {
        Series {
            coefficients: (0..=order)
                .map(|j| Rational::new(Count::one(), factorial(j as u64)))
                .collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    /// Coefficient of `x^n`; zero above the truncation order.
    pub fn coefficient(&self, n: usize) -> Rational {
        self.coefficients.get(n).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Zero::is_zero)
    }

    /// Re-truncates at a lower (or equal) order.
    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coefficients(self.coefficients.clone(), order)
    }

    /// `n!` times the coefficient of `x^n`, which must be an integer.
    pub fn egf_coefficient(&self, n: usize) -> Result<Count> {
        let scaled = self.coefficient(n) * Rational::from_integer(factorial(n as u64));
        if !scaled.is_integer() {
            return Err(Error::NonIntegral { n });
        }
        Ok(scaled.to_integer())
    }

    fn check_same_order(&self, other: &Series) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::DimensionMismatch(format!(
                "truncation orders {} and {} differ",
                self.order(),
                other.order()
            )));
        }
        Ok(())
    }
}

impl Add for &Series {
    type Output = Series;

    fn add(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        Series {
            coefficients: (0..=order)
                .map(|i| &self.coefficients[i] + &rhs.coefficients[i])
                .collect(),
        }
    }
}

impl Sub for &Series {
    type Output = Series;

    fn sub(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        Series {
            coefficients: (0..=order)
                .map(|i| &self.coefficients[i] - &rhs.coefficients[i])
                .collect(),
        }
    }
}

impl Neg for &Series {
    type Output = Series;

    fn neg(self) -> Series {
        Series {
            coefficients: self.coefficients.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Series {
    type Output = Series;

    fn mul(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        let mut out = Series::zero(order);
        for (i, a) in self.coefficients.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coefficients.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out.coefficients[i + j] += a * b;
                }
            }
        }
        out
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

/// Exact determinant of a square matrix of series, truncated at `order`.
///
/// Uses Laplace expansion along rows with the minors memoised by the set of
/// columns still available, so the cost is `O(2^m * m)` series products for
/// an `m x m` matrix.
pub fn series_determinant(matrix: &[Vec<Series>], order: usize) -> Result<Series> {
    let m = matrix.len();
    if m == 0 {
        return Ok(Series::one(order));
    }
    if m > 16 {
        return Err(Error::DimensionMismatch(format!("{m}x{m} matrix is too large")));
    }
    for (r, row) in matrix.iter().enumerate() {
        if row.len() != m {
            return Err(Error::DimensionMismatch(format!(
                "row {r} has {} entries, expected {m}",
                row.len()
            )));
        }
        for entry in row {
            matrix[0][0].check_same_order(entry)?;
        }
    }
    if matrix[0][0].order() < order {
        return Err(Error::DimensionMismatch(format!(
            "entries are truncated at {} but order {order} was requested",
            matrix[0][0].order()
        )));
    }

    // minors[mask] = determinant of rows (m - |mask|)..m restricted to columns in mask.
    let mut minors: HashMap<u32, Series> = HashMap::new();
    minors.insert(0, Series::one(order));
    for size in 1..=m {
        let row = m - size;
        let mut next = HashMap::new();
        for mask in (0u32..(1 << m)).filter(|mask| mask.count_ones() as usize == size) {
            let mut acc = Series::zero(order);
            let mut position = 0;
            for col in 0..m {
                if mask & (1 << col) == 0 {
                    continue;
                }
                let entry = matrix[row][col].truncate(order);
                let term = &entry * &minors[&(mask & !(1 << col))];
                acc = if position % 2 == 0 { &acc + &term } else { &acc - &term };
                position += 1;
            }
            next.insert(mask, acc);
        }
        minors = next;
    }
    Ok(minors.remove(&((1u32 << m) - 1)).expect("full mask computed"))
}
