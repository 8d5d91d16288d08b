//! Dense matrices over exact rationals.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A dense `rows x cols` matrix of [`Rational`] entries, stored row-major.
///
/// Holds incidence and adjacency matrices as well as the doubly stochastic
/// witnesses, so all arithmetic on it is exact. Zero-dimensional matrices are
/// allowed; products involving them are empty.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut entry: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(entry(i, j));
            }
        }
        RationalMatrix { rows, cols, data }
    }

    /// Builds a matrix from explicit rows, which must all have equal length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(RationalMatrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// Matrix product. Panics when the inner dimensions disagree.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "inner dimensions must agree");
        Self::from_fn(self.rows, rhs.cols, |i, j| {
            let mut sum = Rational::zero();
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if !a.is_zero() {
                    sum += a * &rhs[(k, j)];
                }
            }
            sum
        })
    }

    pub fn row_sum(&self, i: usize) -> Rational {
        (0..self.cols).map(|j| self[(i, j)].clone()).sum()
    }

    pub fn col_sum(&self, j: usize) -> Rational {
        (0..self.rows).map(|i| self[(i, j)].clone()).sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.data.iter().all(|x| !x.is_negative())
    }

    /// Entries nonnegative with every row and every column summing to one.
    /// True only for square matrices, since the two sum conditions force
    /// `rows == cols`; the trivial 0 x 0 matrix qualifies.
    pub fn is_doubly_stochastic(&self) -> bool {
        if self.rows != self.cols || !self.is_nonnegative() {
            return false;
        }
        (0..self.rows).all(|i| self.row_sum(i).is_one())
            && (0..self.cols).all(|j| self.col_sum(j).is_one())
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = &Rational> {
        self.data.iter()
    }
}

impl Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}
