use crate::arith::Field;
use crate::error::{Error, Result};
use crate::poly::{Degree, PolyVector, Polynomial};

/// An `n x (n-1)` polynomial matrix whose columns are (candidate) μ-basis
/// members. Algorithm outputs have nonzero columns sorted by degree; the
/// verifiers also accept arbitrary candidates of the right shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuBasisMatrix<F: Field> {
    field: F,
    n: usize,
    columns: Vec<PolyVector<F>>,
}

impl<F: Field> MuBasisMatrix<F> {
    /// Requires `n >= 2` and exactly `n - 1` columns of length `n`.
    pub fn from_columns(field: F, n: usize, columns: Vec<PolyVector<F>>) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFewEntries(n));
        }
        if columns.len() != n - 1 {
            return Err(Error::Dimension {
                expected: n - 1,
                found: columns.len(),
            });
        }
        if let Some(bad) = columns.iter().find(|c| c.len() != n) {
            return Err(Error::Dimension {
                expected: n,
                found: bad.len(),
            });
        }
        Ok(MuBasisMatrix { field, n, columns })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    /// Number of rows.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn columns(&self) -> &[PolyVector<F>] {
        &self.columns
    }

    pub fn column(&self, j: usize) -> &PolyVector<F> {
        &self.columns[j]
    }

    pub fn into_columns(self) -> Vec<PolyVector<F>> {
        self.columns
    }

    /// Entry `(r, j)`, 0-based.
    pub fn entry(&self, r: usize, j: usize) -> &Polynomial<F> {
        self.columns[j].entry(r)
    }

    pub fn degrees(&self) -> Vec<Degree> {
        self.columns.iter().map(PolyVector::degree).collect()
    }

    /// Column degrees, or `None` if some column is zero.
    pub fn finite_degrees(&self) -> Option<Vec<usize>> {
        self.columns.iter().map(|c| c.degree().finite()).collect()
    }

    pub fn degree_sum(&self) -> Option<usize> {
        self.finite_degrees().map(|d| d.iter().sum())
    }

    /// Rows of the matrix as lists of polynomials.
    pub fn rows(&self) -> Vec<Vec<Polynomial<F>>> {
        (0..self.n)
            .map(|r| self.columns.iter().map(|c| c.entry(r).clone()).collect())
            .collect()
    }
}
