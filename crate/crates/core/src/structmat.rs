//! The block-shifted coefficient matrix of an input vector and the
//! coefficient-stacking isomorphisms between polynomial vectors and flat
//! vectors.
//!
//! For `a = c_0 + c_1 s + ... + c_d s^d` with row vectors `c_j` of length `n`,
//! the matrix has `2d + 1` rows and `d + 1` column blocks of width `n`; block
//! `k` holds `c_0, ..., c_d` stacked vertically and shifted down by `k` rows.
//! Row and column indices in the public accessors are 1-based.

use crate::arith::Field;
use crate::error::{Error, Result};
use crate::poly::{Degree, InputVector, PolyVector, Polynomial};

/// Dense row-major `(2d+1) x n(d+1)` coefficient matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffMatrix<F: Field> {
    field: F,
    n: usize,
    d: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> CoeffMatrix<F> {
    pub fn build(a: &InputVector<F>) -> Self {
        let field = a.field().clone();
        let n = a.n();
        let d = a.degree();
        let rows = 2 * d + 1;
        let cols = n * (d + 1);
        let mut data = vec![field.zero(); rows * cols];
        for j in 0..=d {
            let c = a.coefficient_row(j);
            for k in 0..=d {
                let row = j + k;
                for (r, value) in c.iter().enumerate() {
                    data[row * cols + k * n + r] = value.clone();
                }
            }
        }
        CoeffMatrix { field, n, d, data }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rows(&self) -> usize {
        2 * self.d + 1
    }

    pub fn cols(&self) -> usize {
        self.n * (self.d + 1)
    }

    /// Block width, the length `n` of the input vector.
    pub fn block_width(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    /// Entry at 1-based `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> &F::Elem {
        assert!(i >= 1 && i <= self.rows() && j >= 1 && j <= self.cols());
        &self.data[(i - 1) * self.cols() + (j - 1)]
    }

    /// Column `j` (1-based) as a dense vector.
    pub fn column(&self, j: usize) -> Vec<F::Elem> {
        (1..=self.rows()).map(|i| self.entry(i, j).clone()).collect()
    }

    pub(crate) fn data(&self) -> &[F::Elem] {
        &self.data
    }

    /// Matrix-vector product, returned as a flat vector of block width one.
    pub fn apply(&self, v: &FlatVector<F>) -> Result<FlatVector<F>> {
        if v.len() != self.cols() {
            return Err(Error::Dimension {
                expected: self.cols(),
                found: v.len(),
            });
        }
        let f = &self.field;
        let cols = self.cols();
        let out = (0..self.rows())
            .map(|i| {
                let row = &self.data[i * cols..(i + 1) * cols];
                let mut acc = f.zero();
                for (x, y) in row.iter().zip(v.data()) {
                    if !f.is_zero(x) {
                        f.add_mul_assign(&mut acc, x, y);
                    }
                }
                acc
            })
            .collect();
        FlatVector::new(f.clone(), out, 1)
    }
}

/// A coefficient vector of length `m (t + 1)` made of `t + 1` blocks of width
/// `m`; block `k` holds the coefficients of `s^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatVector<F: Field> {
    field: F,
    data: Vec<F::Elem>,
    block_width: usize,
}

impl<F: Field> FlatVector<F> {
    pub fn new(field: F, data: Vec<F::Elem>, block_width: usize) -> Result<Self> {
        if block_width == 0 || data.len() % block_width != 0 {
            return Err(Error::Dimension {
                expected: block_width.max(1) * (data.len() / block_width.max(1) + 1),
                found: data.len(),
            });
        }
        Ok(FlatVector {
            field,
            data,
            block_width,
        })
    }

    pub fn from_i64s(field: F, values: &[i64], block_width: usize) -> Result<Self> {
        let data = values.iter().map(|&v| field.from_i64(v)).collect();
        Self::new(field, data, block_width)
    }

    /// Unit vector `e_j` (1-based) of the given length.
    pub fn unit(field: F, len: usize, j: usize, block_width: usize) -> Result<Self> {
        let mut data = vec![field.zero(); len];
        data[j - 1] = field.one();
        Self::new(field, data, block_width)
    }

    pub fn data(&self) -> &[F::Elem] {
        &self.data
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn block_width(&self) -> usize {
        self.block_width
    }

    /// Number of blocks, `t + 1`.
    pub fn levels(&self) -> usize {
        self.data.len() / self.block_width
    }

    /// Stacks the coefficient blocks `w_0, ..., w_t` of `h`.
    pub fn sharp(h: &PolyVector<F>, t: usize) -> Result<Self> {
        if let Degree::Finite(deg) = h.degree() {
            if deg > t {
                return Err(Error::DegreeOverflow {
                    degree: deg,
                    bound: t,
                });
            }
        }
        let m = h.len();
        let mut data = Vec::with_capacity(m * (t + 1));
        for k in 0..=t {
            data.extend(h.coefficient_block(k));
        }
        Self::new(h.field().clone(), data, m)
    }

    /// Inverse of [`FlatVector::sharp`]: entry `r` of the result has `s^k`
    /// coefficient `data[k m + r]`.
    pub fn flat(&self) -> PolyVector<F> {
        let m = self.block_width;
        let entries = (0..m)
            .map(|r| {
                let coeffs = self.data.iter().skip(r).step_by(m).cloned().collect();
                Polynomial::new(self.field.clone(), coeffs)
            })
            .collect();
        PolyVector::new(self.field.clone(), entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{PrimeField, Rationals};

    fn running_example() -> InputVector<Rationals> {
        InputVector::from_i64s(
            Rationals,
            &[&[1, 0, 1, 0, 1], &[1, 0, 0, 1, 1], &[1, 0, 0, 0, 1]],
        )
        .unwrap()
    }

    // The 9x15 matrix printed for the running example, blanks as zeros.
    const RUNNING_A: [[i64; 15]; 9] = [
        [1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [1, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0],
        [0, 1, 0, 1, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0],
        [1, 1, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1, 1, 1],
        [0, 0, 0, 1, 1, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 1, 0, 1, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 1, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1],
    ];

    #[test]
    fn builds_running_example_matrix() {
        let a = CoeffMatrix::build(&running_example());
        assert_eq!((a.rows(), a.cols()), (9, 15));
        for i in 1..=9 {
            for j in 1..=15 {
                assert_eq!(
                    *a.entry(i, j),
                    Rationals.from_i64(RUNNING_A[i - 1][j - 1]),
                    "entry ({i}, {j})"
                );
            }
        }
    }

    #[test]
    fn degree_zero_input_is_a_single_row() {
        let f5 = PrimeField::new(5).unwrap();
        let a = InputVector::from_i64s(f5, &[&[2], &[3]]).unwrap();
        let m = CoeffMatrix::build(&a);
        assert_eq!((m.rows(), m.cols()), (1, 2));
        assert_eq!((*m.entry(1, 1), *m.entry(1, 2)), (2, 3));
    }

    #[test]
    fn last_row_tail_is_leading_vector() {
        let a = running_example();
        let m = CoeffMatrix::build(&a);
        let tail: Vec<_> = (13..=15).map(|j| m.entry(9, j).clone()).collect();
        assert_eq!(tail, a.leading_vector());
    }

    #[test]
    fn matrix_vector_fixture() {
        let a = CoeffMatrix::build(&running_example());
        let v = FlatVector::from_i64s(Rationals, &(1..=15).collect::<Vec<_>>(), 3).unwrap();
        let av = a.apply(&v).unwrap();
        let expected =
            FlatVector::from_i64s(Rationals, &[6, 15, 25, 39, 60, 33, 48, 47, 42], 1).unwrap();
        assert_eq!(av, expected);
        let zero = FlatVector::from_i64s(Rationals, &[0; 15], 3).unwrap();
        assert!(a.apply(&zero).unwrap().data().iter().all(|x| x == &Rationals.zero()));
        let short = FlatVector::from_i64s(Rationals, &[1; 12], 3).unwrap();
        assert!(matches!(a.apply(&short), Err(Error::Dimension { .. })));
    }

    #[test]
    fn sharp_flat_example() {
        let h = PolyVector::from_i64s(Rationals, &[&[1, -2, -2, -1], &[2, 2, 1, 1], &[-3]]);
        let flat = FlatVector::sharp(&h, 3).unwrap();
        let expected = FlatVector::from_i64s(
            Rationals,
            &[1, 2, -3, -2, 2, 0, -2, 1, 0, -1, 1, 0],
            3,
        )
        .unwrap();
        assert_eq!(flat, expected);
        assert_eq!(expected.flat(), h);
        assert_eq!(
            FlatVector::sharp(&h, 2),
            Err(Error::DegreeOverflow { degree: 3, bound: 2 })
        );
        let zero = FlatVector::sharp(&PolyVector::zero(Rationals, 3), 2).unwrap();
        assert_eq!(zero.len(), 9);
        assert!(zero.flat().is_zero());
    }

    #[test]
    fn flat_index_convention() {
        // e_6 with n = 3 lands in block k = 1 at entry r = 3.
        let e6 = FlatVector::unit(Rationals, 15, 6, 3).unwrap();
        assert_eq!(e6.flat(), PolyVector::unit(Rationals, 3, 2, 1));
        // b_6 of the running example flattens to its first syzygy.
        let b6 = FlatVector::from_i64s(Rationals, &[0, 1, -1, -1, 0, 1, 0, 0, 0], 3).unwrap();
        assert_eq!(
            b6.flat(),
            PolyVector::from_i64s(Rationals, &[&[0, -1], &[1], &[-1, 1]])
        );
        let ones = FlatVector::from_i64s(Rationals, &[1, 1, 1, 1], 2).unwrap();
        assert_eq!(
            ones.flat(),
            PolyVector::from_i64s(Rationals, &[&[1, 1], &[1, 1]])
        );
        assert!(FlatVector::from_i64s(Rationals, &[1, 2, 3], 2).is_err());
    }
}
