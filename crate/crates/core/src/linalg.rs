//! Small dense helpers for column-by-column elimination of scalar vectors.

use crate::arith::Field;

/// Outcome of feeding one column to a [`ColumnEliminator`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColumnOutcome<E> {
    /// The column is independent of every column seen before it.
    Pivot,
    /// The column equals `sum_i coeffs[i] * (i-th pivot column)`.
    Dependent(Vec<E>),
}

#[derive(Clone, Debug)]
enum Op<E> {
    Swap(usize, usize),
    Axpy(usize, E, usize),
}

/// Incremental Gaussian elimination over the columns of a matrix with a fixed
/// number of rows. Row operations are logged and replayed on each new column.
#[derive(Clone, Debug)]
pub struct ColumnEliminator<F: Field> {
    field: F,
    rows: usize,
    ops: Vec<Op<F::Elem>>,
    // pivot columns after transformation, truncated to the pivot rows
    pivot_cols: Vec<Vec<F::Elem>>,
    pivot_indices: Vec<usize>,
    seen: usize,
}

impl<F: Field> ColumnEliminator<F> {
    pub fn new(field: F, rows: usize) -> Self {
        ColumnEliminator {
            field,
            rows,
            ops: Vec::new(),
            pivot_cols: Vec::new(),
            pivot_indices: Vec::new(),
            seen: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivot_cols.len()
    }

    /// Indices (0-based, in feeding order) of the pivot columns so far.
    pub fn pivot_indices(&self) -> &[usize] {
        &self.pivot_indices
    }

    pub fn push(&mut self, column: &[F::Elem]) -> ColumnOutcome<F::Elem> {
        assert_eq!(column.len(), self.rows);
        let f = self.field.clone();
        let mut col = column.to_vec();
        for op in &self.ops {
            match op {
                Op::Swap(i, k) => col.swap(*i, *k),
                Op::Axpy(target, weight, source) => {
                    if !f.is_zero(&col[*source]) {
                        let src = col[*source].clone();
                        f.add_mul_assign(&mut col[*target], weight, &src);
                    }
                }
            }
        }

        let rank = self.rank();
        let index = self.seen;
        self.seen += 1;
        match (rank..self.rows).find(|&i| !f.is_zero(&col[i])) {
            Some(row) => {
                if row != rank {
                    col.swap(row, rank);
                    self.ops.push(Op::Swap(row, rank));
                }
                let neg_inv = f.neg(&f.inv(&col[rank]).expect("nonzero pivot"));
                for i in rank + 1..self.rows {
                    if f.is_zero(&col[i]) {
                        continue;
                    }
                    let w = f.mul(&col[i], &neg_inv);
                    self.ops.push(Op::Axpy(i, w, rank));
                    col[i] = f.zero();
                }
                col.truncate(rank + 1);
                self.pivot_cols.push(col);
                self.pivot_indices.push(index);
                ColumnOutcome::Pivot
            }
            None => {
                // back substitution through the upper-triangular pivot block
                let mut x = vec![f.zero(); rank];
                for i in (0..rank).rev() {
                    let mut acc = col[i].clone();
                    for (k, xk) in x.iter().enumerate().skip(i + 1) {
                        let u = &self.pivot_cols[k][i];
                        if !f.is_zero(u) {
                            acc = f.sub(&acc, &f.mul(u, xk));
                        }
                    }
                    x[i] = f
                        .div(&acc, &self.pivot_cols[i][i])
                        .expect("nonzero pivot");
                }
                ColumnOutcome::Dependent(x)
            }
        }
    }
}

/// Rank of a matrix given by its columns.
pub fn rank_of_columns<F: Field>(field: &F, rows: usize, columns: &[Vec<F::Elem>]) -> usize {
    let mut elim = ColumnEliminator::new(field.clone(), rows);
    for c in columns {
        elim.push(c);
    }
    elim.rank()
}

/// A nonzero null vector `alpha` of the matrix with the given columns, from
/// the first column that depends on its predecessors. Entries after that
/// column are zero and the entry at that column is one (before integral
/// rescaling over the rationals).
pub fn first_null_vector<F: Field>(
    field: &F,
    rows: usize,
    columns: &[Vec<F::Elem>],
) -> Option<Vec<F::Elem>> {
    let mut elim = ColumnEliminator::new(field.clone(), rows);
    for (k, c) in columns.iter().enumerate() {
        if let ColumnOutcome::Dependent(x) = elim.push(c) {
            let mut alpha = vec![field.zero(); columns.len()];
            alpha[k] = field.one();
            for (coef, &p) in x.iter().zip(elim.pivot_indices()) {
                alpha[p] = field.neg(coef);
            }
            field.make_integral(&mut alpha);
            return Some(alpha);
        }
    }
    None
}
