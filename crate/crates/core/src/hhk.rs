//! μ-basis computation by partial reduced row-echelon form of the coefficient
//! matrix.
//!
//! Columns of the coefficient matrix are visited left to right. A column whose
//! index is congruent mod `n` to an already found non-pivot column is itself a
//! non-pivot column (the matrix is block-shifted), so whole residue classes are
//! skipped without arithmetic once their first non-pivot member is known. The
//! forward pass stops as soon as `n - 1` such basic non-pivot columns are
//! found. Row operations are recorded once and replayed lazily on each column
//! that is actually visited.
//!
//! After the forward pass, backward elimination and normalization touch only
//! pivot and basic non-pivot columns. Each basic non-pivot column `q` then
//! holds the coefficients expressing column `q` of the original matrix through
//! the preceding pivot columns, and the null vector `e_q - v_q` translates into
//! one μ-basis member.

use std::time::Instant;

use crate::arith::Field;
use crate::basis::MuBasisMatrix;
use crate::error::{Error, Result};
use crate::poly::{InputVector, PolyVector, Polynomial};
use crate::structmat::CoeffMatrix;

/// A recorded row operation, with 1-based row indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RowOp<E> {
    /// Exchange rows `.0` and `.1`.
    Swap(usize, usize),
    /// `row[target] += weight * row[source]`
    Axpy {
        target: usize,
        weight: E,
        source: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ColumnClass {
    /// Not reached before the forward pass stopped.
    Unvisited,
    Pivot,
    BasicNonPivot,
    /// Skipped because its residue class already has a non-pivot member.
    PeriodicNonPivot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Stage {
    Forward,
    Reduced,
}

/// State of the partial Gauss-Jordan elimination.
///
/// Only pivot and basic non-pivot columns of the matrix are kept current; every
/// other column holds stale data and is not exposed.
#[derive(Clone, Debug)]
pub struct EchelonWorkspace<F: Field> {
    field: F,
    n: usize,
    d: usize,
    rows: usize,
    cols: usize,
    // column-major
    e: Vec<F::Elem>,
    pivots: Vec<usize>,
    basic_nonpivots: Vec<usize>,
    blocked_residues: Vec<bool>,
    classes: Vec<ColumnClass>,
    ops: Vec<RowOp<F::Elem>>,
    next_pivot_row: usize,
    stage: Stage,
}

impl<F: Field> EchelonWorkspace<F> {
    fn new(a: &CoeffMatrix<F>) -> Self {
        let rows = a.rows();
        let cols = a.cols();
        let data = a.data();
        let mut e = Vec::with_capacity(rows * cols);
        for j in 0..cols {
            e.extend((0..rows).map(|i| data[i * cols + j].clone()));
        }
        EchelonWorkspace {
            field: a.field().clone(),
            n: a.block_width(),
            d: a.degree(),
            rows,
            cols,
            e,
            pivots: Vec::new(),
            basic_nonpivots: Vec::new(),
            blocked_residues: vec![false; a.block_width()],
            classes: vec![ColumnClass::Unvisited; cols],
            ops: Vec::new(),
            next_pivot_row: 0,
            stage: Stage::Forward,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Pivot column indices `p`, 1-based and increasing.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basic non-pivot column indices, 1-based and increasing.
    pub fn basic_nonpivots(&self) -> &[usize] {
        &self.basic_nonpivots
    }

    /// The row-operation log of the forward pass.
    pub fn ops(&self) -> &[RowOp<F::Elem>] {
        &self.ops
    }

    /// Class of column `j` (1-based).
    pub fn column_class(&self, j: usize) -> ColumnClass {
        self.classes[j - 1]
    }

    pub fn classes(&self) -> &[ColumnClass] {
        &self.classes
    }

    /// Residues `0..n` whose columns are known to be non-pivotal.
    pub fn is_blocked_residue(&self, residue: usize) -> bool {
        self.blocked_residues[residue]
    }

    /// The row (1-based) where the next pivot would be placed.
    pub fn next_pivot_row(&self) -> usize {
        self.next_pivot_row + 1
    }

    pub fn is_reduced(&self) -> bool {
        self.stage == Stage::Reduced
    }

    fn sanctioned(&self, j: usize) -> bool {
        matches!(
            self.classes[j - 1],
            ColumnClass::Pivot | ColumnClass::BasicNonPivot
        )
    }

    /// Entry `(i, j)` (1-based) for a pivot or basic non-pivot column `j`;
    /// `None` for any other column.
    pub fn entry(&self, i: usize, j: usize) -> Option<&F::Elem> {
        if i == 0 || i > self.rows || j == 0 || j > self.cols || !self.sanctioned(j) {
            return None;
        }
        Some(&self.e[(j - 1) * self.rows + (i - 1)])
    }

    /// Column `j` (1-based) if it is a pivot or basic non-pivot column.
    pub fn column(&self, j: usize) -> Option<&[F::Elem]> {
        if j == 0 || j > self.cols || !self.sanctioned(j) {
            return None;
        }
        Some(self.col(j - 1))
    }

    fn col(&self, j: usize) -> &[F::Elem] {
        &self.e[j * self.rows..(j + 1) * self.rows]
    }

    fn col_mut(&mut self, j: usize) -> &mut [F::Elem] {
        &mut self.e[j * self.rows..(j + 1) * self.rows]
    }

    fn replay_ops(&mut self, j: usize) {
        let rows = self.rows;
        let field = self.field.clone();
        let (ops, e) = (&self.ops, &mut self.e);
        let col = &mut e[j * rows..(j + 1) * rows];
        for op in ops {
            match op {
                RowOp::Swap(i, k) => col.swap(i - 1, k - 1),
                RowOp::Axpy {
                    target,
                    weight,
                    source,
                } => {
                    let src = &col[source - 1];
                    if field.is_zero(src) {
                        continue;
                    }
                    let src = src.clone();
                    field.add_mul_assign(&mut col[target - 1], weight, &src);
                }
            }
        }
    }

    fn forward(&mut self, deadline: Option<Instant>) -> Result<()> {
        let target = self.n - 1;
        for j in 0..self.cols {
            if self.basic_nonpivots.len() == target {
                break;
            }
            if deadline.is_some_and(|t| Instant::now() >= t) {
                return Err(Error::Timeout);
            }
            let residue = j % self.n;
            if self.blocked_residues[residue] {
                self.classes[j] = ColumnClass::PeriodicNonPivot;
                continue;
            }
            self.replay_ops(j);
            let start = self.next_pivot_row;
            let found = (start..self.rows).find(|&i| !self.field.is_zero(&self.col(j)[i]));
            match found {
                Some(row) => self.eliminate_below(j, row),
                None => {
                    self.basic_nonpivots.push(j + 1);
                    self.blocked_residues[residue] = true;
                    self.classes[j] = ColumnClass::BasicNonPivot;
                }
            }
        }
        if self.basic_nonpivots.len() != target {
            return Err(Error::InternalContradiction(format!(
                "found {} basic non-pivot columns, expected {}",
                self.basic_nonpivots.len(),
                target
            )));
        }
        Ok(())
    }

    fn eliminate_below(&mut self, j: usize, row: usize) {
        let pivot_row = self.next_pivot_row;
        if row != pivot_row {
            self.col_mut(j).swap(row, pivot_row);
            self.ops.push(RowOp::Swap(row + 1, pivot_row + 1));
        }
        let field = self.field.clone();
        let neg_inv = field.neg(
            &field
                .inv(&self.col(j)[pivot_row])
                .expect("pivot entry is nonzero"),
        );
        for i in pivot_row + 1..self.rows {
            let x = &self.col(j)[i];
            if field.is_zero(x) {
                continue;
            }
            let weight = field.mul(x, &neg_inv);
            self.col_mut(j)[i] = field.zero();
            self.ops.push(RowOp::Axpy {
                target: i + 1,
                weight,
                source: pivot_row + 1,
            });
        }
        self.pivots.push(j + 1);
        self.classes[j] = ColumnClass::Pivot;
        self.next_pivot_row += 1;
    }

    fn backward(&mut self) {
        if self.stage == Stage::Reduced {
            return;
        }
        let field = self.field.clone();
        let mut sanctioned: Vec<usize> = self
            .pivots
            .iter()
            .chain(&self.basic_nonpivots)
            .map(|j| j - 1)
            .collect();
        sanctioned.sort_unstable();
        let rows = self.rows;

        // backward elimination, pivots last to first
        for k in (0..self.pivots.len()).rev() {
            let pc = self.pivots[k] - 1;
            let pivot = self.e[pc * rows + k].clone();
            let pivot_inv = field.inv(&pivot).expect("pivot entry is nonzero");
            let tail: Vec<usize> = sanctioned.iter().copied().filter(|&c| c >= pc).collect();
            for r in 0..k {
                let above = &self.e[pc * rows + r];
                if field.is_zero(above) {
                    continue;
                }
                let factor = field.neg(&field.mul(above, &pivot_inv));
                for &c in &tail {
                    let src = self.e[c * rows + k].clone();
                    if field.is_zero(&src) {
                        continue;
                    }
                    field.add_mul_assign(&mut self.e[c * rows + r], &factor, &src);
                }
            }
        }

        // normalization
        for k in 0..self.pivots.len() {
            let pc = self.pivots[k] - 1;
            let inv = field
                .inv(&self.e[pc * rows + k])
                .expect("pivot entry is nonzero");
            if field.is_one(&inv) {
                continue;
            }
            for &c in sanctioned.iter().filter(|&&c| c >= pc) {
                let x = &mut self.e[c * rows + k];
                *x = field.mul(x, &inv);
            }
        }
        self.stage = Stage::Reduced;
    }

    fn extract(&self) -> Result<MuBasisMatrix<F>> {
        if self.stage != Stage::Reduced {
            return Err(Error::InternalContradiction(
                "workspace has not been reduced".into(),
            ));
        }
        let field = &self.field;
        let n = self.n;
        let mut columns = Vec::with_capacity(n - 1);
        for &q in &self.basic_nonpivots {
            let mut coeffs: Vec<Vec<F::Elem>> = vec![Vec::new(); n];
            let mut add_term = |r: usize, k: usize, c: F::Elem| {
                let entry = &mut coeffs[r];
                if entry.len() <= k {
                    entry.resize(k + 1, field.zero());
                }
                entry[k] = field.add(&entry[k], &c);
            };
            add_term((q - 1) % n, (q - 1) / n, field.one());
            let col = self.col(q - 1);
            for (i, &p) in self.pivots.iter().enumerate() {
                let alpha = &col[i];
                if field.is_zero(alpha) {
                    continue;
                }
                add_term((p - 1) % n, (p - 1) / n, field.neg(alpha));
            }
            let entries = coeffs
                .into_iter()
                .map(|c| Polynomial::new(field.clone(), c))
                .collect();
            columns.push(PolyVector::new(field.clone(), entries));
        }
        MuBasisMatrix::from_columns(field.clone(), n, columns)
    }
}

/// Forward pass of the partial elimination on a coefficient matrix.
pub fn forward_eliminate<F: Field>(a: &CoeffMatrix<F>) -> Result<EchelonWorkspace<F>> {
    forward_eliminate_until(a, None)
}

pub fn forward_eliminate_until<F: Field>(
    a: &CoeffMatrix<F>,
    deadline: Option<Instant>,
) -> Result<EchelonWorkspace<F>> {
    if a.block_width() < 2 {
        return Err(Error::TooFewEntries(a.block_width()));
    }
    let mut ws = EchelonWorkspace::new(a);
    ws.forward(deadline)?;
    Ok(ws)
}

/// Backward elimination and pivot normalization on the pivot and basic
/// non-pivot columns. Idempotent.
pub fn backward_normalize<F: Field>(mut ws: EchelonWorkspace<F>) -> EchelonWorkspace<F> {
    ws.backward();
    ws
}

/// Reads the μ-basis off a reduced workspace: column `j` is the polynomial
/// vector of the null vector `e_q - v_q` for the `j`-th basic non-pivot `q`.
pub fn extract_mu_basis<F: Field>(ws: &EchelonWorkspace<F>) -> Result<MuBasisMatrix<F>> {
    ws.extract()
}

/// Degrees `ceil(q / n) - 1` of the μ-basis members, known from the basic
/// non-pivot indices alone.
pub fn predict_degrees(basic_nonpivots: &[usize], n: usize) -> Vec<usize> {
    basic_nonpivots.iter().map(|&q| (q - 1) / n).collect()
}

/// Result of a traced run: the final workspace and the basis read from it.
#[derive(Clone, Debug)]
pub struct HhkRun<F: Field> {
    pub workspace: EchelonWorkspace<F>,
    pub basis: MuBasisMatrix<F>,
}

/// Computes a μ-basis of `a`; columns come out in increasing degree order.
pub fn compute_mu_basis<F: Field>(a: &InputVector<F>) -> Result<MuBasisMatrix<F>> {
    compute_mu_basis_traced(a).map(|run| run.basis)
}

pub fn compute_mu_basis_traced<F: Field>(a: &InputVector<F>) -> Result<HhkRun<F>> {
    compute_mu_basis_until(a, None)
}

/// As [`compute_mu_basis_traced`], giving up with [`Error::Timeout`] once the
/// deadline passes.
pub fn compute_mu_basis_until<F: Field>(
    a: &InputVector<F>,
    deadline: Option<Instant>,
) -> Result<HhkRun<F>> {
    let matrix = CoeffMatrix::build(a);
    let workspace = backward_normalize(forward_eliminate_until(&matrix, deadline)?);
    let basis = extract_mu_basis(&workspace)?;
    Ok(HhkRun { workspace, basis })
}
