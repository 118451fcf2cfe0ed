//! The Song–Goldman μ-basis algorithm, kept as an independent cross-check and
//! as the comparison subject of the benchmark harness.
//!
//! Starting from the obvious syzygies `[.., -a_j, .., a_i, ..]` for `i < j`,
//! the algorithm repeatedly finds a linear dependency among the leading vectors
//! and uses it to lower the degree of one syzygy (or to eliminate it) until
//! exactly `n - 1` remain. When `gcd(a) != 1` the result is a μ-basis of
//! `a / gcd(a)` multiplied by `gcd(a)`.

use std::cmp::Reverse;
use std::time::Instant;

use crate::arith::Field;
use crate::basis::MuBasisMatrix;
use crate::error::{Error, Result};
use crate::linalg::first_null_vector;
use crate::poly::{InputVector, PolyVector};

#[derive(Clone, Debug)]
struct Member<F: Field> {
    syzygy: PolyVector<F>,
    leading: Vec<F::Elem>,
    degree: usize,
}

impl<F: Field> Member<F> {
    fn new(syzygy: PolyVector<F>) -> Option<Self> {
        let degree = syzygy.degree().finite()?;
        let leading = syzygy.leading_vector().ok()?;
        Some(Member {
            syzygy,
            leading,
            degree,
        })
    }
}

/// What one reduction step did.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SgStep {
    /// The syzygy at this (sorted) position lost degree.
    Reduced { index: usize },
    /// The syzygy at this position became zero and was dropped.
    Dropped { index: usize },
}

/// The working set of syzygies, kept sorted by non-increasing degree.
#[derive(Clone, Debug)]
pub struct SgState<F: Field> {
    field: F,
    n: usize,
    members: Vec<Member<F>>,
}

impl<F: Field> SgState<F> {
    /// The obvious syzygies of `a`, in pair order `(1,2), (1,3), ..., (n-1,n)`;
    /// zero ones are omitted.
    pub fn new(a: &InputVector<F>) -> Self {
        let field = a.field().clone();
        let n = a.n();
        let mut members = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                let mut v = PolyVector::zero(field.clone(), n).into_entries();
                v[i] = a.entry(j).neg();
                v[j] = a.entry(i).clone();
                if let Some(m) = Member::new(PolyVector::new(field.clone(), v)) {
                    members.push(m);
                }
            }
        }
        let mut state = SgState { field, n, members };
        state.sort();
        state
    }

    fn sort(&mut self) {
        self.members.sort_by_key(|m| Reverse(m.degree));
    }

    /// Number of syzygies `r` currently held.
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_done(&self) -> bool {
        self.members.len() < self.n
    }

    pub fn syzygies(&self) -> impl Iterator<Item = &PolyVector<F>> {
        self.members.iter().map(|m| &m.syzygy)
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.members.iter().map(|m| m.degree).collect()
    }

    pub fn total_degree(&self) -> usize {
        self.members.iter().map(|m| m.degree).sum()
    }

    /// One pass of: find a dependency among the leading vectors, then reduce
    /// the first syzygy it involves.
    pub fn step(&mut self) -> Result<SgStep> {
        let leading: Vec<Vec<F::Elem>> = self.members.iter().map(|m| m.leading.clone()).collect();
        let alpha = leading_nullvector(&self.field, self.n, &leading)?;
        let j = alpha
            .iter()
            .position(|x| !self.field.is_zero(x))
            .expect("null vector is nonzero");
        let dj = self.members[j].degree;
        let mut updated = self.members[j].syzygy.scale(&alpha[j]);
        for (k, member) in self.members.iter().enumerate().skip(j + 1) {
            if self.field.is_zero(&alpha[k]) {
                continue;
            }
            let term = member.syzygy.shift(dj - member.degree).scale(&alpha[k]);
            updated = updated.add(&term)?;
        }
        // dropping the content over the rationals keeps coefficients small;
        // degree and leading-vector direction are unchanged
        let (updated, _) = updated.primitive();
        let outcome = match Member::new(updated) {
            Some(m) => {
                debug_assert!(m.degree < dj);
                self.members[j] = m;
                SgStep::Reduced { index: j }
            }
            None => {
                self.members.remove(j);
                SgStep::Dropped { index: j }
            }
        };
        self.sort();
        Ok(outcome)
    }

    /// The remaining syzygies as columns sorted by increasing degree.
    pub fn into_basis(self) -> Result<MuBasisMatrix<F>> {
        let mut columns: Vec<PolyVector<F>> = self.members.into_iter().map(|m| m.syzygy).collect();
        columns.reverse();
        MuBasisMatrix::from_columns(self.field, self.n, columns)
    }
}

/// A nonzero `alpha` with `sum_i alpha_i m_i = 0` for `r > n - 1` vectors of
/// length `n`. Over the rationals the entries are coprime integers.
pub fn leading_nullvector<F: Field>(
    field: &F,
    n: usize,
    vectors: &[Vec<F::Elem>],
) -> Result<Vec<F::Elem>> {
    if let Some(bad) = vectors.iter().find(|v| v.len() != n) {
        return Err(Error::Dimension {
            expected: n,
            found: bad.len(),
        });
    }
    first_null_vector(field, n, vectors).ok_or_else(|| {
        Error::InternalContradiction("leading vectors are linearly independent".into())
    })
}

pub fn sg_mu_basis<F: Field>(a: &InputVector<F>) -> Result<MuBasisMatrix<F>> {
    sg_mu_basis_until(a, None)
}

pub fn sg_mu_basis_until<F: Field>(
    a: &InputVector<F>,
    deadline: Option<Instant>,
) -> Result<MuBasisMatrix<F>> {
    let mut state = SgState::new(a);
    while !state.is_done() {
        if deadline.is_some_and(|t| Instant::now() >= t) {
            return Err(Error::Timeout);
        }
        state.step()?;
    }
    state.into_basis()
}
