//! Algebraic checks of a claimed μ-basis and gcd recovery from one.
//!
//! Module generation is not checked directly. Syzygy membership, leading
//! vector independence, the degree-sum identity and proportionality of the
//! outer product to `a / gcd(a)` together characterize a μ-basis, and each of
//! them is plain exact linear algebra.

use std::fmt;

use crate::arith::Field;
use crate::basis::MuBasisMatrix;
use crate::error::{Error, Result};
use crate::hhk::compute_mu_basis;
use crate::linalg::rank_of_columns;
use crate::poly::{InputVector, PolyVector, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CheckKind {
    Syzygy,
    LvIndependence,
    DegreeSum,
    OuterProduct,
}

impl CheckKind {
    pub fn label(self) -> &'static str {
        match self {
            CheckKind::Syzygy => "syzygy",
            CheckKind::LvIndependence => "lv-independence",
            CheckKind::DegreeSum => "degree-sum",
            CheckKind::OuterProduct => "outer-product",
        }
    }
}

/// Outcome of one check; `detail` names the failing identity when it fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub kind: CheckKind,
    pub passed: bool,
    pub detail: String,
}

impl CheckReport {
    fn pass(kind: CheckKind, detail: impl Into<String>) -> Self {
        CheckReport {
            kind,
            passed: true,
            detail: detail.into(),
        }
    }

    fn fail(kind: CheckKind, detail: impl Into<String>) -> Self {
        CheckReport {
            kind,
            passed: false,
            detail: detail.into(),
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "pass" } else { "fail" };
        write!(f, "{}: {}", self.kind.label(), status)?;
        if !self.detail.is_empty() {
            write!(f, " ({})", self.detail)?;
        }
        Ok(())
    }
}

fn check_shape<F: Field>(a: &InputVector<F>, m: &MuBasisMatrix<F>) -> Result<()> {
    if a.n() != m.n() {
        return Err(Error::Dimension {
            expected: a.n(),
            found: m.n(),
        });
    }
    Ok(())
}

/// `a . u = 0` for every column `u`.
pub fn check_syzygies<F: Field>(a: &InputVector<F>, m: &MuBasisMatrix<F>) -> Result<CheckReport> {
    check_shape(a, m)?;
    for (j, col) in m.columns().iter().enumerate() {
        let product = a.dot(col)?;
        if !product.is_zero() {
            return Ok(CheckReport::fail(
                CheckKind::Syzygy,
                format!("a . u_{} = {} != 0", j + 1, product),
            ));
        }
    }
    Ok(CheckReport::pass(CheckKind::Syzygy, ""))
}

/// Leading vectors of the columns have rank `n - 1`.
pub fn check_lv_independence<F: Field>(m: &MuBasisMatrix<F>) -> CheckReport {
    let mut lvs = Vec::with_capacity(m.columns().len());
    for (j, col) in m.columns().iter().enumerate() {
        match col.leading_vector() {
            Ok(lv) => lvs.push(lv),
            Err(_) => {
                return CheckReport::fail(
                    CheckKind::LvIndependence,
                    format!("u_{} is zero", j + 1),
                )
            }
        }
    }
    let rank = rank_of_columns(m.field(), m.n(), &lvs);
    if rank == m.n() - 1 {
        CheckReport::pass(CheckKind::LvIndependence, format!("rank {rank}"))
    } else {
        CheckReport::fail(
            CheckKind::LvIndependence,
            format!("leading vectors have rank {rank}, expected {}", m.n() - 1),
        )
    }
}

/// `sum_j deg(u_j) = deg(a) - deg(gcd(a))`.
pub fn check_degree_sum<F: Field>(a: &InputVector<F>, m: &MuBasisMatrix<F>) -> Result<CheckReport> {
    check_shape(a, m)?;
    let gcd_degree = a
        .euclid_gcd()
        .degree()
        .finite()
        .expect("gcd of a nonzero vector is nonzero");
    let expected = a.degree() - gcd_degree;
    Ok(match m.degree_sum() {
        None => CheckReport::fail(CheckKind::DegreeSum, "a column is zero"),
        Some(sum) if sum == expected => {
            CheckReport::pass(CheckKind::DegreeSum, format!("{sum} = {} - {gcd_degree}", a.degree()))
        }
        Some(sum) => CheckReport::fail(
            CheckKind::DegreeSum,
            format!("sum of degrees {sum} != deg(a) - deg(gcd) = {expected}"),
        ),
    })
}

/// Determinant of a square polynomial matrix by fraction-free (Bareiss)
/// elimination; every intermediate division is exact.
pub fn bareiss_determinant<F: Field>(
    field: &F,
    mut rows: Vec<Vec<Polynomial<F>>>,
) -> Result<Polynomial<F>> {
    let size = rows.len();
    if size == 0 {
        return Ok(Polynomial::one(field.clone()));
    }
    let mut negate = false;
    let mut prev = Polynomial::one(field.clone());
    for k in 0..size - 1 {
        if rows[k][k].is_zero() {
            match (k + 1..size).find(|&r| !rows[r][k].is_zero()) {
                Some(r) => {
                    rows.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(Polynomial::zero(field.clone())),
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let cross = rows[i][j].mul(&rows[k][k]).sub(&rows[i][k].mul(&rows[k][j]));
                rows[i][j] = cross.div_exact(&prev)?;
            }
            rows[i][k] = Polynomial::zero(field.clone());
        }
        prev = rows[k][k].clone();
    }
    let det = rows[size - 1][size - 1].clone();
    Ok(if negate { det.neg() } else { det })
}

/// Signed maximal minors `h_i = (-1)^i det(M without row i)`, `i` 1-based.
///
/// All `n` minors come out of one fraction-free Gauss-Jordan pass over the
/// transpose: with pivot columns `P` and the remaining column `m`, the final
/// matrix is `[delta I | y]` where `delta = +-det(M without row m)` and, by
/// Cramer's rule, each `y_k` is `+-` the minor that omits the `k`-th pivot row.
pub fn outer_product<F: Field>(m: &MuBasisMatrix<F>) -> Result<PolyVector<F>> {
    let field = m.field();
    let n = m.n();
    let r = n - 1;
    // integral columns keep the elimination free of rational blow-up
    let mut scale = field.one();
    let mut a: Vec<Vec<Polynomial<F>>> = Vec::with_capacity(r);
    for col in m.columns() {
        let (primitive, factor) = col.primitive();
        scale = field.mul(&scale, &factor);
        a.push(primitive.into_entries());
    }
    let unscale = field.inv(&scale)?;
    let zero = || Ok(PolyVector::zero(field.clone(), n));

    let mut prev = Polynomial::one(field.clone());
    let mut negate = false;
    let mut free = None;
    let mut pivots = Vec::with_capacity(r);
    let mut c = 0;
    for k in 0..r {
        let row = loop {
            if c >= n {
                return zero();
            }
            match (k..r).find(|&i| !a[i][c].is_zero()) {
                Some(row) => break row,
                // a second dependent column means rank below n - 1
                None if free.is_some() => return zero(),
                None => {
                    free = Some(c);
                    c += 1;
                }
            }
        };
        if row != k {
            a.swap(row, k);
            negate = !negate;
        }
        let q = c;
        let p = a[k][q].clone();
        for i in (0..r).filter(|&i| i != k) {
            let aiq = a[i][q].clone();
            for j in 0..n {
                let cross = p.mul(&a[i][j]).sub(&aiq.mul(&a[k][j]));
                a[i][j] = cross.div_exact(&prev)?;
            }
        }
        prev = p;
        pivots.push(q);
        c += 1;
    }
    let free = free.unwrap_or(n - 1);

    let mut minors = vec![Polynomial::zero(field.clone()); n];
    minors[free] = prev;
    for (k, &q) in pivots.iter().enumerate() {
        let y = a[k][free].clone();
        // moving column `free` into the slot of column `q`
        minors[q] = if q.abs_diff(free) % 2 == 0 { y.neg() } else { y };
    }
    let h = minors
        .into_iter()
        .enumerate()
        .map(|(i, d)| {
            let d = d.scale(&unscale);
            // 1-based index i + 1 is odd when i is even
            if (i % 2 == 0) != negate {
                d.neg()
            } else {
                d
            }
        })
        .collect();
    Ok(PolyVector::new(field.clone(), h))
}

/// Outer-product check result, with the recovered scalar on success.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OuterProductReport<E> {
    pub report: CheckReport,
    /// `alpha` with `a = alpha * gcd(a) * h`.
    pub alpha: Option<E>,
}

/// `a = alpha * gcd(a) * h` for the outer product `h` and one nonzero scalar
/// `alpha`, recovered from the first nonzero entry of `a`.
pub fn check_outer_product<F: Field>(
    a: &InputVector<F>,
    m: &MuBasisMatrix<F>,
) -> Result<OuterProductReport<F::Elem>> {
    check_shape(a, m)?;
    let field = a.field();
    let fail = |detail: String| OuterProductReport {
        report: CheckReport::fail(CheckKind::OuterProduct, detail),
        alpha: None,
    };
    let h = outer_product(m)?;
    if h.is_zero() {
        return Ok(fail("outer product is zero".into()));
    }
    for i in 0..a.n() {
        for j in i + 1..a.n() {
            if a.entry(i).mul(h.entry(j)) != a.entry(j).mul(h.entry(i)) {
                return Ok(fail(format!(
                    "a_{} h_{} != a_{} h_{}",
                    i + 1,
                    j + 1,
                    j + 1,
                    i + 1
                )));
            }
        }
    }
    let g = a.euclid_gcd();
    let gh = h.mul_poly(&g);
    let i = (0..a.n())
        .find(|&i| !a.entry(i).is_zero())
        .expect("input is nonzero");
    let (Some(lead_a), Some(lead_gh)) = (a.entry(i).leading_coeff(), gh.entry(i).leading_coeff())
    else {
        return Ok(fail(format!("h_{} = 0 while a_{} != 0", i + 1, i + 1)));
    };
    let alpha = field.div(lead_a, lead_gh)?;
    let scaled = gh.scale(&alpha);
    if &scaled != a.as_vector() {
        let k = (0..a.n())
            .find(|&k| scaled.entry(k) != a.entry(k))
            .unwrap_or(0);
        return Ok(fail(format!(
            "a_{} != alpha * gcd(a) * h_{}",
            k + 1,
            k + 1
        )));
    }
    Ok(OuterProductReport {
        report: CheckReport::pass(
            CheckKind::OuterProduct,
            format!("alpha = {}", field.format_elem(&alpha)),
        ),
        alpha: Some(alpha),
    })
}

/// All four checks, in the order syzygy, lv-independence, degree-sum,
/// outer-product.
pub fn verify_all<F: Field>(a: &InputVector<F>, m: &MuBasisMatrix<F>) -> Result<Vec<CheckReport>> {
    Ok(vec![
        check_syzygies(a, m)?,
        check_lv_independence(m),
        check_degree_sum(a, m)?,
        check_outer_product(a, m)?.report,
    ])
}

/// `gcd(a)` from the outer product of a μ-basis: the monic quotient of `a_i`
/// by `h_i` for the first `i` where both are nonzero.
pub fn gcd_via_mubasis<F: Field>(a: &InputVector<F>) -> Result<Polynomial<F>> {
    let m = compute_mu_basis(a)?;
    gcd_from_basis(a, &m)
}

pub fn gcd_from_basis<F: Field>(a: &InputVector<F>, m: &MuBasisMatrix<F>) -> Result<Polynomial<F>> {
    let h = outer_product(m)?;
    let i = (0..a.n())
        .find(|&i| !a.entry(i).is_zero() && !h.entry(i).is_zero())
        .ok_or_else(|| {
            Error::InternalContradiction("outer product vanishes wherever a does not".into())
        })?;
    let (quotient, remainder) = a.entry(i).div_rem(h.entry(i))?;
    if !remainder.is_zero() {
        return Err(Error::InternalContradiction(format!(
            "h_{} does not divide a_{}",
            i + 1,
            i + 1
        )));
    }
    Ok(quotient.monic())
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

    fn running_basis() -> MuBasisMatrix<Rationals> {
        MuBasisMatrix::from_columns(
            Rationals,
            3,
            vec![
                PolyVector::from_i64s(Rationals, &[&[0, -1], &[1], &[-1, 1]]),
                PolyVector::from_i64s(Rationals, &[&[1, -2, -2, -1], &[2, 2, 1, 1], &[-3]]),
            ],
        )
        .unwrap()
    }

    fn qp(c: &[i64]) -> Polynomial<Rationals> {
        Polynomial::from_i64s(Rationals, c)
    }

    #[test]
    fn running_example_passes_everything() {
        let reports = verify_all(&running_example(), &running_basis()).unwrap();
        assert!(reports.iter().all(|r| r.passed), "{reports:?}");
        let outer = check_outer_product(&running_example(), &running_basis()).unwrap();
        assert!(outer.alpha.is_some());
    }

    #[test]
    fn perturbation_breaks_syzygy() {
        let mut cols = running_basis().into_columns();
        let mut entries = cols[0].clone().into_entries();
        entries[0] = qp(&[1, -1]);
        cols[0] = PolyVector::new(Rationals, entries);
        let m = MuBasisMatrix::from_columns(Rationals, 3, cols).unwrap();
        assert!(!check_syzygies(&running_example(), &m).unwrap().passed);
    }

    #[test]
    fn sum_basis_is_not_a_mu_basis() {
        let cols = running_basis().into_columns();
        let sum = cols[0].add(&cols[1]).unwrap();
        let m = MuBasisMatrix::from_columns(Rationals, 3, vec![sum, cols[1].clone()]).unwrap();
        assert!(check_syzygies(&running_example(), &m).unwrap().passed);
        assert!(!check_lv_independence(&m).passed);
        assert!(!check_degree_sum(&running_example(), &m).unwrap().passed);
    }

    #[test]
    fn single_column_independence() {
        let m = MuBasisMatrix::from_columns(
            Rationals,
            2,
            vec![PolyVector::from_i64s(Rationals, &[&[0, -1], &[1]])],
        )
        .unwrap();
        assert!(check_lv_independence(&m).passed);
    }

    #[test]
    fn extra_factor_breaks_degree_sum() {
        let mut cols = running_basis().into_columns();
        cols[0] = cols[0].shift(1);
        let m = MuBasisMatrix::from_columns(Rationals, 3, cols).unwrap();
        assert!(!check_degree_sum(&running_example(), &m).unwrap().passed);
    }

    #[test]
    fn outer_product_of_two_by_one() {
        let m = MuBasisMatrix::from_columns(
            Rationals,
            2,
            vec![PolyVector::from_i64s(Rationals, &[&[0, -1], &[1]])],
        )
        .unwrap();
        let h = outer_product(&m).unwrap();
        assert_eq!(h, PolyVector::from_i64s(Rationals, &[&[-1], &[0, -1]]));
    }

    #[test]
    fn outer_product_running_example_is_proportional() {
        let a = running_example();
        let h = outer_product(&running_basis()).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(a.entry(i).mul(h.entry(j)), a.entry(j).mul(h.entry(i)));
            }
        }
    }

    #[test]
    fn zero_column_gives_zero_outer_product() {
        let m = MuBasisMatrix::from_columns(
            Rationals,
            3,
            vec![
                PolyVector::zero(Rationals, 3),
                PolyVector::from_i64s(Rationals, &[&[1, -2, -2, -1], &[2, 2, 1, 1], &[-3]]),
            ],
        )
        .unwrap();
        assert!(outer_product(&m).unwrap().is_zero());
        let report = check_outer_product(&running_example(), &m).unwrap();
        assert!(!report.report.passed);
        assert!(!check_lv_independence(&m).passed);
    }

    #[test]
    fn gcd_factor_is_respected() {
        let a = InputVector::from_i64s(Rationals, &[&[1, 1], &[0, 1, 1]]).unwrap();
        let m = compute_mu_basis(&a).unwrap();
        let reports = verify_all(&a, &m).unwrap();
        assert!(reports.iter().all(|r| r.passed), "{reports:?}");
        assert_eq!(gcd_via_mubasis(&a).unwrap(), qp(&[1, 1]));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd_via_mubasis(&running_example()).unwrap(), qp(&[1]));
        let c = InputVector::from_i64s(Rationals, &[&[7], &[7]]).unwrap();
        assert_eq!(gcd_via_mubasis(&c).unwrap(), qp(&[1]));
    }

    #[test]
    fn swapped_coefficients_fail_outer_product() {
        let mut cols = running_basis().into_columns();
        let mut entries = cols[1].clone().into_entries();
        entries[2] = qp(&[0, -3]);
        cols[1] = PolyVector::new(Rationals, entries);
        let m = MuBasisMatrix::from_columns(Rationals, 3, cols).unwrap();
        assert!(!check_outer_product(&running_example(), &m).unwrap().report.passed);
    }

    fn minors_one_by_one<F: Field>(m: &MuBasisMatrix<F>) -> PolyVector<F> {
        let rows = m.rows();
        let h = (0..m.n())
            .map(|i| {
                let minor = rows
                    .iter()
                    .enumerate()
                    .filter(|&(r, _)| r != i)
                    .map(|(_, row)| row.clone())
                    .collect();
                let det = bareiss_determinant(m.field(), minor).unwrap();
                if i % 2 == 0 {
                    det.neg()
                } else {
                    det
                }
            })
            .collect();
        PolyVector::new(m.field().clone(), h)
    }

    #[test]
    fn single_pass_minors_match_separate_determinants() {
        use rand::{Rng, SeedableRng};
        let f7 = PrimeField::new(7).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(21);
        for _ in 0..400 {
            let n = rng.gen_range(2..=6);
            let cols = (0..n - 1)
                .map(|_| {
                    let entries = (0..n)
                        .map(|_| {
                            let len = rng.gen_range(0..=3);
                            // mostly zero coefficients force row swaps and rank loss
                            let c: Vec<i64> = (0..len)
                                .map(|_| if rng.gen_bool(0.5) { 0 } else { rng.gen_range(1..7) })
                                .collect();
                            Polynomial::from_i64s(f7, &c)
                        })
                        .collect();
                    PolyVector::new(f7, entries)
                })
                .collect();
            let m = MuBasisMatrix::from_columns(f7, n, cols).unwrap();
            assert_eq!(outer_product(&m).unwrap(), minors_one_by_one(&m));
        }
        assert_eq!(outer_product(&running_basis()).unwrap(), minors_one_by_one(&running_basis()));
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let f7 = PrimeField::new(7).unwrap();
        let p = |c: &[i64]| Polynomial::from_i64s(f7, c);
        let rows = vec![
            vec![p(&[0]), p(&[1, 2]), p(&[3])],
            vec![p(&[0, 1]), p(&[4]), p(&[1, 0, 1])],
            vec![p(&[2]), p(&[5, 1]), p(&[6])],
        ];
        let cofactor = {
            let m = &rows;
            let minor = |a: usize, b: usize, c: usize, d: usize| {
                m[1][a].mul(&m[2][b]).sub(&m[1][c].mul(&m[2][d]))
            };
            m[0][0]
                .mul(&minor(1, 2, 2, 1))
                .sub(&m[0][1].mul(&minor(0, 2, 2, 0)))
                .add(&m[0][2].mul(&minor(0, 1, 1, 0)))
        };
        assert_eq!(bareiss_determinant(&f7, rows).unwrap(), cofactor);
    }
}
