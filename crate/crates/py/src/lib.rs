//! Python bindings. Polynomials cross the boundary as lists of coefficient
//! strings in ascending degree (`"3"`, `"-1/2"`), which are exact for both
//! fields; inputs accept anything whose `str()` parses in the chosen field,
//! so `int` and `fractions.Fraction` both work.

use mubasis::bench::Algorithm;
use mubasis::io::{format_coefficients, write_basis, write_input_vector, RawFile};
use mubasis::verify::{gcd_from_basis, outer_product, verify_all};
use mubasis::{
    compute_mu_basis_traced, Error, Field, FieldSpec, InputVector, MuBasisMatrix, PolyVector,
    Polynomial, PrimeField, Rationals,
};
use pyo3::exceptions::{PyTimeoutError, PyValueError};
use pyo3::prelude::*;

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Timeout => PyTimeoutError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn parse_field(text: &str) -> PyResult<FieldSpec> {
    let t = text.trim();
    if t == "q" {
        return Ok(FieldSpec::Rationals);
    }
    let p = t
        .strip_prefix("fp")
        .map(|rest| rest.trim_start_matches([' ', ':']))
        .and_then(|p| p.parse::<u64>().ok())
        .ok_or_else(|| PyValueError::new_err(format!("expected 'q' or 'fp <p>', got '{text}'")))?;
    FieldSpec::prime(p).map_err(to_py)
}

fn coeff_strings<F: Field>(p: &Polynomial<F>) -> Vec<String> {
    p.coeffs().iter().map(|c| p.field().format_elem(c)).collect()
}

fn vector_strings<F: Field>(v: &PolyVector<F>) -> Vec<Vec<String>> {
    v.entries().iter().map(coeff_strings).collect()
}

fn build_input<F: Field>(field: F, entries: &[Vec<String>]) -> PyResult<InputVector<F>> {
    let polys = entries
        .iter()
        .enumerate()
        .map(|(i, coeffs)| {
            let parsed = coeffs
                .iter()
                .map(|c| {
                    field.parse_elem(c.trim()).map_err(|m| {
                        PyValueError::new_err(format!("entry {}: {m}", i + 1))
                    })
                })
                .collect::<PyResult<Vec<_>>>()?;
            Ok(Polynomial::new(field.clone(), parsed))
        })
        .collect::<PyResult<Vec<_>>>()?;
    InputVector::new(field, polys).map_err(to_py)
}

#[derive(Clone)]
enum Vector {
    Q(InputVector<Rationals>),
    P(InputVector<PrimeField>),
}

#[derive(Clone)]
enum Basis {
    Q(MuBasisMatrix<Rationals>),
    P(MuBasisMatrix<PrimeField>),
}

macro_rules! each {
    ($value:expr, $enum:ident, $x:ident => $body:expr) => {
        match $value {
            $enum::Q($x) => $body,
            $enum::P($x) => $body,
        }
    };
}

/// A nonzero vector of n >= 2 polynomials over Q or F_p.
#[pyclass(name = "InputVector", module = "pymubasis", frozen)]
struct PyInputVector {
    inner: Vector,
}

#[pymethods]
impl PyInputVector {
    #[new]
    #[pyo3(signature = (entries, field = "q"))]
    fn new(entries: Vec<Vec<Bound<'_, PyAny>>>, field: &str) -> PyResult<Self> {
        let text: Vec<Vec<String>> = entries
            .iter()
            .map(|coeffs| {
                coeffs
                    .iter()
                    .map(|c| Ok(c.str()?.to_string()))
                    .collect::<PyResult<Vec<_>>>()
            })
            .collect::<PyResult<_>>()?;
        let inner = match parse_field(field)? {
            FieldSpec::Rationals => Vector::Q(build_input(Rationals, &text)?),
            FieldSpec::Prime(f) => Vector::P(build_input(f, &text)?),
        };
        Ok(PyInputVector { inner })
    }

    /// Parses the text file format.
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        let raw = RawFile::parse(text).map_err(to_py)?;
        let inner = match raw.field {
            FieldSpec::Rationals => Vector::Q(raw.input_vector(&Rationals).map_err(to_py)?),
            FieldSpec::Prime(f) => Vector::P(raw.input_vector(&f).map_err(to_py)?),
        };
        Ok(PyInputVector { inner })
    }

    fn to_text(&self) -> String {
        each!(&self.inner, Vector, a => write_input_vector(a))
    }

    #[getter]
    fn n(&self) -> usize {
        each!(&self.inner, Vector, a => a.n())
    }

    #[getter]
    fn degree(&self) -> usize {
        each!(&self.inner, Vector, a => a.degree())
    }

    #[getter]
    fn field(&self) -> String {
        each!(&self.inner, Vector, a => a.field().spec().to_string())
    }

    fn coefficients(&self) -> Vec<Vec<String>> {
        each!(&self.inner, Vector, a => vector_strings(a.as_vector()))
    }

    /// Monic gcd of the entries by the Euclidean algorithm.
    fn euclid_gcd(&self) -> Vec<String> {
        each!(&self.inner, Vector, a => coeff_strings(&a.euclid_gcd()))
    }

    fn __repr__(&self) -> String {
        each!(&self.inner, Vector, a => format!("InputVector({}, field='{}')", a.as_vector(), a.field().spec()))
    }
}

/// An n x (n-1) polynomial matrix given by its columns.
#[pyclass(name = "MuBasis", module = "pymubasis", frozen)]
struct PyMuBasis {
    inner: Basis,
}

#[pymethods]
impl PyMuBasis {
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        let raw = RawFile::parse(text).map_err(to_py)?;
        let inner = match raw.field {
            FieldSpec::Rationals => Basis::Q(raw.basis(&Rationals).map_err(to_py)?),
            FieldSpec::Prime(f) => Basis::P(raw.basis(&f).map_err(to_py)?),
        };
        Ok(PyMuBasis { inner })
    }

    fn to_text(&self) -> String {
        each!(&self.inner, Basis, m => write_basis(m))
    }

    #[getter]
    fn n(&self) -> usize {
        each!(&self.inner, Basis, m => m.n())
    }

    /// Column degrees; `None` for a zero column.
    #[getter]
    fn degrees(&self) -> Vec<Option<usize>> {
        each!(&self.inner, Basis, m => m.degrees().into_iter().map(|d| d.finite()).collect())
    }

    /// Columns as lists of coefficient lists.
    fn columns(&self) -> Vec<Vec<Vec<String>>> {
        each!(&self.inner, Basis, m => m.columns().iter().map(vector_strings).collect())
    }

    /// Signed maximal minors of the matrix.
    fn outer_product(&self) -> PyResult<Vec<Vec<String>>> {
        each!(&self.inner, Basis, m => Ok(vector_strings(&outer_product(m).map_err(to_py)?)))
    }

    /// `(label, passed, detail)` for the four μ-basis checks against `a`.
    fn verify(&self, a: &PyInputVector) -> PyResult<Vec<(String, bool, String)>> {
        let reports = match (&self.inner, &a.inner) {
            (Basis::Q(m), Vector::Q(v)) => verify_all(v, m),
            (Basis::P(m), Vector::P(v)) if m.field() == v.field() => verify_all(v, m),
            _ => {
                return Err(PyValueError::new_err(format!(
                    "basis over {} cannot be checked against a vector over {}",
                    each!(&self.inner, Basis, m => m.field().spec()),
                    a.field()
                )))
            }
        }
        .map_err(to_py)?;
        Ok(reports
            .into_iter()
            .map(|r| (r.kind.label().to_string(), r.passed, r.detail))
            .collect())
    }

    fn __repr__(&self) -> String {
        format!("MuBasis(n={}, degrees={:?})", self.n(), self.degrees())
    }
}

fn algorithm(name: &str) -> PyResult<Algorithm> {
    name.parse().map_err(PyValueError::new_err)
}

/// A μ-basis of `a`, by `algorithm` "hhk" (default) or "sg".
#[pyfunction]
#[pyo3(signature = (a, algorithm = "hhk"))]
fn compute_mu_basis(py: Python<'_>, a: &PyInputVector, algorithm: &str) -> PyResult<PyMuBasis> {
    let alg = self::algorithm(algorithm)?;
    let inner = a.inner.clone();
    let basis = py.detach(move || match inner {
        Vector::Q(v) => alg.run_until(&v, None).map(Basis::Q),
        Vector::P(v) => alg.run_until(&v, None).map(Basis::P),
    });
    Ok(PyMuBasis {
        inner: basis.map_err(to_py)?,
    })
}

/// Pivot and basic non-pivot column indices (1-based) of the partial
/// row-echelon reduction.
#[pyfunction]
fn echelon_structure(a: &PyInputVector) -> PyResult<(Vec<usize>, Vec<usize>)> {
    each!(&a.inner, Vector, v => {
        let run = compute_mu_basis_traced(v).map_err(to_py)?;
        Ok((run.workspace.pivots().to_vec(), run.workspace.basic_nonpivots().to_vec()))
    })
}

/// Monic gcd of the entries, by `method` "mubasis" (default) or "euclid".
#[pyfunction]
#[pyo3(signature = (a, method = "mubasis"))]
fn gcd(a: &PyInputVector, method: &str) -> PyResult<Vec<String>> {
    each!(&a.inner, Vector, v => {
        let g = match method {
            "mubasis" => {
                let m = compute_mu_basis_traced(v).map_err(to_py)?.basis;
                gcd_from_basis(v, &m).map_err(to_py)?
            }
            "euclid" => v.euclid_gcd(),
            other => return Err(PyValueError::new_err(format!("unknown method '{other}'"))),
        };
        Ok(coeff_strings(&g))
    })
}

/// μ-basis degrees predicted from basic non-pivot indices.
#[pyfunction]
fn predict_degrees(basic_nonpivots: Vec<usize>, n: usize) -> PyResult<Vec<usize>> {
    if n == 0 || basic_nonpivots.contains(&0) {
        return Err(PyValueError::new_err("indices are 1-based and n must be positive"));
    }
    Ok(mubasis::predict_degrees(&basic_nonpivots, n))
}

/// One coefficient line of the text format.
#[pyfunction]
#[pyo3(signature = (coefficients, field = "q"))]
fn format_polynomial(coefficients: Vec<Bound<'_, PyAny>>, field: &str) -> PyResult<String> {
    let text = coefficients
        .iter()
        .map(|c| Ok(c.str()?.to_string()))
        .collect::<PyResult<Vec<_>>>()?;
    let line = match parse_field(field)? {
        FieldSpec::Rationals => {
            let v = build_input(Rationals, &[text, vec!["1".into()]])?;
            format_coefficients(v.entry(0))
        }
        FieldSpec::Prime(f) => {
            let v = build_input(f, &[text, vec!["1".into()]])?;
            format_coefficients(v.entry(0))
        }
    };
    Ok(line)
}

#[pymodule]
fn pymubasis(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyInputVector>()?;
    m.add_class::<PyMuBasis>()?;
    m.add_function(wrap_pyfunction!(compute_mu_basis, m)?)?;
    m.add_function(wrap_pyfunction!(echelon_structure, m)?)?;
    m.add_function(wrap_pyfunction!(gcd, m)?)?;
    m.add_function(wrap_pyfunction!(predict_degrees, m)?)?;
    m.add_function(wrap_pyfunction!(format_polynomial, m)?)?;
    Ok(())
}
