//! Dense univariate polynomials and polynomial column vectors.

use std::cmp::Ordering;
use std::fmt;

use crate::arith::Field;
use crate::error::{Error, Result};

/// Degree of a polynomial or polynomial vector. The zero polynomial has degree
/// [`Degree::NegInfinity`], which orders below every finite degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Degree::Finite(_))
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// A polynomial in `s`, with `coeffs[i]` the coefficient of `s^i`. The vector
/// is always trimmed: empty for zero, otherwise with a nonzero last entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> Polynomial<F> {
    pub fn new(field: F, coeffs: Vec<F::Elem>) -> Self {
        let mut p = Polynomial { field, coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(field: F, coeffs: &[i64]) -> Self {
        let coeffs = coeffs.iter().map(|&c| field.from_i64(c)).collect();
        Self::new(field, coeffs)
    }

    pub fn zero(field: F) -> Self {
        Polynomial {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: F) -> Self {
        let one = field.one();
        Polynomial {
            field,
            coeffs: vec![one],
        }
    }

    pub fn constant(field: F, c: F::Elem) -> Self {
        Self::new(field, vec![c])
    }

    /// `c * s^k`
    pub fn monomial(field: F, c: F::Elem, k: usize) -> Self {
        if field.is_zero(&c) {
            return Self::zero(field);
        }
        let mut coeffs = vec![field.zero(); k + 1];
        coeffs[k] = c;
        Polynomial { field, coeffs }
    }

    fn trim(&mut self) {
        while self
            .coeffs
            .last()
            .is_some_and(|c| self.field.is_zero(c))
        {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F::Elem> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            len => Degree::Finite(len - 1),
        }
    }

    /// Coefficient of `s^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> F::Elem {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn leading_coeff(&self) -> Option<&F::Elem> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(x), Some(y)) => f.add(x, y),
                (Some(x), None) => x.clone(),
                (None, Some(y)) => y.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Self::new(f.clone(), coeffs)
    }

    pub fn neg(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|c| self.field.neg(c)).collect();
        Polynomial {
            field: self.field.clone(),
            coeffs,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        if self.field.is_zero(c) {
            return Self::zero(self.field.clone());
        }
        let coeffs = self.coeffs.iter().map(|x| self.field.mul(x, c)).collect();
        Polynomial {
            field: self.field.clone(),
            coeffs,
        }
    }

    /// Multiplication by `s^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![self.field.zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial {
            field: self.field.clone(),
            coeffs,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Self::zero(f.clone());
        }
        let mut coeffs = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (j, y) in other.coeffs.iter().enumerate() {
                f.add_mul_assign(&mut coeffs[i + j], x, y);
            }
        }
        Self::new(f.clone(), coeffs)
    }

    /// Long division: `self = quotient * divisor + remainder` with
    /// `deg(remainder) < deg(divisor)`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let f = &self.field;
        let lead = divisor.leading_coeff().ok_or(Error::DivisionByZero)?;
        let lead_inv = f.inv(lead)?;
        let dlen = divisor.coeffs.len();
        if self.coeffs.len() < dlen {
            return Ok((Self::zero(f.clone()), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![f.zero(); rem.len() - dlen + 1];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dlen - 1];
            if f.is_zero(top) {
                continue;
            }
            let q = f.mul(top, &lead_inv);
            let neg_q = f.neg(&q);
            for (i, d) in divisor.coeffs.iter().enumerate() {
                f.add_mul_assign(&mut rem[k + i], &neg_q, d);
            }
            quot[k] = q;
        }
        rem.truncate(dlen - 1);
        Ok((Self::new(f.clone(), quot), Self::new(f.clone(), rem)))
    }

    /// Exact division; fails when the remainder is nonzero.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::InternalContradiction(
                "inexact polynomial division".into(),
            ));
        }
        Ok(q)
    }

    /// Scales to leading coefficient one; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => self.scale(&self.field.inv(lc).expect("nonzero leading coefficient")),
        }
    }

    pub fn eval(&self, x: &F::Elem) -> F::Elem {
        let f = &self.field;
        self.coeffs.iter().rev().fold(f.zero(), |acc, c| {
            let mut next = c.clone();
            f.add_mul_assign(&mut next, &acc, x);
            next
        })
    }
}

/// Monic gcd of two polynomials by the Euclidean algorithm; `gcd(0, 0) = 0`.
pub fn gcd<F: Field>(a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_zero() {
        let (_, r) = x.div_rem(&y).expect("nonzero divisor");
        x = y;
        y = r;
    }
    x.monic()
}

impl<F: Field> fmt::Display for Polynomial<F> {
    /// Human-readable form such as `1 - 2*s + s^3`, for display only.
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(out, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if self.field.is_zero(c) {
                continue;
            }
            let text = self.field.format_elem(c);
            let (negative, magnitude) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            if first {
                if negative {
                    write!(out, "-")?;
                }
            } else {
                write!(out, " {} ", if negative { "-" } else { "+" })?;
            }
            first = false;
            let unit = magnitude == "1";
            match k {
                0 => write!(out, "{magnitude}")?,
                _ => {
                    if !unit {
                        write!(out, "{magnitude}*")?;
                    }
                    if k == 1 {
                        write!(out, "s")?;
                    } else {
                        write!(out, "s^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// A column vector of polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyVector<F: Field> {
    field: F,
    entries: Vec<Polynomial<F>>,
}

impl<F: Field> PolyVector<F> {
    pub fn new(field: F, entries: Vec<Polynomial<F>>) -> Self {
        debug_assert!(entries.iter().all(|p| *p.field() == field));
        PolyVector { field, entries }
    }

    pub fn from_i64s(field: F, entries: &[&[i64]]) -> Self {
        let entries = entries
            .iter()
            .map(|c| Polynomial::from_i64s(field.clone(), c))
            .collect();
        Self::new(field, entries)
    }

    pub fn zero(field: F, n: usize) -> Self {
        let entries = vec![Polynomial::zero(field.clone()); n];
        PolyVector { field, entries }
    }

    /// The `i`-th standard basis vector times `s^k` (0-based `i`).
    pub fn unit(field: F, n: usize, i: usize, k: usize) -> Self {
        let mut v = Self::zero(field.clone(), n);
        v.entries[i] = Polynomial::monomial(field.clone(), field.one(), k);
        v
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Polynomial<F>] {
        &self.entries
    }

    pub fn entry(&self, i: usize) -> &Polynomial<F> {
        &self.entries[i]
    }

    pub fn into_entries(self) -> Vec<Polynomial<F>> {
        self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    /// Maximum degree over the entries.
    pub fn degree(&self) -> Degree {
        self.entries
            .iter()
            .map(Polynomial::degree)
            .max()
            .unwrap_or(Degree::NegInfinity)
    }

    /// Coefficients of `s^deg(self)` across the entries.
    pub fn leading_vector(&self) -> Result<Vec<F::Elem>> {
        let Degree::Finite(t) = self.degree() else {
            return Err(Error::UndefinedLeadingVector);
        };
        Ok(self.entries.iter().map(|p| p.coeff(t)).collect())
    }

    /// Coefficient vector of `s^k` across the entries.
    pub fn coefficient_block(&self, k: usize) -> Vec<F::Elem> {
        self.entries.iter().map(|p| p.coeff(k)).collect()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_len(other.len())?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(x, y)| x.add(y))
            .collect();
        Ok(Self::new(self.field.clone(), entries))
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        self.map(|p| p.scale(c))
    }

    pub fn shift(&self, k: usize) -> Self {
        self.map(|p| p.shift(k))
    }

    pub fn mul_poly(&self, g: &Polynomial<F>) -> Self {
        self.map(|p| p.mul(g))
    }

    pub fn map(&self, f: impl FnMut(&Polynomial<F>) -> Polynomial<F>) -> Self {
        Self::new(self.field.clone(), self.entries.iter().map(f).collect())
    }

    /// `c * self` with coprime integer coefficients over the rationals, and
    /// the factor `c`. Over other fields `c = 1`.
    pub fn primitive(&self) -> (Self, F::Elem) {
        let mut flat: Vec<F::Elem> = self
            .entries
            .iter()
            .flat_map(|p| p.coeffs().iter().cloned())
            .collect();
        let factor = self.field.make_integral(&mut flat);
        let mut rest = flat.into_iter();
        let entries = self
            .entries
            .iter()
            .map(|p| Polynomial::new(self.field.clone(), rest.by_ref().take(p.coeffs().len()).collect()))
            .collect();
        (Self::new(self.field.clone(), entries), factor)
    }

    fn check_len(&self, found: usize) -> Result<()> {
        if found != self.len() {
            return Err(Error::Dimension {
                expected: self.len(),
                found,
            });
        }
        Ok(())
    }
}

impl<F: Field> fmt::Display for PolyVector<F> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "[")?;
        for (i, p) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(out, ", ")?;
            }
            write!(out, "{p}")?;
        }
        write!(out, "]")
    }
}

/// The row vector `a = [a_1, ..., a_n]` whose syzygies are sought. Always has
/// `n >= 2` entries, not all zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputVector<F: Field> {
    inner: PolyVector<F>,
    degree: usize,
}

impl<F: Field> InputVector<F> {
    pub fn new(field: F, entries: Vec<Polynomial<F>>) -> Result<Self> {
        Self::from_vector(PolyVector::new(field, entries))
    }

    pub fn from_vector(inner: PolyVector<F>) -> Result<Self> {
        if inner.len() < 2 {
            return Err(Error::TooFewEntries(inner.len()));
        }
        let Degree::Finite(degree) = inner.degree() else {
            return Err(Error::ZeroVector);
        };
        Ok(InputVector { inner, degree })
    }

    pub fn from_i64s(field: F, entries: &[&[i64]]) -> Result<Self> {
        Self::from_vector(PolyVector::from_i64s(field, entries))
    }

    pub fn field(&self) -> &F {
        self.inner.field()
    }

    pub fn n(&self) -> usize {
        self.inner.len()
    }

    /// `d = deg(a)`, always finite.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn entries(&self) -> &[Polynomial<F>] {
        self.inner.entries()
    }

    pub fn entry(&self, i: usize) -> &Polynomial<F> {
        self.inner.entry(i)
    }

    pub fn as_vector(&self) -> &PolyVector<F> {
        &self.inner
    }

    /// Row vector `c_j` with `a = sum_j c_j s^j`.
    pub fn coefficient_row(&self, j: usize) -> Vec<F::Elem> {
        self.inner.coefficient_block(j)
    }

    pub fn leading_vector(&self) -> Vec<F::Elem> {
        self.coefficient_row(self.degree)
    }

    /// `a . h = sum_i a_i h_i`
    pub fn dot(&self, h: &PolyVector<F>) -> Result<Polynomial<F>> {
        self.inner.check_len(h.len())?;
        let mut acc = Polynomial::zero(self.field().clone());
        for (a, x) in self.entries().iter().zip(h.entries()) {
            acc = acc.add(&a.mul(x));
        }
        Ok(acc)
    }

    /// Monic gcd of the entries by iterated Euclid.
    pub fn euclid_gcd(&self) -> Polynomial<F> {
        self.entries()
            .iter()
            .fold(Polynomial::zero(self.field().clone()), |g, a| gcd(&g, a))
    }
}

/// Orders polynomial vectors by degree, for sorting bases.
pub fn cmp_degree<F: Field>(x: &PolyVector<F>, y: &PolyVector<F>) -> Ordering {
    x.degree().cmp(&y.degree())
}
