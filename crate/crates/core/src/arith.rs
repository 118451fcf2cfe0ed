//! Exact scalar arithmetic over the rationals and over prime fields.
//!
//! Algorithms in this crate are generic over the [`Field`] trait. A field value
//! is a small context object (`Rationals` is zero-sized, `PrimeField` carries
//! its modulus) that performs arithmetic on plain element values, so element
//! storage stays compact in the dense elimination matrices.
//!
//! [`FieldScalar`] is the self-describing counterpart used at the text and
//! binding boundaries, where operands from different fields must be rejected
//! at runtime rather than at compile time.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// A computable field with exact arithmetic.
pub trait Field: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + fmt::Debug + Send + Sync;

    fn spec(&self) -> FieldSpec;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, value: i64) -> Self::Elem;
    fn is_zero(&self, x: &Self::Elem) -> bool;

    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn sub(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn neg(&self, x: &Self::Elem) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn inv(&self, x: &Self::Elem) -> Result<Self::Elem>;

    fn div(&self, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(x, &self.inv(y)?))
    }

    fn is_one(&self, x: &Self::Elem) -> bool {
        *x == self.one()
    }

    /// `acc += w * x`
    fn add_mul_assign(&self, acc: &mut Self::Elem, w: &Self::Elem, x: &Self::Elem) {
        *acc = self.add(acc, &self.mul(w, x));
    }

    /// Parses the text form of an element. Errors carry only a message; the
    /// caller attaches the source position.
    fn parse_elem(&self, text: &str) -> std::result::Result<Self::Elem, String>;

    fn format_elem(&self, x: &Self::Elem) -> String;

    /// Draws a random element. Prime fields sample uniformly; the rationals
    /// sample integers in `-9..=9`.
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    /// Rescales a vector by a nonzero constant so that it has coprime integer
    /// entries, and returns that constant. Only meaningful over the rationals;
    /// elsewhere the vector is left alone and the factor is one.
    fn make_integral(&self, _values: &mut [Self::Elem]) -> Self::Elem {
        self.one()
    }
}

/// Runtime description of a supported field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    Prime(PrimeField),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        PrimeField::new(p).map(FieldSpec::Prime)
    }

    pub fn modulus(&self) -> Option<u64> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::Prime(f) => Some(f.modulus()),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "q"),
            FieldSpec::Prime(pf) => write!(f, "fp {}", pf.modulus()),
        }
    }
}

/// The field of rational numbers, backed by arbitrary-precision integers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rationals
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_i64(&self, value: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(value))
    }

    fn is_zero(&self, x: &BigRational) -> bool {
        x.is_zero()
    }

    // Integer operands skip the gcd normalization, which otherwise dominates
    // fraction-free elimination where every intermediate is an integer.

    fn add(&self, x: &BigRational, y: &BigRational) -> BigRational {
        if x.is_integer() && y.is_integer() {
            return BigRational::from_integer(x.numer() + y.numer());
        }
        x + y
    }

    fn sub(&self, x: &BigRational, y: &BigRational) -> BigRational {
        if x.is_integer() && y.is_integer() {
            return BigRational::from_integer(x.numer() - y.numer());
        }
        x - y
    }

    fn neg(&self, x: &BigRational) -> BigRational {
        -x
    }

    fn mul(&self, x: &BigRational, y: &BigRational) -> BigRational {
        if x.is_integer() && y.is_integer() {
            return BigRational::from_integer(x.numer() * y.numer());
        }
        x * y
    }

    fn inv(&self, x: &BigRational) -> Result<BigRational> {
        if x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(x.recip())
    }

    fn is_one(&self, x: &BigRational) -> bool {
        x.is_one()
    }

    fn add_mul_assign(&self, acc: &mut BigRational, w: &BigRational, x: &BigRational) {
        if w.is_zero() || x.is_zero() {
            return;
        }
        if acc.is_integer() && w.is_integer() && x.is_integer() {
            *acc = BigRational::from_integer(acc.numer() + w.numer() * x.numer());
            return;
        }
        *acc += w * x;
    }

    fn parse_elem(&self, text: &str) -> std::result::Result<BigRational, String> {
        parse_rational(text)
    }

    fn format_elem(&self, x: &BigRational) -> String {
        x.to_string()
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        self.from_i64(rng.gen_range(-9..=9))
    }

    fn make_integral(&self, values: &mut [BigRational]) -> BigRational {
        let mut denom_lcm = BigInt::one();
        let mut numer_gcd = BigInt::zero();
        for v in values.iter() {
            if v.is_zero() {
                continue;
            }
            denom_lcm = denom_lcm.lcm(v.denom());
            numer_gcd = numer_gcd.gcd(v.numer());
        }
        if numer_gcd.is_zero() {
            return BigRational::one();
        }
        let scale = BigRational::new(denom_lcm, numer_gcd);
        for v in values.iter_mut() {
            *v = &*v * &scale;
        }
        scale
    }
}

fn parse_rational(text: &str) -> std::result::Result<BigRational, String> {
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let numer = BigInt::from_str(num).map_err(|_| format!("invalid rational `{text}`"))?;
    let denom = match den {
        Some(d) => BigInt::from_str(d).map_err(|_| format!("invalid rational `{text}`"))?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(format!("zero denominator in `{text}`"));
    }
    Ok(BigRational::new(numer, denom))
}

/// The prime field `F_p` for a word-sized prime `p`. Elements are canonical
/// residues in `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn reduce_i64(&self, value: i64) -> u64 {
        (value as i128).rem_euclid(self.p as i128) as u64
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime(*self)
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn from_i64(&self, value: i64) -> u64 {
        self.reduce_i64(value)
    }

    fn is_zero(&self, x: &u64) -> bool {
        *x == 0
    }

    #[inline]
    fn add(&self, x: &u64, y: &u64) -> u64 {
        let (s, overflow) = x.overflowing_add(*y);
        if overflow || s >= self.p {
            s.wrapping_sub(self.p)
        } else {
            s
        }
    }

    #[inline]
    fn sub(&self, x: &u64, y: &u64) -> u64 {
        if x >= y {
            x - y
        } else {
            self.p - (y - x)
        }
    }

    #[inline]
    fn neg(&self, x: &u64) -> u64 {
        if *x == 0 {
            0
        } else {
            self.p - x
        }
    }

    #[inline]
    fn mul(&self, x: &u64, y: &u64) -> u64 {
        ((*x as u128 * *y as u128) % self.p as u128) as u64
    }

    fn inv(&self, x: &u64) -> Result<u64> {
        if *x == 0 {
            return Err(Error::DivisionByZero);
        }
        // extended Euclid on (x, p)
        let (mut r0, mut r1) = (self.p as i128, *x as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Ok(t0.rem_euclid(self.p as i128) as u64)
    }

    #[inline]
    fn add_mul_assign(&self, acc: &mut u64, w: &u64, x: &u64) {
        *acc = ((*acc as u128 + *w as u128 * *x as u128) % self.p as u128) as u64;
    }

    fn parse_elem(&self, text: &str) -> std::result::Result<u64, String> {
        let value = BigInt::from_str(text).map_err(|_| format!("invalid residue `{text}`"))?;
        let reduced = value.mod_floor(&BigInt::from(self.p));
        Ok(reduced.to_u64().expect("residue fits in u64"))
    }

    fn format_elem(&self, x: &u64) -> String {
        x.to_string()
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.p)
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &w in &WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &w in &WITNESSES {
        let mut x = pow_mod(w, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A field element that carries its field, for use where the field is only
/// known at runtime. Operations on scalars from different fields fail with
/// [`Error::FieldMismatch`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldScalar {
    Rational(BigRational),
    Residue { value: u64, field: PrimeField },
}

impl FieldScalar {
    pub fn rational(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(FieldScalar::Rational(BigRational::new(
            BigInt::from(numer),
            BigInt::from(denom),
        )))
    }

    pub fn residue(value: i64, field: PrimeField) -> Self {
        FieldScalar::Residue {
            value: field.reduce_i64(value),
            field,
        }
    }

    pub fn parse(spec: &FieldSpec, text: &str) -> Result<Self> {
        let to_err = |message: String| Error::Parse {
            line: 1,
            column: 1,
            message,
        };
        match spec {
            FieldSpec::Rationals => Rationals
                .parse_elem(text)
                .map(FieldScalar::Rational)
                .map_err(to_err),
            FieldSpec::Prime(field) => field
                .parse_elem(text)
                .map(|value| FieldScalar::Residue {
                    value,
                    field: *field,
                })
                .map_err(to_err),
        }
    }

    pub fn field(&self) -> FieldSpec {
        match self {
            FieldScalar::Rational(_) => FieldSpec::Rationals,
            FieldScalar::Residue { field, .. } => FieldSpec::Prime(*field),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldScalar::Rational(x) => x.is_zero(),
            FieldScalar::Residue { value, .. } => *value == 0,
        }
    }

    fn binary(
        &self,
        other: &Self,
        on_q: impl Fn(&BigRational, &BigRational) -> BigRational,
        on_p: impl Fn(&PrimeField, &u64, &u64) -> u64,
    ) -> Result<Self> {
        match (self, other) {
            (FieldScalar::Rational(x), FieldScalar::Rational(y)) => {
                Ok(FieldScalar::Rational(on_q(x, y)))
            }
            (
                FieldScalar::Residue { value: x, field },
                FieldScalar::Residue {
                    value: y,
                    field: other_field,
                },
            ) if field == other_field => Ok(FieldScalar::Residue {
                value: on_p(field, x, y),
                field: *field,
            }),
            _ => Err(Error::FieldMismatch {
                left: self.field().to_string(),
                right: other.field().to_string(),
            }),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.binary(other, |x, y| x + y, |f, x, y| f.add(x, y))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.binary(other, |x, y| x - y, |f, x, y| f.sub(x, y))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.binary(other, |x, y| x * y, |f, x, y| f.mul(x, y))
    }

    pub fn neg(&self) -> Self {
        match self {
            FieldScalar::Rational(x) => FieldScalar::Rational(-x),
            FieldScalar::Residue { value, field } => FieldScalar::Residue {
                value: field.neg(value),
                field: *field,
            },
        }
    }

    pub fn inv(&self) -> Result<Self> {
        match self {
            FieldScalar::Rational(x) => Rationals.inv(x).map(FieldScalar::Rational),
            FieldScalar::Residue { value, field } => field.inv(value).map(|v| {
                FieldScalar::Residue {
                    value: v,
                    field: *field,
                }
            }),
        }
    }
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldScalar::Rational(x) => write!(f, "{x}"),
            FieldScalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}
