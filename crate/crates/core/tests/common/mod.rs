//! Helpers shared by the integration tests: random inputs built from plain
//! integers and oracles that do not go through the library's algorithms.
#![allow(dead_code)]

use mubasis::{Field, InputVector, PolyVector, Polynomial};
use rand::Rng;

/// Integer coefficient range for random inputs: `-9..=9` over the rationals,
/// `0..p` over a prime field.
#[derive(Clone, Copy, Debug)]
pub struct Coeffs {
    pub modulus: Option<i64>,
}

impl Coeffs {
    pub const RATIONAL: Coeffs = Coeffs { modulus: None };

    pub fn prime(p: i64) -> Self {
        Coeffs { modulus: Some(p) }
    }

    pub fn any<R: Rng>(&self, rng: &mut R) -> i64 {
        match self.modulus {
            None => rng.gen_range(-9..=9),
            Some(p) => rng.gen_range(0..p),
        }
    }

    pub fn nonzero<R: Rng>(&self, rng: &mut R) -> i64 {
        loop {
            let c = self.any(rng);
            if self.reduce(c) != 0 {
                return c;
            }
        }
    }

    pub fn reduce(&self, c: i64) -> i64 {
        match self.modulus {
            None => c,
            Some(p) => c.rem_euclid(p),
        }
    }
}

/// `n` coefficient lists of degree at most `d`, the first of degree exactly `d`
/// after a random rotation.
pub fn random_coeffs<R: Rng>(rng: &mut R, c: Coeffs, n: usize, d: usize) -> Vec<Vec<i64>> {
    let mut a: Vec<Vec<i64>> = (0..n)
        .map(|_| (0..=d).map(|_| c.any(rng)).collect())
        .collect();
    let lead = rng.gen_range(0..n);
    a[lead][d] = c.nonzero(rng);
    a
}

pub fn convolve(x: &[i64], y: &[i64]) -> Vec<i64> {
    if x.is_empty() || y.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i64; x.len() + y.len() - 1];
    for (i, a) in x.iter().enumerate() {
        for (j, b) in y.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

/// A random input of degree exactly `d` with a forced common factor `g` of
/// degree `e`; returns the entries and `g`.
pub fn with_common_factor<R: Rng>(
    rng: &mut R,
    c: Coeffs,
    n: usize,
    d: usize,
    e: usize,
) -> (Vec<Vec<i64>>, Vec<i64>) {
    assert!(e <= d);
    let mut g: Vec<i64> = (0..=e).map(|_| c.any(rng)).collect();
    g[e] = c.nonzero(rng);
    let b = random_coeffs(rng, c, n, d - e);
    let a = b
        .iter()
        .map(|bi| convolve(bi, &g).into_iter().map(|x| c.reduce(x)).collect())
        .collect();
    (a, g)
}

pub fn input<F: Field>(field: &F, coeffs: &[Vec<i64>]) -> InputVector<F> {
    let refs: Vec<&[i64]> = coeffs.iter().map(Vec::as_slice).collect();
    InputVector::from_i64s(field.clone(), &refs).expect("nonzero input")
}

pub fn is_zero_input(coeffs: &[Vec<i64>], c: Coeffs) -> bool {
    coeffs.iter().flatten().all(|&x| c.reduce(x) == 0)
}

/// The coefficient matrix over `Z/p`, built entry by entry: column `q`
/// (1-based) is entry `(q - 1) % n` of `a` shifted down by `(q - 1) / n`.
pub fn coefficient_matrix_mod(a: &[Vec<i64>], d: usize, p: i64) -> Vec<Vec<i64>> {
    let n = a.len();
    let rows = 2 * d + 1;
    let cols = n * (d + 1);
    let mut m = vec![vec![0i64; cols]; rows];
    for q in 0..cols {
        let (r, k) = (q % n, q / n);
        for (t, &c) in a[r].iter().enumerate() {
            if t + k < rows {
                m[t + k][q] = c.rem_euclid(p);
            }
        }
    }
    m
}

fn inv_mod(x: i64, p: i64) -> i64 {
    let mut result = 1i64;
    let mut base = x.rem_euclid(p);
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

/// Full textbook Gauss-Jordan reduction mod `p`; returns the reduced matrix
/// and, per column, whether it holds a pivot.
pub fn rref_mod(mut m: Vec<Vec<i64>>, p: i64) -> (Vec<Vec<i64>>, Vec<bool>) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut is_pivot = vec![false; cols];
    let mut r = 0;
    for j in 0..cols {
        let Some(found) = (r..rows).find(|&i| m[i][j] != 0) else {
            continue;
        };
        m.swap(r, found);
        let inv = inv_mod(m[r][j], p);
        for x in m[r].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..rows {
            if i != r && m[i][j] != 0 {
                let factor = m[i][j];
                for k in 0..cols {
                    m[i][k] = (m[i][k] - factor * m[r][k]).rem_euclid(p);
                }
            }
        }
        is_pivot[j] = true;
        r += 1;
        if r == rows {
            break;
        }
    }
    (m, is_pivot)
}

/// Determinant of a small polynomial matrix by the Leibniz formula.
pub fn leibniz_det<F: Field>(field: &F, m: &[Vec<Polynomial<F>>]) -> Polynomial<F> {
    let size = m.len();
    let mut perm: Vec<usize> = (0..size).collect();
    let mut total = Polynomial::zero(field.clone());
    permute(&mut perm, 0, &mut |p| {
        let mut term = Polynomial::one(field.clone());
        for (i, &j) in p.iter().enumerate() {
            term = term.mul(&m[i][j]);
        }
        if parity(p) {
            total = total.sub(&term);
        } else {
            total = total.add(&term);
        }
    });
    total
}

fn permute(p: &mut Vec<usize>, k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k == p.len() {
        visit(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, visit);
        p.swap(k, i);
    }
}

/// `true` for odd permutations.
fn parity(p: &[usize]) -> bool {
    let mut odd = false;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                odd = !odd;
            }
        }
    }
    odd
}

/// Signed maximal minors of the `n x (n-1)` matrix with the given columns, by
/// cofactor expansion.
pub fn minors_by_expansion<F: Field>(field: &F, columns: &[PolyVector<F>]) -> Vec<Polynomial<F>> {
    let n = columns.len() + 1;
    (0..n)
        .map(|skip| {
            let minor: Vec<Vec<Polynomial<F>>> = (0..n)
                .filter(|&r| r != skip)
                .map(|r| columns.iter().map(|c| c.entry(r).clone()).collect())
                .collect();
            let det = leibniz_det(field, &minor);
            if (skip + 1) % 2 == 1 {
                det.neg()
            } else {
                det
            }
        })
        .collect()
}
