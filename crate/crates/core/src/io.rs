//! Text formats for input vectors and bases.
//!
//! ```text
//! field q            # or: field fp 5
//! n 3
//! 1 0 1 0 1          # one line per polynomial, ascending degree
//! 1 0 0 1 1
//! 1 0 0 0 1
//! ```
//!
//! A basis file has the same header followed by `n - 1` blocks of `n` lines,
//! column by column. Lines whose first non-blank character is `#` and blank
//! lines are ignored, as is anything after a `#` on a data line. The zero
//! polynomial is written `0`.

use std::fmt::Write as _;

use crate::arith::{Field, FieldSpec};
use crate::basis::MuBasisMatrix;
use crate::error::{Error, Result};
use crate::poly::{InputVector, PolyVector, Polynomial};

#[derive(Clone, Debug, PartialEq, Eq)]
struct Token {
    text: String,
    column: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct DataLine {
    line: usize,
    tokens: Vec<Token>,
}

/// A file split into its header and untyped coefficient lines. Coefficients
/// are parsed once the field is known, so errors still carry positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawFile {
    pub field: FieldSpec,
    pub n: usize,
    lines: Vec<DataLine>,
    last_line: usize,
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn tokenize(line: &str) -> Vec<Token> {
    let content = line.split('#').next().unwrap_or("");
    let mut tokens = Vec::new();
    let mut start = None;
    for (idx, ch) in content.char_indices().chain(std::iter::once((content.len(), ' '))) {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(idx),
            (true, Some(s)) => {
                tokens.push(Token {
                    text: content[s..idx].to_string(),
                    column: content[..s].chars().count() + 1,
                });
                start = None;
            }
            _ => {}
        }
    }
    tokens
}

fn parse_field(line: &DataLine) -> Result<FieldSpec> {
    let words: Vec<&str> = line.tokens.iter().map(|t| t.text.as_str()).collect();
    let col = |i: usize| line.tokens.get(i).map_or(1, |t| t.column);
    match words.as_slice() {
        ["field", "q"] => Ok(FieldSpec::Rationals),
        ["field", "fp", p] => {
            let p: u64 = p
                .parse()
                .map_err(|_| parse_error(line.line, col(2), format!("invalid modulus `{p}`")))?;
            FieldSpec::prime(p).map_err(|e| parse_error(line.line, col(2), e.to_string()))
        }
        _ => Err(parse_error(
            line.line,
            col(0),
            "expected `field q` or `field fp <p>`",
        )),
    }
}

fn parse_count(line: &DataLine) -> Result<usize> {
    let col = |i: usize| line.tokens.get(i).map_or(1, |t| t.column);
    match line.tokens.as_slice() {
        [key, value] if key.text == "n" => value
            .text
            .parse()
            .map_err(|_| parse_error(line.line, col(1), format!("invalid count `{}`", value.text))),
        _ => Err(parse_error(line.line, col(0), "expected `n <count>`")),
    }
}

impl RawFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut data = Vec::new();
        let mut last_line = 0;
        for (idx, line) in text.lines().enumerate() {
            last_line = idx + 1;
            let tokens = tokenize(line);
            if !tokens.is_empty() {
                data.push(DataLine {
                    line: idx + 1,
                    tokens,
                });
            }
        }
        let mut it = data.into_iter();
        let header = it
            .next()
            .ok_or_else(|| parse_error(last_line.max(1), 1, "missing `field` line"))?;
        let field = parse_field(&header)?;
        let count = it
            .next()
            .ok_or_else(|| parse_error(last_line.max(1), 1, "missing `n` line"))?;
        let n = parse_count(&count)?;
        Ok(RawFile {
            field,
            n,
            lines: it.collect(),
            last_line,
        })
    }

    /// Number of coefficient lines after the header.
    pub fn data_lines(&self) -> usize {
        self.lines.len()
    }

    fn expect_lines(&self, expected: usize) -> Result<()> {
        match self.lines.len() {
            found if found == expected => Ok(()),
            found if found > expected => Err(parse_error(
                self.lines[expected].line,
                1,
                format!("expected {expected} coefficient lines, found {found}"),
            )),
            found => Err(parse_error(
                self.last_line.max(1),
                1,
                format!("expected {expected} coefficient lines, found {found}"),
            )),
        }
    }

    /// All coefficient lines as polynomials over `field`, which must be the
    /// declared field.
    pub fn polynomials<F: Field>(&self, field: &F) -> Result<Vec<Polynomial<F>>> {
        if field.spec() != self.field {
            return Err(Error::FieldMismatch {
                left: self.field.to_string(),
                right: field.spec().to_string(),
            });
        }
        self.lines
            .iter()
            .map(|line| {
                let coeffs = line
                    .tokens
                    .iter()
                    .map(|t| {
                        field
                            .parse_elem(&t.text)
                            .map_err(|m| parse_error(line.line, t.column, m))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Polynomial::new(field.clone(), coeffs))
            })
            .collect()
    }

    pub fn input_vector<F: Field>(&self, field: &F) -> Result<InputVector<F>> {
        self.expect_lines(self.n)?;
        InputVector::new(field.clone(), self.polynomials(field)?)
    }

    pub fn basis<F: Field>(&self, field: &F) -> Result<MuBasisMatrix<F>> {
        if self.n < 2 {
            return Err(Error::TooFewEntries(self.n));
        }
        self.expect_lines(self.n * (self.n - 1))?;
        let polys = self.polynomials(field)?;
        let columns = polys
            .chunks(self.n)
            .map(|c| PolyVector::new(field.clone(), c.to_vec()))
            .collect();
        MuBasisMatrix::from_columns(field.clone(), self.n, columns)
    }
}

/// One coefficient line, ascending degree; `0` for the zero polynomial.
pub fn format_coefficients<F: Field>(p: &Polynomial<F>) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let field = p.field();
    p.coeffs()
        .iter()
        .map(|c| field.format_elem(c))
        .collect::<Vec<_>>()
        .join(" ")
}

fn header(out: &mut String, spec: FieldSpec, n: usize) {
    writeln!(out, "field {spec}").unwrap();
    writeln!(out, "n {n}").unwrap();
}

pub fn write_input_vector<F: Field>(a: &InputVector<F>) -> String {
    let mut out = String::new();
    header(&mut out, a.field().spec(), a.n());
    for p in a.entries() {
        out.push_str(&format_coefficients(p));
        out.push('\n');
    }
    out
}

pub fn write_basis<F: Field>(m: &MuBasisMatrix<F>) -> String {
    let mut out = String::new();
    header(&mut out, m.field().spec(), m.n());
    for (j, col) in m.columns().iter().enumerate() {
        writeln!(out, "# column {}, degree {}", j + 1, col.degree()).unwrap();
        for p in col.entries() {
            out.push_str(&format_coefficients(p));
            out.push('\n');
        }
    }
    out
}
