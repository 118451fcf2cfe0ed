//! Seeded random inputs and a timing grid comparing the two μ-basis
//! algorithms.
//!
//! Inputs come from ChaCha8 seeded with the configured seed; each `(d, n)`
//! cell uses its own stream `(d << 32) | n`, so a cell's input does not depend
//! on which other cells are in the grid. ChaCha output is specified
//! bit-for-bit, which keeps generated inputs identical across platforms.

use std::fmt;
use std::io::Write;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{Field, FieldSpec, PrimeField, Rationals};
use crate::basis::MuBasisMatrix;
use crate::error::{Error, Result};
use crate::hhk::compute_mu_basis_until;
use crate::poly::{InputVector, Polynomial};
use crate::sg::sg_mu_basis_until;
use crate::verify::check_syzygies;

pub const CSV_HEADER: [&str; 5] = ["d", "n", "algorithm", "mean_seconds", "status"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Hhk,
    Sg,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Hhk => "hhk",
            Algorithm::Sg => "sg",
        }
    }

    pub fn run_until<F: Field>(
        self,
        a: &InputVector<F>,
        deadline: Option<Instant>,
    ) -> Result<MuBasisMatrix<F>> {
        match self {
            Algorithm::Hhk => compute_mu_basis_until(a, deadline).map(|run| run.basis),
            Algorithm::Sg => sg_mu_basis_until(a, deadline),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "hhk" => Ok(Algorithm::Hhk),
            "sg" => Ok(Algorithm::Sg),
            other => Err(format!("unknown algorithm `{other}` (expected hhk or sg)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchConfig {
    pub field: FieldSpec,
    pub d_values: Vec<usize>,
    pub n_values: Vec<usize>,
    pub seed: u64,
    pub repetitions: usize,
    pub timeout_seconds: f64,
    pub algorithms: Vec<Algorithm>,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            field: FieldSpec::Prime(PrimeField::new(5).expect("5 is prime")),
            d_values: vec![5, 10, 20],
            n_values: vec![3, 5, 10],
            seed: 0,
            repetitions: 3,
            timeout_seconds: 120.0,
            algorithms: vec![Algorithm::Hhk, Algorithm::Sg],
        }
    }
}

impl BenchConfig {
    pub fn validate(&self) -> std::result::Result<(), String> {
        if let Some(d) = self.d_values.iter().find(|&&d| d < 1) {
            return Err(format!("degree {d} is not >= 1"));
        }
        if let Some(n) = self.n_values.iter().find(|&&n| n < 2) {
            return Err(format!("length {n} is not >= 2"));
        }
        if self.repetitions < 1 {
            return Err("repetitions must be >= 1".into());
        }
        if !(self.timeout_seconds.is_finite() && self.timeout_seconds > 0.0) {
            return Err("timeout must be a positive number of seconds".into());
        }
        if self.algorithms.is_empty() {
            return Err("no algorithms selected".into());
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CellStatus {
    Ok,
    Timeout,
    Error,
}

impl CellStatus {
    pub fn name(self) -> &'static str {
        match self {
            CellStatus::Ok => "ok",
            CellStatus::Timeout => "timeout",
            CellStatus::Error => "error",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub d: usize,
    pub n: usize,
    pub algorithm: Algorithm,
    /// Mean wall time over the repetitions; `None` unless status is ok.
    pub mean_seconds: Option<f64>,
    pub status: CellStatus,
    /// Column degrees of the last successful run.
    pub degrees: Option<Vec<usize>>,
}

/// The RNG for one grid cell.
pub fn cell_rng(seed: u64, d: usize, n: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((d as u64) << 32) | n as u64);
    rng
}

/// `n` random polynomials of degree at most `d`, redrawn until at least one
/// has degree exactly `d`.
pub fn random_input<F: Field, R: Rng + ?Sized>(
    n: usize,
    d: usize,
    field: &F,
    rng: &mut R,
) -> Result<InputVector<F>> {
    if n < 2 {
        return Err(Error::TooFewEntries(n));
    }
    loop {
        let entries: Vec<Polynomial<F>> = (0..n)
            .map(|_| {
                let coeffs = (0..=d).map(|_| field.sample(rng)).collect();
                Polynomial::new(field.clone(), coeffs)
            })
            .collect();
        if entries.iter().any(|p| p.degree().finite() == Some(d)) {
            return InputVector::new(field.clone(), entries);
        }
    }
}

fn run_cell<F: Field>(
    a: &InputVector<F>,
    algorithm: Algorithm,
    cfg: &BenchConfig,
    d: usize,
    n: usize,
) -> BenchRow {
    let budget = Duration::from_secs_f64(cfg.timeout_seconds);
    let mut total = Duration::ZERO;
    let mut status = CellStatus::Ok;
    let mut degrees = None;
    for rep in 0..cfg.repetitions {
        let start = Instant::now();
        let outcome = algorithm.run_until(a, Some(start + budget));
        let elapsed = start.elapsed();
        match outcome {
            Ok(m) => {
                total += elapsed;
                // spot check the first repetition only
                if rep == 0 && !check_syzygies(a, &m).map(|r| r.passed).unwrap_or(false) {
                    status = CellStatus::Error;
                    break;
                }
                degrees = m.finite_degrees();
            }
            Err(Error::Timeout) => {
                status = CellStatus::Timeout;
                break;
            }
            Err(_) => {
                status = CellStatus::Error;
                break;
            }
        }
    }
    let mean_seconds =
        (status == CellStatus::Ok).then(|| total.as_secs_f64() / cfg.repetitions as f64);
    BenchRow {
        d,
        n,
        algorithm,
        mean_seconds,
        status,
        degrees,
    }
}

fn run_grid_in<F: Field>(field: &F, cfg: &BenchConfig) -> Result<Vec<BenchRow>> {
    let mut rows = Vec::new();
    for &d in &cfg.d_values {
        for &n in &cfg.n_values {
            let a = random_input(n, d, field, &mut cell_rng(cfg.seed, d, n))?;
            for &algorithm in &cfg.algorithms {
                rows.push(run_cell(&a, algorithm, cfg, d, n));
            }
        }
    }
    Ok(rows)
}

/// Times every algorithm on one seeded input per `(d, n)` cell, cells in
/// row-major `d`, then `n` order. Timeouts are reported in the row status.
pub fn run_grid(cfg: &BenchConfig) -> Result<Vec<BenchRow>> {
    cfg.validate()
        .map_err(|m| Error::InternalContradiction(format!("invalid bench configuration: {m}")))?;
    match cfg.field {
        FieldSpec::Rationals => run_grid_in(&Rationals, cfg),
        FieldSpec::Prime(f) => run_grid_in(&f, cfg),
    }
}

/// Writes rows as CSV with header `d,n,algorithm,mean_seconds,status`. Mean
/// times use nine decimals and are empty for cells that did not complete.
pub fn write_csv<W: Write>(rows: &[BenchRow], out: W) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for row in rows {
        let mean = row
            .mean_seconds
            .map(|t| format!("{t:.9}"))
            .unwrap_or_default();
        w.write_record([
            row.d.to_string(),
            row.n.to_string(),
            row.algorithm.name().to_string(),
            mean,
            row.status.name().to_string(),
        ])?;
    }
    w.flush()
}
