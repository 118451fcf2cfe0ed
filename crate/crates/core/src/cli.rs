//! Command-line front end. Exit codes: 0 success, 1 verification failure,
//! 2 usage or input error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::arith::{Field, FieldSpec, Rationals};
use crate::bench::{run_grid, write_csv, Algorithm, BenchConfig};
use crate::error::Error;
use crate::io::{format_coefficients, write_basis, RawFile};
use crate::verify::{gcd_via_mubasis, verify_all};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "mubasis", version, about = "Exact mu-bases of polynomial vectors")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum AlgorithmArg {
    Hhk,
    Sg,
}

impl From<AlgorithmArg> for Algorithm {
    fn from(a: AlgorithmArg) -> Self {
        match a {
            AlgorithmArg::Hhk => Algorithm::Hhk,
            AlgorithmArg::Sg => Algorithm::Sg,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GcdMethod {
    Mubasis,
    Euclid,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute a mu-basis of the vector in INPUT
    Compute {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "hhk")]
        algorithm: AlgorithmArg,
        /// Write the basis here instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check that BASIS is a mu-basis of the vector in INPUT
    Verify { input: PathBuf, basis: PathBuf },
    /// Print the monic gcd of the entries of INPUT
    Gcd {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "mubasis")]
        method: GcdMethod,
    },
    /// Time the algorithms on random inputs and write CSV
    Bench {
        /// `q` or `fp <p>` (also `fp<p>`, `fp:<p>`)
        #[arg(long, default_value = "fp 5", value_parser = parse_field_flag)]
        field: FieldSpec,
        #[arg(long, value_delimiter = ',', default_value = "5,10,20")]
        d_list: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "3,5,10")]
        n_list: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        reps: usize,
        /// Per-run time limit in seconds
        #[arg(long, default_value_t = 120.0)]
        timeout: f64,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "hhk,sg")]
        algorithms: Vec<AlgorithmArg>,
        /// CSV destination; stdout if omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_field_flag(text: &str) -> Result<FieldSpec, String> {
    let t = text.trim();
    if t == "q" {
        return Ok(FieldSpec::Rationals);
    }
    let p = t
        .strip_prefix("fp")
        .map(|rest| rest.trim_start_matches([' ', ':']))
        .ok_or_else(|| format!("expected `q` or `fp <p>`, got `{text}`"))?;
    let p: u64 = p.parse().map_err(|_| format!("invalid modulus `{p}`"))?;
    FieldSpec::prime(p).map_err(|e| e.to_string())
}

/// A failure that ends the command with a message and an exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: format!("{}: {e}", path.display()),
    }
}

fn read_raw(path: &Path) -> Result<RawFile, Failure> {
    let text = fs::read_to_string(path).map_err(|e| io_failure(path, e))?;
    RawFile::parse(&text).map_err(|e| Failure {
        code: EXIT_USAGE,
        message: format!("{}: {e}", path.display()),
    })
}

fn located(path: &Path) -> impl Fn(Error) -> Failure + '_ {
    move |e| match e {
        Error::Parse { .. } => Failure {
            code: EXIT_USAGE,
            message: format!("{}: {e}", path.display()),
        },
        other => other.into(),
    }
}

macro_rules! with_field {
    ($spec:expr, $f:ident => $body:expr) => {
        match $spec {
            FieldSpec::Rationals => {
                let $f = Rationals;
                $body
            }
            FieldSpec::Prime(p) => {
                let $f = p;
                $body
            }
        }
    };
}

fn compute<F: Field>(
    raw: &RawFile,
    field: &F,
    path: &Path,
    algorithm: Algorithm,
) -> Result<String, Failure> {
    let a = raw.input_vector(field).map_err(located(path))?;
    let m = algorithm.run_until(&a, None)?;
    Ok(write_basis(&m))
}

fn verify<F: Field>(
    raw_a: &RawFile,
    raw_m: &RawFile,
    field: &F,
    paths: (&Path, &Path),
    out: &mut dyn Write,
) -> Result<bool, Failure> {
    let a = raw_a.input_vector(field).map_err(located(paths.0))?;
    let m = raw_m.basis(field).map_err(located(paths.1))?;
    let reports = verify_all(&a, &m)?;
    for r in &reports {
        writeln!(out, "{r}").map_err(|e| io_failure(Path::new("<stdout>"), e))?;
    }
    Ok(reports.iter().all(|r| r.passed))
}

fn gcd<F: Field>(raw: &RawFile, field: &F, path: &Path, method: GcdMethod) -> Result<String, Failure> {
    let a = raw.input_vector(field).map_err(located(path))?;
    let g = match method {
        GcdMethod::Mubasis => gcd_via_mubasis(&a)?,
        GcdMethod::Euclid => a.euclid_gcd(),
    };
    Ok(format_coefficients(&g))
}

fn execute(command: Command, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let write_out = |stdout: &mut dyn Write, text: &str| {
        stdout
            .write_all(text.as_bytes())
            .map_err(|e| io_failure(Path::new("<stdout>"), e))
    };
    match command {
        Command::Compute {
            input,
            algorithm,
            output,
        } => {
            let raw = read_raw(&input)?;
            let text = with_field!(raw.field, f => compute(&raw, &f, &input, algorithm.into())?);
            match output {
                Some(path) => fs::write(&path, text).map_err(|e| io_failure(&path, e))?,
                None => write_out(stdout, &text)?,
            }
            Ok(EXIT_OK)
        }
        Command::Verify { input, basis } => {
            let raw_a = read_raw(&input)?;
            let raw_m = read_raw(&basis)?;
            if raw_a.field != raw_m.field {
                return Err(Error::FieldMismatch {
                    left: raw_a.field.to_string(),
                    right: raw_m.field.to_string(),
                }
                .into());
            }
            let paths = (input.as_path(), basis.as_path());
            let ok = with_field!(raw_a.field, f => verify(&raw_a, &raw_m, &f, paths, stdout)?);
            Ok(if ok { EXIT_OK } else { EXIT_VERIFY_FAILED })
        }
        Command::Gcd { input, method } => {
            let raw = read_raw(&input)?;
            let line = with_field!(raw.field, f => gcd(&raw, &f, &input, method)?);
            write_out(stdout, &format!("{line}\n"))?;
            Ok(EXIT_OK)
        }
        Command::Bench {
            field,
            d_list,
            n_list,
            seed,
            reps,
            timeout,
            algorithms,
            out,
        } => {
            let cfg = BenchConfig {
                field,
                d_values: d_list,
                n_values: n_list,
                seed,
                repetitions: reps,
                timeout_seconds: timeout,
                algorithms: algorithms.into_iter().map(Algorithm::from).collect(),
            };
            cfg.validate().map_err(|message| Failure {
                code: EXIT_USAGE,
                message,
            })?;
            let rows = run_grid(&cfg)?;
            let mut buf = Vec::new();
            write_csv(&rows, &mut buf).map_err(|e| io_failure(Path::new("<csv>"), e))?;
            match out {
                Some(path) => fs::write(&path, buf).map_err(|e| io_failure(&path, e))?,
                None => stdout
                    .write_all(&buf)
                    .map_err(|e| io_failure(Path::new("<stdout>"), e))?,
            }
            Ok(EXIT_OK)
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match execute(cli.command, stdout) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}
