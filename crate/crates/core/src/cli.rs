//! Command-line front end.
//!
//! Exit codes:
//!
//! | code | meaning                                                         |
//! |------|-----------------------------------------------------------------|
//! | 0    | success (`check-pd`: matrix is positive definite)               |
//! | 1    | `check-pd`: not positive definite; other commands: internal error |
//! | 2    | unreadable or malformed input, bad arguments, non-symmetric input to `check-pd` |
//! | 3    | overflow in plain mode (retry with `--mode scaled`)             |
//! | 4    | vanishing interior pivot where the requested method needs none  |
//!
//! Plain-mode determinants are printed rounded to 15 significant digits.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;

use crate::bench::{emit_csv, plan, run_bench, BenchAlgorithm};
use crate::error::Error;
use crate::factorization::{is_positive_definite, lu_factorize, Convention, Definiteness};
use crate::generators::{gen_example, Family};
use crate::matrix::{join, TridiagonalMatrix};
use crate::oracle::{dense_det_exact_with_limit, dense_det_float_with_limit, to_dense_exact};
use crate::oracle::{DENSE_LIMIT_EXACT, DENSE_LIMIT_FLOAT};
use crate::recurrences::{
    det_hybrid, det_hybrid_scaled, det_three_term, det_three_term_scaled, det_two_term,
    det_two_term_scaled, Algorithm, DetResult, ZeroTest,
};
use crate::signed_log::SignedLog;
use crate::symbolic::{det_detgtri, det_detgtri_exact};

pub const EXIT_NOT_PD: u8 = 1;
pub const EXIT_INTERNAL: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_OVERFLOW: u8 = 3;
pub const EXIT_ZERO_PIVOT: u8 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "tridet",
    version,
    about = "Linear-time tridiagonal determinants"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate the determinant
    Det {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value = "hybrid")]
        alg: Algorithm,
        #[arg(long, value_enum, default_value_t = Mode::Plain)]
        mode: Mode,
        /// Pivot zero threshold; 0 means exact comparison
        #[arg(long, default_value_t = 0.0)]
        zero_tol: f64,
        /// Interpret --zero-tol relative to the terms forming each pivot
        #[arg(long)]
        relative: bool,
    },
    /// Print Doolittle or Crout LU factors
    Lu {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value = "doolittle")]
        convention: Convention,
    },
    /// Test a symmetric matrix for positive definiteness
    CheckPd {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Write a member of an example family in the matrix text format
    Gen {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Time the kernels on example families and optionally write CSV
    Bench {
        #[arg(long, value_delimiter = ',', required = true)]
        family: Vec<Family>,
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "detgtri,three_term,hybrid"
        )]
        algs: Vec<BenchAlgorithm>,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[arg(long, default_value_t = 2)]
        warmup: usize,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Dense elimination determinant, for cross-checking
    Oracle {
        #[command(flatten)]
        input: InputArgs,
        /// Exact fraction-free elimination instead of floating point
        #[arg(long)]
        exact: bool,
        /// Largest order accepted (defaults: 2048 float, 64 exact)
        #[arg(long)]
        limit: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Plain,
    Scaled,
}

/// Where the matrix comes from: a file (`-` for stdin) or a generator.
#[derive(Debug, Args)]
pub struct InputArgs {
    /// Matrix in the four-line text format; `-` reads standard input
    #[arg(long, short)]
    pub input: Option<PathBuf>,
    #[arg(long, conflicts_with = "input")]
    pub family: Option<Family>,
    #[arg(long, requires = "family")]
    pub n: Option<usize>,
}

impl InputArgs {
    pub fn load(&self) -> Result<TridiagonalMatrix, Error> {
        if let Some(family) = self.family {
            return gen_example(family, self.n.unwrap_or_else(|| default_order(family)));
        }
        let text = match self.input.as_deref() {
            Some(p) if p.as_os_str() == "-" => read_stdin()?,
            Some(p) => fs::read_to_string(p)?,
            None => read_stdin()?,
        };
        TridiagonalMatrix::parse(&text)
    }
}

fn default_order(family: Family) -> usize {
    match family {
        Family::Ex31 => 4,
        _ => 9,
    }
}

fn read_stdin() -> io::Result<String> {
    let mut s = String::new();
    io::stdin().read_to_string(&mut s)?;
    Ok(s)
}

/// Parses `std::env::args` and runs the selected command.
pub fn main() -> ExitCode {
    run(Cli::parse())
}

pub fn run(cli: Cli) -> ExitCode {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let code = match execute(cli.command, &mut out) {
        Ok(code) => code,
        Err(e) => {
            let code = exit_code(&e);
            eprintln!("error: {e}");
            if let Error::Overflow { .. } = e {
                eprintln!("hint: rerun with --mode scaled");
            }
            code
        }
    };
    let _ = out.flush();
    ExitCode::from(code)
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. }
        | Error::Io(_)
        | Error::Empty
        | Error::DimensionMismatch { .. }
        | Error::NonFinite { .. }
        | Error::NotSymmetric { .. }
        | Error::UnsupportedOrder { .. }
        | Error::NoClosedForm { .. }
        | Error::DenseLimit { .. }
        | Error::NotSquare { .. }
        | Error::TooFewTrials(_)
        | Error::NoRecords => EXIT_INPUT,
        Error::Overflow { .. } => EXIT_OVERFLOW,
        Error::ZeroPivot { .. } | Error::NoFactorization { .. } => EXIT_ZERO_PIVOT,
        Error::DivisionByZero | Error::NotPolynomial => EXIT_INTERNAL,
    }
}

fn execute(command: Command, out: &mut impl Write) -> Result<u8, Error> {
    match command {
        Command::Det {
            input,
            alg,
            mode,
            zero_tol,
            relative,
        } => {
            let m = input.load()?;
            let zero_test = match (relative, zero_tol > 0.0) {
                (true, true) => ZeroTest::Relative(zero_tol),
                (true, false) => ZeroTest::Relative(crate::recurrences::DEFAULT_RELATIVE_TOL),
                (false, _) => ZeroTest::from_tol(zero_tol),
            };
            cmd_det(&m, alg, mode, zero_test, out)
        }
        Command::Lu { input, convention } => {
            let lu = lu_factorize(&input.load()?, convention)?;
            writeln!(out, "convention {}", lu.convention)?;
            let n = lu.n();
            let zeros = vec![0.0; n - 1];
            for (diag, sup, sub) in [
                (&lu.l_diag, &zeros, &lu.l_sub),
                (&lu.u_diag, &lu.u_super, &zeros),
            ] {
                writeln!(out, "{n}")?;
                writeln!(out, "{}", join(diag))?;
                writeln!(out, "{}", join(sup))?;
                writeln!(out, "{}", join(sub))?;
            }
            Ok(0)
        }
        Command::CheckPd { input } => match is_positive_definite(&input.load()?)? {
            Definiteness::PositiveDefinite { pivots } => {
                writeln!(out, "positive-definite")?;
                writeln!(out, "c = {}", join(&pivots))?;
                Ok(0)
            }
            Definiteness::NotPositiveDefinite { index } => {
                writeln!(out, "not-positive-definite index={index}")?;
                Ok(EXIT_NOT_PD)
            }
        },
        Command::Gen { family, n } => {
            let m = gen_example(family, n.unwrap_or_else(|| default_order(family)))?;
            m.write_text(&mut *out)?;
            Ok(0)
        }
        Command::Bench {
            family,
            n,
            algs,
            trials,
            warmup,
            csv,
        } => {
            let records = run_bench(&plan(&family, &n, &algs), trials, warmup)?;
            writeln!(
                out,
                "{:<6} {:>9} {:<14} {:>14} {:>5} {:>22}",
                "family", "n", "algorithm", "median_s", "sign", "logmag"
            )?;
            for r in &records {
                write!(
                    out,
                    "{:<6} {:>9} {:<14} {:>14.6e} {:>5} {:>22}",
                    r.family.name(),
                    r.n,
                    r.algorithm.name(),
                    r.median_seconds,
                    r.result_sign,
                    r.result_logmag
                )?;
                if let Some(fb) = r.fallback {
                    write!(out, "  (overflow; timed {fb})")?;
                }
                writeln!(out)?;
            }
            if let Some(path) = csv {
                emit_csv(&records, path)?;
            }
            Ok(0)
        }
        Command::Oracle {
            input,
            exact,
            limit,
        } => {
            let m = input.load()?;
            if exact {
                let limit = limit.unwrap_or(DENSE_LIMIT_EXACT);
                let det = dense_det_exact_with_limit(&to_dense_exact(&m, limit)?, limit)?;
                writeln!(out, "{det}")?;
            } else {
                let limit = limit.unwrap_or(DENSE_LIMIT_FLOAT);
                let det = dense_det_float_with_limit(&m.to_dense_with_limit(limit)?, limit)?;
                writeln!(out, "{det}")?;
            }
            Ok(0)
        }
    }
}

fn cmd_det(
    m: &TridiagonalMatrix,
    alg: Algorithm,
    mode: Mode,
    zero_test: ZeroTest,
    out: &mut impl Write,
) -> Result<u8, Error> {
    match mode {
        Mode::Plain => {
            let res = match alg {
                Algorithm::TwoTerm => det_two_term(m)?,
                Algorithm::ThreeTerm => det_three_term(m)?,
                Algorithm::Hybrid => det_hybrid(m, zero_test)?,
                Algorithm::Detgtri => det_detgtri(m)?,
            };
            writeln!(out, "{}", round_sig(res.value))?;
            write_provenance(&res, out)?;
        }
        Mode::Scaled => {
            let res: DetResult<SignedLog> = match alg {
                Algorithm::TwoTerm => det_two_term_scaled(m)?,
                Algorithm::ThreeTerm => det_three_term_scaled(m),
                Algorithm::Hybrid => det_hybrid_scaled(m, zero_test),
                Algorithm::Detgtri => {
                    let exact = det_detgtri_exact(m)?;
                    DetResult {
                        value: if exact.is_zero() {
                            SignedLog::ZERO
                        } else {
                            SignedLog::from_rational(&exact)
                        },
                        algorithm: Algorithm::Detgtri,
                        pivot_break: None,
                        steps: Default::default(),
                    }
                }
            };
            writeln!(out, "{}", res.value)?;
            write_provenance(&res, out)?;
        }
    }
    Ok(0)
}

/// Rounds to 15 significant digits so that last-place noise from the
/// pivot divisions does not show in printed results.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.14e}").parse().unwrap_or(x)
}

fn write_provenance<V>(res: &DetResult<V>, out: &mut impl Write) -> io::Result<()> {
    write!(out, "algorithm={}", res.algorithm)?;
    if let Some(m) = res.pivot_break {
        write!(out, " pivot_break={m}")?;
    }
    writeln!(out)
}
