//! Wall-clock comparison of the determinant kernels on the example
//! families.
//!
//! Each cell of a plan is one `(family, n, algorithm)` triple. The matrix is
//! generated outside the timed region, `warmup` runs are discarded, and the
//! median of `trials` timed runs is reported together with the computed
//! determinant so that correctness can be checked alongside speed. Timed
//! runs are strictly serial.

use std::fmt;
use std::fs::File;
use std::hint::black_box;
use std::io::{BufWriter, Write};
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::generators::{gen_example, Family};
use crate::matrix::TridiagonalMatrix;
use crate::oracle::dense_det_float;
use crate::recurrences::{det_hybrid, det_hybrid_scaled, det_three_term, det_two_term, ZeroTest};
use crate::signed_log::SignedLog;
use crate::symbolic::det_detgtri_exact;

pub const CSV_HEADER: &str = "family,n,algorithm,trials,median_seconds,result_sign,result_logmag";

/// Kernels the harness can time.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BenchAlgorithm {
    Detgtri,
    TwoTerm,
    ThreeTerm,
    Hybrid,
    HybridScaled,
    /// Dense partial-pivoting elimination, the O(n^3) baseline.
    Dense,
}

impl BenchAlgorithm {
    pub fn name(self) -> &'static str {
        match self {
            BenchAlgorithm::Detgtri => "detgtri",
            BenchAlgorithm::TwoTerm => "two_term",
            BenchAlgorithm::ThreeTerm => "three_term",
            BenchAlgorithm::Hybrid => "hybrid",
            BenchAlgorithm::HybridScaled => "hybrid_scaled",
            BenchAlgorithm::Dense => "dense",
        }
    }

    /// Runs the kernel once, returning the determinant in sign/log form.
    pub fn evaluate(self, m: &TridiagonalMatrix) -> Result<SignedLog> {
        Ok(match self {
            BenchAlgorithm::Detgtri => SignedLog::from_rational(&det_detgtri_exact(m)?),
            BenchAlgorithm::TwoTerm => det_two_term(m)?.value.into(),
            BenchAlgorithm::ThreeTerm => det_three_term(m)?.value.into(),
            BenchAlgorithm::Hybrid => det_hybrid(m, ZeroTest::Exact)?.value.into(),
            BenchAlgorithm::HybridScaled => det_hybrid_scaled(m, ZeroTest::Exact).value,
            BenchAlgorithm::Dense => {
                let v = dense_det_float(&m.to_dense()?)?;
                if !v.is_finite() {
                    return Err(Error::Overflow { index: m.n() });
                }
                v.into()
            }
        })
    }
}

impl fmt::Display for BenchAlgorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BenchAlgorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "detgtri" => Ok(BenchAlgorithm::Detgtri),
            "two_term" => Ok(BenchAlgorithm::TwoTerm),
            "three_term" => Ok(BenchAlgorithm::ThreeTerm),
            "hybrid" => Ok(BenchAlgorithm::Hybrid),
            "hybrid_scaled" => Ok(BenchAlgorithm::HybridScaled),
            "dense" => Ok(BenchAlgorithm::Dense),
            _ => Err(format!("unknown algorithm {s:?}")),
        }
    }
}

/// One `(family, n, algorithm)` cell of a plan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BenchCell {
    pub family: Family,
    pub n: usize,
    pub algorithm: BenchAlgorithm,
}

/// Cartesian product of families, orders and algorithms.
pub fn plan(families: &[Family], ns: &[usize], algorithms: &[BenchAlgorithm]) -> Vec<BenchCell> {
    let mut cells = Vec::with_capacity(families.len() * ns.len() * algorithms.len());
    for &family in families {
        for &n in ns {
            for &algorithm in algorithms {
                cells.push(BenchCell {
                    family,
                    n,
                    algorithm,
                });
            }
        }
    }
    cells
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub family: Family,
    pub n: usize,
    pub algorithm: BenchAlgorithm,
    pub trials: usize,
    pub median_seconds: f64,
    pub result_sign: i8,
    pub result_logmag: f64,
    /// Set when the requested kernel overflowed and the cell was re-run
    /// with the scaled hybrid instead.
    pub fallback: Option<BenchAlgorithm>,
}

impl BenchRecord {
    pub fn result(&self) -> SignedLog {
        SignedLog::new(self.result_sign, self.result_logmag)
    }
}

/// Times every cell of `plan`.
pub fn run_bench(plan: &[BenchCell], trials: usize, warmup: usize) -> Result<Vec<BenchRecord>> {
    if trials < 3 {
        return Err(Error::TooFewTrials(trials));
    }
    plan.iter()
        .map(|cell| run_cell(cell, trials, warmup))
        .collect()
}

fn run_cell(cell: &BenchCell, trials: usize, warmup: usize) -> Result<BenchRecord> {
    let m = gen_example(cell.family, cell.n)?;
    let (algorithm, fallback) = match cell.algorithm.evaluate(&m) {
        Ok(_) => (cell.algorithm, None),
        Err(Error::Overflow { .. }) => (
            BenchAlgorithm::HybridScaled,
            Some(BenchAlgorithm::HybridScaled),
        ),
        Err(e) => return Err(e),
    };

    for _ in 0..warmup {
        black_box(algorithm.evaluate(black_box(&m))?);
    }
    let mut times = Vec::with_capacity(trials);
    let mut result = SignedLog::ZERO;
    for _ in 0..trials {
        let start = Instant::now();
        result = black_box(algorithm.evaluate(black_box(&m))?);
        times.push(start.elapsed().as_secs_f64());
    }

    Ok(BenchRecord {
        family: cell.family,
        n: cell.n,
        algorithm: cell.algorithm,
        trials,
        median_seconds: median(&mut times),
        result_sign: result.sign(),
        result_logmag: result.logmag(),
        fallback,
    })
}

/// Median of a nonempty sample (mean of the middle pair for even sizes).
pub fn median(xs: &mut [f64]) -> f64 {
    xs.sort_by(f64::total_cmp);
    let mid = xs.len() / 2;
    if xs.len() % 2 == 1 {
        xs[mid]
    } else {
        0.5 * (xs[mid - 1] + xs[mid])
    }
}

/// Writes records as CSV, sorted by `(family, n, algorithm)`.
pub fn write_csv<W: Write>(records: &[BenchRecord], mut w: W) -> Result<()> {
    if records.is_empty() {
        return Err(Error::NoRecords);
    }
    let mut sorted: Vec<&BenchRecord> = records.iter().collect();
    sorted.sort_by_key(|r| (r.family, r.n, r.algorithm));
    writeln!(w, "{CSV_HEADER}")?;
    for r in sorted {
        writeln!(
            w,
            "{},{},{},{},{},{},{}",
            r.family, r.n, r.algorithm, r.trials, r.median_seconds, r.result_sign, r.result_logmag
        )?;
    }
    w.flush()?;
    Ok(())
}

pub fn emit_csv(records: &[BenchRecord], path: impl AsRef<Path>) -> Result<()> {
    if records.is_empty() {
        return Err(Error::NoRecords);
    }
    write_csv(records, BufWriter::new(File::create(path)?))
}
