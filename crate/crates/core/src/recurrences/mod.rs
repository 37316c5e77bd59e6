//! Linear-time determinant kernels built on the principal minors
//! `f_0 = 1, f_1 = d_1, ..., f_n = det T`.
//!
//! * [`det_two_term`] multiplies the pivots: `f_i = c_i f_{i-1}` with
//!   `c_1 = d_1`, `c_i = d_i - a_{i-1} b_{i-1} / c_{i-1}`.
//! * [`det_three_term`] runs `f_i = d_i f_{i-1} - a_{i-1} b_{i-1} f_{i-2}`,
//!   which never divides and is valid for every matrix.
//! * [`det_hybrid`] multiplies pivots while they are nonzero and, at the
//!   first vanishing pivot `c_m` with `m < n`, finishes with the three-term
//!   recurrence. It never switches back.
//!
//! [`det_hybrid_scaled`] is the same control flow carried out in
//! sign/log-magnitude form so that `f_n` may exceed the `f64` range.
//!
//! Pivot indices reported by this module are 1-based.

pub(crate) mod exact;
mod scaled;

pub use exact::{det_hybrid_exact, det_three_term_exact, det_two_term_exact, ExactHybrid};
pub use scaled::{
    det_hybrid_scaled, det_three_term_scaled, det_two_term_scaled, minors_hybrid_scaled,
};

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::matrix::TridiagonalMatrix;

/// Default threshold for [`ZeroTest::Relative`].
pub const DEFAULT_RELATIVE_TOL: f64 = 1e-13;

/// How a computed pivot is judged to vanish.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum ZeroTest {
    /// `c == 0`.
    #[default]
    Exact,
    /// `|c| <= tol`.
    Absolute(f64),
    /// `|c| <= tol * (|d_i| + |a_{i-1} b_{i-1} / c_{i-1}|)`, i.e. relative to
    /// the two terms whose difference produced `c`.
    Relative(f64),
}

impl ZeroTest {
    /// `0` selects exact comparison, anything positive an absolute threshold.
    pub fn from_tol(zero_tol: f64) -> Self {
        if zero_tol > 0.0 {
            ZeroTest::Absolute(zero_tol)
        } else {
            ZeroTest::Exact
        }
    }

    /// `diag` and `correction` are the minuend and subtrahend of
    /// `c = diag - correction`.
    #[inline]
    pub fn is_zero(self, c: f64, diag: f64, correction: f64) -> bool {
        match self {
            ZeroTest::Exact => c == 0.0,
            ZeroTest::Absolute(tol) => c.abs() <= tol,
            ZeroTest::Relative(tol) => c.abs() <= tol * (diag.abs() + correction.abs()),
        }
    }

    /// Applies the test and snaps a vanishing pivot to exactly zero.
    #[inline]
    pub(crate) fn snap(self, c: f64, diag: f64, correction: f64) -> f64 {
        if self.is_zero(c, diag, correction) {
            0.0
        } else {
            c
        }
    }
}

/// Which recurrence produced a determinant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    TwoTerm,
    ThreeTerm,
    Hybrid,
    Detgtri,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::TwoTerm => "two_term",
            Algorithm::ThreeTerm => "three_term",
            Algorithm::Hybrid => "hybrid",
            Algorithm::Detgtri => "detgtri",
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

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "two_term" | "twoterm" => Ok(Algorithm::TwoTerm),
            "three_term" | "threeterm" => Ok(Algorithm::ThreeTerm),
            "hybrid" => Ok(Algorithm::Hybrid),
            "detgtri" => Ok(Algorithm::Detgtri),
            _ => Err(format!("unknown algorithm {s:?}")),
        }
    }
}

/// Work performed by a kernel, one unit per recurrence step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct StepCounts {
    /// Updates `c_i = d_i - a_{i-1} b_{i-1} / c_{i-1}` (with `f_i = c_i f_{i-1}`).
    pub pivot_updates: usize,
    /// Steps `f_i = d_i f_{i-1} - a_{i-1} b_{i-1} f_{i-2}`.
    pub three_term_steps: usize,
}

impl StepCounts {
    pub fn total(&self) -> usize {
        self.pivot_updates + self.three_term_steps
    }
}

/// A determinant together with how it was obtained.
#[derive(Debug, Clone, PartialEq)]
pub struct DetResult<V = f64> {
    pub value: V,
    pub algorithm: Algorithm,
    /// Index `m < n` of the vanishing pivot at which the hybrid switched to
    /// the three-term recurrence.
    pub pivot_break: Option<usize>,
    pub steps: StepCounts,
}

/// The pivot vector `c`, computed left to right up to the first vanishing
/// entry.
#[derive(Debug, Clone, PartialEq)]
pub struct PivotSequence {
    /// `c[i - 1]` holds `c_i`. When a break occurred the last entry is the
    /// vanishing pivot itself (as computed, before snapping).
    pub c: Vec<f64>,
    /// 1-based index of the first pivot that vanished under the zero test.
    pub break_index: Option<usize>,
}

impl PivotSequence {
    /// The break index if it lies strictly before `n`, i.e. the pivot is
    /// later used as a divisor.
    pub fn interior_break(&self, n: usize) -> Option<usize> {
        self.break_index.filter(|&m| m < n)
    }

    /// `true` when all `n` pivots were produced and none vanished.
    pub fn is_complete(&self, n: usize) -> bool {
        self.break_index.is_none() && self.c.len() == n
    }
}

/// Computes `c_1..c_n`, stopping at the first pivot that vanishes under
/// `zero_test`. A vanishing pivot is a reported state, not an error.
pub fn pivot_sequence(m: &TridiagonalMatrix, zero_test: ZeroTest) -> PivotSequence {
    let (d, a, b) = (m.diag(), m.upper(), m.lower());
    let n = m.n();
    let mut c = Vec::with_capacity(n);
    c.push(d[0]);
    if zero_test.is_zero(d[0], d[0], 0.0) {
        return PivotSequence {
            c,
            break_index: Some(1),
        };
    }
    for i in 1..n {
        let correction = a[i - 1] * b[i - 1] / c[i - 1];
        let ci = d[i] - correction;
        c.push(ci);
        if zero_test.is_zero(ci, d[i], correction) {
            return PivotSequence {
                c,
                break_index: Some(i + 1),
            };
        }
    }
    PivotSequence {
        c,
        break_index: None,
    }
}

/// `det T = c_1 c_2 ... c_n`.
///
/// Fails with [`Error::ZeroPivot`] when some `c_i` with `i < n` vanishes,
/// since `c_{i+1}` would divide by it. A vanishing final pivot `c_n` simply
/// yields zero.
pub fn det_two_term(m: &TridiagonalMatrix) -> Result<DetResult> {
    let (d, a, b) = (m.diag(), m.upper(), m.lower());
    let n = m.n();
    let mut c = d[0];
    let mut f = c;
    for i in 1..n {
        if c == 0.0 {
            return Err(Error::ZeroPivot { index: i });
        }
        c = d[i] - a[i - 1] * b[i - 1] / c;
        f *= c;
        if !f.is_finite() {
            return Err(Error::Overflow { index: i + 1 });
        }
    }
    Ok(DetResult {
        value: f,
        algorithm: Algorithm::TwoTerm,
        pivot_break: None,
        steps: StepCounts {
            pivot_updates: n - 1,
            three_term_steps: 0,
        },
    })
}

/// `f_n` from the three-term recurrence; defined for every matrix.
pub fn det_three_term(m: &TridiagonalMatrix) -> Result<DetResult> {
    let f = three_term_core(m, |_, _| {})?;
    Ok(DetResult {
        value: f,
        algorithm: Algorithm::ThreeTerm,
        pivot_break: None,
        steps: StepCounts {
            pivot_updates: 0,
            three_term_steps: m.n() - 1,
        },
    })
}

/// The hybrid kernel: pivot products until a pivot `c_m`, `m < n`, vanishes
/// under `zero_test`, then the three-term recurrence for `k = m+1..n`.
///
/// A pivot judged zero is treated as exactly zero, so `f_m = 0` seeds the
/// three-term phase.
pub fn det_hybrid(m: &TridiagonalMatrix, zero_test: ZeroTest) -> Result<DetResult> {
    hybrid_core(m, zero_test, |_, _| {})
}

/// Principal minors `f_0..f_n`, always with `f_0 = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct MinorSequence<T = f64> {
    values: Vec<T>,
}

impl<T> MinorSequence<T> {
    pub(crate) fn with_capacity(n: usize) -> Self {
        Self {
            values: Vec::with_capacity(n + 1),
        }
    }

    pub(crate) fn push(&mut self, f: T) {
        self.values.push(f);
    }

    /// `f_i` for `i` in `0..=n`.
    pub fn get(&self, i: usize) -> Option<&T> {
        self.values.get(i)
    }

    /// Order of the matrix the minors came from.
    pub fn n(&self) -> usize {
        self.values.len() - 1
    }

    /// `f_n`, the determinant.
    pub fn det(&self) -> &T {
        self.values.last().expect("f_0 is always present")
    }

    pub fn as_slice(&self) -> &[T] {
        &self.values
    }
}

/// All principal minors via the three-term recurrence.
pub fn minors_three_term(m: &TridiagonalMatrix) -> Result<MinorSequence> {
    let mut seq = MinorSequence::with_capacity(m.n());
    three_term_core(m, |_, f| seq.push(f))?;
    Ok(seq)
}

/// All principal minors in the order the hybrid kernel produces them,
/// plus the kernel's own result.
pub fn minors_hybrid(
    m: &TridiagonalMatrix,
    zero_test: ZeroTest,
) -> Result<(MinorSequence, DetResult)> {
    let mut seq = MinorSequence::with_capacity(m.n());
    let res = hybrid_core(m, zero_test, |_, f| seq.push(f))?;
    Ok((seq, res))
}

fn three_term_core(m: &TridiagonalMatrix, mut record: impl FnMut(usize, f64)) -> Result<f64> {
    let d = m.diag();
    record(0, 1.0);
    record(1, d[0]);
    three_term_tail(m, 1, 1.0, d[0], record)
}

/// Runs the three-term recurrence for `f_{k+1}..f_n` from `f_{k-1}`, `f_k`.
fn three_term_tail(
    m: &TridiagonalMatrix,
    k: usize,
    mut f_prev2: f64,
    mut f_prev: f64,
    mut record: impl FnMut(usize, f64),
) -> Result<f64> {
    let (d, a, b) = (m.diag(), m.upper(), m.lower());
    // zipped slices keep bounds checks out of the loop for any start k
    let rows = d[k..].iter().zip(&a[k - 1..]).zip(&b[k - 1..]);
    for (i, ((&di, &ai), &bi)) in (k + 1..).zip(rows) {
        let f = di * f_prev - ai * bi * f_prev2;
        if !f.is_finite() {
            return Err(Error::Overflow { index: i });
        }
        f_prev2 = f_prev;
        f_prev = f;
        record(i, f);
    }
    Ok(f_prev)
}

fn hybrid_core(
    m: &TridiagonalMatrix,
    zero_test: ZeroTest,
    mut record: impl FnMut(usize, f64),
) -> Result<DetResult> {
    let (d, a, b) = (m.diag(), m.upper(), m.lower());
    let n = m.n();

    let mut c = zero_test.snap(d[0], d[0], 0.0);
    let mut f_prev2 = 1.0;
    let mut f_prev = c;
    record(0, f_prev2);
    record(1, f_prev);
    let mut k = 1;

    // pivot products while c_k != 0
    while k < n && c != 0.0 {
        k += 1;
        let correction = a[k - 2] * b[k - 2] / c;
        c = zero_test.snap(d[k - 1] - correction, d[k - 1], correction);
        let f = c * f_prev;
        if !f.is_finite() {
            return Err(Error::Overflow { index: k });
        }
        f_prev2 = f_prev;
        f_prev = f;
        record(k, f);
    }
    let pivot_updates = k - 1;
    let pivot_break = (c == 0.0 && k < n).then_some(k);

    // three-term recurrence for the remaining minors
    let value = three_term_tail(m, k, f_prev2, f_prev, record)?;

    Ok(DetResult {
        value,
        algorithm: Algorithm::Hybrid,
        pivot_break,
        steps: StepCounts {
            pivot_updates,
            three_term_steps: n - k,
        },
    })
}
