//! Overflow-safe hybrid kernel.
//!
//! The pivot phase accumulates `sign` and `sum ln|c_i|` directly. The
//! three-term phase keeps the two most recent minors as mantissas `p, q`
//! sharing a log scale `L` (`f_k = p e^L`, `f_{k-1} = q e^L`) and rescales
//! both by a power of two whenever they drift out of a safe window, folding
//! the exponent into `L`.
//!
//! Individual pivots must be representable in `f64`. If a pivot overflows,
//! the kernel hands over to the three-term phase at that point instead.

use std::f64::consts::LN_2;

use super::{pivot_sequence, Algorithm, DetResult, MinorSequence, StepCounts, ZeroTest};
use crate::error::{Error, Result};
use crate::matrix::TridiagonalMatrix;
use crate::signed_log::SignedLog;

const RESCALE_HIGH: f64 = 1.157_920_892_373_162e77; // 2^256
const RESCALE_LOW: f64 = 8.636_168_555_094_445e-78; // 2^-256

/// Sign and log-magnitude of `det T` using the hybrid control flow.
pub fn det_hybrid_scaled(m: &TridiagonalMatrix, zero_test: ZeroTest) -> DetResult<SignedLog> {
    scaled_core(m, zero_test, |_, _| {})
}

/// Product of pivots in sign/log form; fails on a vanishing interior pivot.
pub fn det_two_term_scaled(m: &TridiagonalMatrix) -> Result<DetResult<SignedLog>> {
    let n = m.n();
    let pivots = pivot_sequence(m, ZeroTest::Exact);
    if let Some(index) = pivots.interior_break(n) {
        return Err(Error::ZeroPivot { index });
    }
    let value = pivots
        .c
        .iter()
        .fold(SignedLog::ONE, |acc, &c| acc * SignedLog::from_f64(c));
    Ok(DetResult {
        value,
        algorithm: Algorithm::TwoTerm,
        pivot_break: None,
        steps: StepCounts {
            pivot_updates: n - 1,
            three_term_steps: 0,
        },
    })
}

/// The three-term recurrence alone, in rescaled form.
pub fn det_three_term_scaled(m: &TridiagonalMatrix) -> DetResult<SignedLog> {
    let n = m.n();
    let f1 = SignedLog::from_f64(m.diag()[0]);
    let value = if n == 1 {
        f1
    } else {
        three_term_scaled(m, 1, f1, SignedLog::ONE, &mut |_, _| {})
    };
    DetResult {
        value,
        algorithm: Algorithm::ThreeTerm,
        pivot_break: None,
        steps: StepCounts {
            pivot_updates: 0,
            three_term_steps: n - 1,
        },
    }
}

/// Principal minors in sign/log form alongside the scaled result.
pub fn minors_hybrid_scaled(
    m: &TridiagonalMatrix,
    zero_test: ZeroTest,
) -> (MinorSequence<SignedLog>, DetResult<SignedLog>) {
    let mut seq = MinorSequence::with_capacity(m.n());
    let res = scaled_core(m, zero_test, |_, f| seq.push(f));
    (seq, res)
}

fn scaled_core(
    m: &TridiagonalMatrix,
    zero_test: ZeroTest,
    mut record: impl FnMut(usize, SignedLog),
) -> DetResult<SignedLog> {
    let (d, a, b) = (m.diag(), m.upper(), m.lower());
    let n = m.n();

    let mut c = zero_test.snap(d[0], d[0], 0.0);
    let mut f_prev2 = SignedLog::ONE;
    let mut f_prev = SignedLog::from_f64(c);
    record(0, f_prev2);
    record(1, f_prev);
    let mut k = 1;

    while k < n && c != 0.0 {
        let correction = a[k - 1] * b[k - 1] / c;
        let next = d[k] - correction;
        if !next.is_finite() {
            break;
        }
        k += 1;
        c = zero_test.snap(next, d[k - 1], correction);
        f_prev2 = f_prev;
        f_prev *= SignedLog::from_f64(c);
        record(k, f_prev);
    }
    let pivot_updates = k - 1;
    let pivot_break = (c == 0.0 && k < n).then_some(k);

    let value = if k < n {
        three_term_scaled(m, k, f_prev, f_prev2, &mut record)
    } else {
        f_prev
    };

    DetResult {
        value,
        algorithm: Algorithm::Hybrid,
        pivot_break,
        steps: StepCounts {
            pivot_updates,
            three_term_steps: n - k,
        },
    }
}

/// Runs `f_i = d_i f_{i-1} - a_{i-1} b_{i-1} f_{i-2}` for `i = start+1..n`
/// from `f_start = cur`, `f_{start-1} = prev`.
fn three_term_scaled(
    m: &TridiagonalMatrix,
    start: usize,
    cur: SignedLog,
    prev: SignedLog,
    record: &mut impl FnMut(usize, SignedLog),
) -> SignedLog {
    let (d, a, b) = (m.diag(), m.upper(), m.lower());
    let mut scale = cur.logmag().max(prev.logmag());
    if !scale.is_finite() {
        scale = 0.0;
    }
    let mut p = mantissa(cur, scale);
    let mut q = mantissa(prev, scale);

    for i in start..m.n() {
        let t = d[i] * p - a[i - 1] * b[i - 1] * q;
        if t.is_finite() {
            q = p;
            p = t;
        } else {
            // Entries too large for the mantissa window; take this step in
            // log space and restart the window around the result.
            let t = SignedLog::from_f64(d[i]) * SignedLog::from_f64(p)
                - SignedLog::from_f64(a[i - 1])
                    * SignedLog::from_f64(b[i - 1])
                    * SignedLog::from_f64(q);
            let old = SignedLog::from_f64(p);
            let shift = t.logmag().max(old.logmag());
            scale += shift;
            p = mantissa(t, shift);
            q = mantissa(old, shift);
        }

        let s = p.abs().max(q.abs());
        if s > RESCALE_HIGH || (s < RESCALE_LOW && s > 0.0) {
            let e = s.log2().floor() as i32;
            let factor = 2f64.powi(-e);
            p *= factor;
            q *= factor;
            scale += f64::from(e) * LN_2;
        }
        record(i + 1, from_mantissa(p, scale));
    }
    from_mantissa(p, scale)
}

fn mantissa(x: SignedLog, scale: f64) -> f64 {
    if x.is_zero() {
        0.0
    } else {
        f64::from(x.sign()) * (x.logmag() - scale).exp()
    }
}

fn from_mantissa(p: f64, scale: f64) -> SignedLog {
    let s = SignedLog::from_f64(p);
    if s.is_zero() {
        s
    } else {
        SignedLog::new(s.sign(), s.logmag() + scale)
    }
}
