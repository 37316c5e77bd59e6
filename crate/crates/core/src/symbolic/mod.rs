//! The symbolic-pivot determinant (DETGTRI).
//!
//! The pivot recurrence `d_k := d_k - a_{k-1} b_{k-1} / d_{k-1}` is carried
//! out over rational functions of a single symbol `z`. Whenever the working
//! pivot about to be used as a divisor reduces to the zero function it is
//! replaced by `z`. The product `P(z)` of all working pivots is then a
//! polynomial and `det T = P(0)`.
//!
//! Replacing a vanishing pivot by `z` is the same as adding `z` to the
//! corresponding diagonal entry, so `P(z)` is the determinant of a
//! perturbed matrix and is polynomial in `z`. Coefficients are exact
//! rationals (floats enter through their exact binary values), and every
//! intermediate is kept in reduced form. This is orders of magnitude slower
//! than the numeric kernels.

mod poly;
mod ratfn;

pub use poly::Polynomial;
pub use ratfn::{ArithOp, RationalFunction};

use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::matrix::TridiagonalMatrix;
use crate::recurrences::{exact::exact_entries, Algorithm, DetResult, StepCounts};

/// Outcome of a DETGTRI run.
#[derive(Debug, Clone, PartialEq)]
pub struct DetgtriRun {
    /// `P(z)`, the product of the working pivots.
    pub product: Polynomial,
    /// 1-based indices of the pivots that were replaced by `z`.
    pub substitutions: Vec<usize>,
}

impl DetgtriRun {
    /// `P(0)`.
    pub fn det(&self) -> BigRational {
        self.product.eval_at_zero()
    }
}

/// Snapshot of the working pivot `d_k` right after it is formed.
#[derive(Debug, Clone, PartialEq)]
pub struct PivotStep {
    pub index: usize,
    pub num_degree: Option<usize>,
    pub den_degree: usize,
    /// Substitutions performed before this pivot was formed.
    pub substitutions: usize,
}

pub fn detgtri(m: &TridiagonalMatrix) -> Result<DetgtriRun> {
    detgtri_observed(m, |_| {})
}

/// [`detgtri`] with a callback after each working pivot is formed.
pub fn detgtri_observed(
    m: &TridiagonalMatrix,
    mut observe: impl FnMut(&PivotStep),
) -> Result<DetgtriRun> {
    let (d, ab) = exact_entries(m);
    let n = d.len();
    let mut substitutions = Vec::new();

    let mut pivot = RationalFunction::constant(d[0].clone());
    observe(&step(1, &pivot, 0));
    let mut product = RationalFunction::one();

    for k in 2..=n {
        if pivot.is_zero() {
            pivot = RationalFunction::z();
            substitutions.push(k - 1);
        }
        product = &product * &pivot;
        let correction = &RationalFunction::constant(ab[k - 2].clone()) * &pivot.recip()?;
        pivot = &RationalFunction::constant(d[k - 1].clone()) - &correction;
        observe(&step(k, &pivot, substitutions.len()));
    }
    product = &product * &pivot;

    let product = product.as_polynomial().ok_or(Error::NotPolynomial)?.clone();
    Ok(DetgtriRun {
        product,
        substitutions,
    })
}

/// Exact `det T` via DETGTRI.
pub fn det_detgtri_exact(m: &TridiagonalMatrix) -> Result<BigRational> {
    Ok(detgtri(m)?.det())
}

/// `det T` via DETGTRI, rounded to the nearest `f64`.
pub fn det_detgtri(m: &TridiagonalMatrix) -> Result<DetResult> {
    let exact = det_detgtri_exact(m)?;
    let value = exact
        .to_f64()
        .filter(|v| v.is_finite())
        .ok_or(Error::Overflow { index: m.n() })?;
    Ok(DetResult {
        value,
        algorithm: Algorithm::Detgtri,
        pivot_break: None,
        steps: StepCounts {
            pivot_updates: m.n() - 1,
            three_term_steps: 0,
        },
    })
}

/// `p(0)` as an exact rational.
pub fn poly_eval_at_zero(p: &Polynomial) -> BigRational {
    p.eval_at_zero()
}

fn step(index: usize, pivot: &RationalFunction, substitutions: usize) -> PivotStep {
    PivotStep {
        index,
        num_degree: pivot.numer().degree(),
        den_degree: pivot.denom().degree().unwrap_or(0),
        substitutions,
    }
}
