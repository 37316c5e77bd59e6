//! The same recurrences over exact rationals.
//!
//! Every finite `f64` is a dyadic rational, so these re-runs evaluate the
//! determinant of exactly the stored matrix with no rounding. They are the
//! reference the floating kernels and the symbolic algorithm are checked
//! against.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::TridiagonalMatrix;

/// Result of [`det_hybrid_exact`].
#[derive(Debug, Clone, PartialEq)]
pub struct ExactHybrid {
    pub value: BigRational,
    pub pivot_break: Option<usize>,
}

pub(crate) fn exact_entries(m: &TridiagonalMatrix) -> (Vec<BigRational>, Vec<BigRational>) {
    let d = m.diag().iter().map(|&x| to_rational(x)).collect();
    let ab = m
        .upper()
        .iter()
        .zip(m.lower())
        .map(|(&a, &b)| to_rational(a) * to_rational(b))
        .collect();
    (d, ab)
}

/// Exact value of a finite float.
pub fn to_rational(x: f64) -> BigRational {
    BigRational::from_float(x).expect("matrix entries are finite")
}

/// Product of pivots in exact arithmetic; fails on a vanishing interior pivot.
pub fn det_two_term_exact(m: &TridiagonalMatrix) -> Result<BigRational> {
    let (d, ab) = exact_entries(m);
    let mut c = d[0].clone();
    let mut f = c.clone();
    for i in 1..d.len() {
        if c.is_zero() {
            return Err(Error::ZeroPivot { index: i });
        }
        c = &d[i] - &ab[i - 1] / &c;
        f *= &c;
    }
    Ok(f)
}

pub fn det_three_term_exact(m: &TridiagonalMatrix) -> BigRational {
    let (d, ab) = exact_entries(m);
    if let Some((d, ab)) = integer_entries(&d, &ab) {
        let f = three_term_integer(&d, &ab, 1, BigInt::one(), d[0].clone());
        return BigRational::from_integer(f);
    }
    let mut f_prev2 = BigRational::one();
    let mut f_prev = d[0].clone();
    for i in 1..d.len() {
        let f = &d[i] * &f_prev - &ab[i - 1] * &f_prev2;
        f_prev2 = std::mem::replace(&mut f_prev, f);
    }
    f_prev
}

/// The hybrid control flow with an exact zero test.
pub fn det_hybrid_exact(m: &TridiagonalMatrix) -> ExactHybrid {
    let (d, ab) = exact_entries(m);
    match integer_entries(&d, &ab) {
        Some((di, abi)) => hybrid_integer(&d, &ab, &di, &abi),
        None => hybrid_rational(&d, &ab),
    }
}

fn hybrid_rational(d: &[BigRational], ab: &[BigRational]) -> ExactHybrid {
    let n = d.len();
    let mut c = d[0].clone();
    let mut f_prev2 = BigRational::one();
    let mut f_prev = c.clone();
    let mut k = 1;
    while k < n && !c.is_zero() {
        k += 1;
        c = &d[k - 1] - &ab[k - 2] / &c;
        let f = &c * &f_prev;
        f_prev2 = std::mem::replace(&mut f_prev, f);
    }
    let pivot_break = (c.is_zero() && k < n).then_some(k);
    for i in k..n {
        let f = &d[i] * &f_prev - &ab[i - 1] * &f_prev2;
        f_prev2 = std::mem::replace(&mut f_prev, f);
    }
    ExactHybrid {
        value: f_prev,
        pivot_break,
    }
}

/// Integer entries give integer minors, so `f` is kept in `BigInt` and
/// `f_k = c_k f_{k-1}` becomes an exact division.
fn hybrid_integer(
    d: &[BigRational],
    ab: &[BigRational],
    di: &[BigInt],
    abi: &[BigInt],
) -> ExactHybrid {
    let n = d.len();
    let mut c = d[0].clone();
    let mut f_prev2 = BigInt::one();
    let mut f_prev = di[0].clone();
    let mut k = 1;
    while k < n && !c.is_zero() {
        k += 1;
        c = &d[k - 1] - &ab[k - 2] / &c;
        let f = (c.numer() * &f_prev) / c.denom();
        f_prev2 = std::mem::replace(&mut f_prev, f);
    }
    let pivot_break = (c.is_zero() && k < n).then_some(k);
    ExactHybrid {
        value: BigRational::from_integer(three_term_integer(di, abi, k, f_prev2, f_prev)),
        pivot_break,
    }
}

fn integer_entries(d: &[BigRational], ab: &[BigRational]) -> Option<(Vec<BigInt>, Vec<BigInt>)> {
    let all = |v: &[BigRational]| -> Option<Vec<BigInt>> {
        v.iter()
            .map(|x| x.is_integer().then(|| x.to_integer()))
            .collect()
    };
    Some((all(d)?, all(ab)?))
}

/// Three-term recurrence over the integers for `f_{k+1}..f_n`.
fn three_term_integer(
    d: &[BigInt],
    ab: &[BigInt],
    k: usize,
    mut f_prev2: BigInt,
    mut f_prev: BigInt,
) -> BigInt {
    for i in k..d.len() {
        let f = &d[i] * &f_prev - &ab[i - 1] * &f_prev2;
        f_prev2 = std::mem::replace(&mut f_prev, f);
    }
    f_prev
}
