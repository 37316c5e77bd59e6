//! LU factors and positive-definiteness, both read off the pivot vector.
//!
//! With `c` the pivot vector, a tridiagonal `T` factors into bidiagonal
//! matrices without any further arithmetic beyond `n - 1` divisions:
//!
//! ```text
//! Doolittle:  L = unit lower, sub = b_i / c_i     U = upper, diag = c, super = a
//! Crout:      L = lower, diag = c, sub = b        U = unit upper, super = a_i / c_i
//! ```
//!
//! A symmetric tridiagonal matrix is positive definite exactly when every
//! pivot is strictly positive.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::matrix::TridiagonalMatrix;
use crate::recurrences::{pivot_sequence, ZeroTest};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convention {
    /// Unit diagonal on `L`.
    Doolittle,
    /// Unit diagonal on `U`.
    Crout,
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Doolittle => "doolittle",
            Convention::Crout => "crout",
        })
    }
}

impl FromStr for Convention {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "doolittle" => Ok(Convention::Doolittle),
            "crout" => Ok(Convention::Crout),
            _ => Err(format!("unknown convention {s:?}")),
        }
    }
}

/// Lower-bidiagonal `L` and upper-bidiagonal `U` with `L U = T`.
#[derive(Debug, Clone, PartialEq)]
pub struct LuFactors {
    pub convention: Convention,
    pub l_diag: Vec<f64>,
    pub l_sub: Vec<f64>,
    pub u_diag: Vec<f64>,
    pub u_super: Vec<f64>,
}

impl LuFactors {
    pub fn n(&self) -> usize {
        self.l_diag.len()
    }

    /// Diagonals `(d, a, b)` of the product `L U`.
    pub fn product_diagonals(&self) -> (Vec<f64>, Vec<f64>, Vec<f64>) {
        let n = self.n();
        let d = (0..n)
            .map(|i| {
                let mut x = self.l_diag[i] * self.u_diag[i];
                if i > 0 {
                    x += self.l_sub[i - 1] * self.u_super[i - 1];
                }
                x
            })
            .collect();
        let a = (0..n - 1)
            .map(|i| self.l_diag[i] * self.u_super[i])
            .collect();
        let b = (0..n - 1).map(|i| self.l_sub[i] * self.u_diag[i]).collect();
        (d, a, b)
    }

    /// The product `L U` as a tridiagonal matrix.
    pub fn reconstruct(&self) -> Result<TridiagonalMatrix> {
        let (d, a, b) = self.product_diagonals();
        TridiagonalMatrix::new(d, a, b)
    }

    /// The non-unit diagonal, i.e. the pivot vector.
    pub fn pivots(&self) -> &[f64] {
        match self.convention {
            Convention::Doolittle => &self.u_diag,
            Convention::Crout => &self.l_diag,
        }
    }

    /// `det T` as the product of the pivots.
    pub fn det(&self) -> f64 {
        self.pivots().iter().product()
    }

    /// Row-major dense `L` and `U`.
    pub fn to_dense(&self) -> (Vec<Vec<f64>>, Vec<Vec<f64>>) {
        let n = self.n();
        let mut l = vec![vec![0.0; n]; n];
        let mut u = vec![vec![0.0; n]; n];
        for i in 0..n {
            l[i][i] = self.l_diag[i];
            u[i][i] = self.u_diag[i];
            if i + 1 < n {
                l[i + 1][i] = self.l_sub[i];
                u[i][i + 1] = self.u_super[i];
            }
        }
        (l, u)
    }
}

/// Factors `T = L U` in the requested convention.
///
/// Requires `c_1..c_{n-1}` nonzero; `c_n = 0` is allowed and gives a
/// singular factor. No pivoting is attempted.
pub fn lu_factorize(m: &TridiagonalMatrix, convention: Convention) -> Result<LuFactors> {
    let n = m.n();
    let pivots = pivot_sequence(m, ZeroTest::Exact);
    if let Some(index) = pivots.interior_break(n) {
        return Err(Error::NoFactorization { index });
    }
    let c = pivots.c;
    let ones = vec![1.0; n];
    let (a, b) = (m.upper(), m.lower());
    Ok(match convention {
        Convention::Doolittle => LuFactors {
            convention,
            l_diag: ones,
            l_sub: b.iter().zip(&c).map(|(b, c)| b / c).collect(),
            u_diag: c,
            u_super: a.to_vec(),
        },
        Convention::Crout => LuFactors {
            convention,
            l_sub: b.to_vec(),
            u_super: a.iter().zip(&c).map(|(a, c)| a / c).collect(),
            l_diag: c,
            u_diag: ones,
        },
    })
}

/// Verdict of [`is_positive_definite`].
#[derive(Debug, Clone, PartialEq)]
pub enum Definiteness {
    /// All pivots positive; carries the full pivot vector.
    PositiveDefinite { pivots: Vec<f64> },
    /// 1-based index of the first pivot that is not strictly positive.
    NotPositiveDefinite { index: usize },
}

impl Definiteness {
    pub fn is_positive_definite(&self) -> bool {
        matches!(self, Definiteness::PositiveDefinite { .. })
    }
}

/// Strict `c_i > 0` test for a symmetric tridiagonal matrix.
///
/// Pivots are computed in floating point, so a matrix with a leading minor
/// that is exactly zero may land on either side of the test.
pub fn is_positive_definite(m: &TridiagonalMatrix) -> Result<Definiteness> {
    if let Some(index) = m.first_asymmetry() {
        return Err(Error::NotSymmetric { index });
    }
    let (d, a) = (m.diag(), m.upper());
    let mut pivots = Vec::with_capacity(m.n());
    let mut c = d[0];
    for i in 0..m.n() {
        if i > 0 {
            c = d[i] - a[i - 1] * a[i - 1] / c;
        }
        if c.partial_cmp(&0.0) != Some(std::cmp::Ordering::Greater) {
            return Ok(Definiteness::NotPositiveDefinite { index: i + 1 });
        }
        pivots.push(c);
    }
    Ok(Definiteness::PositiveDefinite { pivots })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(d: &[f64], a: &[f64], b: &[f64]) -> TridiagonalMatrix {
        TridiagonalMatrix::new(d.to_vec(), a.to_vec(), b.to_vec()).unwrap()
    }

    fn spd5() -> TridiagonalMatrix {
        mat(&[4.0, 5.0, 5.0, 5.0, 5.0], &[2.0; 4], &[2.0; 4])
    }

    #[test]
    fn doolittle_of_spd5() {
        let lu = lu_factorize(&spd5(), Convention::Doolittle).unwrap();
        assert_eq!(lu.u_diag, vec![4.0; 5]);
        assert_eq!(lu.l_sub, vec![0.5; 4]);
        assert_eq!(lu.l_diag, vec![1.0; 5]);
        assert_eq!(lu.u_super, vec![2.0; 4]);
        assert_eq!(lu.reconstruct().unwrap(), spd5());
        assert_eq!(lu.det(), 1024.0);
    }

    #[test]
    fn crout_of_spd5() {
        let lu = lu_factorize(&spd5(), Convention::Crout).unwrap();
        assert_eq!(lu.l_diag, vec![4.0; 5]);
        assert_eq!(lu.u_super, vec![0.5; 4]);
        assert_eq!(lu.reconstruct().unwrap(), spd5());
    }

    #[test]
    fn one_by_one() {
        let lu = lu_factorize(&mat(&[3.0], &[], &[]), Convention::Doolittle).unwrap();
        assert_eq!(lu.l_diag, vec![1.0]);
        assert_eq!(lu.u_diag, vec![3.0]);
        assert!(lu.l_sub.is_empty());
    }

    #[test]
    fn interior_zero_pivot_has_no_factorization() {
        let m = mat(&[1.0, 1.0, 2.0, -1.0], &[1.0, -1.0, 1.0], &[1.0, 1.0, -3.0]);
        for conv in [Convention::Doolittle, Convention::Crout] {
            assert!(matches!(
                lu_factorize(&m, conv),
                Err(Error::NoFactorization { index: 2 })
            ));
        }
    }

    #[test]
    fn zero_final_pivot_is_allowed() {
        let m = mat(&[1.0, 1.0], &[1.0], &[1.0]);
        let lu = lu_factorize(&m, Convention::Doolittle).unwrap();
        assert_eq!(lu.u_diag, vec![1.0, 0.0]);
        assert_eq!(lu.det(), 0.0);
        assert_eq!(lu.reconstruct().unwrap(), m);
    }

    #[test]
    fn dense_factors_multiply_back() {
        let m = mat(&[3.0, -2.0, 4.0], &[1.0, 0.5], &[2.0, -1.0]);
        let lu = lu_factorize(&m, Convention::Crout).unwrap();
        let (l, u) = lu.to_dense();
        let g = m.to_dense().unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let x: f64 = (0..3).map(|k| l[i][k] * u[k][j]).sum();
                assert!((x - g[i][j]).abs() <= 1e-15 * g[i][j].abs());
            }
        }
    }

    #[test]
    fn pd_examples() {
        match is_positive_definite(&spd5()).unwrap() {
            Definiteness::PositiveDefinite { pivots } => assert_eq!(pivots, vec![4.0; 5]),
            other => panic!("{other:?}"),
        }
        assert_eq!(
            is_positive_definite(&mat(&[1.0, 1.0], &[1.0], &[1.0])).unwrap(),
            Definiteness::NotPositiveDefinite { index: 2 }
        );
        assert_eq!(
            is_positive_definite(&mat(&[-1.0], &[], &[])).unwrap(),
            Definiteness::NotPositiveDefinite { index: 1 }
        );
    }

    #[test]
    fn pd_rejects_asymmetric() {
        assert!(matches!(
            is_positive_definite(&mat(&[1.0, 1.0], &[1.0], &[2.0])),
            Err(Error::NotSymmetric { index: 1 })
        ));
    }
}
