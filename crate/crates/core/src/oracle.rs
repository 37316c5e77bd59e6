//! Dense determinants used as independent ground truth.
//!
//! Neither routine knows the input is tridiagonal: both run ordinary
//! elimination on the full grid, so they share no code path with the
//! recurrence kernels.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::TridiagonalMatrix;

pub const DENSE_LIMIT_FLOAT: usize = 2048;
pub const DENSE_LIMIT_EXACT: usize = 64;

fn check_square<T>(g: &[Vec<T>], limit: usize) -> Result<usize> {
    let n = g.len();
    if n > limit {
        return Err(Error::DenseLimit { n, limit });
    }
    for (row, r) in g.iter().enumerate() {
        if r.len() != n {
            return Err(Error::NotSquare {
                row,
                len: r.len(),
                expected: n,
            });
        }
    }
    Ok(n)
}

/// Gaussian elimination with partial pivoting. The empty grid has
/// determinant 1.
pub fn dense_det_float(g: &[Vec<f64>]) -> Result<f64> {
    dense_det_float_with_limit(g, DENSE_LIMIT_FLOAT)
}

pub fn dense_det_float_with_limit(g: &[Vec<f64>], limit: usize) -> Result<f64> {
    let n = check_square(g, limit)?;
    let mut w: Vec<f64> = g.iter().flatten().copied().collect();
    let mut det = 1.0;
    for k in 0..n {
        let (p, pmax) = (k..n)
            .map(|i| (i, w[i * n + k].abs()))
            .fold(
                (k, -1.0),
                |best, cur| if cur.1 > best.1 { cur } else { best },
            );
        if pmax == 0.0 {
            return Ok(0.0);
        }
        if p != k {
            for j in 0..n {
                w.swap(k * n + j, p * n + j);
            }
            det = -det;
        }
        let pivot = w[k * n + k];
        det *= pivot;
        for i in k + 1..n {
            let factor = w[i * n + k] / pivot;
            if factor == 0.0 {
                continue;
            }
            for j in k + 1..n {
                w[i * n + j] -= factor * w[k * n + j];
            }
        }
    }
    Ok(det)
}

/// Exact determinant via fraction-free (Bareiss) elimination.
///
/// Each row is first scaled to integers by the lcm of its denominators;
/// the scaling is divided out at the end.
pub fn dense_det_exact(g: &[Vec<BigRational>]) -> Result<BigRational> {
    dense_det_exact_with_limit(g, DENSE_LIMIT_EXACT)
}

pub fn dense_det_exact_with_limit(g: &[Vec<BigRational>], limit: usize) -> Result<BigRational> {
    let n = check_square(g, limit)?;
    let mut scale = BigInt::one();
    let mut w: Vec<Vec<BigInt>> = g
        .iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            let ints = row.iter().map(|x| x.numer() * (&l / x.denom())).collect();
            scale *= &l;
            ints
        })
        .collect();

    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if w[k][k].is_zero() {
            match (k + 1..n).find(|&i| !w[i][k].is_zero()) {
                Some(p) => {
                    w.swap(k, p);
                    sign = -sign;
                }
                None => return Ok(BigRational::zero()),
            }
        }
        let (head, tail) = w.split_at_mut(k + 1);
        let pivot_row = &head[k];
        let pivot = &pivot_row[k];
        for row in tail.iter_mut() {
            let lead = std::mem::take(&mut row[k]);
            for j in k + 1..n {
                let x = &row[j];
                let y = &pivot_row[j];
                if x.is_zero() && (lead.is_zero() || y.is_zero()) {
                    continue;
                }
                let mut v = x * pivot;
                if !lead.is_zero() && !y.is_zero() {
                    v -= &lead * y;
                }
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
        }
        prev = w[k][k].clone();
    }
    let det = if n == 0 { BigInt::one() } else { prev };
    Ok(BigRational::new(sign * det, scale))
}

/// Exact dense grid of a tridiagonal matrix.
pub fn to_dense_exact(m: &TridiagonalMatrix, limit: usize) -> Result<Vec<Vec<BigRational>>> {
    Ok(m.to_dense_with_limit(limit)?
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|x| BigRational::from_float(x).expect("finite entry"))
                .collect()
        })
        .collect())
}

/// Sign of an exact rational as `-1`, `0` or `1`.
pub fn rational_sign(x: &BigRational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(g: &[&[i64]]) -> Vec<Vec<BigRational>> {
        g.iter()
            .map(|r| {
                r.iter()
                    .map(|&x| BigRational::from_integer(x.into()))
                    .collect()
            })
            .collect()
    }

    fn int(x: i64) -> BigRational {
        BigRational::from_integer(x.into())
    }

    #[test]
    fn float_basics() {
        let id = vec![
            vec![1.0, 0.0, 0.0],
            vec![0.0, 1.0, 0.0],
            vec![0.0, 0.0, 1.0],
        ];
        assert_eq!(dense_det_float(&id).unwrap(), 1.0);
        assert_eq!(
            dense_det_float(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap(),
            -1.0
        );
        let ex31 = vec![
            vec![1.0, 1.0, 0.0, 0.0],
            vec![1.0, 1.0, -1.0, 0.0],
            vec![0.0, 1.0, 2.0, 1.0],
            vec![0.0, 0.0, -3.0, -1.0],
        ];
        assert!((dense_det_float(&ex31).unwrap() + 1.0).abs() < 1e-14);
    }

    #[test]
    fn float_singular() {
        assert_eq!(
            dense_det_float(&[vec![1.0, 2.0], vec![2.0, 4.0]]).unwrap(),
            0.0
        );
    }

    #[test]
    fn float_errors() {
        assert!(matches!(
            dense_det_float(&[vec![1.0, 2.0], vec![2.0]]),
            Err(Error::NotSquare { row: 1, .. })
        ));
        let big = vec![vec![0.0; 3]; 3];
        assert!(matches!(
            dense_det_float_with_limit(&big, 2),
            Err(Error::DenseLimit { n: 3, limit: 2 })
        ));
    }

    #[test]
    fn exact_basics() {
        assert_eq!(dense_det_exact(&ints(&[&[0, 0], &[0, 0]])).unwrap(), int(0));
        assert_eq!(
            dense_det_exact(&ints(&[&[0, 1], &[1, 0]])).unwrap(),
            int(-1)
        );
        assert_eq!(dense_det_exact(&ints(&[])).unwrap(), int(1));
        let g = ints(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]);
        assert_eq!(dense_det_exact(&g).unwrap(), int(4));
    }

    #[test]
    fn exact_example_35_n4() {
        let g = ints(&[&[1, 1, 0, 0], &[2, 2, 1, 0], &[0, 2, 2, 1], &[0, 0, 2, 1]]);
        assert_eq!(dense_det_exact(&g).unwrap(), int(-2));
    }

    #[test]
    fn exact_rational_entries() {
        let half = BigRational::new(1.into(), 2.into());
        let third = BigRational::new(1.into(), 3.into());
        let g = vec![vec![half.clone(), third.clone()], vec![third, half]];
        // 1/4 - 1/9 = 5/36
        assert_eq!(
            dense_det_exact(&g).unwrap(),
            BigRational::new(5.into(), 36.into())
        );
    }

    #[test]
    fn exact_needs_row_swap_midway() {
        let g = ints(&[&[1, 2, 3], &[2, 4, 5], &[3, 5, 6]]);
        // 1(24-25) - 2(12-15) + 3(10-12) = -1 + 6 - 6 = -1
        assert_eq!(dense_det_exact(&g).unwrap(), int(-1));
    }

    #[test]
    fn exact_limit() {
        let g = vec![vec![BigRational::zero(); 65]; 65];
        assert!(matches!(
            dense_det_exact(&g),
            Err(Error::DenseLimit { n: 65, limit: 64 })
        ));
    }
}
