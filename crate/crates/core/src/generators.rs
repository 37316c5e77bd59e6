//! Matrix families used as worked examples and test problems, their known
//! determinants, and the random models used by the test suites.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::matrix::TridiagonalMatrix;

/// The worked-example families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// A fixed 4x4 matrix whose second pivot vanishes.
    Ex31,
    /// `d_i = 2`, `a_i = b_i = -1`; `det = n + 1`.
    Ex32,
    /// All three diagonals equal to 1; determinant cycles with period 6.
    Ex33,
    /// `d_i = 1`, `a_i = i`, `b_i = n - i`.
    Ex34,
    /// `d = (1, 2, ..., 2, 1)`, `a_i = 1`, `b_i = 2`.
    Ex35,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Ex31,
        Family::Ex32,
        Family::Ex33,
        Family::Ex34,
        Family::Ex35,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Ex31 => "ex31",
            Family::Ex32 => "ex32",
            Family::Ex33 => "ex33",
            Family::Ex34 => "ex34",
            Family::Ex35 => "ex35",
        }
    }

    /// Whether [`gen_example`] accepts order `n`.
    pub fn supports(self, n: usize) -> bool {
        match self {
            Family::Ex31 => n == 4,
            Family::Ex32 | Family::Ex33 => n >= 1,
            Family::Ex34 | Family::Ex35 => n >= 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let key = s.to_ascii_lowercase().replace(['.', '_', '-'], "");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == key)
            .ok_or_else(|| format!("unknown family {s:?} (expected ex31..ex35)"))
    }
}

/// Builds member `n` of a family.
pub fn gen_example(family: Family, n: usize) -> Result<TridiagonalMatrix> {
    if !family.supports(n) {
        return Err(Error::UnsupportedOrder {
            family: family.to_string(),
            n,
        });
    }
    let (d, a, b) = match family {
        Family::Ex31 => (
            vec![1.0, 1.0, 2.0, -1.0],
            vec![1.0, -1.0, 1.0],
            vec![1.0, 1.0, -3.0],
        ),
        Family::Ex32 => (vec![2.0; n], vec![-1.0; n - 1], vec![-1.0; n - 1]),
        Family::Ex33 => (vec![1.0; n], vec![1.0; n - 1], vec![1.0; n - 1]),
        Family::Ex34 => (
            vec![1.0; n],
            (1..n).map(|i| i as f64).collect(),
            (1..n).map(|i| (n - i) as f64).collect(),
        ),
        Family::Ex35 => {
            let mut d = vec![2.0; n];
            d[0] = 1.0;
            d[n - 1] = 1.0;
            (d, vec![1.0; n - 1], vec![2.0; n - 1])
        }
    };
    TridiagonalMatrix::new(d, a, b)
}

/// Exact determinant of family member `n` from its closed form.
///
/// * `Ex32`: `n + 1`.
/// * `Ex33`: `1, 0, -1` according to `n mod 6` in `{0,1}`, `{2,5}`, `{3,4}`.
/// * `Ex34`: `0` for even `n`; for odd `n = 2k + 1`,
///   `(-1)^k n! / 2^(n-1) * C(n-1, k)`.
pub fn closed_form_det(family: Family, n: usize) -> Result<BigInt> {
    if n == 0 || !family.supports(n) {
        return Err(Error::UnsupportedOrder {
            family: family.to_string(),
            n,
        });
    }
    match family {
        Family::Ex32 => Ok(BigInt::from(n) + 1),
        Family::Ex33 => Ok(BigInt::from(match n % 6 {
            0 | 1 => 1,
            2 | 5 => 0,
            _ => -1,
        })),
        Family::Ex34 => Ok(ex34_closed_form(n)),
        Family::Ex31 | Family::Ex35 => Err(Error::NoClosedForm {
            family: family.to_string(),
        }),
    }
}

fn ex34_closed_form(n: usize) -> BigInt {
    if n.is_multiple_of(2) {
        return BigInt::zero();
    }
    let k = (n - 1) / 2;
    let factorial: BigInt = (1..=n).map(BigInt::from).product();
    let binom = binomial(n - 1, k);
    let numerator = factorial * binom;
    let denominator = BigInt::one() << (n - 1);
    let (q, r) = numerator.div_rem(&denominator);
    debug_assert!(r.is_zero());
    if k.is_multiple_of(2) {
        q
    } else {
        -q
    }
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Random tridiagonal matrix with integer entries drawn uniformly from
/// `lo..=hi`.
pub fn random_integer<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    lo: i32,
    hi: i32,
) -> TridiagonalMatrix {
    let mut draw = |len: usize| -> Vec<f64> {
        (0..len)
            .map(|_| f64::from(rng.gen_range(lo..=hi)))
            .collect()
    };
    let d = draw(n);
    let a = draw(n - 1);
    let b = draw(n - 1);
    TridiagonalMatrix::new(d, a, b).expect("lengths are consistent")
}

/// Random symmetric tridiagonal matrix with integer entries in `lo..=hi`.
pub fn random_symmetric_integer<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    lo: i32,
    hi: i32,
) -> TridiagonalMatrix {
    let d: Vec<f64> = (0..n).map(|_| f64::from(rng.gen_range(lo..=hi))).collect();
    let a: Vec<f64> = (1..n).map(|_| f64::from(rng.gen_range(lo..=hi))).collect();
    TridiagonalMatrix::new(d, a.clone(), a).expect("lengths are consistent")
}

/// Random real matrix with off-diagonals uniform in `[-1, 1]` and a
/// strictly dominant diagonal of random sign, so that no pivot comes
/// close to vanishing.
pub fn random_diag_dominant<R: Rng + ?Sized>(rng: &mut R, n: usize) -> TridiagonalMatrix {
    let a: Vec<f64> = (1..n).map(|_| rng.gen_range(-1.0..=1.0)).collect();
    let b: Vec<f64> = (1..n).map(|_| rng.gen_range(-1.0..=1.0)).collect();
    let d = (0..n)
        .map(|i| {
            let mut off = 0.0;
            if i > 0 {
                off += b[i - 1].abs();
            }
            if i + 1 < n {
                off += a[i].abs();
            }
            let mag = off + rng.gen_range(0.5..=2.0);
            if rng.gen_bool(0.5) {
                mag
            } else {
                -mag
            }
        })
        .collect();
    TridiagonalMatrix::new(d, a, b).expect("lengths are consistent")
}
