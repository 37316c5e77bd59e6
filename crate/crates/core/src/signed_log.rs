//! Sign and log-magnitude representation of real numbers.
//!
//! Determinants of order-`n` tridiagonal matrices routinely grow like
//! `rho^n`, which leaves `f64` range long before `n` becomes interesting.
//! [`SignedLog`] keeps the sign exactly and the natural log of the
//! magnitude, so products never overflow.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, MulAssign, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// `sign * exp(logmag)`, with `sign = 0` standing for exact zero.
///
/// For zero the stored `logmag` is `-inf` and is otherwise ignored.
#[derive(Debug, Clone, Copy)]
pub struct SignedLog {
    sign: i8,
    logmag: f64,
}

impl SignedLog {
    pub const ZERO: SignedLog = SignedLog {
        sign: 0,
        logmag: f64::NEG_INFINITY,
    };
    pub const ONE: SignedLog = SignedLog {
        sign: 1,
        logmag: 0.0,
    };

    /// Builds a value from its parts. A zero sign normalizes to [`SignedLog::ZERO`].
    pub fn new(sign: i8, logmag: f64) -> Self {
        match sign.cmp(&0) {
            Ordering::Equal => Self::ZERO,
            Ordering::Greater => Self { sign: 1, logmag },
            Ordering::Less => Self { sign: -1, logmag },
        }
    }

    pub fn from_f64(x: f64) -> Self {
        if x == 0.0 {
            Self::ZERO
        } else {
            Self::new(if x > 0.0 { 1 } else { -1 }, x.abs().ln())
        }
    }

    pub fn from_bigint(x: &BigInt) -> Self {
        match x.sign() {
            Sign::NoSign => Self::ZERO,
            Sign::Plus => Self::new(1, ln_abs_bigint(x)),
            Sign::Minus => Self::new(-1, ln_abs_bigint(x)),
        }
    }

    pub fn from_rational(x: &BigRational) -> Self {
        if x.is_zero() {
            return Self::ZERO;
        }
        let sign = if x.is_positive() { 1 } else { -1 };
        Self::new(sign, ln_abs_bigint(x.numer()) - ln_abs_bigint(x.denom()))
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    /// Natural log of the magnitude; `-inf` for zero.
    pub fn logmag(&self) -> f64 {
        self.logmag
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    /// Decodes back to a plain float; may overflow to `±inf` or underflow to 0.
    pub fn to_f64(&self) -> f64 {
        if self.sign == 0 {
            0.0
        } else {
            f64::from(self.sign) * self.logmag.exp()
        }
    }

    /// Relative distance `|x/y - 1|` computed in log space, for values of the
    /// same sign. Returns `None` when the signs differ.
    pub fn relative_error(&self, other: &SignedLog) -> Option<f64> {
        if self.sign != other.sign {
            return None;
        }
        if self.sign == 0 {
            return Some(0.0);
        }
        Some((self.logmag - other.logmag).exp_m1().abs())
    }
}

impl PartialEq for SignedLog {
    fn eq(&self, other: &Self) -> bool {
        self.sign == other.sign && (self.sign == 0 || self.logmag == other.logmag)
    }
}

impl Mul for SignedLog {
    type Output = SignedLog;

    fn mul(self, rhs: SignedLog) -> SignedLog {
        if self.sign == 0 || rhs.sign == 0 {
            SignedLog::ZERO
        } else {
            SignedLog {
                sign: self.sign * rhs.sign,
                logmag: self.logmag + rhs.logmag,
            }
        }
    }
}

impl Neg for SignedLog {
    type Output = SignedLog;

    fn neg(self) -> SignedLog {
        SignedLog {
            sign: -self.sign,
            logmag: self.logmag,
        }
    }
}

impl Add for SignedLog {
    type Output = SignedLog;

    /// Log-sum-exp with signs. Exact cancellation yields zero.
    fn add(self, rhs: SignedLog) -> SignedLog {
        if self.sign == 0 {
            return rhs;
        }
        if rhs.sign == 0 {
            return self;
        }
        let (big, small) = if self.logmag >= rhs.logmag {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let ratio = (small.logmag - big.logmag).exp();
        if big.sign == small.sign {
            SignedLog::new(big.sign, big.logmag + ratio.ln_1p())
        } else if ratio == 1.0 {
            SignedLog::ZERO
        } else {
            SignedLog::new(big.sign, big.logmag + (-ratio).ln_1p())
        }
    }
}

impl Sub for SignedLog {
    type Output = SignedLog;

    fn sub(self, rhs: SignedLog) -> SignedLog {
        self + (-rhs)
    }
}

impl MulAssign for SignedLog {
    fn mul_assign(&mut self, rhs: SignedLog) {
        *self = *self * rhs;
    }
}

impl From<f64> for SignedLog {
    fn from(x: f64) -> Self {
        SignedLog::from_f64(x)
    }
}

impl fmt::Display for SignedLog {
    /// `sign logmag`, the scaled-mode output format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.sign, self.logmag)
    }
}

/// `ln |x|` for arbitrarily large integers; `-inf` for zero.
pub fn ln_abs_bigint(x: &BigInt) -> f64 {
    let bits = x.bits();
    if bits == 0 {
        return f64::NEG_INFINITY;
    }
    if bits <= 1000 {
        return x.abs().to_f64().unwrap_or(f64::INFINITY).ln();
    }
    let shift = bits - 64;
    let top = (x.abs() >> shift).to_f64().unwrap_or(f64::INFINITY);
    top.ln() + shift as f64 * std::f64::consts::LN_2
}
