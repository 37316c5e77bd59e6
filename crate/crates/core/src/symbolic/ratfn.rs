use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::Polynomial;
use crate::error::{Error, Result};

/// Reduced quotient of polynomials in `z`.
///
/// Canonical form: `gcd(num, den) = 1` and `den` is monic (hence has a
/// positive leading coefficient). Zero is `0 / 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

/// The four field operations, for [`RationalFunction::apply`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl RationalFunction {
    /// Reduces `num / den` to canonical form.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let lc = den.leading().expect("nonzero denominator").recip();
        Self {
            num: num.scale(&lc),
            den: den.scale(&lc),
        }
    }

    pub fn zero() -> Self {
        Self {
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn z() -> Self {
        Self {
            num: Polynomial::z(),
            den: Polynomial::one(),
        }
    }

    pub fn constant(c: BigRational) -> Self {
        Self {
            num: Polynomial::constant(c),
            den: Polynomial::one(),
        }
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        Self {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn numer(&self) -> &Polynomial {
        &self.num
    }

    pub fn denom(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial this function equals, if the denominator is constant.
    /// Since the denominator is monic, a constant denominator is exactly 1.
    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        self.den.is_constant().then_some(&self.num)
    }

    /// Re-runs the canonical reduction; the identity on any value built by
    /// this type.
    pub fn reduce(&self) -> Self {
        Self::reduced(self.num.clone(), self.den.clone())
    }

    /// `1 / self`.
    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    pub fn apply(&self, op: ArithOp, rhs: &Self) -> Result<Self> {
        Ok(match op {
            ArithOp::Add => self + rhs,
            ArithOp::Sub => self - rhs,
            ArithOp::Mul => self * rhs,
            ArithOp::Div => self.checked_div(rhs)?,
        })
    }

    /// Value at `z`, or `None` where the denominator vanishes.
    pub fn eval(&self, z: &BigRational) -> Option<BigRational> {
        let den = self.den.eval(z);
        (!den.is_zero()).then(|| self.num.eval(z) / den)
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;

    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::reduced(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunction::reduced(num, &self.den * &rhs.den)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;

    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;

    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;

    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        // cross-cancel first so the products stay small
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let divide = |p: &Polynomial, g: &Polynomial| {
            if g.is_constant() {
                p.clone()
            } else {
                p.div_rem(g).0
            }
        };
        let num = &divide(&self.num, &g1) * &divide(&rhs.num, &g2);
        let den = &divide(&self.den, &g2) * &divide(&rhs.den, &g1);
        let lc = den.leading().expect("nonzero denominator").recip();
        RationalFunction {
            num: num.scale(&lc),
            den: den.scale(&lc),
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
