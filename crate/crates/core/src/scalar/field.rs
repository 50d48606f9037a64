use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Commutative ring with unit. Arithmetic is by value; callers clone.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring + Div<Output = Self> {
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;

    /// Elimination prefers pivots of small weight. Exact fields with
    /// constant-size elements leave this at zero.
    fn pivot_weight(&self) -> usize {
        0
    }
}

/// An element of the base field K.
pub trait Scalar: Field + Eq + Hash + Display + Send + Sync + 'static {
    fn from_i64(v: i64) -> Self;

    /// Image of the fraction `num/den` in K, or `None` when `den` vanishes in K.
    fn from_ratio(num: &BigInt, den: &BigInt) -> Option<Self>;

    /// Exact text form: `"a"` or `"a/b"`.
    fn to_exact_string(&self) -> String {
        self.to_string()
    }
}

pub type Rational = BigRational;

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl Field for BigRational {
    fn inv(&self) -> Self {
        assert!(!Ring::is_zero(self), "inverse of zero");
        self.recip()
    }

    fn pivot_weight(&self) -> usize {
        (self.numer().bits() + self.denom().bits()) as usize
    }
}

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_ratio(num: &BigInt, den: &BigInt) -> Option<Self> {
        if den.is_zero() {
            None
        } else {
            Some(BigRational::new(num.clone(), den.clone()))
        }
    }

    fn to_exact_string(&self) -> String {
        if self.denom().is_one() {
            self.numer().to_string()
        } else {
            format!("{}/{}", self.numer(), self.denom().abs())
        }
    }
}
