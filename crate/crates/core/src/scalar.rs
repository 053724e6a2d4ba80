//! Scalar abstractions shared by the polynomial, series and pullback code.
//!
//! Everything above this module is written against [`Scalar`] / [`Field`] so the
//! same routines run over exact values ([`QuadExt`](crate::QuadExt),
//! [`Rational`](crate::Rational)) and over `f64` / `Complex<f64>` images.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A commutative ring element that can absorb rational constants.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_rational(r: &BigRational) -> Self;

    fn from_i64(v: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(BigInt::from(v)))
    }

    fn from_bigint(v: &BigInt) -> Self {
        Self::from_rational(&BigRational::from_integer(v.clone()))
    }
}

/// A [`Scalar`] with division.
pub trait Field: Scalar + Div<Output = Self> {}

impl<T: Scalar + Div<Output = T>> Field for T {}

/// Sign of a real number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }

    pub fn of_bigint(v: &BigInt) -> Sign {
        if v.is_zero() {
            Sign::Zero
        } else if v.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

/// Real scalars whose sign can be decided without rounding.
pub trait ExactSign {
    fn sign_exact(&self) -> Sign;
}

impl ExactSign for BigRational {
    fn sign_exact(&self) -> Sign {
        Sign::of_bigint(self.numer())
    }
}

/// Lossy image of a scalar in double-precision complex numbers.
pub trait ToComplex {
    fn to_c64(&self) -> Complex64;
}

impl Scalar for f64 {
    fn from_rational(r: &BigRational) -> Self {
        r.to_f64().unwrap_or(f64::NAN)
    }
}

impl ToComplex for f64 {
    fn to_c64(&self) -> Complex64 {
        Complex64::new(*self, 0.0)
    }
}

impl Scalar for Complex64 {
    fn from_rational(r: &BigRational) -> Self {
        Complex64::new(r.to_f64().unwrap_or(f64::NAN), 0.0)
    }
}

impl ToComplex for Complex64 {
    fn to_c64(&self) -> Complex64 {
        *self
    }
}

impl Scalar for BigRational {
    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }
}

impl ToComplex for BigRational {
    fn to_c64(&self) -> Complex64 {
        Complex64::new(self.to_f64().unwrap_or(f64::NAN), 0.0)
    }
}
