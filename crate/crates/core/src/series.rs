//! Power series truncated at a fixed order.

use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::{Field, Scalar};

/// `coeffs[i]` is the coefficient of `T^i`, exact through `T^order`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<S> {
    order: usize,
    coeffs: Vec<S>,
}

impl<S: Scalar> TruncatedSeries<S> {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            order,
            coeffs: vec![S::zero(); order + 1],
        }
    }

    pub fn constant(c: S, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// Truncates (or zero-pads) a polynomial to the given order.
    pub fn from_poly(p: &Poly<S>, order: usize) -> Self {
        TruncatedSeries {
            order,
            coeffs: (0..=order).map(|i| p.coeff(i)).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &S {
        &self.coeffs[i]
    }

    pub fn to_poly(&self) -> Poly<S> {
        Poly::new(self.coeffs.clone())
    }

    pub fn scale(&self, c: &S) -> Self {
        TruncatedSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    /// Multiplies by `T`, dropping the term that falls past the order.
    pub fn mul_t(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.order + 1);
        coeffs.push(S::zero());
        coeffs.extend(self.coeffs[..self.order].iter().cloned());
        TruncatedSeries {
            order: self.order,
            coeffs,
        }
    }

    /// Divides by `1 - T` (running prefix sums).
    pub fn div_one_minus_t(&self) -> Self {
        let mut acc = S::zero();
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                acc = acc.clone() + c.clone();
                acc.clone()
            })
            .collect();
        TruncatedSeries {
            order: self.order,
            coeffs,
        }
    }

    /// Multiplies by the polynomial `p`, truncating.
    pub fn mul_poly(&self, p: &Poly<S>) -> Self {
        let mut out = vec![S::zero(); self.order + 1];
        for (j, b) in p.coeffs().iter().enumerate().take(self.order + 1) {
            if b.is_zero() {
                continue;
            }
            for i in 0..=self.order - j {
                out[i + j] = out[i + j].clone() + self.coeffs[i].clone() * b.clone();
            }
        }
        TruncatedSeries {
            order: self.order,
            coeffs: out,
        }
    }
}

impl<S: Field> TruncatedSeries<S> {
    /// Exact quotient series of `num / den` through `T^order`.
    pub fn expand(num: &Poly<S>, den: &Poly<S>, order: usize) -> Result<Self> {
        let d0 = den.coeff(0);
        if d0.is_zero() {
            return Err(Error::SeriesNotInvertible);
        }
        let mut out: Vec<S> = Vec::with_capacity(order + 1);
        for i in 0..=order {
            let mut acc = num.coeff(i);
            for (j, dj) in den.coeffs().iter().enumerate().skip(1).take(i) {
                if !dj.is_zero() {
                    acc = acc - dj.clone() * out[i - j].clone();
                }
            }
            out.push(acc / d0.clone());
        }
        Ok(TruncatedSeries { order, coeffs: out })
    }
}

fn check_order<S>(a: &TruncatedSeries<S>, b: &TruncatedSeries<S>) {
    assert_eq!(a.order, b.order, "series orders differ");
}

impl<'a, S: Scalar> Add<&'a TruncatedSeries<S>> for &'a TruncatedSeries<S> {
    type Output = TruncatedSeries<S>;
    fn add(self, rhs: &TruncatedSeries<S>) -> TruncatedSeries<S> {
        check_order(self, rhs);
        TruncatedSeries {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }
}

impl<'a, S: Scalar> Sub<&'a TruncatedSeries<S>> for &'a TruncatedSeries<S> {
    type Output = TruncatedSeries<S>;
    fn sub(self, rhs: &TruncatedSeries<S>) -> TruncatedSeries<S> {
        check_order(self, rhs);
        TruncatedSeries {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }
}

impl<'a, S: Scalar> Mul<&'a TruncatedSeries<S>> for &'a TruncatedSeries<S> {
    type Output = TruncatedSeries<S>;
    fn mul(self, rhs: &TruncatedSeries<S>) -> TruncatedSeries<S> {
        check_order(self, rhs);
        self.mul_poly(&rhs.to_poly())
    }
}
