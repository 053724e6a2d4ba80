//! Dense univariate polynomials over any [`Scalar`].

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::quad::QuadExt;
use crate::scalar::{Field, Scalar};

/// Coefficient vector with `coeffs[i]` the coefficient of `T^i`; trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> Poly<S> {
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: S) -> Self {
        Self::new(vec![c])
    }

    /// `c * T^k`.
    pub fn monomial(c: S, k: usize) -> Self {
        let mut v = vec![S::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<S> {
        self.coeffs
    }

    /// Coefficient of `T^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> S {
        self.coeffs.get(i).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&S> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &S) -> S {
        self.coeffs
            .iter()
            .rev()
            .fold(S::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// `f(c*T)`.
    pub fn compose_linear(&self, c: &S) -> Self {
        let mut power = S::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a.clone() * power.clone());
            power = power * c.clone();
        }
        Self::new(out)
    }

    /// `f(T^k)`.
    pub fn substitute_power(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return Self::constant(self.eval(&S::one()));
        }
        let mut out = vec![S::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            out[i * k] = a.clone();
        }
        Self::new(out)
    }

    /// `T^m f(1/T)`: the coefficient vector reversed into length `m + 1`.
    pub fn reciprocal_transform(&self, m: usize) -> Result<Self> {
        let len = self.coeffs.len();
        if len > m + 1 {
            return Err(Error::ReciprocalLength {
                m,
                degree: len - 1,
            });
        }
        let mut out = vec![S::zero(); m + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            out[m - i] = a.clone();
        }
        Ok(Self::new(out))
    }

    /// Palindromic coefficient vector.
    pub fn is_self_reciprocal(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let c = &self.coeffs;
        Ok((0..c.len() / 2).all(|i| c[i] == c[c.len() - 1 - i]))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a.clone() * S::from_i64(i as i64))
                .collect(),
        )
    }

    /// Multiplies by `T^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut out = vec![S::zero(); k];
        out.extend(self.coeffs.iter().cloned());
        Self::new(out)
    }

    /// Coefficient-wise image in another scalar type.
    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// `true` if every odd (resp. even) coefficient vanishes.
    pub fn is_even(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(Zero::is_zero)
    }

    pub fn is_odd(&self) -> bool {
        self.coeffs.iter().step_by(2).all(Zero::is_zero)
    }
}

impl<S: Field> Poly<S> {
    /// Divides every coefficient by `c`.
    pub fn div_scalar(&self, c: &S) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() / c.clone()).collect())
    }

    /// Scales to unit leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.div_scalar(&l.clone()),
            None => Self::zero(),
        }
    }
}

impl Poly<QuadExt> {
    /// The common base of the coefficients, if any coefficient carries one.
    pub fn base(&self) -> Option<u64> {
        self.coeffs.iter().find_map(QuadExt::base)
    }

    fn check_bases(&self, other: &Self) -> Result<()> {
        let mut seen: Option<u64> = None;
        for b in self.coeffs.iter().chain(&other.coeffs).filter_map(QuadExt::base) {
            match seen {
                None => seen = Some(b),
                Some(p) if p != b => return Err(Error::BaseMismatch(p, b)),
                Some(_) => {}
            }
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_bases(other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_bases(other)?;
        Ok(self - other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_bases(other)?;
        Ok(self * other)
    }

    pub fn checked_compose_linear(&self, c: &QuadExt) -> Result<Self> {
        self.check_bases(&Poly::constant(c.clone()))?;
        Ok(self.compose_linear(c))
    }

    /// Double-precision image of the coefficients.
    pub fn to_f64(&self) -> Poly<f64> {
        Poly::new(self.coeffs.iter().map(QuadExt::to_f64).collect())
    }
}

impl<'a, S: Scalar> Add<&'a Poly<S>> for &'a Poly<S> {
    type Output = Poly<S>;
    fn add(self, rhs: &Poly<S>) -> Poly<S> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a, S: Scalar> Sub<&'a Poly<S>> for &'a Poly<S> {
    type Output = Poly<S>;
    fn sub(self, rhs: &Poly<S>) -> Poly<S> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a, S: Scalar> Mul<&'a Poly<S>> for &'a Poly<S> {
    type Output = Poly<S>;
    fn mul(self, rhs: &Poly<S>) -> Poly<S> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![S::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<S: Scalar> Add for Poly<S> {
    type Output = Poly<S>;
    fn add(self, rhs: Poly<S>) -> Poly<S> {
        &self + &rhs
    }
}

impl<S: Scalar> Sub for Poly<S> {
    type Output = Poly<S>;
    fn sub(self, rhs: Poly<S>) -> Poly<S> {
        &self - &rhs
    }
}

impl<S: Scalar> Mul for Poly<S> {
    type Output = Poly<S>;
    fn mul(self, rhs: Poly<S>) -> Poly<S> {
        &self * &rhs
    }
}

impl<S: Scalar> Neg for Poly<S> {
    type Output = Poly<S>;
    fn neg(self) -> Poly<S> {
        Poly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl<S: Scalar> Zero for Poly<S> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<S: Scalar> One for Poly<S> {
    fn one() -> Self {
        Poly::constant(S::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn q(text: &str) -> QuadExt {
        QuadExt::parse(text, None).unwrap()
    }

    fn up(cs: &[&str]) -> Poly<QuadExt> {
        Poly::new(cs.iter().map(|c| q(c)).collect())
    }

    #[test]
    fn product_of_linear_factors() {
        let f = up(&["1", "1"]);
        let g = up(&["1", "-1"]);
        assert_eq!(&f * &g, up(&["1", "0", "-1"]));
    }

    #[test]
    fn compose_with_inverse_root() {
        let f = up(&["1", "0", "0", "0+2*sqrt(2)"]);
        let c = QuadExt::sqrt(2).checked_inv().unwrap();
        assert_eq!(f.compose_linear(&c), up(&["1", "0", "0", "1"]));
    }

    #[test]
    fn scale_by_quadratic_constant() {
        // ((sqrt3 - 1)/14) * (3T^2 + 3T + 1)
        let c = q("-1/14+1/14*sqrt(3)");
        let f = up(&["1", "3", "3"]).scale(&c);
        assert_eq!(f, up(&["-1/14+1/14*sqrt(3)", "-3/14+3/14*sqrt(3)", "-3/14+3/14*sqrt(3)"]));
    }

    #[test]
    fn mismatched_base_in_poly_ops() {
        let f = up(&["sqrt(2)"]);
        let g = up(&["sqrt(3)"]);
        assert_eq!(f.checked_add(&g).unwrap_err(), Error::BaseMismatch(2, 3));
        assert!(f.checked_mul(&up(&["1", "2"])).is_ok());
    }

    #[test]
    fn reciprocal_transform_pads_and_reverses() {
        let f = up(&["1", "2"]);
        assert_eq!(f.reciprocal_transform(1).unwrap(), up(&["2", "1"]));
        assert_eq!(f.reciprocal_transform(3).unwrap(), up(&["0", "0", "2", "1"]));
        assert!(matches!(
            up(&["1", "2", "3"]).reciprocal_transform(1),
            Err(Error::ReciprocalLength { .. })
        ));
    }

    #[test]
    fn palindromes() {
        assert!(up(&["1", "3", "1"]).is_self_reciprocal().unwrap());
        assert!(!up(&["1", "2"]).is_self_reciprocal().unwrap());
        assert_eq!(Poly::<QuadExt>::zero().is_self_reciprocal(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn generic_over_rationals_and_floats() {
        let f: Poly<BigRational> = Poly::new(vec![
            BigRational::from_integer((-1).into()),
            BigRational::from_integer(0.into()),
            BigRational::from_integer(1.into()),
        ]);
        assert_eq!(f.eval(&BigRational::from_integer(3.into())), BigRational::from_integer(8.into()));
        let g: Poly<f64> = Poly::new(vec![1.0, 2.0, 0.0]);
        assert_eq!(g.degree(), Some(1));
        assert_eq!(g.derivative(), Poly::constant(2.0));
        assert_eq!(g.substitute_power(2), Poly::new(vec![1.0, 0.0, 2.0]));
    }
}
