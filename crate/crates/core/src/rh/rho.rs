//! The pullback `f(x) -> T^n f((T + 1/T)/2)` between degree-`n` polynomials and
//! degree-`2n` palindromes, and its inverse.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::binom::binomial;
use crate::error::{Error, Result};
use crate::quad::QuadExt;
use crate::UniPoly;

fn two_power(j: usize) -> BigInt {
    BigInt::one() << j
}

/// `T^n f((T + 1/T)/2)` with `n = deg f`.
pub fn rho_forward(f: &UniPoly) -> UniPoly {
    let Some(n) = f.degree() else {
        return UniPoly::zero();
    };
    let mut out = vec![QuadExt::zero(); 2 * n + 1];
    for (j, a) in f.coeffs().iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let denom = two_power(j);
        for l in 0..=j {
            let c = BigRational::new(binomial(j as i64, l as i64), denom.clone());
            let slot = &mut out[n - j + 2 * l];
            *slot = &*slot + &(a * &QuadExt::rational(c));
        }
    }
    UniPoly::new(out)
}

/// Upper-triangular matrix of the pullback on the bases `1, x, .., x^n` and
/// `T^n, T^(n-1) + T^(n+1), .., 1 + T^(2n)`.
#[derive(Clone, Debug, PartialEq)]
pub struct RhoMatrix {
    n: usize,
    entries: Vec<Vec<BigRational>>,
}

impl RhoMatrix {
    pub fn new(n: usize) -> Self {
        let entries = (0..=n)
            .map(|row| {
                (0..=n)
                    .map(|col| {
                        if row > col || (col - row) % 2 == 1 {
                            BigRational::zero()
                        } else {
                            BigRational::new(
                                binomial(col as i64, ((col - row) / 2) as i64),
                                two_power(col),
                            )
                        }
                    })
                    .collect()
            })
            .collect();
        RhoMatrix { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, row: usize, col: usize) -> &BigRational {
        &self.entries[row][col]
    }

    pub fn rows(&self) -> &[Vec<BigRational>] {
        &self.entries
    }

    /// Product of the diagonal; the matrix is upper triangular.
    pub fn determinant(&self) -> BigRational {
        (0..=self.n).fold(BigRational::one(), |acc, i| acc * &self.entries[i][i])
    }

    /// Back substitution for `A x = b`.
    pub fn solve(&self, rhs: &[QuadExt]) -> Vec<QuadExt> {
        let mut x = vec![QuadExt::zero(); self.n + 1];
        for row in (0..=self.n).rev() {
            let mut acc = rhs[row].clone();
            for (e, xc) in self.entries[row].iter().zip(&x).skip(row + 1) {
                if !e.is_zero() {
                    acc = acc - xc * &QuadExt::rational(e.clone());
                }
            }
            x[row] = acc / QuadExt::rational(self.entries[row][row].clone());
        }
        x
    }
}

/// Recovers `f` of degree at most `n` from the palindrome `F = T^n f((T + 1/T)/2)`.
pub fn rho_inverse(big_f: &UniPoly, n: usize) -> Result<UniPoly> {
    if let Some(deg) = big_f.degree() {
        if deg > 2 * n {
            return Err(Error::ReciprocalLength { m: 2 * n, degree: deg });
        }
    }
    let mut rhs = Vec::with_capacity(n + 1);
    for l in 0..=n {
        let low = big_f.coeff(n - l);
        if low != big_f.coeff(n + l) {
            return Err(Error::NotPalindromic(l));
        }
        rhs.push(low);
    }
    Ok(UniPoly::new(RhoMatrix::new(n).solve(&rhs)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn up(cs: &[&str]) -> UniPoly {
        UniPoly::new(cs.iter().map(|c| QuadExt::parse(c, None).unwrap()).collect())
    }

    #[test]
    fn forward_small_cases() {
        assert_eq!(rho_forward(&up(&["0", "1"])), up(&["1/2", "0", "1/2"]));
        assert_eq!(rho_forward(&up(&["0", "0", "1"])), up(&["1/4", "0", "1/2", "0", "1/4"]));
        assert_eq!(rho_forward(&up(&["1"])), up(&["1"]));
    }

    #[test]
    fn inverse_small_cases() {
        assert_eq!(rho_inverse(&up(&["1", "0", "1"]), 1).unwrap(), up(&["0", "2"]));
        assert_eq!(rho_inverse(&up(&["1", "0", "2"]), 1), Err(Error::NotPalindromic(1)));
        let f = up(&["3", "-1", "0+1*sqrt(2)", "5/7"]);
        assert_eq!(rho_inverse(&rho_forward(&f), 3).unwrap(), f);
    }

    #[test]
    fn lower_degree_palindrome_in_larger_space() {
        // T^2 sits in W_2 as the middle basis vector: x -> ... with f = 1
        assert_eq!(rho_inverse(&up(&["0", "0", "1"]), 2).unwrap(), up(&["1"]));
    }

    #[test]
    fn matrix_shape_and_determinant() {
        let a = RhoMatrix::new(4);
        assert_eq!(*a.entry(0, 2), BigRational::new(1.into(), 2.into()));
        assert_eq!(*a.entry(0, 4), BigRational::new(3.into(), 8.into()));
        assert!(a.entry(1, 2).is_zero());
        assert!(a.entry(3, 1).is_zero());
        assert_eq!(a.determinant(), BigRational::new(1.into(), BigInt::from(1 << 10)));
    }
}
