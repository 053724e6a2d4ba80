//! Exact sign evaluation of a real polynomial over `Q(sqrt q)` on a rational grid.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::quad::QuadExt;
use crate::scalar::{ExactSign, Sign};
use crate::UniPoly;

/// Integer images of the two parts of a polynomial, sharing one denominator.
struct IntegerImage {
    q: u64,
    rational: Vec<BigInt>,
    radical: Vec<BigInt>,
}

impl IntegerImage {
    fn new(f: &UniPoly) -> Self {
        let lcm = f
            .coeffs()
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(&c.denominator_lcm()));
        let scale = BigRational::from_integer(lcm);
        let part = |pick: fn(&QuadExt) -> &BigRational| {
            f.coeffs()
                .iter()
                .map(|c| (pick(c) * &scale).to_integer())
                .collect()
        };
        IntegerImage {
            q: f.base().unwrap_or(0),
            rational: part(QuadExt::rational_part),
            radical: part(QuadExt::radical_part),
        }
    }

    /// Sign of `f(num/den)` from `sum c_j num^j den^(deg-j)`, `den > 0`.
    fn sign_at(&self, x: &BigRational) -> Sign {
        let num = x.numer();
        let den = x.denom();
        let horner = |c: &[BigInt]| {
            let mut acc = BigInt::zero();
            let mut den_power = BigInt::one();
            for coeff in c.iter().rev() {
                acc = acc * num + coeff * &den_power;
                den_power *= den;
            }
            acc
        };
        let a = horner(&self.rational);
        let b = horner(&self.radical);
        if b.is_zero() {
            return Sign::of_bigint(&a);
        }
        QuadExt::new(self.q, BigRational::from_integer(a), BigRational::from_integer(b)).sign_exact()
    }
}

/// Exact signs of `f` at the given points.
pub fn signs_at(f: &UniPoly, points: &[BigRational]) -> Vec<Sign> {
    let image = IntegerImage::new(f);
    points.iter().map(|x| image.sign_at(x)).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SignScanResult {
    #[serde(serialize_with = "serialize_points")]
    pub sample_points: Vec<BigRational>,
    #[serde(serialize_with = "serialize_signs")]
    pub signs: Vec<Sign>,
    /// Alternations in the subsequence of nonzero signs.
    pub sign_changes: usize,
    /// Sample points where the value is exactly zero.
    pub exact_zeros: usize,
    /// Distinct roots proved to exist in `[lo, hi]`: exact zeros plus alternations
    /// between directly adjacent nonzero samples.
    pub certified_roots: usize,
    /// Degree of the scanned polynomial.
    pub required: usize,
    /// Parity used to halve the evaluations, if any.
    pub mirrored: bool,
}

impl SignScanResult {
    /// All roots are real, simple and inside the scanned interval.
    pub fn conclusive(&self) -> bool {
        self.certified_roots >= self.required
    }
}

fn serialize_points<S: serde::Serializer>(v: &[BigRational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

fn serialize_signs<S: serde::Serializer>(v: &[Sign], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.as_i8()))
}

/// Signs of `f` at `lo + (hi - lo) i / grid`, `i = 0..=grid`.
///
/// An odd or even `f` on a symmetric interval with even `grid` is evaluated on
/// the right half only.
pub fn sign_scan(f: &UniPoly, lo: &BigRational, hi: &BigRational, grid: usize) -> Result<SignScanResult> {
    if lo >= hi {
        return Err(Error::OutOfRange(format!("empty interval [{lo}, {hi}]")));
    }
    if grid < 2 {
        return Err(Error::OutOfRange(format!("grid must be at least 2, got {grid}")));
    }
    let width = hi - lo;
    let points: Vec<BigRational> = (0..=grid)
        .map(|i| lo + &width * BigRational::new(BigInt::from(i), BigInt::from(grid)))
        .collect();
    let image = IntegerImage::new(f);
    let symmetric = *lo == -hi && grid.is_multiple_of(2);
    let parity = if !symmetric || f.is_zero() {
        None
    } else if f.is_odd() {
        Some(true)
    } else if f.is_even() {
        Some(false)
    } else {
        None
    };
    let signs: Vec<Sign> = match parity {
        Some(odd) => {
            let half = grid / 2;
            let right: Vec<Sign> = points[half..].iter().map(|x| image.sign_at(x)).collect();
            let mut all: Vec<Sign> = right[1..]
                .iter()
                .rev()
                .map(|s| if odd { s.flip() } else { *s })
                .collect();
            all.extend(right);
            all
        }
        None => points.iter().map(|x| image.sign_at(x)).collect(),
    };

    let nonzero: Vec<Sign> = signs.iter().copied().filter(|s| *s != Sign::Zero).collect();
    let sign_changes = nonzero.windows(2).filter(|w| w[0] != w[1]).count();
    let exact_zeros = signs.iter().filter(|s| **s == Sign::Zero).count();
    let adjacent = signs
        .windows(2)
        .filter(|w| w[0] != Sign::Zero && w[1] != Sign::Zero && w[0] != w[1])
        .count();
    Ok(SignScanResult {
        sample_points: points,
        signs,
        sign_changes,
        exact_zeros,
        certified_roots: exact_zeros + adjacent,
        required: f.degree().unwrap_or(0),
        mirrored: parity.is_some(),
    })
}
