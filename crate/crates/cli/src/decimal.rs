//! Exact decimal rendering of `Q(sqrt q)` values, truncated toward zero.

use codezeta::{ExactSign, QuadExt, Sign};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Pow, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decimal {
    pub text: String,
    /// The text is the exact value, not a truncation.
    pub exact: bool,
}

fn ten_power(e: i64) -> BigRational {
    let p = Pow::pow(&BigInt::from(10), e.unsigned_abs());
    if e >= 0 {
        BigRational::from_integer(p)
    } else {
        BigRational::new(BigInt::from(1), p)
    }
}

fn estimate_log10(x: &QuadExt) -> i64 {
    let v = x.to_f64();
    if v != 0.0 && v.is_finite() {
        return v.abs().log10().floor() as i64;
    }
    let part = if x.radical_part().is_zero() {
        x.rational_part()
    } else {
        x.radical_part()
    };
    ((part.numer().bits() as f64 - part.denom().bits() as f64) * std::f64::consts::LOG10_2).floor() as i64
}

/// First `sig` significant digits of `x`, without rounding up.
pub fn truncated(x: &QuadExt, sig: usize) -> Decimal {
    assert!(sig >= 1);
    let negative = match x.sign_exact() {
        Sign::Zero => {
            return Decimal {
                text: "0".into(),
                exact: true,
            }
        }
        Sign::Negative => true,
        Sign::Positive => false,
    };
    let magnitude = if negative { -x } else { x.clone() };
    let low = Pow::pow(&BigInt::from(10), sig as u32 - 1);
    let high = &low * 10;
    let mut e = estimate_log10(&magnitude);
    let (digits, scaled, shift) = loop {
        let shift = sig as i64 - 1 - e;
        let scaled = &magnitude * &QuadExt::rational(ten_power(shift));
        let n = scaled.floor();
        if n >= high {
            e += 1;
        } else if n < low {
            e -= 1;
        } else {
            break (n, scaled, shift);
        }
    };
    let exact = (&scaled - &QuadExt::from(digits.clone())).is_zero();
    let body = place_point(&digits.to_string(), e, shift, sig);
    Decimal {
        text: if negative { format!("-{body}") } else { body },
        exact,
    }
}

/// Positions the decimal point in `digits * 10^(-shift)`, whose leading digit has
/// exponent `e`.
fn place_point(digits: &str, e: i64, shift: i64, sig: usize) -> String {
    if e < -6 || e >= sig as i64 + 6 {
        let (head, tail) = digits.split_at(1);
        let tail = tail.trim_end_matches('0');
        return if tail.is_empty() {
            format!("{head}e{e}")
        } else {
            format!("{head}.{tail}e{e}")
        };
    }
    let text = if shift <= 0 {
        format!("{digits}{}", "0".repeat((-shift) as usize))
    } else {
        let shift = shift as usize;
        if digits.len() > shift {
            let (int, frac) = digits.split_at(digits.len() - shift);
            format!("{int}.{frac}")
        } else {
            format!("0.{}{digits}", "0".repeat(shift - digits.len()))
        }
    };
    if text.contains('.') {
        text.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        text
    }
}
