//! Exact arithmetic in the real quadratic field `Q(sqrt q)`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{ExactSign, Scalar, Sign, ToComplex};

/// A half-integer, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfInt(i64);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);

    pub fn from_int(v: i64) -> Self {
        HalfInt(2 * v)
    }

    /// The half-integer `twice / 2`.
    pub fn from_twice(twice: i64) -> Self {
        HalfInt(twice)
    }

    pub fn twice(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    /// Value as an integer when it is one.
    pub fn to_int(self) -> Option<i64> {
        self.is_integer().then_some(self.0 / 2)
    }

    pub fn to_rational(self) -> BigRational {
        BigRational::new(BigInt::from(self.0), BigInt::from(2))
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 - rhs.0)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl std::str::FromStr for HalfInt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let r: BigRational = s.trim().parse().map_err(|_| Error::Parse {
            input: s.to_string(),
            reason: "expected an integer or p/2".into(),
        })?;
        let twice = r * BigInt::from(2);
        if !twice.is_integer() {
            return Err(Error::Parse {
                input: s.to_string(),
                reason: "not a half-integer".into(),
            });
        }
        twice
            .to_integer()
            .to_i64()
            .map(HalfInt)
            .ok_or_else(|| Error::Parse {
                input: s.to_string(),
                reason: "out of range".into(),
            })
    }
}

/// Exact element `a + b*sqrt(q)` of `Q(sqrt q)`.
///
/// A value built from a plain rational carries no base (`q` unset) and mixes
/// freely with any field. Values with a radical part must agree on `q`; the
/// operator impls panic on a mismatch, the `checked_*` methods report it.
/// When `q` is a perfect square the radical is folded into `a`, so `b = 0`.
#[derive(Clone, Debug)]
pub struct QuadExt {
    q: u64,
    a: BigRational,
    b: BigRational,
}

fn perfect_square_root(q: u64) -> Option<u64> {
    let r = q.sqrt();
    (r * r == q).then_some(r)
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl QuadExt {
    /// `a + b*sqrt(q)` in canonical form. Panics if `q < 2`.
    pub fn new(q: u64, a: BigRational, b: BigRational) -> Self {
        Self::try_new(q, a, b).expect("QuadExt base must be >= 2")
    }

    pub fn try_new(q: u64, a: BigRational, b: BigRational) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidBase(q));
        }
        Ok(match perfect_square_root(q) {
            Some(root) => QuadExt {
                q,
                a: a + b * BigInt::from(root),
                b: BigRational::zero(),
            },
            None => QuadExt { q, a, b },
        })
    }

    /// A rational constant with no base attached.
    pub fn rational(a: BigRational) -> Self {
        QuadExt {
            q: 0,
            a,
            b: BigRational::zero(),
        }
    }

    pub fn int(v: i64) -> Self {
        Self::rational(rat(v))
    }

    /// `sqrt(q)` itself.
    pub fn sqrt(q: u64) -> Self {
        Self::new(q, BigRational::zero(), BigRational::one())
    }

    /// A rational constant tagged with base `q`.
    pub fn from_rational_in(q: u64, a: BigRational) -> Self {
        Self::new(q, a, BigRational::zero())
    }

    /// `q^e` for a half-integer exponent `e`: `q^m` or `q^m * sqrt(q)`.
    pub fn half_power(q: u64, e: HalfInt) -> Self {
        let twice = e.twice();
        let m = twice.div_euclid(2);
        let qb = BigInt::from(q);
        let mag = qb.pow(m.unsigned_abs());
        let int_part = if m >= 0 {
            BigRational::from_integer(mag)
        } else {
            BigRational::new(BigInt::one(), mag)
        };
        if twice.rem_euclid(2) == 0 {
            Self::new(q, int_part, BigRational::zero())
        } else {
            Self::new(q, BigRational::zero(), int_part)
        }
    }

    /// The base, or `None` for an untagged rational.
    pub fn base(&self) -> Option<u64> {
        (self.q != 0).then_some(self.q)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn radical_part(&self) -> &BigRational {
        &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Attaches base `q` to an untagged value; fails if a different base is present.
    pub fn with_base(self, q: u64) -> Result<Self> {
        match self.q {
            0 => QuadExt::try_new(q, self.a, self.b),
            p if p == q => Ok(self),
            p => Err(Error::BaseMismatch(p, q)),
        }
    }

    fn merge_base(&self, other: &QuadExt) -> Result<u64> {
        match (self.q, other.q) {
            (p, r) if p == r => Ok(p),
            (0, r) => Ok(r),
            (p, 0) => Ok(p),
            (p, r) => Err(Error::BaseMismatch(p, r)),
        }
    }

    fn build(q: u64, a: BigRational, b: BigRational) -> Self {
        // q = 0 only when both operands were untagged, in which case b is zero.
        QuadExt { q, a, b }
    }

    pub fn checked_add(&self, rhs: &QuadExt) -> Result<QuadExt> {
        let q = self.merge_base(rhs)?;
        Ok(Self::build(q, &self.a + &rhs.a, &self.b + &rhs.b))
    }

    pub fn checked_sub(&self, rhs: &QuadExt) -> Result<QuadExt> {
        let q = self.merge_base(rhs)?;
        Ok(Self::build(q, &self.a - &rhs.a, &self.b - &rhs.b))
    }

    pub fn checked_mul(&self, rhs: &QuadExt) -> Result<QuadExt> {
        let q = self.merge_base(rhs)?;
        let qr = rat(q as i64);
        let a = &self.a * &rhs.a + &self.b * &rhs.b * qr;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        Ok(Self::build(q, a, b))
    }

    pub fn checked_inv(&self) -> Result<QuadExt> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.b.is_zero() {
            return Ok(Self::build(self.q, self.a.recip(), BigRational::zero()));
        }
        // (a - b s) / (a^2 - q b^2); the norm is nonzero since q is not a square.
        let norm = &self.a * &self.a - &self.b * &self.b * rat(self.q as i64);
        Ok(Self::build(self.q, &self.a / &norm, -&self.b / &norm))
    }

    pub fn checked_div(&self, rhs: &QuadExt) -> Result<QuadExt> {
        self.merge_base(rhs)?;
        self.checked_mul(&rhs.checked_inv()?)
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<QuadExt> {
        let mut base = if e < 0 { self.checked_inv()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = QuadExt::build(self.q, BigRational::one(), BigRational::zero());
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    pub fn conjugate(&self) -> QuadExt {
        Self::build(self.q, self.a.clone(), -&self.b)
    }

    /// `true` if both parts are integers.
    pub fn is_integral(&self) -> bool {
        self.a.is_integer() && self.b.is_integer()
    }

    /// Least common multiple of the denominators of both parts.
    pub fn denominator_lcm(&self) -> BigInt {
        num_integer::Integer::lcm(self.a.denom(), self.b.denom())
    }

    /// Parses the canonical text form `a`, `a+b*sqrt(q)`, `a-b*sqrt(q)`, `b*sqrt(q)`.
    ///
    /// `base` tags a plain rational with a field; a radical in the text must agree with it.
    pub fn parse(s: &str, base: Option<u64>) -> Result<QuadExt> {
        let err = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(err("empty"));
        }
        let parse_rat = |t: &str| -> Result<BigRational> {
            t.parse::<BigRational>()
                .map_err(|_| err(&format!("bad rational {t:?}")))
        };
        let value = match text.find("sqrt(") {
            None => QuadExt::rational(parse_rat(&text)?),
            Some(idx) => {
                let tail = &text[idx + 5..];
                let close = tail.find(')').ok_or_else(|| err("unclosed sqrt("))?;
                if close + 1 != tail.len() {
                    return Err(err("trailing characters after sqrt(q)"));
                }
                let q: u64 = tail[..close].parse().map_err(|_| err("bad base"))?;
                let mut head = &text[..idx];
                if let Some(stripped) = head.strip_suffix('*') {
                    head = stripped;
                }
                let split = head
                    .char_indices()
                    .filter(|&(i, c)| i > 0 && (c == '+' || c == '-'))
                    .map(|(i, _)| i)
                    .next_back();
                let (a_str, b_str) = match split {
                    Some(i) => (&head[..i], &head[i..]),
                    None => ("", head),
                };
                let a = if a_str.is_empty() {
                    BigRational::zero()
                } else {
                    parse_rat(a_str)?
                };
                let b = match b_str {
                    "" | "+" => BigRational::one(),
                    "-" => -BigRational::one(),
                    t => parse_rat(t.strip_prefix('+').unwrap_or(t))?,
                };
                QuadExt::try_new(q, a, b)?
            }
        };
        match base {
            Some(q) => value.with_base(q),
            None => Ok(value),
        }
    }

    /// Greatest integer not above the value, decided exactly.
    pub fn floor(&self) -> BigInt {
        if self.b.is_zero() {
            return self.a.floor().to_integer();
        }
        // sqrt(q) to enough bits that the estimate is off by at most one
        let bits = (self.b.numer().bits() as i64 - self.b.denom().bits() as i64).max(0) as usize + 64;
        let scale = BigInt::one() << bits;
        let root = (BigInt::from(self.q) * &scale * &scale).sqrt();
        let estimate = &self.a + &self.b * BigRational::new(root, scale);
        let mut n = estimate.floor().to_integer();
        while (self - &QuadExt::from(n.clone())).sign_exact() == Sign::Negative {
            n -= 1;
        }
        while (self - &QuadExt::from(&n + 1)).sign_exact() != Sign::Negative {
            n += 1;
        }
        n
    }

    /// High-accuracy double image: `sqrt q` is replaced by a rational within `1e-60`
    /// before a single rounding, so cancellation between the parts is harmless.
    pub fn to_f64(&self) -> f64 {
        if self.b.is_zero() {
            return self.a.to_f64().unwrap_or(f64::NAN);
        }
        let scale = BigInt::from(10).pow(60u32);
        let root = (BigInt::from(self.q) * &scale * &scale).sqrt();
        let approx = BigRational::new(root, scale);
        (&self.a + &self.b * approx).to_f64().unwrap_or(f64::NAN)
    }
}

impl ExactSign for QuadExt {
    /// Sign of `a + b*sqrt(q)` by comparing `a^2` with `q*b^2`.
    fn sign_exact(&self) -> Sign {
        let sa = self.a.sign_exact();
        let sb = self.b.sign_exact();
        if sb == Sign::Zero {
            return sa;
        }
        if sa == Sign::Zero || sa == sb {
            return sb;
        }
        let a2 = &self.a * &self.a;
        let qb2 = &self.b * &self.b * rat(self.q as i64);
        match a2.cmp(&qb2) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Sign::Zero,
        }
    }
}

impl PartialEq for QuadExt {
    fn eq(&self, other: &QuadExt) -> bool {
        self.a == other.a && self.b == other.b && (self.b.is_zero() || self.q == other.q)
    }
}

impl Eq for QuadExt {}

impl PartialOrd for QuadExt {
    fn partial_cmp(&self, other: &QuadExt) -> Option<Ordering> {
        let diff = self.checked_sub(other).ok()?;
        Some(match diff.sign_exact() {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        })
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", fmt_rational(&self.a));
        }
        let sign = if self.b.is_negative() { '-' } else { '+' };
        write!(
            f,
            "{}{}{}*sqrt({})",
            fmt_rational(&self.a),
            sign,
            fmt_rational(&self.b.abs()),
            self.q
        )
    }
}

impl Serialize for QuadExt {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for QuadExt {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        QuadExt::parse(&s, None).map_err(serde::de::Error::custom)
    }
}

impl<'a> Add<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: &QuadExt) -> QuadExt {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<'a> Sub<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: &QuadExt) -> QuadExt {
        self.checked_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<'a> Mul<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: &QuadExt) -> QuadExt {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<'a> Div<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn div(self, rhs: &QuadExt) -> QuadExt {
        self.checked_div(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for QuadExt {
            type Output = QuadExt;
            fn $m(self, rhs: QuadExt) -> QuadExt {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a QuadExt> for QuadExt {
            type Output = QuadExt;
            fn $m(self, rhs: &QuadExt) -> QuadExt {
                (&self).$m(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt::build(self.q, -self.a, -self.b)
    }
}

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt::build(self.q, -&self.a, -&self.b)
    }
}

impl Zero for QuadExt {
    fn zero() -> Self {
        QuadExt::rational(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QuadExt {
    fn one() -> Self {
        QuadExt::rational(BigRational::one())
    }
}

impl Scalar for QuadExt {
    fn from_rational(r: &BigRational) -> Self {
        QuadExt::rational(r.clone())
    }
}

impl ToComplex for QuadExt {
    fn to_c64(&self) -> Complex64 {
        Complex64::new(self.to_f64(), 0.0)
    }
}

impl From<i64> for QuadExt {
    fn from(v: i64) -> Self {
        QuadExt::int(v)
    }
}

impl From<BigInt> for QuadExt {
    fn from(v: BigInt) -> Self {
        QuadExt::rational(BigRational::from_integer(v))
    }
}

impl From<BigRational> for QuadExt {
    fn from(v: BigRational) -> Self {
        QuadExt::rational(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_floor() {
        let f = |s: &str| QuadExt::parse(s, None).unwrap().floor();
        assert_eq!(f("0+1*sqrt(2)"), BigInt::from(1));
        assert_eq!(f("0-1*sqrt(2)"), BigInt::from(-2));
        assert_eq!(f("-7/2"), BigInt::from(-4));
        assert_eq!(f("3"), BigInt::from(3));
        // 10^11 sqrt(2) = 141421356237.31..
        assert_eq!(f("-141421356237+100000000000*sqrt(2)"), BigInt::from(0));
        assert_eq!(f("-141421356238+100000000000*sqrt(2)"), BigInt::from(-1));
        assert_eq!(f("-141421356236+100000000000*sqrt(2)"), BigInt::from(1));
    }

    fn r(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    fn qe(q: u64, a: BigRational, b: BigRational) -> QuadExt {
        QuadExt::new(q, a, b)
    }

    #[test]
    fn conjugate_product_is_rational() {
        let x = qe(2, r(1, 1), r(1, 1));
        let y = qe(2, r(1, 1), r(-1, 1));
        assert_eq!(&x * &y, QuadExt::int(-1));
    }

    #[test]
    fn division_rationalizes() {
        let d = qe(2, r(1, 1), r(2, 1));
        let got = &QuadExt::int(1) / &d;
        assert_eq!(got, qe(2, r(-1, 7), r(2, 7)));
        assert_eq!(&got * &d, QuadExt::one());
    }

    #[test]
    fn cube_of_root() {
        let s = QuadExt::sqrt(2);
        assert_eq!(s.pow(3).unwrap(), qe(2, r(0, 1), r(2, 1)));
        assert_eq!(s.pow(-2).unwrap(), QuadExt::rational(r(1, 2)));
    }

    #[test]
    fn half_powers() {
        assert_eq!(QuadExt::half_power(2, HalfInt::from_twice(3)), qe(2, r(0, 1), r(2, 1)));
        assert_eq!(QuadExt::half_power(3, HalfInt::from_twice(-1)), qe(3, r(0, 1), r(1, 3)));
        let sq = QuadExt::half_power(4, HalfInt::from_twice(5));
        assert_eq!(sq, QuadExt::int(32));
        assert!(sq.is_rational());
        assert_eq!(sq.base(), Some(4));
    }

    #[test]
    fn exact_signs() {
        assert_eq!(qe(2, r(1, 1), r(-1, 1)).sign_exact(), Sign::Negative);
        assert_eq!(qe(2, r(3, 1), r(-2, 1)).sign_exact(), Sign::Positive);
        assert_eq!(qe(5, r(0, 1), r(0, 1)).sign_exact(), Sign::Zero);
        assert_eq!(qe(2, r(-3, 1), r(2, 1)).sign_exact(), Sign::Negative);
    }

    #[test]
    fn mismatched_bases_are_rejected() {
        let e = QuadExt::sqrt(2).checked_add(&QuadExt::sqrt(3)).unwrap_err();
        assert_eq!(e, Error::BaseMismatch(2, 3));
        assert!(QuadExt::int(1).checked_div(&QuadExt::zero()).is_err());
    }

    #[test]
    fn canonical_text_round_trip() {
        let cases = [
            ("130+156*sqrt(2)", qe(2, r(130, 1), r(156, 1))),
            ("-1/7+2/7*sqrt(2)", qe(2, r(-1, 7), r(2, 7))),
            ("1-2*sqrt(3)", qe(3, r(1, 1), r(-2, 1))),
            ("5/3", QuadExt::rational(r(5, 3))),
        ];
        for (text, value) in cases {
            assert_eq!(value.to_string(), text);
            assert_eq!(QuadExt::parse(text, None).unwrap(), value);
        }
        assert_eq!(QuadExt::parse("sqrt(2)", None).unwrap(), QuadExt::sqrt(2));
        assert_eq!(QuadExt::parse("-3*sqrt(5)", None).unwrap(), qe(5, r(0, 1), r(-3, 1)));
        assert_eq!(QuadExt::parse("2*sqrt(4)", None).unwrap(), QuadExt::int(4));
        assert!(QuadExt::parse("1+sqrt(2)", Some(3)).is_err());
        assert!(QuadExt::parse("1+x", None).is_err());
    }

    #[test]
    fn accurate_double_image_under_cancellation() {
        // 1393 - 985*sqrt(2) is about -3.6e-4 and cancels 7 digits.
        let x = qe(2, r(1393, 1), r(-985, 1));
        let exact = 1393.0 - 985.0 * std::f64::consts::SQRT_2;
        assert!((x.to_f64() - exact).abs() < 1e-12);
        assert!((x.to_f64() - (-3.5897e-4)).abs() < 1e-7);
    }

    #[test]
    fn half_int_text() {
        assert_eq!(HalfInt::from_twice(3).to_string(), "3/2");
        assert_eq!(HalfInt::from_int(-2).to_string(), "-2");
        assert_eq!("3/2".parse::<HalfInt>().unwrap(), HalfInt::from_twice(3));
        assert!("1/3".parse::<HalfInt>().is_err());
    }
}
