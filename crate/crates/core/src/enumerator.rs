//! Homogeneous weight enumerators, the MacWilliams transform and invariantization.
//!
//! A degree-`n` form `sum A_i x^(n-i) y^i` is stored as the vector `A_0..A_n`.

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};
use serde::{Deserialize, Serialize};

use crate::binom::{binomial, binomial_row};
use crate::error::{Error, Result};
use crate::quad::{HalfInt, QuadExt};

/// Largest code length the constructors will build.
pub const MAX_LENGTH: u64 = 100_000;

/// Raw homogeneous form; unlike [`WeightEnumerator`] its leading coefficient is arbitrary.
#[derive(Clone, Debug, PartialEq)]
pub struct HomogeneousForm {
    q: u64,
    coeffs: Vec<QuadExt>,
}

impl HomogeneousForm {
    pub fn new(q: u64, coeffs: Vec<QuadExt>) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidBase(q));
        }
        if coeffs.is_empty() {
            return Err(Error::InvalidEnumerator("empty coefficient vector".into()));
        }
        let coeffs = coeffs
            .into_iter()
            .map(|c| c.with_base(q))
            .collect::<Result<Vec<_>>>()?;
        Ok(HomogeneousForm { q, coeffs })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn n(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[QuadExt] {
        &self.coeffs
    }

    pub fn scale(&self, c: &QuadExt) -> HomogeneousForm {
        HomogeneousForm {
            q: self.q,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    fn nonzero_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}

/// A form `x^n + sum_{i >= d} A_i x^(n-i) y^i` with `A_d != 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightEnumerator {
    form: HomogeneousForm,
    d: usize,
}

impl WeightEnumerator {
    pub fn new(q: u64, coeffs: Vec<QuadExt>) -> Result<Self> {
        Self::from_form(HomogeneousForm::new(q, coeffs)?)
    }

    pub fn from_form(form: HomogeneousForm) -> Result<Self> {
        if !form.coeffs[0].is_one() {
            return Err(Error::InvalidEnumerator(format!(
                "A_0 must be 1, found {}",
                form.coeffs[0]
            )));
        }
        let d = min_distance(&form)?;
        Ok(WeightEnumerator { form, d })
    }

    pub fn q(&self) -> u64 {
        self.form.q
    }

    pub fn n(&self) -> usize {
        self.form.n()
    }

    /// `A_0..A_n`.
    pub fn coeffs(&self) -> &[QuadExt] {
        &self.form.coeffs
    }

    pub fn coeff(&self, i: usize) -> &QuadExt {
        &self.form.coeffs[i]
    }

    pub fn min_distance(&self) -> usize {
        self.d
    }

    pub fn as_form(&self) -> &HomogeneousForm {
        &self.form
    }

    /// `W(1, 1)`: the number of codewords for a genuine code.
    pub fn total(&self) -> QuadExt {
        self.coeffs().iter().fold(QuadExt::zero(), |acc, c| acc + c)
    }

    pub fn to_json(&self, k: Option<usize>) -> EnumeratorJson {
        EnumeratorJson {
            q: self.q(),
            n: self.n(),
            coefficients: self.coeffs().iter().map(ToString::to_string).collect(),
            k,
        }
    }

    pub fn from_json(json: &EnumeratorJson) -> Result<Self> {
        if json.coefficients.len() != json.n + 1 {
            return Err(Error::InvalidEnumerator(format!(
                "expected {} coefficients for n = {}, found {}",
                json.n + 1,
                json.n,
                json.coefficients.len()
            )));
        }
        if json.q < 2 {
            return Err(Error::InvalidBase(json.q));
        }
        let coeffs = json
            .coefficients
            .iter()
            .map(|s| QuadExt::parse(s, Some(json.q)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(json.q, coeffs)
    }
}

/// File form of an enumerator: `{"q": int, "n": int, "A": [...], "k": int?}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumeratorJson {
    pub q: u64,
    pub n: usize,
    #[serde(rename = "A")]
    pub coefficients: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
}

/// Parameters `[n, k, d]` of a code together with the dual distance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub d_perp: usize,
    pub q: u64,
}

impl CodeParams {
    pub fn new(n: usize, k: usize, d: usize, d_perp: usize, q: u64) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidBase(q));
        }
        let bad = |m: String| Err(Error::InconsistentParams(m));
        if k < 1 || k + 1 > n {
            return bad(format!("need 1 <= k <= n-1, got n = {n}, k = {k}"));
        }
        if d < 2 || d_perp < 2 || d > n || d_perp > n {
            return bad(format!("need 2 <= d, d_perp <= n, got d = {d}, d_perp = {d_perp}"));
        }
        if n + 1 < k + d {
            return bad(format!("genus n+1-k-d is negative for [{n}, {k}, {d}]"));
        }
        if k + 1 < d_perp {
            return bad(format!("dual genus k+1-d_perp is negative for k = {k}, d_perp = {d_perp}"));
        }
        Ok(CodeParams { n, k, d, d_perp, q })
    }

    /// `g = n + 1 - k - d`.
    pub fn genus(&self) -> i64 {
        (self.n + 1) as i64 - (self.k + self.d) as i64
    }

    /// `g_perp = k + 1 - d_perp`.
    pub fn dual_genus(&self) -> i64 {
        (self.k + 1) as i64 - self.d_perp as i64
    }

    /// Parameters of the dual code.
    pub fn dual(&self) -> CodeParams {
        CodeParams {
            n: self.n,
            k: self.n - self.k,
            d: self.d_perp,
            d_perp: self.d,
            q: self.q,
        }
    }

    /// The exponent `k - n/2` of the MacWilliams identity.
    pub fn identity_exponent(&self) -> HalfInt {
        HalfInt::from_twice(2 * self.k as i64 - self.n as i64)
    }
}

/// Smallest `i >= 1` with `A_i != 0`.
pub fn min_distance(form: &HomogeneousForm) -> Result<usize> {
    form.coeffs
        .iter()
        .enumerate()
        .skip(1)
        .find(|(_, c)| !c.is_zero())
        .map(|(i, _)| i)
        .ok_or_else(|| Error::InvalidEnumerator("no nonzero coefficient past x^n".into()))
}

/// `W((x + (q-1)y)/sqrt q, (x - y)/sqrt q)`, expanded exactly.
pub fn macwilliams_transform(form: &HomogeneousForm) -> HomogeneousForm {
    let n = form.n();
    let q = form.q;
    let qm1 = BigInt::from(q - 1);
    let qm1_pows: Vec<BigInt> = (0..=n).map(|j| Pow::pow(&qm1, j as u32)).collect();
    let mut out = vec![QuadExt::from_rational_in(q, Zero::zero()); n + 1];
    for (i, a) in form.coeffs.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        // (1 + (q-1) y)^(n-i) * (1 - y)^i
        let left: Vec<BigInt> = binomial_row(n - i)
            .into_iter()
            .zip(&qm1_pows)
            .map(|(c, p)| c * p)
            .collect();
        let right: Vec<BigInt> = binomial_row(i)
            .into_iter()
            .enumerate()
            .map(|(l, c)| if l % 2 == 0 { c } else { -c })
            .collect();
        let mut kernel = vec![BigInt::zero(); n + 1];
        for (j, u) in left.iter().enumerate() {
            for (l, v) in right.iter().enumerate() {
                kernel[j + l] += u * v;
            }
        }
        for (slot, k) in out.iter_mut().zip(kernel) {
            if !k.is_zero() {
                *slot = &*slot + &(a * &QuadExt::from(k));
            }
        }
    }
    let factor = QuadExt::half_power(q, HalfInt::from_twice(-(n as i64)));
    HomogeneousForm {
        q,
        coeffs: out
            .into_iter()
            .map(|acc| acc * &factor)
            .collect(),
    }
}

/// `true` iff the form is fixed by the MacWilliams transform.
pub fn is_invariant(form: &HomogeneousForm) -> bool {
    macwilliams_transform(form) == *form
}

/// Checks `W^sigma = q^(k - n/2) W_dual`, transforming whichever side is sparser.
pub fn macwilliams_identity_holds(
    w: &WeightEnumerator,
    w_dual: &WeightEnumerator,
    params: &CodeParams,
) -> bool {
    let e = params.identity_exponent();
    if w.as_form().nonzero_terms() <= w_dual.as_form().nonzero_terms() {
        macwilliams_transform(w.as_form()) == w_dual.as_form().scale(&QuadExt::half_power(params.q, e))
    } else {
        macwilliams_transform(w_dual.as_form()) == w.as_form().scale(&QuadExt::half_power(params.q, -e))
    }
}

/// `k` with `W(1, 1) = q^k`, if the total is a power of `q`.
pub fn code_dimension(w: &WeightEnumerator) -> Option<usize> {
    let total = w.total();
    let q = BigInt::from(w.q());
    let mut power = BigInt::one();
    for k in 0..=w.n() {
        if total == QuadExt::from(power.clone()) {
            return Some(k);
        }
        power *= &q;
    }
    None
}

/// Enumerator of the dual of a `k`-dimensional code, by the MacWilliams identity.
pub fn dual_enumerator(w: &WeightEnumerator, k: usize) -> Result<(WeightEnumerator, CodeParams)> {
    let n = w.n();
    let e = HalfInt::from_twice(2 * k as i64 - n as i64);
    let form = macwilliams_transform(w.as_form()).scale(&QuadExt::half_power(w.q(), -e));
    let dual = WeightEnumerator::from_form(form)
        .map_err(|_| Error::NotDualPair(format!("no dual enumerator for dimension k = {k}")))?;
    let params = CodeParams::new(n, k, w.min_distance(), dual.min_distance(), w.q())?;
    Ok((dual, params))
}

fn out_of_range(msg: impl Into<String>) -> Error {
    Error::OutOfRange(msg.into())
}

/// Weight enumerator of an `[n, n+1-d, d]` MDS code (virtual when `q` is not a prime power).
pub fn mds_enumerator(n: usize, d: usize, q: u64) -> Result<(WeightEnumerator, CodeParams)> {
    if q < 2 {
        return Err(Error::InvalidBase(q));
    }
    if d < 2 || d > n || n as u64 > MAX_LENGTH {
        return Err(out_of_range(format!("MDS needs 2 <= d <= n, got n = {n}, d = {d}")));
    }
    let params = CodeParams::new(n, n + 1 - d, d, n + 2 - d, q)?;
    let qb = BigInt::from(q);
    let mut coeffs = vec![QuadExt::zero(); n + 1];
    coeffs[0] = QuadExt::one();
    for (i, slot) in coeffs.iter_mut().enumerate().skip(d) {
        let mut sum = BigInt::zero();
        for j in 0..=(i - d) {
            let term = binomial(i as i64, j as i64) * (Pow::pow(&qb, (i - d + 1 - j) as u32) - 1);
            if j % 2 == 0 {
                sum += term;
            } else {
                sum -= term;
            }
        }
        *slot = QuadExt::from(binomial(n as i64, i as i64) * sum);
    }
    Ok((WeightEnumerator::new(q, coeffs)?, params))
}

fn simplex_shape(r: u32, q: u64) -> Result<(usize, usize)> {
    if q < 2 {
        return Err(Error::InvalidBase(q));
    }
    if r < 2 {
        return Err(out_of_range(format!("need r >= 2, got {r}")));
    }
    let qb = BigInt::from(q);
    let n = (Pow::pow(&qb, r) - 1u32) / (&qb - 1u32);
    let d = Pow::pow(&qb, r - 1);
    if n > BigInt::from(MAX_LENGTH) {
        return Err(out_of_range(format!("code length {n} exceeds {MAX_LENGTH}")));
    }
    let as_usize = |v: BigInt| -> usize { v.try_into().expect("bounded by MAX_LENGTH") };
    Ok((as_usize(n), as_usize(d)))
}

/// The one-weight `[(q^r-1)/(q-1), r, q^(r-1)]` simplex code.
pub fn simplex_enumerator(r: u32, q: u64) -> Result<(WeightEnumerator, CodeParams)> {
    let (n, d) = simplex_shape(r, q)?;
    let params = CodeParams::new(n, r as usize, d, 3, q)?;
    let mut coeffs = vec![QuadExt::zero(); n + 1];
    coeffs[0] = QuadExt::one();
    coeffs[d] = QuadExt::from(Pow::pow(&BigInt::from(q), r) - 1u32);
    Ok((WeightEnumerator::new(q, coeffs)?, params))
}

/// The Hamming `[n, n-r, 3]` code, obtained from its simplex dual by the MacWilliams identity.
pub fn hamming_enumerator(r: u32, q: u64) -> Result<(WeightEnumerator, CodeParams)> {
    let (simplex, sp) = simplex_enumerator(r, q)?;
    let params = sp.dual();
    let factor = QuadExt::half_power(q, -sp.identity_exponent());
    let form = macwilliams_transform(simplex.as_form()).scale(&factor);
    let w = WeightEnumerator::from_form(form)?;
    if w.min_distance() != 3 {
        return Err(Error::InconsistentParams(format!(
            "Hamming transform produced minimum distance {}",
            w.min_distance()
        )));
    }
    Ok((w, params))
}

/// The Golay codes and their duals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Golay {
    G23,
    G11,
    G23Dual,
    G11Dual,
}

impl Golay {
    /// The code whose enumerator pairs with this one.
    pub fn dual(self) -> Golay {
        match self {
            Golay::G23 => Golay::G23Dual,
            Golay::G23Dual => Golay::G23,
            Golay::G11 => Golay::G11Dual,
            Golay::G11Dual => Golay::G11,
        }
    }
}

impl std::str::FromStr for Golay {
    type Err = Error;
    fn from_str(s: &str) -> Result<Golay> {
        match s.to_ascii_lowercase().as_str() {
            "g23" => Ok(Golay::G23),
            "g11" => Ok(Golay::G11),
            "g23_dual" | "g23-dual" | "g23dual" => Ok(Golay::G23Dual),
            "g11_dual" | "g11-dual" | "g11dual" => Ok(Golay::G11Dual),
            _ => Err(Error::Parse {
                input: s.into(),
                reason: "expected g23, g11, g23_dual or g11_dual".into(),
            }),
        }
    }
}

/// Literal weight distributions of the binary `[23,12,7]` and ternary `[11,6,5]` Golay codes.
pub fn golay_enumerator(which: Golay) -> (WeightEnumerator, CodeParams) {
    let (q, n, terms): (u64, usize, &[(usize, i64)]) = match which {
        Golay::G23 => (
            2,
            23,
            &[(7, 253), (8, 506), (11, 1288), (12, 1288), (15, 506), (16, 253), (23, 1)],
        ),
        Golay::G23Dual => (2, 23, &[(8, 506), (12, 1288), (16, 253)]),
        Golay::G11 => (3, 11, &[(5, 132), (6, 132), (8, 330), (9, 110), (11, 24)]),
        Golay::G11Dual => (3, 11, &[(6, 132), (9, 110)]),
    };
    let params = match which {
        Golay::G23 => CodeParams::new(23, 12, 7, 8, 2),
        Golay::G23Dual => CodeParams::new(23, 11, 8, 7, 2),
        Golay::G11 => CodeParams::new(11, 6, 5, 6, 3),
        Golay::G11Dual => CodeParams::new(11, 5, 6, 5, 3),
    }
    .expect("Golay parameters are valid");
    let mut coeffs = vec![QuadExt::zero(); n + 1];
    coeffs[0] = QuadExt::one();
    for &(i, a) in terms {
        coeffs[i] = QuadExt::int(a);
    }
    (
        WeightEnumerator::new(q, coeffs).expect("Golay enumerators are well formed"),
        params,
    )
}

/// `(W + q^(k-n/2) W_dual) / (1 + q^(k-n/2))`, after checking the pair is genuinely dual.
pub fn invariantize(
    w: &WeightEnumerator,
    w_dual: &WeightEnumerator,
    params: &CodeParams,
) -> Result<WeightEnumerator> {
    let q = params.q;
    if w.q() != q || w_dual.q() != q {
        return Err(Error::NotDualPair(format!(
            "bases {} and {} differ from q = {q}",
            w.q(),
            w_dual.q()
        )));
    }
    if w.n() != params.n || w_dual.n() != params.n {
        return Err(Error::NotDualPair(format!(
            "lengths {} and {} differ from n = {}",
            w.n(),
            w_dual.n(),
            params.n
        )));
    }
    if w.min_distance() != params.d || w_dual.min_distance() != params.d_perp {
        return Err(Error::NotDualPair(format!(
            "minimum distances ({}, {}) differ from ({}, {})",
            w.min_distance(),
            w_dual.min_distance(),
            params.d,
            params.d_perp
        )));
    }
    if !macwilliams_identity_holds(w, w_dual, params) {
        return Err(Error::NotDualPair("MacWilliams identity fails".into()));
    }
    let c = QuadExt::half_power(q, params.identity_exponent());
    let denom = QuadExt::one() + &c;
    let coeffs: Vec<QuadExt> = w
        .coeffs()
        .iter()
        .zip(w_dual.coeffs())
        .map(|(a, b)| (a + &(&c * b)) / denom.clone())
        .collect();
    let dmin = params.d.min(params.d_perp);
    if coeffs[dmin].is_zero() {
        return Err(Error::Cancellation(format!("A_{dmin} of the invariant form")));
    }
    let out = WeightEnumerator::new(q, coeffs)?;
    debug_assert_eq!(out.min_distance(), dmin);
    Ok(out)
}
