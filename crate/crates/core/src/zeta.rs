//! Zeta polynomials of weight enumerators.
//!
//! [`zeta_from_enumerator`] uses the normalized-enumerator series congruence
//! `P(T)/((1-T)(1-qT)) (1-T)^(d+1) = a(T/(1-T)) mod T^(n-d+1)`.
//! [`zeta_oracle_linear`] instead solves the triangular system that matches the
//! `T^(n-d)` coefficient of `P(T) (y(1-T) + xT)^n / ((1-T)(1-qT))` against
//! `(W - x^n)/(q-1)`; it shares no code with the series route.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};
use serde::{Deserialize, Serialize};

use crate::binom::{binomial, binomial_row};
use crate::enumerator::{CodeParams, WeightEnumerator};
use crate::error::{Error, Result};
use crate::quad::{HalfInt, QuadExt};
use crate::series::TruncatedSeries;
use crate::UniPoly;

/// Genus bookkeeping attached to a zeta polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Genus {
    /// `g` and `g_perp` of a code with a known dual.
    Pair { g: i64, g_perp: i64 },
    /// `g~` of an invariant polynomial; the degree is `2 g~`.
    Invariant(HalfInt),
    Unspecified,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ZetaPolynomial {
    q: u64,
    poly: UniPoly,
    genus: Genus,
}

/// `{"q": int, "coeffs": [...], "genus": "p/q"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZetaJson {
    pub q: u64,
    pub coeffs: Vec<String>,
    pub genus: String,
}

impl ZetaPolynomial {
    pub fn new(q: u64, poly: UniPoly, genus: Genus) -> Self {
        ZetaPolynomial { q, poly, genus }
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn poly(&self) -> &UniPoly {
        &self.poly
    }

    pub fn genus(&self) -> Genus {
        self.genus
    }

    pub fn degree(&self) -> Option<usize> {
        self.poly.degree()
    }

    pub fn with_genus(self, genus: Genus) -> Self {
        ZetaPolynomial { genus, ..self }
    }

    /// The genus value printed in JSON: `g~` for invariant polynomials, `g` for a
    /// code with known dual, half the degree otherwise.
    pub fn genus_value(&self) -> HalfInt {
        match self.genus {
            Genus::Invariant(g) => g,
            Genus::Pair { g, .. } => HalfInt::from_int(g),
            Genus::Unspecified => HalfInt::from_twice(self.degree().unwrap_or(0) as i64),
        }
    }

    pub fn to_json(&self) -> ZetaJson {
        ZetaJson {
            q: self.q,
            coeffs: self.poly.coeffs().iter().map(ToString::to_string).collect(),
            genus: self.genus_value().to_string(),
        }
    }

    pub fn from_json(json: &ZetaJson) -> Result<Self> {
        let coeffs = json
            .coeffs
            .iter()
            .map(|c| QuadExt::parse(c, Some(json.q)))
            .collect::<Result<Vec<_>>>()?;
        let genus: HalfInt = json.genus.parse()?;
        Ok(ZetaPolynomial::new(json.q, UniPoly::new(coeffs), Genus::Invariant(genus)))
    }
}

/// Coefficients of the normalized weight enumerator `a(t)`.
#[derive(Clone, Debug, PartialEq)]
pub struct NormalizedWE {
    pub q: u64,
    pub d: usize,
    /// `alpha[j]` is the coefficient of `t^j`.
    pub alpha: Vec<QuadExt>,
}

/// `alpha[i - d] = A_i / ((q - 1) C(n, i))`.
pub fn normalized_we(w: &WeightEnumerator) -> NormalizedWE {
    let n = w.n();
    let d = w.min_distance();
    let row = binomial_row(n);
    let qm1 = BigInt::from(w.q() - 1);
    let alpha = (d..=n)
        .map(|i| {
            let denom = QuadExt::rational(BigRational::from_integer(&qm1 * &row[i]));
            w.coeff(i) / &denom
        })
        .collect();
    NormalizedWE { q: w.q(), d, alpha }
}

/// Zeta polynomial by the series congruence.
pub fn zeta_from_enumerator(w: &WeightEnumerator) -> ZetaPolynomial {
    let q = w.q();
    let d = w.min_distance();
    let order = w.n() - d;
    let alpha = normalized_we(w).alpha;

    // a(u) with u = T/(1-T), Horner from the top coefficient down.
    let mut s = TruncatedSeries::constant(alpha[order].clone(), order);
    for a in alpha[..order].iter().rev() {
        s = s.mul_t().div_one_minus_t();
        s = &s + &TruncatedSeries::constant(a.clone(), order);
    }
    let one_minus_qt = UniPoly::new(vec![QuadExt::one(), -QuadExt::from_rational_in(q, BigRational::from_integer(q.into()))]);
    s = s.mul_poly(&one_minus_qt);
    if d <= order {
        for _ in 0..d {
            s = s.div_one_minus_t();
        }
    } else {
        // 1/(1-T)^d = sum C(j+d-1, d-1) T^j, one product instead of d prefix sums
        let dm1 = d as i64 - 1;
        let inverse: Vec<QuadExt> = (0..=order as i64)
            .map(|j| QuadExt::from(binomial(j + dm1, dm1)))
            .collect();
        s = s.mul_poly(&UniPoly::new(inverse));
    }
    ZetaPolynomial::new(q, s.to_poly(), Genus::Unspecified)
}

/// Zeta polynomial by direct solution of the defining linear system.
pub fn zeta_oracle_linear(w: &WeightEnumerator) -> Result<ZetaPolynomial> {
    let q = w.q();
    let n = w.n();
    let d = w.min_distance();
    let order = n - d;
    let qb = BigInt::from(q);

    // 1/((1-T)(1-qT)) = sum c_i T^i, c_i = 1 + q + ... + q^i
    let mut c = Vec::with_capacity(order + 1);
    let mut acc = BigInt::zero();
    for i in 0..=order {
        acc += Pow::pow(&qb, i as u32);
        c.push(acc.clone());
    }
    // g_j = C(n, j) (x - y)^j y^(n-j), stored by power of x.
    let g: Vec<Vec<BigInt>> = (0..=order.min(n))
        .map(|j| {
            let cnj = binomial(n as i64, j as i64);
            (0..=j)
                .map(|a| {
                    let v = &cnj * binomial(j as i64, a as i64);
                    if (j - a) % 2 == 0 {
                        v
                    } else {
                        -v
                    }
                })
                .collect()
        })
        .collect();
    // f_i = sum_j c_(i-j) g_j, by power of x (degree <= i).
    let f: Vec<Vec<BigInt>> = (0..=order)
        .map(|i| {
            let mut v = vec![BigInt::zero(); i + 1];
            for (j, gj) in g.iter().enumerate().take(i + 1) {
                for (a, coeff) in gj.iter().enumerate() {
                    v[a] += &c[i - j] * coeff;
                }
            }
            v
        })
        .collect();
    let entry = |e: usize, unknown: usize| -> BigInt {
        // [x^e] f_(order - unknown)
        f[order - unknown].get(e).cloned().unwrap_or_default()
    };

    let qm1 = QuadExt::rational(BigRational::from_integer(BigInt::from(q - 1)));
    let mut p: Vec<QuadExt> = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let e = order - k;
        // x^e y^(n-e) carries A_(n-e)
        let mut rhs = w.coeff(n - e) / &qm1;
        for (i, pi) in p.iter().enumerate() {
            let m = entry(e, i);
            if !m.is_zero() {
                rhs = rhs - pi * &QuadExt::from(m);
            }
        }
        let pivot = entry(e, k);
        if pivot.is_zero() {
            return Err(Error::SingularSystem(k));
        }
        p.push(rhs / QuadExt::from(pivot));
    }
    Ok(ZetaPolynomial::new(q, UniPoly::new(p), Genus::Unspecified))
}

fn q_rational(q: u64) -> QuadExt {
    QuadExt::from_rational_in(q, BigRational::from_integer(BigInt::from(q)))
}

/// `P_dual(T) = P(1/(qT)) q^g T^(g + g_perp)`.
pub fn dual_zeta(p: &ZetaPolynomial, params: &CodeParams) -> Result<ZetaPolynomial> {
    let g = params.genus();
    let gp = params.dual_genus();
    let top = g + gp;
    let deg = p.degree().ok_or(Error::ZeroPolynomial)? as i64;
    if deg > top {
        return Err(Error::InconsistentParams(format!(
            "degree {deg} exceeds g + g_perp = {top}; negative powers remain"
        )));
    }
    let q = params.q;
    let mut out = vec![QuadExt::zero(); top as usize + 1];
    for (i, pi) in p.poly().coeffs().iter().enumerate() {
        let scale = q_rational(q).pow(g - i as i64)?;
        out[(top - i as i64) as usize] = pi * &scale;
    }
    Ok(ZetaPolynomial::new(q, UniPoly::new(out), Genus::Pair { g: gp, g_perp: g }))
}

/// `g~ = n/2 + 1 - min(d, d_perp)`.
pub fn invariant_genus(params: &CodeParams) -> HalfInt {
    HalfInt::from_twice(params.n as i64 + 2 - 2 * params.d.min(params.d_perp) as i64)
}

/// Zeta polynomial of the invariantized enumerator, from the zeta polynomial of one side.
pub fn invariant_zeta(p: &ZetaPolynomial, params: &CodeParams) -> Result<ZetaPolynomial> {
    let q = params.q;
    let n = params.n as i64;
    let d = params.d as i64;
    let expected = params.genus() + params.dual_genus();
    let deg = p.degree().ok_or(Error::ZeroPolynomial)? as i64;
    if deg != expected {
        return Err(Error::DegreeMismatch {
            expected: format!("g + g_perp = {expected}"),
            found: deg.to_string(),
        });
    }
    let shift = (d - params.d_perp as i64).max(0);
    let reflect = QuadExt::half_power(q, HalfInt::from_twice(n + 2 - 2 * d));
    let gt = invariant_genus(params);
    let top = gt.twice();
    let mut out = vec![QuadExt::zero(); top as usize + 1];
    for (i, pi) in p.poly().coeffs().iter().enumerate() {
        let i = i as i64;
        let direct = i + shift;
        let mirrored = n + 2 - 2 * d - i + shift;
        if direct > top || mirrored < 0 || mirrored > top {
            return Err(Error::InconsistentParams(format!(
                "term T^{i} lands outside 0..={top}"
            )));
        }
        out[direct as usize] = &out[direct as usize] + pi;
        let term = pi * &reflect * q_rational(q).pow(-i)?;
        out[mirrored as usize] = &out[mirrored as usize] + &term;
    }
    let denom = QuadExt::one() + QuadExt::half_power(q, params.identity_exponent());
    let poly = UniPoly::new(out).div_scalar(&denom);
    if poly.degree() != Some(top as usize) {
        return Err(Error::DegreeMismatch {
            expected: format!("2 g~ = {top}"),
            found: format!("{:?}", poly.degree()),
        });
    }
    Ok(ZetaPolynomial::new(q, poly, Genus::Invariant(gt)))
}

/// Invariant zeta polynomial of the Hamming/simplex pair, computed from the
/// simplex side whose series has only `n - q^(r-1) + 1` terms.
pub fn hamming_invariant_zeta(r: u32, q: u64) -> Result<ZetaPolynomial> {
    let (simplex, params) = crate::enumerator::simplex_enumerator(r, q)?;
    invariant_zeta(&zeta_from_enumerator(&simplex), &params)
}

/// Closed form `(1 + q^(n/2+1-d) T^(n+2-2d)) / (1 + q^(k-n/2))` for MDS pairs.
pub fn mds_invariant_zeta(n: usize, d: usize, q: u64) -> Result<ZetaPolynomial> {
    if q < 2 {
        return Err(Error::InvalidBase(q));
    }
    if d < 2 || 2 * d > n + 1 {
        return Err(Error::OutOfRange(format!(
            "need 2 <= d <= (n+1)/2, got n = {n}, d = {d}"
        )));
    }
    let k = n + 1 - d;
    let m = n + 2 - 2 * d;
    let lead = QuadExt::half_power(q, HalfInt::from_twice(m as i64));
    let mut coeffs = vec![QuadExt::zero(); m + 1];
    coeffs[0] = QuadExt::from_rational_in(q, BigRational::one());
    coeffs[m] = lead;
    let denom = QuadExt::one() + QuadExt::half_power(q, HalfInt::from_twice(2 * k as i64 - n as i64));
    Ok(ZetaPolynomial::new(
        q,
        UniPoly::new(coeffs).div_scalar(&denom),
        Genus::Invariant(HalfInt::from_twice(m as i64)),
    ))
}

fn hamming_shape(r: u32, q: u64) -> Result<(usize, usize)> {
    if r < 3 {
        return Err(Error::OutOfRange(format!("closed forms need r >= 3, got {r}")));
    }
    let (w, p) = crate::enumerator::simplex_enumerator(r, q)?;
    Ok((w.n(), p.d))
}

/// `N_{r,q} = n / C(n, q^(r-1))`.
fn simplex_scale(n: usize, d: usize) -> BigRational {
    BigRational::new(BigInt::from(n), binomial(n as i64, d as i64))
}

/// Zeta polynomial of the simplex code from its binomial closed form.
pub fn simplex_zeta_closed(r: u32, q: u64) -> Result<ZetaPolynomial> {
    let (n, d) = hamming_shape(r, q)?;
    let qb = BigInt::from(q);
    let dm1 = d as i64 - 1;
    let scale = QuadExt::rational(simplex_scale(n, d));
    let coeffs: Vec<QuadExt> = (0..n - d)
        .map(|j| {
            let j = j as i64;
            let c = if j == 0 {
                BigInt::one()
            } else {
                binomial(j + dm1, dm1) - &qb * binomial(j + dm1 - 1, dm1)
            };
            &scale * &QuadExt::from(c)
        })
        .collect();
    let g = (n + 1 - r as usize - d) as i64;
    Ok(ZetaPolynomial::new(
        q,
        UniPoly::new(coeffs),
        Genus::Pair { g, g_perp: r as i64 - 2 },
    ))
}

/// The pieces of the Hamming invariant closed form.
#[derive(Clone, Debug, PartialEq)]
pub struct HammingClosedForm {
    pub n: usize,
    /// Minimum distance `q^(r-1)` of the simplex side.
    pub d: usize,
    pub scale: QuadExt,
    pub f1: UniPoly,
    pub f2: UniPoly,
}

pub fn hamming_closed_parts(r: u32, q: u64) -> Result<HammingClosedForm> {
    let (n, d) = hamming_shape(r, q)?;
    let (ni, di) = (n as i64, d as i64);
    let len = n - 3;
    let power = |i: i64| QuadExt::half_power(q, HalfInt::from_twice(2 * i + 4 - ni));
    let mut f1 = vec![QuadExt::zero(); len];
    let mut f2 = vec![QuadExt::zero(); len];
    for i in 0..=(ni - di - 1) {
        let t = power(i) * QuadExt::from(binomial(ni - i - 2, di - 1));
        f1[i as usize] = &f1[i as usize] + &t;
    }
    for i in (di - 3)..=(ni - 4) {
        f1[i as usize] = &f1[i as usize] + &QuadExt::from(binomial(i + 2, di - 1));
    }
    for i in 0..=(ni - di - 2) {
        let t = power(i) * QuadExt::from(binomial(ni - i - 3, di - 1));
        f2[i as usize] = &f2[i as usize] + &t;
    }
    for i in (di - 2)..=(ni - 4) {
        f2[i as usize] = &f2[i as usize] + &QuadExt::from(binomial(i + 1, di - 1));
    }
    let denom = QuadExt::one() + QuadExt::half_power(q, HalfInt::from_twice(2 * r as i64 - ni));
    let scale = QuadExt::rational(simplex_scale(n, d)) / denom;
    Ok(HammingClosedForm {
        n,
        d,
        scale,
        f1: UniPoly::new(f1),
        f2: UniPoly::new(f2),
    })
}

/// Invariant zeta polynomial of the Hamming/simplex pair, `N/(1+q^(r-n/2)) (F1 - q F2)`.
pub fn hamming_invariant_zeta_closed(r: u32, q: u64) -> Result<ZetaPolynomial> {
    let parts = hamming_closed_parts(r, q)?;
    let combo = &parts.f1 - &parts.f2.scale(&q_rational(q));
    Ok(ZetaPolynomial::new(
        q,
        combo.scale(&parts.scale),
        Genus::Invariant(HalfInt::from_twice(parts.n as i64 - 4)),
    ))
}

/// Exact test of `P(T) = P(1/(qT)) q^g T^(2g)`.
pub fn functional_equation_check(p: &ZetaPolynomial, g: HalfInt) -> Result<bool> {
    let deg = p.degree().ok_or(Error::ZeroPolynomial)?;
    if g.twice() != deg as i64 {
        return Err(Error::DegreeMismatch {
            expected: format!("2g = {}", g.twice()),
            found: deg.to_string(),
        });
    }
    let q = p.q();
    let c = p.poly().coeffs();
    Ok((0..=deg).all(|i| {
        let factor = QuadExt::half_power(q, g - HalfInt::from_int(i as i64));
        c[deg - i] == &c[i] * &factor
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerator::{golay_enumerator, hamming_enumerator, invariantize, mds_enumerator, simplex_enumerator, Golay};

    fn qe(s: &str) -> QuadExt {
        QuadExt::parse(s, None).unwrap()
    }

    fn up(cs: &[&str]) -> UniPoly {
        UniPoly::new(cs.iter().map(|c| qe(c)).collect())
    }

    #[test]
    fn normalized_simplex_is_constant() {
        let (w, _) = simplex_enumerator(3, 2).unwrap();
        let alpha = normalized_we(&w).alpha;
        assert_eq!(alpha.len(), 4);
        assert_eq!(alpha[0], qe("1/5"));
        assert!(alpha[1..].iter().all(Zero::is_zero));
        let (w, _) = mds_enumerator(7, 3, 4).unwrap();
        assert_eq!(normalized_we(&w).alpha[0], QuadExt::one());
    }

    #[test]
    fn mds_zeta_is_one() {
        for (n, d, q) in [(5, 2, 2), (9, 3, 2), (7, 4, 3), (6, 6, 5)] {
            let (w, _) = mds_enumerator(n, d, q).unwrap();
            assert_eq!(*zeta_from_enumerator(&w).poly(), UniPoly::one(), "{n} {d} {q}");
            assert_eq!(*zeta_oracle_linear(&w).unwrap().poly(), UniPoly::one());
        }
    }

    #[test]
    fn simplex_3_2_zeta() {
        let (w, _) = simplex_enumerator(3, 2).unwrap();
        let expect = up(&["1/5", "2/5", "2/5"]);
        assert_eq!(*zeta_from_enumerator(&w).poly(), expect);
        assert_eq!(*zeta_oracle_linear(&w).unwrap().poly(), expect);
        assert_eq!(*simplex_zeta_closed(3, 2).unwrap().poly(), expect);
    }

    #[test]
    fn dual_zeta_of_simplex_is_hamming_zeta() {
        let (s, sp) = simplex_enumerator(3, 2).unwrap();
        let (h, _) = hamming_enumerator(3, 2).unwrap();
        let ps = zeta_from_enumerator(&s);
        let ph = dual_zeta(&ps, &sp).unwrap();
        assert_eq!(ph.poly(), zeta_from_enumerator(&h).poly());
        assert_eq!(ph.poly().degree(), Some(2));
        let back = dual_zeta(&ph, &sp.dual()).unwrap();
        assert_eq!(back.poly(), ps.poly());
    }

    #[test]
    fn dual_zeta_rejects_excess_degree() {
        let (_, sp) = simplex_enumerator(3, 2).unwrap();
        let p = ZetaPolynomial::new(2, up(&["1", "1", "1", "1"]), Genus::Unspecified);
        assert!(dual_zeta(&p, &sp).is_err());
    }

    #[test]
    fn invariant_zeta_mds_5_2_2() {
        let expect = up(&["1", "0", "0", "0+2*sqrt(2)"]).div_scalar(&qe("1+2*sqrt(2)"));
        let closed = mds_invariant_zeta(5, 2, 2).unwrap();
        assert_eq!(*closed.poly(), expect);
        let (w, p) = mds_enumerator(5, 2, 2).unwrap();
        let (wd, _) = mds_enumerator(5, 5, 2).unwrap();
        let wt = invariantize(&w, &wd, &p).unwrap();
        assert_eq!(*zeta_oracle_linear(&wt).unwrap().poly(), expect);
        let via = invariant_zeta(&zeta_from_enumerator(&w), &p).unwrap();
        assert_eq!(*via.poly(), expect);
        assert!(functional_equation_check(&closed, HalfInt::from_twice(3)).unwrap());
    }

    #[test]
    fn mds_closed_form_4_2_3() {
        let z = mds_invariant_zeta(4, 2, 3).unwrap();
        assert_eq!(z.degree(), Some(2));
        // k - n/2 = 1, so the scale is 1/(1+3)
        assert_eq!(*z.poly(), up(&["1/4", "0", "3/4"]));
        assert!(mds_invariant_zeta(4, 3, 3).is_err());
        assert!(mds_invariant_zeta(5, 1, 3).is_err());
    }

    #[test]
    fn golay_11_matches_factored_form() {
        let (w, p) = golay_enumerator(Golay::G11);
        let (wd, _) = golay_enumerator(Golay::G11Dual);
        let wt = invariantize(&w, &wd, &p).unwrap();
        let z = zeta_from_enumerator(&wt);
        let c = qe("-1/14+1/14*sqrt(3)");
        let factored = &up(&["1", "sqrt(3)"]) * &up(&["1", "3", "3"]);
        assert_eq!(*z.poly(), factored.scale(&c));
        let g = invariant_genus(&p);
        assert_eq!(g, HalfInt::from_twice(3));
        assert!(functional_equation_check(&z, g).unwrap());
    }

    #[test]
    fn hamming_closed_form_3_2() {
        let parts = hamming_closed_parts(3, 2).unwrap();
        let combo = &parts.f1 - &parts.f2.scale(&QuadExt::int(2));
        assert_eq!(combo, up(&["0+1/2*sqrt(2)", "1+1*sqrt(2)", "2+1*sqrt(2)", "2"]));
        let (s, sp) = simplex_enumerator(3, 2).unwrap();
        let pipeline = invariant_zeta(&zeta_from_enumerator(&s), &sp).unwrap();
        assert_eq!(pipeline, hamming_invariant_zeta_closed(3, 2).unwrap());
        assert_eq!(hamming_invariant_zeta(3, 2).unwrap(), pipeline);
    }

    #[test]
    fn functional_equation_simple_cases() {
        let p = ZetaPolynomial::new(2, up(&["3", "0+3*sqrt(2)"]), Genus::Unspecified);
        assert!(functional_equation_check(&p, HalfInt::from_twice(1)).unwrap());
        let p = ZetaPolynomial::new(2, up(&["1", "1"]), Genus::Unspecified);
        assert!(!functional_equation_check(&p, HalfInt::from_twice(1)).unwrap());
        assert!(functional_equation_check(&p, HalfInt::from_int(1)).is_err());
    }

    #[test]
    fn zeta_json_round_trip() {
        let z = mds_invariant_zeta(5, 2, 2).unwrap();
        let json = z.to_json();
        assert_eq!(json.genus, "3/2");
        assert_eq!(ZetaPolynomial::from_json(&json).unwrap(), z);
    }
}
