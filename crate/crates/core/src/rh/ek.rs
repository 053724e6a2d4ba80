//! Coefficient tests that certify all roots lie on the unit circle.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::quad::QuadExt;
use crate::scalar::{ExactSign, Sign};
use crate::UniPoly;

fn strictly_decreasing_positive(head: &[QuadExt]) -> bool {
    head.iter().all(|a| a.sign_exact() == Sign::Positive)
        && head.windows(2).all(|w| (&w[0] - &w[1]).sign_exact() == Sign::Positive)
}

/// Gapped palindrome `a_0 + .. + a_k T^k + a_k T^(m-k) + .. + a_0 T^m` with
/// `m > 2k` and `a_0 > a_1 > .. > a_k > 0`. An overall negative sign is allowed.
///
/// `true` means every root lies on `|T| = 1`; `false` only means the shape does
/// not match.
pub fn ek_criterion(f: &UniPoly) -> bool {
    let Some(m) = f.degree() else {
        return false;
    };
    if m == 0 || !f.is_self_reciprocal().unwrap_or(false) {
        return false;
    }
    let mut coeffs = f.coeffs().to_vec();
    if coeffs[0].sign_exact() == Sign::Negative {
        coeffs.iter_mut().for_each(|c| *c = -&*c);
    }
    let first_zero = coeffs.iter().position(Zero::is_zero).unwrap_or(m + 1);
    if first_zero == 0 {
        return false;
    }
    let k = (first_zero - 1).min((m - 1) / 2);
    if !coeffs[k + 1..m - k].iter().all(Zero::is_zero) {
        return false;
    }
    strictly_decreasing_positive(&coeffs[..=k])
}

/// Monotonicity of the head of a normalized Hamming invariant zeta polynomial,
/// laid out as `a_0 + .. + a_(n-d-1) T^(n-d-1) + a_(n-d-1) T^(d-3) + .. + a_0 T^(n-4)`
/// where `d` is the simplex distance `q^(r-1)`.
pub fn monotone_coefficient_check(p_norm: &UniPoly, n: usize, d: usize) -> Result<bool> {
    let deg = p_norm.degree().ok_or(Error::ZeroPolynomial)?;
    if n < 4 || deg != n - 4 || d >= n {
        return Err(Error::Layout(format!(
            "expected degree n - 4 = {} with d < n, found degree {deg} (n = {n}, d = {d})",
            n as i64 - 4
        )));
    }
    Ok(strictly_decreasing_positive(&p_norm.coeffs()[..n - d]))
}
