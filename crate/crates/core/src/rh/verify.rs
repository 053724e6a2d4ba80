//! The verification pipeline: normalization, exact certificates, numeric fallback.

use std::fmt;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::quad::{HalfInt, QuadExt};
use crate::rh::ek::ek_criterion;
use crate::rh::rho::rho_inverse;
use crate::rh::roots::numeric_roots;
use crate::rh::scan::sign_scan;
use crate::zeta::ZetaPolynomial;
use crate::UniPoly;

/// `P(T/sqrt(q))`; RH for `P` is the statement that its roots lie on `|T| = 1`.
pub fn normalize_zeta(p: &ZetaPolynomial) -> UniPoly {
    p.poly()
        .compose_linear(&QuadExt::half_power(p.q(), HalfInt::from_twice(-1)))
}

/// The normalized polynomial rescaled so its constant term is 1.
pub fn normalized_table(p: &ZetaPolynomial) -> Result<UniPoly> {
    let normalized = normalize_zeta(p);
    let a0 = normalized.coeff(0);
    if a0.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(normalized.div_scalar(&a0))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RhStatus {
    ProvedEk,
    ProvedSignScan,
    NumericPass,
    NumericFail,
    Inconclusive,
}

impl RhStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            RhStatus::ProvedEk => "proved_ek",
            RhStatus::ProvedSignScan => "proved_sign_scan",
            RhStatus::NumericPass => "numeric_pass",
            RhStatus::NumericFail => "numeric_fail",
            RhStatus::Inconclusive => "inconclusive",
        }
    }

    pub fn is_proved(self) -> bool {
        matches!(self, RhStatus::ProvedEk | RhStatus::ProvedSignScan)
    }

    /// Proved or numerically confirmed.
    pub fn is_pass(self) -> bool {
        self.is_proved() || self == RhStatus::NumericPass
    }
}

impl fmt::Display for RhStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEntry {
    pub method: String,
    pub outcome: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RhVerdict {
    pub status: RhStatus,
    /// Largest `| |root| sqrt(q) - 1 |`, when roots were computed.
    pub max_deviation: Option<f64>,
    /// Roots of `P` itself, not of the normalized polynomial.
    pub roots: Vec<Complex64>,
    pub trace: Vec<TraceEntry>,
    /// Distinct roots certified by the sign scan, when it ran to a conclusion.
    pub certified_roots: Option<usize>,
}

impl Serialize for RhVerdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct View<'a> {
            status: RhStatus,
            max_deviation: Option<f64>,
            roots: Vec<[f64; 2]>,
            trace: &'a [TraceEntry],
        }
        View {
            status: self.status,
            max_deviation: self.max_deviation,
            roots: self.roots.iter().map(|z| [z.re, z.im]).collect(),
            trace: &self.trace,
        }
        .serialize(s)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RhOptions {
    /// Initial sign-scan grid on `[-1, 1]`.
    pub grid: usize,
    /// The grid doubles while inconclusive, up to this size.
    pub max_grid: usize,
    /// Tolerance on `| |root| sqrt(q) - 1 |`.
    pub tol: f64,
    /// Report at most a numeric status even if an exact certificate exists.
    pub cap_numeric: bool,
    /// Proved verdicts get a numeric cross-check up to this degree.
    pub cross_check_max_degree: usize,
}

impl Default for RhOptions {
    fn default() -> Self {
        RhOptions {
            grid: 256,
            max_grid: 4096,
            tol: 1e-8,
            cap_numeric: false,
            cross_check_max_degree: 64,
        }
    }
}

struct Trace(Vec<TraceEntry>);

impl Trace {
    fn push(&mut self, method: &str, outcome: impl Into<String>) {
        self.0.push(TraceEntry {
            method: method.to_string(),
            outcome: outcome.into(),
        });
    }
}

fn numeric_status(deviation: f64, converged: bool, tol: f64) -> RhStatus {
    if !converged {
        RhStatus::Inconclusive
    } else if deviation <= tol {
        RhStatus::NumericPass
    } else if deviation > 100.0 * tol {
        RhStatus::NumericFail
    } else {
        RhStatus::Inconclusive
    }
}

/// Runs the exact certificates in order of cost, then numerics.
pub fn verify_rh(p: &ZetaPolynomial, opts: &RhOptions) -> Result<RhVerdict> {
    let m = p
        .degree()
        .filter(|d| *d > 0)
        .ok_or_else(|| Error::OutOfRange("zeta polynomial must be nonconstant".into()))?;
    let sqrt_q = (p.q() as f64).sqrt();
    let mut trace = Trace(Vec::new());
    let normalized = normalize_zeta(p);
    trace.push("normalize", format!("P(T/sqrt({})) of degree {m}", p.q()));

    let palindromic = normalized.is_self_reciprocal()?;
    let mut proved = None;
    let mut certified_roots = None;
    if palindromic {
        trace.push("self_reciprocal", "ok");
        if ek_criterion(&normalized) {
            trace.push("ek_criterion", "holds");
            proved = Some(RhStatus::ProvedEk);
        } else {
            trace.push("ek_criterion", "hypothesis not met");
        }
    } else {
        trace.push("self_reciprocal", "failed: coefficients are not palindromic");
    }

    if palindromic && proved.is_none() {
        let pullback = rho_inverse(&normalized.substitute_power(2), m)?;
        trace.push("rho_inverse", format!("pullback of degree {m}"));
        let lo = BigRational::from_integer((-1).into());
        let hi = BigRational::from_integer(1.into());
        let mut grid = opts.grid.max(2);
        loop {
            let scan = sign_scan(&pullback, &lo, &hi, grid)?;
            trace.push(
                "sign_scan",
                format!("grid {grid}: {} of {m} roots certified", scan.certified_roots),
            );
            if scan.conclusive() {
                proved = Some(RhStatus::ProvedSignScan);
                certified_roots = Some(scan.certified_roots);
                break;
            }
            if grid * 2 > opts.max_grid {
                break;
            }
            grid *= 2;
        }
    }

    if proved.is_some() && opts.cap_numeric {
        trace.push("cap", "exact certificate found; status capped at numeric");
        proved = None;
    }

    let run_numeric = proved.is_none() || m <= opts.cross_check_max_degree;
    let (roots, max_deviation, numeric) = if run_numeric {
        let report = numeric_roots(&normalized)?;
        let deviation = report.max_deviation_from(1.0);
        trace.push(
            "numeric_roots",
            format!(
                "{} roots, max deviation {deviation:.3e}, max residual {:.3e}{}",
                report.roots.len(),
                report.max_residual(),
                if report.converged { "" } else { ", not converged" }
            ),
        );
        let roots = report.roots.iter().map(|z| z / sqrt_q).collect();
        (roots, Some(deviation), Some((deviation, report.converged)))
    } else {
        (Vec::new(), None, None)
    };

    let status = match (proved, numeric) {
        (Some(status), Some((deviation, _))) => {
            let agrees = deviation <= 100.0 * opts.tol;
            trace.push(
                "numeric_cross_check",
                if agrees { "consistent" } else { "disagrees with the exact certificate" },
            );
            status
        }
        (Some(status), None) => status,
        (None, Some((deviation, converged))) => numeric_status(deviation, converged, opts.tol),
        (None, None) => RhStatus::Inconclusive,
    };
    Ok(RhVerdict {
        status,
        max_deviation,
        roots,
        trace: trace.0,
        certified_roots,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeta::{mds_invariant_zeta, Genus};

    fn up(cs: &[&str]) -> UniPoly {
        UniPoly::new(cs.iter().map(|c| QuadExt::parse(c, None).unwrap()).collect())
    }

    #[test]
    fn normalized_mds() {
        let z = mds_invariant_zeta(5, 2, 2).unwrap();
        let scale = QuadExt::parse("1+2*sqrt(2)", None).unwrap();
        assert_eq!(normalize_zeta(&z), up(&["1", "0", "0", "1"]).div_scalar(&scale));
        let v = verify_rh(&z, &RhOptions::default()).unwrap();
        assert_eq!(v.status, RhStatus::ProvedEk);
        assert!(v.max_deviation.unwrap() < 1e-12);
        for r in &v.roots {
            assert!((r.norm() * 2f64.sqrt() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn sign_scan_route() {
        // roots -1, e^(+-2 pi i/3) scaled: 1 + 2T + 2T^2 + T^3 fails the head test
        let z = ZetaPolynomial::new(4, up(&["1", "4", "8", "8"]), Genus::Unspecified);
        let v = verify_rh(&z, &RhOptions::default()).unwrap();
        assert_eq!(v.status, RhStatus::ProvedSignScan);
        assert_eq!(v.certified_roots, Some(3));
        let capped = verify_rh(
            &z,
            &RhOptions {
                cap_numeric: true,
                ..RhOptions::default()
            },
        )
        .unwrap();
        assert_eq!(capped.status, RhStatus::NumericPass);
        assert!(capped.trace.iter().any(|t| t.method == "sign_scan"));
    }

    #[test]
    fn off_circle_roots_fail() {
        // (T - 2)(T - 1/2) is palindromic with real roots off the circle
        let z = ZetaPolynomial::new(4, up(&["1", "-5/2", "1"]), Genus::Unspecified);
        let z = ZetaPolynomial::new(4, z.poly().compose_linear(&QuadExt::int(2)), Genus::Unspecified);
        let v = verify_rh(&z, &RhOptions::default()).unwrap();
        assert_eq!(v.status, RhStatus::NumericFail);
        assert!(v.max_deviation.unwrap() > 0.4);
    }

    #[test]
    fn non_palindromic_goes_numeric() {
        let z = ZetaPolynomial::new(2, up(&["1", "1"]), Genus::Unspecified);
        let v = verify_rh(&z, &RhOptions::default()).unwrap();
        assert_eq!(v.status, RhStatus::NumericFail);
        assert_eq!(v.trace.len(), 3);
        // 1 - sqrt(2) T normalizes to 1 - T, anti-palindromic with its root on the circle
        let z = ZetaPolynomial::new(2, up(&["1", "0-1*sqrt(2)"]), Genus::Unspecified);
        let v = verify_rh(&z, &RhOptions::default()).unwrap();
        assert_eq!(v.status, RhStatus::NumericPass);
    }

    #[test]
    fn verdict_json_shape() {
        let z = mds_invariant_zeta(4, 2, 3).unwrap();
        let v = verify_rh(&z, &RhOptions::default()).unwrap();
        let json = serde_json::to_value(&v).unwrap();
        assert_eq!(json["status"], "proved_ek");
        assert_eq!(json["roots"].as_array().unwrap().len(), 2);
        assert!(json["trace"][0]["method"].is_string());
    }
}
