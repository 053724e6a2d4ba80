//! Double-precision roots by Aberth–Ehrlich iteration with Newton polishing.

use num_complex::Complex64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::ToComplex;
use crate::UniPoly;

const MAX_ITERATIONS: usize = 2000;
const STEP_TOLERANCE: f64 = 1e-15;
const POLISH_STEPS: usize = 4;

#[derive(Clone, Debug, PartialEq)]
pub struct RootReport {
    pub roots: Vec<Complex64>,
    /// `|f(z)| / sum |a_j| |z|^j` for each root.
    pub residuals: Vec<f64>,
    pub converged: bool,
    pub iterations: usize,
}

impl RootReport {
    /// Largest `| |z| - radius |`.
    pub fn max_deviation_from(&self, radius: f64) -> f64 {
        self.roots
            .iter()
            .map(|z| (z.norm() - radius).abs())
            .fold(0.0, f64::max)
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }
}

/// Roots of `f` from the double images of its coefficients.
pub fn numeric_roots(f: &UniPoly) -> Result<RootReport> {
    let coeffs: Vec<Complex64> = f.coeffs().iter().map(ToComplex::to_c64).collect();
    complex_roots(&coeffs)
}

/// `p(z)` and `p'(z)` by Horner.
fn eval_with_derivative(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::zero();
    let mut dp = Complex64::zero();
    for c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

fn relative_residual(coeffs: &[Complex64], z: Complex64) -> f64 {
    let (p, _) = eval_with_derivative(coeffs, z);
    let r = z.norm();
    let mut scale = 0.0;
    for c in coeffs.iter().rev() {
        scale = scale * r + c.norm();
    }
    if scale == 0.0 {
        0.0
    } else {
        p.norm() / scale
    }
}

/// Roots of `sum coeffs[j] z^j`, low degree first.
pub fn complex_roots(coeffs: &[Complex64]) -> Result<RootReport> {
    let top = coeffs
        .iter()
        .rposition(|c| !c.is_zero())
        .ok_or(Error::ZeroPolynomial)?;
    if top == 0 {
        return Err(Error::OutOfRange("constant polynomial has no roots".into()));
    }
    let zero_roots = coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0);
    let lead = coeffs[top];
    let work: Vec<Complex64> = coeffs[zero_roots..=top].iter().map(|c| c / lead).collect();
    let deg = work.len() - 1;

    let mut roots = vec![Complex64::zero(); zero_roots];
    let mut converged = true;
    let mut iterations = 0;
    if deg > 0 {
        let radius = work[0].norm().powf(1.0 / deg as f64).max(f64::MIN_POSITIVE);
        let mut z: Vec<Complex64> = (0..deg)
            .map(|k| Complex64::from_polar(radius, std::f64::consts::TAU * k as f64 / deg as f64 + 0.4))
            .collect();
        converged = false;
        while iterations < MAX_ITERATIONS {
            iterations += 1;
            let mut largest = 0.0f64;
            for i in 0..deg {
                let (p, dp) = eval_with_derivative(&work, z[i]);
                if p.is_zero() {
                    continue;
                }
                let ratio = p / dp;
                let repulsion: Complex64 = (0..deg)
                    .filter(|&j| j != i)
                    .map(|j| (z[i] - z[j]).inv())
                    .sum();
                let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
                if step.is_finite() {
                    z[i] -= step;
                    largest = largest.max(step.norm() / z[i].norm().max(1.0));
                }
            }
            if largest <= STEP_TOLERANCE {
                converged = true;
                break;
            }
        }
        for zi in z.iter_mut() {
            for _ in 0..POLISH_STEPS {
                let (p, dp) = eval_with_derivative(&work, *zi);
                if p.is_zero() || dp.is_zero() {
                    break;
                }
                let next = *zi - p / dp;
                if relative_residual(&work, next) < relative_residual(&work, *zi) {
                    *zi = next;
                } else {
                    break;
                }
            }
        }
        roots.extend(z);
    }

    let residuals: Vec<f64> = roots.iter().map(|z| relative_residual(coeffs, *z)).collect();
    if !converged && residuals.iter().all(|r| *r < 1e-12) {
        converged = true;
    }
    roots.sort_by(|a, b| {
        let key = |z: &Complex64| {
            let t = z.im.atan2(z.re);
            if t < 0.0 {
                t + std::f64::consts::TAU
            } else {
                t
            }
        };
        key(a).total_cmp(&key(b)).then(a.norm().total_cmp(&b.norm()))
    });
    let residuals = roots.iter().map(|z| relative_residual(coeffs, *z)).collect();
    Ok(RootReport {
        roots,
        residuals,
        converged,
        iterations,
    })
}
