//! Exact zeta polynomials for linear codes and checks of the Riemann hypothesis
//! analogue on them.
//!
//! Arithmetic lives in `Q(sqrt(q))` ([`QuadExt`]); polynomials and truncated
//! series are generic over [`Scalar`] so the same code runs over `f64`,
//! complex floats, rationals and the quadratic field.

pub mod binom;
pub mod enumerator;
pub mod error;
pub mod poly;
pub mod rh;
pub mod quad;
pub mod scalar;
pub mod series;
pub mod zeta;

use num_complex::Complex64;
use num_rational::BigRational;

pub use enumerator::{CodeParams, Golay, HomogeneousForm, WeightEnumerator};
pub use error::{Error, Result};
pub use poly::Poly;
pub use quad::{HalfInt, QuadExt};
pub use rh::{verify_rh, RhOptions, RhStatus, RhVerdict};
pub use scalar::{ExactSign, Field, Scalar, Sign, ToComplex};
pub use series::TruncatedSeries;
pub use zeta::{Genus, ZetaPolynomial};

pub type Rational = BigRational;
pub type UniPoly = Poly<QuadExt>;
pub type RealPoly = Poly<f64>;
pub type ComplexPoly = Poly<Complex64>;
pub type RationalPoly = Poly<BigRational>;
