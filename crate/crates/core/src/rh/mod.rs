//! Deciding whether all roots of a zeta polynomial lie on `|T| = 1/sqrt(q)`.

pub mod ek;
pub mod rho;
pub mod roots;
pub mod scan;
pub mod verify;

pub use ek::{ek_criterion, monotone_coefficient_check};
pub use rho::{rho_forward, rho_inverse, RhoMatrix};
pub use roots::{numeric_roots, RootReport};
pub use scan::{sign_scan, signs_at, SignScanResult};
pub use verify::{normalize_zeta, normalized_table, verify_rh, RhOptions, RhStatus, RhVerdict, TraceEntry};
