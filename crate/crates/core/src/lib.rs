//! Prime property values on the unit circle.
//!
//! Each prime `p_m` (1-based index `m`) is assigned a unit-modulus value
//! `χ(p_m) = α + iβ` built from the ratio `x_m = −√p_m / (m(m+1))`. The
//! assignment is extended to every positive integer by complete
//! multiplicativity, and the crate evaluates the truncated series and
//! products built from it:
//!
//! - [`primes`]: sieve, 1-based prime indexing, factorization.
//! - [`character`]: ratio, phase, `χ(p_m)` and its multiplicative extension.
//! - [`series`]: Dirichlet partial sums, Euler products, log expansion,
//!   power-sum residuals and a genuine-character cross-check.
//! - [`tables`]: regeneration of the two reference tables and a diff engine
//!   against bundled transcriptions.
//! - [`basel`]: Basel partial sums, the `sin(x)/x` product and the even
//!   polynomial coefficient identity.
//! - [`cli`]: the `primechi` command-line front end.

// `!(x < bound)` rejects NaN along with out-of-range values
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod basel;
pub mod character;
pub mod cli;
mod error;
pub mod fmt;
pub mod primes;
pub mod series;
pub mod summation;
pub mod tables;

pub use error::{Error, Result};
pub use num_complex::Complex64;
