//! Exact algebra primitives shared by every other module.
//!
//! The tower, bottom-up:
//!
//! 1. [`IntPoly`] — dense univariate polynomials over ℤ with exact division,
//!    pseudo-remainder sequences, and the cyclotomic polynomials Φₙ.
//! 2. [`PowerSeries`] — truncated power series over ℚ; all binary operations
//!    truncate to the shorter operand so a coefficient is never reported
//!    beyond what both inputs determine.
//! 3. [`RationalFunction`] — quotients of integer polynomials kept in a
//!    canonical reduced form, so equality of values is equality of
//!    representations.  Supplies Taylor expansion at `x = 0` and the Laurent
//!    data at `x = 1` that the whole audit revolves around.
//! 4. [`reconstruct_rational`] — recover a rational function from a series
//!    prefix given degree bounds, with a verification margin.
//! 5. [`CyclotomicElement`] — elements of ℚ(ζ_N) in the power basis, enough
//!    field arithmetic to do exact 2×2 unitary linear algebra.
//!
//! Everything here is deterministic and allocation-honest: no randomness, no
//! floats, no hashing of rationals into lossy keys.

mod cyclotomic;
mod poly;
mod ratfun;
mod reconstruct;
mod series;

pub use cyclotomic::{euler_phi, CycError, CyclotomicElement};
pub use poly::{cyclotomic_polynomial, IntPoly};
pub use ratfun::{LaurentCoefficients, RatFunError, RationalFunction};
pub use reconstruct::{reconstruct_rational, ReconstructError};
pub use series::PowerSeries;

use num_bigint::BigInt;
use num_rational::BigRational;

/// Shorthand for the exact scalar type used throughout the crate.
pub type Q = BigRational;

/// Convenience constructor for an exact rational from two machine integers.
pub fn q(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// Convenience constructor for an exact integer rational.
pub fn qi(num: i64) -> Q {
    Q::from(BigInt::from(num))
}
