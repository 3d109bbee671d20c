//! Exact-arithmetic auditing of circle symplectic quotients against finite
//! unitary quotients of ℂ².
//!
//! A weight vector `A = (a_1, …, a_n)` of nonzero integers describes a linear
//! circle action on ℂⁿ.  The symplectic quotient at the zero level of the
//! moment map carries a ℤ-graded Poisson algebra of regular functions, and one
//! can ask whether that graded algebra could be isomorphic to the invariant
//! algebra of a finite subgroup Γ < U(2) acting on ℂ².  This crate decides the
//! question mechanically for small inputs with *exact* rational arithmetic —
//! no floating point anywhere — and produces machine-checkable exclusion
//! certificates for every candidate group it rules out.
//!
//! # Module map
//!
//! - [`exactalg`] — integer polynomials, truncated rational power series,
//!   canonical rational functions, Laurent data at `x = 1`, rational-function
//!   reconstruction from series prefixes, and cyclotomic field elements.
//! - [`circle_quotient`] — weight vectors, invariant-monomial counting,
//!   off-shell/on-shell Hilbert series as exact rational functions, Laurent
//!   coefficients γ₀, γ₂ (closed form and extracted), orbit-type strata, and
//!   the arithmetic screening predicates.
//! - [`u2_catalog`] — exact 2×2 unitary matrices over cyclotomic fields, the
//!   binary polyhedral subgroups of SU(2), the nine families of finite
//!   subgroups of U(2), pseudoreflection analysis, and Molien series of the
//!   real invariant algebra.
//! - [`auditor`] — the end-to-end decision procedure: screening, candidate
//!   enumeration by group order, per-candidate obstructions, exclusion
//!   certificates, batch scans, and the internal consistency verification
//!   suite.
//! - [`cli`] — the command-line front end (`quotient-audit` binary).
//!
//! # Runnable examples
//!
//! Each major capability has a self-contained example under `examples/`:
//!
//! ```text
//! cargo run --example laurent_gamma          # Laurent data of rational functions at x = 1
//! cargo run --example weight_vector_analysis # normalization, γ₀/γ₂, screening predicates
//! cargo run --example hilbert_series         # exact on-shell Hilbert series
//! cargo run --example orbit_strata           # orbit-type stratification of a quotient
//! cargo run --example su2_building_blocks    # binary polyhedral groups inside SU(2)
//! cargo run --example u2_catalog_tour        # the nine families of finite U(2) subgroups
//! cargo run --example molien_series          # Molien series and pseudoreflection data
//! cargo run --example audit_certificates     # full audit with exclusion certificates
//! cargo run --example scan_summary           # batch scans over weight ranges
//! cargo run --example verification_suite     # internal identity and scan checks
//! ```
//!
//! # Conventions
//!
//! * All arithmetic is exact: `num_rational::BigRational` scalars, `BigInt`
//!   polynomial coefficients, cyclotomic field elements for matrix entries.
//! * Rational numbers serialize as strings `"p/q"` in lowest terms.
//! * Collections that reach output are ordered (`BTreeMap`/sorted `Vec`) so
//!   that results are byte-for-byte reproducible.

pub mod auditor;
pub mod circle_quotient;
pub mod cli;
pub mod exactalg;
pub mod u2_catalog;

/// Version tag for every serialized report produced by this crate.
pub const SCHEMA_VERSION: &str = "1.0.0";
