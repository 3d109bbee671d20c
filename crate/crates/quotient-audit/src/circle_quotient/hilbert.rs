//! Hilbert series of the invariant algebra, off and on shell.
//!
//! The real invariants of the weighted circle action form a graded algebra;
//! restricting to the zero level of the moment map divides the off-shell
//! series by exactly one quadratic relation, so
//! `on(x) = (1 − x²) · off(x)`.
//!
//! The rational form is computed without any floating point or guesswork.
//! The invariant monomials are the lattice points of a rational polyhedral
//! cone; its extreme rays are the n "radius" monomials `z_iz̄_i` of degree 2
//! and, for every index pair, two monomials of degree
//! `N_ij = (α_i + α_j)/gcd(α_i, α_j)`.  A triangulation argument then shows
//! that the product of `(1 − x^{deg r})` over all extreme rays is a valid
//! denominator and simultaneously bounds the numerator degree, so
//! multiplying the counted series by that product must leave a polynomial —
//! a fact the code verifies coefficient by coefficient rather than assumes.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use super::counting::{invariant_monomial_counts, CountingError};
use super::{GammaData, GammaSource, WeightVector};
use crate::exactalg::{
    reconstruct_rational, IntPoly, PowerSeries, Q, RatFunError, RationalFunction,
};

/// Extra coefficients computed beyond the provable numerator degree; the
/// product series must vanish on all of them before the rational form is
/// accepted.
const TAIL_MARGIN: usize = 16;

/// Errors from the Hilbert-series routines.
#[derive(Debug, Error)]
pub enum HilbertError {
    /// No weights at all (e.g. a trivial representation after stripping).
    #[error("empty weight vector: the trivial action has no Hilbert data to audit")]
    EmptyWeightVector,
    /// A zero weight survived; callers must normalize first.
    #[error("zero weight present: normalize the vector before computing series")]
    ZeroWeightPresent,
    /// All weights share one sign: the zero level is the origin, the
    /// on-shell algebra is ℝ, and no rational series is produced.
    #[error("all weights share one sign: the reduced space is a point")]
    SingleSign,
    /// The underlying monomial count failed.
    #[error(transparent)]
    Counting(#[from] CountingError),
    /// Rational-function canonicalization failed.
    #[error(transparent)]
    RatFun(#[from] RatFunError),
    /// Both the cone denominator and the generic reconstruction ladder
    /// failed — this indicates a bug, not a feature of the input.
    #[error("rational reconstruction failed up to denominator bound {final_bound}: {detail}")]
    ReconstructionFailed { detail: String, final_bound: usize },
    /// The computed series does not have the pole order `2n − 2` every
    /// genuine reduced space of n weights must show at `x = 1`.
    #[error("pole order at x = 1 is {actual}, expected {expected}")]
    PoleOrderMismatch { expected: usize, actual: usize },
    /// The closed formulas take exactly three weights.
    #[error("closed-form coefficients need exactly 3 weights, found {found}")]
    NotThreeWeights { found: usize },
    /// The closed formulas assume the weights are collectively coprime.
    #[error("weights share the common factor {gcd}; divide it out first")]
    CommonFactor { gcd: u64 },
    /// The caller passed a vector that violates the normalized-form
    /// contract (zeros, common factor, or sign convention).
    #[error("weight vector {weights} is not in normalized form")]
    NotNormalized { weights: String },
}

// ---------------------------------------------------------------------------
// Truncated series
// ---------------------------------------------------------------------------

fn validate_weights(weight_vector: &WeightVector) -> Result<(), HilbertError> {
    if weight_vector.is_empty() {
        return Err(HilbertError::EmptyWeightVector);
    }
    if weight_vector.zero_count() > 0 {
        return Err(HilbertError::ZeroWeightPresent);
    }
    Ok(())
}

/// Truncated Hilbert series of the full invariant algebra (no shell
/// condition): coefficient `k` counts invariant monomials of degree `k`.
pub fn hilb_off_series(
    weight_vector: &WeightVector,
    max_degree: usize,
) -> Result<PowerSeries, HilbertError> {
    validate_weights(weight_vector)?;
    let counts = invariant_monomial_counts(weight_vector.weights(), max_degree)?;
    Ok(PowerSeries::from_counts(&counts))
}

/// Truncated Hilbert series of the on-shell algebra.
///
/// With both signs present this is `(1 − x²) · off(x)` — the moment map cuts
/// out one quadratic relation.  With a single sign the zero level is the
/// origin, the algebra is the constants, and the series is identically 1.
pub fn hilb_on_series(
    weight_vector: &WeightVector,
    max_degree: usize,
) -> Result<PowerSeries, HilbertError> {
    validate_weights(weight_vector)?;
    if !weight_vector.has_both_signs() {
        let mut counts = vec![0u64; max_degree + 1];
        counts[0] = 1;
        return Ok(PowerSeries::from_counts(&counts));
    }
    let off = hilb_off_series(weight_vector, max_degree)?;
    Ok(off.mul_poly(&IntPoly::one_minus_x_pow(2)))
}

// ---------------------------------------------------------------------------
// Rational form
// ---------------------------------------------------------------------------

/// Denominator factor multiset `Π (1 − x^a)^m` read off the cone's extreme
/// rays: `(2, n)` for the radius monomials plus `(N_ij, 2)` for every index
/// pair, merged by exponent.
fn extreme_ray_factors(weight_vector: &WeightVector) -> Vec<(usize, usize)> {
    let n = weight_vector.len();
    let mut merged: BTreeMap<usize, usize> = BTreeMap::new();
    *merged.entry(2).or_insert(0) += n;
    for i in 0..n {
        for j in i + 1..n {
            let order = weight_vector.pair_cyclic_order(i, j) as usize;
            *merged.entry(order).or_insert(0) += 2;
        }
    }
    merged.into_iter().collect()
}

/// Integer on-shell coefficients `on_k = c_k − c_{k−2}` from off-shell
/// counts.
fn on_shell_integer_series(counts: &[u64]) -> Vec<BigInt> {
    (0..counts.len())
        .map(|k| {
            let mut v = BigInt::from(counts[k]);
            if k >= 2 {
                v -= BigInt::from(counts[k - 2]);
            }
            v
        })
        .collect()
}

fn expand_factors(factors: &[(usize, usize)]) -> IntPoly {
    let mut p = IntPoly::one();
    for &(a, m) in factors {
        let base = IntPoly::one_minus_x_pow(a);
        for _ in 0..m {
            p = p.mul(&base);
        }
    }
    p
}

fn check_pole_order(
    f: &RationalFunction,
    expected: usize,
) -> Result<(), HilbertError> {
    // The canonical form shares no factor between numerator and denominator,
    // so the pole order at 1 is the denominator's order of vanishing there.
    let actual = f
        .denominator()
        .order_at_one()
        .expect("canonical denominator is nonzero");
    if actual != expected {
        return Err(HilbertError::PoleOrderMismatch { expected, actual });
    }
    Ok(())
}

/// Exact rational form of the on-shell Hilbert series.
///
/// Requires weights of both signs (after normalization).  The result is
/// canonical: coprime numerator and denominator, denominator with positive
/// leading coefficient, and a verified pole of order `2n − 2` at `x = 1`.
pub fn hilb_on_rational(
    weight_vector: &WeightVector,
) -> Result<RationalFunction, HilbertError> {
    validate_weights(weight_vector)?;
    if !weight_vector.has_both_signs() {
        return Err(HilbertError::SingleSign);
    }
    let n = weight_vector.len();
    let expected_pole = 2 * n - 2;

    let factors = extreme_ray_factors(weight_vector);
    let ansatz_degree: usize = factors.iter().map(|&(a, m)| a * m).sum();
    let d_max = ansatz_degree + TAIL_MARGIN;

    let counts = invariant_monomial_counts(weight_vector.weights(), d_max)?;
    let on = on_shell_integer_series(&counts);
    let den = expand_factors(&factors);

    // t = (on-shell series) · Π (1 − x^a)^m, which the triangulation bound
    // forces to be a polynomial of degree ≤ ansatz_degree.  Verify the
    // margin coefficients instead of trusting the bound.
    let den_coeffs = den.coeffs();
    let mut t = vec![BigInt::zero(); d_max + 1];
    for (j, dj) in den_coeffs.iter().enumerate() {
        if dj.is_zero() {
            continue;
        }
        for k in j..=d_max {
            t[k] += dj * &on[k - j];
        }
    }
    if t[ansatz_degree + 1..].iter().all(Zero::is_zero) {
        let num = IntPoly::from_coeffs(t[..=ansatz_degree].to_vec());
        let f = RationalFunction::from_cyclotomic_denominator(num, &factors)?;
        check_pole_order(&f, expected_pole)?;
        return Ok(f);
    }

    // The cone denominator failed — a bug guard, not an expected path.
    // Fall back to generic reconstruction with escalating degree bounds.
    let mut bound = ansatz_degree.max(1);
    let cap = 4 * bound;
    loop {
        let needed = 3 * bound;
        let counts = invariant_monomial_counts(weight_vector.weights(), needed)?;
        let on = on_shell_integer_series(&counts);
        let series =
            PowerSeries::from_coeffs(on.iter().map(|c| Q::from(c.clone())).collect());
        match reconstruct_rational(&series, bound, bound) {
            Ok(f) => {
                check_pole_order(&f, expected_pole)?;
                return Ok(f);
            }
            Err(err) => {
                if bound >= cap {
                    return Err(HilbertError::ReconstructionFailed {
                        detail: err.to_string(),
                        final_bound: bound,
                    });
                }
                bound = (bound * 2).min(cap);
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Laurent coefficients
// ---------------------------------------------------------------------------

/// Extracts `γ₀ … γ₃` at `x = 1` from a rational on-shell series.
pub fn gamma_from_rational(f: &RationalFunction) -> GammaData {
    let laurent = f.laurent_at_one(3);
    GammaData {
        gamma0: laurent.gamma(0).clone(),
        gamma1: laurent.gamma(1).clone(),
        gamma2: laurent.gamma(2).clone(),
        gamma3: laurent.gamma(3).clone(),
        source: GammaSource::LaurentExtraction,
    }
}

/// Closed-form `γ₀ … γ₃` for three coprime weights, in the elementary
/// symmetric values `e₁, e₂, e₃` of the absolute weights and the pairwise
/// gcds `g_ij`:
///
/// ```text
/// γ₀ = e₂ / (e₁e₂ − e₃)            γ₁ = 0
/// γ₂ = γ₃ = [ −2e₂ + e₂(g₁₂² + g₁₃² + g₂₃²)
///             + g₁₂²α₃² + g₁₃²α₂² + g₂₃²α₁² ] / (12(e₁e₂ − e₃))
/// ```
///
/// Valid for any signs and also in the degenerate (repeated-α) case; only
/// the count of weights and overall coprimality are required.
pub fn gamma_closed_form_n3(
    weight_vector: &WeightVector,
) -> Result<GammaData, HilbertError> {
    validate_weights(weight_vector)?;
    if weight_vector.len() != 3 {
        return Err(HilbertError::NotThreeWeights {
            found: weight_vector.len(),
        });
    }
    let g = weight_vector.gcd_all();
    if g != 1 {
        return Err(HilbertError::CommonFactor { gcd: g });
    }
    let alphas = weight_vector.alphas();
    let (a1, a2, a3) = (
        BigInt::from(alphas[0]),
        BigInt::from(alphas[1]),
        BigInt::from(alphas[2]),
    );
    let e1 = &a1 + &a2 + &a3;
    let e2 = &a1 * &a2 + &a1 * &a3 + &a2 * &a3;
    let e3 = &a1 * &a2 * &a3;
    let denom = &e1 * &e2 - &e3;

    let g12 = BigInt::from(weight_vector.pair_gcd(0, 1));
    let g13 = BigInt::from(weight_vector.pair_gcd(0, 2));
    let g23 = BigInt::from(weight_vector.pair_gcd(1, 2));
    let bracket = -BigInt::from(2) * &e2
        + &e2 * (&g12 * &g12 + &g13 * &g13 + &g23 * &g23)
        + &g12 * &g12 * &a3 * &a3
        + &g13 * &g13 * &a2 * &a2
        + &g23 * &g23 * &a1 * &a1;

    let gamma0 = Q::new(e2, denom.clone());
    let gamma2 = Q::new(bracket, BigInt::from(12) * denom);
    Ok(GammaData {
        gamma0,
        gamma1: Q::from(BigInt::zero()),
        gamma2: gamma2.clone(),
        gamma3: gamma2,
        source: GammaSource::ClosedFormN3,
    })
}
