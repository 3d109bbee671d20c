//! Weight vectors for circle actions and everything derived from them.
//!
//! A weight vector `A = (a₁, …, a_n)` lists the integer weights of a linear
//! circle action on ℂⁿ.  This module provides:
//!
//! * [`normalize`] — the reduction to the canonical form every other routine
//!   expects: zero weights stripped, common gcd divided out, and when one
//!   sign class is a singleton, that weight moved first and made negative;
//! * [`shell_support`] — the coordinates forced to vanish on the zero level
//!   of the moment map;
//! * [`orbit_type_lattice`] — the nontrivial-isotropy strata meeting the
//!   shell (see [`orbit_types`]);
//! * [`count_invariant_monomials`], [`hilb_off_series`], [`hilb_on_series`],
//!   [`hilb_on_rational`] — exact Hilbert series of the invariant algebra,
//!   off and on shell, as truncated series and as a canonical rational
//!   function (see [`counting`] and [`hilbert`]);
//! * [`gamma_closed_form_n3`] and Laurent-extraction of the γ coefficients
//!   that drive the audit;
//! * [`predicates`] — the arithmetic screening conditions a quotient must
//!   pass before any group comparison is worth running.

pub mod counting;
pub mod hilbert;
pub mod orbit_types;
pub mod predicates;

pub use counting::{count_invariant_monomials, invariant_monomial_counts, CountingError};
pub use hilbert::{
    gamma_closed_form_n3, gamma_from_rational, hilb_off_series, hilb_on_rational,
    hilb_on_series, HilbertError,
};
pub use orbit_types::{orbit_type_lattice, shell_support, OrbitTypeLattice, OrbitTypeNode};
pub use predicates::{predicates, PredicateOutcome, PredicateReport};

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::exactalg::Q;

// ---------------------------------------------------------------------------
// Weight vectors
// ---------------------------------------------------------------------------

/// An ordered list of integer weights for a linear circle action.
///
/// The struct stores only the weights; derived quantities (absolute values,
/// pairwise gcds, elementary symmetric values) are recomputed on demand so
/// they can never drift out of sync.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightVector {
    weights: Vec<i64>,
}

impl WeightVector {
    /// Wraps a raw weight list (no normalization applied).
    pub fn new(weights: Vec<i64>) -> Self {
        WeightVector { weights }
    }

    /// The weights in order.
    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    /// Number of weights.
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    /// `true` when there are no weights at all.
    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Absolute values α_i.
    pub fn alphas(&self) -> Vec<u64> {
        self.weights.iter().map(|&a| a.unsigned_abs()).collect()
    }

    /// Count of negative weights.
    pub fn negative_count(&self) -> usize {
        self.weights.iter().filter(|&&a| a < 0).count()
    }

    /// Count of positive weights.
    pub fn positive_count(&self) -> usize {
        self.weights.iter().filter(|&&a| a > 0).count()
    }

    /// Count of zero weights.
    pub fn zero_count(&self) -> usize {
        self.weights.iter().filter(|&&a| a == 0).count()
    }

    /// `true` when both a positive and a negative weight occur.
    pub fn has_both_signs(&self) -> bool {
        self.negative_count() > 0 && self.positive_count() > 0
    }

    /// gcd of the absolute values of all nonzero weights (0 when none).
    pub fn gcd_all(&self) -> u64 {
        self.alphas().iter().fold(0u64, |g, &a| g.gcd(&a))
    }

    /// gcd of `α_i` and `α_j` (0-based indices).
    pub fn pair_gcd(&self, i: usize, j: usize) -> u64 {
        let alphas = self.alphas();
        alphas[i].gcd(&alphas[j])
    }

    /// `N_ij = (α_i + α_j) / gcd(α_i, α_j)`, the cyclic order attached to
    /// the pair `(i, j)`.
    pub fn pair_cyclic_order(&self, i: usize, j: usize) -> u64 {
        let alphas = self.alphas();
        (alphas[i] + alphas[j]) / alphas[i].gcd(&alphas[j])
    }

    /// Elementary symmetric values `(e₁, e₂, e₃)` of the α's; only defined
    /// for exactly three weights.
    pub fn elementary_symmetric_n3(&self) -> Option<(u64, u64, u64)> {
        let alphas = self.alphas();
        if alphas.len() != 3 {
            return None;
        }
        let (a, b, c) = (alphas[0], alphas[1], alphas[2]);
        Some((a + b + c, a * b + a * c + b * c, a * b * c))
    }

    /// Whether the vector satisfies the normalized-form contract: no zero
    /// weights, gcd 1, and the singleton-sign-class convention (a unique
    /// negative weight sits first; a unique positive weight among several
    /// negatives would have been sign-flipped into that position).
    pub fn is_normalized(&self) -> bool {
        if self.is_empty() || self.zero_count() > 0 || self.gcd_all() != 1 {
            return false;
        }
        let neg = self.negative_count();
        let pos = self.positive_count();
        if neg == 1 {
            return self.weights[0] < 0;
        }
        if pos == 1 && neg >= 2 {
            // A lone positive among negatives should have been flipped.
            return false;
        }
        true
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.weights.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

// ---------------------------------------------------------------------------
// Normalization
// ---------------------------------------------------------------------------

/// Record of what [`normalize`] did, for reports and round-trip checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalizationLog {
    /// The weights as given.
    pub original: Vec<i64>,
    /// 1-based positions (in the original vector) of stripped zero weights.
    pub stripped_zero_positions: Vec<usize>,
    /// The common gcd divided out (1 when nothing was divided).
    pub divided_by: u64,
    /// Whether the whole vector was multiplied by −1.
    pub sign_flipped: bool,
    /// Whether weights were reordered to put the lone-sign weight first.
    pub reordered: bool,
    /// All weights were zero: the action is trivial and the quotient is the
    /// full vector space, so the audit does not apply.
    pub trivial_representation: bool,
    /// Human-readable event descriptions in the order they happened.
    pub events: Vec<String>,
}

/// Brings a weight vector into the canonical form the audit expects.
///
/// Steps, in order: strip zero weights; divide by the common gcd; if exactly
/// one weight's sign differs from all others, multiply through by −1 if
/// needed to make that lone weight negative and move it to the front
/// (preserving the relative order of the rest).  Every action is logged.
pub fn normalize(input: &[i64]) -> (WeightVector, NormalizationLog) {
    let mut log = NormalizationLog {
        original: input.to_vec(),
        stripped_zero_positions: Vec::new(),
        divided_by: 1,
        sign_flipped: false,
        reordered: false,
        trivial_representation: false,
        events: Vec::new(),
    };

    let mut weights: Vec<i64> = Vec::with_capacity(input.len());
    for (pos, &a) in input.iter().enumerate() {
        if a == 0 {
            log.stripped_zero_positions.push(pos + 1);
        } else {
            weights.push(a);
        }
    }
    if !log.stripped_zero_positions.is_empty() {
        log.events.push(format!(
            "stripped zero weights at positions {:?} (they contribute an untouched factor to the quotient)",
            log.stripped_zero_positions
        ));
    }
    if weights.is_empty() {
        log.trivial_representation = true;
        log.events
            .push("all weights are zero: trivial action, audit not applicable".to_string());
        return (WeightVector::new(weights), log);
    }

    let g = weights
        .iter()
        .fold(0u64, |g, &a| g.gcd(&a.unsigned_abs()));
    if g > 1 {
        for a in weights.iter_mut() {
            *a /= g as i64;
        }
        log.divided_by = g;
        log.events.push(format!("divided by {g}"));
    }

    let neg = weights.iter().filter(|&&a| a < 0).count();
    let pos = weights.iter().filter(|&&a| a > 0).count();
    if pos == 1 && neg >= 2 {
        // The lone-sign weight is positive: flip the whole vector so that
        // the convention "unique negative first" can apply.
        for a in weights.iter_mut() {
            *a = -*a;
        }
        log.sign_flipped = true;
        log.events.push("multiplied by -1".to_string());
    }
    let neg = weights.iter().filter(|&&a| a < 0).count();
    if neg == 1 && weights[0] >= 0 {
        let idx = weights.iter().position(|&a| a < 0).unwrap();
        let negative = weights.remove(idx);
        weights.insert(0, negative);
        log.reordered = true;
        log.events
            .push("moved the unique negative weight to the front".to_string());
    }

    (WeightVector::new(weights), log)
}

// ---------------------------------------------------------------------------
// Laurent coefficient bundles
// ---------------------------------------------------------------------------

/// Where a [`GammaData`] came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GammaSource {
    /// The three-weight closed formulas in the elementary symmetric values.
    ClosedFormN3,
    /// Extraction from the exact rational Hilbert series at `x = 1`.
    LaurentExtraction,
}

impl fmt::Display for GammaSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GammaSource::ClosedFormN3 => write!(f, "closed-form-n3"),
            GammaSource::LaurentExtraction => write!(f, "laurent-extraction"),
        }
    }
}

/// The first four Laurent coefficients of an on-shell Hilbert series at
/// `x = 1`.  For every admissible quotient `γ₁ = 0` and `γ₂ = γ₃ > 0`; both
/// facts are recomputed, not assumed, wherever this struct is produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaData {
    pub gamma0: Q,
    pub gamma1: Q,
    pub gamma2: Q,
    pub gamma3: Q,
    pub source: GammaSource,
}

impl GammaData {
    /// `1/γ₀` as an exact rational.
    pub fn gamma0_reciprocal(&self) -> Q {
        Q::new(
            self.gamma0.denom().clone(),
            self.gamma0.numer().clone(),
        )
    }

    /// `1/γ₀` when it is a (positive) integer — the candidate group order.
    pub fn candidate_group_order(&self) -> Option<BigInt> {
        let r = self.gamma0_reciprocal();
        if r.is_integer() && r.numer() > &BigInt::from(0) {
            Some(r.to_integer())
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalize_divides_and_reorders() {
        let (w, log) = normalize(&[2, -4, 6]);
        assert_eq!(w.weights(), &[-2, 1, 3]);
        assert_eq!(log.divided_by, 2);
        assert!(log.reordered);
        assert!(!log.sign_flipped);
        assert!(w.is_normalized());
    }

    #[test]
    fn normalize_leaves_normalized_vectors_alone() {
        let (w, log) = normalize(&[-3, 6, 12, 4]);
        assert_eq!(w.weights(), &[-3, 6, 12, 4]);
        assert_eq!(log.divided_by, 1);
        assert!(!log.reordered && !log.sign_flipped);
        assert!(log.events.is_empty());
        assert!(w.is_normalized());
    }

    #[test]
    fn normalize_strips_zeros() {
        let (w, log) = normalize(&[-1, 1, 0]);
        assert_eq!(w.weights(), &[-1, 1]);
        assert_eq!(log.stripped_zero_positions, vec![3]);
        assert!(w.is_normalized());
    }

    #[test]
    fn normalize_flips_a_lone_positive() {
        let (w, log) = normalize(&[-4, 3, -6]);
        assert_eq!(w.weights(), &[-3, 4, 6], "flip then move the new negative first");
        assert!(log.sign_flipped);
        assert!(log.reordered);
        assert!(w.is_normalized());
    }

    #[test]
    fn normalize_orders_two_weights_negative_first() {
        let (w, _) = normalize(&[3, -5]);
        assert_eq!(w.weights(), &[-5, 3]);
        let (w2, log2) = normalize(&[-1, 1]);
        assert_eq!(w2.weights(), &[-1, 1]);
        assert!(!log2.reordered);
    }

    #[test]
    fn normalize_flags_trivial_representation() {
        let (w, log) = normalize(&[0, 0]);
        assert!(w.is_empty());
        assert!(log.trivial_representation);
    }

    #[test]
    fn normalize_keeps_positive_relative_order() {
        let (w, _) = normalize(&[6, 12, -3, 4]);
        assert_eq!(
            w.weights(),
            &[-3, 6, 12, 4],
            "positives keep their relative order; they are never sorted"
        );
    }

    #[test]
    fn derived_quantities() {
        let w = WeightVector::new(vec![-6, 10, 15]);
        assert_eq!(w.alphas(), vec![6, 10, 15]);
        assert_eq!(w.elementary_symmetric_n3(), Some((31, 300, 900)));
        assert_eq!(w.pair_gcd(0, 1), 2);
        assert_eq!(w.pair_gcd(0, 2), 3);
        assert_eq!(w.pair_gcd(1, 2), 5);
        assert_eq!(w.pair_cyclic_order(0, 1), 8);
        assert!(w.has_both_signs());
        assert!(w.is_normalized());
        assert!(!WeightVector::new(vec![2, -4, 6]).is_normalized());
        assert!(!WeightVector::new(vec![1, -2, -3]).is_normalized());
    }

    #[test]
    fn display_matches_input_syntax() {
        assert_eq!(WeightVector::new(vec![-3, 6, 12, 4]).to_string(), "(-3,6,12,4)");
    }
}
