//! Arithmetic screening predicates.
//!
//! Each predicate states a property every quotient matching some finite
//! unitary quotient must satisfy.  Four of them are exclusionary — a single
//! failure ends the audit with a certificate quoting the failed condition —
//! and two (`ratio_ok`, `quadratic_count_ok`) are recomputed sanity checks
//! recorded alongside.  Every outcome carries its evidence: a failure names
//! the violated fact with the exact numbers involved, never just a boolean.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::hilbert::{gamma_closed_form_n3, gamma_from_rational, hilb_on_rational, HilbertError};
use super::{invariant_monomial_counts, GammaData, WeightVector};
use crate::exactalg::Q;

/// Result of evaluating one predicate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum PredicateOutcome {
    /// The condition is satisfied.
    Holds,
    /// The condition is violated; `reason` states the violated fact with
    /// concrete numbers.
    Fails { reason: String },
    /// The condition does not apply to this vector (wrong length or sign
    /// pattern); it neither passes nor excludes.
    NotApplicable,
}

impl PredicateOutcome {
    /// `true` only for [`PredicateOutcome::Holds`].
    pub fn holds(&self) -> bool {
        matches!(self, PredicateOutcome::Holds)
    }

    /// `true` only for [`PredicateOutcome::Fails`].
    pub fn excludes(&self) -> bool {
        matches!(self, PredicateOutcome::Fails { .. })
    }

    /// The failure reason, when there is one.
    pub fn reason(&self) -> Option<&str> {
        match self {
            PredicateOutcome::Fails { reason } => Some(reason),
            _ => None,
        }
    }
}

/// All predicate outcomes for one weight vector, in audit order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredicateReport {
    /// The reduced space is a rational homology manifold: fails exactly
    /// when at least two positive and at least two negative weights occur.
    pub rhm: PredicateOutcome,
    /// Three-weight vectors only: the absolute weights are pairwise
    /// distinct.
    pub nondegenerate: PredicateOutcome,
    /// `1/γ₀` is a positive integer — the only possible order of a matching
    /// finite group.
    pub diophantine: PredicateOutcome,
    /// Some order of removing the positive weights one at a time keeps the
    /// isotropy gcd of the remaining weights strictly increasing, providing
    /// the nested chain of codimension-one strata a graded-regular model
    /// requires.
    pub codim1_chain: PredicateOutcome,
    /// Three-weight vectors only: `γ₀/γ₂` avoids the values (1, 2, and
    /// everything ≥ 3) that no compatible finite subgroup of U(2) attains.
    pub ratio_ok: PredicateOutcome,
    /// Three-weight vectors only: the on-shell algebra has exactly two
    /// independent invariant quadratics (recomputed from the counts, not
    /// assumed).
    pub quadratic_count_ok: PredicateOutcome,
}

impl PredicateReport {
    /// The first failed *exclusionary* predicate in audit order
    /// (`rhm`, `nondegenerate`, `diophantine`, `codim1_chain`), as
    /// `(name, reason)`.
    pub fn first_exclusion(&self) -> Option<(&'static str, &str)> {
        [
            ("rhm", &self.rhm),
            ("nondegenerate", &self.nondegenerate),
            ("diophantine", &self.diophantine),
            ("codim1_chain", &self.codim1_chain),
        ]
        .into_iter()
        .find_map(|(name, outcome)| outcome.reason().map(|r| (name, r)))
    }

    /// `true` when no exclusionary predicate fails.
    pub fn passes_exclusionary(&self) -> bool {
        self.first_exclusion().is_none()
    }
}

/// Evaluates all predicates for a normalized weight vector.
pub fn predicates(weight_vector: &WeightVector) -> Result<PredicateReport, HilbertError> {
    if !weight_vector.is_normalized() {
        return Err(HilbertError::NotNormalized {
            weights: weight_vector.to_string(),
        });
    }
    let n = weight_vector.len();
    let both_signs = weight_vector.has_both_signs();

    // γ data is shared by `diophantine` and `ratio_ok`; computed once.
    let gammas: Option<GammaData> = if !both_signs {
        None
    } else if n == 3 {
        Some(gamma_closed_form_n3(weight_vector)?)
    } else {
        Some(gamma_from_rational(&hilb_on_rational(weight_vector)?))
    };

    Ok(PredicateReport {
        rhm: rhm_outcome(weight_vector),
        nondegenerate: nondegenerate_outcome(weight_vector),
        diophantine: diophantine_outcome(gammas.as_ref()),
        codim1_chain: codim1_chain_outcome(weight_vector),
        ratio_ok: ratio_outcome(weight_vector, gammas.as_ref()),
        quadratic_count_ok: quadratic_count_outcome(weight_vector)?,
    })
}

fn rhm_outcome(weight_vector: &WeightVector) -> PredicateOutcome {
    let pos = weight_vector.positive_count();
    let neg = weight_vector.negative_count();
    if pos >= 2 && neg >= 2 {
        PredicateOutcome::Fails {
            reason: format!(
                "{pos} positive and {neg} negative weights: the link of the singularity is not \
                 a rational homology sphere, while every finite unitary quotient's is"
            ),
        }
    } else {
        PredicateOutcome::Holds
    }
}

fn nondegenerate_outcome(weight_vector: &WeightVector) -> PredicateOutcome {
    if weight_vector.len() != 3 {
        return PredicateOutcome::NotApplicable;
    }
    let alphas = weight_vector.alphas();
    for i in 0..3 {
        for j in i + 1..3 {
            if alphas[i] == alphas[j] {
                return PredicateOutcome::Fails {
                    reason: format!(
                        "|a_{}| = |a_{}| = {}: repeated absolute weights are excluded \
                         unconditionally",
                        i + 1,
                        j + 1,
                        alphas[i]
                    ),
                };
            }
        }
    }
    PredicateOutcome::Holds
}

fn diophantine_outcome(gammas: Option<&GammaData>) -> PredicateOutcome {
    let Some(gammas) = gammas else {
        return PredicateOutcome::NotApplicable;
    };
    if gammas.candidate_group_order().is_some() {
        PredicateOutcome::Holds
    } else {
        let recip = gammas.gamma0_reciprocal();
        PredicateOutcome::Fails {
            reason: format!(
                "1/gamma0 = {recip} is not a positive integer, but a finite quotient by a group \
                 Gamma has gamma0 = 1/|Gamma|"
            ),
        }
    }
}

fn codim1_chain_outcome(weight_vector: &WeightVector) -> PredicateOutcome {
    if !weight_vector.has_both_signs() || weight_vector.negative_count() != 1 {
        return PredicateOutcome::NotApplicable;
    }
    let weights = weight_vector.weights();
    let positives: Vec<u64> = weights[1..].iter().map(|a| a.unsigned_abs()).collect();
    let negative = weights[0].unsigned_abs();
    if chain_exists(negative, &positives, weight_vector.gcd_all()) {
        PredicateOutcome::Holds
    } else {
        PredicateOutcome::Fails {
            reason: "no removal order of the positive weights makes the isotropy gcd strictly \
                     increase at every step, so the codimension-one strata cannot form the \
                     nested chain a graded-regular model requires"
                .to_string(),
        }
    }
}

/// Depth-first search for an order of removing positives (down to one
/// remaining) along which the gcd of the kept weights strictly grows.
fn chain_exists(negative: u64, positives: &[u64], current_gcd: u64) -> bool {
    use num_integer::Integer;
    if positives.len() <= 1 {
        return true;
    }
    for skip in 0..positives.len() {
        let mut kept: Vec<u64> = Vec::with_capacity(positives.len() - 1);
        kept.extend(positives.iter().take(skip));
        kept.extend(positives.iter().skip(skip + 1));
        let g = kept.iter().fold(negative, |acc, &a| acc.gcd(&a));
        if g > current_gcd && chain_exists(negative, &kept, g) {
            return true;
        }
    }
    false
}

fn ratio_outcome(
    weight_vector: &WeightVector,
    gammas: Option<&GammaData>,
) -> PredicateOutcome {
    if weight_vector.len() != 3 {
        return PredicateOutcome::NotApplicable;
    }
    let Some(gammas) = gammas else {
        return PredicateOutcome::NotApplicable;
    };
    let ratio: Q = &gammas.gamma0 / &gammas.gamma2;
    let one = Q::from(BigInt::from(1));
    let two = Q::from(BigInt::from(2));
    let three = Q::from(BigInt::from(3));
    if ratio == one || ratio == two || ratio >= three {
        PredicateOutcome::Fails {
            reason: format!(
                "gamma0/gamma2 = {ratio} lies in the excluded set {{1}} ∪ {{2}} ∪ [3, ∞): no \
                 finite subgroup of U(2) compatible with the other audit constraints attains it"
            ),
        }
    } else {
        PredicateOutcome::Holds
    }
}

fn quadratic_count_outcome(
    weight_vector: &WeightVector,
) -> Result<PredicateOutcome, HilbertError> {
    if weight_vector.len() != 3 || !weight_vector.has_both_signs() {
        return Ok(PredicateOutcome::NotApplicable);
    }
    let counts = invariant_monomial_counts(weight_vector.weights(), 2)?;
    let quadratics = counts[2] - counts[0]; // on-shell: c₂ − c₀
    Ok(if quadratics == 2 {
        PredicateOutcome::Holds
    } else {
        PredicateOutcome::Fails {
            reason: format!(
                "the on-shell quadratic component has dimension {quadratics}, but a matching \
                 finite quotient of ℂ² must have exactly 2 independent invariant quadratics"
            ),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wv(weights: &[i64]) -> WeightVector {
        WeightVector::new(weights.to_vec())
    }

    #[test]
    fn minus6_10_15_passes_everything() {
        let report = predicates(&wv(&[-6, 10, 15])).unwrap();
        assert!(report.rhm.holds());
        assert!(report.nondegenerate.holds());
        assert!(report.diophantine.holds(), "1/gamma0 = 28");
        assert!(report.codim1_chain.holds(), "drop 10: gcd(6,15) = 3 > 1");
        assert!(report.ratio_ok.holds(), "ratio 4/15 avoids 1, 2, and [3, inf)");
        assert!(report.quadratic_count_ok.holds());
        assert!(report.passes_exclusionary());
        assert_eq!(report.first_exclusion(), None);
    }

    #[test]
    fn minus1_2_3_fails_diophantine_first() {
        let report = predicates(&wv(&[-1, 2, 3])).unwrap();
        assert!(report.rhm.holds());
        assert!(report.nondegenerate.holds());
        assert!(report.diophantine.excludes());
        assert!(report.codim1_chain.excludes(), "gcds with 1 are all 1");
        let (name, reason) = report.first_exclusion().unwrap();
        assert_eq!(name, "diophantine", "audit order puts diophantine before the chain");
        assert!(reason.contains("60/11"), "reason carries the exact value: {reason}");
    }

    #[test]
    fn minus3_6_12_4_fails_only_the_chain() {
        let report = predicates(&wv(&[-3, 6, 12, 4])).unwrap();
        assert!(report.rhm.holds());
        assert_eq!(report.nondegenerate, PredicateOutcome::NotApplicable);
        assert!(report.diophantine.holds(), "1/gamma0 = 21");
        assert!(report.codim1_chain.excludes());
        assert_eq!(report.ratio_ok, PredicateOutcome::NotApplicable);
        let (name, _) = report.first_exclusion().unwrap();
        assert_eq!(name, "codim1_chain");
    }

    #[test]
    fn rhm_fails_with_two_weights_of_each_sign() {
        let report = predicates(&wv(&[-1, -3, 2, 5])).unwrap();
        assert!(report.rhm.excludes());
        assert_eq!(report.first_exclusion().unwrap().0, "rhm");
        assert_eq!(
            report.codim1_chain,
            PredicateOutcome::NotApplicable,
            "the chain convention needs a unique negative weight"
        );
    }

    #[test]
    fn degenerate_triple_reported_before_arithmetic() {
        let report = predicates(&wv(&[-1, 1, 2])).unwrap();
        assert!(report.nondegenerate.excludes());
        assert_eq!(report.first_exclusion().unwrap().0, "nondegenerate");
    }

    #[test]
    fn single_sign_rows_are_not_applicable() {
        let report = predicates(&wv(&[1, 2, 3])).unwrap();
        assert!(report.rhm.holds());
        assert_eq!(report.diophantine, PredicateOutcome::NotApplicable);
        assert_eq!(report.codim1_chain, PredicateOutcome::NotApplicable);
        assert_eq!(report.ratio_ok, PredicateOutcome::NotApplicable);
        assert_eq!(report.quadratic_count_ok, PredicateOutcome::NotApplicable);
    }

    #[test]
    fn unnormalized_input_is_rejected() {
        assert!(matches!(
            predicates(&wv(&[2, -4, 6])),
            Err(HilbertError::NotNormalized { .. })
        ));
    }

    #[test]
    fn two_weight_chain_is_vacuous() {
        let report = predicates(&wv(&[-1, 1])).unwrap();
        assert!(report.codim1_chain.holds());
        assert!(report.diophantine.holds(), "1/gamma0 = 2 for the A1 cone");
    }

    #[test]
    fn positive_triple_without_negative_keeps_nondegenerate_active() {
        // The sign-free predicates still run on single-sign triples.
        let report = predicates(&wv(&[1, 2, 2])).unwrap();
        assert!(report.nondegenerate.excludes());
    }
}
