//! End-to-end audit: can the symplectic quotient of a one-negative-weight
//! circle representation be graded-regularly equivalent to some finite
//! unitary quotient of ℂ^{n−1}?
//!
//! The pipeline normalizes the input, routes the small cases (no weights,
//! one sign, two weights), evaluates the exclusionary predicates, descends
//! along codimension-one strata until three weights remain, and then — for
//! vectors that survive every necessary condition — enumerates all catalog
//! groups whose order matches `1/γ₀` and excludes each with an explicit,
//! independently re-checkable certificate:
//!
//! 1. the group has no pseudoreflection while the weight side demands one;
//! 2. the group's quadratic invariant dimension differs from the weight
//!    side's;
//! 3. the Laurent coefficients `γ₂` disagree;
//! 4. for abelian diagonal candidates, the stratum data forces
//!    non-integral or mismatched pseudoreflection orders;
//! 5. decisive fallback: the two exact Hilbert series differ at a specific
//!    coefficient.
//!
//! A candidate surviving all five would be a counterexample; the verdict
//! for that case exists and is treated as an alarm everywhere downstream.

mod obstructions;
mod reduction;
mod scans;

pub use obstructions::{
    CandidateOutcome, ExclusionCertificate, Obstruction, StratumWitness, SurvivorData,
};
pub use reduction::{all_descent_terminals, reduce_to_n3, ReductionChain, ReductionStep, ReductionTerminal};
pub use scans::{
    scan, scan_csv, verify_paper_arguments, ArgumentCheck, ScanOptions, ScanReport, ScanRow,
    ScanSummary, VerificationReport,
};

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use crate::circle_quotient::{
    gamma_from_rational, hilb_on_rational, normalize, orbit_type_lattice, predicates,
    GammaData, HilbertError, NormalizationLog, PredicateReport, WeightVector,
};
use crate::exactalg::Q;
use crate::u2_catalog::{EnumerationCaps, U2Error};

use obstructions::WeightSide;

// ---------------------------------------------------------------------------
// Serialization helpers: exact rationals as strings, never floats
// ---------------------------------------------------------------------------

pub(crate) mod ser {
    use num_bigint::BigInt;
    use serde::ser::Serializer;

    use crate::exactalg::Q;

    pub fn rational<S: Serializer>(value: &Q, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&value.to_string())
    }

    pub fn rational_vec<S: Serializer>(values: &[Q], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(values.iter().map(|v| v.to_string()))
    }

    pub fn bigint_opt<S: Serializer>(value: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
        match value {
            Some(v) => s.serialize_some(&v.to_string()),
            None => s.serialize_none(),
        }
    }
}

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// Failures of the audit machinery itself.  Verdicts — including the alarm
/// verdict for a surviving candidate — are not errors.
#[derive(Debug, Error)]
pub enum AuditError {
    /// A series or Laurent computation failed.
    #[error(transparent)]
    Hilbert(#[from] HilbertError),
    /// Group construction or Molien computation failed.
    #[error(transparent)]
    Group(#[from] U2Error),
    /// An internal invariant did not hold; indicates a bug.
    #[error("internal audit invariant failed: {0}")]
    Internal(String),
}

// ---------------------------------------------------------------------------
// Verdicts
// ---------------------------------------------------------------------------

/// Final classification of one audited weight vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// A necessary condition already fails; no group enumeration needed.
    ExcludedByPredicate,
    /// Every candidate group of the right order carries an exclusion
    /// certificate.
    ExcludedAllCandidates,
    /// Two weights of opposite sign: the quotient is the cyclic orbifold
    /// ℂ/ℤ_N and the equivalence exists; nothing to exclude.
    DimensionTwoOrbifold,
    /// All weights share one sign: the quotient is a single point.
    Point,
    /// No nonzero weights: the action is trivial and the audit question
    /// does not arise.
    NotApplicable,
    /// A candidate survived every obstruction.  Never expected; treated as
    /// an alarm by every consumer.
    CounterexampleCandidate,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let token = match self {
            Verdict::ExcludedByPredicate => "excluded-by-predicate",
            Verdict::ExcludedAllCandidates => "excluded-all-candidates",
            Verdict::DimensionTwoOrbifold => "dimension-two-orbifold",
            Verdict::Point => "point",
            Verdict::NotApplicable => "not-applicable",
            Verdict::CounterexampleCandidate => "counterexample-candidate",
        };
        write!(f, "{token}")
    }
}

// ---------------------------------------------------------------------------
// Report pieces
// ---------------------------------------------------------------------------

/// Why the verdict fell where it did, in one line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExclusionSummary {
    /// The deciding gate: a predicate name (`rhm`, `nondegenerate`,
    /// `diophantine`, `codim1_chain`), `candidates`, or `descent`.
    pub gate: String,
    /// Human-readable explanation with the exact witness values.
    pub reason: String,
}

/// Laurent data of the on-shell series, serialized exactly.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GammaReport {
    #[serde(serialize_with = "ser::rational")]
    pub gamma0: Q,
    #[serde(serialize_with = "ser::rational")]
    pub gamma1: Q,
    #[serde(serialize_with = "ser::rational")]
    pub gamma2: Q,
    #[serde(serialize_with = "ser::rational")]
    pub gamma3: Q,
    /// `1/γ₀` as an exact rational.
    #[serde(serialize_with = "ser::rational")]
    pub gamma0_reciprocal: Q,
    /// `1/γ₀` when it is a positive integer — the only possible order of a
    /// matching group.
    #[serde(serialize_with = "ser::bigint_opt")]
    pub candidate_group_order: Option<BigInt>,
    /// How the coefficients were obtained.
    pub source: String,
}

impl GammaReport {
    pub(crate) fn from_data(data: &GammaData) -> Self {
        GammaReport {
            gamma0: data.gamma0.clone(),
            gamma1: data.gamma1.clone(),
            gamma2: data.gamma2.clone(),
            gamma3: data.gamma3.clone(),
            gamma0_reciprocal: data.gamma0_reciprocal(),
            candidate_group_order: data.candidate_group_order(),
            source: data.source.to_string(),
        }
    }
}

/// One codimension-one stratum of the weight side: the pair of coordinates
/// supporting it, its isotropy order, and the cyclic order of the quotient
/// its closure is modeled on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StratumData {
    /// 1-based coordinate indices (the negative weight plus one positive).
    pub support: Vec<usize>,
    /// Isotropy order (the gcd of the two absolute weights).
    pub isotropy_order: u64,
    /// `N = (α_i + α_j)/gcd`: the cyclic order of the stratum closure.
    pub cyclic_order: u64,
}

/// The complete, serializable result of one audit.
#[derive(Clone, Debug, Serialize)]
pub struct AuditReport {
    /// The weights exactly as given.
    pub input: Vec<i64>,
    /// The canonical form actually audited.
    pub normalized: WeightVector,
    /// What normalization did.
    pub normalization: NormalizationLog,
    /// Final classification.
    pub verdict: Verdict,
    /// One-line justification for excluding verdicts.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exclusion: Option<ExclusionSummary>,
    /// All predicate outcomes (absent for single-sign and empty inputs).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicates: Option<PredicateReport>,
    /// Laurent data of the on-shell series (absent when no series exists).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<GammaReport>,
    /// For two-weight quotients: the cyclic order `N = α₁ + α₂`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dimension_two_order: Option<u64>,
    /// Codimension-one strata of the weight side (three-weight audits).
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub strata: Vec<StratumData>,
    /// The first complete (or first blocked) descent to three weights.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reduction: Option<ReductionChain>,
    /// For four or more weights: one full sub-report per distinct
    /// three-weight terminal reachable by a complete descent.
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub descents: Vec<AuditReport>,
    /// For three-weight audits that reach enumeration: one outcome per
    /// candidate group of order `1/γ₀`, sorted by spec.
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub candidates: Vec<CandidateOutcome>,
}

impl AuditReport {
    fn base(input: &[i64], normalized: WeightVector, log: NormalizationLog, verdict: Verdict) -> Self {
        AuditReport {
            input: input.to_vec(),
            normalized,
            normalization: log,
            verdict,
            exclusion: None,
            predicates: None,
            gamma: None,
            dimension_two_order: None,
            strata: Vec::new(),
            reduction: None,
            descents: Vec::new(),
            candidates: Vec::new(),
        }
    }

    /// Structural soundness of the report itself; used by tests.
    ///
    /// Checks, recursively: an excluded-all-candidates verdict on a
    /// three-weight audit carries a nonempty candidate list in which every
    /// candidate has a certificate; a counterexample verdict carries at
    /// least one survivor; descents inherit the same checks.
    pub fn check_structure(&self) -> Result<(), String> {
        match self.verdict {
            Verdict::ExcludedAllCandidates => {
                if self.normalized.len() == 3 {
                    if self.candidates.is_empty() {
                        return Err(format!(
                            "{}: excluded-all-candidates with empty candidate list",
                            self.normalized
                        ));
                    }
                    if let Some(c) = self.candidates.iter().find(|c| c.certificate.is_none()) {
                        return Err(format!(
                            "{}: candidate {} lacks a certificate under excluded-all-candidates",
                            self.normalized, c.label
                        ));
                    }
                } else if self.descents.is_empty() {
                    return Err(format!(
                        "{}: excluded-all-candidates with no descents on {} weights",
                        self.normalized,
                        self.normalized.len()
                    ));
                }
            }
            Verdict::CounterexampleCandidate => {
                let here = self.candidates.iter().any(|c| c.certificate.is_none());
                let below = self
                    .descents
                    .iter()
                    .any(|d| d.verdict == Verdict::CounterexampleCandidate);
                if !here && !below {
                    return Err(format!(
                        "{}: counterexample verdict without a surviving candidate",
                        self.normalized
                    ));
                }
            }
            _ => {}
        }
        for d in &self.descents {
            d.check_structure()?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Orchestration
// ---------------------------------------------------------------------------

/// Audits an arbitrary integer weight vector end to end.
///
/// Routing after normalization: no nonzero weights → not applicable; one
/// sign → point; two weights → the cyclic orbifold ℂ/ℤ_{α₁+α₂}; three or
/// more → predicates, then descent (for four or more) and candidate
/// enumeration on three-weight terminals.
pub fn audit(weights: &[i64]) -> Result<AuditReport, AuditError> {
    audit_with_caps(weights, &EnumerationCaps::default())
}

/// [`audit`] with explicit bounds on enumerated spec parameters.
pub fn audit_with_caps(weights: &[i64], caps: &EnumerationCaps) -> Result<AuditReport, AuditError> {
    let (wv, log) = normalize(weights);

    if wv.is_empty() {
        let mut report = AuditReport::base(weights, wv, log, Verdict::NotApplicable);
        report.exclusion = Some(ExclusionSummary {
            gate: "normalization".to_string(),
            reason: "no nonzero weights: the circle acts trivially and the quotient is the full space"
                .to_string(),
        });
        return Ok(report);
    }

    if !wv.has_both_signs() {
        let mut report = AuditReport::base(weights, wv, log, Verdict::Point);
        report.exclusion = Some(ExclusionSummary {
            gate: "signs".to_string(),
            reason: "all weights share one sign: the zero level is the origin and the quotient is a point"
                .to_string(),
        });
        return Ok(report);
    }

    if wv.len() == 2 {
        return audit_n2(weights, wv, log);
    }

    // Three or more mixed-sign weights.
    let preds = predicates(&wv)?;
    let series = hilb_on_rational(&wv)?;
    let gamma = gamma_from_rational(&series);

    let mut report = AuditReport::base(weights, wv.clone(), log, Verdict::ExcludedByPredicate);
    report.gamma = Some(GammaReport::from_data(&gamma));
    report.strata = codimension_one_strata(&wv);
    report.reduction = Some(reduce_to_n3(&wv));
    report.predicates = Some(preds.clone());

    if let Some((name, reason)) = preds.first_exclusion() {
        report.exclusion = Some(ExclusionSummary {
            gate: name.to_string(),
            reason: reason.to_string(),
        });
        return Ok(report);
    }

    if wv.len() == 3 {
        let side = WeightSide::from_parts(&wv, series, gamma)?;
        let candidates = obstructions::evaluate_candidates(&side, caps)?;
        finish_candidate_phase(&mut report, candidates);
        return Ok(report);
    }

    // Four or more weights, all predicates pass: audit every distinct
    // three-weight terminal reachable by a complete descent.  The vector is
    // excluded only when every terminal is.
    let terminals = all_descent_terminals(&wv);
    if terminals.is_empty() {
        // The chain predicate held, so a complete descent must exist.
        return Err(AuditError::Internal(format!(
            "{wv}: chain predicate holds but no complete descent was found"
        )));
    }
    let mut sub_reports = Vec::with_capacity(terminals.len());
    for (terminal, _chain) in &terminals {
        sub_reports.push(audit_with_caps(terminal.weights(), caps)?);
    }
    let verdict = combine_descent_verdicts(&sub_reports)?;
    let detail = sub_reports
        .iter()
        .map(|r| format!("{} → {}", r.normalized, r.verdict))
        .collect::<Vec<_>>()
        .join("; ");
    report.verdict = verdict;
    report.exclusion = Some(ExclusionSummary {
        gate: "descent".to_string(),
        reason: format!(
            "every complete descent terminal was audited: {detail}"
        ),
    });
    report.descents = sub_reports;
    Ok(report)
}

/// Audits a three-weight vector that is already normalized.
///
/// This is the enumeration core of [`audit`]; prefer [`audit`] for general
/// inputs.  Errors if the vector is not a normalized three-weight vector
/// with exactly one negative weight.
pub fn audit_n3(weight_vector: &WeightVector) -> Result<AuditReport, AuditError> {
    if weight_vector.len() != 3 {
        return Err(AuditError::Internal(format!(
            "audit_n3 needs exactly three weights, got {}",
            weight_vector.len()
        )));
    }
    if !weight_vector.is_normalized() || weight_vector.negative_count() != 1 {
        return Err(AuditError::Internal(format!(
            "audit_n3 needs a normalized vector with one negative weight, got {weight_vector}"
        )));
    }
    audit(weight_vector.weights())
}

/// The two-weight route: always a cyclic orbifold, never excluded.
fn audit_n2(
    input: &[i64],
    wv: WeightVector,
    log: NormalizationLog,
) -> Result<AuditReport, AuditError> {
    let preds = predicates(&wv)?;
    let series = hilb_on_rational(&wv)?;
    let gamma = gamma_from_rational(&series);
    let alphas = wv.alphas();
    let order = alphas[0] + alphas[1];

    let mut report = AuditReport::base(input, wv, log, Verdict::DimensionTwoOrbifold);
    report.predicates = Some(preds);
    report.gamma = Some(GammaReport::from_data(&gamma));
    report.dimension_two_order = Some(order);
    Ok(report)
}

/// Sets verdict, exclusion summary, and candidate list after enumeration.
fn finish_candidate_phase(report: &mut AuditReport, candidates: Vec<CandidateOutcome>) {
    let survivors: Vec<&CandidateOutcome> =
        candidates.iter().filter(|c| c.certificate.is_none()).collect();
    if survivors.is_empty() {
        report.verdict = Verdict::ExcludedAllCandidates;
        report.exclusion = Some(ExclusionSummary {
            gate: "candidates".to_string(),
            reason: format!(
                "all {} candidate groups of order {} carry exclusion certificates",
                candidates.len(),
                candidates.first().map(|c| c.order).unwrap_or(0),
            ),
        });
    } else {
        report.verdict = Verdict::CounterexampleCandidate;
        report.exclusion = Some(ExclusionSummary {
            gate: "candidates".to_string(),
            reason: format!(
                "{} candidate group(s) survived every obstruction: {}",
                survivors.len(),
                survivors
                    .iter()
                    .map(|c| c.label.as_str())
                    .collect::<Vec<_>>()
                    .join(", "),
            ),
        });
    }
    report.candidates = candidates;
}

/// Folds descent sub-verdicts into the parent verdict.
fn combine_descent_verdicts(reports: &[AuditReport]) -> Result<Verdict, AuditError> {
    let mut saw_candidates = false;
    for r in reports {
        match r.verdict {
            Verdict::CounterexampleCandidate => return Ok(Verdict::CounterexampleCandidate),
            Verdict::ExcludedAllCandidates => saw_candidates = true,
            Verdict::ExcludedByPredicate => {}
            other => {
                // Terminals are three-weight, mixed-sign, one-negative
                // vectors; no other verdict can arise for them.
                return Err(AuditError::Internal(format!(
                    "descent terminal {} returned unexpected verdict {other}",
                    r.normalized
                )));
            }
        }
    }
    Ok(if saw_candidates {
        Verdict::ExcludedAllCandidates
    } else {
        Verdict::ExcludedByPredicate
    })
}

/// The codimension-one strata of a normalized mixed-sign vector, in node
/// order.
fn codimension_one_strata(wv: &WeightVector) -> Vec<StratumData> {
    let lattice = orbit_type_lattice(wv);
    lattice
        .codimension_one_nodes(wv.len())
        .into_iter()
        .map(|node| StratumData {
            support: node.support.iter().copied().collect(),
            isotropy_order: node.isotropy_order,
            cyclic_order: node.cyclic_order.unwrap_or(0),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::q;

    fn verdict_of(weights: &[i64]) -> Verdict {
        audit(weights).unwrap().verdict
    }

    #[test]
    fn trivial_and_single_sign_routing() {
        assert_eq!(verdict_of(&[0, 0, 0]), Verdict::NotApplicable);
        assert_eq!(verdict_of(&[]), Verdict::NotApplicable);
        assert_eq!(verdict_of(&[1, 2, 3]), Verdict::Point);
        assert_eq!(verdict_of(&[-4]), Verdict::Point);
        assert_eq!(verdict_of(&[-2, -4, -6]), Verdict::Point);
    }

    #[test]
    fn two_weight_quotients_are_cyclic_orbifolds() {
        for (weights, order) in [
            (vec![-1i64, 1], 2u64),
            (vec![-1, 2], 3),
            (vec![-2, 3], 5),
            (vec![-3, 5], 8),
            (vec![4, -12, 0, -20], 0), // becomes (−1, 3, 5): not two weights
        ] {
            let report = audit(&weights).unwrap();
            if order == 0 {
                assert_ne!(report.verdict, Verdict::DimensionTwoOrbifold);
                continue;
            }
            assert_eq!(report.verdict, Verdict::DimensionTwoOrbifold);
            assert_eq!(report.dimension_two_order, Some(order));
            // Cross-check: the leading Laurent coefficient is 1/N.
            let gamma = report.gamma.unwrap();
            assert_eq!(gamma.gamma0, q(1, order as i64));
        }
    }

    #[test]
    fn degenerate_triple_is_excluded_with_three_eighths() {
        let report = audit(&[-1, 1, 1]).unwrap();
        assert_eq!(report.verdict, Verdict::ExcludedByPredicate);
        let exclusion = report.exclusion.unwrap();
        assert_eq!(exclusion.gate, "nondegenerate");
        let gamma = report.gamma.unwrap();
        assert_eq!(gamma.gamma0, q(3, 8));
        assert_eq!(gamma.gamma0_reciprocal, q(8, 3));
        assert!(gamma.candidate_group_order.is_none());
    }

    #[test]
    fn diophantine_failure_carries_the_reciprocal() {
        let report = audit(&[-1, 2, 3]).unwrap();
        assert_eq!(report.verdict, Verdict::ExcludedByPredicate);
        let exclusion = report.exclusion.unwrap();
        assert_eq!(exclusion.gate, "diophantine");
        assert!(exclusion.reason.contains("60/11"), "reason: {}", exclusion.reason);
    }

    #[test]
    fn chain_failure_is_reported_with_the_blocked_vector() {
        let report = audit(&[-3, 6, 12, 4]).unwrap();
        assert_eq!(report.verdict, Verdict::ExcludedByPredicate);
        assert_eq!(report.exclusion.as_ref().unwrap().gate, "codim1_chain");
        let gamma = report.gamma.unwrap();
        assert_eq!(gamma.gamma0, q(1, 21));
        let chain = report.reduction.unwrap();
        match chain.terminal {
            ReductionTerminal::Blocked { ref at, .. } => {
                assert_eq!(at.weights(), &[-1, 2, 4]);
            }
            ref other => panic!("expected a blocked descent, got {other:?}"),
        }
    }

    #[test]
    fn flagship_triple_excludes_all_order_28_candidates() {
        let report = audit(&[-6, 10, 15]).unwrap();
        assert_eq!(report.verdict, Verdict::ExcludedAllCandidates);
        report.check_structure().unwrap();
        let gamma = report.gamma.as_ref().unwrap();
        assert_eq!(gamma.gamma0, q(1, 28));
        assert_eq!(gamma.gamma2, q(15, 112));
        assert!(!report.candidates.is_empty());
        for candidate in &report.candidates {
            assert_eq!(candidate.order, 28);
            assert!(candidate.certificate.is_some(), "{} survived", candidate.label);
        }
        // The two codimension-one strata carry cyclic orders 8 and 7.
        let orders: Vec<u64> = report.strata.iter().map(|s| s.cyclic_order).collect();
        assert_eq!(orders, vec![8, 7]);
    }

    #[test]
    fn audit_is_permutation_invariant() {
        // Normalization keeps the input's positive-weight ordering, so the
        // normalized vectors of two permutations may differ as sequences;
        // verdicts, weight multisets, and per-candidate outcomes must agree.
        let sorted = |r: &AuditReport| {
            let mut w = r.normalized.weights().to_vec();
            w.sort_unstable();
            w
        };
        let base = audit(&[-6, 10, 15]).unwrap();
        for permuted in [[15i64, -6, 10], [10, 15, -6], [-6, 15, 10]] {
            let other = audit(&permuted).unwrap();
            assert_eq!(other.verdict, base.verdict);
            assert_eq!(sorted(&other), sorted(&base));
            assert_eq!(other.gamma, base.gamma);
            assert_eq!(other.candidates.len(), base.candidates.len());
            for (a, b) in base.candidates.iter().zip(&other.candidates) {
                assert_eq!(a.spec, b.spec);
                let kinds = |c: &CandidateOutcome| {
                    c.certificate.as_ref().map(|cert| cert.obstruction.kind())
                };
                assert_eq!(kinds(a), kinds(b));
            }
        }
    }

    #[test]
    fn four_weight_gate_failure_short_circuits_descent() {
        // 1/γ₀ = 672/13 is not an integer, so (−30,6,10,15) is excluded
        // before any terminal is audited, even though its chain exists.
        let report = audit(&[-30, 6, 10, 15]).unwrap();
        report.check_structure().unwrap();
        assert_eq!(report.verdict, Verdict::ExcludedByPredicate);
        assert_eq!(report.exclusion.as_ref().unwrap().gate, "diophantine");
        assert!(report.descents.is_empty());
        // The chain itself is fine: its own first terminal is (−15,3,5).
        let chain = report.reduction.as_ref().unwrap();
        match &chain.terminal {
            ReductionTerminal::Triple { vector } => assert_eq!(vector.weights(), &[-15, 3, 5]),
            other => panic!("expected a complete descent, got {other:?}"),
        }
    }

    #[test]
    fn four_weight_descent_audits_every_terminal() {
        // (−12,4,6,3) passes every gate (1/γ₀ = 21) and has two complete
        // descents: drop 4 → (−4,2,1), drop 3 → (−6,2,3).
        let report = audit(&[-12, 4, 6, 3]).unwrap();
        report.check_structure().unwrap();
        assert_eq!(report.verdict, Verdict::ExcludedAllCandidates);
        assert_eq!(report.exclusion.as_ref().unwrap().gate, "descent");
        assert_eq!(report.descents.len(), 2);
        let terminals: Vec<&[i64]> = report
            .descents
            .iter()
            .map(|d| d.normalized.weights())
            .collect();
        assert_eq!(terminals, vec![&[-6, 2, 3][..], &[-4, 2, 1]]);
        // (−6,2,3) has 1/γ₀ = 10 and goes through enumeration; (−4,2,1)
        // fails the Diophantine gate (1/γ₀ = 45/7).  Both are excluded.
        let by_candidates = report
            .descents
            .iter()
            .find(|d| d.normalized.weights() == [-6, 2, 3])
            .unwrap();
        assert_eq!(by_candidates.verdict, Verdict::ExcludedAllCandidates);
        assert!(!by_candidates.candidates.is_empty());
        by_candidates
            .candidates
            .iter()
            .for_each(|c| assert_eq!(c.order, 10));
        let by_gate = report
            .descents
            .iter()
            .find(|d| d.normalized.weights() == [-4, 2, 1])
            .unwrap();
        assert_eq!(by_gate.verdict, Verdict::ExcludedByPredicate);
        assert_eq!(by_gate.exclusion.as_ref().unwrap().gate, "diophantine");
    }

    #[test]
    fn reduction_chain_example_blocks_on_a_barren_triple() {
        // (−2,4,6,3) makes one valid chain step — remove 3, effectivize to
        // (−1,2,3) — but that triple has no codimension-one stratum, so the
        // descent (and the chain predicate) fail.
        let report = audit(&[-2, 4, 6, 3]).unwrap();
        let chain = report.reduction.as_ref().unwrap();
        assert_eq!(chain.steps.len(), 1);
        assert_eq!(chain.steps[0].removed_weight, 3);
        assert_eq!(chain.steps[0].effectivized.weights(), &[-1, 2, 3]);
        match &chain.terminal {
            ReductionTerminal::Blocked { at, reason } => {
                assert_eq!(at.weights(), &[-1, 2, 3]);
                assert!(reason.contains("no codimension-one stratum"), "{reason}");
            }
            other => panic!("expected a blocked descent, got {other:?}"),
        }
        assert_eq!(report.verdict, Verdict::ExcludedByPredicate);
        // The Diophantine gate fires first in the fixed order, but the
        // chain predicate independently records its failure.
        assert_eq!(report.exclusion.as_ref().unwrap().gate, "diophantine");
        assert!(report.predicates.as_ref().unwrap().codim1_chain.excludes());
    }

    #[test]
    fn reports_serialize_with_exact_rationals() {
        let report = audit(&[-6, 10, 15]).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.contains("\"gamma0\":\"1/28\""), "missing exact gamma0");
        assert!(json.contains("\"verdict\":\"excluded-all-candidates\""));
        assert!(!json.contains("0.0"), "found a float rendering");
    }
}
