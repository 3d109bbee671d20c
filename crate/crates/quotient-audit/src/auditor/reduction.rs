//! Descent along codimension-one strata.
//!
//! A normalized vector with one negative weight and `n ≥ 4` weights can
//! only match a finite unitary quotient if its reduced space contains a
//! nested chain of codimension-one strata reaching a three-weight quotient.
//! Each chain step drops one positive weight whose removal leaves an
//! isotropy gcd of at least two, then divides the kept weights by that gcd
//! (the sub-representation made effective).  Equivalently, in the original
//! weights, the isotropy gcd strictly increases at every removal.
//!
//! The nested chain cannot stop at three weights: a graded-regular model
//! forces it on down to a two-weight quotient.  By the telescoping of the
//! gcds, that continuation is exactly the requirement that the final
//! (effectivized) triple still has a codimension-one stratum of its own —
//! so a descent counts as *complete* only when its terminal triple does.
//!
//! [`reduce_to_n3`] finds the first complete chain in deterministic stratum
//! order (backtracking if a branch dead-ends), or reports the first blocked
//! vector — one from which no chain continues — as the failure witness.
//! [`all_descent_terminals`] collects every distinct three-weight terminal
//! of a complete chain, because a sound exclusion must handle each one.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::circle_quotient::{normalize, orbit_type_lattice, OrbitTypeNode, WeightVector};

/// One descent step: which stratum was followed and what it produced.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionStep {
    /// The vector before the step.
    pub from: WeightVector,
    /// The codimension-one stratum followed (its support keeps the negative
    /// weight).
    pub node: OrbitTypeNode,
    /// 1-based index (in `from`) of the dropped positive weight.
    pub removed_index: usize,
    /// The dropped weight itself.
    pub removed_weight: i64,
    /// The kept weights divided by their gcd and re-normalized.
    pub effectivized: WeightVector,
}

/// How a descent ended.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ReductionTerminal {
    /// A three-weight vector was reached.
    Triple { vector: WeightVector },
    /// The descent stopped early: `at` has no codimension-one stratum, and
    /// no alternative branch completes either.
    Blocked { at: WeightVector, reason: String },
    /// The input was outside the descent's scope (fewer than three weights,
    /// or not a one-negative mixed-sign vector).
    NotApplicable { reason: String },
}

/// A descent from the input vector to its terminal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionChain {
    /// The steps taken, outermost first.  Empty when the input already has
    /// three weights (or the descent never started).
    pub steps: Vec<ReductionStep>,
    /// Where the descent ended.
    pub terminal: ReductionTerminal,
}

/// Descends from `weight_vector` to a three-weight vector along
/// codimension-one strata, effectivizing at each step.
///
/// Expects a normalized vector.  A three-weight input is its own terminal
/// (there is nothing to descend; whether *it* can continue is its own
/// chain predicate's business).  For longer vectors the chain is complete
/// only if its terminal triple still has a codimension-one stratum.
/// Returns the first complete chain in deterministic stratum order; if
/// every branch dead-ends, the chain records the first blocked vector
/// encountered, with the steps that led to it and its per-removal gcd data
/// as the failure witness.
pub fn reduce_to_n3(weight_vector: &WeightVector) -> ReductionChain {
    if weight_vector.len() < 3 {
        return ReductionChain {
            steps: Vec::new(),
            terminal: ReductionTerminal::NotApplicable {
                reason: format!(
                    "descent needs at least three weights, got {}",
                    weight_vector.len()
                ),
            },
        };
    }
    if !weight_vector.has_both_signs() || weight_vector.negative_count() != 1 {
        return ReductionChain {
            steps: Vec::new(),
            terminal: ReductionTerminal::NotApplicable {
                reason: format!(
                    "descent needs exactly one negative weight among positives, got {weight_vector}"
                ),
            },
        };
    }
    if weight_vector.len() == 3 {
        return ReductionChain {
            steps: Vec::new(),
            terminal: ReductionTerminal::Triple {
                vector: weight_vector.clone(),
            },
        };
    }

    let mut first_block: Option<(Vec<ReductionStep>, WeightVector, String)> = None;
    match descend_first(weight_vector, &mut Vec::new(), &mut first_block) {
        Some((steps, terminal)) => ReductionChain {
            steps,
            terminal: ReductionTerminal::Triple { vector: terminal },
        },
        None => {
            let (steps, at, reason) =
                first_block.expect("a failed descent records its first block");
            ReductionChain {
                steps,
                terminal: ReductionTerminal::Blocked { at, reason },
            }
        }
    }
}

/// Whether one more chain step exists below `wv`.
fn has_codimension_one_stratum(wv: &WeightVector) -> bool {
    !orbit_type_lattice(wv)
        .codimension_one_nodes(wv.len())
        .is_empty()
}

/// Depth-first search for the first complete chain; records the first
/// dead-end seen (with the path into it) for failure reporting.
fn descend_first(
    current: &WeightVector,
    steps: &mut Vec<ReductionStep>,
    first_block: &mut Option<(Vec<ReductionStep>, WeightVector, String)>,
) -> Option<(Vec<ReductionStep>, WeightVector)> {
    if current.len() == 3 {
        if has_codimension_one_stratum(current) {
            return Some((steps.clone(), current.clone()));
        }
        if first_block.is_none() {
            *first_block = Some((steps.clone(), current.clone(), blocked_reason(current)));
        }
        return None;
    }
    let lattice = orbit_type_lattice(current);
    let nodes = lattice.codimension_one_nodes(current.len());
    if nodes.is_empty() {
        if first_block.is_none() {
            *first_block = Some((steps.clone(), current.clone(), blocked_reason(current)));
        }
        return None;
    }
    for node in nodes {
        let step = make_step(current, node);
        steps.push(step.clone());
        if let Some(done) = descend_first(&step.effectivized, steps, first_block) {
            return Some(done);
        }
        steps.pop();
    }
    None
}

/// Builds the step that follows `node` out of `current`.
fn make_step(current: &WeightVector, node: &OrbitTypeNode) -> ReductionStep {
    let removed_index = (1..=current.len())
        .find(|i| !node.support.contains(i))
        .expect("a codimension-one support omits exactly one index");
    let removed_weight = current.weights()[removed_index - 1];
    let kept: Vec<i64> = node
        .support
        .iter()
        .map(|&i| current.weights()[i - 1])
        .collect();
    // normalize divides out the gcd (= the stratum's isotropy order) and
    // keeps the lone negative in front.
    let (effectivized, log) = normalize(&kept);
    debug_assert_eq!(log.divided_by, node.isotropy_order);
    ReductionStep {
        from: current.clone(),
        node: node.clone(),
        removed_index,
        removed_weight,
        effectivized,
    }
}

/// Why a vector admits no descent step.
fn blocked_reason(wv: &WeightVector) -> String {
    use num_integer::Integer;
    let drops: Vec<String> = (2..=wv.len())
        .map(|skip| {
            let g = wv
                .weights()
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != skip - 1)
                .fold(0u64, |g, (_, &a)| g.gcd(&a.unsigned_abs()));
            format!("drop a_{skip}={} → gcd {g}", wv.weights()[skip - 1])
        })
        .collect();
    format!(
        "{wv} has no codimension-one stratum: every single-weight removal leaves isotropy gcd 1 ({})",
        drops.join("; ")
    )
}

/// Every distinct three-weight terminal reachable from `weight_vector` by a
/// complete descent, each with the first chain that reaches it, sorted by
/// terminal vector.  A three-weight input is its own sole terminal.
///
/// Returns an empty list when no complete descent exists (or the input is
/// out of scope).
pub fn all_descent_terminals(weight_vector: &WeightVector) -> Vec<(WeightVector, ReductionChain)> {
    if weight_vector.len() < 3
        || !weight_vector.has_both_signs()
        || weight_vector.negative_count() != 1
    {
        return Vec::new();
    }
    if weight_vector.len() == 3 {
        return vec![(weight_vector.clone(), reduce_to_n3(weight_vector))];
    }
    let mut found: BTreeMap<WeightVector, ReductionChain> = BTreeMap::new();
    collect_terminals(weight_vector, &mut Vec::new(), &mut found);
    found.into_iter().collect()
}

fn collect_terminals(
    current: &WeightVector,
    steps: &mut Vec<ReductionStep>,
    found: &mut BTreeMap<WeightVector, ReductionChain>,
) {
    if current.len() == 3 {
        if has_codimension_one_stratum(current) {
            found.entry(current.clone()).or_insert_with(|| ReductionChain {
                steps: steps.clone(),
                terminal: ReductionTerminal::Triple {
                    vector: current.clone(),
                },
            });
        }
        return;
    }
    let lattice = orbit_type_lattice(current);
    for node in lattice.codimension_one_nodes(current.len()) {
        let step = make_step(current, node);
        steps.push(step.clone());
        collect_terminals(&step.effectivized, steps, found);
        steps.pop();
    }
}
