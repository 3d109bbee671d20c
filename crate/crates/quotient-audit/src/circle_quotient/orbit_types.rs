//! Orbit-type strata of the reduced space.
//!
//! Points of the zero level of the moment map are grouped by their isotropy
//! subgroup of the circle.  For a coordinate subset `I` (the indices where
//! `z_i ≠ 0`), the stratum `V_I` meets the zero level exactly when `I` is
//! empty (the origin) or contains weights of both signs, and its isotropy is
//! the cyclic group of order `gcd{α_i : i ∈ I}`.  Subsets with gcd 1 carry
//! trivial isotropy and belong to the principal stratum; they are not listed
//! as separate nodes.

use std::collections::BTreeSet;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::WeightVector;

// ---------------------------------------------------------------------------
// Shell support
// ---------------------------------------------------------------------------

/// Indices (1-based) of coordinates that can be nonzero somewhere on the
/// zero level of the moment map.
///
/// With weights of both signs every coordinate participates; with a single
/// sign the zero level is the origin alone and the support is empty.
pub fn shell_support(weight_vector: &WeightVector) -> BTreeSet<usize> {
    if weight_vector.has_both_signs() {
        (1..=weight_vector.len()).collect()
    } else {
        BTreeSet::new()
    }
}

// ---------------------------------------------------------------------------
// Lattice nodes
// ---------------------------------------------------------------------------

/// One orbit-type stratum meeting the zero level.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitTypeNode {
    /// 1-based coordinate indices that are nonzero on the stratum.  Empty
    /// for the origin.
    pub support: BTreeSet<usize>,
    /// Order of the cyclic isotropy group; 0 for the origin, whose isotropy
    /// is the full circle.
    pub isotropy_order: u64,
    /// Complex dimension of the stratum closure in the reduced space,
    /// `|I| − 1`; `None` for the origin.
    pub complex_dimension: Option<usize>,
    /// Whether the stratum meets the zero level (always true for returned
    /// nodes; kept explicit for serialized reports).
    pub meets_shell: bool,
    /// For one-complex-dimensional nodes `I = {i, j}` only: the order
    /// `N = (α_i + α_j)/gcd(α_i, α_j)` of the cyclic quotient the stratum
    /// closure is modeled on.
    pub cyclic_order: Option<u64>,
}

/// The collection of nontrivial orbit-type strata, plus a flag for weight
/// vectors outside the audit's sign convention.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitTypeLattice {
    /// Nodes sorted by (support size, support), origin first.
    pub nodes: Vec<OrbitTypeNode>,
    /// Set when the vector has two or more negative weights after
    /// normalization: the lattice is still computed from the sign data, but
    /// the downstream audit does not interpret it.
    pub unsupported_sign_pattern: bool,
}

impl OrbitTypeLattice {
    /// Nodes of complex dimension `n − 2` (codimension one in the reduced
    /// space).
    pub fn codimension_one_nodes(&self, n: usize) -> Vec<&OrbitTypeNode> {
        self.nodes
            .iter()
            .filter(|node| node.complex_dimension == Some(n.saturating_sub(2)))
            .collect()
    }
}

/// Computes all orbit-type strata with nontrivial isotropy meeting the zero
/// level, together with the origin node.
///
/// Expects a normalized vector (no zeros, gcd 1).  Subsets whose weight gcd
/// is 1 lie in the principal stratum and are omitted.  The result is
/// deterministic: nodes are ordered by support size, then lexicographically.
pub fn orbit_type_lattice(weight_vector: &WeightVector) -> OrbitTypeLattice {
    let n = weight_vector.len();
    let weights = weight_vector.weights();
    let alphas = weight_vector.alphas();
    let unsupported_sign_pattern = weight_vector.negative_count() >= 2;

    let mut nodes = vec![OrbitTypeNode {
        support: BTreeSet::new(),
        isotropy_order: 0,
        complex_dimension: None,
        meets_shell: true,
        cyclic_order: None,
    }];

    // Enumerate subsets by bitmask; n stays small (weight vectors are short)
    // so 2ⁿ enumeration is exact and cheap.
    assert!(n < 30, "orbit-type enumeration expects a short weight vector");
    let mut proper: Vec<OrbitTypeNode> = Vec::new();
    for mask in 1u32..(1u32 << n) {
        let mut has_pos = false;
        let mut has_neg = false;
        let mut gcd = 0u64;
        let mut support = BTreeSet::new();
        for (i, (&w, &alpha)) in weights.iter().zip(alphas.iter()).enumerate() {
            if mask & (1 << i) != 0 {
                has_pos |= w > 0;
                has_neg |= w < 0;
                gcd = gcd.gcd(&alpha);
                support.insert(i + 1);
            }
        }
        if !(has_pos && has_neg) || gcd < 2 {
            continue;
        }
        let size = support.len();
        let cyclic_order = if size == 2 {
            let mut it = support.iter();
            let i = *it.next().unwrap() - 1;
            let j = *it.next().unwrap() - 1;
            Some((alphas[i] + alphas[j]) / alphas[i].gcd(&alphas[j]))
        } else {
            None
        };
        proper.push(OrbitTypeNode {
            support,
            isotropy_order: gcd,
            complex_dimension: Some(size - 1),
            meets_shell: true,
            cyclic_order,
        });
    }
    proper.sort_by(|a, b| {
        (a.support.len(), &a.support).cmp(&(b.support.len(), &b.support))
    });
    nodes.extend(proper);

    OrbitTypeLattice {
        nodes,
        unsupported_sign_pattern,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn supports(lattice: &OrbitTypeLattice) -> Vec<Vec<usize>> {
        lattice
            .nodes
            .iter()
            .map(|n| n.support.iter().copied().collect())
            .collect()
    }

    #[test]
    fn shell_support_needs_both_signs() {
        let both = WeightVector::new(vec![-3, 6, 12, 4]);
        assert_eq!(shell_support(&both), (1..=4).collect());
        let single = WeightVector::new(vec![2, 3]);
        assert!(shell_support(&single).is_empty());
    }

    #[test]
    fn lattice_for_minus3_6_12_4() {
        let w = WeightVector::new(vec![-3, 6, 12, 4]);
        let lattice = orbit_type_lattice(&w);
        assert!(!lattice.unsupported_sign_pattern);
        // gcd ≥ 2 subsets containing index 1 and a positive index:
        // {1,2} gcd 3, {1,3} gcd 3, {1,2,3} gcd 3; everything involving
        // index 4 has gcd 1 with α₁ = 3.
        assert_eq!(
            supports(&lattice),
            vec![vec![], vec![1, 2], vec![1, 3], vec![1, 2, 3]]
        );
        let codim1 = lattice.codimension_one_nodes(4);
        assert_eq!(codim1.len(), 1);
        assert_eq!(
            codim1[0].support.iter().copied().collect::<Vec<_>>(),
            vec![1, 2, 3]
        );
        assert_eq!(codim1[0].isotropy_order, 3);
        assert_eq!(codim1[0].complex_dimension, Some(2));
    }

    #[test]
    fn lattice_for_minus6_10_15() {
        let w = WeightVector::new(vec![-6, 10, 15]);
        let lattice = orbit_type_lattice(&w);
        assert_eq!(supports(&lattice), vec![vec![], vec![1, 2], vec![1, 3]]);
        let by_support: Vec<(Vec<usize>, u64, Option<u64>)> = lattice
            .nodes
            .iter()
            .skip(1)
            .map(|n| {
                (
                    n.support.iter().copied().collect(),
                    n.isotropy_order,
                    n.cyclic_order,
                )
            })
            .collect();
        assert_eq!(
            by_support,
            vec![
                (vec![1, 2], 2, Some(8)),  // (6+10)/2
                (vec![1, 3], 3, Some(7)),  // (6+15)/3
            ]
        );
        assert_eq!(lattice.codimension_one_nodes(3).len(), 2);
    }

    #[test]
    fn lattice_for_minus1_2() {
        let w = WeightVector::new(vec![-1, 2]);
        let lattice = orbit_type_lattice(&w);
        // gcd(1, 2) = 1: no nontrivial isotropy off the origin; the single
        // pair node would be principal.  Only the origin remains.
        assert_eq!(supports(&lattice), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn pair_node_cyclic_order_minus1_2() {
        // The cyclic order formula for the one-negative/one-positive pair:
        // N = (1 + 2)/1 = 3, visible through the pair helper even though
        // gcd 1 keeps the node out of the lattice.
        let w = WeightVector::new(vec![-1, 2]);
        assert_eq!(w.pair_cyclic_order(0, 1), 3);
    }

    #[test]
    fn multiple_negatives_flagged_but_computed() {
        let w = WeightVector::new(vec![-2, -2, 3]);
        let lattice = orbit_type_lattice(&w);
        assert!(lattice.unsupported_sign_pattern);
        // {1,2} has gcd 2 but no positive weight, so it misses the shell.
        // {1,3}, {2,3} have gcd 1.  {1,2,3} has gcd 1.  Origin only.
        assert_eq!(supports(&lattice), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn closure_ordering_follows_support_inclusion() {
        let w = WeightVector::new(vec![-2, 4, 6, 1]);
        let lattice = orbit_type_lattice(&w);
        for a in &lattice.nodes {
            for b in &lattice.nodes {
                if a.support.is_subset(&b.support) && !b.support.is_empty() {
                    assert!(
                        a.support.len() <= b.support.len(),
                        "inclusion must respect dimension"
                    );
                }
            }
        }
        // Spot-check one chain: {1,2} ⊂ {1,2,3}, both with isotropy Z₂.
        let sup = supports(&lattice);
        assert!(sup.contains(&vec![1, 2]));
        assert!(sup.contains(&vec![1, 2, 3]));
    }
}
