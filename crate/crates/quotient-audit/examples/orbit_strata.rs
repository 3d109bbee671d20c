//! Orbit-type stratification of a circle quotient.
//!
//! Run with:
//!
//! ```text
//! cargo run --example orbit_strata
//! ```
//!
//! Points on the zero level of the moment map are grouped by their circle
//! isotropy.  A coordinate subset `I` supports a stratum exactly when it
//! mixes weight signs; the isotropy along it is cyclic of order
//! `gcd{αᵢ : i ∈ I}`, and subsets with gcd 1 melt into the principal
//! stratum.  The one-complex-dimensional strata carry a cyclic-quotient
//! model of order `(αᵢ + αⱼ)/gcd(αᵢ, αⱼ)` — these are the links the audit
//! walks during its codimension-one descent.

use quotient_audit::circle_quotient::{normalize, orbit_type_lattice, shell_support, WeightVector};

fn print_lattice(label: &str, vector: &WeightVector) {
    let lattice = orbit_type_lattice(vector);
    println!("{label}: {} node(s)", lattice.nodes.len());
    for node in &lattice.nodes {
        let support: Vec<String> = node.support.iter().map(|i| i.to_string()).collect();
        let support = if support.is_empty() {
            "∅ (origin)".to_string()
        } else {
            format!("{{{}}}", support.join(", "))
        };
        let isotropy = if node.isotropy_order == 0 {
            "full circle".to_string()
        } else {
            format!("ℤ/{}", node.isotropy_order)
        };
        let dim = node
            .complex_dimension
            .map(|d| d.to_string())
            .unwrap_or_else(|| "—".to_string());
        let model = node
            .cyclic_order
            .map(|n| format!("   cyclic model order {n}"))
            .unwrap_or_default();
        println!("  support {support:<12} isotropy {isotropy:<12} dim {dim}{model}");
    }
}

fn main() {
    // -----------------------------------------------------------------
    // Normalization: zeros stripped, signs fixed, gcd removed
    // -----------------------------------------------------------------
    let (vector, log) = normalize(&[4, -12, 0, -20]);
    println!(
        "normalize (4, −12, 0, −20) → {:?}  [dropped zeros at {:?}, divided by {}]",
        vector.weights(),
        log.stripped_zero_positions,
        log.divided_by
    );

    // -----------------------------------------------------------------
    // A generic vector: every pairwise gcd is 1 except the radius
    // -----------------------------------------------------------------
    let generic = WeightVector::new(vec![-6, 10, 15]);
    println!(
        "shell support of (−6, 10, 15): {:?}",
        shell_support(&generic)
    );
    print_lattice("orbit types of (−6, 10, 15)", &generic);
    // Pairs {1,2} and {1,3} mix signs and have gcds 2 and 3: two
    // codimension-one strata with cyclic models of orders (6+10)/2 = 8 and
    // (6+15)/3 = 7.  Pair {2,3} has gcd 5 but both weights positive — the
    // only point of that coordinate plane on the zero level is the origin,
    // so no stratum appears for it.
    let lattice = orbit_type_lattice(&generic);
    let codim1 = lattice.codimension_one_nodes(generic.len());
    let orders: Vec<u64> = codim1.iter().filter_map(|n| n.cyclic_order).collect();
    assert_eq!(orders, vec![8, 7], "cyclic models along the sign-mixing edges");

    // -----------------------------------------------------------------
    // Fully coprime weights: only the origin is special
    // -----------------------------------------------------------------
    print_lattice("orbit types of (−1, 2, 3)", &WeightVector::new(vec![-1, 2, 3]));

    // -----------------------------------------------------------------
    // A longer vector with nested isotropy
    // -----------------------------------------------------------------
    let nested = WeightVector::new(vec![-6, -10, 15, 4, 9]);
    print_lattice("orbit types of (−6, −10, 15, 4, 9)", &nested);
    let lattice = orbit_type_lattice(&nested);
    assert!(
        lattice.unsupported_sign_pattern,
        "two negative weights: computed, but flagged for the audit"
    );
}
