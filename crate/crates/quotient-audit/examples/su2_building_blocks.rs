//! The finite subgroups of SU(2), built as exact cyclotomic matrices.
//!
//! Run with:
//!
//! ```text
//! cargo run --example su2_building_blocks
//! ```
//!
//! Every finite subgroup of SU(2) is cyclic, binary dihedral, or one of the
//! three binary polyhedral groups (tetrahedral 2T, octahedral 2O,
//! icosahedral 2I).  These are the raw material for the nine families of
//! finite U(2) subgroups: each U(2) group is glued from a scalar circle
//! piece and one of these SU(2) pieces.  This example constructs each kind
//! from explicit generators, closes under multiplication, and inspects the
//! result — all in exact cyclotomic arithmetic, no floating point.

use std::collections::BTreeMap;

use quotient_audit::u2_catalog::{su2_group, FiniteU2Group, Su2Kind};

fn main() {
    // -----------------------------------------------------------------
    // Cyclic and binary dihedral pieces: explicit diagonal/anti-diagonal
    // -----------------------------------------------------------------
    for kind in [Su2Kind::Cyclic(6), Su2Kind::BinaryDihedral(3)] {
        let elements = su2_group(kind).expect("parameters are positive");
        println!("{kind}: order {}", elements.len());
        println!("  first nontrivial element: {}", elements[1]);
    }

    // -----------------------------------------------------------------
    // The three binary polyhedral groups
    // -----------------------------------------------------------------
    for kind in [Su2Kind::T24, Su2Kind::O48, Su2Kind::I120] {
        let elements = su2_group(kind).expect("closure reaches the expected order");
        let group = FiniteU2Group::from_elements(&kind.to_string(), elements)
            .expect("the closed list is a group");
        println!(
            "{kind}: order {}, cyclotomic conductor {}",
            group.order(),
            group.conductor()
        );

        // Every element has determinant 1 — that is what SU(2) means —
        // and none is a pseudoreflection (no eigenvalue-1 fixed line).
        assert!(group.elements().iter().all(|g| g.det().is_one()));
        assert!(
            group.pseudoreflections().is_empty(),
            "determinant-one matrices cannot fix a line without being trivial"
        );
    }

    // -----------------------------------------------------------------
    // Element-order statistics of the binary icosahedral group 2I
    // -----------------------------------------------------------------
    let icosahedral = FiniteU2Group::from_elements(
        "2I",
        su2_group(Su2Kind::I120).expect("closure reaches order 120"),
    )
    .expect("the closed list is a group");
    let mut histogram: BTreeMap<u64, usize> = BTreeMap::new();
    for g in icosahedral.elements() {
        *histogram.entry(g.order()).or_insert(0) += 1;
    }
    println!("2I element orders:");
    for (order, count) in &histogram {
        println!("  order {order:>2}: {count:>2} elements");
    }
    assert_eq!(
        histogram,
        BTreeMap::from([(1, 1), (2, 1), (3, 20), (4, 30), (5, 24), (6, 20), (10, 24)]),
        "the binary icosahedral order profile is rigid"
    );

    // -----------------------------------------------------------------
    // Exact eigenvalues: exponents of roots of unity, never floats
    // -----------------------------------------------------------------
    let sample = &icosahedral.elements()[7];
    let (e1, e2, ord) = sample.eigenvalue_exponents();
    println!("sample element of order {}:", sample.order());
    println!("  {sample}");
    println!("  eigenvalues ζ_{ord}^{e1}, ζ_{ord}^{e2}");
    assert_eq!(
        (e1 + e2) % ord,
        0,
        "determinant one forces the eigenvalue exponents to cancel"
    );
}
