//! A tour of the nine families of finite subgroups of U(2).
//!
//! Run with:
//!
//! ```text
//! cargo run --example u2_catalog_tour
//! ```
//!
//! Every finite subgroup of U(2) is a fiber product: a scalar circle piece
//! and an SU(2) piece glued along matching cyclic quotients.  The families
//! are labeled I–IX (with a primed variant III′ of III), each parametrized
//! by one or more integers.  This example builds a representative of every
//! family from its parameter spec, enumerates all groups of a fixed order,
//! and inspects the pseudoreflection structure that drives the audit.

use quotient_audit::u2_catalog::{
    duval_group, enumerate_groups_of_order, DuValSpec, EnumerationCaps,
};

fn main() {
    // -----------------------------------------------------------------
    // One representative per family, smallest interesting parameters
    // -----------------------------------------------------------------
    let tour = [
        DuValSpec::I { m: 2, ell: 2, f: 1, g: 1, d: 1 },
        DuValSpec::II { m: 2 },
        DuValSpec::III { m: 1, ell: 2 },
        DuValSpec::IIIPrime { m: 3, ell: 1 },
        DuValSpec::IV { m: 1, ell: 1 },
        DuValSpec::V { m: 1 },
        DuValSpec::VI { m: 1 },
        DuValSpec::VII { m: 1 },
        DuValSpec::VIII { m: 1 },
        DuValSpec::IX { m: 1 },
    ];
    println!("family tour:");
    for spec in &tour {
        let group = duval_group(spec).expect("tour parameters satisfy the constraints");
        println!(
            "  {:32} type {:4}  order {:>3}  conductor {:>2}  pseudoreflections {:>2}",
            spec.to_string(),
            spec.duval_type().to_string(),
            group.order(),
            group.conductor(),
            group.pseudoreflections().len()
        );
        assert_eq!(group.order(), spec.predicted_order(), "{spec}");
    }

    // -----------------------------------------------------------------
    // Parameter constraints are enforced, not assumed
    // -----------------------------------------------------------------
    let bad = DuValSpec::I { m: 2, ell: 2, f: 1, g: 2, d: 1 };
    match duval_group(&bad) {
        Err(err) => println!("rejected {bad}: {err}"),
        Ok(_) => unreachable!("f and g must have equal parity"),
    }

    // -----------------------------------------------------------------
    // All groups of a fixed order, deduplicated by element set
    // -----------------------------------------------------------------
    for order in [2u64, 4, 8, 24] {
        let groups = enumerate_groups_of_order(order, &EnumerationCaps::default())
            .expect("enumeration is total");
        println!("order {order}: {} distinct group(s)", groups.len());
        if groups.len() <= 8 {
            for group in &groups {
                println!("  {}", group.label());
            }
        } else {
            // Larger orders admit many diagonal (Type I) groups; count by
            // family instead of listing every parameter tuple.
            let mut by_type: std::collections::BTreeMap<String, usize> =
                std::collections::BTreeMap::new();
            for group in &groups {
                let family = group
                    .spec()
                    .map(|s| s.duval_type().to_string())
                    .unwrap_or_else(|| "ad hoc".into());
                *by_type.entry(family).or_insert(0) += 1;
            }
            for (family, count) in &by_type {
                println!("  type {family:4}: {count} group(s)");
            }
        }
    }

    // -----------------------------------------------------------------
    // Pseudoreflections and their primitive generators
    // -----------------------------------------------------------------
    // Type I with f = g = 1 is generated by reflections; the primitive
    // set picks one maximal-order pseudoreflection per fixed line.
    let reflection_group = duval_group(&DuValSpec::I { m: 3, ell: 3, f: 1, g: 1, d: 1 })
        .expect("tour parameters satisfy the constraints");
    println!(
        "{}: {} pseudoreflections in {} elements",
        reflection_group.label(),
        reflection_group.pseudoreflections().len(),
        reflection_group.order()
    );
    for (generator, order) in reflection_group.primitive_set() {
        println!("  primitive generator of order {order}: {generator}");
    }
    let covered: usize = reflection_group
        .primitive_set()
        .iter()
        .map(|(_, order)| (order - 1) as usize)
        .sum();
    assert_eq!(
        covered,
        reflection_group.pseudoreflections().len(),
        "each fixed-line class is cyclic: generator order minus one per class"
    );
}
