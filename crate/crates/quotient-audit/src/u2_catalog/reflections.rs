//! Pseudoreflections of finite U(2) groups and their primitive generators.
//!
//! A pseudoreflection is a non-identity element fixing a line pointwise —
//! for a 2×2 unitary matrix, eigenvalue 1 with multiplicity exactly one.
//! Because unitary matrices are diagonalizable, multiplicity two already
//! forces the identity, so the test reduces to the exact characteristic
//! polynomial condition `det(g) − tr(g) + 1 = 0` together with `g ≠ I`.
//!
//! The pseudoreflections of a group are partitioned by their fixed line.
//! All pseudoreflections with a common fixed line, together with the
//! identity, form a cyclic group (they are simultaneously diagonal in any
//! basis adapted to the line, with first entry 1); the census picks the
//! generator of each such cyclic group and verifies, by explicit matrix
//! powering, that its powers reach the whole class and nothing outside it.

use std::collections::{BTreeMap, BTreeSet};

use super::element::{U2Error, UnitaryMatrix2};
use crate::exactalg::CyclotomicElement;

// ---------------------------------------------------------------------------
// The pseudoreflection test
// ---------------------------------------------------------------------------

/// Returns the multiplicative order of `g` when `g` is a pseudoreflection,
/// `None` otherwise.
///
/// The test is exact: 1 is an eigenvalue iff the characteristic polynomial
/// vanishes at 1, i.e. `det(g) − tr(g) + 1 = 0`, and the multiplicity is
/// one exactly when `g` is not the identity.
pub fn is_pseudoreflection(g: &UnitaryMatrix2) -> Option<u64> {
    if g.is_identity() {
        return None;
    }
    let char_at_one = g.det().sub(&g.trace()).add(&CyclotomicElement::one(g.conductor()));
    if char_at_one.is_zero() {
        Some(g.order())
    } else {
        None
    }
}

// ---------------------------------------------------------------------------
// Fixed lines
// ---------------------------------------------------------------------------

/// The projective line fixed pointwise by a pseudoreflection, encoded as a
/// point of ℙ¹: either the line through `(1, s)` or the vertical line
/// through `(0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FixedLine {
    /// Span of `(1, s)`.
    Slope(CyclotomicElement),
    /// Span of `(0, 1)`.
    Vertical,
}

/// The fixed line of a pseudoreflection (`None` when `g` is not one).
pub fn fixed_line(g: &UnitaryMatrix2) -> Option<FixedLine> {
    is_pseudoreflection(g)?;
    // Kernel of g − I: a rank-one matrix, so either row spans the row space.
    let one = CyclotomicElement::one(g.conductor());
    let m00 = g.entry(0, 0).sub(&one);
    let m01 = g.entry(0, 1).clone();
    let (v0, v1) = if !m00.is_zero() || !m01.is_zero() {
        // Row (m00, m01): kernel vector (m01, −m00).
        (m01, m00.neg())
    } else {
        let m10 = g.entry(1, 0).clone();
        let m11 = g.entry(1, 1).sub(&one);
        // Row (m10, m11): kernel vector (m11, −m10).
        (m11, m10.neg())
    };
    if v0.is_zero() {
        Some(FixedLine::Vertical)
    } else {
        let slope = v1.mul(&v0.inv().expect("nonzero cyclotomic element inverts"));
        Some(FixedLine::Slope(slope))
    }
}

// ---------------------------------------------------------------------------
// Primitive sets
// ---------------------------------------------------------------------------

/// One pseudoreflection generator per fixed line, with its order.
///
/// For each fixed line the class of pseudoreflections sharing it, plus the
/// identity, must form a cyclic group; the returned generator is the class
/// member of maximal order.  Two conditions are verified mechanically and
/// reported as [`U2Error::ReflectionCensus`] on failure:
///
/// * covering — the nontrivial powers of a class generator are exactly the
///   class (so every pseudoreflection is a power of exactly one primitive);
/// * disjointness — distinct primitives share no nontrivial power.
///
/// The input must be closed under multiplication (a group's element list),
/// with every matrix at one common conductor.
pub fn primitive_pseudoreflection_set(
    elements: &[UnitaryMatrix2],
) -> Result<Vec<(UnitaryMatrix2, u64)>, U2Error> {
    let mut classes: BTreeMap<FixedLine, Vec<UnitaryMatrix2>> = BTreeMap::new();
    for g in elements {
        if is_pseudoreflection(g).is_some() {
            let line = fixed_line(g).expect("pseudoreflections have a fixed line");
            classes.entry(line).or_default().push(g.clone());
        }
    }

    let mut primitives: Vec<(UnitaryMatrix2, u64)> = Vec::new();
    let mut all_powers: BTreeSet<UnitaryMatrix2> = BTreeSet::new();
    let mut total_reflections = 0usize;

    for (line, class) in &classes {
        total_reflections += class.len();
        let generator = class
            .iter()
            .max_by_key(|g| g.order())
            .expect("classes are nonempty")
            .clone();
        let order = generator.order();
        if order as usize != class.len() + 1 {
            return Err(U2Error::ReflectionCensus {
                detail: format!(
                    "class at {line:?} has {} members but its maximal order is {order}; \
                     the class plus the identity is not cyclic",
                    class.len()
                ),
            });
        }
        // Covering: the nontrivial powers of the generator are the class.
        let mut powers: Vec<UnitaryMatrix2> = Vec::with_capacity(class.len());
        let mut p = generator.clone();
        for _ in 1..order {
            powers.push(p.clone());
            p = p.mul(&generator);
        }
        let mut expected = class.clone();
        UnitaryMatrix2::sort_dedup(&mut expected);
        let mut got = powers.clone();
        UnitaryMatrix2::sort_dedup(&mut got);
        if got != expected {
            return Err(U2Error::ReflectionCensus {
                detail: format!(
                    "powers of the class generator at {line:?} do not reproduce the class"
                ),
            });
        }
        // Disjointness: no nontrivial power may repeat across classes.
        for q in powers {
            if !all_powers.insert(q) {
                return Err(U2Error::ReflectionCensus {
                    detail: format!(
                        "a nontrivial power of the generator at {line:?} already \
                         belongs to another class"
                    ),
                });
            }
        }
        primitives.push((generator, order));
    }

    if all_powers.len() != total_reflections {
        return Err(U2Error::ReflectionCensus {
            detail: format!(
                "power union has {} elements but the group has {} pseudoreflections",
                all_powers.len(),
                total_reflections
            ),
        });
    }
    Ok(primitives)
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::q;
    use crate::u2_catalog::element::rational_scalar;
    use crate::u2_catalog::su2::{su2_group, Su2Kind};

    #[test]
    fn diag_one_zeta3_is_a_pseudoreflection_of_order_three() {
        let g = UnitaryMatrix2::diag(
            CyclotomicElement::one(3),
            CyclotomicElement::zeta(3),
        )
        .unwrap();
        assert_eq!(is_pseudoreflection(&g), Some(3));
        assert_eq!(fixed_line(&g), Some(FixedLine::Slope(CyclotomicElement::zero(3))));
    }

    #[test]
    fn i_times_b_is_a_pseudoreflection_of_order_two() {
        let ib = UnitaryMatrix2::scalar_root(4, 1).mul(&UnitaryMatrix2::b_matrix());
        assert_eq!(is_pseudoreflection(&ib), Some(2));
        let minus_ib = UnitaryMatrix2::scalar_root(4, -1).mul(&UnitaryMatrix2::b_matrix());
        assert_eq!(is_pseudoreflection(&minus_ib), Some(2));
    }

    #[test]
    fn b_itself_is_not_a_pseudoreflection() {
        // Eigenvalues of b are ±i; 1 is not among them.
        assert_eq!(is_pseudoreflection(&UnitaryMatrix2::b_matrix()), None);
    }

    #[test]
    fn identity_and_scalars_are_not_pseudoreflections() {
        assert_eq!(is_pseudoreflection(&UnitaryMatrix2::identity()), None);
        assert_eq!(is_pseudoreflection(&rational_scalar(q(-1, 1))), None);
        assert_eq!(is_pseudoreflection(&UnitaryMatrix2::scalar_root(5, 2)), None);
    }

    #[test]
    fn su2_groups_have_no_pseudoreflections() {
        // det = 1 forces the second eigenvalue of a would-be reflection to
        // be 1 as well; mechanically confirmed on the binary icosahedral
        // group and a binary dihedral group.
        for kind in [Su2Kind::I120, Su2Kind::BinaryDihedral(4)] {
            for g in su2_group(kind).unwrap() {
                assert_eq!(is_pseudoreflection(&g), None);
            }
        }
    }

    #[test]
    fn reflection_classes_of_a_diagonal_product_group() {
        // ⟨diag(1, ζ₃), diag(ζ₄, 1)⟩: two fixed lines, primitive orders 3, 4.
        let a = UnitaryMatrix2::diag(CyclotomicElement::one(3), CyclotomicElement::zeta(3)).unwrap();
        let c = UnitaryMatrix2::diag(CyclotomicElement::zeta(4), CyclotomicElement::one(4)).unwrap();
        let group = crate::u2_catalog::FiniteU2Group::from_generators(
            "diag(ζ₄)×diag(ζ₃)",
            &[a, c],
            Some(12),
        )
        .unwrap();
        let mut orders: Vec<u64> =
            group.primitive_set().iter().map(|(_, o)| *o).collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![3, 4]);
        // 2 + 3 nontrivial powers in the two classes.
        assert_eq!(group.pseudoreflections().len(), 5);
    }

    #[test]
    fn primitive_set_of_psl_style_anti_diagonal_classes() {
        // The group {±I, ±ib} has one reflection class: {ib, −ib} share the
        // eigenvalue-1 test but fix different lines — check they split.
        let ib = UnitaryMatrix2::scalar_root(4, 1).mul(&UnitaryMatrix2::b_matrix());
        let group = crate::u2_catalog::FiniteU2Group::from_generators(
            "⟨−I, ib⟩",
            &[rational_scalar(q(-1, 1)), ib],
            Some(4),
        )
        .unwrap();
        // ib fixes span(1, i)·…; −ib fixes a different line; each class has
        // one order-2 element.
        assert_eq!(group.pseudoreflections().len(), 2);
        let orders: Vec<u64> = group.primitive_set().iter().map(|(_, o)| *o).collect();
        assert_eq!(orders, vec![2, 2]);
    }
}
