//! The finite subgroups of SU(2): cyclic, binary dihedral, and the three
//! binary polyhedral groups.
//!
//! Matrices come from the unit-quaternion picture: a quaternion
//! `a + b·i + c·j + d·k` of norm 1 maps to
//!
//! ```text
//! [[ a + b·ι,  c + d·ι ],
//!  [ −c + d·ι, a − b·ι ]]        ι = √−1
//! ```
//!
//! The binary tetrahedral and octahedral groups live at conductor 8
//! (their entries need `√−1` and `√2`), the binary icosahedral group at
//! conductor 20 (`√−1` and the golden ratio, via `√5 ∈ ℚ(ζ₅)`).
//!
//! Groups asked for "by generators" are produced by breadth-first closure
//! with a safety cap of ten times the expected order, then checked against
//! the classical order formula — so a wrong generator set fails loudly
//! instead of silently yielding a smaller group.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;

use crate::exactalg::{q, CyclotomicElement, Q};

use super::element::{U2Error, UnitaryMatrix2};

// ---------------------------------------------------------------------------
// Closure machinery (shared with the Du Val builders)
// ---------------------------------------------------------------------------

/// Closes a generator list under multiplication.  All generators are
/// embedded into their least common conductor first, so every element of the
/// result lives at one conductor and exact dedup is set-dedup.  Errors if
/// the closure exceeds `cap` elements.
pub(crate) fn close_under_multiplication(
    generators: &[UnitaryMatrix2],
    cap: usize,
    label: &str,
) -> Result<Vec<UnitaryMatrix2>, U2Error> {
    let mut conductor = 1u64;
    for g in generators {
        conductor = conductor.lcm(&g.conductor());
    }
    let gens: Vec<UnitaryMatrix2> = generators.iter().map(|g| g.embed(conductor)).collect();
    let identity = UnitaryMatrix2::identity().embed(conductor);

    let mut seen: BTreeSet<UnitaryMatrix2> = BTreeSet::new();
    seen.insert(identity.clone());
    let mut frontier: Vec<UnitaryMatrix2> = vec![identity];
    while let Some(g) = frontier.pop() {
        for h in &gens {
            let product = g.mul(h);
            if seen.insert(product.clone()) {
                if seen.len() > cap {
                    return Err(U2Error::ClosureExceeded {
                        label: label.to_string(),
                        cap,
                    });
                }
                frontier.push(product);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Closure with the standard safety cap of `10 × expected`, plus an exact
/// order check against `expected`.
pub(crate) fn close_with_expected_order(
    generators: &[UnitaryMatrix2],
    expected: u64,
    label: &str,
) -> Result<Vec<UnitaryMatrix2>, U2Error> {
    let cap = (expected as usize).saturating_mul(10);
    let elements = close_under_multiplication(generators, cap, label)?;
    if elements.len() as u64 != expected {
        return Err(U2Error::OrderMismatch {
            label: label.to_string(),
            expected,
            found: elements.len() as u64,
        });
    }
    Ok(elements)
}

// ---------------------------------------------------------------------------
// Quaternion-to-matrix helpers
// ---------------------------------------------------------------------------

/// Matrix of the quaternion `a + b·i + c·j + d·k` at the given conductor,
/// which must be divisible by 4 so that `ι = ζ_N^{N/4}` exists.  The four
/// components must be real (they are rational combinations of real
/// cyclotomic values such as `√5`).
fn quaternion_matrix(
    conductor: u64,
    a: &CyclotomicElement,
    b: &CyclotomicElement,
    c: &CyclotomicElement,
    d: &CyclotomicElement,
) -> Result<UnitaryMatrix2, U2Error> {
    assert_eq!(conductor % 4, 0, "quaternion matrices need ι = ζ₄ in the field");
    let iota = CyclotomicElement::zeta_pow(conductor, (conductor / 4) as i64);
    let at = |x: &CyclotomicElement| x.embed(conductor);
    let m00 = at(a).add(&at(b).mul(&iota));
    let m01 = at(c).add(&at(d).mul(&iota));
    let m10 = at(c).neg().add(&at(d).mul(&iota));
    let m11 = at(a).sub(&at(b).mul(&iota));
    UnitaryMatrix2::new([[m00, m01], [m10, m11]])
}

/// Rational constant at a conductor.
fn rat(conductor: u64, n: i64, d: i64) -> CyclotomicElement {
    CyclotomicElement::from_rational(conductor, q(n, d))
}

/// `√5` inside ℚ(ζ₂₀), from the Gauss sum `1 + 2ζ₅ + 2ζ₅⁴`.
fn sqrt5_at_20() -> CyclotomicElement {
    let z5 = CyclotomicElement::zeta_pow(20, 4);
    let z5_4 = CyclotomicElement::zeta_pow(20, 16);
    let two = Q::from(num_bigint::BigInt::from(2));
    CyclotomicElement::one(20)
        .add(&z5.scale(&two))
        .add(&z5_4.scale(&two))
}

// ---------------------------------------------------------------------------
// The catalog of SU(2) kinds
// ---------------------------------------------------------------------------

/// A finite subgroup of SU(2), named.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Su2Kind {
    /// Cyclic group `{diag(ζ_m^j, ζ_m^{-j})}` of order `m`.
    Cyclic(u64),
    /// Binary dihedral group of order `4m`, generated by
    /// `diag(ζ_{2m}, ζ_{2m}^{-1})` and `b = [[0,1],[-1,0]]`.
    BinaryDihedral(u64),
    /// Binary tetrahedral group, order 24.
    T24,
    /// Binary octahedral group, order 48.
    O48,
    /// Binary icosahedral group, order 120.
    I120,
}

impl Su2Kind {
    /// The classical order formula for the kind.
    pub fn order(&self) -> u64 {
        match *self {
            Su2Kind::Cyclic(m) => m,
            Su2Kind::BinaryDihedral(m) => 4 * m,
            Su2Kind::T24 => 24,
            Su2Kind::O48 => 48,
            Su2Kind::I120 => 120,
        }
    }
}

impl fmt::Display for Su2Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Su2Kind::Cyclic(m) => write!(f, "cyclic({m})"),
            Su2Kind::BinaryDihedral(m) => write!(f, "binary_dihedral({m})"),
            Su2Kind::T24 => write!(f, "T24"),
            Su2Kind::O48 => write!(f, "O48"),
            Su2Kind::I120 => write!(f, "I120"),
        }
    }
}

/// Generators of the binary tetrahedral group at conductor 8: the
/// quaternions `i`, `j`, and `ω = (−1 + i + j + k)/2`.
pub(crate) fn t24_generators() -> Result<Vec<UnitaryMatrix2>, U2Error> {
    let zero = rat(8, 0, 1);
    let one = rat(8, 1, 1);
    let half = rat(8, 1, 2);
    let minus_half = rat(8, -1, 2);
    Ok(vec![
        quaternion_matrix(8, &zero, &one, &zero, &zero)?,
        quaternion_matrix(8, &zero, &zero, &one, &zero)?,
        quaternion_matrix(8, &minus_half, &half, &half, &half)?,
    ])
}

/// Generators of the binary octahedral group at conductor 8: the
/// tetrahedral generators plus `diag(ζ₈, ζ₈⁻¹)`.
pub(crate) fn o48_generators() -> Result<Vec<UnitaryMatrix2>, U2Error> {
    let mut gens = t24_generators()?;
    gens.push(UnitaryMatrix2::su2_diag(8, 1));
    Ok(gens)
}

/// Generators of the binary icosahedral group at conductor 20: the
/// quaternions `ω = (−1 + i + j + k)/2` and `(φ + φ⁻¹·i + j)/2` with φ the
/// golden ratio.
pub(crate) fn i120_generators() -> Result<Vec<UnitaryMatrix2>, U2Error> {
    let zero = rat(20, 0, 1);
    let half = rat(20, 1, 2);
    let minus_half = rat(20, -1, 2);
    let quarter = Q::new(num_bigint::BigInt::from(1), num_bigint::BigInt::from(4));
    let sqrt5 = sqrt5_at_20();
    // φ/2 = (1 + √5)/4, φ⁻¹/2 = (−1 + √5)/4.
    let phi_half = CyclotomicElement::one(20).add(&sqrt5).scale(&quarter);
    let inv_phi_half = sqrt5.sub(&CyclotomicElement::one(20)).scale(&quarter);
    Ok(vec![
        quaternion_matrix(20, &minus_half, &half, &half, &half)?,
        quaternion_matrix(20, &phi_half, &inv_phi_half, &half, &zero)?,
    ])
}

/// Builds the full element list of a finite SU(2) subgroup.
///
/// Cyclic groups are written down directly; the others are closed from
/// their generators and checked against the order formula.  Every returned
/// element satisfies `det = 1` (asserted), and all elements share one
/// conductor.
pub fn su2_group(kind: Su2Kind) -> Result<Vec<UnitaryMatrix2>, U2Error> {
    let elements = match kind {
        Su2Kind::Cyclic(m) => {
            validate_positive(m, kind)?;
            (0..m).map(|j| UnitaryMatrix2::su2_diag(m, j as i64)).collect()
        }
        Su2Kind::BinaryDihedral(m) => {
            validate_positive(m, kind)?;
            let gens = [UnitaryMatrix2::su2_diag(2 * m, 1), UnitaryMatrix2::b_matrix()];
            close_with_expected_order(&gens, 4 * m, &kind.to_string())?
        }
        Su2Kind::T24 => close_with_expected_order(&t24_generators()?, 24, "T24")?,
        Su2Kind::O48 => close_with_expected_order(&o48_generators()?, 48, "O48")?,
        Su2Kind::I120 => close_with_expected_order(&i120_generators()?, 120, "I120")?,
    };
    for g in &elements {
        assert!(g.det().is_one(), "SU(2) element with det ≠ 1: {g}");
    }
    Ok(elements)
}

fn validate_positive(m: u64, kind: Su2Kind) -> Result<(), U2Error> {
    if m == 0 {
        return Err(U2Error::InvalidSpec {
            spec: kind.to_string(),
            reason: "parameter m must be positive".to_string(),
        });
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use crate::u2_catalog::element::rational_scalar;

    #[test]
    fn cyclic_group_has_order_m() {
        for m in [1u64, 2, 3, 7, 12] {
            let g = su2_group(Su2Kind::Cyclic(m)).unwrap();
            assert_eq!(g.len() as u64, m, "cyclic({m})");
        }
    }

    #[test]
    fn binary_dihedral_one_is_plus_minus_one_and_plus_minus_b() {
        let g = su2_group(Su2Kind::BinaryDihedral(1)).unwrap();
        assert_eq!(g.len(), 4);
        let conductor = g[0].conductor();
        let b = UnitaryMatrix2::b_matrix().embed(conductor);
        let id = UnitaryMatrix2::identity().embed(conductor);
        let minus_id = rational_scalar(q(-1, 1)).embed(conductor);
        let minus_b = minus_id.mul(&b);
        let mut expected = vec![id, minus_id, b, minus_b];
        UnitaryMatrix2::sort_dedup(&mut expected);
        assert_eq!(g, expected);
    }

    #[test]
    fn binary_dihedral_orders() {
        for m in [1u64, 2, 3, 5, 6] {
            let g = su2_group(Su2Kind::BinaryDihedral(m)).unwrap();
            assert_eq!(g.len() as u64, 4 * m, "binary_dihedral({m})");
        }
    }

    #[test]
    fn binary_polyhedral_orders() {
        assert_eq!(su2_group(Su2Kind::T24).unwrap().len(), 24);
        assert_eq!(su2_group(Su2Kind::O48).unwrap().len(), 48);
        assert_eq!(su2_group(Su2Kind::I120).unwrap().len(), 120);
    }

    #[test]
    fn polyhedral_conductors_match_the_design() {
        assert_eq!(su2_group(Su2Kind::T24).unwrap()[0].conductor(), 8);
        assert_eq!(su2_group(Su2Kind::O48).unwrap()[0].conductor(), 8);
        assert_eq!(su2_group(Su2Kind::I120).unwrap()[0].conductor(), 20);
    }

    #[test]
    fn icosahedral_generator_orders() {
        let gens = i120_generators().unwrap();
        assert_eq!(gens[0].order(), 3); // ω = (−1+i+j+k)/2
        assert_eq!(gens[1].order(), 10); // (φ + φ⁻¹i + j)/2
    }

    #[test]
    fn element_order_statistics_of_i120() {
        // The binary icosahedral group has a known order profile:
        // 1×ord1, 1×ord2, 20×ord3, 30×ord4, 24×ord5, 20×ord6, 24×ord10.
        let g = su2_group(Su2Kind::I120).unwrap();
        let mut histogram = std::collections::BTreeMap::new();
        for m in &g {
            *histogram.entry(m.order()).or_insert(0u32) += 1;
        }
        let expected: std::collections::BTreeMap<u64, u32> =
            [(1, 1), (2, 1), (3, 20), (4, 30), (5, 24), (6, 20), (10, 24)]
                .into_iter()
                .collect();
        assert_eq!(histogram, expected);
    }

    #[test]
    fn closure_cap_triggers_on_unreachable_expected_order() {
        // b generates a group of order 4, so expecting 2 must error.
        let err = close_with_expected_order(&[UnitaryMatrix2::b_matrix()], 2, "bad");
        assert!(matches!(err, Err(U2Error::OrderMismatch { expected: 2, found: 4, .. })));
    }

    #[test]
    fn zero_parameter_is_rejected() {
        assert!(matches!(
            su2_group(Su2Kind::Cyclic(0)),
            Err(U2Error::InvalidSpec { .. })
        ));
    }
}
