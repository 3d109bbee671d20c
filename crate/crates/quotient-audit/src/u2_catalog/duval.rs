//! The classical ten-family catalog of finite subgroups of U(2) that meet
//! the scalar circle nontrivially, and the group container used everywhere
//! downstream.
//!
//! Each family pairs a scalar piece `L ⊂ U(1)·I` with a piece `R ⊂ SU(2)`
//! through an isomorphism of quotients; the group is the fiber product
//! `{ l·r : φ(l L_K) = r R_K }`.  A [`DuValSpec`] fixes the parameters, and
//! [`duval_group`] realizes the honest element set by closing an explicit
//! generator list (kernel generators of both sides plus one "graph"
//! generator pairing the two quotient generators), then checks the result
//! against the family's order formula:
//!
//! | type  | pieces                                    | order   |
//! |-------|-------------------------------------------|---------|
//! | I     | (Ω_{2m}/Ω_f ; Ω_{2ℓ}ˢ/Ω_gˢ) twisted by d  | ℓ·f     |
//! | II    | (Ω_{2m}/Ω_{2m} ; D₁/D₁)                   | 4m      |
//! | III   | (Ω_{4m}/Ω_{2m} ; D_ℓ/Ω_{2ℓ}ˢ)             | 4ℓm     |
//! | III′  | (Ω_{4m}/Ω_m ; D_ℓ/Ω_ℓˢ), m and ℓ odd      | 2ℓm     |
//! | IV    | (Ω_{4m}/Ω_{2m} ; D_{2ℓ}/D_ℓ)              | 8ℓm     |
//! | V     | (Ω_{2m}/Ω_{2m} ; T24/T24)                 | 24m     |
//! | VI    | (Ω_{6m}/Ω_{2m} ; T24/D₂)                  | 24m     |
//! | VII   | (Ω_{2m}/Ω_{2m} ; O48/O48)                 | 48m     |
//! | VIII  | (Ω_{4m}/Ω_{2m} ; O48/T24)                 | 48m     |
//! | IX    | (Ω_{2m}/Ω_{2m} ; I120/I120)               | 120m    |
//!
//! Here `Ω_k` is the scalar group of order `k`, `Ω_kˢ` the diagonal cyclic
//! group `{diag(ζ_k^j, ζ_k^{-j})}`, and `D_ℓ` the binary dihedral group of
//! order `4ℓ`.  Only Type I carries a twist parameter; for the other
//! families the possible quotient isomorphisms give conjugate groups, so a
//! single representative is built.
//!
//! [`enumerate_groups_of_order`] walks all families and parameter choices
//! with a given predicted order, builds every candidate, and deduplicates
//! by exact element-set equality (no conjugacy reduction — conjugate but
//! distinct subgroups are both kept, matching how the audit consumes them).

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::element::{U2Error, UnitaryMatrix2};
use super::reflections::primitive_pseudoreflection_set;
use super::su2::{
    close_under_multiplication, close_with_expected_order, i120_generators, o48_generators,
    t24_generators,
};

// ---------------------------------------------------------------------------
// Family tags and specs
// ---------------------------------------------------------------------------

/// The family tag of the classical catalog.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DuValType {
    /// Diagonal fiber products of two cyclic pieces.
    I,
    /// Scalars times the quaternion group D₁.
    II,
    /// Index-two graft of scalars onto a binary dihedral piece.
    III,
    /// The odd-parameter variant of III with a ℤ₄ quotient pairing.
    IIIPrime,
    /// Binary dihedral doubling `D_{2ℓ}/D_ℓ`.
    IV,
    /// Scalars times the binary tetrahedral group.
    V,
    /// Scalars grafted onto T24 through its ℤ₃ quotient.
    VI,
    /// Scalars times the binary octahedral group.
    VII,
    /// Scalars grafted onto O48 through its ℤ₂ quotient.
    VIII,
    /// Scalars times the binary icosahedral group.
    IX,
}

impl fmt::Display for DuValType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DuValType::I => "I",
            DuValType::II => "II",
            DuValType::III => "III",
            DuValType::IIIPrime => "III'",
            DuValType::IV => "IV",
            DuValType::V => "V",
            DuValType::VI => "VI",
            DuValType::VII => "VII",
            DuValType::VIII => "VIII",
            DuValType::IX => "IX",
        };
        f.write_str(s)
    }
}

/// One member of one family: the family tag plus its parameters.
///
/// Parameter meanings follow the table in the module docs.  For Type I the
/// scalar side has order `2m` with kernel `Ω_f`, the diagonal side order
/// `2ℓ` with kernel `Ω_gˢ`, and `d` twists the quotient isomorphism
/// (`gcd(d, 2m/f) = 1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DuValSpec {
    /// Type I: `(Ω_{2m}/Ω_f ; Ω_{2ℓ}ˢ/Ω_gˢ)` with twist `d`.
    I {
        /// Scalar side half-order.
        m: u64,
        /// Diagonal side half-order.
        ell: u64,
        /// Scalar kernel order; `f | 2m`.
        f: u64,
        /// Diagonal kernel order; `g | 2ℓ`, `g ≡ f (mod 2)`, `2m/f = 2ℓ/g`.
        g: u64,
        /// Quotient twist, `1 ≤ d ≤ 2m/f`, `gcd(d, 2m/f) = 1`.
        d: u64,
    },
    /// Type II: order `4m`.
    II {
        /// Scalar side half-order.
        m: u64,
    },
    /// Type III: order `4ℓm`.
    III {
        /// Scalar parameter.
        m: u64,
        /// Binary dihedral parameter.
        ell: u64,
    },
    /// Type III′: order `2ℓm`, both parameters odd.
    IIIPrime {
        /// Scalar parameter (odd).
        m: u64,
        /// Binary dihedral parameter (odd).
        ell: u64,
    },
    /// Type IV: order `8ℓm`.
    IV {
        /// Scalar parameter.
        m: u64,
        /// Binary dihedral parameter.
        ell: u64,
    },
    /// Type V: order `24m`.
    V {
        /// Scalar side half-order.
        m: u64,
    },
    /// Type VI: order `24m`.
    VI {
        /// Scalar side half-order.
        m: u64,
    },
    /// Type VII: order `48m`.
    VII {
        /// Scalar side half-order.
        m: u64,
    },
    /// Type VIII: order `48m`.
    VIII {
        /// Scalar side half-order.
        m: u64,
    },
    /// Type IX: order `120m`.
    IX {
        /// Scalar side half-order.
        m: u64,
    },
}

impl fmt::Display for DuValSpec {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            DuValSpec::I { m, ell, f, g, d } => {
                write!(out, "I(m={m}, ell={ell}, f={f}, g={g}, d={d})")
            }
            DuValSpec::II { m } => write!(out, "II(m={m})"),
            DuValSpec::III { m, ell } => write!(out, "III(m={m}, ell={ell})"),
            DuValSpec::IIIPrime { m, ell } => write!(out, "III'(m={m}, ell={ell})"),
            DuValSpec::IV { m, ell } => write!(out, "IV(m={m}, ell={ell})"),
            DuValSpec::V { m } => write!(out, "V(m={m})"),
            DuValSpec::VI { m } => write!(out, "VI(m={m})"),
            DuValSpec::VII { m } => write!(out, "VII(m={m})"),
            DuValSpec::VIII { m } => write!(out, "VIII(m={m})"),
            DuValSpec::IX { m } => write!(out, "IX(m={m})"),
        }
    }
}

impl DuValSpec {
    /// The family tag.
    pub fn duval_type(&self) -> DuValType {
        match self {
            DuValSpec::I { .. } => DuValType::I,
            DuValSpec::II { .. } => DuValType::II,
            DuValSpec::III { .. } => DuValType::III,
            DuValSpec::IIIPrime { .. } => DuValType::IIIPrime,
            DuValSpec::IV { .. } => DuValType::IV,
            DuValSpec::V { .. } => DuValType::V,
            DuValSpec::VI { .. } => DuValType::VI,
            DuValSpec::VII { .. } => DuValType::VII,
            DuValSpec::VIII { .. } => DuValType::VIII,
            DuValSpec::IX { .. } => DuValType::IX,
        }
    }

    /// The order the family formula predicts for these parameters.
    pub fn predicted_order(&self) -> u64 {
        match *self {
            DuValSpec::I { ell, f, .. } => ell * f,
            DuValSpec::II { m } => 4 * m,
            DuValSpec::III { m, ell } => 4 * ell * m,
            DuValSpec::IIIPrime { m, ell } => 2 * ell * m,
            DuValSpec::IV { m, ell } => 8 * ell * m,
            DuValSpec::V { m } => 24 * m,
            DuValSpec::VI { m } => 24 * m,
            DuValSpec::VII { m } => 48 * m,
            DuValSpec::VIII { m } => 48 * m,
            DuValSpec::IX { m } => 120 * m,
        }
    }

    /// Checks the parameter constraints of the family.
    pub fn validate(&self) -> Result<(), U2Error> {
        let fail = |reason: String| {
            Err(U2Error::InvalidSpec {
                spec: self.to_string(),
                reason,
            })
        };
        let positive = |params: &[(&str, u64)]| -> Result<(), U2Error> {
            for &(name, v) in params {
                if v == 0 {
                    return Err(U2Error::InvalidSpec {
                        spec: self.to_string(),
                        reason: format!("parameter {name} must be positive"),
                    });
                }
            }
            Ok(())
        };
        match *self {
            DuValSpec::I { m, ell, f, g, d } => {
                positive(&[("m", m), ("ell", ell), ("f", f), ("g", g), ("d", d)])?;
                if (2 * m) % f != 0 {
                    return fail(format!("f = {f} must divide 2m = {}", 2 * m));
                }
                if (2 * ell) % g != 0 {
                    return fail(format!("g = {g} must divide 2ell = {}", 2 * ell));
                }
                if f % 2 != g % 2 {
                    return fail(format!("f = {f} and g = {g} must have the same parity"));
                }
                if 2 * m / f != 2 * ell / g {
                    return fail(format!(
                        "quotient orders differ: 2m/f = {} but 2ell/g = {}",
                        2 * m / f,
                        2 * ell / g
                    ));
                }
                let k = 2 * m / f;
                if d > k {
                    return fail(format!("twist d = {d} must lie in 1..={k}"));
                }
                if d.gcd(&k) != 1 {
                    return fail(format!("twist d = {d} must be coprime to 2m/f = {k}"));
                }
                Ok(())
            }
            DuValSpec::II { m }
            | DuValSpec::V { m }
            | DuValSpec::VI { m }
            | DuValSpec::VII { m }
            | DuValSpec::VIII { m }
            | DuValSpec::IX { m } => positive(&[("m", m)]),
            DuValSpec::III { m, ell } | DuValSpec::IV { m, ell } => {
                positive(&[("m", m), ("ell", ell)])
            }
            DuValSpec::IIIPrime { m, ell } => {
                positive(&[("m", m), ("ell", ell)])?;
                if m % 2 == 0 || ell % 2 == 0 {
                    return fail(format!("m = {m} and ell = {ell} must both be odd"));
                }
                Ok(())
            }
        }
    }

    /// The generator list realizing the fiber product: kernel generators of
    /// both pieces plus one graph generator pairing the quotient generators.
    fn generators(&self) -> Result<Vec<UnitaryMatrix2>, U2Error> {
        let scalar = UnitaryMatrix2::scalar_root;
        let diag = UnitaryMatrix2::su2_diag;
        let b = UnitaryMatrix2::b_matrix();
        Ok(match *self {
            DuValSpec::I { m, ell, f, g, d } => vec![
                scalar(f, 1),
                diag(g, 1),
                scalar(2 * m, 1).mul(&diag(2 * ell, d as i64)),
            ],
            DuValSpec::II { m } => vec![scalar(2 * m, 1), b],
            DuValSpec::III { m, ell } => {
                vec![scalar(2 * m, 1), diag(2 * ell, 1), scalar(4 * m, 1).mul(&b)]
            }
            DuValSpec::IIIPrime { m, ell } => {
                vec![scalar(m, 1), diag(ell, 1), scalar(4 * m, 1).mul(&b)]
            }
            DuValSpec::IV { m, ell } => vec![
                scalar(2 * m, 1),
                diag(2 * ell, 1),
                b,
                scalar(4 * m, 1).mul(&diag(4 * ell, 1)),
            ],
            DuValSpec::V { m } => {
                let mut gens = t24_generators()?;
                gens.push(scalar(2 * m, 1));
                gens
            }
            DuValSpec::VI { m } => {
                let omega = t24_generators()?.pop().expect("three generators");
                vec![
                    scalar(2 * m, 1),
                    diag(4, 1),
                    b,
                    scalar(6 * m, 1).mul(&omega),
                ]
            }
            DuValSpec::VII { m } => {
                let mut gens = o48_generators()?;
                gens.push(scalar(2 * m, 1));
                gens
            }
            DuValSpec::VIII { m } => {
                let mut gens = t24_generators()?;
                gens.push(scalar(2 * m, 1));
                gens.push(scalar(4 * m, 1).mul(&diag(8, 1)));
                gens
            }
            DuValSpec::IX { m } => {
                let mut gens = i120_generators()?;
                gens.push(scalar(2 * m, 1));
                gens
            }
        })
    }
}

// ---------------------------------------------------------------------------
// The group container
// ---------------------------------------------------------------------------

/// A finite subgroup of U(2) with its pseudoreflection census.
///
/// Invariants established at construction: the element list is sorted,
/// duplicate-free, closed under multiplication, contains the identity, and
/// lives entirely at one conductor; `pseudoreflections` is the sublist of
/// elements fixing a line pointwise; `primitive_set` holds one generator
/// per fixed line, whose powers reach every pseudoreflection with that
/// line, no two primitives sharing a nontrivial power.
#[derive(Clone, Debug)]
pub struct FiniteU2Group {
    spec: Option<DuValSpec>,
    label: String,
    elements: Vec<UnitaryMatrix2>,
    pseudoreflections: Vec<UnitaryMatrix2>,
    primitive_set: Vec<(UnitaryMatrix2, u64)>,
}

impl fmt::Display for FiniteU2Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {})", self.label, self.elements.len())
    }
}

impl FiniteU2Group {
    fn from_closed_elements(
        spec: Option<DuValSpec>,
        label: String,
        elements: Vec<UnitaryMatrix2>,
    ) -> Result<Self, U2Error> {
        let primitive_set = primitive_pseudoreflection_set(&elements)?;
        let pseudoreflections: Vec<UnitaryMatrix2> = elements
            .iter()
            .filter(|g| super::reflections::is_pseudoreflection(g).is_some())
            .cloned()
            .collect();
        Ok(FiniteU2Group {
            spec,
            label,
            elements,
            pseudoreflections,
            primitive_set,
        })
    }

    /// Builds a group by closing a generator list, with a safety cap of ten
    /// times `expected` when an expected order is given (and an exact order
    /// check), or a default cap of 10 000 elements otherwise.
    pub fn from_generators(
        label: &str,
        generators: &[UnitaryMatrix2],
        expected_order: Option<u64>,
    ) -> Result<Self, U2Error> {
        let elements = match expected_order {
            Some(n) => close_with_expected_order(generators, n, label)?,
            None => close_under_multiplication(generators, 10_000, label)?,
        };
        FiniteU2Group::from_closed_elements(None, label.to_string(), elements)
    }

    /// Wraps an explicit element list, verifying it really is a group
    /// (closure under products and presence of the identity).
    pub fn from_elements(label: &str, elements: Vec<UnitaryMatrix2>) -> Result<Self, U2Error> {
        let mut conductor = 1u64;
        for e in &elements {
            conductor = conductor.lcm(&e.conductor());
        }
        let mut sorted: Vec<UnitaryMatrix2> = elements.iter().map(|e| e.embed(conductor)).collect();
        UnitaryMatrix2::sort_dedup(&mut sorted);
        let cap = sorted.len().saturating_mul(10);
        let closed = close_under_multiplication(&sorted, cap, label)?;
        if closed != sorted {
            return Err(U2Error::OrderMismatch {
                label: label.to_string(),
                expected: sorted.len() as u64,
                found: closed.len() as u64,
            });
        }
        FiniteU2Group::from_closed_elements(None, label.to_string(), closed)
    }

    /// The catalog spec this group was built from, if any.
    pub fn spec(&self) -> Option<&DuValSpec> {
        self.spec.as_ref()
    }

    /// Human-readable name.
    pub fn label(&self) -> &str {
        &self.label
    }

    /// Number of elements.
    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    /// The sorted element list; all entries share [`Self::conductor`].
    pub fn elements(&self) -> &[UnitaryMatrix2] {
        &self.elements
    }

    /// The common conductor of all elements.
    pub fn conductor(&self) -> u64 {
        self.elements[0].conductor()
    }

    /// The pseudoreflections, as a sublist of the elements.
    pub fn pseudoreflections(&self) -> &[UnitaryMatrix2] {
        &self.pseudoreflections
    }

    /// One pseudoreflection generator per fixed line, with its order.
    pub fn primitive_set(&self) -> &[(UnitaryMatrix2, u64)] {
        &self.primitive_set
    }

    /// Exact membership test (embeds into the group conductor when that is
    /// possible; a conductor that does not divide the group's cannot hold a
    /// group element representation and yields `false`).
    pub fn contains(&self, g: &UnitaryMatrix2) -> bool {
        let c = self.conductor();
        if c % g.conductor() != 0 {
            return false;
        }
        let embedded = g.embed(c);
        self.elements.binary_search(&embedded).is_ok()
    }

    /// The element list re-embedded at a larger conductor, for cross-group
    /// set comparison.
    fn elements_at(&self, conductor: u64) -> Vec<UnitaryMatrix2> {
        let mut v: Vec<UnitaryMatrix2> =
            self.elements.iter().map(|g| g.embed(conductor)).collect();
        v.sort();
        v
    }
}

/// Builds the group a catalog spec describes: validates the parameters,
/// closes the generator list, and checks the element count against the
/// family's order formula.
pub fn duval_group(spec: &DuValSpec) -> Result<FiniteU2Group, U2Error> {
    spec.validate()?;
    let label = spec.to_string();
    let elements =
        close_with_expected_order(&spec.generators()?, spec.predicted_order(), &label)?;
    FiniteU2Group::from_closed_elements(Some(*spec), label, elements)
}

// ---------------------------------------------------------------------------
// Enumeration by order
// ---------------------------------------------------------------------------

/// Parameter bounds for [`enumerate_groups_of_order`].  A candidate spec is
/// skipped when any of its integer parameters exceeds `max_parameter`.
#[derive(Clone, Copy, Debug)]
pub struct EnumerationCaps {
    /// Upper bound applied to every spec parameter.
    pub max_parameter: u64,
}

impl Default for EnumerationCaps {
    fn default() -> Self {
        EnumerationCaps {
            max_parameter: u64::MAX,
        }
    }
}

impl EnumerationCaps {
    fn admits(&self, spec: &DuValSpec) -> bool {
        let params: Vec<u64> = match *spec {
            DuValSpec::I { m, ell, f, g, d } => vec![m, ell, f, g, d],
            DuValSpec::III { m, ell }
            | DuValSpec::IIIPrime { m, ell }
            | DuValSpec::IV { m, ell } => vec![m, ell],
            DuValSpec::II { m }
            | DuValSpec::V { m }
            | DuValSpec::VI { m }
            | DuValSpec::VII { m }
            | DuValSpec::VIII { m }
            | DuValSpec::IX { m } => vec![m],
        };
        params.into_iter().all(|p| p <= self.max_parameter)
    }
}

/// Divisors of `n` in increasing order.
fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Every catalog spec whose order formula hits `order`, before building.
fn candidate_specs(order: u64, caps: &EnumerationCaps) -> Vec<DuValSpec> {
    let mut out = Vec::new();
    // Type I: ℓ·f = order; g | 2ℓ with matching parity and m = ℓ·f/g.
    for f in divisors(order) {
        let ell = order / f;
        for g in divisors(2 * ell) {
            if g % 2 != f % 2 || (ell * f) % g != 0 {
                continue;
            }
            let m = ell * f / g;
            let k = 2 * m / f;
            debug_assert_eq!(k, 2 * ell / g);
            for d in 1..=k {
                if d.gcd(&k) == 1 {
                    out.push(DuValSpec::I { m, ell, f, g, d });
                }
            }
        }
    }
    // Types with order 4·ℓ·m and friends: walk factorizations.
    if order % 4 == 0 {
        out.push(DuValSpec::II { m: order / 4 });
        for ell in divisors(order / 4) {
            out.push(DuValSpec::III {
                m: order / 4 / ell,
                ell,
            });
        }
    }
    if order % 2 == 0 {
        for ell in divisors(order / 2) {
            let m = order / 2 / ell;
            if ell % 2 == 1 && m % 2 == 1 {
                out.push(DuValSpec::IIIPrime { m, ell });
            }
        }
    }
    if order % 8 == 0 {
        for ell in divisors(order / 8) {
            out.push(DuValSpec::IV {
                m: order / 8 / ell,
                ell,
            });
        }
    }
    if order % 24 == 0 {
        out.push(DuValSpec::V { m: order / 24 });
        out.push(DuValSpec::VI { m: order / 24 });
    }
    if order % 48 == 0 {
        out.push(DuValSpec::VII { m: order / 48 });
        out.push(DuValSpec::VIII { m: order / 48 });
    }
    if order % 120 == 0 {
        out.push(DuValSpec::IX { m: order / 120 });
    }
    let mut out: Vec<DuValSpec> = out.into_iter().filter(|s| caps.admits(s)).collect();
    out.sort();
    out
}

/// Builds every catalog group of the given order, deduplicated by exact
/// element-set equality.  When several specs produce the same element set,
/// the spec that sorts first is kept.  The result is sorted by spec.
pub fn enumerate_groups_of_order(
    order: u64,
    caps: &EnumerationCaps,
) -> Result<Vec<FiniteU2Group>, U2Error> {
    if order == 0 {
        return Err(U2Error::InvalidSpec {
            spec: "enumeration".to_string(),
            reason: "order must be positive".to_string(),
        });
    }
    let specs = candidate_specs(order, caps);
    let mut groups: Vec<FiniteU2Group> = Vec::new();
    for spec in specs {
        groups.push(duval_group(&spec)?);
    }
    // Dedup by element set at a common conductor.
    let mut batch_conductor = 1u64;
    for g in &groups {
        batch_conductor = batch_conductor.lcm(&g.conductor());
    }
    let mut by_elements: BTreeMap<Vec<UnitaryMatrix2>, FiniteU2Group> = BTreeMap::new();
    for g in groups {
        let key = g.elements_at(batch_conductor);
        by_elements.entry(key).or_insert(g);
    }
    let mut kept: Vec<FiniteU2Group> = by_elements.into_values().collect();
    kept.sort_by_key(|g| g.spec().copied());
    Ok(kept)
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::q;
    use crate::u2_catalog::element::rational_scalar;

    #[test]
    fn type_ii_is_scalars_times_quaternion_b() {
        // II(m): order 4m, elements ω_{2m}^j·b^k.
        for m in [1u64, 2, 3, 5] {
            let g = duval_group(&DuValSpec::II { m }).unwrap();
            assert_eq!(g.order(), 4 * m, "II({m})");
            let b = UnitaryMatrix2::b_matrix();
            for j in 0..2 * m {
                for k in 0..4 {
                    let el = UnitaryMatrix2::scalar_root(2 * m, j as i64).mul(&b.pow(k));
                    assert!(g.contains(&el), "II({m}) misses ω^{j}·b^{k}");
                }
            }
        }
    }

    #[test]
    fn type_iii_prime_orders() {
        for (m, ell) in [(1u64, 1u64), (3, 1), (5, 1), (3, 3), (1, 5)] {
            let g = duval_group(&DuValSpec::IIIPrime { m, ell }).unwrap();
            assert_eq!(g.order(), 2 * ell * m, "III'({m},{ell})");
        }
    }

    #[test]
    fn type_iii_prime_rejects_even_parameters() {
        assert!(matches!(
            duval_group(&DuValSpec::IIIPrime { m: 2, ell: 1 }),
            Err(U2Error::InvalidSpec { .. })
        ));
        assert!(matches!(
            duval_group(&DuValSpec::IIIPrime { m: 1, ell: 4 }),
            Err(U2Error::InvalidSpec { .. })
        ));
    }

    #[test]
    fn type_iv_orders() {
        for (m, ell) in [(1u64, 1u64), (2, 1), (3, 1), (1, 2)] {
            let g = duval_group(&DuValSpec::IV { m, ell }).unwrap();
            assert_eq!(g.order(), 8 * ell * m, "IV({m},{ell})");
        }
    }

    #[test]
    fn type_i_constraint_violations() {
        // f and g of different parity.
        assert!(DuValSpec::I { m: 2, ell: 2, f: 1, g: 2, d: 1 }.validate().is_err());
        // Quotient orders disagree.
        assert!(DuValSpec::I { m: 4, ell: 2, f: 2, g: 2, d: 1 }.validate().is_err());
        // Twist not coprime.
        assert!(DuValSpec::I { m: 2, ell: 2, f: 1, g: 1, d: 2 }.validate().is_err());
    }

    #[test]
    fn type_i_reflection_group_of_order_two() {
        // I(m=2, ell=2, f=1, g=1, d=1) = {I, diag(−1, 1)}.
        let g = duval_group(&DuValSpec::I { m: 2, ell: 2, f: 1, g: 1, d: 1 }).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.pseudoreflections().len(), 1);
        let one = crate::exactalg::CyclotomicElement::one(4);
        let refl = UnitaryMatrix2::diag(one.neg(), one).unwrap();
        assert!(g.contains(&refl));
    }

    #[test]
    fn type_i_scalar_center_of_order_two() {
        // I(m=1, ell=1, f=2, g=2, d=1) = {±I}: no pseudoreflections.
        let g = duval_group(&DuValSpec::I { m: 1, ell: 1, f: 2, g: 2, d: 1 }).unwrap();
        assert_eq!(g.order(), 2);
        assert!(g.pseudoreflections().is_empty());
        assert!(g.contains(&rational_scalar(q(-1, 1))));
    }

    #[test]
    fn large_family_orders() {
        assert_eq!(duval_group(&DuValSpec::V { m: 1 }).unwrap().order(), 24);
        assert_eq!(duval_group(&DuValSpec::VI { m: 1 }).unwrap().order(), 24);
        assert_eq!(duval_group(&DuValSpec::VII { m: 1 }).unwrap().order(), 48);
        assert_eq!(duval_group(&DuValSpec::VIII { m: 1 }).unwrap().order(), 48);
        assert_eq!(duval_group(&DuValSpec::IX { m: 1 }).unwrap().order(), 120);
    }

    #[test]
    fn type_vi_differs_from_type_v() {
        let v = duval_group(&DuValSpec::V { m: 1 }).unwrap();
        let vi = duval_group(&DuValSpec::VI { m: 1 }).unwrap();
        assert_eq!(v.order(), vi.order());
        let c = v.conductor().lcm(&vi.conductor());
        assert_ne!(v.elements_at(c), vi.elements_at(c));
    }

    #[test]
    fn enumeration_of_order_one_is_trivial_group() {
        let groups = enumerate_groups_of_order(1, &EnumerationCaps::default()).unwrap();
        assert_eq!(groups.len(), 1);
        assert_eq!(groups[0].order(), 1);
        assert!(groups[0].elements()[0].is_identity());
    }

    #[test]
    fn enumeration_of_order_two_finds_four_element_sets() {
        // {±I}, {I, diag(−1,1)}, {I, diag(1,−1)}, {I, [[0,i],[−i,0]]}-type:
        // the catalog yields exactly four distinct subgroups of order 2.
        let groups = enumerate_groups_of_order(2, &EnumerationCaps::default()).unwrap();
        assert_eq!(groups.len(), 4, "got: {:?}", groups.iter().map(|g| g.label()).collect::<Vec<_>>());
    }

    #[test]
    fn enumeration_of_order_four_contains_ii_and_iii() {
        let groups = enumerate_groups_of_order(4, &EnumerationCaps::default()).unwrap();
        let types: Vec<DuValType> =
            groups.iter().filter_map(|g| g.spec().map(|s| s.duval_type())).collect();
        assert!(types.contains(&DuValType::II), "types: {types:?}");
        assert!(types.contains(&DuValType::III), "types: {types:?}");
    }

    #[test]
    fn enumeration_respects_caps() {
        let caps = EnumerationCaps { max_parameter: 1 };
        let groups = enumerate_groups_of_order(4, &caps).unwrap();
        for g in &groups {
            if let Some(DuValSpec::II { m }) = g.spec() {
                assert!(*m <= 1);
            }
        }
        // II(m=1) survives the cap; II would need m=1 for order 4.
        assert!(groups.iter().any(|g| matches!(g.spec(), Some(DuValSpec::II { m: 1 }))));
    }

    #[test]
    fn from_elements_rejects_non_closed_lists() {
        let b = UnitaryMatrix2::b_matrix();
        let err = FiniteU2Group::from_elements("not-a-group", vec![UnitaryMatrix2::identity(), b]);
        assert!(matches!(err, Err(U2Error::OrderMismatch { .. })));
    }

    #[test]
    fn element_orders_divide_group_order() {
        for spec in [
            DuValSpec::II { m: 3 },
            DuValSpec::III { m: 2, ell: 2 },
            DuValSpec::IIIPrime { m: 3, ell: 1 },
            DuValSpec::IV { m: 1, ell: 2 },
            DuValSpec::VI { m: 1 },
        ] {
            let g = duval_group(&spec).unwrap();
            for el in g.elements() {
                assert_eq!(
                    g.order() % el.order(),
                    0,
                    "{spec}: element order {} does not divide {}",
                    el.order(),
                    g.order()
                );
            }
        }
    }
}
