//! Exact 2×2 unitary matrices with cyclotomic entries.
//!
//! [`UnitaryMatrix2`] stores four [`CyclotomicElement`]s at a common
//! conductor.  The public constructor checks `g*·g = I` exactly, so a value
//! of this type is always genuinely unitary; products, inverses, powers, and
//! conjugate transposes then stay unitary by construction and skip the check.
//!
//! Equality, ordering, and hashing compare the entry coordinates at the
//! stored conductor.  Two matrices representing the same complex matrix at
//! *different* conductors compare unequal, so group-building code keeps every
//! element of one group at one fixed conductor (see `FiniteU2Group`), and
//! cross-group comparisons embed both sides into a common conductor first.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use num_integer::Integer;
use thiserror::Error;

use crate::exactalg::{CycError, CyclotomicElement};

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// Errors from matrix construction and finite-group machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum U2Error {
    /// The entries do not satisfy `g*·g = I`.
    #[error("matrix is not unitary: conjugate-transpose times self is not the identity")]
    NotUnitary,
    /// A closure run exceeded its safety cap without stabilizing.
    #[error("group closure for {label} exceeded the safety cap of {cap} elements")]
    ClosureExceeded {
        /// Description of the group being generated.
        label: String,
        /// The element-count cap that was hit.
        cap: usize,
    },
    /// A family spec violates its parameter constraints.
    #[error("invalid group spec {spec}: {reason}")]
    InvalidSpec {
        /// Display form of the offending spec.
        spec: String,
        /// Which constraint failed.
        reason: String,
    },
    /// A generated group's size disagrees with the order formula.
    #[error("group {label} closed at {found} elements but the order formula predicts {expected}")]
    OrderMismatch {
        /// Description of the group.
        label: String,
        /// Order predicted by the family's formula.
        expected: u64,
        /// Number of elements the closure actually produced.
        found: u64,
    },
    /// The pseudoreflection census failed an internal consistency check.
    #[error("pseudoreflection census inconsistency: {detail}")]
    ReflectionCensus {
        /// What went wrong.
        detail: String,
    },
    /// A Molien computation produced a provably non-rational coefficient.
    #[error("Molien series coefficient is not rational: {detail}")]
    NonRationalMolien {
        /// Which certification failed.
        detail: String,
    },
    /// A Molien computation violated a structural identity that holds for
    /// every finite group (an internal bug, surfaced loudly).
    #[error("Molien series failed an internal consistency check: {detail}")]
    MolienSanity {
        /// Which identity failed.
        detail: String,
    },
    /// Underlying cyclotomic arithmetic error.
    #[error(transparent)]
    Cyclotomic(#[from] CycError),
}

// ---------------------------------------------------------------------------
// The matrix type
// ---------------------------------------------------------------------------

/// An exact 2×2 unitary matrix over a cyclotomic field.
///
/// Entries live at a single common conductor.  The multiplicative order is
/// computed on first request and cached.
#[derive(Debug)]
pub struct UnitaryMatrix2 {
    entries: [[CyclotomicElement; 2]; 2],
    order_cache: OnceLock<u64>,
}

impl Clone for UnitaryMatrix2 {
    fn clone(&self) -> Self {
        let cache = OnceLock::new();
        if let Some(&o) = self.order_cache.get() {
            let _ = cache.set(o);
        }
        UnitaryMatrix2 {
            entries: self.entries.clone(),
            order_cache: cache,
        }
    }
}

impl PartialEq for UnitaryMatrix2 {
    fn eq(&self, other: &Self) -> bool {
        self.entries == other.entries
    }
}

impl Eq for UnitaryMatrix2 {}

impl Hash for UnitaryMatrix2 {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.entries.hash(state);
    }
}

impl PartialOrd for UnitaryMatrix2 {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for UnitaryMatrix2 {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.entries.cmp(&other.entries)
    }
}

impl fmt::Display for UnitaryMatrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.entries[0][0], self.entries[0][1], self.entries[1][0], self.entries[1][1]
        )
    }
}

/// Embeds four entries into their least common conductor.
fn promote(entries: [[CyclotomicElement; 2]; 2]) -> [[CyclotomicElement; 2]; 2] {
    let mut target = 1u64;
    for row in &entries {
        for e in row {
            target = target.lcm(&e.conductor());
        }
    }
    entries.map(|row| row.map(|e| if e.conductor() == target { e } else { e.embed(target) }))
}

impl UnitaryMatrix2 {
    // -- constructors -------------------------------------------------------

    /// Builds a matrix from entries, embedding them into a common conductor
    /// and checking unitarity exactly.
    pub fn new(entries: [[CyclotomicElement; 2]; 2]) -> Result<Self, U2Error> {
        let m = UnitaryMatrix2 {
            entries: promote(entries),
            order_cache: OnceLock::new(),
        };
        let product = m.conjugate_transpose().mul(&m);
        if product.is_identity() {
            Ok(m)
        } else {
            Err(U2Error::NotUnitary)
        }
    }

    /// Internal constructor for values already known to be unitary
    /// (products, powers, embeddings of unitary matrices).
    fn known_unitary(entries: [[CyclotomicElement; 2]; 2]) -> Self {
        UnitaryMatrix2 {
            entries: promote(entries),
            order_cache: OnceLock::new(),
        }
    }

    /// The identity matrix at conductor 1.
    pub fn identity() -> Self {
        let one = CyclotomicElement::one(1);
        let zero = CyclotomicElement::zero(1);
        UnitaryMatrix2::known_unitary([[one.clone(), zero.clone()], [zero, one]])
    }

    /// The scalar matrix `ζ_k^j · I`.
    pub fn scalar_root(k: u64, j: i64) -> Self {
        let s = CyclotomicElement::zeta_pow(k, j);
        let zero = CyclotomicElement::zero(k);
        UnitaryMatrix2::known_unitary([[s.clone(), zero.clone()], [zero, s]])
    }

    /// The diagonal matrix `diag(ζ_k^j, ζ_k^{-j})`, the standard circle
    /// element inside SU(2).
    pub fn su2_diag(k: u64, j: i64) -> Self {
        let a = CyclotomicElement::zeta_pow(k, j);
        let b = CyclotomicElement::zeta_pow(k, -j);
        let zero = CyclotomicElement::zero(k);
        UnitaryMatrix2::known_unitary([[a, zero.clone()], [zero, b]])
    }

    /// The matrix `[[0, 1], [-1, 0]]` (the quaternion `j`), the standard
    /// anti-diagonal generator of the binary dihedral groups.
    pub fn b_matrix() -> Self {
        let one = CyclotomicElement::one(1);
        let zero = CyclotomicElement::zero(1);
        let minus_one = one.neg();
        UnitaryMatrix2::known_unitary([[zero.clone(), one], [minus_one, zero]])
    }

    /// An arbitrary diagonal unitary `diag(a, b)`; checks that both entries
    /// are roots of unity is *not* performed — only unitarity.
    pub fn diag(a: CyclotomicElement, b: CyclotomicElement) -> Result<Self, U2Error> {
        let n = a.conductor().lcm(&b.conductor());
        let zero = CyclotomicElement::zero(n);
        UnitaryMatrix2::new([[a.embed(n), zero.clone()], [zero, b.embed(n)]])
    }

    // -- accessors ----------------------------------------------------------

    /// The common conductor of the entries.
    pub fn conductor(&self) -> u64 {
        self.entries[0][0].conductor()
    }

    /// Entry at row `i`, column `j` (0-indexed).
    pub fn entry(&self, i: usize, j: usize) -> &CyclotomicElement {
        &self.entries[i][j]
    }

    /// All four entries, row-major.
    pub fn entries(&self) -> &[[CyclotomicElement; 2]; 2] {
        &self.entries
    }

    // -- structure ----------------------------------------------------------

    /// Re-embeds every entry into the given conductor (which must be a
    /// multiple of the current one).
    pub fn embed(&self, conductor: u64) -> Self {
        let m = UnitaryMatrix2 {
            entries: self.entries.clone().map(|row| row.map(|e| e.embed(conductor))),
            order_cache: OnceLock::new(),
        };
        if let Some(&o) = self.order_cache.get() {
            let _ = m.order_cache.set(o);
        }
        m
    }

    /// Matrix product, embedding both factors into a common conductor.
    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.conductor().lcm(&rhs.conductor());
        let a = if self.conductor() == n { self.entries.clone() } else { self.embed(n).entries };
        let b = if rhs.conductor() == n { rhs.entries.clone() } else { rhs.embed(n).entries };
        let cell = |i: usize, j: usize| a[i][0].mul(&b[0][j]).add(&a[i][1].mul(&b[1][j]));
        UnitaryMatrix2 {
            entries: [[cell(0, 0), cell(0, 1)], [cell(1, 0), cell(1, 1)]],
            order_cache: OnceLock::new(),
        }
    }

    /// Conjugate transpose; for a unitary matrix this is the inverse.
    pub fn conjugate_transpose(&self) -> Self {
        UnitaryMatrix2 {
            entries: [
                [self.entries[0][0].conj(), self.entries[1][0].conj()],
                [self.entries[0][1].conj(), self.entries[1][1].conj()],
            ],
            order_cache: OnceLock::new(),
        }
    }

    /// The inverse (= conjugate transpose).
    pub fn inverse(&self) -> Self {
        self.conjugate_transpose()
    }

    /// Determinant.
    pub fn det(&self) -> CyclotomicElement {
        self.entries[0][0]
            .mul(&self.entries[1][1])
            .sub(&self.entries[0][1].mul(&self.entries[1][0]))
    }

    /// Trace.
    pub fn trace(&self) -> CyclotomicElement {
        self.entries[0][0].add(&self.entries[1][1])
    }

    /// `self^k` by binary exponentiation.
    pub fn pow(&self, k: u64) -> Self {
        let mut base = self.clone();
        let mut acc = UnitaryMatrix2::identity().embed_to_match(self);
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    fn embed_to_match(&self, other: &Self) -> Self {
        if self.conductor() == other.conductor() {
            self.clone()
        } else {
            self.embed(self.conductor().lcm(&other.conductor()))
        }
    }

    /// Exact identity test.
    pub fn is_identity(&self) -> bool {
        self.entries[0][0].is_one()
            && self.entries[1][1].is_one()
            && self.entries[0][1].is_zero()
            && self.entries[1][0].is_zero()
    }

    /// True when the off-diagonal entries vanish.
    pub fn is_diagonal(&self) -> bool {
        self.entries[0][1].is_zero() && self.entries[1][0].is_zero()
    }

    /// True when the matrix is a scalar multiple of the identity.
    pub fn is_scalar(&self) -> bool {
        self.is_diagonal() && self.entries[0][0] == self.entries[1][1]
    }

    /// Multiplicative order, computed by successive multiplication and
    /// cached.  Panics past a defensive cap — every matrix this library
    /// builds lives in a finite group whose order the caller has verified,
    /// so hitting the cap means a logic error, not bad input.
    pub fn order(&self) -> u64 {
        *self.order_cache.get_or_init(|| {
            const CAP: u64 = 100_000;
            let mut p = self.clone();
            let mut k = 1u64;
            while !p.is_identity() {
                p = p.mul(self);
                k += 1;
                assert!(
                    k <= CAP,
                    "matrix order exceeds {CAP}; the matrix is not in a small finite group"
                );
            }
            k
        })
    }

    /// Exponents `(e₁, e₂)` with eigenvalues `ζ_L^{e₁}, ζ_L^{e₂}` where
    /// `L = order()`.  Works by scanning the `L`-th roots of unity against
    /// the characteristic polynomial `λ² − tr·λ + det`, which is exact and
    /// complete because the eigenvalues of a finite-order matrix satisfy
    /// `λ^L = 1`.
    pub fn eigenvalue_exponents(&self) -> (u64, u64, u64) {
        let ord = self.order();
        let t = ord.lcm(&self.conductor());
        let tr = self.trace().embed(t);
        let det = self.det().embed(t);
        let step = t / ord;
        let mut roots: Vec<u64> = Vec::with_capacity(2);
        for j in 0..ord {
            let lam = CyclotomicElement::zeta_pow(t, (j * step) as i64);
            let val = lam.mul(&lam).sub(&tr.mul(&lam)).add(&det);
            if val.is_zero() {
                roots.push(j);
                if roots.len() == 2 {
                    break;
                }
            }
        }
        match roots.len() {
            2 => (roots[0], roots[1], ord),
            // A single root of a quadratic over a field is a double root.
            1 => (roots[0], roots[0], ord),
            _ => unreachable!("a finite-order unitary matrix has eigenvalues among ζ_ord powers"),
        }
    }

    /// Sorts a slice of matrices and removes exact duplicates.  All inputs
    /// must share one conductor for this to mean set-dedup; the group
    /// builders guarantee that.
    pub fn sort_dedup(list: &mut Vec<UnitaryMatrix2>) {
        list.sort();
        list.dedup();
    }
}

/// Convenience: rational scalar matrix `q·I` (used for ±I in tests).
#[cfg(test)]
pub(crate) fn rational_scalar(q: crate::exactalg::Q) -> UnitaryMatrix2 {
    let s = CyclotomicElement::from_rational(1, q);
    let zero = CyclotomicElement::zero(1);
    UnitaryMatrix2::new([[s.clone(), zero.clone()], [zero, s]])
        .expect("rational scalar of modulus one is unitary")
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::q;

    #[test]
    fn b_matrix_has_order_four_and_det_one() {
        let b = UnitaryMatrix2::b_matrix();
        assert_eq!(b.order(), 4);
        assert!(b.det().is_one());
        assert!(b.trace().is_zero());
        assert!(!b.is_diagonal());
    }

    #[test]
    fn non_unitary_entries_are_rejected() {
        let two = CyclotomicElement::from_rational(1, q(2, 1));
        let zero = CyclotomicElement::zero(1);
        let one = CyclotomicElement::one(1);
        let err = UnitaryMatrix2::new([[two, zero.clone()], [zero, one]]);
        assert_eq!(err.unwrap_err(), U2Error::NotUnitary);
    }

    #[test]
    fn mixed_conductor_product_embeds() {
        let i_scalar = UnitaryMatrix2::scalar_root(4, 1); // conductor 4
        let b = UnitaryMatrix2::b_matrix(); // conductor 1
        let ib = i_scalar.mul(&b);
        assert_eq!(ib.conductor(), 4);
        assert_eq!(ib.order(), 2);
        // (i·b)² = i²·b² = (−1)(−I) = I.
        assert!(ib.mul(&ib).is_identity());
    }

    #[test]
    fn eigenvalues_of_b_are_plus_minus_i() {
        let b = UnitaryMatrix2::b_matrix();
        let (e1, e2, l) = b.eigenvalue_exponents();
        assert_eq!(l, 4);
        let mut es = [e1, e2];
        es.sort_unstable();
        assert_eq!(es, [1, 3]); // ζ₄, ζ₄³ = ±i
    }

    #[test]
    fn eigenvalues_of_diagonal_matrix_read_off() {
        let g = UnitaryMatrix2::su2_diag(6, 1); // diag(ζ₆, ζ₆⁻¹)
        let (e1, e2, l) = g.eigenvalue_exponents();
        assert_eq!(l, 6);
        let mut es = [e1, e2];
        es.sort_unstable();
        assert_eq!(es, [1, 5]);
    }

    #[test]
    fn scalar_double_eigenvalue() {
        let s = UnitaryMatrix2::scalar_root(3, 1);
        let (e1, e2, l) = s.eigenvalue_exponents();
        assert_eq!((e1, e2, l), (1, 1, 3));
    }

    #[test]
    fn inverse_times_self_is_identity() {
        let g = UnitaryMatrix2::scalar_root(8, 3).mul(&UnitaryMatrix2::b_matrix());
        assert!(g.inverse().mul(&g).is_identity());
        assert!(g.mul(&g.inverse()).is_identity());
    }

    #[test]
    fn pow_matches_repeated_multiplication() {
        let g = UnitaryMatrix2::scalar_root(12, 5);
        let mut acc = UnitaryMatrix2::identity();
        for k in 0..6 {
            assert_eq!(g.pow(k).embed(12), acc.embed(12), "power {k}");
            acc = acc.mul(&g);
        }
    }

    #[test]
    fn order_divides_lcm_consistency() {
        // diag(ζ₆, ζ₆⁻¹) order 6; scalar i order 4; product order 12.
        let g = UnitaryMatrix2::su2_diag(6, 1).mul(&UnitaryMatrix2::scalar_root(4, 1));
        assert_eq!(g.order(), 12);
    }

    #[test]
    fn display_is_compact() {
        let b = UnitaryMatrix2::b_matrix();
        assert_eq!(format!("{b}"), "[[0, 1], [-1, 0]]");
    }
}
