//! Exact arithmetic in cyclotomic fields ℚ(ζ_N).
//!
//! Elements are coordinate vectors in the power basis `1, ζ, …, ζ^(φ(N)-1)`
//! modulo the cyclotomic polynomial Φ_N.  A per-conductor context caches the
//! reduced powers `ζ^j` so that multiplication is a convolution plus table
//! lookups.  This is all the field theory the 2×2 unitary catalog needs:
//! ring operations, inverses, complex conjugation, Galois twists, and
//! recognition of roots of unity.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::{cyclotomic_polynomial, Q};

/// Errors from cyclotomic arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycError {
    /// Inversion of zero.
    #[error("division by zero in a cyclotomic field")]
    DivisionByZero,
}

/// Euler's totient φ(n) by trial-division factorization.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1);
    let mut remaining = n;
    let mut phi = n;
    let mut p = 2u64;
    while p * p <= remaining {
        if remaining % p == 0 {
            while remaining % p == 0 {
                remaining /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if remaining > 1 {
        phi -= phi / remaining;
    }
    phi
}

// ---------------------------------------------------------------------------
// Per-conductor context
// ---------------------------------------------------------------------------

/// Cached data for one conductor: Φ_N and the reduced powers ζ^j.
struct CycCtx {
    phi: usize,
    /// Coordinates of `ζ^j` for `j = 0 .. 2n-1`, each of length `phi`.
    /// Indices up to `2n` cover every tail produced by a product of two
    /// reduced elements as well as every embedding exponent.
    reduced_powers: Vec<Vec<Q>>,
}

fn ctx(n: u64) -> Arc<CycCtx> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<CycCtx>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(c) = cache.lock().unwrap().get(&n) {
        return Arc::clone(c);
    }
    let built = Arc::new(build_ctx(n));
    cache
        .lock()
        .unwrap()
        .entry(n)
        .or_insert(built)
        .clone()
}

fn build_ctx(n: u64) -> CycCtx {
    let modulus = cyclotomic_polynomial(n);
    let phi = modulus.degree().expect("Φ_n is nonzero");
    // x^phi ≡ -(lower part of Φ_n) because Φ_n is monic.
    let top_reduction: Vec<Q> = (0..phi).map(|i| -Q::from(modulus.coeff(i))).collect();
    let zero = Q::from(BigInt::zero());
    let mut reduced_powers = Vec::with_capacity(2 * n as usize);
    let mut current = vec![zero.clone(); phi];
    current[0] = Q::from(BigInt::one());
    reduced_powers.push(current.clone());
    for _ in 1..2 * n {
        let carry = current[phi - 1].clone();
        let mut next = vec![zero.clone(); phi];
        for i in (1..phi).rev() {
            next[i] = current[i - 1].clone();
        }
        if !carry.is_zero() {
            for i in 0..phi {
                if !top_reduction[i].is_zero() {
                    next[i] = &next[i] + &(&carry * &top_reduction[i]);
                }
            }
        }
        reduced_powers.push(next.clone());
        current = next;
    }
    CycCtx {
        phi,
        reduced_powers,
    }
}

// ---------------------------------------------------------------------------
// Elements
// ---------------------------------------------------------------------------

/// An element of ℚ(ζ_N) in the power basis modulo Φ_N.
///
/// Operations require both operands to share a conductor; the catalog code
/// embeds everything into a common conductor up front.  Mixing conductors is
/// a programming error and panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclotomicElement {
    conductor: u64,
    coords: Vec<Q>,
}

impl CyclotomicElement {
    // -----------------------------------------------------------------------
    // Constructors
    // -----------------------------------------------------------------------

    /// The zero of ℚ(ζ_n).
    pub fn zero(n: u64) -> Self {
        let c = ctx(n);
        CyclotomicElement {
            conductor: n,
            coords: vec![Q::from(BigInt::zero()); c.phi],
        }
    }

    /// The one of ℚ(ζ_n).
    pub fn one(n: u64) -> Self {
        CyclotomicElement::from_rational(n, Q::from(BigInt::one()))
    }

    /// A rational constant inside ℚ(ζ_n).
    pub fn from_rational(n: u64, value: Q) -> Self {
        let mut e = CyclotomicElement::zero(n);
        e.coords[0] = value;
        e
    }

    /// The canonical primitive root ζ_n.
    pub fn zeta(n: u64) -> Self {
        CyclotomicElement::zeta_pow(n, 1)
    }

    /// `ζ_n^k` (k arbitrary, reduced mod n).
    pub fn zeta_pow(n: u64, k: i64) -> Self {
        let c = ctx(n);
        let idx = k.rem_euclid(n as i64) as usize;
        CyclotomicElement {
            conductor: n,
            coords: c.reduced_powers[idx].clone(),
        }
    }

    // -----------------------------------------------------------------------
    // Accessors
    // -----------------------------------------------------------------------

    /// The conductor N of the ambient field ℚ(ζ_N).
    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Power-basis coordinates, length φ(N).
    pub fn coords(&self) -> &[Q] {
        &self.coords
    }

    /// `true` iff this is the zero element.
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// `true` iff this is the one element.
    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(Zero::is_zero)
    }

    /// `true` iff the element lies in ℚ.
    pub fn is_rational(&self) -> bool {
        self.coords[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, when the element lies in ℚ.
    pub fn to_rational(&self) -> Option<Q> {
        if self.is_rational() {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    fn assert_same_field(&self, other: &Self, op: &str) {
        assert_eq!(
            self.conductor, other.conductor,
            "cyclotomic {op} across different conductors; embed first"
        );
    }

    // -----------------------------------------------------------------------
    // Ring operations
    // -----------------------------------------------------------------------

    /// Sum.
    pub fn add(&self, rhs: &Self) -> Self {
        self.assert_same_field(rhs, "addition");
        CyclotomicElement {
            conductor: self.conductor,
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Difference.
    pub fn sub(&self, rhs: &Self) -> Self {
        self.assert_same_field(rhs, "subtraction");
        CyclotomicElement {
            conductor: self.conductor,
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// Negation.
    pub fn neg(&self) -> Self {
        CyclotomicElement {
            conductor: self.conductor,
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }

    /// Product: convolution of coordinates, then reduction of the tail
    /// degrees through the cached `ζ^j` table.
    pub fn mul(&self, rhs: &Self) -> Self {
        self.assert_same_field(rhs, "multiplication");
        let c = ctx(self.conductor);
        let phi = c.phi;
        let zero = Q::from(BigInt::zero());
        let mut raw = vec![zero.clone(); 2 * phi - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                raw[i + j] = &raw[i + j] + &(a * b);
            }
        }
        let mut out: Vec<Q> = raw[..phi].to_vec();
        for (t, carry) in raw.iter().enumerate().skip(phi) {
            if carry.is_zero() {
                continue;
            }
            let reduced = &c.reduced_powers[t];
            for i in 0..phi {
                if !reduced[i].is_zero() {
                    out[i] = &out[i] + &(carry * &reduced[i]);
                }
            }
        }
        CyclotomicElement {
            conductor: self.conductor,
            coords: out,
        }
    }

    /// Scales by a rational.
    pub fn scale(&self, s: &Q) -> Self {
        CyclotomicElement {
            conductor: self.conductor,
            coords: self.coords.iter().map(|a| a * s).collect(),
        }
    }

    /// `self^k` by binary exponentiation.
    pub fn pow(&self, k: u64) -> Self {
        let mut base = self.clone();
        let mut acc = CyclotomicElement::one(self.conductor);
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

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// Φ_N in ℚ[x].
    pub fn inv(&self) -> Result<Self, CycError> {
        if self.is_zero() {
            return Err(CycError::DivisionByZero);
        }
        let modulus = cyclotomic_polynomial(self.conductor);
        let m: Vec<Q> = modulus.coeffs().iter().map(|c| Q::from(c.clone())).collect();
        let a = qp_trim(self.coords.clone());
        let (g, u, _) = qp_xgcd(a, m.clone());
        // Φ_N is irreducible and deg(self) < deg(Φ_N), so the gcd is a
        // nonzero constant.
        debug_assert_eq!(qp_deg(&g), Some(0), "gcd with irreducible Φ must be constant");
        let g0 = g[0].clone();
        let (_, mut u_red) = qp_divmod(&u, &m);
        for v in u_red.iter_mut() {
            *v = &*v / &g0;
        }
        u_red.resize(self.coords.len(), Q::from(BigInt::zero()));
        Ok(CyclotomicElement {
            conductor: self.conductor,
            coords: u_red,
        })
    }

    // -----------------------------------------------------------------------
    // Field symmetries
    // -----------------------------------------------------------------------

    /// Complex conjugation: the Galois twist `ζ ↦ ζ^(N-1) = ζ^(-1)`.
    pub fn conj(&self) -> Self {
        if self.conductor <= 2 {
            return self.clone();
        }
        self.galois(self.conductor - 1)
    }

    /// The Galois automorphism `ζ ↦ ζ^t` for `gcd(t, N) = 1`.
    pub fn galois(&self, t: u64) -> Self {
        let n = self.conductor;
        assert_eq!(
            (t % n).gcd(&n),
            1,
            "ζ ↦ ζ^{t} is not an automorphism of ℚ(ζ_{n})"
        );
        let c = ctx(n);
        let zero = Q::from(BigInt::zero());
        let mut out = vec![zero; c.phi];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let image = &c.reduced_powers[((i as u64 * t) % n) as usize];
            for k in 0..c.phi {
                if !image[k].is_zero() {
                    out[k] = &out[k] + &(a * &image[k]);
                }
            }
        }
        CyclotomicElement {
            conductor: n,
            coords: out,
        }
    }

    /// Embeds into ℚ(ζ_M) for a multiple M of the conductor, via
    /// `ζ_N ↦ ζ_M^(M/N)`.
    pub fn embed(&self, target_conductor: u64) -> Self {
        let n = self.conductor;
        assert_eq!(
            target_conductor % n,
            0,
            "cannot embed ℚ(ζ_{n}) into ℚ(ζ_{target_conductor}): conductor does not divide"
        );
        if target_conductor == n {
            return self.clone();
        }
        let step = target_conductor / n;
        let c = ctx(target_conductor);
        let zero = Q::from(BigInt::zero());
        let mut out = vec![zero; c.phi];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let image = &c.reduced_powers[(i as u64 * step) as usize];
            for k in 0..c.phi {
                if !image[k].is_zero() {
                    out[k] = &out[k] + &(a * &image[k]);
                }
            }
        }
        CyclotomicElement {
            conductor: target_conductor,
            coords: out,
        }
    }

    /// If the element is exactly a power of ζ_N, returns the exponent in
    /// `0..N`.
    pub fn as_zeta_power(&self) -> Option<u64> {
        let c = ctx(self.conductor);
        (0..self.conductor).find(|&j| self.coords == c.reduced_powers[j as usize])
    }

    /// Whether the element is a root of unity.  The roots of unity inside
    /// ℚ(ζ_N) form the cyclic group of order `lcm(2, N)`, so a single power
    /// decides membership.
    pub fn is_root_of_unity(&self) -> bool {
        let order_cap = self.conductor.lcm(&2);
        self.pow(order_cap).is_one()
    }
}

impl fmt::Display for CyclotomicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if first {
                if a.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if a.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = a.abs();
            if i == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}·")?;
                }
                if i == 1 {
                    write!(f, "ζ{}", self.conductor)?;
                } else {
                    write!(f, "ζ{}^{}", self.conductor, i)?;
                }
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Small dense ℚ[x] helpers for the inverse computation
// ---------------------------------------------------------------------------

fn qp_trim(mut p: Vec<Q>) -> Vec<Q> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn qp_deg(p: &[Q]) -> Option<usize> {
    p.len().checked_sub(1)
}

/// Division with remainder in ℚ[x]; `b` must be nonzero.
fn qp_divmod(a: &[Q], b: &[Q]) -> (Vec<Q>, Vec<Q>) {
    let b = qp_trim(b.to_vec());
    let db = qp_deg(&b).expect("division by zero polynomial");
    let lead = b[db].clone();
    let mut r = qp_trim(a.to_vec());
    let mut q: Vec<Q> = Vec::new();
    while let Some(dr) = qp_deg(&r) {
        if dr < db {
            break;
        }
        let coeff = &r[dr] / &lead;
        let shift = dr - db;
        if q.len() < shift + 1 {
            q.resize(shift + 1, Q::from(BigInt::zero()));
        }
        q[shift] = &q[shift] + &coeff;
        for i in 0..=db {
            let delta = &b[i] * &coeff;
            r[i + shift] = &r[i + shift] - &delta;
        }
        r = qp_trim(r);
    }
    (q, r)
}

/// Extended gcd in ℚ[x]: returns `(g, u, v)` with `u·a + v·b = g`.
fn qp_xgcd(a: Vec<Q>, b: Vec<Q>) -> (Vec<Q>, Vec<Q>, Vec<Q>) {
    let one = vec![Q::from(BigInt::one())];
    let zero: Vec<Q> = Vec::new();
    let (mut r0, mut r1) = (qp_trim(a), qp_trim(b));
    let (mut u0, mut u1) = (one.clone(), zero.clone());
    let (mut v0, mut v1) = (zero, one);
    while !r1.is_empty() {
        let (q, r2) = qp_divmod(&r0, &r1);
        let u2 = qp_sub(&u0, &qp_mul(&q, &u1));
        let v2 = qp_sub(&v0, &qp_mul(&q, &v1));
        r0 = r1;
        r1 = r2;
        u0 = u1;
        u1 = u2;
        v0 = v1;
        v1 = v2;
    }
    (r0, u0, v0)
}

fn qp_mul(a: &[Q], b: &[Q]) -> Vec<Q> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Q::from(BigInt::zero()); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] = &out[i + j] + &(x * y);
            }
        }
    }
    qp_trim(out)
}

fn qp_sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    let n = a.len().max(b.len());
    let zero = Q::from(BigInt::zero());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).unwrap_or(&zero);
        let y = b.get(i).unwrap_or(&zero);
        out.push(x - y);
    }
    qp_trim(out)
}

#[cfg(test)]
mod tests {
    use super::super::{q, qi};
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn totient_values() {
        let values: Vec<u64> = (1..=12).map(euler_phi).collect();
        assert_eq!(values, vec![1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]);
        assert_eq!(euler_phi(60), 16);
        assert_eq!(euler_phi(105), 48);
    }

    #[test]
    fn zeta4_squares_to_minus_one() {
        let i = CyclotomicElement::zeta(4);
        let m1 = i.mul(&i);
        assert_eq!(m1.to_rational(), Some(qi(-1)));
        assert_eq!(i.pow(4), CyclotomicElement::one(4));
    }

    #[test]
    fn conjugation_inverts_roots_of_unity() {
        let z = CyclotomicElement::zeta(3);
        assert_eq!(z.conj(), CyclotomicElement::zeta_pow(3, 2));
        assert!(z.mul(&z.conj()).is_one(), "ζ·ζ̄ = 1 for roots of unity");
        // conj is the identity on the rationals
        let r = CyclotomicElement::from_rational(8, q(3, 7));
        assert_eq!(r.conj(), r);
    }

    #[test]
    fn real_quadratic_inside_cyclotomic() {
        // (ζ8 + ζ8^-1)^2 = 2
        let z = CyclotomicElement::zeta(8);
        let root2 = z.add(&z.conj());
        assert_eq!(root2.mul(&root2).to_rational(), Some(qi(2)));
        // 1 + 2(ζ5 + ζ5^4) squares to 5
        let z5 = CyclotomicElement::zeta(5);
        let s = CyclotomicElement::one(5).add(&z5.add(&z5.conj()).scale(&qi(2)));
        assert_eq!(s.mul(&s).to_rational(), Some(qi(5)));
    }

    #[test]
    fn inversion_round_trips() {
        let a = CyclotomicElement::one(5).add(&CyclotomicElement::zeta(5));
        let inv = a.inv().unwrap();
        assert!(a.mul(&inv).is_one());
        assert_eq!(
            CyclotomicElement::zero(5).inv(),
            Err(CycError::DivisionByZero)
        );
    }

    #[test]
    fn embed_is_a_ring_map_hitting_the_right_root() {
        let z3 = CyclotomicElement::zeta(3);
        let embedded = z3.embed(12);
        assert_eq!(embedded, CyclotomicElement::zeta_pow(12, 4));
        // ring-map property on a sample
        let a = z3.add(&CyclotomicElement::one(3));
        let b = z3.mul(&z3);
        assert_eq!(
            a.mul(&b).embed(12),
            a.embed(12).mul(&b.embed(12))
        );
    }

    #[test]
    fn zeta_power_recognition() {
        for k in 0..12 {
            let z = CyclotomicElement::zeta_pow(12, k);
            assert_eq!(z.as_zeta_power(), Some(k as u64), "ζ12^{k}");
        }
        let not_a_power = CyclotomicElement::one(12).add(&CyclotomicElement::zeta(12));
        assert_eq!(not_a_power.as_zeta_power(), None);
    }

    #[test]
    fn root_of_unity_detection() {
        assert!(CyclotomicElement::zeta_pow(6, 5).is_root_of_unity());
        // -ζ3 has order 6 and lives in ℚ(ζ3)
        assert!(CyclotomicElement::zeta(3).neg().is_root_of_unity());
        assert!(!CyclotomicElement::from_rational(4, qi(2)).is_root_of_unity());
        assert!(!CyclotomicElement::zeta(8)
            .add(&CyclotomicElement::one(8))
            .is_root_of_unity());
    }

    #[test]
    fn display_reads_naturally() {
        let e = CyclotomicElement::one(8)
            .sub(&CyclotomicElement::zeta_pow(8, 2).scale(&q(1, 2)));
        assert_eq!(e.to_string(), "1 - 1/2·ζ8^2");
    }

    /// A conductor together with three random elements of its field.
    fn arb_triple() -> impl Strategy<
        Value = (CyclotomicElement, CyclotomicElement, CyclotomicElement),
    > {
        prop_oneof![Just(3u64), Just(4), Just(6), Just(8), Just(12)].prop_flat_map(|n| {
            let phi = euler_phi(n) as usize;
            let element = move || {
                proptest::collection::vec(-4i64..=4, phi).prop_map(move |cs| {
                    let mut e = CyclotomicElement::zero(n);
                    for (i, c) in cs.into_iter().enumerate() {
                        e.coords[i] = qi(c);
                    }
                    e
                })
            };
            (element(), element(), element())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn ring_axioms_hold((a, b, c) in arb_triple()) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b).conj(), a.conj().mul(&b.conj()));
        }

        #[test]
        fn nonzero_elements_invert(n in prop_oneof![Just(3u64), Just(4), Just(5), Just(8)],
                                   coeff in 1i64..=5) {
            let a = CyclotomicElement::zeta(n).scale(&qi(coeff)).add(&CyclotomicElement::one(n));
            let inv = a.inv().unwrap();
            prop_assert!(a.mul(&inv).is_one());
        }
    }
}
