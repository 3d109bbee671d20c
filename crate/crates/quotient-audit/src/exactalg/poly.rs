//! Dense univariate polynomials over ℤ.
//!
//! Coefficients are stored in ascending degree order with no trailing zeros,
//! so the zero polynomial is the empty vector and every polynomial has a
//! unique representation.  All operations are exact; nothing here can round.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Q;

// ---------------------------------------------------------------------------
// Representation and constructors
// ---------------------------------------------------------------------------

/// A polynomial in one variable with integer coefficients.
///
/// Invariant: `coeffs` has no trailing zero, so `coeffs.len()` is
/// `degree + 1` for nonzero polynomials and `0` for the zero polynomial.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    /// The constant polynomial `1`.
    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        IntPoly::monomial(BigInt::one(), 1)
    }

    /// A constant polynomial.
    pub fn constant(c: BigInt) -> Self {
        IntPoly::from_coeffs(vec![c])
    }

    /// The monomial `c·x^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing
    /// zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// Builds a polynomial from machine-integer coefficients (ascending).
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `1 - x^k` for `k ≥ 1`, the ubiquitous denominator factor.
    pub fn one_minus_x_pow(k: usize) -> Self {
        assert!(k >= 1, "1 - x^0 is the zero polynomial; use IntPoly::zero()");
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[0] = BigInt::one();
        coeffs[k] = -BigInt::one();
        IntPoly { coeffs }
    }

    /// `x^k - 1` for `k ≥ 1`.
    pub fn x_pow_minus_one(k: usize) -> Self {
        -&IntPoly::one_minus_x_pow(k)
    }

    // -----------------------------------------------------------------------
    // Accessors
    // -----------------------------------------------------------------------

    /// `true` exactly for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// The coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Ascending coefficient slice (empty for zero).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Leading coefficient, or `None` for the zero polynomial.
    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Constant term.
    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    // -----------------------------------------------------------------------
    // Arithmetic
    // -----------------------------------------------------------------------

    /// Sum of two polynomials.
    pub fn add(&self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            let mut c = self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero);
            if let Some(d) = rhs.coeffs.get(k) {
                c += d;
            }
            out.push(c);
        }
        IntPoly::from_coeffs(out)
    }

    /// Difference of two polynomials.
    pub fn sub(&self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            let mut c = self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero);
            if let Some(d) = rhs.coeffs.get(k) {
                c -= d;
            }
            out.push(c);
        }
        IntPoly::from_coeffs(out)
    }

    /// Additive inverse.
    pub fn neg(&self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Product of two polynomials (schoolbook; degrees stay small enough
    /// here that fancier multiplication would be noise).
    pub fn mul(&self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }

    /// Multiplies by the scalar `c`.
    pub fn mul_scalar(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `x^k`.
    pub fn shifted(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Evaluates at a rational point.
    pub fn eval_q(&self, x: &Q) -> Q {
        let mut acc = Q::from(BigInt::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Q::from(c.clone());
        }
        acc
    }

    /// Evaluates at an integer point.
    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Evaluates at `x = 1` (the coefficient sum).
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    // -----------------------------------------------------------------------
    // Content, primitive part, division
    // -----------------------------------------------------------------------

    /// The content: the (nonnegative) gcd of all coefficients, `0` for the
    /// zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content; the zero polynomial stays zero.  The sign is
    /// untouched, so `primitive_part` of a polynomial with negative leading
    /// coefficient still leads negatively.
    pub fn primitive_part(&self) -> IntPoly {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    /// Exact division: returns `Some(q)` with `self = q·d` when `d` divides
    /// `self` in ℤ[x], else `None`.
    ///
    /// For a genuine divisor, integer long division never needs fractions:
    /// each partial leading coefficient is a true quotient coefficient times
    /// the leading coefficient of `d`.  So a non-divisible leading step or a
    /// nonzero final remainder certifies non-divisibility.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        let dd = d.degree()?; // zero divisor -> None
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let nd = self.degree().unwrap();
        if nd < dd {
            return None;
        }
        let lc = d.leading_coeff().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let head = std::mem::take(&mut rem[k + dd]);
            if head.is_zero() {
                continue;
            }
            let (qk, r) = head.div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            for (j, c) in d.coeffs.iter().enumerate().take(dd) {
                rem[k + j] -= &qk * c;
            }
            quot[k] = qk;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(IntPoly::from_coeffs(quot))
        } else {
            None
        }
    }

    /// Pseudo-remainder: the remainder of `lc(d)^(deg self - deg d + 1)·self`
    /// divided by `d`.  Requires `deg self ≥ deg d` and nonzero `d`.
    fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        let dd = d.degree().expect("pseudo_rem by zero polynomial");
        let lc = d.leading_coeff().unwrap().clone();
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let head = r.leading_coeff().unwrap().clone();
            // r <- lc·r - head·x^(rd-dd)·d  kills the leading term exactly.
            r = r
                .mul_scalar(&lc)
                .sub(&d.mul_scalar(&head).shifted(rd - dd));
        }
        r
    }

    /// Greatest common divisor in ℤ[x], normalized to a positive leading
    /// coefficient.  Uses the primitive pseudo-remainder sequence; degrees in
    /// this crate are small enough that coefficient growth control beyond
    /// taking primitive parts is unnecessary.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.with_positive_leading();
        }
        if other.is_zero() {
            return self.with_positive_leading();
        }
        let content_gcd = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a.mul_scalar(&content_gcd).with_positive_leading()
    }

    /// Flips the global sign if the leading coefficient is negative.
    pub fn with_positive_leading(&self) -> IntPoly {
        match self.leading_coeff() {
            Some(lc) if lc.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }

    // -----------------------------------------------------------------------
    // Expansion around x = 1
    // -----------------------------------------------------------------------

    /// First `count` coefficients of the expansion `p(x) = Σ cⱼ·(x-1)^j`.
    ///
    /// Each round of synthetic division by `(x - 1)` yields one coefficient:
    /// the remainder is the value at `1`, and the quotient has coefficients
    /// `qᵢ = Σ_{j>i} pⱼ` (suffix sums).  Cost is `O(count · degree)`.
    pub fn taylor_jet_at_one(&self, count: usize) -> Vec<BigInt> {
        let mut jets = Vec::with_capacity(count);
        let mut w = self.coeffs.clone();
        for _ in 0..count {
            jets.push(jet_round(&mut w));
        }
        jets
    }

    /// Multiplicity of the root `x = 1` (zero if `p(1) ≠ 0`); `None` for the
    /// zero polynomial, which vanishes to every order.  Exits as soon as a
    /// nonzero jet coefficient appears, so the usual cost is a few passes.
    pub fn order_at_one(&self) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        let mut w = self.coeffs.clone();
        for t in 0..self.coeffs.len() {
            if !jet_round(&mut w).is_zero() {
                return Some(t);
            }
        }
        unreachable!("a nonzero polynomial has a nonzero jet coefficient")
    }
}

/// One synthetic-division round by `(x - 1)`: replaces `w` by the quotient
/// and returns the remainder, i.e. the next coefficient of the expansion
/// around `x = 1`.  An empty `w` stands for the zero polynomial.
fn jet_round(w: &mut Vec<BigInt>) -> BigInt {
    let mut suffix = BigInt::zero();
    for i in (0..w.len()).rev() {
        suffix += std::mem::take(&mut w[i]);
        w[i] = suffix.clone();
    }
    if w.is_empty() {
        BigInt::zero()
    } else {
        w.remove(0)
    }
}

// ---------------------------------------------------------------------------
// Operator sugar
// ---------------------------------------------------------------------------

impl std::ops::Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::add(self, rhs)
    }
}

impl std::ops::Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::sub(self, rhs)
    }
}

impl std::ops::Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::mul(self, rhs)
    }
}

impl std::ops::Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::neg(self)
    }
}

impl fmt::Display for IntPoly {
    /// Descending-degree human form, e.g. `x^4 - 2*x^2 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !mag.is_one() || k == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            if k > 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                if k == 1 {
                    write!(f, "x")?;
                } else {
                    write!(f, "x^{k}")?;
                }
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials
// ---------------------------------------------------------------------------

/// The `n`-th cyclotomic polynomial Φₙ, computed by exact division
/// `x^n - 1 = Π_{d | n} Φ_d` and cached process-wide.
pub fn cyclotomic_polynomial(n: u64) -> IntPoly {
    assert!(n >= 1, "cyclotomic polynomials are indexed from 1");
    static CACHE: OnceLock<Mutex<HashMap<u64, IntPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    // Compute proper-divisor factors outside the lock so recursion can't
    // deadlock; redundant recomputation across threads is harmless.
    let mut quotient = IntPoly::x_pow_minus_one(n as usize);
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            quotient = quotient
                .div_exact(&phi_d)
                .expect("x^n - 1 is divisible by every Φ_d with d | n");
        }
    }
    cache.lock().unwrap().insert(n, quotient.clone());
    quotient
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64s(coeffs)
    }

    #[test]
    fn zero_and_degree_bookkeeping() {
        assert!(IntPoly::zero().is_zero());
        assert_eq!(IntPoly::zero().degree(), None);
        assert_eq!(p(&[5]).degree(), Some(0));
        assert_eq!(p(&[0, 0, 3]).degree(), Some(2));
        // trailing zeros must be trimmed away
        assert_eq!(p(&[1, 2, 0, 0]), p(&[1, 2]));
    }

    #[test]
    fn ring_operations_match_hand_expansion() {
        let a = p(&[1, 1]); // 1 + x
        let b = p(&[-1, 1]); // -1 + x
        assert_eq!(&a * &b, p(&[-1, 0, 1]), "(1+x)(x-1) = x^2 - 1");
        assert_eq!(&a + &b, p(&[0, 2]));
        assert_eq!(&a - &b, p(&[2]));
        assert_eq!(a.shifted(2), p(&[0, 0, 1, 1]));
        assert_eq!(a.mul_scalar(&BigInt::from(-3)), p(&[-3, -3]));
    }

    #[test]
    fn evaluation() {
        let q = p(&[1, 4, 9]); // 1 + 4x + 9x^2
        assert_eq!(q.eval_int(&BigInt::from(2)), BigInt::from(45));
        assert_eq!(q.eval_one(), BigInt::from(14));
        assert_eq!(
            q.eval_q(&super::super::q(1, 2)),
            super::super::q(21, 4),
            "1 + 2 + 9/4 = 21/4"
        );
    }

    #[test]
    fn content_and_primitive_part() {
        let q = p(&[6, -9, 12]);
        assert_eq!(q.content(), BigInt::from(3));
        assert_eq!(q.primitive_part(), p(&[2, -3, 4]));
        assert_eq!(IntPoly::zero().content(), BigInt::zero());
    }

    #[test]
    fn exact_division_detects_divisibility() {
        let d = p(&[1, 0, 1]); // 1 + x^2
        let q = p(&[2, -1, 3]);
        let prod = &d * &q;
        assert_eq!(prod.div_exact(&d), Some(q));
        assert_eq!(p(&[1, 1]).div_exact(&d), None, "degree too small");
        assert_eq!(
            p(&[1, 0, 2]).div_exact(&p(&[0, 2])),
            None,
            "2x does not divide 1 + 2x^2 over the integers"
        );
    }

    #[test]
    fn gcd_of_products_contains_common_factor() {
        let common = p(&[-1, 0, 1]); // x^2 - 1
        let a = &common * &p(&[3, 1]);
        let b = &common * &p(&[-2, 0, 0, 5]);
        let g = a.gcd(&b);
        assert_eq!(
            g.div_exact(&common).map(|q| q.degree()),
            Some(Some(0)),
            "gcd must be x^2 - 1 up to a constant, got {g}"
        );
        assert!(g.leading_coeff().unwrap() > &BigInt::zero());
    }

    #[test]
    fn gcd_handles_zero_and_constants() {
        assert_eq!(IntPoly::zero().gcd(&p(&[-4, 2])), p(&[-4, 2]));
        assert_eq!(
            IntPoly::zero().gcd(&p(&[4, -2])),
            p(&[-4, 2]),
            "gcd is normalized to a positive leading coefficient"
        );
        assert_eq!(p(&[6]).gcd(&p(&[10])), p(&[2]));
    }

    #[test]
    fn cyclotomic_small_values() {
        assert_eq!(cyclotomic_polynomial(1), p(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), p(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(3), p(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(4), p(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), p(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), p(&[1, 0, -1, 0, 1]));
        // Φ105 is the first with a coefficient of magnitude 2; check degree
        // φ(105) = 48 and the identity x^105 - 1 = Π Φ_d.
        let phi105 = cyclotomic_polynomial(105);
        assert_eq!(phi105.degree(), Some(48));
        let mut product = IntPoly::one();
        for d in 1..=105u64 {
            if 105 % d == 0 {
                product = &product * &cyclotomic_polynomial(d);
            }
        }
        assert_eq!(product, IntPoly::x_pow_minus_one(105));
    }

    #[test]
    fn jets_at_one_recover_shifted_expansion() {
        // p(x) = (x-1)^2·(x+2) = x^3 - 3x + 2 has jets (0, 0, 3, 1) at 1.
        let q = p(&[2, -3, 0, 1]);
        assert_eq!(
            q.taylor_jet_at_one(5),
            vec![
                BigInt::zero(),
                BigInt::zero(),
                BigInt::from(3),
                BigInt::from(1),
                BigInt::zero()
            ]
        );
        assert_eq!(q.order_at_one(), Some(2));
        assert_eq!(p(&[7]).order_at_one(), Some(0));
        assert_eq!(IntPoly::zero().order_at_one(), None);
    }

    #[test]
    fn display_formats_descending() {
        assert_eq!(p(&[1, 0, -2, 0, 1]).to_string(), "x^4 - 2*x^2 + 1");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(p(&[-3]).to_string(), "-3");
    }

    proptest! {
        #[test]
        fn mul_commutes_and_degree_adds(a in proptest::collection::vec(-6i64..=6, 0..6),
                                        b in proptest::collection::vec(-6i64..=6, 0..6)) {
            let pa = p(&a);
            let pb = p(&b);
            prop_assert_eq!(&pa * &pb, &pb * &pa);
            if !pa.is_zero() && !pb.is_zero() {
                prop_assert_eq!(
                    (&pa * &pb).degree().unwrap(),
                    pa.degree().unwrap() + pb.degree().unwrap()
                );
            }
        }

        #[test]
        fn division_inverts_multiplication(a in proptest::collection::vec(-6i64..=6, 1..6),
                                           b in proptest::collection::vec(-6i64..=6, 1..6)) {
            let pa = p(&a);
            let pb = p(&b);
            prop_assume!(!pb.is_zero());
            let prod = &pa * &pb;
            prop_assert_eq!(prod.div_exact(&pb), Some(pa));
        }

        #[test]
        fn jets_reconstruct_polynomial(a in proptest::collection::vec(-5i64..=5, 0..7)) {
            let pa = p(&a);
            let n = pa.coeffs().len();
            let jets = pa.taylor_jet_at_one(n);
            // rebuild Σ c_j (x-1)^j and compare
            let xm1 = p(&[-1, 1]);
            let mut acc = IntPoly::zero();
            let mut pow = IntPoly::one();
            for c in jets {
                acc = &acc + &pow.mul_scalar(&c);
                pow = &pow * &xm1;
            }
            prop_assert_eq!(acc, pa);
        }
    }
}
