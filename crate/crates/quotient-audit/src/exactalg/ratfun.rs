//! Rational functions over ℚ in canonical reduced form, with Taylor
//! expansion at `x = 0` and Laurent data at `x = 1`.
//!
//! Canonical form (unique per function value):
//!
//! * the zero function is `0/1`;
//! * numerator and denominator share no polynomial factor;
//! * the integer contents of numerator and denominator are coprime;
//! * the denominator's leading coefficient is positive.
//!
//! With the representation unique, structural equality *is* equality of
//! functions, which is what lets an audit compare two independently computed
//! Hilbert series with `==` and mean it.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::{cyclotomic_polynomial, IntPoly, PowerSeries, Q};

/// Errors from rational-function arithmetic and expansion.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RatFunError {
    /// Construction or division with a zero denominator.
    #[error("denominator is the zero polynomial")]
    ZeroDenominator,
    /// Taylor expansion at `x = 0` of a function with a pole there.
    #[error("function has a pole at x = 0; no Taylor expansion exists")]
    PoleAtZero,
}

/// A rational function `num/den` kept in canonical reduced form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: IntPoly,
    den: IntPoly,
}

impl RationalFunction {
    // -----------------------------------------------------------------------
    // Construction
    // -----------------------------------------------------------------------

    /// Builds `num/den` and reduces to canonical form.
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self, RatFunError> {
        if den.is_zero() {
            return Err(RatFunError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RationalFunction {
                num: IntPoly::zero(),
                den: IntPoly::one(),
            });
        }
        // Split off contents, reduce them as integers.
        let cn = num.content();
        let cd = den.content();
        let g = cn.gcd(&cd);
        let (mut pn, mut pd) = (num.primitive_part(), den.primitive_part());
        // Remove the common polynomial factor.
        let pg = pn.gcd(&pd);
        if pg.degree() != Some(0) || !pg.leading_coeff().unwrap().is_one() {
            pn = pn.div_exact(&pg).expect("gcd divides");
            pd = pd.div_exact(&pg).expect("gcd divides");
        }
        let mut num = pn.mul_scalar(&(cn / &g));
        let mut den = pd.mul_scalar(&(cd / &g));
        if den.leading_coeff().unwrap().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        Ok(RationalFunction { num, den })
    }

    /// A polynomial viewed as a rational function.
    pub fn from_poly(p: IntPoly) -> Self {
        RationalFunction::new(p, IntPoly::one()).expect("denominator 1")
    }

    /// A rational constant.
    pub fn from_rational(c: &Q) -> Self {
        RationalFunction::new(
            IntPoly::constant(c.numer().clone()),
            IntPoly::constant(c.denom().clone()),
        )
        .expect("rational constants have nonzero denominators")
    }

    /// The zero function.
    pub fn zero() -> Self {
        RationalFunction {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    /// The constant one.
    pub fn one() -> Self {
        RationalFunction {
            num: IntPoly::one(),
            den: IntPoly::one(),
        }
    }

    /// Builds `num / Π (1 - x^a)^m` from a numerator and denominator factor
    /// list, reducing by trial division with cyclotomic polynomials instead
    /// of a general gcd.
    ///
    /// Every `(1 - x^a)` is `±Π_{e|a} Φ_e`, so the denominator's irreducible
    /// factors are known in advance; dividing the numerator by each Φ_e while
    /// it remains divisible reaches the canonical form directly, and the
    /// rebuilt denominator is monic, making sign and content normalization
    /// automatic.  This is how Hilbert and Molien series, whose denominators
    /// arrive as such products, become canonical [`RationalFunction`]s.
    pub fn from_cyclotomic_denominator(
        num: IntPoly,
        factors: &[(usize, usize)],
    ) -> Result<Self, RatFunError> {
        if factors.iter().any(|&(a, _)| a == 0) {
            return Err(RatFunError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RationalFunction::zero());
        }
        // Expand the factor list into a multiset of cyclotomic indices:
        // (1 - x^a)^m contributes m copies of Φ_e for every e | a, and a
        // global sign (-1)^m.
        let mut multiplicity: BTreeMap<u64, usize> = BTreeMap::new();
        let mut sign_flips = 0usize;
        for &(a, m) in factors {
            if m == 0 {
                continue;
            }
            sign_flips += m;
            for e in 1..=a as u64 {
                if a as u64 % e == 0 {
                    *multiplicity.entry(e).or_insert(0) += m;
                }
            }
        }
        let mut num = if sign_flips % 2 == 1 { num.neg() } else { num };
        for (&e, mult) in multiplicity.iter_mut() {
            let phi = cyclotomic_polynomial(e);
            while *mult > 0 {
                match num.div_exact(&phi) {
                    Some(q) => {
                        num = q;
                        *mult -= 1;
                    }
                    None => break,
                }
            }
        }
        let mut den = IntPoly::one();
        for (&e, &mult) in &multiplicity {
            if mult == 0 {
                continue;
            }
            let phi = cyclotomic_polynomial(e);
            for _ in 0..mult {
                den = &den * &phi;
            }
        }
        // den is monic (a product of monic Φ_e) and shares no factor with
        // num, so the result is already canonical up to integer content of
        // the numerator — which is allowed to be arbitrary since the
        // denominator's content is 1.
        debug_assert!(den.leading_coeff().map(|c| c.is_one()).unwrap_or(false));
        Ok(RationalFunction { num, den })
    }

    // -----------------------------------------------------------------------
    // Accessors
    // -----------------------------------------------------------------------

    /// Canonical numerator.
    pub fn numerator(&self) -> &IntPoly {
        &self.num
    }

    /// Canonical denominator (positive leading coefficient).
    pub fn denominator(&self) -> &IntPoly {
        &self.den
    }

    /// `true` exactly for the zero function.
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    // -----------------------------------------------------------------------
    // Field arithmetic
    // -----------------------------------------------------------------------

    /// Sum.
    pub fn add(&self, rhs: &Self) -> Self {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RationalFunction::new(num, den).expect("product of nonzero denominators")
    }

    /// Difference.
    pub fn sub(&self, rhs: &Self) -> Self {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RationalFunction::new(num, den).expect("product of nonzero denominators")
    }

    /// Product.
    pub fn mul(&self, rhs: &Self) -> Self {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("product of nonzero denominators")
    }

    /// Quotient; fails on a zero divisor.
    pub fn div(&self, rhs: &Self) -> Result<Self, RatFunError> {
        if rhs.is_zero() {
            return Err(RatFunError::ZeroDenominator);
        }
        RationalFunction::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    /// Negation.
    pub fn neg(&self) -> Self {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    /// Multiplies by a rational constant.
    pub fn scale(&self, c: &Q) -> Self {
        self.mul(&RationalFunction::from_rational(c))
    }

    /// Evaluates at a rational point where the denominator does not vanish.
    pub fn eval_q(&self, x: &Q) -> Option<Q> {
        let d = self.den.eval_q(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval_q(x) / d)
    }

    // -----------------------------------------------------------------------
    // Expansions
    // -----------------------------------------------------------------------

    /// Taylor coefficients at `x = 0` through degree `degree`.
    pub fn taylor_coefficients(&self, degree: usize) -> Result<PowerSeries, RatFunError> {
        if self.den.constant_term().is_zero() {
            return Err(RatFunError::PoleAtZero);
        }
        let num_series = PowerSeries::from_poly(&self.num, degree);
        let den_series = PowerSeries::from_poly(&self.den, degree);
        num_series
            .checked_div(&den_series)
            .ok_or(RatFunError::PoleAtZero)
    }

    /// Laurent data at `x = 1`: writing `t = 1 - x`, expands
    /// `f = Σ_{j≥0} γⱼ·t^(j-d)` and reports `d` (clamped to 0 when there is
    /// no pole) together with `γ₀ … γ_k`.
    ///
    /// Implementation: expand numerator and denominator around `x = 1` by
    /// synthetic division — only `order-of-vanishing + k + 1` jet
    /// coefficients of each are needed — then divide the two jet series.
    pub fn laurent_at_one(&self, k: usize) -> LaurentCoefficients {
        if self.is_zero() {
            return LaurentCoefficients {
                pole_order: 0,
                gammas: vec![Q::from(BigInt::zero()); k + 1],
            };
        }
        let a_num = self.num.order_at_one().expect("nonzero numerator");
        let a_den = self.den.order_at_one().expect("nonzero denominator");
        // Jet series u, v with f(1-t) = t^(a_num - a_den)·u(t)/v(t),
        // where u, v have nonzero constant terms.  The substitution x = 1-t
        // turns (x-1)^j into (-t)^j, hence the alternating signs.
        let extra = if a_den > a_num { 0 } else { a_num - a_den };
        let len = k + 1 + extra;
        let jet_series = |p: &IntPoly, start: usize| -> PowerSeries {
            let jets = p.taylor_jet_at_one(start + len);
            PowerSeries::from_coeffs(
                (0..len)
                    .map(|i| {
                        let c = Q::from(jets[start + i].clone());
                        if (start + i) % 2 == 1 {
                            -c
                        } else {
                            c
                        }
                    })
                    .collect(),
            )
        };
        let u = jet_series(&self.num, a_num);
        let v = jet_series(&self.den, a_den);
        let quotient = u
            .checked_div(&v)
            .expect("jet series of the denominator has a nonzero constant term");
        if a_den >= a_num {
            LaurentCoefficients {
                pole_order: a_den - a_num,
                gammas: quotient.coeffs()[..=k].to_vec(),
            }
        } else {
            // The function vanishes at x = 1: report pole order 0 and shift
            // the Taylor data accordingly (leading gammas are zero).
            let shift = a_num - a_den;
            let mut gammas = vec![Q::from(BigInt::zero()); shift.min(k + 1)];
            let mut idx = 0;
            while gammas.len() <= k {
                gammas.push(quotient.coeff(idx).clone());
                idx += 1;
            }
            LaurentCoefficients {
                pole_order: 0,
                gammas,
            }
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == IntPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// The leading Laurent coefficients of a rational function at `x = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentCoefficients {
    pole_order: usize,
    gammas: Vec<Q>,
}

impl LaurentCoefficients {
    /// Order of the pole at `x = 1` (`0` when the function is regular there).
    pub fn pole_order(&self) -> usize {
        self.pole_order
    }

    /// `γⱼ`, the coefficient of `(1-x)^(j - pole_order)`.
    pub fn gamma(&self, j: usize) -> &Q {
        &self.gammas[j]
    }

    /// All computed gammas, ascending in `j`.
    pub fn gammas(&self) -> &[Q] {
        &self.gammas
    }
}

#[cfg(test)]
mod tests {
    use super::super::{q, qi};
    use super::*;

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(IntPoly::from_i64s(num), IntPoly::from_i64s(den)).unwrap()
    }

    #[test]
    fn canonical_form_normalizes_content_sign_and_common_factors() {
        // (2 + 2x)/(2 - 2x) reduces to (1+x)/(1-x), and the canonical
        // denominator flips to x - 1 with the sign pushed into the numerator.
        let a = rf(&[2, 2], &[2, -2]);
        let b = rf(&[1, 1], &[1, -1]);
        assert_eq!(a, b);
        assert!(a.denominator().leading_coeff().unwrap() > &num_bigint::BigInt::from(0));
        // (x^2-1)/(x-1) is the polynomial x+1.
        let c = rf(&[-1, 0, 1], &[-1, 1]);
        assert_eq!(c, RationalFunction::from_poly(IntPoly::from_i64s(&[1, 1])));
    }

    #[test]
    fn zero_denominator_is_rejected() {
        assert_eq!(
            RationalFunction::new(IntPoly::one(), IntPoly::zero()),
            Err(RatFunError::ZeroDenominator)
        );
    }

    #[test]
    fn field_arithmetic() {
        let half = RationalFunction::from_rational(&q(1, 2));
        let third = RationalFunction::from_rational(&q(1, 3));
        assert_eq!(half.add(&third), RationalFunction::from_rational(&q(5, 6)));
        let f = rf(&[1], &[1, -1]); // 1/(1-x)
        let g = rf(&[0, 1], &[1, -1]); // x/(1-x)
        assert_eq!(f.sub(&g), RationalFunction::one());
        assert_eq!(
            f.mul(&g),
            rf(&[0, 1], &[1, -2, 1]),
            "1/(1-x) · x/(1-x) = x/(1-x)^2"
        );
        assert_eq!(f.div(&g).unwrap(), rf(&[1], &[0, 1]));
    }

    #[test]
    fn taylor_matches_known_series() {
        let f = rf(&[1], &[1, -1]);
        assert_eq!(
            f.taylor_coefficients(4).unwrap(),
            PowerSeries::from_i64s(&[1, 1, 1, 1, 1])
        );
        let g = rf(&[1, 1], &[1, -3, 3, -1]); // (1+x)/(1-x)^3 = Σ (k+1)^2 x^k
        assert_eq!(
            g.taylor_coefficients(4).unwrap(),
            PowerSeries::from_i64s(&[1, 4, 9, 16, 25])
        );
        let pole = rf(&[1], &[0, 1]);
        assert_eq!(pole.taylor_coefficients(3), Err(RatFunError::PoleAtZero));
    }

    #[test]
    fn laurent_simple_poles() {
        // 1/(1-x)^2: pole order 2, gammas (1, 0, 0, ...).
        let f = rf(&[1], &[1, -2, 1]);
        let l = f.laurent_at_one(3);
        assert_eq!(l.pole_order(), 2);
        assert_eq!(l.gammas(), &[qi(1), qi(0), qi(0), qi(0)]);
        // (1+x)/(1-x): at x = 1-t this is (2-t)/t, so gammas (2, -1, 0).
        let g = rf(&[1, 1], &[1, -1]);
        let l = g.laurent_at_one(2);
        assert_eq!(l.pole_order(), 1);
        assert_eq!(l.gammas(), &[qi(2), qi(-1), qi(0)]);
    }

    #[test]
    fn laurent_without_pole_reports_taylor_values() {
        // f = (1-x)^2/(1+x) at x = 1-t: t^2/(2-t) = t^2·(1/2 + t/4 + ...).
        let f = rf(&[1, -2, 1], &[1, 1]);
        let l = f.laurent_at_one(4);
        assert_eq!(l.pole_order(), 0);
        assert_eq!(
            l.gammas(),
            &[qi(0), qi(0), q(1, 2), q(1, 4), q(1, 8)],
            "a zero at x = 1 shows up as leading zero gammas"
        );
        // A function regular and nonvanishing at 1: plain Taylor data in t.
        let g = rf(&[1], &[1, 1]); // 1/(1+x) = 1/(2-t)
        let l = g.laurent_at_one(2);
        assert_eq!(l.pole_order(), 0);
        assert_eq!(l.gammas(), &[q(1, 2), q(1, 4), q(1, 8)]);
    }

    #[test]
    fn laurent_partial_sums_reduce_pole_order() {
        // Subtracting Σ_{j≤k} γⱼ/(1-x)^(d-j) must drop the pole order to at
        // most d - k - 1; this pins down the sign/indexing conventions.
        let f = rf(&[1, 1], &[1, -3, 3, -1]); // (1+x)/(1-x)^3, pole order 3
        let l = f.laurent_at_one(2);
        assert_eq!(l.pole_order(), 3);
        for k in 0..=2 {
            let mut partial = RationalFunction::zero();
            for j in 0..=k {
                // γⱼ/(1-x)^(d-j)
                let mut den = IntPoly::one();
                for _ in 0..(3 - j) {
                    den = &den * &IntPoly::from_i64s(&[1, -1]);
                }
                let term = RationalFunction::new(IntPoly::one(), den)
                    .unwrap()
                    .scale(l.gamma(j));
                partial = partial.add(&term);
            }
            let rest = f.sub(&partial);
            let rest_l = rest.laurent_at_one(0);
            assert!(
                rest_l.pole_order() <= 3 - k - 1,
                "after removing gammas 0..={k} the pole order is {} > {}",
                rest_l.pole_order(),
                3 - k - 1
            );
        }
    }

    #[test]
    fn cyclotomic_denominator_reaches_canonical_form() {
        // (1 - x^6)/((1-x^2)(1-x^3)) = Φ1·Φ2·Φ3·Φ6 / (Φ1²·Φ2·Φ3)
        //                            = Φ6/Φ1 = -(x^2-x+1)/(1-x).
        let num = IntPoly::one_minus_x_pow(6);
        let f = RationalFunction::from_cyclotomic_denominator(num, &[(2, 1), (3, 1)]).unwrap();
        let expected = rf(&[1, -1, 1], &[1, -1]);
        assert_eq!(f, expected);
        // And it agrees with the generic constructor on a bigger example:
        // (1+x^2) / ((1-x^2)^3) with numerator already coprime.
        let g = RationalFunction::from_cyclotomic_denominator(
            IntPoly::from_i64s(&[1, 0, 1]),
            &[(2, 3)],
        )
        .unwrap();
        let mut den = IntPoly::one();
        for _ in 0..3 {
            den = &den * &IntPoly::one_minus_x_pow(2);
        }
        assert_eq!(g, RationalFunction::new(IntPoly::from_i64s(&[1, 0, 1]), den).unwrap());
    }

    #[test]
    fn display_is_readable() {
        // Canonicalization gives the denominator a positive leading
        // coefficient, pushing the sign into the numerator.
        assert_eq!(rf(&[1, 1], &[1, -1]).to_string(), "(-x - 1) / (x - 1)");
        assert_eq!(
            RationalFunction::from_poly(IntPoly::from_i64s(&[0, 2])).to_string(),
            "2*x"
        );
    }
}
