//! Truncated power series over ℚ.
//!
//! A [`PowerSeries`] knows its coefficients up to a *truncation order* and
//! nothing beyond; every binary operation truncates the result to the shorter
//! operand, so no coefficient is ever fabricated.  Equality compares the full
//! known prefix, truncation order included.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{IntPoly, Q};

/// A power series known through degree `truncation_order()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    /// `coeffs[k]` is the coefficient of `x^k`; the vector is never empty.
    coeffs: Vec<Q>,
}

impl PowerSeries {
    /// Builds a series from explicit coefficients.  At least one coefficient
    /// (the constant term) must be known.
    pub fn from_coeffs(coeffs: Vec<Q>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a power series must know at least its constant term"
        );
        PowerSeries { coeffs }
    }

    /// Builds a series from machine integers (handy in tests and examples).
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        PowerSeries::from_coeffs(coeffs.iter().map(|&c| super::qi(c)).collect())
    }

    /// Builds a series from nonnegative counters, as produced by the
    /// monomial-counting routines.
    pub fn from_counts(counts: &[u64]) -> Self {
        PowerSeries::from_coeffs(
            counts
                .iter()
                .map(|&c| Q::from(BigInt::from(c)))
                .collect(),
        )
    }

    /// Views a polynomial as a series truncated at `order`.
    pub fn from_poly(p: &IntPoly, order: usize) -> Self {
        let coeffs = (0..=order).map(|k| Q::from(p.coeff(k))).collect();
        PowerSeries { coeffs }
    }

    /// Highest degree whose coefficient is known.
    pub fn truncation_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// The coefficient of `x^k`, if within the known prefix.
    pub fn get(&self, k: usize) -> Option<&Q> {
        self.coeffs.get(k)
    }

    /// The coefficient of `x^k`; panics past the truncation order, because a
    /// made-up zero there would silently corrupt downstream arithmetic.
    pub fn coeff(&self, k: usize) -> &Q {
        self.coeffs.get(k).unwrap_or_else(|| {
            panic!(
                "coefficient {k} requested but series is truncated at order {}",
                self.truncation_order()
            )
        })
    }

    /// The whole known prefix, ascending.
    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    /// Drops knowledge beyond `order` (which must not exceed what is known).
    pub fn truncated(&self, order: usize) -> PowerSeries {
        assert!(
            order <= self.truncation_order(),
            "cannot extend a series by truncating: order {order} > known {}",
            self.truncation_order()
        );
        PowerSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Sum; known through the shorter operand.
    pub fn add(&self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        PowerSeries {
            coeffs: (0..n).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect(),
        }
    }

    /// Difference; known through the shorter operand.
    pub fn sub(&self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        PowerSeries {
            coeffs: (0..n).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect(),
        }
    }

    /// Product; degree-`k` output needs both inputs through degree `k`, so
    /// the result is known through the shorter operand.
    pub fn mul(&self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        let zero = Q::from(BigInt::zero());
        let mut out = vec![zero; n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] += a * b;
            }
        }
        PowerSeries { coeffs: out }
    }

    /// Multiplies by an exact polynomial; the polynomial is fully known, so
    /// the truncation order is preserved.
    pub fn mul_poly(&self, p: &IntPoly) -> PowerSeries {
        let n = self.coeffs.len();
        let zero = Q::from(BigInt::zero());
        let mut out = vec![zero; n];
        for (j, c) in p.coeffs().iter().enumerate() {
            if c.is_zero() || j >= n {
                continue;
            }
            let cq = Q::from(c.clone());
            for i in 0..n - j {
                if !self.coeffs[i].is_zero() {
                    out[i + j] += &self.coeffs[i] * &cq;
                }
            }
        }
        PowerSeries { coeffs: out }
    }

    /// Scales every coefficient by `c`.
    pub fn scale(&self, c: &Q) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Quotient; `None` when the divisor has a vanishing constant term (no
    /// power-series inverse exists).  Known through the shorter operand.
    pub fn checked_div(&self, rhs: &PowerSeries) -> Option<PowerSeries> {
        let b0 = &rhs.coeffs[0];
        if b0.is_zero() {
            return None;
        }
        let n = self.coeffs.len().min(rhs.coeffs.len());
        let mut out: Vec<Q> = Vec::with_capacity(n);
        for k in 0..n {
            let mut acc = self.coeffs[k].clone();
            for j in 1..=k {
                if let Some(b) = rhs.coeffs.get(j) {
                    if !b.is_zero() {
                        acc -= b * &out[k - j];
                    }
                }
            }
            out.push(acc / b0);
        }
        Some(PowerSeries { coeffs: out })
    }
}

#[cfg(test)]
mod tests {
    use super::super::q;
    use super::*;

    #[test]
    fn truncation_is_min_of_operands() {
        let a = PowerSeries::from_i64s(&[1, 2, 3, 4]);
        let b = PowerSeries::from_i64s(&[1, 1]);
        assert_eq!(a.add(&b).truncation_order(), 1);
        assert_eq!(a.mul(&b).truncation_order(), 1);
        assert_eq!(a.sub(&b).coeffs(), &[q(0, 1), q(1, 1)]);
    }

    #[test]
    fn geometric_series_arithmetic() {
        // 1/(1-x) through order 5
        let geo = PowerSeries::from_i64s(&[1, 1, 1, 1, 1, 1]);
        let one_minus_x = PowerSeries::from_i64s(&[1, -1, 0, 0, 0, 0]);
        let product = geo.mul(&one_minus_x);
        assert_eq!(product, PowerSeries::from_i64s(&[1, 0, 0, 0, 0, 0]));
        // and division recovers the geometric series
        let one = PowerSeries::from_i64s(&[1, 0, 0, 0, 0, 0]);
        assert_eq!(one.checked_div(&one_minus_x), Some(geo));
    }

    #[test]
    fn division_requires_invertible_constant() {
        let x = PowerSeries::from_i64s(&[0, 1, 0]);
        let one = PowerSeries::from_i64s(&[1, 0, 0]);
        assert_eq!(one.checked_div(&x), None);
    }

    #[test]
    fn poly_multiplication_keeps_order() {
        let s = PowerSeries::from_i64s(&[1, 1, 1, 1, 1]);
        let p = IntPoly::one_minus_x_pow(2);
        let t = s.mul_poly(&p);
        assert_eq!(t.truncation_order(), 4);
        assert_eq!(t, PowerSeries::from_i64s(&[1, 1, 0, 0, 0]));
    }

    #[test]
    fn squares_series_times_denominator() {
        // Σ (k+1)^2 x^k = (1+x)/(1-x)^3; multiplying by (1-x)^3 gives 1+x.
        let squares = PowerSeries::from_i64s(&[1, 4, 9, 16, 25, 36]);
        let den = {
            let m = IntPoly::one_minus_x_pow(1);
            (&(&m * &m) * &m).clone()
        };
        let t = squares.mul_poly(&den);
        assert_eq!(t, PowerSeries::from_i64s(&[1, 1, 0, 0, 0, 0]));
    }
}
