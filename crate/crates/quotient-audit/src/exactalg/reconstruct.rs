//! Recovering a rational function from a power-series prefix.
//!
//! Given a series known through a sufficiently high order and degree bounds
//! `(p, q)` for numerator and denominator, [`reconstruct_rational`] solves
//! the linear system forcing `den·series` to be a polynomial of degree ≤ p,
//! then verifies the remaining known coefficients — a margin of `q` extra
//! coefficients beyond the solved window — before returning the canonical
//! rational function.  An unverified margin is reported as an error rather
//! than a guess.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use super::{IntPoly, PowerSeries, Q, RationalFunction};

/// Failure modes of rational reconstruction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReconstructError {
    /// The series does not carry enough coefficients for the requested
    /// bounds plus the verification margin.
    #[error(
        "series truncated at order {have}, but bounds (num {num_bound}, den {den_bound}) \
         require order {needed} including the verification margin"
    )]
    TruncationTooShort {
        /// Highest known coefficient index.
        have: usize,
        /// Order required: `num_bound + 2·den_bound`.
        needed: usize,
        /// Requested numerator degree bound.
        num_bound: usize,
        /// Requested denominator degree bound.
        den_bound: usize,
    },
    /// No denominator within the degree bound annihilates the series tail.
    #[error("no rational function within the degree bounds matches the series")]
    Failed,
    /// A candidate matched the solved window but failed on the margin
    /// coefficients kept aside for verification.
    #[error("candidate rational function failed verification on the margin coefficients")]
    Unverified,
}

/// Reconstructs the unique rational function with `deg num ≤ num_bound` and
/// `deg den ≤ den_bound` whose Taylor expansion matches `series`, verifying
/// the match on `den_bound` margin coefficients beyond the solved window.
pub fn reconstruct_rational(
    series: &PowerSeries,
    num_bound: usize,
    den_bound: usize,
) -> Result<RationalFunction, ReconstructError> {
    let needed = num_bound + 2 * den_bound;
    let have = series.truncation_order();
    if have < needed {
        return Err(ReconstructError::TruncationTooShort {
            have,
            needed,
            num_bound,
            den_bound,
        });
    }
    let c = series.coeffs();
    let zero = Q::from(BigInt::zero());

    // Solve for b_1..b_q with b_0 = 1 from the window equations
    //   Σ_{j=0..q} b_j c_{k-j} = 0,   k = p+1 .. p+q.
    let q_len = den_bound;
    let mut b = vec![zero.clone(); q_len];
    if q_len > 0 {
        let mut rows: Vec<Vec<Q>> = Vec::with_capacity(q_len);
        for k in num_bound + 1..=num_bound + q_len {
            let mut row: Vec<Q> = (1..=q_len)
                .map(|j| {
                    if j <= k {
                        c[k - j].clone()
                    } else {
                        zero.clone()
                    }
                })
                .collect();
            row.push(-c[k].clone()); // right-hand side
            rows.push(row);
        }
        b = solve_with_free_vars_zero(rows, q_len).ok_or(ReconstructError::Failed)?;
    }

    // Convolution of the candidate denominator with the series.
    let conv = |k: usize| -> Q {
        let mut acc = c[k].clone();
        for (j, bj) in b.iter().enumerate() {
            let j = j + 1;
            if j <= k && !bj.is_zero() {
                acc += bj * &c[k - j];
            }
        }
        acc
    };

    // Verify every known coefficient beyond the numerator window vanishes;
    // this includes the margin coefficients never seen by the solver.
    for k in num_bound + 1..=have {
        if !conv(k).is_zero() {
            // The solved window itself cannot fail (those are the equations
            // we solved), so a nonzero here is a genuine margin failure.
            return Err(if k <= num_bound + q_len {
                ReconstructError::Failed
            } else {
                ReconstructError::Unverified
            });
        }
    }

    // Numerator coefficients, then clear denominators to land in ℤ[x].
    let a: Vec<Q> = (0..=num_bound).map(conv).collect();
    let mut lcm = BigInt::one();
    for v in a.iter().chain(b.iter()) {
        lcm = lcm.lcm(v.denom());
    }
    let num = IntPoly::from_coeffs(
        a.iter()
            .map(|v| v.numer() * (&lcm / v.denom()))
            .collect(),
    );
    let mut den_coeffs = vec![lcm.clone()];
    den_coeffs.extend(b.iter().map(|v| v.numer() * (&lcm / v.denom())));
    let den = IntPoly::from_coeffs(den_coeffs);
    Ok(RationalFunction::new(num, den).expect("denominator has constant term lcm ≥ 1"))
}

/// Gaussian elimination over ℚ for a small dense system in `unknowns`
/// variables, rows augmented with the right-hand side.  Rank-deficient
/// systems get their free variables set to zero; inconsistent systems return
/// `None`.
fn solve_with_free_vars_zero(mut rows: Vec<Vec<Q>>, unknowns: usize) -> Option<Vec<Q>> {
    let zero = Q::from(BigInt::zero());
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; unknowns];
    let mut next_row = 0usize;
    for col in 0..unknowns {
        // Find a pivot at or below next_row.
        let Some(p) = (next_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next_row, p);
        let inv = rows[next_row][col].clone();
        for v in rows[next_row].iter_mut() {
            if !v.is_zero() {
                *v = &*v / &inv;
            }
        }
        for r in 0..rows.len() {
            if r != next_row && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for j in col..=unknowns {
                    let delta = &rows[next_row][j] * &factor;
                    rows[r][j] = &rows[r][j] - &delta;
                }
            }
        }
        pivot_of_col[col] = Some(next_row);
        next_row += 1;
        if next_row == rows.len() {
            break;
        }
    }
    // Inconsistency: a zero row with nonzero right-hand side.
    for row in &rows {
        if row[..unknowns].iter().all(Zero::is_zero) && !row[unknowns].is_zero() {
            return None;
        }
    }
    let mut solution = vec![zero; unknowns];
    for (col, pivot) in pivot_of_col.iter().enumerate() {
        if let Some(r) = pivot {
            solution[col] = rows[*r][unknowns].clone();
        }
    }
    Some(solution)
}

#[cfg(test)]
mod tests {
    use super::super::qi;
    use super::*;

    #[test]
    fn geometric_series_reconstructs() {
        let s = PowerSeries::from_i64s(&[1, 1, 1, 1, 1, 1, 1]);
        let f = reconstruct_rational(&s, 0, 1).unwrap();
        let expected =
            RationalFunction::new(IntPoly::one(), IntPoly::from_i64s(&[1, -1])).unwrap();
        assert_eq!(f, expected);
    }

    #[test]
    fn even_squares_series_reconstructs() {
        // (1+x^2)/(1-x^2)^3 = Σ (k+1)^2 x^(2k)
        let coeffs: Vec<i64> = (0..=16)
            .map(|k| if k % 2 == 0 { ((k / 2 + 1) * (k / 2 + 1)) as i64 } else { 0 })
            .collect();
        let s = PowerSeries::from_coeffs(coeffs.iter().map(|&c| qi(c)).collect());
        let f = reconstruct_rational(&s, 2, 6).unwrap();
        let mut den = IntPoly::one();
        for _ in 0..3 {
            den = &den * &IntPoly::one_minus_x_pow(2);
        }
        let expected = RationalFunction::new(IntPoly::from_i64s(&[1, 0, 1]), den).unwrap();
        assert_eq!(f, expected);
    }

    #[test]
    fn short_series_is_rejected_loudly() {
        let s = PowerSeries::from_i64s(&[1, 1, 1]);
        match reconstruct_rational(&s, 1, 2) {
            Err(ReconstructError::TruncationTooShort { have, needed, .. }) => {
                assert_eq!((have, needed), (2, 5));
            }
            other => panic!("expected TruncationTooShort, got {other:?}"),
        }
    }

    #[test]
    fn wrong_bounds_fail_or_stay_unverified() {
        // x as a series cannot be written with num_bound 0, den_bound 1:
        // the single window equation is inconsistent.
        let s = PowerSeries::from_i64s(&[0, 1, 0, 0]);
        assert_eq!(reconstruct_rational(&s, 0, 1), Err(ReconstructError::Failed));

        // Fibonacci needs a degree-2 denominator; with den_bound 1 the
        // window is solvable but the margin catches the lie.
        let fib = PowerSeries::from_i64s(&[1, 1, 2, 3, 5, 8, 13, 21]);
        assert!(matches!(
            reconstruct_rational(&fib, 0, 1),
            Err(ReconstructError::Unverified) | Err(ReconstructError::Failed)
        ));
        // With honest bounds it reconstructs 1/(1-x-x^2).
        let f = reconstruct_rational(&fib, 1, 2).unwrap();
        let expected =
            RationalFunction::new(IntPoly::one(), IntPoly::from_i64s(&[1, -1, -1])).unwrap();
        assert_eq!(f, expected);
    }

    #[test]
    fn reconstruction_verifies_on_margin_after_corruption() {
        // Corrupt a genuine series in the margin zone only.
        let mut coeffs: Vec<i64> = (1..=13).collect(); // 1/(1-x)^2 coefficients 1..13
        let last = coeffs.len() - 1;
        coeffs[last] += 1;
        let s = PowerSeries::from_i64s(&coeffs);
        assert_eq!(
            reconstruct_rational(&s, 1, 2),
            Err(ReconstructError::Unverified)
        );
    }

    #[test]
    fn polynomial_series_reconstructs_with_zero_denominator_bound() {
        let s = PowerSeries::from_i64s(&[3, 0, -1, 0, 0, 0]);
        let f = reconstruct_rational(&s, 2, 0).unwrap();
        assert_eq!(f, RationalFunction::from_poly(IntPoly::from_i64s(&[3, 0, -1])));
    }
}
