//! Exact counting of invariant monomials.
//!
//! The coordinate ring of ℂⁿ together with its conjugates is a polynomial
//! ring in 2n variables z₁, …, z_n, z̄₁, …, z̄_n, graded by total degree.  A
//! monomial is invariant under the weighted circle action exactly when its
//! net weight Σ a_i (m_i − n_i) vanishes.  Counting invariant monomials per
//! degree is a two-dimensional lattice-path count, done here by dynamic
//! programming over (degree, running weight) with one pass per variable.

use thiserror::Error;

use super::WeightVector;

/// Errors from the counting routines.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum CountingError {
    /// The a-priori bound on a single count exceeds `u64`; the dynamic
    /// program would risk silent overflow, so it refuses to run.
    #[error(
        "monomial counts up to degree {max_degree} in {variables} variables may exceed u64; refusing to count"
    )]
    CountCapacityExceeded { max_degree: usize, variables: usize },
}

/// Counts invariant monomials in `z, z̄` for every degree `0..=max_degree`.
///
/// Zero weights are allowed (the corresponding variables are unconstrained);
/// the result depends only on the multiset of weights, not on order or
/// normalization.  All arithmetic is checked up front: the binomial bound
/// `C(max_degree + 2n - 1, 2n - 1)` on any single count must fit in `u64`.
pub fn invariant_monomial_counts(
    weights: &[i64],
    max_degree: usize,
) -> Result<Vec<u64>, CountingError> {
    if weights.is_empty() {
        let mut counts = vec![0u64; max_degree + 1];
        counts[0] = 1;
        return Ok(counts);
    }
    let variables = 2 * weights.len();
    if count_upper_bound(max_degree, variables).is_none() {
        return Err(CountingError::CountCapacityExceeded {
            max_degree,
            variables,
        });
    }

    let alpha_max = weights.iter().map(|a| a.unsigned_abs()).max().unwrap() as usize;
    // Any monomial of degree d ≤ max_degree with net weight 0 splits its
    // degree between positive-weight and negative-weight factors carrying
    // equal weight mass P; P ≤ α_max · min(#pos factors, #neg factors)
    // ≤ α_max · ⌊d/2⌋.  Partial sums over a fixed variable order stay inside
    // [−P, P], so the weight axis can be clipped to that window.
    let window = alpha_max * (max_degree / 2);
    let width = 2 * window + 1;
    let offset = window as i64;

    // dp[d][w + offset] = number of monomials of degree d and net weight w
    // using the variables processed so far, with unbounded multiplicity.
    let mut dp: Vec<Vec<u64>> = vec![vec![0u64; width]; max_degree + 1];
    dp[0][offset as usize] = 1;

    let mut items: Vec<i64> = Vec::with_capacity(variables);
    for &a in weights {
        items.push(a);
        items.push(-a);
    }
    for &t in &items {
        for d in 1..=max_degree {
            let (lower, upper) = dp.split_at_mut(d);
            let prev = &lower[d - 1];
            let cur = &mut upper[0];
            if t >= 0 {
                let t = t as usize;
                for w in t..width {
                    cur[w] += prev[w - t];
                }
            } else {
                let t = (-t) as usize;
                for w in 0..width.saturating_sub(t) {
                    cur[w] += prev[w + t];
                }
            }
        }
    }

    Ok((0..=max_degree).map(|d| dp[d][offset as usize]).collect())
}

/// Counts invariant monomials of one exact degree.
pub fn count_invariant_monomials(
    weight_vector: &WeightVector,
    degree: usize,
) -> Result<u64, CountingError> {
    let counts = invariant_monomial_counts(weight_vector.weights(), degree)?;
    Ok(counts[degree])
}

/// `C(max_degree + v - 1, v - 1)` if it fits in `u64` — an upper bound on
/// the number of monomials of any one degree in `v` variables.
fn count_upper_bound(max_degree: usize, variables: usize) -> Option<u64> {
    let mut acc: u128 = 1;
    let n = (max_degree + variables - 1) as u128;
    let k = (variables - 1) as u128;
    for i in 1..=k {
        acc = acc.checked_mul(n - k + i)?;
        acc /= i; // exact: prefix products of binomial rows divide evenly
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

/// Brute-force oracle: enumerates all exponent vectors of the given degree
/// and keeps those with net weight zero.  Exponential in the number of
/// variables — only suitable for cross-checking the dynamic program on
/// small inputs.
pub fn exhaustive_invariant_monomial_count(weights: &[i64], degree: usize) -> u64 {
    let mut items: Vec<i64> = Vec::with_capacity(2 * weights.len());
    for &a in weights {
        items.push(a);
        items.push(-a);
    }
    fn recurse(items: &[i64], remaining: usize, weight_so_far: i64) -> u64 {
        match items {
            [] => {
                if remaining == 0 && weight_so_far == 0 {
                    1
                } else {
                    0
                }
            }
            [first, rest @ ..] => {
                let mut total = 0u64;
                for m in 0..=remaining {
                    total += recurse(
                        rest,
                        remaining - m,
                        weight_so_far + first * m as i64,
                    );
                }
                total
            }
        }
    }
    if items.is_empty() {
        return if degree == 0 { 1 } else { 0 };
    }
    recurse(&items, degree, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn degree_two_fixtures() {
        let w = WeightVector::new(vec![-1, 2, 3]);
        assert_eq!(
            count_invariant_monomials(&w, 2).unwrap(),
            3,
            "z₁z̄₁, z₂z̄₂, z₃z̄₃ are the only invariant quadratics"
        );
        let w = WeightVector::new(vec![-1, 1]);
        assert_eq!(
            count_invariant_monomials(&w, 2).unwrap(),
            4,
            "the two radii plus z₁z₂ and its conjugate"
        );
    }

    #[test]
    fn degree_zero_is_always_one() {
        for weights in [vec![-7i64, 3, 5], vec![2, 4], vec![0, 0], vec![]] {
            assert_eq!(invariant_monomial_counts(&weights, 0).unwrap(), vec![1]);
        }
    }

    #[test]
    fn low_degree_counts_for_minus_one_two_three() {
        let counts = invariant_monomial_counts(&[-1, 2, 3], 3).unwrap();
        assert_eq!(counts[0], 1);
        assert_eq!(counts[1], 0);
        assert_eq!(counts[2], 3);
        // Cubics: z₁²z₂, z₁z̄₂z₃ and their conjugates.
        assert_eq!(counts[3], 4);
    }

    #[test]
    fn zero_weights_are_free_variables() {
        // A single zero weight contributes two unconstrained variables:
        // counts are C(d+1, 1) = d+1.
        let counts = invariant_monomial_counts(&[0], 5).unwrap();
        assert_eq!(counts, vec![1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn dp_matches_exhaustive_oracle_on_fixtures() {
        for weights in [
            vec![-1i64, 2, 3],
            vec![-6, 10, 15],
            vec![-1, 1],
            vec![-3, 6, 12, 4],
            vec![1, 2],
            vec![-2, 3, 3],
        ] {
            let upto = 8;
            let counts = invariant_monomial_counts(&weights, upto).unwrap();
            for d in 0..=upto {
                assert_eq!(
                    counts[d],
                    exhaustive_invariant_monomial_count(&weights, d),
                    "weights {weights:?} degree {d}"
                );
            }
        }
    }

    #[test]
    fn capacity_check_refuses_absurd_requests() {
        let weights: Vec<i64> = (1..=40).collect();
        let err = invariant_monomial_counts(&weights, 4000).unwrap_err();
        assert!(matches!(err, CountingError::CountCapacityExceeded { .. }));
    }

    #[test]
    fn counts_are_order_and_sign_insensitive() {
        let a = invariant_monomial_counts(&[-6, 10, 15], 12).unwrap();
        let b = invariant_monomial_counts(&[10, -6, 15], 12).unwrap();
        let c = invariant_monomial_counts(&[6, -10, -15], 12).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c, "conjugation swaps z and z̄ but preserves counts");
    }

    proptest! {
        #[test]
        fn prop_dp_matches_exhaustive(
            weights in proptest::collection::vec(-6i64..=6, 1..=3),
            degree in 0usize..=6,
        ) {
            let counts = invariant_monomial_counts(&weights, degree).unwrap();
            prop_assert_eq!(
                counts[degree],
                exhaustive_invariant_monomial_count(&weights, degree)
            );
        }
    }
}
