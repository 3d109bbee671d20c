//! Molien series of the doubled action of a finite U(2) group.
//!
//! For Γ ⊂ U(2) acting on ℂ² and simultaneously by the conjugate action on
//! ℂ̄², the dimensions of the degree-k invariants form the series
//!
//! ```text
//! H(x) = (1/|Γ|) Σ_{g∈Γ} 1 / det(I₄ − x·blockdiag(g, ḡ))
//! ```
//!
//! The block matrix has eigenvalues `λ₁, λ₂, λ̄₁, λ̄₂` — the eigenvalues of
//! `g` together with their conjugates — all roots of unity, so every term
//! is exactly `1/((1−λ₁x)(1−λ₂x)(1−λ̄₁x)(1−λ̄₂x))`.
//!
//! The computation here is exact and (after a one-time certification)
//! entirely in machine integers:
//!
//! 1. each element contributes its four eigenvalue exponents modulo
//!    `L = lcm` of the element orders, collected into a histogram;
//! 2. the histogram is certified stable under every Galois substitution
//!    `ζ_L ↦ ζ_L^t`, which proves all series coefficients are rational
//!    (a failure is reported, never papered over);
//! 3. per histogram class, the coefficients of `1/Π(1−μᵢx)` are produced by
//!    the complete-homogeneous recurrence `h_k = e₁(h_{k−1} + h_{k−3}) −
//!    e₂h_{k−2} − h_{k−4}` in the group ring ℤ[x]/(x^L − 1), where the
//!    elementary symmetric values satisfy `e₃ = e₁` and `e₄ = 1` because
//!    the eigenvalue multiset is closed under conjugation;
//! 4. the rational value of each accumulated coefficient is extracted by
//!    the trace formula `Tr(ζ_L^j) = μ(L/gcd)·φ(L)/φ(L/gcd)`, with every
//!    division checked exact;
//! 5. since each term times `(1−x^L)⁴` is a polynomial of degree `4L−4`,
//!    multiplying the series prefix by `(1−x^L)⁴` reconstructs the
//!    numerator, the guard coefficients beyond `4L−4` are checked to be
//!    zero, and the result is put in canonical form by cyclotomic trial
//!    division.
//!
//! The Laurent data of the canonical series at `x = 1` gives `γ₀ = 1/|Γ|`
//! (checked exactly) and the curvature coefficient `γ₂`, which the closed
//! form [`gamma_finite_closed_form`] reproduces from the pseudoreflection
//! census alone.

use num_bigint::BigInt;
use num_integer::Integer;

use crate::exactalg::{euler_phi, q, CyclotomicElement, IntPoly, Q, RationalFunction};

use super::duval::FiniteU2Group;
use super::element::{U2Error, UnitaryMatrix2};

// ---------------------------------------------------------------------------
// Results
// ---------------------------------------------------------------------------

/// The Molien series of the doubled action with its Laurent data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MolienData {
    /// The series as a canonical rational function.
    pub series: RationalFunction,
    /// Leading Laurent coefficient at `x = 1`; always `1/|Γ|`.
    pub gamma0: Q,
    /// Second-order Laurent coefficient at `x = 1`.
    pub gamma2: Q,
    /// Dimension of the degree-2 invariants (the Taylor coefficient at
    /// `x²`).
    pub quadratic_dimension: u64,
}

// ---------------------------------------------------------------------------
// Eigenvalue data
// ---------------------------------------------------------------------------

/// The four block eigenvalue exponents of `g` at modulus `target`, sorted.
fn block_exponents(g: &UnitaryMatrix2, target: u64) -> [u64; 4] {
    let (e1, e2, ord) = g.eigenvalue_exponents();
    debug_assert_eq!(target % ord, 0);
    let s = target / ord;
    let p = e1 * s;
    let qe = e2 * s;
    let mut t = [
        p % target,
        qe % target,
        (target - p % target) % target,
        (target - qe % target) % target,
    ];
    t.sort_unstable();
    t
}

/// Möbius function of a small integer.
fn mobius(mut n: u64) -> i64 {
    let mut mu = 1i64;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

// ---------------------------------------------------------------------------
// The exact series pipeline
// ---------------------------------------------------------------------------

/// Computes the Molien series of the doubled action, with Laurent data.
///
/// Errors with [`U2Error::NonRationalMolien`] if the eigenvalue histogram
/// is not Galois-stable (which would make some coefficient irrational — a
/// state no genuine finite group can reach), and with
/// [`U2Error::MolienSanity`] if any structural identity fails downstream.
pub fn molien_real(group: &FiniteU2Group) -> Result<MolienData, U2Error> {
    let order = group.order();
    // L = lcm of element orders = modulus for all eigenvalue exponents.
    let mut l = 1u64;
    for g in group.elements() {
        l = l.lcm(&g.order());
    }
    let l_us = l as usize;

    // Histogram of sorted block-exponent 4-tuples.
    let mut histogram: std::collections::BTreeMap<[u64; 4], u64> = std::collections::BTreeMap::new();
    for g in group.elements() {
        *histogram.entry(block_exponents(g, l)).or_insert(0) += 1;
    }

    // Galois certification: the histogram must be fixed by every t coprime
    // to L.  This is what makes all extracted coefficients rational.
    for t in 2..l {
        if t.gcd(&l) != 1 {
            continue;
        }
        let mut mapped: std::collections::BTreeMap<[u64; 4], u64> = std::collections::BTreeMap::new();
        for (tuple, count) in &histogram {
            let mut im = tuple.map(|e| (e * t) % l);
            im.sort_unstable();
            *mapped.entry(im).or_insert(0) += count;
        }
        if mapped != histogram {
            return Err(U2Error::NonRationalMolien {
                detail: format!(
                    "eigenvalue histogram of {} is not stable under ζ ↦ ζ^{t}",
                    group.label()
                ),
            });
        }
    }

    // Sum of h_k(g) over the group, in ℤ[x]/(x^L − 1), for k = 0..=4L.
    let degree = 4 * l_us;
    let mut total: Vec<Vec<i64>> = vec![vec![0i64; l_us]; degree + 1];
    for (tuple, count) in &histogram {
        accumulate_class(&mut total, *tuple, *count as i64, l_us);
    }

    // Trace table: value of Tr(ζ_L^j), divided by φ(L) at extraction time.
    let phi_l = euler_phi(l);
    let trace: Vec<i64> = (0..l)
        .map(|j| {
            let d = j.gcd(&l);
            let quot = l / d;
            mobius(quot) * (phi_l / euler_phi(quot)) as i64
        })
        .collect();

    // Extract the integer coefficients |Γ|·c_k, then c_k.
    let mut coefficients: Vec<i64> = Vec::with_capacity(degree + 1);
    for (k, row) in total.iter().enumerate() {
        let mut s: i128 = 0;
        for (j, &a) in row.iter().enumerate() {
            s += a as i128 * trace[j] as i128;
        }
        if s % phi_l as i128 != 0 {
            return Err(U2Error::NonRationalMolien {
                detail: format!("trace extraction at degree {k} is not divisible by φ(L)"),
            });
        }
        let v = s / phi_l as i128;
        if v < 0 || v % order as i128 != 0 {
            return Err(U2Error::MolienSanity {
                detail: format!("group-sum at degree {k} is {v}, not a multiple of |Γ| = {order}"),
            });
        }
        coefficients.push((v / order as i128) as i64);
    }
    if coefficients[0] != 1 {
        return Err(U2Error::MolienSanity {
            detail: format!("degree-0 coefficient is {}, expected 1", coefficients[0]),
        });
    }
    // Degree 1 counts independent linear invariants of the doubled action:
    // each vector of ℂ² fixed by the whole group contributes one invariant
    // on each of the two conjugate factors, so c₁ = 2·dim Fix(ℂ²).  The
    // fixed-subspace dimension is the exact trace average (1/|Γ|) Σ tr(g);
    // it vanishes — and with it c₁ — whenever no line is fixed pointwise.
    let mut trace_sum = CyclotomicElement::zero(group.conductor());
    for g in group.elements() {
        trace_sum = trace_sum.add(&g.trace());
    }
    let fixed_dim = trace_sum
        .to_rational()
        .map(|t| t / q(order as i64, 1))
        .filter(|d| d.is_integer() && *d >= q(0, 1))
        .ok_or_else(|| U2Error::MolienSanity {
            detail: format!(
                "trace average of {} is not a nonnegative integer",
                group.label()
            ),
        })?;
    if q(coefficients[1], 1) != q(2, 1) * &fixed_dim {
        return Err(U2Error::MolienSanity {
            detail: format!(
                "degree-1 coefficient is {}, expected 2·dim Fix = {}",
                coefficients[1],
                q(2, 1) * &fixed_dim
            ),
        });
    }

    // Numerator against the ansatz denominator (1 − x^L)⁴: every group
    // element's term times (1 − x^L)⁴ is a polynomial of degree 4L − 4, so
    // the guard band (4L−4, 4L] must come out exactly zero.
    let binom = [1i64, -4, 6, -4, 1];
    let mut numerator: Vec<BigInt> = Vec::with_capacity(degree + 1);
    for k in 0..=degree {
        let mut t = 0i64;
        for (i, &b) in binom.iter().enumerate() {
            if k >= i * l_us {
                t += b * coefficients[k - i * l_us];
            }
        }
        if k > degree - 4 && t != 0 {
            return Err(U2Error::MolienSanity {
                detail: format!("numerator guard coefficient at degree {k} is {t}, expected 0"),
            });
        }
        numerator.push(BigInt::from(t));
    }
    let series = RationalFunction::from_cyclotomic_denominator(
        IntPoly::from_coeffs(numerator),
        &[(l_us, 4)],
    )
    .map_err(|e| U2Error::MolienSanity {
        detail: format!("canonicalization failed: {e}"),
    })?;

    // Laurent data at x = 1.
    let laurent = series.laurent_at_one(2);
    if laurent.pole_order() != 4 {
        return Err(U2Error::MolienSanity {
            detail: format!("pole order at x = 1 is {}, expected 4", laurent.pole_order()),
        });
    }
    let gamma0 = laurent.gamma(0).clone();
    if gamma0 != q(1, order as i64) {
        return Err(U2Error::MolienSanity {
            detail: format!("γ₀ = {gamma0} does not equal 1/|Γ| = 1/{order}"),
        });
    }
    let gamma2 = laurent.gamma(2).clone();

    Ok(MolienData {
        series,
        gamma0,
        gamma2,
        quadratic_dimension: coefficients[2] as u64,
    })
}

/// Adds `count` copies of one eigenvalue class's coefficient stream into
/// `total`, running the complete-homogeneous recurrence in ℤ[x]/(x^L − 1).
fn accumulate_class(total: &mut [Vec<i64>], tuple: [u64; 4], count: i64, l: usize) {
    // e₁ = Σ x^{eᵢ}; e₂ = Σ_{i<j} x^{eᵢ+eⱼ}; the tuple is closed under
    // negation mod L, which gives e₃ = e₁ and e₄ = 1.
    let e1: Vec<usize> = tuple.iter().map(|&e| e as usize).collect();
    let mut e2: Vec<usize> = Vec::with_capacity(6);
    for i in 0..4 {
        for j in (i + 1)..4 {
            e2.push(((tuple[i] + tuple[j]) % l as u64) as usize);
        }
    }
    debug_assert!({
        let mut neg: Vec<u64> = tuple.iter().map(|&e| (l as u64 - e) % l as u64).collect();
        neg.sort_unstable();
        neg == tuple.to_vec()
    });

    let degree = total.len() - 1;
    // Rolling window h_{k−1}, h_{k−2}, h_{k−3}, h_{k−4}.
    let mut window: [Vec<i64>; 4] = [vec![0; l], vec![0; l], vec![0; l], vec![0; l]];
    let mut current = vec![0i64; l];
    for k in 0..=degree {
        if k == 0 {
            current[0] = 1;
        } else {
            for c in current.iter_mut() {
                *c = 0;
            }
            // e₁·(h_{k−1} + h_{k−3})
            let h1 = &window[0];
            let h3 = &window[2];
            let mut s13 = vec![0i64; l];
            for j in 0..l {
                s13[j] = h1[j] + h3[j];
            }
            for &e in &e1 {
                for j in 0..l {
                    current[(j + e) % l] += s13[j];
                }
            }
            // − e₂·h_{k−2}
            let h2 = &window[1];
            for &e in &e2 {
                for j in 0..l {
                    current[(j + e) % l] -= h2[j];
                }
            }
            // − h_{k−4}
            let h4 = &window[3];
            for j in 0..l {
                current[j] -= h4[j];
            }
        }
        for j in 0..l {
            total[k][j] += count * current[j];
        }
        window.rotate_right(1);
        std::mem::swap(&mut window[0], &mut current);
    }
}

// ---------------------------------------------------------------------------
// Cheap entry points
// ---------------------------------------------------------------------------

/// Dimension of the invariant quadratics of the doubled action, computed
/// directly from traces: `c₂ = (1/2|Γ|) Σ_g (T(g)² + T(g²))` with
/// `T(g) = tr(g) + conj(tr(g))` the trace of the 4×4 block.
///
/// This is the degree-2 Molien coefficient without the full series — the
/// audit uses it as an early filter before committing to the pipeline.
pub fn quadratic_invariant_dimension(group: &FiniteU2Group) -> Result<u64, U2Error> {
    let mut sum = crate::exactalg::CyclotomicElement::zero(group.conductor());
    for g in group.elements() {
        let t1 = g.trace();
        let t1 = t1.add(&t1.conj());
        let g2 = g.mul(g);
        let t2 = g2.trace();
        let t2 = t2.add(&t2.conj());
        sum = sum.add(&t1.mul(&t1)).add(&t2);
    }
    let value = sum.to_rational().ok_or_else(|| U2Error::MolienSanity {
        detail: "trace sum for the quadratic dimension is not rational".to_string(),
    })?;
    let c2 = &value / &Q::from(BigInt::from(2 * group.order()));
    if !c2.is_integer() || c2 < Q::from(BigInt::from(0)) {
        return Err(U2Error::MolienSanity {
            detail: format!("quadratic dimension candidate {c2} is not a nonnegative integer"),
        });
    }
    Ok(u64::try_from(c2.to_integer()).expect("small nonnegative dimension"))
}

/// The Laurent pair `(γ₀, γ₂)` from the group structure alone:
/// `γ₀ = 1/|Γ|` and `γ₂ = (1/12|Γ|) Σᵢ (|gᵢ|² − 1)` over the primitive
/// pseudoreflection set.
pub fn gamma_finite_closed_form(group: &FiniteU2Group) -> (Q, Q) {
    let order = group.order() as i64;
    let gamma0 = q(1, order);
    let sum: i64 = group
        .primitive_set()
        .iter()
        .map(|(_, o)| (*o as i64) * (*o as i64) - 1)
        .sum();
    let gamma2 = q(sum, 12 * order);
    (gamma0, gamma2)
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::qi;
    use crate::u2_catalog::duval::{duval_group, enumerate_groups_of_order, DuValSpec, EnumerationCaps};
    use crate::u2_catalog::su2::{su2_group, Su2Kind};
    use crate::u2_catalog::element::rational_scalar;

    fn su2_wrapped(kind: Su2Kind) -> FiniteU2Group {
        FiniteU2Group::from_elements(&kind.to_string(), su2_group(kind).unwrap()).unwrap()
    }

    #[test]
    fn trivial_group_series_is_free_on_four_variables() {
        let g = FiniteU2Group::from_elements("trivial", vec![UnitaryMatrix2::identity()]).unwrap();
        let data = molien_real(&g).unwrap();
        let expected = RationalFunction::from_cyclotomic_denominator(
            IntPoly::from_i64s(&[1]),
            &[(1, 4)],
        )
        .unwrap();
        assert_eq!(data.series, expected);
        assert_eq!(data.gamma0, qi(1));
        assert_eq!(data.gamma2, qi(0));
        assert_eq!(data.quadratic_dimension, 10);
    }

    #[test]
    fn scalar_pair_group_has_all_ten_quadratics() {
        // Ω₂ˢ = {±I}: every quadratic survives, γ₂ = 0 (no reflections).
        let g = su2_wrapped(Su2Kind::Cyclic(2));
        let data = molien_real(&g).unwrap();
        assert_eq!(data.gamma0, q(1, 2));
        assert_eq!(data.gamma2, qi(0));
        assert_eq!(data.quadratic_dimension, 10);
        assert_eq!(quadratic_invariant_dimension(&g).unwrap(), 10);
    }

    #[test]
    fn quadratic_dimension_table() {
        // Ω_mˢ for m ≥ 3 keeps 4 quadratics; D₁ keeps 4; D_m (m > 1)
        // keeps 1; joins with a scalar circle piece keep 2.
        for m in 3..=8u64 {
            let g = su2_wrapped(Su2Kind::Cyclic(m));
            assert_eq!(quadratic_invariant_dimension(&g).unwrap(), 4, "Ω_{m}ˢ");
        }
        assert_eq!(
            quadratic_invariant_dimension(&su2_wrapped(Su2Kind::BinaryDihedral(1))).unwrap(),
            4
        );
        for m in 2..=6u64 {
            let g = su2_wrapped(Su2Kind::BinaryDihedral(m));
            assert_eq!(quadratic_invariant_dimension(&g).unwrap(), 1, "D_{m}");
        }
        for (m, r) in [(3u64, 3u64), (3, 4), (4, 3), (5, 7)] {
            let gens = [
                UnitaryMatrix2::su2_diag(m, 1),
                UnitaryMatrix2::scalar_root(r, 1),
            ];
            let g = FiniteU2Group::from_generators(&format!("⟨Ω_{m}ˢ, Ω_{r}⟩"), &gens, None)
                .unwrap();
            assert_eq!(quadratic_invariant_dimension(&g).unwrap(), 2, "⟨Ω_{m}ˢ, Ω_{r}⟩");
        }
    }

    #[test]
    fn series_quadratic_coefficient_matches_direct_count() {
        for spec in [
            DuValSpec::II { m: 2 },
            DuValSpec::III { m: 1, ell: 2 },
            DuValSpec::IIIPrime { m: 3, ell: 1 },
            DuValSpec::IV { m: 1, ell: 1 },
        ] {
            let g = duval_group(&spec).unwrap();
            let data = molien_real(&g).unwrap();
            assert_eq!(
                data.quadratic_dimension,
                quadratic_invariant_dimension(&g).unwrap(),
                "{spec}"
            );
        }
    }

    #[test]
    fn linear_coefficient_counts_fixed_vectors() {
        // The degree-1 coefficient is twice the dimension of the pointwise
        // fixed subspace of ℂ²: zero for a group fixing no vector, two for
        // a single reflection fixing a line, four for the trivial group.
        let c1 = |g: &FiniteU2Group| {
            let data = molien_real(g).unwrap();
            data.series
                .taylor_coefficients(1)
                .unwrap()
                .get(1)
                .unwrap()
                .clone()
        };
        assert_eq!(c1(&su2_wrapped(Su2Kind::Cyclic(2))), qi(0));
        let reflection = FiniteU2Group::from_generators(
            "⟨diag(−1, 1)⟩",
            &[UnitaryMatrix2::diag(
                CyclotomicElement::from_rational(1, qi(-1)),
                CyclotomicElement::one(1),
            )
            .unwrap()],
            Some(2),
        )
        .unwrap();
        assert_eq!(c1(&reflection), qi(2));
        let trivial =
            FiniteU2Group::from_elements("trivial", vec![UnitaryMatrix2::identity()]).unwrap();
        assert_eq!(c1(&trivial), qi(4));
    }

    #[test]
    fn containing_a_quaternion_group_caps_the_quadratic_dimension() {
        // A group with the order-8 quaternion subgroup {±I, ±iσ} leaves at
        // most one quadratic invariant.  Sweep small enumerated orders and
        // check every group that literally contains that subgroup.
        let quaternion = su2_group(Su2Kind::BinaryDihedral(2)).unwrap();
        let mut witnessed = 0usize;
        for order in [8u64, 16, 24, 32] {
            for g in enumerate_groups_of_order(order, &EnumerationCaps::default()).unwrap() {
                if quaternion.iter().all(|q| g.contains(q)) {
                    witnessed += 1;
                    assert!(
                        quadratic_invariant_dimension(&g).unwrap() <= 1,
                        "{} contains the quaternion group",
                        g.label()
                    );
                }
            }
        }
        assert!(witnessed >= 3, "sweep found only {witnessed} supergroups");
    }

    #[test]
    fn type_iii_with_m_one_has_the_displayed_series() {
        // III(m=1, ℓ): numerator 1 + (2ℓ−1)x^{2ℓ} − (2ℓ−1)x^{2ℓ+2} − x^{4ℓ+2}
        // over (1−x²)³(1−x^{2ℓ})².
        for ell in [2u64, 3] {
            let g = duval_group(&DuValSpec::III { m: 1, ell }).unwrap();
            let data = molien_real(&g).unwrap();
            let two_ell = (2 * ell) as usize;
            let mut num = vec![0i64; 4 * ell as usize + 3];
            num[0] = 1;
            num[two_ell] = 2 * ell as i64 - 1;
            num[two_ell + 2] = -(2 * ell as i64 - 1);
            num[2 * two_ell + 2] = -1;
            let expected = RationalFunction::from_cyclotomic_denominator(
                IntPoly::from_i64s(&num),
                &[(2, 3), (two_ell, 2)],
            )
            .unwrap();
            assert_eq!(data.series, expected, "III(1, {ell})");
        }
    }

    #[test]
    fn type_ii_gamma_values() {
        // II(m), m even: γ₀ = 1/4m, γ₂ = 1/8m; m odd: no reflections.
        for m in [2u64, 4] {
            let g = duval_group(&DuValSpec::II { m }).unwrap();
            let data = molien_real(&g).unwrap();
            assert_eq!(data.gamma0, q(1, 4 * m as i64), "II({m}) γ₀");
            assert_eq!(data.gamma2, q(1, 8 * m as i64), "II({m}) γ₂");
            assert_eq!(g.pseudoreflections().len(), 2);
        }
        for m in [1u64, 3] {
            let g = duval_group(&DuValSpec::II { m }).unwrap();
            assert!(g.pseudoreflections().is_empty());
            let data = molien_real(&g).unwrap();
            assert_eq!(data.gamma2, qi(0), "II({m}) γ₂");
        }
    }

    #[test]
    fn type_iii_prime_gamma_values() {
        // III′(m, 1): one reflection of order 2, γ = (1/2m, 1/8m).
        for m in [1u64, 3, 5] {
            let g = duval_group(&DuValSpec::IIIPrime { m, ell: 1 }).unwrap();
            assert_eq!(g.pseudoreflections().len(), 1, "III'({m},1)");
            let data = molien_real(&g).unwrap();
            assert_eq!(data.gamma0, q(1, 2 * m as i64));
            assert_eq!(data.gamma2, q(1, 8 * m as i64));
        }
    }

    #[test]
    fn type_iv_gamma_values() {
        // IV(m, 1): m odd → 4 order-2 reflections, γ = (1/8m, 1/8m);
        // m even → 2 reflections, γ = (1/8m, 1/16m).
        for m in [1u64, 3] {
            let g = duval_group(&DuValSpec::IV { m, ell: 1 }).unwrap();
            assert_eq!(g.pseudoreflections().len(), 4, "IV({m},1)");
            let data = molien_real(&g).unwrap();
            assert_eq!(data.gamma0, q(1, 8 * m as i64));
            assert_eq!(data.gamma2, q(1, 8 * m as i64));
        }
        for m in [2u64, 4] {
            let g = duval_group(&DuValSpec::IV { m, ell: 1 }).unwrap();
            assert_eq!(g.pseudoreflections().len(), 2, "IV({m},1)");
            let data = molien_real(&g).unwrap();
            assert_eq!(data.gamma0, q(1, 8 * m as i64));
            assert_eq!(data.gamma2, q(1, 16 * m as i64));
        }
    }

    #[test]
    fn closed_form_matches_series_extraction_on_enumerations() {
        for order in [1u64, 2, 3, 4, 6, 8, 12] {
            let groups = enumerate_groups_of_order(order, &EnumerationCaps::default()).unwrap();
            assert!(!groups.is_empty() || order % 2 == 1, "order {order}");
            for g in &groups {
                let data = molien_real(g).unwrap();
                let (g0, g2) = gamma_finite_closed_form(g);
                assert_eq!(data.gamma0, g0, "{} γ₀", g.label());
                assert_eq!(data.gamma2, g2, "{} γ₂", g.label());
            }
        }
    }

    #[test]
    fn icosahedral_group_is_reflection_free_with_zero_gamma2() {
        let g = duval_group(&DuValSpec::IX { m: 1 }).unwrap();
        assert!(g.pseudoreflections().is_empty());
        let data = molien_real(&g).unwrap();
        assert_eq!(data.gamma0, q(1, 120));
        assert_eq!(data.gamma2, qi(0));
    }

    #[test]
    fn doubled_action_never_has_pseudoreflections() {
        // A 4×4 pseudoreflection needs eigenvalue 1 with multiplicity
        // exactly 3, impossible for blockdiag(g, ḡ): mechanical check.
        for spec in [DuValSpec::II { m: 2 }, DuValSpec::IIIPrime { m: 3, ell: 1 }] {
            let group = duval_group(&spec).unwrap();
            let mut l = 1u64;
            for g in group.elements() {
                l = l.lcm(&g.order());
            }
            for g in group.elements() {
                let ones = block_exponents(g, l).iter().filter(|&&e| e == 0).count();
                assert_ne!(ones, 3, "{spec}: 4×4 block of {g} would be a pseudoreflection");
            }
        }
    }

    #[test]
    fn minus_identity_scalars_certify_galois_stability() {
        // A scalar group of composite conductor exercises the certification
        // path with nontrivial Galois orbits.
        let g = FiniteU2Group::from_generators(
            "Ω₁₂",
            &[UnitaryMatrix2::scalar_root(12, 1)],
            Some(12),
        )
        .unwrap();
        let data = molien_real(&g).unwrap();
        assert_eq!(data.gamma0, q(1, 12));
        assert_eq!(data.quadratic_dimension, quadratic_invariant_dimension(&g).unwrap());
    }

    #[test]
    fn molien_of_minus_one_scalar_equals_cyclic_two_diag() {
        // {±I} arises both as a scalar group and as Ω₂ˢ; the series must
        // agree whichever way the group is presented.
        let a = FiniteU2Group::from_elements(
            "{±I}",
            vec![UnitaryMatrix2::identity(), rational_scalar(q(-1, 1))],
        )
        .unwrap();
        let b = su2_wrapped(Su2Kind::Cyclic(2));
        assert_eq!(molien_real(&a).unwrap().series, molien_real(&b).unwrap().series);
    }
}
