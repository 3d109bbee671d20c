//! Molien series of doubled U(2) actions, exactly.
//!
//! Run with:
//!
//! ```text
//! cargo run --example molien_series
//! ```
//!
//! A finite Γ ⊂ U(2) acts on ℂ² and, by conjugated matrices, on a second
//! copy ℂ̄².  The Molien series of the combined four-dimensional action
//! counts invariant polynomials degree by degree:
//!
//! ```text
//! H(x) = (1/|Γ|) Σ_{g∈Γ} 1 / det(I₄ − x·blockdiag(g, ḡ))
//! ```
//!
//! This is the finite-group counterpart of the circle-quotient Hilbert
//! series: comparing the two — leading Laurent data first, full series
//! last — is the engine of the audit.  Everything here is exact: the sum
//! runs over eigenvalue exponents of roots of unity, rationality is
//! certified by Galois stability, and the Laurent data at `x = 1` comes
//! out as honest rationals.

use quotient_audit::exactalg::CyclotomicElement;
use quotient_audit::u2_catalog::{
    duval_group, gamma_finite_closed_form, is_pseudoreflection, molien_real,
    quadratic_invariant_dimension, DuValSpec, UnitaryMatrix2,
};

fn main() {
    // -----------------------------------------------------------------
    // A reflection example: diag(1, ζ₃) fixes a line, b does not
    // -----------------------------------------------------------------
    let b = UnitaryMatrix2::b_matrix();
    println!("b = {b}: pseudoreflection? {:?}", is_pseudoreflection(&b));
    let r = UnitaryMatrix2::diag(CyclotomicElement::one(3), CyclotomicElement::zeta(3))
        .expect("roots of unity are unitary");
    println!("diag(1, ζ₃) = {r}: pseudoreflection? {:?}", is_pseudoreflection(&r));

    // -----------------------------------------------------------------
    // Full Molien data for small members of several families
    // -----------------------------------------------------------------
    for spec in [
        DuValSpec::II { m: 2 },
        DuValSpec::III { m: 1, ell: 2 },
        DuValSpec::IIIPrime { m: 3, ell: 1 },
        DuValSpec::IV { m: 1, ell: 1 },
        DuValSpec::IX { m: 1 },
    ] {
        let group = duval_group(&spec).expect("parameters satisfy the constraints");
        let data = molien_real(&group).expect("group sums are Galois-stable");
        println!("{} (order {}):", group.label(), group.order());
        println!("  H(x) = {}", data.series);
        println!("  γ₀ = {}   γ₂ = {}", data.gamma0, data.gamma2);
        println!("  quadratic invariants: {}", data.quadratic_dimension);

        // The closed form needs only the pseudoreflection census:
        // γ₀ = 1/|Γ| and γ₂ = Σ (order² − 1) / (12|Γ|) over the
        // primitive pseudoreflection generators.
        let (gamma0, gamma2) = gamma_finite_closed_form(&group);
        assert_eq!(gamma0, data.gamma0, "{spec}: γ₀ closed form");
        assert_eq!(gamma2, data.gamma2, "{spec}: γ₂ closed form");

        // The cheap degree-2 count agrees with the series coefficient.
        assert_eq!(
            quadratic_invariant_dimension(&group).expect("trace averages are integers"),
            data.quadratic_dimension,
            "{spec}: quadratic dimension"
        );
    }

    // -----------------------------------------------------------------
    // γ₂ = 0 exactly for pseudoreflection-free groups
    // -----------------------------------------------------------------
    let icosahedral = duval_group(&DuValSpec::IX { m: 1 }).expect("order 120");
    assert!(icosahedral.pseudoreflections().is_empty());
    let data = molien_real(&icosahedral).expect("group sums are Galois-stable");
    assert_eq!(data.gamma2, quotient_audit::exactalg::qi(0));
    println!(
        "{}: pseudoreflection-free, so γ₂ vanishes identically",
        icosahedral.label()
    );
}
