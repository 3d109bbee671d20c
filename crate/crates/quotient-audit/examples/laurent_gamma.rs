//! Exact rational functions and their Laurent data at `x = 1`.
//!
//! Run with:
//!
//! ```text
//! cargo run --example laurent_gamma
//! ```
//!
//! Demonstrates the exact-arithmetic layer on its own: canonical rational
//! functions over ℤ[x], Taylor expansion, Laurent coefficients at the pole
//! `x = 1`, and recovery of a rational function from finitely many series
//! coefficients.

use quotient_audit::exactalg::{
    q, reconstruct_rational, IntPoly, PowerSeries, RationalFunction,
};

fn main() {
    // -----------------------------------------------------------------
    // A canonical rational function: (1 + x³) / ((1 - x²)²(1 - x³))
    // -----------------------------------------------------------------
    let f = RationalFunction::from_cyclotomic_denominator(
        IntPoly::from_i64s(&[1, 0, 0, 1]),
        &[(2, 2), (3, 1)],
    )
    .expect("denominator factors are nonzero");
    println!("f(x) = {f}");
    println!("  canonical numerator   : {}", f.numerator());
    println!("  canonical denominator : {}", f.denominator());

    let taylor = f.taylor_coefficients(8).expect("finite at x = 0");
    let head: Vec<String> = taylor.coeffs().iter().map(|c| c.to_string()).collect();
    println!("  Taylor head           : {}", head.join(", "));

    // -----------------------------------------------------------------
    // Laurent data at x = 1: f = Σ γⱼ (1-x)^{j-d}
    // -----------------------------------------------------------------
    let laurent = f.laurent_at_one(3);
    println!("  pole order at x = 1   : {}", laurent.pole_order());
    for (j, gamma) in laurent.gammas().iter().enumerate() {
        println!("  γ{j} = {gamma}");
    }

    // -----------------------------------------------------------------
    // Reconstruction: hand the series prefix back and recover f exactly
    // -----------------------------------------------------------------
    let prefix = f.taylor_coefficients(40).expect("finite at x = 0");
    let recovered =
        reconstruct_rational(&prefix, 10, 10).expect("prefix determines f within the bounds");
    println!("  reconstructed         : {recovered}");
    assert_eq!(recovered, f, "reconstruction returns the canonical form");

    // -----------------------------------------------------------------
    // The verification margin refuses underdetermined prefixes
    // -----------------------------------------------------------------
    let short = PowerSeries::from_coeffs(vec![q(1, 1), q(2, 1), q(3, 1)]);
    match reconstruct_rational(&short, 10, 10) {
        Err(err) => println!("  short prefix rejected : {err}"),
        Ok(_) => unreachable!("three coefficients cannot pin down degree-10 bounds"),
    }
}
