//! Normalization, γ coefficients, and screening predicates for weight
//! vectors.
//!
//! Run with:
//!
//! ```text
//! cargo run --example weight_vector_analysis
//! ```
//!
//! Walks the full circle-side analysis for a few representative vectors:
//! canonical form, the Laurent coefficients of the on-shell Hilbert series
//! at `x = 1` (closed form and extraction agreeing), and the predicate
//! screen that decides whether a finite-group comparison is even possible.

use quotient_audit::circle_quotient::{
    gamma_closed_form_n3, gamma_from_rational, hilb_on_rational, normalize, predicates,
    shell_support,
};

fn main() {
    // -----------------------------------------------------------------
    // Normalization with a full action log
    // -----------------------------------------------------------------
    for raw in [vec![2i64, -4, 6], vec![-6, 10, 15], vec![-1, 1, 0], vec![0, 0]] {
        let (w, log) = normalize(&raw);
        print!("normalize {raw:?} -> {w}");
        if log.trivial_representation {
            print!("  [trivial representation]");
        }
        if !log.events.is_empty() {
            print!("  [{}]", log.events.join("; "));
        }
        println!();
    }
    println!();

    // -----------------------------------------------------------------
    // Laurent coefficients two ways
    // -----------------------------------------------------------------
    for raw in [vec![-6i64, 10, 15], vec![-1, 2, 3]] {
        let (w, _) = normalize(&raw);
        let closed = gamma_closed_form_n3(&w).expect("three coprime weights");
        let series = hilb_on_rational(&w).expect("mixed signs give a rational series");
        let extracted = gamma_from_rational(&series);
        println!("weights {w}:");
        println!("  shell support       : {:?}", shell_support(&w));
        println!("  on-shell series     : {series}");
        println!(
            "  γ0 = {} (closed form {}), γ1 = {}, γ2 = {}",
            extracted.gamma0, closed.gamma0, extracted.gamma1, extracted.gamma2
        );
        assert_eq!(closed.gamma0, extracted.gamma0);
        assert_eq!(closed.gamma2, extracted.gamma2);
        println!();
    }

    // -----------------------------------------------------------------
    // The predicate screen
    // -----------------------------------------------------------------
    for raw in [vec![-6i64, 10, 15], vec![-1, 2, 3], vec![-3, 6, 12, 4]] {
        let (w, _) = normalize(&raw);
        let report = predicates(&w).expect("normalized input");
        println!("predicates for {w}:");
        println!("  rhm                 : {}", describe(&report.rhm));
        println!("  nondegenerate       : {}", describe(&report.nondegenerate));
        println!("  diophantine         : {}", describe(&report.diophantine));
        println!("  codim1_chain        : {}", describe(&report.codim1_chain));
        println!("  ratio_ok            : {}", describe(&report.ratio_ok));
        println!("  quadratic_count_ok  : {}", describe(&report.quadratic_count_ok));
        match report.first_exclusion() {
            Some((name, reason)) => println!("  => excluded by `{name}`: {reason}"),
            None => println!("  => passes the screen; group comparison required"),
        }
        println!();
    }
}

fn describe(outcome: &quotient_audit::circle_quotient::PredicateOutcome) -> String {
    use quotient_audit::circle_quotient::PredicateOutcome::*;
    match outcome {
        Holds => "holds".to_string(),
        NotApplicable => "not applicable".to_string(),
        Fails { reason } => format!("FAILS ({reason})"),
    }
}
