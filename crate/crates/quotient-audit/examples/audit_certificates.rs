//! Full audits with per-candidate exclusion certificates.
//!
//! Run with:
//!
//! ```text
//! cargo run --example audit_certificates
//! ```
//!
//! Audits a handful of weight vectors end to end: verdicts across the whole
//! range (point, two-weight orbifold, predicate exclusions, full candidate
//! enumeration, recursive descent), then takes the `(-6,10,15)` audit apart —
//! every group of order 28 receives a certificate naming the first
//! obstruction that rules it out, and every certificate is re-checked from
//! scratch.

use std::collections::BTreeMap;

use quotient_audit::auditor::{audit, ReductionTerminal, Verdict};

fn main() {
    // -----------------------------------------------------------------
    // The verdict range
    // -----------------------------------------------------------------
    for weights in [
        vec![1i64, 2, 3],      // all positive: shell is the origin
        vec![-1, 1],           // two weights: cyclic orbifold
        vec![-1, 1, 1],        // degenerate pair: γ₀ = 3/8 screens it out
        vec![-1, 2, 3],        // 1/γ₀ = 60/11 is not an integer
        vec![-6, 10, 15],      // survives every predicate: enumeration runs
    ] {
        let report = audit(&weights).unwrap();
        print!("audit {weights:?} -> {}", report.verdict);
        if let Some(order) = report.dimension_two_order {
            print!("  (cyclic order {order})");
        }
        if let Some(exclusion) = &report.exclusion {
            print!("  [{}: {}]", exclusion.gate, exclusion.reason);
        }
        println!();
    }
    println!();

    // -----------------------------------------------------------------
    // The flagship triple, certificate by certificate
    // -----------------------------------------------------------------
    let report = audit(&[-6, 10, 15]).unwrap();
    assert_eq!(report.verdict, Verdict::ExcludedAllCandidates);
    let gamma = report.gamma.as_ref().unwrap();
    println!("weights {}:", report.normalized);
    println!(
        "  γ0 = {}  (so any matching group must have order {})",
        gamma.gamma0, gamma.gamma0_reciprocal
    );
    println!("  γ2 = {}", gamma.gamma2);
    for stratum in &report.strata {
        println!(
            "  codim-1 stratum on weights {:?}: isotropy {}, cyclic model of order {}",
            stratum.support, stratum.isotropy_order, stratum.cyclic_order
        );
    }

    println!("  candidates of order 28: {}", report.candidates.len());
    let mut histogram: BTreeMap<&str, usize> = BTreeMap::new();
    for outcome in &report.candidates {
        let cert = outcome.certificate.as_ref().expect("no candidate survives");
        *histogram.entry(cert.obstruction.kind()).or_default() += 1;
        // Every certificate re-checks from the stored candidate + weights.
        assert!(cert.revalidate(&report.normalized).unwrap());
    }
    println!("  all certificates re-validated from scratch");
    for (kind, count) in &histogram {
        println!("    {count:2} x {kind}");
    }
    println!();

    // Three representative certificates in detail.
    println!("sample certificates:");
    for wanted in ["II(m=7)", "III(m=1, ell=7)", "III(m=7, ell=1)"] {
        let outcome = report
            .candidates
            .iter()
            .find(|c| c.label == wanted)
            .expect("candidate is enumerated at order 28");
        let cert = outcome.certificate.as_ref().unwrap();
        println!(
            "  {} (order {}): {}",
            outcome.label,
            outcome.order,
            serde_json::to_string(&cert.obstruction).unwrap()
        );
    }
    println!();

    // -----------------------------------------------------------------
    // Four weights: gates first, then recursive descent
    // -----------------------------------------------------------------
    // 1/γ₀ = 672/13 fails the integrality gate before any descent runs.
    let gated = audit(&[-30, 6, 10, 15]).unwrap();
    println!(
        "audit [-30, 6, 10, 15] -> {}  [{}]",
        gated.verdict,
        gated.exclusion.as_ref().unwrap().gate
    );

    // 1/γ₀ = 21 passes, so every complete descent terminal is audited.
    let descended = audit(&[-12, 4, 6, 3]).unwrap();
    assert_eq!(descended.verdict, Verdict::ExcludedAllCandidates);
    println!("audit [-12, 4, 6, 3] -> {}", descended.verdict);
    for sub in &descended.descents {
        print!("  terminal {} -> {}", sub.normalized, sub.verdict);
        match &sub.exclusion {
            Some(e) => println!("  [{}]", e.gate),
            None => println!(),
        }
    }

    // A chain that blocks: the only step lands on (-1,2,4), which has no
    // codimension-one stratum of its own.
    let blocked = audit(&[-3, 6, 12, 4]).unwrap();
    let chain = blocked.reduction.as_ref().unwrap();
    match &chain.terminal {
        ReductionTerminal::Blocked { at, reason } => {
            println!("audit [-3, 6, 12, 4] -> {}", blocked.verdict);
            println!("  descent blocked at {at}: {reason}");
        }
        other => panic!("expected a blocked chain, got {other:?}"),
    }
}
