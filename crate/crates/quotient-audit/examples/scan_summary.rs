//! Batch audits over a grid of three-weight vectors.
//!
//! Run with:
//!
//! ```text
//! cargo run --example scan_summary
//! ```
//!
//! Audits every normalized generic one-negative three-weight vector with
//! weights up to 12, then aggregates: verdict counts, how many vectors pass
//! the integrality screen (these are the ones that reach candidate
//! enumeration), and which obstruction fires first how often.  Ends with the
//! first lines of the semicolon-separated export.

use quotient_audit::auditor::{scan, scan_csv, ScanOptions};

fn main() {
    let options = ScanOptions {
        alpha_max: 12,
        ..ScanOptions::default()
    };
    let report = scan(&options).expect("scan is infallible at this size");
    let summary = &report.summary;

    println!(
        "scanned {} vectors (-a; b, c) with b < c, distinct weights, gcd 1, max {}",
        summary.total, options.alpha_max
    );
    println!();

    println!("verdicts:");
    for (verdict, count) in &summary.verdict_counts {
        println!("  {count:4}  {verdict}");
    }
    // Desk-scale confirmation of the impossibility result: nothing survives.
    assert!(!summary.verdict_counts.contains_key("counterexample-candidate"));
    println!();

    println!(
        "integrality screen: {} of {} vectors have 1/γ₀ a positive integer",
        summary.diophantine_passing, summary.total
    );
    println!();

    println!("first obstruction (per vector):");
    for (name, count) in &summary.first_obstruction_counts {
        println!("  {count:4}  {name}");
    }
    println!();

    println!("certificate obstructions (per candidate, across all vectors):");
    for (kind, count) in &summary.obstruction_histogram {
        println!("  {count:4}  {kind}");
    }
    println!();

    let csv = scan_csv(&report);
    println!("export preview:");
    for line in csv.lines().take(6) {
        println!("  {line}");
    }
    let rows = csv.lines().count() - 1;
    assert_eq!(rows, summary.total);
    println!("  ... ({rows} rows)");
}
