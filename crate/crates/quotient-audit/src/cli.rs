//! Command-line front end.
//!
//! Six subcommands over the library: `analyze` (circle-side data for one
//! weight vector), `group` and `catalog` (finite-group side), `audit` (the
//! full exclusion pipeline), `scan` (batch audits with CSV export), and
//! `verify-paper` (the fixture battery for every externally anchored value).
//!
//! Machine output is a versioned JSON envelope; all rationals are exact
//! `"p/q"` strings.  Exit codes: `0` success, `1` verify-paper failure,
//! `2` unparseable or invalid input, `3` internal error, `4` a candidate
//! survived every obstruction (an alarm that should never fire).

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::auditor::{
    audit, scan, scan_csv, verify_paper_arguments, AuditReport, ScanOptions, Verdict,
};
use crate::circle_quotient::{
    gamma_closed_form_n3, gamma_from_rational, hilb_on_rational, normalize, orbit_type_lattice,
    predicates, GammaData, PredicateOutcome, WeightVector,
};
use crate::exactalg::{IntPoly, RationalFunction, Q};
use crate::u2_catalog::{
    duval_group, enumerate_groups_of_order, molien_real, quadratic_invariant_dimension,
    DuValSpec, EnumerationCaps, FiniteU2Group, Su2Kind, UnitaryMatrix2,
};
use crate::SCHEMA_VERSION;

/// Exit code for a verify-paper run with at least one failing check.
pub const EXIT_VERIFY_FAILED: i32 = 1;
/// Exit code for unparseable or invalid input.
pub const EXIT_PARSE: i32 = 2;
/// Exit code for an internal computation failure.
pub const EXIT_INTERNAL: i32 = 3;
/// Exit code for a surviving candidate (never expected).
pub const EXIT_ALARM: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "qaudit",
    about = "Exact-arithmetic audit of circle symplectic quotients against finite unitary quotients",
    version
)]
pub struct Cli {
    /// Output format for the primary report.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Circle-side analysis: normalization, series, γ data, strata, predicates.
    Analyze(AnalyzeArgs),
    /// Build one finite U(2) group from its parameters.
    Group(GroupArgs),
    /// List every group of a given order.
    Catalog(CatalogArgs),
    /// Run the full exclusion pipeline on one weight vector.
    Audit(AuditArgs),
    /// Audit a whole grid of three-weight vectors.
    Scan(ScanArgs),
    /// Re-check every externally anchored fixture and finite argument.
    VerifyPaper(VerifyPaperArgs),
}

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    /// Comma-separated integer weights, e.g. -6,10,15.
    #[arg(long, allow_hyphen_values = true)]
    pub weights: String,
    /// How many Taylor coefficients of the on-shell series to print.
    #[arg(long, default_value_t = 12)]
    pub series_degree: usize,
}

#[derive(Args, Debug)]
pub struct GroupArgs {
    /// Family: I, II, III, III' (also IIIp), IV, V, VI, VII, VIII, IX.
    #[arg(long = "type")]
    pub family: String,
    #[arg(long)]
    pub m: Option<u64>,
    #[arg(long)]
    pub ell: Option<u64>,
    #[arg(long)]
    pub f: Option<u64>,
    #[arg(long)]
    pub g: Option<u64>,
    #[arg(long)]
    pub d: Option<u64>,
    /// Also compute the Molien series and its Laurent data.
    #[arg(long)]
    pub molien: bool,
}

#[derive(Args, Debug)]
pub struct CatalogArgs {
    /// Group order to enumerate.
    #[arg(long)]
    pub order: u64,
}

#[derive(Args, Debug)]
pub struct AuditArgs {
    /// Comma-separated integer weights, e.g. -6,10,15.
    #[arg(long, allow_hyphen_values = true)]
    pub weights: String,
    /// Include the full per-candidate exclusion certificates.
    #[arg(long)]
    pub certificates: bool,
}

#[derive(Args, Debug)]
pub struct ScanArgs {
    /// Number of weights per vector (only 3 is implemented).
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    /// Inclusive bound on the absolute weights.
    #[arg(long)]
    pub alpha_max: u64,
    /// Write the CSV rows here instead of stdout.
    #[arg(long)]
    pub csv: Option<std::path::PathBuf>,
    /// Worker threads for the sweep (default: all cores).
    #[arg(long)]
    pub jobs: Option<usize>,
}

#[derive(Args, Debug)]
pub struct VerifyPaperArgs {
    /// Search bound for the exhaustive finite arguments.
    #[arg(long, default_value_t = 100)]
    pub bound: u64,
}

/// Parse the process arguments and run; returns the process exit code.
pub fn main() -> i32 {
    let cli = match Cli::try_parse_from(std::env::args_os()) {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_PARSE,
            };
            // Help goes to stdout, errors to stderr; clap's print() picks.
            let _ = err.print();
            return code;
        }
    };
    let stdout = std::io::stdout();
    run(&cli, &mut stdout.lock())
}

/// Run a parsed command, writing the report to `out`.
pub fn run<W: Write>(cli: &Cli, out: &mut W) -> i32 {
    let started = Instant::now();
    let (name, input_echo, outcome) = match &cli.command {
        Command::Analyze(args) => ("analyze", json!({ "weights": args.weights }), analyze(args)),
        Command::Group(args) => (
            "group",
            json!({
                "type": args.family, "m": args.m, "ell": args.ell,
                "f": args.f, "g": args.g, "d": args.d, "molien": args.molien,
            }),
            group(args),
        ),
        Command::Catalog(args) => ("catalog", json!({ "order": args.order }), catalog(args)),
        Command::Audit(args) => (
            "audit",
            json!({ "weights": args.weights, "certificates": args.certificates }),
            run_audit(args),
        ),
        Command::Scan(args) => (
            "scan",
            json!({
                "n": args.n, "alpha_max": args.alpha_max,
                "csv": args.csv.as_ref().map(|p| p.display().to_string()),
            }),
            run_scan(args),
        ),
        Command::VerifyPaper(args) => (
            "verify-paper",
            json!({ "bound": args.bound }),
            verify_paper(args),
        ),
    };

    let output = match outcome {
        Ok(output) => output,
        Err(failure) => {
            let _ = writeln!(std::io::stderr(), "error: {}", failure.message);
            return failure.exit;
        }
    };

    let written = match cli.format {
        Format::Text => writeln!(out, "{}", output.text.trim_end()),
        Format::Json => {
            let envelope = json!({
                "schema_version": SCHEMA_VERSION,
                "command": name,
                "input": input_echo,
                "result": output.result,
                "timing_ms": started.elapsed().as_millis() as u64,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&envelope).unwrap())
        }
    };
    if written.is_err() {
        return EXIT_INTERNAL;
    }
    output.exit
}

struct CommandOutput {
    result: Value,
    text: String,
    exit: i32,
}

struct Failure {
    exit: i32,
    message: String,
}

impl Failure {
    fn parse(message: impl Into<String>) -> Self {
        Failure {
            exit: EXIT_PARSE,
            message: message.into(),
        }
    }

    fn internal(message: impl Into<String>) -> Self {
        Failure {
            exit: EXIT_INTERNAL,
            message: message.into(),
        }
    }
}

fn parse_weights(text: &str) -> Result<Vec<i64>, Failure> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(Failure::parse("no weights given"));
    }
    trimmed
        .split(',')
        .map(|piece| {
            piece
                .trim()
                .parse::<i64>()
                .map_err(|_| Failure::parse(format!("could not parse weight '{}'", piece.trim())))
        })
        .collect()
}

fn q_str(value: &Q) -> String {
    value.to_string()
}

fn gamma_value(gamma: &GammaData) -> Value {
    json!({
        "gamma0": q_str(&gamma.gamma0),
        "gamma1": q_str(&gamma.gamma1),
        "gamma2": q_str(&gamma.gamma2),
        "gamma3": q_str(&gamma.gamma3),
        "gamma0_reciprocal": q_str(&gamma.gamma0_reciprocal()),
        "candidate_group_order": gamma.candidate_group_order().map(|o| o.to_string()),
        "source": gamma.source.to_string(),
    })
}

fn describe_outcome(outcome: &PredicateOutcome) -> String {
    match outcome {
        PredicateOutcome::Holds => "holds".to_string(),
        PredicateOutcome::NotApplicable => "not applicable".to_string(),
        PredicateOutcome::Fails { reason } => format!("FAILS ({reason})"),
    }
}

// ---------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------

fn analyze(args: &AnalyzeArgs) -> Result<CommandOutput, Failure> {
    let raw = parse_weights(&args.weights)?;
    let (wv, log) = normalize(&raw);
    let mut text = String::new();
    let mut result = serde_json::Map::new();
    result.insert("input".into(), json!(raw));
    result.insert("normalized".into(), json!(wv.weights()));
    result.insert(
        "normalization".into(),
        serde_json::to_value(&log).map_err(|e| Failure::internal(e.to_string()))?,
    );
    let _ = writeln!(text, "weights        : {raw:?} -> {wv}");
    let events = if log.events.is_empty() {
        "already canonical".to_string()
    } else {
        log.events.join("; ")
    };
    let _ = writeln!(text, "normalization  : {events}");

    if log.trivial_representation {
        result.insert("classification".into(), json!("trivial"));
        let _ = writeln!(
            text,
            "classification : trivial (no nonzero weights; nothing to analyze)"
        );
        return Ok(CommandOutput {
            result: Value::Object(result),
            text,
            exit: 0,
        });
    }
    if !wv.has_both_signs() {
        result.insert("classification".into(), json!("point"));
        let _ = writeln!(
            text,
            "classification : point (all weights share one sign; the zero level is the origin)"
        );
        return Ok(CommandOutput {
            result: Value::Object(result),
            text,
            exit: 0,
        });
    }

    result.insert("classification".into(), json!("mixed-signs"));
    let series = hilb_on_rational(&wv).map_err(|e| Failure::internal(e.to_string()))?;
    let gamma = gamma_from_rational(&series);
    let head = series
        .taylor_coefficients(args.series_degree)
        .map_err(|e| Failure::internal(e.to_string()))?;
    let head_strings: Vec<String> = (0..=args.series_degree)
        .map(|k| head.get(k).map(q_str).unwrap_or_default())
        .collect();
    let _ = writeln!(text, "on-shell series: {series}");
    let _ = writeln!(text, "series head    : {}", head_strings.join(", "));
    let _ = writeln!(
        text,
        "gamma          : γ0 = {}, γ1 = {}, γ2 = {}, γ3 = {}  (1/γ0 = {})",
        gamma.gamma0,
        gamma.gamma1,
        gamma.gamma2,
        gamma.gamma3,
        gamma.gamma0_reciprocal()
    );
    result.insert(
        "series".into(),
        json!({ "rational": series.to_string(), "taylor_head": head_strings }),
    );
    result.insert("gamma_extracted".into(), gamma_value(&gamma));

    if wv.len() == 3 && wv.gcd_all() == 1 {
        let closed = gamma_closed_form_n3(&wv).map_err(|e| Failure::internal(e.to_string()))?;
        let _ = writeln!(
            text,
            "closed form    : γ0 = {}, γ2 = {}  (agrees: {})",
            closed.gamma0,
            closed.gamma2,
            closed.gamma0 == gamma.gamma0 && closed.gamma2 == gamma.gamma2
        );
        result.insert("gamma_closed_form".into(), gamma_value(&closed));
    }

    if wv.len() == 2 {
        // Two opposite-sign weights: the quotient is the cyclic orbifold of
        // order N = α₁ + α₂ (the vector is already coprime).
        let alphas = wv.alphas();
        let order = alphas[0] + alphas[1];
        let _ = writeln!(text, "classification : dimension-two orbifold, cyclic order {order}");
        result.insert("dimension_two_order".into(), json!(order));
    }

    let lattice = orbit_type_lattice(&wv);
    let _ = writeln!(text, "orbit strata   :");
    for node in &lattice.nodes {
        let support: Vec<usize> = node.support.iter().copied().collect();
        let dim = node
            .complex_dimension
            .map(|d| d.to_string())
            .unwrap_or_else(|| "-".to_string());
        let mut line = format!(
            "  support {:?}: isotropy {}, complex dim {}",
            support, node.isotropy_order, dim
        );
        if let Some(n) = node.cyclic_order {
            let _ = write!(line, ", cyclic model of order {n}");
        }
        let _ = writeln!(text, "{line}");
    }
    result.insert(
        "strata".into(),
        serde_json::to_value(&lattice.nodes).map_err(|e| Failure::internal(e.to_string()))?,
    );

    match predicates(&wv) {
        Ok(report) => {
            let _ = writeln!(text, "predicates     :");
            for (name, outcome) in [
                ("rhm", &report.rhm),
                ("nondegenerate", &report.nondegenerate),
                ("diophantine", &report.diophantine),
                ("codim1_chain", &report.codim1_chain),
                ("ratio_ok", &report.ratio_ok),
                ("quadratic_count_ok", &report.quadratic_count_ok),
            ] {
                let _ = writeln!(text, "  {name:<18} : {}", describe_outcome(outcome));
            }
            match report.first_exclusion() {
                Some((name, reason)) => {
                    let _ = writeln!(text, "  => excluded by `{name}`: {reason}");
                }
                None => {
                    let _ = writeln!(text, "  => passes the screen; group comparison required");
                }
            }
            result.insert(
                "predicates".into(),
                serde_json::to_value(&report).map_err(|e| Failure::internal(e.to_string()))?,
            );
        }
        Err(err) => {
            let _ = writeln!(text, "predicates     : not computed ({err})");
        }
    }

    Ok(CommandOutput {
        result: Value::Object(result),
        text,
        exit: 0,
    })
}

// ---------------------------------------------------------------------
// group / catalog
// ---------------------------------------------------------------------

fn build_spec(args: &GroupArgs) -> Result<DuValSpec, Failure> {
    let need = |name: &str, value: Option<u64>| {
        value.ok_or_else(|| {
            Failure::parse(format!(
                "type {} requires --{name}",
                args.family.trim()
            ))
        })
    };
    let family = args.family.trim();
    let spec = match family.to_ascii_uppercase().as_str() {
        "I" => DuValSpec::I {
            m: need("m", args.m)?,
            ell: need("ell", args.ell)?,
            f: need("f", args.f)?,
            g: need("g", args.g)?,
            d: need("d", args.d)?,
        },
        "II" => DuValSpec::II { m: need("m", args.m)? },
        "III" => DuValSpec::III {
            m: need("m", args.m)?,
            ell: need("ell", args.ell)?,
        },
        "III'" | "IIIP" | "III-PRIME" | "IIIPRIME" => DuValSpec::IIIPrime {
            m: need("m", args.m)?,
            ell: need("ell", args.ell)?,
        },
        "IV" => DuValSpec::IV {
            m: need("m", args.m)?,
            ell: need("ell", args.ell)?,
        },
        "V" => DuValSpec::V { m: need("m", args.m)? },
        "VI" => DuValSpec::VI { m: need("m", args.m)? },
        "VII" => DuValSpec::VII { m: need("m", args.m)? },
        "VIII" => DuValSpec::VIII { m: need("m", args.m)? },
        "IX" => DuValSpec::IX { m: need("m", args.m)? },
        other => {
            return Err(Failure::parse(format!(
                "unknown group type '{other}' (expected I, II, III, III', IV, V, VI, VII, VIII, IX)"
            )))
        }
    };
    Ok(spec)
}

fn reflection_histogram(group: &FiniteU2Group) -> BTreeMap<u64, usize> {
    let mut histogram = BTreeMap::new();
    for reflection in group.pseudoreflections() {
        *histogram.entry(reflection.order()).or_default() += 1;
    }
    histogram
}

fn group_value(group: &FiniteU2Group, molien: bool) -> Result<(Value, String), Failure> {
    let histogram = reflection_histogram(group);
    let primitive_orders: Vec<u64> = group.primitive_set().iter().map(|(_, o)| *o).collect();
    let mut text = String::new();
    let _ = writeln!(text, "group            : {}", group.label());
    let _ = writeln!(text, "order            : {}", group.order());
    let _ = writeln!(text, "conductor        : {}", group.conductor());
    let census = if histogram.is_empty() {
        "none".to_string()
    } else {
        histogram
            .iter()
            .map(|(order, count)| format!("{count} of order {order}"))
            .collect::<Vec<_>>()
            .join(", ")
    };
    let _ = writeln!(
        text,
        "pseudoreflections: {} ({census})",
        group.pseudoreflections().len()
    );
    let _ = writeln!(text, "primitive classes: {primitive_orders:?}");

    let mut value = json!({
        "label": group.label(),
        "order": group.order(),
        "conductor": group.conductor(),
        "pseudoreflection_count": group.pseudoreflections().len(),
        "pseudoreflection_orders": histogram
            .iter()
            .map(|(order, count)| json!({ "order": order, "count": count }))
            .collect::<Vec<_>>(),
        "primitive_class_orders": primitive_orders,
    });
    if molien {
        let data = molien_real(group).map_err(|e| Failure::internal(e.to_string()))?;
        let _ = writeln!(text, "molien series    : {}", data.series);
        let _ = writeln!(
            text,
            "gamma            : γ0 = {}, γ2 = {}  (1/γ0 = {})",
            data.gamma0,
            data.gamma2,
            group.order()
        );
        let _ = writeln!(
            text,
            "quadratic dim    : {}",
            data.quadratic_dimension
        );
        value["molien"] = json!({
            "series": data.series.to_string(),
            "gamma0": q_str(&data.gamma0),
            "gamma2": q_str(&data.gamma2),
            "quadratic_dimension": data.quadratic_dimension,
        });
    }
    Ok((value, text))
}

fn group(args: &GroupArgs) -> Result<CommandOutput, Failure> {
    let spec = build_spec(args)?;
    let group = duval_group(&spec).map_err(|e| Failure::parse(e.to_string()))?;
    let (value, text) = group_value(&group, args.molien)?;
    Ok(CommandOutput {
        result: value,
        text,
        exit: 0,
    })
}

fn catalog(args: &CatalogArgs) -> Result<CommandOutput, Failure> {
    if args.order == 0 {
        return Err(Failure::parse("order must be at least 1"));
    }
    let groups = enumerate_groups_of_order(args.order, &EnumerationCaps::default())
        .map_err(|e| Failure::parse(e.to_string()))?;
    let mut text = String::new();
    let _ = writeln!(
        text,
        "{} distinct group(s) of order {}",
        groups.len(),
        args.order
    );
    let mut rows = Vec::new();
    for group in &groups {
        let histogram = reflection_histogram(group);
        let census = if histogram.is_empty() {
            "no pseudoreflections".to_string()
        } else {
            histogram
                .iter()
                .map(|(order, count)| format!("{count}x order {order}"))
                .collect::<Vec<_>>()
                .join(", ")
        };
        let _ = writeln!(
            text,
            "  {:<24} conductor {:>3}   {census}",
            group.label(),
            group.conductor()
        );
        rows.push(json!({
            "label": group.label(),
            "order": group.order(),
            "conductor": group.conductor(),
            "pseudoreflection_count": group.pseudoreflections().len(),
        }));
    }
    Ok(CommandOutput {
        result: json!({ "order": args.order, "count": groups.len(), "groups": rows }),
        text,
        exit: 0,
    })
}

// ---------------------------------------------------------------------
// audit
// ---------------------------------------------------------------------

fn contains_alarm(report: &AuditReport) -> bool {
    report.verdict == Verdict::CounterexampleCandidate
        || report.descents.iter().any(contains_alarm)
}

fn strip_certificates(report: &mut AuditReport) {
    for candidate in &mut report.candidates {
        candidate.certificate = None;
        candidate.survivor = None;
    }
    for descent in &mut report.descents {
        strip_certificates(descent);
    }
}

fn audit_text(report: &AuditReport, certificates: bool, text: &mut String, indent: usize) {
    let pad = " ".repeat(indent);
    let _ = writeln!(text, "{pad}weights  : {:?} -> {}", report.input, report.normalized);
    let _ = writeln!(text, "{pad}verdict  : {}", report.verdict);
    if let Some(exclusion) = &report.exclusion {
        let _ = writeln!(text, "{pad}gate     : {} — {}", exclusion.gate, exclusion.reason);
    }
    if let Some(order) = report.dimension_two_order {
        let _ = writeln!(text, "{pad}orbifold : cyclic of order {order}");
    }
    if let Some(gamma) = &report.gamma {
        let _ = writeln!(
            text,
            "{pad}gamma    : γ0 = {}, γ2 = {}  (1/γ0 = {})",
            gamma.gamma0, gamma.gamma2, gamma.gamma0_reciprocal
        );
    }
    for stratum in &report.strata {
        let _ = writeln!(
            text,
            "{pad}stratum  : weights {:?}, isotropy {}, cyclic model of order {}",
            stratum.support, stratum.isotropy_order, stratum.cyclic_order
        );
    }
    if let Some(chain) = &report.reduction {
        let _ = writeln!(text, "{pad}reduction: {}", chain.describe());
    }
    if !report.candidates.is_empty() {
        let mut histogram: BTreeMap<&str, usize> = BTreeMap::new();
        let mut survivors = 0usize;
        for outcome in &report.candidates {
            match &outcome.certificate {
                Some(cert) => *histogram.entry(cert.obstruction.kind()).or_default() += 1,
                None => survivors += 1,
            }
        }
        let summary = histogram
            .iter()
            .map(|(kind, count)| format!("{count} x {kind}"))
            .collect::<Vec<_>>()
            .join(", ");
        let _ = writeln!(
            text,
            "{pad}candidates ({}): {summary}",
            report.candidates.len()
        );
        if survivors > 0 && certificates {
            let _ = writeln!(text, "{pad}  SURVIVORS: {survivors}");
        }
        if certificates {
            for outcome in &report.candidates {
                match &outcome.certificate {
                    Some(cert) => {
                        let _ = writeln!(
                            text,
                            "{pad}  {} (order {}): {}",
                            outcome.label,
                            outcome.order,
                            serde_json::to_string(&cert.obstruction).unwrap_or_default()
                        );
                    }
                    None => {
                        let _ = writeln!(
                            text,
                            "{pad}  {} (order {}): SURVIVED EVERY OBSTRUCTION",
                            outcome.label, outcome.order
                        );
                    }
                }
            }
        }
    }
    for descent in &report.descents {
        let _ = writeln!(text, "{pad}descent:");
        audit_text(descent, certificates, text, indent + 2);
    }
}

fn run_audit(args: &AuditArgs) -> Result<CommandOutput, Failure> {
    let raw = parse_weights(&args.weights)?;
    let mut report = audit(&raw).map_err(|e| Failure::internal(e.to_string()))?;
    let alarm = contains_alarm(&report);
    if !args.certificates {
        strip_certificates(&mut report);
    }
    let mut text = String::new();
    audit_text(&report, args.certificates, &mut text, 0);
    if !args.certificates && !report.candidates.is_empty() {
        let _ = writeln!(text, "(re-run with --certificates for the full exclusion data)");
    }
    Ok(CommandOutput {
        result: serde_json::to_value(&report).map_err(|e| Failure::internal(e.to_string()))?,
        text,
        exit: if alarm { EXIT_ALARM } else { 0 },
    })
}

// ---------------------------------------------------------------------
// scan
// ---------------------------------------------------------------------

fn run_scan(args: &ScanArgs) -> Result<CommandOutput, Failure> {
    if args.n != 3 {
        return Err(Failure::parse(format!(
            "only --n 3 grids are implemented (got {})",
            args.n
        )));
    }
    if args.alpha_max == 0 {
        return Err(Failure::parse("--alpha-max must be at least 1"));
    }
    let options = ScanOptions {
        alpha_max: args.alpha_max,
        ..ScanOptions::default()
    };
    let report = match args.jobs {
        Some(jobs) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs.max(1))
                .build()
                .map_err(|e| Failure::internal(e.to_string()))?;
            pool.install(|| scan(&options))
        }
        None => scan(&options),
    }
    .map_err(|e| Failure::internal(e.to_string()))?;

    let alarm = report
        .summary
        .verdict_counts
        .contains_key("counterexample-candidate");
    let csv = scan_csv(&report);
    let mut text = String::new();
    let mut csv_path = None;
    match &args.csv {
        Some(path) => {
            std::fs::write(path, &csv).map_err(|e| {
                Failure::internal(format!("could not write {}: {e}", path.display()))
            })?;
            csv_path = Some(path.display().to_string());
            let _ = writeln!(
                text,
                "wrote {} rows to {}",
                report.summary.total,
                path.display()
            );
            let _ = writeln!(text, "verdicts:");
            for (verdict, count) in &report.summary.verdict_counts {
                let _ = writeln!(text, "  {count:6}  {verdict}");
            }
            let _ = writeln!(
                text,
                "diophantine-passing vectors: {}",
                report.summary.diophantine_passing
            );
            let _ = writeln!(text, "first obstructions:");
            for (name, count) in &report.summary.first_obstruction_counts {
                let _ = writeln!(text, "  {count:6}  {name}");
            }
        }
        None => {
            // Without a file target the CSV itself is the text output.
            text.push_str(&csv);
        }
    }

    let summary =
        serde_json::to_value(&report.summary).map_err(|e| Failure::internal(e.to_string()))?;
    let rows =
        serde_json::to_value(&report.rows).map_err(|e| Failure::internal(e.to_string()))?;
    Ok(CommandOutput {
        result: json!({
            "alpha_max": args.alpha_max,
            "summary": summary,
            "rows": rows,
            "csv_path": csv_path,
        }),
        text,
        exit: if alarm { EXIT_ALARM } else { 0 },
    })
}

// ---------------------------------------------------------------------
// verify-paper
// ---------------------------------------------------------------------

struct Check {
    name: &'static str,
    passed: bool,
    detail: String,
}

fn check(name: &'static str, body: impl FnOnce() -> Result<String, String>) -> Check {
    match body() {
        Ok(detail) => Check {
            name,
            passed: true,
            detail,
        },
        Err(detail) => Check {
            name,
            passed: false,
            detail,
        },
    }
}

fn expect_eq<T: PartialEq + std::fmt::Display>(label: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{label}: got {got}, want {want}"))
    }
}

fn su2_wrapped(kind: Su2Kind) -> Result<FiniteU2Group, String> {
    let elements = crate::u2_catalog::su2_group(kind).map_err(|e| e.to_string())?;
    FiniteU2Group::from_elements(&kind.to_string(), elements).map_err(|e| e.to_string())
}

fn fixture_checks() -> Vec<Check> {
    vec![
        check("gamma0 of alpha=(1,1,1) is 3/8", || {
            let (wv, _) = normalize(&[-1, 1, 1]);
            let series = hilb_on_rational(&wv).map_err(|e| e.to_string())?;
            let gamma = gamma_from_rational(&series);
            expect_eq("gamma0", q_str(&gamma.gamma0), "3/8".to_string())?;
            Ok(format!("series {series}"))
        }),
        check("gamma0 of (-3,6,12,4) is 1/21 by Laurent extraction", || {
            let (wv, _) = normalize(&[-3, 6, 12, 4]);
            let series = hilb_on_rational(&wv).map_err(|e| e.to_string())?;
            let gamma = gamma_from_rational(&series);
            expect_eq("gamma0", q_str(&gamma.gamma0), "1/21".to_string())?;
            Ok("1/γ0 = 21".to_string())
        }),
        check("on-shell series of (-6,10,15) starts 1, 0, 2", || {
            let (wv, _) = normalize(&[-6, 10, 15]);
            let series = hilb_on_rational(&wv).map_err(|e| e.to_string())?;
            let head = series.taylor_coefficients(2).map_err(|e| e.to_string())?;
            let got: Vec<String> = (0..=2)
                .map(|k| head.get(k).map(q_str).unwrap_or_default())
                .collect();
            expect_eq("head", got.join(","), "1,0,2".to_string())?;
            Ok("coefficients 1, 0, 2".to_string())
        }),
        check("Type III (m=1, ell=2..5) Molien closed forms", || {
            for ell in 2u64..=5 {
                let group =
                    duval_group(&DuValSpec::III { m: 1, ell }).map_err(|e| e.to_string())?;
                let data = molien_real(&group).map_err(|e| e.to_string())?;
                let two_ell = (2 * ell) as usize;
                let mut numerator = vec![0i64; 2 * two_ell + 3];
                numerator[0] = 1;
                numerator[two_ell] = 2 * ell as i64 - 1;
                numerator[two_ell + 2] = -(2 * ell as i64 - 1);
                numerator[2 * two_ell + 2] = -1;
                let expected = RationalFunction::from_cyclotomic_denominator(
                    IntPoly::from_i64s(&numerator),
                    &[(2, 3), (two_ell, 2)],
                )
                .map_err(|e| e.to_string())?;
                if data.series != expected {
                    return Err(format!("III(1,{ell}): got {}", data.series));
                }
            }
            Ok("numerator 1 + (2ℓ−1)x^2ℓ − (2ℓ−1)x^(2ℓ+2) − x^(4ℓ+2) over (1−x²)³(1−x^2ℓ)²".into())
        }),
        check("Type III' (m=1; ell=3,5,7) degree-2 coefficient is 3", || {
            for ell in [3u64, 5, 7] {
                let group = duval_group(&DuValSpec::IIIPrime { m: 1, ell })
                    .map_err(|e| e.to_string())?;
                let data = molien_real(&group).map_err(|e| e.to_string())?;
                expect_eq(&format!("III'(1,{ell})"), data.quadratic_dimension, 3)?;
            }
            Ok("the printed closed form would give a different quadratic term".into())
        }),
        check("Type II (m=2,4): gamma = (1/4m, 1/8m), two order-2 reflections", || {
            for m in [2u64, 4] {
                let group = duval_group(&DuValSpec::II { m }).map_err(|e| e.to_string())?;
                let data = molien_real(&group).map_err(|e| e.to_string())?;
                expect_eq(&format!("II({m}) γ0"), data.gamma0, Q::new((1).into(), (4 * m).into()))?;
                expect_eq(&format!("II({m}) γ2"), data.gamma2, Q::new((1).into(), (8 * m).into()))?;
                expect_eq(&format!("II({m}) reflections"), group.pseudoreflections().len(), 2)?;
            }
            Ok("both parameters verified".into())
        }),
        check("Type III (m=2,4; ell=1) is reflection-free", || {
            for m in [2u64, 4] {
                let group =
                    duval_group(&DuValSpec::III { m, ell: 1 }).map_err(|e| e.to_string())?;
                expect_eq(&format!("III({m},1)"), group.pseudoreflections().len(), 0)?;
            }
            Ok("no pseudoreflections at either parameter".into())
        }),
        check("Type III' (m=1,3,5; ell=1): gamma = (1/2m, 1/8m)", || {
            for m in [1u64, 3, 5] {
                let group = duval_group(&DuValSpec::IIIPrime { m, ell: 1 })
                    .map_err(|e| e.to_string())?;
                let data = molien_real(&group).map_err(|e| e.to_string())?;
                expect_eq(&format!("III'({m},1) γ0"), data.gamma0, Q::new((1).into(), (2 * m).into()))?;
                expect_eq(&format!("III'({m},1) γ2"), data.gamma2, Q::new((1).into(), (8 * m).into()))?;
            }
            Ok("all three parameters verified".into())
        }),
        check("Type IV (m=1,3; ell=1): gamma = (1/8m, 1/8m), four order-2 reflections", || {
            for m in [1u64, 3] {
                let group =
                    duval_group(&DuValSpec::IV { m, ell: 1 }).map_err(|e| e.to_string())?;
                let data = molien_real(&group).map_err(|e| e.to_string())?;
                expect_eq(&format!("IV({m},1) γ0"), data.gamma0, Q::new((1).into(), (8 * m).into()))?;
                expect_eq(&format!("IV({m},1) γ2"), data.gamma2, Q::new((1).into(), (8 * m).into()))?;
                expect_eq(&format!("IV({m},1) reflections"), group.pseudoreflections().len(), 4)?;
                for reflection in group.pseudoreflections() {
                    expect_eq(&format!("IV({m},1) reflection order"), reflection.order(), 2)?;
                }
            }
            Ok("both parameters verified".into())
        }),
        check("quadratic invariant dimensions across the SU(2) tower", || {
            let scalar_pair = su2_wrapped(Su2Kind::Cyclic(2))?;
            expect_eq(
                "scalar pair",
                quadratic_invariant_dimension(&scalar_pair).map_err(|e| e.to_string())?,
                10,
            )?;
            for m in 3..=8u64 {
                let group = su2_wrapped(Su2Kind::Cyclic(m))?;
                expect_eq(
                    &format!("cyclic({m})"),
                    quadratic_invariant_dimension(&group).map_err(|e| e.to_string())?,
                    4,
                )?;
            }
            let d1 = su2_wrapped(Su2Kind::BinaryDihedral(1))?;
            expect_eq(
                "binary dihedral(1)",
                quadratic_invariant_dimension(&d1).map_err(|e| e.to_string())?,
                4,
            )?;
            for m in 2..=6u64 {
                let group = su2_wrapped(Su2Kind::BinaryDihedral(m))?;
                expect_eq(
                    &format!("binary dihedral({m})"),
                    quadratic_invariant_dimension(&group).map_err(|e| e.to_string())?,
                    1,
                )?;
            }
            for (m, r) in [(3u64, 3u64), (3, 4), (4, 3), (5, 5)] {
                let generators = [
                    UnitaryMatrix2::su2_diag(m, 1),
                    UnitaryMatrix2::scalar_root(r, 1),
                ];
                let group = FiniteU2Group::from_generators(
                    &format!("join({m},{r})"),
                    &generators,
                    None,
                )
                .map_err(|e| e.to_string())?;
                expect_eq(
                    &format!("join({m},{r})"),
                    quadratic_invariant_dimension(&group).map_err(|e| e.to_string())?,
                    2,
                )?;
            }
            Ok("10 / 4 / 4 / 1 / 2 pattern verified".into())
        }),
        check("descent of (-3,6,12,4) blocks at (-1,2,4)", || {
            let (wv, _) = normalize(&[-3, 6, 12, 4]);
            let report = predicates(&wv).map_err(|e| e.to_string())?;
            if !report.codim1_chain.excludes() {
                return Err("chain predicate unexpectedly holds".into());
            }
            let chain = crate::auditor::reduce_to_n3(&wv);
            match chain.terminal {
                crate::auditor::ReductionTerminal::Blocked { at, .. } => {
                    expect_eq("blocked at", format!("{at}"), "(-1,2,4)".to_string())?;
                }
                other => return Err(format!("expected a blocked chain, got {other:?}")),
            }
            Ok("one valid step, then no codimension-one stratum".into())
        }),
    ]
}

fn verify_paper(args: &VerifyPaperArgs) -> Result<CommandOutput, Failure> {
    let mut checks = fixture_checks();
    let arguments = verify_paper_arguments(args.bound);
    for argument in &arguments.checks {
        checks.push(Check {
            name: argument.name,
            passed: argument.passed,
            detail: format!("{} ({} cases)", argument.details, argument.cases_checked),
        });
    }

    let all_passed = checks.iter().all(|c| c.passed);
    let mut text = String::new();
    let width = checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    for c in &checks {
        let _ = writeln!(
            text,
            "{:<width$} : {}",
            c.name,
            if c.passed { "PASS" } else { "FAIL" },
        );
        if !c.passed {
            let _ = writeln!(text, "{:<width$}   {}", "", c.detail);
        }
    }
    let _ = writeln!(
        text,
        "{} of {} checks passed (finite arguments searched to bound {})",
        checks.iter().filter(|c| c.passed).count(),
        checks.len(),
        args.bound
    );

    let rows: Vec<Value> = checks
        .iter()
        .map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail }))
        .collect();
    Ok(CommandOutput {
        result: json!({ "bound": args.bound, "all_passed": all_passed, "checks": rows }),
        text,
        exit: if all_passed { 0 } else { EXIT_VERIFY_FAILED },
    })
}
