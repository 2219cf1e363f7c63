//! Aligned text output.

use antiassoc::audit::FixtureAudit;
use antiassoc::classify2d::{describe_witness, ClassificationAudit, IsoVerdict};
use antiassoc::notation::{basis_labels, format_combination};
use antiassoc::{CheckReport, DoubleKind, Fingerprint, Rational, Violation};

/// At most this many violations are listed per check in text mode.
const MAX_LISTED: usize = 40;

pub fn list(xs: &[Rational]) -> String {
    xs.iter().map(Rational::to_string).collect::<Vec<_>>().join(", ")
}

pub fn table(products: &[String]) -> String {
    if products.is_empty() {
        "all products vanish".into()
    } else {
        products.join(", ")
    }
}

pub fn kind(k: DoubleKind) -> &'static str {
    match k {
        DoubleKind::Quadratic => "quadratic",
        DoubleKind::Symplectic => "symplectic",
    }
}

pub fn fingerprint(f: &Fingerprint) -> String {
    format!(
        "dim A² {}, left ann {}, right ann {}, {}",
        f.dim_square,
        f.dim_left_ann,
        f.dim_right_ann,
        if f.commutative { "commutative" } else { "noncommutative" }
    )
}

fn residual(v: &Violation, labels: &[String]) -> String {
    if v.residual.len() == labels.len() {
        format_combination(&v.residual, labels)
    } else {
        format!("[{}]", list(&v.residual))
    }
}

fn violation(v: &Violation, labels: &[String]) -> String {
    if v.indices.is_empty() && v.residual.is_empty() {
        return format!("  {}", v.identity);
    }
    let idx: Vec<String> = v.indices.iter().map(usize::to_string).collect();
    format!("  {} ({}): residual {}", v.identity, idx.join(","), residual(v, labels))
}

/// `name: pass (8/8 triples)` followed by one line per violation.
pub fn check(name: &str, report: &CheckReport, labels: &[String]) -> Vec<String> {
    let mut out = vec![format!("{name}: {}", report.summary())];
    let vs = report.violations();
    out.extend(vs.iter().take(MAX_LISTED).map(|v| violation(v, labels)));
    if vs.len() > MAX_LISTED {
        out.push(format!("  ... {} more", vs.len() - MAX_LISTED));
    }
    out
}

pub fn classification_audit(a: &ClassificationAudit) -> Vec<String> {
    let labels = basis_labels(2);
    let width = a.listed.iter().map(|c| c.label.chars().count()).max().unwrap_or(0);
    let mut out = vec!["listed classes:".to_string()];
    for c in &a.listed {
        let pad = width - c.label.chars().count();
        out.push(format!("  {}{}  antiassociative: {}", c.label, " ".repeat(pad), c.summary));
        out.extend(c.violations.iter().map(|v| format!("  {}", violation(v, &labels))));
    }
    out.push("pairwise:".into());
    for p in &a.pairwise {
        let verdict = match &p.result {
            IsoVerdict::Yes { witness } => format!("isomorphic via {}", describe_witness(witness)),
            IsoVerdict::No { differing } => format!("not isomorphic ({} differ)", differing.join(", ")),
            IsoVerdict::Unknown => "undecided".to_string(),
        };
        out.push(format!("  {} vs {}: {verdict}", p.first, p.second));
    }
    out.push(format!("enumeration over {{{}}}: {} solutions, {} classes", list(&a.grid), a.solutions, a.classes.len()));
    out.push("discrepancies:".into());
    out.extend(a.discrepancies.iter().map(|d| format!("  - {d}")));
    out
}

pub fn fixture_audit(a: &FixtureAudit) -> Vec<String> {
    let mut out = vec![format!("{} ({} double): {}", a.name, kind(a.construction), a.summary)];
    let width = a.conditions.iter().map(|c| c.condition.len()).max().unwrap_or(0);
    for c in &a.conditions {
        let verdict = if c.passed { "pass".to_string() } else { format!("FAIL ({} violations)", c.violations) };
        out.push(format!("  {:<width$}  {verdict}", c.condition));
    }
    out.push(format!("  products: {}", table(&a.products)));
    if a.diff.is_empty() {
        out.push("  displayed lines: all match".into());
    } else {
        out.push(format!("  displayed lines: {} differ", a.diff.len()));
        let lhs: Vec<String> = a.diff.iter().map(|d| format!("({})∗({})", d.left, d.right)).collect();
        let w = lhs.iter().map(|s| s.chars().count()).max().unwrap_or(0);
        for (d, l) in a.diff.iter().zip(&lhs) {
            let pad = w - l.chars().count();
            out.push(format!("    {l}{}  displayed {}  recomputed {}", " ".repeat(pad), d.displayed, d.recomputed));
        }
    }
    out.push(String::new());
    out
}
