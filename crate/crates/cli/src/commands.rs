use std::path::Path;

use antiassoc::audit::{audit_fixture, bundled_fixtures, parse_fixture, FixtureAudit};
use antiassoc::classify2d::{enumerate_2d_antiassociative, quotient_by_isomorphism, verify_paper_classification};
use antiassoc::dendriform::check_q_dendriform;
use antiassoc::forms::FormKind;
use antiassoc::io::{
    algebra_json, bimodule_json, dendriform_json, double_json, parse_algebra, parse_bimodule, parse_dendriform,
    parse_form, parse_matched_pair, parse_o_operator, parse_rota_baxter, to_canonical_string, Document,
};
use antiassoc::notation::{basis_labels, double_labels, product_table};
use antiassoc::operators::{
    check_omega_compatibility, check_t_homomorphism, compatible_dendriform_from_o_operator_unchecked,
    dendriform_from_symplectic_unchecked, induced_dendriform_on_module_unchecked,
};
use antiassoc::{
    associated_algebra, bowtie, build_quadratic_double, build_symplectic_double, check_bimodule,
    check_invariant_symmetric, check_matched_pair, check_o_operator, check_rota_baxter, check_symplectic,
    dual_bimodule, int, semidirect_product, CheckReport, DendriformStructure, Error, MatchedPairData, Result,
    StructureAlgebra,
};
use serde_json::{json, Value};

use crate::render;
use crate::{Build, Grid, Options, Verify};

pub struct Check {
    pub name: String,
    pub report: CheckReport,
    /// Labels for residual coordinates, when residuals live in a known space.
    pub labels: Vec<String>,
}

#[derive(Default)]
pub struct Outcome {
    pub text: Vec<String>,
    pub checks: Vec<Check>,
    /// Extra JSON fields next to `checks` and `passed`.
    pub json: serde_json::Map<String, Value>,
    /// The built structure, written by `-o`.
    pub artifact: Option<Value>,
    /// Verdict for commands whose result is not a list of checks.
    pub passed: Option<bool>,
    /// Set when a builder stopped on a failed precondition.
    pub refused: Option<String>,
}

impl Outcome {
    fn check(&mut self, name: &str, report: CheckReport, labels: Vec<String>) {
        self.checks.push(Check { name: name.to_string(), report, labels });
    }

    fn passed(&self) -> bool {
        self.passed.unwrap_or(true) && self.checks.iter().all(|c| c.report.passed())
    }

    /// Print the report and write the artifact; returns the overall verdict.
    pub fn emit(self, opts: &Options) -> Result<bool> {
        let passed = self.passed();
        if let (Some(path), None) = (&opts.output, &self.refused) {
            let artifact = self
                .artifact
                .as_ref()
                .ok_or_else(|| Error::InvalidParameter("-o is only meaningful for build commands".into()))?;
            std::fs::write(path, to_canonical_string(artifact))
                .map_err(|e| Error::Parse(format!("{}: cannot write: {e}", path.display())))?;
        }
        if opts.json {
            let mut out = self.json;
            if !self.checks.is_empty() {
                let checks: Vec<Value> = self
                    .checks
                    .iter()
                    .map(|c| json!({"check": c.name, "report": antiassoc::io::report_json(&c.report)}))
                    .collect();
                out.insert("checks".into(), Value::Array(checks));
            }
            if let Some(a) = self.artifact {
                out.insert("result".into(), a);
            }
            if let Some(r) = &self.refused {
                out.insert("refused".into(), json!(r));
            }
            out.insert("passed".into(), json!(passed));
            print!("{}", to_canonical_string(&Value::Object(out)));
        } else {
            for line in &self.text {
                println!("{line}");
            }
            for c in &self.checks {
                for line in render::check(&c.name, &c.report, &c.labels) {
                    println!("{line}");
                }
            }
            if let Some(r) = &self.refused {
                println!("refusing to build: {r} fails (use --force to build anyway)");
            }
        }
        Ok(passed)
    }
}

fn read(path: &Path) -> Result<Document> {
    Document::read(path)
}

fn with_q(a: StructureAlgebra, opts: &Options) -> Result<StructureAlgebra> {
    match &opts.q {
        Some(q) => a.with_q(q.clone()),
        None => Ok(a),
    }
}

fn dendriform_with_q(d: DendriformStructure, opts: &Options) -> Result<DendriformStructure> {
    match &opts.q {
        Some(q) => DendriformStructure::new(q.clone(), d.prec_tensor().clone(), d.succ_tensor().clone()),
        None => Ok(d),
    }
}

fn load_algebra(path: &Path, opts: &Options) -> Result<StructureAlgebra> {
    with_q(parse_algebra(&read(path)?)?, opts)
}

fn load_dendriform(path: &Path, opts: &Options) -> Result<DendriformStructure> {
    dendriform_with_q(parse_dendriform(&read(path)?)?, opts)
}

fn describe(out: &mut Outcome, a: &StructureAlgebra, labels: &[String]) {
    out.text.push(format!("dim {}, q = {}", a.dim(), a.q()));
    out.text.push(format!("products: {}", render::table(&product_table(a, labels))));
}

fn describe_dendriform(out: &mut Outcome, d: &DendriformStructure) {
    let labels = basis_labels(d.dim());
    out.text.push(format!("dim {}, q = {}", d.dim(), d.q()));
    out.text.push(format!("≺: {}", render::table(&product_table(&d.prec_algebra(), &labels)).replace('·', "≺")));
    out.text.push(format!("≻: {}", render::table(&product_table(&d.succ_algebra(), &labels)).replace('·', "≻")));
}

pub fn verify(v: &Verify, opts: &Options) -> Result<Outcome> {
    let mut out = Outcome::default();
    match v {
        Verify::Algebra { file } => {
            let a = load_algebra(file, opts)?;
            let labels = basis_labels(a.dim());
            describe(&mut out, &a, &labels);
            out.json.insert("algebra".into(), algebra_json(&a));
            out.json.insert("fingerprint".into(), json!(a.fingerprint()));
            out.check("q-associative", a.check_q_associative(), labels);
        }
        Verify::Bimodule { file } => {
            let (a, m) = parse_bimodule(&read(file)?)?;
            let a = with_q(a, opts)?;
            out.text.push(format!("algebra dim {}, module dim {}, q = {}", a.dim(), m.module_dim(), a.q()));
            out.check("bimodule", check_bimodule(&a, &m)?, Vec::new());
        }
        Verify::MatchedPair { file } => {
            let p = parse_matched_pair(&read(file)?)?;
            let p = match &opts.q {
                Some(_) => MatchedPairData::new(with_q(p.a, opts)?, with_q(p.b, opts)?, p.l_a, p.r_a, p.l_b, p.r_b)?,
                None => p,
            };
            out.text.push(format!("dims {} and {}, q = {}", p.a.dim(), p.b.dim(), p.a.q()));
            let labels = if p.a.dim() == p.b.dim() { double_labels(p.a.dim()) } else { Vec::new() };
            out.check("matched-pair", check_matched_pair(&p), labels);
        }
        Verify::Dendriform { file } => {
            let d = load_dendriform(file, opts)?;
            describe_dendriform(&mut out, &d);
            let labels = basis_labels(d.dim());
            out.check("q-dendriform", check_q_dendriform(&d), labels.clone());
            out.check("associated q-associative", associated_algebra(&d).check_q_associative(), labels);
        }
        Verify::Form { algebra, form } => {
            let a = load_algebra(algebra, opts)?;
            let w = parse_form(&read(form)?)?;
            let labels = basis_labels(a.dim());
            match w.kind() {
                FormKind::Symmetric => out.check("invariant", check_invariant_symmetric(&a, &w)?, labels),
                FormKind::Antisymmetric => out.check("symplectic", check_symplectic(&a, &w)?, labels),
                FormKind::General => {
                    return Err(Error::InvalidParameter("form kind must be symmetric or antisymmetric".into()))
                }
            }
        }
        Verify::OOperator { file } => {
            let (a, m, t) = parse_o_operator(&read(file)?)?;
            let a = with_q(a, opts)?;
            out.text.push(format!("T: V ({}) → A ({})", t.src_dim(), t.dst_dim()));
            out.check("o-operator", check_o_operator(&a, &m, &t)?, basis_labels(a.dim()));
        }
        Verify::RotaBaxter { file } => {
            let (a, tau) = parse_rota_baxter(&read(file)?)?;
            let a = with_q(a, opts)?;
            out.check("rota-baxter", check_rota_baxter(&a, &tau)?, basis_labels(a.dim()));
        }
    }
    Ok(out)
}

/// Failed preconditions stop a construction unless `--force` is given.
fn precondition(out: &mut Outcome, opts: &Options, name: &str, report: CheckReport, labels: Vec<String>) -> bool {
    let ok = report.passed();
    out.check(name, report, labels);
    if !ok && !opts.force {
        out.refused = Some(name.to_string());
    }
    ok || opts.force
}

pub fn build(b: &Build, opts: &Options) -> Result<Outcome> {
    let mut out = Outcome::default();
    match b {
        Build::Semidirect { file } => {
            let (a, m) = parse_bimodule(&read(file)?)?;
            let a = with_q(a, opts)?;
            out.check("bimodule", check_bimodule(&a, &m)?, Vec::new());
            let s = semidirect_product(&a, &m)?;
            let labels = basis_labels(s.dim());
            describe(&mut out, &s, &labels);
            out.check("q-associative", s.check_q_associative(), labels);
            out.artifact = Some(algebra_json(&s));
        }
        Build::Bowtie { file } => {
            let p = parse_matched_pair(&read(file)?)?;
            let labels = basis_labels(p.a.dim() + p.b.dim());
            out.check("matched-pair", check_matched_pair(&p), Vec::new());
            let s = bowtie(&p);
            describe(&mut out, &s, &labels);
            out.check("q-associative", s.check_q_associative(), labels);
            out.artifact = Some(algebra_json(&s));
        }
        Build::DualBimodule { file } => {
            let (a, m) = parse_bimodule(&read(file)?)?;
            let a = with_q(a, opts)?;
            if precondition(&mut out, opts, "bimodule", check_bimodule(&a, &m)?, Vec::new()) {
                let d = dual_bimodule(&a, &m);
                out.check("dual bimodule", check_bimodule(&a, &d)?, Vec::new());
                out.artifact = Some(bimodule_json(&a, &d));
            }
        }
        Build::Anticommutator { file } => {
            let a = load_algebra(file, opts)?;
            let labels = basis_labels(a.dim());
            let s = a.anticommutator_algebra();
            describe(&mut out, &s, &labels);
            out.check("mock-Lie", s.check_mock_lie(), labels);
            out.artifact = Some(algebra_json(&s));
        }
        Build::Associated { file } => {
            let d = load_dendriform(file, opts)?;
            let labels = basis_labels(d.dim());
            out.check("q-dendriform", check_q_dendriform(&d), labels.clone());
            let s = associated_algebra(&d);
            describe(&mut out, &s, &labels);
            out.check("q-associative", s.check_q_associative(), labels);
            out.artifact = Some(algebra_json(&s));
        }
        Build::DoubleQuadratic { a, astar } => {
            let d = build_quadratic_double(&load_algebra(a, opts)?, &load_algebra(astar, opts)?)?;
            double_outcome(&mut out, d);
        }
        Build::DoubleSymplectic { a, astar } => {
            let d = build_symplectic_double(&load_dendriform(a, opts)?, &load_dendriform(astar, opts)?)?;
            double_outcome(&mut out, d);
        }
        Build::DendriformFromOmega { algebra, form } => {
            let a = load_algebra(algebra, opts)?;
            let w = parse_form(&read(form)?)?;
            let labels = basis_labels(a.dim());
            if precondition(&mut out, opts, "symplectic", check_symplectic(&a, &w)?, labels.clone()) {
                let d = dendriform_from_symplectic_unchecked(&a, &w)?;
                describe_dendriform(&mut out, &d);
                out.check("q-dendriform", check_q_dendriform(&d), labels.clone());
                out.check("ω-compatibility", check_omega_compatibility(&a, &w, &d)?, labels);
                out.artifact = Some(dendriform_json(&d));
            }
        }
        Build::DendriformFromOOperator { file, compatible } => {
            let (a, m, t) = parse_o_operator(&read(file)?)?;
            let a = with_q(a, opts)?;
            let labels = basis_labels(a.dim());
            if precondition(&mut out, opts, "o-operator", check_o_operator(&a, &m, &t)?, labels.clone()) {
                let d = if *compatible {
                    compatible_dendriform_from_o_operator_unchecked(&a, &m, &t)?
                } else {
                    induced_dendriform_on_module_unchecked(&a, &m, &t)?
                };
                describe_dendriform(&mut out, &d);
                out.check("q-dendriform", check_q_dendriform(&d), basis_labels(d.dim()));
                if *compatible {
                    let mut r = CheckReport::new("algebras");
                    r.require("associated equals A", associated_algebra(&d) == a);
                    out.check("compatibility", r, Vec::new());
                } else {
                    out.check("T-homomorphism", check_t_homomorphism(&a, &d, &t)?, labels);
                }
                out.artifact = Some(dendriform_json(&d));
            }
        }
    }
    Ok(out)
}

fn double_outcome(out: &mut Outcome, d: antiassoc::DoubleConstruction) {
    let labels = double_labels(d.half_dim);
    describe(out, &d.total, &labels);
    out.artifact = Some(double_json(&d));
    out.check(&format!("{} double", render::kind(d.kind)), d.report, labels);
}

pub fn classify_dim2(grid: Option<&Grid>) -> Result<Outcome> {
    let grid = grid.map_or_else(|| vec![int(-1), int(0), int(1)], |g| g.0.clone());
    let labels = basis_labels(2);
    let solutions = enumerate_2d_antiassociative(&grid);
    let (classes, undecided) = quotient_by_isomorphism(&solutions);
    let audit = verify_paper_classification();

    let mut out = Outcome { passed: Some(true), ..Outcome::default() };
    out.text.push(format!("grid: {}", render::list(&grid)));
    out.text.push(format!("solutions: {}", solutions.len()));
    for (n, a) in solutions.iter().enumerate() {
        out.text.push(format!("  {:>3}. {}", n + 1, render::table(&product_table(a, &labels))));
    }
    out.text.push(format!("isomorphism classes: {} ({} undecided comparisons)", classes.len(), undecided));
    for c in &classes {
        out.text.push(format!(
            "  {}  [{} members; {}]",
            render::table(&c.representative),
            c.members,
            render::fingerprint(&c.fingerprint)
        ));
    }
    out.text.extend(render::classification_audit(&audit));

    let sol: Vec<Value> = solutions
        .iter()
        .map(|a| json!({"products": product_table(a, &labels), "fingerprint": a.fingerprint(), "c": algebra_json(a)["c"]}))
        .collect();
    out.json.insert("grid".into(), json!(grid));
    out.json.insert("solutions".into(), Value::Array(sol));
    out.json.insert("classes".into(), json!(classes));
    out.json.insert("undecided_comparisons".into(), json!(undecided));
    out.json.insert("audit".into(), json!(audit));
    Ok(out)
}

/// Fixture documents from `ANTIASSOC_FIXTURES` (every `*.json`, by name) or
/// the bundled set.
fn fixture_documents() -> Result<Vec<Document>> {
    let Some(dir) = std::env::var_os("ANTIASSOC_FIXTURES") else {
        return Ok(bundled_fixtures().into_iter().map(|(n, t)| Document::new(n, t)).collect());
    };
    let dir = Path::new(&dir);
    let entries = std::fs::read_dir(dir).map_err(|e| Error::Parse(format!("{}: cannot read: {e}", dir.display())))?;
    let mut paths: Vec<_> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    paths.iter().map(|p| Document::read(p)).collect()
}

pub fn paper_fixtures() -> Result<Outcome> {
    let audits: Vec<FixtureAudit> = fixture_documents()?
        .iter()
        .map(|doc| parse_fixture(doc).and_then(|f| audit_fixture(&f)))
        .collect::<Result<_>>()?;
    let mut out = Outcome { passed: Some(audits.iter().all(|a| a.passed)), ..Outcome::default() };
    for a in &audits {
        out.text.extend(render::fixture_audit(a));
    }
    out.json.insert("fixtures".into(), json!(audits));
    Ok(out)
}
