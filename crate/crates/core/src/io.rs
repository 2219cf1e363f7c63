//! JSON documents for algebras, bimodules, matched pairs, dendriform
//! structures, forms and operators, plus canonical JSON output.
//!
//! Parse errors name the document, the byte offset and the offending token.
//! Nested algebra fields may be inline objects or a path string resolved
//! relative to the containing file.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::Deserialize;
use serde_json::value::RawValue;
use serde_json::{json, Value};

use crate::algebra::StructureAlgebra;
use crate::dendriform::DendriformStructure;
use crate::doubles::DoubleConstruction;
use crate::error::{Error, Result};
use crate::forms::{BilinearForm, FormKind};
use crate::linalg::{Matrix, Tensor3};
use crate::matched_pairs::MatchedPairData;
use crate::notation::{double_labels, product_table};
use crate::operators::LinearMap;
use crate::rational::Rational;
use crate::report::CheckReport;
use crate::representations::Bimodule;

/// Source text plus the name used in error messages.
#[derive(Clone, Debug)]
pub struct Document {
    name: String,
    text: String,
    dir: Option<PathBuf>,
}

impl Document {
    pub fn new(name: impl Into<String>, text: impl Into<String>) -> Self {
        Document { name: name.into(), text: text.into(), dir: None }
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text =
            std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: cannot read: {e}", path.display())))?;
        Ok(Document { name: path.display().to_string(), text, dir: path.parent().map(Path::to_path_buf) })
    }

    /// Resolve relative file references against `dir`.
    pub fn with_dir(mut self, dir: impl Into<PathBuf>) -> Self {
        self.dir = Some(dir.into());
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    fn offset_of(&self, slice: &str) -> usize {
        let base = self.text.as_ptr() as usize;
        let p = slice.as_ptr() as usize;
        if p >= base && p <= base + self.text.len() {
            p - base
        } else {
            0
        }
    }

    fn error_at(&self, offset: usize, msg: impl std::fmt::Display) -> Error {
        let offset = offset.min(self.text.len());
        Error::Parse(format!("{}: byte {offset}: {msg} (at `{}`)", self.name, token_at(&self.text, offset)))
    }

    /// Error attached to the start of `slice`.
    pub(crate) fn error_in(&self, slice: &str, msg: impl std::fmt::Display) -> Error {
        self.error_at(self.offset_of(slice), msg)
    }

    pub(crate) fn parse<'a, T: Deserialize<'a>>(&self, slice: &'a str) -> Result<T> {
        serde_json::from_str(slice).map_err(|e| {
            let local = byte_offset(slice, e.line(), e.column());
            let msg = e.to_string();
            // serde_json appends "at line L column C"; the byte offset replaces it
            let msg = msg.split(" at line ").next().unwrap_or(&msg).to_string();
            self.error_at(self.offset_of(slice) + token_start(slice, local), msg)
        })
    }
}

/// serde_json reports 1-based lines and byte columns.
fn byte_offset(text: &str, line: usize, column: usize) -> usize {
    if line == 0 {
        return text.len();
    }
    let start: usize = text.split_inclusive('\n').take(line - 1).map(str::len).sum();
    (start + column.saturating_sub(1)).min(text.len())
}

fn is_delim(c: char) -> bool {
    c.is_whitespace() || matches!(c, ',' | ':' | '[' | ']' | '{' | '}')
}

/// Byte positions of unescaped `"` in `text`.
fn quote_positions(text: &str) -> Vec<usize> {
    let mut out = Vec::new();
    let mut escaped = false;
    for (i, b) in text.bytes().enumerate() {
        if escaped {
            escaped = false;
            continue;
        }
        match b {
            b'\\' => escaped = true,
            b'"' => out.push(i),
            _ => {}
        }
    }
    out
}

/// Errors are reported at or just past the bad token; walk back to its start.
fn token_start(text: &str, offset: usize) -> usize {
    let mut end = offset.min(text.len());
    while !text.is_char_boundary(end) {
        end -= 1;
    }
    let quotes: Vec<usize> = quote_positions(text).into_iter().filter(|&q| q < end).collect();
    if quotes.len() % 2 == 1 {
        // inside a string or on its closing quote
        return quotes[quotes.len() - 1];
    }
    if end > 0 && text.as_bytes()[end - 1] == b'"' {
        return quotes[quotes.len() - 2];
    }
    let mut start = end;
    while start > 0 {
        let c = text[..start].chars().next_back().unwrap();
        if is_delim(c) || c == '"' {
            break;
        }
        start -= c.len_utf8();
    }
    start
}

fn token_at(text: &str, offset: usize) -> String {
    let rest = &text[offset..];
    if rest.is_empty() {
        return "end of input".into();
    }
    let token = if let Some(body) = rest.strip_prefix('"') {
        match body.find('"') {
            Some(end) => &rest[..end + 2],
            None => rest,
        }
    } else {
        let end = rest.char_indices().find(|&(i, c)| i > 0 && is_delim(c)).map_or(rest.len(), |(i, _)| i);
        &rest[..end.max(rest.chars().next().unwrap().len_utf8())]
    };
    token.chars().take(40).collect()
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProduct {
    i: usize,
    j: usize,
    out: BTreeMap<String, Rational>,
}

type Nested = Vec<Vec<Vec<Rational>>>;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAlgebra<'a> {
    dim: Option<usize>,
    q: Option<Rational>,
    #[serde(borrow)]
    c: Option<&'a RawValue>,
    #[serde(borrow)]
    products: Option<&'a RawValue>,
}

/// Build outputs carry the algebra under `total` (doubles) or `result`.
#[derive(Deserialize)]
struct RawWrapper<'a> {
    #[serde(borrow)]
    total: Option<&'a RawValue>,
    #[serde(borrow)]
    result: Option<&'a RawValue>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBimodule<'a> {
    #[serde(borrow)]
    algebra: Option<&'a RawValue>,
    module_dim: usize,
    l: Vec<Vec<Vec<Rational>>>,
    r: Vec<Vec<Vec<Rational>>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMatchedPair<'a> {
    #[serde(borrow)]
    a: &'a RawValue,
    #[serde(borrow)]
    b: &'a RawValue,
    l_a: Vec<Vec<Vec<Rational>>>,
    r_a: Vec<Vec<Vec<Rational>>>,
    l_b: Vec<Vec<Vec<Rational>>>,
    r_b: Vec<Vec<Vec<Rational>>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDendriform<'a> {
    dim: Option<usize>,
    q: Option<Rational>,
    #[serde(borrow)]
    prec: &'a RawValue,
    #[serde(borrow)]
    succ: &'a RawValue,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawForm {
    dim: Option<usize>,
    kind: FormKind,
    gram: Vec<Vec<Rational>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOOperator<'a> {
    #[serde(borrow)]
    algebra: &'a RawValue,
    #[serde(borrow)]
    bimodule: &'a RawValue,
    #[serde(rename = "T")]
    t: &'a RawValue,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRotaBaxter<'a> {
    #[serde(borrow)]
    algebra: &'a RawValue,
    #[serde(alias = "T")]
    tau: &'a RawValue,
}

fn minus_one() -> Rational {
    -Rational::one()
}

fn matrix(doc: &Document, slice: &str) -> Result<Matrix> {
    let rows: Vec<Vec<Rational>> = doc.parse(slice)?;
    if rows.is_empty() {
        return Err(doc.error_in(slice, "empty matrix"));
    }
    Matrix::from_rows(rows).map_err(|e| doc.error_in(slice, e))
}

fn matrices(doc: &Document, at: &str, raw: Vec<Vec<Vec<Rational>>>) -> Result<Vec<Matrix>> {
    raw.into_iter()
        .map(|rows| {
            if rows.is_empty() {
                // a 0x0 action is only meaningful for a 0-dimensional module
                return Ok(Matrix::zeros(0, 0));
            }
            Matrix::from_rows(rows).map_err(|e| doc.error_in(at, e))
        })
        .collect()
}

/// A tensor given either densely as `[[[..]]]` or as a product list.
fn tensor(doc: &Document, slice: &str, dim: Option<usize>) -> Result<Tensor3> {
    let first = slice.trim_start().strip_prefix('[').map(str::trim_start).and_then(|s| s.chars().next());
    match first {
        Some('{') => {
            let products: Vec<RawProduct> = doc.parse(slice)?;
            sparse_tensor(doc, slice, dim, &products)
        }
        Some(']') => match dim {
            Some(n) => Ok(Tensor3::cube(n)),
            None => Err(doc.error_in(slice, "empty product list needs an explicit \"dim\"")),
        },
        _ => {
            let nested: Nested = doc.parse(slice)?;
            let t = Tensor3::from_nested(nested).map_err(|e| doc.error_in(slice, e))?;
            let (d1, d2, d3) = t.dims();
            if d1 != d2 || d2 != d3 {
                return Err(doc.error_in(slice, format!("structure tensor must be cubic, got {d1}x{d2}x{d3}")));
            }
            if let Some(n) = dim.filter(|&n| n != d1) {
                return Err(doc.error_in(slice, format!("\"dim\" is {n} but the tensor has size {d1}")));
            }
            Ok(t)
        }
    }
}

fn sparse_tensor(doc: &Document, at: &str, dim: Option<usize>, products: &[RawProduct]) -> Result<Tensor3> {
    let mut entries = Vec::new();
    for p in products {
        for (k, v) in &p.out {
            let k: usize = k.parse().map_err(|_| doc.error_in(at, format!("output key {k:?} is not a basis index")))?;
            entries.push((p.i, p.j, k, v.clone()));
        }
    }
    let inferred = entries.iter().map(|&(i, j, k, _)| i.max(j).max(k)).max().unwrap_or(0);
    let n = dim.unwrap_or(inferred);
    if let Some(&(i, j, k, _)) = entries.iter().find(|&&(i, j, k, _)| i.min(j).min(k) == 0 || i.max(j).max(k) > n) {
        return Err(doc.error_in(at, format!("product index ({i},{j})->{k} outside 1..={n}")));
    }
    let mut t = Tensor3::cube(n);
    for (i, j, k, v) in entries {
        t[(i - 1, j - 1, k - 1)] += &v;
    }
    Ok(t)
}

pub(crate) fn algebra_in(doc: &Document, slice: &str) -> Result<StructureAlgebra> {
    if slice.trim_start().starts_with('"') {
        let path: String = doc.parse(slice)?;
        let full = match &doc.dir {
            Some(dir) => dir.join(&path),
            None => PathBuf::from(&path),
        };
        let nested = Document::read(&full).map_err(|e| doc.error_in(slice, e))?;
        return parse_algebra(&nested);
    }
    if let Ok(RawWrapper { total, result }) = serde_json::from_str::<RawWrapper>(slice) {
        if let Some(inner) = total.or(result) {
            return algebra_in(doc, inner.get());
        }
    }
    let raw: RawAlgebra = doc.parse(slice)?;
    let q = raw.q.unwrap_or_else(minus_one);
    let c = match (raw.c, raw.products) {
        (Some(c), None) => tensor(doc, c.get(), raw.dim)?,
        (None, Some(p)) => tensor(doc, p.get(), raw.dim)?,
        _ => return Err(doc.error_in(slice, "algebra needs exactly one of \"c\" or \"products\"")),
    };
    StructureAlgebra::new(q, c).map_err(|e| doc.error_in(slice, e))
}

/// `{"dim", "q", "c"}` or `{"products": [{"i", "j", "out": {"k": coeff}}]}`.
/// A missing `q` means `−1`. Build outputs are accepted too: the algebra
/// under `total` or `result` is used.
pub fn parse_algebra(doc: &Document) -> Result<StructureAlgebra> {
    algebra_in(doc, &doc.text)
}

fn bimodule_in(doc: &Document, slice: &str, algebra: Option<StructureAlgebra>) -> Result<(StructureAlgebra, Bimodule)> {
    let raw: RawBimodule = doc.parse(slice)?;
    let a = match (raw.algebra, algebra) {
        (Some(r), outer) => {
            let a = algebra_in(doc, r.get())?;
            if outer.as_ref().is_some_and(|o| *o != a) {
                return Err(doc.error_in(r.get(), "bimodule algebra differs from the enclosing algebra"));
            }
            a
        }
        (None, Some(a)) => a,
        (None, None) => return Err(doc.error_in(slice, "bimodule needs an \"algebra\"")),
    };
    let l = matrices(doc, slice, raw.l)?;
    let r = matrices(doc, slice, raw.r)?;
    let m = Bimodule::new(a.dim(), raw.module_dim, l, r).map_err(|e| doc.error_in(slice, e))?;
    Ok((a, m))
}

/// `{"algebra", "module_dim", "l": [matrix ×n], "r": [matrix ×n]}`.
pub fn parse_bimodule(doc: &Document) -> Result<(StructureAlgebra, Bimodule)> {
    bimodule_in(doc, &doc.text, None)
}

/// `{"a", "b", "l_a", "r_a", "l_b", "r_b"}`; `l_a`, `r_a` act on B.
pub fn parse_matched_pair(doc: &Document) -> Result<MatchedPairData> {
    let raw: RawMatchedPair = doc.parse(&doc.text)?;
    let a = algebra_in(doc, raw.a.get())?;
    let b = algebra_in(doc, raw.b.get())?;
    let at = doc.text.as_str();
    MatchedPairData::new(
        a,
        b,
        matrices(doc, at, raw.l_a)?,
        matrices(doc, at, raw.r_a)?,
        matrices(doc, at, raw.l_b)?,
        matrices(doc, at, raw.r_b)?,
    )
    .map_err(|e| doc.error_in(at, e))
}

/// `{"dim", "q", "prec", "succ"}`, each tensor dense or a product list.
pub fn parse_dendriform(doc: &Document) -> Result<DendriformStructure> {
    dendriform_in(doc, &doc.text)
}

pub(crate) fn dendriform_in(doc: &Document, slice: &str) -> Result<DendriformStructure> {
    let raw: RawDendriform = doc.parse(slice)?;
    let prec = tensor(doc, raw.prec.get(), raw.dim)?;
    let succ = tensor(doc, raw.succ.get(), raw.dim.or(Some(prec.dims().0)))?;
    let prec = if raw.dim.is_none() && prec.dims().0 < succ.dims().0 {
        tensor(doc, raw.prec.get(), Some(succ.dims().0))?
    } else {
        prec
    };
    DendriformStructure::new(raw.q.unwrap_or_else(minus_one), prec, succ).map_err(|e| doc.error_in(slice, e))
}

/// `{"dim", "kind": "symmetric"|"antisymmetric", "gram"}`.
pub fn parse_form(doc: &Document) -> Result<BilinearForm> {
    let raw: RawForm = doc.parse(&doc.text)?;
    let gram = Matrix::from_rows(raw.gram).map_err(|e| doc.error_in(&doc.text, e))?;
    if let Some(n) = raw.dim.filter(|&n| n != gram.rows()) {
        return Err(doc.error_in(&doc.text, format!("\"dim\" is {n} but the Gram matrix has {} rows", gram.rows())));
    }
    BilinearForm::new(gram, raw.kind).map_err(|e| doc.error_in(&doc.text, e))
}

/// `{"algebra", "bimodule", "T"}` with `T: V → A` as a `dim A × dim V` matrix.
pub fn parse_o_operator(doc: &Document) -> Result<(StructureAlgebra, Bimodule, LinearMap)> {
    let raw: RawOOperator = doc.parse(&doc.text)?;
    let a = algebra_in(doc, raw.algebra.get())?;
    let (a, m) = bimodule_in(doc, raw.bimodule.get(), Some(a))?;
    let t = matrix(doc, raw.t.get())?;
    if t.rows() != a.dim() || t.cols() != m.module_dim() {
        return Err(doc.error_in(
            raw.t.get(),
            format!("T must be {}x{}, got {}x{}", a.dim(), m.module_dim(), t.rows(), t.cols()),
        ));
    }
    Ok((a, m, LinearMap::new(t)))
}

/// `{"algebra", "tau"}` with `tau` square.
pub fn parse_rota_baxter(doc: &Document) -> Result<(StructureAlgebra, LinearMap)> {
    let raw: RawRotaBaxter = doc.parse(&doc.text)?;
    let a = algebra_in(doc, raw.algebra.get())?;
    let tau = matrix(doc, raw.tau.get())?;
    if tau.rows() != a.dim() || tau.cols() != a.dim() {
        return Err(doc.error_in(raw.tau.get(), format!("tau must be {0}x{0}", a.dim())));
    }
    Ok((a, LinearMap::new(tau)))
}

pub fn matrix_json(m: &Matrix) -> Value {
    json!(m.to_rows())
}

pub fn algebra_json(a: &StructureAlgebra) -> Value {
    json!({"dim": a.dim(), "q": a.q(), "c": a.tensor().to_nested()})
}

pub fn bimodule_json(a: &StructureAlgebra, m: &Bimodule) -> Value {
    json!({
        "algebra": algebra_json(a),
        "module_dim": m.module_dim(),
        "l": m.l().iter().map(Matrix::to_rows).collect::<Vec<_>>(),
        "r": m.r().iter().map(Matrix::to_rows).collect::<Vec<_>>(),
    })
}

pub fn dendriform_json(d: &DendriformStructure) -> Value {
    json!({"dim": d.dim(), "q": d.q(), "prec": d.prec_tensor().to_nested(), "succ": d.succ_tensor().to_nested()})
}

pub fn form_json(f: &BilinearForm) -> Value {
    json!({"dim": f.dim(), "kind": f.kind(), "gram": f.gram().to_rows()})
}

pub fn report_json(r: &CheckReport) -> Value {
    let mut v = serde_json::to_value(r).expect("reports serialize");
    v["summary"] = json!(r.summary());
    v
}

pub fn double_json(d: &DoubleConstruction) -> Value {
    json!({
        "kind": d.kind,
        "half_dim": d.half_dim,
        "total": algebra_json(&d.total),
        "gram": matrix_json(d.form.gram()),
        "products": product_table(&d.total, &double_labels(d.half_dim)),
        "report": report_json(&d.report),
    })
}

/// Pretty JSON with sorted object keys and a trailing newline.
pub fn to_canonical_string(v: &Value) -> String {
    // serde_json's default map is a BTreeMap, so keys come out sorted
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}
