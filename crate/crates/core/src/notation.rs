//! Human-facing basis labels and linear-combination strings like `e2+2e1*`.

use crate::algebra::StructureAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{zero_vector, Vector};
use crate::rational::Rational;

/// `e1, …, en`.
pub fn basis_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

/// `e1, …, en, e1*, …, en*` for coordinates on `A ⊕ A*`.
pub fn double_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).chain((1..=n).map(|i| format!("e{i}*"))).collect()
}

/// Render `Σ v_i · label_i`, skipping zeros. The zero vector renders as `0`.
pub fn format_combination(v: &[Rational], labels: &[String]) -> String {
    let mut out = String::new();
    for (x, label) in v.iter().zip(labels) {
        if x.is_zero() {
            continue;
        }
        let neg = x.is_negative();
        if neg {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let mag = x.abs();
        if !mag.is_one() {
            out.push_str(&mag.to_string());
        }
        out.push_str(label);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Nonzero basis products as `e1·e2=e1-e2*`, in lexicographic index order.
pub fn product_table(a: &StructureAlgebra, labels: &[String]) -> Vec<String> {
    a.nonzero_products()
        .into_iter()
        .map(|(i, j, v)| format!("{}·{}={}", labels[i], labels[j], format_combination(&v, labels)))
        .collect()
}

/// Split `2e1-e2*+1/2e3` into signed `(coefficient text, label)` terms.
/// The coefficient text is empty when implicit, and carries a leading `-`
/// when the term is subtracted.
pub fn split_terms(s: &str) -> Result<Vec<(String, String)>> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty linear combination".into()));
    }
    if s == "0" {
        return Ok(Vec::new());
    }
    let mut terms = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    let bytes = s.as_bytes();
    for (pos, &b) in bytes.iter().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => depth = depth.saturating_sub(1),
            b'+' | b'-' if depth == 0 && pos > start => {
                terms.push(&s[start..pos]);
                start = pos;
            }
            _ => {}
        }
    }
    terms.push(&s[start..]);

    terms
        .into_iter()
        .map(|t| {
            let (sign, body) = match t.as_bytes().first() {
                Some(b'+') => ("", &t[1..]),
                Some(b'-') => ("-", &t[1..]),
                _ => ("", t),
            };
            let e = body.rfind('e').ok_or_else(|| Error::Parse(format!("term {t:?} names no basis vector")))?;
            let (coeff, label) = body.split_at(e);
            if label.len() < 2 {
                return Err(Error::Parse(format!("bad basis label in {t:?}")));
            }
            Ok((format!("{sign}{coeff}"), label.to_string()))
        })
        .collect()
}

/// Parse a combination with rational coefficients against `labels`.
pub fn parse_combination(s: &str, labels: &[String]) -> Result<Vector> {
    let mut v = zero_vector(labels.len());
    for (coeff, label) in split_terms(s)? {
        let idx = labels
            .iter()
            .position(|l| *l == label)
            .ok_or_else(|| Error::Parse(format!("unknown basis label {label:?}")))?;
        let c = match coeff.as_str() {
            "" => Rational::one(),
            "-" => -Rational::one(),
            other => other.parse::<Rational>().map_err(|e| Error::Parse(format!("coefficient {other:?}: {e}")))?,
        };
        v[idx] += c;
    }
    Ok(v)
}
