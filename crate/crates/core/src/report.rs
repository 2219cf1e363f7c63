//! Verdicts produced by every verifier in the crate.

use serde::Serialize;

use crate::linalg::{is_zero_vector, Vector};

/// One failing instance of an identity.
///
/// `indices` are 1-indexed basis labels; `residual` is LHS − RHS in
/// coordinates. Operator identities (laws between matrices) use the
/// row-major flattening of the residual matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub identity: String,
    pub indices: Vec<usize>,
    pub residual: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    passed: bool,
    checked: usize,
    unit: String,
    violations: Vec<Violation>,
}

impl Default for CheckReport {
    fn default() -> Self {
        CheckReport::new("instances")
    }
}

impl CheckReport {
    /// `unit` names what one checked instance is ("triples", "pairs", ...).
    pub fn new(unit: &str) -> Self {
        CheckReport { passed: true, checked: 0, unit: unit.to_string(), violations: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.passed
    }

    pub fn checked(&self) -> usize {
        self.checked
    }

    pub fn unit(&self) -> &str {
        &self.unit
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn failed(&self) -> usize {
        self.violations.len()
    }

    /// Record one identity instance; it fails iff `residual` is nonzero.
    pub fn check(&mut self, identity: &str, indices: &[usize], residual: Vector) -> bool {
        self.checked += 1;
        if is_zero_vector(&residual) {
            return true;
        }
        self.fail(identity, indices, residual);
        false
    }

    /// Record one instance that is known to have failed.
    pub fn fail(&mut self, identity: &str, indices: &[usize], residual: Vector) {
        self.passed = false;
        self.violations.push(Violation { identity: identity.to_string(), indices: indices.to_vec(), residual });
    }

    /// Record a boolean condition with no residual (e.g. nondegeneracy).
    pub fn require(&mut self, identity: &str, ok: bool) -> bool {
        self.checked += 1;
        if !ok {
            self.fail(identity, &[], Vec::new());
        }
        ok
    }

    /// Fold another report in, prefixing its identity ids with `prefix:`.
    pub fn absorb(&mut self, prefix: &str, other: CheckReport) {
        if self.checked == 0 && self.violations.is_empty() {
            self.unit = other.unit.clone();
        } else if self.unit != other.unit {
            self.unit = "instances".to_string();
        }
        self.checked += other.checked;
        self.passed &= other.passed;
        for mut v in other.violations {
            if !prefix.is_empty() {
                v.identity = format!("{prefix}:{}", v.identity);
            }
            self.violations.push(v);
        }
    }

    /// Violations whose identity id starts with `prefix`.
    pub fn violations_of<'a>(&'a self, prefix: &'a str) -> impl Iterator<Item = &'a Violation> + 'a {
        self.violations.iter().filter(move |v| v.identity.starts_with(prefix))
    }

    /// "pass (8/8 triples)" or "FAIL (7/8 triples)".
    pub fn summary(&self) -> String {
        let ok = self.checked.saturating_sub(self.violations.len());
        let verdict = if self.passed { "pass" } else { "FAIL" };
        format!("{verdict} ({ok}/{} {})", self.checked, self.unit)
    }
}
