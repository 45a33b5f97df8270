//! Pass/fail records produced by the checkers, with witnesses.

use std::fmt;

use serde::Serialize;

use crate::linalg::{format_scalar, Matrix, Scalar};
use crate::maps::GradedMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// Concrete evidence for a failed (or noteworthy) check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub description: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub indices: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub map: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<Vec<String>>,
}

impl Witness {
    pub fn new(description: impl Into<String>) -> Self {
        Witness { description: description.into(), indices: Vec::new(), map: None, residual: None }
    }

    pub fn with_map(mut self, m: &GradedMap) -> Self {
        self.map = Some(matrix_strings(m.matrix()));
        self
    }

    pub fn with_matrix(mut self, m: &Matrix) -> Self {
        self.map = Some(matrix_strings(m));
        self
    }

    pub fn with_indices(mut self, indices: Vec<usize>) -> Self {
        self.indices = indices;
        self
    }

    pub fn with_residual(mut self, r: &[Scalar]) -> Self {
        self.residual = Some(r.iter().map(format_scalar).collect());
        self
    }
}

pub fn matrix_strings(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|r| m.row(r).iter().map(format_scalar).collect()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Check {
    pub fn pass(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check { name: name.into(), status: Status::Pass, detail: detail.into(), witness: None }
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>, witness: Witness) -> Self {
        Check { name: name.into(), status: Status::Fail, detail: detail.into(), witness: Some(witness) }
    }

    pub fn skipped(name: impl Into<String>, reason: impl Into<String>) -> Self {
        Check { name: name.into(), status: Status::Skipped, detail: format!("skipped (hypotheses): {}", reason.into()), witness: None }
    }

    /// Pass when `witness` is `None`.
    pub fn from_outcome(name: impl Into<String>, detail: impl Into<String>, witness: Option<Witness>) -> Self {
        match witness {
            None => Check::pass(name, detail),
            Some(w) => Check::fail(name, detail, w),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        };
        write!(f, "[{tag}] {}: {}", self.name, self.detail)?;
        if let Some(w) = &self.witness {
            write!(f, "\n       witness: {}", w.description)?;
            if !w.indices.is_empty() {
                write!(f, " at basis indices {:?}", w.indices)?;
            }
            if let Some(m) = &w.map {
                let rows: Vec<String> = m.iter().map(|r| format!("[{}]", r.join(", "))).collect();
                write!(f, "\n       map: [{}]", rows.join(", "))?;
            }
            if let Some(r) = &w.residual {
                write!(f, "\n       residual: [{}]", r.join(", "))?;
            }
        }
        Ok(())
    }
}

/// An ordered list of checks under one heading.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub title: String,
    pub checks: Vec<Check>,
}

impl CheckReport {
    pub fn new(title: impl Into<String>) -> Self {
        CheckReport { title: title.into(), checks: Vec::new() }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn find(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "== {} ==", self.title)?;
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}
