//! Structured verification results shared by the verifiers and the CLI.

use serde::{Deserialize, Serialize};

use crate::geom::Tolerance;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    /// 1-based vertex, side or family indices the check refers to.
    pub indices: Vec<usize>,
    pub residual: f64,
    /// Largest residual that still passes.
    pub bound: f64,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    /// Passes iff `residual <= bound`; NaN residuals fail.
    pub fn measured(name: impl Into<String>, indices: Vec<usize>, residual: f64, bound: f64) -> Self {
        Check {
            name: name.into(),
            indices,
            residual,
            bound,
            pass: residual <= bound,
            note: None,
        }
    }

    pub fn failed(name: impl Into<String>, indices: Vec<usize>, note: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            indices,
            residual: f64::INFINITY,
            bound: 0.0,
            pass: false,
            note: Some(note.into()),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// Outcome of a batch of checks; `overall` is the conjunction of `pass`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
    pub overall: bool,
    pub tolerance: Tolerance,
    /// Indices that were not checked, with the reason.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub skipped: Vec<Skipped>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Skipped {
    pub name: String,
    pub indices: Vec<usize>,
    pub reason: String,
}

impl VerificationReport {
    pub fn new(tolerance: Tolerance) -> Self {
        VerificationReport {
            checks: Vec::new(),
            overall: true,
            tolerance,
            skipped: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.overall &= check.pass;
        self.checks.push(check);
    }

    pub fn skip(&mut self, name: impl Into<String>, indices: Vec<usize>, reason: impl Into<String>) {
        self.skipped.push(Skipped {
            name: name.into(),
            indices,
            reason: reason.into(),
        });
    }

    pub fn merge(&mut self, other: VerificationReport) {
        for c in other.checks {
            self.push(c);
        }
        self.skipped.extend(other.skipped);
    }

    pub fn max_residual(&self) -> f64 {
        self.checks.iter().map(|c| c.residual).fold(0.0, f64::max)
    }

    /// Largest residual relative to its bound.
    pub fn worst_ratio(&self) -> f64 {
        self.checks
            .iter()
            .map(|c| match (c.residual, c.bound) {
                (0.0, _) => 0.0,
                (r, b) if b > 0.0 => r / b,
                _ => f64::INFINITY,
            })
            .fold(0.0, f64::max)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}
