//! Pass/fail records produced by the axiom checkers and diagram verifiers.

use std::fmt;

use crate::exactla::Matrix;
use crate::field::Scalar;

/// Where two sides of an identity first disagree: the (flat) source basis
/// index and the (flat) target coordinate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Witness {
    pub input: usize,
    pub output: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomResult {
    pub axiom: String,
    pub witness: Option<Witness>,
}

impl AxiomResult {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub subject: String,
    pub results: Vec<AxiomResult>,
}

impl ValidationReport {
    pub fn new(subject: impl Into<String>) -> Self {
        ValidationReport {
            subject: subject.into(),
            results: Vec::new(),
        }
    }

    /// Records `lhs == rhs` as an axiom, with the first mismatch as witness.
    pub fn compare(&mut self, axiom: &str, lhs: &Matrix, rhs: &Matrix) {
        let witness = lhs
            .first_difference(rhs)
            .map(|(output, input)| Witness { input, output });
        self.results.push(AxiomResult {
            axiom: axiom.to_string(),
            witness,
        });
    }

    pub fn passed(&self) -> bool {
        self.results.iter().all(AxiomResult::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomResult> {
        self.results.iter().filter(|r| !r.passed())
    }

    pub fn get(&self, axiom: &str) -> Option<&AxiomResult> {
        self.results.iter().find(|r| r.axiom == axiom)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.subject)?;
        for r in &self.results {
            match r.witness {
                None => writeln!(f, "  pass  {}", r.axiom)?,
                Some(w) => writeln!(
                    f,
                    "  FAIL  {} (witness: basis index {}, coordinate {})",
                    r.axiom, w.input, w.output
                )?,
            }
        }
        write!(f, "{}", if self.passed() { "ok" } else { "failed" })
    }
}

/// Outcome of checking that a diagram commutes on a concrete input: both
/// composites evaluated as vectors of scalars.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramReport {
    pub diagram: String,
    pub lhs_label: String,
    pub lhs: Vec<Scalar>,
    pub rhs_label: String,
    pub rhs: Vec<Scalar>,
    /// Side conditions checked along the way (idempotency, well-definedness).
    pub conditions: Vec<(String, bool)>,
}

impl DiagramReport {
    pub fn commutes(&self) -> bool {
        self.lhs == self.rhs && self.conditions.iter().all(|(_, ok)| *ok)
    }
}

pub(crate) fn fmt_vector(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

impl fmt::Display for DiagramReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.diagram)?;
        for (name, ok) in &self.conditions {
            writeln!(f, "  {}  {}", if *ok { "pass" } else { "FAIL" }, name)?;
        }
        writeln!(f, "  {}: {}", self.lhs_label, fmt_vector(&self.lhs))?;
        writeln!(f, "  {}: {}", self.rhs_label, fmt_vector(&self.rhs))?;
        write!(f, "{}", if self.commutes() { "commutes" } else { "DOES NOT COMMUTE" })
    }
}
