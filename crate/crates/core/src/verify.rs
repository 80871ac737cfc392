//! Diagram verifiers, looked up by name from a fixed registry.

use crate::error::{Error, Result};
use crate::format::Document;
use crate::report::DiagramReport;
use crate::structures::Coalgebra;
use crate::traces::{verify_character_multiplicativity, verify_character_triangle, verify_trace_square};

pub trait DiagramVerifier {
    fn name(&self) -> &'static str;
    /// The documents expected, e.g. `"<coalgebra> <idempotent>"`.
    fn usage(&self) -> &'static str;
    fn run(&self, docs: &[Document]) -> Result<DiagramReport>;
}

fn arity(v: &dyn DiagramVerifier, docs: &[Document], n: usize) -> Result<()> {
    if docs.len() != n {
        return Err(Error::InvalidInput(format!(
            "verify {} expects {}, got {} file(s)",
            v.name(),
            v.usage(),
            docs.len()
        )));
    }
    Ok(())
}

fn as_coalgebra(doc: &Document) -> Result<Coalgebra> {
    match doc {
        Document::Coalgebra(c) => Ok(c.clone()),
        Document::Bialgebra(h) => Ok(h.coalg().clone()),
        other => Err(Error::InvalidInput(format!("expected a coalgebra, got a {}", other.kind()))),
    }
}

struct TraceSquare;

impl DiagramVerifier for TraceSquare {
    fn name(&self) -> &'static str {
        "square"
    }

    fn usage(&self) -> &'static str {
        "<coalgebra> <colinear idempotent>"
    }

    fn run(&self, docs: &[Document]) -> Result<DiagramReport> {
        arity(self, docs, 2)?;
        let c = as_coalgebra(&docs[0])?;
        let Document::Idempotent(e) = &docs[1] else {
            return Err(Error::InvalidInput(format!("expected an idempotent, got a {}", docs[1].kind())));
        };
        verify_trace_square(&c, &e.to_colinear()?)
    }
}

struct CharacterTriangle;

impl DiagramVerifier for CharacterTriangle {
    fn name(&self) -> &'static str {
        "triangle"
    }

    fn usage(&self) -> &'static str {
        "<comodule>"
    }

    fn run(&self, docs: &[Document]) -> Result<DiagramReport> {
        arity(self, docs, 1)?;
        let Document::Comodule(v) = &docs[0] else {
            return Err(Error::InvalidInput(format!("expected a comodule, got a {}", docs[0].kind())));
        };
        verify_character_triangle(v.over(), v)
    }
}

struct Multiplicativity;

impl DiagramVerifier for Multiplicativity {
    fn name(&self) -> &'static str {
        "multiplicativity"
    }

    fn usage(&self) -> &'static str {
        "<bialgebra> <comodule> <comodule>"
    }

    fn run(&self, docs: &[Document]) -> Result<DiagramReport> {
        arity(self, docs, 3)?;
        let (Document::Bialgebra(h), Document::Comodule(v), Document::Comodule(w)) = (&docs[0], &docs[1], &docs[2]) else {
            return Err(Error::InvalidInput(format!("verify multiplicativity expects {}", self.usage())));
        };
        verify_character_multiplicativity(h, v, w)
    }
}

pub fn verifiers() -> Vec<Box<dyn DiagramVerifier>> {
    vec![Box::new(TraceSquare), Box::new(CharacterTriangle), Box::new(Multiplicativity)]
}

pub fn verifier(name: &str) -> Option<Box<dyn DiagramVerifier>> {
    verifiers().into_iter().find(|v| v.name() == name)
}
