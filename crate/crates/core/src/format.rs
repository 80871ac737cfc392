//! The on-disk document format: one JSON object per file, scalars as
//! strings, emitted canonically with a fixed key order.

use std::str::FromStr;

use serde_json::Value;

use crate::comodmod::{ColinearIdempotent, Comodule, Module, Side};
use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::field::FieldSpec;
use crate::structures::{Algebra, Bialgebra, Coalgebra};
use crate::traces::AlgebraMatrix;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdempotentForm {
    /// An idempotent colinear endomorphism of `C^⊕n`.
    Colinear,
    /// An idempotent `n × n` matrix over an algebra.
    Algebra,
}

impl IdempotentForm {
    fn name(self) -> &'static str {
        match self {
            IdempotentForm::Colinear => "colinear",
            IdempotentForm::Algebra => "algebra",
        }
    }
}

/// An idempotent as stored on disk. Its ambient (co)algebra is supplied
/// separately, so the matrix is kept raw until one is available.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentDoc {
    pub form: IdempotentForm,
    pub n: usize,
    pub matrix: Matrix,
}

impl IdempotentDoc {
    pub fn colinear(e: &ColinearIdempotent) -> Self {
        IdempotentDoc {
            form: IdempotentForm::Colinear,
            n: e.n(),
            matrix: e.endo().clone(),
        }
    }

    pub fn algebra(a: &Algebra, e: &AlgebraMatrix) -> Self {
        IdempotentDoc {
            form: IdempotentForm::Algebra,
            n: e.n(),
            matrix: e.to_block_rows(a),
        }
    }

    pub fn to_colinear(&self) -> Result<ColinearIdempotent> {
        match self.form {
            IdempotentForm::Colinear => Ok(ColinearIdempotent::new(self.n, self.matrix.clone())),
            IdempotentForm::Algebra => Err(Error::InvalidInput("expected a colinear idempotent".into())),
        }
    }

    pub fn to_algebra_matrix(&self, a: &Algebra) -> Result<AlgebraMatrix> {
        match self.form {
            IdempotentForm::Algebra => AlgebraMatrix::from_block_rows(&self.matrix, a.dim()),
            IdempotentForm::Colinear => Err(Error::InvalidInput("expected an idempotent over an algebra".into())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Algebra(Algebra),
    Coalgebra(Coalgebra),
    Bialgebra(Bialgebra),
    Comodule(Comodule),
    Module(Module),
    Idempotent(IdempotentDoc),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Algebra(_) => "algebra",
            Document::Coalgebra(_) => "coalgebra",
            Document::Bialgebra(_) => "bialgebra",
            Document::Comodule(_) => "comodule",
            Document::Module(_) => "module",
            Document::Idempotent(_) => "idempotent",
        }
    }

    pub fn field(&self) -> FieldSpec {
        match self {
            Document::Algebra(a) => a.field(),
            Document::Coalgebra(c) => c.field(),
            Document::Bialgebra(h) => h.field(),
            Document::Comodule(m) => m.field(),
            Document::Module(m) => m.over().field(),
            Document::Idempotent(e) => e.matrix.field(),
        }
    }

    /// The customary file extension for this kind.
    pub fn extension(&self) -> &'static str {
        match self {
            Document::Algebra(_) => "alg",
            Document::Coalgebra(_) => "coalg",
            Document::Bialgebra(_) => "bialg",
            Document::Comodule(_) => "comod",
            Document::Module(_) => "mod",
            Document::Idempotent(_) => "idem",
        }
    }

    /// Rewrites every scalar over `field`. Rationals reduce into prime
    /// fields; any other change of field is an error.
    pub fn reinterpret(&self, field: FieldSpec) -> Result<Document> {
        if field == self.field() {
            return Ok(self.clone());
        }
        if self.field() != FieldSpec::Rationals {
            return Err(Error::FieldMismatch(format!(
                "a {} over {} cannot be reinterpreted over {field}",
                self.kind(),
                self.field()
            )));
        }
        let m = |x: &Matrix| coerce_matrix(x, field);
        Ok(match self {
            Document::Algebra(a) => Document::Algebra(coerce_algebra(a, field)?),
            Document::Coalgebra(c) => Document::Coalgebra(coerce_coalgebra(c, field)?),
            Document::Bialgebra(h) => Document::Bialgebra(Bialgebra::new(
                coerce_algebra(h.alg(), field)?,
                coerce_coalgebra(h.coalg(), field)?,
                h.antipode().map(m).transpose()?,
            )?),
            Document::Comodule(v) => {
                Document::Comodule(Comodule::new(v.side(), m(v.coaction())?, coerce_coalgebra(v.over(), field)?)?)
            }
            Document::Module(v) => Document::Module(Module::new(v.side(), m(v.action())?, coerce_algebra(v.over(), field)?)?),
            Document::Idempotent(e) => Document::Idempotent(IdempotentDoc {
                form: e.form,
                n: e.n,
                matrix: m(&e.matrix)?,
            }),
        })
    }
}

fn coerce_matrix(x: &Matrix, field: FieldSpec) -> Result<Matrix> {
    let rows = (0..x.rows())
        .map(|r| x.row(r).iter().map(|s| field.coerce(s)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    if rows.is_empty() {
        return Ok(Matrix::zeros(0, x.cols(), field));
    }
    Matrix::from_rows(field, x.cols(), rows)
}

fn coerce_algebra(a: &Algebra, field: FieldSpec) -> Result<Algebra> {
    Algebra::new(coerce_matrix(a.mul(), field)?, coerce_matrix(a.unit(), field)?, a.labels().to_vec())
}

fn coerce_coalgebra(c: &Coalgebra, field: FieldSpec) -> Result<Coalgebra> {
    Coalgebra::new(coerce_matrix(c.comul(), field)?, coerce_matrix(c.counit(), field)?, c.labels().to_vec())
}

// ---------------------------------------------------------------------------
// Emission

enum Node {
    Str(String),
    Num(usize),
    Null,
    Arr(Vec<Node>),
    Obj(Vec<(&'static str, Node)>),
}

fn matrix_node(m: &Matrix) -> Node {
    Node::Arr(
        (0..m.rows())
            .map(|r| Node::Arr(m.row(r).iter().map(|s| Node::Str(s.to_string())).collect()))
            .collect(),
    )
}

fn labels_node(labels: &[String]) -> Node {
    Node::Arr(labels.iter().map(|l| Node::Str(l.clone())).collect())
}

fn algebra_fields(a: &Algebra) -> Vec<(&'static str, Node)> {
    vec![
        ("dim", Node::Num(a.dim())),
        ("labels", labels_node(a.labels())),
        ("mul", matrix_node(a.mul())),
        ("unit", matrix_node(a.unit())),
    ]
}

fn coalgebra_fields(c: &Coalgebra) -> Vec<(&'static str, Node)> {
    vec![
        ("dim", Node::Num(c.dim())),
        ("labels", labels_node(c.labels())),
        ("comul", matrix_node(c.comul())),
        ("counit", matrix_node(c.counit())),
    ]
}

fn side_node(side: Side) -> Node {
    Node::Str(side.to_string())
}

fn payload(doc: &Document) -> Node {
    Node::Obj(match doc {
        Document::Algebra(a) => algebra_fields(a),
        Document::Coalgebra(c) => coalgebra_fields(c),
        Document::Bialgebra(h) => vec![
            ("dim", Node::Num(h.dim())),
            ("labels", labels_node(h.labels())),
            ("mul", matrix_node(h.alg().mul())),
            ("unit", matrix_node(h.alg().unit())),
            ("comul", matrix_node(h.coalg().comul())),
            ("counit", matrix_node(h.coalg().counit())),
            ("antipode", h.antipode().map_or(Node::Null, matrix_node)),
        ],
        Document::Comodule(m) => vec![
            ("dim", Node::Num(m.dim())),
            ("side", side_node(m.side())),
            ("coaction", matrix_node(m.coaction())),
            ("over", Node::Obj(coalgebra_fields(m.over()))),
        ],
        Document::Module(m) => vec![
            ("dim", Node::Num(m.dim())),
            ("side", side_node(m.side())),
            ("action", matrix_node(m.action())),
            ("over", Node::Obj(algebra_fields(m.over()))),
        ],
        Document::Idempotent(e) => vec![
            ("form", Node::Str(e.form.name().into())),
            ("n", Node::Num(e.n)),
            ("matrix", matrix_node(&e.matrix)),
        ],
    })
}

fn escape(s: &str, out: &mut String) {
    out.push('"');
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            '\r' => out.push_str("\\r"),
            c if (c as u32) < 0x20 || (c as u32) > 0x7e => {
                let mut buf = [0u16; 2];
                for unit in c.encode_utf16(&mut buf) {
                    out.push_str(&format!("\\u{unit:04x}"));
                }
            }
            c => out.push(c),
        }
    }
    out.push('"');
}

fn is_flat(items: &[Node]) -> bool {
    items.iter().all(|n| !matches!(n, Node::Arr(_) | Node::Obj(_)))
}

fn write_node(node: &Node, indent: usize, out: &mut String) {
    let pad = |k: usize| "  ".repeat(k);
    match node {
        Node::Str(s) => escape(s, out),
        Node::Num(n) => out.push_str(&n.to_string()),
        Node::Null => out.push_str("null"),
        Node::Arr(items) if items.is_empty() => out.push_str("[]"),
        Node::Arr(items) if is_flat(items) => {
            out.push('[');
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                write_node(item, indent, out);
            }
            out.push(']');
        }
        Node::Arr(items) => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_node(item, indent + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Node::Obj(fields) => {
            out.push_str("{\n");
            for (i, (key, value)) in fields.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                escape(key, out);
                out.push_str(": ");
                write_node(value, indent + 1, out);
                out.push_str(if i + 1 < fields.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
    }
}

/// Canonical text of a document, newline-terminated.
pub fn emit(doc: &Document) -> String {
    let root = Node::Obj(vec![
        ("schema_version", Node::Str(SCHEMA_VERSION.into())),
        ("field", Node::Str(doc.field().to_string())),
        ("kind", Node::Str(doc.kind().into())),
        ("payload", payload(doc)),
    ]);
    let mut out = String::new();
    write_node(&root, 0, &mut out);
    out.push('\n');
    out
}

// ---------------------------------------------------------------------------
// Parsing

/// Converts a byte offset into a 1-based line and column.
fn position(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

struct Reader<'a> {
    text: &'a str,
    field: FieldSpec,
}

impl Reader<'_> {
    /// Locates the last key of `path` (each key searched after the previous
    /// one), and optionally the first string literal `token` after it.
    fn locate(&self, path: &[&str], token: Option<&str>) -> (usize, usize) {
        let mut at = 0;
        for key in path {
            let quoted = format!("\"{key}\"");
            if let Some(i) = self.text[at..].find(&quoted) {
                at += i;
            }
        }
        if let Some(tok) = token {
            let quoted = Value::String(tok.to_string()).to_string();
            if let Some(i) = self.text[at..].find(&quoted) {
                at += i;
            }
        }
        position(self.text, at)
    }

    fn error(&self, path: &[&str], token: Option<&str>, message: impl Into<String>) -> Error {
        let (line, column) = self.locate(path, token);
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    fn object<'v>(
        &self,
        v: &'v Value,
        path: &[&str],
        keys: &[&str],
    ) -> Result<&'v serde_json::Map<String, Value>> {
        let obj = v
            .as_object()
            .ok_or_else(|| self.error(path, None, "expected an object"))?;
        for key in obj.keys() {
            if !keys.contains(&key.as_str()) {
                let mut p = path.to_vec();
                p.push(key);
                return Err(self.error(&p, None, format!("unexpected key {key:?}")));
            }
        }
        for key in keys {
            if !obj.contains_key(*key) {
                return Err(self.error(path, None, format!("missing key {key:?}")));
            }
        }
        Ok(obj)
    }

    fn string<'v>(&self, v: &'v Value, path: &[&str]) -> Result<&'v str> {
        v.as_str().ok_or_else(|| self.error(path, None, "expected a string"))
    }

    fn natural(&self, v: &Value, path: &[&str]) -> Result<usize> {
        v.as_u64()
            .and_then(|n| usize::try_from(n).ok())
            .ok_or_else(|| self.error(path, None, "expected a non-negative integer"))
    }

    fn labels(&self, v: &Value, path: &[&str], dim: usize) -> Result<Vec<String>> {
        let items = v.as_array().ok_or_else(|| self.error(path, None, "expected an array of labels"))?;
        if items.len() != dim {
            return Err(self.error(path, None, format!("{} labels for dimension {dim}", items.len())));
        }
        items.iter().map(|l| self.string(l, path).map(str::to_string)).collect()
    }

    /// A matrix as an array of rows; `cols` of `None` takes the width from
    /// the first row.
    fn matrix(&self, v: &Value, path: &[&str], rows: usize, cols: Option<usize>) -> Result<Matrix> {
        let items = v.as_array().ok_or_else(|| self.error(path, None, "expected an array of rows"))?;
        if items.len() != rows {
            return Err(self.error(path, None, format!("expected {rows} rows, found {}", items.len())));
        }
        let width = match (cols, items.first()) {
            (Some(c), _) => c,
            (None, Some(first)) => first.as_array().map_or(0, Vec::len),
            (None, None) => 0,
        };
        let mut data = Vec::with_capacity(rows);
        for (r, row) in items.iter().enumerate() {
            let row = row
                .as_array()
                .ok_or_else(|| self.error(path, None, format!("row {r} is not an array")))?;
            if row.len() != width {
                return Err(self.error(path, None, format!("row {r} has {} entries, expected {width}", row.len())));
            }
            let mut out = Vec::with_capacity(width);
            for entry in row {
                let s = entry
                    .as_str()
                    .ok_or_else(|| self.error(path, None, format!("scalar {entry} must be a string")))?;
                let x = self
                    .field
                    .parse_scalar(s)
                    .map_err(|msg| self.error(path, Some(s), msg))?;
                out.push(x);
            }
            data.push(out);
        }
        if rows == 0 {
            return Ok(Matrix::zeros(0, width, self.field));
        }
        Matrix::from_rows(self.field, width, data).map_err(|e| self.error(path, None, e.to_string()))
    }

    fn side(&self, v: &Value, path: &[&str]) -> Result<Side> {
        match self.string(v, path)? {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            other => Err(self.error(path, Some(other), format!("side must be \"left\" or \"right\", found {other:?}"))),
        }
    }

    fn wrap<T>(&self, path: &[&str], r: Result<T>) -> Result<T> {
        r.map_err(|e| self.error(path, None, e.to_string()))
    }

    fn algebra(&self, v: &Value, path: &[&str]) -> Result<Algebra> {
        let o = self.object(v, path, &["dim", "labels", "mul", "unit"])?;
        let at = |k: &'static str| [path, &[k]].concat();
        let d = self.natural(&o["dim"], &at("dim"))?;
        let labels = self.labels(&o["labels"], &at("labels"), d)?;
        let mul = self.matrix(&o["mul"], &at("mul"), d, Some(d * d))?;
        let unit = self.matrix(&o["unit"], &at("unit"), d, Some(1))?;
        self.wrap(path, Algebra::new(mul, unit, labels))
    }

    fn coalgebra(&self, v: &Value, path: &[&str]) -> Result<Coalgebra> {
        let o = self.object(v, path, &["dim", "labels", "comul", "counit"])?;
        let at = |k: &'static str| [path, &[k]].concat();
        let d = self.natural(&o["dim"], &at("dim"))?;
        let labels = self.labels(&o["labels"], &at("labels"), d)?;
        let comul = self.matrix(&o["comul"], &at("comul"), d * d, Some(d))?;
        let counit = self.matrix(&o["counit"], &at("counit"), 1, Some(d))?;
        self.wrap(path, Coalgebra::new(comul, counit, labels))
    }

    fn bialgebra(&self, v: &Value, path: &[&str]) -> Result<Bialgebra> {
        let keys = ["dim", "labels", "mul", "unit", "comul", "counit", "antipode"];
        let o = self.object(v, path, &keys)?;
        let at = |k: &'static str| [path, &[k]].concat();
        let d = self.natural(&o["dim"], &at("dim"))?;
        let labels = self.labels(&o["labels"], &at("labels"), d)?;
        let mul = self.matrix(&o["mul"], &at("mul"), d, Some(d * d))?;
        let unit = self.matrix(&o["unit"], &at("unit"), d, Some(1))?;
        let comul = self.matrix(&o["comul"], &at("comul"), d * d, Some(d))?;
        let counit = self.matrix(&o["counit"], &at("counit"), 1, Some(d))?;
        let antipode = match &o["antipode"] {
            Value::Null => None,
            s => Some(self.matrix(s, &at("antipode"), d, Some(d))?),
        };
        let alg = self.wrap(path, Algebra::new(mul, unit, labels.clone()))?;
        let coalg = self.wrap(path, Coalgebra::new(comul, counit, labels))?;
        self.wrap(path, Bialgebra::new(alg, coalg, antipode))
    }

    fn comodule(&self, v: &Value, path: &[&str]) -> Result<Comodule> {
        let o = self.object(v, path, &["dim", "side", "coaction", "over"])?;
        let at = |k: &'static str| [path, &[k]].concat();
        let n = self.natural(&o["dim"], &at("dim"))?;
        let side = self.side(&o["side"], &at("side"))?;
        let over = self.coalgebra(&o["over"], &at("over"))?;
        let coaction = self.matrix(&o["coaction"], &at("coaction"), n * over.dim(), Some(n))?;
        self.wrap(path, Comodule::new(side, coaction, over))
    }

    fn module(&self, v: &Value, path: &[&str]) -> Result<Module> {
        let o = self.object(v, path, &["dim", "side", "action", "over"])?;
        let at = |k: &'static str| [path, &[k]].concat();
        let n = self.natural(&o["dim"], &at("dim"))?;
        let side = self.side(&o["side"], &at("side"))?;
        let over = self.algebra(&o["over"], &at("over"))?;
        let action = self.matrix(&o["action"], &at("action"), n, Some(n * over.dim()))?;
        self.wrap(path, Module::new(side, action, over))
    }

    fn idempotent(&self, v: &Value, path: &[&str]) -> Result<IdempotentDoc> {
        let o = self.object(v, path, &["form", "n", "matrix"])?;
        let at = |k: &'static str| [path, &[k]].concat();
        let form = match self.string(&o["form"], &at("form"))? {
            "colinear" => IdempotentForm::Colinear,
            "algebra" => IdempotentForm::Algebra,
            other => {
                return Err(self.error(&at("form"), Some(other), format!("unknown idempotent form {other:?}")));
            }
        };
        let n = self.natural(&o["n"], &at("n"))?;
        let rows = o["matrix"].as_array().map_or(0, Vec::len);
        let matrix = match form {
            IdempotentForm::Colinear => {
                if (n == 0 && rows != 0) || (n > 0 && rows % n != 0) {
                    return Err(self.error(&at("matrix"), None, format!("{rows} rows is not a multiple of n = {n}")));
                }
                self.matrix(&o["matrix"], &at("matrix"), rows, Some(rows))?
            }
            IdempotentForm::Algebra => {
                let m = self.matrix(&o["matrix"], &at("matrix"), n, None)?;
                if n > 0 && m.cols() % n != 0 {
                    return Err(self.error(&at("matrix"), None, format!("{} columns is not a multiple of n = {n}", m.cols())));
                }
                m
            }
        };
        Ok(IdempotentDoc { form, n, matrix })
    }
}

pub fn parse(text: &str) -> Result<Document> {
    let root: Value = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let probe = Reader {
        text,
        field: FieldSpec::Rationals,
    };
    // The version is checked before anything else so that documents from a
    // newer schema fail with a schema error rather than a shape complaint.
    match root.get("schema_version").map(Value::as_str) {
        Some(Some(SCHEMA_VERSION)) => {}
        Some(Some(other)) => {
            return Err(Error::Schema(format!(
                "unsupported schema_version {other:?}, expected {SCHEMA_VERSION:?}"
            )))
        }
        Some(None) => return Err(Error::Schema("schema_version must be a string".into())),
        None if root.is_object() => return Err(Error::Schema("missing schema_version".into())),
        None => {}
    }
    let top = probe.object(&root, &[], &["schema_version", "field", "kind", "payload"])?;
    let field_text = probe.string(&top["field"], &["field"])?;
    let field = FieldSpec::from_str(field_text).map_err(|e| probe.error(&["field"], Some(field_text), e.to_string()))?;
    let r = Reader { text, field };
    let payload = &top["payload"];
    let path = &["payload"][..];
    Ok(match r.string(&top["kind"], &["kind"])? {
        "algebra" => Document::Algebra(r.algebra(payload, path)?),
        "coalgebra" => Document::Coalgebra(r.coalgebra(payload, path)?),
        "bialgebra" => Document::Bialgebra(r.bialgebra(payload, path)?),
        "comodule" => Document::Comodule(r.comodule(payload, path)?),
        "module" => Document::Module(r.module(payload, path)?),
        "idempotent" => Document::Idempotent(r.idempotent(payload, path)?),
        other => return Err(r.error(&["kind"], Some(other), format!("unknown kind {other:?}"))),
    })
}
