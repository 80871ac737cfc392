//! The `coalg` command line. [`run`] is the whole program minus process
//! exit, so tests can drive it in-process.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::comodmod::{check_comodule, check_module, dual_comodule, module_to_comodule, Side};
use crate::corpus;
use crate::error::Error;
use crate::field::FieldSpec;
use crate::format::{emit, parse, Document, IdempotentForm};
use crate::report::{fmt_vector, ValidationReport};
use crate::structures::{
    check_algebra, check_bialgebra_full, check_coalgebra, dual_algebra, dual_bialgebra, dual_coalgebra, Algebra,
    Coalgebra,
};
use crate::suite;
use crate::traces::{character_module, cohh0, colinear_character, cotrace, hattori_stallings, hh0};
use crate::verify;

#[derive(Debug, Parser)]
#[command(name = "coalg", version, about = "Exact computations with finite-dimensional coalgebras, algebras and their (co)modules")]
struct Cli {
    /// Reinterpret input documents over this field (`q` or `fp:<p>`).
    #[arg(long, global = true, value_name = "FIELD")]
    field: Option<FieldSpec>,
    /// Write the primary output here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the axioms of a document. Idempotents need their (co)algebra.
    Check { file: PathBuf, context: Option<PathBuf> },
    /// Emit the dual structure.
    Dualize { file: PathBuf },
    /// Cocommutative elements of a coalgebra.
    Cohh0 { file: PathBuf },
    /// The commutator quotient of an algebra.
    Hh0 { file: PathBuf },
    /// Cotrace of the comodule presented by a colinear idempotent.
    Cotrace { coalgebra: PathBuf, idempotent: PathBuf },
    /// Trace of the projective module presented by an idempotent matrix.
    Trace { algebra: PathBuf, idempotent: PathBuf },
    /// Colinear character of a comodule, or character of a module.
    Character { file: PathBuf },
    /// Check that a diagram commutes: square, triangle or multiplicativity.
    Verify {
        diagram: String,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// The bundled example corpus.
    Examples {
        #[command(subcommand)]
        action: ExamplesAction,
    },
    /// Run every corpus check and print a summary.
    Report,
}

#[derive(Debug, Subcommand)]
enum ExamplesAction {
    List,
    /// Write one example (or `all`) into a directory.
    Emit { name: String, dir: PathBuf },
}

/// What a run produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// A command failure with its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::Schema(_) | Error::FieldMismatch(_) => EXIT_USAGE,
            _ => EXIT_FAILED,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

type Res<T> = std::result::Result<T, Failure>;

struct Ctx {
    field: Option<FieldSpec>,
}

impl Ctx {
    fn load(&self, path: &Path) -> Res<Document> {
        let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
        let doc = parse(&text).map_err(|e| {
            let f = Failure::from(e);
            usage(format!("{}: {}", path.display(), f.message))
        })?;
        match self.field {
            Some(f) => doc.reinterpret(f).map_err(|e| usage(format!("{}: {e}", path.display()))),
            None => Ok(doc),
        }
    }

    fn coalgebra(&self, path: &Path) -> Res<Coalgebra> {
        match self.load(path)? {
            Document::Coalgebra(c) => Ok(c),
            Document::Bialgebra(h) => Ok(h.coalg().clone()),
            other => Err(usage(format!("{}: expected a coalgebra, found a {}", path.display(), other.kind()))),
        }
    }

    fn algebra(&self, path: &Path) -> Res<Algebra> {
        match self.load(path)? {
            Document::Algebra(a) => Ok(a),
            Document::Bialgebra(h) => Ok(h.alg().clone()),
            other => Err(usage(format!("{}: expected an algebra, found a {}", path.display(), other.kind()))),
        }
    }
}

/// Labelled coordinates, e.g. `e = 1, g = 0`.
fn labelled(labels: &[String], v: &[crate::field::Scalar]) -> String {
    labels
        .iter()
        .zip(v)
        .map(|(l, x)| format!("{l} = {x}"))
        .collect::<Vec<_>>()
        .join(", ")
}

fn report_status(report: &ValidationReport, out: &mut String) -> i32 {
    let _ = writeln!(out, "{report}");
    if report.passed() {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

fn check(ctx: &Ctx, file: &Path, context: Option<&Path>, out: &mut String) -> Res<i32> {
    let doc = ctx.load(file)?;
    if context.is_some() && !matches!(doc, Document::Idempotent(_)) {
        return Err(usage("a second file is only used when checking an idempotent"));
    }
    let report = match &doc {
        Document::Algebra(a) => check_algebra(a),
        Document::Coalgebra(c) => check_coalgebra(c),
        Document::Bialgebra(h) => check_bialgebra_full(h),
        Document::Comodule(m) => check_comodule(m),
        Document::Module(m) => check_module(m),
        Document::Idempotent(e) => {
            let context = context.ok_or_else(|| usage("checking an idempotent needs its (co)algebra file"))?;
            let verdict = match e.form {
                IdempotentForm::Colinear => e.to_colinear()?.validate(&ctx.coalgebra(context)?),
                IdempotentForm::Algebra => {
                    let a = ctx.algebra(context)?;
                    let m = e.to_algebra_matrix(&a)?;
                    if m.square(&a) == m {
                        Ok(())
                    } else {
                        Err(Error::NotIdempotent("E·E ≠ E".into()))
                    }
                }
            };
            return Ok(match verdict {
                Ok(()) => {
                    let _ = writeln!(out, "idempotent of size {}\nok", e.n);
                    EXIT_OK
                }
                Err(err) => {
                    let _ = writeln!(out, "idempotent of size {}\n  FAIL  {err}\nfailed", e.n);
                    EXIT_FAILED
                }
            });
        }
    };
    Ok(report_status(&report, out))
}

fn dualize(ctx: &Ctx, file: &Path, out: &mut String) -> Res<i32> {
    let dual = match ctx.load(file)? {
        Document::Algebra(a) => Document::Coalgebra(dual_coalgebra(&a)?),
        Document::Coalgebra(c) => Document::Algebra(dual_algebra(&c)?),
        Document::Bialgebra(h) => Document::Bialgebra(dual_bialgebra(&h)?),
        Document::Comodule(m) => Document::Module(dual_comodule(&m)?),
        Document::Module(m) => {
            let c = dual_coalgebra(m.over())?;
            Document::Comodule(module_to_comodule(&m, &c)?)
        }
        Document::Idempotent(_) => return Err(usage("idempotents have no dual on their own")),
    };
    out.push_str(&emit(&dual));
    Ok(EXIT_OK)
}

fn run_command(cli: &Cli, out: &mut String) -> Res<i32> {
    let ctx = Ctx { field: cli.field };
    match &cli.command {
        Command::Check { file, context } => check(&ctx, file, context.as_deref(), out),
        Command::Dualize { file } => dualize(&ctx, file, out),
        Command::Cohh0 { file } => {
            let c = ctx.coalgebra(file)?;
            let k = cohh0(&c)?;
            let _ = writeln!(out, "dim {}", k.dim());
            let _ = writeln!(out, "basis in coordinates {}:", fmt_labels(c.labels()));
            for j in 0..k.dim() {
                let _ = writeln!(out, "  {}", fmt_vector(&k.inclusion.column(j)));
            }
            Ok(EXIT_OK)
        }
        Command::Hh0 { file } => {
            let a = ctx.algebra(file)?;
            let q = hh0(&a)?;
            let _ = writeln!(out, "dim {}", q.dim());
            let _ = writeln!(out, "representatives in coordinates {}:", fmt_labels(a.labels()));
            for j in 0..q.dim() {
                let _ = writeln!(out, "  {}", fmt_vector(&q.section.column(j)));
            }
            Ok(EXIT_OK)
        }
        Command::Cotrace { coalgebra, idempotent } => {
            let c = ctx.coalgebra(coalgebra)?;
            let Document::Idempotent(e) = ctx.load(idempotent)? else {
                return Err(usage(format!("{}: expected an idempotent", idempotent.display())));
            };
            let cotr = cotrace(&c, &e.to_colinear()?)?;
            let _ = writeln!(out, "on coHH0 basis: {}", fmt_vector(&cotr.restricted.coeffs));
            let _ = writeln!(out, "in C*: {}", labelled(&dual_labels(c.labels()), &cotr.ambient));
            Ok(EXIT_OK)
        }
        Command::Trace { algebra, idempotent } => {
            let a = ctx.algebra(algebra)?;
            let Document::Idempotent(e) = ctx.load(idempotent)? else {
                return Err(usage(format!("{}: expected an idempotent", idempotent.display())));
            };
            let tr = hattori_stallings(&a, &e.to_algebra_matrix(&a)?)?;
            let _ = writeln!(out, "in HH0 coordinates: {}", fmt_vector(&tr.coords));
            let _ = writeln!(out, "representative: {}", labelled(a.labels(), &tr.representative));
            Ok(EXIT_OK)
        }
        Command::Character { file } => {
            match ctx.load(file)? {
                Document::Comodule(m) => {
                    let chi = colinear_character(&m)?;
                    let _ = writeln!(out, "chi^c = {}", labelled(m.over().labels(), &chi));
                }
                Document::Module(m) => {
                    if m.side() != Side::Left {
                        return Err(usage("characters are computed for left modules"));
                    }
                    let chi = character_module(&m);
                    let _ = writeln!(out, "chi: {}", labelled(m.over().labels(), &chi.coeffs));
                }
                other => return Err(usage(format!("expected a comodule or module, found a {}", other.kind()))),
            }
            Ok(EXIT_OK)
        }
        Command::Verify { diagram, files } => {
            let v = verify::verifier(diagram).ok_or_else(|| {
                let names: Vec<&str> = verify::verifiers().iter().map(|v| v.name()).collect();
                usage(format!("unknown diagram {diagram:?}; expected one of {}", names.join(", ")))
            })?;
            let docs = files.iter().map(|f| ctx.load(f)).collect::<Res<Vec<_>>>()?;
            let report = v.run(&docs).map_err(|e| match e {
                Error::InvalidInput(m) => usage(m),
                other => other.into(),
            })?;
            let _ = writeln!(out, "{report}");
            Ok(if report.commutes() { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Examples { action } => examples(action, out),
        Command::Report => {
            let report = suite::run();
            let _ = writeln!(out, "{report}");
            Ok(if report.passed() { EXIT_OK } else { EXIT_FAILED })
        }
    }
}

fn fmt_labels(labels: &[String]) -> String {
    format!("({})", labels.join(", "))
}

fn dual_labels(labels: &[String]) -> Vec<String> {
    labels.iter().map(|l| format!("{l}*")).collect()
}

fn examples(action: &ExamplesAction, out: &mut String) -> Res<i32> {
    let entries = corpus::entries()?;
    match action {
        ExamplesAction::List => {
            let width = entries.iter().map(|e| e.file_name().len()).max().unwrap_or(0);
            for e in &entries {
                let _ = writeln!(out, "{:<width$}  {:<10}  {}", e.file_name(), e.document.kind(), e.summary);
            }
        }
        ExamplesAction::Emit { name, dir } => {
            let chosen: Vec<_> = entries
                .iter()
                .filter(|e| name == "all" || e.name == *name || e.file_name() == *name)
                .collect();
            if chosen.is_empty() {
                return Err(usage(format!("no example named {name:?}")));
            }
            fs::create_dir_all(dir).map_err(|e| usage(format!("{}: {e}", dir.display())))?;
            for e in chosen {
                let path = dir.join(e.file_name());
                fs::write(&path, emit(&e.document)).map_err(|err| usage(format!("{}: {err}", path.display())))?;
                let _ = writeln!(out, "wrote {}", path.display());
            }
        }
    }
    Ok(EXIT_OK)
}

pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Output {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let mut out = String::new();
    match run_command(&cli, &mut out) {
        Ok(code) => match &cli.out {
            Some(path) => match fs::write(path, &out) {
                Ok(()) => Output {
                    code,
                    stdout: String::new(),
                    stderr: String::new(),
                },
                Err(e) => Output {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: format!("error: {}: {e}\n", path.display()),
                },
            },
            None => Output {
                code,
                stdout: out,
                stderr: String::new(),
            },
        },
        Err(f) => Output {
            code: f.code,
            stdout: out,
            stderr: format!("error: {}\n", f.message),
        },
    }
}
