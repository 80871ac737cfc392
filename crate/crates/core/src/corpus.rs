//! The bundled example corpus: named documents that `examples emit` writes
//! to disk, and the parameter families the report suite sweeps over.

use crate::comodmod::{
    cofree_comodule, comodule_to_module, injective_retract, trivial_comodule, ColinearIdempotent, Comodule,
    Injectivity,
};
use crate::constructions::*;
use crate::error::Result;
use crate::exactla::Matrix;
use crate::field::FieldSpec;
use crate::format::{Document, IdempotentDoc};
use crate::structures::{Bialgebra, Coalgebra};
use crate::traces::AlgebraMatrix;

const Q: FieldSpec = FieldSpec::Rationals;

pub fn fields() -> Vec<FieldSpec> {
    vec![Q, FieldSpec::Prime(2), FieldSpec::Prime(3)]
}

fn field_suffix(f: FieldSpec) -> String {
    match f {
        FieldSpec::Rationals => String::new(),
        FieldSpec::Prime(p) => format!("-fp{p}"),
    }
}

pub fn groups() -> Vec<(&'static str, FiniteMonoidTable)> {
    vec![
        ("c2", FiniteMonoidTable::cyclic(2)),
        ("c3", FiniteMonoidTable::cyclic(3)),
        ("c4", FiniteMonoidTable::cyclic(4)),
        ("c2xc2", FiniteMonoidTable::klein_four()),
        ("s3", FiniteMonoidTable::symmetric3()),
        ("d4", FiniteMonoidTable::dihedral4()),
    ]
}

pub const MAX_DIVIDED_POWER: usize = 8;
pub const MAX_COMATRIX: usize = 3;

/// Whether the truncation at `n` is compatible with multiplication.
pub fn divided_power_is_bialgebra(n: usize, field: FieldSpec) -> bool {
    if n == 0 {
        return true;
    }
    let p = field.characteristic() as usize;
    if p == 0 {
        return false;
    }
    let mut q = n + 1;
    while q.is_multiple_of(p) {
        q /= p;
    }
    q == 1
}

pub fn divided_powers() -> Vec<(String, usize, FieldSpec, Bialgebra)> {
    let mut out = Vec::new();
    for f in fields() {
        for n in 0..=MAX_DIVIDED_POWER {
            out.push((format!("divpow{n}{}", field_suffix(f)), n, f, divided_power_truncation(n, f)));
        }
    }
    out
}

/// Group and function bialgebras over ℚ plus the compatible divided-power
/// truncations.
pub fn bialgebras() -> Vec<(String, Bialgebra)> {
    let mut out = Vec::new();
    for (g, t) in groups() {
        out.push((format!("group-{g}"), monoid_bialgebra(&t, Q)));
        out.push((format!("fun-{g}"), function_bialgebra(&t, Q)));
    }
    for (name, n, f, h) in divided_powers() {
        if divided_power_is_bialgebra(n, f) {
            out.push((name, h));
        }
    }
    out
}

/// Every coalgebra in the corpus.
pub fn coalgebras() -> Vec<(String, Coalgebra)> {
    let mut out = Vec::new();
    for (g, t) in groups() {
        out.push((format!("group-{g}"), monoid_bialgebra(&t, Q).coalg().clone()));
        out.push((format!("fun-{g}"), function_bialgebra(&t, Q).coalg().clone()));
    }
    for (name, _, _, h) in divided_powers() {
        out.push((name, h.coalg().clone()));
    }
    for n in 1..=MAX_COMATRIX {
        out.push((format!("comatrix{n}"), comatrix_coalgebra(n, Q).expect("n >= 1")));
    }
    out
}

/// Finite-dimensional comodules over corpus coalgebras, grouped by the
/// coalgebra's corpus name.
pub fn comodules() -> Vec<(String, Comodule)> {
    let mut out = Vec::new();
    for (g, t) in groups() {
        let fun = function_bialgebra(&t, Q);
        out.push((format!("fun-{g}-regular"), cofree_comodule(fun.coalg(), 1)));
        out.push((format!("fun-{g}-trivial"), trivial_comodule(&fun)));
        for (name, rep) in representations(g, &t) {
            out.push((format!("fun-{g}-{name}"), permutation_comodule(&t, &rep, Q).expect("representation")));
        }
        let group = monoid_bialgebra(&t, Q);
        out.push((format!("group-{g}-regular"), cofree_comodule(group.coalg(), 1)));
        out.push((format!("group-{g}-trivial"), trivial_comodule(&group)));
    }
    for f in [Q, FieldSpec::Prime(2)] {
        for n in [2, 3] {
            let c = divided_power_truncation(n, f).coalg().clone();
            let base = format!("divpow{n}{}", field_suffix(f));
            out.push((format!("{base}-regular"), cofree_comodule(&c, 1)));
            for k in 1..=n + 1 {
                out.push((
                    format!("{base}-jordan{k}"),
                    nilpotent_comodule(&jordan_block(k, f), n, f).expect("Jordan block of size <= N+1"),
                ));
            }
        }
    }
    for n in 1..=MAX_COMATRIX {
        let c = comatrix_coalgebra(n, Q).expect("n >= 1");
        out.push((format!("comatrix{n}-regular"), cofree_comodule(&c, 1)));
        out.push((format!("comatrix{n}-natural"), comatrix_natural_comodule(n, Q).expect("n >= 1")));
    }
    out
}

/// Named representations used to build comodules over `Map(Γ, ℚ)`.
pub fn representations(group: &str, t: &FiniteMonoidTable) -> Vec<(&'static str, Vec<Matrix>)> {
    match group {
        "c2" => vec![("sign", scalar_representation(&[1, -1], Q))],
        "s3" => vec![
            ("perm", natural_representation(t, Q).expect("S3 permutations")),
            ("std", standard_representation_s3(t, Q).expect("S3")),
            ("sign", sign_representation(t, Q).expect("S3 permutations")),
        ],
        "d4" => vec![("perm", natural_representation(t, Q).expect("D4 permutations"))],
        _ => Vec::new(),
    }
}

/// Bialgebras with exactly one structure constant perturbed: the first
/// nonzero entry of `μ`, `η`, `Δ` or `ε` is increased by one.
pub fn mutations() -> Vec<(String, Bialgebra)> {
    let bases = [
        ("group-c2", monoid_bialgebra(&FiniteMonoidTable::cyclic(2), Q)),
        ("fun-c3", function_bialgebra(&FiniteMonoidTable::cyclic(3), Q)),
        ("group-s3", monoid_bialgebra(&FiniteMonoidTable::symmetric3(), Q)),
        ("fun-s3", function_bialgebra(&FiniteMonoidTable::symmetric3(), Q)),
        ("divpow3-fp2", divided_power_truncation(3, FieldSpec::Prime(2))),
    ];
    let bump = |m: &Matrix| {
        let mut m = m.clone();
        let k = m.entries().iter().position(|x| !x.is_zero()).expect("nonzero map");
        let (r, c) = (k / m.cols(), k % m.cols());
        let v = m.get(r, c) + &m.field().one();
        m.set(r, c, v);
        m
    };
    let mut out = Vec::new();
    for (name, h) in bases {
        let (a, c, s) = (h.alg(), h.coalg(), h.antipode().cloned());
        let rebuild = |mul: Matrix, unit: Matrix, comul: Matrix, counit: Matrix| {
            Bialgebra::new(
                crate::structures::Algebra::new(mul, unit, h.labels().to_vec()).expect("shapes"),
                Coalgebra::new(comul, counit, h.labels().to_vec()).expect("shapes"),
                s.clone(),
            )
            .expect("shapes")
        };
        let (mu, eta, delta, eps) = (a.mul(), a.unit(), c.comul(), c.counit());
        out.push((format!("{name}/mul"), rebuild(bump(mu), eta.clone(), delta.clone(), eps.clone())));
        out.push((format!("{name}/unit"), rebuild(mu.clone(), bump(eta), delta.clone(), eps.clone())));
        out.push((format!("{name}/comul"), rebuild(mu.clone(), eta.clone(), bump(delta), eps.clone())));
        out.push((format!("{name}/counit"), rebuild(mu.clone(), eta.clone(), delta.clone(), bump(eps))));
    }
    out
}

/// A named corpus file.
#[derive(Clone, Debug)]
pub struct Entry {
    pub name: String,
    pub document: Document,
    pub summary: &'static str,
}

impl Entry {
    pub fn file_name(&self) -> String {
        format!("{}.{}", self.name, self.document.extension())
    }
}

/// `Δ(X^[2])` picks up a stray `X^[1] ⊗ X^[2]`: counital but not
/// coassociative.
fn broken_coassoc() -> Coalgebra {
    let c = divided_power_truncation(2, Q).coalg().clone();
    let mut comul = c.comul().clone();
    comul.set(5, 2, Q.one());
    Coalgebra::new(comul, c.counit().clone(), c.labels().to_vec()).expect("shapes")
}

fn retract_of(m: &Comodule) -> Result<ColinearIdempotent> {
    match injective_retract(m)? {
        Injectivity::Retract(e) => Ok(e),
        Injectivity::NotInjective => Err(crate::Error::InvalidInput("corpus comodule is not injective".into())),
    }
}

/// The named documents, sorted by file name.
pub fn entries() -> Result<Vec<Entry>> {
    let s3 = FiniteMonoidTable::symmetric3();
    let c2 = FiniteMonoidTable::cyclic(2);
    let divpow2 = divided_power_truncation(2, Q);
    let fun_s3 = function_bialgebra(&s3, Q);
    let group_c2 = monoid_bialgebra(&c2, Q);
    let std = permutation_comodule(&s3, &standard_representation_s3(&s3, Q)?, Q)?;
    let half = Q.ratio(1, 2);
    let e = AlgebraMatrix::new(
        2,
        vec![vec![half.clone(), half], vec![Q.zero(); 2], vec![Q.zero(); 2], vec![Q.zero(); 2]],
    )?;
    let m2 = matrix_algebra(2, Q)?;

    let mut out = vec![
        ("divpow2", Document::Coalgebra(divpow2.coalg().clone()), "divided powers X^[0..=2] over Q"),
        (
            "divpow2-id",
            Document::Idempotent(IdempotentDoc::colinear(&ColinearIdempotent::identity(divpow2.coalg(), 1))),
            "identity on one copy of divpow2",
        ),
        (
            "divpow2-jordan3",
            Document::Comodule(nilpotent_comodule(&jordan_block(3, Q), 2, Q)?),
            "3x3 Jordan block as a divpow2 comodule",
        ),
        ("divpow3-fp2", Document::Bialgebra(divided_power_truncation(3, FieldSpec::Prime(2))), "divided powers X^[0..=3] over F_2"),
        ("broken-coassoc", Document::Coalgebra(broken_coassoc()), "divpow2 with a perturbed comultiplication"),
        ("comatrix2", Document::Coalgebra(comatrix_coalgebra(2, Q)?), "comatrix coalgebra on e00..e11"),
        ("m2", Document::Algebra(m2), "2x2 matrices over Q"),
        ("fun-c2", Document::Bialgebra(function_bialgebra(&c2, Q)), "functions on C2"),
        (
            "fun-c2-regular",
            Document::Comodule(permutation_comodule(&c2, &regular_representation(&c2, Q), Q)?),
            "regular representation of C2",
        ),
        (
            "fun-c2-sign",
            Document::Comodule(permutation_comodule(&c2, &scalar_representation(&[1, -1], Q), Q)?),
            "sign representation of C2",
        ),
        ("fun-s3", Document::Bialgebra(fun_s3.clone()), "functions on S3"),
        ("fun-s3", Document::Coalgebra(fun_s3.coalg().clone()), "functions on S3, coalgebra only"),
        (
            "fun-s3-perm",
            Document::Comodule(permutation_comodule(&s3, &natural_representation(&s3, Q)?, Q)?),
            "S3 permuting three points",
        ),
        ("fun-s3-std", Document::Comodule(std.clone()), "standard representation of S3"),
        (
            "fun-s3-std-retract",
            Document::Idempotent(IdempotentDoc::colinear(&retract_of(&std)?)),
            "idempotent splitting fun-s3-std off a cofree comodule",
        ),
        (
            "fun-s3-sign",
            Document::Comodule(permutation_comodule(&s3, &sign_representation(&s3, Q)?, Q)?),
            "sign representation of S3",
        ),
        ("group-c2", Document::Bialgebra(group_c2.clone()), "group algebra of C2"),
        ("group-c2-half", Document::Idempotent(IdempotentDoc::algebra(group_c2.alg(), &e)), "diag((1+g)/2, 0) over QC2"),
        (
            "group-c2-regular",
            Document::Module(comodule_to_module(&permutation_comodule(&c2, &regular_representation(&c2, Q), Q)?)?),
            "regular C2 representation as a module over QC2",
        ),
        ("group-s3", Document::Algebra(monoid_bialgebra(&s3, Q).alg().clone()), "group algebra of S3"),
    ]
    .into_iter()
    .map(|(name, document, summary)| Entry {
        name: name.to_string(),
        document,
        summary,
    })
    .collect::<Vec<_>>();
    out.sort_by_key(Entry::file_name);
    Ok(out)
}
