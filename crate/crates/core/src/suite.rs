//! The corpus-wide check suite behind `coalg report`. Each check is a
//! registered strategy; the report lists them in registration order.

use std::fmt;

use crate::comodmod::{
    cofree_comodule, comodule_to_module, cotensor, direct_sum_comodules, injective_retract, is_colinear,
    left_regular_comodule, module_to_comodule, restrict_to_subcomodule, tensor_comodules, trivial_comodule,
    check_comodule, ColinearIdempotent, Comodule, Injectivity,
};
use crate::constructions::{matrix_algebra, nilpotent_comodule, truncated_polynomial_algebra, FiniteMonoidTable};
use crate::corpus;
use crate::error::Error;
use crate::exactla::Matrix;
use crate::field::FieldSpec;
use crate::format::{emit, parse};
use crate::structures::{
    check_algebra, check_bialgebra, check_bialgebra_full, check_coalgebra, dual_algebra, dual_coalgebra, Algebra,
    Bialgebra,
};
use crate::traces::{
    cohh0, colinear_character, comparison_pairing, cotrace, hattori_stallings, hh0, verify_character_multiplicativity,
    verify_character_triangle, verify_trace_square, AlgebraMatrix,
};

/// Cases run by one check and the ones that failed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub cases: usize,
    pub failures: Vec<String>,
}

impl Outcome {
    fn case(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn result<T>(&mut self, r: crate::Result<T>, what: &str) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.cases += 1;
                self.failures.push(format!("{what}: {e}"));
                None
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub trait SuiteCheck {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn run(&self) -> Outcome;
}

struct Axioms;

impl SuiteCheck for Axioms {
    fn name(&self) -> &'static str {
        "axioms"
    }

    fn description(&self) -> &'static str {
        "corpus constructions satisfy their axioms; mutations fail with a witness"
    }

    fn run(&self) -> Outcome {
        let mut out = Outcome::default();
        for (name, h) in corpus::bialgebras() {
            out.case(check_bialgebra_full(&h).passed(), || format!("{name} fails its axioms"));
        }
        for (name, n, f, h) in corpus::divided_powers() {
            out.case(check_coalgebra(h.coalg()).passed(), || format!("{name} coalgebra"));
            out.case(check_algebra(h.alg()).passed(), || format!("{name} algebra"));
            let expected = corpus::divided_power_is_bialgebra(n, f);
            out.case(check_bialgebra(&h).passed() == expected, || {
                format!("{name}: bialgebra compatibility should be {expected}")
            });
        }
        for (name, c) in corpus::coalgebras() {
            out.case(check_coalgebra(&c).passed(), || format!("{name} coalgebra"));
        }
        for (name, m) in corpus::comodules() {
            out.case(check_comodule(&m).passed(), || format!("{name} comodule"));
        }
        for (name, h) in corpus::mutations() {
            let report = check_bialgebra_full(&h);
            let witnessed = !report.passed() && report.failures().all(|r| r.witness.is_some());
            out.case(witnessed, || format!("mutation {name} was not detected"));
        }
        out
    }
}

struct Duality;

impl SuiteCheck for Duality {
    fn name(&self) -> &'static str {
        "duality"
    }

    fn description(&self) -> &'static str {
        "dualizing twice is the identity on algebras and coalgebras"
    }

    fn run(&self) -> Outcome {
        let mut out = Outcome::default();
        for (name, c) in corpus::coalgebras() {
            let back = dual_algebra(&c).and_then(|a| dual_coalgebra(&a));
            out.case(back.as_ref() == Ok(&c), || format!("{name}: C** differs from C"));
        }
        let mut algebras: Vec<(String, Algebra)> =
            corpus::bialgebras().into_iter().map(|(n, h)| (n, h.alg().clone())).collect();
        for n in 1..=corpus::MAX_COMATRIX {
            algebras.push((format!("m{n}"), matrix_algebra(n, FieldSpec::Rationals).expect("n >= 1")));
        }
        for f in corpus::fields() {
            for n in 0..=corpus::MAX_DIVIDED_POWER {
                algebras.push((format!("poly{n}/{f}"), truncated_polynomial_algebra(n, f)));
            }
        }
        for (name, a) in algebras {
            let back = dual_coalgebra(&a).and_then(|c| dual_algebra(&c));
            out.case(back.as_ref() == Ok(&a), || format!("{name}: A** differs from A"));
        }
        out
    }
}

/// Order of `a` in a finite group table.
fn element_order(t: &FiniteMonoidTable, a: usize) -> usize {
    let mut x = a;
    let mut k = 1;
    while x != t.identity() {
        x = t.mul(x, a);
        k += 1;
    }
    k
}

struct HomologyDimensions;

impl SuiteCheck for HomologyDimensions {
    fn name(&self) -> &'static str {
        "homology-dimensions"
    }

    fn description(&self) -> &'static str {
        "dim coHH0(C) = dim HH0(C*), the pairing is invertible, groups count classes"
    }

    fn run(&self) -> Outcome {
        let mut out = Outcome::default();
        for (name, c) in corpus::coalgebras() {
            let Some(k) = out.result(cohh0(&c), &name) else { continue };
            let Some(q) = out.result(dual_algebra(&c).and_then(|a| hh0(&a)), &name) else { continue };
            out.case(k.dim() == q.dim(), || format!("{name}: coHH0 {} vs HH0(C*) {}", k.dim(), q.dim()));
            let Some(p) = out.result(comparison_pairing(&c), &name) else { continue };
            out.case(p.inverse().is_some(), || format!("{name}: pairing is not invertible"));
        }
        for (g, t) in corpus::groups() {
            let classes = t.conjugacy_classes().len();
            let name = format!("fun-{g}");
            let c = corpus::coalgebras().into_iter().find(|(n, _)| *n == name).expect("corpus").1;
            let dim = cohh0(&c).map(|k| k.dim());
            out.case(dim == Ok(classes), || format!("{name}: expected {classes} classes"));
        }
        out
    }
}

struct TraceSquare;

impl SuiteCheck for TraceSquare {
    fn name(&self) -> &'static str {
        "trace-square"
    }

    fn description(&self) -> &'static str {
        "pairing(tr(M*)) = cotr(M) for identities and injective retracts"
    }

    fn run(&self) -> Outcome {
        let mut out = Outcome::default();
        for (name, c) in corpus::coalgebras() {
            for n in 0..=3 {
                let what = format!("{name}, identity on C^{n}");
                if let Some(r) = out.result(verify_trace_square(&c, &ColinearIdempotent::identity(&c, n)), &what) {
                    out.case(r.commutes(), || what.clone());
                }
            }
        }
        for (name, m) in corpus::comodules() {
            let Some(inj) = out.result(injective_retract(&m), &name) else { continue };
            if let Injectivity::Retract(e) = inj {
                let what = format!("{name}, retract");
                if let Some(r) = out.result(verify_trace_square(m.over(), &e), &what) {
                    out.case(r.commutes(), || what.clone());
                }
            }
        }
        out
    }
}

struct CharacterTriangle;

impl SuiteCheck for CharacterTriangle {
    fn name(&self) -> &'static str {
        "character-triangle"
    }

    fn description(&self) -> &'static str {
        "f(chi^c(V)) = chi(V)(f) for every corpus comodule; S3 character values"
    }

    fn run(&self) -> Outcome {
        let mut out = Outcome::default();
        for (name, m) in corpus::comodules() {
            if let Some(r) = out.result(verify_character_triangle(m.over(), &m), &name) {
                out.case(r.commutes(), || name.clone());
            }
        }
        let s3 = FiniteMonoidTable::symmetric3();
        // Values on the classes of elements of order 1, 2, 3.
        let expected = [("perm", [3, 1, 0]), ("std", [2, 0, -1])];
        for (rep, values) in expected {
            let name = format!("fun-s3-{rep}");
            let m = corpus::comodules().into_iter().find(|(n, _)| *n == name).expect("corpus").1;
            let Some(chi) = out.result(colinear_character(&m), &name) else { continue };
            for g in 0..s3.size() {
                let want = FieldSpec::Rationals.from_i64(values[element_order(&s3, g) - 1]);
                out.case(chi[g] == want, || format!("{name} at {}: {} != {want}", s3.labels()[g], chi[g]));
            }
        }
        out
    }
}

/// Nilpotent matrices of size `1..=4`: every Jordan type, plus a conjugate
/// by a fixed unipotent matrix.
fn nilpotent_samples(field: FieldSpec) -> Vec<Matrix> {
    fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for first in (1..=n.min(max)).rev() {
            for mut rest in partitions(n - first, first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }
    let mut out = Vec::new();
    for size in 1..=4 {
        let p = Matrix::from_fn(size, size, field, |r, c| if r <= c { field.one() } else { field.zero() });
        let p_inv = p.inverse().expect("unipotent");
        for parts in partitions(size, size) {
            let j = parts
                .iter()
                .map(|&k| crate::constructions::jordan_block(k, field))
                .reduce(|a, b| a.direct_sum(&b))
                .expect("nonempty partition");
            out.push(&(&p * &j) * &p_inv);
            out.push(j);
        }
    }
    out
}

fn nilpotency_order(phi: &Matrix) -> usize {
    (0..=phi.rows()).find(|&k| phi.pow(k as u32).is_zero()).expect("nilpotent")
}

struct NilpotentRoundTrip;

impl SuiteCheck for NilpotentRoundTrip {
    fn name(&self) -> &'static str {
        "nilpotent-round-trip"
    }

    fn description(&self) -> &'static str {
        "comodule -> module -> comodule is the identity and y acts as phi"
    }

    fn run(&self) -> Outcome {
        let mut out = Outcome::default();
        for f in [FieldSpec::Rationals, FieldSpec::Prime(2)] {
            for phi in nilpotent_samples(f) {
                let k = nilpotency_order(&phi);
                let mut truncations = vec![k.saturating_sub(1), phi.rows()];
                truncations.dedup();
                for n in truncations {
                    let what = format!("phi of size {} and order {k} over {f}, N = {n}", phi.rows());
                    let Some(m) = out.result(nilpotent_comodule(&phi, n, f), &what) else { continue };
                    let Some(module) = out.result(comodule_to_module(&m), &what) else { continue };
                    let Some(back) = out.result(module_to_comodule(&module, m.over()), &what) else { continue };
                    out.case(back.coaction() == m.coaction(), || format!("{what}: coaction changed"));
                    if n >= 1 {
                        out.case(module.action_of(1) == phi, || format!("{what}: y does not act as phi"));
                    }
                }
                if k >= 2 {
                    let short = nilpotent_comodule(&phi, k - 2, f);
                    out.case(matches!(short, Err(Error::NotNilpotentEnough { .. })), || {
                        format!("truncation N = {} accepted for order {k}", k - 2)
                    });
                }
            }
        }
        out
    }
}

struct PowerSeriesDuality;

impl SuiteCheck for PowerSeriesDuality {
    fn name(&self) -> &'static str {
        "power-series-duality"
    }

    fn description(&self) -> &'static str {
        "divided powers dualize to truncated polynomials; cotrace meets trace"
    }

    fn run(&self) -> Outcome {
        let mut out = Outcome::default();
        for (name, n, f, h) in corpus::divided_powers() {
            let dual = dual_algebra(h.coalg());
            out.case(dual == Ok(truncated_polynomial_algebra(n, f)), || format!("{name}: dual differs"));
            let Some(a) = out.result(dual, &name) else { continue };
            let Some(pairing) = out.result(comparison_pairing(h.coalg()), &name) else { continue };
            for copies in 0..=3 {
                let what = format!("{name}, {copies} copies");
                let Some(cotr) = out.result(cotrace(h.coalg(), &ColinearIdempotent::identity(h.coalg(), copies)), &what)
                else {
                    continue;
                };
                let Some(tr) = out.result(hattori_stallings(&a, &AlgebraMatrix::identity(&a, copies)), &what) else {
                    continue;
                };
                out.case(pairing.apply(&tr.coords) == cotr.restricted.coeffs, || what.clone());
            }
        }
        out
    }
}

fn comodules_over(h: &Bialgebra) -> Vec<(String, Comodule)> {
    corpus::comodules().into_iter().filter(|(_, m)| m.over() == h.coalg()).collect()
}

struct MonoidalLaws;

impl MonoidalLaws {
    fn small_comodules(h: &Bialgebra) -> Vec<(String, Comodule)> {
        let mut base: Vec<(String, Comodule)> = comodules_over(h).into_iter().filter(|(_, m)| m.dim() <= 2).collect();
        let lines: Vec<(String, Comodule)> = base.iter().filter(|(_, m)| m.dim() == 1).cloned().collect();
        for (i, (a, ma)) in lines.iter().enumerate() {
            for (b, mb) in &lines[i..] {
                base.push((format!("{a}+{b}"), direct_sum_comodules(ma, mb).expect("same coalgebra")));
            }
        }
        base
    }
}

impl SuiteCheck for MonoidalLaws {
    fn name(&self) -> &'static str {
        "monoidal-laws"
    }

    fn description(&self) -> &'static str {
        "tensor unit and associativity; chi^c is multiplicative"
    }

    fn run(&self) -> Outcome {
        let mut out = Outcome::default();
        for (hname, h) in corpus::bialgebras() {
            let unit = trivial_comodule(&h);
            let small: Vec<(String, Comodule)> = comodules_over(&h).into_iter().filter(|(_, m)| m.dim() <= 3).collect();
            for (name, v) in &small {
                let left = tensor_comodules(&unit, v, &h);
                let right = tensor_comodules(v, &unit, &h);
                out.case(left.as_ref() == Ok(v), || format!("{hname}: 1 (x) {name}"));
                out.case(right.as_ref() == Ok(v), || format!("{hname}: {name} (x) 1"));
            }
            for (a, u) in &small {
                for (b, v) in &small {
                    for (c, w) in &small {
                        if u.dim() * v.dim() * w.dim() > 8 {
                            continue;
                        }
                        let lhs = tensor_comodules(u, v, &h).and_then(|uv| tensor_comodules(&uv, w, &h));
                        let rhs = tensor_comodules(v, w, &h).and_then(|vw| tensor_comodules(u, &vw, &h));
                        out.case(lhs.is_ok() && lhs == rhs, || format!("{hname}: ({a} (x) {b}) (x) {c}"));
                    }
                }
            }
        }
        for hname in ["fun-c2", "fun-s3"] {
            let h = corpus::bialgebras().into_iter().find(|(n, _)| n == hname).expect("corpus").1;
            let small = Self::small_comodules(&h);
            for (a, v) in &small {
                for (b, w) in &small {
                    let what = format!("{hname}: chi^c({a} (x) {b})");
                    if let Some(r) = out.result(verify_character_multiplicativity(&h, v, w), &what) {
                        out.case(r.commutes(), || what.clone());
                    }
                }
            }
        }
        out
    }
}

struct CotensorUnit;

impl SuiteCheck for CotensorUnit {
    fn name(&self) -> &'static str {
        "cotensor-unit"
    }

    fn description(&self) -> &'static str {
        "M (box) C is isomorphic to M through the coaction"
    }

    fn run(&self) -> Outcome {
        let mut out = Outcome::default();
        for (name, m) in corpus::comodules() {
            let c = m.over();
            let Some(ct) = out.result(cotensor(&m, &left_regular_comodule(c)), &name) else { continue };
            out.case(ct.dim() == m.dim(), || format!("{name}: dim {} vs {}", ct.dim(), m.dim()));
            let iso = ct.inclusion.solve(m.coaction()).filter(|x| x.inverse().is_some());
            let Some(iso) = iso else {
                out.case(false, || format!("{name}: coaction does not map onto M (box) C"));
                continue;
            };
            let Some(sub) = out.result(restrict_to_subcomodule(&cofree_comodule(c, m.dim()), &ct.inclusion), &name)
            else {
                continue;
            };
            out.case(is_colinear(&iso, &m, &sub), || format!("{name}: isomorphism is not colinear"));
        }
        out
    }
}

struct CanonicalFiles;

impl SuiteCheck for CanonicalFiles {
    fn name(&self) -> &'static str {
        "canonical-files"
    }

    fn description(&self) -> &'static str {
        "every corpus file parses back to itself and re-emits byte-identically"
    }

    fn run(&self) -> Outcome {
        let mut out = Outcome::default();
        let Some(entries) = out.result(corpus::entries(), "corpus") else { return out };
        for e in entries {
            let text = emit(&e.document);
            let back = parse(&text);
            out.case(back.as_ref() == Ok(&e.document), || format!("{}: parse differs", e.file_name()));
            out.case(back.map(|d| emit(&d)) == Ok(text), || format!("{}: emission differs", e.file_name()));
        }
        out
    }
}

pub fn checks() -> Vec<Box<dyn SuiteCheck>> {
    vec![
        Box::new(Axioms),
        Box::new(Duality),
        Box::new(HomologyDimensions),
        Box::new(TraceSquare),
        Box::new(CharacterTriangle),
        Box::new(NilpotentRoundTrip),
        Box::new(PowerSeriesDuality),
        Box::new(MonoidalLaws),
        Box::new(CotensorUnit),
        Box::new(CanonicalFiles),
    ]
}

pub struct SuiteReport {
    pub rows: Vec<(&'static str, &'static str, Outcome)>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|(_, _, o)| o.passed())
    }
}

/// How many failures of one check are printed.
const SHOWN_FAILURES: usize = 5;

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:<22} {:>6}  {:<6} description", "check", "cases", "result")?;
        let mut total = 0;
        for (name, description, o) in &self.rows {
            total += o.cases;
            let result = if o.passed() { "pass" } else { "FAIL" };
            writeln!(f, "{name:<22} {:>6}  {result:<6} {description}", o.cases)?;
            for failure in o.failures.iter().take(SHOWN_FAILURES) {
                writeln!(f, "    {failure}")?;
            }
            if o.failures.len() > SHOWN_FAILURES {
                writeln!(f, "    ... and {} more", o.failures.len() - SHOWN_FAILURES)?;
            }
        }
        let failed = self.rows.iter().filter(|(_, _, o)| !o.passed()).count();
        write!(
            f,
            "{total} cases in {} checks: {}",
            self.rows.len(),
            if failed == 0 { "all passed".to_string() } else { format!("{failed} failed") }
        )
    }
}

pub fn run() -> SuiteReport {
    SuiteReport {
        rows: checks().iter().map(|c| (c.name(), c.description(), c.run())).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registration_order_is_fixed() {
        let names: Vec<&str> = checks().iter().map(|c| c.name()).collect();
        assert_eq!(
            names,
            [
                "axioms",
                "duality",
                "homology-dimensions",
                "trace-square",
                "character-triangle",
                "nilpotent-round-trip",
                "power-series-duality",
                "monoidal-laws",
                "cotensor-unit",
                "canonical-files"
            ]
        );
    }

    #[test]
    fn outcome_bookkeeping() {
        let mut o = Outcome::default();
        o.case(true, || unreachable!());
        o.case(false, || "broken".into());
        assert_eq!(o.result::<()>(Err(Error::Schema("x".into())), "doc"), None);
        assert_eq!(o.cases, 3);
        assert_eq!(o.failures, ["broken", "doc: schema error: x"]);
    }

    #[test]
    fn nilpotent_samples_cover_jordan_types() {
        // 1 + 2 + 3 + 5 partitions, each with a conjugate.
        assert_eq!(nilpotent_samples(FieldSpec::Rationals).len(), 22);
        assert!(nilpotent_samples(FieldSpec::Prime(2)).iter().all(|m| m.pow(m.rows() as u32).is_zero()));
    }
}
