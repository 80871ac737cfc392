//! Zeroth Hochschild and coHochschild homology, traces, cotraces and
//! characters, and the checks that relate them.

use crate::comodmod::{comodule_to_module, tensor_comodules, ColinearIdempotent, Comodule, Module, Side};
use crate::error::{Error, Result};
use crate::exactla::{swap_map, Matrix};
use crate::field::Scalar;
use crate::report::DiagramReport;
use crate::structures::{check_algebra, check_coalgebra, dual_algebra, Algebra, Bialgebra, Coalgebra};

/// `HH₀(A) = A / [A, A]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientPresentation {
    /// `dim HH₀ × dim A`.
    pub projection: Matrix,
    /// `dim A × dim HH₀`: standard basis vectors at the non-pivot columns of
    /// the row-reduced commutator span.
    pub section: Matrix,
}

impl QuotientPresentation {
    pub fn dim(&self) -> usize {
        self.projection.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.projection.cols()
    }

    pub fn class_of(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.projection.apply(v)
    }
}

/// `coHH₀(C) = ker(Δ − τΔ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspacePresentation {
    /// `dim C × dim coHH₀`, full column rank.
    pub inclusion: Matrix,
}

impl SubspacePresentation {
    pub fn dim(&self) -> usize {
        self.inclusion.cols()
    }

    pub fn ambient_dim(&self) -> usize {
        self.inclusion.rows()
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let basis = &self.inclusion;
        basis.solve(&Matrix::column_vector(basis.field(), v)).is_some()
    }
}

/// A linear functional, as its values on a chosen basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Functional {
    pub coeffs: Vec<Scalar>,
}

impl Functional {
    pub fn over(&self) -> usize {
        self.coeffs.len()
    }
}

/// Spanning columns `b_i b_j − b_j b_i` for `i < j`.
pub fn commutator_span(a: &Algebra) -> Matrix {
    let d = a.dim();
    let f = a.field();
    let mut cols = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            let col: Vec<Scalar> = (0..d)
                .map(|k| a.mul().get(k, i * d + j) - a.mul().get(k, j * d + i))
                .collect();
            if col.iter().any(|x| !x.is_zero()) {
                cols.push(col);
            }
        }
    }
    let _ = f;
    Matrix::from_columns(a.field(), d, &cols)
}

pub fn hh0(a: &Algebra) -> Result<QuotientPresentation> {
    let report = check_algebra(a);
    if !report.passed() {
        return Err(Error::InvalidInput(format!("algebra fails its axioms:\n{report}")));
    }
    let d = a.dim();
    let f = a.field();
    let rref = commutator_span(a).transpose().rref();
    let mut is_pivot = vec![false; d];
    for &p in &rref.pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..d).filter(|&q| !is_pivot[q]).collect();
    // v ↦ v − Σ_k v_{p_k} R_k kills the pivot coordinates; what remains at the
    // free coordinates is the class of v.
    let mut projection = Matrix::zeros(free.len(), d, f);
    for (idx, &q) in free.iter().enumerate() {
        projection.set(idx, q, f.one());
        for (k, &p) in rref.pivots.iter().enumerate() {
            projection.set(idx, p, -rref.reduced.get(k, q));
        }
    }
    let section = Matrix::identity(d, f).select_columns(&free);
    Ok(QuotientPresentation { projection, section })
}

/// `Δ − τ∘Δ`.
pub fn cocommutator(c: &Coalgebra) -> Matrix {
    let d = c.dim();
    c.comul() - &(&swap_map(d, d, c.field()) * c.comul())
}

pub fn cohh0(c: &Coalgebra) -> Result<SubspacePresentation> {
    let report = check_coalgebra(c);
    if !report.passed() {
        return Err(Error::InvalidInput(format!("coalgebra fails its axioms:\n{report}")));
    }
    Ok(SubspacePresentation {
        inclusion: cocommutator(c).kernel_matrix(),
    })
}

/// An `n × n` matrix with entries in an algebra, stored row-major as
/// coordinate vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraMatrix {
    n: usize,
    entries: Vec<Vec<Scalar>>,
}

impl AlgebraMatrix {
    pub fn new(n: usize, entries: Vec<Vec<Scalar>>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch(format!("{} entries for a {n}x{n} matrix", entries.len())));
        }
        Ok(AlgebraMatrix { n, entries })
    }

    pub fn identity(a: &Algebra, n: usize) -> Self {
        let zero = vec![a.field().zero(); a.dim()];
        let entries = (0..n * n)
            .map(|k| if k / n == k % n { a.one() } else { zero.clone() })
            .collect();
        AlgebraMatrix { n, entries }
    }

    /// Reads the layout used by idempotent documents: row `i` holds the
    /// entries `(i, 0), …, (i, n−1)` concatenated.
    pub fn from_block_rows(m: &Matrix, dim: usize) -> Result<Self> {
        let n = m.rows();
        if m.cols() != n * dim {
            return Err(Error::DimensionMismatch(format!(
                "algebra matrix with {n} rows needs {} columns, found {}",
                n * dim,
                m.cols()
            )));
        }
        let entries = (0..n * n)
            .map(|k| m.row(k / n)[(k % n) * dim..(k % n + 1) * dim].to_vec())
            .collect();
        Ok(AlgebraMatrix { n, entries })
    }

    pub fn to_block_rows(&self, a: &Algebra) -> Matrix {
        let d = a.dim();
        Matrix::from_fn(self.n, self.n * d, a.field(), |i, c| self.entries[i * self.n + c / d][c % d].clone())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &[Scalar] {
        &self.entries[i * self.n + j]
    }

    pub fn square(&self, a: &Algebra) -> AlgebraMatrix {
        let n = self.n;
        let zero = vec![a.field().zero(); a.dim()];
        let entries = (0..n * n)
            .map(|k| {
                let (i, j) = (k / n, k % n);
                (0..n).fold(zero.clone(), |acc, l| {
                    let p = a.multiply(self.entry(i, l), self.entry(l, j));
                    acc.iter().zip(&p).map(|(x, y)| x + y).collect()
                })
            })
            .collect();
        AlgebraMatrix { n, entries }
    }

    pub fn diagonal_sum(&self, a: &Algebra) -> Vec<Scalar> {
        (0..self.n).fold(vec![a.field().zero(); a.dim()], |acc, i| {
            acc.iter().zip(self.entry(i, i)).map(|(x, y)| x + y).collect()
        })
    }
}

/// A class in `HH₀(A)`, with the ambient representative it was computed from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceClass {
    pub representative: Vec<Scalar>,
    pub coords: Vec<Scalar>,
}

/// `tr(P) = [Σ_i E_ii]` for an idempotent matrix `E` over `A`.
pub fn hattori_stallings(a: &Algebra, e: &AlgebraMatrix) -> Result<TraceClass> {
    if e.entries.iter().any(|x| x.len() != a.dim()) {
        return Err(Error::DimensionMismatch("entry length differs from algebra dimension".into()));
    }
    if e.square(a) != *e {
        return Err(Error::NotIdempotent("E·E ≠ E".into()));
    }
    let q = hh0(a)?;
    let representative = e.diagonal_sum(a);
    Ok(TraceClass {
        coords: q.class_of(&representative),
        representative,
    })
}

/// The cotrace of the comodule presented by `e`, as an element of `C*` and
/// as its restriction to `coHH₀(C)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cotrace {
    /// `Σ_i ε∘e_ii` in the dual basis of `C`.
    pub ambient: Vec<Scalar>,
    /// Values on the kernel basis of `coHH₀(C)`.
    pub restricted: Functional,
}

pub fn cotrace(c: &Coalgebra, e: &ColinearIdempotent) -> Result<Cotrace> {
    e.validate(c)?;
    let k = cohh0(c)?;
    let mut ambient = vec![c.field().zero(); c.dim()];
    for i in 0..e.n() {
        let row = c.counit() * &e.block(c, i, i);
        ambient = ambient.iter().zip(row.row(0)).map(|(x, y)| x + y).collect();
    }
    let restricted = Functional {
        coeffs: k.inclusion.transpose().apply(&ambient),
    };
    Ok(Cotrace { ambient, restricted })
}

/// The pairing `HH₀(C*) → coHH₀(C)*`, `[f] ↦ f|coHH₀`, as a
/// `dim coHH₀ × dim HH₀(C*)` matrix in the section basis.
pub fn comparison_pairing(c: &Coalgebra) -> Result<Matrix> {
    let a = dual_algebra(c)?;
    let q = hh0(&a)?;
    let k = cohh0(c)?;
    Ok(&k.inclusion.transpose() * &q.section)
}

/// Whether every commutator `[f, g]` of `C*` vanishes on `coHH₀(C)`, i.e.
/// the pairing is well defined on classes.
pub fn commutators_vanish_on_cohh0(c: &Coalgebra) -> Result<bool> {
    let a = dual_algebra(c)?;
    let k = cohh0(c)?;
    Ok((&k.inclusion.transpose() * &commutator_span(&a)).is_zero())
}

/// `χ(M)(a_j) = tr(ρ(a_j))` on the basis of the algebra.
pub fn character_module(m: &Module) -> Functional {
    Functional {
        coeffs: (0..m.over().dim()).map(|j| m.action_of(j).trace()).collect(),
    }
}

/// `χᶜ(V) = Σ_i Σ e_i*(e_i₍₀₎) e_i₍₁₎` as coordinates in `C`.
pub fn colinear_character(v: &Comodule) -> Result<Vec<Scalar>> {
    if v.side() != Side::Right {
        return Err(Error::SideMismatch("colinear character needs a right comodule".into()));
    }
    let c = v.over().dim();
    let rho = v.coaction();
    Ok((0..c)
        .map(|k| (0..v.dim()).fold(v.field().zero(), |acc, i| acc + rho.get(i * c + k, i)))
        .collect())
}

/// The dual idempotent over `C*`: `E_ij = ε∘e_ji`.
pub fn dual_idempotent(c: &Coalgebra, e: &ColinearIdempotent) -> AlgebraMatrix {
    let n = e.n();
    let entries = (0..n * n)
        .map(|k| {
            let (i, j) = (k / n, k % n);
            (c.counit() * &e.block(c, j, i)).row(0).to_vec()
        })
        .collect();
    AlgebraMatrix { n, entries }
}

/// Checks that the cotrace of `M` agrees with the Hattori–Stallings trace of
/// `M*` pushed through the comparison pairing.
pub fn verify_trace_square(c: &Coalgebra, e: &ColinearIdempotent) -> Result<DiagramReport> {
    e.validate(c)?;
    let a = dual_algebra(c)?;
    let big_e = dual_idempotent(c, e);
    let idempotent = big_e.square(&a) == big_e;
    let well_defined = commutators_vanish_on_cohh0(c)?;
    let cotr = cotrace(c, e)?;
    let lhs = if idempotent {
        let tr = hattori_stallings(&a, &big_e)?;
        comparison_pairing(c)?.apply(&tr.coords)
    } else {
        Vec::new()
    };
    Ok(DiagramReport {
        diagram: "trace square: pairing(tr(M*)) = cotr(M)".into(),
        lhs_label: "pairing(tr(M*))".into(),
        lhs,
        rhs_label: "cotr(M)".into(),
        rhs: cotr.restricted.coeffs,
        conditions: vec![
            ("dual idempotent E_ij = eps.e_ji is idempotent over C*".into(), idempotent),
            ("commutators of C* vanish on coHH0(C)".into(), well_defined),
        ],
    })
}

/// Checks `f(χᶜ(V)) = χ(V as a C*-module)(f)` on every dual basis element.
pub fn verify_character_triangle(c: &Coalgebra, v: &Comodule) -> Result<DiagramReport> {
    if v.over() != c {
        return Err(Error::InvalidInput("comodule is not over the given coalgebra".into()));
    }
    let chi_c = colinear_character(v)?;
    let module = comodule_to_module(v)?;
    let chi = character_module(&module);
    let in_cohh0 = cohh0(c)?.contains(&chi_c);
    Ok(DiagramReport {
        diagram: "character triangle: eps_C(chi^c(V)) = chi(V)".into(),
        lhs_label: "f(chi^c(V))".into(),
        lhs: chi_c,
        rhs_label: "chi(V)(f)".into(),
        rhs: chi.coeffs,
        conditions: vec![("chi^c(V) lies in coHH0(C)".into(), in_cohh0)],
    })
}

/// Checks `χᶜ(V ⊗ W) = χᶜ(V) · χᶜ(W)` in the algebra of the bialgebra.
pub fn verify_character_multiplicativity(h: &Bialgebra, v: &Comodule, w: &Comodule) -> Result<DiagramReport> {
    let vw = tensor_comodules(v, w, h)?;
    let lhs = colinear_character(&vw)?;
    let rhs = h.alg().multiply(&colinear_character(v)?, &colinear_character(w)?);
    Ok(DiagramReport {
        diagram: "character multiplicativity: chi^c(V (x) W) = chi^c(V) chi^c(W)".into(),
        lhs_label: "chi^c(V (x) W)".into(),
        lhs,
        rhs_label: "chi^c(V) chi^c(W)".into(),
        rhs,
        conditions: Vec::new(),
    })
}
