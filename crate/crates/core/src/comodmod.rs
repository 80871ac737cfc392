//! Comodules and modules over finite-dimensional (co)algebras.
//!
//! A right comodule of dimension `n` over `C` stores its coaction as an
//! `(n·dim C) × n` matrix with flat index `m·dim C + c` for `m ⊗ c`; a left
//! comodule uses `c·n + m`. Left module actions are `n × (dim A·n)` with flat
//! index `a·n + m`; right actions use `m·dim A + a`.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactla::{middle_swap_index, Matrix};
use crate::field::{FieldSpec, Scalar};
use crate::report::ValidationReport;
use crate::structures::{check_bialgebra_full, check_coalgebra, dual_algebra, is_cocommutative, Algebra, Bialgebra, Coalgebra};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comodule {
    side: Side,
    coaction: Matrix,
    over: Coalgebra,
}

impl Comodule {
    pub fn new(side: Side, coaction: Matrix, over: Coalgebra) -> Result<Comodule> {
        let n = coaction.cols();
        if coaction.rows() != n * over.dim() {
            return Err(Error::DimensionMismatch(format!(
                "coaction of a {n}-dimensional comodule over a {}-dimensional coalgebra must have {} rows, found {}",
                over.dim(),
                n * over.dim(),
                coaction.rows()
            )));
        }
        if coaction.field() != over.field() {
            return Err(Error::FieldMismatch("coaction and coalgebra over different fields".into()));
        }
        Ok(Comodule { side, coaction, over })
    }

    pub fn dim(&self) -> usize {
        self.coaction.cols()
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn coaction(&self) -> &Matrix {
        &self.coaction
    }

    pub fn over(&self) -> &Coalgebra {
        &self.over
    }

    pub fn field(&self) -> FieldSpec {
        self.over.field()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Module {
    side: Side,
    action: Matrix,
    over: Algebra,
}

impl Module {
    pub fn new(side: Side, action: Matrix, over: Algebra) -> Result<Module> {
        let n = action.rows();
        if action.cols() != n * over.dim() {
            return Err(Error::DimensionMismatch(format!(
                "action of a {n}-dimensional module over a {}-dimensional algebra must have {} columns, found {}",
                over.dim(),
                n * over.dim(),
                action.cols()
            )));
        }
        if action.field() != over.field() {
            return Err(Error::FieldMismatch("action and algebra over different fields".into()));
        }
        Ok(Module { side, action, over })
    }

    pub fn dim(&self) -> usize {
        self.action.rows()
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn action(&self) -> &Matrix {
        &self.action
    }

    pub fn over(&self) -> &Algebra {
        &self.over
    }

    /// The matrix by which basis element `j` of the algebra acts.
    pub fn action_of(&self, j: usize) -> Matrix {
        let n = self.dim();
        let a = self.over.dim();
        match self.side {
            Side::Left => Matrix::from_fn(n, n, self.over.field(), |p, i| self.action.get(p, j * n + i).clone()),
            Side::Right => Matrix::from_fn(n, n, self.over.field(), |p, i| self.action.get(p, i * a + j).clone()),
        }
    }
}

/// An idempotent colinear endomorphism of the cofree comodule `C^⊕n`,
/// stored as an `(n·dim C)`-square matrix whose `c × c` blocks are the
/// components `e_ij = p_i ∘ e ∘ ι_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColinearIdempotent {
    n: usize,
    endo: Matrix,
}

impl ColinearIdempotent {
    pub fn new(n: usize, endo: Matrix) -> ColinearIdempotent {
        ColinearIdempotent { n, endo }
    }

    pub fn identity(c: &Coalgebra, n: usize) -> ColinearIdempotent {
        ColinearIdempotent::new(n, Matrix::identity(n * c.dim(), c.field()))
    }

    pub fn zero(c: &Coalgebra, n: usize) -> ColinearIdempotent {
        ColinearIdempotent::new(n, Matrix::zeros(n * c.dim(), n * c.dim(), c.field()))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn endo(&self) -> &Matrix {
        &self.endo
    }

    pub fn block(&self, c: &Coalgebra, i: usize, j: usize) -> Matrix {
        let d = c.dim();
        self.endo.submatrix(i * d, j * d, d, d)
    }

    /// Block-diagonal join on `C^⊕(n + n')`.
    pub fn direct_sum(&self, other: &ColinearIdempotent) -> ColinearIdempotent {
        ColinearIdempotent::new(self.n + other.n, self.endo.direct_sum(&other.endo))
    }

    pub fn validate(&self, c: &Coalgebra) -> Result<()> {
        let size = self.n * c.dim();
        if self.endo.rows() != size || self.endo.cols() != size {
            return Err(Error::InvalidIdempotent(format!(
                "endomorphism is {}x{}, expected {size}x{size}",
                self.endo.rows(),
                self.endo.cols()
            )));
        }
        if self.endo.field() != c.field() {
            return Err(Error::InvalidIdempotent("idempotent and coalgebra over different fields".into()));
        }
        if &self.endo * &self.endo != self.endo {
            return Err(Error::InvalidIdempotent("e∘e ≠ e".into()));
        }
        let cofree = cofree_comodule(c, self.n);
        if !is_colinear(&self.endo, &cofree, &cofree) {
            return Err(Error::InvalidIdempotent("e is not colinear".into()));
        }
        Ok(())
    }

    /// The image of `e` as a subcomodule of `C^⊕n`, in the basis given by
    /// the canonical row-reduced column space.
    pub fn image(&self, c: &Coalgebra) -> Result<Comodule> {
        self.validate(c)?;
        let cofree = cofree_comodule(c, self.n);
        let rref = self.endo.transpose().rref();
        let basis = rref.reduced.submatrix(0, 0, rref.rank, self.endo.rows()).transpose();
        restrict_to_subcomodule(&cofree, &basis)
    }
}

/// `C^⊕n = k^n ⊗ C` with coaction `id ⊗ Δ`.
pub fn cofree_comodule(c: &Coalgebra, n: usize) -> Comodule {
    let coaction = Matrix::identity(n, c.field()).kronecker(c.comul());
    Comodule::new(Side::Right, coaction, c.clone()).expect("cofree coaction has the right shape")
}

/// `C` as a left comodule over itself via `Δ`.
pub fn left_regular_comodule(c: &Coalgebra) -> Comodule {
    Comodule::new(Side::Left, c.comul().clone(), c.clone()).expect("Δ has the right shape")
}

/// The one-dimensional comodule `v ↦ v ⊗ 1_H`.
pub fn trivial_comodule(h: &Bialgebra) -> Comodule {
    Comodule::new(Side::Right, h.alg().unit().clone(), h.coalg().clone()).expect("unit has the right shape")
}

/// The one-dimensional module where `a` acts by `ε(a)`.
pub fn trivial_module(h: &Bialgebra) -> Module {
    Module::new(Side::Left, h.coalg().counit().clone(), h.alg().clone()).expect("counit has the right shape")
}

/// The zero comodule over `c`.
pub fn zero_comodule(c: &Coalgebra) -> Comodule {
    Comodule::new(Side::Right, Matrix::zeros(0, 0, c.field()), c.clone()).expect("empty coaction")
}

/// `A` as a left module over itself.
pub fn regular_module(a: &Algebra) -> Module {
    Module::new(Side::Left, a.mul().clone(), a.clone()).expect("μ has the right shape")
}

pub fn direct_sum_comodules(m: &Comodule, n: &Comodule) -> Result<Comodule> {
    if m.side != n.side || m.over != n.over {
        return Err(Error::SideMismatch("direct sum needs comodules of the same side over the same coalgebra".into()));
    }
    let c = m.over.dim();
    let (dm, dn) = (m.dim(), n.dim());
    let total = dm + dn;
    let field = m.field();
    let coaction = Matrix::from_fn(total * c, total, field, |row, col| {
        // Left and right flat indices differ only in the order of (module, coalgebra).
        let (p, j) = match m.side {
            Side::Right => (row / c, row % c),
            Side::Left => (row % total, row / total),
        };
        let entry = |src: &Comodule, dim: usize, p: usize, i: usize| match src.side {
            Side::Right => src.coaction.get(p * c + j, i).clone(),
            Side::Left => src.coaction.get(j * dim + p, i).clone(),
        };
        match (p < dm, col < dm) {
            (true, true) => entry(m, dm, p, col),
            (false, false) => entry(n, dn, p - dm, col - dm),
            _ => field.zero(),
        }
    });
    Comodule::new(m.side, coaction, m.over.clone())
}

pub fn check_comodule(m: &Comodule) -> ValidationReport {
    let n = m.dim();
    let c = &m.over;
    let f = m.field();
    let id_m = Matrix::identity(n, f);
    let id_c = Matrix::identity(c.dim(), f);
    let rho = &m.coaction;
    let mut report = ValidationReport::new(format!("{} comodule of dimension {n} over {f}", m.side));
    match m.side {
        Side::Right => {
            report.compare(
                "coassociativity",
                &rho.after_kronecker(&id_m, c.comul()),
                &rho.after_kronecker(rho, &id_c),
            );
            report.compare("counit", &rho.after_kronecker(&id_m, c.counit()), &id_m);
        }
        Side::Left => {
            report.compare(
                "coassociativity",
                &rho.after_kronecker(c.comul(), &id_m),
                &rho.after_kronecker(&id_c, rho),
            );
            report.compare("counit", &rho.after_kronecker(c.counit(), &id_m), &id_m);
        }
    }
    report
}

pub fn check_module(m: &Module) -> ValidationReport {
    let n = m.dim();
    let a = &m.over;
    let f = a.field();
    let id_m = Matrix::identity(n, f);
    let id_a = Matrix::identity(a.dim(), f);
    let act = &m.action;
    let mut report = ValidationReport::new(format!("{} module of dimension {n} over {f}", m.side));
    match m.side {
        Side::Left => {
            report.compare(
                "associativity",
                &act.before_kronecker(a.mul(), &id_m),
                &act.before_kronecker(&id_a, act),
            );
            report.compare("unit", &act.before_kronecker(a.unit(), &id_m), &id_m);
        }
        Side::Right => {
            report.compare(
                "associativity",
                &act.before_kronecker(act, &id_a),
                &act.before_kronecker(&id_m, a.mul()),
            );
            report.compare("unit", &act.before_kronecker(&id_m, a.unit()), &id_m);
        }
    }
    report
}

fn require_valid_comodule(m: &Comodule) -> Result<()> {
    let coalg = check_coalgebra(&m.over);
    if !coalg.passed() {
        return Err(Error::InvalidInput(format!("underlying coalgebra fails its axioms:\n{coalg}")));
    }
    let report = check_comodule(m);
    if !report.passed() {
        return Err(Error::InvalidInput(format!("comodule fails its axioms:\n{report}")));
    }
    Ok(())
}

fn require_right(m: &Comodule, what: &str) -> Result<()> {
    if m.side != Side::Right {
        return Err(Error::SideMismatch(format!("{what} needs a right comodule")));
    }
    Ok(())
}

/// The left `C*`-module `f·m = Σ f(m₍₁₎) m₍₀₎` induced by a right coaction.
pub fn comodule_to_module(m: &Comodule) -> Result<Module> {
    require_right(m, "comodule_to_module")?;
    require_valid_comodule(m)?;
    let (n, c) = (m.dim(), m.over.dim());
    let action = Matrix::from_fn(n, c * n, m.field(), |p, col| {
        let (j, i) = (col / n, col % n);
        m.coaction.get(p * c + j, i).clone()
    });
    Module::new(Side::Left, action, dual_algebra(&m.over)?)
}

/// Reconstructs the coaction `ρ(v) = Σ_i (c_i*·v) ⊗ c_i` of a left
/// `C*`-module. Fails with `NotRational` when the candidate is not a coaction.
pub fn module_to_comodule(m: &Module, c: &Coalgebra) -> Result<Comodule> {
    if m.side != Side::Left {
        return Err(Error::SideMismatch("module_to_comodule needs a left module".into()));
    }
    let dual = dual_algebra(c)?;
    if dual.mul() != m.over.mul() || dual.unit() != m.over.unit() {
        return Err(Error::InvalidInput("module is not over the dual algebra of the given coalgebra".into()));
    }
    let report = check_module(m);
    if !report.passed() {
        return Err(Error::InvalidInput(format!("module fails its axioms:\n{report}")));
    }
    let (n, cd) = (m.dim(), c.dim());
    let coaction = Matrix::from_fn(n * cd, n, c.field(), |row, i| {
        let (p, j) = (row / cd, row % cd);
        m.action.get(p, j * n + i).clone()
    });
    let comodule = Comodule::new(Side::Right, coaction, c.clone())?;
    let report = check_comodule(&comodule);
    if !report.passed() {
        return Err(Error::NotRational(report.to_string()));
    }
    Ok(comodule)
}

/// The right `C*`-module structure `(f·α)(m) = Σ f(m₍₀₎) α(m₍₁₎)` on `M*`,
/// in the dual basis. Its action matrix is `ρᵀ`.
pub fn dual_comodule(m: &Comodule) -> Result<Module> {
    require_right(m, "dual_comodule")?;
    require_valid_comodule(m)?;
    Module::new(Side::Right, m.coaction.transpose(), dual_algebra(&m.over)?)
}

/// `M □_C N` as a subspace of `M ⊗ N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CotensorProduct {
    pub inclusion: Matrix,
    /// The induced right comodule structure, present when `C` is cocommutative.
    pub comodule: Option<Comodule>,
}

impl CotensorProduct {
    pub fn dim(&self) -> usize {
        self.inclusion.cols()
    }
}

/// The equalizer of `ρ_M ⊗ id_N` and `id_M ⊗ λ_N`.
pub fn cotensor(m: &Comodule, n: &Comodule) -> Result<CotensorProduct> {
    if m.side != Side::Right || n.side != Side::Left {
        return Err(Error::SideMismatch("cotensor needs a right comodule and a left comodule".into()));
    }
    if m.over != n.over {
        return Err(Error::InvalidInput("cotensor factors live over different coalgebras".into()));
    }
    require_valid_comodule(m)?;
    require_valid_comodule(n)?;
    let f = m.field();
    let (dm, dn, c) = (m.dim(), n.dim(), m.over.dim());
    let lhs = m.coaction.kronecker(&Matrix::identity(dn, f));
    let rhs = Matrix::identity(dm, f).kronecker(&n.coaction);
    let inclusion = (&lhs - &rhs).kernel_matrix();

    let comodule = if is_cocommutative(&m.over) {
        // m ⊗ n ↦ Σ m₍₀₎ ⊗ n ⊗ m₍₁₎ on M ⊗ N, restricted to the equalizer.
        let full = lhs.permute_rows(middle_swap_index([dm, c, dn, 1]));
        let ambient = Comodule::new(Side::Right, full, m.over.clone())?;
        Some(restrict_to_subcomodule(&ambient, &inclusion)?)
    } else {
        None
    };
    Ok(CotensorProduct { inclusion, comodule })
}

/// Restricts a right coaction to the subspace spanned by the columns of
/// `basis`, which must be a subcomodule.
pub fn restrict_to_subcomodule(m: &Comodule, basis: &Matrix) -> Result<Comodule> {
    let f = m.field();
    let c = m.over.dim();
    let pushed = &m.coaction * basis;
    let lifted = basis.kronecker(&Matrix::identity(c, f));
    let coaction = lifted
        .solve(&pushed)
        .ok_or_else(|| Error::InvalidInput("subspace is not a subcomodule".into()))?;
    let sub = Comodule::new(Side::Right, coaction, m.over.clone())?;
    let report = check_comodule(&sub);
    if !report.passed() {
        return Err(Error::InvalidInput(format!("restricted coaction fails its axioms:\n{report}")));
    }
    Ok(sub)
}

fn require_bialgebra(h: &Bialgebra) -> Result<()> {
    let report = check_bialgebra_full(h);
    if !report.passed() {
        return Err(Error::NotABialgebra(report.to_string()));
    }
    Ok(())
}

/// `M ⊗ N` with coaction `(1⊗1⊗μ)∘(1⊗τ⊗1)∘(ρ_M⊗ρ_N)`.
pub fn tensor_comodules(m: &Comodule, n: &Comodule, h: &Bialgebra) -> Result<Comodule> {
    require_bialgebra(h)?;
    require_right(m, "tensor_comodules")?;
    require_right(n, "tensor_comodules")?;
    if m.over != *h.coalg() || n.over != *h.coalg() {
        return Err(Error::InvalidInput("tensor factors are not comodules over the given bialgebra".into()));
    }
    let f = h.field();
    let (dm, dn, d) = (m.dim(), n.dim(), h.dim());
    let legs = m.coaction.kronecker(&n.coaction).permute_rows(middle_swap_index([dm, d, dn, d]));
    let coaction = &Matrix::identity(dm * dn, f).kronecker(h.alg().mul()) * &legs;
    Comodule::new(Side::Right, coaction, h.coalg().clone())
}

/// `M ⊗ N` with action `(λ_M⊗λ_N)∘(1⊗τ⊗1)∘(Δ⊗1⊗1)`.
pub fn tensor_modules(m: &Module, n: &Module, h: &Bialgebra) -> Result<Module> {
    require_bialgebra(h)?;
    if m.side != Side::Left || n.side != Side::Left {
        return Err(Error::SideMismatch("tensor_modules needs left modules".into()));
    }
    if m.over != *h.alg() || n.over != *h.alg() {
        return Err(Error::InvalidInput("tensor factors are not modules over the given bialgebra".into()));
    }
    let f = h.field();
    let (dm, dn, d) = (m.dim(), n.dim(), h.dim());
    let spread = h
        .coalg()
        .comul()
        .kronecker(&Matrix::identity(dm * dn, f))
        .permute_rows(middle_swap_index([d, d, dm, dn]));
    let action = &m.action.kronecker(&n.action) * &spread;
    Module::new(Side::Left, action, h.alg().clone())
}

/// The colinear monomorphism `ρ: M → M ⊗ C = C^⊕dim M`, split by `id ⊗ ε`.
pub fn cofree_embedding(m: &Comodule) -> Result<Matrix> {
    require_right(m, "cofree_embedding")?;
    require_valid_comodule(m)?;
    Ok(m.coaction.clone())
}

/// Whether `f: M → N` satisfies `ρ_N ∘ f = (f ⊗ id) ∘ ρ_M` (mirrored for left).
pub fn is_colinear(f: &Matrix, m: &Comodule, n: &Comodule) -> bool {
    let id_c = Matrix::identity(m.over.dim(), m.field());
    match m.side {
        Side::Right => &n.coaction * f == m.coaction.after_kronecker(f, &id_c),
        Side::Left => &n.coaction * f == m.coaction.after_kronecker(&id_c, f),
    }
}

/// A basis of the space of colinear maps `M → N`, each as a `dim N × dim M`
/// matrix.
pub fn colinear_maps(m: &Comodule, n: &Comodule) -> Result<Vec<Matrix>> {
    if m.side != n.side {
        return Err(Error::SideMismatch("colinear maps need comodules on the same side".into()));
    }
    if m.over != n.over {
        return Err(Error::InvalidInput("comodules over different coalgebras".into()));
    }
    let field = m.field();
    let (dm, dn, c) = (m.dim(), n.dim(), m.over.dim());
    let unknowns = dn * dm;
    let right = m.side == Side::Right;
    let rho_n = |p: usize, j: usize, r: usize| {
        if right {
            n.coaction.get(p * c + j, r)
        } else {
            n.coaction.get(j * dn + p, r)
        }
    };
    let rho_m = |s: usize, j: usize, q: usize| {
        if right {
            m.coaction.get(s * c + j, q)
        } else {
            m.coaction.get(j * dm + s, q)
        }
    };
    // Row ((p, j), q) of the system evaluates both sides of the colinearity
    // condition at m_q, coordinate n_p ⊗ c_j; column (r, s) is the unknown f_rs.
    let mut system = Matrix::zeros(dn * c * dm, unknowns, field);
    for p in 0..dn {
        for j in 0..c {
            for q in 0..dm {
                let row = (p * c + j) * dm + q;
                for r in 0..dn {
                    let v = rho_n(p, j, r);
                    if !v.is_zero() {
                        system.set(row, r * dm + q, v.clone());
                    }
                }
                for s in 0..dm {
                    let v = rho_m(s, j, q);
                    if !v.is_zero() {
                        let cur = system.get(row, p * dm + s).clone();
                        system.set(row, p * dm + s, cur - v);
                    }
                }
            }
        }
    }
    Ok(system
        .kernel_basis()
        .into_iter()
        .map(|v| Matrix::from_fn(dn, dm, field, |r, s| v[r * dm + s].clone()))
        .collect())
}

/// Largest coefficient space enumerated outright.
const SEARCH_LIMIT: u64 = 1 << 16;
const RANDOM_TRIES: usize = 16;

/// Searches the colinear maps `M → N` for an invertible one.
///
/// `det(Σ x_i B_i)` has degree at most `dim` in each `x_i`, so if it is not
/// identically zero it is nonzero somewhere on the grid `{0, …, dim}^k`.
/// The search tries a few pseudo-random points first and then walks that
/// grid (or all of `𝔽_p^k` when that is smaller), so `None` is a proof of
/// non-isomorphism. When neither space fits under `2^16` points the search
/// stops with [`Error::Inconclusive`].
pub fn find_isomorphism(m: &Comodule, n: &Comodule) -> Result<Option<Matrix>> {
    if m.dim() != n.dim() {
        return Ok(None);
    }
    let basis = colinear_maps(m, n)?;
    let dim = m.dim();
    let field = m.field();
    if dim == 0 {
        return Ok(Some(Matrix::zeros(0, 0, field)));
    }
    // Isomorphic comodules have Hom(M, N) ≅ End(M) ≅ End(N).
    let k = basis.len();
    if k == 0 || colinear_maps(m, m)?.len() != k || colinear_maps(n, n)?.len() != k {
        return Ok(None);
    }
    let invertible = |coeffs: &[Scalar]| -> Option<Matrix> {
        let mut acc = Matrix::zeros(dim, dim, field);
        for (b, x) in basis.iter().zip(coeffs) {
            if !x.is_zero() {
                acc = &acc + &b.scale(x);
            }
        }
        (acc.rank() == dim).then_some(acc)
    };
    if let Some(b) = basis.iter().find(|b| b.rank() == dim) {
        return Ok(Some(b.clone()));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x0063_6f61_6c67);
    for _ in 0..RANDOM_TRIES {
        let coeffs: Vec<Scalar> = (0..k)
            .map(|_| match field {
                FieldSpec::Rationals => field.from_i64(rng.gen_range(-(1 << 20)..=1 << 20)),
                FieldSpec::Prime(p) => field.from_i64(rng.gen_range(0..p as i64)),
            })
            .collect();
        if let Some(iso) = invertible(&coeffs) {
            return Ok(Some(iso));
        }
    }

    // Points per coordinate: all of 𝔽_p, or dim + 1 distinct values.
    let values = match field {
        FieldSpec::Prime(p) if (p as u64).checked_pow(k as u32).is_some_and(|t| t <= SEARCH_LIMIT) => p as u64,
        FieldSpec::Prime(p) if (p as usize) <= dim => {
            return Err(Error::Inconclusive(format!(
                "{p}^{k} coefficient vectors is too many to enumerate and F_{p} is too small for a grid search"
            )));
        }
        _ => dim as u64 + 1,
    };
    let total = values
        .checked_pow(k as u32)
        .filter(|&t| t <= SEARCH_LIMIT)
        .ok_or_else(|| Error::Inconclusive(format!("grid of {values}^{k} points is too large to enumerate")))?;
    for code in 1..total {
        let mut rest = code;
        let coeffs: Vec<Scalar> = (0..k)
            .map(|_| {
                let v = rest % values;
                rest /= values;
                field.from_i64(v as i64)
            })
            .collect();
        if let Some(iso) = invertible(&coeffs) {
            return Ok(Some(iso));
        }
    }
    Ok(None)
}

/// Result of [`injective_retract`]; `NotInjective` is an answer, not a fault.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Injectivity {
    Retract(ColinearIdempotent),
    NotInjective,
}

/// Decides injectivity by searching for a colinear retraction of the cofree
/// embedding. Comodules whose coaction is literally `id_n ⊗ Δ` are returned
/// as the identity on `n` summands.
pub fn injective_retract(m: &Comodule) -> Result<Injectivity> {
    require_right(m, "injective_retract")?;
    require_valid_comodule(m)?;
    let c = &m.over;
    let (dim, cd) = (m.dim(), c.dim());
    if dim % cd == 0 {
        let cofree = cofree_comodule(c, dim / cd);
        if cofree.coaction == m.coaction {
            return Ok(Injectivity::Retract(ColinearIdempotent::identity(c, dim / cd)));
        }
    }
    let field = m.field();
    let iota = m.coaction.clone();
    let cofree = cofree_comodule(c, dim);
    let candidates = colinear_maps(&cofree, m)?;
    // Solve Σ x_k (B_k ∘ ι) = id_M for the coefficients x_k.
    let composites: Vec<Vec<Scalar>> = candidates
        .iter()
        .map(|b| (b * &iota).entries().to_vec())
        .collect();
    let system = Matrix::from_columns(field, dim * dim, &composites);
    let target = Matrix::column_vector(field, Matrix::identity(dim, field).entries());
    let Some(x) = system.solve(&target) else {
        return Ok(Injectivity::NotInjective);
    };
    let mut retraction = Matrix::zeros(dim, dim * cd, field);
    for (k, b) in candidates.iter().enumerate() {
        let coeff = x.get(k, 0);
        if !coeff.is_zero() {
            retraction = &retraction + &b.scale(coeff);
        }
    }
    Ok(Injectivity::Retract(ColinearIdempotent::new(dim, &iota * &retraction)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::*;
    use crate::structures::dual_algebra;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn regular_and_zero_comodules_pass() {
        let c = function_bialgebra(&FiniteMonoidTable::cyclic(2), Q).coalg().clone();
        assert!(check_comodule(&regular_comodule(&c)).passed());
        assert!(check_comodule(&zero_comodule(&c)).passed());
        assert!(check_comodule(&left_regular_comodule(&c)).passed());
    }

    #[test]
    fn broken_coaction_fails_with_witness() {
        let c = function_bialgebra(&FiniteMonoidTable::cyclic(2), Q).coalg().clone();
        let mut rho = regular_comodule(&c).coaction().clone();
        rho.set(0, 0, Q.from_i64(2));
        let bad = Comodule::new(Side::Right, rho, c).unwrap();
        let report = check_comodule(&bad);
        assert!(!report.passed());
        assert!(report.failures().all(|r| r.witness.is_some()));
    }

    #[test]
    fn module_checks() {
        let a = truncated_polynomial_algebra(2, Q);
        assert!(check_module(&regular_module(&a)).passed());
        let zero = Module::new(Side::Left, Matrix::zeros(0, 0, Q), a.clone()).unwrap();
        assert!(check_module(&zero).passed());
        // 1 acting as 2 on a one-dimensional module.
        let mut act = Matrix::zeros(1, 3, Q);
        act.set(0, 0, Q.from_i64(2));
        let bad = Module::new(Side::Left, act, a).unwrap();
        assert!(!check_module(&bad).get("unit").unwrap().passed());
    }

    #[test]
    fn regular_comodule_induces_twisted_regular_module() {
        // Map(C2, Q): f·c = Σ f(c₍₂₎)c₍₁₎. Check against the convolution by hand:
        // δ_e acts on c = δ_e through Δδ_e = δe⊗δe + δg⊗δg, so δe*·δe = δe, δg*·δe = δg.
        let c = function_bialgebra(&FiniteMonoidTable::cyclic(2), Q).coalg().clone();
        let module = comodule_to_module(&regular_comodule(&c)).unwrap();
        assert!(check_module(&module).passed());
        let act_e = module.action_of(0);
        let act_g = module.action_of(1);
        assert_eq!(act_e, Matrix::identity(2, Q));
        assert_eq!(act_g, Matrix::from_i64_rows(Q, &[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn trivial_comodule_module_acts_through_unit() {
        let h = monoid_bialgebra(&FiniteMonoidTable::cyclic(3), Q);
        let module = comodule_to_module(&trivial_comodule(&h)).unwrap();
        // f acts by f(1_H): the dual basis element e* is 1, others 0.
        for j in 0..3 {
            let expected = if j == 0 { Q.one() } else { Q.zero() };
            assert_eq!(module.action_of(j).get(0, 0), &expected);
        }
    }

    #[test]
    fn nilpotent_comodule_module_round_trip() {
        let phi = Matrix::from_i64_rows(Q, &[&[0, 1], &[0, 0]]);
        let m = nilpotent_comodule(&phi, 1, Q).unwrap();
        let module = comodule_to_module(&m).unwrap();
        assert_eq!(module.action_of(1), phi);
        let back = module_to_comodule(&module, m.over()).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn module_to_comodule_rejects_wrong_algebra() {
        let c = divided_power_truncation(2, Q).coalg().clone();
        let other = regular_module(&truncated_polynomial_algebra(3, Q));
        assert!(matches!(module_to_comodule(&other, &c), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn left_regular_dual_module_is_grouplike_comodule() {
        // Left regular C*-module for C = Map(C2, Q) is recovered as a comodule.
        let c = function_bialgebra(&FiniteMonoidTable::cyclic(2), Q).coalg().clone();
        let a = dual_algebra(&c).unwrap();
        let regular = regular_module(&a);
        let comod = module_to_comodule(&regular, &c).unwrap();
        assert!(check_comodule(&comod).passed());
        assert_eq!(comodule_to_module(&comod).unwrap(), regular);
    }

    #[test]
    fn dual_comodule_examples() {
        let c = function_bialgebra(&FiniteMonoidTable::cyclic(2), Q).coalg().clone();
        let dual = dual_comodule(&regular_comodule(&c)).unwrap();
        assert!(check_module(&dual).passed());
        let a = dual_algebra(&c).unwrap();
        let right_regular = Module::new(Side::Right, a.mul().clone(), a.clone()).unwrap();
        assert_eq!(dual, right_regular);
        assert_eq!(dual_comodule(&zero_comodule(&c)).unwrap().dim(), 0);
        let two = dual_comodule(&cofree_comodule(&c, 2)).unwrap();
        assert_eq!(two.dim(), 4);
        assert!(check_module(&two).passed());
    }

    #[test]
    fn cotensor_unit_and_sizes() {
        let s3 = FiniteMonoidTable::symmetric3();
        let c = function_bialgebra(&s3, Q).coalg().clone();
        let cc = cotensor(&regular_comodule(&c), &left_regular_comodule(&c)).unwrap();
        assert_eq!(cc.dim(), 6);
        assert!(cc.comodule.is_none());

        let d = divided_power_truncation(3, Q).coalg().clone();
        let dd = cotensor(&regular_comodule(&d), &left_regular_comodule(&d)).unwrap();
        assert_eq!(dd.dim(), 4);
        let induced = dd.comodule.expect("cocommutative");
        assert!(check_comodule(&induced).passed());
        assert!(find_isomorphism(&induced, &regular_comodule(&d)).unwrap().is_some());
    }

    #[test]
    fn cotensor_side_mismatch() {
        let c = divided_power_truncation(1, Q).coalg().clone();
        let r = regular_comodule(&c);
        assert!(matches!(cotensor(&r, &r), Err(Error::SideMismatch(_))));
    }

    #[test]
    fn tensor_of_grouplike_comodules() {
        // Over kC3 the one-dimensional comodule indexed by g has coaction v ↦ v⊗g.
        let t = FiniteMonoidTable::cyclic(3);
        let h = monoid_bialgebra(&t, Q);
        let indexed = |g: usize| {
            let mut rho = Matrix::zeros(3, 1, Q);
            rho.set(g, 0, Q.one());
            Comodule::new(Side::Right, rho, h.coalg().clone()).unwrap()
        };
        let prod = tensor_comodules(&indexed(1), &indexed(2), &h).unwrap();
        assert_eq!(prod, indexed(t.mul(1, 2)));
        let unit = tensor_comodules(&trivial_comodule(&h), &indexed(1), &h).unwrap();
        assert_eq!(unit, indexed(1));
    }

    #[test]
    fn tensor_requires_bialgebra() {
        let h = divided_power_truncation(2, Q);
        let m = regular_comodule(h.coalg());
        assert!(matches!(tensor_comodules(&m, &m, &h), Err(Error::NotABialgebra(_))));
    }

    #[test]
    fn tensor_modules_multiplies_characters() {
        let t = FiniteMonoidTable::cyclic(2);
        let h = monoid_bialgebra(&t, Q);
        let sign = Module::new(Side::Left, Matrix::from_i64_rows(Q, &[&[1, -1]]), h.alg().clone()).unwrap();
        let sq = tensor_modules(&sign, &sign, &h).unwrap();
        assert_eq!(sq, trivial_module(&h));
        let regular = regular_module(h.alg());
        let with_unit = tensor_modules(&regular, &trivial_module(&h), &h).unwrap();
        assert_eq!(with_unit, regular);
    }

    #[test]
    fn colinear_maps_dimensions() {
        let c = function_bialgebra(&FiniteMonoidTable::cyclic(2), Q).coalg().clone();
        let r = regular_comodule(&c);
        assert_eq!(colinear_maps(&r, &r).unwrap().len(), 2);
        assert!(colinear_maps(&r, &zero_comodule(&c)).unwrap().is_empty());
        let h = monoid_bialgebra(&FiniteMonoidTable::cyclic(2), Q);
        let t = trivial_comodule(&h);
        assert_eq!(colinear_maps(&t, &t).unwrap().len(), 1);
    }

    #[test]
    fn cofree_embedding_is_split_mono() {
        let phi = Matrix::from_i64_rows(Q, &[&[0, 1], &[0, 0]]);
        let m = nilpotent_comodule(&phi, 1, Q).unwrap();
        let iota = cofree_embedding(&m).unwrap();
        assert_eq!(iota.rank(), 2);
        let collapse = Matrix::identity(2, Q).kronecker(m.over().counit());
        assert_eq!(&collapse * &iota, Matrix::identity(2, Q));
        assert!(is_colinear(&iota, &m, &cofree_comodule(m.over(), 2)));
        assert_eq!(cofree_embedding(&zero_comodule(m.over())).unwrap().cols(), 0);
    }

    #[test]
    fn injective_retract_examples() {
        let c = divided_power_truncation(1, Q).coalg().clone();
        match injective_retract(&regular_comodule(&c)).unwrap() {
            Injectivity::Retract(e) => {
                assert_eq!(e.n(), 1);
                assert_eq!(e.endo(), &Matrix::identity(2, Q));
            }
            other => panic!("expected retract, got {other:?}"),
        }
        match injective_retract(&cofree_comodule(&c, 2)).unwrap() {
            Injectivity::Retract(e) => assert_eq!(e, ColinearIdempotent::identity(&c, 2)),
            other => panic!("expected retract, got {other:?}"),
        }
        let trivial = nilpotent_comodule(&Matrix::zeros(1, 1, Q), 1, Q).unwrap();
        assert_eq!(injective_retract(&trivial).unwrap(), Injectivity::NotInjective);
    }

    #[test]
    fn retract_for_semisimple_comodule() {
        // Over Q, Map(C2, Q) is cosemisimple so the sign comodule is injective.
        let t = FiniteMonoidTable::cyclic(2);
        let sign = permutation_comodule(&t, &[Matrix::from_i64_rows(Q, &[&[1]]), Matrix::from_i64_rows(Q, &[&[-1]])], Q).unwrap();
        let Injectivity::Retract(e) = injective_retract(&sign).unwrap() else {
            panic!("sign comodule is injective over Q");
        };
        e.validate(sign.over()).unwrap();
        assert_eq!(e.endo().rank(), 1);
        let image = e.image(sign.over()).unwrap();
        assert!(find_isomorphism(&image, &sign).unwrap().is_some());
    }

    #[test]
    fn isomorphism_search_distinguishes() {
        let t = FiniteMonoidTable::cyclic(2);
        let one = Matrix::from_i64_rows(Q, &[&[1]]);
        let neg = Matrix::from_i64_rows(Q, &[&[-1]]);
        let trivial = permutation_comodule(&t, &[one.clone(), one.clone()], Q).unwrap();
        let sign = permutation_comodule(&t, &[one, neg], Q).unwrap();
        assert!(find_isomorphism(&trivial, &sign).unwrap().is_none());
        let c = sign.over().clone();
        let sum = direct_sum_comodules(&trivial, &sign).unwrap();
        let iso = find_isomorphism(&sum, &regular_comodule(&c)).unwrap().expect("regular = trivial ⊕ sign");
        assert!(is_colinear(&iso, &sum, &regular_comodule(&c)));
    }

    #[test]
    fn isomorphism_search_beyond_one_parameter_families() {
        // End(C) for the comatrix coalgebra is M2(Q); Σ t^i B_i over matrix
        // units is singular for every t, but the search must still succeed.
        let c = comatrix_coalgebra(2, Q).unwrap();
        let regular = regular_comodule(&c);
        let natural = crate::constructions::comatrix_natural_comodule(2, Q).unwrap();
        let sum = direct_sum_comodules(&natural, &natural).unwrap();
        let iso = find_isomorphism(&sum, &regular).unwrap().expect("C = V ⊕ V");
        assert!(is_colinear(&iso, &sum, &regular));
        assert!(iso.inverse().is_some());
    }

    #[test]
    fn isomorphism_search_over_f2() {
        let f2 = FieldSpec::Prime(2);
        let c = divided_power_truncation(1, f2).coalg().clone();
        let jordan = nilpotent_comodule(&Matrix::from_i64_rows(f2, &[&[0, 1], &[0, 0]]), 1, f2).unwrap();
        let iso = find_isomorphism(&jordan, &regular_comodule(&c)).unwrap();
        assert!(iso.is_some());
        let trivial2 = nilpotent_comodule(&Matrix::zeros(2, 2, f2), 1, f2).unwrap();
        assert!(find_isomorphism(&trivial2, &jordan).unwrap().is_none());
    }

    #[test]
    fn idempotent_validation() {
        let c = divided_power_truncation(1, Q).coalg().clone();
        assert!(ColinearIdempotent::identity(&c, 2).validate(&c).is_ok());
        // Projection onto X^[0] is idempotent but not colinear.
        let mut e = Matrix::zeros(2, 2, Q);
        e.set(0, 0, Q.one());
        assert!(matches!(
            ColinearIdempotent::new(1, e).validate(&c),
            Err(Error::InvalidIdempotent(_))
        ));
        let twice = Matrix::identity(2, Q).scale(&Q.from_i64(2));
        assert!(ColinearIdempotent::new(1, twice).validate(&c).is_err());
    }
}
