//! Structure-constant presentations of algebras, coalgebras and bialgebras.
//!
//! Structure maps are stored as matrices: `μ` is `dim × dim²`, `η` is
//! `dim × 1`, `Δ` is `dim² × dim` and `ε` is `1 × dim`. Construction only
//! checks shapes; the axioms are checked explicitly so that broken objects
//! can be built on purpose.

use crate::error::{Error, Result};
use crate::exactla::{middle_swap_index, swap_map, Matrix};
use crate::field::{FieldSpec, Scalar};
use crate::report::ValidationReport;

pub fn default_labels(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

fn dual_label(l: &str) -> String {
    match l.strip_suffix('*') {
        Some(base) => base.to_string(),
        None => format!("{l}*"),
    }
}

fn check_shape(what: &str, m: &Matrix, rows: usize, cols: usize, field: FieldSpec) -> Result<()> {
    if m.rows() != rows || m.cols() != cols {
        return Err(Error::DimensionMismatch(format!(
            "{what} is {}x{}, expected {rows}x{cols}",
            m.rows(),
            m.cols()
        )));
    }
    if m.field() != field {
        return Err(Error::FieldMismatch(format!("{what} is over {}, expected {field}", m.field())));
    }
    Ok(())
}

fn check_labels(labels: &[String], dim: usize) -> Result<()> {
    if labels.len() != dim {
        return Err(Error::DimensionMismatch(format!("{} labels for dimension {dim}", labels.len())));
    }
    Ok(())
}

/// An associative unital algebra `(A, μ, η)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    mul: Matrix,
    unit: Matrix,
    labels: Vec<String>,
}

impl Algebra {
    pub fn new(mul: Matrix, unit: Matrix, labels: Vec<String>) -> Result<Algebra> {
        let dim = unit.rows();
        if dim == 0 {
            return Err(Error::InvalidInput("algebras must have dimension at least 1".into()));
        }
        let field = unit.field();
        check_shape("unit", &unit, dim, 1, field)?;
        check_shape("multiplication", &mul, dim, dim * dim, field)?;
        check_labels(&labels, dim)?;
        Ok(Algebra { mul, unit, labels })
    }

    /// The ground field as a one-dimensional algebra.
    pub fn ground(field: FieldSpec) -> Algebra {
        Algebra::new(Matrix::identity(1, field), Matrix::identity(1, field), vec!["1".into()]).expect("k is an algebra")
    }

    pub fn dim(&self) -> usize {
        self.unit.rows()
    }

    pub fn field(&self) -> FieldSpec {
        self.unit.field()
    }

    pub fn mul(&self) -> &Matrix {
        &self.mul
    }

    pub fn unit(&self) -> &Matrix {
        &self.unit
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn one(&self) -> Vec<Scalar> {
        self.unit.column(0)
    }

    /// Product of two elements given in basis coordinates.
    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim();
        let mut out = vec![self.field().zero(); d];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let coeff = xi * yj;
                for (k, o) in out.iter_mut().enumerate() {
                    o.add_product(self.mul.get(k, i * d + j), &coeff);
                }
            }
        }
        out
    }

    /// Left multiplication by basis element `i`, as a `dim × dim` matrix.
    pub fn left_mult_matrix(&self, i: usize) -> Matrix {
        let d = self.dim();
        Matrix::from_fn(d, d, self.field(), |r, c| self.mul.get(r, i * d + c).clone())
    }
}

/// A coassociative counital coalgebra `(C, Δ, ε)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra {
    comul: Matrix,
    counit: Matrix,
    labels: Vec<String>,
}

impl Coalgebra {
    pub fn new(comul: Matrix, counit: Matrix, labels: Vec<String>) -> Result<Coalgebra> {
        let dim = counit.cols();
        if dim == 0 {
            return Err(Error::InvalidInput("coalgebras must have dimension at least 1".into()));
        }
        let field = counit.field();
        check_shape("counit", &counit, 1, dim, field)?;
        check_shape("comultiplication", &comul, dim * dim, dim, field)?;
        check_labels(&labels, dim)?;
        Ok(Coalgebra { comul, counit, labels })
    }

    pub fn ground(field: FieldSpec) -> Coalgebra {
        Coalgebra::new(Matrix::identity(1, field), Matrix::identity(1, field), vec!["1".into()])
            .expect("k is a coalgebra")
    }

    pub fn dim(&self) -> usize {
        self.counit.cols()
    }

    pub fn field(&self) -> FieldSpec {
        self.counit.field()
    }

    pub fn comul(&self) -> &Matrix {
        &self.comul
    }

    pub fn counit(&self) -> &Matrix {
        &self.counit
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// `Δ(v)` as a flat vector in `C ⊗ C`.
    pub fn comultiply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.comul.apply(v)
    }

    pub fn counit_of(&self, v: &[Scalar]) -> Scalar {
        self.counit.apply(v).pop().expect("counit has one row")
    }
}

/// An algebra and a coalgebra on the same space, with an optional antipode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bialgebra {
    alg: Algebra,
    coalg: Coalgebra,
    antipode: Option<Matrix>,
}

impl Bialgebra {
    pub fn new(alg: Algebra, coalg: Coalgebra, antipode: Option<Matrix>) -> Result<Bialgebra> {
        if alg.dim() != coalg.dim() {
            return Err(Error::DimensionMismatch(format!(
                "algebra has dimension {}, coalgebra {}",
                alg.dim(),
                coalg.dim()
            )));
        }
        if alg.field() != coalg.field() {
            return Err(Error::FieldMismatch("algebra and coalgebra over different fields".into()));
        }
        if alg.labels() != coalg.labels() {
            return Err(Error::InvalidInput("algebra and coalgebra carry different basis labels".into()));
        }
        if let Some(s) = &antipode {
            check_shape("antipode", s, alg.dim(), alg.dim(), alg.field())?;
        }
        Ok(Bialgebra { alg, coalg, antipode })
    }

    pub fn alg(&self) -> &Algebra {
        &self.alg
    }

    pub fn coalg(&self) -> &Coalgebra {
        &self.coalg
    }

    pub fn antipode(&self) -> Option<&Matrix> {
        self.antipode.as_ref()
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn field(&self) -> FieldSpec {
        self.alg.field()
    }

    pub fn labels(&self) -> &[String] {
        self.alg.labels()
    }

    pub fn without_antipode(&self) -> Bialgebra {
        Bialgebra {
            antipode: None,
            ..self.clone()
        }
    }

    pub fn with_antipode(&self, s: Matrix) -> Result<Bialgebra> {
        Bialgebra::new(self.alg.clone(), self.coalg.clone(), Some(s))
    }
}

pub fn check_algebra(a: &Algebra) -> ValidationReport {
    let d = a.dim();
    let f = a.field();
    let id = Matrix::identity(d, f);
    let mut report = ValidationReport::new(format!("algebra of dimension {d} over {f}"));
    report.compare(
        "associativity",
        &a.mul().before_kronecker(a.mul(), &id),
        &a.mul().before_kronecker(&id, a.mul()),
    );
    report.compare("left unit", &a.mul().before_kronecker(a.unit(), &id), &id);
    report.compare("right unit", &a.mul().before_kronecker(&id, a.unit()), &id);
    report
}

pub fn check_coalgebra(c: &Coalgebra) -> ValidationReport {
    let d = c.dim();
    let f = c.field();
    let id = Matrix::identity(d, f);
    let mut report = ValidationReport::new(format!("coalgebra of dimension {d} over {f}"));
    report.compare(
        "coassociativity",
        &c.comul().after_kronecker(c.comul(), &id),
        &c.comul().after_kronecker(&id, c.comul()),
    );
    report.compare("left counit", &c.comul().after_kronecker(c.counit(), &id), &id);
    report.compare("right counit", &c.comul().after_kronecker(&id, c.counit()), &id);
    report
}

/// Compatibility of the algebra and coalgebra structures, plus the antipode
/// identities when an antipode is present. The algebra and coalgebra axioms
/// themselves are reported by [`check_algebra`] and [`check_coalgebra`].
pub fn check_bialgebra(h: &Bialgebra) -> ValidationReport {
    let d = h.dim();
    let f = h.field();
    let (mul, unit) = (h.alg.mul(), h.alg.unit());
    let (comul, counit) = (h.coalg.comul(), h.coalg.counit());
    let mut report = ValidationReport::new(format!("bialgebra of dimension {d} over {f}"));

    // Δ(xy) = Δ(x)Δ(y) in H⊗H with the factorwise product.
    let both = comul.kronecker(comul).permute_rows(middle_swap_index([d, d, d, d]));
    report.compare(
        "comultiplication multiplicative",
        &(comul * mul),
        &(&mul.kronecker(mul) * &both),
    );
    report.compare("comultiplication unital", &(comul * unit), &unit.kronecker(unit));
    report.compare(
        "counit multiplicative",
        &(counit * mul),
        &counit.kronecker(counit),
    );
    report.compare("counit unital", &(counit * unit), &Matrix::identity(1, f));

    if let Some(s) = &h.antipode {
        let id = Matrix::identity(d, f);
        let target = unit * counit;
        report.compare(
            "antipode right",
            &(&(mul * &id.kronecker(s)) * comul),
            &target,
        );
        report.compare("antipode left", &(&(mul * &s.kronecker(&id)) * comul), &target);
    }
    report
}

/// Algebra, coalgebra and compatibility axioms together.
pub fn check_bialgebra_full(h: &Bialgebra) -> ValidationReport {
    let mut report = ValidationReport::new(format!("bialgebra of dimension {} over {}", h.dim(), h.field()));
    for part in [check_algebra(&h.alg), check_coalgebra(&h.coalg), check_bialgebra(h)] {
        report.results.extend(part.results);
    }
    report
}

pub fn is_cocommutative(c: &Coalgebra) -> bool {
    let d = c.dim();
    &swap_map(d, d, c.field()) * c.comul() == *c.comul()
}

pub fn is_commutative(a: &Algebra) -> bool {
    let d = a.dim();
    a.mul() * &swap_map(d, d, a.field()) == *a.mul()
}

/// The convolution algebra `C*` on the dual basis: `μ = Δᵀ`, `η = εᵀ`.
pub fn dual_algebra(c: &Coalgebra) -> Result<Algebra> {
    let report = check_coalgebra(c);
    if !report.passed() {
        return Err(Error::InvalidInput(format!("coalgebra fails its axioms:\n{report}")));
    }
    Algebra::new(
        c.comul().transpose(),
        c.counit().transpose(),
        c.labels().iter().map(|l| dual_label(l)).collect(),
    )
}

/// The dual coalgebra `A*` of a finite-dimensional algebra: `Δ = μᵀ`, `ε = ηᵀ`.
pub fn dual_coalgebra(a: &Algebra) -> Result<Coalgebra> {
    let report = check_algebra(a);
    if !report.passed() {
        return Err(Error::InvalidInput(format!("algebra fails its axioms:\n{report}")));
    }
    Coalgebra::new(
        a.mul().transpose(),
        a.unit().transpose(),
        a.labels().iter().map(|l| dual_label(l)).collect(),
    )
}

/// `H*` with the dual algebra and coalgebra structures and `S*` as antipode.
pub fn dual_bialgebra(h: &Bialgebra) -> Result<Bialgebra> {
    Bialgebra::new(
        dual_algebra(&h.coalg)?,
        dual_coalgebra(&h.alg)?,
        h.antipode.as_ref().map(Matrix::transpose),
    )
}
