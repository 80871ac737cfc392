//! Generators for concrete algebras, coalgebras, bialgebras and comodules.

use num_bigint::BigInt;

use crate::comodmod::{cofree_comodule, Comodule, Side};
use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::field::FieldSpec;
use crate::structures::{default_labels, Algebra, Bialgebra, Coalgebra};

/// Multiplication table of a finite monoid, validated at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteMonoidTable {
    table: Vec<Vec<usize>>,
    identity: usize,
    labels: Vec<String>,
    /// Permutation realization of each element, for permutation groups.
    perms: Option<Vec<Vec<usize>>>,
}

impl FiniteMonoidTable {
    pub fn new(table: Vec<Vec<usize>>, identity: usize, labels: Vec<String>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidInput("empty monoid".into()));
        }
        if labels.len() != n {
            return Err(Error::DimensionMismatch(format!("{} labels for {n} elements", labels.len())));
        }
        if identity >= n {
            return Err(Error::InvalidInput("identity index out of range".into()));
        }
        for (a, row) in table.iter().enumerate() {
            if row.len() != n || row.iter().any(|&x| x >= n) {
                return Err(Error::InvalidInput(format!("row {a} of the table is malformed")));
            }
        }
        for a in 0..n {
            if table[identity][a] != a || table[a][identity] != a {
                return Err(Error::InvalidInput(format!("element {a} is not fixed by the identity")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidInput(format!("table not associative at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        Ok(FiniteMonoidTable {
            table,
            identity,
            labels,
            perms: None,
        })
    }

    /// The group generated by closing a list of permutations of `0..k`
    /// under composition `(σ·τ)(i) = σ(τ(i))`. Elements are listed in
    /// discovery order starting from the identity.
    pub fn permutation_group(generators: &[Vec<usize>], label: impl Fn(&[usize]) -> String) -> Result<Self> {
        let k = generators.first().map_or(0, Vec::len);
        let identity: Vec<usize> = (0..k).collect();
        let mut elements = vec![identity];
        let mut frontier = 0;
        while frontier < elements.len() {
            let current = elements[frontier].clone();
            for g in generators {
                let next: Vec<usize> = (0..k).map(|i| g[current[i]]).collect();
                if !elements.contains(&next) {
                    elements.push(next);
                }
            }
            frontier += 1;
        }
        let index = |p: &[usize]| elements.iter().position(|e| e == p).expect("closed under composition");
        let table: Vec<Vec<usize>> = elements
            .iter()
            .map(|s| {
                elements
                    .iter()
                    .map(|t| index(&(0..k).map(|i| s[t[i]]).collect::<Vec<_>>()))
                    .collect()
            })
            .collect();
        let labels = elements.iter().map(|p| label(p)).collect();
        let mut t = FiniteMonoidTable::new(table, 0, labels)?;
        t.perms = Some(elements);
        Ok(t)
    }

    pub fn trivial() -> Self {
        FiniteMonoidTable::new(vec![vec![0]], 0, vec!["e".into()]).expect("trivial monoid")
    }

    pub fn cyclic(n: usize) -> Self {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let labels = (0..n)
            .map(|i| match i {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{i}"),
            })
            .collect();
        FiniteMonoidTable::new(table, 0, labels).expect("cyclic group")
    }

    pub fn direct_product(a: &Self, b: &Self) -> Self {
        let (n, m) = (a.size(), b.size());
        let table = (0..n * m)
            .map(|x| (0..n * m).map(|y| a.mul(x / m, y / m) * m + b.mul(x % m, y % m)).collect())
            .collect();
        let labels = (0..n * m)
            .map(|x| format!("({},{})", a.labels[x / m], b.labels[x % m]))
            .collect();
        FiniteMonoidTable::new(table, a.identity * m + b.identity, labels).expect("product of monoids")
    }

    pub fn klein_four() -> Self {
        Self::direct_product(&Self::cyclic(2), &Self::cyclic(2))
    }

    fn cycle_label(p: &[usize]) -> String {
        let mut seen = vec![false; p.len()];
        let mut out = String::new();
        for start in 0..p.len() {
            if seen[start] || p[start] == start {
                continue;
            }
            out.push('(');
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                out.push_str(&i.to_string());
                i = p[i];
            }
            out.push(')');
        }
        if out.is_empty() {
            "e".into()
        } else {
            out
        }
    }

    /// S₃ acting on `{0, 1, 2}`.
    pub fn symmetric3() -> Self {
        Self::permutation_group(&[vec![1, 0, 2], vec![1, 2, 0]], Self::cycle_label).expect("S3")
    }

    /// D₄ acting on the vertices `0..4` of a square.
    pub fn dihedral4() -> Self {
        Self::permutation_group(&[vec![1, 2, 3, 0], vec![0, 3, 2, 1]], Self::cycle_label).expect("D4")
    }

    /// The monoid `{1, z}` with `z·z = z`; not a group.
    pub fn idempotent_pair() -> Self {
        FiniteMonoidTable::new(vec![vec![0, 1], vec![1, 1]], 0, vec!["1".into(), "z".into()]).expect("semilattice")
    }

    pub fn size(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn permutations(&self) -> Option<&[Vec<usize>]> {
        self.perms.as_deref()
    }

    pub fn inverse(&self, a: usize) -> Option<usize> {
        (0..self.size()).find(|&b| self.mul(a, b) == self.identity && self.mul(b, a) == self.identity)
    }

    pub fn is_group(&self) -> bool {
        (0..self.size()).all(|a| self.inverse(a).is_some())
    }

    /// Conjugacy classes of a group, each sorted, ordered by least element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.size();
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for a in 0..n {
            if class_of[a] != usize::MAX {
                continue;
            }
            let mut class: Vec<usize> = (0..n)
                .filter_map(|g| self.inverse(g).map(|gi| self.mul(self.mul(g, a), gi)))
                .collect();
            class.sort_unstable();
            class.dedup();
            for &x in &class {
                class_of[x] = classes.len();
            }
            classes.push(class);
        }
        classes
    }
}

/// The monoid algebra `kΓ` with `Δg = g ⊗ g`, `εg = 1` and, for groups,
/// `S(g) = g⁻¹`.
pub fn monoid_bialgebra(t: &FiniteMonoidTable, field: FieldSpec) -> Bialgebra {
    let n = t.size();
    let mut mul = Matrix::zeros(n, n * n, field);
    let mut comul = Matrix::zeros(n * n, n, field);
    for a in 0..n {
        for b in 0..n {
            mul.set(t.mul(a, b), a * n + b, field.one());
        }
        comul.set(a * n + a, a, field.one());
    }
    let mut unit = Matrix::zeros(n, 1, field);
    unit.set(t.identity(), 0, field.one());
    let counit = Matrix::from_fn(1, n, field, |_, _| field.one());
    let antipode = t.is_group().then(|| {
        let mut s = Matrix::zeros(n, n, field);
        for g in 0..n {
            s.set(t.inverse(g).expect("group element"), g, field.one());
        }
        s
    });
    let labels = t.labels().to_vec();
    Bialgebra::new(
        Algebra::new(mul, unit, labels.clone()).expect("shapes"),
        Coalgebra::new(comul, counit, labels).expect("shapes"),
        antipode,
    )
    .expect("monoid bialgebra")
}

/// `Map(Γ, k)` on the δ-basis: pointwise product, `Δδ_g = Σ_{ab=g} δ_a ⊗ δ_b`,
/// `ε(δ_g) = [g = e]` and `S(δ_g) = δ_{g⁻¹}` for groups.
pub fn function_bialgebra(t: &FiniteMonoidTable, field: FieldSpec) -> Bialgebra {
    let n = t.size();
    let mut mul = Matrix::zeros(n, n * n, field);
    let mut comul = Matrix::zeros(n * n, n, field);
    for a in 0..n {
        mul.set(a, a * n + a, field.one());
        for b in 0..n {
            comul.set(a * n + b, t.mul(a, b), field.one());
        }
    }
    let unit = Matrix::from_fn(n, 1, field, |_, _| field.one());
    let mut counit = Matrix::zeros(1, n, field);
    counit.set(0, t.identity(), field.one());
    let antipode = t.is_group().then(|| {
        let mut s = Matrix::zeros(n, n, field);
        for g in 0..n {
            s.set(t.inverse(g).expect("group element"), g, field.one());
        }
        s
    });
    let labels: Vec<String> = t.labels().iter().map(|l| format!("{l}*")).collect();
    Bialgebra::new(
        Algebra::new(mul, unit, labels.clone()).expect("shapes"),
        Coalgebra::new(comul, counit, labels).expect("shapes"),
        antipode,
    )
    .expect("function bialgebra")
}

fn binomial(n: usize, k: usize) -> BigInt {
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// Divided powers `X^[0..=N]` with `X^[i]X^[j] = C(i+j, i) X^[i+j]` (zero past
/// degree `N`), `Δ(X^[n]) = Σ X^[i] ⊗ X^[n-i]`, `ε(X^[n]) = [n = 0]` and
/// `S(X^[n]) = (-1)^n X^[n]`.
///
/// The coalgebra is a genuine subcoalgebra and the algebra a genuine quotient
/// for every `N`; the two are compatible as a bialgebra only when `N = 0` or
/// the characteristic `p` is positive and `N + 1` is a power of `p`.
pub fn divided_power_truncation(n: usize, field: FieldSpec) -> Bialgebra {
    let d = n + 1;
    let mut mul = Matrix::zeros(d, d * d, field);
    let mut comul = Matrix::zeros(d * d, d, field);
    for i in 0..d {
        for j in 0..d {
            if i + j < d {
                mul.set(i + j, i * d + j, field.from_bigint(&binomial(i + j, i)));
                comul.set(i * d + j, i + j, field.one());
            }
        }
    }
    let mut unit = Matrix::zeros(d, 1, field);
    unit.set(0, 0, field.one());
    let counit = unit.transpose();
    let antipode = Matrix::from_fn(d, d, field, |r, c| {
        if r != c {
            field.zero()
        } else if r % 2 == 0 {
            field.one()
        } else {
            -field.one()
        }
    });
    let labels: Vec<String> = (0..d).map(|i| format!("X^[{i}]")).collect();
    Bialgebra::new(
        Algebra::new(mul, unit, labels.clone()).expect("shapes"),
        Coalgebra::new(comul, counit, labels).expect("shapes"),
        Some(antipode),
    )
    .expect("divided powers")
}

/// `k[y]/(y^{N+1})` in the basis `1, y, …, y^N`.
pub fn truncated_polynomial_algebra(n: usize, field: FieldSpec) -> Algebra {
    let d = n + 1;
    let mut mul = Matrix::zeros(d, d * d, field);
    for i in 0..d {
        for j in 0..d - i {
            mul.set(i + j, i * d + j, field.one());
        }
    }
    let mut unit = Matrix::zeros(d, 1, field);
    unit.set(0, 0, field.one());
    let labels = (0..d).map(|i| format!("X^[{i}]*")).collect();
    Algebra::new(mul, unit, labels).expect("truncated polynomials")
}

/// Comatrix coalgebra on `e_ij` (flat `i·n + j`): `Δe_ij = Σ_k e_ik ⊗ e_kj`,
/// `ε(e_ij) = δ_ij`.
pub fn comatrix_coalgebra(n: usize, field: FieldSpec) -> Result<Coalgebra> {
    if n == 0 {
        return Err(Error::InvalidInput("comatrix coalgebra needs n >= 1".into()));
    }
    let d = n * n;
    let mut comul = Matrix::zeros(d * d, d, field);
    let mut counit = Matrix::zeros(1, d, field);
    for i in 0..n {
        counit.set(0, i * n + i, field.one());
        for j in 0..n {
            for k in 0..n {
                comul.set((i * n + k) * d + k * n + j, i * n + j, field.one());
            }
        }
    }
    let labels = (0..n).flat_map(|i| (0..n).map(move |j| format!("e{i}{j}"))).collect();
    Coalgebra::new(comul, counit, labels)
}

/// `k^n` over the comatrix coalgebra: `v_j ↦ Σ_i v_i ⊗ e_ij`.
pub fn comatrix_natural_comodule(n: usize, field: FieldSpec) -> Result<Comodule> {
    let c = comatrix_coalgebra(n, field)?;
    let d = n * n;
    let coaction = Matrix::from_fn(n * d, n, field, |row, j| {
        let (i, k) = (row / d, row % d);
        if k == i * n + j {
            field.one()
        } else {
            field.zero()
        }
    });
    Comodule::new(Side::Right, coaction, c)
}

/// `M_n(k)` on matrix units `e_ij` (flat `i·n + j`).
pub fn matrix_algebra(n: usize, field: FieldSpec) -> Result<Algebra> {
    if n == 0 {
        return Err(Error::InvalidInput("matrix algebra needs n >= 1".into()));
    }
    let d = n * n;
    let mut mul = Matrix::zeros(d, d * d, field);
    let mut unit = Matrix::zeros(d, 1, field);
    for i in 0..n {
        unit.set(i * n + i, 0, field.one());
        for j in 0..n {
            for l in 0..n {
                mul.set(i * n + l, (i * n + j) * d + j * n + l, field.one());
            }
        }
    }
    Algebra::new(mul, unit, default_labels("e", d))
}

/// `C` as a right comodule over itself via `Δ`.
pub fn regular_comodule(c: &Coalgebra) -> Comodule {
    cofree_comodule(c, 1)
}

/// The comodule over `Map(Γ, k)` attached to a representation `g ↦ ρ(g)`:
/// `e_i ↦ Σ_j e_j ⊗ ρ_ji` with matrix-coefficient functions `ρ_ji(g) = ρ(g)_ji`.
pub fn permutation_comodule(t: &FiniteMonoidTable, action: &[Matrix], field: FieldSpec) -> Result<Comodule> {
    let n = t.size();
    if action.len() != n {
        return Err(Error::DimensionMismatch(format!("{} matrices for {n} elements", action.len())));
    }
    let dim = action[0].rows();
    for (g, m) in action.iter().enumerate() {
        if m.rows() != dim || m.cols() != dim || m.field() != field {
            return Err(Error::InvalidInput(format!("matrix for element {g} has the wrong shape or field")));
        }
    }
    if action[t.identity()] != Matrix::identity(dim, field) {
        return Err(Error::InvalidInput("identity must act trivially".into()));
    }
    for a in 0..n {
        for b in 0..n {
            if action[t.mul(a, b)] != &action[a] * &action[b] {
                return Err(Error::InvalidInput(format!(
                    "action does not respect the table at ({}, {})",
                    t.labels()[a],
                    t.labels()[b]
                )));
            }
        }
    }
    let coaction = Matrix::from_fn(dim * n, dim, field, |row, i| {
        let (j, g) = (row / n, row % n);
        action[g].get(j, i).clone()
    });
    let over = function_bialgebra(t, field).coalg().clone();
    Comodule::new(Side::Right, coaction, over)
}

/// A one-dimensional representation from scalar values `χ(g)`.
pub fn scalar_representation(values: &[i64], field: FieldSpec) -> Vec<Matrix> {
    values.iter().map(|&v| Matrix::from_i64_rows(field, &[&[v]])).collect()
}

/// Permutation matrices `e_i ↦ e_σ(i)` for a permutation group.
pub fn natural_representation(t: &FiniteMonoidTable, field: FieldSpec) -> Result<Vec<Matrix>> {
    let perms = t
        .permutations()
        .ok_or_else(|| Error::InvalidInput("table has no permutation realization".into()))?;
    Ok(perms
        .iter()
        .map(|p| {
            let mut m = Matrix::zeros(p.len(), p.len(), field);
            for (i, &pi) in p.iter().enumerate() {
                m.set(pi, i, field.one());
            }
            m
        })
        .collect())
}

/// Left translation `h ↦ gh` on the basis `Γ`.
pub fn regular_representation(t: &FiniteMonoidTable, field: FieldSpec) -> Vec<Matrix> {
    let n = t.size();
    (0..n)
        .map(|g| {
            let mut m = Matrix::zeros(n, n, field);
            for h in 0..n {
                m.set(t.mul(g, h), h, field.one());
            }
            m
        })
        .collect()
}

pub fn trivial_representation(t: &FiniteMonoidTable, field: FieldSpec) -> Vec<Matrix> {
    vec![Matrix::identity(1, field); t.size()]
}

/// Sign of each permutation, as 1×1 matrices.
pub fn sign_representation(t: &FiniteMonoidTable, field: FieldSpec) -> Result<Vec<Matrix>> {
    let perms = t
        .permutations()
        .ok_or_else(|| Error::InvalidInput("table has no permutation realization".into()))?;
    Ok(perms
        .iter()
        .map(|p| {
            let inversions = (0..p.len())
                .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count();
            let s = if inversions % 2 == 0 { 1 } else { -1 };
            Matrix::from_i64_rows(field, &[&[s]])
        })
        .collect())
}

/// Restriction of a representation to the invariant subspace spanned by the
/// columns of `basis`.
pub fn subrepresentation(action: &[Matrix], basis: &Matrix) -> Result<Vec<Matrix>> {
    action
        .iter()
        .map(|m| {
            basis
                .solve(&(m * basis))
                .ok_or_else(|| Error::InvalidInput("subspace is not invariant".into()))
        })
        .collect()
}

/// The two-dimensional standard representation of S₃: the natural
/// representation restricted to the sum-zero vectors `e0 - e1`, `e1 - e2`.
pub fn standard_representation_s3(t: &FiniteMonoidTable, field: FieldSpec) -> Result<Vec<Matrix>> {
    let natural = natural_representation(t, field)?;
    if natural[0].rows() != 3 {
        return Err(Error::InvalidInput("standard representation needs S3 on three points".into()));
    }
    let basis = Matrix::from_i64_rows(field, &[&[1, 0], &[-1, 1], &[0, -1]]);
    subrepresentation(&natural, &basis)
}

/// The comodule `m ↦ Σ_n φⁿ(m) ⊗ X^[n]` over divided powers truncated at `N`.
pub fn nilpotent_comodule(phi: &Matrix, n: usize, field: FieldSpec) -> Result<Comodule> {
    if !phi.is_square() || phi.field() != field {
        return Err(Error::InvalidInput("phi must be a square matrix over the given field".into()));
    }
    let order = n + 1;
    if !phi.pow(order as u32).is_zero() {
        return Err(Error::NotNilpotentEnough { order });
    }
    let dim = phi.rows();
    let d = n + 1;
    let powers: Vec<Matrix> = (0..d).map(|k| phi.pow(k as u32)).collect();
    let coaction = Matrix::from_fn(dim * d, dim, field, |row, i| {
        let (p, k) = (row / d, row % d);
        powers[k].get(p, i).clone()
    });
    Comodule::new(Side::Right, coaction, divided_power_truncation(n, field).coalg().clone())
}

/// Jordan block of size `n` with ones on the superdiagonal.
pub fn jordan_block(n: usize, field: FieldSpec) -> Matrix {
    Matrix::from_fn(n, n, field, |r, c| if c == r + 1 { field.one() } else { field.zero() })
}
