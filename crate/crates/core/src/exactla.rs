//! Dense exact linear algebra.
//!
//! A [`Matrix`] with `rows × cols` entries represents a linear map from a
//! `cols`-dimensional space to a `rows`-dimensional one, acting on column
//! vectors. Tensor factors are flattened row-major: basis vector `(i, j)` of
//! `V ⊗ W` has flat index `i * dim W + j`. Every structure map in the crate
//! uses this convention.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    data: Vec<Scalar>,
}

/// Output of [`Matrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, field: FieldSpec) -> Matrix {
        Matrix {
            rows,
            cols,
            field,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(n: usize, field: FieldSpec) -> Matrix {
        let mut m = Matrix::zeros(n, n, field);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, field: FieldSpec, mut f: impl FnMut(usize, usize) -> Scalar) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                let v = f(r, c);
                assert_eq!(v.field(), field, "entry field differs from matrix field");
                data.push(v);
            }
        }
        Matrix { rows, cols, field, data }
    }

    /// Builds a matrix from explicit rows; `cols` is needed for the zero-row case.
    pub fn from_rows(field: FieldSpec, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            for v in row {
                if v.field() != field {
                    return Err(Error::FieldMismatch(format!("entry {v} in row {i} is not in {field}")));
                }
                data.push(v);
            }
        }
        Ok(Matrix {
            rows: n,
            cols,
            field,
            data,
        })
    }

    pub fn from_i64_rows(field: FieldSpec, rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
            .collect();
        Matrix::from_rows(field, cols, rows).expect("ragged integer rows")
    }

    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[Vec<Scalar>]) -> Matrix {
        Matrix::from_fn(rows, columns.len(), field, |r, c| columns[c][r].clone())
    }

    pub fn column_vector(field: FieldSpec, v: &[Scalar]) -> Matrix {
        Matrix::from_fn(v.len(), 1, field, |r, _| v[r].clone())
    }

    pub fn row_vector(field: FieldSpec, v: &[Scalar]) -> Matrix {
        Matrix::from_fn(1, v.len(), field, |_, c| v[c].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        assert_eq!(v.field(), self.field);
        self.data[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, self.field, |r, c| self.get(c, r).clone())
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn trace(&self) -> Scalar {
        assert!(self.is_square());
        (0..self.rows).fold(self.field.zero(), |acc, i| acc + self.get(i, i))
    }

    /// Matrix–vector product.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length does not match source dimension");
        (0..self.rows)
            .map(|r| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    acc.add_product(a, b);
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, exp: u32) -> Matrix {
        assert!(self.is_square());
        (0..exp).fold(Matrix::identity(self.rows, self.field), |acc, _| &acc * self)
    }

    /// Position of the first entry (row-major) where the two matrices differ.
    pub fn first_difference(&self, other: &Matrix) -> Option<(usize, usize)> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .position(|(a, b)| a != b)
            .map(|i| (i / self.cols, i % self.cols))
    }

    pub fn submatrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(rows, cols, self.field, |r, c| self.get(r0 + r, c0 + c).clone())
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        Matrix::from_fn(self.rows, cols.len(), self.field, |r, c| self.get(r, cols[c]).clone())
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        Matrix::from_fn(self.rows, self.cols + other.cols, self.field, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        })
    }

    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(self.rows + other.rows, self.cols + other.cols, self.field);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.data[r * m.cols + c] = self.get(r, c).clone();
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                m.data[(self.rows + r) * m.cols + self.cols + c] = other.get(r, c).clone();
            }
        }
        m
    }

    /// Reorders rows: row `i` of `self` becomes row `target(i)`. `target`
    /// must be a permutation; this composes with a permutation matrix
    /// without materializing it.
    pub fn permute_rows(&self, target: impl Fn(usize) -> usize) -> Matrix {
        let mut data = vec![self.field.zero(); self.data.len()];
        for r in 0..self.rows {
            let t = target(r);
            data[t * self.cols..(t + 1) * self.cols].clone_from_slice(self.row(r));
        }
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data,
        }
    }

    /// Reorders columns: column `j` of `self` becomes column `target(j)`.
    pub fn permute_cols(&self, target: impl Fn(usize) -> usize) -> Matrix {
        let mut data = vec![self.field.zero(); self.data.len()];
        for c in 0..self.cols {
            let t = target(c);
            for r in 0..self.rows {
                data[r * self.cols + t] = self.get(r, c).clone();
            }
        }
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data,
        }
    }

    /// Tensor product `self ⊗ other` under the row-major flat-index convention.
    pub fn kronecker(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.field, other.field, "kronecker of matrices over different fields");
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut m = Matrix::zeros(rows, cols, self.field);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            m.data[(i * other.rows + k) * cols + j * other.cols + l] = a * b;
                        }
                    }
                }
            }
        }
        m
    }

    /// `(a ⊗ b) · self` without materializing `a ⊗ b`.
    pub fn after_kronecker(&self, a: &Matrix, b: &Matrix) -> Matrix {
        assert_eq!(a.cols * b.cols, self.rows, "cannot compose with a kronecker of the wrong shape");
        assert!(a.field == self.field && b.field == self.field, "composition across fields");
        let mut out = Matrix::zeros(a.rows * b.rows, self.cols, self.field);
        for r in 0..self.rows {
            let (j, l) = (r / b.cols, r % b.cols);
            for c in 0..self.cols {
                let x = self.get(r, c);
                if x.is_zero() {
                    continue;
                }
                for i in (0..a.rows).filter(|&i| !a.get(i, j).is_zero()) {
                    let ax = a.get(i, j) * x;
                    for k in 0..b.rows {
                        out.data[(i * b.rows + k) * self.cols + c].add_product(&ax, b.get(k, l));
                    }
                }
            }
        }
        out
    }

    /// `self · (a ⊗ b)` without materializing `a ⊗ b`.
    pub fn before_kronecker(&self, a: &Matrix, b: &Matrix) -> Matrix {
        assert_eq!(self.cols, a.rows * b.rows, "cannot compose with a kronecker of the wrong shape");
        assert!(a.field == self.field && b.field == self.field, "composition across fields");
        let cols = a.cols * b.cols;
        let mut out = Matrix::zeros(self.rows, cols, self.field);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let x = self.get(r, c);
                if x.is_zero() {
                    continue;
                }
                let (i, k) = (c / b.rows, c % b.rows);
                for j in (0..a.cols).filter(|&j| !a.get(i, j).is_zero()) {
                    let ax = x * a.get(i, j);
                    for l in 0..b.cols {
                        out.data[r * cols + j * b.cols + l].add_product(&ax, b.get(k, l));
                    }
                }
            }
        }
        out
    }

    /// Canonical reduced row-echelon form: leftmost nonzero column, topmost
    /// nonzero row, no magnitude heuristics.
    pub fn rref(&self) -> Rref {
        let mut rows: Vec<Vec<Scalar>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..self.cols {
            if next == self.rows {
                break;
            }
            let Some(found) = (next..self.rows).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(next, found);
            let inv = rows[next][col].inv().expect("pivot is nonzero");
            if !inv.is_one() {
                for v in rows[next][col..].iter_mut() {
                    if !v.is_zero() {
                        *v = &*v * &inv;
                    }
                }
            }
            let pivot_row = rows[next].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r == next || row[col].is_zero() {
                    continue;
                }
                let factor = row[col].clone();
                for (c, p) in pivot_row.iter().enumerate().skip(col) {
                    if !p.is_zero() {
                        row[c] = &row[c] - &(&factor * p);
                    }
                }
            }
            pivots.push(col);
            next += 1;
        }
        let reduced = Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data: rows.into_iter().flatten().collect(),
        };
        let rank = pivots.len();
        Rref { reduced, pivots, rank }
    }

    pub fn rank(&self) -> usize {
        // Eliminating over the shorter side is cheaper and gives the same rank.
        if self.rows > self.cols {
            self.transpose().rref().rank
        } else {
            self.rref().rank
        }
    }

    /// Canonical null-space basis: one vector per free column, in increasing
    /// order, with a 1 in its free position.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let Rref { reduced, pivots, .. } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![self.field.zero(); self.cols];
                v[free] = self.field.one();
                for (k, &p) in pivots.iter().enumerate() {
                    v[p] = -reduced.get(k, free);
                }
                v
            })
            .collect()
    }

    /// Kernel basis assembled as the columns of an inclusion map.
    pub fn kernel_matrix(&self) -> Matrix {
        Matrix::from_columns(self.field, self.cols, &self.kernel_basis())
    }

    /// Particular solution `X` of `self · X = targets` with free variables
    /// set to zero, or `None` when the system is inconsistent.
    pub fn solve(&self, targets: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, targets.rows, "solve: row counts differ");
        let Rref { reduced, pivots, .. } = self.hstack(targets).rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(self.cols, targets.cols, self.field);
        for (k, &p) in pivots.iter().enumerate() {
            for t in 0..targets.cols {
                x.data[p * targets.cols + t] = reduced.get(k, self.cols + t).clone();
            }
        }
        Some(x)
    }

    /// Inverse of a square matrix, when it exists.
    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let x = self.solve(&Matrix::identity(self.rows, self.field))?;
        (self.rank() == self.rows).then_some(x)
    }
}

/// The flip `A ⊗ B → B ⊗ A` sending flat index `i·b + j` to `j·a + i`.
pub fn swap_map(dim_a: usize, dim_b: usize, field: FieldSpec) -> Matrix {
    let n = dim_a * dim_b;
    let mut m = Matrix::zeros(n, n, field);
    for i in 0..dim_a {
        for j in 0..dim_b {
            m.set(j * dim_a + i, i * dim_b + j, field.one());
        }
    }
    m
}

/// Flat-index map of `id_A ⊗ τ_{B,C} ⊗ id_D`: `(a, b, c, d) ↦ (a, c, b, d)`.
pub fn middle_swap_index(dims: [usize; 4]) -> impl Fn(usize) -> usize {
    let [_, b, c, d] = dims;
    move |flat| {
        let dd = flat % d;
        let rest = flat / d;
        let cc = rest % c;
        let rest = rest / c;
        let bb = rest % b;
        let aa = rest / b;
        ((aa * c + cc) * b + bb) * d + dd
    }
}

impl Mul<&Matrix> for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            self.cols, rhs.rows,
            "cannot compose {}x{} after {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        assert_eq!(self.field, rhs.field, "composition across fields");
        let mut out = Matrix::zeros(self.rows, rhs.cols, self.field);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j].add_product(a, b);
                    }
                }
            }
        }
        out
    }
}

impl Add<&Matrix> for &Matrix {
    type Output = Matrix;

    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "adding matrices of different shapes");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub<&Matrix> for &Matrix {
    type Output = Matrix;

    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "subtracting matrices of different shapes");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;

    fn neg(self) -> Matrix {
        self.scale(&-self.field.one())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn rref_identity_and_zero() {
        let id = Matrix::identity(3, Q);
        let r = id.rref();
        assert_eq!(r.reduced, id);
        assert_eq!(r.pivots, vec![0, 1, 2]);
        assert_eq!(r.rank, 3);

        let z = Matrix::zeros(2, 4, Q);
        let r = z.rref();
        assert_eq!(r.reduced, z);
        assert!(r.pivots.is_empty());
        assert_eq!(r.rank, 0);
    }

    #[test]
    fn rref_rank_one() {
        let m = Matrix::from_i64_rows(Q, &[&[2, 4], &[1, 2]]);
        let r = m.rref();
        assert_eq!(r.reduced, Matrix::from_i64_rows(Q, &[&[1, 2], &[0, 0]]));
        assert_eq!(r.rank, 1);
        assert_eq!(m.transpose().rref().rank, 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(Matrix::identity(4, Q).kernel_basis().is_empty());
        let k = Matrix::zeros(2, 3, Q).kernel_basis();
        assert_eq!(Matrix::from_columns(Q, 3, &k), Matrix::identity(3, Q));

        // Over F2 the only nonzero vector killed by [1 1] is (1, 1).
        let f2 = FieldSpec::Prime(2);
        let m = Matrix::from_i64_rows(f2, &[&[1, 1]]);
        let brute: Vec<Vec<i64>> = [[0, 1], [1, 0], [1, 1]]
            .into_iter()
            .filter(|v| (v[0] + v[1]) % 2 == 0)
            .map(|v| v.to_vec())
            .collect();
        assert_eq!(brute, vec![vec![1, 1]]);
        assert_eq!(m.kernel_basis(), vec![vec![f2.one(), f2.one()]]);
    }

    #[test]
    fn solve_examples() {
        let b = Matrix::from_i64_rows(Q, &[&[5], &[-2]]);
        assert_eq!(Matrix::identity(2, Q).solve(&b).unwrap(), b);
        assert!(Matrix::zeros(2, 2, Q).solve(&b).is_none());

        let m = Matrix::from_i64_rows(Q, &[&[1, 2], &[2, 4]]);
        let t = Matrix::from_i64_rows(Q, &[&[3], &[6]]);
        let x = m.solve(&t).unwrap();
        assert_eq!(x, Matrix::from_i64_rows(Q, &[&[3], &[0]]));
        assert_eq!(&m * &x, t);
    }

    #[test]
    fn fused_kronecker_products_agree() {
        let a = Matrix::from_i64_rows(Q, &[&[1, 0, 2], &[0, -1, 3]]);
        let b = Matrix::from_i64_rows(Q, &[&[0, 5], &[7, 0], &[1, 1]]);
        let m = Matrix::from_fn(6, 4, Q, |i, j| Q.from_i64((i * 4 + j) as i64 % 5 - 2));
        assert_eq!(m.after_kronecker(&a, &b), &a.kronecker(&b) * &m);
        let n = Matrix::from_fn(3, 6, Q, |i, j| Q.from_i64((i + 2 * j) as i64 % 3 - 1));
        assert_eq!(n.before_kronecker(&a, &b), &n * &a.kronecker(&b));
    }

    #[test]
    fn kronecker_examples() {
        assert_eq!(
            Matrix::identity(2, Q).kronecker(&Matrix::identity(3, Q)),
            Matrix::identity(6, Q)
        );
        let a = Matrix::from_i64_rows(Q, &[&[1, 2], &[3, 4]]);
        assert!(a.kronecker(&Matrix::zeros(2, 3, Q)).is_zero());
        let s = Matrix::from_i64_rows(Q, &[&[2]]).kronecker(&Matrix::from_i64_rows(Q, &[&[3]]));
        assert_eq!(s, Matrix::from_i64_rows(Q, &[&[6]]));
    }

    #[test]
    fn swap_examples() {
        assert_eq!(swap_map(1, 4, Q), Matrix::identity(4, Q));
        let s = swap_map(2, 2, Q);
        assert_eq!(&s * &s, Matrix::identity(4, Q));
        assert_eq!(&swap_map(2, 3, Q) * &swap_map(3, 2, Q), Matrix::identity(6, Q));
    }

    #[test]
    fn middle_swap_matches_kronecker_of_swap() {
        let dims = [2, 3, 2, 2];
        let explicit = Matrix::identity(2, Q)
            .kronecker(&swap_map(3, 2, Q))
            .kronecker(&Matrix::identity(2, Q));
        let n = dims.iter().product();
        let via_index = Matrix::identity(n, Q).permute_rows(middle_swap_index(dims));
        assert_eq!(explicit, via_index);
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_i64_rows(Q, &[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(2, Q));
        assert!(Matrix::from_i64_rows(Q, &[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    fn small_matrix() -> impl Strategy<Value = Matrix> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..4, r * c).prop_map(move |v| {
                Matrix::from_fn(r, c, Q, |i, j| Q.from_i64(v[i * c + j]))
            })
        })
    }

    fn small_f3_matrix() -> impl Strategy<Value = Matrix> {
        let f3 = FieldSpec::Prime(3);
        (1usize..5, 1usize..5).prop_flat_map(move |(r, c)| {
            proptest::collection::vec(0i64..3, r * c)
                .prop_map(move |v| Matrix::from_fn(r, c, f3, |i, j| f3.from_i64(v[i * c + j])))
        })
    }

    proptest! {
        #[test]
        fn rank_of_transpose(m in small_matrix()) {
            prop_assert_eq!(m.rref().rank, m.transpose().rref().rank);
        }

        #[test]
        fn kernel_is_killed_and_complete(m in small_matrix()) {
            let k = m.kernel_basis();
            prop_assert_eq!(m.rref().rank + k.len(), m.cols());
            for v in &k {
                prop_assert!(m.apply(v).iter().all(Scalar::is_zero));
            }
        }

        #[test]
        fn kernel_over_f3(m in small_f3_matrix()) {
            let k = m.kernel_basis();
            prop_assert_eq!(m.rref().rank + k.len(), m.cols());
            for v in &k {
                prop_assert!(m.apply(v).iter().all(Scalar::is_zero));
            }
        }

        #[test]
        fn solve_is_exact(m in small_matrix(), x in proptest::collection::vec(-2i64..3, 4)) {
            let xv: Vec<Scalar> = (0..m.cols()).map(|i| Q.from_i64(x[i % x.len()])).collect();
            let t = Matrix::column_vector(Q, &m.apply(&xv));
            let sol = m.solve(&t).expect("consistent by construction");
            prop_assert_eq!(&m * &sol, t);
        }

        #[test]
        fn kronecker_on_basis_vectors(a in small_matrix(), b in small_matrix()) {
            let ab = a.kronecker(&b);
            for j in 0..a.cols() {
                for l in 0..b.cols() {
                    let col = ab.column(j * b.cols() + l);
                    let (x, y) = (a.column(j), b.column(l));
                    for i in 0..a.rows() {
                        for k in 0..b.rows() {
                            prop_assert_eq!(&col[i * b.rows() + k], &(&x[i] * &y[k]));
                        }
                    }
                }
            }
        }

        #[test]
        fn kronecker_associative(a in small_matrix(), b in small_matrix(), c in small_matrix()) {
            prop_assert_eq!(a.kronecker(&b).kronecker(&c), a.kronecker(&b.kronecker(&c)));
        }

        #[test]
        fn swap_naturality(u in small_matrix(), v in small_matrix()) {
            let lhs = &swap_map(u.rows(), v.rows(), Q) * &u.kronecker(&v);
            let rhs = &v.kronecker(&u) * &swap_map(u.cols(), v.cols(), Q);
            prop_assert_eq!(lhs, rhs);
        }
    }
}
