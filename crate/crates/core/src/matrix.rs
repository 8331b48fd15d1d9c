//! Dense matrices of scalars and exact Gaussian elimination.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};

/// A row-major matrix of scalars sharing one field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ConstMatrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    data: Vec<Scalar>,
}

/// Reduced row echelon form together with the pivot columns, in order.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub reduced: ConstMatrix,
    pub pivots: Vec<usize>,
}

impl ConstMatrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        ConstMatrix {
            rows,
            cols,
            field,
            data: alloc::vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, size: usize) -> Self {
        let mut m = Self::zeros(field, size, size);
        for i in 0..size {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(field: FieldSpec, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let s = f(i, j);
                assert_eq!(s.field(), field, "entry field mismatch");
                data.push(s);
            }
        }
        ConstMatrix {
            rows,
            cols,
            field,
            data,
        }
    }

    /// Builds a matrix from rows; every row must have the same length and field.
    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::WrongShape(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            for s in row {
                if s.field() != field {
                    return Err(Error::WrongShape(format!(
                        "entry in field {} inside a matrix over {field}",
                        s.field()
                    )));
                }
                data.push(s);
            }
        }
        Ok(ConstMatrix {
            rows: nrows,
            cols,
            field,
            data,
        })
    }

    pub fn from_i64_rows(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_fn(field, rows.len(), cols, |i, j| field.from_i64(rows[i][j]))
    }

    /// A single column.
    pub fn column(field: FieldSpec, entries: &[Scalar]) -> Self {
        Self::from_fn(field, entries.len(), 1, |i, _| entries[i].clone())
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

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        assert_eq!(value.field(), self.field, "entry field mismatch");
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column_vec(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, rhs: &ConstMatrix) -> Self {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        assert_eq!(self.field, rhs.field, "field mismatch");
        Self::from_fn(self.field, self.rows, rhs.cols, |i, j| {
            let mut acc = self.field.zero();
            for k in 0..self.cols {
                let a = self.get(i, k);
                if !a.is_zero() {
                    acc = acc + a * rhs.get(k, j);
                }
            }
            acc
        })
    }

    pub fn mul_vec(&self, x: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, x.len(), "vector length differs from column count");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .fold(self.field.zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self::from_fn(self.field, self.rows, self.cols, |i, j| self.get(i, j) * s)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// Gauss-Jordan elimination. The pivot in each column is the first nonzero
    /// entry at or below the current row, so the output is deterministic.
    pub fn echelon(&self) -> Echelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let pv = m.get(r, j);
                    if pv.is_zero() {
                        continue;
                    }
                    let v = m.get(i, j) - &(&factor * pv);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { reduced: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Basis of `{x : self * x = 0}`. One vector per free column, in index
    /// order: that free variable is 1, the other free variables are 0.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let Echelon { reduced, pivots } = self.echelon();
        let mut is_pivot = alloc::vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut x = alloc::vec![self.field.zero(); self.cols];
                x[f] = self.field.one();
                for (k, &p) in pivots.iter().enumerate() {
                    x[p] = -reduced.get(k, f);
                }
                x
            })
            .collect()
    }

    /// Some solution of `self * x = b`, with free variables set to zero.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows, "right-hand side length differs from row count");
        let aug = Self::from_fn(self.field, self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let Echelon { reduced, pivots } = aug.echelon();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = alloc::vec![self.field.zero(); self.cols];
        for (k, &p) in pivots.iter().enumerate() {
            x[p] = reduced.get(k, self.cols).clone();
        }
        Some(x)
    }

    pub fn invert(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::WrongShape(format!(
                "cannot invert a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let aug = Self::from_fn(self.field, n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                self.field.one()
            } else {
                self.field.zero()
            }
        });
        let Echelon { reduced, pivots } = aug.echelon();
        if pivots.iter().filter(|&&p| p < n).count() < n {
            return Err(Error::SingularMatrix);
        }
        Ok(Self::from_fn(self.field, n, n, |i, j| reduced.get(i, n + j).clone()))
    }

    /// Determinant by elimination.
    pub fn determinant(&self) -> Scalar {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let mut m = self.clone();
        let mut det = self.field.one();
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                return self.field.zero();
            };
            if p != c {
                m.swap_rows(c, p);
                det = -det;
            }
            let pivot = m.get(c, c).clone();
            det = det * &pivot;
            let inv = pivot.inv().expect("pivot is nonzero");
            for i in c + 1..m.rows {
                let factor = m.get(i, c) * &inv;
                if factor.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = m.get(i, j) - &(&factor * m.get(c, j));
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    pub fn random<R: Rng + ?Sized>(field: FieldSpec, rows: usize, cols: usize, rng: &mut R) -> Self {
        Self::from_fn(field, rows, cols, |_, _| field.random(rng))
    }

    /// Draws random matrices until one is invertible.
    pub fn random_invertible_with<R: Rng + ?Sized>(field: FieldSpec, size: usize, rng: &mut R) -> Self {
        loop {
            let m = Self::random(field, size, size, rng);
            if m.rank() == size {
                return m;
            }
        }
    }

    /// Seeded [`ConstMatrix::random_invertible_with`]; same seed, same matrix.
    pub fn random_invertible(size: usize, field: FieldSpec, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Self::random_invertible_with(field, size, &mut rng)
    }

    /// Greedily extends `vectors` with standard unit vectors, in index order, to
    /// a basis. Returns the indices of the unit vectors used.
    pub fn complete_with_units(field: FieldSpec, dim: usize, vectors: &[Vec<Scalar>]) -> Vec<usize> {
        let mut current: Vec<Vec<Scalar>> = vectors.to_vec();
        let mut rank = Self::from_rows(field, current.clone()).map_or(0, |m| m.rank());
        let mut used = Vec::new();
        for i in 0..dim {
            if rank == dim {
                break;
            }
            let mut e = alloc::vec![field.zero(); dim];
            e[i] = field.one();
            current.push(e);
            let r = Self::from_rows(field, current.clone()).expect("equal lengths").rank();
            if r > rank {
                rank = r;
                used.push(i);
            } else {
                current.pop();
            }
        }
        used
    }
}

impl fmt::Debug for ConstMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ConstMatrix[{}x{} over {}](", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str("; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        f.write_str(")")
    }
}

/// Accumulates sparse linear equations keyed by an ordered label (typically a
/// monomial, or a `(row, monomial)` pair) over a fixed set of unknowns.
pub(crate) struct LinearSystem<K: Ord> {
    field: FieldSpec,
    unknowns: usize,
    equations: BTreeMap<K, BTreeMap<usize, Scalar>>,
}

impl<K: Ord> LinearSystem<K> {
    pub(crate) fn new(field: FieldSpec, unknowns: usize) -> Self {
        LinearSystem {
            field,
            unknowns,
            equations: BTreeMap::new(),
        }
    }

    /// Adds `coeff * unknown` to equation `key`.
    pub(crate) fn add(&mut self, key: K, unknown: usize, coeff: &Scalar) {
        if coeff.is_zero() {
            return;
        }
        let row = self.equations.entry(key).or_default();
        let zero = self.field.zero();
        let cur = row.get(&unknown).unwrap_or(&zero);
        let sum = cur + coeff;
        row.insert(unknown, sum);
    }

    pub(crate) fn keys(&self) -> impl Iterator<Item = &K> {
        self.equations.keys()
    }

    pub(crate) fn matrix(&self) -> ConstMatrix {
        let mut m = ConstMatrix::zeros(self.field, self.equations.len(), self.unknowns);
        for (i, row) in self.equations.values().enumerate() {
            for (&j, c) in row {
                m.set(i, j, c.clone());
            }
        }
        m
    }

    pub(crate) fn nullspace(&self) -> Vec<Vec<Scalar>> {
        if self.equations.is_empty() {
            return ConstMatrix::zeros(self.field, 0, self.unknowns).nullspace();
        }
        self.matrix().nullspace()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;
    const GF: FieldSpec = FieldSpec::Prime(32003);

    fn q(num: i64, den: i64) -> Scalar {
        Q.from_ratio(num, den).unwrap()
    }

    #[test]
    fn rank_of_identity_and_zero() {
        assert_eq!(ConstMatrix::identity(Q, 3).rank(), 3);
        assert_eq!(ConstMatrix::zeros(Q, 2, 5).rank(), 0);
        assert_eq!(ConstMatrix::zeros(Q, 0, 4).rank(), 0);
    }

    #[test]
    fn rank_of_second_example_coefficients() {
        // Row coefficient matrix of [[x1,x2,x3],[x4,0,0],[x5,0,0]] restricted to
        // its nonzero columns (x1 x2 x3 x4 x5 plus one zero column).
        let m = ConstMatrix::from_i64_rows(Q, &[&[1, 1, 1, 0, 0, 0], &[0, 0, 0, 1, 0, 0], &[0, 0, 0, 0, 1, 0]]);
        assert_eq!(m.rank(), 3);
    }

    #[test]
    fn nullspace_of_all_ones_row() {
        let m = ConstMatrix::from_i64_rows(Q, &[&[1, 1, 1]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(m.mul_vec(v).iter().all(Scalar::is_zero));
        }
        assert_eq!(ns[0], alloc::vec![Q.from_i64(-1), Q.one(), Q.zero()]);
        assert_eq!(ns[1], alloc::vec![Q.from_i64(-1), Q.zero(), Q.one()]);
    }

    #[test]
    fn identity_has_trivial_nullspace() {
        assert!(ConstMatrix::identity(GF, 4).nullspace().is_empty());
    }

    #[test]
    fn invert_diagonal() {
        let m = ConstMatrix::from_rows(
            Q,
            alloc::vec![alloc::vec![Q.from_i64(2), Q.zero()], alloc::vec![Q.zero(), q(1, 3)],],
        )
        .unwrap();
        let inv = m.invert().unwrap();
        assert_eq!(inv.get(0, 0), &q(1, 2));
        assert_eq!(inv.get(1, 1), &Q.from_i64(3));
        assert!(inv.get(0, 1).is_zero());
        assert_eq!(
            ConstMatrix::identity(Q, 3).invert().unwrap(),
            ConstMatrix::identity(Q, 3)
        );
    }

    #[test]
    fn invert_singular_fails() {
        let m = ConstMatrix::from_i64_rows(Q, &[&[1, 2], &[2, 4]]);
        assert_eq!(m.invert(), Err(Error::SingularMatrix));
        let rect = ConstMatrix::zeros(Q, 2, 3);
        assert!(matches!(rect.invert(), Err(Error::WrongShape(_))));
    }

    #[test]
    fn random_invertible_is_seeded_and_full_rank() {
        let a = ConstMatrix::random_invertible(3, GF, 1);
        assert_eq!(a.rank(), 3);
        assert_eq!(a, ConstMatrix::random_invertible(3, GF, 1));
        let b = ConstMatrix::random_invertible(1, Q, 99);
        assert!(!b.get(0, 0).is_zero());
        for seed in 0..20 {
            let m = ConstMatrix::random_invertible(3, Q, seed);
            assert!(m.invert().unwrap().mul(&m).is_identity());
            assert!(m.mul(&m.invert().unwrap()).is_identity());
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = ConstMatrix::from_i64_rows(Q, &[&[1, 1], &[1, -1]]);
        let x = m.solve(&[Q.from_i64(3), Q.from_i64(1)]).unwrap();
        assert_eq!(x, alloc::vec![Q.from_i64(2), Q.one()]);
        let sing = ConstMatrix::from_i64_rows(Q, &[&[1, 1], &[2, 2]]);
        assert!(sing.solve(&[Q.one(), Q.one()]).is_none());
    }

    #[test]
    fn determinant_matches_rank() {
        let m = ConstMatrix::from_i64_rows(Q, &[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]]);
        assert_eq!(m.determinant(), Q.from_i64(-2));
        let s = ConstMatrix::from_i64_rows(GF, &[&[1, 2], &[2, 4]]);
        assert!(s.determinant().is_zero());
    }

    #[test]
    fn unit_completion_is_greedy() {
        let v = alloc::vec![alloc::vec![Q.one(), Q.one(), Q.zero()]];
        assert_eq!(ConstMatrix::complete_with_units(Q, 3, &v), alloc::vec![0, 2]);
        let w = alloc::vec![alloc::vec![Q.zero(), Q.zero(), Q.one()]];
        assert_eq!(ConstMatrix::complete_with_units(Q, 3, &w), alloc::vec![0, 1]);
    }
}
