//! Matrices whose entries are homogeneous forms of one common degree.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::forms::{monomials, Form, FormVector, LinForm, Monomial};
use crate::matrix::{ConstMatrix, LinearSystem};
use crate::scalar::{FieldSpec, Scalar};

/// Which side of a matrix to flatten in [`FormMatrix::coefficient_matrix`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    Rows,
    Cols,
}

/// A rectangular matrix of forms, all in `n` variables and of degree `degree`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FormMatrix {
    field: FieldSpec,
    n: usize,
    degree: u32,
    rows: usize,
    cols: usize,
    entries: Vec<Form>,
}

/// All `k`-element subsets of `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

impl FormMatrix {
    pub fn new(field: FieldSpec, n: usize, degree: u32, rows: usize, cols: usize, entries: Vec<Form>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::WrongShape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if let Some(bad) = entries
            .iter()
            .find(|e| e.n() != n || e.degree() != degree || e.field() != field)
        {
            return Err(Error::WrongShape(format!(
                "entry with n={}, degree={} in a matrix with n={n}, degree={degree}",
                bad.n(),
                bad.degree()
            )));
        }
        Ok(FormMatrix {
            field,
            n,
            degree,
            rows,
            cols,
            entries,
        })
    }

    pub fn from_fn(
        field: FieldSpec,
        n: usize,
        degree: u32,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Form,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self::new(field, n, degree, rows, cols, entries).expect("from_fn entries are consistent")
    }

    /// Matrix of linear forms from rows of [`LinForm`]s in `n` variables.
    pub fn from_linforms(field: FieldSpec, n: usize, rows: &[Vec<LinForm>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::WrongShape(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            for f in row {
                if f.n() != n || f.field() != field {
                    return Err(Error::WrongShape(format!(
                        "linear form with {} variables over {} in a matrix with n={n} over {field}",
                        f.n(),
                        f.field()
                    )));
                }
                entries.push(f.to_form());
            }
        }
        Self::new(field, n, 1, rows.len(), cols, entries)
    }

    /// Entries drawn independently with [`Form::random`].
    pub fn random<R: Rng + ?Sized>(
        field: FieldSpec,
        n: usize,
        degree: u32,
        rows: usize,
        cols: usize,
        rng: &mut R,
    ) -> Self {
        Self::from_fn(field, n, degree, rows, cols, |_, _| Form::random(field, n, degree, rng))
    }

    /// Matrix of linear forms from integer coefficient lists.
    pub fn from_i64_coeffs(field: FieldSpec, n: usize, rows: &[&[&[i64]]]) -> Self {
        let rows: Vec<Vec<LinForm>> = rows
            .iter()
            .map(|r| r.iter().map(|c| LinForm::from_i64(field, c)).collect())
            .collect();
        Self::from_linforms(field, n, &rows).expect("well-formed literal")
    }

    /// `u * v^t`.
    pub fn outer(u: &FormVector, v: &FormVector) -> Self {
        assert_eq!(u.n(), v.n(), "variable count mismatch");
        Self::from_fn(u.field(), u.n(), u.degree() + v.degree(), u.len(), v.len(), |i, j| {
            u.get(i) * v.get(j)
        })
    }

    /// `form * Id`.
    pub fn scalar_identity(form: &Form, size: usize) -> Self {
        Self::from_fn(form.field(), form.n(), form.degree(), size, size, |i, j| {
            if i == j {
                form.clone()
            } else {
                Form::zero(form.field(), form.n(), form.degree())
            }
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Form {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[Form] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Form] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Form::is_zero)
    }

    pub fn zero_form(&self) -> Form {
        Form::zero(self.field, self.n, self.degree)
    }

    /// Entries in row-major order as linear forms; `None` unless `degree == 1`.
    pub fn entry_linforms(&self) -> Option<Vec<LinForm>> {
        self.entries.iter().map(Form::to_linform).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.field, self.n, self.degree, self.cols, self.rows, |i, j| {
            self.get(j, i).clone()
        })
    }

    pub fn mul(&self, rhs: &FormMatrix) -> Self {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        assert_eq!(self.n, rhs.n, "variable count mismatch");
        let degree = self.degree + rhs.degree;
        Self::from_fn(self.field, self.n, degree, self.rows, rhs.cols, |i, j| {
            let mut acc = Form::zero(self.field, self.n, degree);
            for k in 0..self.cols {
                acc = &acc + &(self.get(i, k) * rhs.get(k, j));
            }
            acc
        })
    }

    /// `self * u`.
    pub fn apply(&self, u: &FormVector) -> FormVector {
        assert_eq!(self.cols, u.len(), "vector length differs from column count");
        let degree = self.degree + u.degree();
        let entries = (0..self.rows)
            .map(|i| {
                let mut acc = Form::zero(self.field, self.n, degree);
                for j in 0..self.cols {
                    acc = &acc + &(self.get(i, j) * u.get(j));
                }
                acc
            })
            .collect();
        FormVector::new(self.field, self.n, degree, entries).expect("consistent degrees")
    }

    /// `f * self` for a constant matrix `f`.
    pub fn left_mul(&self, f: &ConstMatrix) -> Self {
        assert_eq!(f.cols(), self.rows, "inner dimensions differ");
        Self::from_fn(self.field, self.n, self.degree, f.rows(), self.cols, |i, j| {
            let mut acc = self.zero_form();
            for k in 0..self.rows {
                acc = &acc + &self.get(k, j).scale(f.get(i, k));
            }
            acc
        })
    }

    /// `self * g` for a constant matrix `g`.
    pub fn right_mul(&self, g: &ConstMatrix) -> Self {
        assert_eq!(self.cols, g.rows(), "inner dimensions differ");
        Self::from_fn(self.field, self.n, self.degree, self.rows, g.cols(), |i, j| {
            let mut acc = self.zero_form();
            for k in 0..self.cols {
                acc = &acc + &self.get(i, k).scale(g.get(k, j));
            }
            acc
        })
    }

    /// Value at a point of `k^n`.
    pub fn evaluate(&self, point: &[Scalar]) -> ConstMatrix {
        ConstMatrix::from_fn(self.field, self.rows, self.cols, |i, j| self.get(i, j).evaluate(point))
    }

    /// Determinant of the submatrix on the given rows and columns, by cofactor
    /// expansion along its first row.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Form {
        assert_eq!(rows.len(), cols.len(), "minor must be square");
        let size = rows.len() as u32;
        match rows.len() {
            0 => Form::constant(self.field.one(), self.n),
            1 => self.get(rows[0], cols[0]).clone(),
            _ => {
                let mut acc = Form::zero(self.field, self.n, self.degree * size);
                let sub_rows = &rows[1..];
                for (k, &c) in cols.iter().enumerate() {
                    let e = self.get(rows[0], c);
                    if e.is_zero() {
                        continue;
                    }
                    let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                    let term = e * &self.minor(sub_rows, &sub_cols);
                    acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
                }
                acc
            }
        }
    }

    pub fn determinant(&self) -> Form {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let idx: Vec<usize> = (0..self.rows).collect();
        self.minor(&idx, &idx)
    }

    /// Entry `(i, j)` is `(-1)^(i+j)` times the determinant of the matrix with
    /// column `i` and row `j` removed, so `self * adj = adj * self = det * Id`.
    pub fn adjugate(&self) -> Self {
        assert!(
            self.is_square() && self.rows >= 2,
            "adjugate needs a square matrix of size >= 2"
        );
        let size = self.rows;
        let degree = self.degree * (size as u32 - 1);
        Self::from_fn(self.field, self.n, degree, size, size, |i, j| {
            let rows: Vec<usize> = (0..size).filter(|&r| r != j).collect();
            let cols: Vec<usize> = (0..size).filter(|&c| c != i).collect();
            let m = self.minor(&rows, &cols);
            if (i + j) % 2 == 0 {
                m
            } else {
                -&m
            }
        })
    }

    /// Rank over the fraction field: the largest `r` with a nonzero `r x r` minor.
    pub fn rank_over_k(&self) -> usize {
        for size in (1..=self.rows.min(self.cols)).rev() {
            for rows in combinations(self.rows, size) {
                for cols in combinations(self.cols, size) {
                    if !self.minor(&rows, &cols).is_zero() {
                        return size;
                    }
                }
            }
        }
        0
    }

    /// Basis of `{u : self * u = 0}` with `u` homogeneous of degree `d_u`,
    /// solved as a constant nullspace in `cols * monomial_count(n, d_u)` unknowns.
    pub fn kernel_at_degree(&self, d_u: u32) -> Vec<FormVector> {
        let basis = monomials(self.n, d_u);
        let per = basis.len();
        let mut system: LinearSystem<(usize, Monomial)> = LinearSystem::new(self.field, self.cols * per);
        for i in 0..self.rows {
            for j in 0..self.cols {
                for (m, c) in self.get(i, j).terms() {
                    for (t, b) in basis.iter().enumerate() {
                        system.add((i, m.mul(b)), j * per + t, c);
                    }
                }
            }
        }
        system
            .nullspace()
            .into_iter()
            .map(|sol| self.vector_from_solution(&basis, &sol, self.cols, d_u))
            .collect()
    }

    fn vector_from_solution(&self, basis: &[Monomial], sol: &[Scalar], len: usize, degree: u32) -> FormVector {
        let per = basis.len();
        let entries = (0..len)
            .map(|j| {
                Form::from_terms(
                    self.field,
                    self.n,
                    degree,
                    basis.iter().cloned().zip(sol[j * per..(j + 1) * per].iter().cloned()),
                )
                .expect("basis monomials have the right degree")
            })
            .collect();
        FormVector::new(self.field, self.n, degree, entries).expect("consistent degrees")
    }

    /// `self = u * v^t` for a matrix of rank one, with `u` primitive and
    /// normalized so its first nonzero coefficient is 1.
    ///
    /// `u` is the lowest-degree solution of the linear system saying that `u`
    /// is proportional to every column (`u_i x_kj - u_k x_ij = 0`); each `v_j`
    /// is then an exact quotient by the first nonzero entry of `u`. A `1 x 1`
    /// input `(c * f)` with `f` monic returns `u = (f)`, `v = (c)`.
    pub fn rank1_factor(&self) -> Result<(FormVector, FormVector)> {
        let rank = self.rank_over_k();
        if rank != 1 {
            return Err(Error::NotRankOne { rank });
        }
        if self.rows == 1 && self.cols == 1 {
            let x = FormVector::new(self.field, self.n, self.degree, alloc::vec![self.get(0, 0).clone()])?;
            let (u, lead) = x.normalized().expect("rank one entry is nonzero");
            let v = FormVector::constant(self.field, self.n, &[lead]);
            return Ok((u, v));
        }
        for d_u in 0..=self.degree {
            let basis = monomials(self.n, d_u);
            let per = basis.len();
            let mut system: LinearSystem<(usize, usize, usize, Monomial)> =
                LinearSystem::new(self.field, self.rows * per);
            for i in 0..self.rows {
                for k in i + 1..self.rows {
                    for j in 0..self.cols {
                        for (m, c) in self.get(k, j).terms() {
                            for (t, b) in basis.iter().enumerate() {
                                system.add((i, k, j, m.mul(b)), i * per + t, c);
                            }
                        }
                        for (m, c) in self.get(i, j).terms() {
                            let neg = -c;
                            for (t, b) in basis.iter().enumerate() {
                                system.add((i, k, j, m.mul(b)), k * per + t, &neg);
                            }
                        }
                    }
                }
            }
            let sols = system.nullspace();
            match sols.len() {
                0 => continue,
                1 => {}
                _ => return Err(Error::InternalContradiction("primitive factor is not unique")),
            }
            let raw = self.vector_from_solution(&basis, &sols[0], self.rows, d_u);
            let (u, _) = raw
                .normalized()
                .ok_or(Error::InternalContradiction("nullspace vector is zero"))?;
            let pivot = u
                .entries()
                .iter()
                .position(|e| !e.is_zero())
                .expect("normalized vector is nonzero");
            let v_degree = self.degree - d_u;
            let v_entries = (0..self.cols)
                .map(|j| self.get(pivot, j).exact_divide(u.get(pivot)))
                .collect::<Result<Vec<_>>>()
                .map_err(|_| Error::InternalContradiction("column not a multiple of the factor"))?;
            let v = FormVector::new(self.field, self.n, v_degree, v_entries)?;
            if &FormMatrix::outer(&u, &v) != self {
                return Err(Error::InternalContradiction("u * v^t does not reproduce the matrix"));
            }
            return Ok((u, v));
        }
        Err(Error::InternalContradiction(
            "no proportional vector up to the matrix degree",
        ))
    }

    /// Kernel and cokernel vectors of a square matrix of corank one, read off
    /// the rank-one adjugate: `self * u = 0`, `v^t * self = 0`, and
    /// `deg u + deg v = degree * (size - 1)`.
    pub fn cramer_vectors(&self) -> Result<(FormVector, FormVector)> {
        if !self.is_square() || self.rows < 2 {
            return Err(Error::WrongShape(format!(
                "expected a square matrix of size >= 2, got {}x{}",
                self.rows, self.cols
            )));
        }
        let rank = self.rank_over_k();
        if rank != self.rows - 1 {
            return Err(Error::WrongRank {
                expected: self.rows - 1,
                found: rank,
            });
        }
        self.adjugate().rank1_factor()
    }

    /// For [`Axis::Rows`], the `rows x (cols * n)` matrix whose row `i`
    /// concatenates the coefficient vectors of the entries of row `i`; for
    /// [`Axis::Cols`], the same for the transpose.
    pub fn coefficient_matrix(&self, axis: Axis) -> Result<ConstMatrix> {
        if self.degree != 1 {
            return Err(Error::DegreeNotOne { degree: self.degree });
        }
        let m = match axis {
            Axis::Rows => self.clone(),
            Axis::Cols => self.transpose(),
        };
        let n = self.n;
        Ok(ConstMatrix::from_fn(self.field, m.rows, m.cols * n, |i, c| {
            m.get(i, c / n).coeff(&Monomial::var(n, c % n))
        }))
    }
}

impl fmt::Debug for FormMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FormMatrix[{}x{}, n={}, d={}](",
            self.rows, self.cols, self.n, self.degree
        )?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str("; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn x(n: usize, i: usize) -> Form {
        Form::var(Q, n, i - 1)
    }

    /// `[[x1, x1], [x2, x2]]`
    fn equal_columns() -> FormMatrix {
        FormMatrix::from_i64_coeffs(Q, 2, &[&[&[1, 0], &[1, 0]], &[&[0, 1], &[0, 1]]])
    }

    /// `[[x1, x2, x3], [x4, 0, 0], [x5, 0, 0]]`
    fn zero_square_example() -> FormMatrix {
        let v = |i: usize| {
            let mut c = [0i64; 5];
            if i > 0 {
                c[i - 1] = 1;
            }
            c
        };
        let rows = [[v(1), v(2), v(3)], [v(4), v(0), v(0)], [v(5), v(0), v(0)]];
        let rows: Vec<Vec<LinForm>> = rows
            .iter()
            .map(|r| r.iter().map(|c| LinForm::from_i64(Q, c)).collect())
            .collect();
        FormMatrix::from_linforms(Q, 5, &rows).unwrap()
    }

    /// `[[0, u3, -u2], [-u3, 0, u1], [u2, -u1, 0]]` for `u = (x1, x2, x3)`.
    fn alternating() -> FormMatrix {
        FormMatrix::from_i64_coeffs(
            Q,
            3,
            &[
                &[&[0, 0, 0], &[0, 0, 1], &[0, -1, 0]],
                &[&[0, 0, -1], &[0, 0, 0], &[1, 0, 0]],
                &[&[0, 1, 0], &[-1, 0, 0], &[0, 0, 0]],
            ],
        )
    }

    fn diagonal() -> FormMatrix {
        FormMatrix::from_fn(
            Q,
            3,
            1,
            3,
            3,
            |i, j| {
                if i == j {
                    x(3, i + 1)
                } else {
                    Form::zero(Q, 3, 1)
                }
            },
        )
    }

    #[test]
    fn determinants() {
        assert!(zero_square_example().determinant().is_zero());
        assert!(alternating().determinant().is_zero());
        let d = diagonal().determinant();
        assert_eq!(d, &(&x(3, 1) * &x(3, 2)) * &x(3, 3));
        assert_eq!(d.degree(), 3);
    }

    #[test]
    fn adjugate_of_diagonal() {
        let adj = diagonal().adjugate();
        assert_eq!(adj.get(0, 0), &(&x(3, 2) * &x(3, 3)));
        assert_eq!(adj.get(1, 1), &(&x(3, 1) * &x(3, 3)));
        assert_eq!(adj.get(2, 2), &(&x(3, 1) * &x(3, 2)));
        assert!(adj.get(0, 1).is_zero());
        assert_eq!(adj.degree(), 2);
    }

    #[test]
    fn adjugate_of_alternating_is_outer_square() {
        let w = FormVector::new(Q, 3, 1, alloc::vec![x(3, 1), x(3, 2), x(3, 3)]).unwrap();
        assert_eq!(alternating().adjugate(), FormMatrix::outer(&w, &w));
    }

    #[test]
    fn adjugate_of_constant_matrix() {
        let c = ConstMatrix::from_i64_rows(Q, &[&[2, 1, 0], &[0, 1, 3], &[1, 0, 1]]);
        let m = FormMatrix::from_fn(Q, 2, 0, 3, 3, |i, j| Form::constant(c.get(i, j).clone(), 2));
        let adj = m.adjugate();
        let prod = m.mul(&adj);
        assert_eq!(prod, FormMatrix::scalar_identity(&m.determinant(), 3));
        // classical adjugate = det * inverse
        let det = c.determinant();
        let inv = c.invert().unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(adj.get(i, j).coeff(&Monomial::one(2)), &det * inv.get(i, j));
            }
        }
    }

    #[test]
    fn ranks_over_fraction_field() {
        assert_eq!(equal_columns().rank_over_k(), 1);
        assert_eq!(zero_square_example().rank_over_k(), 2);
        assert_eq!(
            FormMatrix::from_fn(Q, 2, 1, 3, 3, |_, _| Form::zero(Q, 2, 1)).rank_over_k(),
            0
        );
        assert_eq!(diagonal().rank_over_k(), 3);
    }

    #[test]
    fn kernels() {
        let k = alternating().kernel_at_degree(1);
        assert_eq!(k.len(), 1);
        assert!(alternating().apply(&k[0]).is_zero());
        let (u, _) = k[0].normalized().unwrap();
        assert_eq!(u.entries(), &[x(3, 1), x(3, 2), x(3, 3)]);

        assert!(zero_square_example().kernel_at_degree(0).is_empty());
        assert!(zero_square_example().transpose().kernel_at_degree(0).is_empty());

        let k = equal_columns().kernel_at_degree(0);
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], FormVector::constant(Q, 2, &[Q.from_i64(-1), Q.one()]));
    }

    #[test]
    fn rank_one_factorizations() {
        let (u, v) = equal_columns().rank1_factor().unwrap();
        assert_eq!(u.entries(), &[x(2, 1), x(2, 2)]);
        assert_eq!(v, FormVector::constant(Q, 2, &[Q.one(), Q.one()]));

        let w = FormVector::new(Q, 3, 1, alloc::vec![x(3, 1), x(3, 2), x(3, 3)]).unwrap();
        let (u, v) = FormMatrix::outer(&w, &w).rank1_factor().unwrap();
        assert_eq!(u, w);
        assert_eq!(v, w);

        let single = FormMatrix::from_i64_coeffs(Q, 1, &[&[&[2]]]);
        let (u, v) = single.rank1_factor().unwrap();
        assert_eq!(u.entries(), &[x(1, 1)]);
        assert_eq!(v, FormVector::constant(Q, 1, &[Q.from_i64(2)]));
    }

    #[test]
    fn rank1_rejects_other_ranks() {
        assert_eq!(zero_square_example().rank1_factor(), Err(Error::NotRankOne { rank: 2 }));
    }

    #[test]
    fn cramer_on_alternating() {
        let (u, v) = alternating().cramer_vectors().unwrap();
        assert!(alternating().apply(&u).is_zero());
        assert!(alternating().transpose().apply(&v).is_zero());
        assert_eq!(u.degree() + v.degree(), 2);
        assert_eq!(u.entries(), &[x(3, 1), x(3, 2), x(3, 3)]);
    }

    #[test]
    fn cramer_contracts_on_zero_square_example() {
        let m = zero_square_example();
        let (u, v) = m.cramer_vectors().unwrap();
        assert!(m.apply(&u).is_zero());
        assert!(m.transpose().apply(&v).is_zero());
        assert_eq!(u.degree() + v.degree(), 2);
        assert!(!u.is_zero() && !v.is_zero());
    }

    #[test]
    fn cramer_with_zero_row_and_column() {
        let m = FormMatrix::from_i64_coeffs(
            Q,
            2,
            &[
                &[&[1, 0], &[0, 0], &[0, 0]],
                &[&[0, 0], &[0, 1], &[0, 0]],
                &[&[0, 0], &[0, 0], &[0, 0]],
            ],
        );
        let (u, v) = m.cramer_vectors().unwrap();
        assert_eq!(u, FormVector::constant(Q, 2, &[Q.zero(), Q.zero(), Q.one()]));
        assert_eq!(v.degree(), 2);
        assert!(m.apply(&u).is_zero());
        assert_eq!(
            diagonal().cramer_vectors(),
            Err(Error::WrongRank { expected: 2, found: 3 })
        );
    }

    #[test]
    fn coefficient_matrices() {
        let zr = FormMatrix::from_i64_coeffs(
            Q,
            2,
            &[
                &[&[1, 2], &[0, 1], &[3, 0]],
                &[&[1, 1], &[2, 0], &[0, 5]],
                &[&[0, 0], &[0, 0], &[0, 0]],
            ],
        );
        let a = zr.coefficient_matrix(Axis::Rows).unwrap();
        assert_eq!((a.rows(), a.cols()), (3, 6));
        assert!(a.row(2).iter().all(Scalar::is_zero));
        assert!(a.rank() <= 2);
        assert_eq!(a.get(0, 1), &Q.from_i64(2));

        let c = zero_square_example().coefficient_matrix(Axis::Cols).unwrap();
        assert_eq!(c.rank(), 3);
        let adj = diagonal().adjugate();
        assert_eq!(
            adj.coefficient_matrix(Axis::Rows),
            Err(Error::DegreeNotOne { degree: 2 })
        );
    }
}
