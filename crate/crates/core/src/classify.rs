//! Constructive classification of singular 3x3 matrices of linear forms.
//!
//! A 3x3 matrix `X` of linear forms with `det X = 0` can be brought by
//! invertible constant matrices `F`, `G` to `F X G` with a zero row, a zero
//! column, a zero 2x2 square, or alternating. [`classify`] finds such a pair
//! and checks it before returning:
//!
//! 1. a constant vector `v` with `v^t X = 0` gives a zero row;
//! 2. a constant vector `u` with `X u = 0` gives a zero column;
//! 3. otherwise `X` has rank 2 and a unique (up to scalars) kernel vector `u`
//!    of linear forms. Every row of `X` is a syzygy of `(u_1, u_2, u_3)`:
//!    - if the `u_i` are independent the rows are combinations of the Koszul
//!      triples and `X` is equivalent to the alternating matrix of `u`;
//!    - if they span a plane with relation `phi`, two rows can be made
//!      multiples of `phi^t`, and column operations sending `phi^t` to
//!      `(1, 0, 0)` clear the lower-right square.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::form_matrix::{Axis, FormMatrix};
use crate::forms::{coefficient_span_dim, FormVector, LinForm, Monomial};
use crate::matrix::ConstMatrix;
use crate::scalar::{FieldSpec, Scalar};
use crate::syzygy::{koszul_triples, normalized_relation, trefl_basis, tuple_coords};

/// The four normal-form patterns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ComponentTag {
    /// Third row zero.
    ZeroRow,
    /// Third column zero.
    ZeroColumn,
    /// Entries `(2,2), (2,3), (3,2), (3,3)` zero.
    ZeroSquare,
    /// Zero diagonal, `(i, j) = -(j, i)`.
    Antisymmetric,
}

impl ComponentTag {
    pub const ALL: [ComponentTag; 4] = [
        ComponentTag::ZeroRow,
        ComponentTag::ZeroSquare,
        ComponentTag::Antisymmetric,
        ComponentTag::ZeroColumn,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ComponentTag::ZeroRow => "zero-row",
            ComponentTag::ZeroColumn => "zero-column",
            ComponentTag::ZeroSquare => "zero-square",
            ComponentTag::Antisymmetric => "antisymmetric",
        }
    }

    /// Whether position `(i, j)` may be nonzero in the pattern.
    pub fn allows(self, i: usize, j: usize) -> bool {
        match self {
            ComponentTag::ZeroRow => i != 2,
            ComponentTag::ZeroColumn => j != 2,
            ComponentTag::ZeroSquare => i == 0 || j == 0,
            ComponentTag::Antisymmetric => i != j,
        }
    }

    /// Whether a 3x3 matrix has exactly this zero pattern.
    pub fn matches(self, m: &FormMatrix) -> bool {
        if m.rows() != 3 || m.cols() != 3 {
            return false;
        }
        let zero_outside = (0..3).all(|i| (0..3).all(|j| self.allows(i, j) || m.get(i, j).is_zero()));
        match self {
            ComponentTag::Antisymmetric => zero_outside && (0..3).all(|i| (0..3).all(|j| m.get(i, j) == &-m.get(j, i))),
            _ => zero_outside,
        }
    }
}

impl fmt::Display for ComponentTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ComponentTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t: alloc::string::String = s
            .chars()
            .filter(|c| !matches!(c, '-' | '_' | ' '))
            .map(|c| c.to_ascii_lowercase())
            .collect();
        match t.as_str() {
            "zerorow" | "row" | "r" => Ok(ComponentTag::ZeroRow),
            "zerocolumn" | "zerocol" | "column" | "col" | "c" => Ok(ComponentTag::ZeroColumn),
            "zerosquare" | "square" | "s" => Ok(ComponentTag::ZeroSquare),
            "antisymmetric" | "alternating" | "a" => Ok(ComponentTag::Antisymmetric),
            _ => Err(Error::Parse(format!("unknown component tag {s:?}"))),
        }
    }
}

/// `f * x * g == normal_form`, with `normal_form` in the pattern of `tag`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub f: ConstMatrix,
    pub g: ConstMatrix,
    pub tag: ComponentTag,
    pub normal_form: FormMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    /// The determinant is the zero form.
    pub is_singular: bool,
    /// The row coefficient matrix has rank at most 2.
    pub in_r: bool,
    /// The column coefficient matrix has rank at most 2.
    pub in_c: bool,
    /// Present exactly when the matrix is singular and nonzero.
    pub witness: Option<Witness>,
    /// Dimension of the span of the entries.
    pub effective_n: usize,
}

fn check_input(x: &FormMatrix) -> Result<()> {
    if x.rows() != 3 || x.cols() != 3 || x.degree() != 1 {
        return Err(Error::WrongShape(format!(
            "expected a 3x3 matrix of linear forms, got {}x{} of degree {}",
            x.rows(),
            x.cols(),
            x.degree()
        )));
    }
    Ok(())
}

fn entry_forms(x: &FormMatrix) -> Vec<LinForm> {
    x.entry_linforms().expect("checked degree 1")
}

/// Rewrites the entries in the reduced row echelon basis of their span.
/// Returns the matrix over `m` new variables and `m`.
pub fn reduce_variables(x: &FormMatrix) -> Result<(FormMatrix, usize)> {
    check_input(x)?;
    let field = x.field();
    let entries = entry_forms(x);
    let coeffs = ConstMatrix::from_rows(field, entries.iter().map(|e| e.coeffs().to_vec()).collect())?;
    let pivots = coeffs.echelon().pivots;
    let m = pivots.len();
    let rows: Vec<Vec<LinForm>> = (0..3)
        .map(|i| {
            (0..3)
                .map(|j| {
                    let e = &entries[i * 3 + j];
                    LinForm::new(field, pivots.iter().map(|&p| e.coeffs()[p].clone()).collect())
                })
                .collect()
        })
        .collect();
    Ok((FormMatrix::from_linforms(field, m, &rows)?, m))
}

/// Holds when the entries span at most six dimensions or the determinant is
/// nonzero: a singular matrix never has seven independent entries.
pub fn span_bound_check(x: &FormMatrix) -> Result<bool> {
    check_input(x)?;
    let span = coefficient_span_dim(&entry_forms(x));
    Ok(span < 7 || !x.determinant().is_zero())
}

fn constant_values(v: &FormVector) -> Vec<Scalar> {
    let one = Monomial::one(v.n());
    v.entries().iter().map(|e| e.coeff(&one)).collect()
}

fn unit(field: FieldSpec, i: usize) -> Vec<Scalar> {
    let mut e = alloc::vec![field.zero(); 3];
    e[i] = field.one();
    e
}

/// Rows completing `v` to a basis with unit vectors, with `v` last.
fn basis_ending_with(field: FieldSpec, v: &[Scalar]) -> ConstMatrix {
    let mut rows: Vec<Vec<Scalar>> = ConstMatrix::complete_with_units(field, 3, &[v.to_vec()])
        .into_iter()
        .map(|i| unit(field, i))
        .collect();
    rows.push(v.to_vec());
    ConstMatrix::from_rows(field, rows).expect("3 rows of length 3")
}

pub fn classify(x: &FormMatrix) -> Result<ClassificationReport> {
    check_input(x)?;
    let (_, effective_n) = reduce_variables(x)?;
    let is_singular = x.determinant().is_zero();
    let in_r = x.coefficient_matrix(Axis::Rows)?.rank() <= 2;
    let in_c = x.coefficient_matrix(Axis::Cols)?.rank() <= 2;
    let witness = if is_singular && !x.is_zero() {
        let w = find_witness(x)?;
        if !verify_witness(x, &w) {
            return Err(Error::InternalContradiction("witness failed verification"));
        }
        Some(w)
    } else {
        None
    };
    Ok(ClassificationReport {
        is_singular,
        in_r,
        in_c,
        witness,
        effective_n,
    })
}

fn find_witness(x: &FormMatrix) -> Result<Witness> {
    let field = x.field();
    let id = ConstMatrix::identity(field, 3);

    if let Some(v) = x.transpose().kernel_at_degree(0).first() {
        let f = basis_ending_with(field, &constant_values(v));
        return Ok(Witness {
            normal_form: x.left_mul(&f),
            f,
            g: id,
            tag: ComponentTag::ZeroRow,
        });
    }
    if let Some(u) = x.kernel_at_degree(0).first() {
        let g = basis_ending_with(field, &constant_values(u)).transpose();
        return Ok(Witness {
            normal_form: x.right_mul(&g),
            f: id,
            g,
            tag: ComponentTag::ZeroColumn,
        });
    }

    let kernel = x.kernel_at_degree(1);
    if kernel.len() != 1 {
        return Err(Error::InternalContradiction("linear kernel is not one-dimensional"));
    }
    let u = kernel[0].to_linforms().expect("degree 1");
    let u: [LinForm; 3] = [u[0].clone(), u[1].clone(), u[2].clone()];
    let basis = trefl_basis(&u).map_err(|_| Error::InternalContradiction("kernel vector entries span less than 2"))?;
    // coordinates of each row of x in the spanning set
    let b = ConstMatrix::from_rows(field, basis.iter().map(|t| tuple_coords(t)).collect())?.transpose();
    let coords: Vec<Vec<Scalar>> = (0..3)
        .map(|i| {
            let row: Vec<LinForm> = x.row(i).iter().map(|e| e.to_linform().expect("degree 1")).collect();
            b.solve(&tuple_coords(&row))
                .ok_or(Error::InternalContradiction("row is not a syzygy of the kernel vector"))
        })
        .collect::<Result<_>>()?;

    if coefficient_span_dim(&u) == 3 {
        // x = F' * A(u) with A(u) the matrix of Koszul triples
        let f_prime = ConstMatrix::from_rows(field, coords)?;
        let f = f_prime
            .invert()
            .map_err(|_| Error::InternalContradiction("rows of x are dependent"))?;
        let koszul = koszul_triples(&u);
        let rows: Vec<Vec<LinForm>> = koszul.iter().map(|t| t.to_vec()).collect();
        let normal_form = FormMatrix::from_linforms(field, x.n(), &rows)?;
        return Ok(Witness {
            f,
            g: id,
            tag: ComponentTag::Antisymmetric,
            normal_form,
        });
    }

    // Span 2: coordinate 0 is the Koszul triple, the rest are x_t * phi.
    let c: Vec<Scalar> = coords.iter().map(|r| r[0].clone()).collect();
    if c.iter().all(Scalar::is_zero) {
        return Err(Error::InternalContradiction("all rows are multiples of phi"));
    }
    let lower = ConstMatrix::from_rows(field, alloc::vec![c])?.nullspace();
    let top = ConstMatrix::complete_with_units(field, 3, &lower);
    let mut f_rows: Vec<Vec<Scalar>> = top.into_iter().map(|i| unit(field, i)).collect();
    f_rows.extend(lower);
    let f = ConstMatrix::from_rows(field, f_rows)?;

    let phi = normalized_relation(&u).ok_or(Error::InternalContradiction("no unique relation"))?;
    let a = phi.iter().position(|p| !p.is_zero()).expect("relation is nonzero");
    let mut first = alloc::vec![field.zero(); 3];
    first[a] = phi[a].inv().expect("nonzero");
    let mut g_cols = alloc::vec![first];
    g_cols.extend(ConstMatrix::from_rows(field, alloc::vec![phi])?.nullspace());
    let g = ConstMatrix::from_rows(field, g_cols)?.transpose();

    Ok(Witness {
        normal_form: x.left_mul(&f).right_mul(&g),
        f,
        g,
        tag: ComponentTag::ZeroSquare,
    })
}

/// `f` and `g` are invertible 3x3, `f * x * g == normal_form`, and the
/// normal form has the zero pattern of the tag.
pub fn verify_witness(x: &FormMatrix, w: &Witness) -> bool {
    let shapes_ok = x.rows() == 3
        && x.cols() == 3
        && [&w.f, &w.g]
            .iter()
            .all(|m| m.rows() == 3 && m.cols() == 3 && m.field() == x.field());
    if !shapes_ok || w.f.rank() != 3 || w.g.rank() != 3 {
        return false;
    }
    let n = w.normal_form.n() == x.n() && w.normal_form.degree() == x.degree();
    n && x.left_mul(&w.f).right_mul(&w.g) == w.normal_form && w.tag.matches(&w.normal_form)
}

/// The alternating matrix `[[0, u3, -u2], [-u3, 0, u1], [u2, -u1, 0]]`.
pub fn alternating_matrix(u: &[LinForm; 3]) -> FormMatrix {
    let rows: Vec<Vec<LinForm>> = koszul_triples(u).iter().map(|t| t.to_vec()).collect();
    FormMatrix::from_linforms(u[0].field(), u[0].n(), &rows).expect("consistent forms")
}
