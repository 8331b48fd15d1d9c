//! Linear syzygies of tuples of linear forms.
//!
//! For `l = (l_1, ..., l_r)` the space of tuples of linear forms
//! `(f_1, ..., f_r)` with `sum f_i l_i = 0` has dimension
//! `(r - c) n + C(c, 2)`, where `c` is the dimension of the span of the `l_i`.
//! [`syzygy_space`] computes it as a nullspace; [`trefl_basis`] writes down the
//! explicit spanning sets for triples.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::forms::{binomial, coefficient_span_dim, Form, LinForm, Monomial};
use crate::matrix::{ConstMatrix, LinearSystem};
use crate::scalar::{FieldSpec, Scalar};

/// The syzygies of `r` linear forms in `n` variables whose span has dimension `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyzygySpace {
    pub r: usize,
    pub n: usize,
    pub c: usize,
    /// Each element is an `r`-tuple `(f_1, ..., f_r)`.
    pub basis: Vec<Vec<LinForm>>,
}

impl SyzygySpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// `(r - c) n + C(c, 2)`.
pub fn syzygy_dim_formula(r: usize, n: usize, c: usize) -> usize {
    (r - c) * n + binomial(c, 2)
}

fn check_forms(ells: &[LinForm]) -> Result<(FieldSpec, usize)> {
    let first = ells
        .first()
        .ok_or_else(|| Error::WrongShape("need at least one linear form".into()))?;
    let (field, n) = (first.field(), first.n());
    if ells.iter().any(|l| l.n() != n || l.field() != field) {
        return Err(Error::WrongShape("linear forms differ in n or field".into()));
    }
    Ok((field, n))
}

/// Nullspace of `(f_1, ..., f_r) -> sum f_i l_i` from `k^(r n)` to quadrics.
pub fn syzygy_space(ells: &[LinForm]) -> Result<SyzygySpace> {
    let (field, n) = check_forms(ells)?;
    let r = ells.len();
    let mut system: LinearSystem<Monomial> = LinearSystem::new(field, r * n);
    for (i, l) in ells.iter().enumerate() {
        for t in 0..n {
            for (s, c) in l.coeffs().iter().enumerate() {
                system.add(Monomial::var(n, t).mul(&Monomial::var(n, s)), i * n + t, c);
            }
        }
    }
    let basis: Vec<Vec<LinForm>> = system
        .nullspace()
        .into_iter()
        .map(|sol| {
            sol.chunks(n.max(1))
                .take(r)
                .map(|chunk| LinForm::new(field, chunk[..n].to_vec()))
                .collect()
        })
        .collect();
    let c = coefficient_span_dim(ells);
    debug_assert_eq!(basis.len(), syzygy_dim_formula(r, n, c));
    Ok(SyzygySpace { r, n, c, basis })
}

/// Whether `sum f_i l_i` vanishes identically.
pub fn is_syzygy(ells: &[LinForm], fs: &[LinForm]) -> bool {
    assert_eq!(ells.len(), fs.len(), "tuple lengths differ");
    let Some(first) = ells.first() else {
        return true;
    };
    let mut acc = Form::zero(first.field(), first.n(), 2);
    for (l, f) in ells.iter().zip(fs) {
        acc = &acc + &(&l.to_form() * &f.to_form());
    }
    acc.is_zero()
}

/// The three tautological syzygies `(0, l3, -l2)`, `(-l3, 0, l1)`, `(l2, -l1, 0)`.
/// The `k`-th one is zero in position `k`.
pub fn koszul_triples(ells: &[LinForm; 3]) -> [[LinForm; 3]; 3] {
    let [l1, l2, l3] = ells;
    let z = LinForm::zero(l1.field(), l1.n());
    [
        [z.clone(), l3.clone(), -l2],
        [-l3, z.clone(), l1.clone()],
        [l2.clone(), -l1, z],
    ]
}

/// The constant relation `phi` with `sum phi_i l_i = 0` when the forms satisfy
/// exactly one, scaled so its highest-index nonzero coefficient is 1.
pub fn normalized_relation(ells: &[LinForm]) -> Option<Vec<Scalar>> {
    let (field, n) = check_forms(ells).ok()?;
    let m = ConstMatrix::from_fn(field, n, ells.len(), |s, i| ells[i].coeffs()[s].clone());
    let mut ns = m.nullspace();
    if ns.len() != 1 {
        return None;
    }
    let phi = ns.pop().expect("one vector");
    let last = phi.iter().rev().find(|c| !c.is_zero())?.inv()?;
    Some(phi.iter().map(|c| c * &last).collect())
}

/// Spanning set of the syzygies of a triple of linear forms.
///
/// With three independent forms these are the three Koszul triples. With a
/// two-dimensional span, take the first independent pair `(i, j)` in index
/// order, the Koszul triple that vanishes in the remaining position, and the
/// `n` triples `x_t * phi` where `phi` is the relation from
/// [`normalized_relation`]. When the third form is the dependent one this is
/// `phi = (phi_1, phi_2, 1)` with `phi_1 l_1 + phi_2 l_2 + l_3 = 0`.
pub fn trefl_basis(ells: &[LinForm; 3]) -> Result<Vec<[LinForm; 3]>> {
    check_forms(ells)?;
    let field = ells[0].field();
    let n = ells[0].n();
    let span = coefficient_span_dim(ells);
    let koszul = koszul_triples(ells);
    let out: Vec<[LinForm; 3]> = match span {
        3 => koszul.to_vec(),
        2 => {
            let (i, j) = [(0, 1), (0, 2), (1, 2)]
                .into_iter()
                .find(|&(i, j)| coefficient_span_dim(&[ells[i].clone(), ells[j].clone()]) == 2)
                .expect("span 2 has an independent pair");
            let k = 3 - i - j;
            let phi =
                normalized_relation(ells).ok_or(Error::InternalContradiction("span 2 without a unique relation"))?;
            let mut out = alloc::vec![koszul[k].clone()];
            for t in 0..n {
                let x = LinForm::var(field, n, t);
                out.push([x.scale(&phi[0]), x.scale(&phi[1]), x.scale(&phi[2])]);
            }
            out
        }
        span => return Err(Error::SpanTooSmall { span }),
    };
    if !out.iter().all(|f| is_syzygy(ells, f)) {
        return Err(Error::InternalContradiction("spanning triple is not a syzygy"));
    }
    Ok(out)
}

/// Flattens a tuple of linear forms into its `len * n` coefficients.
pub(crate) fn tuple_coords(fs: &[LinForm]) -> Vec<Scalar> {
    fs.iter().flat_map(|f| f.coeffs().iter().cloned()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn lf(c: &[i64]) -> LinForm {
        LinForm::from_i64(Q, c)
    }

    #[test]
    fn independent_triple_has_dimension_three() {
        let s = syzygy_space(&[lf(&[1, 0, 0]), lf(&[0, 1, 0]), lf(&[0, 0, 1])]).unwrap();
        assert_eq!((s.r, s.n, s.c, s.dim()), (3, 3, 3, 3));
    }

    #[test]
    fn dependent_triple_has_dimension_n_plus_one() {
        let ells = [lf(&[1, 0]), lf(&[0, 1]), lf(&[1, 1])];
        let s = syzygy_space(&ells).unwrap();
        assert_eq!((s.c, s.dim()), (2, 3));
        for b in &s.basis {
            assert!(is_syzygy(&ells, b));
        }
    }

    #[test]
    fn single_variable_has_no_syzygy() {
        let s = syzygy_space(&[lf(&[1])]).unwrap();
        assert_eq!(s.dim(), 0);
        assert!(syzygy_space(&[]).is_err());
    }

    #[test]
    fn koszul_basis_for_independent_forms() {
        let ells = [lf(&[1, 0, 0]), lf(&[0, 1, 0]), lf(&[0, 0, 1])];
        let b = trefl_basis(&ells).unwrap();
        assert_eq!(
            b,
            alloc::vec![
                [lf(&[0, 0, 0]), lf(&[0, 0, 1]), lf(&[0, -1, 0])],
                [lf(&[0, 0, -1]), lf(&[0, 0, 0]), lf(&[1, 0, 0])],
                [lf(&[0, 1, 0]), lf(&[-1, 0, 0]), lf(&[0, 0, 0])],
            ]
        );
    }

    #[test]
    fn dependent_basis_uses_last_coefficient_normalization() {
        // x1 + x2 - (x1 + x2) = 0, normalized to phi = (-1, -1, 1)
        let ells = [lf(&[1, 0]), lf(&[0, 1]), lf(&[1, 1])];
        let b = trefl_basis(&ells).unwrap();
        assert_eq!(b.len(), 3);
        assert_eq!(b[0], [lf(&[0, 1]), lf(&[-1, 0]), lf(&[0, 0])]);
        assert_eq!(b[1], [lf(&[-1, 0]), lf(&[-1, 0]), lf(&[1, 0])]);
        assert_eq!(b[2], [lf(&[0, -1]), lf(&[0, -1]), lf(&[0, 1])]);
        // spans the full syzygy space
        let rows: Vec<Vec<Scalar>> = b.iter().map(|t| tuple_coords(t)).collect();
        assert_eq!(ConstMatrix::from_rows(Q, rows).unwrap().rank(), 3);
    }

    #[test]
    fn dependent_pair_in_front() {
        let ells = [lf(&[1, 0, 0]), lf(&[2, 0, 0]), lf(&[0, 1, 0])];
        let b = trefl_basis(&ells).unwrap();
        assert_eq!(b.len(), 4);
        let s = syzygy_space(&ells).unwrap();
        assert_eq!(s.dim(), 4);
        let mut rows: Vec<Vec<Scalar>> = b.iter().map(|t| tuple_coords(t)).collect();
        let r_b = ConstMatrix::from_rows(Q, rows.clone()).unwrap().rank();
        rows.extend(s.basis.iter().map(|t| tuple_coords(t)));
        assert_eq!(r_b, 4);
        assert_eq!(ConstMatrix::from_rows(Q, rows).unwrap().rank(), 4);
    }

    #[test]
    fn span_too_small() {
        let ells = [lf(&[1, 0]), lf(&[1, 0]), lf(&[1, 0])];
        assert_eq!(trefl_basis(&ells), Err(Error::SpanTooSmall { span: 1 }));
    }

    #[test]
    fn formula_values() {
        assert_eq!(syzygy_dim_formula(3, 5, 3), 3);
        assert_eq!(syzygy_dim_formula(3, 5, 2), 6);
        assert_eq!(syzygy_dim_formula(1, 1, 1), 0);
        assert_eq!(syzygy_dim_formula(4, 2, 0), 8);
    }
}
