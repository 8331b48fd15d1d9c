//! Linear spaces of the four patterns, their stabilizers in
//! `gl_3 + gl_3`, and the dimensions of their orbits.
//!
//! The group `GL_3 x GL_3` acts by `(f, g) . m = f m g^t`. For a linear space
//! `L` of matrices, the orbit `G . L` has projective dimension
//! `dim P(L) + 18 - dim stab(L)`, where `stab(L)` is computed at the Lie
//! algebra level: pairs `(a, b)` with `a M + M b^t` in `L` for every `M` in
//! `L`.

use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::classify::ComponentTag;
use crate::error::{Error, Result};
use crate::form_matrix::FormMatrix;
use crate::forms::LinForm;
use crate::matrix::ConstMatrix;
use crate::scalar::{FieldSpec, Scalar};

/// Smallest `n` for which stabilizers and orbits are computed.
pub const MIN_ORBIT_N: usize = 2;

const GROUP_DIM: usize = 18;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerReport {
    pub tag: ComponentTag,
    pub n: usize,
    /// Projective dimension of the linear space.
    pub linear_space_dim: usize,
    pub stab_lie_dim: usize,
    /// Projective dimension of the orbit closure.
    pub orbit_dim: usize,
}

/// Constant 3x3 matrices spanning the pattern; the linear space over `n`
/// variables is spanned by these times each variable.
pub fn pattern_basis(tag: ComponentTag) -> Vec<[[i64; 3]; 3]> {
    let unit = |i: usize, j: usize| {
        let mut m = [[0; 3]; 3];
        m[i][j] = 1;
        m
    };
    match tag {
        ComponentTag::Antisymmetric => [(0, 1), (1, 2), (2, 0)]
            .into_iter()
            .map(|(i, j)| {
                let mut m = unit(i, j);
                m[j][i] = -1;
                m
            })
            .collect(),
        _ => (0..3)
            .flat_map(|i| (0..3).map(move |j| (i, j)))
            .filter(|&(i, j)| tag.allows(i, j))
            .map(|(i, j)| unit(i, j))
            .collect(),
    }
}

/// Coordinates of `B x_t` in `k^(9n)`, indexed by `(3 i + j) n + t`.
fn spanning_vectors(field: FieldSpec, tag: ComponentTag, n: usize) -> Vec<Vec<Scalar>> {
    let mut out = Vec::new();
    for b in pattern_basis(tag) {
        for t in 0..n {
            let mut v = alloc::vec![field.zero(); 9 * n];
            for i in 0..3 {
                for j in 0..3 {
                    v[(3 * i + j) * n + t] = field.from_i64(b[i][j]);
                }
            }
            out.push(v);
        }
    }
    out
}

fn spanning_matrix(field: FieldSpec, tag: ComponentTag, n: usize) -> ConstMatrix {
    ConstMatrix::from_rows(field, spanning_vectors(field, tag, n)).expect("rows of length 9n")
}

fn check_n(n: usize) -> Result<()> {
    if n < MIN_ORBIT_N {
        return Err(Error::TooFewVariables { n, min: MIN_ORBIT_N });
    }
    Ok(())
}

/// Projective dimension of the linear space, counted from its spanning set.
pub fn linear_space_dim(tag: ComponentTag, n: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::TooFewVariables { n, min: 1 });
    }
    Ok(spanning_matrix(FieldSpec::Rationals, tag, n).rank() - 1)
}

/// Dimension of `{(a, b) : a M + M b^t in L for all M in L}`.
///
/// Unknowns are `a_ip` at index `3 i + p` and `b_jq` at `9 + 3 j + q`.
pub fn stabilizer_lie_dim(tag: ComponentTag, n: usize, field: FieldSpec) -> Result<usize> {
    check_n(n)?;
    let span = spanning_matrix(field, tag, n);
    // w with <w, v> = 0 for all v in L cut out L
    let annihilator = span.nullspace();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for b in pattern_basis(tag) {
        for t in 0..n {
            // tangent[(i, j)] as a row of coefficients in the 18 unknowns
            let mut tangent = alloc::vec![alloc::vec![field.zero(); GROUP_DIM]; 9];
            for p in 0..3 {
                for q in 0..3 {
                    if b[p][q] == 0 {
                        continue;
                    }
                    let c = field.from_i64(b[p][q]);
                    // (a E_pq)_(i, q) = a_ip, (E_pq b^t)_(p, j) = b_jq
                    for i in 0..3 {
                        let e = &mut tangent[3 * i + q][3 * i + p];
                        *e = &*e + &c;
                    }
                    for j in 0..3 {
                        let e = &mut tangent[3 * p + j][9 + 3 * j + q];
                        *e = &*e + &c;
                    }
                }
            }
            for w in &annihilator {
                let mut row = alloc::vec![field.zero(); GROUP_DIM];
                for (cell, coeffs) in tangent.iter().enumerate() {
                    let wc = &w[cell * n + t];
                    if wc.is_zero() {
                        continue;
                    }
                    for (r, c) in row.iter_mut().zip(coeffs) {
                        *r = &*r + &(wc * c);
                    }
                }
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return Ok(GROUP_DIM);
    }
    Ok(GROUP_DIM - ConstMatrix::from_rows(field, rows)?.rank())
}

/// `linear_space_dim + 18 - stabilizer_lie_dim`, computed over the rationals.
pub fn orbit_dim(tag: ComponentTag, n: usize) -> Result<usize> {
    Ok(stabilizer_report(tag, n, FieldSpec::Rationals)?.orbit_dim)
}

pub fn stabilizer_report(tag: ComponentTag, n: usize, field: FieldSpec) -> Result<StabilizerReport> {
    check_n(n)?;
    let linear = linear_space_dim(tag, n)?;
    let stab = stabilizer_lie_dim(tag, n, field)?;
    Ok(StabilizerReport {
        tag,
        n,
        linear_space_dim: linear,
        stab_lie_dim: stab,
        orbit_dim: linear + GROUP_DIM - stab,
    })
}

/// A random point `F0 M G0^t` of the orbit of the linear space, with `M`
/// drawn from the pattern. Deterministic in `seed`.
pub fn sample_component(tag: ComponentTag, n: usize, field: FieldSpec, seed: u64) -> Result<FormMatrix> {
    if n == 0 {
        return Err(Error::TooFewVariables { n, min: 1 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m: Vec<Vec<LinForm>> = alloc::vec![alloc::vec![LinForm::zero(field, n); 3]; 3];
    for b in pattern_basis(tag) {
        let ell = LinForm::new(field, (0..n).map(|_| field.random(&mut rng)).collect());
        for i in 0..3 {
            for j in 0..3 {
                if b[i][j] != 0 {
                    m[i][j] = &m[i][j] + &ell.scale(&field.from_i64(b[i][j]));
                }
            }
        }
    }
    let m = FormMatrix::from_linforms(field, n, &m)?;
    let f0 = ConstMatrix::random_invertible_with(field, 3, &mut rng);
    let g0 = ConstMatrix::random_invertible_with(field, 3, &mut rng);
    Ok(m.left_mul(&f0).right_mul(&g0.transpose()))
}

/// Whether the determinant vanishes identically.
pub fn sample_is_singular(x: &FormMatrix) -> bool {
    x.determinant().is_zero()
}
