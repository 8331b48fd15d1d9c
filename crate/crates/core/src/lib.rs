//! Exact algebra for 3x3 matrices of linear forms with vanishing determinant.
//!
//! Everything here is pure computation over `Q` or `GF(p)`: constant linear
//! algebra, homogeneous forms, matrices of forms, syzygies of linear forms,
//! the constructive classifier with change-of-basis witnesses, and the
//! stabilizer and orbit-dimension computations for the four components.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod classify;
pub mod error;
pub mod form_matrix;
pub mod forms;
pub mod matrix;
pub mod orbits;
pub mod scalar;
pub mod syzygy;

pub use classify::{
    alternating_matrix, classify, reduce_variables, span_bound_check, verify_witness, ClassificationReport,
    ComponentTag, Witness,
};
pub use error::{Error, Result};
pub use form_matrix::{Axis, FormMatrix};
pub use forms::{coefficient_span_dim, monomial_count, monomials, Form, FormVector, LinForm, Monomial};
pub use matrix::ConstMatrix;
pub use orbits::{
    linear_space_dim, orbit_dim, pattern_basis, sample_component, stabilizer_lie_dim, stabilizer_report,
    StabilizerReport,
};
pub use scalar::{FieldSpec, Scalar};
pub use syzygy::{
    is_syzygy, koszul_triples, normalized_relation, syzygy_dim_formula, syzygy_space, trefl_basis, SyzygySpace,
};
