use alloc::string::String;
use core::fmt;

/// Errors produced by the algebra and classification routines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Prime-field modulus that is not a prime `p >= 5`.
    InvalidModulus(u64),
    /// A field name or scalar literal that could not be parsed.
    Parse(String),
    /// A square constant matrix without an inverse.
    SingularMatrix,
    /// The dividend is not a multiple of the divisor.
    NotDivisible,
    /// `rank1_factor` called on a matrix whose rank over the fraction field is not 1.
    NotRankOne { rank: usize },
    /// `cramer_vectors` called on a matrix whose rank is not one less than its size.
    WrongRank { expected: usize, found: usize },
    /// An operation that needs linear entries received another degree.
    DegreeNotOne { degree: u32 },
    /// `trefl_basis` needs at least two independent forms.
    SpanTooSmall { span: usize },
    /// Shape, variable count or field mismatch.
    WrongShape(String),
    /// The number of variables is below what the computation supports.
    TooFewVariables { n: usize, min: usize },
    /// An asserted uniqueness or invertibility failed. Always a bug.
    InternalContradiction(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidModulus(p) => write!(f, "modulus {p} is not a prime >= 5"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::SingularMatrix => f.write_str("matrix is singular"),
            Error::NotDivisible => f.write_str("form is not divisible by the divisor"),
            Error::NotRankOne { rank } => write!(f, "matrix has rank {rank}, expected 1"),
            Error::WrongRank { expected, found } => {
                write!(f, "matrix has rank {found}, expected {expected}")
            }
            Error::DegreeNotOne { degree } => {
                write!(f, "entries have degree {degree}, expected linear forms")
            }
            Error::SpanTooSmall { span } => {
                write!(f, "forms span a space of dimension {span}, need at least 2")
            }
            Error::WrongShape(msg) => write!(f, "wrong shape: {msg}"),
            Error::TooFewVariables { n, min } => {
                write!(f, "n = {n} variables, need at least {min}")
            }
            Error::InternalContradiction(what) => write!(f, "internal contradiction: {what}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
