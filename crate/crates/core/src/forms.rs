//! Homogeneous forms in `x1, ..., xn`.
//!
//! [`LinForm`] is the dense degree-one case; [`Form`] is a sparse map from
//! exponent vectors to nonzero coefficients. Terms are stored in ascending
//! lexicographic order of exponent vectors, so `x_n^d` comes first and `x_1^d`
//! last; the leading term (lex order with `x1 > x2 > ...`) is the last one.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use rand::Rng;

use crate::error::{Error, Result};
use crate::matrix::{ConstMatrix, LinearSystem};
use crate::scalar::{FieldSpec, Scalar};

/// Exponent vector of a monomial.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(n: usize) -> Self {
        Monomial(alloc::vec![0; n])
    }

    /// The variable `x_{i+1}`.
    pub fn var(n: usize, i: usize) -> Self {
        let mut e = alloc::vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

/// `C(n + d - 1, d)`, the number of monomials of degree `d` in `n` variables.
pub fn monomial_count(n: usize, d: u32) -> usize {
    if n == 0 {
        return usize::from(d == 0);
    }
    binomial(n + d as usize - 1, d as usize)
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// All monomials of degree `d` in `n` variables, leading (lex-largest) first.
pub fn monomials(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == n {
            cur[i] = left;
            out.push(Monomial(cur.clone()));
            cur[i] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(n, i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::with_capacity(monomial_count(n, d));
    if n == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(n, 0, d, &mut alloc::vec![0; n], &mut out);
    out
}

/// A linear form `c_1 x_1 + ... + c_n x_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinForm {
    field: FieldSpec,
    coeffs: Vec<Scalar>,
}

impl LinForm {
    pub fn new(field: FieldSpec, coeffs: Vec<Scalar>) -> Self {
        assert!(coeffs.iter().all(|c| c.field() == field), "coefficient field mismatch");
        LinForm { field, coeffs }
    }

    pub fn from_i64(field: FieldSpec, coeffs: &[i64]) -> Self {
        LinForm::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: FieldSpec, n: usize) -> Self {
        LinForm::new(field, alloc::vec![field.zero(); n])
    }

    /// The variable `x_{i+1}`.
    pub fn var(field: FieldSpec, n: usize, i: usize) -> Self {
        let mut f = LinForm::zero(field, n);
        f.coeffs[i] = field.one();
        f
    }

    pub fn n(&self) -> usize {
        self.coeffs.len()
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, s: &Scalar) -> LinForm {
        LinForm::new(self.field, self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn to_form(&self) -> Form {
        let n = self.n();
        Form::from_terms(
            self.field,
            n,
            1,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::var(n, i), c.clone())),
        )
        .expect("linear monomials have degree 1")
    }
}

impl Add for &LinForm {
    type Output = LinForm;

    fn add(self, rhs: &LinForm) -> LinForm {
        assert_eq!(self.n(), rhs.n(), "variable count mismatch");
        LinForm::new(
            self.field,
            self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        )
    }
}

impl Sub for &LinForm {
    type Output = LinForm;

    fn sub(self, rhs: &LinForm) -> LinForm {
        assert_eq!(self.n(), rhs.n(), "variable count mismatch");
        LinForm::new(
            self.field,
            self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        )
    }
}

impl Neg for &LinForm {
    type Output = LinForm;

    fn neg(self) -> LinForm {
        LinForm::new(self.field, self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Rank of the `forms.len() x n` coefficient matrix, i.e. the dimension of the
/// span of the forms.
pub fn coefficient_span_dim(forms: &[LinForm]) -> usize {
    let Some(first) = forms.first() else {
        return 0;
    };
    let field = first.field;
    ConstMatrix::from_rows(field, forms.iter().map(|f| f.coeffs.clone()).collect())
        .expect("forms share n and field")
        .rank()
}

/// A homogeneous form of fixed degree with no stored zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Form {
    field: FieldSpec,
    n: usize,
    degree: u32,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Form {
    pub fn zero(field: FieldSpec, n: usize, degree: u32) -> Self {
        Form {
            field,
            n,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// Degree-zero form.
    pub fn constant(c: Scalar, n: usize) -> Self {
        let field = c.field();
        Form::from_terms(field, n, 0, [(Monomial::one(n), c)]).expect("degree 0")
    }

    /// The variable `x_{i+1}`.
    pub fn var(field: FieldSpec, n: usize, i: usize) -> Self {
        Form::from_terms(field, n, 1, [(Monomial::var(n, i), field.one())]).expect("degree 1")
    }

    /// Independent random coefficients on every monomial of the degree.
    pub fn random<R: Rng + ?Sized>(field: FieldSpec, n: usize, degree: u32, rng: &mut R) -> Self {
        let terms: Vec<(Monomial, Scalar)> = monomials(n, degree)
            .into_iter()
            .map(|m| (m, field.random(rng)))
            .collect();
        Form::from_terms(field, n, degree, terms).expect("monomials of the right degree")
    }

    /// Sums repeated monomials and drops zeros. Fails if some monomial has the
    /// wrong length or degree.
    pub fn from_terms(
        field: FieldSpec,
        n: usize,
        degree: u32,
        terms: impl IntoIterator<Item = (Monomial, Scalar)>,
    ) -> Result<Self> {
        let mut f = Form::zero(field, n, degree);
        for (m, c) in terms {
            if m.0.len() != n || m.degree() != degree {
                return Err(Error::WrongShape(format!(
                    "monomial {:?} does not have {n} variables and degree {degree}",
                    m.0
                )));
            }
            if c.field() != field {
                return Err(Error::WrongShape(format!(
                    "coefficient over {} in a form over {field}",
                    c.field()
                )));
            }
            f.add_term(m, c);
        }
        Ok(f)
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(cur) => {
                let s = &*cur + &c;
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *cur = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
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

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Largest term in lex order with `x1 > x2 > ...`.
    pub fn leading_term(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, s: &Scalar) -> Form {
        let mut out = Form::zero(self.field, self.n, self.degree);
        if s.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect();
        out
    }

    /// Coefficient vector of a linear form; `None` if the degree is not 1.
    pub fn to_linform(&self) -> Option<LinForm> {
        if self.degree != 1 {
            return None;
        }
        let coeffs = (0..self.n).map(|i| self.coeff(&Monomial::var(self.n, i))).collect();
        Some(LinForm::new(self.field, coeffs))
    }

    /// Value at a point of `k^n`.
    pub fn evaluate(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.n, "point has wrong dimension");
        let mut acc = self.field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                for _ in 0..e {
                    t = t * x;
                }
            }
            acc = acc + t;
        }
        acc
    }

    fn check_compatible(&self, other: &Form) {
        assert_eq!(self.n, other.n, "variable count mismatch");
        assert_eq!(self.field, other.field, "field mismatch");
    }

    /// The `q` with `divisor * q == self`, found by solving for the unknown
    /// coefficients of `q` in the monomials of degree `deg self - deg divisor`.
    pub fn exact_divide(&self, divisor: &Form) -> Result<Form> {
        self.check_compatible(divisor);
        if divisor.is_zero() || divisor.degree > self.degree {
            return Err(Error::NotDivisible);
        }
        let qdeg = self.degree - divisor.degree;
        let basis = monomials(self.n, qdeg);
        let mut system = LinearSystem::new(self.field, basis.len());
        for (j, qm) in basis.iter().enumerate() {
            for (dm, dc) in &divisor.terms {
                system.add(dm.mul(qm), j, dc);
            }
        }
        for m in self.terms.keys() {
            if !system.keys().any(|k| k == m) {
                return Err(Error::NotDivisible);
            }
        }
        let rhs: Vec<Scalar> = system.keys().map(|k| self.coeff(k)).collect();
        let x = system.matrix().solve(&rhs).ok_or(Error::NotDivisible)?;
        Form::from_terms(self.field, self.n, qdeg, basis.into_iter().zip(x))
    }
}

impl Add for &Form {
    type Output = Form;

    fn add(self, rhs: &Form) -> Form {
        self.check_compatible(rhs);
        assert_eq!(self.degree, rhs.degree, "adding forms of different degrees");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Form {
    type Output = Form;

    fn sub(self, rhs: &Form) -> Form {
        self.check_compatible(rhs);
        assert_eq!(self.degree, rhs.degree, "subtracting forms of different degrees");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &Form {
    type Output = Form;

    fn neg(self) -> Form {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -&*c;
        }
        out
    }
}

impl Mul for &Form {
    type Output = Form;

    fn mul(self, rhs: &Form) -> Form {
        self.check_compatible(rhs);
        let mut out = Form::zero(self.field, self.n, self.degree + rhs.degree);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for Form {
    /// Signed monomial sum such as `x1^2 - 2*x1*x3`, leading term first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let text = format!("{c}");
            let (neg, mag) = match (c, text.strip_prefix('-')) {
                (Scalar::Rational(_), Some(rest)) => (true, rest),
                _ => (false, text.as_str()),
            };
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let is_const = m.degree() == 0;
            if mag != "1" || is_const {
                f.write_str(mag)?;
                if !is_const {
                    f.write_str("*")?;
                }
            }
            let mut first = true;
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                write!(f, "x{}", i + 1)?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Form[n={}, d={}]({self})", self.n, self.degree)
    }
}

/// A column vector of forms of one common degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FormVector {
    field: FieldSpec,
    n: usize,
    degree: u32,
    entries: Vec<Form>,
}

impl FormVector {
    pub fn new(field: FieldSpec, n: usize, degree: u32, entries: Vec<Form>) -> Result<Self> {
        if let Some(bad) = entries
            .iter()
            .find(|e| e.n != n || e.degree != degree || e.field != field)
        {
            return Err(Error::WrongShape(format!(
                "entry with n={}, degree={} in a vector with n={n}, degree={degree}",
                bad.n, bad.degree
            )));
        }
        Ok(FormVector {
            field,
            n,
            degree,
            entries,
        })
    }

    /// Constant vector.
    pub fn constant(field: FieldSpec, n: usize, values: &[Scalar]) -> Self {
        let entries = values.iter().map(|c| Form::constant(c.clone(), n)).collect();
        FormVector::new(field, n, 0, entries).expect("constants share degree 0")
    }

    pub fn from_linforms(field: FieldSpec, n: usize, forms: &[LinForm]) -> Self {
        FormVector::new(field, n, 1, forms.iter().map(LinForm::to_form).collect()).expect("linear forms share degree 1")
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

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Form] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> &Form {
        &self.entries[i]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Form::is_zero)
    }

    pub fn scale(&self, s: &Scalar) -> FormVector {
        FormVector {
            entries: self.entries.iter().map(|e| e.scale(s)).collect(),
            ..self.clone()
        }
    }

    /// The first nonzero coefficient: first nonzero entry in index order, then
    /// its leading term.
    pub fn leading_coefficient(&self) -> Option<&Scalar> {
        self.entries.iter().find_map(|e| e.leading_term().map(|(_, c)| c))
    }

    /// Scales so that [`FormVector::leading_coefficient`] is 1. Returns the
    /// factor that was divided out.
    pub fn normalized(&self) -> Option<(FormVector, Scalar)> {
        let lead = self.leading_coefficient()?.clone();
        Some((self.scale(&lead.inv().expect("leading coefficient is nonzero")), lead))
    }

    /// Entries as linear forms; `None` unless the degree is 1.
    pub fn to_linforms(&self) -> Option<Vec<LinForm>> {
        self.entries.iter().map(Form::to_linform).collect()
    }
}
