//! JSON encodings of forms, matrices and reports.
//!
//! Scalars are written as strings (`"3"`, `"-1/2"`); on input plain JSON
//! integers are accepted as well.

use std::fmt;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use singular_forms_core::{
    ClassificationReport, ComponentTag, ConstMatrix, FieldSpec, Form, FormMatrix, LinForm, Monomial, Scalar,
    StabilizerReport, SyzygySpace, Witness,
};

/// A scalar in its textual form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarText(pub String);

impl ScalarText {
    pub fn parse(&self, field: FieldSpec) -> Result<Scalar, String> {
        field.parse_scalar(&self.0).map_err(|e| e.to_string())
    }
}

impl From<&Scalar> for ScalarText {
    fn from(s: &Scalar) -> Self {
        ScalarText(s.to_string())
    }
}

impl Serialize for ScalarText {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for ScalarText {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = ScalarText;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a scalar as a string or an integer")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<ScalarText, E> {
                Ok(ScalarText(v.to_owned()))
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<ScalarText, E> {
                Ok(ScalarText(v.to_string()))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<ScalarText, E> {
                Ok(ScalarText(v.to_string()))
            }
        }
        d.deserialize_any(V)
    }
}

fn parse_list(items: &[ScalarText], field: FieldSpec) -> Result<Vec<Scalar>, String> {
    items.iter().map(|s| s.parse(field)).collect()
}

fn text_list(items: &[Scalar]) -> Vec<ScalarText> {
    items.iter().map(ScalarText::from).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub coeff: ScalarText,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormJson {
    pub n: usize,
    pub degree: u32,
    pub terms: Vec<TermJson>,
}

impl FormJson {
    pub fn from_form(f: &Form) -> Self {
        FormJson {
            n: f.n(),
            degree: f.degree(),
            terms: f
                .terms()
                .map(|(m, c)| TermJson {
                    exp: m.exponents().to_vec(),
                    coeff: c.into(),
                })
                .collect(),
        }
    }

    pub fn to_form(&self, field: FieldSpec) -> Result<Form, String> {
        let terms = self
            .terms
            .iter()
            .map(|t| Ok((Monomial::new(t.exp.clone()), t.coeff.parse(field)?)))
            .collect::<Result<Vec<_>, String>>()?;
        Form::from_terms(field, self.n, self.degree, terms).map_err(|e| e.to_string())
    }
}

/// A matrix of linear forms; each entry is its list of `n` coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormMatrixJson {
    pub n: usize,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<Vec<ScalarText>>>,
}

impl FormMatrixJson {
    /// Fails unless the matrix has degree 1.
    pub fn from_matrix(m: &FormMatrix) -> Result<Self, String> {
        let forms = m
            .entry_linforms()
            .ok_or_else(|| format!("only matrices of linear forms are encoded, got degree {}", m.degree()))?;
        Ok(FormMatrixJson {
            n: m.n(),
            rows: m.rows(),
            cols: m.cols(),
            entries: forms
                .chunks(m.cols().max(1))
                .take(m.rows())
                .map(|row| row.iter().map(|f| text_list(f.coeffs())).collect())
                .collect(),
        })
    }

    pub fn to_matrix(&self, field: FieldSpec) -> Result<FormMatrix, String> {
        if self.entries.len() != self.rows {
            return Err(format!(
                "\"rows\" is {} but \"entries\" has {} rows",
                self.rows,
                self.entries.len()
            ));
        }
        let mut rows = Vec::with_capacity(self.rows);
        for (i, row) in self.entries.iter().enumerate() {
            if row.len() != self.cols {
                return Err(format!(
                    "row {} has {} entries, expected {}",
                    i + 1,
                    row.len(),
                    self.cols
                ));
            }
            let mut forms = Vec::with_capacity(self.cols);
            for (j, entry) in row.iter().enumerate() {
                if entry.len() != self.n {
                    return Err(format!(
                        "entry ({}, {}) has {} coefficients, expected n = {}",
                        i + 1,
                        j + 1,
                        entry.len(),
                        self.n
                    ));
                }
                forms.push(LinForm::new(field, parse_list(entry, field)?));
            }
            rows.push(forms);
        }
        if self.rows == 0 {
            return FormMatrix::new(field, self.n, 1, 0, self.cols, Vec::new()).map_err(|e| e.to_string());
        }
        FormMatrix::from_linforms(field, self.n, &rows).map_err(|e| e.to_string())
    }
}

pub fn const_matrix_json(m: &ConstMatrix) -> Vec<Vec<ScalarText>> {
    m.to_rows().iter().map(|r| text_list(r)).collect()
}

pub fn const_matrix_from_json(rows: &[Vec<ScalarText>], field: FieldSpec) -> Result<ConstMatrix, String> {
    let rows = rows
        .iter()
        .map(|r| parse_list(r, field))
        .collect::<Result<Vec<_>, _>>()?;
    ConstMatrix::from_rows(field, rows).map_err(|e| e.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportJson {
    pub singular: bool,
    #[serde(rename = "in_R")]
    pub in_r: bool,
    #[serde(rename = "in_C")]
    pub in_c: bool,
    pub tag: Option<String>,
    #[serde(rename = "F")]
    pub f: Option<Vec<Vec<ScalarText>>>,
    #[serde(rename = "G")]
    pub g: Option<Vec<Vec<ScalarText>>>,
    pub normal_form: Option<FormMatrixJson>,
    pub effective_n: usize,
}

impl ReportJson {
    pub fn from_report(r: &ClassificationReport) -> Self {
        let w = r.witness.as_ref();
        ReportJson {
            singular: r.is_singular,
            in_r: r.in_r,
            in_c: r.in_c,
            tag: w.map(|w| w.tag.name().to_owned()),
            f: w.map(|w| const_matrix_json(&w.f)),
            g: w.map(|w| const_matrix_json(&w.g)),
            normal_form: w.map(|w| FormMatrixJson::from_matrix(&w.normal_form).expect("normal forms are linear")),
            effective_n: r.effective_n,
        }
    }

    pub fn to_report(&self, field: FieldSpec) -> Result<ClassificationReport, String> {
        let witness = match (&self.tag, &self.f, &self.g, &self.normal_form) {
            (None, None, None, None) => None,
            (Some(tag), Some(f), Some(g), Some(nf)) => Some(Witness {
                tag: tag.parse::<ComponentTag>().map_err(|e| e.to_string())?,
                f: const_matrix_from_json(f, field)?,
                g: const_matrix_from_json(g, field)?,
                normal_form: nf.to_matrix(field)?,
            }),
            _ => return Err("\"tag\", \"F\", \"G\" and \"normal_form\" must be all present or all null".into()),
        };
        Ok(ClassificationReport {
            is_singular: self.singular,
            in_r: self.in_r,
            in_c: self.in_c,
            witness,
            effective_n: self.effective_n,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SyzygyJson {
    pub r: usize,
    pub n: usize,
    pub c: usize,
    pub dim: usize,
    /// Each element is an `r`-tuple of coefficient lists.
    pub basis: Vec<Vec<Vec<ScalarText>>>,
}

impl SyzygyJson {
    pub fn from_space(s: &SyzygySpace) -> Self {
        SyzygyJson {
            r: s.r,
            n: s.n,
            c: s.c,
            dim: s.dim(),
            basis: s
                .basis
                .iter()
                .map(|t| t.iter().map(|f| text_list(f.coeffs())).collect())
                .collect(),
        }
    }
}

/// Syzygy input: a list of linear forms as coefficient lists.
pub fn linforms_from_json(forms: &[Vec<ScalarText>], field: FieldSpec) -> Result<Vec<LinForm>, String> {
    let n = forms.first().map(Vec::len).ok_or("need at least one linear form")?;
    forms
        .iter()
        .enumerate()
        .map(|(i, f)| {
            if f.len() != n {
                return Err(format!("form {} has {} coefficients, expected {n}", i + 1, f.len()));
            }
            Ok(LinForm::new(field, parse_list(f, field)?))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StabilizerJson {
    pub tag: String,
    pub n: usize,
    pub linear_space_dim: usize,
    pub stab_lie_dim: usize,
    pub orbit_dim: usize,
}

impl From<&StabilizerReport> for StabilizerJson {
    fn from(r: &StabilizerReport) -> Self {
        StabilizerJson {
            tag: r.tag.name().to_owned(),
            n: r.n,
            linear_space_dim: r.linear_space_dim,
            stab_lie_dim: r.stab_lie_dim,
            orbit_dim: r.orbit_dim,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn scalars_accept_integers() {
        let m: FormMatrixJson =
            serde_json::from_str(r#"{"n":1,"rows":1,"cols":2,"entries":[[[3],["-1/2"]]]}"#).unwrap();
        let x = m.to_matrix(Q).unwrap();
        assert_eq!(x.get(0, 1).to_string(), "-1/2*x1");
        assert_eq!(
            serde_json::to_string(&FormMatrixJson::from_matrix(&x).unwrap()).unwrap(),
            r#"{"n":1,"rows":1,"cols":2,"entries":[[["3"],["-1/2"]]]}"#
        );
    }

    #[test]
    fn inconsistent_shapes_rejected() {
        let m: FormMatrixJson = serde_json::from_str(r#"{"n":2,"rows":1,"cols":1,"entries":[[["1"]]]}"#).unwrap();
        assert!(m.to_matrix(Q).unwrap_err().contains("expected n = 2"));
        let m: FormMatrixJson = serde_json::from_str(r#"{"n":1,"rows":2,"cols":1,"entries":[[["1"]]]}"#).unwrap();
        assert!(m.to_matrix(Q).is_err());
        assert!(
            serde_json::from_str::<FormMatrixJson>(r#"{"n":1,"rows":1,"cols":1,"entries":[[["1"]]],"x":0}"#).is_err()
        );
    }

    #[test]
    fn form_round_trip() {
        let f = &Form::var(Q, 2, 0) * &Form::var(Q, 2, 1);
        let j = FormJson::from_form(&f);
        assert_eq!(
            j.terms,
            vec![TermJson {
                exp: vec![1, 1],
                coeff: ScalarText("1".into())
            }]
        );
        assert_eq!(j.to_form(Q).unwrap(), f);
    }
}
