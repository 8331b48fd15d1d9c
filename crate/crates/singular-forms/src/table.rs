//! Plain-text rendering for the `table` output mode.

use std::fmt::Write;

use singular_forms_core::{ClassificationReport, ConstMatrix, FormMatrix, LinForm, StabilizerReport, SyzygySpace};

/// Left-aligned columns separated by two spaces, each line indented.
fn grid(cells: &[Vec<String>], indent: &str) -> String {
    let cols = cells.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|j| {
            cells
                .iter()
                .filter_map(|r| r.get(j))
                .map(|c| c.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in cells {
        let mut line = String::from(indent);
        for (j, c) in row.iter().enumerate() {
            if j + 1 < row.len() {
                let _ = write!(line, "{c:<w$}  ", w = widths[j]);
            } else {
                line.push_str(c);
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

pub fn form_matrix(m: &FormMatrix) -> String {
    let cells: Vec<Vec<String>> = (0..m.rows())
        .map(|i| m.row(i).iter().map(ToString::to_string).collect())
        .collect();
    grid(&cells, "  ")
}

pub fn const_matrix(m: &ConstMatrix) -> String {
    let cells: Vec<Vec<String>> = m
        .to_rows()
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect();
    grid(&cells, "  ")
}

pub fn report(r: &ClassificationReport) -> String {
    let w = r.witness.as_ref();
    let fields = vec![
        vec!["singular".to_owned(), r.is_singular.to_string()],
        vec!["in_R".to_owned(), r.in_r.to_string()],
        vec!["in_C".to_owned(), r.in_c.to_string()],
        vec!["tag".to_owned(), w.map_or("-".to_owned(), |w| w.tag.to_string())],
        vec!["effective_n".to_owned(), r.effective_n.to_string()],
    ];
    let mut out = grid(&fields, "");
    if let Some(w) = w {
        out.push_str("F\n");
        out.push_str(&const_matrix(&w.f));
        out.push_str("G\n");
        out.push_str(&const_matrix(&w.g));
        out.push_str("normal form\n");
        out.push_str(&form_matrix(&w.normal_form));
    }
    out
}

fn tuple(fs: &[LinForm]) -> String {
    let parts: Vec<String> = fs.iter().map(|f| f.to_form().to_string()).collect();
    format!("({})", parts.join(", "))
}

pub fn syzygies(s: &SyzygySpace) -> String {
    let mut out = format!("r = {}, n = {}, c = {}, dim = {}\n", s.r, s.n, s.c, s.dim());
    for t in &s.basis {
        let _ = writeln!(out, "  {}", tuple(t));
    }
    out
}

pub fn stabilizers(reports: &[StabilizerReport]) -> String {
    let mut cells = vec![vec![
        "tag".to_owned(),
        "n".to_owned(),
        "linear".to_owned(),
        "stabilizer".to_owned(),
        "orbit".to_owned(),
    ]];
    cells.extend(reports.iter().map(|r| {
        vec![
            r.tag.to_string(),
            r.n.to_string(),
            r.linear_space_dim.to_string(),
            r.stab_lie_dim.to_string(),
            r.orbit_dim.to_string(),
        ]
    }));
    grid(&cells, "")
}
