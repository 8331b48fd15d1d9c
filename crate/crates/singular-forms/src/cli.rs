//! Argument parsing and command execution.

use std::fs;
use std::io::{self, Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Deserializer;
use singular_forms_core::{
    classify, sample_component, stabilizer_report, syzygy_space, ClassificationReport, ComponentTag, FieldSpec,
    FormMatrix,
};

use crate::error::CliError;
use crate::json::{linforms_from_json, FormMatrixJson, ReportJson, ScalarText, StabilizerJson, SyzygyJson};
use crate::selftest::{self, par_map, Scale};
use crate::table;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Table,
}

#[derive(Debug, Parser)]
#[command(
    name = "singular-forms",
    version,
    about = "Classify 3x3 matrices of linear forms with vanishing determinant"
)]
pub struct Cli {
    /// Coefficient field: `q` for the rationals, `gfP` for a prime P >= 5.
    #[arg(long, global = true, default_value = "q")]
    pub field: FieldSpec,
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub output: OutputFormat,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify matrices read as JSON, one document per matrix.
    Classify {
        /// Input file, or `-` for standard input.
        #[arg(default_value = "-")]
        input: String,
    },
    /// Print random matrices from the orbit of a pattern.
    Generate {
        #[arg(long)]
        tag: ComponentTag,
        #[arg(long)]
        n: usize,
        #[arg(long, env = "SINGULAR_FORMS_SEED")]
        seed: u64,
        /// Number of matrices, with consecutive seeds.
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
    /// Syzygies of a JSON list of linear forms given as coefficient lists.
    Syzygy {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Linear space, stabilizer and orbit dimensions for all four patterns.
    OrbitDims {
        #[arg(long)]
        n: usize,
    },
    /// Run the acceptance checks.
    Selftest {
        /// Reduced sample counts.
        #[arg(long)]
        quick: bool,
        #[arg(long, env = "SINGULAR_FORMS_SEED", default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CommandKind {
    Classify,
    Generate,
    Syzygy,
    OrbitDims,
    Selftest,
}

/// A fully parsed invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobSpec {
    pub command: CommandKind,
    pub input_path: Option<String>,
    pub field: FieldSpec,
    pub n: usize,
    pub tag: Option<ComponentTag>,
    pub seed: Option<u64>,
    pub output: OutputFormat,
    pub count: usize,
    pub quick: bool,
}

impl From<Cli> for JobSpec {
    fn from(cli: Cli) -> Self {
        let mut job = JobSpec {
            command: CommandKind::Classify,
            input_path: None,
            field: cli.field,
            n: 0,
            tag: None,
            seed: None,
            output: cli.output,
            count: 1,
            quick: false,
        };
        match cli.command {
            Command::Classify { input } => job.input_path = Some(input),
            Command::Generate { tag, n, seed, count } => {
                job.command = CommandKind::Generate;
                (job.tag, job.n, job.seed, job.count) = (Some(tag), n, Some(seed), count);
            }
            Command::Syzygy { input } => {
                job.command = CommandKind::Syzygy;
                job.input_path = Some(input);
            }
            Command::OrbitDims { n } => {
                job.command = CommandKind::OrbitDims;
                job.n = n;
            }
            Command::Selftest { quick, seed } => {
                job.command = CommandKind::Selftest;
                (job.quick, job.seed) = (quick, Some(seed));
            }
        }
        job
    }
}

fn read_input(path: &str, stdin: &mut dyn Read) -> Result<(String, String), CliError> {
    let io_err = |source| CliError::Io {
        path: path.to_owned(),
        source,
    };
    if path == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s).map_err(io_err)?;
        Ok(("<stdin>".to_owned(), s))
    } else {
        Ok((path.to_owned(), fs::read_to_string(path).map_err(io_err)?))
    }
}

/// One-based line and column of a byte offset, after skipping whitespace.
fn position(text: &str, offset: usize) -> (usize, usize) {
    let start = offset + text[offset..].len() - text[offset..].trim_start().len();
    let before = &text[..start];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

/// serde_json messages end with the position, which is reported separately.
fn serde_message(e: &serde_json::Error) -> String {
    let s = e.to_string();
    let suffix = format!(" at line {} column {}", e.line(), e.column());
    s.strip_suffix(&suffix).map(str::to_owned).unwrap_or(s)
}

fn malformed(source: &str, (line, column): (usize, usize), message: impl Into<String>) -> CliError {
    CliError::Malformed {
        source_name: source.to_owned(),
        line,
        column,
        message: message.into(),
    }
}

/// Parses a stream of JSON matrices, stopping at the first malformed one.
pub fn parse_matrices(source: &str, text: &str, field: FieldSpec) -> Result<Vec<FormMatrix>, CliError> {
    let mut stream = Deserializer::from_str(text).into_iter::<FormMatrixJson>();
    let mut out = Vec::new();
    loop {
        let start = stream.byte_offset();
        match stream.next() {
            None => break,
            Some(Err(e)) => return Err(malformed(source, (e.line(), e.column()), serde_message(&e))),
            Some(Ok(m)) => out.push(
                m.to_matrix(field)
                    .map_err(|e| malformed(source, position(text, start), e))?,
            ),
        }
    }
    if out.is_empty() {
        return Err(malformed(source, (1, 1), "no matrix in input"));
    }
    Ok(out)
}

fn json_line(out: &mut dyn Write, value: &impl Serialize) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)
}

fn write_reports(out: &mut dyn Write, reports: &[ClassificationReport], format: OutputFormat) -> io::Result<()> {
    for (k, r) in reports.iter().enumerate() {
        match format {
            OutputFormat::Json => json_line(out, &ReportJson::from_report(r))?,
            OutputFormat::Table => {
                if reports.len() > 1 {
                    writeln!(out, "# matrix {}", k + 1)?;
                }
                write!(out, "{}", table::report(r))?;
            }
        }
    }
    Ok(())
}

fn stdout_err(source: io::Error) -> CliError {
    CliError::Io {
        path: "<stdout>".to_owned(),
        source,
    }
}

/// Executes a job, writing its report to `out`.
pub fn run(job: &JobSpec, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<(), CliError> {
    let input = job.input_path.as_deref().unwrap_or("-");
    match job.command {
        CommandKind::Classify => {
            let (source, text) = read_input(input, stdin)?;
            let matrices = parse_matrices(&source, &text, job.field)?;
            let reports = par_map(matrices.len(), |k| classify(&matrices[k]))
                .into_iter()
                .collect::<Result<Vec<_>, _>>()?;
            write_reports(out, &reports, job.output).map_err(stdout_err)
        }
        CommandKind::Generate => {
            let tag = job.tag.ok_or_else(|| CliError::Usage("generate needs --tag".into()))?;
            let seed = job
                .seed
                .ok_or_else(|| CliError::Usage("generate needs --seed".into()))?;
            for k in 0..job.count {
                let x = sample_component(tag, job.n, job.field, seed.wrapping_add(k as u64))?;
                match job.output {
                    OutputFormat::Json => {
                        json_line(out, &FormMatrixJson::from_matrix(&x).expect("linear")).map_err(stdout_err)?
                    }
                    OutputFormat::Table => write!(out, "{}", table::form_matrix(&x)).map_err(stdout_err)?,
                }
            }
            Ok(())
        }
        CommandKind::Syzygy => {
            let (source, text) = read_input(input, stdin)?;
            let forms: Vec<Vec<ScalarText>> = serde_json::from_str(&text)
                .map_err(|e| malformed(&source, (e.line(), e.column()), serde_message(&e)))?;
            let ells = linforms_from_json(&forms, job.field).map_err(|e| malformed(&source, position(&text, 0), e))?;
            let space = syzygy_space(&ells)?;
            match job.output {
                OutputFormat::Json => json_line(out, &SyzygyJson::from_space(&space)),
                OutputFormat::Table => write!(out, "{}", table::syzygies(&space)),
            }
            .map_err(stdout_err)
        }
        CommandKind::OrbitDims => {
            let reports = ComponentTag::ALL
                .iter()
                .map(|&t| stabilizer_report(t, job.n, job.field))
                .collect::<Result<Vec<_>, _>>()?;
            match job.output {
                OutputFormat::Json => json_line(out, &reports.iter().map(StabilizerJson::from).collect::<Vec<_>>()),
                OutputFormat::Table => write!(out, "{}", table::stabilizers(&reports)),
            }
            .map_err(stdout_err)
        }
        CommandKind::Selftest => {
            let scale = if job.quick { Scale::QUICK } else { Scale::FULL };
            let outcomes = selftest::run_all(scale, job.seed.unwrap_or(0));
            let failed = outcomes.iter().filter(|o| !o.passed).count();
            match job.output {
                OutputFormat::Json => {
                    let rows: Vec<_> = outcomes
                        .iter()
                        .map(
                            |o| serde_json::json!({"id": o.id, "name": o.name, "passed": o.passed, "detail": o.detail}),
                        )
                        .collect();
                    json_line(out, &rows).map_err(stdout_err)?;
                }
                OutputFormat::Table => {
                    for o in &outcomes {
                        let verdict = if o.passed { "PASS" } else { "FAIL" };
                        writeln!(out, "criterion {} {:<24} {verdict}  {}", o.id, o.name, o.detail)
                            .map_err(stdout_err)?;
                    }
                    writeln!(out, "{} passed, {failed} failed", outcomes.len() - failed).map_err(stdout_err)?;
                }
            }
            if failed > 0 {
                return Err(CliError::ChecksFailed {
                    failed,
                    total: outcomes.len(),
                });
            }
            Ok(())
        }
    }
}
