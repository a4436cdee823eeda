//! Command-line front end.
//!
//! Exit status: 0 on success, 1 on invalid input, 2 when an oracle or the two
//! smoothness criteria disagree.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gitquot_core::{
    analyze, canonical_reduced_word, enumerate_interval, minimal_semistable, to_partition,
    ColumnTuple, Error, Grassmannian,
};

use crate::oracle::{run_oracles, OracleCheck};
use crate::record::AnalyzeRecord;
use crate::render::{render, RenderOptions};
use crate::survey::{survey, to_json, write_csv};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_DISAGREEMENT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "gitquot",
    version,
    about = "Smoothness of torus quotients of Schubert varieties in G(r,n)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Dims {
    /// Subspace dimension r.
    #[arg(long)]
    pub r: usize,
    /// Ambient dimension n.
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the minimal Schubert variety with semistable points.
    Minimal(Dims),
    /// Decide whether the torus quotient of X(w) is smooth.
    Analyze {
        #[command(flatten)]
        dims: Dims,
        /// Comma-separated tuple, e.g. 3,5,8,9.
        #[arg(long)]
        w: String,
        #[arg(long, value_enum, default_value_t = AnalyzeFormat::Text)]
        format: AnalyzeFormat,
    },
    /// Analyze every Schubert variety that has semistable points.
    Survey {
        #[command(flatten)]
        dims: Dims,
        #[arg(long, value_enum, default_value_t = SurveyFormat::Csv)]
        format: SurveyFormat,
    },
    /// Draw the Young diagram of X(w).
    Diagram {
        #[command(flatten)]
        dims: Dims,
        #[arg(long)]
        w: String,
        /// Print the \yng macro instead of ASCII boxes.
        #[arg(long, conflicts_with = "filled")]
        latex: bool,
        /// Label each box with its simple reflection.
        #[arg(long)]
        filled: bool,
    },
    /// Cross-check the formulas against the brute-force oracles.
    Oracle {
        #[command(flatten)]
        dims: Dims,
        /// Restrict to a single tuple; defaults to all of I(r,n).
        #[arg(long)]
        w: Option<String>,
        #[arg(long, value_enum, default_value_t = OracleCheck::All)]
        check: OracleCheck,
    },
    /// List the tuples of a Bruhat interval in lexicographic order.
    Enumerate {
        #[command(flatten)]
        dims: Dims,
        #[arg(long)]
        min: Option<String>,
        #[arg(long)]
        max: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AnalyzeFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SurveyFormat {
    Csv,
    Json,
}

/// Failure of a single invocation, already mapped to its exit status.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::CriteriaDisagreement(_) => EXIT_DISAGREEMENT,
            _ => EXIT_INVALID,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(err: std::io::Error) -> Self {
        Failure {
            code: EXIT_INVALID,
            message: err.to_string(),
        }
    }
}

/// Parses `3,5,8,9` (parentheses optional) as a tuple of `ctx`.
pub fn parse_tuple(ctx: &Grassmannian, text: &str) -> Result<ColumnTuple, Error> {
    let trimmed = text.trim().trim_start_matches('(').trim_end_matches(')');
    let entries = trimmed
        .split(',')
        .map(|part| {
            part.trim().parse::<usize>().map_err(|_| {
                Error::MalformedTuple(format!("{:?} is not a positive integer", part.trim()))
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    ctx.tuple(entries)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    EXIT_INVALID
                }
            };
        }
    };
    match execute(&cli.command) {
        Ok(text) => match out.write_all(text.as_bytes()) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                EXIT_INVALID
            }
        },
        Err(failure) => {
            let _ = writeln!(err, "error: {}", failure.message);
            failure.code
        }
    }
}

fn context(dims: &Dims) -> Result<Grassmannian, Error> {
    Grassmannian::new(dims.r, dims.n)
}

/// Runs one command and returns what it prints on success.
pub fn execute(command: &Command) -> Result<String, Failure> {
    let mut text = String::new();
    match command {
        Command::Minimal(dims) => {
            let ctx = context(dims)?;
            let minimal = minimal_semistable(&ctx)?;
            writeln!(text, "{minimal}").unwrap();
            writeln!(text, "{}", canonical_reduced_word(&minimal)).unwrap();
        }
        Command::Analyze { dims, w, format } => {
            let ctx = context(dims)?;
            let w = parse_tuple(&ctx, w)?;
            let report = analyze(&w, &ctx)?;
            match format {
                AnalyzeFormat::Json => {
                    let record = AnalyzeRecord::from(&report);
                    text = serde_json::to_string_pretty(&record).expect("record serializes");
                    text.push('\n');
                }
                AnalyzeFormat::Text => {
                    let list = |ts: &[ColumnTuple]| {
                        if ts.is_empty() {
                            "none".to_owned()
                        } else {
                            ts.iter()
                                .map(ToString::to_string)
                                .collect::<Vec<_>>()
                                .join(" ")
                        }
                    };
                    let holds = |b: bool| if b { "holds" } else { "fails" };
                    writeln!(text, "w: {}", report.w).unwrap();
                    writeln!(text, "minimal: {}", report.minimal).unwrap();
                    writeln!(
                        text,
                        "semistable points: {}",
                        if report.semistable_nonempty {
                            "yes"
                        } else {
                            "no"
                        }
                    )
                    .unwrap();
                    writeln!(text, "singular components: {}", list(&report.components)).unwrap();
                    writeln!(
                        text,
                        "criterion (components): {} (dominating: {})",
                        holds(report.criterion_components.holds),
                        list(&report.criterion_components.witnesses)
                    )
                    .unwrap();
                    writeln!(
                        text,
                        "criterion (rows): {} (violating rows: {:?})",
                        holds(report.criterion_runs.holds),
                        report.criterion_runs.witnesses
                    )
                    .unwrap();
                    writeln!(text, "verdict: {}", report.verdict).unwrap();
                }
            }
        }
        Command::Survey { dims, format } => {
            let ctx = context(dims)?;
            let rows = survey(&ctx)?;
            match format {
                SurveyFormat::Csv => {
                    let mut buf = Vec::new();
                    write_csv(&rows, &mut buf).map_err(|e| Failure {
                        code: EXIT_INVALID,
                        message: e.to_string(),
                    })?;
                    text = String::from_utf8(buf).expect("csv output is utf-8");
                }
                SurveyFormat::Json => {
                    text = serde_json::to_string_pretty(&to_json(&ctx, &rows))
                        .expect("survey serializes");
                    text.push('\n');
                }
            }
        }
        Command::Diagram {
            dims,
            w,
            latex,
            filled,
        } => {
            let ctx = context(dims)?;
            let w = parse_tuple(&ctx, w)?;
            let rendering = render(&to_partition(&w), RenderOptions { filled: *filled });
            let body = if *latex {
                rendering.latex
            } else if *filled {
                rendering.filled_text().unwrap_or_default()
            } else {
                rendering.ascii
            };
            if !body.is_empty() {
                writeln!(text, "{body}").unwrap();
            }
        }
        Command::Oracle { dims, w, check } => {
            let ctx = context(dims)?;
            let w = w.as_deref().map(|w| parse_tuple(&ctx, w)).transpose()?;
            let summary = run_oracles(&ctx, w.as_ref(), *check)?;
            writeln!(
                text,
                "singular locus: {} tuples checked",
                summary.singular_checked
            )
            .unwrap();
            writeln!(
                text,
                "semistability: {} tuples checked",
                summary.semistable_checked
            )
            .unwrap();
            writeln!(
                text,
                "criteria: {} tuples checked",
                summary.criteria_checked
            )
            .unwrap();
            writeln!(text, "mismatches: {}", summary.mismatches.len()).unwrap();
            if !summary.agrees() {
                for m in &summary.mismatches {
                    writeln!(text, "  [{}] w = {}: {}", m.check, m.w, m.detail).unwrap();
                }
                return Err(Failure {
                    code: EXIT_DISAGREEMENT,
                    message: format!("oracle disagreement\n{text}"),
                });
            }
        }
        Command::Enumerate { dims, min, max } => {
            let ctx = context(dims)?;
            let lo = match min {
                Some(t) => parse_tuple(&ctx, t)?,
                None => ctx.bottom(),
            };
            let hi = match max {
                Some(t) => parse_tuple(&ctx, t)?,
                None => ctx.top(),
            };
            for v in enumerate_interval(&lo, &hi)? {
                writeln!(text, "{v}").unwrap();
            }
        }
    }
    Ok(text)
}
