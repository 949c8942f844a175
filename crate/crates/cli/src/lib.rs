//! Command-line front end.
//!
//! [`run_cli`] parses an argument vector, runs one subcommand, and returns
//! the exit code with the text destined for stdout and stderr. Exit codes:
//! 0 on success, 1 on a domain error (the message names the error case),
//! 2 on malformed arguments. With `--json` every subcommand prints one JSON
//! document carrying `"schema_version": 1`.

use std::ops::RangeInclusive;

use clap::{Parser, Subcommand};
use serde::Serialize;

use young_core::algebra::{
    column_group, left_ideal_dimension, quasi_idempotent_constant, row_group, young_symmetrizer,
};
use young_core::classification::{
    enumerate_labels, label_dimension, normalize_gl_label, GroupKind,
};
use young_core::schur::{apply_schur_functor, commutant_report, schur_dimension, schur_weyl_check};
use young_core::tableaux::{enumerate_standard, hook_length_count, Tableau};
use young_core::{
    enumerate_bounded, enumerate_partitions, Error, Permutation, Rational, RationalMatrix,
    YoungDiagram,
};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Parser)]
#[command(name = "young", version, about = "Young diagrams, symmetrizers and Schur functors in exact arithmetic")]
struct Cli {
    /// Print a JSON document instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the partitions of n.
    Partitions {
        n: usize,
        #[arg(long)]
        max_rows: Option<usize>,
    },
    /// Cycle decomposition and cycle type of a permutation.
    CycleType {
        /// Cycle notation "(1 2 4)(5 6)" or one-line notation "2 4 3 1".
        #[arg(required = true, num_args = 1..)]
        perm: Vec<String>,
    },
    /// Standard Young tableaux of a shape.
    Tableaux {
        diagram: String,
        #[arg(long)]
        count: bool,
    },
    /// The Young symmetrizer of a shape and its quasi-idempotency constant.
    Symmetrizer { diagram: String },
    /// Dimension of the left ideal generated by the Young symmetrizer.
    SnDim { diagram: String },
    /// Dimension of the Schur functor image over an N-dimensional space.
    SchurDim { diagram: String, n: usize },
    /// Apply a Schur functor to a square matrix ("1,0;1/2,1").
    SchurApply { diagram: String, matrix: String },
    /// Schur-Weyl dimension budget for N and n.
    SchurWeyl { n: usize, factors: usize },
    /// Commutant of the tensor-power action and the permutation span.
    Commutant { n: usize, factors: usize },
    /// Irrep labels of a group kind: Sn, End, GLpoly, GL, SL, U, SU.
    Classify {
        group: String,
        params: usize,
        /// Box budget for the matrix kinds.
        #[arg(long, default_value_t = 3)]
        boxes: usize,
        /// Inclusive twist range "lo..hi" for GL and U.
        #[arg(long, allow_hyphen_values = true)]
        twists: Option<String>,
    },
    /// Normal form (diagram with < N rows, twist) of a GL label.
    #[command(allow_negative_numbers = true)]
    NormalizeGl { diagram: String, k: i64, n: usize },
    /// Draw a diagram.
    Render { diagram: String },
}

/// Runs the CLI on `argv`, which includes the program name.
pub fn run_cli<I, S>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    CommandResult {
                        exit_code: 0,
                        stdout: text,
                        stderr: String::new(),
                    }
                }
                _ => CommandResult {
                    exit_code: 2,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    match dispatch(&cli.command, cli.json) {
        Ok(stdout) => CommandResult {
            exit_code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(e) => CommandResult {
            exit_code: 1,
            stdout: String::new(),
            stderr: format!("error: {}: {e}\n", e.kind()),
        },
    }
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    schema_version: u32,
    command: &'a str,
    #[serde(flatten)]
    body: T,
}

fn emit<T: Serialize>(json: bool, command: &str, body: T, text: impl FnOnce(&T) -> String) -> String {
    if json {
        let doc = Envelope {
            schema_version: SCHEMA_VERSION,
            command,
            body,
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
        s.push('\n');
        s
    } else {
        let mut s = text(&body);
        if !s.ends_with('\n') {
            s.push('\n');
        }
        s
    }
}

fn parse_diagram(s: &str) -> Result<YoungDiagram, Error> {
    s.parse()
}

fn parse_twists(s: &str) -> Result<RangeInclusive<i64>, Error> {
    let bad = || Error::Parse(format!("twist range must look like lo..hi, got {s:?}"));
    let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
    let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: i64 = hi.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
    Ok(lo..=hi)
}

fn rational_text(q: &Rational) -> String {
    q.to_string()
}

#[derive(Serialize)]
struct PartitionsOut {
    n: usize,
    max_rows: Option<usize>,
    count: usize,
    partitions: Vec<Vec<usize>>,
}

#[derive(Serialize)]
struct CycleTypeOut {
    degree: usize,
    cycles: Vec<Vec<usize>>,
    cycle_notation: String,
    one_line: Vec<usize>,
    cycle_type: Vec<usize>,
    sign: i64,
}

#[derive(Serialize)]
struct TableauxOut {
    shape: Vec<usize>,
    count: usize,
    hook_length_count: String,
    tableaux: Option<Vec<Vec<Vec<usize>>>>,
}

#[derive(Serialize)]
struct Term {
    perm: String,
    coeff: String,
}

#[derive(Serialize)]
struct SymmetrizerOut {
    diagram: Vec<usize>,
    tableau: Vec<Vec<usize>>,
    row_group_order: usize,
    column_group_order: usize,
    element: String,
    terms: Vec<Term>,
    quasi_idempotent_constant: String,
}

#[derive(Serialize)]
struct SnDimOut {
    diagram: Vec<usize>,
    dimension: usize,
}

#[derive(Serialize)]
struct SchurDimOut {
    diagram: Vec<usize>,
    base_dim: usize,
    dimension: usize,
}

#[derive(Serialize)]
struct SchurApplyOut {
    diagram: Vec<usize>,
    input: String,
    dimension: usize,
    matrix: Vec<Vec<String>>,
    matrix_text: String,
}

#[derive(Serialize)]
struct SchurWeylEntryOut {
    diagram: Vec<usize>,
    sn_dimension: usize,
    schur_dimension: usize,
}

#[derive(Serialize)]
struct SchurWeylOut {
    base_dim: usize,
    factors: usize,
    entries: Vec<SchurWeylEntryOut>,
    total: usize,
    expected: usize,
    budget_holds: bool,
    vanishing_holds: bool,
}

#[derive(Serialize)]
struct CommutantOut {
    base_dim: usize,
    factors: usize,
    commutant_dimension: usize,
    permutation_span_dimension: usize,
    young_count: usize,
    holds: bool,
}

#[derive(Serialize)]
struct LabelOut {
    label: String,
    diagram: Vec<usize>,
    twist: Option<i64>,
    dimension: Option<usize>,
}

#[derive(Serialize)]
struct ClassifyOut {
    group: String,
    box_budget: usize,
    count: usize,
    labels: Vec<LabelOut>,
}

#[derive(Serialize)]
struct NormalizeOut {
    diagram: Vec<usize>,
    twist: i64,
    base_dim: usize,
}

#[derive(Serialize)]
struct RenderOut {
    diagram: Vec<usize>,
    ascii: String,
}

fn dispatch(command: &Command, json: bool) -> Result<String, Error> {
    Ok(match command {
        Command::Partitions { n, max_rows } => {
            let list = match max_rows {
                Some(r) => enumerate_bounded(*n, *r),
                None => enumerate_partitions(*n),
            };
            let body = PartitionsOut {
                n: *n,
                max_rows: *max_rows,
                count: list.len(),
                partitions: list.iter().map(|y| y.rows().to_vec()).collect(),
            };
            emit(json, "partitions", body, |_| {
                list.iter()
                    .map(|y| y.to_string())
                    .collect::<Vec<_>>()
                    .join("\n")
            })
        }
        Command::CycleType { perm } => {
            let g = Permutation::parse(&perm.join(" "), None)?;
            let dec = g.cycle_decomposition();
            let body = CycleTypeOut {
                degree: g.degree(),
                cycles: dec.cycles.clone(),
                cycle_notation: dec.to_string(),
                one_line: g.one_line(),
                cycle_type: g.cycle_type().rows().to_vec(),
                sign: g.sign(),
            };
            emit(json, "cycle-type", body, |b| {
                format!("{}\n{}", b.cycle_notation, g.cycle_type())
            })
        }
        Command::Tableaux { diagram, count } => {
            let y = parse_diagram(diagram)?;
            let list = enumerate_standard(&y)?;
            let body = TableauxOut {
                shape: y.rows().to_vec(),
                count: list.len(),
                hook_length_count: hook_length_count(&y).to_string(),
                tableaux: (!count).then(|| list.iter().map(|t| t.rows().to_vec()).collect()),
            };
            emit(json, "tableaux", body, |b| {
                if *count {
                    b.count.to_string()
                } else {
                    list.iter()
                        .map(|t| t.to_string())
                        .collect::<Vec<_>>()
                        .join("\n")
                }
            })
        }
        Command::Symmetrizer { diagram } => {
            let y = parse_diagram(diagram)?;
            let e = young_symmetrizer::<Rational>(&y);
            let c = quasi_idempotent_constant(&e)?;
            let t = Tableau::canonical(&y);
            let body = SymmetrizerOut {
                diagram: y.rows().to_vec(),
                tableau: t.rows().to_vec(),
                row_group_order: row_group(&t).len(),
                column_group_order: column_group(&t).len(),
                element: e.to_string(),
                terms: e
                    .terms()
                    .iter()
                    .map(|(g, q)| Term {
                        perm: g.short_cycle_string(),
                        coeff: rational_text(q),
                    })
                    .collect(),
                quasi_idempotent_constant: rational_text(&c),
            };
            emit(json, "symmetrizer", body, |b| {
                format!("{}\nc = {}", b.element, b.quasi_idempotent_constant)
            })
        }
        Command::SnDim { diagram } => {
            let y = parse_diagram(diagram)?;
            let dimension = left_ideal_dimension(&young_symmetrizer::<Rational>(&y))?;
            let body = SnDimOut {
                diagram: y.rows().to_vec(),
                dimension,
            };
            emit(json, "sn-dim", body, |b| b.dimension.to_string())
        }
        Command::SchurDim { diagram, n } => {
            let y = parse_diagram(diagram)?;
            let body = SchurDimOut {
                diagram: y.rows().to_vec(),
                base_dim: *n,
                dimension: schur_dimension(&y, *n)?,
            };
            emit(json, "schur-dim", body, |b| b.dimension.to_string())
        }
        Command::SchurApply { diagram, matrix } => {
            let y = parse_diagram(diagram)?;
            let a = RationalMatrix::parse(matrix)?;
            let image = apply_schur_functor(&y, &a)?;
            let body = SchurApplyOut {
                diagram: y.rows().to_vec(),
                input: a.to_string(),
                dimension: image.rows(),
                matrix: image
                    .to_rows()
                    .iter()
                    .map(|r| r.iter().map(rational_text).collect())
                    .collect(),
                matrix_text: image.to_string(),
            };
            emit(json, "schur-apply", body, |b| {
                if b.dimension == 0 {
                    "(zero-dimensional)".to_string()
                } else {
                    b.matrix
                        .iter()
                        .map(|r| r.join(","))
                        .collect::<Vec<_>>()
                        .join("\n")
                }
            })
        }
        Command::SchurWeyl { n, factors } => {
            let r = schur_weyl_check(*n, *factors)?;
            let body = SchurWeylOut {
                base_dim: r.base_dim,
                factors: r.factors,
                entries: r
                    .entries
                    .iter()
                    .map(|e| SchurWeylEntryOut {
                        diagram: e.diagram.rows().to_vec(),
                        sn_dimension: e.sn_dimension,
                        schur_dimension: e.schur_dimension,
                    })
                    .collect(),
                total: r.total,
                expected: r.expected,
                budget_holds: r.budget_holds,
                vanishing_holds: r.vanishing_holds,
            };
            emit(json, "schur-weyl", body, |_| {
                let mut lines: Vec<String> = r
                    .entries
                    .iter()
                    .map(|e| {
                        format!(
                            "[{}] f={} dim={}",
                            e.diagram, e.sn_dimension, e.schur_dimension
                        )
                    })
                    .collect();
                let terms: Vec<String> = r
                    .entries
                    .iter()
                    .map(|e| format!("{}*{}", e.sn_dimension, e.schur_dimension))
                    .collect();
                lines.push(format!(
                    "{} = {} ({}^{} = {})",
                    terms.join(" + "),
                    r.total,
                    r.base_dim,
                    r.factors,
                    r.expected
                ));
                lines.push(if r.holds() { "holds" } else { "FAILS" }.to_string());
                lines.join("\n")
            })
        }
        Command::Commutant { n, factors } => {
            let r = commutant_report(*n, *factors)?;
            let body = CommutantOut {
                base_dim: r.base_dim,
                factors: r.factors,
                commutant_dimension: r.commutant_dim,
                permutation_span_dimension: r.permutation_span_dim,
                young_count: r.young_count,
                holds: r.holds(),
            };
            emit(json, "commutant", body, |b| {
                format!(
                    "commutant {}\npermutation span {}\nsum of f^2 over <= {} rows {}",
                    b.commutant_dimension, b.permutation_span_dimension, b.base_dim, b.young_count
                )
            })
        }
        Command::Classify {
            group,
            params,
            boxes,
            twists,
        } => {
            let kind = GroupKind::from_tag(group, *params)?;
            let twists = twists.as_deref().map(parse_twists).transpose()?;
            let labels = enumerate_labels(kind, *boxes, twists)?;
            let body = ClassifyOut {
                group: kind.to_string(),
                box_budget: *boxes,
                count: labels.len(),
                labels: labels
                    .iter()
                    .map(|l| LabelOut {
                        label: l.to_string(),
                        diagram: l.diagram().rows().to_vec(),
                        twist: l.twist(),
                        dimension: label_dimension(l).ok(),
                    })
                    .collect(),
            };
            emit(json, "classify", body, |b| {
                b.labels
                    .iter()
                    .map(|l| match l.dimension {
                        Some(d) => format!("{} dim={d}", l.label),
                        None => format!("{} dim=?", l.label),
                    })
                    .collect::<Vec<_>>()
                    .join("\n")
            })
        }
        Command::NormalizeGl { diagram, k, n } => {
            let y = parse_diagram(diagram)?;
            let (z, twist) = normalize_gl_label(&y, *k, *n)?;
            let body = NormalizeOut {
                diagram: z.rows().to_vec(),
                twist,
                base_dim: *n,
            };
            emit(json, "normalize-gl", body, |_| format!("[{z}] k={twist}"))
        }
        Command::Render { diagram } => {
            let y = parse_diagram(diagram)?;
            let body = RenderOut {
                diagram: y.rows().to_vec(),
                ascii: y.render_ascii(),
            };
            emit(json, "render", body, |b| b.ascii.clone())
        }
    })
}
