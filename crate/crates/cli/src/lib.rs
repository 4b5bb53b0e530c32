//! Command-line front end: reads complexes, arrangements, line arrangements
//! and graphs from files, and prints analysis reports as text or JSON.

pub mod arrangement;
pub mod complex;
pub mod graph;
pub mod lines;
pub mod report;

use std::fmt;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use dualgraph::complex::{self as families, COMPLEX_FAMILIES};
use dualgraph::graph::{generate_graph, parse_edge_file, GRAPH_FAMILIES};
use dualgraph::homology::DEFAULT_HOCHSTER_CAP;
use dualgraph::{lines as line_families, FieldSpec, LineArrangement, SimplicialComplex, SubspaceArrangement};
use serde::Serialize;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_STRICT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

pub const ARRANGEMENT_FAMILIES: &[&str] = &["path-arrangement", "coordinate-<complex family>"];
pub const LINE_FAMILIES: &[&str] = &["general-plane-lines", "general-plane-quadrilateral", "quadric-grid", "line-chain"];

#[derive(Debug, Parser)]
#[command(name = "dualgraph", version, about = "Dual graphs of monomial ideals, subspace arrangements and line arrangements")]
pub struct Cli {
    #[command(flatten)]
    pub options: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Coefficient field, `q` or `gf:<p>`; repeat for several fields.
    #[arg(long = "field", global = true, value_name = "q|gf:p")]
    pub fields: Vec<FieldSpec>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for the random draws of generic hyperplane sections.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest vertex count for which the regularity sweep over all vertex subsets runs.
    #[arg(long = "max-hochster-n", global = true, default_value_t = DEFAULT_HOCHSTER_CAP)]
    pub max_hochster_n: usize,
    /// Exit with status 2 when a checklist hypothesis is not met.
    #[arg(long, global = true)]
    pub strict: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Analyze a facet file (one facet per line, whitespace-separated vertices).
    AnalyzeComplex { path: PathBuf },
    /// Analyze a subspace arrangement given as JSON.
    AnalyzeArrangement {
        path: PathBuf,
        /// Regularity of a Gorenstein arrangement, asserted by the caller.
        #[arg(long)]
        regularity: Option<usize>,
        /// Components (numbered from 1, comma separated) whose regularity bound is listed; repeatable.
        #[arg(long = "subset")]
        subsets: Vec<String>,
    },
    /// Analyze a projective line arrangement given as JSON.
    AnalyzeLines { path: PathBuf },
    /// Connectivity data and realizability screens for an edge file.
    CheckGraph {
        path: PathBuf,
        /// Height to compare the diameter against.
        #[arg(long)]
        height: Option<usize>,
    },
    /// Write a named family in its input format.
    Generate {
        family: String,
        param: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Settings shared by the analyses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Options {
    pub fields: Vec<FieldSpec>,
    pub seed: u64,
    pub max_hochster_n: usize,
}

impl Default for Options {
    fn default() -> Self {
        Self { fields: vec![FieldSpec::Rationals], seed: 0, max_hochster_n: DEFAULT_HOCHSTER_CAP }
    }
}

/// What a report was computed from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Input {
    pub kind: &'static str,
    pub source: String,
}

impl fmt::Display for Input {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.kind, self.source)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Cap(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Cap(_) => EXIT_CAP,
        }
    }
}

impl From<dualgraph::Error> for CliError {
    fn from(e: dualgraph::Error) -> Self {
        match e {
            dualgraph::Error::HochsterCap { .. } => CliError::Cap(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

/// Rendered output and exit status of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))
}

fn with_path<T>(path: &Path, r: dualgraph::Result<T>) -> Result<T, CliError> {
    r.map_err(|e| match CliError::from(e) {
        CliError::Input(m) => CliError::Input(format!("{}: {m}", path.display())),
        cap => cap,
    })
}

fn input(kind: &'static str, path: &Path) -> Input {
    Input { kind, source: path.display().to_string() }
}

fn render<T: Serialize>(report: &T, text: impl FnOnce(&T) -> String, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(report).expect("reports serialize") + "\n",
        Format::Text => text(report),
    }
}

fn finish<T: Serialize>(report: &T, text: impl FnOnce(&T) -> String, warnings: &[String], args: &GlobalArgs) -> Outcome {
    let code = if args.strict && !warnings.is_empty() { EXIT_STRICT } else { EXIT_OK };
    Outcome { stdout: render(report, text, args.format), code }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let args = &cli.options;
    let opts = Options {
        fields: if args.fields.is_empty() { vec![FieldSpec::Rationals] } else { dedup(&args.fields) },
        seed: args.seed,
        max_hochster_n: args.max_hochster_n,
    };
    match &cli.command {
        Command::AnalyzeComplex { path } => {
            let cx = with_path(path, SimplicialComplex::parse_facet_file(&read(path)?))?;
            let report = complex::analyze(&cx, input("complex", path), &opts)?;
            Ok(finish(&report, complex::ComplexReport::text, &report.warnings, args))
        }
        Command::AnalyzeArrangement { path, regularity, subsets } => {
            let a = with_path(path, SubspaceArrangement::from_json(&read(path)?))?;
            let subsets = subsets.iter().map(|s| arrangement::parse_subset(s)).collect::<Result<Vec<_>, _>>()?;
            let report = arrangement::analyze(&a, input("arrangement", path), &subsets, *regularity, &opts)?;
            Ok(finish(&report, arrangement::ArrangementAnalysis::text, &report.warnings, args))
        }
        Command::AnalyzeLines { path } => {
            let arr = with_path(path, LineArrangement::from_json(&read(path)?))?;
            let report = lines::analyze(&arr, input("lines", path))?;
            Ok(finish(&report, lines::LinesAnalysis::text, &report.warnings, args))
        }
        Command::CheckGraph { path, height } => {
            let g = with_path(path, parse_edge_file(&read(path)?))?;
            let report = graph::check(&g, input("graph", path), *height)?;
            Ok(finish(&report, graph::GraphCheck::text, &report.warnings, args))
        }
        Command::Generate { family, param, out } => {
            let text = generate(family, *param)?;
            match out {
                Some(path) => {
                    std::fs::write(path, &text)
                        .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))?;
                    Ok(Outcome { stdout: String::new(), code: EXIT_OK })
                }
                None => Ok(Outcome { stdout: text, code: EXIT_OK }),
            }
        }
    }
}

fn dedup(fields: &[FieldSpec]) -> Vec<FieldSpec> {
    let mut out: Vec<FieldSpec> = Vec::new();
    for f in fields {
        if !out.contains(f) {
            out.push(*f);
        }
    }
    out
}

fn required(family: &str, param: Option<usize>) -> Result<usize, CliError> {
    param.ok_or_else(|| CliError::Input(format!("family {family:?} needs a parameter")))
}

/// Text of a named family in the format its analysis command reads.
pub fn generate(family: &str, param: Option<usize>) -> Result<String, CliError> {
    if family == "triangle-with-tail" {
        return Ok(families::triangle_with_tail().to_facet_file());
    }
    if COMPLEX_FAMILIES.contains(&family) {
        return Ok(families::generate(family, required(family, param)?)?.to_facet_file());
    }
    if family == "k6-minus-matching" {
        return Ok(generate_graph(family, param.unwrap_or(6))?.to_edge_file()?);
    }
    if GRAPH_FAMILIES.contains(&family) {
        return Ok(generate_graph(family, required(family, param)?)?.to_edge_file()?);
    }
    if let Some(inner) = family.strip_prefix("coordinate-") {
        let cx = match inner {
            "triangle-with-tail" => families::triangle_with_tail(),
            _ => families::generate(inner, required(family, param)?)?,
        };
        return Ok(SubspaceArrangement::from_complex(&cx)?.to_json() + "\n");
    }
    let lines = match family {
        "path-arrangement" => return Ok(dualgraph::arrangement::non_hirsch_path_arrangement().to_json() + "\n"),
        "general-plane-lines" => line_families::general_plane_lines(required(family, param)?)?,
        "general-plane-quadrilateral" => line_families::general_plane_quadrilateral(),
        "quadric-grid" => line_families::quadric_grid(),
        "line-chain" => line_families::line_chain(required(family, param)?)?,
        _ => {
            let known: Vec<&str> = COMPLEX_FAMILIES
                .iter()
                .chain(&GRAPH_FAMILIES)
                .chain(ARRANGEMENT_FAMILIES)
                .chain(LINE_FAMILIES)
                .copied()
                .collect();
            return Err(CliError::Input(format!("unknown family {family:?}; known: {}", known.join(", "))));
        }
    };
    Ok(lines.to_json() + "\n")
}
