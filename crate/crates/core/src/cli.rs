//! The `cozero` command line: `analyze`, `verify` and `export`.
//!
//! Exit status is 0 on success, 1 when a check fails or a size cap is hit, and
//! 2 for usage and parse errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::CozeroGraph;
use crate::ring::{parse_spec, RingSpec};
use crate::solvers::{chromatic_number, is_perfect_desk_scale, max_clique};
use crate::verify::{self, binomial, Claim, Outcome};
use crate::Limits;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Fallback for `--max-cardinality`.
pub const MAX_CARDINALITY_ENV: &str = "COZERO_MAX_CARDINALITY";

#[derive(Debug, Parser)]
#[command(
    name = "cozero",
    version,
    about = "Cozero-divisor graphs of finite rings Z_n1 x ... x Z_nk"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Largest ring cardinality to enumerate [env: COZERO_MAX_CARDINALITY]
    #[arg(long, global = true, value_name = "N")]
    max_cardinality: Option<u64>,

    /// Largest graph handed to the exact solvers
    #[arg(long, global = true, value_name = "N")]
    max_vertices: Option<usize>,

    /// Node budget for the odd-hole search
    #[arg(long, global = true, value_name = "N")]
    max_search_nodes: Option<u64>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print structural invariants of each ring's graph
    Analyze(Analyze),
    /// Run named checks over rings (all checks over the default rings if omitted)
    Verify(Verify),
    /// Write a graph as DOT or JSON
    Export(Export),
}

#[derive(Debug, Args)]
struct RingArgs {
    /// Ring specs such as Z2xZ3
    #[arg(value_name = "RING")]
    rings: Vec<String>,

    /// Comma-separated ring specs, in addition to the positional ones
    #[arg(long = "rings", value_name = "LIST", value_delimiter = ',')]
    ring_list: Vec<String>,
}

#[derive(Debug, Args)]
struct Output {
    #[arg(long, value_enum)]
    format: Option<Format>,

    /// Write to this file instead of standard output
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct Analyze {
    #[command(flatten)]
    rings: RingArgs,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Args)]
struct Verify {
    #[command(flatten)]
    rings: RingArgs,

    /// Comma-separated claim ids
    #[arg(long, value_name = "IDS", value_delimiter = ',')]
    suite: Vec<String>,

    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Args)]
struct Export {
    #[arg(value_name = "RING")]
    ring: String,

    /// Keep one vertex per associate class
    #[arg(long)]
    quotient: bool,

    /// Export the complement (after taking the quotient, if requested)
    #[arg(long)]
    complement: bool,

    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

/// Command output and exit status; diagnostics go straight to stderr.
struct Rendered {
    body: String,
    status: i32,
}

#[derive(Debug)]
struct UsageError(String);

impl From<Error> for UsageError {
    fn from(e: Error) -> Self {
        UsageError(e.to_string())
    }
}

/// Entry point for the binary: parses `std::env::args` and returns the exit
/// status.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return status;
        }
    };
    let result = limits(&cli).and_then(|limits| match &cli.command {
        Command::Analyze(a) => analyze(a, &limits, stderr).map(|o| (o, &a.output)),
        Command::Verify(v) => verify_cmd(v, &limits).map(|o| (o, &v.output)),
        Command::Export(e) => export(e, &limits, stderr).map(|o| (o, &e.output)),
    });
    match result {
        Ok((outcome, output)) => match emit(&outcome.body, output, stdout) {
            Ok(()) => outcome.status,
            Err(e) => {
                let _ = writeln!(stderr, "error: {e}");
                EXIT_FAILURE
            }
        },
        Err(UsageError(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn emit(body: &str, output: &Output, stdout: &mut dyn Write) -> Result<()> {
    match &output.out {
        Some(path) => std::fs::write(path, body)?,
        None => stdout.write_all(body.as_bytes())?,
    }
    Ok(())
}

fn limits(cli: &Cli) -> Result<Limits, UsageError> {
    let mut limits = Limits::default();
    if let Some(n) = cli.max_cardinality {
        limits.max_cardinality = n;
    } else if let Some(value) = std::env::var_os(MAX_CARDINALITY_ENV) {
        let value = value.to_string_lossy();
        limits.max_cardinality = value.trim().parse().map_err(|_| {
            UsageError(format!(
                "{MAX_CARDINALITY_ENV}={value:?} is not a non-negative integer"
            ))
        })?;
    }
    if let Some(n) = cli.max_vertices {
        limits.max_vertices = n;
    }
    if let Some(n) = cli.max_search_nodes {
        limits.max_search_nodes = n;
    }
    Ok(limits)
}

fn parse_rings(args: &RingArgs) -> Result<Vec<RingSpec>, UsageError> {
    args.rings
        .iter()
        .chain(&args.ring_list)
        .map(|text| parse_spec(text).map_err(UsageError::from))
        .collect()
}

fn format_or(output: &Output, default: Format, allowed: &[Format]) -> Result<Format, UsageError> {
    let format = output.format.unwrap_or(default);
    if allowed.contains(&format) {
        Ok(format)
    } else {
        let name = format.to_possible_value().expect("no skipped variants");
        Err(UsageError(format!(
            "--format {} is not supported by this command",
            name.get_name()
        )))
    }
}

#[derive(Debug, Serialize)]
struct Analysis {
    spec: RingSpec,
    cardinality: u64,
    units: u64,
    vertices: usize,
    edges: usize,
    von_neumann_regular: bool,
    /// Number of fields when the ring is a product of fields.
    fields: Option<usize>,
    omega: usize,
    clique: Vec<String>,
    chi: usize,
    /// `None` when the search budget ran out.
    perfect: Option<bool>,
    associate_classes: usize,
    null_graph: bool,
    formula: Option<Formula>,
}

#[derive(Debug, Serialize)]
struct Formula {
    n: usize,
    expected: u64,
    matches: bool,
}

fn analyze_ring(spec: &RingSpec, limits: &Limits) -> Result<(Analysis, Option<Error>)> {
    let g = CozeroGraph::build_with_limits(spec, limits)?;
    let clique = max_clique(g.graph(), limits)?;
    let chi = chromatic_number(g.graph(), limits)?.count;
    let (perfect, undecided) = match is_perfect_desk_scale(g.graph(), limits) {
        Ok(p) => (Some(p.perfect), None),
        Err(e) if e.is_cap() => (None, Some(e)),
        Err(e) => return Err(e),
    };
    let fields = spec.min_prime_count().ok();
    let formula = fields.filter(|&n| n >= 2).map(|n| {
        let expected = binomial(n, n / 2);
        Formula {
            n,
            expected,
            matches: clique.size as u64 == expected && chi as u64 == expected,
        }
    });
    let analysis = Analysis {
        spec: spec.clone(),
        cardinality: spec.cardinality(),
        units: spec.unit_count(),
        vertices: g.order(),
        edges: g.edge_count(),
        von_neumann_regular: spec.is_von_neumann_regular(),
        fields,
        omega: clique.size,
        clique: clique
            .witness
            .iter()
            .map(|&v| g.label(v).to_string())
            .collect(),
        chi,
        perfect,
        associate_classes: spec.associate_classes().len(),
        null_graph: g.edge_count() == 0,
        formula,
    };
    Ok((analysis, undecided))
}

fn analysis_text(a: &Analysis) -> String {
    let opt = |v: Option<String>| v.unwrap_or_else(|| "n/a".to_string());
    let formula = match &a.formula {
        Some(f) => format!(
            "C({},{})={} {}",
            f.n,
            f.n / 2,
            f.expected,
            if f.matches { "match" } else { "MISMATCH" }
        ),
        None => "n/a".to_string(),
    };
    format!(
        "{}: |R|={} units={} vertices={} edges={} vnr={} fields={} omega={} chi={} perfect={} classes={} null={} formula={}\n  clique: {}\n",
        a.spec,
        a.cardinality,
        a.units,
        a.vertices,
        a.edges,
        a.von_neumann_regular,
        opt(a.fields.map(|n| n.to_string())),
        a.omega,
        a.chi,
        opt(a.perfect.map(|p| p.to_string())),
        a.associate_classes,
        a.null_graph,
        formula,
        if a.clique.is_empty() { "{}".to_string() } else { a.clique.join(" ") },
    )
}

fn analyze(
    args: &Analyze,
    limits: &Limits,
    stderr: &mut dyn Write,
) -> Result<Rendered, UsageError> {
    let format = format_or(&args.output, Format::Text, &[Format::Text, Format::Json])?;
    let rings = parse_rings(&args.rings)?;
    if rings.is_empty() {
        return Err(UsageError("no rings given".into()));
    }
    let mut status = EXIT_OK;
    let mut analyses = Vec::new();
    for spec in &rings {
        match analyze_ring(spec, limits) {
            Ok((analysis, undecided)) => {
                if let Some(e) = undecided {
                    let _ = writeln!(stderr, "{spec}: perfection undecided: {e}");
                    status = EXIT_FAILURE;
                }
                analyses.push(analysis);
            }
            Err(e) => {
                let _ = writeln!(stderr, "{spec}: {e}");
                status = EXIT_FAILURE;
            }
        }
    }
    let body = match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&analyses).map_err(Error::from)?;
            s.push('\n');
            s
        }
        _ => analyses.iter().map(analysis_text).collect(),
    };
    Ok(Rendered { body, status })
}

fn verify_cmd(args: &Verify, limits: &Limits) -> Result<Rendered, UsageError> {
    let format = format_or(&args.output, Format::Text, &[Format::Text, Format::Json])?;
    let claims = if args.suite.is_empty() {
        Claim::ALL.to_vec()
    } else {
        verify::parse_claims(&args.suite)?
    };
    let mut rings = parse_rings(&args.rings)?;
    if rings.is_empty() {
        rings = verify::default_rings();
    }
    let reports = verify::run_suite(&claims, &rings, limits);
    let failed = reports.iter().filter(|r| r.is_failure()).count();
    let body = match format {
        Format::Json => verify::reports_to_json(&reports),
        _ => {
            let count = |o: Outcome| reports.iter().filter(|r| r.outcome == o).count();
            let mut s: String = reports.iter().map(|r| format!("{r}\n")).collect();
            s.push_str(&format!(
                "{} passed, {} failed, {} skipped\n",
                count(Outcome::Pass),
                failed,
                count(Outcome::Skipped)
            ));
            s
        }
    };
    let status = if failed > 0 { EXIT_FAILURE } else { EXIT_OK };
    Ok(Rendered { body, status })
}

fn export(args: &Export, limits: &Limits, stderr: &mut dyn Write) -> Result<Rendered, UsageError> {
    let format = format_or(&args.output, Format::Dot, &[Format::Dot, Format::Json])?;
    let spec = parse_spec(&args.ring)?;
    let built = CozeroGraph::build_with_limits(&spec, limits).and_then(|g| {
        let g = if args.quotient {
            g.quotient_by_associates()?.graph
        } else {
            g
        };
        Ok(if args.complement { g.complement() } else { g })
    });
    let g = match built {
        Ok(g) => g,
        Err(e) => {
            let _ = writeln!(stderr, "{spec}: {e}");
            return Ok(Rendered {
                body: String::new(),
                status: EXIT_FAILURE,
            });
        }
    };
    let body = match format {
        Format::Json => g.to_json(),
        _ => g.to_dot(),
    };
    Ok(Rendered {
        body,
        status: EXIT_OK,
    })
}
