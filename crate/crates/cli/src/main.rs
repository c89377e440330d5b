use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rdcore::coloring::{chromatic_index_exact, EdgeColoring, EdgeColoringJson, SearchBudget};
use rdcore::connectivity::upper_edge_connectivity;
use rdcore::families::Family;
use rdcore::io::{parse_graph6_lines, to_dot, to_graph6};
use rdcore::rainbow::{
    bound_report, rd_exact, rd_upper_min_bound, rd_upper_three_halves, rd_upper_vertex_removal, rd_vs_rvd_line_check,
    verify_rd_coloring, Bracket, RdBudget, RdCertificate, RdCertificateJson, ReportBudget, RvdBudget, Verification,
};
use rdcore::theorems::{conjecture_scan, nordhaus_gaddum_check, ScanMode, ScanOptions};
use rdcore::Graph;
use serde_json::{json, Value};

const EXIT_VIOLATION: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_UNRESOLVED: u8 = 3;

#[derive(Parser)]
#[command(name = "rdtool", version, about = "Rainbow disconnection numbers, bounds and certificates for small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// graph6 file, one graph per line; `-` or nothing reads stdin.
    input: Option<PathBuf>,
    /// Use a generated graph instead, e.g. `petersen`, `wheel:6`, `grid:2,3`.
    #[arg(long, conflicts_with = "input")]
    family: Option<Family>,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args, Clone, Copy)]
struct Budgets {
    /// Largest block (in edges) searched exactly for rd.
    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
    max_edges: u64,
    /// Largest graph (in edges) searched exactly for the chromatic index.
    #[arg(long, default_value_t = 25, value_parser = clap::value_parser!(u64).range(1..))]
    max_chi_edges: u64,
}

impl Budgets {
    fn rd(&self) -> RdBudget {
        RdBudget { max_edges: self.max_edges as usize, ..RdBudget::default() }
    }

    fn chi(&self) -> SearchBudget {
        SearchBudget::with_max_edges(self.max_chi_edges as usize)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    VertexRemoval,
    ThreeHalves,
    MinBound,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exact,
    Witness,
}

#[derive(Subcommand)]
enum Command {
    /// λ⁺, χ′, every constructive upper bound with its witness, and rd.
    Bounds {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        budgets: Budgets,
        #[command(flatten)]
        output: Output,
    },
    /// The rainbow disconnection number (or a bracket when the budget runs out).
    Rd {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        budgets: Budgets,
        #[command(flatten)]
        output: Output,
    },
    /// The chromatic index (or a bracket).
    Chi {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        budgets: Budgets,
        #[command(flatten)]
        output: Output,
    },
    /// The upper edge connectivity and a pair attaining it.
    LambdaPlus {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
    },
    /// Checks an edge coloring or a full certificate against a graph.
    Verify {
        #[command(flatten)]
        input: Input,
        /// JSON file holding `{"k", "edges"}` or `{"k", "edges", "cuts"}`.
        #[arg(long)]
        coloring: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Builds a verified rainbow disconnection coloring.
    Construct {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        method: Method,
        /// Vertex to remove for `vertex-removal`.
        #[arg(long, default_value_t = 0)]
        vertex: usize,
        /// Emit the full certificate (coloring plus one cut per pair).
        #[arg(long)]
        certificate: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Checks rd ≤ λ⁺ + 1 and its sufficient conditions over a corpus.
    Scan {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Mode::Exact)]
        mode: Mode,
        /// Worker threads; 0 picks one per core.
        #[arg(long, default_value_t = 0)]
        workers: usize,
        #[command(flatten)]
        budgets: Budgets,
        #[command(flatten)]
        output: Output,
    },
    /// rd(G) + rd(complement) against its bounds and extremal characterization.
    Ng {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        budgets: Budgets,
        #[command(flatten)]
        output: Output,
    },
    /// The line graph, and rd(G) against rvd(L(G)).
    Line {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        budgets: Budgets,
        /// Largest line graph (in vertices) searched exactly for rvd.
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
        max_rvd_vertices: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Emits generated graphs as graph6.
    Family {
        /// Family specs, e.g. `petersen wheel:6 grid:2,3`.
        #[arg(required = true)]
        specs: Vec<Family>,
        #[command(flatten)]
        output: Output,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<rdcore::Error> for Failure {
    fn from(e: rdcore::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

fn read_graphs(input: &Input) -> Result<Vec<Graph>, Failure> {
    if let Some(f) = &input.family {
        return Ok(vec![f.build()?]);
    }
    let text = match input.input.as_deref() {
        Some(p) if p.as_os_str() != "-" => {
            fs::read_to_string(p).map_err(|e| Failure::usage(format!("{}: {e}", p.display())))?
        }
        _ => {
            let mut buf = String::new();
            io::stdin().read_to_string(&mut buf)?;
            buf
        }
    };
    let graphs = parse_graph6_lines(&text).map_err(|(line, e)| Failure::usage(format!("line {line}: {e}")))?;
    if graphs.is_empty() {
        return Err(Failure::usage("no graphs in input"));
    }
    Ok(graphs)
}

fn emit(output: &Output, text: &str) -> Result<(), Failure> {
    match &output.output {
        Some(p) => fs::write(p, text).map_err(|e| Failure::usage(format!("{}: {e}", p.display()))),
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn bracket_text(b: &Bracket) -> String {
    match b {
        Bracket::Exact { exact } => exact.to_string(),
        Bracket::Range { lower, upper } => format!("{lower}..{upper}"),
    }
}

fn json_line(v: &impl serde::Serialize) -> String {
    serde_json::to_string(v).expect("report types serialize") + "\n"
}

/// Prints one value per graph as JSON lines or text; unresolved brackets give exit 3.
fn per_graph_bracket(graphs: &[Graph], output: &Output, mut value: impl FnMut(&Graph) -> Result<Bracket, Failure>) -> Result<u8, Failure> {
    if output.format == Format::Dot {
        return Err(Failure::usage("dot output is only available for colorings and graphs"));
    }
    let mut text = String::new();
    let mut code = 0;
    for g in graphs {
        let b = value(g)?;
        if matches!(b, Bracket::Range { .. }) {
            code = EXIT_UNRESOLVED;
        }
        text += &match output.format {
            Format::Text => bracket_text(&b) + "\n",
            _ => json_line(&b),
        };
    }
    emit(output, &text)?;
    Ok(code)
}

fn single(graphs: Vec<Graph>, what: &str) -> Result<Graph, Failure> {
    let mut graphs = graphs;
    if graphs.len() != 1 {
        return Err(Failure::usage(format!("{what} takes exactly one graph, got {}", graphs.len())));
    }
    Ok(graphs.pop().expect("one graph"))
}

fn verify(g: &Graph, path: &PathBuf, output: &Output) -> Result<u8, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    let bad_json = |e: serde_json::Error| Failure::usage(format!("{}: {e}", path.display()));
    let (ok, detail) = if value.get("cuts").is_some() {
        let json: RdCertificateJson = serde_json::from_value(value).map_err(bad_json)?;
        let cert = RdCertificate::from_json(g, &json)?;
        let ok = cert.recheck(g);
        (ok, json!({ "kind": "certificate", "valid": ok }))
    } else {
        let json: EdgeColoringJson = serde_json::from_value(value).map_err(bad_json)?;
        let coloring = EdgeColoring::from_json(g, &json)?;
        match verify_rd_coloring(g, &coloring)? {
            Verification::Certified(_) => (true, json!({ "kind": "coloring", "valid": true })),
            Verification::Failed { pair } => (false, json!({ "kind": "coloring", "valid": false, "failing_pair": [pair.0, pair.1] })),
        }
    };
    let text = match output.format {
        Format::Text => match detail.get("failing_pair") {
            Some(p) => format!("invalid: no rainbow cut for pair {p}\n"),
            None if ok => "valid\n".to_string(),
            None => "invalid\n".to_string(),
        },
        _ => json_line(&detail),
    };
    emit(output, &text)?;
    Ok(if ok { 0 } else { EXIT_VIOLATION })
}

fn construct(g: &Graph, method: Method, vertex: usize, certificate: bool, output: &Output) -> Result<u8, Failure> {
    let coloring = match method {
        Method::VertexRemoval => rd_upper_vertex_removal(g, vertex)?,
        Method::ThreeHalves => rd_upper_three_halves(g)?,
        Method::MinBound => rd_upper_min_bound(g)?,
    };
    let text = match output.format {
        Format::Dot => to_dot(g, Some(&coloring)),
        Format::Text => format!("{} colors: {:?}\n", coloring.num_colors(), coloring.colors()),
        Format::Json if certificate => match verify_rd_coloring(g, &coloring)? {
            Verification::Certified(cert) => json_line(&cert.to_json(g)),
            Verification::Failed { pair } => return Err(Failure { code: EXIT_VIOLATION, message: format!("pair {pair:?} has no rainbow cut") }),
        },
        Format::Json => json_line(&coloring.to_json(g)),
    };
    emit(output, &text)?;
    Ok(0)
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Family { specs, output } => {
            let mut text = String::new();
            for spec in &specs {
                let g = spec.build()?;
                text += &match output.format {
                    Format::Dot => to_dot(&g, None),
                    Format::Text => format!("{spec}: {} vertices, {} edges\n", g.vertex_count(), g.edge_count()),
                    Format::Json => to_graph6(&g)? + "\n",
                };
            }
            emit(&output, &text)?;
            Ok(0)
        }
        Command::Bounds { input, budgets, output } => {
            let graphs = read_graphs(&input)?;
            let budget = ReportBudget { chromatic: budgets.chi(), rd: budgets.rd() };
            let mut text = String::new();
            let mut code = 0;
            for g in &graphs {
                let report = bound_report(g, &budget)?;
                if matches!(report.rd, Bracket::Range { .. }) {
                    code = EXIT_UNRESOLVED;
                }
                text += &match output.format {
                    Format::Json => json_line(&report),
                    Format::Text => {
                        let mut t = format!(
                            "lambda+ = {}, chi' = {}, rd = {}\n",
                            report.lambda_plus,
                            bracket_text(&report.chromatic_index),
                            bracket_text(&report.rd)
                        );
                        for b in &report.upper_bounds {
                            t += &format!("  {}: {} (witness uses {})\n", b.label, b.value, b.witness_colors);
                        }
                        t
                    }
                    Format::Dot => return Err(Failure::usage("bounds has no dot output")),
                };
            }
            emit(&output, &text)?;
            Ok(code)
        }
        Command::Rd { input, budgets, output } => {
            let graphs = read_graphs(&input)?;
            per_graph_bracket(&graphs, &output, |g| Ok(rd_exact(g, &budgets.rd())?.bracket().into()))
        }
        Command::Chi { input, budgets, output } => {
            let graphs = read_graphs(&input)?;
            per_graph_bracket(&graphs, &output, |g| Ok(chromatic_index_exact(g, budgets.chi()).bracket().into()))
        }
        Command::LambdaPlus { input, output } => {
            let graphs = read_graphs(&input)?;
            let mut text = String::new();
            for g in &graphs {
                let up = upper_edge_connectivity(g)?;
                text += &match output.format {
                    Format::Text => format!("{}\n", up.value),
                    _ => json_line(&up),
                };
            }
            emit(&output, &text)?;
            Ok(0)
        }
        Command::Verify { input, coloring, output } => {
            let g = single(read_graphs(&input)?, "verify")?;
            verify(&g, &coloring, &output)
        }
        Command::Construct { input, method, vertex, certificate, output } => {
            let g = single(read_graphs(&input)?, "construct")?;
            construct(&g, method, vertex, certificate, &output)
        }
        Command::Scan { input, mode, workers, budgets, output } => {
            let graphs = read_graphs(&input)?;
            let corpus = match (&input.family, &input.input) {
                (Some(f), _) => f.to_string(),
                (None, Some(p)) => p.display().to_string(),
                (None, None) => "stdin".to_string(),
            };
            let mode = match mode {
                Mode::Exact => ScanMode::Exact,
                Mode::Witness => ScanMode::Witness,
            };
            let report = conjecture_scan(&graphs, &ScanOptions { mode, budget: budgets.rd(), workers, corpus })?;
            let text = match output.format {
                Format::Text => format!(
                    "{} graphs: {} exact, {} by witness, {} unresolved, {} violations\n",
                    report.summary.graphs, report.summary.exact, report.summary.witness, report.summary.unresolved, report.summary.violations
                ),
                _ => report.to_json_lines(),
            };
            emit(&output, &text)?;
            Ok(if report.summary.violations > 0 {
                EXIT_VIOLATION
            } else if report.summary.unresolved > 0 {
                EXIT_UNRESOLVED
            } else {
                0
            })
        }
        Command::Ng { input, budgets, output } => {
            let graphs = read_graphs(&input)?;
            let mut text = String::new();
            let mut code = 0;
            for g in &graphs {
                let rec = nordhaus_gaddum_check(g, &budgets.rd())?;
                if rec.violated() {
                    code = EXIT_VIOLATION;
                } else if rec.sum.is_none() && code == 0 {
                    code = EXIT_UNRESOLVED;
                }
                text += &json_line(&rec);
            }
            emit(&output, &text)?;
            Ok(code)
        }
        Command::Line { input, budgets, max_rvd_vertices, output } => {
            let graphs = read_graphs(&input)?;
            let rvd_budget = RvdBudget { max_vertices: max_rvd_vertices as usize, ..RvdBudget::default() };
            let mut text = String::new();
            let mut code = 0;
            for g in &graphs {
                let line = g.line_graph()?;
                let check = rd_vs_rvd_line_check(g, &budgets.rd(), &rvd_budget)?;
                if check.violated() {
                    code = EXIT_VIOLATION;
                } else if check.inequality_holds.is_none() && code == 0 {
                    code = EXIT_UNRESOLVED;
                }
                let line_g6 = if line.graph.vertex_count() == 0 { String::new() } else { to_graph6(&line.graph)? };
                text += &match output.format {
                    Format::Dot => to_dot(&line.graph, None),
                    Format::Text => format!(
                        "L(G) = {line_g6}; rd = {}, rvd(L) = {}\n",
                        bracket_text(&check.rd),
                        bracket_text(&check.rvd_line)
                    ),
                    Format::Json => json_line(&json!({ "line_graph": line_g6, "edge_of": line.edge_of, "check": check })),
                };
            }
            emit(&output, &text)?;
            Ok(code)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("rdtool: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
