//! `mixdom` command-line front end.
//!
//! Exit codes: 0 success, 1 unreadable or malformed input, 2 invalid or
//! infeasible decomposition (including validation failures), 3 oracle size
//! guard exceeded.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mixdom::amds::{format_rows, format_table, run_dp_traced, section_header, DpOptions};
use mixdom::format::{parse_gr, parse_td, write_td};
use mixdom::mds6::{run6_traced, SixOptions};
use mixdom::oracle::brute_force;
use mixdom::treedec::{
    make_very_nice, min_fill_decompose, min_fill_decompose_seeded, postorder_traversal, validate_td,
    NiceTreeDecomposition, TreeDecomposition,
};
use mixdom::{Graph, MixedSet};
use serde::Serialize;

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "mixdom", version, about = "Exact mixed dominating sets on graphs of bounded treewidth")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the mixed domination number and print a JSON report.
    Solve(SolveArgs),
    /// Write a min-fill tree decomposition in .td format.
    Decompose(DecomposeArgs),
    /// Check a tree decomposition against a graph.
    Validate(ValidateArgs),
    /// Solve by exhaustive search (small graphs only).
    Oracle(OracleArgs),
    /// Write the table of every bag.
    Trace(TraceArgs),
    /// Time solvers on a list of graphs and print CSV.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algo {
    Amds,
    Six,
    Oracle,
}

impl Algo {
    fn name(self) -> &'static str {
        match self {
            Algo::Amds => "amds",
            Algo::Six => "six",
            Algo::Oracle => "oracle",
        }
    }
}

#[derive(Args)]
struct Input {
    /// Graph in PACE .gr format.
    #[arg(long)]
    graph: PathBuf,
    /// Tree decomposition in PACE .td format; computed with min-fill if absent.
    #[arg(long)]
    td: Option<PathBuf>,
    /// Seed for tie-breaking in the min-fill heuristic.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long, value_enum, default_value = "amds")]
    algo: Algo,
    /// List every minimum mixed dominating set (amds and oracle).
    #[arg(long)]
    enumerate: bool,
    /// Also write the per-bag tables to this file.
    #[arg(long)]
    trace: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct DecomposeArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ValidateArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    td: PathBuf,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    enumerate: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct TraceArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long, value_enum, default_value = "amds")]
    algo: Algo,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    /// Graphs in .gr format.
    #[arg(required = true)]
    graphs: Vec<PathBuf>,
    /// Algorithms to run on every graph.
    #[arg(long, value_enum, value_delimiter = ',', default_value = "amds,six")]
    algo: Vec<Algo>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Invalid(String),
    Oracle(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Invalid(_) => 2,
            Failure::Oracle(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Invalid(m) | Failure::Oracle(m) => m,
        }
    }
}

impl From<mixdom::Error> for Failure {
    fn from(e: mixdom::Error) -> Self {
        use mixdom::Error as E;
        match e {
            E::Parse { .. } | E::VertexOutOfRange { .. } | E::SelfLoop(_) | E::DuplicateEdge(..) => {
                Failure::Input(e.to_string())
            }
            E::OracleTooLarge { .. } => Failure::Oracle(e.to_string()),
            other => Failure::Invalid(other.to_string()),
        }
    }
}

type CmdResult<T> = Result<T, Failure>;

fn read(path: &Path) -> CmdResult<String> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn in_file<T>(path: &Path, r: mixdom::Result<T>) -> CmdResult<T> {
    r.map_err(|e| match Failure::from(e) {
        Failure::Input(m) => Failure::Input(format!("{}: {m}", path.display())),
        other => other,
    })
}

fn load_graph(path: &Path) -> CmdResult<Graph> {
    in_file(path, parse_gr(&read(path)?))
}

fn emit(out: Option<&Path>, text: &str) -> CmdResult<()> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(|e| Failure::Input(format!("stdout: {e}")))
        }
    }
}

fn decompose(g: &Graph, seed: Option<u64>) -> TreeDecomposition {
    match seed {
        Some(s) => min_fill_decompose_seeded(g, s),
        None => min_fill_decompose(g),
    }
}

/// Reads or computes a decomposition of `g` and makes it very nice.
/// Returns `None` for the empty graph, which has no nice decomposition.
fn nice_decomposition(g: &Graph, input: &Input) -> CmdResult<Option<NiceTreeDecomposition>> {
    let td = match &input.td {
        Some(path) => {
            let td = in_file(path, parse_td(&read(path)?))?;
            let violations = validate_td(g, &td);
            if !violations.is_empty() {
                let lines: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
                return Err(Failure::Invalid(format!("{}: {}", path.display(), lines.join("; "))));
            }
            td
        }
        None => decompose(g, input.seed),
    };
    if g.vertex_count() == 0 {
        return Ok(None);
    }
    Ok(Some(make_very_nice(&td)?))
}

#[derive(Serialize)]
struct SetReport {
    /// 1-based vertex ids.
    vertices: Vec<usize>,
    /// 1-based endpoints.
    edges: Vec<[usize; 2]>,
}

#[derive(Serialize)]
struct SolveReport {
    schema_version: u32,
    algorithm: &'static str,
    gamma: u32,
    width: Option<usize>,
    bag_count: Option<usize>,
    peak_rows: Option<usize>,
    time_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    min_sets: Option<Vec<SetReport>>,
}

fn describe_sets(g: &Graph, sets: &[MixedSet]) -> CmdResult<Vec<SetReport>> {
    sets.iter()
        .map(|s| {
            if !g.is_mixed_dominating_set(s) {
                return Err(Failure::Invalid(format!("reported set {} does not dominate", s.to_bit_string())));
            }
            let (vertices, edges) = g.split(s);
            Ok(SetReport {
                vertices: vertices.into_iter().map(|v| v + 1).collect(),
                edges: edges
                    .into_iter()
                    .map(|e| {
                        let (u, v) = g.edges()[e];
                        [u + 1, v + 1]
                    })
                    .collect(),
            })
        })
        .collect()
}

fn oracle_report(g: &Graph, enumerate: bool) -> CmdResult<SolveReport> {
    let start = Instant::now();
    let result = brute_force(g, enumerate)?;
    let time_ms = millis(start);
    let min_sets = if enumerate { Some(describe_sets(g, &result.min_sets)?) } else { None };
    Ok(SolveReport {
        schema_version: SCHEMA_VERSION,
        algorithm: "oracle",
        gamma: result.gamma,
        width: None,
        bag_count: None,
        peak_rows: None,
        time_ms,
        min_sets,
    })
}

/// Runs a table program and collects its trace when `want_trace` is set.
fn run_tables(
    g: &Graph,
    ntd: &NiceTreeDecomposition,
    algo: Algo,
    enumerate: bool,
    want_trace: bool,
) -> CmdResult<(SolveReport, String)> {
    let order = postorder_traversal(ntd);
    let width = ntd.width();
    let mut trace = String::new();
    let start = Instant::now();
    let (gamma, peak_rows, sets) = match algo {
        Algo::Amds => {
            let opts = DpOptions { enumerate, ..Default::default() };
            let out = run_dp_traced(g, ntd, &order, &opts, &mut |id, t| {
                if want_trace {
                    let _ = writeln!(trace, "{}", format_table(id, ntd.bag(id), t, width));
                }
            })?;
            (out.gamma, out.peak_rows, out.min_sets)
        }
        Algo::Six => {
            let out = run6_traced(g, ntd, &order, &SixOptions::default(), &mut |id, t| {
                if want_trace {
                    let rows: Vec<_> = t.rows().into_iter().map(|(s, c)| (s, None, c)).collect();
                    let _ = writeln!(trace, "{}\n{}", section_header(id, ntd.bag(id)), format_rows(width, &rows));
                }
            })?;
            (out.gamma, out.peak_rows, None)
        }
        Algo::Oracle => unreachable!("oracle has no tables"),
    };
    let time_ms = millis(start);
    let min_sets = match sets {
        Some(s) => Some(describe_sets(g, &s)?),
        None => None,
    };
    let report = SolveReport {
        schema_version: SCHEMA_VERSION,
        algorithm: algo.name(),
        gamma,
        width: Some(width),
        bag_count: Some(ntd.len()),
        peak_rows: Some(peak_rows),
        time_ms,
        min_sets,
    };
    Ok((report, trace))
}

/// Elapsed milliseconds, rounded to microseconds.
fn millis(start: Instant) -> f64 {
    (start.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

fn empty_graph_report(algo: Algo, enumerate: bool) -> SolveReport {
    SolveReport {
        schema_version: SCHEMA_VERSION,
        algorithm: algo.name(),
        gamma: 0,
        width: Some(0),
        bag_count: Some(0),
        peak_rows: Some(0),
        time_ms: 0.0,
        min_sets: enumerate.then(|| vec![SetReport { vertices: vec![], edges: vec![] }]),
    }
}

fn to_json(report: &SolveReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

fn cmd_solve(args: SolveArgs) -> CmdResult<()> {
    let g = load_graph(&args.input.graph)?;
    if args.enumerate && args.algo == Algo::Six {
        return Err(Failure::Invalid("--enumerate needs --algo amds or oracle".into()));
    }
    let report = if args.algo == Algo::Oracle {
        if args.trace.is_some() {
            return Err(Failure::Invalid("--trace needs --algo amds or six".into()));
        }
        oracle_report(&g, args.enumerate)?
    } else {
        match nice_decomposition(&g, &args.input)? {
            None => {
                if let Some(p) = &args.trace {
                    emit(Some(p), "")?;
                }
                empty_graph_report(args.algo, args.enumerate)
            }
            Some(ntd) => {
                let (report, trace) = run_tables(&g, &ntd, args.algo, args.enumerate, args.trace.is_some())?;
                if let Some(p) = &args.trace {
                    emit(Some(p), &trace)?;
                }
                report
            }
        }
    };
    emit(args.out.as_deref(), &to_json(&report))
}

fn cmd_decompose(args: DecomposeArgs) -> CmdResult<()> {
    let g = load_graph(&args.graph)?;
    emit(args.out.as_deref(), &write_td(&decompose(&g, args.seed)))
}

fn cmd_validate(args: ValidateArgs) -> CmdResult<()> {
    let g = load_graph(&args.graph)?;
    let td = in_file(&args.td, parse_td(&read(&args.td)?))?;
    let violations = validate_td(&g, &td);
    if violations.is_empty() {
        emit(None, &format!("ok, width {}, {} bags\n", td.width(), td.bags().len()))
    } else {
        let mut text = String::new();
        for v in &violations {
            let _ = writeln!(text, "{v}");
        }
        emit(None, &text)?;
        Err(Failure::Invalid(format!("{} violation(s)", violations.len())))
    }
}

fn cmd_oracle(args: OracleArgs) -> CmdResult<()> {
    let g = load_graph(&args.graph)?;
    emit(args.out.as_deref(), &to_json(&oracle_report(&g, args.enumerate)?))
}

fn cmd_trace(args: TraceArgs) -> CmdResult<()> {
    if args.algo == Algo::Oracle {
        return Err(Failure::Invalid("trace needs --algo amds or six".into()));
    }
    let g = load_graph(&args.input.graph)?;
    let trace = match nice_decomposition(&g, &args.input)? {
        Some(ntd) => run_tables(&g, &ntd, args.algo, false, true)?.1,
        None => String::new(),
    };
    emit(args.out.as_deref(), &trace)
}

#[derive(Serialize)]
struct BenchRow {
    instance: String,
    algo: &'static str,
    width: Option<usize>,
    gamma: u32,
    time_ms: f64,
    peak_rows: Option<usize>,
}

fn cmd_bench(args: BenchArgs) -> CmdResult<()> {
    let mut csv = csv::Writer::from_writer(Vec::new());
    for path in &args.graphs {
        let g = load_graph(path)?;
        let input = Input { graph: path.clone(), td: None, seed: args.seed };
        let ntd = nice_decomposition(&g, &input)?;
        for &algo in &args.algo {
            let report = match (&ntd, algo) {
                (_, Algo::Oracle) => oracle_report(&g, false)?,
                (None, _) => empty_graph_report(algo, false),
                (Some(ntd), _) => run_tables(&g, ntd, algo, false, false)?.0,
            };
            csv.serialize(BenchRow {
                instance: path.display().to_string(),
                algo: algo.name(),
                width: report.width,
                gamma: report.gamma,
                time_ms: report.time_ms,
                peak_rows: report.peak_rows,
            })
            .map_err(|e| Failure::Input(format!("csv: {e}")))?;
        }
    }
    let bytes = csv.into_inner().map_err(|e| Failure::Input(format!("csv: {e}")))?;
    emit(args.out.as_deref(), &String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve(a) => cmd_solve(a),
        Command::Decompose(a) => cmd_decompose(a),
        Command::Validate(a) => cmd_validate(a),
        Command::Oracle(a) => cmd_oracle(a),
        Command::Trace(a) => cmd_trace(a),
        Command::Bench(a) => cmd_bench(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
