//! Command-line front door: analyze graph6 inputs, run bound campaigns,
//! perform reductions, and compute extremal numbers.
//!
//! Exit codes: 0 clean, 1 usage/input error, 2 a bound was mathematically
//! violated.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Map, Value};

use turanlab_core::bounds::{evaluate, BoundId, BoundReport, Verdict};
use turanlab_core::counting::{c4_count, c6_count, girth, path3_count, walk_count};
use turanlab_core::graph::Graph;
use turanlab_core::reduce::{erdos_bipartite_subgraph, gyori_c4free_reduction};
use turanlab_core::search::{
    extremal_number, extremal_number_bipartite, sweep_bounds, Forbidden,
};
use turanlab_core::{parse_graph6, to_graph6};

#[derive(Parser)]
#[command(
    name = "turanlab",
    version,
    about = "Substructure counts, inequality certification, reductions, and extremal search for small graphs"
)]
struct Cli {
    /// Omit tool version and timing from reports so identical runs emit
    /// byte-identical JSON
    #[arg(long, global = true)]
    deterministic: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count substructures and evaluate bounds on graph6 inputs
    Analyze(AnalyzeArgs),
    /// Extract a guaranteed subgraph: bipartite or 4-cycle-free
    Reduce(ReduceArgs),
    /// Compute an exact extremal edge count with witness
    Search(SearchArgs),
    /// Sweep bounds over every graph up to a vertex count
    Verify(VerifyArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Files of graph6 lines, one graph per line
    #[arg(required = true)]
    files: Vec<PathBuf>,

    /// Counts to compute: any of w3,p3,c4,c6,girth (default: all, unless
    /// --bounds is given)
    #[arg(long, value_delimiter = ',')]
    counts: Vec<String>,

    /// Bound ids to evaluate (comma-separated), or `all`
    #[arg(long, value_delimiter = ',')]
    bounds: Vec<String>,

    /// JSON report (the default)
    #[arg(long, conflicts_with = "csv")]
    json: bool,

    /// Flat CSV table of counts and bounds instead of JSON
    #[arg(long)]
    csv: bool,
}

#[derive(Args)]
struct ReduceArgs {
    /// File of graph6 lines
    file: PathBuf,

    /// Which reduction to run
    #[arg(long, value_enum)]
    method: Method,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    /// Bipartite subgraph keeping at least half of every degree
    Erdos,
    /// 4-cycle-free subgraph of a 6-cycle-free input, keeping half the edges
    Gyori,
}

#[derive(Args)]
#[command(group = ArgGroup::new("host").required(true).args(["n", "bip"]))]
struct SearchArgs {
    /// Host: the complete graph on N vertices
    #[arg(long)]
    n: Option<usize>,

    /// Host: the complete bipartite graph with these part sizes
    #[arg(long, num_args = 2, value_names = ["A", "B"])]
    bip: Option<Vec<usize>>,

    /// Forbidden subgraph: K3, C4, C6, Q, or Qplus
    #[arg(long)]
    forbid: String,
}

#[derive(Args)]
struct VerifyArgs {
    /// Sweep every isomorphism class with up to this many vertices
    #[arg(long)]
    n_max: usize,

    /// Bound ids to check (comma-separated), or `all`
    #[arg(long, value_delimiter = ',', default_value = "all")]
    bounds: Vec<String>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let usage_ok = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let _ = e.print();
            return ExitCode::from(if usage_ok { 0 } else { 1 });
        }
    };
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    let deterministic = cli.deterministic;
    let outcome = match cli.command {
        Command::Analyze(args) => cmd_analyze(args, deterministic),
        Command::Reduce(args) => cmd_reduce(args, deterministic),
        Command::Search(args) => cmd_search(args, deterministic),
        Command::Verify(args) => cmd_verify(args, deterministic),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

/// `TURANLAB_THREADS` caps the worker pool; unset means rayon's default.
fn configure_threads() -> anyhow::Result<()> {
    let Ok(raw) = std::env::var("TURANLAB_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&t| t >= 1)
        .ok_or_else(|| anyhow!("TURANLAB_THREADS must be a positive integer (got `{raw}`)"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .context("thread pool already configured")?;
    Ok(())
}

// ============================================================
// Report envelope
// ============================================================

#[derive(Serialize)]
struct Report {
    #[serde(skip_serializing_if = "Option::is_none")]
    tool_version: Option<String>,
    command: &'static str,
    inputs: Vec<String>,
    results: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    timing: Option<Vec<Timing>>,
}

#[derive(Serialize)]
struct Timing {
    item: String,
    seconds: f64,
}

impl Report {
    fn new(
        command: &'static str,
        inputs: Vec<String>,
        results: Value,
        timing: Vec<Timing>,
        deterministic: bool,
    ) -> Report {
        Report {
            tool_version: (!deterministic).then(|| env!("CARGO_PKG_VERSION").to_owned()),
            command,
            inputs,
            results,
            timing: (!deterministic).then_some(timing),
        }
    }

    fn print(&self) {
        println!("{}", serde_json::to_string_pretty(self).expect("report serializes"));
    }
}

/// Reads every graph6 line of every file; labels are `file:line`.
fn load_graphs(files: &[PathBuf]) -> anyhow::Result<Vec<(String, Graph)>> {
    let mut graphs = Vec::new();
    for file in files {
        let text = std::fs::read_to_string(file)
            .with_context(|| format!("cannot read {}", file.display()))?;
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let label = format!("{}:{}", file.display(), idx + 1);
            let g = parse_graph6(line).map_err(|e| anyhow!("{label}: {e}"))?;
            graphs.push((label, g));
        }
    }
    Ok(graphs)
}

// ============================================================
// analyze
// ============================================================

const COUNT_KINDS: [&str; 5] = ["w3", "p3", "c4", "c6", "girth"];

fn parse_count_selection(tokens: &[String], default_all: bool) -> anyhow::Result<Vec<&'static str>> {
    if tokens.is_empty() {
        return Ok(if default_all {
            COUNT_KINDS.to_vec()
        } else {
            Vec::new()
        });
    }
    let mut out = Vec::new();
    for token in tokens {
        let kind = COUNT_KINDS
            .iter()
            .find(|k| **k == token.to_ascii_lowercase())
            .ok_or_else(|| {
                anyhow!("unknown count `{token}` (expected one of {})", COUNT_KINDS.join(", "))
            })?;
        if !out.contains(kind) {
            out.push(*kind);
        }
    }
    Ok(out)
}

fn parse_bound_selection(tokens: &[String]) -> anyhow::Result<Vec<BoundId>> {
    if tokens.iter().any(|t| t == "all") {
        return Ok(BoundId::all());
    }
    let mut out = Vec::new();
    for token in tokens {
        let id: BoundId = token
            .parse()
            .map_err(|e| anyhow!("{e}"))?;
        if !out.contains(&id) {
            out.push(id);
        }
    }
    Ok(out)
}

fn count_value(g: &Graph, kind: &str) -> Value {
    match kind {
        "w3" => json!(walk_count(g, 3).to_string()),
        "p3" => json!(path3_count(g).to_string()),
        "c4" => json!(c4_count(g).to_string()),
        "c6" => json!(c6_count(g).to_string()),
        "girth" => girth(g).map_or(Value::Null, |k| json!(k)),
        _ => unreachable!("count kinds are validated at parse time"),
    }
}

fn cmd_analyze(args: AnalyzeArgs, deterministic: bool) -> anyhow::Result<ExitCode> {
    let counts = parse_count_selection(&args.counts, args.bounds.is_empty())?;
    let mut bound_ids = parse_bound_selection(&args.bounds)?;
    bound_ids.sort_by_key(BoundId::to_string);
    let graphs = load_graphs(&args.files)?;

    // per-graph work fans out; result order follows input order
    let items: Vec<(Value, Vec<BoundReport>, f64)> = graphs
        .par_iter()
        .map(|(label, g)| {
            let start = Instant::now();
            let mut obj = Map::new();
            obj.insert("input".into(), json!(label));
            obj.insert("n".into(), json!(g.n()));
            obj.insert("edges".into(), json!(g.edge_count()));
            if !counts.is_empty() {
                let mut c = Map::new();
                for kind in &counts {
                    c.insert((*kind).into(), count_value(g, kind));
                }
                obj.insert("counts".into(), Value::Object(c));
            }
            let reports: Vec<BoundReport> =
                bound_ids.iter().map(|id| evaluate(g, id)).collect();
            if !reports.is_empty() {
                obj.insert(
                    "bounds".into(),
                    serde_json::to_value(&reports).expect("reports serialize"),
                );
            }
            (Value::Object(obj), reports, start.elapsed().as_secs_f64())
        })
        .collect();

    let violated = items
        .iter()
        .flat_map(|(_, reports, _)| reports)
        .any(|r| r.verdict == Verdict::Violated);

    if args.csv {
        print_analyze_csv(&graphs, &items, &counts);
    } else {
        let timing = graphs
            .iter()
            .zip(&items)
            .map(|((label, _), (_, _, seconds))| Timing {
                item: label.clone(),
                seconds: *seconds,
            })
            .collect();
        Report::new(
            "analyze",
            graphs.iter().map(|(label, _)| label.clone()).collect(),
            Value::Array(items.iter().map(|(v, _, _)| v.clone()).collect()),
            timing,
            deterministic,
        )
        .print();
    }
    Ok(ExitCode::from(if violated { 2 } else { 0 }))
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_owned()
    }
}

fn print_analyze_csv(
    graphs: &[(String, Graph)],
    items: &[(Value, Vec<BoundReport>, f64)],
    counts: &[&'static str],
) {
    println!("input,kind,name,value,observed,verdict,slack,tight,certified");
    for ((label, g), (_, reports, _)) in graphs.iter().zip(items) {
        let input = csv_field(label);
        for kind in counts {
            let value = match count_value(g, kind) {
                Value::Null => String::new(),
                Value::String(s) => s,
                other => other.to_string(),
            };
            println!("{input},count,{kind},{value},,,,,");
        }
        for report in reports {
            let v = serde_json::to_value(report).expect("report serializes");
            let cell = |key: &str| match &v[key] {
                Value::Null => String::new(),
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            println!(
                "{input},bound,{},{},{},{},{},{},{}",
                cell("bound_id"),
                cell("bound_value"),
                cell("observed"),
                cell("verdict"),
                cell("slack"),
                cell("tight"),
                cell("certified"),
            );
        }
    }
}

// ============================================================
// reduce
// ============================================================

fn cmd_reduce(args: ReduceArgs, deterministic: bool) -> anyhow::Result<ExitCode> {
    let graphs = load_graphs(&[args.file])?;
    let mut results = Vec::new();
    let mut timing = Vec::new();
    for (label, g) in &graphs {
        let start = Instant::now();
        let item = match args.method {
            Method::Erdos => {
                let r = erdos_bipartite_subgraph(g);
                let out = &r.reduction.output;
                let half_degree = (0..g.n()).all(|v| 2 * out.degree(v) >= g.degree(v));
                json!({
                    "input": label,
                    "method": "erdos",
                    "guarantee": r.reduction.guarantee,
                    "input_edges": g.edge_count(),
                    "kept_edges": r.reduction.kept_edges,
                    "output_graph6": to_graph6(out),
                    "class_a": r.class_a(),
                    "class_b": r.class_b(),
                    "checks": {
                        "bipartite": true,
                        "half_degree_every_vertex": half_degree,
                    },
                })
            }
            Method::Gyori => {
                let r = gyori_c4free_reduction(g).map_err(|e| anyhow!("{label}: {e}"))?;
                json!({
                    "input": label,
                    "method": "gyori",
                    "guarantee": r.guarantee,
                    "input_edges": g.edge_count(),
                    "kept_edges": r.kept_edges,
                    "output_graph6": to_graph6(&r.output),
                    "checks": {
                        "c4_free": c4_count(&r.output).to_string() == "0",
                        "kept_at_least_half": 2 * r.kept_edges >= g.edge_count(),
                    },
                })
            }
        };
        results.push(item);
        timing.push(Timing {
            item: label.clone(),
            seconds: start.elapsed().as_secs_f64(),
        });
    }
    Report::new(
        "reduce",
        graphs.iter().map(|(label, _)| label.clone()).collect(),
        Value::Array(results),
        timing,
        deterministic,
    )
    .print();
    Ok(ExitCode::from(0))
}

// ============================================================
// search
// ============================================================

fn cmd_search(args: SearchArgs, deterministic: bool) -> anyhow::Result<ExitCode> {
    let forbidden: Forbidden = args.forbid.parse().map_err(|e| anyhow!("{e}"))?;
    let start = Instant::now();
    let (input, result) = match (args.n, args.bip) {
        (Some(n), None) => (
            format!("complete_{n}"),
            extremal_number(n, forbidden)?,
        ),
        (None, Some(parts)) => {
            let [a, b] = parts[..] else {
                bail!("--bip takes exactly two part sizes");
            };
            (
                format!("complete_bipartite_{a}_{b}"),
                extremal_number_bipartite(a, b, forbidden)?,
            )
        }
        _ => unreachable!("the host argument group is required and exclusive"),
    };
    let timing = vec![Timing {
        item: input.clone(),
        seconds: start.elapsed().as_secs_f64(),
    }];
    Report::new(
        "search",
        vec![input],
        Value::Array(vec![serde_json::to_value(&result)?]),
        timing,
        deterministic,
    )
    .print();
    Ok(ExitCode::from(0))
}

// ============================================================
// verify
// ============================================================

fn cmd_verify(args: VerifyArgs, deterministic: bool) -> anyhow::Result<ExitCode> {
    let bound_ids = parse_bound_selection(&args.bounds)?;
    let start = Instant::now();
    let report = sweep_bounds(args.n_max, &bound_ids)?;
    let violated = !report.violations.is_empty();
    let timing = vec![Timing {
        item: format!("n_max={}", args.n_max),
        seconds: start.elapsed().as_secs_f64(),
    }];
    Report::new(
        "verify",
        vec![format!("n_max={}", args.n_max)],
        serde_json::to_value(&report)?,
        timing,
        deterministic,
    )
    .print();
    Ok(ExitCode::from(if violated { 2 } else { 0 }))
}
