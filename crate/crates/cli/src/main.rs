//! `qf`: analysis, enumeration, construction and verification of
//! quasi-f ideals and graphs.
//!
//! Exit codes: 0 for a successful computation (whatever the verdict),
//! 1 when verification suites report violations, 2 for usage or input
//! errors. Every command is deterministic; `--json` switches the
//! output format, never the content.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use qf_core::cm::{build_cm_graph, cm_check, plan_construction, BoundMode, CmReport, CmVerdict};
use qf_core::complex::format_type_vector;
use qf_core::error::Error;
use qf_core::graph::{
    construct_n_nr_graph, enumerate_quasi_f_complexes, enumerate_quasi_f_graphs, ComplexCensus,
    GraphCensus, GraphEnumOptions,
};
use qf_core::ideal::{is_lower_perfect, is_upper_perfect};
use qf_core::verify::{run_suite, Caps, ConformanceReport, SuiteId, SuiteResult};
use qf_core::{FVector, Graph, SquarefreeIdeal};

#[derive(Parser)]
#[command(
    name = "qf",
    version,
    about = "f-vectors, quasi-f graphs and Cohen-Macaulay constructions for square-free monomial ideals"
)]
struct Cli {
    /// Emit the report as JSON instead of key/value text.
    #[arg(long, global = true)]
    json: bool,

    /// Write the command's main document to this path.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Worker threads for the internal sweeps.
    #[arg(long, global = true, value_name = "N")]
    workers: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a square-free monomial ideal file.
    AnalyzeIdeal { path: PathBuf },

    /// Analyze a graph file: quasi-f verdicts, classification, CM check.
    AnalyzeGraph { path: PathBuf },

    /// List quasi-f graphs on n vertices up to isomorphism.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Keep only type (0, B).
        #[arg(long = "type", value_name = "B", allow_hyphen_values = true)]
        type_b: Option<i64>,
        /// Keep only connected graphs.
        #[arg(long, conflicts_with = "disconnected")]
        connected: bool,
        /// Keep only disconnected graphs.
        #[arg(long)]
        disconnected: bool,
    },

    /// List pure d-dimensional quasi-f complexes on n vertices up to
    /// isomorphism.
    EnumerateComplexes {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        dim: usize,
        /// Keep only this type vector, e.g. "0,2,2".
        #[arg(long = "type", value_name = "T", allow_hyphen_values = true)]
        type_vector: Option<String>,
    },

    /// Build the two-clique matching-join graph of type (0, b) on n
    /// vertices and check it.
    ConstructCm {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
        /// Admit the boundary |b| = floor(n/2).
        #[arg(long)]
        extended: bool,
    },

    /// Build the disjoint union of complete graphs on n and n-r
    /// vertices.
    ConstructNr {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },

    /// Run verification suites.
    Verify {
        /// Run every suite.
        #[arg(long)]
        all: bool,
        /// Run one suite by name (repeatable).
        #[arg(long = "suite", value_name = "ID")]
        suites: Vec<String>,
        /// Cap for the graph sweeps.
        #[arg(long = "max-n", value_name = "N")]
        max_n: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_workers(cli.workers);
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

#[cfg(feature = "parallel")]
fn configure_workers(workers: Option<usize>) {
    if let Some(n) = workers {
        // A second initialization (tests, repeated calls) is harmless.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
}

#[cfg(not(feature = "parallel"))]
fn configure_workers(workers: Option<usize>) {
    if workers.is_some() {
        eprintln!("note: built without the `parallel` feature; --workers is ignored");
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::AnalyzeIdeal { ref path } => {
            let text = read(path)?;
            let ideal = SquarefreeIdeal::parse(&text)?;
            let report = IdealAnalysis::new(&ideal);
            emit(&cli, &report, report.text())?;
            Ok(0)
        }
        Command::AnalyzeGraph { ref path } => {
            let text = read(path)?;
            let graph = Graph::parse(&text)?;
            let report = GraphAnalysis::new(&graph)?;
            emit(&cli, &report, report.text())?;
            Ok(0)
        }
        Command::Enumerate {
            n,
            type_b,
            connected,
            disconnected,
        } => {
            let options = GraphEnumOptions {
                b: type_b,
                connected: if connected {
                    Some(true)
                } else if disconnected {
                    Some(false)
                } else {
                    None
                },
                cap: enum_cap_from_env()?,
            };
            let census = enumerate_quasi_f_graphs(n, &options)?;
            emit(&cli, &census, graph_census_text(&census))?;
            Ok(0)
        }
        Command::EnumerateComplexes {
            n,
            dim,
            ref type_vector,
        } => {
            let filter = type_vector.as_deref().map(parse_type_vector).transpose()?;
            let census = enumerate_quasi_f_complexes(n, dim, filter.as_deref())?;
            emit(&cli, &census, complex_census_text(&census))?;
            Ok(0)
        }
        Command::ConstructCm { n, b, extended } => {
            let mode = if extended {
                BoundMode::Extended
            } else {
                BoundMode::Strict
            };
            let spec = plan_construction(n, b, mode)?;
            let graph = build_cm_graph(&spec)?;
            let quasi = graph.is_quasi_f_direct()?;
            if quasi.type_vector != Some(vec![0, b]) {
                return Err(Error::PreconditionViolated {
                    what: format!(
                        "self-check failed: constructed type {:?} instead of (0,{b})",
                        quasi.type_vector
                    ),
                });
            }
            let cm = cm_check(&graph);
            let report = ConstructionReport {
                n,
                b,
                case_id: spec.case_id.to_string(),
                k: spec.k,
                b_prime: spec.b_prime,
                part_sizes: spec.part_sizes,
                join_count: spec.join_count,
                edge_count: graph.edge_count(),
                is_quasi_f: quasi.is_quasi_f,
                type_vector: quasi.type_vector.clone(),
                cm_verdict: cm.verdict,
                exception: cm.exception.map(|e| e.to_string()),
                graph: graph.clone(),
            };
            if cm.verdict != CmVerdict::Yes {
                eprintln!(
                    "warning: construction is not Cohen-Macaulay ({})",
                    report
                        .exception
                        .clone()
                        .unwrap_or_else(|| "no matched exception".into())
                );
            }
            if let Some(out) = &cli.out {
                fs::write(out, graph.to_text()).map_err(|e| io_error(out, &e))?;
            }
            print_report(&cli, &report, report.text())?;
            Ok(0)
        }
        Command::ConstructNr { n, r } => {
            let (graph, b) = construct_n_nr_graph(n, r)?;
            let quasi = graph.is_quasi_f_direct()?;
            if quasi.type_vector != Some(vec![0, b]) {
                return Err(Error::PreconditionViolated {
                    what: format!(
                        "self-check failed: constructed type {:?} instead of (0,{b})",
                        quasi.type_vector
                    ),
                });
            }
            let cm = cm_check(&graph);
            let report = TwoCliqueReport {
                first_part: n,
                second_part: n - r,
                r,
                total_n: graph.n(),
                b,
                edge_count: graph.edge_count(),
                is_quasi_f: quasi.is_quasi_f,
                type_vector: quasi.type_vector.clone(),
                connected: graph.is_connected(),
                cm_verdict: cm.verdict,
                graph: graph.clone(),
            };
            if let Some(out) = &cli.out {
                fs::write(out, graph.to_text()).map_err(|e| io_error(out, &e))?;
            }
            print_report(&cli, &report, report.text())?;
            Ok(0)
        }
        Command::Verify {
            all,
            ref suites,
            max_n,
        } => {
            let mut caps = Caps::default();
            if let Some(n) = max_n {
                caps.graph_max_n = n;
            }
            let ids: Vec<SuiteId> = if all || suites.is_empty() {
                SuiteId::ALL.to_vec()
            } else {
                suites
                    .iter()
                    .map(|s| s.parse::<SuiteId>())
                    .collect::<Result<_, _>>()?
            };
            let results: Vec<SuiteResult> = ids
                .into_iter()
                .map(|id| run_suite(id, &caps))
                .collect::<Result<_, _>>()?;
            let overall = results.iter().all(|r| r.passed());
            let report = ConformanceReport {
                suites: results,
                overall,
            };
            emit(&cli, &report, conformance_text(&report))?;
            Ok(if overall { 0 } else { 1 })
        }
    }
}

fn read(path: &PathBuf) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| io_error(path, &e))
}

fn io_error(path: &Path, e: &std::io::Error) -> Error {
    Error::ParseError {
        line: 0,
        message: format!("{}: {e}", path.display()),
    }
}

/// Writes to stdout, treating a closed pipe as a normal exit.
fn write_stdout(s: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if let Err(e) = out.write_all(s.as_bytes()).and_then(|_| out.flush()) {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
    }
}

/// Routes the main document to stdout or `--out`.
fn emit<T: Serialize>(cli: &Cli, doc: &T, text: String) -> Result<(), Error> {
    let rendered = if cli.json {
        let mut s = serde_json::to_string_pretty(doc).expect("reports serialize");
        s.push('\n');
        s
    } else {
        text
    };
    match &cli.out {
        Some(path) => fs::write(path, rendered).map_err(|e| io_error(path, &e)),
        None => {
            write_stdout(&rendered);
            Ok(())
        }
    }
}

/// Construction reports always go to stdout; `--out` holds the graph
/// file.
fn print_report<T: Serialize>(cli: &Cli, doc: &T, text: String) -> Result<(), Error> {
    if cli.json {
        let mut s = serde_json::to_string_pretty(doc).expect("reports serialize");
        s.push('\n');
        write_stdout(&s);
    } else {
        write_stdout(&text);
    }
    Ok(())
}

fn enum_cap_from_env() -> Result<Option<usize>, Error> {
    match std::env::var("QF_CAP") {
        Err(_) => Ok(None),
        Ok(raw) => raw
            .parse::<usize>()
            .map(Some)
            .map_err(|_| Error::ParseError {
                line: 0,
                message: format!("QF_CAP must be a vertex count, found `{raw}`"),
            }),
    }
}

fn parse_type_vector(raw: &str) -> Result<Vec<i64>, Error> {
    raw.split(',')
        .map(|t| {
            t.trim().parse::<i64>().map_err(|_| Error::ParseError {
                line: 0,
                message: format!("type vector entry `{t}` is not an integer"),
            })
        })
        .collect()
}

fn opt_text<T: std::fmt::Display>(v: &Option<T>) -> String {
    match v {
        Some(v) => v.to_string(),
        None => "-".into(),
    }
}

fn kv(out: &mut String, key: &str, value: impl std::fmt::Display) {
    let _ = writeln!(out, "{key}: {value}");
}

// ---------------------------------------------------------------------
// Report documents
// ---------------------------------------------------------------------

#[derive(Serialize)]
struct IdealAnalysis {
    n: usize,
    generators: usize,
    degree: Option<usize>,
    f_facet: FVector,
    f_nonface: FVector,
    is_quasi_f: bool,
    is_f_ideal: bool,
    #[serde(rename = "type")]
    type_vector: Option<Vec<i64>>,
    failure_reason: Option<String>,
    upper_perfect: Option<bool>,
    lower_perfect: Option<bool>,
}

impl IdealAnalysis {
    fn new(ideal: &SquarefreeIdeal) -> IdealAnalysis {
        let report = ideal.quasi_f_report();
        let degree = ideal.generator_degree();
        // Perfect flags only exist for degree-uniform generating sets.
        let (upper, lower) = match degree {
            None => (None, None),
            Some(_) => (
                is_upper_perfect(ideal.generators(), ideal.ambient()).ok(),
                is_lower_perfect(ideal.generators(), ideal.ambient()).ok(),
            ),
        };
        IdealAnalysis {
            n: ideal.ambient(),
            generators: ideal.generators().len(),
            degree,
            f_facet: report.f_facet,
            f_nonface: report.f_nonface,
            is_quasi_f: report.is_quasi_f,
            is_f_ideal: report.is_f_ideal,
            type_vector: report.type_vector,
            failure_reason: report.failure_reason.map(|r| r.to_string()),
            upper_perfect: upper,
            lower_perfect: lower,
        }
    }

    fn text(&self) -> String {
        let mut s = String::new();
        kv(&mut s, "n", self.n);
        kv(&mut s, "generators", self.generators);
        kv(&mut s, "degree", opt_text(&self.degree));
        kv(&mut s, "f_facet", &self.f_facet);
        kv(&mut s, "f_nonface", &self.f_nonface);
        kv(&mut s, "quasi_f", self.is_quasi_f);
        kv(&mut s, "f_ideal", self.is_f_ideal);
        kv(
            &mut s,
            "type",
            opt_text(&self.type_vector.as_deref().map(format_type_vector)),
        );
        kv(&mut s, "failure_reason", opt_text(&self.failure_reason));
        kv(&mut s, "upper_perfect", opt_text(&self.upper_perfect));
        kv(&mut s, "lower_perfect", opt_text(&self.lower_perfect));
        s
    }
}

#[derive(Serialize)]
struct GraphAnalysis {
    n: usize,
    edges: usize,
    b: i64,
    quasi_f_direct: bool,
    quasi_f_characterized: bool,
    verdicts_agree: bool,
    #[serde(rename = "type")]
    type_vector: Option<Vec<i64>>,
    failure_reason: Option<String>,
    complement_triangle: Option<(usize, usize, usize)>,
    f_facet: FVector,
    f_nonface: FVector,
    connected: bool,
    mn_graph: Option<(usize, usize)>,
    cm: CmReport,
}

impl GraphAnalysis {
    fn new(graph: &Graph) -> Result<GraphAnalysis, Error> {
        let direct = graph.is_quasi_f_direct()?;
        let (characterized, char_b) = graph.is_quasi_f_characterized()?;
        let verdicts_agree = direct.is_quasi_f == characterized
            && (!characterized || direct.type_vector.as_deref() == Some(&[0, char_b.unwrap_or(0)]));
        Ok(GraphAnalysis {
            n: graph.n(),
            edges: graph.edge_count(),
            b: graph.b_value(),
            quasi_f_direct: direct.is_quasi_f,
            quasi_f_characterized: characterized,
            verdicts_agree,
            type_vector: direct.type_vector,
            failure_reason: direct.failure_reason.map(|r| r.to_string()),
            complement_triangle: graph.complement().find_triangle(),
            f_facet: direct.f_facet,
            f_nonface: direct.f_nonface,
            connected: graph.is_connected(),
            mn_graph: graph.is_mn_graph(),
            cm: cm_check(graph),
        })
    }

    fn text(&self) -> String {
        let mut s = String::new();
        kv(&mut s, "n", self.n);
        kv(&mut s, "edges", self.edges);
        kv(&mut s, "b", self.b);
        kv(&mut s, "quasi_f_direct", self.quasi_f_direct);
        kv(&mut s, "quasi_f_characterized", self.quasi_f_characterized);
        kv(&mut s, "verdicts_agree", self.verdicts_agree);
        kv(
            &mut s,
            "type",
            opt_text(&self.type_vector.as_deref().map(format_type_vector)),
        );
        kv(&mut s, "failure_reason", opt_text(&self.failure_reason));
        kv(
            &mut s,
            "complement_triangle",
            match self.complement_triangle {
                Some((a, b, c)) => format!("{{{a},{b},{c}}}"),
                None => "-".into(),
            },
        );
        kv(&mut s, "f_facet", &self.f_facet);
        kv(&mut s, "f_nonface", &self.f_nonface);
        kv(&mut s, "connected", self.connected);
        kv(
            &mut s,
            "mn_graph",
            match self.mn_graph {
                Some((m, n)) => format!("[{m}:{n}]"),
                None => "-".into(),
            },
        );
        kv(&mut s, "cm_verdict", self.cm.verdict);
        kv(&mut s, "cm_height", self.cm.height);
        kv(
            &mut s,
            "nonface_connected",
            opt_text(&self.cm.nonface_connected),
        );
        kv(
            &mut s,
            "cm_exception",
            opt_text(&self.cm.exception.map(|e| e.to_string())),
        );
        s
    }
}

#[derive(Serialize)]
struct ConstructionReport {
    n: usize,
    b: i64,
    case_id: String,
    k: usize,
    b_prime: i64,
    part_sizes: (usize, usize),
    join_count: usize,
    edge_count: usize,
    is_quasi_f: bool,
    #[serde(rename = "type")]
    type_vector: Option<Vec<i64>>,
    cm_verdict: CmVerdict,
    exception: Option<String>,
    graph: Graph,
}

impl ConstructionReport {
    fn text(&self) -> String {
        let mut s = String::new();
        kv(&mut s, "n", self.n);
        kv(&mut s, "b", self.b);
        kv(&mut s, "case_id", &self.case_id);
        kv(&mut s, "k", self.k);
        kv(&mut s, "b_prime", self.b_prime);
        kv(
            &mut s,
            "part_sizes",
            format!("({},{})", self.part_sizes.0, self.part_sizes.1),
        );
        kv(&mut s, "join_count", self.join_count);
        kv(&mut s, "edge_count", self.edge_count);
        kv(&mut s, "quasi_f", self.is_quasi_f);
        kv(
            &mut s,
            "type",
            opt_text(&self.type_vector.as_deref().map(format_type_vector)),
        );
        kv(&mut s, "cm_verdict", self.cm_verdict);
        kv(&mut s, "exception", opt_text(&self.exception));
        kv(&mut s, "graph", edges_inline(&self.graph));
        s
    }
}

#[derive(Serialize)]
struct TwoCliqueReport {
    first_part: usize,
    second_part: usize,
    r: usize,
    total_n: usize,
    b: i64,
    edge_count: usize,
    is_quasi_f: bool,
    #[serde(rename = "type")]
    type_vector: Option<Vec<i64>>,
    connected: bool,
    cm_verdict: CmVerdict,
    graph: Graph,
}

impl TwoCliqueReport {
    fn text(&self) -> String {
        let mut s = String::new();
        kv(
            &mut s,
            "parts",
            format!("[{}:{}]", self.first_part, self.second_part),
        );
        kv(&mut s, "r", self.r);
        kv(&mut s, "n", self.total_n);
        kv(&mut s, "b", self.b);
        kv(&mut s, "edge_count", self.edge_count);
        kv(&mut s, "quasi_f", self.is_quasi_f);
        kv(
            &mut s,
            "type",
            opt_text(&self.type_vector.as_deref().map(format_type_vector)),
        );
        kv(&mut s, "connected", self.connected);
        kv(&mut s, "cm_verdict", self.cm_verdict);
        kv(&mut s, "graph", edges_inline(&self.graph));
        s
    }
}

fn edges_inline(g: &Graph) -> String {
    let parts: Vec<String> = g
        .edges()
        .into_iter()
        .map(|(u, v)| format!("{u}-{v}"))
        .collect();
    if parts.is_empty() {
        "(no edges)".into()
    } else {
        parts.join(" ")
    }
}

fn graph_census_text(census: &GraphCensus) -> String {
    let mut s = String::new();
    kv(&mut s, "n", census.n);
    kv(&mut s, "filter_b", opt_text(&census.filter_b));
    kv(
        &mut s,
        "filter_connected",
        opt_text(&census.filter_connected),
    );
    kv(&mut s, "total", census.total);
    for (b, count) in &census.by_type {
        kv(&mut s, &format!("type (0,{b})"), count);
    }
    for (i, g) in census.graphs.iter().enumerate() {
        kv(
            &mut s,
            &format!("graph {:03}", i + 1),
            format!("[b={}] {}", g.b_value(), edges_inline(g)),
        );
    }
    s
}

fn complex_census_text(census: &ComplexCensus) -> String {
    let mut s = String::new();
    kv(&mut s, "n", census.n);
    kv(&mut s, "d", census.d);
    kv(
        &mut s,
        "filter_type",
        opt_text(&census.filter_type.as_deref().map(format_type_vector)),
    );
    kv(&mut s, "total", census.total);
    for (t, count) in &census.by_type {
        kv(&mut s, &format!("type {t}"), count);
    }
    for (i, entry) in census.complexes.iter().enumerate() {
        let facets: Vec<String> = entry
            .facets
            .facets()
            .iter()
            .map(|f| f.to_string())
            .collect();
        kv(
            &mut s,
            &format!("complex {:03}", i + 1),
            format!(
                "[type {}, {}] {}",
                format_type_vector(&entry.type_vector),
                if entry.connected {
                    "connected"
                } else {
                    "disconnected"
                },
                facets.join(" ")
            ),
        );
    }
    s
}

fn conformance_text(report: &ConformanceReport) -> String {
    let mut s = String::new();
    for suite in &report.suites {
        let _ = writeln!(
            s,
            "suite {}: {} ({} cases, {:.2}s) - {} [{}]",
            suite.suite,
            if suite.passed() { "pass" } else { "FAIL" },
            suite.cases_run,
            suite.elapsed_secs,
            suite.suite.describes(),
            suite.parameter_range
        );
        for v in &suite.violations {
            let _ = writeln!(s, "  violation: {}", v.detail);
            for line in v.case.lines() {
                let _ = writeln!(s, "    | {line}");
            }
        }
    }
    kv(
        &mut s,
        "overall",
        if report.overall { "pass" } else { "FAIL" },
    );
    s
}
