//! The `latlab` command line.
//!
//! Exit codes: 0 success, 1 internal error, 2 invalid input (including a
//! certificate that fails verification), 3 infeasible or no labeling within
//! the bound, 4 budget exhausted.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::sync::Mutex;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::bounds::{bounds_report, known_value};
use crate::cache::{Cache, Lookup};
use crate::cert::{export_dot, parse_certificate, write_certificate, CertError, Certificate};
use crate::constructions;
use crate::graph::{format_edge_list, format_graph6, parse_graph, parse_graph6, GraphFormat};
use crate::graph::{generate, EdgeId, FamilySpec, Graph, VertexId};
use crate::labeling::{Labeling, Mode};
use crate::solver::{
    self, Feasibility, SearchOptions, Slot, SlotOrbits, SolveBudget, SolveResult, SolveStatus,
};
use crate::transforms;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_NONE: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "latlab", version, about = "Local antimagic total labelings: search, verify, transform")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a graph from a named family, e.g. `gen cycle 6` or `gen kpq:2,3`.
    Gen {
        family: String,
        params: Option<String>,
        #[arg(long, default_value = "edge-list")]
        format: GraphFormat,
    },
    /// Re-verify a certificate; exits 0 only if it certifies what it claims.
    Verify {
        certificate: String,
        #[arg(long)]
        json: bool,
    },
    /// Minimise the number of distinct weights, or find a labeling with at most `--k`.
    Solve {
        graph: String,
        #[command(flatten)]
        opts: SolveArgs,
        #[arg(long)]
        k: Option<usize>,
        /// Write the certificate here instead of embedding it in the output.
        #[arg(long)]
        cert: Option<PathBuf>,
        /// Ignore LATLAB_CACHE_DIR.
        #[arg(long)]
        no_cache: bool,
    },
    /// Build an explicit labeling: k2-plus-empty N, odd-path N, path-from-cycle N.
    Construct {
        name: String,
        n: usize,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Move a labeling between a graph and its cones.
    Transform {
        #[command(subcommand)]
        kind: TransformKind,
    },
    /// Lower and upper bounds on chi_lat, with the known value for families.
    Bounds {
        graph: String,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        json: bool,
    },
    /// Solve every graph in a graph6 stream, one result line per graph.
    Atlas {
        input: String,
        #[command(flatten)]
        opts: SolveArgs,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Render a certificate as Graphviz DOT.
    Dot { certificate: String },
}

#[derive(Debug, Subcommand)]
enum TransformKind {
    /// Edge labeling of K1 v G to a total labeling of G.
    ConeToTotal {
        certificate: String,
        /// Apex vertex; defaults to the last vertex.
        #[arg(long)]
        apex: Option<usize>,
    },
    /// Total labeling of G to an edge labeling of K1 v G (apex last).
    TotalToCone { certificate: String },
    /// Edge labeling of G v O2 to a total labeling of G v K1.
    DoubleCone {
        certificate: String,
        /// Kept apex, then consumed apex, as `U1,U2`; defaults to the last two vertices.
        #[arg(long, value_delimiter = ',')]
        apexes: Option<Vec<usize>>,
    },
}

#[derive(Debug, Args)]
struct BudgetArgs {
    #[arg(long)]
    max_nodes: Option<u64>,
    #[arg(long)]
    max_millis: Option<u64>,
    /// Single-threaded search with reproducible output.
    #[arg(long)]
    deterministic: bool,
}

#[derive(Debug, Args)]
struct SolveArgs {
    #[arg(long, default_value = "total")]
    mode: Mode,
    #[command(flatten)]
    budget: BudgetArgs,
    #[arg(long)]
    json: bool,
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn invalid(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INVALID,
            message: message.into(),
        }
    }

    fn internal(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INTERNAL,
            message: message.into(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::internal(format!("i/o error: {e}"))
    }
}

type Outcome = Result<i32, Failure>;

/// Runs one command; `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match cmd {
        Command::Gen { family, params, format } => gen(&family, params.as_deref(), format, out),
        Command::Verify { certificate, json } => verify(&certificate, json, out),
        Command::Solve {
            graph,
            opts,
            k,
            cert,
            no_cache,
        } => solve(&graph, &opts, k, cert, no_cache, out, err),
        Command::Construct { name, n, budget } => construct(&name, n, &budget, out),
        Command::Transform { kind } => transform(kind, out),
        Command::Bounds { graph, budget, json } => bounds(&graph, &budget, json, out),
        Command::Atlas { input, opts, k } => atlas(&input, &opts, k, out, err),
        Command::Dot { certificate } => {
            let cert = load_certificate(&certificate)?;
            out.write_all(export_dot(&cert).as_bytes())?;
            Ok(EXIT_OK)
        }
    }
}

fn read_source(source: &str) -> Result<String, Failure> {
    if source == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(source).map_err(|e| Failure::invalid(format!("cannot read {source}: {e}")))
    }
}

/// A graph given as a file, `-` for stdin, or a family spec like `cycle:6`.
/// The family is returned when one was named.
fn load_graph(source: &str) -> Result<(Graph, Option<FamilySpec>), Failure> {
    if source != "-" && !std::path::Path::new(source).exists() {
        if let Ok(spec) = source.parse::<FamilySpec>() {
            let g = generate(spec).map_err(|e| Failure::invalid(e.to_string()))?;
            return Ok((g, Some(spec)));
        }
    }
    let text = read_source(source)?;
    let g = parse_graph(&text, GraphFormat::detect(&text)).map_err(|e| Failure::invalid(format!("{source}: {e}")))?;
    Ok((g, None))
}

fn load_certificate(source: &str) -> Result<Certificate, Failure> {
    parse_certificate(&read_source(source)?).map_err(|e| Failure::invalid(format!("{source}: {e}")))
}

/// Certificate that has passed every integrity check.
fn load_valid_certificate(source: &str) -> Result<(Graph, Certificate), Failure> {
    let cert = load_certificate(source)?;
    let problems = cert
        .integrity_problems()
        .map_err(|e| Failure::invalid(format!("{source}: {e}")))?;
    if !problems.is_empty() {
        return Err(Failure::invalid(format!(
            "{source} does not verify: {}",
            problems.join("; ")
        )));
    }
    let g = cert.graph().map_err(|e| Failure::invalid(e.to_string()))?;
    Ok((g, cert))
}

fn budget_from(args: &BudgetArgs) -> Result<SolveBudget, Failure> {
    let budget = if args.max_nodes.is_none() && args.max_millis.is_none() {
        SolveBudget::default()
    } else {
        SolveBudget::new(args.max_nodes, args.max_millis, true).map_err(|e| Failure::invalid(e.to_string()))?
    };
    Ok(if args.deterministic { budget } else { budget.parallel() })
}

fn emit_json(out: &mut dyn Write, v: &Value) -> io::Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(v).expect("json"))
}

fn emit_certificate(out: &mut dyn Write, cert: &Certificate) -> io::Result<()> {
    writeln!(out, "{}", write_certificate(cert))
}

fn gen(family: &str, params: Option<&str>, format: GraphFormat, out: &mut dyn Write) -> Outcome {
    let text = match params {
        Some(p) => format!("{family}:{p}"),
        None => family.to_string(),
    };
    let spec: FamilySpec = text.parse().map_err(|e: crate::graph::GraphError| Failure::invalid(e.to_string()))?;
    let g = generate(spec).map_err(|e| Failure::invalid(e.to_string()))?;
    let body = match format {
        GraphFormat::EdgeList => format_edge_list(&g),
        GraphFormat::Graph6 => format_graph6(&g),
    };
    if body.is_empty() {
        // an edgeless graph on zero vertices
        return Ok(EXIT_OK);
    }
    writeln!(out, "{body}")?;
    Ok(EXIT_OK)
}

fn verify(source: &str, json: bool, out: &mut dyn Write) -> Outcome {
    let cert = load_certificate(source)?;
    let problems = match cert.integrity_problems() {
        Ok(p) => p,
        Err(e @ CertError::Schema { .. }) => vec![e.to_string()],
        Err(e) => return Err(Failure::internal(e.to_string())),
    };
    let valid = problems.is_empty();
    if json {
        emit_json(
            out,
            &json!({
                "valid": valid,
                "mode": cert.mode,
                "distinct": cert.distinct,
                "problems": problems,
            }),
        )?;
    } else if valid {
        writeln!(out, "valid: {} labeling with {} distinct weights", cert.mode, cert.distinct)?;
    } else {
        writeln!(out, "invalid:")?;
        for p in &problems {
            writeln!(out, "  {p}")?;
        }
    }
    Ok(if valid { EXIT_OK } else { EXIT_INVALID })
}

fn status_name(s: SolveStatus) -> &'static str {
    match s {
        SolveStatus::Exact => "exact",
        SolveStatus::LowerUpper => "lower-upper",
        SolveStatus::Infeasible => "infeasible",
        SolveStatus::Exhausted => "exhausted",
    }
}

fn solve_certificate(g: &Graph, lab: &Labeling, spec: Option<FamilySpec>, note: String) -> Certificate {
    let mut cert = Certificate::new(g, lab, "solver").with_path_sequence().with_note(note);
    if let Some(k) = spec.and_then(known_value) {
        cert = cert.with_citation(k.to_string());
    }
    cert
}

#[allow(clippy::too_many_arguments)]
fn solve(
    source: &str,
    opts: &SolveArgs,
    k: Option<usize>,
    cert_path: Option<PathBuf>,
    no_cache: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let (g, spec) = load_graph(source)?;
    let budget = budget_from(&opts.budget)?;
    let mode = opts.mode;
    let search = SearchOptions::with_symmetry(spec.and_then(|s| SlotOrbits::for_family(s, &g)));

    let (summary, cert, code) = match k {
        Some(k) => {
            let r = solver::find_with_at_most_k_with(&g, k, mode, budget, &search);
            let (status, cert, code) = match &r.outcome {
                Feasibility::Found(lab) => (
                    "found",
                    Some(solve_certificate(&g, lab, spec, format!("at most {k} distinct weights"))),
                    EXIT_OK,
                ),
                Feasibility::None => ("none", None, EXIT_NONE),
                Feasibility::Unknown => ("unknown", None, EXIT_BUDGET),
            };
            let summary = json!({
                "mode": mode,
                "k": k,
                "status": status,
                "nodes_explored": r.nodes_explored,
            });
            (summary, cert, code)
        }
        None => {
            let cache = if no_cache {
                None
            } else {
                match Cache::from_env() {
                    Some(Ok(c)) => Some(c),
                    Some(Err(e)) => {
                        writeln!(err, "warning: cache unavailable: {e}")?;
                        None
                    }
                    None => None,
                }
            };
            let cached = cache.as_ref().and_then(|c| match c.lookup(&g, mode) {
                Lookup::Hit(e) => Some(e),
                Lookup::Miss => None,
                Lookup::Discarded(reason) => {
                    let _ = writeln!(err, "warning: discarded cache entry: {reason}");
                    None
                }
            });
            let (r, from_cache) = match cached {
                Some(e) => (
                    SolveResult {
                        status: SolveStatus::Exact,
                        lower: e.lower,
                        upper: Some(e.value),
                        certificate: Some(e.certificate.labeling()),
                        nodes_explored: 0,
                    },
                    true,
                ),
                None => (solver::solve_min_distinct_with(&g, mode, budget, &search), false),
            };
            let cert = r.certificate.as_ref().map(|lab| {
                let quantity = if mode == Mode::Total { "chi_lat" } else { "chi_la" };
                let note = match r.status {
                    SolveStatus::Exact => format!("{quantity} = {}", r.upper.unwrap_or(0)),
                    _ => format!("{} <= {quantity} <= {}", r.lower, r.upper.unwrap_or(0)),
                };
                solve_certificate(&g, lab, spec, note)
            });
            if let (Some(c), Some(cert), false, SolveStatus::Exact) = (&cache, &cert, from_cache, r.status) {
                if let Err(e) = c.store(&g, mode, r.upper.unwrap_or(0), r.lower, cert.clone()) {
                    writeln!(err, "warning: cache write failed: {e}")?;
                }
            }
            let code = match r.status {
                SolveStatus::Exact => EXIT_OK,
                SolveStatus::Infeasible => EXIT_NONE,
                SolveStatus::LowerUpper | SolveStatus::Exhausted => EXIT_BUDGET,
            };
            let summary = json!({
                "mode": mode,
                "status": status_name(r.status),
                "value": r.exact(),
                "lower": r.lower,
                "upper": r.upper,
                "nodes_explored": r.nodes_explored,
                "cached": from_cache,
            });
            (summary, cert, code)
        }
    };

    if let (Some(path), Some(cert)) = (&cert_path, &cert) {
        fs::write(path, write_certificate(cert) + "\n")?;
    }
    if opts.json {
        let mut doc = summary;
        if cert_path.is_none() {
            doc["certificate"] = cert.as_ref().map_or(Value::Null, |c| serde_json::to_value(c).expect("json"));
        }
        emit_json(out, &doc)?;
    } else {
        writeln!(out, "graph: p={} q={}", g.order(), g.size())?;
        for (key, v) in summary.as_object().expect("object") {
            let shown = match v {
                Value::String(s) => s.clone(),
                Value::Null => "-".into(),
                other => other.to_string(),
            };
            writeln!(out, "{key}: {shown}")?;
        }
        if let Some(cert) = &cert {
            writeln!(out, "weights: {:?}", cert.weights)?;
            if cert_path.is_none() {
                emit_certificate(out, cert)?;
            }
        }
    }
    Ok(code)
}

fn construct(name: &str, n: usize, budget: &BudgetArgs, out: &mut dyn Write) -> Outcome {
    let invalid = |e: constructions::ConstructionError| Failure::invalid(e.to_string());
    let cert = match name {
        "k2-plus-empty" => {
            let (g, f) = constructions::construct_k2_plus_empty(n).map_err(invalid)?;
            let mut c = Certificate::new(&g, &Labeling::Total(f), "construction:k2-plus-empty");
            if let Some(k) = known_value(FamilySpec::K2PlusEmpty(n)) {
                c = c.with_citation(k.to_string());
            }
            c
        }
        "odd-path" => {
            let (g, f) = constructions::construct_small_odd_path(n).map_err(invalid)?;
            Certificate::new(&g, &Labeling::Total(f), "construction:odd-path")
                .with_path_sequence()
                .with_note("labels listed in the order v1, e1, v2, e2, ..., vn")
        }
        "path-from-cycle" => {
            if n < 3 {
                return Err(Failure::invalid("path-from-cycle requires n >= 3"));
            }
            let spec = FamilySpec::Cycle(n);
            let cycle = generate(spec).expect("n >= 3");
            let k = known_value(spec).and_then(|r| r.value()).unwrap_or(3);
            let search = SearchOptions {
                pins: vec![(Slot::Edge(0), 1)],
                ..Default::default()
            };
            let r = solver::find_with_at_most_k_with(&cycle, k, Mode::Total, budget_from(budget)?, &search);
            let f = match r.outcome {
                Feasibility::Found(Labeling::Total(f)) => f,
                Feasibility::Found(_) => return Err(Failure::internal("solver returned an edge labeling")),
                Feasibility::None => {
                    return Err(Failure {
                        code: EXIT_NONE,
                        message: format!("C{n} has no valid labeling with {k} weights and label 1 on an edge"),
                    })
                }
                Feasibility::Unknown => {
                    return Err(Failure {
                        code: EXIT_BUDGET,
                        message: format!("budget exhausted searching C{n}"),
                    })
                }
            };
            let (path, g, walk) = constructions::path_from_cycle(&cycle, &f, EdgeId(0)).map_err(invalid)?;
            Certificate::new(&path, &Labeling::Total(g), "construction:path-from-cycle")
                .with_path_sequence()
                .with_note(format!(
                    "cut C{n} at edge {:?} (label 1); cycle vertex labels {:?}, edge labels {:?}",
                    cycle.edge(EdgeId(0)),
                    f.vertex_labels,
                    f.edge_labels
                ))
                .with_note(format!("path vertices in cycle order: {walk:?}"))
        }
        other => {
            return Err(Failure::invalid(format!(
                "unknown construction {other:?}; expected k2-plus-empty, odd-path or path-from-cycle"
            )))
        }
    };
    emit_certificate(out, &cert)?;
    Ok(EXIT_OK)
}

fn transform(kind: TransformKind, out: &mut dyn Write) -> Outcome {
    let invalid = |e: transforms::TransformError| Failure::invalid(e.to_string());
    let need = |cert: &Certificate, mode: Mode| {
        if cert.mode == mode {
            Ok(())
        } else {
            Err(Failure::invalid(format!("expected a {mode} certificate, found {}", cert.mode)))
        }
    };
    let cert = match kind {
        TransformKind::ConeToTotal { certificate, apex } => {
            let (g, cert) = load_valid_certificate(&certificate)?;
            need(&cert, Mode::Edge)?;
            let Labeling::Edge(lab) = cert.labeling() else { unreachable!() };
            let apex = apex.unwrap_or(g.order().saturating_sub(1));
            let o = transforms::cone_to_total(&g, &lab, VertexId(apex)).map_err(invalid)?;
            Certificate::new(&o.graph, &Labeling::Total(o.labeling), "transform:cone-to-total")
                .with_note(format!("removed apex {apex}; output vertex i is input vertex {:?}[i]", o.origin))
        }
        TransformKind::TotalToCone { certificate } => {
            let (g, cert) = load_valid_certificate(&certificate)?;
            need(&cert, Mode::Total)?;
            let Labeling::Total(f) = cert.labeling() else { unreachable!() };
            let o = transforms::total_to_cone(&g, &f).map_err(invalid)?;
            Certificate::new(&o.graph, &Labeling::Edge(o.labeling), "transform:total-to-cone")
                .with_note(format!("apex is vertex {}", o.apex.0))
        }
        TransformKind::DoubleCone { certificate, apexes } => {
            let (g, cert) = load_valid_certificate(&certificate)?;
            need(&cert, Mode::Edge)?;
            let Labeling::Edge(lab) = cert.labeling() else { unreachable!() };
            let p = g.order();
            let (u1, u2) = match apexes.as_deref() {
                Some([a, b]) => (*a, *b),
                Some(_) => return Err(Failure::invalid("--apexes takes exactly two vertices")),
                None => (p.saturating_sub(2), p.saturating_sub(1)),
            };
            let o = transforms::double_cone_collapse(&g, &lab, (VertexId(u1), VertexId(u2))).map_err(invalid)?;
            Certificate::new(&o.graph, &Labeling::Total(o.labeling), "transform:double-cone")
                .with_note(format!(
                    "kept apex {} (now last), consumed apex {}",
                    o.kept_apex.0, o.consumed_apex.0
                ))
        }
    };
    emit_certificate(out, &cert)?;
    Ok(EXIT_OK)
}

fn bounds(source: &str, budget: &BudgetArgs, json: bool, out: &mut dyn Write) -> Outcome {
    let (g, spec) = load_graph(source)?;
    let report = bounds_report(&g, spec, budget_from(budget)?).map_err(|e| Failure::invalid(e.to_string()))?;
    if json {
        emit_json(out, &serde_json::to_value(&report).expect("json"))?;
    } else {
        writeln!(out, "graph: p={} q={}", g.order(), g.size())?;
        writeln!(out, "lower: {}", report.lower)?;
        match &report.upper {
            Some(u) => writeln!(out, "upper: {} ({})", u.value, serde_json::to_value(u.source).expect("json").as_str().unwrap_or(""))?,
            None => writeln!(out, "upper: -")?,
        }
        for n in &report.notes {
            writeln!(out, "note: {n}")?;
        }
    }
    Ok(EXIT_OK)
}

fn atlas(source: &str, opts: &SolveArgs, k: Option<usize>, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let text = read_source(source)?;
    let mut graphs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let g = parse_graph6(line).map_err(|e| Failure::invalid(format!("line {}: {e}", i + 1)))?;
        graphs.push((line.to_string(), g));
    }
    // graphs are the unit of parallelism, so each solve runs single-threaded
    let budget = SolveBudget {
        deterministic: true,
        ..budget_from(&opts.budget)?
    };
    let mode = opts.mode;
    let cache = match Cache::from_env() {
        Some(Ok(c)) => Some(c),
        Some(Err(e)) => {
            writeln!(err, "warning: cache unavailable: {e}")?;
            None
        }
        None => None,
    };
    let write_lock = Mutex::new(());
    let warnings = Mutex::new(Vec::new());

    let rows: Vec<Value> = graphs
        .par_iter()
        .map(|(g6, g)| {
            let row = |status: &str, value: Option<usize>, cert: Option<&Certificate>, cached: bool| {
                json!({
                    "graph6": g6,
                    "p": g.order(),
                    "q": g.size(),
                    "mode": mode,
                    "status": status,
                    "value": value,
                    "distinct": cert.map(|c| c.distinct),
                    "cached": cached,
                })
            };
            if let Some(k) = k {
                let r = solver::find_with_at_most_k(g, k, mode, budget);
                return match r.outcome {
                    Feasibility::Found(lab) => {
                        let c = Certificate::new(g, &lab, "solver");
                        row("found", None, Some(&c), false)
                    }
                    Feasibility::None => row("none", None, None, false),
                    Feasibility::Unknown => row("unknown", None, None, false),
                };
            }
            if let Some(c) = &cache {
                match c.lookup(g, mode) {
                    Lookup::Hit(e) => return row("exact", Some(e.value), Some(&e.certificate), true),
                    Lookup::Discarded(reason) => warnings.lock().unwrap().push(format!("{g6}: discarded cache entry: {reason}")),
                    Lookup::Miss => {}
                }
            }
            let r = solver::solve_min_distinct(g, mode, budget);
            let cert = r.certificate.as_ref().map(|lab| Certificate::new(g, lab, "solver"));
            if let (Some(c), Some(cert), SolveStatus::Exact) = (&cache, &cert, r.status) {
                let _guard = write_lock.lock().unwrap();
                if let Err(e) = c.store(g, mode, r.upper.unwrap_or(0), r.lower, cert.clone()) {
                    warnings.lock().unwrap().push(format!("{g6}: cache write failed: {e}"));
                }
            }
            row(status_name(r.status), r.exact(), cert.as_ref(), false)
        })
        .collect();

    for w in warnings.into_inner().unwrap() {
        writeln!(err, "warning: {w}")?;
    }
    for r in &rows {
        if opts.json {
            writeln!(out, "{}", serde_json::to_string(r).expect("json"))?;
        } else {
            let show = |v: &Value| if v.is_null() { "-".to_string() } else { v.to_string() };
            writeln!(
                out,
                "{}\t{}\t{}\t{}",
                r["graph6"].as_str().unwrap_or(""),
                r["status"].as_str().unwrap_or(""),
                show(&r["value"]),
                show(&r["distinct"]),
            )?;
        }
    }
    Ok(EXIT_OK)
}

/// Used by the binary: runs with the process arguments and standard streams.
pub fn main_with_env() -> i32 {
    let stdout = io::stdout();
    let stderr = io::stderr();
    let code = run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock());
    let _ = io::stdout().flush();
    code
}

/// Runs a command with captured output: `(exit code, stdout, stderr)`.
#[doc(hidden)]
pub fn run_to_strings(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("latlab").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8_lossy(&out).into_owned(),
        String::from_utf8_lossy(&err).into_owned(),
    )
}
