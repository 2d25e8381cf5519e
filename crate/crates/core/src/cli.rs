//! The `mixlayout` command line: construct, verify, solve, bounds, permcover, render.
//!
//! Exit codes: 0 ok, 1 semantic failure, 2 input or parse error, 3 inconclusive.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::bounds::{density_lower_bound_pages, density_max_edges, kn_bounds, knn_bounds};
use crate::constructions::{build_density_extremal, build_greedy_mixed, build_kn_mixed, build_separated_knn};
use crate::document::{meta, LayoutDocument};
use crate::error::Error;
use crate::graph::{Graph, LinearOrder};
use crate::gridpaths::grid_dump;
use crate::layout::{validate_layout, MixedLayout};
use crate::render::render_svg;
use crate::solvers::{
    fixed_order_two_pages_2sat, permutation_min_monotone_cover, Budget, ExactSearch, FixedOrderSearch, KindPolicy,
    Permutation, SolveStatus, SolverResult,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "mixlayout", version, about = "Mixed stack/queue linear layouts")]
pub struct Cli {
    /// Write the main result here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Seed for randomized choices (random vertex order in `construct --family greedy`).
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// No human-readable summary on stderr.
    #[arg(long, short, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// Complete graph K_n with 2 ceil(n/5) pages.
    Kn,
    /// Density-extremal graph with one stack and k-1 queues.
    Gnk,
    /// Separated K_{n,n} with ceil(2n/3) pages.
    KnnSep,
    /// Greedy layout of --graph under --order (or a seeded random order).
    Greedy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    FixedOrder,
    TwoPage,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoundsFamily {
    Kn,
    Knn,
    Density,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kinds {
    Mixed,
    Stacks,
    Queues,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a layout and write it as canonical JSON.
    Construct {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long)]
        order: Option<PathBuf>,
    },
    /// Check a layout document, optionally against a graph file.
    Verify {
        layout: PathBuf,
        #[arg(long)]
        graph: Option<PathBuf>,
    },
    /// Compute page numbers exactly.
    Solve {
        #[arg(value_enum)]
        mode: Mode,
        #[arg(long)]
        graph: PathBuf,
        /// Vertex order for fixed-order and two-page modes (identity if absent).
        #[arg(long)]
        order: Option<PathBuf>,
        #[arg(long)]
        max_pages: Option<usize>,
        #[arg(long)]
        node_limit: Option<u64>,
        /// Seconds.
        #[arg(long)]
        time_limit: Option<f64>,
        /// Largest vertex count the exact mode accepts.
        #[arg(long)]
        guard: Option<usize>,
        #[arg(long, value_enum, default_value = "mixed")]
        kinds: Kinds,
    },
    /// Evaluate closed-form bounds.
    Bounds {
        #[arg(long, value_enum)]
        family: BoundsFamily,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Partition a permutation into at most k monotone subsequences.
    Permcover {
        #[arg(long)]
        pi: String,
        #[arg(long)]
        k: usize,
    },
    /// Draw a layout document as SVG.
    Render {
        layout: PathBuf,
        /// Print the grid picture of a separated K_{n,n} layout instead.
        #[arg(long)]
        grid: bool,
    },
}

/// A finished command: the main payload and its exit code.
struct Outcome {
    body: String,
    code: i32,
    note: String,
}

fn input_code(e: &Error) -> i32 {
    match e {
        Error::InvalidConstruction { .. } | Error::InvalidLayout(_) | Error::Uncovered(_) => EXIT_FAILURE,
        _ => EXIT_INPUT,
    }
}

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn doc_value(layout: &MixedLayout) -> Value {
    serde_json::to_value(LayoutDocument::from_layout(layout, Default::default())).expect("documents serialize")
}

fn load_order(path: Option<&Path>, n: usize, seed: Option<u64>) -> Result<LinearOrder, Error> {
    let order = match (path, seed) {
        (Some(p), _) => LinearOrder::parse(&read(p)?)?,
        (None, Some(seed)) => {
            let mut v: Vec<usize> = (0..n).collect();
            v.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
            LinearOrder::new(v)?
        }
        (None, None) => LinearOrder::identity(n),
    };
    if order.len() != n {
        return Err(Error::InvalidInput(format!("order has {} vertices, graph has {n}", order.len())));
    }
    Ok(order)
}

fn need(v: Option<usize>, flag: &str) -> Result<usize, Error> {
    v.ok_or_else(|| Error::InvalidInput(format!("--{flag} is required")))
}

fn construct(
    family: Family,
    n: Option<usize>,
    k: Option<usize>,
    graph: Option<&Path>,
    order: Option<&Path>,
    seed: Option<u64>,
) -> Result<Outcome, Error> {
    let (g, layout, provenance) = match family {
        Family::Kn => {
            let n = need(n, "n")?;
            let l = build_kn_mixed(n)?;
            (Graph::complete(n), l, meta("kn", json!({ "n": n })))
        }
        Family::Gnk => {
            let (n, k) = (need(n, "n")?, need(k, "k")?);
            let (g, l) = build_density_extremal(n, k)?;
            (g, l, meta("gnk", json!({ "n": n, "k": k })))
        }
        Family::KnnSep => {
            let n = need(n, "n")?;
            (Graph::complete_bipartite(n), build_separated_knn(n)?, meta("knn-sep", json!({ "n": n })))
        }
        Family::Greedy => {
            let path = graph.ok_or_else(|| Error::InvalidInput("--graph is required".into()))?;
            let g = Graph::parse(&read(path)?)?;
            let o = load_order(order, g.n(), seed)?;
            let l = build_greedy_mixed(&g, &o)?;
            (g, l, meta("greedy", json!({ "graph": path.display().to_string(), "seed": seed })))
        }
    };
    let report = validate_layout(&g, &layout);
    if !report.is_ok() {
        return Err(Error::InvalidConstruction { family: format!("{family:?}"), detail: report.summary() });
    }
    let note = format!(
        "{} stacks + {} queues, {} edges, valid",
        layout.stacks(),
        layout.queues(),
        layout.edge_count()
    );
    Ok(Outcome { body: LayoutDocument::from_layout(&layout, provenance).to_json(), code: EXIT_OK, note })
}

fn verify(layout: &Path, graph: Option<&Path>) -> Result<Outcome, Error> {
    let doc = LayoutDocument::from_json(&read(layout)?)?;
    let l = doc.to_layout()?;
    let g = match graph {
        Some(p) => Graph::parse(&read(p)?)?,
        None => doc.graph()?,
    };
    let report = validate_layout(&g, &l);
    let code = if report.is_ok() { EXIT_OK } else { EXIT_FAILURE };
    let note = if report.is_ok() { "valid".to_string() } else { format!("invalid: {}", report.summary()) };
    let body = json!({
        "ok": report.ok,
        "pages": l.page_count(),
        "stacks": l.stacks(),
        "queues": l.queues(),
        "edges": l.edge_count(),
        "violations": report.violations,
    });
    Ok(Outcome { body: pretty(&body), code, note })
}

fn result_json(mode: &str, r: &SolverResult) -> (Value, i32) {
    let code = match r.status {
        SolveStatus::Solved => EXIT_OK,
        SolveStatus::ExceedsLimit => EXIT_FAILURE,
        SolveStatus::Inconclusive => EXIT_INCONCLUSIVE,
    };
    let body = json!({
        "mode": mode,
        "status": r.status,
        "pages": r.pages,
        "stacks": r.witness.as_ref().map(MixedLayout::stacks),
        "queues": r.witness.as_ref().map(MixedLayout::queues),
        "stats": r.stats,
        "witness": r.witness.as_ref().map(doc_value),
    });
    (body, code)
}

#[allow(clippy::too_many_arguments)]
fn solve(
    mode: Mode,
    graph: &Path,
    order: Option<&Path>,
    max_pages: Option<usize>,
    node_limit: Option<u64>,
    time_limit: Option<f64>,
    guard: Option<usize>,
    kinds: Kinds,
) -> Result<Outcome, Error> {
    let g = Graph::parse(&read(graph)?)?;
    let limit = max_pages.unwrap_or(g.m().max(1));
    if limit == 0 {
        return Err(Error::InvalidInput("--max-pages must be at least 1".into()));
    }
    let time_limit = match time_limit {
        Some(t) if !(t.is_finite() && t >= 0.0) => return Err(Error::InvalidInput("--time-limit must be >= 0".into())),
        t => t.map(Duration::from_secs_f64),
    };
    let budget = Budget { node_limit, time_limit };
    let policy = match kinds {
        Kinds::Mixed => KindPolicy::Mixed,
        Kinds::Stacks => KindPolicy::StacksOnly,
        Kinds::Queues => KindPolicy::QueuesOnly,
    };
    let lower = density_lower_bound_pages(g.n(), g.m());
    let (mut body, code) = match mode {
        Mode::Exact => {
            let mut search = ExactSearch::new(&g).limit(limit).policy(policy).budget(budget);
            if let Some(guard) = guard {
                search = search.guard(guard);
            }
            result_json("exact", &search.run()?)
        }
        Mode::FixedOrder => {
            let o = load_order(order, g.n(), None)?;
            let r = FixedOrderSearch::new(&g, &o).limit(limit).policy(policy).budget(budget).run();
            result_json("fixed-order", &r)
        }
        Mode::TwoPage => {
            let o = load_order(order, g.n(), None)?;
            match fixed_order_two_pages_2sat(&g, &o) {
                Some(sol) => (
                    json!({ "mode": "two-page", "satisfiable": true, "kinds": sol.kinds, "witness": doc_value(&sol.layout) }),
                    EXIT_OK,
                ),
                None => (json!({ "mode": "two-page", "satisfiable": false }), EXIT_FAILURE),
            }
        }
    };
    body["density_lower_bound"] = json!(lower);
    let note = match (body.get("pages"), body.get("satisfiable")) {
        (Some(p), _) if !p.is_null() => format!("{} pages ({}), density lower bound {lower}", p, body["status"]),
        (_, Some(s)) => format!("two pages possible: {s}"),
        _ => format!("status {}", body["status"]),
    };
    Ok(Outcome { body: pretty(&body), code, note })
}

fn bounds(family: BoundsFamily, n: usize, m: Option<usize>, k: Option<usize>) -> Result<Outcome, Error> {
    let body = match family {
        BoundsFamily::Kn => serde_json::to_value(kn_bounds(n))?,
        BoundsFamily::Knn => serde_json::to_value(knn_bounds(n))?,
        BoundsFamily::Density => {
            if m.is_none() && k.is_none() {
                return Err(Error::InvalidInput("density bounds need --m or --k".into()));
            }
            let mut v = json!({ "n": n });
            if let Some(k) = k {
                v["k"] = json!(k);
                v["max_edges"] = json!(density_max_edges(n, k));
            }
            if let Some(m) = m {
                v["m"] = json!(m);
                v["lower_bound_pages"] = json!(density_lower_bound_pages(n, m));
            }
            v
        }
    };
    Ok(Outcome { note: body.to_string(), body: pretty(&body), code: EXIT_OK })
}

fn permcover(pi: &str, k: usize) -> Result<Outcome, Error> {
    if k == 0 {
        return Err(Error::InvalidInput("--k must be at least 1".into()));
    }
    let pi: Permutation = pi.parse()?;
    let cover = permutation_min_monotone_cover(&pi, k);
    let code = if cover.is_some() { EXIT_OK } else { EXIT_FAILURE };
    let note = format!("{pi} into {k} monotone runs: {}", if cover.is_some() { "yes" } else { "no" });
    let body = json!({ "pi": pi.values(), "k": k, "coverable": cover.is_some(), "runs": cover });
    Ok(Outcome { body: pretty(&body), code, note })
}

fn render(layout: &Path, grid: bool) -> Result<Outcome, Error> {
    let doc = LayoutDocument::from_json(&read(layout)?)?;
    let l = doc.to_layout()?;
    let report = validate_layout(&doc.graph()?, &l);
    if !report.is_ok() {
        return Err(Error::InvalidLayout(format!("verify the document first: {}", report.summary())));
    }
    let body = if grid {
        if doc.n % 2 != 0 {
            return Err(Error::InvalidLayout("grid view needs a separated K_{n,n} layout".into()));
        }
        grid_dump(&l, doc.n / 2)?
    } else {
        render_svg(&l)
    };
    Ok(Outcome { body, code: EXIT_OK, note: format!("{} pages drawn", l.page_count()) })
}

fn dispatch(cli: &Cli) -> Result<Outcome, Error> {
    match &cli.command {
        Command::Construct { family, n, k, graph, order } => {
            construct(*family, *n, *k, graph.as_deref(), order.as_deref(), cli.seed)
        }
        Command::Verify { layout, graph } => verify(layout, graph.as_deref()),
        Command::Solve { mode, graph, order, max_pages, node_limit, time_limit, guard, kinds } => {
            solve(*mode, graph, order.as_deref(), *max_pages, *node_limit, *time_limit, *guard, *kinds)
        }
        Command::Bounds { family, n, m, k } => bounds(*family, *n, *m, *k),
        Command::Permcover { pi, k } => permcover(pi, *k),
        Command::Render { layout, grid } => render(layout, *grid),
    }
}

/// Runs one invocation; returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(out) => {
            let written = match &cli.output {
                Some(path) => std::fs::write(path, &out.body),
                None => stdout.write_all(out.body.as_bytes()),
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "error: {e}");
                return EXIT_INPUT;
            }
            if !cli.quiet {
                let _ = writeln!(stderr, "{}", out.note);
            }
            out.code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            input_code(&e)
        }
    }
}
