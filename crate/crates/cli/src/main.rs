//! `bugraph`: exact betweenness analysis, betweenness-uniformity
//! filtering, theorem verification over graph corpora, and the named
//! graph constructions, over graph6 input.
//!
//! Exit codes: 0 success/PASS, 1 counterexample found, 2 usage or
//! input error. JSON reports serialize every rational as a pair of
//! decimal strings — never as floating point.

use std::io::{BufRead, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use bugraph_core::betweenness::{is_betweenness_uniform, BetweennessReport};
use bugraph_core::connectivity::{component_subgraphs, minimal_two_cut, TwoCutAnalysis};
use bugraph_core::constructions::{
    complete, complete_bipartite, cycle, path, petersen, tightness_construction, TightnessParams,
};
use bugraph_core::discrepancy::{alpha_profile, disc_breakdown};
use bugraph_core::enumeration::{generate_connected_with_cap, CorpusFilter, DEFAULT_GENERATION_CAP};
use bugraph_core::graph6::{encode_graph6, Graph6Reader};
use bugraph_core::verifier::{ClaimId, CorpusSource, Verdict, VerificationReport};
use bugraph_core::{Graph, Rational};

const EXIT_OK: i32 = 0;
const EXIT_COUNTEREXAMPLE: i32 = 1;
const EXIT_ERROR: i32 = 2;

#[derive(Parser)]
#[command(name = "bugraph", version, about = "Exact betweenness analysis on small graphs")]
struct Cli {
    /// Cap worker parallelism (default: available cores). Output is
    /// deterministic regardless.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Vertex, edge and adjusted betweenness of each input graph.
    Bc(BcArgs),
    /// Betweenness-uniformity verdict per input graph.
    Uniform(UniformArgs),
    /// Replay registered claims against a corpus.
    Verify(VerifyArgs),
    /// Emit a named graph family as graph6.
    Construct(ConstructArgs),
    /// Cut/component discrepancy analysis of one graph.
    Disc(DiscArgs),
    /// Generate connected graphs of an exact order, optionally filtered.
    Enumerate(EnumerateArgs),
}

#[derive(Args)]
struct BcArgs {
    /// graph6 line, file of graph6 lines, or omitted for stdin.
    input: Option<String>,
    /// Also check B(x) = (B_a(x) − n + 1)/2 and report PASS/FAIL.
    #[arg(long)]
    check_eq1: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct UniformArgs {
    input: Option<String>,
    /// Echo only the uniform graphs, as raw graph6 lines.
    #[arg(long)]
    filter: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Claim id (repeatable); defaults to every registered claim.
    #[arg(long = "claim")]
    claims: Vec<String>,
    /// Generate the corpus in-process up to this order.
    #[arg(short = 'n', long, default_value_t = 8)]
    max_n: usize,
    /// Read the corpus from a graph6 file instead of generating it.
    #[arg(long)]
    corpus: Option<PathBuf>,
    /// Self-test mode: tighten each checked inequality by one so the
    /// harness must find counterexamples.
    #[arg(long)]
    plant: bool,
    /// List registered claims and exit.
    #[arg(long)]
    list: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ConstructArgs {
    #[command(subcommand)]
    family: Family,
}

#[derive(Subcommand)]
enum Family {
    /// Cycle C_n.
    Cycle {
        n: usize,
        #[arg(long)]
        verify: bool,
    },
    /// Complete graph K_n.
    Complete {
        n: usize,
        #[arg(long)]
        verify: bool,
    },
    /// Path P_n.
    Path {
        n: usize,
        #[arg(long)]
        verify: bool,
    },
    /// Complete bipartite K_{a,b}.
    Bipartite {
        a: usize,
        b: usize,
        #[arg(long)]
        verify: bool,
    },
    /// The Petersen graph.
    Petersen {
        #[arg(long)]
        verify: bool,
    },
    /// Extremal graph meeting the connectivity/degree diameter bound.
    Tight {
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        verify: bool,
    },
}

#[derive(Args)]
struct DiscArgs {
    input: Option<String>,
    /// First cut vertex.
    #[arg(short)]
    p: Option<usize>,
    /// Second cut vertex.
    #[arg(short)]
    q: Option<usize>,
    /// Use the minimal 2-cut instead of an explicit pair.
    #[arg(long)]
    minimal: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Exact number of vertices.
    #[arg(short = 'n', long)]
    n: usize,
    #[arg(long)]
    two_connected: bool,
    /// Keep only betweenness-uniform graphs.
    #[arg(long)]
    uniform: bool,
    #[arg(long)]
    min_degree: Option<usize>,
    /// Print only the class count.
    #[arg(long)]
    count_only: bool,
    #[arg(long)]
    json: bool,
}

fn main() {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        // ignore failure if a pool already exists (e.g. under tests)
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    let code = match run(cli.command) {
        Ok(code) => code,
        // a closed pipe downstream (e.g. `| head`) is not an error
        Err(e) if is_broken_pipe(&e) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_ERROR
        }
    };
    std::process::exit(code);
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.downcast_ref::<std::io::Error>()
        .is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe)
}

fn run(command: Command) -> anyhow::Result<i32> {
    match command {
        Command::Bc(args) => cmd_bc(args),
        Command::Uniform(args) => cmd_uniform(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Construct(args) => cmd_construct(args),
        Command::Disc(args) => cmd_disc(args),
        Command::Enumerate(args) => cmd_enumerate(args),
    }
}

/// Resolve a graph input argument: an existing file path is read as a
/// graph6 file, any other value is taken as a literal graph6 line, and
/// no argument means stdin.
fn open_input(arg: Option<String>) -> anyhow::Result<Box<dyn BufRead>> {
    match arg {
        None => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            Ok(Box::new(std::io::Cursor::new(buf)))
        }
        Some(s) if std::path::Path::new(&s).is_file() => {
            let file = std::fs::File::open(&s)?;
            Ok(Box::new(std::io::BufReader::new(file)))
        }
        Some(s) => Ok(Box::new(std::io::Cursor::new(s))),
    }
}

fn rational_json(r: &Rational) -> Value {
    json!({ "num": r.numer().to_string(), "den": r.denom().to_string() })
}

fn rational_text(r: &Rational) -> String {
    if *r.denom() == 1.into() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn document(command: &str) -> serde_json::Map<String, Value> {
    let mut doc = serde_json::Map::new();
    doc.insert("tool".into(), json!("bugraph"));
    doc.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
    doc.insert("command".into(), json!(command));
    doc
}

fn cmd_bc(args: BcArgs) -> anyhow::Result<i32> {
    let reader = Graph6Reader::new(open_input(args.input)?);
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let mut eq1_failed = false;
    for item in reader {
        let (line_no, g) = item?;
        let report = BetweennessReport::compute(&g)?;
        let eq1 = args.check_eq1.then(|| report.eq1_holds());
        eq1_failed |= eq1 == Some(false);
        if args.json {
            let mut doc = document("bc");
            doc.insert("graph6".into(), json!(encode_graph6(&g)));
            doc.insert("n".into(), json!(g.n()));
            doc.insert(
                "vertex_bc".into(),
                Value::Array(report.vertex_bc.iter().map(rational_json).collect()),
            );
            doc.insert(
                "edge_bc".into(),
                Value::Array(
                    report
                        .edge_bc
                        .iter()
                        .map(|(&(u, v), val)| {
                            json!({ "u": u, "v": v, "value": rational_json(val) })
                        })
                        .collect(),
                ),
            );
            doc.insert(
                "adjusted".into(),
                Value::Array(report.adjusted.iter().map(rational_json).collect()),
            );
            doc.insert("uniform".into(), json!(report.uniform));
            doc.insert("spread".into(), rational_json(&report.spread));
            if let Some(ok) = eq1 {
                doc.insert("eq1".into(), json!(if ok { "PASS" } else { "FAIL" }));
            }
            writeln!(out, "{}", Value::Object(doc))?;
        } else {
            writeln!(out, "graph {line_no}: {} (n = {})", encode_graph6(&g), g.n())?;
            let vals: Vec<String> = report.vertex_bc.iter().map(rational_text).collect();
            writeln!(out, "  vertex betweenness: [{}]", vals.join(", "))?;
            let edges: Vec<String> = report
                .edge_bc
                .iter()
                .map(|(&(u, v), val)| format!("({u},{v})={}", rational_text(val)))
                .collect();
            writeln!(out, "  edge betweenness:   {}", edges.join(" "))?;
            let adj: Vec<String> = report.adjusted.iter().map(rational_text).collect();
            writeln!(out, "  adjusted:           [{}]", adj.join(", "))?;
            writeln!(
                out,
                "  uniform: {} (spread {})",
                report.uniform,
                rational_text(&report.spread)
            )?;
            if let Some(ok) = eq1 {
                writeln!(out, "  eq1: {}", if ok { "PASS" } else { "FAIL" })?;
            }
        }
    }
    Ok(if eq1_failed { EXIT_COUNTEREXAMPLE } else { EXIT_OK })
}

fn cmd_uniform(args: UniformArgs) -> anyhow::Result<i32> {
    let reader = Graph6Reader::new(open_input(args.input)?);
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    for item in reader {
        let (_, g) = item?;
        let value = is_betweenness_uniform(&g)?;
        if args.filter {
            if value.is_some() {
                writeln!(out, "{}", encode_graph6(&g))?;
            }
            continue;
        }
        if args.json {
            let mut doc = document("uniform");
            doc.insert("graph6".into(), json!(encode_graph6(&g)));
            doc.insert("uniform".into(), json!(value.is_some()));
            doc.insert("value".into(), value.as_ref().map(rational_json).unwrap_or(Value::Null));
            writeln!(out, "{}", Value::Object(doc))?;
        } else {
            match value {
                Some(v) => {
                    writeln!(out, "{}\tuniform value={}", encode_graph6(&g), rational_text(&v))?
                }
                None => writeln!(out, "{}\tnot-uniform", encode_graph6(&g))?,
            }
        }
    }
    Ok(EXIT_OK)
}

fn generation_cap() -> usize {
    std::env::var("BUGRAPH_MAX_N")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_GENERATION_CAP)
}

fn report_json(r: &VerificationReport) -> Value {
    let mut doc = serde_json::Map::new();
    doc.insert("claim".into(), json!(r.claim));
    doc.insert("corpus".into(), json!(r.corpus));
    doc.insert("graphs_checked".into(), json!(r.graphs_checked));
    doc.insert("hypothesis_count".into(), json!(r.hypothesis_count));
    doc.insert("failures".into(), json!(r.failure_count));
    doc.insert("verdict".into(), json!(r.verdict().to_string()));
    doc.insert(
        "counterexamples".into(),
        Value::Array(
            r.counterexamples
                .iter()
                .map(|c| json!({ "graph6": c.graph6, "detail": c.detail }))
                .collect(),
        ),
    );
    // excluded from byte-identity comparisons
    doc.insert("elapsed_ms".into(), json!(r.elapsed.as_millis() as u64));
    Value::Object(doc)
}

fn cmd_verify(args: VerifyArgs) -> anyhow::Result<i32> {
    if args.list {
        for id in ClaimId::ALL {
            println!("{:12} {}", id.as_str(), id.description());
        }
        return Ok(EXIT_OK);
    }
    let claims: Vec<ClaimId> = if args.claims.is_empty() {
        ClaimId::ALL.to_vec()
    } else {
        match args.claims.iter().map(|s| ClaimId::parse(s)).collect() {
            Ok(ids) => ids,
            Err(e) => {
                eprintln!("error: {e}");
                eprintln!("registered claims:");
                for id in ClaimId::ALL {
                    eprintln!("  {:12} {}", id.as_str(), id.description());
                }
                return Ok(EXIT_ERROR);
            }
        }
    };
    let corpus = match args.corpus {
        Some(path) => CorpusSource::File(path),
        None => CorpusSource::Generated { max_n: args.max_n, cap: generation_cap() },
    };

    let mut reports = Vec::new();
    for id in &claims {
        reports.push(corpus.run(*id, args.plant)?);
    }
    let failed = reports.iter().any(|r| r.verdict() == Verdict::Fail);

    if args.json {
        let mut doc = document("verify");
        doc.insert("corpus".into(), json!(corpus.description()));
        doc.insert("planted".into(), json!(args.plant));
        doc.insert("claims".into(), Value::Array(reports.iter().map(report_json).collect()));
        doc.insert("verdict".into(), json!(if failed { "FAIL" } else { "PASS" }));
        println!("{}", Value::Object(doc));
    } else {
        for r in &reports {
            println!(
                "{:12} {}  ({} graphs, {} in hypothesis, {} failures, {:?})",
                r.claim,
                r.verdict(),
                r.graphs_checked,
                r.hypothesis_count,
                r.failure_count,
                r.elapsed
            );
            for c in &r.counterexamples {
                println!("    counterexample {}: {}", c.graph6, c.detail);
            }
            if r.failure_count as usize > r.counterexamples.len() {
                println!(
                    "    ... and {} more",
                    r.failure_count as usize - r.counterexamples.len()
                );
            }
        }
    }
    Ok(if failed { EXIT_COUNTEREXAMPLE } else { EXIT_OK })
}

fn cmd_construct(args: ConstructArgs) -> anyhow::Result<i32> {
    let (g, verify, summary): (Graph, bool, Option<String>) = match args.family {
        Family::Cycle { n, verify } => (cycle(n)?, verify, None),
        Family::Complete { n, verify } => (complete(n)?, verify, None),
        Family::Path { n, verify } => (path(n)?, verify, None),
        Family::Bipartite { a, b, verify } => (complete_bipartite(a, b)?, verify, None),
        Family::Petersen { verify } => (petersen(), verify, None),
        Family::Tight { ell, d, n, verify } => {
            let params = TightnessParams { ell, d, n };
            let g = tightness_construction(params)?;
            let k = params.k();
            let line =
                format!("k={} Δ={} κ≥{} d={}", k, g.max_degree(), ell, (k - 3) / ell + 4);
            (g, verify, Some(line))
        }
    };
    println!("{}", encode_graph6(&g));
    if verify {
        // constructions check their own postconditions on the way out,
        // so reaching this point means they held
        match summary {
            Some(line) => println!("PASS ({line})"),
            None => println!("PASS"),
        }
    }
    Ok(EXIT_OK)
}

fn first_graph(input: Option<String>) -> anyhow::Result<Graph> {
    let mut reader = Graph6Reader::new(open_input(input)?);
    match reader.next() {
        Some(item) => Ok(item?.1),
        None => anyhow::bail!("no graph in input"),
    }
}

/// Analysis of an explicitly chosen 2-cut: the smallest component of
/// `G − {p,q}` plays K, ties broken toward the lexicographically
/// smallest vertex set.
fn analysis_for_pair(g: &Graph, p: usize, q: usize) -> anyhow::Result<TwoCutAnalysis> {
    let n = g.n();
    anyhow::ensure!(p < n && q < n && p != q, "invalid cut pair ({p},{q})");
    let keep: Vec<usize> = (0..n).filter(|&v| v != p && v != q).collect();
    anyhow::ensure!(!keep.is_empty(), "nothing remains after removing the cut");
    let ind = g.induced_subgraph(&keep)?;
    let comps: Vec<Vec<usize>> = ind
        .graph
        .components()
        .into_iter()
        .map(|c| c.into_iter().map(|v| ind.new_to_old[v]).collect())
        .collect();
    anyhow::ensure!(comps.len() >= 2, "{{{p},{q}}} is not a 2-cut");
    let k_size = comps.iter().map(Vec::len).min().expect("nonempty");
    let k_set = comps
        .iter()
        .filter(|c| c.len() == k_size)
        .min()
        .cloned()
        .expect("a smallest component exists");
    let ls: Vec<Vec<usize>> = comps.into_iter().filter(|c| *c != k_set).collect();
    Ok(TwoCutAnalysis {
        p: p.min(q),
        q: p.max(q),
        case_tag: if k_size == 1 { bugraph_core::CutCase::A } else { bugraph_core::CutCase::B },
        k: k_size,
        ell: n - k_size - 2,
        k_set,
        ls,
    })
}

fn cmd_disc(args: DiscArgs) -> anyhow::Result<i32> {
    let g = first_graph(args.input)?;
    let analysis = if args.minimal {
        minimal_two_cut(&g)?
    } else {
        match (args.p, args.q) {
            (Some(p), Some(q)) => analysis_for_pair(&g, p, q)?,
            _ => anyhow::bail!("provide -p and -q, or --minimal"),
        }
    };
    let breakdown = disc_breakdown(&g, &analysis)?;
    let alpha = alpha_profile(&g, analysis.p, analysis.q)?;
    let subs = component_subgraphs(&g, &analysis)?;
    let per_component: Vec<(Vec<usize>, bugraph_core::DiscrepancyBreakdown)> = subs
        .iter()
        .map(|cs| Ok((cs.new_to_old.clone(), disc_breakdown(&cs.graph, &cs.analysis())?)))
        .collect::<anyhow::Result<_>>()?;

    if args.json {
        let mut doc = document("disc");
        doc.insert("graph6".into(), json!(encode_graph6(&g)));
        doc.insert("p".into(), json!(analysis.p));
        doc.insert("q".into(), json!(analysis.q));
        doc.insert("case".into(), json!(analysis.case_tag.to_string()));
        doc.insert("k".into(), json!(analysis.k));
        doc.insert("ell".into(), json!(analysis.ell));
        doc.insert("k_set".into(), json!(analysis.k_set));
        doc.insert("l_components".into(), json!(analysis.ls));
        doc.insert("disc".into(), rational_json(&breakdown.total));
        doc.insert(
            "parts".into(),
            json!({
                "kplus": rational_json(&breakdown.part_kplus),
                "l": rational_json(&breakdown.part_l),
                "cross": rational_json(&breakdown.part_cross),
            }),
        );
        doc.insert(
            "alpha".into(),
            Value::Array(
                (0..g.n())
                    .map(|w| alpha.get(w).map(|a| json!(a)).unwrap_or(Value::Null))
                    .collect(),
            ),
        );
        doc.insert(
            "components".into(),
            Value::Array(
                per_component
                    .iter()
                    .map(|(vs, b)| {
                        json!({
                            "vertices": vs,
                            "disc": rational_json(&b.total),
                            "kplus": rational_json(&b.part_kplus),
                            "l": rational_json(&b.part_l),
                            "cross": rational_json(&b.part_cross),
                        })
                    })
                    .collect(),
            ),
        );
        println!("{}", Value::Object(doc));
    } else {
        println!("graph: {} (n = {})", encode_graph6(&g), g.n());
        println!(
            "cut ({}, {}), case {}, K = {:?} (k = {}), ell = {}",
            analysis.p, analysis.q, analysis.case_tag, analysis.k_set, analysis.k, analysis.ell
        );
        println!(
            "disc = {} = {} (K+ pairs) + {} (L pairs) + {} (cross)",
            rational_text(&breakdown.total),
            rational_text(&breakdown.part_kplus),
            rational_text(&breakdown.part_l),
            rational_text(&breakdown.part_cross),
        );
        let alphas: Vec<String> = (0..g.n())
            .filter_map(|w| alpha.get(w).map(|a| format!("a({w})={a}")))
            .collect();
        println!("alpha: {}", alphas.join(" "));
        if per_component.len() > 1 {
            for (vs, b) in &per_component {
                println!("  component {:?}: disc = {}", vs, rational_text(&b.total));
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_enumerate(args: EnumerateArgs) -> anyhow::Result<i32> {
    let filter = CorpusFilter {
        connected: true,
        two_connected: args.two_connected,
        betweenness_uniform: args.uniform,
        min_degree: args.min_degree,
        custom: None,
    };
    let graphs = generate_connected_with_cap(args.n, generation_cap())?;
    let witnesses: Vec<String> =
        graphs.iter().filter(|g| filter.matches(g)).map(encode_graph6).collect();
    if args.json {
        let mut doc = document("enumerate");
        doc.insert("n".into(), json!(args.n));
        doc.insert("count".into(), json!(witnesses.len()));
        if !args.count_only {
            doc.insert("witnesses".into(), json!(witnesses));
        }
        println!("{}", Value::Object(doc));
    } else if args.count_only {
        println!("{}", witnesses.len());
    } else {
        let stdout = std::io::stdout();
        let mut out = stdout.lock();
        for w in &witnesses {
            writeln!(out, "{w}")?;
        }
    }
    Ok(EXIT_OK)
}
