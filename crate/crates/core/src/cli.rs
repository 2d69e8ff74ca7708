//! Command-line front end. Every command prints one JSON report
//! `{command, inputs, results, timing_ms}` on stdout.
//!
//! Exit codes: 0 success, 1 a check failed, 2 bad input.

use std::collections::HashMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::{json, Value};

use crate::aut::analyze;
use crate::er::{
    cancellation_sweep, check_binomial_cancellation, count_labeled_copies_with,
    er_prob_isomorphic_with, estimate_prob_isomorphic_par, verify_proof_chain,
};
use crate::error::Error;
use crate::graph::{parse_edge_list, parse_graph6, EdgeSet, Graph, Pair};
use crate::identity::{
    sweep_random_graphs, sweep_verify, verify_ratio_identity_with, SubsetPolicy, SweepOptions,
    SweepSummary,
};
use crate::orbits::{edge_set_orbit, pair_orbit, vertex_orbit, vertex_orbits};
use crate::reconstruction::{
    augmented_deck, classic_deck, recover_aut_order, sufficiency_sweep, unique_extension_filter,
    Deck, DeckJson, OriginMode,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "edgesym", version, about = "Graph automorphisms, edge-set orbits and symmetry ratios")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct GraphArgs {
    /// graph6 string, or a file holding graph6 or an `n m` edge list
    #[arg(long, alias = "graph6")]
    graph: String,
    /// Comma-separated vertex names, in vertex order
    #[arg(long)]
    labels: Option<String>,
}

#[derive(Args, Debug, Clone)]
struct EdgesArg {
    /// Edge set as `u-v,u-v,...`
    #[arg(long)]
    edges: String,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SubsetsArg {
    Single,
    All,
    Random,
    #[value(name = "singles+random")]
    SinglesRandom,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OriginsArg {
    Strict,
    All,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Automorphism group, vertex orbits and canonical form
    Aut {
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Automorphism orbit of a vertex, a pair or a set of pairs
    Orbit {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, conflicts_with_all = ["pair", "edges"])]
        vertex: Option<String>,
        #[arg(long, conflicts_with = "edges")]
        pair: Option<String>,
        #[arg(long)]
        edges: Option<String>,
    },
    /// Check |Aut(G)|·|AO_{G-E'}(E')| = |Aut(G-E')|·|AO_G(E')|
    Verify {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        edges: EdgesArg,
    },
    /// Check the ratio identity over many graphs and edge subsets
    Sweep {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "single")]
        subsets: SubsetsArg,
        /// Random subsets per graph
        #[arg(long, default_value_t = 20)]
        samples: usize,
        /// Sample this many random graphs instead of all labeled graphs
        #[arg(long)]
        random_graphs: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Exact probability that G(n, m) is isomorphic to the graph
    ErProb {
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Monte Carlo estimate of the same probability
    ErSample {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Check the binomial cancellation behind the probability ratio
    ErCheckCancel {
        #[arg(long, default_value_t = 12)]
        nmax: usize,
        /// Check a single (n, m, k) instead of sweeping
        #[arg(long, requires_all = ["m", "k"])]
        n: Option<usize>,
        #[arg(long)]
        m: Option<u64>,
        #[arg(long)]
        k: Option<u64>,
    },
    /// Evaluate every step of the probability proof for one deletion
    ProofChain {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        edges: EdgesArg,
    },
    /// Augmented (or classic) deck with multiplicities
    Deck {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        classic: bool,
        /// Also write the deck JSON to this file
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recover |Aut(G)| from augmented cards
    RecoverAut {
        #[command(flatten)]
        graph: GraphArgs,
        /// Only the card of this vertex
        #[arg(long)]
        vertex: Option<String>,
    },
    /// Equal-ratio extension filter on an augmented deck
    ReconFilter {
        #[arg(long, alias = "graph6", required_unless_present_any = ["deck", "sweep"])]
        graph: Option<String>,
        #[arg(long)]
        labels: Option<String>,
        /// Deck JSON file as written by `deck --out`
        #[arg(long, conflicts_with = "graph")]
        deck: Option<PathBuf>,
        /// Forget which vertex produced each card
        #[arg(long)]
        blind: bool,
        #[arg(long, value_enum, default_value = "strict")]
        origins: OriginsArg,
        /// Run the filter on every connected graph with this many vertices
        #[arg(long, conflicts_with_all = ["graph", "deck"])]
        sweep: Option<usize>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
}

#[derive(Debug)]
enum CliError {
    Input(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Input(e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn input(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

struct Outcome {
    inputs: Value,
    results: Value,
    passed: bool,
}

impl Outcome {
    fn new(inputs: Value, results: impl Serialize, passed: bool) -> CliResult<Outcome> {
        let results = serde_json::to_value(results).map_err(|e| input(e.to_string()))?;
        Ok(Outcome {
            inputs,
            results,
            passed,
        })
    }
}

/// Vertex names from `--labels`; plain indices always work too.
struct Labels(Option<HashMap<String, usize>>);

impl Labels {
    fn parse(spec: Option<&str>, n: usize) -> CliResult<Labels> {
        let Some(spec) = spec else {
            return Ok(Labels(None));
        };
        let names: Vec<&str> = spec.split(',').map(str::trim).collect();
        if names.len() != n {
            return Err(input(format!("{} labels given for {n} vertices", names.len())));
        }
        let mut map = HashMap::new();
        for (i, name) in names.into_iter().enumerate() {
            if map.insert(name.to_string(), i).is_some() {
                return Err(input(format!("duplicate label {name}")));
            }
        }
        Ok(Labels(Some(map)))
    }

    fn vertex(&self, s: &str) -> CliResult<usize> {
        let s = s.trim();
        if let Some(v) = self.0.as_ref().and_then(|m| m.get(s)) {
            return Ok(*v);
        }
        s.parse().map_err(|_| input(format!("unknown vertex {s:?}")))
    }

    fn pair(&self, s: &str) -> CliResult<Pair> {
        let (a, b) = s
            .split_once('-')
            .ok_or_else(|| input(format!("pair {s:?} is not of the form u-v")))?;
        Ok(Pair::new(self.vertex(a)?, self.vertex(b)?)?)
    }

    fn edges(&self, s: &str) -> CliResult<EdgeSet> {
        let mut out = Vec::new();
        for part in s.split(',').filter(|p| !p.trim().is_empty()) {
            out.push(self.pair(part)?);
        }
        let set: EdgeSet = out.iter().copied().collect();
        if set.len() != out.len() {
            return Err(input("edge set lists a pair twice"));
        }
        Ok(set)
    }
}

/// graph6 text or an edge list, told apart by the first meaningful line.
fn parse_graph_text(text: &str) -> CliResult<Graph> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .ok_or_else(|| input("graph input is empty"))?;
    if first.split_whitespace().count() == 2 {
        Ok(parse_edge_list(text)?)
    } else {
        Ok(parse_graph6(first)?)
    }
}

fn load_graph(spec: &str) -> CliResult<Graph> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| input(format!("cannot read {spec}: {e}")))?;
        parse_graph_text(&text)
    } else {
        Ok(parse_graph6(spec)?)
    }
}

fn load(args: &GraphArgs) -> CliResult<(Graph, Labels)> {
    let g = load_graph(&args.graph)?;
    let labels = Labels::parse(args.labels.as_deref(), g.n())?;
    Ok((g, labels))
}

fn graph_inputs(g: &Graph) -> Value {
    json!({ "graph6": g.to_graph6(), "n": g.n(), "m": g.m() })
}

fn cmd_aut(args: GraphArgs) -> CliResult<Outcome> {
    let (g, _) = load(&args)?;
    let a = analyze(&g);
    let order = a.group.order()?;
    let results = json!({
        "order": order.to_string(),
        "generators": a.group.generators(),
        "vertex_orbits": vertex_orbits(&a.group),
        "certificate": a.certificate,
        "canonical_graph6": a.certificate.to_graph().to_graph6(),
        "canonical_labeling": a.labeling,
    });
    Outcome::new(graph_inputs(&g), results, true)
}

fn cmd_orbit(
    args: GraphArgs,
    vertex: Option<String>,
    pair: Option<String>,
    edges: Option<String>,
) -> CliResult<Outcome> {
    let (g, labels) = load(&args)?;
    let group = analyze(&g).group;
    let mut inputs = graph_inputs(&g);
    let results = match (vertex, pair, edges) {
        (Some(v), None, None) => {
            let v = labels.vertex(&v)?;
            inputs["vertex"] = json!(v);
            serde_json::to_value(vertex_orbit(&group, v)?)
        }
        (None, Some(p), None) => {
            let p = labels.pair(&p)?;
            inputs["pair"] = json!(p);
            serde_json::to_value(pair_orbit(&group, p)?)
        }
        (None, None, Some(e)) => {
            let set = labels.edges(&e)?;
            inputs["edges"] = json!(set);
            serde_json::to_value(edge_set_orbit(&group, &set)?)
        }
        _ => return Err(input("give exactly one of --vertex, --pair, --edges")),
    }
    .map_err(|e| input(e.to_string()))?;
    let mut results = results;
    results["size"] = json!(results["elements"].as_array().map_or(0, Vec::len));
    Outcome::new(inputs, results, true)
}

fn cmd_verify(args: GraphArgs, edges: EdgesArg) -> CliResult<Outcome> {
    let (g, labels) = load(&args)?;
    let removed = labels.edges(&edges.edges)?;
    let group = analyze(&g).group;
    let report = verify_ratio_identity_with(&g, &group, &removed)?;
    let mut inputs = graph_inputs(&g);
    inputs["edges"] = json!(removed);
    let holds = report.holds;
    Outcome::new(inputs, report, holds)
}

#[derive(Serialize)]
struct CsvRow<'a> {
    graph6: &'a str,
    edges: &'a str,
    aut_g: String,
    ao_g: String,
    aut_g_minus: String,
    ao_g_minus: String,
    ratio: String,
    holds: bool,
}

fn write_csv(path: &Path, summary: &SweepSummary) -> CliResult<()> {
    let mut w = csv::Writer::from_path(path)
        .map_err(|e| input(format!("cannot write {}: {e}", path.display())))?;
    for row in &summary.rows {
        let r = &row.report;
        w.serialize(CsvRow {
            graph6: &row.graph6,
            edges: &row.edges,
            aut_g: r.aut_g.to_string(),
            ao_g: r.ao_g.to_string(),
            aut_g_minus: r.aut_g_minus.to_string(),
            ao_g_minus: r.ao_g_minus.to_string(),
            ratio: r.ratio.to_string(),
            holds: r.holds,
        })
        .map_err(|e| input(e.to_string()))?;
    }
    w.flush().map_err(|e| input(e.to_string()))?;
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_sweep(
    n: usize,
    subsets: SubsetsArg,
    samples: usize,
    random_graphs: Option<usize>,
    seed: Option<u64>,
    threads: usize,
    csv: Option<PathBuf>,
) -> CliResult<Outcome> {
    let needs_seed = random_graphs.is_some()
        || matches!(subsets, SubsetsArg::Random | SubsetsArg::SinglesRandom);
    let seed = match (needs_seed, seed) {
        (true, None) => return Err(input("randomized sweeps need --seed")),
        (_, s) => s,
    };
    let options = SweepOptions {
        threads,
        collect_rows: csv.is_some(),
    };
    let summary = if let Some(graphs) = random_graphs {
        sweep_random_graphs(n, graphs, samples, seed.unwrap_or_default(), options)?
    } else {
        let policy = match subsets {
            SubsetsArg::Single => SubsetPolicy::AllSingleEdges,
            SubsetsArg::All => SubsetPolicy::AllSubsets,
            SubsetsArg::Random => SubsetPolicy::Random {
                samples,
                seed: seed.unwrap_or_default(),
            },
            SubsetsArg::SinglesRandom => SubsetPolicy::SinglesAndRandom {
                samples,
                seed: seed.unwrap_or_default(),
            },
        };
        sweep_verify(n, policy, options)?
    };
    if let Some(path) = &csv {
        write_csv(path, &summary)?;
    }
    let inputs = json!({
        "n": n,
        "subsets": format!("{subsets:?}").to_lowercase(),
        "samples": samples,
        "random_graphs": random_graphs,
        "seed": seed,
        "threads": threads,
    });
    let passed = summary.violations == 0;
    Outcome::new(inputs, summary, passed)
}

fn cmd_er_prob(args: GraphArgs) -> CliResult<Outcome> {
    let (g, _) = load(&args)?;
    let aut = analyze(&g).group.order()?;
    let prob = er_prob_isomorphic_with(&g, &aut);
    let results = json!({
        "aut_order": aut.to_string(),
        "labeled_copies": count_labeled_copies_with(&g, &aut).to_string(),
        "probability": {
            "numerator": prob.numer().to_string(),
            "denominator": prob.denom().to_string(),
        },
        "probability_f64": prob.to_f64(),
    });
    Outcome::new(graph_inputs(&g), results, true)
}

fn cmd_er_sample(args: GraphArgs, trials: u64, seed: u64, threads: usize) -> CliResult<Outcome> {
    let (g, _) = load(&args)?;
    let aut = analyze(&g).group.order()?;
    let exact = er_prob_isomorphic_with(&g, &aut).to_f64().unwrap_or(f64::NAN);
    let est = estimate_prob_isomorphic_par(&g, trials, seed, threads)?;
    let mut inputs = graph_inputs(&g);
    inputs["trials"] = json!(trials);
    inputs["seed"] = json!(seed);
    inputs["threads"] = json!(threads);
    let results = json!({
        "exact": exact,
        "sample": est,
        "abs_error": (est.estimate - exact).abs(),
    });
    Outcome::new(inputs, results, true)
}

fn cmd_er_check_cancel(
    nmax: usize,
    n: Option<usize>,
    m: Option<u64>,
    k: Option<u64>,
) -> CliResult<Outcome> {
    if let (Some(n), Some(m), Some(k)) = (n, m, k) {
        let check = check_binomial_cancellation(n, m, k)?;
        let holds = check.holds;
        return Outcome::new(json!({ "n": n, "m": m, "k": k }), check, holds);
    }
    let sweep = cancellation_sweep(nmax)?;
    let passed = sweep.failures.is_empty();
    Outcome::new(json!({ "nmax": nmax }), sweep, passed)
}

fn cmd_proof_chain(args: GraphArgs, edges: EdgesArg) -> CliResult<Outcome> {
    let (g, labels) = load(&args)?;
    let removed = labels.edges(&edges.edges)?;
    let report = verify_proof_chain(&g, &removed)?;
    let mut inputs = graph_inputs(&g);
    inputs["edges"] = json!(removed);
    let holds = report.holds;
    Outcome::new(inputs, report, holds)
}

fn deck_results(deck: &Deck) -> Value {
    let classes: Vec<Value> = deck
        .classes()
        .iter()
        .map(|c| {
            json!({
                "graph6": c.representative.to_graph6(),
                "multiplicity": c.multiplicity,
                "origins": c.origins,
                "edges": c.representative.m(),
            })
        })
        .collect();
    json!({ "kind": deck.kind(), "cards": deck.len(), "classes": classes, "deck": deck.to_json() })
}

fn cmd_deck(args: GraphArgs, classic: bool, out: Option<PathBuf>) -> CliResult<Outcome> {
    let (g, _) = load(&args)?;
    let deck = if classic {
        classic_deck(&g)?
    } else {
        augmented_deck(&g)?
    };
    if let Some(path) = &out {
        let text = serde_json::to_string_pretty(&deck.to_json()).map_err(|e| input(e.to_string()))?;
        std::fs::write(path, text + "\n")
            .map_err(|e| input(format!("cannot write {}: {e}", path.display())))?;
    }
    let mut inputs = graph_inputs(&g);
    inputs["classic"] = json!(classic);
    Outcome::new(inputs, deck_results(&deck), true)
}

fn cmd_recover_aut(args: GraphArgs, vertex: Option<String>) -> CliResult<Outcome> {
    let (g, labels) = load(&args)?;
    let expected = analyze(&g).group.order()?;
    let deck = augmented_deck(&g)?;
    let vertices = match &vertex {
        Some(v) => {
            let v = labels.vertex(v)?;
            if v >= g.n() {
                return Err(Error::VertexOutOfRange { vertex: v, n: g.n() }.into());
            }
            vec![v]
        }
        None => (0..g.n()).collect(),
    };
    let mut rows = Vec::new();
    let mut passed = true;
    for v in vertices {
        let card = &deck.cards()[v].graph;
        let deleted = g.incident_edges(v)?;
        let multiplicity = deck.multiplicity(card);
        let recovered = recover_aut_order(card, multiplicity, &deleted)?;
        passed &= recovered == expected;
        rows.push(json!({
            "vertex": v,
            "card_graph6": card.to_graph6(),
            "multiplicity": multiplicity,
            "deleted": deleted,
            "recovered": recovered.to_string(),
        }));
    }
    let mut inputs = graph_inputs(&g);
    inputs["vertex"] = json!(vertex);
    Outcome::new(
        inputs,
        json!({ "aut_order": expected.to_string(), "cards": rows }),
        passed,
    )
}

#[allow(clippy::too_many_arguments)]
fn cmd_recon_filter(
    graph: Option<String>,
    labels: Option<String>,
    deck_path: Option<PathBuf>,
    blind: bool,
    origins: OriginsArg,
    sweep: Option<usize>,
    threads: usize,
) -> CliResult<Outcome> {
    let mode = match origins {
        OriginsArg::Strict => OriginMode::StrictIsolated,
        OriginsArg::All => OriginMode::AllVertices,
    };
    if let Some(n) = sweep {
        let report = sufficiency_sweep(n, mode, threads)?;
        let passed = report.wrong == 0;
        return Outcome::new(json!({ "sweep": n, "origins": mode }), report, passed);
    }
    let (deck, original, mut inputs) = match (graph, deck_path) {
        (Some(spec), None) => {
            let g = load_graph(&spec)?;
            Labels::parse(labels.as_deref(), g.n())?;
            if !g.is_connected() {
                return Err(input("the filter needs a connected graph"));
            }
            let deck = augmented_deck(&g)?;
            let inputs = graph_inputs(&g);
            (deck, Some(g), inputs)
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| input(format!("cannot read {}: {e}", path.display())))?;
            let json: DeckJson = serde_json::from_str(&text)
                .map_err(|e| input(format!("bad deck JSON: {e}")))?;
            let inputs = json!({ "deck": path.display().to_string() });
            (Deck::from_json(&json)?, None, inputs)
        }
        _ => return Err(input("give --graph, --deck or --sweep")),
    };
    let deck = if blind { deck.blind() } else { deck };
    inputs["blind"] = json!(blind);
    inputs["origins"] = json!(mode);
    let report = unique_extension_filter(&deck, mode)?;
    let matches_original = match (&original, &report.reconstructed) {
        (Some(g), Some(r)) => Some(analyze(g).certificate == r.certificate),
        _ => None,
    };
    let mut results = serde_json::to_value(&report).map_err(|e| input(e.to_string()))?;
    results["matches_original"] = json!(matches_original);
    Outcome::new(inputs, results, matches_original != Some(false))
}

fn dispatch(cli: Cli) -> CliResult<(&'static str, Outcome)> {
    Ok(match cli.command {
        Command::Aut { graph } => ("aut", cmd_aut(graph)?),
        Command::Orbit {
            graph,
            vertex,
            pair,
            edges,
        } => ("orbit", cmd_orbit(graph, vertex, pair, edges)?),
        Command::Verify { graph, edges } => ("verify", cmd_verify(graph, edges)?),
        Command::Sweep {
            n,
            subsets,
            samples,
            random_graphs,
            seed,
            threads,
            csv,
        } => (
            "sweep",
            cmd_sweep(n, subsets, samples, random_graphs, seed, threads, csv)?,
        ),
        Command::ErProb { graph } => ("er-prob", cmd_er_prob(graph)?),
        Command::ErSample {
            graph,
            trials,
            seed,
            threads,
        } => ("er-sample", cmd_er_sample(graph, trials, seed, threads)?),
        Command::ErCheckCancel { nmax, n, m, k } => {
            ("er-check-cancel", cmd_er_check_cancel(nmax, n, m, k)?)
        }
        Command::ProofChain { graph, edges } => ("proof-chain", cmd_proof_chain(graph, edges)?),
        Command::Deck {
            graph,
            classic,
            out,
        } => ("deck", cmd_deck(graph, classic, out)?),
        Command::RecoverAut { graph, vertex } => ("recover-aut", cmd_recover_aut(graph, vertex)?),
        Command::ReconFilter {
            graph,
            labels,
            deck,
            blind,
            origins,
            sweep,
            threads,
        } => (
            "recon-filter",
            cmd_recon_filter(graph, labels, deck, blind, origins, sweep, threads)?,
        ),
    })
}

/// Runs one command, writing the report to `out` and diagnostics to `err`.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    let start = Instant::now();
    match dispatch(cli) {
        Ok((command, outcome)) => {
            let report = json!({
                "command": command,
                "inputs": outcome.inputs,
                "results": outcome.results,
                "timing_ms": start.elapsed().as_secs_f64() * 1e3,
            });
            let text = serde_json::to_string_pretty(&report).expect("report serializes");
            let _ = writeln!(out, "{text}");
            if outcome.passed {
                EXIT_OK
            } else {
                let _ = writeln!(err, "{command}: check failed");
                EXIT_CHECK_FAILED
            }
        }
        Err(CliError::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
    }
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with(args, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

/// Runs a command and returns the exit code and stdout.
pub fn run_capture<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let mut out = Vec::new();
    let code = run_with(args, &mut out, &mut std::io::sink());
    (code, String::from_utf8(out).expect("reports are UTF-8"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_json(args: &[&str]) -> (i32, Value) {
        let mut argv = vec!["edgesym"];
        argv.extend_from_slice(args);
        let (code, out) = run_capture(argv);
        let v = if out.is_empty() {
            Value::Null
        } else {
            serde_json::from_str(&out).unwrap()
        };
        (code, v)
    }

    #[test]
    fn aut_k4() {
        let (code, v) = run_json(&["aut", "--graph6", "C~"]);
        assert_eq!(code, 0);
        assert_eq!(v["command"], "aut");
        assert_eq!(v["results"]["order"], "24");
        assert!(!v["results"]["generators"].as_array().unwrap().is_empty());
    }

    #[test]
    fn verify_example_with_labels() {
        let (code, v) = run_json(&[
            "verify",
            "--graph",
            "F?oHg",
            "--labels",
            "a,b,c,d,e,f,g",
            "--edges",
            "a-e,e-f",
        ]);
        assert_eq!(code, 0);
        assert_eq!(v["results"]["holds"], true);
        assert_eq!(v["results"]["autG"], "8");
        assert_eq!(v["results"]["aoGminus"], 6);
    }

    #[test]
    fn input_errors_exit_two() {
        assert_eq!(run_json(&["aut", "--graph", "!!"]).0, EXIT_INPUT);
        assert_eq!(run_json(&["verify", "--graph", "C~", "--edges", "0-0"]).0, EXIT_INPUT);
        assert_eq!(run_json(&["verify", "--graph", "Ch", "--edges", "0-2"]).0, EXIT_INPUT);
        assert_eq!(run_json(&["sweep", "--n", "3", "--subsets", "random"]).0, EXIT_INPUT);
        assert_eq!(run_json(&["bogus"]).0, EXIT_INPUT);
    }

    #[test]
    fn sniffs_edge_list_files() {
        assert!(parse_graph_text("3 2\n0 1\n1 2\n").unwrap().has_edge(0, 1));
        assert_eq!(parse_graph_text("# k4\nC~\n").unwrap().m(), 6);
    }
}
