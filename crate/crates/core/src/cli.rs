//! The `wellcover` command line.
//!
//! Results go to standard output as JSON (one document, or one per line for
//! streams), diagnostics to standard error. Exit status: 0 on success, 1 on a
//! domain or input error or an unexpected verification disagreement, 2 on a
//! usage error. Error messages start with `usage error:`, `input error:` or
//! `domain error:`.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::algorithms::{relating_edge, wcw_leaf_characterization, wcw_leaf_characterization_unchecked, BipC6Free, LeafProfile};
use crate::biclique::InducedCompleteBipartite;
use crate::error::Error;
use crate::family::{validate_family, FamilySpec};
use crate::graph::{Graph, Vertex};
use crate::io::{read_graph, GraphJson};
use crate::lab::{
    enumerate_small_graphs, enumerate_unlabeled, grow_bip_c6free, random_dsat_with, random_monotone_with,
    random_tree_with, GeneratorConfig, LabRng, RandomGraphs, DEFAULT_MAX_REJECTIONS,
};
use crate::oracles::{enumerate_mis, generating_oracle, is_well_covered_oracle, sat_bruteforce, wcw_oracle, OracleLimits};
use crate::sat::reductions::{dmsat_to_gs, dsat_to_dmsat, extend_to_kpq, monotone_to_gs, ArtifactJson, ReductionArtifact};
use crate::sat::{cnf_to_json, parse_cnf, validate, CnfInstance, CnfKind};
use crate::verify::{default_edge_probability, reproduce_paper_examples, run_suite, Corpus, Suite, SuiteConfig};
use crate::weightspace::{nullspace, BasisJson, ConstraintSystem, SystemJson};

#[derive(Debug, Parser)]
#[command(name = "wellcover", version, about = "Generating subgraphs and well-covered weights on restricted graph families")]
struct Cli {
    /// Indent JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GraphArg {
    /// Graph file: canonical JSON or an edge list.
    #[arg(long)]
    graph: PathBuf,
}

#[derive(Debug, Args)]
struct BicliqueArgs {
    #[command(flatten)]
    graph: GraphArg,
    /// B_X as a comma-separated vertex list.
    #[arg(long, value_delimiter = ',', required = true)]
    bx: Vec<Vertex>,
    /// B_Y as a comma-separated vertex list.
    #[arg(long, value_delimiter = ',', required = true)]
    by: Vec<Vertex>,
}

#[derive(Debug, Args)]
struct CnfArg {
    /// CNF file: JSON or DIMACS.
    #[arg(long, visible_alias = "in")]
    cnf: PathBuf,
    /// Kind assumed for DIMACS input (generic, dsat, dmsat, monotone).
    #[arg(long)]
    kind: Option<CnfKind>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Is G[B_X ∪ B_Y] generating? (bipartite C6-free G, |B_X| <= 2)
    Generating {
        #[command(flatten)]
        b: BicliqueArgs,
        /// Skip the bipartite C6-free check.
        #[arg(long)]
        unchecked: bool,
    },
    /// Largest T ⊆ N(x) with G[{x} ∪ T] generating.
    Maxgen1 {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        x: Vertex,
        #[arg(long)]
        unchecked: bool,
    },
    /// Largest T ⊆ N(x1) ∩ N(x2), |T| >= 2, with G[{x1, x2} ∪ T] generating.
    Maxgen2 {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, value_delimiter = ',', num_args = 1.., required = true)]
        x: Vec<Vertex>,
        #[arg(long)]
        unchecked: bool,
    },
    /// Linear system whose solutions are WCW(G), for bipartite C6-free G.
    Wcw {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        unchecked: bool,
    },
    /// Well-coveredness of a bipartite C6-free graph.
    WellCovered {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        unchecked: bool,
    },
    /// WCW(G) from leaves, for graphs without C3, C4, C5, C7.
    WcwLeaf {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        unchecked: bool,
    },
    /// Whether the edge u-v is relating (G[{u, v}] is generating).
    RelatingEdge {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        u: Vertex,
        #[arg(long)]
        v: Vertex,
    },
    /// Brute-force references.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Reduction gadgets.
    #[command(subcommand)]
    Reduce(ReduceCommand),
    /// Instance validators.
    #[command(subcommand)]
    Validate(ValidateCommand),
    /// Seeded instance generators.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Compare an algorithm or reduction with brute force on a corpus.
    Verify(VerifyArgs),
    /// Re-derive the shipped worked instances.
    ReproducePaper,
}

#[derive(Debug, Subcommand)]
enum OracleCommand {
    /// All maximal independent sets.
    Mis(GraphArg),
    /// Well-coveredness by enumeration.
    Wc(GraphArg),
    /// WCW(G) by enumeration.
    Wcw(GraphArg),
    /// Witness search for a generating subgraph.
    Generating(BicliqueArgs),
    /// Satisfiability by exhaustive search.
    Sat(CnfArg),
}

#[derive(Debug, Subcommand)]
enum ReduceCommand {
    DsatToDmsat(CnfArg),
    DmsatToGs(CnfArg),
    MonotoneToGs(CnfArg),
    /// Enlarge a MONOTONE artifact so B becomes K_{p,q}.
    ExtendKpq {
        /// Artifact JSON written by `reduce monotone-to-gs`.
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
    },
}

#[derive(Debug, Subcommand)]
enum ValidateCommand {
    Family {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        family: FamilySpec,
    },
    Cnf(CnfArg),
}

#[derive(Debug, Args)]
struct CorpusOut {
    /// Number of instances; more than one prints one JSON document per line.
    #[arg(long, default_value_t = 1)]
    count: usize,
    /// Write a corpus directory with a manifest instead of printing.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum GenCommand {
    /// Random graph in a family by rejection sampling, or grown edge by
    /// edge with `--edges` (bipartite C6-free only).
    Graph {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "any")]
        family: FamilySpec,
        /// Edge probability; defaults to min(2.5/n, 0.5).
        #[arg(long)]
        p: Option<f64>,
        #[arg(long)]
        edges: Option<usize>,
        #[command(flatten)]
        out: CorpusOut,
    },
    /// Uniform labeled tree.
    Tree {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: CorpusOut,
    },
    /// Random DSAT, or MONOTONE SAT with `--monotone`.
    Dsat {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        clauses: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Emit MONOTONE instances with `clauses` positive and `negative`
        /// negative clauses.
        #[arg(long)]
        monotone: bool,
        #[arg(long, default_value_t = 0)]
        negative: usize,
        #[command(flatten)]
        out: CorpusOut,
    },
    /// Every graph on n vertices in a family, one per isomorphism class
    /// unless `--labeled`.
    Enum {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "any")]
        family: FamilySpec,
        #[arg(long)]
        labeled: bool,
    },
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// generating, maxgen, wcw, well-covered, leaf, dsat or monotone.
    suite: Suite,
    /// Largest instance size (vertices, or variables for SAT suites).
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 100)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    family: Option<FamilySpec>,
    /// Every graph up to isomorphism on at most n vertices instead of
    /// random instances.
    #[arg(long)]
    exhaustive: bool,
}

enum Failure {
    Usage(String),
    Input(String),
    Domain(String),
    /// Output was written; the run still fails.
    Silent,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Io(_) | Error::Json(_) | Error::Parse(_) => Failure::Input(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

type Outcome = std::result::Result<(), Failure>;

struct Output<'a> {
    out: &'a mut dyn Write,
    pretty: bool,
}

impl Output<'_> {
    fn emit<T: Serialize>(&mut self, value: &T) -> Outcome {
        let text = if self.pretty { serde_json::to_string_pretty(value) } else { serde_json::to_string(value) };
        let text = text.map_err(Error::from)?;
        writeln!(self.out, "{text}").map_err(Error::from)?;
        Ok(())
    }
}

/// Runs the tool with `argv` (program name first) and standard streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let (stdout, stderr) = (std::io::stdout(), std::io::stderr());
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// [`run`] with explicit output streams.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(out, "{e}");
            return 0;
        }
        Err(e) => {
            let text = e.render().to_string();
            let _ = write!(err, "usage error: {}", text.strip_prefix("error: ").unwrap_or(&text));
            return 2;
        }
    };
    let mut output = Output { out, pretty: cli.pretty };
    match execute(cli.command, &mut output) {
        Ok(()) => 0,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "usage error: {m}");
            2
        }
        Err(Failure::Input(m)) => {
            let _ = writeln!(err, "input error: {m}");
            1
        }
        Err(Failure::Domain(m)) => {
            let _ = writeln!(err, "domain error: {m}");
            1
        }
        Err(Failure::Silent) => 1,
    }
}

fn load_graph(arg: &GraphArg) -> std::result::Result<Graph, Failure> {
    Ok(read_graph(&arg.graph)?)
}

fn load_cnf(arg: &CnfArg, default: CnfKind) -> std::result::Result<CnfInstance, Failure> {
    let text = std::fs::read_to_string(&arg.cnf).map_err(Error::from)?;
    Ok(parse_cnf(&text, arg.kind.unwrap_or(default))?)
}

fn fast(g: &Graph, unchecked: bool) -> std::result::Result<BipC6Free<'_>, Failure> {
    Ok(if unchecked { BipC6Free::new_unchecked(g) } else { BipC6Free::new(g)? })
}

fn biclique(g: &Graph, b: &BicliqueArgs) -> std::result::Result<InducedCompleteBipartite, Failure> {
    Ok(InducedCompleteBipartite::from_lists(g, &b.bx, &b.by)?)
}

fn system_value(sys: &ConstraintSystem) -> Value {
    json!({ "system": SystemJson::from(sys), "basis": BasisJson::from(&nullspace(sys)) })
}

fn execute(cmd: Command, o: &mut Output) -> Outcome {
    let limits = OracleLimits::from_env();
    match cmd {
        Command::Generating { b, unchecked } => {
            let g = load_graph(&b.graph)?;
            let bc = biclique(&g, &b)?;
            if bc.bx().len() > 2 {
                return Err(Failure::Domain(format!("|B_X| must be at most 2, got {}", bc.bx().len())));
            }
            o.emit(&json!({ "generating": fast(&g, unchecked)?.generating(&bc) }))
        }
        Command::Maxgen1 { graph, x, unchecked } => {
            let g = load_graph(&graph)?;
            o.emit(&json!({ "t": fast(&g, unchecked)?.maxgen1(x)? }))
        }
        Command::Maxgen2 { graph, x, unchecked } => {
            let [x1, x2] = x[..] else {
                return Err(Failure::Usage(format!("--x needs two vertices, got {}", x.len())));
            };
            let g = load_graph(&graph)?;
            o.emit(&json!({ "t": fast(&g, unchecked)?.maxgen2(x1, x2)? }))
        }
        Command::Wcw { graph, unchecked } => {
            let g = load_graph(&graph)?;
            o.emit(&system_value(&fast(&g, unchecked)?.wcw()))
        }
        Command::WellCovered { graph, unchecked } => {
            let g = load_graph(&graph)?;
            o.emit(&json!({ "well_covered": fast(&g, unchecked)?.well_covered() }))
        }
        Command::WcwLeaf { graph, unchecked } => {
            let g = load_graph(&graph)?;
            let sys = if unchecked { wcw_leaf_characterization_unchecked(&g) } else { wcw_leaf_characterization(&g)? };
            let mut v = system_value(&sys);
            v["profile"] = serde_json::to_value(LeafProfile::new(&g)).map_err(Error::from)?;
            o.emit(&v)
        }
        Command::RelatingEdge { graph, u, v } => {
            let g = load_graph(&graph)?;
            o.emit(&json!({ "relating": relating_edge(&g, u, v, &limits)? }))
        }
        Command::Oracle(c) => oracle(c, o, &limits),
        Command::Reduce(c) => reduce(c, o),
        Command::Validate(c) => validate_cmd(c, o),
        Command::Gen(c) => generate(c, o),
        Command::Verify(a) => verify(a, o),
        Command::ReproducePaper => {
            let report = reproduce_paper_examples(&limits)?;
            o.emit(&report)?;
            if report.is_success() {
                Ok(())
            } else {
                Err(Failure::Silent)
            }
        }
    }
}

fn oracle(cmd: OracleCommand, o: &mut Output, limits: &OracleLimits) -> Outcome {
    match cmd {
        OracleCommand::Mis(a) => {
            let g = load_graph(&a)?;
            let mis = enumerate_mis(&g, limits)?;
            o.emit(&json!({ "count": mis.len(), "sets": mis.sets }))
        }
        OracleCommand::Wc(a) => {
            let g = load_graph(&a)?;
            o.emit(&json!({ "well_covered": is_well_covered_oracle(&g, limits)? }))
        }
        OracleCommand::Wcw(a) => {
            let g = load_graph(&a)?;
            o.emit(&system_value(&wcw_oracle(&g, limits)?))
        }
        OracleCommand::Generating(b) => {
            let g = load_graph(&b.graph)?;
            let bc = biclique(&g, &b)?;
            let cert = generating_oracle(&g, &bc, limits)?;
            o.emit(&json!({ "generating": cert.is_some(), "witness": cert.map(|c| c.s) }))
        }
        OracleCommand::Sat(c) => {
            let inst = load_cnf(&c, CnfKind::Generic)?;
            let a = sat_bruteforce(&inst, limits)?;
            let true_vars =
                a.map(|a| a.values().iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i + 1).collect::<Vec<_>>());
            o.emit(&json!({ "satisfiable": true_vars.is_some(), "true_vars": true_vars }))
        }
    }
}

fn cnf_value(inst: &CnfInstance) -> std::result::Result<Value, Failure> {
    Ok(serde_json::from_str(&cnf_to_json(inst)).map_err(Error::from)?)
}

fn reduce(cmd: ReduceCommand, o: &mut Output) -> Outcome {
    match cmd {
        ReduceCommand::DsatToDmsat(c) => {
            let i2 = dsat_to_dmsat(&load_cnf(&c, CnfKind::Dsat)?)?;
            o.emit(&cnf_value(&i2)?)
        }
        ReduceCommand::DmsatToGs(c) => o.emit(&dmsat_to_gs(&load_cnf(&c, CnfKind::Dmsat)?)?.to_json()),
        ReduceCommand::MonotoneToGs(c) => o.emit(&monotone_to_gs(&load_cnf(&c, CnfKind::Monotone)?)?.to_json()),
        ReduceCommand::ExtendKpq { input, p, q } => {
            let text = std::fs::read_to_string(&input).map_err(Error::from)?;
            let j: ArtifactJson = serde_json::from_str(&text).map_err(Error::from)?;
            let art = ReductionArtifact::from_json(j)?;
            o.emit(&extend_to_kpq(&art, p, q)?.to_json())
        }
    }
}

fn validate_cmd(cmd: ValidateCommand, o: &mut Output) -> Outcome {
    let (valid, report) = match cmd {
        ValidateCommand::Family { graph, family } => {
            let g = load_graph(&graph)?;
            let r = validate_family(&g, &family);
            (r.is_valid(), json!({ "valid": r.is_valid(), "family": family.to_string(), "violations": r.violations }))
        }
        ValidateCommand::Cnf(c) => {
            let text = std::fs::read_to_string(&c.cnf).map_err(Error::from)?;
            // DIMACS is read as generic so that nothing is rejected before
            // the report; the C1/C2 split then follows literal signs
            let inst = parse_cnf(&text, CnfKind::Generic)?;
            let kind = c.kind.unwrap_or(inst.kind());
            let inst = if matches!(kind, CnfKind::Monotone | CnfKind::Dmsat) && inst.c2().is_empty() {
                let (c1, c2) = inst.c1().iter().cloned().partition(|c: &Vec<_>| c.is_empty() || c.iter().any(|&l| l > 0));
                CnfInstance::new(inst.n_vars(), c1, c2, kind)?
            } else {
                inst
            };
            let r = validate(&inst, kind);
            (r.is_valid(), json!({ "valid": r.is_valid(), "kind": kind, "violations": r.violations }))
        }
    };
    o.emit(&report)?;
    if valid {
        Ok(())
    } else {
        Err(Failure::Silent)
    }
}

#[derive(Serialize)]
struct ManifestEntry {
    file: String,
    sha256: String,
}

#[derive(Serialize)]
struct Manifest {
    generator: &'static str,
    seed: u64,
    config: Value,
    files: Vec<ManifestEntry>,
}

/// Prints `items` (one per line when several) or writes them to a corpus
/// directory with `manifest.json`.
fn write_corpus(o: &mut Output, out: &CorpusOut, generator: &'static str, seed: u64, config: Value, items: Vec<Value>) -> Outcome {
    let Some(dir) = &out.out else {
        for item in &items {
            o.emit(item)?;
        }
        return Ok(());
    };
    std::fs::create_dir_all(dir).map_err(Error::from)?;
    let width = items.len().saturating_sub(1).to_string().len();
    let mut files = Vec::with_capacity(items.len());
    for (i, item) in items.iter().enumerate() {
        let file = format!("{generator}-{i:0width$}.json");
        let text = serde_json::to_string(item).map_err(Error::from)?;
        write_file(&dir.join(&file), &text)?;
        files.push(ManifestEntry { file, sha256: hex::encode(Sha256::digest(text.as_bytes())) });
    }
    let manifest = Manifest { generator, seed, config, files };
    write_file(&dir.join("manifest.json"), &serde_json::to_string_pretty(&manifest).map_err(Error::from)?)?;
    o.emit(&json!({ "directory": dir, "instances": items.len() }))
}

fn write_file(path: &Path, text: &str) -> Outcome {
    std::fs::write(path, text).map_err(Error::from)?;
    Ok(())
}

fn graph_value(g: &Graph) -> Value {
    serde_json::to_value(GraphJson::from(g)).expect("graph json")
}

fn generate(cmd: GenCommand, o: &mut Output) -> Outcome {
    match cmd {
        GenCommand::Graph { n, seed, family, p, edges, out } => {
            let p = if edges.is_some() { None } else { Some(p.unwrap_or_else(|| default_edge_probability(n))) };
            let items: Vec<Value> = if let Some(m) = edges {
                if family != FamilySpec::bipartite_c6_free() {
                    return Err(Failure::Usage("--edges needs --family bip-c6free".into()));
                }
                let mut rng = LabRng::new(seed);
                (0..out.count).map(|_| grow_bip_c6free(n, m, rng.next_u64()).map(|g| graph_value(&g))).collect::<Result<_, _>>()?
            } else {
                let cfg = GeneratorConfig::new(seed, n, p.unwrap_or_default(), family.clone());
                RandomGraphs::new(cfg)?.take(out.count).map(|g| g.map(|g| graph_value(&g))).collect::<Result<_, _>>()?
            };
            let config = json!({ "n": n, "family": family.to_string(), "p": p, "edges": edges });
            write_corpus(o, &out, "graph", seed, config, items)
        }
        GenCommand::Tree { n, seed, out } => {
            let mut rng = LabRng::new(seed);
            let items = (0..out.count).map(|_| random_tree_with(n, &mut rng).map(|g| graph_value(&g))).collect::<Result<_, _>>()?;
            write_corpus(o, &out, "tree", seed, json!({ "n": n }), items)
        }
        GenCommand::Dsat { n, clauses, seed, monotone, negative, out } => {
            let mut rng = LabRng::new(seed);
            let items = (0..out.count)
                .map(|_| {
                    let inst = if monotone {
                        random_monotone_with(n, clauses, negative, &mut rng)?
                    } else {
                        random_dsat_with(n, clauses, &mut rng, DEFAULT_MAX_REJECTIONS)?
                    };
                    cnf_value(&inst)
                })
                .collect::<Result<_, _>>()?;
            let name = if monotone { "monotone" } else { "dsat" };
            write_corpus(o, &out, name, seed, json!({ "n_vars": n, "clauses": clauses, "negative": negative }), items)
        }
        GenCommand::Enum { n, family, labeled } => {
            if labeled {
                for g in enumerate_small_graphs(n, &family)? {
                    o.emit(&graph_value(&g))?;
                }
            } else {
                let levels = enumerate_unlabeled(n, &family)?;
                for g in &levels[n] {
                    o.emit(&graph_value(g))?;
                }
            }
            Ok(())
        }
    }
}

fn verify(a: VerifyArgs, o: &mut Output) -> Outcome {
    let sat_suite = matches!(a.suite, Suite::Dsat | Suite::Monotone);
    let max_n = a.n.unwrap_or(if sat_suite { 6 } else { 10 });
    let corpus = if a.exhaustive {
        if sat_suite {
            return Err(Failure::Usage(format!("suite {} has no exhaustive corpus", a.suite)));
        }
        Corpus::Exhaustive { max_n }
    } else {
        Corpus::Random { max_n, count: a.count, seed: a.seed }
    };
    let base = if sat_suite { OracleLimits::for_reductions() } else { OracleLimits::default() };
    let cfg = SuiteConfig { suite: a.suite, corpus, family: a.family, limits: base.with_env() };
    let report = run_suite(&cfg)?;
    o.emit(&report)?;
    if report.is_success() {
        Ok(())
    } else {
        Err(Failure::Silent)
    }
}
