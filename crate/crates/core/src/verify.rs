//! Batch comparison of the fast algorithms and reductions against the
//! brute-force oracles, plus re-derivation of the shipped worked instances.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algorithms::{wcw_leaf_characterization_unchecked, BipC6Free};
use crate::biclique::InducedCompleteBipartite;
use crate::error::{Error, Result};
use crate::family::{validate_family, FamilySpec};
use crate::fixtures;
use crate::graph::{Graph, Vertex, VertexSet};
use crate::io::GraphJson;
use crate::lab::{enumerate_unlabeled, random_dsat_with, random_monotone_with, random_tree_with, GeneratorConfig, LabRng, RandomGraphs};
use crate::oracles::{generating_oracle, is_well_covered_oracle, sat_bruteforce, wcw_oracle, OracleLimits};
use crate::sat::reductions::{dmsat_to_gs, dsat_to_dmsat, extend_to_kpq, monotone_to_gs, Role};
use crate::sat::{cnf_to_json, Assignment, CnfInstance, CnfKind};
use crate::weightspace::{
    format_rational, nullspace, solution_outside, solutions_within, spaces_equal, uniform, ConstraintSystem, SystemJson,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// The generating check against the witness search, over every induced complete
    /// bipartite subgraph with at most two vertices on one side.
    Generating,
    /// MaxGen1/MaxGen2 outputs are generating and cannot be extended.
    Maxgen,
    /// The weight-space construction against the brute-force weight space.
    Wcw,
    /// The well-covered check against brute force and against the weight-space construction.
    WellCovered,
    /// Leaf characterization against the brute-force weight space.
    Leaf,
    /// DSAT → DMSAT → GS satisfiability chain.
    Dsat,
    /// MONOTONE SAT → GS and its K_{p,q} extension.
    Monotone,
}

impl Suite {
    pub const ALL: [Suite; 7] =
        [Suite::Generating, Suite::Maxgen, Suite::Wcw, Suite::WellCovered, Suite::Leaf, Suite::Dsat, Suite::Monotone];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Generating => "generating",
            Suite::Maxgen => "maxgen",
            Suite::Wcw => "wcw",
            Suite::WellCovered => "well-covered",
            Suite::Leaf => "leaf",
            Suite::Dsat => "dsat",
            Suite::Monotone => "monotone",
        }
    }

    fn is_graph_suite(self) -> bool {
        !matches!(self, Suite::Dsat | Suite::Monotone)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown suite {s:?}")))
    }
}

/// Where instances come from.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Corpus {
    /// One graph per isomorphism class on 1..=max_n vertices.
    Exhaustive { max_n: usize },
    /// `count` seeded instances; instance i draws its size from a stream
    /// seeded by `seed + i`.
    Random { max_n: usize, count: usize, seed: u64 },
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub corpus: Corpus,
    /// Graph family for graph suites. `None` picks the suite default:
    /// bipartite without C6, or trees for the leaf suite.
    pub family: Option<FamilySpec>,
    pub limits: OracleLimits,
}

#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub id: String,
    pub algorithm: Value,
    pub oracle: Value,
    pub agree: bool,
    /// The disagreement is listed in the known-discrepancy registry.
    pub expected: bool,
    pub millis: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instance: Option<Value>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub total: usize,
    pub agreements: usize,
    pub expected_disagreements: usize,
    pub unexpected_disagreements: usize,
    pub records: Vec<Record>,
    pub disagreements: Vec<Record>,
}

impl VerifyReport {
    /// Sorts records by id and recomputes the counts.
    pub fn new(suite: impl Into<String>, mut records: Vec<Record>) -> Self {
        records.sort_by_key(|r| natural_key(&r.id));
        let agreements = records.iter().filter(|r| r.agree).count();
        let expected_disagreements = records.iter().filter(|r| !r.agree && r.expected).count();
        let disagreements: Vec<Record> = records.iter().filter(|r| !r.agree).cloned().collect();
        VerifyReport {
            suite: suite.into(),
            total: records.len(),
            agreements,
            expected_disagreements,
            unexpected_disagreements: disagreements.len() - expected_disagreements,
            records,
            disagreements,
        }
    }

    pub fn is_success(&self) -> bool {
        self.unexpected_disagreements == 0
    }
}

/// Orders `name-10` after `name-9`.
fn natural_key(id: &str) -> (String, u64) {
    match id.rsplit_once('-') {
        Some((head, tail)) if !tail.is_empty() && tail.chars().all(|c| c.is_ascii_digit()) => {
            (head.to_string(), tail.parse().unwrap_or(u64::MAX))
        }
        _ => (id.to_string(), 0),
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed().as_secs_f64() * 1e3)
}

fn record(id: String, algorithm: Value, oracle: Value, agree: bool, millis: f64, instance: Value) -> Record {
    Record { id, algorithm, oracle, agree, expected: false, millis, instance: (!agree).then_some(instance) }
}

fn error_record(id: String, e: &Error, instance: Value) -> Record {
    Record {
        id,
        algorithm: json!({ "error": e.to_string() }),
        oracle: Value::Null,
        agree: false,
        expected: false,
        millis: 0.0,
        instance: Some(instance),
    }
}

fn graph_value(g: &Graph) -> Value {
    serde_json::to_value(GraphJson::from(g)).expect("graph json")
}

/// Mixes an instance index into a seed so neighbouring seeds do not share
/// streams.
fn instance_seed(seed: u64, i: usize) -> u64 {
    seed.wrapping_add((i as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// Default edge probability for random graphs on `n` vertices.
pub fn default_edge_probability(n: usize) -> f64 {
    (2.5 / n.max(1) as f64).min(0.5)
}

pub fn run_suite(cfg: &SuiteConfig) -> Result<VerifyReport> {
    let s = cfg.suite;
    if s.is_graph_suite() {
        let family = match (&cfg.family, s) {
            (Some(f), _) => f.clone(),
            (None, Suite::Leaf) => FamilySpec::any(),
            (None, _) => FamilySpec::bipartite_c6_free(),
        };
        let fast_ok = if s == Suite::Leaf {
            cfg.family.as_ref().is_none_or(FamilySpec::implies_c3457_free)
        } else {
            family.implies_bipartite_c6_free()
        };
        if !fast_ok {
            return Err(Error::InvalidFamily(format!("suite {s} cannot run on family {family}")));
        }
        let graphs = graph_corpus(s, &cfg.corpus, cfg.family.as_ref().map(|_| &family))?;
        let records: Vec<Record> = graphs
            .into_par_iter()
            .map(|(id, g)| match g {
                Ok(g) => check_graph(s, id, &g, &cfg.limits),
                Err(e) => error_record(id, &e, Value::Null),
            })
            .collect();
        return Ok(VerifyReport::new(s.name(), records));
    }
    let Corpus::Random { max_n, count, seed } = cfg.corpus else {
        return Err(Error::InvalidParameter(format!("suite {s} needs a random corpus")));
    };
    let records: Vec<Record> = (0..count)
        .into_par_iter()
        .map(|i| {
            let id = format!("{s}-{i}");
            let mut rng = LabRng::new(instance_seed(seed, i));
            if s == Suite::Dsat {
                let n = rng.range(2, max_n.max(2));
                // small variable counts cannot hold many clauses, so the
                // clause count is lowered until the generator succeeds
                let mut m = rng.range(0, 8);
                let inst = loop {
                    match random_dsat_with(n, m, &mut rng, 2_000) {
                        Err(Error::RejectionCapExceeded(_)) if m > 0 => m -= 1,
                        other => break other,
                    }
                };
                match inst {
                    Ok(inst) => check_dsat(id, &inst, &cfg.limits),
                    Err(e) => error_record(id, &e, json!({ "n_vars": n, "clauses": m })),
                }
            } else {
                let n = rng.range(1, max_n.max(1));
                let (m1, m2) = (rng.range(0, 4), rng.range(0, 4));
                let (p, q) = (rng.range(1, 3), rng.range(2, 3));
                match random_monotone_with(n, m1, m2, &mut rng) {
                    Ok(inst) => check_monotone(id, &inst, p, q, &cfg.limits),
                    Err(e) => error_record(id, &e, json!({ "n_vars": n })),
                }
            }
        })
        .collect();
    Ok(VerifyReport::new(s.name(), records))
}

type Instance = (String, Result<Graph>);

fn graph_corpus(s: Suite, corpus: &Corpus, family: Option<&FamilySpec>) -> Result<Vec<Instance>> {
    match *corpus {
        Corpus::Exhaustive { max_n } => {
            let fam = family.cloned().unwrap_or_else(|| {
                if s == Suite::Leaf {
                    FamilySpec::new([3, 4, 5, 6, 7, 8], false, None).expect("static family")
                } else {
                    FamilySpec::bipartite_c6_free()
                }
            });
            let levels = enumerate_unlabeled(max_n, &fam)?;
            Ok(levels
                .into_iter()
                .enumerate()
                .skip(1)
                .flat_map(|(n, gs)| gs.into_iter().enumerate().map(move |(k, g)| (format!("n{n}-{k}"), Ok(g))))
                .collect())
        }
        Corpus::Random { max_n, count, seed } => Ok((0..count)
            .map(|i| {
                let id = format!("{s}-{i}");
                let mut rng = LabRng::new(instance_seed(seed, i));
                let g = match (s, family) {
                    (Suite::Leaf, None) => random_tree_with(rng.range(1, max_n.max(1)), &mut rng),
                    (_, fam) => {
                        let n = rng.range((max_n / 2).max(1), max_n.max(1));
                        let p = default_edge_probability(n) * [0.6, 1.0, 1.4][rng.range(0, 2)];
                        let fam = fam.cloned().unwrap_or_else(FamilySpec::bipartite_c6_free);
                        let cfg = GeneratorConfig::new(rng.next_u64(), n, p.min(1.0), fam);
                        RandomGraphs::new(cfg).and_then(|mut it| it.next_graph())
                    }
                };
                (id, g)
            })
            .collect()),
    }
}

fn check_graph(s: Suite, id: String, g: &Graph, limits: &OracleLimits) -> Record {
    let inst = graph_value(g);
    let out = match s {
        Suite::Generating => check_generating(g, limits),
        Suite::Maxgen => check_maxgen(g, limits),
        Suite::Wcw => check_wcw(g, limits),
        Suite::WellCovered => check_well_covered(g, limits),
        Suite::Leaf => check_leaf(g, limits),
        Suite::Dsat | Suite::Monotone => unreachable!("not a graph suite"),
    };
    match out {
        Ok((alg, ora, agree, ms)) => {
            let mut r = record(id, alg, ora, agree, ms, inst);
            if !agree {
                r.expected = registry().is_some_and(|reg| reg.lookup(s.name(), g).is_some());
            }
            r
        }
        Err(e) => error_record(id, &e, inst),
    }
}

type Check = Result<(Value, Value, bool, f64)>;

fn registry() -> Option<&'static fixtures::DiscrepancyRegistry> {
    static REG: OnceLock<Option<fixtures::DiscrepancyRegistry>> = OnceLock::new();
    REG.get_or_init(|| fixtures::DiscrepancyRegistry::load().ok()).as_ref()
}

/// Whether a disagreement of `suite` has the shape of the known defect of
/// the zero-weight rule: the weight space computed by the algorithm is a
/// proper subspace of the true one, and the well-covered check only errs by
/// answering no on a well-covered graph. Agreeing records also qualify.
pub fn is_known_defect_shape(suite: Suite, r: &Record) -> bool {
    if r.agree {
        return true;
    }
    match suite {
        Suite::Wcw => r.algorithm["within_oracle"] == json!(true),
        Suite::WellCovered => {
            r.oracle["well_covered"] == json!(true)
                && (r.algorithm["well_covered"] == json!(false) || r.algorithm["uniform_in_wcw"] == json!(false))
        }
        _ => false,
    }
}

/// Every nonempty subset of `set`, as vertex sets of capacity `n`.
fn nonempty_subsets(n: usize, set: &[Vertex]) -> Vec<VertexSet> {
    (1u64..1 << set.len())
        .map(|mask| VertexSet::from_vertices(n, (0..set.len()).filter(|&k| mask >> k & 1 == 1).map(|k| set[k])))
        .collect()
}

/// Induced complete bipartite subgraphs with one or two vertices on the X
/// side, inside a bipartite graph.
pub fn small_side_bicliques(g: &Graph) -> Vec<InducedCompleteBipartite> {
    let n = g.n();
    let mut out = Vec::new();
    for x in 0..n {
        for by in nonempty_subsets(n, g.neighbor_list(x)) {
            out.push(InducedCompleteBipartite::new(g, g.set_of([x]), by).expect("star inside a bipartite graph"));
        }
    }
    for x1 in 0..n {
        for x2 in x1 + 1..n {
            if g.has_edge(x1, x2) {
                continue;
            }
            let common = g.neighbors(x1).intersection(g.neighbors(x2)).to_vec();
            for by in nonempty_subsets(n, &common) {
                out.push(InducedCompleteBipartite::new(g, g.set_of([x1, x2]), by).expect("biclique"));
            }
        }
    }
    out
}

fn check_generating(g: &Graph, limits: &OracleLimits) -> Check {
    let fast = BipC6Free::new(g)?;
    let bs = small_side_bicliques(g);
    let mut mismatches = Vec::new();
    let (mut ms, mut yes) = (0.0, 0);
    for b in &bs {
        let (alg, t) = timed(|| fast.generating(b));
        ms += t;
        let ora = generating_oracle(g, b, limits)?.is_some();
        yes += usize::from(ora);
        if alg != ora {
            mismatches.push(json!({ "bx": b.bx().to_vec(), "by": b.by().to_vec(), "algorithm": alg, "oracle": ora }));
        }
    }
    let agree = mismatches.is_empty();
    let alg = json!({ "checked": bs.len(), "mismatches": mismatches });
    Ok((alg, json!({ "checked": bs.len(), "generating": yes }), agree, ms))
}

fn is_generating(g: &Graph, bx: &VertexSet, by: &VertexSet, limits: &OracleLimits) -> Result<bool> {
    let b = InducedCompleteBipartite::new(g, bx.clone(), by.clone())?;
    Ok(generating_oracle(g, &b, limits)?.is_some())
}

fn check_maxgen(g: &Graph, limits: &OracleLimits) -> Check {
    let fast = BipC6Free::new(g)?;
    let n = g.n();
    let mut failures = Vec::new();
    let mut checked = 0usize;
    let mut ms = 0.0;
    for x in 0..n {
        let (t, dt) = timed(|| fast.maxgen1(x));
        let t = t?;
        ms += dt;
        let bx = g.set_of([x]);
        checked += 1;
        if !t.is_empty() && !is_generating(g, &bx, &t, limits)? {
            failures.push(json!({ "x": [x], "t": t.to_vec(), "reason": "not generating" }));
        }
        for y in g.neighbors(x).difference(&t).iter() {
            let mut bigger = t.clone();
            bigger.insert(y);
            if is_generating(g, &bx, &bigger, limits)? {
                failures.push(json!({ "x": [x], "t": t.to_vec(), "extends_by": y }));
            }
        }
    }
    for x1 in 0..n {
        for x2 in x1 + 1..n {
            let common = g.neighbors(x1).intersection(g.neighbors(x2));
            if common.len() < 2 {
                continue;
            }
            let (t, dt) = timed(|| fast.maxgen2(x1, x2));
            let t = t?;
            ms += dt;
            checked += 1;
            let bx = g.set_of([x1, x2]);
            if t.is_empty() {
                // no T with |T| >= 2 may exist
                let ys = common.to_vec();
                let candidates: Vec<VertexSet> = if ys.len() <= 10 {
                    nonempty_subsets(n, &ys).into_iter().filter(|s| s.len() >= 2).collect()
                } else {
                    let mut c: Vec<VertexSet> =
                        ys.iter().enumerate().flat_map(|(i, &a)| ys[i + 1..].iter().map(move |&b| (a, b))).map(|(a, b)| g.set_of([a, b])).collect();
                    c.push(common.clone());
                    c
                };
                for cand in candidates {
                    if is_generating(g, &bx, &cand, limits)? {
                        failures.push(json!({ "x": [x1, x2], "t": [], "generating": cand.to_vec() }));
                        break;
                    }
                }
                continue;
            }
            if !is_generating(g, &bx, &t, limits)? {
                failures.push(json!({ "x": [x1, x2], "t": t.to_vec(), "reason": "not generating" }));
            }
            for y in common.difference(&t).iter() {
                let mut bigger = t.clone();
                bigger.insert(y);
                if is_generating(g, &bx, &bigger, limits)? {
                    failures.push(json!({ "x": [x1, x2], "t": t.to_vec(), "extends_by": y }));
                }
            }
        }
    }
    let agree = failures.is_empty();
    Ok((json!({ "checked": checked, "failures": failures }), json!("generating and maximal"), agree, ms))
}

fn check_wcw(g: &Graph, limits: &OracleLimits) -> Check {
    let fast = BipC6Free::new(g)?;
    let (sys, ms) = timed(|| fast.wcw());
    let ora = wcw_oracle(g, limits)?;
    let agree = spaces_equal(&sys, &ora)?;
    let within = solutions_within(&sys, &ora)?;
    let missed = solution_outside(&ora, &sys)?.map(|w| w.iter().map(format_rational).collect::<Vec<_>>());
    let alg = json!({
        "dimension": nullspace(&sys).dimension(),
        "within_oracle": within,
        "system": SystemJson::from(&sys),
    });
    Ok((alg, json!({ "dimension": nullspace(&ora).dimension(), "missed_vector": missed }), agree, ms))
}

fn check_well_covered(g: &Graph, limits: &OracleLimits) -> Check {
    let fast = BipC6Free::new(g)?;
    let (wc, ms) = timed(|| fast.well_covered());
    let ora = is_well_covered_oracle(g, limits)?;
    let via_wcw = fast.wcw().is_satisfied_by(&uniform(g.n(), 1));
    let agree = wc == ora && wc == via_wcw;
    Ok((json!({ "well_covered": wc, "uniform_in_wcw": via_wcw }), json!({ "well_covered": ora }), agree, ms))
}

fn check_leaf(g: &Graph, limits: &OracleLimits) -> Check {
    validate_family(g, &FamilySpec::c3457_free()).into_result()?;
    let (sys, ms) = timed(|| wcw_leaf_characterization_unchecked(g));
    let ora = wcw_oracle(g, limits)?;
    let agree = spaces_equal(&sys, &ora)?;
    let alg = json!({ "dimension": nullspace(&sys).dimension() });
    Ok((alg, json!({ "dimension": nullspace(&ora).dimension() }), agree, ms))
}

fn cnf_value(inst: &CnfInstance) -> Value {
    serde_json::from_str(&cnf_to_json(inst)).expect("cnf json")
}

fn check_dsat(id: String, i1: &CnfInstance, limits: &OracleLimits) -> Record {
    let inst = cnf_value(i1);
    let run = || -> Check {
        let start = Instant::now();
        let i2 = dsat_to_dmsat(i1)?;
        let art = dmsat_to_gs(&i2)?;
        let ms = start.elapsed().as_secs_f64() * 1e3;
        let s1 = sat_bruteforce(i1, limits)?;
        let s2 = sat_bruteforce(&i2, limits)?;
        let cert = generating_oracle(&art.graph, &art.b, limits)?;
        let mut agree = s1.is_some() == s2.is_some() && s2.is_some() == cert.is_some();
        if let Some(c) = &cert {
            agree &= art.picks_one_literal_per_variable(&c.s) && i2.is_satisfied_by(&art.witness_to_assignment(&c.s));
        }
        if let Some(a) = &s2 {
            let w = art.assignment_to_witness(a)?;
            let b = &art.b;
            let mx = w.union(b.bx());
            let my = w.union(b.by());
            agree &= art.graph.is_maximal_independent(&mx) && art.graph.is_maximal_independent(&my);
        }
        let alg = json!({ "dmsat_vars": i2.n_vars(), "graph_n": art.graph.n(), "generating": cert.is_some() });
        let ora = json!({ "dsat_sat": s1.is_some(), "dmsat_sat": s2.is_some() });
        Ok((alg, ora, agree, ms))
    };
    match run() {
        Ok((alg, ora, agree, ms)) => record(id, alg, ora, agree, ms, inst),
        Err(e) => error_record(id, &e, inst),
    }
}

fn check_monotone(id: String, inst: &CnfInstance, p: usize, q: usize, limits: &OracleLimits) -> Record {
    let dump = json!({ "cnf": cnf_value(inst), "p": p, "q": q });
    let run = || -> Check {
        let start = Instant::now();
        let art = monotone_to_gs(inst)?;
        let ext = extend_to_kpq(&art, p, q)?;
        let ms = start.elapsed().as_secs_f64() * 1e3;
        let sat = sat_bruteforce(inst, limits)?;
        let g1 = generating_oracle(&art.graph, &art.b, limits)?;
        let g2 = generating_oracle(&ext.graph, &ext.b, limits)?;
        let mut agree = sat.is_some() == g1.is_some() && g1.is_some() == g2.is_some();
        agree &= validate_family(&art.graph, &FamilySpec::c35_free()).is_valid()
            && validate_family(&ext.graph, &FamilySpec::c35_free()).is_valid();
        if let Some(c) = &g1 {
            agree &= inst.is_satisfied_by(&art.witness_to_assignment(&c.s));
        }
        let alg = json!({ "generating": g1.is_some(), "extended_generating": g2.is_some(), "p": p, "q": q });
        Ok((alg, json!({ "sat": sat.is_some() }), agree, ms))
    };
    match run() {
        Ok((alg, ora, agree, ms)) => record(id, alg, ora, agree, ms, dump),
        Err(e) => error_record(id, &e, dump),
    }
}

/// Maps the 5-variable DSAT instance through the DMSAT reduction and compares
/// with the shipped DMSAT instance. The shipped instance names the
/// complement of x_{2k-1} as x_{2k}, so variables are compacted first and
/// renamed afterwards.
fn dsat5_to_dmsat10() -> Result<bool> {
    let i1 = fixtures::dsat5()?;
    let used: Vec<usize> = crate::sat::used_variables(&i1).into_iter().collect();
    let k = used.len() as i32;
    let pos = |v: usize| used.iter().position(|&u| u == v).expect("used variable") as i32 + 1;
    let compact: Vec<Vec<i32>> =
        i1.clauses().map(|c| c.iter().map(|&l| l.signum() * pos(l.unsigned_abs() as usize)).collect()).collect();
    let compact = CnfInstance::new(used.len(), compact, vec![], CnfKind::Dsat)?;
    let i2 = dsat_to_dmsat(&compact)?;
    let rename = |l: i32| {
        let v = l.abs();
        let r = if v <= k { 2 * v - 1 } else { 2 * (v - k) };
        l.signum() * r
    };
    let map = |cs: &[Vec<i32>]| cs.iter().map(|c| c.iter().map(|&l| rename(l)).collect()).collect();
    let renamed = CnfInstance::new(2 * used.len(), map(i2.c1()), map(i2.c2()), CnfKind::Dmsat)?;
    Ok(renamed.clause_multiset() == fixtures::dmsat10()?.clause_multiset())
}

/// Re-derives every shipped worked instance. All records agree except the
/// registry entries, which must disagree exactly as registered.
pub fn reproduce_paper_examples(limits: &OracleLimits) -> Result<VerifyReport> {
    let mut records = Vec::new();
    let mut push = |id: &str, alg: Value, ora: Value, agree: bool, ms: f64| {
        records.push(Record { id: id.into(), algorithm: alg, oracle: ora, agree, expected: false, millis: ms, instance: None });
    };

    let i1 = fixtures::dsat9()?;
    let golden = fixtures::dmsat18()?;
    let (i2, ms) = timed(|| dsat_to_dmsat(&i1));
    let i2 = i2?;
    push(
        "dsat9-to-dmsat18",
        json!({ "n_vars": i2.n_vars(), "clauses": i2.clause_count() }),
        json!({ "n_vars": golden.n_vars(), "clauses": golden.clause_count() }),
        i2.n_vars() == golden.n_vars() && i2.clause_multiset() == golden.clause_multiset(),
        ms,
    );

    let (ok, ms) = timed(dsat5_to_dmsat10);
    let ok = ok?;
    push("dsat5-to-dmsat10", json!(ok), json!(true), ok, ms);

    let e3 = fixtures::dmsat10()?;
    let (art, ms) = timed(|| dmsat_to_gs(&e3));
    let art = art?;
    let girth_ok = validate_family(&art.graph, &FamilySpec::bipartite_girth6()).is_valid();
    push(
        "dmsat10-graph",
        json!({ "n": art.graph.n(), "bipartite_girth_6": girth_ok }),
        json!({ "n": 44, "bipartite_girth_6": true }),
        art.graph.n() == 44 && girth_ok,
        ms,
    );
    let (cert, ms) = timed(|| generating_oracle(&art.graph, &art.b, limits));
    let cert = cert?;
    let one_literal = cert.as_ref().is_some_and(|c| art.picks_one_literal_per_variable(&c.s));
    push(
        "dmsat10-generating",
        json!({ "generating": cert.is_some(), "one_literal_per_variable": one_literal }),
        json!({ "generating": true, "one_literal_per_variable": true }),
        cert.is_some() && one_literal,
        ms,
    );
    let w = fixtures::dmsat10_witness()?;
    let a = Assignment::from_true_vars(e3.n_vars(), &w.true_vars);
    let printed: Vec<Vertex> = w
        .witness
        .iter()
        .map(|l| l.parse::<Role>().ok().and_then(|r| art.vertex(r)).ok_or_else(|| Error::Parse(format!("unknown label {l:?}"))))
        .collect::<Result<_>>()?;
    let printed = art.graph.set_of(printed);
    let (s, ms) = timed(|| art.assignment_to_witness(&a));
    let s = s?;
    let m_x = s.union(art.b.bx());
    let m_y = s.union(art.b.by());
    let witness_ok = s == printed
        && e3.is_satisfied_by(&a)
        && art.graph.is_maximal_independent(&m_x)
        && art.graph.is_maximal_independent(&m_y);
    let names = |set: &VertexSet| -> Vec<String> { set.iter().map(|v| art.graph.label(v).unwrap_or("?").to_string()).collect() };
    push("dmsat10-witness", json!(names(&s)), json!(names(&printed)), witness_ok, ms);

    let lay = fixtures::layout31()?;
    let (t, ms) = timed(|| BipC6Free::new(&lay.graph).and_then(|f| f.maxgen2(lay.x[0], lay.x[1])));
    let t = t?;
    push("layout31-maxgen2", json!(t.to_vec()), json!(lay.expected_maxgen2), t.to_vec() == lay.expected_maxgen2, ms);
    let d = crate::algorithms::NeighborhoodDecomposition::new(&lay.graph, &lay.x)?;
    let empty = |i: usize, z: bool| if z { d.z_sets[i].is_empty() } else { d.a_sets[i].is_empty() };
    let caption = empty(1, false)
        && empty(3, false)
        && empty(1, true)
        && empty(2, true)
        && empty(3, true)
        && lay.graph.dominates(&d.s_prime, &d.s)
        && [1, 3, 4, 5].iter().all(|&i| d.z_dominates_a(&lay.graph, i))
        && !d.z_dominates_a(&lay.graph, 0)
        && is_generating(&lay.graph, &d.x_side, &t, limits)?;
    push("layout31-layers", json!(caption), json!(true), caption, 0.0);

    for entry in fixtures::DiscrepancyRegistry::load()?.entries {
        records.push(check_registry_entry(&entry, limits)?);
    }
    Ok(VerifyReport::new("reproduce-paper", records))
}

/// Recomputes a registry entry. The record disagrees when the algorithm
/// still differs from brute force, and is marked expected when both results
/// and the separating vector match the registry.
fn check_registry_entry(entry: &fixtures::KnownDiscrepancy, limits: &OracleLimits) -> Result<Record> {
    let g = entry.graph()?;
    let vector = entry.vector()?;
    let separates = |alg: &ConstraintSystem, ora: &ConstraintSystem| {
        vector.as_ref().is_none_or(|v| v.len() == g.n() && ora.is_satisfied_by(v) && !alg.is_satisfied_by(v))
    };
    let (alg, ora, agree, vector_ok) = match entry.suite.as_str() {
        "leaf" | "wcw" => {
            let sys = if entry.suite == "leaf" {
                crate::algorithms::wcw_leaf_characterization(&g)?
            } else {
                BipC6Free::new(&g)?.wcw()
            };
            let ora_sys = wcw_oracle(&g, limits)?;
            let agree = spaces_equal(&sys, &ora_sys)?;
            let ok = separates(&sys, &ora_sys);
            (json!({ "dimension": nullspace(&sys).dimension() }), json!({ "dimension": nullspace(&ora_sys).dimension() }), agree, ok)
        }
        "well-covered" => {
            let wc = BipC6Free::new(&g)?.well_covered();
            let ora = is_well_covered_oracle(&g, limits)?;
            (json!({ "well_covered": wc }), json!({ "well_covered": ora }), wc == ora, true)
        }
        other => return Err(Error::Parse(format!("registry entry {:?} has unknown suite {other:?}", entry.id))),
    };
    let expected = !agree && alg == entry.algorithm && ora == entry.oracle && vector_ok;
    Ok(Record {
        id: format!("known-{}", entry.id),
        algorithm: alg,
        oracle: ora,
        agree,
        expected,
        millis: 0.0,
        instance: Some(json!({ "graph": entry.graph, "note": entry.note })),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_instances_reproduce() {
        let r = reproduce_paper_examples(&OracleLimits::default()).unwrap();
        for rec in &r.records {
            assert!(rec.agree || rec.expected, "{rec:?}");
        }
        assert_eq!(r.expected_disagreements, 3);
        assert!(r.is_success());
    }

    #[test]
    fn small_random_suites_pass() {
        for s in Suite::ALL {
            let cfg = SuiteConfig {
                suite: s,
                corpus: Corpus::Random { max_n: if s == Suite::Dsat { 6 } else { 8 }, count: 10, seed: 3 },
                family: None,
                limits: OracleLimits::for_reductions(),
            };
            let r = run_suite(&cfg).unwrap();
            assert_eq!(r.total, 10);
            match s {
                Suite::Wcw | Suite::WellCovered => {
                    assert!(r.records.iter().all(|rec| is_known_defect_shape(s, rec)), "{s}: {:?}", r.disagreements)
                }
                _ => assert!(r.is_success(), "{s}: {:?}", r.disagreements),
            }
        }
    }

    #[test]
    fn suite_rejects_wrong_family() {
        let cfg = SuiteConfig {
            suite: Suite::Wcw,
            corpus: Corpus::Random { max_n: 6, count: 1, seed: 0 },
            family: Some(FamilySpec::any()),
            limits: OracleLimits::default(),
        };
        assert!(run_suite(&cfg).is_err());
    }
}
