//! Seeded instance generators and small-graph enumeration.
//!
//! All randomness comes from ChaCha8 seeded with a `u64` through
//! `SeedableRng::seed_from_u64`, consumed only via `next_u64`. Bounded
//! integers use rejection on the top of the range and probabilities are
//! compared as 53-bit integers, so a seed gives the same output everywhere.

mod enumerate;

pub use enumerate::{canonical_form, enumerate_small_graphs, enumerate_unlabeled, SmallGraphs};

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::graph::{Graph, Vertex};
use crate::sat::{validate, CnfInstance, CnfKind, Literal};

pub const DEFAULT_MAX_REJECTIONS: usize = 10_000;

/// Deterministic integer RNG.
#[derive(Clone, Debug)]
pub struct LabRng(ChaCha8Rng);

impl LabRng {
    pub fn new(seed: u64) -> Self {
        LabRng(ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform in `0..bound`. `bound` must be positive.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty range");
        let zone = u64::MAX - (u64::MAX % bound + 1) % bound;
        loop {
            let x = self.next_u64();
            if x <= zone {
                return x % bound;
            }
        }
    }

    pub fn range(&mut self, lo: usize, hi_inclusive: usize) -> usize {
        lo + self.below((hi_inclusive - lo + 1) as u64) as usize
    }

    pub fn coin(&mut self) -> bool {
        self.next_u64() >> 63 == 1
    }

    /// True with probability `threshold / 2^53`.
    pub fn bernoulli(&mut self, threshold: u64) -> bool {
        (self.next_u64() >> 11) < threshold
    }

    pub fn shuffle<T>(&mut self, xs: &mut [T]) {
        for i in (1..xs.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            xs.swap(i, j);
        }
    }
}

/// Converts a probability in [0, 1] to a [`LabRng::bernoulli`] threshold.
pub fn probability_threshold(p: f64) -> Result<u64> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("probability {p} outside [0, 1]")));
    }
    Ok((p * (1u64 << 53) as f64) as u64)
}

/// Uniform labeled tree on `n` vertices, decoded from a random Prüfer
/// sequence.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    random_tree_with(n, &mut LabRng::new(seed))
}

pub fn random_tree_with(n: usize, rng: &mut LabRng) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("a tree needs at least one vertex".into()));
    }
    if n <= 2 {
        return Graph::new(n, (n == 2).then_some((0, 1)));
    }
    let seq: Vec<Vertex> = (0..n - 2).map(|_| rng.below(n as u64) as Vertex).collect();
    let mut degree = vec![1usize; n];
    for &v in &seq {
        degree[v] += 1;
    }
    let mut leaves: std::collections::BTreeSet<Vertex> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in &seq {
        let leaf = leaves.pop_first().expect("a Prüfer step always has a leaf");
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.insert(v);
        }
    }
    let a = leaves.pop_first().expect("two vertices remain");
    let b = leaves.pop_first().expect("two vertices remain");
    edges.push((a, b));
    Graph::new(n, edges)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneratorConfig {
    pub seed: u64,
    pub n: usize,
    pub edge_probability: f64,
    pub family: FamilySpec,
    pub max_rejections: usize,
}

impl GeneratorConfig {
    pub fn new(seed: u64, n: usize, edge_probability: f64, family: FamilySpec) -> Self {
        GeneratorConfig { seed, n, edge_probability, family, max_rejections: DEFAULT_MAX_REJECTIONS }
    }
}

/// Endless stream of random graphs in the configured family.
///
/// Each attempt draws G(n, p); when the family is bipartite the vertices are
/// first split into two random sides and only cross edges are drawn.
/// Attempts failing the family check are discarded; `max_rejections`
/// consecutive failures end the stream with an error. The result is biased
/// towards graphs that are likely under G(n, p), not uniform on the family.
#[derive(Clone, Debug)]
pub struct RandomGraphs {
    config: GeneratorConfig,
    threshold: u64,
    rng: LabRng,
}

impl RandomGraphs {
    pub fn new(config: GeneratorConfig) -> Result<Self> {
        let threshold = probability_threshold(config.edge_probability)?;
        let rng = LabRng::new(config.seed);
        Ok(RandomGraphs { config, threshold, rng })
    }

    fn attempt(&mut self) -> Graph {
        let n = self.config.n;
        let sides: Option<Vec<bool>> =
            self.config.family.require_bipartite.then(|| (0..n).map(|_| self.rng.coin()).collect());
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if sides.as_ref().is_some_and(|s| s[u] == s[v]) {
                    continue;
                }
                if self.rng.bernoulli(self.threshold) {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(n, edges).expect("generated edges are in range")
    }

    pub fn next_graph(&mut self) -> Result<Graph> {
        for _ in 0..=self.config.max_rejections {
            let g = self.attempt();
            if self.config.family.contains(&g) {
                return Ok(g);
            }
        }
        Err(Error::RejectionCapExceeded(self.config.max_rejections))
    }
}

impl Iterator for RandomGraphs {
    type Item = Result<Graph>;

    fn next(&mut self) -> Option<Result<Graph>> {
        Some(self.next_graph())
    }
}

/// The first graph of [`RandomGraphs`] for `config`.
pub fn random_family_graph(config: &GeneratorConfig) -> Result<Graph> {
    RandomGraphs::new(config.clone())?.next_graph()
}

/// Bipartite graph without C6 grown one edge at a time: vertices get random
/// sides, random cross pairs are proposed, and a pair is kept unless it
/// closes a 6-cycle (a simple path of length 5 between its ends). Stops at
/// `edges` edges or after `DEFAULT_MAX_REJECTIONS` consecutive refusals.
/// Works for sizes far beyond the reach of [`RandomGraphs`].
pub fn grow_bip_c6free(n: usize, edges: usize, seed: u64) -> Result<Graph> {
    let mut rng = LabRng::new(seed);
    let side: Vec<bool> = (0..n).map(|_| rng.coin()).collect();
    let mut adj: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    let mut kept = Vec::with_capacity(edges);
    let mut refusals = 0;
    while kept.len() < edges && refusals <= DEFAULT_MAX_REJECTIONS && n >= 2 {
        let (u, v) = (rng.below(n as u64) as Vertex, rng.below(n as u64) as Vertex);
        if side[u] == side[v] || adj[u].contains(&v) || has_path_of_length(&adj, u, v, 5) {
            refusals += 1;
            continue;
        }
        refusals = 0;
        adj[u].push(v);
        adj[v].push(u);
        kept.push((u, v));
    }
    Graph::new(n, kept)
}

fn has_path_of_length(adj: &[Vec<Vertex>], from: Vertex, to: Vertex, len: usize) -> bool {
    fn walk(adj: &[Vec<Vertex>], at: Vertex, to: Vertex, left: usize, path: &mut Vec<Vertex>) -> bool {
        if left == 0 {
            return at == to;
        }
        for &next in &adj[at] {
            if path.contains(&next) || (next == to && left > 1) {
                continue;
            }
            path.push(next);
            let found = walk(adj, next, to, left - 1, path);
            path.pop();
            if found {
                return true;
            }
        }
        false
    }
    walk(adj, from, to, len, &mut vec![from])
}

/// Random DSAT instance: clauses of 2 or 3 literals over distinct variables,
/// each kept only if the instance still validates as DSAT.
pub fn random_dsat(n_vars: usize, n_clauses: usize, seed: u64) -> Result<CnfInstance> {
    random_dsat_with(n_vars, n_clauses, &mut LabRng::new(seed), DEFAULT_MAX_REJECTIONS)
}

pub fn random_dsat_with(
    n_vars: usize,
    n_clauses: usize,
    rng: &mut LabRng,
    max_rejections: usize,
) -> Result<CnfInstance> {
    if n_clauses > 0 && n_vars < 2 {
        return Err(Error::InvalidParameter("DSAT clauses need at least two variables".into()));
    }
    let mut clauses: Vec<Vec<Literal>> = Vec::with_capacity(n_clauses);
    let mut rejections = 0;
    while clauses.len() < n_clauses {
        let size = if n_vars >= 3 { rng.range(2, 3) } else { 2 };
        let mut vars: Vec<usize> = (1..=n_vars).collect();
        rng.shuffle(&mut vars);
        let clause: Vec<Literal> =
            vars[..size].iter().map(|&v| if rng.coin() { v as Literal } else { -(v as Literal) }).collect();
        clauses.push(clause);
        let candidate = CnfInstance::new(n_vars, clauses.clone(), vec![], CnfKind::Dsat)?;
        if !validate(&candidate, CnfKind::Dsat).is_valid() {
            clauses.pop();
            rejections += 1;
            if rejections > max_rejections {
                return Err(Error::RejectionCapExceeded(max_rejections));
            }
        }
    }
    let out = CnfInstance::new(n_vars, clauses, vec![], CnfKind::Dsat)?;
    validate(&out, CnfKind::Dsat).into_result()?;
    Ok(out)
}

/// Random MONOTONE SAT instance with `m1` all-positive and `m2`
/// all-negative clauses of 1 to 3 distinct variables.
pub fn random_monotone(n_vars: usize, m1: usize, m2: usize, seed: u64) -> Result<CnfInstance> {
    random_monotone_with(n_vars, m1, m2, &mut LabRng::new(seed))
}

pub fn random_monotone_with(n_vars: usize, m1: usize, m2: usize, rng: &mut LabRng) -> Result<CnfInstance> {
    if n_vars == 0 && m1 + m2 > 0 {
        return Err(Error::InvalidParameter("clauses need at least one variable".into()));
    }
    let mut draw = |sign: Literal| -> Vec<Literal> {
        let size = rng.range(1, n_vars.min(3));
        let mut vars: Vec<usize> = (1..=n_vars).collect();
        rng.shuffle(&mut vars);
        vars[..size].iter().map(|&v| sign * v as Literal).collect()
    };
    let c1 = (0..m1).map(|_| draw(1)).collect();
    let c2 = (0..m2).map(|_| draw(-1)).collect();
    let out = CnfInstance::new(n_vars, c1, c2, CnfKind::Monotone)?;
    validate(&out, CnfKind::Monotone).into_result()?;
    Ok(out)
}
