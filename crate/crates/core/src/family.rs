//! Cycle structure: bipartition, fixed-length cycle search, girth, and the
//! forbidden-cycle families the fast algorithms are restricted to.
//!
//! Forbidden cycles are subgraphs, not induced subgraphs: K4 contains C4.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

pub const MAX_CYCLE_SEARCH: usize = 8;

/// Two-colouring of `g`, colouring the smallest vertex of every component
/// with side 0. `None` when `g` has an odd cycle.
pub fn bipartition(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    match two_colour(g) {
        Ok(colour) => {
            let left = g.set_of((0..g.n()).filter(|&v| !colour[v]));
            let right = g.set_of((0..g.n()).filter(|&v| colour[v]));
            Some((left, right))
        }
        Err(_) => None,
    }
}

/// Some odd cycle of `g`, as a vertex sequence, or `None` if `g` is bipartite.
pub fn find_odd_cycle(g: &Graph) -> Option<Vec<Vertex>> {
    two_colour(g).err()
}

fn two_colour(g: &Graph) -> std::result::Result<Vec<bool>, Vec<Vertex>> {
    let n = g.n();
    let mut colour = vec![false; n];
    let mut seen = vec![false; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbor_list(u) {
                if !seen[w] {
                    seen[w] = true;
                    colour[w] = !colour[u];
                    parent[w] = u;
                    queue.push_back(w);
                } else if colour[w] == colour[u] {
                    return Err(tree_cycle(&parent, u, w));
                }
            }
        }
    }
    Ok(colour)
}

/// Closes the tree paths from `u` and `w` up to their lowest common ancestor
/// with the edge `uw`.
fn tree_cycle(parent: &[usize], u: Vertex, w: Vertex) -> Vec<Vertex> {
    let ancestors = |mut v: Vertex| {
        let mut path = vec![v];
        while parent[v] != usize::MAX {
            v = parent[v];
            path.push(v);
        }
        path
    };
    let up = ancestors(u);
    let wp = ancestors(w);
    let on_w: BTreeSet<Vertex> = wp.iter().copied().collect();
    let lca_pos = up.iter().position(|v| on_w.contains(v)).expect("same BFS tree");
    let lca = up[lca_pos];
    let mut cycle: Vec<Vertex> = up[..=lca_pos].to_vec();
    let w_pos = wp.iter().position(|&v| v == lca).expect("lca on w path");
    cycle.extend(wp[..w_pos].iter().rev());
    cycle
}

/// A (not necessarily induced) cycle on exactly `k` vertices, found by
/// exhaustive search over simple paths rooted at the cycle's smallest vertex.
pub fn find_cycle_of_length(g: &Graph, k: usize) -> Result<Option<Vec<Vertex>>> {
    if !(3..=MAX_CYCLE_SEARCH).contains(&k) {
        return Err(Error::CycleLengthOutOfRange(k));
    }
    let mut on_path = vec![false; g.n()];
    let mut path = Vec::with_capacity(k);
    for start in 0..g.n() {
        if g.degree(start) < 2 {
            continue;
        }
        path.push(start);
        on_path[start] = true;
        let found = extend_path(g, start, k, &mut path, &mut on_path);
        on_path[start] = false;
        if found {
            return Ok(Some(path));
        }
        path.clear();
    }
    Ok(None)
}

fn extend_path(g: &Graph, start: Vertex, k: usize, path: &mut Vec<Vertex>, on_path: &mut [bool]) -> bool {
    let last = *path.last().expect("path starts at start");
    if path.len() == k {
        return g.has_edge(last, start);
    }
    for &next in g.neighbor_list(last) {
        if next <= start || on_path[next] {
            continue;
        }
        // the final vertex must close back to the root
        if path.len() + 1 == k && !g.has_edge(next, start) {
            continue;
        }
        path.push(next);
        on_path[next] = true;
        if extend_path(g, start, k, path, on_path) {
            return true;
        }
        on_path[next] = false;
        path.pop();
    }
    false
}

pub fn contains_cycle_of_length(g: &Graph, k: usize) -> Result<bool> {
    Ok(find_cycle_of_length(g, k)?.is_some())
}

/// Length of a shortest cycle, `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    shortest_cycle(g).map(|c| c.len())
}

/// A shortest cycle of `g`, via BFS from every vertex.
pub fn shortest_cycle(g: &Graph) -> Option<Vec<Vertex>> {
    let n = g.n();
    let mut best: Option<(usize, Vertex)> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        if let Some(len) = bfs_cycle(g, root, &mut dist, &mut parent, best.map(|b| b.0)).map(|c| c.0) {
            if best.is_none_or(|(b, _)| len < b) {
                best = Some((len, root));
            }
        }
    }
    let (_, root) = best?;
    let (_, u, w) = bfs_cycle(g, root, &mut dist, &mut parent, None).expect("cycle through root");
    let mut cycle = Vec::new();
    let mut v = u;
    while v != usize::MAX {
        cycle.push(v);
        v = parent[v];
    }
    cycle.reverse();
    let mut v = w;
    while v != root {
        cycle.push(v);
        v = parent[v];
    }
    Some(cycle)
}

/// Shortest closed walk through `root` seen by BFS, as (length, u, w) where
/// `uw` is the non-tree edge closing it.
fn bfs_cycle(
    g: &Graph,
    root: Vertex,
    dist: &mut [usize],
    parent: &mut [usize],
    bound: Option<usize>,
) -> Option<(usize, Vertex, Vertex)> {
    dist.fill(usize::MAX);
    parent.fill(usize::MAX);
    dist[root] = 0;
    let mut queue = VecDeque::from([root]);
    let mut best: Option<(usize, Vertex, Vertex)> = None;
    while let Some(u) = queue.pop_front() {
        if let Some(b) = best.map(|b| b.0).or(bound) {
            if 2 * dist[u] + 1 >= b {
                break;
            }
        }
        for &w in g.neighbor_list(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                queue.push_back(w);
            } else if parent[u] != w {
                let len = dist[u] + dist[w] + 1;
                if best.is_none_or(|b| len < b.0) {
                    best = Some((len, u, w));
                }
            }
        }
    }
    best
}

/// Side conditions a graph must satisfy: a set of forbidden cycle lengths,
/// optional bipartiteness, optional lower bound on the girth.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub forbidden_cycle_lengths: BTreeSet<usize>,
    pub require_bipartite: bool,
    pub min_girth: Option<usize>,
}

impl FamilySpec {
    pub fn new<I: IntoIterator<Item = usize>>(
        forbidden: I,
        require_bipartite: bool,
        min_girth: Option<usize>,
    ) -> Result<Self> {
        let forbidden_cycle_lengths: BTreeSet<usize> = forbidden.into_iter().collect();
        if let Some(&k) = forbidden_cycle_lengths.iter().find(|&&k| !(3..=MAX_CYCLE_SEARCH).contains(&k)) {
            return Err(Error::InvalidFamily(format!("forbidden cycle length {k} outside 3..=8")));
        }
        if let Some(m) = min_girth {
            if m < 3 {
                return Err(Error::InvalidFamily(format!("minimum girth {m} below 3")));
            }
        }
        Ok(FamilySpec { forbidden_cycle_lengths, require_bipartite, min_girth })
    }

    /// No constraints.
    pub fn any() -> Self {
        Self::default()
    }

    /// Bipartite graphs without (not necessarily induced) 6-cycles.
    pub fn bipartite_c6_free() -> Self {
        Self::new([6], true, None).expect("static family")
    }

    /// Graphs without cycles of lengths 3, 4, 5 and 7.
    pub fn c3457_free() -> Self {
        Self::new([3, 4, 5, 7], false, None).expect("static family")
    }

    /// Bipartite graphs of girth at least 6.
    pub fn bipartite_girth6() -> Self {
        Self::new([], true, Some(6)).expect("static family")
    }

    /// Graphs without cycles of lengths 3 and 5.
    pub fn c35_free() -> Self {
        Self::new([3, 5], false, None).expect("static family")
    }

    pub fn is_unconstrained(&self) -> bool {
        self.forbidden_cycle_lengths.is_empty() && !self.require_bipartite && self.min_girth.is_none()
    }

    pub fn validate(&self, g: &Graph) -> FamilyReport {
        validate_family(g, self)
    }

    /// Whether every member is bipartite without 6-cycles.
    pub fn implies_bipartite_c6_free(&self) -> bool {
        self.require_bipartite
            && (self.forbidden_cycle_lengths.contains(&6) || self.min_girth.is_some_and(|m| m > 6))
    }

    /// Whether every member avoids cycles of lengths 3, 4, 5 and 7.
    pub fn implies_c3457_free(&self) -> bool {
        let no = |k: usize| {
            self.forbidden_cycle_lengths.contains(&k)
                || self.min_girth.is_some_and(|m| m > k)
                || (self.require_bipartite && k % 2 == 1)
        };
        [3, 4, 5, 7].into_iter().all(no)
    }

    pub fn contains(&self, g: &Graph) -> bool {
        // cheap checks first, without building exhibits for every condition
        if self.require_bipartite && find_odd_cycle(g).is_some() {
            return false;
        }
        if let Some(m) = self.min_girth {
            if girth(g).is_some_and(|gi| gi < m) {
                return false;
            }
        }
        self.forbidden_cycle_lengths
            .iter()
            .all(|&k| !contains_cycle_of_length(g, k).expect("lengths validated on construction"))
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Named families: `any`, `bip-c6free`, `c3457free`, `bip-girth6`,
    /// `c35free`, or an explicit `no-C4,C5[,bipartite][,girth>=6]` list.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "any" => return Ok(Self::any()),
            "bip-c6free" => return Ok(Self::bipartite_c6_free()),
            "c3457free" => return Ok(Self::c3457_free()),
            "bip-girth6" => return Ok(Self::bipartite_girth6()),
            "c35free" => return Ok(Self::c35_free()),
            _ => {}
        }
        let mut forbidden = Vec::new();
        let mut bipartite = false;
        let mut min_girth = None;
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let part = part.strip_prefix("no-").unwrap_or(part);
            if part == "bipartite" {
                bipartite = true;
            } else if let Some(m) = part.strip_prefix("girth>=") {
                min_girth = Some(m.parse().map_err(|_| Error::InvalidFamily(s.to_string()))?);
            } else if let Some(k) = part.strip_prefix('C').or_else(|| part.strip_prefix('c')) {
                forbidden.push(k.parse().map_err(|_| Error::InvalidFamily(s.to_string()))?);
            } else {
                return Err(Error::InvalidFamily(s.to_string()));
            }
        }
        Self::new(forbidden, bipartite, min_girth)
    }
}

/// Prints the list form accepted by `FromStr`, or `any`.
impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.forbidden_cycle_lengths.iter().map(|k| format!("C{k}")).collect();
        if self.require_bipartite {
            parts.push("bipartite".into());
        }
        if let Some(m) = self.min_girth {
            parts.push(format!("girth>={m}"));
        }
        if parts.is_empty() {
            write!(f, "any")
        } else {
            write!(f, "no-{}", parts.join(","))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    ForbiddenCycle { length: usize, cycle: Vec<Vertex> },
    OddCycle { cycle: Vec<Vertex> },
    GirthTooSmall { girth: usize, min_girth: usize, cycle: Vec<Vertex> },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ForbiddenCycle { length, cycle } => write!(f, "{length}-cycle {cycle:?}"),
            Violation::OddCycle { cycle } => write!(f, "odd cycle {cycle:?}"),
            Violation::GirthTooSmall { girth, min_girth, cycle } => {
                write!(f, "girth {girth} < {min_girth}, cycle {cycle:?}")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub violations: Vec<Violation>,
}

impl FamilyReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn into_result(self) -> Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(Error::FamilyViolation(self))
        }
    }
}

impl fmt::Display for FamilyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Every violated condition of `spec`, each with an offending cycle.
pub fn validate_family(g: &Graph, spec: &FamilySpec) -> FamilyReport {
    let mut violations = Vec::new();
    for &k in &spec.forbidden_cycle_lengths {
        if let Some(cycle) = find_cycle_of_length(g, k).expect("lengths validated on construction") {
            violations.push(Violation::ForbiddenCycle { length: k, cycle });
        }
    }
    if spec.require_bipartite {
        if let Some(cycle) = find_odd_cycle(g) {
            violations.push(Violation::OddCycle { cycle });
        }
    }
    if let Some(min_girth) = spec.min_girth {
        if let Some(cycle) = shortest_cycle(g) {
            if cycle.len() < min_girth {
                violations.push(Violation::GirthTooSmall { girth: cycle.len(), min_girth, cycle });
            }
        }
    }
    FamilyReport { violations }
}
