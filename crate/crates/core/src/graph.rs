//! Simple undirected graphs over dense vertex ids and the set primitives the
//! algorithms are phrased in: neighborhoods, distance layers, independence
//! and domination.

use std::cmp::Ordering;
use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// A subset of `0..capacity`, stored as a dense bit set.
///
/// Ordering is lexicographic on the sorted member lists, so `{0,3} < {1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn new(capacity: usize) -> Self {
        VertexSet { bits: FixedBitSet::with_capacity(capacity) }
    }

    pub fn full(capacity: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(capacity);
        bits.insert_range(..);
        VertexSet { bits }
    }

    pub fn singleton(capacity: usize, v: Vertex) -> Self {
        let mut s = Self::new(capacity);
        s.insert(v);
        s
    }

    pub fn from_vertices<I: IntoIterator<Item = Vertex>>(capacity: usize, vertices: I) -> Self {
        let mut s = Self::new(capacity);
        for v in vertices {
            s.insert(v);
        }
        s
    }

    /// Like [`VertexSet::from_vertices`] but rejects ids outside the range.
    pub fn try_from_vertices<I: IntoIterator<Item = Vertex>>(
        capacity: usize,
        vertices: I,
    ) -> Result<Self> {
        let mut s = Self::new(capacity);
        for v in vertices {
            if v >= capacity {
                return Err(Error::VertexOutOfRange { vertex: v, n: capacity });
            }
            s.insert(v);
        }
        Ok(s)
    }

    pub fn capacity(&self) -> usize {
        self.bits.len()
    }

    pub fn insert(&mut self, v: Vertex) {
        self.bits.insert(v);
    }

    pub fn remove(&mut self, v: Vertex) {
        self.bits.set(v, false);
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.bits.contains(v)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }

    pub fn first(&self) -> Option<Vertex> {
        self.bits.minimum()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        VertexSet { bits }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        VertexSet { bits }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        VertexSet { bits }
    }

    pub fn symmetric_difference(&self, other: &VertexSet) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.symmetric_difference_with(&other.bits);
        VertexSet { bits }
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.bits.union_with(&other.bits);
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.bits.intersect_with(&other.bits);
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        self.bits.difference_with(&other.bits);
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    /// True when `self \ other` is nonempty, without allocating.
    pub fn has_element_outside(&self, other: &VertexSet) -> bool {
        self.bits.difference(&other.bits).next().is_some()
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.bits.intersection_count(&other.bits)
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Serializes as the sorted member list.
impl serde::Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_seq(self.iter())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Finite, simple, undirected graph on vertices `0..n`.
///
/// Adjacency is kept twice: as bit sets for O(1) membership and set algebra,
/// and as sorted lists for iteration. Labels are a display side table.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    nbrs: Vec<Vec<Vertex>>,
    labels: BTreeMap<Vertex, String>,
}

impl Graph {
    /// Builds a graph from an edge list. Repeated edges collapse; self-loops
    /// and out-of-range ids are rejected.
    pub fn new<I: IntoIterator<Item = (Vertex, Vertex)>>(n: usize, edges: I) -> Result<Self> {
        let mut adj = vec![VertexSet::new(n); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        let nbrs = adj.iter().map(VertexSet::to_vec).collect();
        Ok(Graph { n, adj, nbrs, labels: BTreeMap::new() })
    }

    pub fn empty(n: usize) -> Self {
        Self::new(n, std::iter::empty()).expect("edgeless graph")
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (i - 1, i))).expect("path")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least 3 vertices");
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle")
    }

    pub fn complete(n: usize) -> Self {
        Self::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("complete")
    }

    /// K_{p,q} with sides `0..p` and `p..p+q`.
    pub fn complete_bipartite(p: usize, q: usize) -> Self {
        Self::new(p + q, (0..p).flat_map(|u| (p..p + q).map(move |v| (u, v))))
            .expect("complete bipartite")
    }

    /// K_{1,k}: center 0, leaves `1..=k`.
    pub fn star(k: usize) -> Self {
        Self::complete_bipartite(1, k)
    }

    pub fn with_labels(mut self, labels: BTreeMap<Vertex, String>) -> Self {
        self.labels = labels;
        self
    }

    pub fn labels(&self) -> &BTreeMap<Vertex, String> {
        &self.labels
    }

    pub fn label(&self, v: Vertex) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    /// Vertex id carrying `label`, if any.
    pub fn vertex_by_label(&self, label: &str) -> Option<Vertex> {
        self.labels.iter().find(|(_, l)| l.as_str() == label).map(|(&v, _)| v)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.nbrs.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.nbrs
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn neighbors(&self, v: Vertex) -> &VertexSet {
        &self.adj[v]
    }

    pub fn neighbor_list(&self, v: Vertex) -> &[Vertex] {
        &self.nbrs[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.nbrs[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].contains(v)
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::new(self.n)
    }

    pub fn set_of<I: IntoIterator<Item = Vertex>>(&self, vertices: I) -> VertexSet {
        VertexSet::from_vertices(self.n, vertices)
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// N[v].
    pub fn closed_neighbors(&self, v: Vertex) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    /// Union of N(v) over `s`. May intersect `s`.
    pub fn neighbors_union(&self, s: &VertexSet) -> VertexSet {
        let mut out = self.empty_set();
        for v in s.iter() {
            out.union_with(&self.adj[v]);
        }
        out
    }

    /// N(S): vertices at distance exactly one from `s`.
    pub fn open_neighborhood(&self, s: &VertexSet) -> VertexSet {
        self.neighbors_union(s).difference(s)
    }

    /// N[S].
    pub fn closed_neighborhood(&self, s: &VertexSet) -> VertexSet {
        self.neighbors_union(s).union(s)
    }

    /// BFS distances from a vertex set; `None` for unreachable vertices.
    pub fn distances_from(&self, s: &VertexSet) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        for v in s.iter() {
            dist[v] = Some(0);
            queue.push_back(v);
        }
        while let Some(u) = queue.pop_front() {
            let du = dist[u].expect("queued vertices have a distance");
            for &w in &self.nbrs[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// N_i(S) (`closed = false`) or N_i[S] (`closed = true`).
    pub fn neighborhood_layer(&self, s: &VertexSet, i: usize, closed: bool) -> Result<VertexSet> {
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        let dist = self.distances_from(s);
        let layer = dist.iter().enumerate().filter_map(|(v, d)| match d {
            Some(d) if *d == i || (closed && *d <= i) => Some(v),
            _ => None,
        });
        Ok(self.set_of(layer))
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    /// `s` dominates `t` when t ⊆ N[s].
    pub fn dominates(&self, s: &VertexSet, t: &VertexSet) -> bool {
        t.is_subset(&self.closed_neighborhood(s))
    }

    /// Independent and no vertex outside can be added.
    pub fn is_maximal_independent(&self, s: &VertexSet) -> bool {
        self.is_independent(s) && self.closed_neighborhood(s).len() == self.n
    }

    /// L(G): the degree-one vertices.
    pub fn leaves(&self) -> VertexSet {
        self.set_of((0..self.n).filter(|&v| self.degree(v) == 1))
    }

    /// S_x = N(x) \ N(L(G)), defined for vertices of degree at least two.
    pub fn s_x(&self, x: Vertex) -> Result<VertexSet> {
        self.check_vertex(x)?;
        if self.degree(x) < 2 {
            return Err(Error::InvalidParameter(format!(
                "S_x is defined only for non-leaf vertices; vertex {x} has degree {}",
                self.degree(x)
            )));
        }
        let near_leaves = self.neighbors_union(&self.leaves());
        Ok(self.adj[x].difference(&near_leaves))
    }

    /// Connected components, each as a sorted vertex list, ordered by their
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for root in 0..self.n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut comp = vec![root];
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                for &w in &self.nbrs[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The subgraph induced on `keep`, relabelled to `0..keep.len()` in
    /// increasing id order. Labels are dropped.
    pub fn induced_subgraph(&self, keep: &[Vertex]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges()
            .filter(|&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|(u, v)| (index[u], index[v]));
        Graph::new(keep.len(), edges).expect("induced subgraph of a valid graph")
    }
}

impl PartialEq for Graph {
    /// Structural equality; labels are ignored.
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
