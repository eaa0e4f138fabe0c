use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// An induced complete bipartite subgraph B with sides B_X and B_Y.
///
/// Construction goes through [`InducedCompleteBipartite::new`], which checks
/// the sides against the graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedCompleteBipartite {
    bx: VertexSet,
    by: VertexSet,
}

impl InducedCompleteBipartite {
    pub fn new(g: &Graph, bx: VertexSet, by: VertexSet) -> Result<Self> {
        if let Some(reason) = biclique_defect(g, &bx, &by) {
            return Err(Error::InvalidBipartite(reason));
        }
        Ok(InducedCompleteBipartite { bx, by })
    }

    pub fn from_lists(g: &Graph, bx: &[Vertex], by: &[Vertex]) -> Result<Self> {
        let bx = VertexSet::try_from_vertices(g.n(), bx.iter().copied())?;
        let by = VertexSet::try_from_vertices(g.n(), by.iter().copied())?;
        Self::new(g, bx, by)
    }

    /// The K_{1,1} on an edge.
    pub fn edge(g: &Graph, u: Vertex, v: Vertex) -> Result<Self> {
        g.check_vertex(u)?;
        g.check_vertex(v)?;
        if !g.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        Self::from_lists(g, &[u], &[v])
    }

    pub fn bx(&self) -> &VertexSet {
        &self.bx
    }

    pub fn by(&self) -> &VertexSet {
        &self.by
    }

    /// V(B) = B_X ∪ B_Y.
    pub fn vertices(&self) -> VertexSet {
        self.bx.union(&self.by)
    }

    pub fn swapped(&self) -> Self {
        InducedCompleteBipartite { bx: self.by.clone(), by: self.bx.clone() }
    }
}

/// Serialized form `{"bx": [...], "by": [...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BicliqueSides {
    pub bx: Vec<Vertex>,
    pub by: Vec<Vertex>,
}

impl From<&InducedCompleteBipartite> for BicliqueSides {
    fn from(b: &InducedCompleteBipartite) -> Self {
        BicliqueSides { bx: b.bx.to_vec(), by: b.by.to_vec() }
    }
}

pub fn is_induced_complete_bipartite(g: &Graph, bx: &VertexSet, by: &VertexSet) -> bool {
    biclique_defect(g, bx, by).is_none()
}

fn biclique_defect(g: &Graph, bx: &VertexSet, by: &VertexSet) -> Option<String> {
    if bx.capacity() != g.n() || by.capacity() != g.n() {
        return Some("side sets are sized for a different graph".into());
    }
    if bx.is_empty() || by.is_empty() {
        return Some("both sides must be nonempty".into());
    }
    if !bx.is_disjoint(by) {
        return Some(format!("sides share {:?}", bx.intersection(by)));
    }
    if !g.is_independent(bx) {
        return Some(format!("B_X {bx:?} is not independent"));
    }
    if !g.is_independent(by) {
        return Some(format!("B_Y {by:?} is not independent"));
    }
    for x in bx.iter() {
        if !by.is_subset(g.neighbors(x)) {
            let missing = by.difference(g.neighbors(x));
            return Some(format!("{x} is not adjacent to {missing:?}"));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let p4 = Graph::path(4);
        assert!(is_induced_complete_bipartite(&p4, &p4.set_of([0]), &p4.set_of([1])));
        let c4 = Graph::cycle(4);
        assert!(is_induced_complete_bipartite(&c4, &c4.set_of([0, 2]), &c4.set_of([1, 3])));
        // b-c adjacent, so B_Y is not independent
        assert!(!is_induced_complete_bipartite(&p4, &p4.set_of([0]), &p4.set_of([1, 2])));
    }

    #[test]
    fn rejects_degenerate_sides() {
        let p4 = Graph::path(4);
        assert!(InducedCompleteBipartite::from_lists(&p4, &[], &[1]).is_err());
        assert!(InducedCompleteBipartite::from_lists(&p4, &[1], &[1]).is_err());
        assert!(InducedCompleteBipartite::from_lists(&p4, &[0], &[2]).is_err());
        assert!(InducedCompleteBipartite::from_lists(&p4, &[0], &[9]).is_err());
        assert!(matches!(InducedCompleteBipartite::edge(&p4, 0, 2), Err(Error::NotAnEdge(0, 2))));
    }
}
