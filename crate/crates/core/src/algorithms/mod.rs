//! Polynomial algorithms for bipartite graphs without 6-cycles, and the
//! leaf characterization of WCW for graphs without 3-, 4-, 5- and 7-cycles.
//!
//! The fast routines are only correct inside their family. [`BipC6Free`]
//! validates the family once and then runs any number of queries; the free
//! functions validate on every call.

mod decomposition;
mod leaf;

pub use decomposition::NeighborhoodDecomposition;
pub use leaf::{wcw_leaf_characterization, wcw_leaf_characterization_unchecked, LeafProfile};

use rayon::prelude::*;

use crate::biclique::InducedCompleteBipartite;
use crate::error::{Error, Result};
use crate::family::{validate_family, FamilySpec};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::oracles::{generating_oracle, OracleLimits};
use crate::weightspace::{ConstraintSystem, LinearConstraint};

/// A graph known to be bipartite with no 6-cycle.
#[derive(Clone, Copy, Debug)]
pub struct BipC6Free<'g> {
    g: &'g Graph,
}

impl<'g> BipC6Free<'g> {
    pub fn new(g: &'g Graph) -> Result<Self> {
        validate_family(g, &FamilySpec::bipartite_c6_free()).into_result()?;
        Ok(BipC6Free { g })
    }

    /// Skips validation. Results on graphs outside the family are
    /// meaningless but the calls stay memory-safe and terminate.
    pub fn new_unchecked(g: &'g Graph) -> Self {
        BipC6Free { g }
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    /// B is generating iff N_2(V(B)) dominates N(V(B)) \ V(B).
    pub fn generating(&self, b: &InducedCompleteBipartite) -> bool {
        let g = self.g;
        let vb = b.vertices();
        let d = g.neighbors_union(&vb);
        let d1 = d.difference(&vb);
        for v in d1.iter() {
            if !g.neighbors(v).has_element_outside(&d) {
                return false;
            }
        }
        true
    }

    /// The maximal T ⊆ N(x) with G[{x} ∪ T] generating, or ∅.
    ///
    /// ∅ also stands for "no such set". Any y whose A = N(y) \ {x} is
    /// dominated from outside N(x) would have been included, so nothing is
    /// lost.
    pub fn maxgen1(&self, x: Vertex) -> Result<VertexSet> {
        let g = self.g;
        g.check_vertex(x)?;
        let nx = g.neighbors(x);
        let mut t = g.empty_set();
        for &y in g.neighbor_list(x) {
            let mut flag = true;
            for &a in g.neighbor_list(y) {
                if a == x {
                    continue;
                }
                if !g.neighbors(a).has_element_outside(nx) {
                    flag = false;
                    break;
                }
            }
            if flag {
                t.insert(y);
            }
        }
        Ok(t)
    }

    /// The maximal T ⊆ N(x1) ∩ N(x2) with |T| ≥ 2 and
    /// G[{x1, x2} ∪ T] generating, or ∅.
    pub fn maxgen2(&self, x1: Vertex, x2: Vertex) -> Result<VertexSet> {
        let g = self.g;
        g.check_vertex(x1)?;
        g.check_vertex(x2)?;
        if x1 == x2 {
            return Err(Error::SameVertex(x1));
        }
        Ok(self.maxgen2_inner(x1, x2))
    }

    fn maxgen2_inner(&self, x1: Vertex, x2: Vertex) -> VertexSet {
        let g = self.g;
        let (n1, n2) = (g.neighbors(x1), g.neighbors(x2));
        if n1.intersection_len(n2) < 2 {
            return g.empty_set();
        }
        let x = g.set_of([x1, x2]);
        let y = n1.intersection(n2);
        for s in n1.symmetric_difference(n2).iter() {
            if !g.neighbors(s).has_element_outside(&x) {
                return g.empty_set();
            }
        }
        let mut t = g.empty_set();
        for yv in y.iter() {
            let mut flag = true;
            for &a in g.neighbor_list(yv) {
                if x.contains(a) {
                    continue;
                }
                if !g.neighbors(a).has_element_outside(&y) {
                    flag = false;
                    break;
                }
            }
            if flag {
                t.insert(yv);
            }
        }
        if t.len() < 2 {
            return g.empty_set();
        }
        t
    }

    /// A constraint system whose solution space is WCW(G).
    /// Emission order is by vertex, then by ordered pair; the pair loop runs
    /// in parallel and is merged back in order.
    pub fn wcw(&self) -> ConstraintSystem {
        let g = self.g;
        let n = g.n();
        let mut sys = ConstraintSystem::new(n);
        let mut push = |c: Option<LinearConstraint>| {
            sys.push(c).expect("constraints stay within the vertex range");
        };
        for v in 0..n {
            let t = self.maxgen1(v).expect("vertex in range");
            if !t.is_empty() {
                push(LinearConstraint::equal_weights(&t, &g.set_of([v])));
            }
            if t.len() >= 2 {
                let only_v = g.set_of([v]);
                for tv in t.iter() {
                    if g.neighbors(tv) != &only_v {
                        push(Some(LinearConstraint::zero_weight(tv)));
                    }
                }
            }
        }
        let per_v1: Vec<Vec<Option<LinearConstraint>>> = (0..n)
            .into_par_iter()
            .map(|v1| {
                let mut out = Vec::new();
                for v2 in (0..n).filter(|&v2| v2 != v1) {
                    let t = self.maxgen2_inner(v1, v2);
                    if t.len() >= 2 {
                        let pair = g.set_of([v1, v2]);
                        out.push(LinearConstraint::equal_weights(&t, &pair));
                        for tv in t.iter() {
                            if g.neighbors(tv) != &pair {
                                out.push(Some(LinearConstraint::zero_weight(tv)));
                            }
                        }
                    }
                }
                out
            })
            .collect();
        for c in per_v1.into_iter().flatten() {
            push(c);
        }
        sys
    }

    /// Whether G is well-covered.
    pub fn well_covered(&self) -> bool {
        let g = self.g;
        let n = g.n();
        for v in 0..n {
            if self.maxgen1(v).expect("vertex in range").len() > 1 {
                return false;
            }
        }
        for v1 in 0..n {
            for v2 in (0..n).filter(|&v2| v2 != v1) {
                let t = self.maxgen2_inner(v1, v2);
                if t.len() > 2 {
                    return false;
                }
                if t.len() == 2 {
                    let pair = g.set_of([v1, v2]);
                    if t.iter().any(|tv| g.neighbors(tv) != &pair) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

pub fn generating_bip_c6free(g: &Graph, b: &InducedCompleteBipartite) -> Result<bool> {
    Ok(BipC6Free::new(g)?.generating(b))
}

pub fn maxgen1(g: &Graph, x: Vertex) -> Result<VertexSet> {
    BipC6Free::new(g)?.maxgen1(x)
}

pub fn maxgen2(g: &Graph, x1: Vertex, x2: Vertex) -> Result<VertexSet> {
    BipC6Free::new(g)?.maxgen2(x1, x2)
}

pub fn wcw_bip_c6free(g: &Graph) -> Result<ConstraintSystem> {
    Ok(BipC6Free::new(g)?.wcw())
}

pub fn well_covered_bip_c6free(g: &Graph) -> Result<bool> {
    Ok(BipC6Free::new(g)?.well_covered())
}

/// Whether uv is a relating edge, i.e. B = ({u}, {v}) is generating. Uses
/// The generating check inside its family and the oracle elsewhere.
pub fn relating_edge(g: &Graph, u: Vertex, v: Vertex, limits: &OracleLimits) -> Result<bool> {
    let b = InducedCompleteBipartite::edge(g, u, v)?;
    if FamilySpec::bipartite_c6_free().contains(g) {
        Ok(BipC6Free::new_unchecked(g).generating(&b))
    } else {
        Ok(generating_oracle(g, &b, limits)?.is_some())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::wcw_oracle;
    use crate::weightspace::{nullspace, spaces_equal};

    fn p4() -> Graph {
        Graph::path(4)
    }

    fn b(g: &Graph, bx: &[Vertex], by: &[Vertex]) -> InducedCompleteBipartite {
        InducedCompleteBipartite::from_lists(g, bx, by).unwrap()
    }

    #[test]
    fn algorithm1_examples() {
        let g = p4();
        assert!(generating_bip_c6free(&g, &b(&g, &[0], &[1])).unwrap());
        assert!(!generating_bip_c6free(&g, &b(&g, &[1], &[2])).unwrap());
        let k2 = Graph::path(2);
        assert!(generating_bip_c6free(&k2, &b(&k2, &[0], &[1])).unwrap());
    }

    #[test]
    fn family_is_enforced() {
        let c6 = Graph::cycle(6);
        assert!(matches!(wcw_bip_c6free(&c6), Err(Error::FamilyViolation(_))));
        let k3 = Graph::complete(3);
        assert!(matches!(maxgen1(&k3, 0), Err(Error::FamilyViolation(_))));
    }

    #[test]
    fn maxgen1_examples() {
        let g = p4();
        assert_eq!(maxgen1(&g, 1).unwrap().to_vec(), vec![0]);
        assert_eq!(maxgen1(&g, 0).unwrap().to_vec(), vec![1]);
        assert!(maxgen1(&Graph::cycle(4), 0).unwrap().is_empty());
    }

    #[test]
    fn maxgen2_examples() {
        assert_eq!(maxgen2(&Graph::cycle(4), 0, 2).unwrap().to_vec(), vec![1, 3]);
        assert!(maxgen2(&p4(), 0, 2).unwrap().is_empty());
        assert!(matches!(maxgen2(&p4(), 1, 1), Err(Error::SameVertex(1))));
    }

    #[test]
    fn wcw_examples() {
        let lim = OracleLimits::default();
        for (g, dim) in [(p4(), 2), (Graph::cycle(4), 3), (Graph::star(3), 3)] {
            let sys = wcw_bip_c6free(&g).unwrap();
            assert_eq!(nullspace(&sys).dimension(), dim);
            assert!(spaces_equal(&sys, &wcw_oracle(&g, &lim).unwrap()).unwrap());
        }
        assert!(wcw_bip_c6free(&Graph::cycle(4)).unwrap().constraints().len() == 1);
    }

    #[test]
    fn well_covered_examples() {
        assert!(well_covered_bip_c6free(&Graph::cycle(4)).unwrap());
        assert!(!well_covered_bip_c6free(&Graph::star(3)).unwrap());
        assert!(well_covered_bip_c6free(&p4()).unwrap());
    }

    #[test]
    fn relating_edge_examples() {
        let lim = OracleLimits::default();
        assert!(relating_edge(&p4(), 0, 1, &lim).unwrap());
        assert!(!relating_edge(&p4(), 1, 2, &lim).unwrap());
        assert!(relating_edge(&Graph::path(2), 0, 1, &lim).unwrap());
        assert!(matches!(relating_edge(&p4(), 0, 2, &lim), Err(Error::NotAnEdge(0, 2))));
        // outside the family the oracle answers
        let c6 = Graph::cycle(6);
        assert!(!relating_edge(&c6, 0, 1, &lim).unwrap());
    }
}
