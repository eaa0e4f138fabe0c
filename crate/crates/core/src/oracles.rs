//! Exponential-time reference implementations. Everything here follows the
//! definitions directly (enumerate, then check) and is what the fast
//! algorithms are tested against.

use crate::biclique::InducedCompleteBipartite;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::sat::{Assignment, CnfInstance};
use crate::weightspace::{ConstraintSystem, LinearConstraint};

pub const DEFAULT_MAX_VERTICES: usize = 24;
pub const DEFAULT_MAX_VARS: usize = 24;
pub const ENV_MAX_VERTICES: &str = "WELLCOVER_ORACLE_MAX_VERTICES";
pub const ENV_MAX_VARS: &str = "WELLCOVER_ORACLE_MAX_VARS";

/// Size caps for brute-force work. Exceeding one is an error rather than a
/// hang.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    /// Largest vertex count whose maximal independent sets are enumerated.
    pub max_vertices: usize,
    /// Largest variable count searched by [`sat_bruteforce`].
    pub max_vars: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits { max_vertices: DEFAULT_MAX_VERTICES, max_vars: DEFAULT_MAX_VARS }
    }
}

impl OracleLimits {
    /// Defaults, overridden by `WELLCOVER_ORACLE_MAX_VERTICES` and
    /// `WELLCOVER_ORACLE_MAX_VARS` when set to integers.
    pub fn from_env() -> Self {
        Self::default().with_env()
    }

    /// `self`, with each cap replaced by its environment variable when set.
    pub fn with_env(self) -> Self {
        let read = |key: &str, default: usize| {
            std::env::var(key).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(default)
        };
        OracleLimits {
            max_vertices: read(ENV_MAX_VERTICES, self.max_vertices),
            max_vars: read(ENV_MAX_VARS, self.max_vars),
        }
    }

    /// Vertex cap raised to 64 for the residual graphs searched when
    /// checking reduction outputs. Those graphs are sparse and have few
    /// maximal independent sets compared with their size.
    pub fn for_reductions() -> Self {
        OracleLimits { max_vertices: 64, ..Self::default() }
    }

    fn check_vertices(&self, size: usize) -> Result<()> {
        if size > self.max_vertices {
            Err(Error::CapExceeded { what: "vertex set", size, cap: self.max_vertices })
        } else {
            Ok(())
        }
    }
}

/// All maximal independent sets of a graph, in lexicographic order.
#[derive(Clone, Debug)]
pub struct MisEnumeration {
    pub sets: Vec<VertexSet>,
}

impl MisEnumeration {
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn sizes(&self) -> impl Iterator<Item = usize> + '_ {
        self.sets.iter().map(VertexSet::len)
    }
}

pub fn enumerate_mis(g: &Graph, limits: &OracleLimits) -> Result<MisEnumeration> {
    limits.check_vertices(g.n())?;
    Ok(MisEnumeration { sets: maximal_independent_sets_within(g, &g.vertex_set()) })
}

/// Maximal independent sets of the induced subgraph G[allowed], as subsets
/// of V(G). No cap check.
///
/// Bron–Kerbosch with pivoting on the complement: cliques of the complement
/// are independent sets of `g`, and the complement neighborhood of `v`
/// within `allowed` is `allowed \ N[v]`.
pub fn maximal_independent_sets_within(g: &Graph, allowed: &VertexSet) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let mut current = g.empty_set();
    bron_kerbosch(g, &mut current, allowed.clone(), g.empty_set(), &mut out);
    out.sort();
    out
}

fn bron_kerbosch(
    g: &Graph,
    current: &mut VertexSet,
    mut candidates: VertexSet,
    mut excluded: VertexSet,
    out: &mut Vec<VertexSet>,
) {
    if candidates.is_empty() {
        if excluded.is_empty() {
            out.push(current.clone());
        }
        return;
    }
    // pivot: the vertex leaving the fewest candidates inside its closed
    // neighborhood, since only those need branching
    let pivot = candidates
        .iter()
        .chain(excluded.iter())
        .min_by_key(|&u| candidates.intersection_len(&g.closed_neighbors(u)))
        .expect("candidates nonempty");
    let branch = candidates.intersection(&g.closed_neighbors(pivot));
    for v in branch.iter() {
        let closed = g.closed_neighbors(v);
        current.insert(v);
        bron_kerbosch(g, current, candidates.difference(&closed), excluded.difference(&closed), out);
        current.remove(v);
        candidates.remove(v);
        excluded.insert(v);
    }
}

/// Every maximal independent set has the same size.
pub fn is_well_covered_oracle(g: &Graph, limits: &OracleLimits) -> Result<bool> {
    let mis = enumerate_mis(g, limits)?;
    let mut sizes = mis.sizes();
    let first = sizes.next();
    Ok(sizes.all(|s| Some(s) == first))
}

/// `{w(M_i) − w(M_1) = 0}` over the maximal independent sets M_1 < M_2 < ...
/// Its solution space is exactly WCW(G).
pub fn wcw_oracle(g: &Graph, limits: &OracleLimits) -> Result<ConstraintSystem> {
    let mis = enumerate_mis(g, limits)?;
    let mut sys = ConstraintSystem::new(g.n());
    if let Some((first, rest)) = mis.sets.split_first() {
        for m in rest {
            sys.push(LinearConstraint::equal_weights(m, first))?;
        }
    }
    Ok(sys)
}

/// Proof that B is generating: an independent set S such that S ∪ B_X and
/// S ∪ B_Y are both maximal independent sets of G.
#[derive(Clone, Debug)]
pub struct WitnessCertificate {
    pub b: InducedCompleteBipartite,
    pub s: VertexSet,
    pub m_x: VertexSet,
    pub m_y: VertexSet,
}

impl WitnessCertificate {
    /// Re-checks the certificate against `g` from scratch.
    pub fn verify(&self, g: &Graph) -> bool {
        let closed_b = g.closed_neighborhood(&self.b.vertices());
        g.is_independent(&self.s)
            && self.s.is_disjoint(&closed_b)
            && self.m_x == self.s.union(self.b.bx())
            && self.m_y == self.s.union(self.b.by())
            && g.is_maximal_independent(&self.m_x)
            && g.is_maximal_independent(&self.m_y)
    }
}

/// Searches for a witness that `b` is generating.
///
/// A witness S is disjoint from N[V(B)]: S ∪ B_X independent keeps S off
/// N[B_X], S ∪ B_Y independent keeps it off N[B_Y]. It is moreover a
/// *maximal* independent set of H = G \ N[V(B)]: a vertex h of H with no
/// neighbor in S has none in B_X either, so S ∪ B_X ∪ {h} would be
/// independent. Hence enumerating the maximal independent sets of H covers
/// every candidate, and S works iff it dominates (N(B_X) Δ N(B_Y)) \ V(B).
/// The cap applies to |V(H)|.
pub fn generating_oracle(
    g: &Graph,
    b: &InducedCompleteBipartite,
    limits: &OracleLimits,
) -> Result<Option<WitnessCertificate>> {
    let vb = b.vertices();
    let residual = g.vertex_set().difference(&g.closed_neighborhood(&vb));
    limits.check_vertices(residual.len())?;
    for s in maximal_independent_sets_within(g, &residual) {
        let m_x = s.union(b.bx());
        let m_y = s.union(b.by());
        if g.is_maximal_independent(&m_x) && g.is_maximal_independent(&m_y) {
            return Ok(Some(WitnessCertificate { b: b.clone(), s, m_x, m_y }));
        }
    }
    Ok(None)
}

/// First satisfying assignment in lexicographic order of (x_1, ..., x_n),
/// x_1 most significant.
pub fn sat_bruteforce(inst: &CnfInstance, limits: &OracleLimits) -> Result<Option<Assignment>> {
    let n = inst.n_vars();
    if n > limits.max_vars {
        return Err(Error::CapExceeded { what: "variable count", size: n, cap: limits.max_vars });
    }
    for pattern in 0u64..(1u64 << n) {
        let values: Vec<bool> = (0..n).map(|i| pattern >> (n - 1 - i) & 1 == 1).collect();
        let a = Assignment::new(values);
        if inst.is_satisfied_by(&a) {
            return Ok(Some(a));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sat::{CnfInstance, CnfKind};
    use crate::weightspace::{int, nullspace, uniform};

    fn lim() -> OracleLimits {
        OracleLimits::default()
    }

    fn lists(m: &MisEnumeration) -> Vec<Vec<usize>> {
        m.sets.iter().map(VertexSet::to_vec).collect()
    }

    #[test]
    fn mis_of_c6() {
        let m = enumerate_mis(&Graph::cycle(6), &lim()).unwrap();
        assert_eq!(lists(&m), vec![vec![0, 2, 4], vec![0, 3], vec![1, 3, 5], vec![1, 4], vec![2, 5]]);
    }

    #[test]
    fn mis_small_cases() {
        assert_eq!(lists(&enumerate_mis(&Graph::path(2), &lim()).unwrap()), vec![vec![0], vec![1]]);
        assert_eq!(lists(&enumerate_mis(&Graph::empty(3), &lim()).unwrap()), vec![vec![0, 1, 2]]);
        assert_eq!(lists(&enumerate_mis(&Graph::empty(0), &lim()).unwrap()), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn mis_cap() {
        let small = OracleLimits { max_vertices: 3, ..lim() };
        assert!(matches!(enumerate_mis(&Graph::path(4), &small), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn well_covered_examples() {
        assert!(is_well_covered_oracle(&Graph::cycle(4), &lim()).unwrap());
        assert!(!is_well_covered_oracle(&Graph::star(3), &lim()).unwrap());
        assert!(is_well_covered_oracle(&Graph::path(2), &lim()).unwrap());
    }

    #[test]
    fn wcw_examples() {
        let p4 = wcw_oracle(&Graph::path(4), &lim()).unwrap();
        let b = nullspace(&p4);
        assert_eq!(b.dimension(), 2);
        assert!(p4.is_satisfied_by(&[int(1), int(1), int(2), int(2)]));
        assert!(!p4.is_satisfied_by(&[int(1), int(2), int(2), int(2)]));

        let c6 = wcw_oracle(&Graph::cycle(6), &lim()).unwrap();
        assert_eq!(nullspace(&c6).dimension(), 2);
        let w: Vec<_> = [1, 1, 0, -1, -1, 0].iter().map(|&x| int(x)).collect();
        assert!(c6.is_satisfied_by(&w));

        assert_eq!(nullspace(&wcw_oracle(&Graph::empty(1), &lim()).unwrap()).dimension(), 1);
    }

    #[test]
    fn uniform_weight_iff_well_covered() {
        for g in [Graph::cycle(4), Graph::star(3), Graph::path(4), Graph::cycle(5), Graph::path(5)] {
            let sys = wcw_oracle(&g, &lim()).unwrap();
            assert_eq!(sys.is_satisfied_by(&uniform(g.n(), 1)), is_well_covered_oracle(&g, &lim()).unwrap());
        }
    }

    #[test]
    fn generating_examples() {
        let p4 = Graph::path(4);
        let ab = InducedCompleteBipartite::from_lists(&p4, &[0], &[1]).unwrap();
        let cert = generating_oracle(&p4, &ab, &lim()).unwrap().unwrap();
        assert_eq!(cert.s.to_vec(), vec![3]);
        assert!(cert.verify(&p4));

        let bc = InducedCompleteBipartite::from_lists(&p4, &[1], &[2]).unwrap();
        assert!(generating_oracle(&p4, &bc, &lim()).unwrap().is_none());

        let c6 = Graph::cycle(6);
        let b = InducedCompleteBipartite::from_lists(&c6, &[0], &[1, 5]).unwrap();
        let cert = generating_oracle(&c6, &b, &lim()).unwrap().unwrap();
        assert_eq!(cert.s.to_vec(), vec![3]);
        assert_eq!(cert.m_y.to_vec(), vec![1, 3, 5]);
    }

    #[test]
    fn sat_examples() {
        let one = CnfInstance::new(1, vec![vec![1]], vec![], CnfKind::Generic).unwrap();
        assert_eq!(sat_bruteforce(&one, &lim()).unwrap().unwrap().values(), &[true]);
        let contra = CnfInstance::new(1, vec![vec![1], vec![-1]], vec![], CnfKind::Generic).unwrap();
        assert!(sat_bruteforce(&contra, &lim()).unwrap().is_none());
        let empty = CnfInstance::new(3, vec![], vec![], CnfKind::Generic).unwrap();
        assert_eq!(sat_bruteforce(&empty, &lim()).unwrap().unwrap().values(), &[false, false, false]);
        let big = CnfInstance::new(30, vec![], vec![], CnfKind::Generic).unwrap();
        assert!(sat_bruteforce(&big, &lim()).is_err());
    }
}
