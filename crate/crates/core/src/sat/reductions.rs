//! Constructive reductions DSAT → DMSAT → GS and MONOTONE SAT → GS, the
//! K_{p,q} extension of the latter, and the assignment/witness translations
//! that make the equivalences checkable.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{validate, Assignment, CnfInstance, CnfKind, Literal};
use crate::biclique::InducedCompleteBipartite;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::io::GraphJson;

/// DSAT → DMSAT. Every x̄_i is renamed to the fresh variable z_i (index
/// n + i), and d_i = (x_i, z_i), e_i = (x̄_i, z̄_i) are added. C1 holds
/// C' followed by D, C2 holds E.
pub fn dsat_to_dmsat(inst: &CnfInstance) -> Result<CnfInstance> {
    validate(inst, CnfKind::Dsat).into_result()?;
    let n = inst.n_vars() as Literal;
    let rename = |l: Literal| if l < 0 { n - l } else { l };
    let mut c1: Vec<Vec<Literal>> =
        inst.clauses().map(|c| c.iter().map(|&l| rename(l)).collect()).collect();
    c1.extend((1..=n).map(|i| vec![i, n + i]));
    let c2 = (1..=n).map(|i| vec![-i, -(n + i)]).collect();
    let out = CnfInstance::new(2 * inst.n_vars(), c1, c2, CnfKind::Dmsat)?;
    debug_assert!(validate(&out, CnfKind::Dmsat).is_valid());
    Ok(out)
}

/// What a vertex of a reduction graph stands for. Indices are 1-based like
/// the clause and variable names.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    /// The centre x of the DMSAT construction.
    X,
    /// z_j on the single-vertex side of the MONOTONE construction; z_1 is z.
    Z(usize),
    Y(usize),
    /// Clause vertex of C1.
    V(usize),
    /// Clause vertex of C2.
    VPrime(usize),
    /// Literal vertex x_i.
    U(usize),
    /// Literal vertex x̄_i.
    UPrime(usize),
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::X => write!(f, "x"),
            Role::Z(j) => write!(f, "z_{j}"),
            Role::Y(j) => write!(f, "y_{j}"),
            Role::V(j) => write!(f, "v_{j}"),
            Role::VPrime(j) => write!(f, "v'_{j}"),
            Role::U(i) => write!(f, "u_{i}"),
            Role::UPrime(i) => write!(f, "u'_{i}"),
        }
    }
}

impl FromStr for Role {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "x" {
            return Ok(Role::X);
        }
        let bad = || Error::Parse(format!("unknown role label {s:?}"));
        let (head, idx) = s.split_once('_').ok_or_else(bad)?;
        let idx: usize = idx.parse().map_err(|_| bad())?;
        match head {
            "z" => Ok(Role::Z(idx)),
            "y" => Ok(Role::Y(idx)),
            "v" => Ok(Role::V(idx)),
            "v'" => Ok(Role::VPrime(idx)),
            "u" => Ok(Role::U(idx)),
            "u'" => Ok(Role::UPrime(idx)),
            _ => Err(bad()),
        }
    }
}

/// Which construction produced an artifact.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Construction {
    Dmsat,
    /// MONOTONE SAT, with `p` z-vertices and `q` y-vertices in B
    /// (`p = 1, q = 2` straight out of [`monotone_to_gs`]).
    Monotone { p: usize, q: usize },
}

/// The graph of a reduction, the subgraph B whose generating status encodes
/// satisfiability, and the role of each vertex.
#[derive(Clone, Debug)]
pub struct ReductionArtifact {
    pub graph: Graph,
    pub b: InducedCompleteBipartite,
    pub roles: Vec<Role>,
    pub construction: Construction,
    index: BTreeMap<Role, Vertex>,
}

impl ReductionArtifact {
    fn assemble(
        roles: Vec<Role>,
        edges: Vec<(Vertex, Vertex)>,
        bx: &[Role],
        by: &[Role],
        construction: Construction,
    ) -> Result<Self> {
        let index: BTreeMap<Role, Vertex> = roles.iter().enumerate().map(|(v, &r)| (r, v)).collect();
        let labels = roles.iter().enumerate().map(|(v, r)| (v, r.to_string())).collect();
        let graph = Graph::new(roles.len(), edges)?.with_labels(labels);
        let bx: Vec<Vertex> = bx.iter().map(|r| index[r]).collect();
        let by: Vec<Vertex> = by.iter().map(|r| index[r]).collect();
        let b = InducedCompleteBipartite::from_lists(&graph, &bx, &by)?;
        Ok(ReductionArtifact { graph, b, roles, construction, index })
    }

    pub fn vertex(&self, role: Role) -> Option<Vertex> {
        self.index.get(&role).copied()
    }

    /// Number of SAT variables encoded (pairs u_i, u'_i).
    pub fn n_vars(&self) -> usize {
        self.roles.iter().filter(|r| matches!(r, Role::U(_))).count()
    }

    fn u(&self, i: usize) -> Vertex {
        self.index[&Role::U(i)]
    }

    fn u_prime(&self, i: usize) -> Vertex {
        self.index[&Role::UPrime(i)]
    }

    /// S = {u_i : Φ(x_i) = 1} ∪ {u'_i : Φ(x_i) = 0}.
    pub fn assignment_to_witness(&self, a: &Assignment) -> Result<VertexSet> {
        if a.len() != self.n_vars() {
            return Err(Error::DimensionMismatch(a.len(), self.n_vars()));
        }
        Ok(self.graph.set_of((1..=a.len()).map(|i| if a.get(i) { self.u(i) } else { self.u_prime(i) })))
    }

    /// Φ(x_i) = 1 iff u_i ∈ S.
    pub fn witness_to_assignment(&self, s: &VertexSet) -> Assignment {
        Assignment::new((1..=self.n_vars()).map(|i| s.contains(self.u(i))).collect())
    }

    /// Whether S holds exactly one of u_i, u'_i for every i.
    pub fn picks_one_literal_per_variable(&self, s: &VertexSet) -> bool {
        (1..=self.n_vars()).all(|i| s.contains(self.u(i)) != s.contains(self.u_prime(i)))
    }

    pub fn to_json(&self) -> ArtifactJson {
        let g = GraphJson::from(&self.graph);
        ArtifactJson {
            n: g.n,
            edges: g.edges,
            labels: g.labels,
            bx: self.b.bx().to_vec(),
            by: self.b.by().to_vec(),
        }
    }

    /// Rebuilds an artifact from its JSON form; roles come from the labels.
    pub fn from_json(j: ArtifactJson) -> Result<Self> {
        let graph = Graph::try_from(GraphJson { n: j.n, edges: j.edges, labels: j.labels })?;
        let roles: Vec<Role> = (0..graph.n())
            .map(|v| {
                graph
                    .label(v)
                    .ok_or_else(|| Error::Parse(format!("vertex {v} has no role label")))?
                    .parse()
            })
            .collect::<Result<_>>()?;
        let index: BTreeMap<Role, Vertex> = roles.iter().enumerate().map(|(v, &r)| (r, v)).collect();
        let b = InducedCompleteBipartite::from_lists(&graph, &j.bx, &j.by)?;
        let construction = if index.contains_key(&Role::X) {
            Construction::Dmsat
        } else {
            Construction::Monotone { p: b.bx().len(), q: b.by().len() }
        };
        Ok(ReductionArtifact { graph, b, roles, construction, index })
    }
}

/// Graph JSON plus the sides of B; roles travel in `labels`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArtifactJson {
    pub n: usize,
    pub edges: Vec<[Vertex; 2]>,
    pub labels: BTreeMap<Vertex, String>,
    pub bx: Vec<Vertex>,
    pub by: Vec<Vertex>,
}

/// DMSAT → GS on bipartite graphs of girth at least 6.
///
/// Vertices, in id order: x, y_1..y_m, v_1..v_m, v'_1..v'_{m'}, u_1..u_n,
/// u'_1..u'_n. Edges: x y_j, y_j v_j, x v'_j, v_j u_i for x_i ∈ c_j,
/// v'_j u'_i for x̄_i ∈ c'_j, and u_i u'_i. B is the star on x and the y_j.
pub fn dmsat_to_gs(inst: &CnfInstance) -> Result<ReductionArtifact> {
    validate(inst, CnfKind::Dmsat).into_result()?;
    if inst.c1().is_empty() {
        return Err(Error::InvalidInstance(vec![
            "C1 is empty, so B = {x} has no second side".into(),
        ]));
    }
    let (n, m, mp) = (inst.n_vars(), inst.c1().len(), inst.c2().len());
    let mut roles = vec![Role::X];
    roles.extend((1..=m).map(Role::Y));
    roles.extend((1..=m).map(Role::V));
    roles.extend((1..=mp).map(Role::VPrime));
    roles.extend((1..=n).map(Role::U));
    roles.extend((1..=n).map(Role::UPrime));
    let y = |j: usize| j;
    let v = |j: usize| m + j;
    let vp = |j: usize| 2 * m + j;
    let u = |i: usize| 2 * m + mp + i;
    let up = |i: usize| 2 * m + mp + n + i;

    let mut edges = Vec::new();
    for j in 1..=m {
        edges.push((0, y(j)));
        edges.push((y(j), v(j)));
        for &l in &inst.c1()[j - 1] {
            edges.push((v(j), u(l as usize)));
        }
    }
    for j in 1..=mp {
        edges.push((0, vp(j)));
        for &l in &inst.c2()[j - 1] {
            edges.push((vp(j), up(l.unsigned_abs() as usize)));
        }
    }
    for i in 1..=n {
        edges.push((u(i), up(i)));
    }
    let ys: Vec<Role> = (1..=m).map(Role::Y).collect();
    ReductionArtifact::assemble(roles, edges, &[Role::X], &ys, Construction::Dmsat)
}

/// MONOTONE SAT → GS on graphs without 3- and 5-cycles, with B = K_{1,2}.
///
/// Vertices, in id order: z, y_1, y_2, v_1..v_m, v'_1..v'_{m'}, u_1..u_n,
/// u'_1..u'_n. Edges: z y_1, z y_2, y_1 v_j, y_2 v'_j, v_j u_i for
/// x_i ∈ c_j, v'_j u'_i for x̄_i ∈ c'_j, and u_i u'_i. B = ({z}, {y_1, y_2}).
pub fn monotone_to_gs(inst: &CnfInstance) -> Result<ReductionArtifact> {
    validate(inst, CnfKind::Monotone).into_result()?;
    let (n, m, mp) = (inst.n_vars(), inst.c1().len(), inst.c2().len());
    let mut roles = vec![Role::Z(1), Role::Y(1), Role::Y(2)];
    roles.extend((1..=m).map(Role::V));
    roles.extend((1..=mp).map(Role::VPrime));
    roles.extend((1..=n).map(Role::U));
    roles.extend((1..=n).map(Role::UPrime));
    let v = |j: usize| 2 + j;
    let vp = |j: usize| 2 + m + j;
    let u = |i: usize| 2 + m + mp + i;
    let up = |i: usize| 2 + m + mp + n + i;

    let mut edges = vec![(0, 1), (0, 2)];
    for j in 1..=m {
        edges.push((1, v(j)));
        for &l in &inst.c1()[j - 1] {
            edges.push((v(j), u(l as usize)));
        }
    }
    for j in 1..=mp {
        edges.push((2, vp(j)));
        for &l in &inst.c2()[j - 1] {
            edges.push((vp(j), up(l.unsigned_abs() as usize)));
        }
    }
    for i in 1..=n {
        edges.push((u(i), up(i)));
    }
    ReductionArtifact::assemble(
        roles,
        edges,
        &[Role::Z(1)],
        &[Role::Y(1), Role::Y(2)],
        Construction::Monotone { p: 1, q: 2 },
    )
}

/// Grows the B = K_{1,2} of a [`monotone_to_gs`] artifact into K_{p,q}: adds
/// z_2..z_p and y_3..y_q, joins every y to every z, and takes
/// B = ({z_1..z_p}, {y_1..y_q}). `p = 1, q = 2` returns the artifact
/// unchanged.
pub fn extend_to_kpq(art: &ReductionArtifact, p: usize, q: usize) -> Result<ReductionArtifact> {
    if art.construction != (Construction::Monotone { p: 1, q: 2 }) {
        return Err(Error::InvalidParameter(
            "extension applies to an unextended MONOTONE SAT artifact".into(),
        ));
    }
    if p < 1 || q < 2 {
        return Err(Error::InvalidParameter(format!("need p >= 1 and q >= 2, got p={p}, q={q}")));
    }
    let mut roles = art.roles.clone();
    roles.extend((2..=p).map(Role::Z));
    roles.extend((3..=q).map(Role::Y));
    let index: BTreeMap<Role, Vertex> = roles.iter().enumerate().map(|(v, &r)| (r, v)).collect();
    let mut edges: Vec<(Vertex, Vertex)> = art.graph.edges().collect();
    for i in 1..=q {
        for j in 1..=p {
            edges.push((index[&Role::Y(i)], index[&Role::Z(j)]));
        }
    }
    let zs: Vec<Role> = (1..=p).map(Role::Z).collect();
    let ys: Vec<Role> = (1..=q).map(Role::Y).collect();
    ReductionArtifact::assemble(roles, edges, &zs, &ys, Construction::Monotone { p, q })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{girth, validate_family, FamilySpec};
    use crate::oracles::{generating_oracle, OracleLimits};

    #[test]
    fn dsat_to_dmsat_without_negations() {
        let i = CnfInstance::new(2, vec![vec![1, 2]], vec![], CnfKind::Dsat).unwrap();
        let o = dsat_to_dmsat(&i).unwrap();
        assert_eq!(o.n_vars(), 4);
        assert_eq!(o.c1(), &[vec![1, 2], vec![1, 3], vec![2, 4]]);
        assert_eq!(o.c2(), &[vec![-1, -3], vec![-2, -4]]);
    }

    #[test]
    fn dsat_to_dmsat_rejects_non_dsat() {
        let i = CnfInstance::new(3, vec![vec![1, 2, 3], vec![1, 2]], vec![], CnfKind::Dsat).unwrap();
        assert!(dsat_to_dmsat(&i).is_err());
    }

    #[test]
    fn minimal_dmsat_graph() {
        let i = CnfInstance::new(2, vec![vec![1, 2]], vec![], CnfKind::Dmsat).unwrap();
        let art = dmsat_to_gs(&i).unwrap();
        assert_eq!(art.graph.n(), 7);
        let cert = generating_oracle(&art.graph, &art.b, &OracleLimits::default()).unwrap().unwrap();
        let labels: Vec<&str> = cert.s.iter().map(|v| art.graph.label(v).unwrap()).collect();
        assert_eq!(labels, vec!["u_1", "u_2"]);
        assert!(validate_family(&art.graph, &FamilySpec::bipartite_girth6()).is_valid());
    }

    #[test]
    fn dmsat_with_empty_c1_is_rejected() {
        let i = CnfInstance::new(2, vec![], vec![vec![-1, -2]], CnfKind::Dmsat).unwrap();
        assert!(dmsat_to_gs(&i).is_err());
    }

    #[test]
    fn monotone_examples() {
        let lim = OracleLimits::default();
        let unsat = CnfInstance::new(1, vec![vec![1]], vec![vec![-1]], CnfKind::Monotone).unwrap();
        let art = monotone_to_gs(&unsat).unwrap();
        assert_eq!(art.graph.n(), 7);
        assert!(generating_oracle(&art.graph, &art.b, &lim).unwrap().is_none());

        let sat = CnfInstance::new(2, vec![vec![1, 2]], vec![], CnfKind::Monotone).unwrap();
        let art = monotone_to_gs(&sat).unwrap();
        let cert = generating_oracle(&art.graph, &art.b, &lim).unwrap().unwrap();
        assert!(cert.s.contains(art.vertex(Role::U(1)).unwrap()) || cert.s.contains(art.vertex(Role::U(2)).unwrap()));

        let mixed = CnfInstance::new(2, vec![vec![1]], vec![vec![-2]], CnfKind::Monotone).unwrap();
        let art = monotone_to_gs(&mixed).unwrap();
        assert!(generating_oracle(&art.graph, &art.b, &lim).unwrap().is_some());
        assert!(validate_family(&art.graph, &FamilySpec::c35_free()).is_valid());
    }

    #[test]
    fn kpq_extension_sizes() {
        let i = CnfInstance::new(1, vec![vec![1]], vec![vec![-1]], CnfKind::Monotone).unwrap();
        let art = monotone_to_gs(&i).unwrap();
        let same = extend_to_kpq(&art, 1, 2).unwrap();
        assert_eq!(same.graph, art.graph);
        assert_eq!(same.b, art.b);
        let e22 = extend_to_kpq(&art, 2, 2).unwrap();
        assert_eq!(e22.graph.n(), 8);
        let e33 = extend_to_kpq(&art, 3, 3).unwrap();
        assert_eq!(e33.graph.n(), 10);
        assert_eq!((e33.b.bx().len(), e33.b.by().len()), (3, 3));
        assert!(extend_to_kpq(&art, 0, 2).is_err());
        assert!(extend_to_kpq(&art, 1, 1).is_err());
        assert!(extend_to_kpq(&e22, 2, 2).is_err());
    }

    #[test]
    fn witness_translation() {
        let i = CnfInstance::new(3, vec![vec![1, 2], vec![2, 3]], vec![vec![-1, -3]], CnfKind::Dmsat).unwrap();
        let art = dmsat_to_gs(&i).unwrap();
        let ones = Assignment::new(vec![true; 3]);
        let s = art.assignment_to_witness(&ones).unwrap();
        let us: Vec<Vertex> = (1..=3).map(|k| art.vertex(Role::U(k)).unwrap()).collect();
        assert_eq!(s.to_vec(), us);
        for bits in 0..8u32 {
            let a = Assignment::new((0..3).map(|k| bits >> k & 1 == 1).collect());
            let s = art.assignment_to_witness(&a).unwrap();
            assert!(art.picks_one_literal_per_variable(&s));
            assert_eq!(art.witness_to_assignment(&s), a);
        }
    }

    #[test]
    fn artifact_json_roundtrip() {
        let i = CnfInstance::new(3, vec![vec![1, 2], vec![2, 3]], vec![vec![-1, -3]], CnfKind::Dmsat).unwrap();
        let art = dmsat_to_gs(&i).unwrap();
        let text = serde_json::to_string(&art.to_json()).unwrap();
        let back = ReductionArtifact::from_json(serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back.graph, art.graph);
        assert_eq!(back.b, art.b);
        assert_eq!(back.roles, art.roles);
        assert_eq!(back.construction, Construction::Dmsat);
        assert_eq!(girth(&back.graph), girth(&art.graph));
    }
}
