//! Worked instances shipped with the crate: the 9-variable DSAT instance and
//! its DMSAT image, the 10-variable DMSAT instance with a satisfying
//! assignment and witness, the 31-vertex MaxGen2 layout graph, and the
//! registry of known disagreements.

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::io::GraphJson;
use crate::lab::canonical_form;
use crate::sat::{cnf_from_json, CnfInstance};
use crate::weightspace::{parse_rational, Rational};

pub const DSAT9: &str = include_str!("../data/dsat9.json");
pub const DMSAT18: &str = include_str!("../data/dmsat18.json");
pub const DSAT5: &str = include_str!("../data/dsat5.json");
pub const DMSAT10: &str = include_str!("../data/dmsat10.json");
pub const DMSAT10_WITNESS: &str = include_str!("../data/dmsat10_witness.json");
pub const LAYOUT31: &str = include_str!("../data/layout31.json");
pub const KNOWN_DISCREPANCIES: &str = include_str!("../data/known_discrepancies.json");

/// The 9-variable, 14-clause DSAT instance.
pub fn dsat9() -> Result<CnfInstance> {
    cnf_from_json(DSAT9)
}

/// Its 18-variable, 32-clause DMSAT image.
pub fn dmsat18() -> Result<CnfInstance> {
    cnf_from_json(DMSAT18)
}

/// A 4-clause DSAT instance over x_1, x_3, x_5, x_7, x_9.
pub fn dsat5() -> Result<CnfInstance> {
    cnf_from_json(DSAT5)
}

/// Its 10-variable DMSAT image, where x_{2k} stands for the negation of
/// x_{2k-1}.
pub fn dmsat10() -> Result<CnfInstance> {
    cnf_from_json(DMSAT10)
}

#[derive(Clone, Debug, Deserialize)]
pub struct Dmsat10Witness {
    pub true_vars: Vec<usize>,
    /// Vertex labels of the reduction graph.
    pub witness: Vec<String>,
}

pub fn dmsat10_witness() -> Result<Dmsat10Witness> {
    Ok(serde_json::from_str(DMSAT10_WITNESS)?)
}

#[derive(Clone, Debug)]
pub struct Layout31 {
    pub graph: Graph,
    pub x: [Vertex; 2],
    pub expected_maxgen2: Vec<Vertex>,
}

#[derive(Deserialize)]
struct Layout31Json {
    #[serde(flatten)]
    graph: GraphJsonOwned,
    x: [Vertex; 2],
    expected_maxgen2: Vec<Vertex>,
}

// Flattened maps lose integer keys, so labels are read as strings here.
#[derive(Deserialize)]
struct GraphJsonOwned {
    n: usize,
    edges: Vec<[Vertex; 2]>,
    #[serde(default)]
    labels: std::collections::BTreeMap<String, String>,
}

/// Two vertices x_1, x_2 with six common neighbours y_1..y_6, the A and Z
/// layers above them and the S, S' layers below.
pub fn layout31() -> Result<Layout31> {
    let j: Layout31Json = serde_json::from_str(LAYOUT31)?;
    let labels = j
        .graph
        .labels
        .into_iter()
        .map(|(k, v)| Ok((k.parse::<Vertex>().map_err(|_| Error::Parse(format!("bad label key {k:?}")))?, v)))
        .collect::<Result<_>>()?;
    let graph = Graph::try_from(GraphJson { n: j.graph.n, edges: j.graph.edges, labels })?;
    Ok(Layout31 { graph, x: j.x, expected_maxgen2: j.expected_maxgen2 })
}

/// A graph on which an algorithm is known to disagree with brute force.
/// `algorithm` and `oracle` hold the disagreeing results (a `dimension` or a
/// `well_covered` flag); `vector`, when present, lies in the brute-force
/// space but not in the algorithm's.
#[derive(Clone, Debug, Deserialize)]
pub struct KnownDiscrepancy {
    pub id: String,
    pub suite: String,
    pub graph: GraphJson,
    pub algorithm: serde_json::Value,
    pub oracle: serde_json::Value,
    #[serde(default)]
    pub vector: Option<Vec<String>>,
    pub note: String,
}

impl KnownDiscrepancy {
    pub fn graph(&self) -> Result<Graph> {
        Graph::try_from(self.graph.clone())
    }

    pub fn vector(&self) -> Result<Option<Vec<Rational>>> {
        self.vector.as_ref().map(|v| v.iter().map(|s| parse_rational(s)).collect()).transpose()
    }
}

#[derive(Clone, Debug, Deserialize)]
pub struct DiscrepancyRegistry {
    pub version: u32,
    pub entries: Vec<KnownDiscrepancy>,
}

impl DiscrepancyRegistry {
    pub fn load() -> Result<Self> {
        Ok(serde_json::from_str(KNOWN_DISCREPANCIES)?)
    }

    /// The entry of `suite` whose graph is isomorphic to `g`, if any.
    pub fn lookup(&self, suite: &str, g: &Graph) -> Option<&KnownDiscrepancy> {
        let form = canonical_form(g).ok()?;
        self.entries.iter().filter(|e| e.suite == suite).find(|e| {
            e.graph().is_ok_and(|h| h.n() == g.n() && h.edge_count() == g.edge_count() && canonical_form(&h).ok() == Some(form.clone()))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sat::{validate, CnfKind};

    #[test]
    fn fixtures_parse_and_validate() {
        let i1 = dsat9().unwrap();
        assert_eq!((i1.n_vars(), i1.clause_count()), (9, 14));
        assert!(validate(&i1, CnfKind::Dsat).is_valid());
        let i2 = dmsat18().unwrap();
        assert_eq!((i2.n_vars(), i2.clause_count()), (18, 32));
        assert!(validate(&i2, CnfKind::Dmsat).is_valid());
        assert!(validate(&dsat5().unwrap(), CnfKind::Dsat).is_valid());
        let e3 = dmsat10().unwrap();
        assert_eq!((e3.c1().len(), e3.c2().len()), (9, 5));
        assert!(validate(&e3, CnfKind::Dmsat).is_valid());
        assert_eq!(dmsat10_witness().unwrap().witness.len(), 10);
        let f = layout31().unwrap();
        assert_eq!(f.graph.n(), 31);
        assert_eq!(f.graph.label(2), Some("y_1"));
        let reg = DiscrepancyRegistry::load().unwrap();
        assert!(reg.lookup("leaf", &Graph::cycle(6)).is_some());
        assert!(reg.lookup("wcw", &Graph::cycle(6)).is_none());
        assert!(reg.lookup("leaf", &Graph::cycle(4)).is_none());
        let relabeled = Graph::new(5, [(4, 0), (3, 1), (3, 2), (0, 1), (0, 2)]).unwrap();
        assert!(reg.lookup("wcw", &relabeled).is_some());
    }
}
