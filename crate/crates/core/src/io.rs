//! Graph file formats.
//!
//! Canonical JSON: `{"n": 4, "edges": [[0,1],[1,2]], "labels": {"0": "x"}}`,
//! edges written with `u < v` in lexicographic order and `labels` omitted
//! when empty. Plain edge lists (`n m` header, then one `u v` per line) are
//! accepted on input.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[Vertex; 2]>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub labels: BTreeMap<Vertex, String>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.n(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
            labels: g.labels().clone(),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(j: GraphJson) -> Result<Graph> {
        if let Some(&v) = j.labels.keys().find(|&&v| v >= j.n) {
            return Err(Error::VertexOutOfRange { vertex: v, n: j.n });
        }
        Ok(Graph::new(j.n, j.edges.iter().map(|e| (e[0], e[1])))?.with_labels(j.labels))
    }
}

pub fn graph_to_json(g: &Graph) -> String {
    serde_json::to_string(&GraphJson::from(g)).expect("graph json is always serializable")
}

pub fn graph_from_json(text: &str) -> Result<Graph> {
    let j: GraphJson = serde_json::from_str(text)?;
    Graph::try_from(j)
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#') && !l.starts_with('%'));
    let header = lines.next().ok_or_else(|| Error::Parse("empty edge list".into()))?;
    let (n, m) = parse_pair(header)?;
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        edges.push(parse_pair(line)?);
    }
    if edges.len() != m {
        return Err(Error::Parse(format!("header announces {m} edges, found {}", edges.len())));
    }
    Graph::new(n, edges)
}

fn parse_pair(line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace().map(|t| {
        t.parse::<usize>().map_err(|_| Error::Parse(format!("expected two integers, got {line:?}")))
    });
    match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => Ok((a?, b?)),
        _ => Err(Error::Parse(format!("expected two integers, got {line:?}"))),
    }
}

/// Reads either format, deciding by the first non-blank character.
pub fn parse_graph(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        graph_from_json(text)
    } else {
        parse_edge_list(text)
    }
}

pub fn read_graph(path: &Path) -> Result<Graph> {
    parse_graph(&std::fs::read_to_string(path)?)
}

pub fn write_graph(path: &Path, g: &Graph) -> Result<()> {
    std::fs::write(path, graph_to_json(g))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_json_is_sorted() {
        let g = Graph::new(4, [(3, 2), (1, 0), (2, 1)]).unwrap();
        assert_eq!(graph_to_json(&g), r#"{"n":4,"edges":[[0,1],[1,2],[2,3]]}"#);
    }

    #[test]
    fn labels_roundtrip() {
        let mut labels = BTreeMap::new();
        labels.insert(0, "x".to_string());
        labels.insert(1, "y_1".to_string());
        let g = Graph::new(2, [(0, 1)]).unwrap().with_labels(labels);
        let text = graph_to_json(&g);
        assert_eq!(text, r#"{"n":2,"edges":[[0,1]],"labels":{"0":"x","1":"y_1"}}"#);
        let back = graph_from_json(&text).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.label(1), Some("y_1"));
    }

    #[test]
    fn edge_list_input() {
        let g = parse_graph("4 3\n0 1\n1 2\n# comment\n2 3\n").unwrap();
        assert_eq!(g, Graph::path(4));
        assert!(parse_graph("4 2\n0 1\n").is_err());
        assert!(parse_graph("2 1\n0 x\n").is_err());
        assert!(parse_graph("2 1\n0 5\n").is_err());
    }

    #[test]
    fn rejects_out_of_range_labels() {
        assert!(graph_from_json(r#"{"n":1,"edges":[],"labels":{"3":"z"}}"#).is_err());
    }
}
