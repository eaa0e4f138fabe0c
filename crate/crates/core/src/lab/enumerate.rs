use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::graph::{Graph, Vertex};

pub const MAX_LABELED_N: usize = 9;

/// Every labeled graph on `0..n` in `family`, in order of the edge-subset
/// bit mask (bit k set iff the k-th pair in lexicographic order is an edge).
#[derive(Clone, Debug)]
pub struct SmallGraphs {
    n: usize,
    pairs: Vec<(Vertex, Vertex)>,
    next_mask: u64,
    end: u64,
    family: FamilySpec,
}

impl Iterator for SmallGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next_mask < self.end {
            let mask = self.next_mask;
            self.next_mask += 1;
            let edges = self.pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e);
            let g = Graph::new(self.n, edges).expect("pairs are in range");
            if self.family.is_unconstrained() || self.family.contains(&g) {
                return Some(g);
            }
        }
        None
    }
}

pub fn enumerate_small_graphs(n: usize, family: &FamilySpec) -> Result<SmallGraphs> {
    if n > MAX_LABELED_N {
        return Err(Error::InvalidParameter(format!(
            "labeled enumeration is limited to n <= {MAX_LABELED_N}, got {n}"
        )));
    }
    let pairs: Vec<(Vertex, Vertex)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let end = 1u64 << pairs.len();
    Ok(SmallGraphs { n, pairs, next_mask: 0, end, family: family.clone() })
}

/// Certificate that is equal for two graphs iff they are isomorphic: the
/// lexicographically least adjacency matrix (rows as bit masks) over the
/// orderings found by colour refinement with individualization. Vertices
/// with identical neighbourhoods are interchangeable, so only one of them is
/// branched on. Limited to 64 vertices.
pub fn canonical_form(g: &Graph) -> Result<Vec<u64>> {
    let n = g.n();
    if n > 64 {
        return Err(Error::InvalidParameter(format!("canonical form supports n <= 64, got {n}")));
    }
    let rows: Vec<u64> = (0..n).map(|v| g.neighbor_list(v).iter().fold(0u64, |m, &u| m | 1 << u)).collect();
    let mut best = None;
    search(g, &rows, vec![0; n], &mut best);
    Ok(best.unwrap_or_default())
}

fn refine(g: &Graph, mut colors: Vec<usize>) -> Vec<usize> {
    let mut count = distinct(&colors);
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..g.n())
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbor_list(v).iter().map(|&u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut sorted: Vec<&(usize, Vec<usize>)> = sigs.iter().collect();
        sorted.sort();
        sorted.dedup();
        let rank: BTreeMap<&(usize, Vec<usize>), usize> = sorted.into_iter().enumerate().map(|(i, s)| (s, i)).collect();
        colors = sigs.iter().map(|s| rank[s]).collect();
        let new_count = distinct(&colors);
        if new_count == count {
            return colors;
        }
        count = new_count;
    }
}

fn distinct(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn search(g: &Graph, rows: &[u64], colors: Vec<usize>, best: &mut Option<Vec<u64>>) {
    let n = g.n();
    let colors = refine(g, colors);
    let mut sizes = vec![0usize; n];
    for &c in &colors {
        sizes[c] += 1;
    }
    let Some(target) = (0..n).find(|&c| sizes[c] > 1) else {
        let mut form = vec![0u64; n];
        for v in 0..n {
            form[colors[v]] = g.neighbor_list(v).iter().fold(0u64, |m, &u| m | 1 << colors[u]);
        }
        if best.as_ref().is_none_or(|b| form < *b) {
            *best = Some(form);
        }
        return;
    };
    let cell: Vec<Vertex> = (0..n).filter(|&v| colors[v] == target).collect();
    let mut tried: Vec<u64> = Vec::new();
    for &v in &cell {
        if tried.contains(&rows[v]) {
            continue;
        }
        tried.push(rows[v]);
        let next = (0..n)
            .map(|u| 2 * colors[u] + usize::from(colors[u] == target && u != v))
            .collect();
        search(g, rows, next, best);
    }
}

fn graph_from_form(form: &[u64]) -> Graph {
    let n = form.len();
    let edges = (0..n).flat_map(|u| (u + 1..n).filter(move |&v| form[u] >> v & 1 == 1).map(move |v| (u, v)));
    Graph::new(n, edges).expect("form rows index vertices below n")
}

/// One representative of every isomorphism class of graphs in `family`, for
/// each order `0..=max_n`; entry k lists the graphs on k vertices, ordered by
/// canonical form.
///
/// Grows graphs one vertex at a time over every neighbour subset and keeps
/// canonical representatives. This reaches every class only when membership
/// in `family` survives deleting a vertex, which holds for every
/// [`FamilySpec`] (forbidden cycles, bipartiteness and girth bounds).
pub fn enumerate_unlabeled(max_n: usize, family: &FamilySpec) -> Result<Vec<Vec<Graph>>> {
    if max_n > 12 {
        return Err(Error::InvalidParameter(format!("isomorph-free enumeration is limited to n <= 12, got {max_n}")));
    }
    let mut levels = vec![vec![Graph::empty(0)]];
    for k in 0..max_n {
        let mut found: BTreeMap<Vec<u64>, Graph> = BTreeMap::new();
        for g in &levels[k] {
            let base: Vec<(Vertex, Vertex)> = g.edges().collect();
            for mask in 0u64..1 << k {
                let edges = base.iter().copied().chain((0..k).filter(|&u| mask >> u & 1 == 1).map(|u| (u, k)));
                let h = Graph::new(k + 1, edges)?;
                if !family.contains(&h) {
                    continue;
                }
                let form = canonical_form(&h)?;
                found.entry(form).or_insert_with_key(|f| graph_from_form(f));
            }
        }
        levels.push(found.into_values().collect());
    }
    Ok(levels)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labeled_counts() {
        let any = FamilySpec::any();
        assert_eq!(enumerate_small_graphs(2, &any).unwrap().count(), 2);
        assert_eq!(enumerate_small_graphs(4, &any).unwrap().count(), 64);
        let no_c3 = FamilySpec::new([3], false, None).unwrap();
        assert_eq!(enumerate_small_graphs(3, &no_c3).unwrap().count(), 7);
        assert!(enumerate_small_graphs(10, &any).is_err());
    }

    #[test]
    fn canonical_form_is_invariant() {
        let a = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let b = Graph::new(5, [(4, 2), (2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
        assert_ne!(canonical_form(&a).unwrap(), canonical_form(&Graph::star(4)).unwrap());
        assert_ne!(canonical_form(&Graph::cycle(6)).unwrap(), {
            let two_triangles = Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
            canonical_form(&two_triangles).unwrap()
        });
    }

    #[test]
    fn unlabeled_counts_match_known_values() {
        // graphs on n vertices up to isomorphism: 1, 1, 2, 4, 11, 34, 156
        let levels = enumerate_unlabeled(6, &FamilySpec::any()).unwrap();
        let counts: Vec<usize> = levels.iter().map(Vec::len).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
        // forests: 1, 1, 2, 3, 6, 10, 20
        let forests = FamilySpec::new([3, 4, 5, 6, 7, 8], false, None).unwrap();
        let acyclic = enumerate_unlabeled(6, &forests).unwrap();
        assert_eq!(acyclic.iter().map(Vec::len).collect::<Vec<_>>(), vec![1, 1, 2, 3, 6, 10, 20]);
    }
}
