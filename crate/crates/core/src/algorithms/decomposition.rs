use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// The layers around X = {x} or X = {x_1, x_2} that the MaxGen routines
/// reason about.
///
/// Y = ∩_{x∈X} N(x) as y_1 < y_2 < ..., A_i = N(y_i) \ X,
/// Z_i = N_2(y_i) ∩ N_3(X), S = N(X) \ Y, S' = N(S) \ X. With B = X ∪ Y,
/// D_1 = N(V(B)) \ V(B) and D_2 = N_2(V(B)).
#[derive(Clone, Debug, Serialize)]
pub struct NeighborhoodDecomposition {
    pub x_side: VertexSet,
    pub y_side: Vec<Vertex>,
    pub a_sets: Vec<VertexSet>,
    pub z_sets: Vec<VertexSet>,
    pub s: VertexSet,
    pub s_prime: VertexSet,
    pub d1: VertexSet,
    pub d2: VertexSet,
}

impl NeighborhoodDecomposition {
    pub fn new(g: &Graph, x_side: &[Vertex]) -> Result<Self> {
        if !(1..=2).contains(&x_side.len()) {
            return Err(Error::InvalidParameter(format!(
                "X must have one or two vertices, got {}",
                x_side.len()
            )));
        }
        for &x in x_side {
            g.check_vertex(x)?;
        }
        if x_side.len() == 2 && x_side[0] == x_side[1] {
            return Err(Error::SameVertex(x_side[0]));
        }
        let x = g.set_of(x_side.iter().copied());
        let mut y = g.vertex_set();
        for &v in x_side {
            y.intersect_with(g.neighbors(v));
        }
        let n3x = g.neighborhood_layer(&x, 3, false)?;
        let mut a_sets = Vec::new();
        let mut z_sets = Vec::new();
        for yv in y.iter() {
            a_sets.push(g.neighbors(yv).difference(&x));
            let n2y = g.neighborhood_layer(&g.set_of([yv]), 2, false)?;
            z_sets.push(n2y.intersection(&n3x));
        }
        let s = g.open_neighborhood(&x).difference(&y);
        let s_prime = g.neighbors_union(&s).difference(&x);
        let vb = x.union(&y);
        let d1 = g.neighborhood_layer(&vb, 1, false)?;
        let d2 = g.neighborhood_layer(&vb, 2, false)?;
        Ok(NeighborhoodDecomposition { x_side: x, y_side: y.to_vec(), a_sets, z_sets, s, s_prime, d1, d2 })
    }

    /// Splits the indices of Y into I (y_i ∈ t) and its complement.
    pub fn split_indices(&self, t: &VertexSet) -> (Vec<usize>, Vec<usize>) {
        (0..self.y_side.len()).partition(|&i| t.contains(self.y_side[i]))
    }

    /// Whether Z_i dominates A_i.
    pub fn z_dominates_a(&self, g: &Graph, i: usize) -> bool {
        g.dominates(&self.z_sets[i], &self.a_sets[i])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex_has_no_s() {
        let g = Graph::path(4);
        let d = NeighborhoodDecomposition::new(&g, &[1]).unwrap();
        assert_eq!(d.y_side, vec![0, 2]);
        assert!(d.a_sets[0].is_empty());
        assert_eq!(d.a_sets[1].to_vec(), vec![3]);
        assert!(d.z_sets.iter().all(VertexSet::is_empty));
        assert!(d.s.is_empty() && d.s_prime.is_empty());
        assert_eq!(d.d1.to_vec(), vec![3]);
        assert!(d.d2.is_empty());
    }

    #[test]
    fn c4_pair() {
        let g = Graph::cycle(4);
        let d = NeighborhoodDecomposition::new(&g, &[0, 2]).unwrap();
        assert_eq!(d.y_side, vec![1, 3]);
        assert!(d.a_sets.iter().all(VertexSet::is_empty));
        let (i, rest) = d.split_indices(&g.set_of([3]));
        assert_eq!((i, rest), (vec![1], vec![0]));
        assert!(NeighborhoodDecomposition::new(&g, &[0, 0]).is_err());
        assert!(NeighborhoodDecomposition::new(&g, &[]).is_err());
    }
}
