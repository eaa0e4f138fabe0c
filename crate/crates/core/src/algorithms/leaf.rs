use serde::Serialize;

use crate::error::Result;
use crate::family::{validate_family, FamilySpec};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::weightspace::{int, ConstraintSystem, LinearConstraint};

/// L(G), N(L(G)) and S_x = N(x) \ N(L(G)) for every non-leaf x of degree
/// at least two.
#[derive(Clone, Debug, Serialize)]
pub struct LeafProfile {
    pub l: VertexSet,
    pub n_of_l: VertexSet,
    pub s_x: Vec<(Vertex, VertexSet)>,
}

impl LeafProfile {
    pub fn new(g: &Graph) -> Self {
        let l = g.leaves();
        let n_of_l = g.neighbors_union(&l);
        let s_x = (0..g.n())
            .filter(|&x| g.degree(x) >= 2)
            .map(|x| (x, g.neighbors(x).difference(&n_of_l)))
            .collect();
        LeafProfile { l, n_of_l, s_x }
    }
}

/// WCW(G) for graphs without cycles of length 3, 4, 5 or 7, component by
/// component: nothing for an isolated vertex, w(a) = w(b) for a K2, and
/// otherwise w(x) = w(N(x) ∩ L(G)) for every non-leaf x.
///
/// C6 is in the family, connected and not K2, yet this yields only the zero
/// space while the brute-force space of C6 has dimension 2. The result is
/// returned as stated and the disagreement is tracked as a known issue.
pub fn wcw_leaf_characterization(g: &Graph) -> Result<ConstraintSystem> {
    validate_family(g, &FamilySpec::c3457_free()).into_result()?;
    Ok(wcw_leaf_characterization_unchecked(g))
}

pub fn wcw_leaf_characterization_unchecked(g: &Graph) -> ConstraintSystem {
    let leaves = g.leaves();
    let mut sys = ConstraintSystem::new(g.n());
    for comp in g.components() {
        match comp.len() {
            1 => {}
            2 => {
                let c = LinearConstraint::equal_weights(&g.set_of([comp[0]]), &g.set_of([comp[1]]));
                sys.push(c).expect("in range");
            }
            _ => {
                for &x in comp.iter().filter(|&&x| !leaves.contains(x)) {
                    let leaf_nbrs = g.neighbors(x).intersection(&leaves);
                    let terms =
                        std::iter::once((x, int(1))).chain(leaf_nbrs.iter().map(|l| (l, int(-1))));
                    sys.push(LinearConstraint::new(terms)).expect("in range");
                }
            }
        }
    }
    sys
}
