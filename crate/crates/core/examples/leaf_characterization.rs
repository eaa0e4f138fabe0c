//! The leaf description of WCW(G) on trees, and the 6-cycle it gets wrong.

use wellcover::algorithms::{wcw_leaf_characterization, LeafProfile};
use wellcover::fixtures::DiscrepancyRegistry;
use wellcover::graph::Graph;
use wellcover::lab::random_tree;
use wellcover::oracles::{wcw_oracle, OracleLimits};
use wellcover::weightspace::{nullspace, spaces_equal};

fn main() -> wellcover::error::Result<()> {
    let lim = OracleLimits::default();
    let p6 = Graph::path(6);
    let profile = LeafProfile::new(&p6);
    println!("P6 leaves {:?}, their neighbours {:?}", profile.l.to_vec(), profile.n_of_l.to_vec());
    for c in wcw_leaf_characterization(&p6)?.constraints() {
        println!("  {c:?}");
    }

    let mut agree = 0;
    for seed in 0..100 {
        let t = random_tree(14, seed)?;
        agree += usize::from(spaces_equal(&wcw_leaf_characterization(&t)?, &wcw_oracle(&t, &lim)?)?);
    }
    println!("random trees: {agree}/100 agree");

    let c6 = Graph::cycle(6);
    let leaf = nullspace(&wcw_leaf_characterization(&c6)?).dimension();
    let brute = nullspace(&wcw_oracle(&c6, &lim)?).dimension();
    let entry = DiscrepancyRegistry::load()?.lookup("leaf", &c6).map(|e| e.id.clone());
    println!("C6: leaf dim {leaf}, brute force dim {brute}, registry entry {entry:?}");
    Ok(())
}
