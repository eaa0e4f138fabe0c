//! The generating check and the MaxGen procedures on the 31-vertex layout fixture,
//! cross-checked against the witness search.

use wellcover::algorithms::{BipC6Free, NeighborhoodDecomposition};
use wellcover::biclique::InducedCompleteBipartite;
use wellcover::fixtures;
use wellcover::oracles::{generating_oracle, OracleLimits};

fn main() -> wellcover::error::Result<()> {
    let f = fixtures::layout31()?;
    let g = &f.graph;
    let fast = BipC6Free::new(g)?;
    let [x1, x2] = f.x;
    let name = |v| g.label(v).unwrap_or("?").to_string();

    let d = NeighborhoodDecomposition::new(g, &f.x)?;
    println!("common neighbours of {} and {}: {:?}", name(x1), name(x2), d.y_side.iter().map(|&v| name(v)).collect::<Vec<_>>());

    let t = fast.maxgen2(x1, x2)?;
    println!("maxgen2 -> {:?}", t.iter().map(name).collect::<Vec<_>>());

    let b = InducedCompleteBipartite::new(g, g.set_of(f.x), t)?;
    let cert = generating_oracle(g, &b, &OracleLimits::default())?.expect("maxgen2 output is generating");
    println!("generating check says {}, witness S = {:?}", fast.generating(&b), cert.s.iter().map(name).collect::<Vec<_>>());

    for x in [x1, x2] {
        println!("maxgen1({}) -> {:?}", name(x), fast.maxgen1(x)?.iter().map(name).collect::<Vec<_>>());
    }
    Ok(())
}
