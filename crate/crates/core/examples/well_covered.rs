//! The well-covered check on random bipartite C6-free graphs, against enumeration.

use wellcover::algorithms::BipC6Free;
use wellcover::family::FamilySpec;
use wellcover::lab::{GeneratorConfig, RandomGraphs};
use wellcover::oracles::{is_well_covered_oracle, OracleLimits};

fn main() -> wellcover::error::Result<()> {
    let cfg = GeneratorConfig::new(11, 10, 0.3, FamilySpec::bipartite_c6_free());
    let mut agree = 0;
    let mut wc = 0;
    for g in RandomGraphs::new(cfg)?.take(200) {
        let g = g?;
        let fast = BipC6Free::new(&g)?.well_covered();
        let brute = is_well_covered_oracle(&g, &OracleLimits::default())?;
        agree += usize::from(fast == brute);
        wc += usize::from(brute);
        if fast != brute {
            println!("disagree on {:?}: algorithm {fast}, brute force {brute}", g.edges().collect::<Vec<_>>());
        }
    }
    println!("{agree}/200 agree, {wc} well-covered");
    Ok(())
}
