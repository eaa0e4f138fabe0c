//! WCW(G) from the neighbourhood construction next to the brute-force space.
//!
//! The last graph is a registered counterexample: the zero-weight rule drops
//! weight vectors that make every maximal independent set equally heavy.

use wellcover::algorithms::BipC6Free;
use wellcover::graph::Graph;
use wellcover::oracles::{enumerate_mis, wcw_oracle, OracleLimits};
use wellcover::weightspace::{format_rational, nullspace, solution_outside, spaces_equal};

fn main() -> wellcover::error::Result<()> {
    let lim = OracleLimits::default();
    let graphs = [
        ("P4", Graph::path(4)),
        ("C4", Graph::cycle(4)),
        ("K_{1,3}", Graph::star(3)),
        ("C4 plus pendant", Graph::new(5, [(0, 4), (1, 2), (1, 3), (2, 4), (3, 4)])?),
    ];
    for (name, g) in &graphs {
        let alg = BipC6Free::new(g)?.wcw();
        let ora = wcw_oracle(g, &lim)?;
        println!(
            "{name}: algorithm dim {}, brute force dim {}, equal {}",
            nullspace(&alg).dimension(),
            nullspace(&ora).dimension(),
            spaces_equal(&alg, &ora)?
        );
        if let Some(w) = solution_outside(&ora, &alg)? {
            let w: Vec<String> = w.iter().map(format_rational).collect();
            println!("  missed weight {w:?}");
            for m in &enumerate_mis(g, &lim)?.sets {
                println!("  {:?}", m.to_vec());
            }
        }
    }
    Ok(())
}
