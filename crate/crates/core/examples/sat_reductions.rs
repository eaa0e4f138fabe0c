//! DSAT -> DMSAT -> generating subgraph, on the shipped instances.

use wellcover::fixtures;
use wellcover::oracles::{generating_oracle, sat_bruteforce, OracleLimits};
use wellcover::sat::reductions::{dmsat_to_gs, dsat_to_dmsat, extend_to_kpq, monotone_to_gs};
use wellcover::sat::{Assignment, CnfInstance, CnfKind};

fn main() -> wellcover::error::Result<()> {
    let lim = OracleLimits::for_reductions();

    let i1 = fixtures::dsat9()?;
    let i2 = dsat_to_dmsat(&i1)?;
    let golden = fixtures::dmsat18()?;
    println!(
        "DSAT {} vars / {} clauses -> DMSAT {} vars / {} clauses, matches shipped copy: {}",
        i1.n_vars(),
        i1.clause_count(),
        i2.n_vars(),
        i2.clause_count(),
        i2.clause_multiset() == golden.clause_multiset()
    );

    let dm = fixtures::dmsat10()?;
    let art = dmsat_to_gs(&dm)?;
    println!("DMSAT graph: {} vertices, B = {:?} x {:?}", art.graph.n(), art.b.bx().to_vec(), art.b.by().to_vec());
    let w = fixtures::dmsat10_witness()?;
    let a = Assignment::from_true_vars(dm.n_vars(), &w.true_vars);
    let s = art.assignment_to_witness(&a)?;
    println!("witness: {:?}", s.iter().map(|v| art.graph.label(v).unwrap_or("?")).collect::<Vec<_>>());
    println!("witness search finds one: {}", generating_oracle(&art.graph, &art.b, &lim)?.is_some());

    // (x1 ∨ x2) ∧ (¬x1 ∨ ¬x2) ∧ (¬x1)
    let mono = CnfInstance::new(2, vec![vec![1, 2]], vec![vec![-1, -2], vec![-1]], CnfKind::Monotone)?;
    let art = monotone_to_gs(&mono)?;
    let ext = extend_to_kpq(&art, 2, 3)?;
    println!(
        "monotone: satisfiable {}, generating {}, K_2,3 version generating {}",
        sat_bruteforce(&mono, &lim)?.is_some(),
        generating_oracle(&art.graph, &art.b, &lim)?.is_some(),
        generating_oracle(&ext.graph, &ext.b, &lim)?.is_some()
    );
    Ok(())
}
