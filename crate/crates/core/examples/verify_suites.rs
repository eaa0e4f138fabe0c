//! Runs every verification suite on a small corpus and prints the tallies.

use wellcover::oracles::OracleLimits;
use wellcover::verify::{is_known_defect_shape, reproduce_paper_examples, run_suite, Corpus, Suite, SuiteConfig};

fn main() -> wellcover::error::Result<()> {
    for suite in Suite::ALL {
        let sat = matches!(suite, Suite::Dsat | Suite::Monotone);
        let cfg = SuiteConfig {
            suite,
            corpus: Corpus::Random { max_n: if sat { 6 } else { 10 }, count: 50, seed: 1 },
            family: None,
            limits: if sat { OracleLimits::for_reductions() } else { OracleLimits::default() },
        };
        let r = run_suite(&cfg)?;
        let shape = r.records.iter().all(|rec| is_known_defect_shape(suite, rec));
        println!(
            "{suite:>12}: {}/{} agree, {} registered, disagreements match known defect: {shape}",
            r.agreements, r.total, r.expected_disagreements
        );
    }
    let r = reproduce_paper_examples(&OracleLimits::default())?;
    for rec in &r.records {
        println!("{:<32} agree {:<5} expected {}", rec.id, rec.agree, rec.expected);
    }
    Ok(())
}
