//! Seeded generators and isomorph-free enumeration.

use wellcover::family::{validate_family, FamilySpec};
use wellcover::lab::{enumerate_unlabeled, grow_bip_c6free, random_dsat, random_family_graph, random_tree, GeneratorConfig};

fn main() -> wellcover::error::Result<()> {
    let fam = FamilySpec::bipartite_c6_free();
    let levels = enumerate_unlabeled(8, &fam)?;
    let counts: Vec<usize> = levels.iter().map(Vec::len).collect();
    println!("bipartite C6-free graphs up to isomorphism, n = 0..8: {counts:?}");

    let g = random_family_graph(&GeneratorConfig::new(5, 12, 0.25, fam.clone()))?;
    println!("rejection-sampled: {} vertices, {} edges", g.n(), g.edge_count());

    let big = grow_bip_c6free(1000, 1500, 5)?;
    println!("grown: {} vertices, {} edges, in family {}", big.n(), big.edge_count(), validate_family(&big, &fam).is_valid());

    let t = random_tree(10, 5)?;
    println!("tree edges {:?}", t.edges().collect::<Vec<_>>());

    let d = random_dsat(9, 14, 5)?;
    println!("dsat clauses {:?}", d.c1());
    Ok(())
}
