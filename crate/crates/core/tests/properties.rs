use proptest::prelude::*;

use wellcover::algorithms::{wcw_leaf_characterization, BipC6Free};
use wellcover::biclique::InducedCompleteBipartite;
use wellcover::family::{validate_family, FamilySpec};
use wellcover::graph::Graph;
use wellcover::io::{graph_from_json, graph_to_json};
use wellcover::lab::{
    canonical_form, enumerate_small_graphs, enumerate_unlabeled, random_dsat, random_family_graph, random_monotone,
    random_tree, GeneratorConfig, LabRng,
};
use wellcover::oracles::{generating_oracle, is_well_covered_oracle, sat_bruteforce, wcw_oracle, OracleLimits};
use wellcover::sat::reductions::{dmsat_to_gs, dsat_to_dmsat, monotone_to_gs, ReductionArtifact};
use wellcover::sat::{cnf_from_json, cnf_to_json};
use wellcover::verify::small_side_bicliques;
use wellcover::weightspace::{nullspace, solutions_within, spaces_equal, uniform, ConstraintSystem, SystemJson};

fn bip_c6free(seed: u64, n: usize) -> Graph {
    let p = (2.5 / n as f64).min(0.5);
    random_family_graph(&GeneratorConfig::new(seed, n, p, FamilySpec::bipartite_c6_free())).unwrap()
}

fn any_graph(seed: u64, n: usize, p: f64) -> Graph {
    random_family_graph(&GeneratorConfig::new(seed, n, p, FamilySpec::any())).unwrap()
}

fn relabel(g: &Graph, seed: u64) -> Graph {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    LabRng::new(seed).shuffle(&mut perm);
    Graph::new(g.n(), g.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generators_are_deterministic_and_valid(seed in any::<u64>(), n in 1usize..14) {
        let g = bip_c6free(seed, n);
        prop_assert_eq!(&g, &bip_c6free(seed, n));
        prop_assert!(validate_family(&g, &FamilySpec::bipartite_c6_free()).is_valid());
        let t = random_tree(n, seed).unwrap();
        prop_assert_eq!(t.edge_count(), n - 1);
        prop_assert_eq!(t.components().len(), 1);
    }

    #[test]
    fn uniform_weight_iff_well_covered(seed in any::<u64>(), n in 1usize..10, p in 0.1f64..0.7) {
        let g = any_graph(seed, n, p);
        let lim = OracleLimits::default();
        let in_space = wcw_oracle(&g, &lim).unwrap().is_satisfied_by(&uniform(n, 1));
        prop_assert_eq!(in_space, is_well_covered_oracle(&g, &lim).unwrap());
    }

    #[test]
    fn generating_check_matches_witness_search(seed in any::<u64>(), n in 2usize..13) {
        let g = bip_c6free(seed, n);
        let fast = BipC6Free::new(&g).unwrap();
        for b in small_side_bicliques(&g) {
            let brute = generating_oracle(&g, &b, &OracleLimits::default()).unwrap();
            prop_assert_eq!(fast.generating(&b), brute.is_some(), "{:?} {:?}", g, b);
            if let Some(c) = brute {
                prop_assert!(c.verify(&g));
            }
        }
    }

    #[test]
    fn maxgen1_output_is_generating_and_maximal(seed in any::<u64>(), n in 2usize..13) {
        let g = bip_c6free(seed, n);
        let fast = BipC6Free::new(&g).unwrap();
        let lim = OracleLimits::default();
        for x in 0..n {
            let t = fast.maxgen1(x).unwrap();
            let gen = |s: &wellcover::graph::VertexSet| {
                let b = InducedCompleteBipartite::new(&g, g.set_of([x]), s.clone()).unwrap();
                generating_oracle(&g, &b, &lim).unwrap().is_some()
            };
            if !t.is_empty() {
                prop_assert!(gen(&t));
            }
            for y in g.neighbors(x).difference(&t).iter() {
                let mut bigger = t.clone();
                bigger.insert(y);
                prop_assert!(!gen(&bigger));
            }
        }
    }

    // The zero-weight rule can over-constrain, but never admits a weight
    // outside WCW(G), and a "yes" from the well-covered check is reliable.
    #[test]
    fn weight_space_is_sound(seed in any::<u64>(), n in 1usize..13) {
        let g = bip_c6free(seed, n);
        let fast = BipC6Free::new(&g).unwrap();
        let lim = OracleLimits::default();
        let brute = wcw_oracle(&g, &lim).unwrap();
        prop_assert!(solutions_within(&fast.wcw(), &brute).unwrap());
        if fast.well_covered() {
            prop_assert!(is_well_covered_oracle(&g, &lim).unwrap());
        }
    }

    #[test]
    fn leaf_characterization_on_trees(seed in any::<u64>(), n in 1usize..16) {
        let t = random_tree(n, seed).unwrap();
        let sys = wcw_leaf_characterization(&t).unwrap();
        prop_assert!(spaces_equal(&sys, &wcw_oracle(&t, &OracleLimits::default()).unwrap()).unwrap());
    }

    #[test]
    fn dsat_chain_preserves_satisfiability(seed in any::<u64>(), n in 4usize..7, m in 0usize..6) {
        let i1 = random_dsat(n, m, seed).unwrap();
        let i2 = dsat_to_dmsat(&i1).unwrap();
        let lim = OracleLimits::for_reductions();
        let s1 = sat_bruteforce(&i1, &lim).unwrap().is_some();
        prop_assert_eq!(s1, sat_bruteforce(&i2, &lim).unwrap().is_some());
        if !i2.c1().is_empty() {
            let art = dmsat_to_gs(&i2).unwrap();
            prop_assert_eq!(s1, generating_oracle(&art.graph, &art.b, &lim).unwrap().is_some());
            prop_assert!(validate_family(&art.graph, &FamilySpec::bipartite_girth6()).is_valid());
        }
    }

    #[test]
    fn monotone_reduction_preserves_satisfiability(seed in any::<u64>(), n in 1usize..6, m1 in 0usize..4, m2 in 0usize..4) {
        let inst = random_monotone(n, m1, m2, seed).unwrap();
        let art = monotone_to_gs(&inst).unwrap();
        let lim = OracleLimits::for_reductions();
        prop_assert_eq!(
            sat_bruteforce(&inst, &lim).unwrap().is_some(),
            generating_oracle(&art.graph, &art.b, &lim).unwrap().is_some()
        );
        let back = ReductionArtifact::from_json(art.to_json()).unwrap();
        prop_assert_eq!(&back.graph, &art.graph);
    }

    #[test]
    fn json_round_trips(seed in any::<u64>(), n in 0usize..12, p in 0.0f64..0.6) {
        let g = any_graph(seed, n, p);
        prop_assert_eq!(&graph_from_json(&graph_to_json(&g)).unwrap(), &g);
        let sys = wcw_oracle(&g, &OracleLimits::default()).unwrap();
        let back = ConstraintSystem::try_from(&SystemJson::from(&sys)).unwrap();
        prop_assert_eq!(nullspace(&back), nullspace(&sys));
        let cnf = random_dsat(6, 5, seed).unwrap();
        prop_assert_eq!(cnf_from_json(&cnf_to_json(&cnf)).unwrap(), cnf);
    }

    #[test]
    fn canonical_form_ignores_labels(seed in any::<u64>(), n in 1usize..12, p in 0.0f64..0.7) {
        let g = any_graph(seed, n, p);
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&relabel(&g, seed ^ 1)).unwrap());
    }
}

#[test]
fn labeled_enumeration_counts_every_edge_subset() {
    for n in 0..=5 {
        let count = enumerate_small_graphs(n, &FamilySpec::any()).unwrap().count();
        assert_eq!(count, 1 << (n * n.saturating_sub(1) / 2));
    }
}

#[test]
fn labeled_and_unlabeled_enumeration_agree() {
    for fam in [FamilySpec::any(), FamilySpec::bipartite_c6_free(), FamilySpec::c3457_free()] {
        let levels = enumerate_unlabeled(6, &fam).unwrap();
        for (n, level) in levels.iter().enumerate() {
            let mut forms: Vec<Vec<u64>> =
                enumerate_small_graphs(n, &fam).unwrap().map(|g| canonical_form(&g).unwrap()).collect();
            forms.sort();
            forms.dedup();
            assert_eq!(forms.len(), level.len(), "{fam} n={n}");
        }
    }
}
