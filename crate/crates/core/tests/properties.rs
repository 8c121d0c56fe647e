//! Randomised properties over small graphs: serialisation round trips,
//! relabelling invariance and agreement between independent routes.

use std::collections::BTreeSet;

use brickwork::graph::{
    canonical_form, enumerate_small_edge_cuts_by_edge_sets, enumerate_small_edge_cuts_by_shores,
    from_graph6, from_json, is_isomorphic, to_graph6, to_json, Multigraph,
};
use brickwork::harness::random_matching_covered;
use brickwork::matching::{self, oracle};
use brickwork::tightcut::{leaf_multiset, tight_cut_decomposition, Policy};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn simple_graph(max_n: usize) -> impl Strategy<Value = Multigraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Multigraph::new(n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn relabelled(g: &Multigraph, seed: u64) -> Multigraph {
    let mut perm: Vec<usize> = (0..g.order()).collect();
    perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let edges: Vec<(usize, usize)> = g.edges().map(|(_, [u, v])| (perm[u], perm[v])).collect();
    Multigraph::from_edges(g.order(), &edges).unwrap()
}

fn edge_pairs(g: &Multigraph) -> BTreeSet<(usize, usize)> {
    g.edges().map(|(_, [u, v])| (u.min(v), u.max(v))).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_round_trip(g in simple_graph(12)) {
        let back = from_graph6(&to_graph6(&g).unwrap()).unwrap();
        prop_assert_eq!(back.order(), g.order());
        prop_assert_eq!(edge_pairs(&back), edge_pairs(&g));
    }

    #[test]
    fn json_round_trip(g in simple_graph(10)) {
        let back = from_json(&to_json(&g)).unwrap();
        prop_assert_eq!(edge_pairs(&back), edge_pairs(&g));
    }

    #[test]
    fn blossom_matches_exhaustive_count(g in simple_graph(9)) {
        prop_assert_eq!(matching::max_matching(&g).len(), oracle::matching_number(&g));
    }

    #[test]
    fn matching_covered_agrees_with_enumeration(g in simple_graph(8)) {
        let all = oracle::all_perfect_matchings(&g);
        let used: BTreeSet<_> = all.iter().flatten().copied().collect();
        let expected = g.order() >= 2
            && g.is_connected()
            && !all.is_empty()
            && g.edge_ids().all(|e| used.contains(&e));
        prop_assert_eq!(matching::is_matching_covered(&g), expected);
    }

    #[test]
    fn canonical_form_ignores_labels(g in simple_graph(9), seed in any::<u64>()) {
        let h = relabelled(&g, seed);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert!(is_isomorphic(&g, &h));
    }

    #[test]
    fn small_edge_cut_routes_agree(g in simple_graph(8)) {
        prop_assume!(g.is_connected() && g.order() >= 2);
        let mut a = enumerate_small_edge_cuts_by_shores(&g, 3).unwrap();
        let mut b = enumerate_small_edge_cuts_by_edge_sets(&g, 3).unwrap();
        a.sort_by(|x, y| x.edges().cmp(y.edges()));
        b.sort_by(|x, y| x.edges().cmp(y.edges()));
        let ea: Vec<_> = a.iter().map(|c| c.edges().clone()).collect();
        let eb: Vec<_> = b.iter().map(|c| c.edges().clone()).collect();
        prop_assert_eq!(ea, eb);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn decomposition_leaves_survive_relabelling_and_order(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_matching_covered(10, &mut rng);
        let reference = leaf_multiset(&tight_cut_decomposition(&g, Policy::Deterministic).unwrap());
        let h = relabelled(&g, seed ^ 0x5eed);
        let tree = tight_cut_decomposition(&h, Policy::Seeded(seed)).unwrap();
        tree.check().unwrap();
        prop_assert_eq!(leaf_multiset(&tree), reference);
    }
}
