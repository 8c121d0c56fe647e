//! Acceptance suite: one test per criterion, each printing a single
//! `criterion N: PASS|FAIL ...` line before asserting. All criteria demand
//! exact agreement, so there are no numeric tolerances.

use std::sync::OnceLock;

use brickwork::brick::{
    classify_all, is_efec_cubic_brick, is_snark, removable_edges, EdgeClass, Mode,
};
use brickwork::graph::catalog;
use brickwork::graph::{is_isomorphic, Multigraph};
use brickwork::harness::{
    all_connected_graphs, check_facts, generate_cubic, random_graph, random_matching_covered,
    verify_theorem, Corpus, TheoremId, TheoremReport, VerifyOptions,
};
use brickwork::matching::{self, oracle};
use brickwork::tightcut::{
    enumerate_tight_cuts_exhaustive, find_nontrivial_tight_cut, tight_cut_decomposition, Policy,
    DEFAULT_EXHAUSTIVE_BOUND,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const CUBIC_ORDERS: [usize; 5] = [4, 6, 8, 10, 12];

fn cubic(n: usize) -> &'static [Multigraph] {
    static CACHE: [OnceLock<Vec<Multigraph>>; 5] = [const { OnceLock::new() }; 5];
    let i = CUBIC_ORDERS.iter().position(|&k| k == n).expect("cached order");
    CACHE[i].get_or_init(|| generate_cubic(n).expect("order in range"))
}

fn cubic_corpus(orders: &[usize]) -> Corpus {
    orders
        .iter()
        .map(|&n| Corpus::new(format!("generated({n})"), cubic(n).to_vec()))
        .reduce(Corpus::union)
        .expect("at least one order")
}

fn report(criterion: usize, ok: bool, detail: &str) {
    println!("criterion {criterion}: {} {detail}", if ok { "PASS" } else { "FAIL" });
}

fn sweep(id: TheoremId, corpus: &Corpus, samples: usize) -> TheoremReport {
    let options = VerifyOptions {
        seed: 1,
        policy_samples: samples,
        ..VerifyOptions::default()
    };
    verify_theorem(id, corpus, &options).expect("sweep runs")
}

fn summary(r: &TheoremReport) -> String {
    format!(
        "{}: checked {} failed {} skipped {}",
        r.theorem, r.checked, r.failed, r.skipped
    )
}

fn first_witness(r: &TheoremReport) -> String {
    r.witnesses()
        .next()
        .map(|w| format!(" first witness {} expected {} got {}", w.graph6, w.expected, w.actual))
        .unwrap_or_default()
}

#[test]
fn criterion_01_oracle_gates() {
    let mut matching_graphs = 0;
    let mut matching_mismatches = 0;
    let mut check = |g: &Multigraph| {
        matching_graphs += 1;
        let m = matching::max_matching(g);
        let endpoints: Vec<_> = m.edges().iter().flat_map(|&e| g.endpoints(e).unwrap()).collect();
        let disjoint = endpoints.len() == {
            let mut s = endpoints.clone();
            s.sort_unstable();
            s.dedup();
            s.len()
        };
        if !disjoint || m.len() != oracle::matching_number(g) {
            matching_mismatches += 1;
        }
    };
    for n in 1..=8 {
        all_connected_graphs(n).unwrap().iter().for_each(&mut check);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for i in 0..1000 {
        let p = 0.15 + 0.5 * (i % 10) as f64 / 10.0;
        check(&random_graph(10, p, &mut rng));
    }

    let mut cut_graphs = 0;
    let mut cut_mismatches = 0;
    for n in [4, 6, 8, 10] {
        for g in cubic(n).iter().filter(|g| matching::is_matching_covered(g)) {
            cut_graphs += 1;
            let all = enumerate_tight_cuts_exhaustive(g, DEFAULT_EXHAUSTIVE_BOUND).unwrap();
            let agrees = match find_nontrivial_tight_cut(g).unwrap() {
                Some((cut, _)) => all.contains(&cut.normalized()),
                None => all.is_empty(),
            };
            if !agrees {
                cut_mismatches += 1;
            }
        }
    }
    let ok = matching_mismatches == 0 && cut_mismatches == 0;
    report(
        1,
        ok,
        &format!(
            "matching {matching_mismatches}/{matching_graphs} mismatches, tight cuts {cut_mismatches}/{cut_graphs} mismatches"
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_02_cubic_tight_cuts_are_three_cuts() {
    let r = sweep(TheoremId::CubicTightCutsAreThreeCuts, &cubic_corpus(&CUBIC_ORDERS), 0);
    let ok = r.failed == 0 && r.checked > 0;
    report(2, ok, &(summary(&r) + &first_witness(&r)));
    assert!(ok);
}

#[test]
fn criterion_03_efec_cubic_is_brick_xor_brace() {
    let r = sweep(TheoremId::EfecCubicIsBrickOrBrace, &cubic_corpus(&CUBIC_ORDERS), 0);
    let ok = r.failed == 0 && r.checked > 0;
    report(3, ok, &(summary(&r) + &first_witness(&r)));
    assert!(ok);
}

#[test]
fn criterion_04_edge_trichotomy() {
    let corpus = cubic_corpus(&CUBIC_ORDERS);
    let a = sweep(TheoremId::RemovableOrDoubleton, &corpus, 0);
    let b = sweep(TheoremId::EdgeTrichotomy, &corpus, 0);
    let ok = a.failed == 0 && b.failed == 0 && a.checked > 0 && b.checked > 0;
    report(
        4,
        ok,
        &format!("{}; {}{}{}", summary(&a), summary(&b), first_witness(&a), first_witness(&b)),
    );
    assert!(ok);
}

#[test]
fn criterion_05_deletion_brick_count() {
    let r = sweep(TheoremId::DeletionBrickCountIsOneOrTwo, &cubic_corpus(&CUBIC_ORDERS), 0);
    let ok = r.failed == 0 && r.checked > 0;
    report(5, ok, &(summary(&r) + &first_witness(&r)));
    assert!(ok);
}

#[test]
fn criterion_06_petersen_facts() {
    let g = catalog::petersen();
    let k4 = catalog::k4();
    let classes = classify_all(&g, Mode::Strict).unwrap();
    let quasi = classes
        .iter()
        .filter(|c| c.class == EdgeClass::QuasiBInvariant)
        .count();
    let mut two_k4_bricks = 0;
    for e in g.edge_ids() {
        let tree = tight_cut_decomposition(&g.without_edge(e).unwrap(), Policy::Deterministic).unwrap();
        let bricks = tree.bricks();
        if bricks.len() == 2 && bricks.iter().all(|b| is_isomorphic(&b.underlying_simple(), &k4)) {
            two_k4_bricks += 1;
        }
    }
    let snark = is_snark(&g).unwrap();
    let removable = removable_edges(&g).unwrap().len();
    let ok = quasi == 15 && two_k4_bricks == 15 && snark && removable == 15;
    report(
        6,
        ok,
        &format!("quasi {quasi}/15, two K4 bricks {two_k4_bricks}/15, snark {snark}, removable {removable}/15"),
    );
    assert!(ok);
}

#[test]
fn criterion_07_two_quasi_edges_at_a_vertex() {
    let r = sweep(TheoremId::TwoQuasiEdgesAtVertex, &cubic_corpus(&[10, 12]), 0);
    let petersen = catalog::petersen();
    let cubeplex = catalog::cubeplex();
    let only = |tag: &str, target: &Multigraph| {
        let hits = r.tagged(tag);
        !hits.is_empty()
            && hits.iter().all(|g6| {
                is_isomorphic(&brickwork::graph::from_graph6(g6).unwrap(), target)
            })
    };
    let quasi_is_petersen = only("outcome-quasi-petersen", &petersen);
    let doubleton_is_cubeplex = only("outcome-doubleton-cubeplex", &cubeplex);
    let fig4 = sweep(
        TheoremId::TwoQuasiEdgesAtVertex,
        &Corpus::new("fig4", vec![catalog::fig4()]),
        0,
    );
    let fig4_b_invariant = fig4.failed == 0 && !fig4.tagged("outcome-b-invariant").is_empty();
    let ok = r.failed == 0 && quasi_is_petersen && doubleton_is_cubeplex && fig4_b_invariant;
    report(
        7,
        ok,
        &format!(
            "{}; quasi outcome only Petersen {quasi_is_petersen}, doubleton outcome only Cubeplex {doubleton_is_cubeplex}, fig4 b-invariant outcome {fig4_b_invariant}{}",
            summary(&r),
            first_witness(&r)
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_08_b_invariant_classes() {
    let corpus = cubic_corpus(&CUBIC_ORDERS).union(Corpus::new("fig4", vec![catalog::fig4()]));
    let a = sweep(TheoremId::VertexMeetsBInvariantClass, &corpus, 0);
    let b = sweep(TheoremId::ManyBInvariantEdges, &corpus, 0);
    let ok = a.failed == 0 && b.failed == 0 && a.checked > 0 && b.checked > 0;
    report(
        8,
        ok,
        &format!("{}; {}{}{}", summary(&a), summary(&b), first_witness(&a), first_witness(&b)),
    );
    assert!(ok);
}

#[test]
fn criterion_09_catalog_regression() {
    let mut failures = Vec::new();
    let mut total = 0;
    for name in ["k4", "c6bar", "tricorn", "fig1", "fig3", "fig5-left", "fig5-right"] {
        let entry = catalog::entry(name).unwrap();
        for c in check_facts(&entry) {
            total += 1;
            if !c.holds {
                failures.push(format!("{name}: {:?} got {}", c.fact, c.actual));
            }
        }
    }
    // The headline numbers again, computed directly rather than via facts.
    let direct = [
        removable_edges(&catalog::k4()).unwrap().is_empty(),
        removable_edges(&catalog::c6bar()).unwrap().is_empty(),
        brickwork::brick::removable_doubletons(&catalog::k4()).unwrap().len() == 3,
        brickwork::brick::removable_doubletons(&catalog::c6bar()).unwrap().len() == 3,
        removable_edges(&catalog::tricorn()).unwrap().len() == 3,
        !is_efec_cubic_brick(&catalog::tricorn()),
        brickwork::tightcut::b_count(&catalog::fig1()).unwrap() == 1,
        brickwork::tightcut::b_count(&catalog::fig3()).unwrap() == 2,
    ];
    let direct_ok = direct.iter().all(|&d| d);
    let ok = failures.is_empty() && direct_ok;
    report(
        9,
        ok,
        &format!("{} of {total} facts fail, direct checks {direct_ok} {failures:?}", failures.len()),
    );
    assert!(ok);
}

#[test]
fn criterion_10_decomposition_is_order_independent() {
    let mut graphs: Vec<Multigraph> = [4, 6, 8, 10]
        .iter()
        .flat_map(|&n| cubic(n).iter().cloned())
        .filter(matching::is_matching_covered)
        .collect();
    let cubic_count = graphs.len();
    let mut rng = ChaCha8Rng::seed_from_u64(1010);
    graphs.extend((0..200).map(|_| random_matching_covered(12, &mut rng)));
    let r = sweep(TheoremId::DecompositionUniqueness, &Corpus::new("mixed", graphs), 100);
    let ok = r.failed == 0 && r.checked == cubic_count + 200;
    report(10, ok, &(summary(&r) + &first_witness(&r)));
    assert!(ok);
}

#[test]
fn criterion_11_structural_sweeps() {
    let corpus = cubic_corpus(&CUBIC_ORDERS).union(Corpus::new(
        "catalog",
        catalog::NAMES.iter().map(|n| catalog::graph(n).unwrap()).collect(),
    ));
    let ids = [
        TheoremId::Uncrossing,
        TheoremId::BarriersAfterDeletionAreSpecial,
        TheoremId::QuasiEdgeStructure,
        TheoremId::FourCutShore,
        TheoremId::AdjacentDeletionBarriers,
        TheoremId::SmallBarrierAtQuasiPair,
    ];
    let reports: Vec<TheoremReport> = ids.iter().map(|&id| sweep(id, &corpus, 0)).collect();
    let ok = reports.iter().all(|r| r.failed == 0 && r.checked > 0);
    let lines: Vec<String> = reports.iter().map(|r| summary(r) + &first_witness(r)).collect();
    report(11, ok, &lines.join("; "));
    assert!(ok);
}
