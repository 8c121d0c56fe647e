//! Theorem sweeps over graph corpora.
//!
//! Each [`TheoremId`] names one statement about matching covered graphs or
//! cubic bricks. [`verify_theorem`] checks it on every applicable graph of a
//! corpus and collects failure witnesses that embed the whole graph, so any
//! failure replays on its own.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Serialize, Serializer};
use serde_json::{json, Value};

use crate::brick::{
    classify_all, is_efec_cubic_brick, is_essentially_4ec_cubic, is_inflexible, is_near_bipartite,
    is_snark, qbinv_structure_at, removable_doubletons, removable_edges, removable_structure_at,
    two_qbinv_vertex_outcome, binv_census_from, EdgeClass, Mode, StructureCase, VertexOutcome,
};
use crate::error::{Error, Result};
use crate::graph::{
    canonical_form, enumerate_small_edge_cuts, from_graph6, is_isomorphic, to_graph6, CanonicalForm,
    EdgeId, GraphJson, Multigraph, Vertex,
};
use crate::matching::{self, oracle};
use crate::tightcut::{
    enumerate_tight_cuts_exhaustive, find_nontrivial_tight_cut, is_brace, is_brick, leaf_multiset,
    tight_cut_decomposition, uncross, Policy, DEFAULT_EXHAUSTIVE_BOUND,
};

use super::generate::generate_cubic;

/// The verifiable statements. [`TheoremId::as_str`] gives the identifier
/// used on the command line and in reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    /// All decompositions give the same bricks and braces.
    DecompositionUniqueness,
    /// A graph with a nontrivial tight cut has a barrier or 2-separation cut.
    BarrierOrSeparationCutExists,
    /// Tight cuts of cubic matching covered graphs are 3-cuts.
    CubicTightCutsAreThreeCuts,
    /// Essentially 4-edge-connected cubic graphs are bricks or braces.
    EfecCubicIsBrickOrBrace,
    /// Each edge is removable or in a removable doubleton, never both.
    RemovableOrDoubleton,
    /// Removable edges have `b(G - e)` equal to 1 or 2.
    DeletionBrickCountIsOneOrTwo,
    /// Each edge is a doubleton member, b-invariant or quasi-b-invariant.
    EdgeTrichotomy,
    /// Two quasi-b-invariant edges at a vertex force one of three outcomes.
    TwoQuasiEdgesAtVertex,
    /// Every vertex meets a b-invariant class, except in Petersen.
    VertexMeetsBInvariantClass,
    /// Non-near-bipartite bricks other than Petersen have many b-invariant edges.
    ManyBInvariantEdges,
    /// Uncrossing two crossing tight cuts gives two tight cuts.
    Uncrossing,
    /// Every barrier of `G - e` is special.
    BarriersAfterDeletionAreSpecial,
    /// The structure around a quasi-b-invariant edge.
    QuasiEdgeStructure,
    /// A 4-cut with two edges at one shore vertex has a `K2` shore.
    FourCutShore,
    /// Barriers after deleting two adjacent edges share at most one vertex.
    AdjacentDeletionBarriers,
    /// Two quasi-b-invariant edges at a vertex give a barrier of size two.
    SmallBarrierAtQuasiPair,
    /// Snarks are non-near-bipartite with every edge removable.
    SnarkConsistency,
}

impl TheoremId {
    pub const ALL: [TheoremId; 17] = [
        TheoremId::DecompositionUniqueness,
        TheoremId::BarrierOrSeparationCutExists,
        TheoremId::CubicTightCutsAreThreeCuts,
        TheoremId::EfecCubicIsBrickOrBrace,
        TheoremId::RemovableOrDoubleton,
        TheoremId::DeletionBrickCountIsOneOrTwo,
        TheoremId::EdgeTrichotomy,
        TheoremId::TwoQuasiEdgesAtVertex,
        TheoremId::VertexMeetsBInvariantClass,
        TheoremId::ManyBInvariantEdges,
        TheoremId::Uncrossing,
        TheoremId::BarriersAfterDeletionAreSpecial,
        TheoremId::QuasiEdgeStructure,
        TheoremId::FourCutShore,
        TheoremId::AdjacentDeletionBarriers,
        TheoremId::SmallBarrierAtQuasiPair,
        TheoremId::SnarkConsistency,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::DecompositionUniqueness => "T1.1",
            TheoremId::BarrierOrSeparationCutExists => "T1.4",
            TheoremId::CubicTightCutsAreThreeCuts => "T1.6",
            TheoremId::EfecCubicIsBrickOrBrace => "C1.7",
            TheoremId::RemovableOrDoubleton => "T1.8",
            TheoremId::DeletionBrickCountIsOneOrTwo => "T1.10",
            TheoremId::EdgeTrichotomy => "C1.12",
            TheoremId::TwoQuasiEdgesAtVertex => "T1.11",
            TheoremId::VertexMeetsBInvariantClass => "C1.13",
            TheoremId::ManyBInvariantEdges => "C1.14",
            TheoremId::Uncrossing => "L1.5",
            TheoremId::BarriersAfterDeletionAreSpecial => "P3.4",
            TheoremId::QuasiEdgeStructure => "P3.5-3.9",
            TheoremId::FourCutShore => "L3.6",
            TheoremId::AdjacentDeletionBarriers => "L4.1",
            TheoremId::SmallBarrierAtQuasiPair => "L4.5",
            TheoremId::SnarkConsistency => "SNARK",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dedup {
    IsomorphismFree,
    Raw,
}

/// A named list of graphs.
#[derive(Debug, Clone)]
pub struct Corpus {
    pub descriptor: String,
    pub graphs: Vec<Multigraph>,
}

impl Corpus {
    pub fn new(descriptor: impl Into<String>, graphs: Vec<Multigraph>) -> Self {
        Corpus {
            descriptor: descriptor.into(),
            graphs,
        }
    }

    /// All connected cubic graphs on `n` vertices, up to isomorphism.
    pub fn generated(n: usize) -> Result<Self> {
        Ok(Corpus::new(format!("generated({n})"), generate_cubic(n)?))
    }

    /// One graph6 string per line; blank lines are skipped.
    pub fn from_graph6_text(descriptor: impl Into<String>, text: &str, dedup: Dedup) -> Result<Self> {
        let graphs = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(from_graph6)
            .collect::<Result<Vec<_>>>()?;
        let corpus = Corpus::new(descriptor, graphs);
        Ok(match dedup {
            Dedup::IsomorphismFree => corpus.deduplicated(),
            Dedup::Raw => corpus,
        })
    }

    pub fn from_graph6_file(path: &Path, dedup: Dedup) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
            path: path.display().to_string(),
            reason: e.to_string(),
        })?;
        Corpus::from_graph6_text(format!("graph6-file({})", path.display()), &text, dedup)
    }

    pub fn union(mut self, other: Corpus) -> Self {
        self.descriptor = format!("{} + {}", self.descriptor, other.descriptor);
        self.graphs.extend(other.graphs);
        self
    }

    /// Keeps the first graph of each isomorphism class.
    pub fn deduplicated(self) -> Self {
        let mut seen = BTreeSet::new();
        let graphs = self
            .graphs
            .into_iter()
            .filter(|g| seen.insert(canonical_form(g)))
            .collect();
        Corpus::new(self.descriptor, graphs)
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    /// Seeded decomposition orders per graph for the uniqueness check.
    pub policy_samples: usize,
    /// Cross-check the matching engine and the tight cut search against
    /// exhaustive oracles on graphs with at most this many vertices.
    pub gate_bound: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: 0,
            jobs: None,
            policy_samples: 100,
            gate_bound: 10,
        }
    }
}

/// A failed check on one graph.
#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub graph: GraphJson,
    pub graph6: String,
    /// The edge, vertex, cut or gate the failure concerns.
    pub detail: Value,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphStatus {
    Pass,
    Fail,
    /// The statement does not apply to this graph.
    Skip,
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphRecord {
    pub graph6: String,
    pub order: usize,
    pub status: GraphStatus,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub tags: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<Witness>,
    #[serde(skip)]
    form: CanonicalForm,
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    pub corpus: String,
    pub checked: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    /// For each tag, the graph6 strings of the graphs that carry it.
    pub tallies: BTreeMap<String, Vec<String>>,
    #[serde(skip)]
    pub records: Vec<GraphRecord>,
}

impl TheoremReport {
    pub fn witnesses(&self) -> impl Iterator<Item = &Witness> {
        self.records.iter().flat_map(|r| r.witnesses.iter())
    }

    pub fn tagged(&self, tag: &str) -> &[String] {
        self.tallies.get(tag).map(Vec::as_slice).unwrap_or(&[])
    }

    /// One line per graph, then a summary line.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            let mut v = serde_json::to_value(r).expect("plain data serializes");
            v["type"] = json!("graph");
            out.push_str(&v.to_string());
            out.push('\n');
        }
        let mut summary = serde_json::to_value(self).expect("plain data serializes");
        summary["type"] = json!("summary");
        out.push_str(&summary.to_string());
        out.push('\n');
        out
    }
}

/// Outcome of one check on one graph.
#[derive(Default)]
struct Check {
    applicable: bool,
    failures: Vec<(Value, String, String)>,
    tags: Vec<String>,
}

impl Check {
    fn applies() -> Self {
        Check {
            applicable: true,
            ..Check::default()
        }
    }

    fn expect(&mut self, ok: bool, detail: Value, expected: impl Into<String>, actual: impl Into<String>) {
        if !ok {
            self.failures.push((detail, expected.into(), actual.into()));
        }
    }

    fn tag(&mut self, t: &str) {
        if !self.tags.iter().any(|x| x == t) {
            self.tags.push(t.to_string());
        }
    }
}

pub fn verify_theorem(id: TheoremId, corpus: &Corpus, options: &VerifyOptions) -> Result<TheoremReport> {
    let run = || -> Vec<GraphRecord> {
        corpus
            .graphs
            .par_iter()
            .map(|g| record_for(id, g, options))
            .collect()
    };
    let mut records = match options.jobs {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build()
            .map_err(|e| Error::Precondition(e.to_string()))?
            .install(run),
        None => run(),
    };
    records.sort_by(|a, b| a.form.cmp(&b.form).then_with(|| a.graph6.cmp(&b.graph6)));
    let mut tallies: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for r in &records {
        for t in &r.tags {
            tallies.entry(t.clone()).or_default().push(r.graph6.clone());
        }
    }
    let count = |s: GraphStatus| records.iter().filter(|r| r.status == s).count();
    Ok(TheoremReport {
        theorem: id,
        corpus: corpus.descriptor.clone(),
        checked: records.len() - count(GraphStatus::Skip),
        passed: count(GraphStatus::Pass),
        failed: count(GraphStatus::Fail),
        skipped: count(GraphStatus::Skip),
        tallies,
        records,
    })
}

fn record_for(id: TheoremId, g: &Multigraph, options: &VerifyOptions) -> GraphRecord {
    let graph6 = to_graph6(g).unwrap_or_default();
    let mut check = gate(g, options);
    match run_check(id, g, options) {
        Ok(c) => {
            check.applicable |= c.applicable;
            check.failures.extend(c.failures);
            check.tags.extend(c.tags);
        }
        Err(e) => {
            check.applicable = true;
            check
                .failures
                .push((json!({"check": id.as_str()}), "no error".into(), e.to_string()));
        }
    }
    let status = if !check.failures.is_empty() {
        GraphStatus::Fail
    } else if check.applicable {
        GraphStatus::Pass
    } else {
        GraphStatus::Skip
    };
    let graph = GraphJson::from_graph(g);
    GraphRecord {
        witnesses: check
            .failures
            .into_iter()
            .map(|(detail, expected, actual)| Witness {
                graph: graph.clone(),
                graph6: graph6.clone(),
                detail,
                expected,
                actual,
            })
            .collect(),
        graph6,
        order: g.order(),
        status,
        tags: check.tags,
        form: canonical_form(g),
    }
}

/// Engine-versus-oracle agreement on one small graph. Failures are reported
/// but do not make the theorem applicable.
fn gate(g: &Multigraph, options: &VerifyOptions) -> Check {
    let mut c = Check::default();
    if g.order() > options.gate_bound {
        return c;
    }
    let detail = |what: &str| json!({"gate": what});
    let nu = matching::max_matching(g).len();
    let nu_oracle = oracle::matching_number(g);
    c.expect(nu == nu_oracle, detail("matching-number"), nu_oracle.to_string(), nu.to_string());
    if !matching::is_matching_covered(g) {
        return c;
    }
    let fast = find_nontrivial_tight_cut(g);
    let slow = enumerate_tight_cuts_exhaustive(g, options.gate_bound);
    match (fast, slow) {
        (Ok(f), Ok(s)) => c.expect(
            f.is_none() == s.is_empty(),
            detail("tight-cut-search"),
            format!("{} nontrivial tight cuts", s.len()),
            format!("search found {}", if f.is_some() { "a cut" } else { "none" }),
        ),
        (f, s) => c.expect(false, detail("tight-cut-search"), "no error", format!("{f:?} / {s:?}")),
    }
    c
}

fn edge_detail(g: &Multigraph, e: EdgeId) -> Value {
    json!({"edge": e, "ends": g.endpoints(e).ok()})
}

fn run_check(id: TheoremId, g: &Multigraph, options: &VerifyOptions) -> Result<Check> {
    match id {
        TheoremId::DecompositionUniqueness => check_uniqueness(g, options),
        TheoremId::BarrierOrSeparationCutExists => check_cut_existence(g),
        TheoremId::CubicTightCutsAreThreeCuts => check_cubic_tight_cuts(g),
        TheoremId::EfecCubicIsBrickOrBrace => Ok(check_brick_or_brace(g)),
        TheoremId::RemovableOrDoubleton => check_removable_or_doubleton(g),
        TheoremId::DeletionBrickCountIsOneOrTwo => check_deletion_b(g),
        TheoremId::EdgeTrichotomy => check_trichotomy(g),
        TheoremId::TwoQuasiEdgesAtVertex => check_vertex_outcomes(g),
        TheoremId::VertexMeetsBInvariantClass => check_census(g, false),
        TheoremId::ManyBInvariantEdges => check_census(g, true),
        TheoremId::Uncrossing => check_uncrossing(g),
        TheoremId::BarriersAfterDeletionAreSpecial => check_special_barriers(g),
        TheoremId::QuasiEdgeStructure => check_quasi_structure(g),
        TheoremId::FourCutShore => check_four_cuts(g),
        TheoremId::AdjacentDeletionBarriers => check_adjacent_barriers(g),
        TheoremId::SmallBarrierAtQuasiPair => check_small_barriers(g),
        TheoremId::SnarkConsistency => check_snark(g),
    }
}

fn check_uniqueness(g: &Multigraph, options: &VerifyOptions) -> Result<Check> {
    if !matching::is_matching_covered(g) {
        return Ok(Check::default());
    }
    let mut c = Check::applies();
    let reference_tree = tight_cut_decomposition(g, Policy::Deterministic)?;
    reference_tree.check()?;
    let reference = leaf_multiset(&reference_tree);
    for s in 0..options.policy_samples as u64 {
        let seed = options.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(s);
        let tree = tight_cut_decomposition(g, Policy::Seeded(seed))?;
        let leaves = leaf_multiset(&tree);
        c.expect(
            leaves == reference,
            json!({"policy": format!("seed:{seed}")}),
            format!("{} leaves as in the deterministic order", reference.len()),
            format!("{} leaves, different multiset", leaves.len()),
        );
        if leaves != reference {
            break;
        }
    }
    Ok(c)
}

fn check_cut_existence(g: &Multigraph) -> Result<Check> {
    if g.order() > DEFAULT_EXHAUSTIVE_BOUND || !matching::is_matching_covered(g) {
        return Ok(Check::default());
    }
    let mut c = Check::applies();
    let all = enumerate_tight_cuts_exhaustive(g, DEFAULT_EXHAUSTIVE_BOUND)?;
    let found = find_nontrivial_tight_cut(g)?;
    c.expect(
        found.is_some() == !all.is_empty(),
        json!({"nontrivial-tight-cuts": all.len()}),
        "search finds a cut iff one exists",
        format!("search returned {}", if found.is_some() { "a cut" } else { "none" }),
    );
    if let Some((cut, kind)) = found {
        c.expect(
            all.contains(&cut.clone().normalized()),
            json!({"cut": cut.shore(), "kind": kind}),
            "returned cut is a nontrivial tight cut",
            "not among the enumerated tight cuts",
        );
    }
    Ok(c)
}

fn check_cubic_tight_cuts(g: &Multigraph) -> Result<Check> {
    if !g.is_cubic() || g.order() > DEFAULT_EXHAUSTIVE_BOUND || !matching::is_matching_covered(g) {
        return Ok(Check::default());
    }
    let mut c = Check::applies();
    for cut in enumerate_tight_cuts_exhaustive(g, DEFAULT_EXHAUSTIVE_BOUND)? {
        c.expect(
            cut.size() == 3,
            json!({"cut": cut.shore()}),
            "3",
            cut.size().to_string(),
        );
    }
    Ok(c)
}

fn check_brick_or_brace(g: &Multigraph) -> Check {
    if !is_essentially_4ec_cubic(g) {
        return Check::default();
    }
    let mut c = Check::applies();
    let (brick, brace) = (is_brick(g), is_brace(g));
    c.expect(
        brick != brace,
        json!({}),
        "exactly one of brick, brace",
        format!("brick={brick} brace={brace}"),
    );
    c.tag(if brick { "brick" } else { "brace" });
    c
}

fn doubleton_members(g: &Multigraph) -> Result<BTreeMap<EdgeId, usize>> {
    let mut members = BTreeMap::new();
    for (e, f) in removable_doubletons(g)? {
        *members.entry(e).or_insert(0) += 1;
        *members.entry(f).or_insert(0) += 1;
    }
    Ok(members)
}

fn check_removable_or_doubleton(g: &Multigraph) -> Result<Check> {
    if !is_efec_cubic_brick(g) {
        return Ok(Check::default());
    }
    let mut c = Check::applies();
    let removable: BTreeSet<EdgeId> = removable_edges(g)?.into_iter().collect();
    let members = doubleton_members(g)?;
    for e in g.edge_ids() {
        let (r, d) = (removable.contains(&e), members.contains_key(&e));
        c.expect(
            r != d,
            edge_detail(g, e),
            "removable xor doubleton member",
            format!("removable={r} doubleton={d}"),
        );
    }
    if !members.is_empty() {
        c.tag("near-bipartite");
    }
    Ok(c)
}

fn check_deletion_b(g: &Multigraph) -> Result<Check> {
    if !is_efec_cubic_brick(g) {
        return Ok(Check::default());
    }
    let mut c = Check::applies();
    for cl in classify_all(g, Mode::Strict)? {
        let Some(b) = cl.b_after_deletion() else {
            continue;
        };
        c.expect(
            b == 1 || b == 2,
            edge_detail(g, cl.edge),
            "b(G-e) in {1, 2}",
            b.to_string(),
        );
        for v in cl.ends {
            match removable_structure_at(g, cl.edge, v) {
                Ok(s) => {
                    c.expect(
                        s.b_value() == b,
                        json!({"edge": cl.edge, "anchor": v, "case": s.case}),
                        b.to_string(),
                        s.b_value().to_string(),
                    );
                    c.tag(match (s.case, s.h_is_brick) {
                        (StructureCase::OneBarrier, _) => "one-barrier",
                        (StructureCase::TwoBarrier, true) => "two-barrier-brick",
                        (StructureCase::TwoBarrier, false) => "two-barrier-split",
                    });
                }
                Err(e) => c.expect(
                    false,
                    json!({"edge": cl.edge, "anchor": v}),
                    "barrier structure",
                    e.to_string(),
                ),
            }
        }
    }
    Ok(c)
}

fn check_trichotomy(g: &Multigraph) -> Result<Check> {
    if !is_efec_cubic_brick(g) {
        return Ok(Check::default());
    }
    let mut c = Check::applies();
    let removable: BTreeSet<EdgeId> = removable_edges(g)?.into_iter().collect();
    let members = doubleton_members(g)?;
    for cl in classify_all(g, Mode::Strict)? {
        let e = cl.edge;
        let in_class = matches!(
            cl.class,
            EdgeClass::DoubletonMember { .. } | EdgeClass::BInvariant | EdgeClass::QuasiBInvariant
        );
        c.expect(in_class, edge_detail(g, e), "one of the three classes", format!("{:?}", cl.class));
        let member = matches!(cl.class, EdgeClass::DoubletonMember { .. });
        c.expect(
            member == members.contains_key(&e) && cl.class.is_removable() == removable.contains(&e),
            edge_detail(g, e),
            "class agrees with the removable and doubleton scans",
            format!("{:?}", cl.class),
        );
        c.expect(
            members.get(&e).copied().unwrap_or(0) <= 1,
            edge_detail(g, e),
            "at most one doubleton per edge",
            format!("{}", members.get(&e).copied().unwrap_or(0)),
        );
    }
    Ok(c)
}

fn check_vertex_outcomes(g: &Multigraph) -> Result<Check> {
    if !is_efec_cubic_brick(g) {
        return Ok(Check::default());
    }
    let classes = classify_all(g, Mode::Strict)?;
    let quasi: BTreeSet<EdgeId> = classes
        .iter()
        .filter(|c| c.class == EdgeClass::QuasiBInvariant)
        .map(|c| c.edge)
        .collect();
    let mut c = Check::default();
    for v in g.vertices() {
        if g.incident(v).iter().filter(|e| quasi.contains(e)).count() < 2 {
            continue;
        }
        c.applicable = true;
        match two_qbinv_vertex_outcome(g, v) {
            Ok(out) => c.tag(match out.outcome {
                VertexOutcome::DoubletonCubeplex => "outcome-doubleton-cubeplex",
                VertexOutcome::QuasiPetersen => "outcome-quasi-petersen",
                VertexOutcome::BInvariant => "outcome-b-invariant",
            }),
            Err(e) => c.expect(false, json!({"vertex": v}), "one of the three outcomes", e.to_string()),
        }
    }
    Ok(c)
}

fn check_census(g: &Multigraph, count_bound: bool) -> Result<Check> {
    if !is_efec_cubic_brick(g) || is_isomorphic(g, &crate::graph::catalog::petersen()) {
        return Ok(Check::default());
    }
    let classes = classify_all(g, Mode::Strict)?;
    let census = binv_census_from(g, &classes)?;
    if count_bound {
        if census.near_bipartite {
            return Ok(Check::default());
        }
        let mut c = Check::applies();
        c.expect(
            2 * census.b_invariant_edges >= g.order(),
            json!({"order": g.order()}),
            format!("at least {} b-invariant edges", g.order().div_ceil(2)),
            census.b_invariant_edges.to_string(),
        );
        return Ok(c);
    }
    let mut c = Check::applies();
    for &v in &census.uncovered_vertices {
        c.expect(false, json!({"vertex": v}), "incident with a b-invariant class", "none");
    }
    Ok(c)
}

fn check_uncrossing(g: &Multigraph) -> Result<Check> {
    if g.order() > DEFAULT_EXHAUSTIVE_BOUND || !matching::is_matching_covered(g) {
        return Ok(Check::default());
    }
    let mut c = Check::applies();
    let cuts = enumerate_tight_cuts_exhaustive(g, DEFAULT_EXHAUSTIVE_BOUND)?;
    for (i, a) in cuts.iter().enumerate() {
        for b in &cuts[i + 1..] {
            let u = match uncross(g, a, b) {
                Ok(u) => u,
                Err(Error::Laminar(_)) => continue,
                Err(e) => return Err(e),
            };
            c.tag("crossing-pair");
            let detail = json!({"c": a.shore(), "d": b.shore()});
            c.expect(
                u.i_tight && u.u_tight && u.diagonal_edges == 0 && u.sizes_balance,
                detail.clone(),
                "both uncrossed cuts tight, no diagonal edges, sizes balance",
                format!(
                    "i_tight={} u_tight={} diagonal={} balance={}",
                    u.i_tight, u.u_tight, u.diagonal_edges, u.sizes_balance
                ),
            );
            if g.is_cubic() {
                c.expect(
                    u.i.size() == 3 && u.u.size() == 3,
                    detail,
                    "3-cuts",
                    format!("{} and {}", u.i.size(), u.u.size()),
                );
            }
        }
    }
    Ok(c)
}

/// Exhaustive barrier scans are capped at this order.
const BARRIER_SCAN_BOUND: usize = 14;

fn check_special_barriers(g: &Multigraph) -> Result<Check> {
    if g.order() > BARRIER_SCAN_BOUND || !is_efec_cubic_brick(g) {
        return Ok(Check::default());
    }
    let mut c = Check::applies();
    for e in removable_edges(g)? {
        let ge = g.without_edge(e)?;
        for b in oracle::all_barriers(&ge) {
            c.expect(
                matching::is_special_barrier(&ge, &b)?,
                json!({"edge": e, "barrier": b}),
                "special barrier",
                "not special",
            );
        }
    }
    Ok(c)
}

fn check_quasi_structure(g: &Multigraph) -> Result<Check> {
    if !is_efec_cubic_brick(g) {
        return Ok(Check::default());
    }
    let mut c = Check::applies();
    for cl in classify_all(g, Mode::Strict)? {
        if cl.class != EdgeClass::QuasiBInvariant {
            continue;
        }
        for v in cl.ends {
            let detail = json!({"edge": cl.edge, "anchor": v});
            let s = match qbinv_structure_at(g, cl.edge, v) {
                Ok(s) => s,
                Err(e) => {
                    c.expect(false, detail, "quasi-b-invariant structure", e.to_string());
                    continue;
                }
            };
            for name in s.failures() {
                c.expect(false, detail.clone(), name, "fails");
            }
            for (which, j) in [("J", &s.j), ("J'", &s.j2)] {
                match is_inflexible(j, s.xx) {
                    Ok(flex) if flex.inflexible => {
                        c.tag("inflexible");
                        c.expect(
                            flex.doubletons_hold == Some(true)
                                && flex.admissibility_holds == Some(true),
                            json!({"edge": cl.edge, "anchor": v, "side": which}),
                            "dependence gives removable doubletons and admissible xx'",
                            format!(
                                "doubletons={:?} admissible={:?}",
                                flex.doubletons_hold, flex.admissibility_holds
                            ),
                        );
                    }
                    Ok(flex) => {
                        c.tag("flexible");
                        c.expect(
                            flex.flexible_pairs_hold == Some(true),
                            json!({"edge": cl.edge, "anchor": v, "side": which}),
                            "every pair across xx' lies in a perfect matching",
                            "some pair does not",
                        );
                    }
                    Err(e) => c.expect(
                        false,
                        json!({"edge": cl.edge, "anchor": v, "side": which}),
                        "flexibility check",
                        e.to_string(),
                    ),
                }
            }
        }
    }
    Ok(c)
}

fn check_four_cuts(g: &Multigraph) -> Result<Check> {
    if !is_essentially_4ec_cubic(g) {
        return Ok(Check::default());
    }
    let mut c = Check::applies();
    for cut in enumerate_small_edge_cuts(g, 4)? {
        if cut.size() != 4 {
            continue;
        }
        for shore in [cut.shore(), cut.complement()] {
            let mut hits: BTreeMap<Vertex, usize> = BTreeMap::new();
            for &e in cut.edges() {
                for v in g.endpoints(e)? {
                    if shore.contains(&v) {
                        *hits.entry(v).or_insert(0) += 1;
                    }
                }
            }
            if hits.values().any(|&k| k >= 2) {
                let sub = g.induced(shore);
                c.expect(
                    sub.order() == 2 && sub.size() == 1,
                    json!({"shore": shore}),
                    "shore induces K2",
                    format!("{} vertices, {} edges", sub.order(), sub.size()),
                );
            }
        }
    }
    Ok(c)
}

/// Barriers with at least two vertices.
fn nontrivial_barriers(g: &Multigraph) -> Vec<BTreeSet<Vertex>> {
    oracle::all_barriers(g)
        .into_iter()
        .filter(|b| b.len() >= 2)
        .collect()
}

fn check_adjacent_barriers(g: &Multigraph) -> Result<Check> {
    if g.order() > BARRIER_SCAN_BOUND
        || g.order() % 2 == 1
        || !g.is_connected()
        || !matching::is_bicritical(g)?
    {
        return Ok(Check::default());
    }
    let mut c = Check::applies();
    let barriers: BTreeMap<EdgeId, Vec<BTreeSet<Vertex>>> = g
        .edge_ids()
        .map(|e| (e, nontrivial_barriers(&g.without_edge(e).expect("live edge"))))
        .collect();
    for v in g.vertices() {
        let at: Vec<EdgeId> = g.incident(v).to_vec();
        for (i, &e1) in at.iter().enumerate() {
            for &e2 in &at[i + 1..] {
                for b1 in &barriers[&e1] {
                    for b2 in &barriers[&e2] {
                        let common = b1.intersection(b2).count();
                        c.expect(
                            common <= 1,
                            json!({"edges": [e1, e2], "b1": b1, "b2": b2}),
                            "at most one common vertex",
                            common.to_string(),
                        );
                    }
                }
            }
        }
    }
    Ok(c)
}

fn check_small_barriers(g: &Multigraph) -> Result<Check> {
    if !is_efec_cubic_brick(g) {
        return Ok(Check::default());
    }
    let classes = classify_all(g, Mode::Strict)?;
    let quasi: BTreeSet<EdgeId> = classes
        .iter()
        .filter(|c| c.class == EdgeClass::QuasiBInvariant)
        .map(|c| c.edge)
        .collect();
    let mut c = Check::default();
    for v in g.vertices() {
        let at: Vec<EdgeId> = g.incident(v).iter().copied().filter(|e| quasi.contains(e)).collect();
        if at.len() < 2 {
            continue;
        }
        c.applicable = true;
        let mut sizes = Vec::new();
        for &e in &at {
            sizes.push(qbinv_structure_at(g, e, v)?.base.barrier.len());
        }
        let twos = sizes.iter().filter(|&&s| s == 2).count();
        let needed = at.len() - 1;
        c.expect(
            twos >= needed,
            json!({"vertex": v, "edges": at, "barrier-sizes": sizes}),
            format!("at least {needed} barriers of size two"),
            twos.to_string(),
        );
    }
    Ok(c)
}

fn check_snark(g: &Multigraph) -> Result<Check> {
    if !g.is_cubic() || !is_snark(g)? {
        return Ok(Check::default());
    }
    let mut c = Check::applies();
    c.tag("snark");
    c.expect(!is_near_bipartite(g)?, json!({}), "non-near-bipartite", "near-bipartite");
    let removable = removable_edges(g)?.len();
    c.expect(
        removable == g.size(),
        json!({}),
        format!("{} removable edges", g.size()),
        removable.to_string(),
    );
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::catalog;

    #[test]
    fn ids_round_trip() {
        for t in TheoremId::ALL {
            assert_eq!(t.as_str().parse::<TheoremId>().unwrap(), t);
        }
        assert_eq!(
            "T9.9".parse::<TheoremId>().unwrap_err(),
            Error::UnknownTheorem("T9.9".into())
        );
    }

    #[test]
    fn reports_are_deterministic() {
        let corpus = Corpus::generated(8).unwrap();
        let opts = VerifyOptions {
            policy_samples: 5,
            ..VerifyOptions::default()
        };
        let a = verify_theorem(TheoremId::DecompositionUniqueness, &corpus, &opts).unwrap();
        let b = verify_theorem(TheoremId::DecompositionUniqueness, &corpus, &opts).unwrap();
        assert_eq!(a.to_json_lines(), b.to_json_lines());
        assert_eq!(a.failed, 0);
        assert_eq!(a.witnesses().count(), 0);
    }

    #[test]
    fn petersen_sweeps() {
        let corpus = Corpus::new("petersen", vec![catalog::petersen()]);
        let opts = VerifyOptions::default();
        for t in [
            TheoremId::TwoQuasiEdgesAtVertex,
            TheoremId::QuasiEdgeStructure,
            TheoremId::SmallBarrierAtQuasiPair,
            TheoremId::SnarkConsistency,
        ] {
            let r = verify_theorem(t, &corpus, &opts).unwrap();
            assert_eq!((r.checked, r.failed), (1, 0), "{t}");
        }
        let r = verify_theorem(TheoremId::TwoQuasiEdgesAtVertex, &corpus, &opts).unwrap();
        assert_eq!(r.tagged("outcome-quasi-petersen").len(), 1);
    }

    #[test]
    fn inapplicable_graphs_are_skipped() {
        // the prism is not essentially 4-edge-connected
        let corpus = Corpus::new("prism", vec![catalog::c6bar()]);
        let r = verify_theorem(TheoremId::EfecCubicIsBrickOrBrace, &corpus, &VerifyOptions::default())
            .unwrap();
        assert_eq!(r.skipped, 1);
    }
}
