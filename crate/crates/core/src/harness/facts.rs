//! Evaluation of the facts attached to catalog entries.

use serde::Serialize;
use serde_json::{json, Value};

use crate::brick::{
    classify_edge, is_essentially_4ec_cubic, is_near_bipartite, is_snark, removable_doubletons,
    removable_edges, Mode,
};
use crate::error::{Error, Result};
use crate::graph::catalog::{self, CatalogEntry, KnownFact};
use crate::graph::{canonical_form, CanonicalForm, EdgeId, Multigraph, Vertex};
use crate::matching;
use crate::tightcut::{
    is_brace, is_brick, is_tight_cut, leaf_multiset, tight_cut_decomposition, Policy,
};

#[derive(Debug, Clone, Serialize)]
pub struct FactCheck {
    pub fact: KnownFact,
    pub holds: bool,
    /// What was computed, or the error message.
    pub actual: Value,
}

fn vertex(g: &Multigraph, label: &str) -> Result<Vertex> {
    g.find_label(label)
        .ok_or_else(|| Error::Precondition(format!("no vertex labelled {label:?}")))
}

fn edge(g: &Multigraph, ends: &[&str; 2]) -> Result<EdgeId> {
    let (a, b) = (vertex(g, ends[0])?, vertex(g, ends[1])?);
    g.edges_between(a, b)
        .first()
        .copied()
        .ok_or_else(|| Error::Precondition(format!("{} and {} are not adjacent", ends[0], ends[1])))
}

fn named_forms(names: &[&str]) -> Result<Vec<CanonicalForm>> {
    let mut forms: Vec<CanonicalForm> = names
        .iter()
        .map(|n| catalog::graph(n).map(|g| canonical_form(&g.underlying_simple())))
        .collect::<Result<_>>()?;
    forms.sort();
    Ok(forms)
}

/// Names of catalog graphs isomorphic to each simplified leaf, or `"?"`.
fn leaf_names(forms: &[CanonicalForm]) -> Vec<String> {
    forms
        .iter()
        .map(|f| {
            catalog::NAMES
                .iter()
                .find(|n| {
                    catalog::graph(n)
                        .map(|g| &canonical_form(&g.underlying_simple()) == f)
                        .unwrap_or(false)
                })
                .map(|n| n.to_string())
                .unwrap_or_else(|| "?".into())
        })
        .collect()
}

fn evaluate(g: &Multigraph, fact: &KnownFact) -> Result<(bool, Value)> {
    let flag = |expected: bool, actual: bool| (expected == actual, json!(actual));
    let count = |expected: usize, actual: usize| (expected == actual, json!(actual));
    Ok(match fact {
        KnownFact::Order { value } => count(*value, g.order()),
        KnownFact::Cubic { value } => flag(*value, g.is_cubic()),
        KnownFact::MatchingCovered { value } => flag(*value, matching::is_matching_covered(g)),
        KnownFact::Bicritical { value } => flag(*value, matching::is_bicritical(g)?),
        KnownFact::Brick { value } => flag(*value, is_brick(g)),
        KnownFact::Brace { value } => flag(*value, is_brace(g)),
        KnownFact::EssentiallyFourEdgeConnected { value } => {
            flag(*value, is_essentially_4ec_cubic(g))
        }
        KnownFact::NearBipartite { value } => flag(*value, is_near_bipartite(g)?),
        KnownFact::Snark { value } => flag(*value, is_snark(g)?),
        KnownFact::BCount { value } => count(
            *value,
            tight_cut_decomposition(g, Policy::Deterministic)?.brick_count(),
        ),
        KnownFact::RemovableEdges { value } => count(*value, removable_edges(g)?.len()),
        KnownFact::RemovableDoubletons { value } => count(*value, removable_doubletons(g)?.len()),
        KnownFact::AllRemovableBInvariant => {
            let mut bs = Vec::new();
            for e in removable_edges(g)? {
                bs.push(tight_cut_decomposition(&g.without_edge(e)?, Policy::Deterministic)?.brick_count());
            }
            (bs.iter().all(|&b| b == 1), json!(bs))
        }
        KnownFact::Leaves { names } => {
            let tree = tight_cut_decomposition(g, Policy::Deterministic)?;
            let forms = leaf_multiset(&tree);
            (forms == named_forms(names)?, json!(leaf_names(&forms)))
        }
        KnownFact::CutIsTight { shore, tight } => {
            let s = shore.iter().map(|l| vertex(g, l)).collect::<Result<_>>()?;
            flag(*tight, is_tight_cut(g, &s)?)
        }
        KnownFact::DeletionBCount { ends, value } => {
            let ge = g.without_edge(edge(g, ends)?)?;
            count(*value, tight_cut_decomposition(&ge, Policy::Deterministic)?.brick_count())
        }
        KnownFact::DeletionLeaves { ends, names } => {
            let ge = g.without_edge(edge(g, ends)?)?;
            let tree = tight_cut_decomposition(&ge, Policy::Deterministic)?;
            let bricks: Vec<CanonicalForm> = {
                let mut f: Vec<CanonicalForm> = tree
                    .bricks()
                    .into_iter()
                    .map(|b| canonical_form(&b.underlying_simple()))
                    .collect();
                f.sort();
                f
            };
            (bricks == named_forms(names)?, json!(leaf_names(&bricks)))
        }
        KnownFact::EdgeClass { ends, class } => {
            let e = edge(g, ends)?;
            let mode = if is_essentially_4ec_cubic(g) {
                Mode::Strict
            } else {
                Mode::Relaxed
            };
            let c = classify_edge(g, e, mode)?;
            (c.class.name() == *class, json!(c.class))
        }
    })
}

/// Every known fact of `entry`, evaluated on its graph.
pub fn check_facts(entry: &CatalogEntry) -> Vec<FactCheck> {
    entry
        .known_facts
        .iter()
        .map(|fact| match evaluate(&entry.graph, fact) {
            Ok((holds, actual)) => FactCheck {
                fact: fact.clone(),
                holds,
                actual,
            },
            Err(e) => FactCheck {
                fact: fact.clone(),
                holds: false,
                actual: json!({ "error": e.to_string() }),
            },
        })
        .collect()
}
