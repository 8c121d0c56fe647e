//! Tight cut decomposition: split along a nontrivial tight cut, recurse on
//! both `∂`-contractions, stop at bricks and braces.

use std::collections::BTreeSet;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use super::{elp_candidates, find_nontrivial_tight_cut, is_tight_cut, TightCutKind};
use crate::error::{Error, Result};
use crate::graph::{canonical_form, CanonicalForm, Cut, GraphJson, Multigraph, Vertex};
use crate::matching;

/// Which nontrivial tight cut to split along when several exist.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Policy {
    /// The cut returned by [`find_nontrivial_tight_cut`].
    Deterministic,
    /// A uniformly random cut among all barrier and 2-separation cuts found
    /// by vertex-pair scans.
    Seeded(u64),
}

impl FromStr for Policy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "det" {
            return Ok(Policy::Deterministic);
        }
        s.strip_prefix("seed:")
            .and_then(|n| n.parse().ok())
            .map(Policy::Seeded)
            .ok_or_else(|| Error::Precondition(format!("policy must be det or seed:N, got {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LeafVerdict {
    Brick,
    Brace,
}

#[derive(Debug, Clone)]
pub enum DecompositionTree {
    Leaf {
        graph: Multigraph,
        verdict: LeafVerdict,
    },
    /// `children[0]` keeps the shore and contracts the complement;
    /// `children[1]` contracts the shore.
    Split {
        graph: Multigraph,
        cut: Cut,
        kind: TightCutKind,
        children: Box<[DecompositionTree; 2]>,
    },
}

pub const SHORE_SIDE_LABEL: &str = "xbar";
pub const COMPLEMENT_SIDE_LABEL: &str = "x";

impl DecompositionTree {
    pub fn graph(&self) -> &Multigraph {
        match self {
            DecompositionTree::Leaf { graph, .. } | DecompositionTree::Split { graph, .. } => graph,
        }
    }

    pub fn leaves(&self) -> Vec<(&Multigraph, LeafVerdict)> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<(&'a Multigraph, LeafVerdict)>) {
        match self {
            DecompositionTree::Leaf { graph, verdict } => out.push((graph, *verdict)),
            DecompositionTree::Split { children, .. } => {
                for c in children.iter() {
                    c.collect_leaves(out);
                }
            }
        }
    }

    pub fn bricks(&self) -> Vec<&Multigraph> {
        self.leaves()
            .into_iter()
            .filter(|(_, v)| *v == LeafVerdict::Brick)
            .map(|(g, _)| g)
            .collect()
    }

    pub fn brick_count(&self) -> usize {
        self.bricks().len()
    }

    pub fn brace_count(&self) -> usize {
        self.leaves().len() - self.brick_count()
    }

    /// Internal cuts are nontrivial and tight, children have `|X| + 1` and
    /// `|X̄| + 1` vertices, leaves are free of nontrivial tight cuts.
    pub fn check(&self) -> Result<()> {
        match self {
            DecompositionTree::Leaf { graph, verdict } => {
                if find_nontrivial_tight_cut(graph)?.is_some() {
                    return Err(Error::Structure("leaf has a nontrivial tight cut".into()));
                }
                if (*verdict == LeafVerdict::Brace) != graph.is_bipartite() {
                    return Err(Error::Structure("leaf verdict disagrees with bipartiteness".into()));
                }
            }
            DecompositionTree::Split {
                graph,
                cut,
                children,
                ..
            } => {
                if cut.is_trivial() || !is_tight_cut(graph, cut.shore())? {
                    return Err(Error::Structure("internal cut is trivial or not tight".into()));
                }
                if children[0].graph().order() != cut.shore().len() + 1
                    || children[1].graph().order() != cut.complement().len() + 1
                {
                    return Err(Error::Structure("child orders do not match the shores".into()));
                }
                for c in children.iter() {
                    if !matching::is_matching_covered(c.graph()) {
                        return Err(Error::Structure("child is not matching covered".into()));
                    }
                    c.check()?;
                }
            }
        }
        Ok(())
    }

    /// Nested `{graph, cut-shore, kind, children}` or `{graph, leaf-verdict}`,
    /// with vertex ids renumbered as in each node's graph JSON.
    pub fn to_json(&self) -> Value {
        let (_, map) = self.graph().compact();
        let remap = |s: &BTreeSet<Vertex>| -> Vec<Vertex> {
            s.iter().map(|&v| map[v].expect("live vertex")).collect()
        };
        match self {
            DecompositionTree::Leaf { graph, verdict } => json!({
                "graph": GraphJson::from_graph(graph),
                "leaf-verdict": verdict,
            }),
            DecompositionTree::Split {
                graph,
                cut,
                kind,
                children,
            } => {
                let kind = match kind {
                    TightCutKind::BarrierCut { barrier, component } => json!({
                        "type": "barrier-cut",
                        "barrier": remap(barrier),
                        "component": remap(component),
                    }),
                    TightCutKind::TwoSeparationCut { pair, union } => json!({
                        "type": "two-separation-cut",
                        "pair": [map[pair.0], map[pair.1]],
                        "union": remap(union),
                    }),
                    TightCutKind::Other => json!({"type": "other"}),
                };
                json!({
                    "graph": GraphJson::from_graph(graph),
                    "cut-shore": remap(cut.shore()),
                    "kind": kind,
                    "children": [children[0].to_json(), children[1].to_json()],
                })
            }
        }
    }
}

pub fn tight_cut_decomposition(g: &Multigraph, policy: Policy) -> Result<DecompositionTree> {
    if !matching::is_matching_covered(g) {
        return Err(Error::NotMatchingCovered);
    }
    let mut rng = match policy {
        Policy::Deterministic => None,
        Policy::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
    };
    decompose(g.clone(), &mut rng)
}

fn decompose(g: Multigraph, rng: &mut Option<ChaCha8Rng>) -> Result<DecompositionTree> {
    let chosen = match rng {
        None => find_nontrivial_tight_cut(&g)?,
        Some(rng) => elp_candidates(&g)?.choose(rng).cloned(),
    };
    let Some((cut, kind)) = chosen else {
        let verdict = if g.is_bipartite() {
            LeafVerdict::Brace
        } else {
            LeafVerdict::Brick
        };
        return Ok(DecompositionTree::Leaf { graph: g, verdict });
    };
    let keep_shore = g.contract_shore(cut.complement(), SHORE_SIDE_LABEL)?;
    let keep_complement = g.contract_shore(cut.shore(), COMPLEMENT_SIDE_LABEL)?;
    let children = Box::new([decompose(keep_shore, rng)?, decompose(keep_complement, rng)?]);
    Ok(DecompositionTree::Split {
        graph: g,
        cut,
        kind,
        children,
    })
}

/// Number of bricks in a tight cut decomposition.
pub fn b_count(g: &Multigraph) -> Result<usize> {
    Ok(tight_cut_decomposition(g, Policy::Deterministic)?.brick_count())
}

/// Sorted canonical forms of the leaves with parallel edges collapsed.
pub fn leaf_multiset(tree: &DecompositionTree) -> Vec<CanonicalForm> {
    let mut forms: Vec<CanonicalForm> = tree
        .leaves()
        .into_iter()
        .map(|(g, _)| canonical_form(&g.underlying_simple()))
        .collect();
    forms.sort();
    forms
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::catalog;

    fn names_of(tree: &DecompositionTree) -> Vec<CanonicalForm> {
        leaf_multiset(tree)
    }

    #[test]
    fn fig1_decomposes_into_k4_and_k33() {
        let tree = tight_cut_decomposition(&catalog::fig1(), Policy::Deterministic).unwrap();
        tree.check().unwrap();
        assert_eq!(tree.brick_count(), 1);
        assert_eq!(tree.brace_count(), 1);
        let mut expected = vec![canonical_form(&catalog::k4()), canonical_form(&catalog::k33())];
        expected.sort();
        assert_eq!(names_of(&tree), expected);
    }

    #[test]
    fn fig3_has_two_k4_bricks() {
        let tree = tight_cut_decomposition(&catalog::fig3(), Policy::Deterministic).unwrap();
        tree.check().unwrap();
        assert_eq!(tree.brick_count(), 2);
        let k4 = canonical_form(&catalog::k4());
        assert_eq!(names_of(&tree), vec![k4.clone(), k4]);
    }

    #[test]
    fn b_values() {
        assert_eq!(b_count(&catalog::k33()).unwrap(), 0);
        assert_eq!(b_count(&catalog::petersen()).unwrap(), 1);
        let p = catalog::petersen();
        for e in p.edge_ids() {
            assert_eq!(b_count(&p.without_edge(e).unwrap()).unwrap(), 2);
        }
    }

    #[test]
    fn seeded_policies_agree() {
        let g = catalog::fig3();
        let reference = names_of(&tight_cut_decomposition(&g, Policy::Deterministic).unwrap());
        for seed in 0..10 {
            let tree = tight_cut_decomposition(&g, Policy::Seeded(seed)).unwrap();
            tree.check().unwrap();
            assert_eq!(names_of(&tree), reference);
        }
    }

    #[test]
    fn policy_parsing() {
        assert_eq!("det".parse::<Policy>().unwrap(), Policy::Deterministic);
        assert_eq!("seed:7".parse::<Policy>().unwrap(), Policy::Seeded(7));
        assert!("seed:x".parse::<Policy>().is_err());
    }

    #[test]
    fn json_shape() {
        let tree = tight_cut_decomposition(&catalog::fig1(), Policy::Deterministic).unwrap();
        let v = tree.to_json();
        assert!(v.get("cut-shore").is_some());
        assert_eq!(v["children"].as_array().unwrap().len(), 2);
        assert!(v["children"][0].get("leaf-verdict").is_some());
    }
}
