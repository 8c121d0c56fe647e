//! One-graph summary combining every module.

use serde::Serialize;
use serde_json::Value;

use crate::brick::{
    binv_census_from, classify_all, is_3_edge_colorable, is_essentially_4ec_cubic,
    is_near_bipartite, BinvCensus, Mode,
};
use crate::error::Result;
use crate::graph::{GraphJson, Multigraph};
use crate::matching;
use crate::tightcut::{is_brace, is_brick, tight_cut_decomposition, Policy};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Brick,
    Brace,
    /// Matching covered with a nontrivial tight cut.
    Composite,
    NotMatchingCovered,
}

#[derive(Debug, Clone, Serialize)]
pub struct Analysis {
    pub graph: GraphJson,
    pub order: usize,
    pub size: usize,
    pub verdict: Verdict,
    pub cubic: bool,
    pub matching_covered: bool,
    pub bicritical: Option<bool>,
    pub b: Option<usize>,
    pub brace_count: Option<usize>,
    pub essentially_4ec: Option<bool>,
    pub near_bipartite: Option<bool>,
    pub three_edge_colorable: Option<bool>,
    pub snark: Option<bool>,
    pub removable_edges: Option<usize>,
    pub quasi_b_invariant_edges: Option<usize>,
    pub decomposition: Option<Value>,
    pub edges: Option<Vec<Value>>,
    pub census: Option<BinvCensus>,
}

pub fn analyze(g: &Multigraph) -> Result<Analysis> {
    let matching_covered = matching::is_matching_covered(g);
    let cubic = g.is_cubic();
    let brick = is_brick(g);
    let verdict = if brick {
        Verdict::Brick
    } else if is_brace(g) {
        Verdict::Brace
    } else if matching_covered {
        Verdict::Composite
    } else {
        Verdict::NotMatchingCovered
    };
    let bicritical = g.order().is_multiple_of(2).then(|| matching::is_bicritical(g)).transpose()?;
    let tree = matching_covered
        .then(|| tight_cut_decomposition(g, Policy::Deterministic))
        .transpose()?;
    let efec = cubic.then(|| is_essentially_4ec_cubic(g));
    let colorable = cubic.then(|| is_3_edge_colorable(g)).transpose()?;
    let mut a = Analysis {
        graph: GraphJson::from_graph(g),
        order: g.order(),
        size: g.size(),
        verdict,
        cubic,
        matching_covered,
        bicritical,
        b: tree.as_ref().map(|t| t.brick_count()),
        brace_count: tree.as_ref().map(|t| t.brace_count()),
        essentially_4ec: efec,
        near_bipartite: None,
        three_edge_colorable: colorable,
        snark: None,
        removable_edges: None,
        quasi_b_invariant_edges: None,
        decomposition: tree.as_ref().map(|t| t.to_json()),
        edges: None,
        census: None,
    };
    if brick {
        a.near_bipartite = Some(is_near_bipartite(g)?);
    }
    if brick && cubic {
        let strict = efec == Some(true);
        let mode = if strict { Mode::Strict } else { Mode::Relaxed };
        let classes = classify_all(g, mode)?;
        a.removable_edges = Some(classes.iter().filter(|c| c.class.is_removable()).count());
        a.quasi_b_invariant_edges = Some(
            classes
                .iter()
                .filter(|c| c.class == crate::brick::EdgeClass::QuasiBInvariant)
                .count(),
        );
        a.snark = Some(strict && colorable == Some(false));
        if strict {
            a.census = Some(binv_census_from(g, &classes)?);
        }
        a.edges = Some(classes.iter().map(|c| c.to_json(false)).collect());
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::catalog;

    #[test]
    fn petersen_summary() {
        let a = analyze(&catalog::petersen()).unwrap();
        assert_eq!(a.verdict, Verdict::Brick);
        assert_eq!(a.essentially_4ec, Some(true));
        assert_eq!(a.near_bipartite, Some(false));
        assert_eq!(a.quasi_b_invariant_edges, Some(15));
        assert_eq!(a.snark, Some(true));
    }

    #[test]
    fn k33_is_a_brace() {
        assert_eq!(analyze(&catalog::k33()).unwrap().verdict, Verdict::Brace);
    }

    #[test]
    fn tricorn_summary() {
        let a = analyze(&catalog::tricorn()).unwrap();
        assert_eq!(a.verdict, Verdict::Brick);
        assert_eq!(a.essentially_4ec, Some(false));
        assert_eq!(a.removable_edges, Some(3));
        for e in a.edges.unwrap() {
            if e.get("b").is_some() {
                assert_eq!(e["b"], 1);
            }
        }
    }
}
