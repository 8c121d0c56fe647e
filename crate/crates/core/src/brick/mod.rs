//! Edge classes of cubic bricks.
//!
//! In an essentially 4-edge-connected cubic brick every edge is either a
//! member of a removable doubleton, b-invariant (`b(G-e) = 1`) or
//! quasi-b-invariant (`b(G-e) = 2`). [`classify_edge`] computes `b(G-e)` by
//! a full tight cut decomposition; [`removable_structure`] reaches the same
//! number through the barriers of `G - e`.

mod structure;

use std::collections::BTreeSet;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::catalog::EdgeClassName;
use crate::graph::{edge_connectivity, enumerate_small_edge_cuts, EdgeId, Multigraph, Vertex};
use crate::matching::{self, Matcher};
use crate::tightcut::{is_brick, tight_cut_decomposition, DecompositionTree, Policy};

pub use structure::{
    is_inflexible, qbinv_structure, qbinv_structure_at, removable_structure,
    removable_structure_at, two_qbinv_vertex_outcome, Flexibility, QbinvStructure,
    RemovableStructure, StructureCase, TwoQbinvOutcome, VertexOutcome,
};

/// Cubic, 3-edge-connected, and every 3-edge-cut trivial.
pub fn is_essentially_4ec_cubic(g: &Multigraph) -> bool {
    if !g.is_cubic() || !g.is_connected() {
        return false;
    }
    if edge_connectivity(g).map(|k| k < 3).unwrap_or(true) {
        return false;
    }
    enumerate_small_edge_cuts(g, 3)
        .map(|cuts| cuts.iter().all(|c| c.is_trivial()))
        .unwrap_or(false)
}

pub fn is_efec_cubic_brick(g: &Multigraph) -> bool {
    is_essentially_4ec_cubic(g) && is_brick(g)
}

/// `G - e` is matching covered.
pub fn is_removable(g: &Multigraph, e: EdgeId) -> Result<bool> {
    Ok(matching::is_matching_covered(&g.without_edge(e)?))
}

pub fn removable_edges(g: &Multigraph) -> Result<Vec<EdgeId>> {
    let mut out = Vec::new();
    for e in g.edge_ids() {
        if is_removable(g, e)? {
            out.push(e);
        }
    }
    Ok(out)
}

/// Pairs `{e, f}` (with `e < f`) such that `G - e - f` is bipartite and
/// matching covered. Only mutually dependent pairs are tested.
pub fn removable_doubletons(g: &Multigraph) -> Result<Vec<(EdgeId, EdgeId)>> {
    if !is_brick(g) {
        return Err(Error::NotBrick);
    }
    let matcher = Matcher::new(g);
    let edges: Vec<(EdgeId, [Vertex; 2])> = g.edges().collect();
    let mut out = Vec::new();
    for (i, &(e, [a, b])) in edges.iter().enumerate() {
        for &(f, [c, d]) in &edges[i + 1..] {
            // e depends on f iff G - a - b - f has no perfect matching
            if matcher.is_matchable(&[a, b], &[f]) || matcher.is_matchable(&[c, d], &[e]) {
                continue;
            }
            let rest = g.without_edges(&[e, f])?;
            if rest.is_bipartite() && matching::is_matching_covered(&rest) {
                out.push((e, f));
            }
        }
    }
    Ok(out)
}

pub fn is_near_bipartite(g: &Multigraph) -> Result<bool> {
    Ok(!removable_doubletons(g)?.is_empty())
}

/// Host requirements for [`classify_edge`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Essentially 4-edge-connected cubic bricks only.
    Strict,
    /// Any cubic brick; `RemovableOther` becomes possible.
    Relaxed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "class")]
pub enum EdgeClass {
    DoubletonMember { partner: EdgeId },
    BInvariant,
    QuasiBInvariant,
    RemovableOther { b: usize },
    NonRemovable,
}

impl EdgeClass {
    pub fn name(&self) -> EdgeClassName {
        match self {
            EdgeClass::DoubletonMember { .. } => EdgeClassName::DoubletonMember,
            EdgeClass::BInvariant => EdgeClassName::BInvariant,
            EdgeClass::QuasiBInvariant => EdgeClassName::QuasiBInvariant,
            EdgeClass::RemovableOther { .. } => EdgeClassName::RemovableOther,
            EdgeClass::NonRemovable => EdgeClassName::NonRemovable,
        }
    }

    pub fn is_removable(&self) -> bool {
        matches!(
            self,
            EdgeClass::BInvariant | EdgeClass::QuasiBInvariant | EdgeClass::RemovableOther { .. }
        )
    }
}

#[derive(Debug, Clone)]
pub struct EdgeClassification {
    pub edge: EdgeId,
    pub ends: [Vertex; 2],
    pub class: EdgeClass,
    /// Decomposition of `G - e` when `e` is removable.
    pub tree: Option<DecompositionTree>,
    /// Colour classes of `G - e - partner` for doubleton members.
    pub bipartition: Option<(BTreeSet<Vertex>, BTreeSet<Vertex>)>,
}

impl EdgeClassification {
    pub fn b_after_deletion(&self) -> Option<usize> {
        self.tree.as_ref().map(DecompositionTree::brick_count)
    }

    pub fn to_json(&self, with_tree: bool) -> Value {
        let mut v = json!({
            "edge": self.edge,
            "ends": self.ends,
            "verdict": self.class,
        });
        if let Some(b) = self.b_after_deletion() {
            v["b"] = json!(b);
        }
        if let Some((s, t)) = &self.bipartition {
            v["bipartition"] = json!([s, t]);
        }
        if with_tree {
            if let Some(t) = &self.tree {
                v["tree"] = t.to_json();
            }
        }
        v
    }
}

fn check_host(g: &Multigraph, mode: Mode) -> Result<()> {
    match mode {
        Mode::Strict if !is_efec_cubic_brick(g) => Err(Error::NotEfecCubicBrick),
        Mode::Relaxed if !(g.is_cubic() && is_brick(g)) => Err(Error::NotCubicBrick),
        _ => Ok(()),
    }
}

fn classify_unchecked(
    g: &Multigraph,
    e: EdgeId,
    doubletons: &[(EdgeId, EdgeId)],
) -> Result<EdgeClassification> {
    let ends = g.endpoints(e)?;
    let ge = g.without_edge(e)?;
    if matching::is_matching_covered(&ge) {
        let tree = tight_cut_decomposition(&ge, Policy::Deterministic)?;
        let class = match tree.brick_count() {
            1 => EdgeClass::BInvariant,
            2 => EdgeClass::QuasiBInvariant,
            b => EdgeClass::RemovableOther { b },
        };
        return Ok(EdgeClassification {
            edge: e,
            ends,
            class,
            tree: Some(tree),
            bipartition: None,
        });
    }
    let partner = doubletons.iter().find_map(|&(a, b)| match (a == e, b == e) {
        (true, _) => Some(b),
        (_, true) => Some(a),
        _ => None,
    });
    let Some(partner) = partner else {
        return Ok(EdgeClassification {
            edge: e,
            ends,
            class: EdgeClass::NonRemovable,
            tree: None,
            bipartition: None,
        });
    };
    let rest = ge.without_edge(partner)?;
    let side = rest.bipartition().ok_or(Error::NotBipartite)?;
    let (mut s, mut t) = (BTreeSet::new(), BTreeSet::new());
    for v in rest.vertices() {
        if side[v] == side[ends[0]] {
            s.insert(v);
        } else {
            t.insert(v);
        }
    }
    Ok(EdgeClassification {
        edge: e,
        ends,
        class: EdgeClass::DoubletonMember { partner },
        tree: None,
        bipartition: Some((s, t)),
    })
}

pub fn classify_edge(g: &Multigraph, e: EdgeId, mode: Mode) -> Result<EdgeClassification> {
    check_host(g, mode)?;
    g.endpoints(e)?;
    classify_unchecked(g, e, &removable_doubletons(g)?)
}

/// Classification of every edge, in edge id order.
pub fn classify_all(g: &Multigraph, mode: Mode) -> Result<Vec<EdgeClassification>> {
    check_host(g, mode)?;
    let doubletons = removable_doubletons(g)?;
    g.edge_ids()
        .map(|e| classify_unchecked(g, e, &doubletons))
        .collect()
}

/// Proper 3-edge-colouring by backtracking over edges in breadth-first order,
/// with the three edges at the first vertex fixed to distinct colours.
pub fn three_edge_coloring(g: &Multigraph) -> Result<Option<Vec<(EdgeId, u8)>>> {
    if !g.is_cubic() {
        return Err(Error::NotCubic);
    }
    let mut order: Vec<EdgeId> = Vec::new();
    let mut seen_edge = vec![false; g.edge_bound()];
    let mut seen_vertex = vec![false; g.vertex_bound()];
    for s in g.vertices() {
        if seen_vertex[s] {
            continue;
        }
        seen_vertex[s] = true;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &e in g.incident(v) {
                if !seen_edge[e.0] {
                    seen_edge[e.0] = true;
                    order.push(e);
                }
                let w = g.other_end(e, v)?;
                if !seen_vertex[w] {
                    seen_vertex[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let ends: Vec<[Vertex; 2]> = order.iter().map(|&e| g.endpoints(e)).collect::<Result<_>>()?;
    let mut used = vec![0u8; g.vertex_bound()];
    let mut colors = vec![0u8; order.len()];
    fn assign(
        k: usize,
        ends: &[[Vertex; 2]],
        used: &mut [u8],
        colors: &mut [u8],
        fixed: usize,
    ) -> bool {
        if k == ends.len() {
            return true;
        }
        let [a, b] = ends[k];
        let choices: Vec<u8> = if k < fixed { vec![k as u8] } else { vec![0, 1, 2] };
        for c in choices {
            let bit = 1u8 << c;
            if used[a] & bit != 0 || used[b] & bit != 0 {
                continue;
            }
            used[a] |= bit;
            used[b] |= bit;
            colors[k] = c;
            if assign(k + 1, ends, used, colors, fixed) {
                return true;
            }
            used[a] &= !bit;
            used[b] &= !bit;
        }
        false
    }
    // the first three edges in the order are exactly the edges at the root
    let fixed = order.len().min(3);
    if assign(0, &ends, &mut used, &mut colors, fixed) {
        Ok(Some(order.into_iter().zip(colors).collect()))
    } else {
        Ok(None)
    }
}

pub fn is_3_edge_colorable(g: &Multigraph) -> Result<bool> {
    Ok(three_edge_coloring(g)?.is_some())
}

/// An essentially 4-edge-connected cubic brick that is not 3-edge-colourable.
pub fn is_snark(g: &Multigraph) -> Result<bool> {
    Ok(!is_3_edge_colorable(g)? && is_efec_cubic_brick(g))
}

/// Counts behind the "every vertex meets a b-invariant class" statements.
/// A b-invariant class is a b-invariant edge or a removable doubleton.
#[derive(Debug, Clone, Serialize)]
pub struct BinvCensus {
    pub order: usize,
    pub b_invariant_edges: usize,
    pub quasi_b_invariant_edges: usize,
    pub doubletons: usize,
    /// Edges that are b-invariant or lie in a removable doubleton.
    pub edges_in_binv_classes: usize,
    pub b_invariant_classes: usize,
    /// Vertices not incident with any b-invariant class.
    pub uncovered_vertices: Vec<Vertex>,
    pub near_bipartite: bool,
    pub is_petersen: bool,
}

pub fn binv_census(g: &Multigraph) -> Result<BinvCensus> {
    let classes = classify_all(g, Mode::Strict)?;
    binv_census_from(g, &classes)
}

pub fn binv_census_from(g: &Multigraph, classes: &[EdgeClassification]) -> Result<BinvCensus> {
    let mut covered = vec![false; g.vertex_bound()];
    let mut binv = 0;
    let mut quasi = 0;
    let mut doubleton_members = 0;
    for c in classes {
        match c.class {
            EdgeClass::BInvariant => binv += 1,
            EdgeClass::QuasiBInvariant => quasi += 1,
            EdgeClass::DoubletonMember { .. } => doubleton_members += 1,
            _ => continue,
        }
        if matches!(c.class, EdgeClass::BInvariant | EdgeClass::DoubletonMember { .. }) {
            for v in c.ends {
                covered[v] = true;
            }
        }
    }
    let petersen = crate::graph::catalog::petersen();
    Ok(BinvCensus {
        order: g.order(),
        b_invariant_edges: binv,
        quasi_b_invariant_edges: quasi,
        doubletons: doubleton_members / 2,
        edges_in_binv_classes: binv + doubleton_members,
        b_invariant_classes: binv + doubleton_members / 2,
        uncovered_vertices: g.vertices().filter(|&v| !covered[v]).collect(),
        near_bipartite: doubleton_members > 0,
        is_petersen: crate::graph::is_isomorphic(g, &petersen),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::catalog;

    #[test]
    fn efec_examples() {
        assert!(is_essentially_4ec_cubic(&catalog::petersen()));
        assert!(is_essentially_4ec_cubic(&catalog::k4()));
        assert!(!is_essentially_4ec_cubic(&catalog::c6bar()));
        assert!(!is_essentially_4ec_cubic(&catalog::tricorn()));
    }

    #[test]
    fn removable_edges_of_small_bricks() {
        assert!(removable_edges(&catalog::k4()).unwrap().is_empty());
        assert!(removable_edges(&catalog::c6bar()).unwrap().is_empty());
        assert_eq!(removable_edges(&catalog::petersen()).unwrap().len(), 15);
        let t = catalog::tricorn();
        let removable = removable_edges(&t).unwrap();
        let bold: Vec<EdgeId> = [("o1", "o2"), ("o3", "o4"), ("o5", "o6")]
            .iter()
            .map(|(a, b)| {
                t.edges_between(t.find_label(a).unwrap(), t.find_label(b).unwrap())[0]
            })
            .collect();
        assert_eq!(removable, bold);
    }

    #[test]
    fn doubletons() {
        assert_eq!(removable_doubletons(&catalog::k4()).unwrap().len(), 3);
        assert_eq!(removable_doubletons(&catalog::c6bar()).unwrap().len(), 3);
        assert!(removable_doubletons(&catalog::petersen()).unwrap().is_empty());
        assert!(is_near_bipartite(&catalog::cubeplex()).unwrap());
        assert_eq!(removable_doubletons(&catalog::fig3()), Err(Error::NotBrick));
    }

    #[test]
    fn petersen_edges_are_quasi() {
        let g = catalog::petersen();
        for c in classify_all(&g, Mode::Strict).unwrap() {
            assert_eq!(c.class, EdgeClass::QuasiBInvariant);
        }
    }

    #[test]
    fn relaxed_mode_is_required_for_non_efec_hosts() {
        let t = catalog::tricorn();
        assert_eq!(
            classify_edge(&t, EdgeId(0), Mode::Strict).unwrap_err(),
            Error::NotEfecCubicBrick
        );
        assert!(classify_edge(&t, EdgeId(0), Mode::Relaxed).is_ok());
        assert_eq!(
            classify_edge(&catalog::k33(), EdgeId(0), Mode::Relaxed).unwrap_err(),
            Error::NotCubicBrick
        );
    }

    #[test]
    fn colorings() {
        assert!(is_3_edge_colorable(&catalog::c6bar()).unwrap());
        assert!(is_3_edge_colorable(&catalog::k4()).unwrap());
        assert!(!is_3_edge_colorable(&catalog::petersen()).unwrap());
        assert!(is_snark(&catalog::petersen()).unwrap());
        assert!(!is_snark(&catalog::cubeplex()).unwrap());
        assert_eq!(is_3_edge_colorable(&catalog::fig3()), Err(Error::NotCubic));
    }

    #[test]
    fn petersen_census() {
        let c = binv_census(&catalog::petersen()).unwrap();
        assert_eq!(c.b_invariant_edges, 0);
        assert!(c.is_petersen);
        assert_eq!(c.uncovered_vertices.len(), 10);
    }
}
