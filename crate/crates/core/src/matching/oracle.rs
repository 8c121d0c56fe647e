//! Exponential reference implementations used to cross-check the blossom
//! engine on small graphs.

use std::collections::BTreeSet;

use crate::graph::{EdgeId, Multigraph, Vertex};

/// Every perfect matching, as sets of edge ids. Parallel edges give distinct
/// matchings.
pub fn all_perfect_matchings(g: &Multigraph) -> Vec<BTreeSet<EdgeId>> {
    let mut covered = vec![true; g.vertex_bound()];
    for v in g.vertices() {
        covered[v] = false;
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    extend(g, &mut covered, &mut current, &mut out);
    out
}

fn extend(
    g: &Multigraph,
    covered: &mut [bool],
    current: &mut Vec<EdgeId>,
    out: &mut Vec<BTreeSet<EdgeId>>,
) {
    let Some(v) = covered.iter().position(|&c| !c) else {
        out.push(current.iter().copied().collect());
        return;
    };
    covered[v] = true;
    for &e in g.incident(v) {
        let w = g.other_end(e, v).expect("incident edge");
        if !covered[w] {
            covered[w] = true;
            current.push(e);
            extend(g, covered, current, out);
            current.pop();
            covered[w] = false;
        }
    }
    covered[v] = false;
}

/// Size of a maximum matching by exhaustive branching on the lowest vertex.
pub fn matching_number(g: &Multigraph) -> usize {
    let mut gone = vec![true; g.vertex_bound()];
    for v in g.vertices() {
        gone[v] = false;
    }
    best(g, &mut gone)
}

fn best(g: &Multigraph, gone: &mut [bool]) -> usize {
    let Some(v) = gone.iter().position(|&c| !c) else {
        return 0;
    };
    gone[v] = true;
    let mut result = best(g, gone);
    let nbrs: BTreeSet<Vertex> = g.distinct_neighbors(v);
    for w in nbrs {
        if !gone[w] {
            gone[w] = true;
            result = result.max(1 + best(g, gone));
            gone[w] = false;
        }
    }
    gone[v] = false;
    result
}

/// Whether `s` satisfies `odd(G - S) = |S|`, by direct count.
pub fn is_barrier_by_count(g: &Multigraph, s: &BTreeSet<Vertex>) -> bool {
    let mut removed = vec![false; g.vertex_bound()];
    for &v in s {
        removed[v] = true;
    }
    let odd = g
        .components_without(&removed)
        .iter()
        .filter(|c| c.len() % 2 == 1)
        .count();
    odd == s.len()
}

/// All nonempty barriers of a graph with at most 20 vertices.
pub fn all_barriers(g: &Multigraph) -> Vec<BTreeSet<Vertex>> {
    let verts: Vec<Vertex> = g.vertices().collect();
    assert!(verts.len() <= 20, "exhaustive barrier scan is capped at 20 vertices");
    let mut out = Vec::new();
    for mask in 1u32..(1 << verts.len()) {
        let s: BTreeSet<Vertex> = (0..verts.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| verts[i])
            .collect();
        if is_barrier_by_count(g, &s) {
            out.push(s);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_has_three_perfect_matchings() {
        let k4 =
            Multigraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(all_perfect_matchings(&k4).len(), 3);
        assert_eq!(matching_number(&k4), 2);
    }

    #[test]
    fn petersen_has_six_perfect_matchings() {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        let g = Multigraph::from_edges(10, &edges).unwrap();
        assert_eq!(all_perfect_matchings(&g).len(), 6);
    }

    #[test]
    fn parallel_edges_multiply_matchings() {
        let g = Multigraph::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(all_perfect_matchings(&g).len(), 2);
    }
}
