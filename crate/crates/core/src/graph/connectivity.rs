use std::collections::{BTreeSet, VecDeque};

use super::{Cut, EdgeId, Multigraph, Vertex};
use crate::error::{Error, Result};

/// Shore scans are used up to this order; above it cuts are found from edge subsets.
const SHORE_SCAN_LIMIT: usize = 16;

struct FlowNet {
    cap: Vec<Vec<i64>>,
}

impl FlowNet {
    fn new(n: usize) -> Self {
        FlowNet {
            cap: vec![vec![0; n]; n],
        }
    }

    fn max_flow(&mut self, s: usize, t: usize, limit: i64) -> i64 {
        let n = self.cap.len();
        let mut flow = 0;
        while flow < limit {
            let mut prev = vec![usize::MAX; n];
            prev[s] = s;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                if v == t {
                    break;
                }
                for w in 0..n {
                    if prev[w] == usize::MAX && self.cap[v][w] > 0 {
                        prev[w] = v;
                        queue.push_back(w);
                    }
                }
            }
            if prev[t] == usize::MAX {
                break;
            }
            let mut bottleneck = i64::MAX;
            let mut v = t;
            while v != s {
                bottleneck = bottleneck.min(self.cap[prev[v]][v]);
                v = prev[v];
            }
            let mut v = t;
            while v != s {
                self.cap[prev[v]][v] -= bottleneck;
                self.cap[v][prev[v]] += bottleneck;
                v = prev[v];
            }
            flow += bottleneck;
        }
        flow
    }
}

fn require_connected(g: &Multigraph) -> Result<()> {
    if g.order() == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Minimum number of vertices whose deletion disconnects `g`, or `|V|-1`
/// when no such set exists.
pub fn vertex_connectivity(g: &Multigraph) -> Result<usize> {
    require_connected(g)?;
    let (c, _) = g.compact();
    let n = c.order();
    let mut best = n.saturating_sub(1);
    for s in 0..n {
        for t in s + 1..n {
            if c.multiplicity(s, t) > 0 {
                continue;
            }
            // vertex v splits into v_in = 2v, v_out = 2v+1
            let mut net = FlowNet::new(2 * n);
            for v in 0..n {
                net.cap[2 * v][2 * v + 1] = if v == s || v == t { n as i64 } else { 1 };
            }
            for (_, [a, b]) in c.edges() {
                net.cap[2 * a + 1][2 * b] = n as i64;
                net.cap[2 * b + 1][2 * a] = n as i64;
            }
            let f = net.max_flow(2 * s + 1, 2 * t, best as i64) as usize;
            best = best.min(f);
        }
    }
    Ok(best)
}

/// Minimum number of edges whose deletion disconnects `g`.
pub fn edge_connectivity(g: &Multigraph) -> Result<usize> {
    require_connected(g)?;
    let (c, _) = g.compact();
    let n = c.order();
    if n == 1 {
        return Ok(0);
    }
    let mut best = usize::MAX;
    for t in 1..n {
        let mut net = FlowNet::new(n);
        for (_, [a, b]) in c.edges() {
            net.cap[a][b] += 1;
            net.cap[b][a] += 1;
        }
        best = best.min(net.max_flow(0, t, i64::MAX) as usize);
    }
    Ok(best)
}

/// All pairs `{u, w}` (with `u < w`) whose deletion disconnects `g`.
pub fn two_vertex_cuts(g: &Multigraph) -> Vec<(Vertex, Vertex)> {
    let verts: Vec<Vertex> = g.vertices().collect();
    let mut removed = vec![false; g.vertex_bound()];
    let mut out = Vec::new();
    for (i, &u) in verts.iter().enumerate() {
        for &w in &verts[i + 1..] {
            removed[u] = true;
            removed[w] = true;
            if g.components_without(&removed).len() > 1 {
                out.push((u, w));
            }
            removed[u] = false;
            removed[w] = false;
        }
    }
    out
}

/// Every edge cut `∂(X)` with at most `k` edges, one cut per `{X, X̄}`,
/// normalized and sorted.
pub fn enumerate_small_edge_cuts(g: &Multigraph, k: usize) -> Result<Vec<Cut>> {
    if g.order() <= SHORE_SCAN_LIMIT {
        enumerate_small_edge_cuts_by_shores(g, k)
    } else {
        enumerate_small_edge_cuts_by_edge_sets(g, k)
    }
}

/// Exhaustive scan over all shores; exponential in `|V|`.
pub fn enumerate_small_edge_cuts_by_shores(g: &Multigraph, k: usize) -> Result<Vec<Cut>> {
    require_connected(g)?;
    let verts: Vec<Vertex> = g.vertices().collect();
    let n = verts.len();
    if n > 30 {
        return Err(Error::BoundExceeded { order: n, bound: 30 });
    }
    let mut pos = vec![usize::MAX; g.vertex_bound()];
    for (i, &v) in verts.iter().enumerate() {
        pos[v] = i;
    }
    let edges: Vec<(u32, u32)> = g
        .edges()
        .map(|(_, [a, b])| (1u32 << pos[a], 1u32 << pos[b]))
        .collect();
    let mut out = Vec::new();
    // shores containing verts[0]; the complement is the other representative
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut mask: u32 = 1;
    while mask < full {
        if mask & 1 == 1 {
            let size = edges
                .iter()
                .filter(|&&(a, b)| (mask & a != 0) != (mask & b != 0))
                .count();
            if size <= k {
                let shore: BTreeSet<Vertex> =
                    (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| verts[i]).collect();
                out.push(g.cut_of(&shore)?.normalized());
            }
        }
        mask += 1;
    }
    out.sort();
    Ok(out)
}

/// Scan over edge subsets of size at most `k`; each subset that is exactly a
/// cut yields its shores. Polynomial in `|E|` for fixed `k`.
pub fn enumerate_small_edge_cuts_by_edge_sets(g: &Multigraph, k: usize) -> Result<Vec<Cut>> {
    require_connected(g)?;
    let edge_list: Vec<(EdgeId, [Vertex; 2])> = g.edges().collect();
    let mut found: BTreeSet<Cut> = BTreeSet::new();
    let mut chosen: Vec<usize> = Vec::new();
    fn visit(
        g: &Multigraph,
        edge_list: &[(EdgeId, [Vertex; 2])],
        k: usize,
        start: usize,
        chosen: &mut Vec<usize>,
        found: &mut BTreeSet<Cut>,
    ) -> Result<()> {
        if !chosen.is_empty() {
            record_cuts(g, edge_list, chosen, found)?;
        }
        if chosen.len() == k {
            return Ok(());
        }
        for i in start..edge_list.len() {
            chosen.push(i);
            visit(g, edge_list, k, i + 1, chosen, found)?;
            chosen.pop();
        }
        Ok(())
    }
    visit(g, &edge_list, k, 0, &mut chosen, &mut found)?;
    Ok(found.into_iter().collect())
}

fn record_cuts(
    g: &Multigraph,
    edge_list: &[(EdgeId, [Vertex; 2])],
    chosen: &[usize],
    found: &mut BTreeSet<Cut>,
) -> Result<()> {
    let removed: Vec<EdgeId> = chosen.iter().map(|&i| edge_list[i].0).collect();
    let h = g.without_edges(&removed)?;
    let comps = h.components();
    if comps.len() < 2 {
        return Ok(());
    }
    let mut comp_of = vec![usize::MAX; g.vertex_bound()];
    for (i, c) in comps.iter().enumerate() {
        for &v in c {
            comp_of[v] = i;
        }
    }
    let mut links: Vec<Vec<usize>> = vec![Vec::new(); comps.len()];
    for &i in chosen {
        let [a, b] = edge_list[i].1;
        let (ca, cb) = (comp_of[a], comp_of[b]);
        if ca == cb {
            return Ok(());
        }
        links[ca].push(cb);
        links[cb].push(ca);
    }
    // 2-colour the component graph; each connected block of it has two colourings
    let mut color = vec![None::<bool>; comps.len()];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for s in 0..comps.len() {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        let mut block = vec![s];
        let mut queue = VecDeque::from([s]);
        while let Some(c) = queue.pop_front() {
            for &d in &links[c] {
                match color[d] {
                    None => {
                        color[d] = Some(!color[c].unwrap());
                        block.push(d);
                        queue.push_back(d);
                    }
                    Some(x) if x == color[c].unwrap() => return Ok(()),
                    Some(_) => {}
                }
            }
        }
        blocks.push(block);
    }
    if blocks.len() > 20 {
        return Err(Error::Precondition("too many components".into()));
    }
    for flips in 0u32..(1 << (blocks.len() - 1)) {
        let mut shore = BTreeSet::new();
        for (bi, block) in blocks.iter().enumerate() {
            let flip = bi > 0 && flips >> (bi - 1) & 1 == 1;
            for &c in block {
                if color[c].unwrap() != flip {
                    shore.extend(comps[c].iter().copied());
                }
            }
        }
        if shore.is_empty() || shore.len() == g.order() {
            continue;
        }
        found.insert(g.cut_of(&shore)?.normalized());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prism() -> Multigraph {
        Multigraph::from_edges(
            6,
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap()
    }

    #[test]
    fn prism_has_a_nontrivial_three_cut() {
        let g = prism();
        assert_eq!(edge_connectivity(&g).unwrap(), 3);
        assert_eq!(vertex_connectivity(&g).unwrap(), 3);
        let cuts = enumerate_small_edge_cuts(&g, 3).unwrap();
        let nontrivial: Vec<&Cut> = cuts.iter().filter(|c| !c.is_trivial()).collect();
        assert_eq!(nontrivial.len(), 1);
        assert_eq!(nontrivial[0].shore().len(), 3);
    }

    #[test]
    fn k4_connectivities() {
        let k4 =
            Multigraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(vertex_connectivity(&k4).unwrap(), 3);
        assert_eq!(edge_connectivity(&k4).unwrap(), 3);
        assert!(enumerate_small_edge_cuts(&k4, 3).unwrap().iter().all(Cut::is_trivial));
    }

    #[test]
    fn disconnected_is_an_error() {
        let g = Multigraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(vertex_connectivity(&g), Err(Error::Disconnected));
        assert_eq!(edge_connectivity(&g), Err(Error::Disconnected));
        assert!(enumerate_small_edge_cuts(&g, 2).is_err());
    }

    #[test]
    fn both_cut_scans_agree() {
        let g = prism();
        for k in 0..=5 {
            assert_eq!(
                enumerate_small_edge_cuts_by_shores(&g, k).unwrap(),
                enumerate_small_edge_cuts_by_edge_sets(&g, k).unwrap(),
                "k = {k}"
            );
        }
    }

    #[test]
    fn parallel_edges_count_in_edge_connectivity() {
        let g = Multigraph::from_edges(3, &[(0, 1), (0, 1), (1, 2), (1, 2), (0, 2)]).unwrap();
        assert_eq!(edge_connectivity(&g).unwrap(), 3);
        assert_eq!(vertex_connectivity(&g).unwrap(), 2);
    }

    #[test]
    fn two_vertex_cuts_of_a_path_like_graph() {
        let c4 = Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(two_vertex_cuts(&c4), vec![(0, 2), (1, 3)]);
    }
}
