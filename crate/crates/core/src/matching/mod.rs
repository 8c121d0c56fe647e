//! Perfect matchings, admissibility, barriers and dependence between edges.
//!
//! All queries go through [`Matcher`], which numbers the live vertices once
//! and answers "is `G - S - F` matchable?" for small vertex sets `S` and edge
//! sets `F` without cloning the graph. Each query starts from a stored
//! maximum matching of `G` with the deleted parts removed.

mod blossom;
pub mod oracle;

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph, Vertex};
use blossom::{Blossom, NONE};

/// A set of pairwise vertex-disjoint edges.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
#[serde(transparent)]
pub struct Matching {
    edges: BTreeSet<EdgeId>,
}

impl Matching {
    pub fn edges(&self) -> &BTreeSet<EdgeId> {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.contains(&e)
    }

    /// Every live vertex of `g` is covered exactly once.
    pub fn is_perfect_in(&self, g: &Multigraph) -> bool {
        let mut hits = vec![0usize; g.vertex_bound()];
        for &e in &self.edges {
            match g.endpoints(e) {
                Ok([a, b]) => {
                    hits[a] += 1;
                    hits[b] += 1;
                }
                Err(_) => return false,
            }
        }
        g.vertices().all(|v| hits[v] == 1)
    }
}

impl FromIterator<EdgeId> for Matching {
    fn from_iter<I: IntoIterator<Item = EdgeId>>(iter: I) -> Self {
        Matching {
            edges: iter.into_iter().collect(),
        }
    }
}

/// Reusable matchability oracle for one host graph.
pub struct Matcher {
    index: Vec<usize>,
    adj: Vec<Vec<(usize, EdgeId)>>,
    base: Vec<(usize, usize, EdgeId)>,
    base_perfect: bool,
}

impl Matcher {
    pub fn new(g: &Multigraph) -> Self {
        let mut index = vec![NONE; g.vertex_bound()];
        for (i, v) in g.vertices().enumerate() {
            index[v] = i;
        }
        let mut adj = vec![Vec::new(); g.order()];
        for (e, [a, b]) in g.edges() {
            adj[index[a]].push((index[b], e));
            adj[index[b]].push((index[a], e));
        }
        let mut m = Matcher {
            index,
            adj,
            base: Vec::new(),
            base_perfect: false,
        };
        let (perfect, mate, _) = m.solve(&[], &[], false);
        m.base = m.pairs(&mate, &[]);
        m.base_perfect = perfect;
        m
    }

    /// Whether the host itself has a perfect matching.
    pub fn host_is_matchable(&self) -> bool {
        self.base_perfect
    }

    fn pairs(&self, mate: &[usize], skip_e: &[EdgeId]) -> Vec<(usize, usize, EdgeId)> {
        let mut out = Vec::new();
        for (v, &m) in mate.iter().enumerate() {
            if m != NONE && v < m {
                let e = self.adj[v]
                    .iter()
                    .find(|&&(to, e)| to == m && !skip_e.contains(&e))
                    .map(|&(_, e)| e)
                    .expect("matched pairs are adjacent");
                out.push((v, m, e));
            }
        }
        out
    }

    fn solve(
        &self,
        skip_v: &[Vertex],
        skip_e: &[EdgeId],
        want_perfect: bool,
    ) -> (bool, Vec<usize>, Vec<bool>) {
        let n = self.adj.len();
        let mut active = vec![true; n];
        for &v in skip_v {
            if let Some(&i) = self.index.get(v) {
                if i != NONE {
                    active[i] = false;
                }
            }
        }
        let live = active.iter().filter(|&&a| a).count();
        let adj: Vec<Vec<usize>> = (0..n)
            .map(|v| {
                if !active[v] {
                    return Vec::new();
                }
                self.adj[v]
                    .iter()
                    .filter(|&&(to, e)| active[to] && !skip_e.contains(&e))
                    .map(|&(to, _)| to)
                    .collect()
            })
            .collect();
        let mut mate = vec![NONE; n];
        if want_perfect && live % 2 == 1 {
            return (false, mate, active);
        }
        for &(a, b, e) in &self.base {
            if active[a] && active[b] && !skip_e.contains(&e) {
                mate[a] = b;
                mate[b] = a;
            }
        }
        for v in 0..n {
            if active[v] && mate[v] == NONE {
                if let Some(&w) = adj[v].iter().find(|&&w| mate[w] == NONE) {
                    mate[v] = w;
                    mate[w] = v;
                }
            }
        }
        let mut search = Blossom::new(&adj, mate);
        let perfect = search.run(&active, want_perfect);
        (perfect, search.mate, active)
    }

    /// A maximum matching of `G - skip_v - skip_e`.
    pub fn maximum_matching(&self, skip_v: &[Vertex], skip_e: &[EdgeId]) -> Matching {
        let (_, mate, _) = self.solve(skip_v, skip_e, false);
        self.pairs(&mate, skip_e).into_iter().map(|(_, _, e)| e).collect()
    }

    /// A perfect matching of `G - skip_v - skip_e`, if one exists.
    pub fn perfect_matching(&self, skip_v: &[Vertex], skip_e: &[EdgeId]) -> Option<Matching> {
        let (perfect, mate, _) = self.solve(skip_v, skip_e, true);
        perfect.then(|| self.pairs(&mate, skip_e).into_iter().map(|(_, _, e)| e).collect())
    }

    pub fn is_matchable(&self, skip_v: &[Vertex], skip_e: &[EdgeId]) -> bool {
        self.solve(skip_v, skip_e, true).0
    }
}

pub fn max_matching(g: &Multigraph) -> Matching {
    Matcher::new(g).maximum_matching(&[], &[])
}

pub fn perfect_matching(g: &Multigraph) -> Option<Matching> {
    let m = Matcher::new(g);
    m.host_is_matchable().then(|| m.maximum_matching(&[], &[]))
}

pub fn has_perfect_matching(g: &Multigraph) -> bool {
    Matcher::new(g).host_is_matchable()
}

/// Whether `G - vs - es` has a perfect matching.
pub fn is_matchable_without(g: &Multigraph, vs: &[Vertex], es: &[EdgeId]) -> bool {
    Matcher::new(g).is_matchable(vs, es)
}

/// `|V| - 2ν(G)`: vertices missed by a maximum matching.
pub fn deficiency(g: &Multigraph) -> usize {
    g.order() - 2 * max_matching(g).len()
}

pub fn is_admissible(g: &Multigraph, e: EdgeId) -> Result<bool> {
    let [a, b] = g.endpoints(e)?;
    Ok(is_matchable_without(g, &[a, b], &[]))
}

/// All admissible edges. Each witness matching certifies all of its edges,
/// so few searches are needed on matching covered graphs.
pub fn admissible_edges(g: &Multigraph) -> BTreeSet<EdgeId> {
    admissible_edges_with(g, &Matcher::new(g))
}

pub(crate) fn admissible_edges_with(g: &Multigraph, matcher: &Matcher) -> BTreeSet<EdgeId> {
    let mut known = BTreeSet::new();
    if !matcher.host_is_matchable() {
        return known;
    }
    known.extend(matcher.maximum_matching(&[], &[]).edges().iter().copied());
    for (e, [a, b]) in g.edges() {
        if known.contains(&e) {
            continue;
        }
        if let Some(m) = matcher.perfect_matching(&[a, b], &[]) {
            known.insert(e);
            known.extend(m.edges().iter().copied());
        }
    }
    known
}

/// Connected, at least two vertices, and every edge admissible.
pub fn is_matching_covered(g: &Multigraph) -> bool {
    if g.order() < 2 || !g.is_connected() {
        return false;
    }
    let matcher = Matcher::new(g);
    matcher.host_is_matchable() && admissible_edges_with(g, &matcher).len() == g.size()
}

/// `G - u - v` is matchable for every pair of distinct vertices.
pub fn is_bicritical(g: &Multigraph) -> Result<bool> {
    if g.order() % 2 == 1 {
        return Err(Error::OddOrder(g.order()));
    }
    let matcher = Matcher::new(g);
    let verts: Vec<Vertex> = g.vertices().collect();
    for (i, &u) in verts.iter().enumerate() {
        for &w in &verts[i + 1..] {
            if !matcher.is_matchable(&[u, w], &[]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `G - v` is matchable for every vertex `v`.
pub fn is_factor_critical(g: &Multigraph) -> bool {
    if g.order().is_multiple_of(2) {
        return false;
    }
    let matcher = Matcher::new(g);
    g.vertices().all(|v| matcher.is_matchable(&[v], &[]))
}

fn removal_mask(g: &Multigraph, s: &BTreeSet<Vertex>) -> Result<Vec<bool>> {
    let mut removed = vec![false; g.vertex_bound()];
    for &v in s {
        if !g.contains_vertex(v) {
            return Err(Error::UnknownVertex(v));
        }
        removed[v] = true;
    }
    Ok(removed)
}

/// Components of `G - S`.
pub fn components_after_removing(g: &Multigraph, s: &BTreeSet<Vertex>) -> Result<Vec<Vec<Vertex>>> {
    Ok(g.components_without(&removal_mask(g, s)?))
}

/// `odd(G - S)`.
pub fn odd_components(g: &Multigraph, s: &BTreeSet<Vertex>) -> Result<usize> {
    Ok(components_after_removing(g, s)?
        .iter()
        .filter(|c| c.len() % 2 == 1)
        .count())
}

/// `odd(G - S) = |S|`.
pub fn is_barrier(g: &Multigraph, s: &BTreeSet<Vertex>) -> Result<bool> {
    if s.is_empty() {
        return Err(Error::EmptyBarrier);
    }
    Ok(odd_components(g, s)? == s.len())
}

/// A barrier whose deletion leaves exactly one component with more than one
/// vertex and no even component.
pub fn is_special_barrier(g: &Multigraph, s: &BTreeSet<Vertex>) -> Result<bool> {
    if !is_barrier(g, s)? {
        return Ok(false);
    }
    let comps = components_after_removing(g, s)?;
    let nontrivial = comps.iter().filter(|c| c.len() > 1).count();
    Ok(nontrivial == 1 && comps.iter().all(|c| c.len() % 2 == 1))
}

/// `D`: vertices missed by some maximum matching; `A`: neighbours of `D`
/// outside `D`; `C`: the rest.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GallaiEdmonds {
    pub d: BTreeSet<Vertex>,
    pub a: BTreeSet<Vertex>,
    pub c: BTreeSet<Vertex>,
}

impl GallaiEdmonds {
    /// Components of the subgraph induced by `D`.
    pub fn d_components(&self, g: &Multigraph) -> Vec<Vec<Vertex>> {
        g.induced(&self.d).components()
    }
}

/// `v ∈ D` iff `ν(G - v) = ν(G)`, decided one vertex at a time.
pub fn gallai_edmonds(g: &Multigraph) -> GallaiEdmonds {
    let matcher = Matcher::new(g);
    let nu = matcher.maximum_matching(&[], &[]).len();
    let d: BTreeSet<Vertex> = g
        .vertices()
        .filter(|&v| matcher.maximum_matching(&[v], &[]).len() == nu)
        .collect();
    let a: BTreeSet<Vertex> = d
        .iter()
        .flat_map(|&v| g.neighbors(v))
        .filter(|w| !d.contains(w))
        .collect();
    let c = g
        .vertices()
        .filter(|v| !d.contains(v) && !a.contains(v))
        .collect();
    GallaiEdmonds { d, a, c }
}

/// A barrier of the matchable graph `g` containing `u` and `w` and maximal
/// under inclusion, or `None` when `G - u - w` is matchable.
///
/// Starts from `{u, w} ∪ A(G - u - w)`, a barrier because `G - u - w` has
/// deficiency exactly two, then adds vertices in increasing id order while
/// the set stays a barrier.
pub fn maximal_barrier_containing(
    g: &Multigraph,
    u: Vertex,
    w: Vertex,
) -> Result<Option<BTreeSet<Vertex>>> {
    maximal_barrier_with(g, &Matcher::new(g), u, w)
}

pub(crate) fn maximal_barrier_with(
    g: &Multigraph,
    matcher: &Matcher,
    u: Vertex,
    w: Vertex,
) -> Result<Option<BTreeSet<Vertex>>> {
    if u == w {
        return Err(Error::SameVertex);
    }
    for v in [u, w] {
        if !g.contains_vertex(v) {
            return Err(Error::UnknownVertex(v));
        }
    }
    if !matcher.host_is_matchable() {
        return Err(Error::Precondition("graph is not matchable".into()));
    }
    if matcher.is_matchable(&[u, w], &[]) {
        return Ok(None);
    }
    let h = g.without_vertices(&[u, w])?;
    let mut barrier = gallai_edmonds(&h).a;
    barrier.insert(u);
    barrier.insert(w);
    debug_assert!(is_barrier(g, &barrier)?);
    loop {
        let mut grew = false;
        for v in g.vertices() {
            if barrier.contains(&v) {
                continue;
            }
            barrier.insert(v);
            if is_barrier(g, &barrier)? {
                grew = true;
            } else {
                barrier.remove(&v);
            }
        }
        if !grew {
            break;
        }
    }
    Ok(Some(barrier))
}

/// An edge set containing all three edges at `v` and exactly one edge at
/// every other vertex of the cubic graph `g`.
pub fn v_matching(g: &Multigraph, v: Vertex) -> Result<Option<Matching>> {
    if !g.is_cubic() {
        return Err(Error::NotCubic);
    }
    if !g.contains_vertex(v) {
        return Err(Error::UnknownVertex(v));
    }
    let at_v: Vec<EdgeId> = g.incident(v).to_vec();
    let mut removed: Vec<Vertex> = vec![v];
    for &e in &at_v {
        let u = g.other_end(e, v)?;
        if removed.contains(&u) {
            return Ok(None);
        }
        removed.push(u);
    }
    Ok(Matcher::new(g)
        .perfect_matching(&removed, &[])
        .map(|m| m.edges().iter().copied().chain(at_v).collect()))
}

/// Every perfect matching containing `e` also contains `f`.
pub fn depends(g: &Multigraph, e: EdgeId, f: EdgeId) -> Result<bool> {
    depends_with(g, &Matcher::new(g), e, f)
}

pub(crate) fn depends_with(g: &Multigraph, matcher: &Matcher, e: EdgeId, f: EdgeId) -> Result<bool> {
    if e == f {
        return Err(Error::SameEdge);
    }
    let [a, b] = g.endpoints(e)?;
    g.endpoints(f)?;
    if !matcher.is_matchable(&[a, b], &[]) {
        return Err(Error::InadmissibleEdge(e));
    }
    Ok(!matcher.is_matchable(&[a, b], &[f]))
}

pub fn mutually_dependent(g: &Multigraph, e: EdgeId, f: EdgeId) -> Result<bool> {
    let matcher = Matcher::new(g);
    Ok(depends_with(g, &matcher, e, f)? && depends_with(g, &matcher, f, e)?)
}

/// Certificate that an edge `ab` of a matchable bipartite graph lies in no
/// perfect matching: `a ∈ A2`, `b ∈ B1`, `|A1| = |B1|` and no edge joins
/// `A1` to `B2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BipartiteWitness {
    pub a1: BTreeSet<Vertex>,
    pub a2: BTreeSet<Vertex>,
    pub b1: BTreeSet<Vertex>,
    pub b2: BTreeSet<Vertex>,
}

/// `None` iff `e` is admissible in the bipartite matchable graph `h`.
///
/// With a perfect matching `M`, orient non-matching edges from `a`'s class
/// to `b`'s class and matching edges back. `B1`/`A1` are the vertices
/// reachable from `b`; `e` is admissible iff `a` is among them.
pub fn bipartite_inadmissibility_witness(
    h: &Multigraph,
    e: EdgeId,
) -> Result<Option<BipartiteWitness>> {
    let [a, b] = h.endpoints(e)?;
    let side = h.bipartition().ok_or(Error::NotBipartite)?;
    let m = perfect_matching(h)
        .ok_or_else(|| Error::Precondition("graph is not matchable".into()))?;
    let a_side = side[a].expect("live vertex");
    let mut mate = vec![NONE; h.vertex_bound()];
    for &f in m.edges() {
        let [x, y] = h.endpoints(f)?;
        mate[x] = y;
        mate[y] = x;
    }
    let mut reached = vec![false; h.vertex_bound()];
    reached[b] = true;
    let mut queue = VecDeque::from([b]);
    while let Some(x) = queue.pop_front() {
        if side[x] != Some(a_side) {
            let y = mate[x];
            if !reached[y] {
                reached[y] = true;
                queue.push_back(y);
            }
        } else {
            for &f in h.incident(x) {
                if m.contains(f) {
                    continue;
                }
                let y = h.other_end(f, x)?;
                if !reached[y] {
                    reached[y] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    if reached[a] {
        return Ok(None);
    }
    let mut w = BipartiteWitness {
        a1: BTreeSet::new(),
        a2: BTreeSet::new(),
        b1: BTreeSet::new(),
        b2: BTreeSet::new(),
    };
    for v in h.vertices() {
        let in_a = side[v] == Some(a_side);
        match (in_a, reached[v]) {
            (true, true) => w.a1.insert(v),
            (true, false) => w.a2.insert(v),
            (false, true) => w.b1.insert(v),
            (false, false) => w.b2.insert(v),
        };
    }
    debug_assert_eq!(w.a1.len(), w.b1.len());
    debug_assert!(h.edges().all(|(_, [x, y])| !(w.a1.contains(&x) && w.b2.contains(&y)
        || w.a1.contains(&y) && w.b2.contains(&x))));
    Ok(Some(w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::catalog;

    fn c6_chord() -> Multigraph {
        // cycle 1..6 as vertices 0..5, chord between 1 and 3 (vertices 0, 2)
        Multigraph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 2)])
            .unwrap()
    }

    #[test]
    fn small_matchability_facts() {
        assert!(has_perfect_matching(&catalog::k4()));
        let star = Multigraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!has_perfect_matching(&star));
        assert_eq!(max_matching(&star).len(), 1);
        assert!(has_perfect_matching(&catalog::petersen()));
        assert!(has_perfect_matching(&Multigraph::new(0)));
    }

    #[test]
    fn chord_of_hexagon_is_inadmissible() {
        let g = c6_chord();
        assert!(!is_admissible(&g, EdgeId(6)).unwrap());
        assert!(!is_matching_covered(&g));
        let c6 = g.without_edge(EdgeId(6)).unwrap();
        assert!(is_matching_covered(&c6));
        assert!(is_barrier(&g, &[0, 2].into()).unwrap());
        // {0, 2} is not maximal: deleting {0, 2, 4} isolates 1, 3 and 5
        let maximal = maximal_barrier_containing(&g, 0, 2).unwrap().unwrap();
        assert_eq!(maximal, [0, 2, 4].into());
        let supersets: Vec<_> = oracle::all_barriers(&g)
            .into_iter()
            .filter(|b| b.is_superset(&maximal) && *b != maximal)
            .collect();
        assert!(supersets.is_empty());
    }

    #[test]
    fn bicritical_and_factor_critical() {
        assert!(is_bicritical(&catalog::fig3()).unwrap());
        assert!(!is_bicritical(&catalog::k33()).unwrap());
        assert!(is_bicritical(&catalog::petersen()).unwrap());
        let triangle = Multigraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(is_bicritical(&triangle), Err(Error::OddOrder(3)));
        assert!(is_factor_critical(&triangle));
        assert!(is_factor_critical(&Multigraph::new(1)));
        let c4 = Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(!is_factor_critical(&c4));
    }

    #[test]
    fn star_gallai_edmonds() {
        let star = Multigraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let ge = gallai_edmonds(&star);
        assert_eq!(ge.d, [1, 2, 3].into());
        assert_eq!(ge.a, [0].into());
        assert!(ge.c.is_empty());
        let k4 = gallai_edmonds(&catalog::k4());
        assert!(k4.d.is_empty() && k4.a.is_empty());
        assert_eq!(k4.c.len(), 4);
    }

    #[test]
    fn k4_dependence() {
        let g = catalog::k4();
        // edges: 01, 02, 03, 12, 13, 23
        assert!(depends(&g, EdgeId(0), EdgeId(5)).unwrap());
        assert!(mutually_dependent(&g, EdgeId(0), EdgeId(5)).unwrap());
        assert!(!depends(&g, EdgeId(0), EdgeId(1)).unwrap());
        assert_eq!(depends(&g, EdgeId(0), EdgeId(0)), Err(Error::SameEdge));
        let chorded = c6_chord();
        assert_eq!(
            depends(&chorded, EdgeId(6), EdgeId(0)),
            Err(Error::InadmissibleEdge(EdgeId(6)))
        );
    }

    #[test]
    fn v_matchings() {
        let k4 = catalog::k4();
        let m = v_matching(&k4, 0).unwrap().unwrap();
        assert_eq!(m.edges(), &[EdgeId(0), EdgeId(1), EdgeId(2)].into());
        for g in [catalog::petersen(), catalog::c6bar()] {
            for v in g.vertices() {
                assert!(v_matching(&g, v).unwrap().is_some());
            }
        }
        assert_eq!(v_matching(&c6_chord(), 0), Err(Error::NotCubic));
    }

    #[test]
    fn bipartite_witness() {
        let k33 = catalog::k33();
        for e in k33.edge_ids() {
            assert_eq!(bipartite_inadmissibility_witness(&k33, e).unwrap(), None);
        }
        // path a1-b1-a2-b2 plus a1-b2; vertices a1=0, b1=1, a2=2, b2=3
        let h = Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        for e in h.edge_ids() {
            assert_eq!(
                bipartite_inadmissibility_witness(&h, e).unwrap().is_some(),
                !is_admissible(&h, e).unwrap()
            );
        }
        // a path of four vertices: the middle edge is inadmissible
        let p = Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let w = bipartite_inadmissibility_witness(&p, EdgeId(1)).unwrap().unwrap();
        assert!(w.a2.contains(&1) && w.b1.contains(&2));
        assert_eq!(w.a1.len(), w.b1.len());
        assert_eq!(
            bipartite_inadmissibility_witness(&catalog::k4(), EdgeId(0)),
            Err(Error::NotBipartite)
        );
    }

    #[test]
    fn petersen_barriers_are_trivial() {
        let g = catalog::petersen();
        for v in g.vertices() {
            assert!(is_barrier(&g, &[v].into()).unwrap());
        }
        let barriers = oracle::all_barriers(&g);
        assert!(barriers.iter().all(|b| b.len() == 1));
        for u in 0..10 {
            for w in u + 1..10 {
                assert_eq!(maximal_barrier_containing(&g, u, w).unwrap(), None);
            }
        }
    }

    #[test]
    fn fig1_bold_barrier_is_special() {
        let g = catalog::fig1();
        let pqr: BTreeSet<Vertex> = ["p", "q", "r"]
            .iter()
            .map(|l| g.find_label(l).unwrap())
            .collect();
        assert!(is_special_barrier(&g, &pqr).unwrap());
        assert_eq!(is_barrier(&g, &BTreeSet::new()), Err(Error::EmptyBarrier));
    }
}
