//! Tight cuts of matching covered graphs.
//!
//! For an odd shore `X`, every perfect matching meets `∂(X)` in an odd number
//! of edges. So `∂(X)` fails to be tight exactly when some perfect matching
//! uses two vertex-disjoint edges of the cut, i.e. when `G - ends(e) - ends(f)`
//! is matchable for some disjoint pair `e, f ∈ ∂(X)`.

mod decompose;

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Quadrant, Result};
use crate::graph::{vertex_connectivity, Cut, EdgeId, Multigraph, Vertex};
use crate::matching::{self, is_bicritical, Matcher};

pub use decompose::{
    b_count, leaf_multiset, tight_cut_decomposition, DecompositionTree, LeafVerdict, Policy,
};

/// How a nontrivial tight cut arises.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case", tag = "type")]
pub enum TightCutKind {
    /// The shore is an odd component of `G - barrier`.
    BarrierCut {
        barrier: BTreeSet<Vertex>,
        component: BTreeSet<Vertex>,
    },
    /// The shore is `union ∪ {u}` or `union ∪ {v}` for a union of even
    /// components of `G - u - v`.
    TwoSeparationCut {
        pair: (Vertex, Vertex),
        union: BTreeSet<Vertex>,
    },
    Other,
}

/// Tightness tests on one host, sharing perfect matchings found along the
/// way: a stored matching meeting a cut in three or more edges refutes
/// tightness without a new search.
pub struct TightChecker<'g> {
    g: &'g Multigraph,
    matcher: Matcher,
    pool: Vec<Vec<bool>>,
}

impl<'g> TightChecker<'g> {
    pub fn new(g: &'g Multigraph) -> Self {
        let matcher = Matcher::new(g);
        let mut checker = TightChecker {
            g,
            matcher,
            pool: Vec::new(),
        };
        if let Some(m) = checker.matcher.perfect_matching(&[], &[]) {
            checker.remember(m.edges().iter().copied());
        }
        checker
    }

    pub fn matcher(&self) -> &Matcher {
        &self.matcher
    }

    fn remember(&mut self, edges: impl Iterator<Item = EdgeId>) {
        let mut mask = vec![false; self.g.edge_bound()];
        for e in edges {
            mask[e.0] = true;
        }
        self.pool.push(mask);
    }

    /// Tightness of `∂(shore)`; the shore must be odd.
    pub fn is_tight(&mut self, shore: &BTreeSet<Vertex>) -> Result<bool> {
        if shore.len().is_multiple_of(2) {
            return Err(Error::EvenShore(shore.len()));
        }
        let cut = self.g.cut_of(shore)?;
        Ok(self.witness_pair(&cut)?.is_none())
    }

    /// Two disjoint cut edges lying in a common perfect matching, if any.
    pub fn witness_pair(&mut self, cut: &Cut) -> Result<Option<(EdgeId, EdgeId)>> {
        let edges: Vec<EdgeId> = cut.edges().iter().copied().collect();
        for mask in &self.pool {
            let hits: Vec<EdgeId> = edges.iter().copied().filter(|e| mask[e.0]).collect();
            if hits.len() >= 2 {
                return Ok(Some((hits[0], hits[1])));
            }
        }
        for (i, &e) in edges.iter().enumerate() {
            let [a, b] = self.g.endpoints(e)?;
            for &f in &edges[i + 1..] {
                let [c, d] = self.g.endpoints(f)?;
                if [c, d].iter().any(|x| *x == a || *x == b) {
                    continue;
                }
                if let Some(m) = self.matcher.perfect_matching(&[a, b, c, d], &[]) {
                    self.remember(m.edges().iter().copied().chain([e, f]));
                    return Ok(Some((e, f)));
                }
            }
        }
        Ok(None)
    }
}

pub fn is_tight_cut(g: &Multigraph, shore: &BTreeSet<Vertex>) -> Result<bool> {
    TightChecker::new(g).is_tight(shore)
}

/// Nontrivial cuts `∂(V(K))` for the odd components `K` of `G - barrier`.
pub fn barrier_cuts(g: &Multigraph, barrier: &BTreeSet<Vertex>) -> Result<Vec<Cut>> {
    if !matching::is_barrier(g, barrier)? {
        return Err(Error::NotBarrier);
    }
    let mut out = Vec::new();
    for comp in matching::components_after_removing(g, barrier)? {
        if comp.len() % 2 == 1 {
            let cut = g.cut_of(&comp.into_iter().collect())?;
            if !cut.is_trivial() {
                out.push(cut);
            }
        }
    }
    Ok(out)
}

/// The cuts with shores `V(K) ∪ {u}` and `V(K) ∪ {v}` for every component
/// `K` of `G - u - v`, which must all be even.
pub fn two_separation_cuts(g: &Multigraph, u: Vertex, v: Vertex) -> Result<Vec<Cut>> {
    if u == v {
        return Err(Error::SameVertex);
    }
    let pair: BTreeSet<Vertex> = [u, v].into();
    let comps = matching::components_after_removing(g, &pair)?;
    if comps.len() < 2 {
        return Err(Error::NotTwoVertexCut(u, v));
    }
    if comps.iter().any(|c| c.len() % 2 == 1) {
        return Err(Error::HasOddComponent(u, v));
    }
    let mut out = Vec::new();
    for comp in comps {
        for end in [u, v] {
            let mut shore: BTreeSet<Vertex> = comp.iter().copied().collect();
            shore.insert(end);
            out.push(g.cut_of(&shore)?);
        }
    }
    Ok(out)
}

fn check_matching_covered(g: &Multigraph) -> Result<()> {
    if matching::is_matching_covered(g) {
        Ok(())
    } else {
        Err(Error::NotMatchingCovered)
    }
}

/// Color class of `a` in a bipartite matching covered graph and a set
/// `S` of that class with `|N(S)| = |S| + 1` and `1 ≤ |S| ≤ |class| - 2`,
/// derived from disjoint edges `e = a1b1`, `f = a2b2` that no perfect
/// matching contains together.
fn hall_shore(
    g: &Multigraph,
    side: &[Option<bool>],
    matcher: &Matcher,
    e: EdgeId,
    f: EdgeId,
) -> Result<Option<BTreeSet<Vertex>>> {
    let [p, q] = g.endpoints(e)?;
    let [r, s] = g.endpoints(f)?;
    if [r, s].iter().any(|x| *x == p || *x == q) {
        return Ok(None);
    }
    let removed = [p, q, r, s];
    let m = matcher.maximum_matching(&removed, &[]);
    if 2 * m.len() + 4 == g.order() {
        return Ok(None);
    }
    let class = side[p].expect("live vertex");
    let mut mate: BTreeMap<Vertex, Vertex> = BTreeMap::new();
    for &h in m.edges() {
        let [x, y] = g.endpoints(h)?;
        mate.insert(x, y);
        mate.insert(y, x);
    }
    let alive = |x: Vertex| !removed.contains(&x);
    let mut reached: BTreeSet<Vertex> = BTreeSet::new();
    let mut queue: VecDeque<Vertex> = VecDeque::new();
    // roots: exposed vertices of whichever class has one
    let roots: Vec<Vertex> = g
        .vertices()
        .filter(|&x| alive(x) && !mate.contains_key(&x))
        .collect();
    let root_class = side[roots[0]].expect("live vertex");
    for &x in roots.iter().filter(|&&x| side[x] == Some(root_class)) {
        reached.insert(x);
        queue.push_back(x);
    }
    while let Some(x) = queue.pop_front() {
        if side[x] == Some(root_class) {
            for y in g.neighbors(x) {
                if alive(y) && reached.insert(y) {
                    queue.push_back(y);
                }
            }
        } else if let Some(&y) = mate.get(&x) {
            if reached.insert(y) {
                queue.push_back(y);
            }
        }
    }
    let s_set: BTreeSet<Vertex> = reached
        .iter()
        .copied()
        .filter(|&x| side[x] == Some(root_class))
        .collect();
    let mut shore = s_set.clone();
    for &x in &s_set {
        shore.extend(g.neighbors(x));
    }
    debug_assert_eq!(shore.len(), 2 * s_set.len() + 1, "class {class}");
    Ok(Some(shore))
}

fn classify_bipartite_cut(g: &Multigraph, shore: &BTreeSet<Vertex>) -> Result<TightCutKind> {
    let complement: BTreeSet<Vertex> = g.vertices().filter(|v| !shore.contains(v)).collect();
    for (inside, outside) in [(shore, &complement), (&complement, shore)] {
        // barrier: the outside vertices adjacent to the inside
        let barrier: BTreeSet<Vertex> = inside
            .iter()
            .flat_map(|&x| g.neighbors(x))
            .filter(|y| outside.contains(y))
            .collect();
        if barrier.is_empty() || !matching::is_barrier(g, &barrier)? {
            continue;
        }
        let comps = matching::components_after_removing(g, &barrier)?;
        if comps
            .iter()
            .any(|c| c.iter().copied().collect::<BTreeSet<_>>() == *inside)
        {
            return Ok(TightCutKind::BarrierCut {
                barrier,
                component: inside.clone(),
            });
        }
    }
    Ok(TightCutKind::Other)
}

/// All nontrivial tight cuts of the two kinds found by vertex-pair scans,
/// normalized and deduplicated. Used by the seeded decomposition policy.
pub fn elp_candidates(g: &Multigraph) -> Result<Vec<(Cut, TightCutKind)>> {
    check_matching_covered(g)?;
    let mut found: BTreeMap<Cut, TightCutKind> = BTreeMap::new();
    let matcher = Matcher::new(g);
    if let Some(side) = g.bipartition() {
        let edges: Vec<EdgeId> = g.edge_ids().collect();
        for (i, &e) in edges.iter().enumerate() {
            for &f in &edges[i + 1..] {
                if let Some(shore) = hall_shore(g, &side, &matcher, e, f)? {
                    let cut = g.cut_of(&shore)?.normalized();
                    if let std::collections::btree_map::Entry::Vacant(e) = found.entry(cut) {
                        let kind = classify_bipartite_cut(g, &shore)?;
                        e.insert(kind);
                    }
                }
            }
        }
    } else {
        let verts: Vec<Vertex> = g.vertices().collect();
        let mut seen: BTreeSet<BTreeSet<Vertex>> = BTreeSet::new();
        for (i, &u) in verts.iter().enumerate() {
            for &w in &verts[i + 1..] {
                let Some(b) = matching::maximal_barrier_with(g, &matcher, u, w)? else {
                    continue;
                };
                if !seen.insert(b.clone()) {
                    continue;
                }
                for cut in barrier_cuts(g, &b)? {
                    let kind = TightCutKind::BarrierCut {
                        barrier: b.clone(),
                        component: cut.shore().clone(),
                    };
                    found.entry(cut.normalized()).or_insert(kind);
                }
            }
        }
    }
    for (u, v) in crate::graph::two_vertex_cuts(g) {
        match two_separation_cuts(g, u, v) {
            Ok(cuts) => {
                for cut in cuts {
                    let end = if cut.shore().contains(&u) { u } else { v };
                    let union = cut.shore().iter().copied().filter(|&x| x != end).collect();
                    found
                        .entry(cut.normalized())
                        .or_insert(TightCutKind::TwoSeparationCut { pair: (u, v), union });
                }
            }
            Err(Error::HasOddComponent(..)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(found.into_iter().collect())
}

/// A nontrivial tight cut, or `None` when `g` is a brick or a brace.
///
/// Nonbipartite graphs: vertex pairs in lexicographic order are tested for
/// a maximal barrier; the first nontrivial barrier yields its smallest
/// nontrivial barrier cut. Failing that (the graph is bicritical), the first
/// 2-vertex-cut yields its smallest 2-separation cut. Bipartite graphs: the
/// first pair of disjoint edges (by id) that no perfect matching contains
/// yields a Hall-deficient shore.
pub fn find_nontrivial_tight_cut(g: &Multigraph) -> Result<Option<(Cut, TightCutKind)>> {
    check_matching_covered(g)?;
    let matcher = Matcher::new(g);
    if let Some(side) = g.bipartition() {
        let edges: Vec<EdgeId> = g.edge_ids().collect();
        for (i, &e) in edges.iter().enumerate() {
            for &f in &edges[i + 1..] {
                if let Some(shore) = hall_shore(g, &side, &matcher, e, f)? {
                    let kind = classify_bipartite_cut(g, &shore)?;
                    return Ok(Some((g.cut_of(&shore)?, kind)));
                }
            }
        }
        return Ok(None);
    }
    let verts: Vec<Vertex> = g.vertices().collect();
    for (i, &u) in verts.iter().enumerate() {
        for &w in &verts[i + 1..] {
            let Some(b) = matching::maximal_barrier_with(g, &matcher, u, w)? else {
                continue;
            };
            let best = barrier_cuts(g, &b)?
                .into_iter()
                .min_by_key(|c| (c.shore().len(), c.shore().iter().next().copied()));
            if let Some(cut) = best {
                let kind = TightCutKind::BarrierCut {
                    barrier: b,
                    component: cut.shore().clone(),
                };
                return Ok(Some((cut, kind)));
            }
        }
    }
    for (u, v) in crate::graph::two_vertex_cuts(g) {
        let cuts = match two_separation_cuts(g, u, v) {
            Ok(c) => c,
            Err(Error::HasOddComponent(..)) => continue,
            Err(e) => return Err(e),
        };
        let cut = cuts
            .into_iter()
            .min_by_key(|c| (c.shore().len(), c.shore().iter().next().copied()))
            .expect("a 2-vertex-cut has at least two components");
        let end = if cut.shore().contains(&u) { u } else { v };
        let union = cut.shore().iter().copied().filter(|&x| x != end).collect();
        return Ok(Some((cut, TightCutKind::TwoSeparationCut { pair: (u, v), union })));
    }
    Ok(None)
}

pub const DEFAULT_EXHAUSTIVE_BOUND: usize = 14;

/// Every nontrivial tight cut, one normalized cut per `{X, X̄}`, by scanning
/// all odd shores.
pub fn enumerate_tight_cuts_exhaustive(g: &Multigraph, bound: usize) -> Result<Vec<Cut>> {
    let n = g.order();
    if n > bound || n > 30 {
        return Err(Error::BoundExceeded {
            order: n,
            bound: bound.min(30),
        });
    }
    check_matching_covered(g)?;
    let verts: Vec<Vertex> = g.vertices().collect();
    let mut checker = TightChecker::new(g);
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << n) {
        let size = mask.count_ones() as usize;
        if mask & 1 == 0 || size.is_multiple_of(2) || size < 3 || n - size < 3 {
            continue;
        }
        let shore: BTreeSet<Vertex> = (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| verts[i]).collect();
        if checker.is_tight(&shore)? {
            out.push(g.cut_of(&shore)?.normalized());
        }
    }
    out.sort();
    Ok(out)
}

/// 3-connected and bicritical, on at least four vertices.
pub fn is_brick(g: &Multigraph) -> bool {
    g.order() >= 4
        && g.order().is_multiple_of(2)
        && g.is_connected()
        && vertex_connectivity(g).map(|k| k >= 3).unwrap_or(false)
        && is_bicritical(g).unwrap_or(false)
}

/// Bipartite, matching covered and free of nontrivial tight cuts.
pub fn is_brace(g: &Multigraph) -> bool {
    g.is_bipartite()
        && matching::is_matching_covered(g)
        && matches!(find_nontrivial_tight_cut(g), Ok(None))
}

/// `b(G) = 1`.
pub fn is_near_brick(g: &Multigraph) -> Result<bool> {
    Ok(b_count(g)? == 1)
}

/// The two cuts produced by uncrossing two crossing tight cuts.
#[derive(Debug, Clone, Serialize)]
pub struct Uncrossing {
    /// `∂(X ∩ Y)` after orienting `Y` so that `|X ∩ Y|` is odd.
    pub i: Cut,
    /// `∂(X̄ ∩ Ȳ)`.
    pub u: Cut,
    pub i_tight: bool,
    pub u_tight: bool,
    /// Edges between `X̄ ∩ Y` and `X ∩ Ȳ`.
    pub diagonal_edges: usize,
    /// `|C| + |D| = |I| + |U|`.
    pub sizes_balance: bool,
}

pub fn uncross(g: &Multigraph, c: &Cut, d: &Cut) -> Result<Uncrossing> {
    let x = c.shore();
    let mut y: BTreeSet<Vertex> = d.shore().clone();
    let all = g.vertex_set();
    let quadrant = |x_in: bool, y_in: bool, y: &BTreeSet<Vertex>| -> BTreeSet<Vertex> {
        all.iter()
            .copied()
            .filter(|v| x.contains(v) == x_in && y.contains(v) == y_in)
            .collect()
    };
    for (q, xi, yi) in [
        (Quadrant::InIn, true, true),
        (Quadrant::InOut, true, false),
        (Quadrant::OutIn, false, true),
        (Quadrant::OutOut, false, false),
    ] {
        if quadrant(xi, yi, &y).is_empty() {
            return Err(Error::Laminar(q));
        }
    }
    let mut checker = TightChecker::new(g);
    for cut in [c, d] {
        if cut.shore().len() % 2 == 0 || !checker.is_tight(cut.shore())? {
            return Err(Error::NotTight);
        }
    }
    if quadrant(true, true, &y).len() % 2 == 0 {
        y = all.difference(&y).copied().collect();
    }
    let i_shore = quadrant(true, true, &y);
    let u_shore = quadrant(false, false, &y);
    let out_in = quadrant(false, true, &y);
    let in_out = quadrant(true, false, &y);
    let diagonal_edges = g
        .edges()
        .filter(|(_, [a, b])| {
            out_in.contains(a) && in_out.contains(b) || out_in.contains(b) && in_out.contains(a)
        })
        .count();
    let i = g.cut_of(&i_shore)?;
    let u = g.cut_of(&u_shore)?;
    let i_tight = checker.is_tight(&i_shore)?;
    let u_tight = u_shore.len() % 2 == 1 && checker.is_tight(&u_shore)?;
    let sizes_balance = c.size() + d.size() == i.size() + u.size();
    Ok(Uncrossing {
        i,
        u,
        i_tight,
        u_tight,
        diagonal_edges,
        sizes_balance,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{catalog, is_isomorphic};

    fn shore_of(g: &Multigraph, labels: &[&str]) -> BTreeSet<Vertex> {
        labels.iter().map(|l| g.find_label(l).unwrap()).collect()
    }

    #[test]
    fn fig1_triangle_cut_is_tight_and_prism_triangle_is_not() {
        let g = catalog::fig1();
        assert!(is_tight_cut(&g, &shore_of(&g, &["a", "b", "c"])).unwrap());
        let p = catalog::c6bar();
        assert!(!is_tight_cut(&p, &[0, 1, 2].into()).unwrap());
        assert_eq!(is_tight_cut(&p, &[0, 1].into()), Err(Error::EvenShore(2)));
        for v in p.vertices() {
            assert!(is_tight_cut(&p, &[v].into()).unwrap());
        }
    }

    #[test]
    fn fig1_barrier_cut_contractions() {
        let g = catalog::fig1();
        let cuts = barrier_cuts(&g, &shore_of(&g, &["p", "q", "r"])).unwrap();
        let triangle = shore_of(&g, &["a", "b", "c"]);
        assert!(cuts.iter().any(|c| *c.shore() == triangle));
        let cut = g.cut_of(&triangle).unwrap();
        let outer = g.contract_shore(cut.complement(), "x").unwrap();
        let inner = g.contract_shore(cut.shore(), "x").unwrap();
        assert!(is_isomorphic(&outer, &catalog::k4()));
        assert!(is_isomorphic(&inner, &catalog::k33()));
        assert_eq!(
            barrier_cuts(&g, &shore_of(&g, &["a", "b"])),
            Err(Error::NotBarrier)
        );
    }

    #[test]
    fn fig3_two_separation_cuts_contract_to_k4() {
        let g = catalog::fig3();
        let (x, y) = (g.find_label("x").unwrap(), g.find_label("y").unwrap());
        let cuts = two_separation_cuts(&g, x, y).unwrap();
        assert_eq!(cuts.len(), 4);
        for cut in cuts {
            assert!(is_tight_cut(&g, cut.shore()).unwrap());
            let h = g.contract_shore(cut.complement(), "z").unwrap();
            assert!(is_isomorphic(&h.underlying_simple(), &catalog::k4()));
        }
        let a = g.find_label("a").unwrap();
        assert_eq!(
            two_separation_cuts(&g, a, x),
            Err(Error::NotTwoVertexCut(a, x))
        );
        let p = catalog::fig1();
        let (pp, qq) = (p.find_label("p").unwrap(), p.find_label("q").unwrap());
        assert!(matches!(
            two_separation_cuts(&p, pp, qq),
            Err(Error::NotTwoVertexCut(..))
        ));
    }

    #[test]
    fn odd_component_two_cut_is_reported() {
        // two triangles sharing the pair {0, 1} with pendant paths: 0-2-1, 0-3-1
        let g = Multigraph::from_edges(4, &[(0, 2), (2, 1), (0, 3), (3, 1)]).unwrap();
        assert_eq!(two_separation_cuts(&g, 0, 1), Err(Error::HasOddComponent(0, 1)));
    }

    #[test]
    fn bricks_and_braces_have_no_nontrivial_tight_cut() {
        for g in [catalog::petersen(), catalog::k33(), catalog::k4(), catalog::c6bar()] {
            assert_eq!(find_nontrivial_tight_cut(&g).unwrap(), None);
            assert!(enumerate_tight_cuts_exhaustive(&g, 14).unwrap().is_empty());
        }
        assert!(is_brick(&catalog::petersen()));
        assert!(is_brick(&catalog::c6bar()));
        assert!(is_brace(&catalog::k33()));
        assert!(!is_brick(&catalog::fig3()));
        assert!(!is_brace(&catalog::fig3()));
    }

    #[test]
    fn fig1_cut_is_found() {
        let g = catalog::fig1();
        let (cut, kind) = find_nontrivial_tight_cut(&g).unwrap().unwrap();
        assert!(is_tight_cut(&g, cut.shore()).unwrap());
        assert!(matches!(kind, TightCutKind::BarrierCut { .. }));
        let all = enumerate_tight_cuts_exhaustive(&g, 14).unwrap();
        assert_eq!(all, vec![cut.normalized()]);
    }

    #[test]
    fn hexagon_tight_cuts() {
        let c6 =
            Multigraph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        let all = enumerate_tight_cuts_exhaustive(&c6, 14).unwrap();
        // shores are three consecutive vertices; {i, i+1, i+2} and its
        // complement give three distinct cuts
        assert_eq!(all.len(), 3);
        let (cut, _) = find_nontrivial_tight_cut(&c6).unwrap().unwrap();
        assert!(all.contains(&cut.normalized()));
        assert_eq!(
            enumerate_tight_cuts_exhaustive(&catalog::petersen(), 8),
            Err(Error::BoundExceeded { order: 10, bound: 8 })
        );
    }

    #[test]
    fn chorded_hexagon_is_rejected() {
        let g = Multigraph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 2)])
            .unwrap();
        assert_eq!(find_nontrivial_tight_cut(&g), Err(Error::NotMatchingCovered));
    }

    #[test]
    fn trivial_cuts_are_laminar() {
        let g = catalog::petersen();
        let c = g.cut_of(&[0].into()).unwrap();
        let d = g.cut_of(&[1].into()).unwrap();
        assert_eq!(uncross(&g, &c, &d).unwrap_err(), Error::Laminar(Quadrant::InIn));
    }

    #[test]
    fn hexagon_cuts_uncross() {
        let c6 =
            Multigraph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        let c = c6.cut_of(&[0, 1, 2].into()).unwrap();
        let d = c6.cut_of(&[1, 2, 3].into()).unwrap();
        let r = uncross(&c6, &c, &d).unwrap();
        assert!(r.i_tight && r.u_tight && r.sizes_balance);
        assert_eq!(r.diagonal_edges, 0);
    }
}
