//! Barrier structure around a removable edge of an essentially
//! 4-edge-connected cubic brick, and the finer structure around a
//! quasi-b-invariant edge.
//!
//! For a removable edge `e = vu`, `B` is a barrier of `G - e` containing
//! the two neighbours of `v` other than `u`, and `B'` one containing the
//! neighbours of `u` other than `v`. `I` and `I'` are the isolated vertices
//! left by deleting them. The maximal such barriers are used when they fit
//! the structure; otherwise the largest sub-barriers that do.

use std::collections::BTreeSet;

use serde::Serialize;

use super::{classify_all, is_efec_cubic_brick, EdgeClass, Mode};
use crate::error::{Error, Result};
use crate::graph::{
    catalog, enumerate_small_edge_cuts, is_isomorphic, two_vertex_cuts, vertex_connectivity,
    EdgeId, Multigraph, Vertex,
};
use crate::matching::{self, maximal_barrier_with, Matcher};
use crate::tightcut::{b_count, is_brick};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StructureCase {
    /// `B = B'`: both ends of `e` are isolated in `G - e - B`.
    OneBarrier,
    /// `B ∪ I` and `B' ∪ I'` are disjoint.
    TwoBarrier,
}

#[derive(Debug, Clone)]
pub struct RemovableStructure {
    pub edge: EdgeId,
    pub v: Vertex,
    pub u: Vertex,
    pub case: StructureCase,
    pub barrier: BTreeSet<Vertex>,
    pub isolated: BTreeSet<Vertex>,
    pub barrier2: Option<BTreeSet<Vertex>>,
    pub isolated2: Option<BTreeSet<Vertex>>,
    /// `G - e` with `B ∪ I` (and `B' ∪ I'`) contracted.
    pub h: Multigraph,
    pub x: Vertex,
    pub x2: Option<Vertex>,
    pub h_is_brick: bool,
}

impl RemovableStructure {
    /// `b(G - e)` as forced by the barrier structure.
    pub fn b_value(&self) -> usize {
        match self.case {
            StructureCase::OneBarrier => 1,
            StructureCase::TwoBarrier if self.h_is_brick => 1,
            StructureCase::TwoBarrier => 2,
        }
    }
}

fn fail(what: &str) -> Error {
    Error::Structure(what.to_string())
}

/// Isolated vertices of `g - s`, after checking that `s` is a special
/// barrier with `|I| = |s| - 1`.
fn special_isolated(g: &Multigraph, s: &BTreeSet<Vertex>) -> Result<BTreeSet<Vertex>> {
    if !matching::is_special_barrier(g, s)? {
        return Err(fail("maximal barrier of G - e is not special"));
    }
    let isolated: BTreeSet<Vertex> = matching::components_after_removing(g, s)?
        .into_iter()
        .filter(|c| c.len() == 1)
        .map(|c| c[0])
        .collect();
    if isolated.len() + 1 != s.len() {
        return Err(fail("special barrier leaves the wrong number of isolated vertices"));
    }
    Ok(isolated)
}

fn other_neighbours(g: &Multigraph, v: Vertex, skip: EdgeId) -> Result<[Vertex; 2]> {
    let rest: Vec<Vertex> = g
        .incident(v)
        .iter()
        .filter(|&&f| f != skip)
        .map(|&f| g.other_end(f, v))
        .collect::<Result<_>>()?;
    match rest[..] {
        [a, b] if a != b => Ok([a, b]),
        _ => Err(fail("end of e lacks two distinct other neighbours")),
    }
}

/// [`removable_structure_at`] anchored at the smaller end of `e`.
pub fn removable_structure(g: &Multigraph, e: EdgeId) -> Result<RemovableStructure> {
    let [a, _] = g.endpoints(e)?;
    removable_structure_at(g, e, a)
}

/// Barrier structure of `G - e` with `v` the chosen end of `e`. Every
/// structural claim is checked; a violation is reported as
/// [`Error::Structure`].
pub fn removable_structure_at(g: &Multigraph, e: EdgeId, v: Vertex) -> Result<RemovableStructure> {
    if !is_efec_cubic_brick(g) {
        return Err(Error::NotEfecCubicBrick);
    }
    let [a, b] = g.endpoints(e)?;
    let u = match v {
        _ if v == a => b,
        _ if v == b => a,
        _ => return Err(Error::NotAnEndpoint(v)),
    };
    let ge = g.without_edge(e)?;
    if !matching::is_matching_covered(&ge) {
        return Err(Error::NotRemovable(e));
    }
    let matcher = Matcher::new(&ge);
    let [p, q] = other_neighbours(g, v, e)?;
    let [p2, q2] = other_neighbours(g, u, e)?;
    let barrier = maximal_barrier_with(&ge, &matcher, p, q)?
        .ok_or_else(|| fail("neighbours of v are not in a common barrier"))?;
    let barrier2 = maximal_barrier_with(&ge, &matcher, p2, q2)?
        .ok_or_else(|| fail("neighbours of u are not in a common barrier"))?;
    let isolated = special_isolated(&ge, &barrier)?;
    if !isolated.contains(&v) {
        return Err(fail("v is not isolated by its barrier"));
    }
    let shore: BTreeSet<Vertex> = barrier.union(&isolated).copied().collect();
    let x = *shore.iter().next().expect("nonempty shore");

    if barrier == barrier2 {
        if !isolated.contains(&u) {
            return Err(fail("shared barrier does not isolate u"));
        }
        let h = ge.contract_shore(&shore, "x")?;
        if h.degree(x) != 5 || h.vertices().any(|w| w != x && h.degree(w) != 3) {
            return Err(fail("one-barrier contraction has the wrong degrees"));
        }
        if !is_brick(&h) {
            return Err(fail("one-barrier contraction is not a brick"));
        }
        return Ok(RemovableStructure {
            edge: e,
            v,
            u,
            case: StructureCase::OneBarrier,
            barrier,
            isolated,
            barrier2: None,
            isolated2: None,
            h,
            x,
            x2: None,
            h_is_brick: true,
        });
    }

    let (barrier, isolated, barrier2, isolated2, h) =
        disjoint_barrier_pair(&ge, (v, &barrier), (u, &barrier2))?;
    let x = *barrier.union(&isolated).next().expect("nonempty shore");
    let x2 = *barrier2.union(&isolated2).next().expect("nonempty shore");
    let h_is_brick = is_brick(&h);
    if !h_is_brick {
        let pair = (x.min(x2), x.max(x2));
        if two_vertex_cuts(&h) != [pair] {
            return Err(fail("{x, x'} is not the unique 2-vertex cut"));
        }
        let comps = matching::components_after_removing(&h, &BTreeSet::from([x, x2]))?;
        if comps.len() != 2 || comps.iter().any(|c| c.len() % 2 == 1) {
            return Err(fail("H - x - x' is not two even components"));
        }
        if b_count(&h)? != 2 {
            return Err(fail("b(H) differs from 2"));
        }
    }
    Ok(RemovableStructure {
        edge: e,
        v,
        u,
        case: StructureCase::TwoBarrier,
        barrier,
        isolated,
        barrier2: Some(barrier2),
        isolated2: Some(isolated2),
        h,
        x,
        x2: Some(x2),
        h_is_brick,
    })
}

/// Barriers of `ge` between `seed` and the maximal barrier `top` that
/// isolate `end`, largest first, each with its isolated vertices.
fn sub_barriers(
    ge: &Multigraph,
    end: Vertex,
    seed: &BTreeSet<Vertex>,
    top: &BTreeSet<Vertex>,
) -> Result<Vec<(BTreeSet<Vertex>, BTreeSet<Vertex>)>> {
    let extra: Vec<Vertex> = top.difference(seed).copied().collect();
    if extra.len() > 16 {
        return Err(fail("maximal barrier too large for the sub-barrier search"));
    }
    let mut out = Vec::new();
    for mask in 0u32..(1 << extra.len()) {
        let mut b = seed.clone();
        b.extend((0..extra.len()).filter(|&i| mask >> i & 1 == 1).map(|i| extra[i]));
        if !matching::is_barrier(ge, &b)? {
            continue;
        }
        let isolated = special_isolated(ge, &b)?;
        if isolated.contains(&end) {
            out.push((b, isolated));
        }
    }
    out.sort_by(|x, y| y.0.len().cmp(&x.0.len()).then_with(|| x.0.cmp(&y.0)));
    Ok(out)
}

type BarrierPair = (
    BTreeSet<Vertex>,
    BTreeSet<Vertex>,
    BTreeSet<Vertex>,
    BTreeSet<Vertex>,
    Multigraph,
);

/// The two-barrier alternative: special barriers `B ⊆ top` and
/// `B' ⊆ top'` around the two ends with disjoint shores whose contraction
/// `H` is bicritical, with `x` and `x'` of degree four and every other
/// vertex cubic. The maximal barriers are tried first, then smaller ones
/// in order of decreasing `|B| + |B'|`.
fn disjoint_barrier_pair(
    ge: &Multigraph,
    (v, top): (Vertex, &BTreeSet<Vertex>),
    (u, top2): (Vertex, &BTreeSet<Vertex>),
) -> Result<BarrierPair> {
    let seed: BTreeSet<Vertex> = ge.distinct_neighbors(v);
    let seed2: BTreeSet<Vertex> = ge.distinct_neighbors(u);
    let first = sub_barriers(ge, v, &seed, top)?;
    let second = sub_barriers(ge, u, &seed2, top2)?;
    let mut pairs: Vec<(usize, usize)> = (0..first.len())
        .flat_map(|i| (0..second.len()).map(move |j| (i, j)))
        .collect();
    pairs.sort_by_key(|&(i, j)| {
        (
            std::cmp::Reverse(first[i].0.len() + second[j].0.len()),
            i,
            j,
        )
    });
    for (i, j) in pairs {
        let (b, iso) = &first[i];
        let (b2, iso2) = &second[j];
        let shore: BTreeSet<Vertex> = b.union(iso).copied().collect();
        let shore2: BTreeSet<Vertex> = b2.union(iso2).copied().collect();
        if !shore.is_disjoint(&shore2) {
            continue;
        }
        let x = *shore.iter().next().expect("nonempty shore");
        let x2 = *shore2.iter().next().expect("nonempty shore");
        let h = ge.contract_shore(&shore, "x")?.contract_shore(&shore2, "x'")?;
        let degrees_ok = h.degree(x) == 4
            && h.degree(x2) == 4
            && h.vertices().all(|w| w == x || w == x2 || h.degree(w) == 3);
        if degrees_ok && matching::is_bicritical(&h)? {
            return Ok((b.clone(), iso.clone(), b2.clone(), iso2.clone(), h));
        }
    }
    Err(fail("no pair of barriers with disjoint shores and a bicritical contraction"))
}

/// Structure around a quasi-b-invariant edge. `L` and `L'` are the
/// components of `H - x - x'`; `J = H - V(L') + xx'` and
/// `J' = H - V(L) + xx'`.
#[derive(Debug, Clone)]
pub struct QbinvStructure {
    pub base: RemovableStructure,
    pub l: BTreeSet<Vertex>,
    pub l2: BTreeSet<Vertex>,
    pub j: Multigraph,
    pub j2: Multigraph,
    /// The added edge `xx'`; it has the same id in `J` and `J'`.
    pub xx: EdgeId,
    /// `∂_H(x)` into `L`.
    pub d: EdgeId,
    pub f: EdgeId,
    /// `∂_H(x)` into `L'`.
    pub g: EdgeId,
    pub h: EdgeId,
    /// `∂_H(x')` into `L`.
    pub d2: EdgeId,
    pub f2: EdgeId,
    /// `∂_H(x')` into `L'`.
    pub g2: EdgeId,
    pub h2: EdgeId,
    /// Named structural claims and whether each holds.
    pub checks: Vec<(&'static str, bool)>,
}

impl QbinvStructure {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|&(_, ok)| ok)
    }

    pub fn failures(&self) -> Vec<&'static str> {
        self.checks
            .iter()
            .filter(|&&(_, ok)| !ok)
            .map(|&(name, _)| name)
            .collect()
    }
}

pub fn qbinv_structure(g: &Multigraph, e: EdgeId) -> Result<QbinvStructure> {
    let [a, _] = g.endpoints(e)?;
    qbinv_structure_at(g, e, a)
}

/// Builds the structure and evaluates its claims. Claims that fail are
/// listed in [`QbinvStructure::checks`] rather than returned as errors, so
/// a harness can report them.
pub fn qbinv_structure_at(g: &Multigraph, e: EdgeId, v: Vertex) -> Result<QbinvStructure> {
    let base = match removable_structure_at(g, e, v) {
        Err(Error::NotRemovable(e)) => return Err(Error::NotQuasiBInvariant(e)),
        other => other?,
    };
    if base.b_value() != 2 || b_count(&g.without_edge(e)?)? != 2 {
        return Err(Error::NotQuasiBInvariant(e));
    }
    let h = &base.h;
    let (x, x2) = (base.x, base.x2.expect("two-barrier case"));
    let comps = matching::components_after_removing(h, &BTreeSet::from([x, x2]))?;
    let [l, l2]: [BTreeSet<Vertex>; 2] = match &comps[..] {
        [p, q] => [p.iter().copied().collect(), q.iter().copied().collect()],
        _ => return Err(fail("H - x - x' is not two components")),
    };
    let split = |at: Vertex| -> Result<([EdgeId; 2], [EdgeId; 2])> {
        let (mut into_l, mut into_l2) = (Vec::new(), Vec::new());
        for &f in h.incident(at) {
            let w = h.other_end(f, at)?;
            if l.contains(&w) {
                into_l.push(f);
            } else if l2.contains(&w) {
                into_l2.push(f);
            } else {
                return Err(fail("x and x' are adjacent in H"));
            }
        }
        match (&into_l[..], &into_l2[..]) {
            (&[p, q], &[r, s]) => Ok(([p, q], [r, s])),
            _ => Err(fail("edges at a contraction vertex do not split two and two")),
        }
    };
    let ([d, f], [gg, hh]) = split(x)?;
    let ([d2, f2], [g2, h2]) = split(x2)?;

    let build_j = |side: &BTreeSet<Vertex>| -> Result<(Multigraph, EdgeId)> {
        let mut keep = side.clone();
        keep.insert(x);
        keep.insert(x2);
        let mut j = h.induced(&keep);
        // pad the edge table so the new edge gets the same id in J and J'
        let xx = j.add_edge(x, x2)?;
        Ok((j, xx))
    };
    let (j, xx) = build_j(&l)?;
    let (j2, xx2) = build_j(&l2)?;
    debug_assert_eq!(xx, xx2);

    let mut checks = Vec::new();
    for (name, jj) in [("J is a cubic brick", &j), ("J' is a cubic brick", &j2)] {
        checks.push((name, jj.is_cubic() && is_brick(jj)));
    }
    for (name, jj) in [
        ("nontrivial 3-cuts of J contain xx'", &j),
        ("nontrivial 3-cuts of J' contain xx'", &j2),
    ] {
        let ok = enumerate_small_edge_cuts(jj, 3)?
            .iter()
            .filter(|c| !c.is_trivial())
            .all(|c| c.edges().contains(&xx));
        checks.push((name, ok));
    }

    let b1 = &base.barrier;
    let i1 = &base.isolated;
    let b2 = base.barrier2.as_ref().expect("two-barrier case");
    let i2 = base.isolated2.as_ref().expect("two-barrier case");
    let union = |sets: &[&BTreeSet<Vertex>]| -> BTreeSet<Vertex> {
        sets.iter().flat_map(|s| s.iter().copied()).collect()
    };
    let nonbipartite = [
        union(&[b1, i1, &l]),
        union(&[b1, i1, &l2]),
        union(&[b2, i2, &l]),
        union(&[b2, i2, &l2]),
    ]
    .iter()
    .all(|s| !g.induced(s).is_bipartite());
    checks.push(("barrier sides joined to L or L' are nonbipartite", nonbipartite));

    for (name, bar, iso, end) in [
        ("B side is matchable after deleting pairs", b1, i1, base.v),
        ("B' side is matchable after deleting pairs", b2, i2, base.u),
    ] {
        checks.push((name, barrier_side_matchable(g, bar, iso, end)));
    }
    for (name, bar, iso, end) in [
        ("B side is connected", b1, i1, base.v),
        ("B' side is connected", b2, i2, base.u),
    ] {
        let mut side = union(&[bar, iso]);
        side.remove(&end);
        checks.push((name, bar.len() < 3 || g.induced(&side).is_connected()));
    }

    let nonadjacent = |p: EdgeId, q: EdgeId| -> Result<bool> {
        let [a, b] = g.endpoints(p)?;
        let [c, dd] = g.endpoints(q)?;
        Ok(a != c && a != dd && b != c && b != dd)
    };
    checks.push((
        "boundary edge pairs are nonadjacent in G",
        nonadjacent(d, f)? && nonadjacent(gg, hh)? && nonadjacent(d2, f2)? && nonadjacent(g2, h2)?,
    ));
    for (name, side) in [("L is matchable and 2-connected", &l), ("L' is matchable and 2-connected", &l2)] {
        let sub = g.induced(side);
        checks.push((name, matching::has_perfect_matching(&sub) && is_two_connected(&sub)));
    }

    Ok(QbinvStructure {
        base,
        l,
        l2,
        j,
        j2,
        xx,
        d,
        f,
        g: gg,
        h: hh,
        d2,
        f2,
        g2,
        h2,
        checks,
    })
}

/// For distinct `p, q` in the barrier, `G[(B - p - q) ∪ (I - end)]` has a
/// perfect matching.
fn barrier_side_matchable(
    g: &Multigraph,
    barrier: &BTreeSet<Vertex>,
    isolated: &BTreeSet<Vertex>,
    end: Vertex,
) -> bool {
    let mut side: BTreeSet<Vertex> = barrier.union(isolated).copied().collect();
    side.remove(&end);
    let sub = g.induced(&side);
    let matcher = Matcher::new(&sub);
    let bs: Vec<Vertex> = barrier.iter().copied().collect();
    bs.iter().enumerate().all(|(i, &p)| {
        bs[i + 1..]
            .iter()
            .all(|&q| matcher.is_matchable(&[p, q], &[]))
    })
}

/// `K2` counts as 2-connected.
fn is_two_connected(g: &Multigraph) -> bool {
    match g.order() {
        0 | 1 => false,
        2 => g.is_connected(),
        _ => g.is_connected() && vertex_connectivity(g).map(|k| k >= 2).unwrap_or(false),
    }
}

/// Dependence between the edges at the two ends of `xx'` in a cubic brick
/// `J` whose nontrivial 3-cuts all contain `xx'`.
///
/// `J` is inflexible when an edge of `{d, f}` (at `x`) depends on an edge
/// of `{d', f'}` (at `x'`) or the other way round. The labels are then
/// chosen so that `d` depends on `d'`, swapping `x` and `x'` if needed.
#[derive(Debug, Clone, Serialize)]
pub struct Flexibility {
    pub inflexible: bool,
    pub x: Vertex,
    pub x2: Vertex,
    pub d: EdgeId,
    pub f: EdgeId,
    pub d2: EdgeId,
    pub f2: EdgeId,
    /// Inflexible: `{d, d'}` and `{f, f'}` are removable doubletons.
    pub doubletons_hold: Option<bool>,
    /// Inflexible: with `d = xy` and `T` the colour class of `J - d - d'`
    /// containing `x` and `y`, `xx'` is admissible in `J - d - d' - y - w`
    /// for every `w` in the other class except `x'`.
    pub admissibility_holds: Option<bool>,
    /// Flexible: every edge of `{d, f}` and every edge of `{d', f'}` lie
    /// in a common perfect matching.
    pub flexible_pairs_hold: Option<bool>,
}

pub fn is_inflexible(j: &Multigraph, xx: EdgeId) -> Result<Flexibility> {
    if !(j.is_cubic() && is_brick(j)) {
        return Err(Error::NotCubicBrick);
    }
    let [a, b] = j.endpoints(xx)?;
    if enumerate_small_edge_cuts(j, 3)?
        .iter()
        .any(|c| !c.is_trivial() && !c.edges().contains(&xx))
    {
        return Err(Error::Precondition(
            "a nontrivial 3-cut avoids the given edge".into(),
        ));
    }
    let others = |v: Vertex| -> Vec<EdgeId> {
        j.incident(v).iter().copied().filter(|&f| f != xx).collect()
    };
    let matcher = Matcher::new(j);
    let dep = |p: EdgeId, q: EdgeId| matching::depends_with(j, &matcher, p, q);

    let (at_a, at_b) = (others(a), others(b));
    let mut found = None;
    'search: for (x, x2, near, far) in [(a, b, &at_a, &at_b), (b, a, &at_b, &at_a)] {
        for &p in near {
            for &q in far {
                if dep(p, q)? {
                    found = Some((x, x2, p, q, near.clone(), far.clone()));
                    break 'search;
                }
            }
        }
    }

    let Some((x, x2, d, d2, near, far)) = found else {
        let mut ok = true;
        for &p in &at_a {
            for &q in &at_b {
                let [p1, p2] = j.endpoints(p)?;
                let [q1, q2] = j.endpoints(q)?;
                let ends = BTreeSet::from([p1, p2, q1, q2]);
                ok &= ends.len() == 4 && matcher.is_matchable(&[p1, p2, q1, q2], &[]);
            }
        }
        return Ok(Flexibility {
            inflexible: false,
            x: a,
            x2: b,
            d: at_a[0],
            f: at_a[1],
            d2: at_b[0],
            f2: at_b[1],
            doubletons_hold: None,
            admissibility_holds: None,
            flexible_pairs_hold: Some(ok),
        });
    };
    let f = *near.iter().find(|&&e| e != d).expect("cubic");
    let f2 = *far.iter().find(|&&e| e != d2).expect("cubic");

    let is_doubleton = |p: EdgeId, q: EdgeId| -> Result<bool> {
        let rest = j.without_edges(&[p, q])?;
        Ok(rest.is_bipartite() && matching::is_matching_covered(&rest))
    };
    let doubletons = is_doubleton(d, d2)? && is_doubleton(f, f2)?;

    let rest = j.without_edges(&[d, d2])?;
    let admissibility = match rest.bipartition() {
        None => false,
        Some(side) => {
            let y = j.other_end(d, x)?;
            let rest_matcher = Matcher::new(&rest);
            side[x] == side[y]
                && side[x2] != side[x]
                && rest
                    .vertices()
                    .filter(|&w| side[w] != side[x] && w != x2)
                    .all(|w| rest_matcher.is_matchable(&[y, w, x, x2], &[]))
        }
    };

    Ok(Flexibility {
        inflexible: true,
        x,
        x2,
        d,
        f,
        d2,
        f2,
        doubletons_hold: Some(doubletons),
        admissibility_holds: Some(admissibility),
        flexible_pairs_hold: None,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VertexOutcome {
    /// The third edge lies in a removable doubleton and `G` is the Cubeplex.
    DoubletonCubeplex,
    /// The third edge is quasi-b-invariant and `G` is the Petersen graph.
    QuasiPetersen,
    /// The third edge is b-invariant.
    BInvariant,
}

#[derive(Debug, Clone, Serialize)]
pub struct TwoQbinvOutcome {
    pub vertex: Vertex,
    pub quasi: [EdgeId; 2],
    pub third: EdgeId,
    pub outcome: VertexOutcome,
}

/// Which of the three outcomes holds at a vertex meeting at least two
/// quasi-b-invariant edges. The isomorphism claims are checked against the
/// catalog graphs; a mismatch is an [`Error::Structure`].
pub fn two_qbinv_vertex_outcome(g: &Multigraph, v: Vertex) -> Result<TwoQbinvOutcome> {
    if !g.contains_vertex(v) {
        return Err(Error::UnknownVertex(v));
    }
    let classes = classify_all(g, Mode::Strict)?;
    let at_v: Vec<(EdgeId, EdgeClass)> = g
        .incident(v)
        .iter()
        .map(|&e| (e, classes.iter().find(|c| c.edge == e).expect("classified").class))
        .collect();
    let quasi: Vec<EdgeId> = at_v
        .iter()
        .filter(|(_, c)| *c == EdgeClass::QuasiBInvariant)
        .map(|&(e, _)| e)
        .collect();
    if quasi.len() < 2 {
        return Err(Error::TooFewQuasiEdges {
            vertex: v,
            count: quasi.len(),
        });
    }
    let pair = [quasi[0], quasi[1]];
    let (third, class) = *at_v
        .iter()
        .find(|(e, _)| !pair.contains(e))
        .expect("cubic vertex");
    let outcome = match class {
        EdgeClass::DoubletonMember { .. } => {
            if !is_isomorphic(g, &catalog::cubeplex()) {
                return Err(fail("third edge is a doubleton member but G is not the Cubeplex"));
            }
            VertexOutcome::DoubletonCubeplex
        }
        EdgeClass::QuasiBInvariant => {
            if !is_isomorphic(g, &catalog::petersen()) {
                return Err(fail("all three edges are quasi-b-invariant but G is not Petersen"));
            }
            VertexOutcome::QuasiPetersen
        }
        EdgeClass::BInvariant => VertexOutcome::BInvariant,
        _ => return Err(fail("third edge is neither removable class nor doubleton member")),
    };
    Ok(TwoQbinvOutcome {
        vertex: v,
        quasi: pair,
        third,
        outcome,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge(g: &Multigraph, a: &str, b: &str) -> EdgeId {
        g.edges_between(g.find_label(a).unwrap(), g.find_label(b).unwrap())[0]
    }

    #[test]
    fn petersen_edges_have_two_barrier_structure() {
        let g = catalog::petersen();
        for e in g.edge_ids() {
            let s = removable_structure(&g, e).unwrap();
            assert_eq!(s.case, StructureCase::TwoBarrier);
            assert_eq!(s.b_value(), 2);
            let q = qbinv_structure(&g, e).unwrap();
            assert!(q.all_hold(), "{:?}", q.failures());
        }
    }

    #[test]
    fn petersen_j_is_k4_and_inflexible() {
        let g = catalog::petersen();
        let q = qbinv_structure(&g, EdgeId(0)).unwrap();
        assert!(is_isomorphic(&q.j.compact().0, &catalog::k4()));
        let flex = is_inflexible(&q.j, q.xx).unwrap();
        assert!(flex.inflexible);
        assert_eq!(flex.doubletons_hold, Some(true));
        assert_eq!(flex.admissibility_holds, Some(true));
    }

    #[test]
    fn fig4_outcome_at_v() {
        let g = catalog::fig4();
        let v = g.find_label("v").unwrap();
        let out = two_qbinv_vertex_outcome(&g, v).unwrap();
        assert_eq!(out.outcome, VertexOutcome::BInvariant);
        assert_eq!(out.third, edge(&g, "v", "u3"));
        let s = removable_structure_at(&g, out.third, v).unwrap();
        assert_eq!(s.b_value(), 1);
    }

    #[test]
    fn petersen_outcome() {
        let out = two_qbinv_vertex_outcome(&catalog::petersen(), 0).unwrap();
        assert_eq!(out.outcome, VertexOutcome::QuasiPetersen);
    }

    #[test]
    fn cubeplex_outcome() {
        let g = catalog::cubeplex();
        let v = g.find_label("v").unwrap();
        let out = two_qbinv_vertex_outcome(&g, v).unwrap();
        assert_eq!(out.outcome, VertexOutcome::DoubletonCubeplex);
    }

    #[test]
    fn errors() {
        let g = catalog::petersen();
        assert_eq!(
            removable_structure_at(&g, EdgeId(0), 7).unwrap_err(),
            Error::NotAnEndpoint(7)
        );
        assert_eq!(
            removable_structure(&catalog::tricorn(), EdgeId(0)).unwrap_err(),
            Error::NotEfecCubicBrick
        );
        assert_eq!(
            qbinv_structure(&catalog::k4(), EdgeId(0)).unwrap_err(),
            Error::NotQuasiBInvariant(EdgeId(0))
        );
    }

    #[test]
    fn k4_inflexible_relabelling() {
        let k4 = catalog::k4();
        let xx = k4.edges_between(0, 1)[0];
        let flex = is_inflexible(&k4, xx).unwrap();
        assert!(flex.inflexible);
        assert_eq!(flex.doubletons_hold, Some(true));
        assert_eq!(flex.admissibility_holds, Some(true));
    }
}
