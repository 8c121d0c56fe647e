//! Small graph corpora: connected cubic graphs up to isomorphism, all
//! connected graphs on few vertices, and random graphs.

use std::collections::BTreeMap;

use rand::Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{canonical_form, CanonicalForm, Multigraph, Vertex};
use crate::matching;

pub const MAX_CUBIC_ORDER: usize = 14;

/// Connected simple cubic graphs on `n` vertices, one per isomorphism
/// class, sorted by canonical form.
///
/// Vertices are numbered in breadth-first order from vertex 0: each vertex,
/// in turn, is joined to already discovered vertices after it and then to
/// freshly numbered ones. Every connected graph has such a numbering, so the
/// search reaches every isomorphism class; duplicates are removed by
/// canonical form.
pub fn generate_cubic(n: usize) -> Result<Vec<Multigraph>> {
    if n % 2 == 1 || !(4..=MAX_CUBIC_ORDER).contains(&n) {
        return Err(Error::GeneratorOrder(n));
    }
    // split the search on the neighbourhood of vertex 1 so the workers
    // share the canonical form cost
    let mut seeds = Vec::new();
    let mut state = BfsState::new(n);
    for k in 1..=3 {
        state.adj[0].push(k);
        state.adj[k].push(0);
    }
    state.next = 4;
    state.branch(1, &mut |s: &BfsState| seeds.push(s.clone()));
    let forms: Vec<BTreeMap<CanonicalForm, Multigraph>> = seeds
        .into_par_iter()
        .map(|mut s| {
            let mut found = BTreeMap::new();
            s.search(2, &mut |done: &BfsState| {
                let g = done.to_graph();
                found.entry(canonical_form(&g)).or_insert(g);
            });
            found
        })
        .collect();
    let mut all = BTreeMap::new();
    for m in forms {
        for (k, g) in m {
            all.entry(k).or_insert(g);
        }
    }
    Ok(all.into_values().collect())
}

#[derive(Clone)]
struct BfsState {
    n: usize,
    adj: Vec<Vec<Vertex>>,
    next: usize,
}

impl BfsState {
    fn new(n: usize) -> Self {
        BfsState {
            n,
            adj: vec![Vec::new(); n],
            next: 1,
        }
    }

    fn to_graph(&self) -> Multigraph {
        let edges: Vec<(Vertex, Vertex)> = (0..self.n)
            .flat_map(|a| self.adj[a].iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
            .collect();
        Multigraph::from_edges(self.n, &edges).expect("valid edges")
    }

    /// Completes vertex `i`, then recurses on `i + 1`.
    fn search(&mut self, i: usize, emit: &mut dyn FnMut(&BfsState)) {
        if i == self.n {
            if self.next == self.n {
                emit(self);
            }
            return;
        }
        if i >= self.next {
            // undiscovered vertex: the graph would be disconnected
            return;
        }
        self.branch(i, &mut |s: &BfsState| s.clone().search(i + 1, emit));
    }

    /// Emits every way of filling vertex `i` up to degree three.
    fn branch(&mut self, i: usize, emit: &mut dyn FnMut(&BfsState)) {
        let need = 3 - self.adj[i].len();
        let candidates: Vec<Vertex> = (i + 1..self.next)
            .filter(|&j| self.adj[j].len() < 3 && !self.adj[i].contains(&j))
            .collect();
        let mut chosen = Vec::new();
        self.choose(i, need, &candidates, 0, &mut chosen, emit);
    }

    fn choose(
        &mut self,
        i: usize,
        need: usize,
        candidates: &[Vertex],
        from: usize,
        chosen: &mut Vec<Vertex>,
        emit: &mut dyn FnMut(&BfsState),
    ) {
        // option: stop picking old vertices, add the rest as new ones
        let fresh = need - chosen.len();
        if self.next + fresh <= self.n {
            let saved = self.next;
            let mut touched = Vec::new();
            for &j in chosen.iter() {
                self.adj[i].push(j);
                self.adj[j].push(i);
                touched.push(j);
            }
            for _ in 0..fresh {
                let j = self.next;
                self.next += 1;
                self.adj[i].push(j);
                self.adj[j].push(i);
                touched.push(j);
            }
            emit(self);
            for j in touched {
                self.adj[i].pop();
                self.adj[j].pop();
            }
            self.next = saved;
        }
        if chosen.len() == need {
            return;
        }
        for k in from..candidates.len() {
            chosen.push(candidates[k]);
            self.choose(i, need, candidates, k + 1, chosen, emit);
            chosen.pop();
        }
    }
}

/// Independent count check: every labelled simple cubic graph on `n`
/// vertices is built by pairing the free half-edges of the lowest vertex
/// with a higher vertex in increasing order; connected ones are reduced to
/// isomorphism classes by canonical form. Feasible for `n <= 8`.
pub fn cubic_by_pairings(n: usize) -> Result<(usize, Vec<CanonicalForm>)> {
    if n % 2 == 1 || !(4..=8).contains(&n) {
        return Err(Error::GeneratorOrder(n));
    }
    let mut adj = vec![Vec::new(); n];
    let mut labelled = 0;
    let mut forms = std::collections::BTreeSet::new();
    fn pair(
        adj: &mut Vec<Vec<Vertex>>,
        labelled: &mut usize,
        forms: &mut std::collections::BTreeSet<CanonicalForm>,
    ) {
        let n = adj.len();
        let Some(v) = (0..n).find(|&v| adj[v].len() < 3) else {
            *labelled += 1;
            let edges: Vec<(Vertex, Vertex)> = (0..n)
                .flat_map(|a| adj[a].iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
                .collect();
            let g = Multigraph::from_edges(n, &edges).expect("valid edges");
            if g.is_connected() {
                forms.insert(canonical_form(&g));
            }
            return;
        };
        let last = adj[v].iter().copied().filter(|&w| w > v).max().unwrap_or(v);
        for w in last + 1..n {
            if adj[w].len() < 3 && !adj[v].contains(&w) {
                adj[v].push(w);
                adj[w].push(v);
                pair(adj, labelled, forms);
                adj[v].pop();
                adj[w].pop();
            }
        }
    }
    pair(&mut adj, &mut labelled, &mut forms);
    Ok((labelled, forms.into_iter().collect()))
}

/// All connected simple graphs on `n <= 8` vertices up to isomorphism, built
/// by adding a vertex with every possible neighbourhood to each graph on
/// `n - 1` vertices.
pub fn all_connected_graphs(n: usize) -> Result<Vec<Multigraph>> {
    if !(1..=8).contains(&n) {
        return Err(Error::BoundExceeded { order: n, bound: 8 });
    }
    let mut level: BTreeMap<CanonicalForm, Multigraph> = BTreeMap::new();
    let one = Multigraph::new(1);
    level.insert(canonical_form(&one), one);
    for k in 1..n {
        let mut next = BTreeMap::new();
        for g in level.values() {
            for mask in 0u32..(1 << k) {
                let mut h = g.clone();
                let v = h.add_vertex();
                for u in 0..k {
                    if mask >> u & 1 == 1 {
                        h.add_edge(u, v).expect("live vertices");
                    }
                }
                next.entry(canonical_form(&h)).or_insert(h);
            }
        }
        level = next;
    }
    Ok(level.into_values().filter(Multigraph::is_connected).collect())
}

/// `G(n, p)` random simple graph.
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Multigraph {
    let mut g = Multigraph::new(n);
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(a, b).expect("live vertices");
            }
        }
    }
    g
}

/// Random matching covered simple graph on an even number of vertices
/// between 4 and `max_n`, by rejection sampling.
pub fn random_matching_covered<R: Rng>(max_n: usize, rng: &mut R) -> Multigraph {
    assert!(max_n >= 4, "matching covered samples need at least 4 vertices");
    loop {
        let n = 2 * rng.gen_range(2..=max_n / 2);
        let p = rng.gen_range(0.25..0.6);
        let g = random_graph(n, p, rng);
        if matching::is_matching_covered(&g) {
            return g;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cubic_counts() {
        assert_eq!(generate_cubic(4).unwrap().len(), 1);
        assert_eq!(generate_cubic(6).unwrap().len(), 2);
        assert_eq!(generate_cubic(8).unwrap().len(), 5);
    }

    #[test]
    fn pairing_route_agrees() {
        for n in [4, 6, 8] {
            let (_, forms) = cubic_by_pairings(n).unwrap();
            let generated: Vec<CanonicalForm> =
                generate_cubic(n).unwrap().iter().map(canonical_form).collect();
            assert_eq!(forms, generated);
        }
        assert_eq!(cubic_by_pairings(6).unwrap().0, 70);
    }

    #[test]
    fn order_errors() {
        assert_eq!(generate_cubic(7).unwrap_err(), Error::GeneratorOrder(7));
        assert_eq!(generate_cubic(16).unwrap_err(), Error::GeneratorOrder(16));
        assert_eq!(generate_cubic(2).unwrap_err(), Error::GeneratorOrder(2));
    }

    #[test]
    fn connected_graph_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| all_connected_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
    }
}
