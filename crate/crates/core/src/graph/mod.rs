//! Loop-free multigraphs with stable vertex and edge ids.
//!
//! Every graph the toolkit touches (inputs, `∂`-contractions, decomposition
//! pieces, edge-deleted copies) is a [`Multigraph`]. Deleting a vertex or an
//! edge tombstones its id instead of renumbering, so witnesses holding ids stay
//! valid across deletions and contractions.

mod canon;
pub mod catalog;
mod connectivity;
mod io;

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use canon::{canonical_form, is_isomorphic, CanonicalForm};
pub use connectivity::{
    edge_connectivity, enumerate_small_edge_cuts, enumerate_small_edge_cuts_by_edge_sets,
    enumerate_small_edge_cuts_by_shores, two_vertex_cuts, vertex_connectivity,
};
pub use io::{from_graph6, from_json, to_graph6, to_json, GraphJson};

pub type Vertex = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(pub usize);

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Multigraph {
    alive: Vec<bool>,
    edges: Vec<Option<[Vertex; 2]>>,
    incidence: Vec<Vec<EdgeId>>,
    labels: BTreeMap<Vertex, String>,
}

impl Multigraph {
    /// Graph on vertices `0..n` with no edges.
    pub fn new(n: usize) -> Self {
        Multigraph {
            alive: vec![true; n],
            edges: Vec::new(),
            incidence: vec![Vec::new(); n],
            labels: BTreeMap::new(),
        }
    }

    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = Multigraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self) -> Vertex {
        self.alive.push(true);
        self.incidence.push(Vec::new());
        self.alive.len() - 1
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<EdgeId> {
        if u == v {
            return Err(Error::Loop(u));
        }
        for w in [u, v] {
            if !self.contains_vertex(w) {
                return Err(Error::UnknownVertex(w));
            }
        }
        let id = EdgeId(self.edges.len());
        self.edges.push(Some([u, v]));
        self.incidence[u].push(id);
        self.incidence[v].push(id);
        Ok(id)
    }

    /// Size of the vertex id space, including tombstoned ids.
    pub fn vertex_bound(&self) -> usize {
        self.alive.len()
    }

    /// Size of the edge id space, including tombstoned ids.
    pub fn edge_bound(&self) -> usize {
        self.edges.len()
    }

    pub fn order(&self) -> usize {
        self.alive.iter().filter(|&&a| a).count()
    }

    pub fn size(&self) -> usize {
        self.edges.iter().filter(|e| e.is_some()).count()
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.alive.get(v).copied().unwrap_or(false)
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        matches!(self.edges.get(e.0), Some(Some(_)))
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.alive
            .iter()
            .enumerate()
            .filter_map(|(v, &a)| a.then_some(v))
    }

    pub fn vertex_set(&self) -> BTreeSet<Vertex> {
        self.vertices().collect()
    }

    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, [Vertex; 2])> + '_ {
        self.edges
            .iter()
            .enumerate()
            .filter_map(|(i, e)| e.map(|ends| (EdgeId(i), ends)))
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges().map(|(e, _)| e)
    }

    pub fn endpoints(&self, e: EdgeId) -> Result<[Vertex; 2]> {
        self.edges
            .get(e.0)
            .copied()
            .flatten()
            .ok_or(Error::UnknownEdge(e))
    }

    /// The end of `e` other than `v`.
    pub fn other_end(&self, e: EdgeId, v: Vertex) -> Result<Vertex> {
        let [a, b] = self.endpoints(e)?;
        if a == v {
            Ok(b)
        } else if b == v {
            Ok(a)
        } else {
            Err(Error::NotAnEndpoint(v))
        }
    }

    pub fn incident(&self, v: Vertex) -> &[EdgeId] {
        self.incidence.get(v).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.incident(v).len()
    }

    /// Neighbours of `v`, repeated once per parallel edge.
    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.incident(v).iter().map(move |&e| {
            let [a, b] = self.edges[e.0].expect("incidence lists only hold live edges");
            if a == v {
                b
            } else {
                a
            }
        })
    }

    pub fn distinct_neighbors(&self, v: Vertex) -> BTreeSet<Vertex> {
        self.neighbors(v).collect()
    }

    pub fn multiplicity(&self, u: Vertex, v: Vertex) -> usize {
        self.neighbors(u).filter(|&w| w == v).count()
    }

    pub fn edges_between(&self, u: Vertex, v: Vertex) -> Vec<EdgeId> {
        self.incident(u)
            .iter()
            .copied()
            .filter(|&e| self.other_end(e, u).ok() == Some(v))
            .collect()
    }

    pub fn label(&self, v: Vertex) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    pub fn labels(&self) -> &BTreeMap<Vertex, String> {
        &self.labels
    }

    pub fn set_label(&mut self, v: Vertex, label: impl Into<String>) {
        self.labels.insert(v, label.into());
    }

    /// Vertex carrying `label`, if any.
    pub fn find_label(&self, label: &str) -> Option<Vertex> {
        self.labels
            .iter()
            .find(|(v, l)| l.as_str() == label && self.contains_vertex(**v))
            .map(|(&v, _)| v)
    }

    pub fn remove_edge(&mut self, e: EdgeId) -> Result<()> {
        let [u, v] = self.endpoints(e)?;
        self.edges[e.0] = None;
        self.incidence[u].retain(|&f| f != e);
        self.incidence[v].retain(|&f| f != e);
        Ok(())
    }

    pub fn remove_vertex(&mut self, v: Vertex) -> Result<()> {
        if !self.contains_vertex(v) {
            return Err(Error::UnknownVertex(v));
        }
        for e in self.incidence[v].clone() {
            self.remove_edge(e)?;
        }
        self.alive[v] = false;
        self.labels.remove(&v);
        Ok(())
    }

    pub fn without_edge(&self, e: EdgeId) -> Result<Self> {
        let mut g = self.clone();
        g.remove_edge(e)?;
        Ok(g)
    }

    pub fn without_edges(&self, es: &[EdgeId]) -> Result<Self> {
        let mut g = self.clone();
        for &e in es {
            g.remove_edge(e)?;
        }
        Ok(g)
    }

    pub fn without_vertices(&self, vs: &[Vertex]) -> Result<Self> {
        let mut g = self.clone();
        for &v in vs {
            g.remove_vertex(v)?;
        }
        Ok(g)
    }

    /// Subgraph induced by `keep`; ids are preserved.
    pub fn induced(&self, keep: &BTreeSet<Vertex>) -> Self {
        let drop: Vec<Vertex> = self.vertices().filter(|v| !keep.contains(v)).collect();
        self.without_vertices(&drop)
            .expect("dropped vertices are live")
    }

    pub fn is_cubic(&self) -> bool {
        self.vertices().all(|v| self.degree(v) == 3)
    }

    pub fn is_simple(&self) -> bool {
        self.vertices().all(|v| {
            let nbrs: Vec<Vertex> = self.neighbors(v).collect();
            let distinct: BTreeSet<Vertex> = nbrs.iter().copied().collect();
            distinct.len() == nbrs.len()
        })
    }

    /// Connected components of the graph with `removed` deleted.
    pub fn components_without(&self, removed: &[bool]) -> Vec<Vec<Vertex>> {
        let n = self.vertex_bound();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s] || removed.get(s).copied().unwrap_or(false) {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if !seen[w] && !removed.get(w).copied().unwrap_or(false) {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<Vec<Vertex>> {
        self.components_without(&[])
    }

    /// Connected with at least one vertex.
    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// A proper 2-colouring of the live vertices, `None` if an odd cycle exists.
    pub fn bipartition(&self) -> Option<Vec<Option<bool>>> {
        let mut side: Vec<Option<bool>> = vec![None; self.vertex_bound()];
        for s in self.vertices() {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                let sv = side[v].expect("queued vertices are coloured");
                for w in self.neighbors(v) {
                    match side[w] {
                        None => {
                            side[w] = Some(!sv);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == sv => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Renumbers live vertices to `0..order` (ascending) and live edges to
    /// `0..size` (ascending). Returns the graph and the old-to-new vertex map.
    pub fn compact(&self) -> (Multigraph, Vec<Option<Vertex>>) {
        let mut map = vec![None; self.vertex_bound()];
        for (i, v) in self.vertices().enumerate() {
            map[v] = Some(i);
        }
        let mut g = Multigraph::new(self.order());
        for (_, [a, b]) in self.edges() {
            g.add_edge(map[a].unwrap(), map[b].unwrap())
                .expect("live edges join live vertices");
        }
        for (&v, l) in &self.labels {
            if let Some(nv) = map[v] {
                g.set_label(nv, l.clone());
            }
        }
        (g, map)
    }

    /// Collapses every parallel class to a single edge (the lowest id survives).
    pub fn underlying_simple(&self) -> Multigraph {
        let mut g = self.clone();
        let mut seen = BTreeSet::new();
        for (e, [a, b]) in self.edges() {
            if !seen.insert((a.min(b), a.max(b))) {
                g.remove_edge(e).expect("edge is live");
            }
        }
        g
    }

    fn check_shore(&self, shore: &BTreeSet<Vertex>) -> Result<()> {
        if let Some(&v) = shore.iter().find(|&&v| !self.contains_vertex(v)) {
            return Err(Error::UnknownVertex(v));
        }
        if shore.is_empty() || shore.len() >= self.order() {
            return Err(Error::ImproperShore);
        }
        Ok(())
    }

    /// Contracts `shore` to a single vertex labelled `label`.
    ///
    /// The contraction vertex reuses the smallest id in `shore`; the other
    /// shore ids are tombstoned, edges inside the shore are deleted and cut
    /// edges keep their ids.
    pub fn contract_shore(&self, shore: &BTreeSet<Vertex>, label: &str) -> Result<Multigraph> {
        self.check_shore(shore)?;
        let rep = *shore.iter().next().expect("shore is nonempty");
        let mut g = self.clone();
        for (e, [a, b]) in self.edges() {
            let (ia, ib) = (shore.contains(&a), shore.contains(&b));
            if ia && ib {
                g.remove_edge(e)?;
            } else if ia || ib {
                let (inner, outer) = if ia { (a, b) } else { (b, a) };
                if inner != rep {
                    g.edges[e.0] = Some(if ia { [rep, outer] } else { [outer, rep] });
                    g.incidence[inner].retain(|&f| f != e);
                    g.incidence[rep].push(e);
                }
            }
        }
        for &v in shore.iter().skip(1) {
            debug_assert!(g.incidence[v].is_empty());
            g.alive[v] = false;
            g.labels.remove(&v);
        }
        g.incidence[rep].sort_unstable();
        g.labels.insert(rep, label.to_string());
        Ok(g)
    }

    pub fn cut_of(&self, shore: &BTreeSet<Vertex>) -> Result<Cut> {
        self.check_shore(shore)?;
        let complement: BTreeSet<Vertex> =
            self.vertices().filter(|v| !shore.contains(v)).collect();
        let edges = self
            .edges()
            .filter(|(_, [a, b])| shore.contains(a) != shore.contains(b))
            .map(|(e, _)| e)
            .collect();
        Ok(Cut {
            shore: shore.clone(),
            complement,
            edges,
        })
    }
}

/// An edge cut `∂(X)` together with both shores.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cut {
    shore: BTreeSet<Vertex>,
    complement: BTreeSet<Vertex>,
    edges: BTreeSet<EdgeId>,
}

impl Cut {
    pub fn shore(&self) -> &BTreeSet<Vertex> {
        &self.shore
    }

    pub fn complement(&self) -> &BTreeSet<Vertex> {
        &self.complement
    }

    pub fn edges(&self) -> &BTreeSet<EdgeId> {
        &self.edges
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.shore.len() == 1 || self.complement.len() == 1
    }

    /// Same cut seen from the other shore.
    pub fn flipped(&self) -> Cut {
        Cut {
            shore: self.complement.clone(),
            complement: self.shore.clone(),
            edges: self.edges.clone(),
        }
    }

    /// Representative orientation: the smaller shore, or on a tie the shore
    /// holding the smallest vertex.
    pub fn normalized(self) -> Cut {
        let flip = match self.shore.len().cmp(&self.complement.len()) {
            std::cmp::Ordering::Greater => true,
            std::cmp::Ordering::Less => false,
            std::cmp::Ordering::Equal => self.complement.first() < self.shore.first(),
        };
        if flip {
            self.flipped()
        } else {
            self
        }
    }
}

pub fn vertex_set<I: IntoIterator<Item = Vertex>>(it: I) -> BTreeSet<Vertex> {
    it.into_iter().collect()
}
