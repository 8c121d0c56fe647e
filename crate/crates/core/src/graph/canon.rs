//! Canonical certificates for multigraphs.
//!
//! Colour refinement with edge multiplicities, then an individualisation
//! search over the first smallest non-singleton cell. Branches on vertices
//! that are twins of an earlier branch are skipped, since swapping twins is an
//! automorphism that fixes the current colouring. Vertex labels are ignored.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::Multigraph;

/// Equal for two multigraphs iff they are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalForm {
    order: usize,
    upper: Vec<u32>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.order
    }

    /// Edge count, parallel edges included.
    pub fn size(&self) -> usize {
        self.upper.iter().map(|&m| m as usize).sum()
    }
}

struct Dense {
    n: usize,
    adj: Vec<u32>,
}

impl Dense {
    fn new(g: &Multigraph) -> Self {
        let (c, _) = g.compact();
        let n = c.order();
        let mut adj = vec![0u32; n * n];
        for (_, [a, b]) in c.edges() {
            adj[a * n + b] += 1;
            adj[b * n + a] += 1;
        }
        Dense { n, adj }
    }

    #[inline]
    fn m(&self, a: usize, b: usize) -> u32 {
        self.adj[a * self.n + b]
    }

    fn refine(&self, colors: &mut [usize]) {
        let n = self.n;
        let mut count = distinct(colors);
        loop {
            let sigs: Vec<(usize, Vec<(usize, u32)>)> = (0..n)
                .map(|v| {
                    let mut s: Vec<(usize, u32)> = (0..n)
                        .filter(|&w| self.m(v, w) > 0)
                        .map(|w| (colors[w], self.m(v, w)))
                        .collect();
                    s.sort_unstable();
                    (colors[v], s)
                })
                .collect();
            let ranks: BTreeMap<&(usize, Vec<(usize, u32)>), usize> = {
                let mut sorted: Vec<&(usize, Vec<(usize, u32)>)> = sigs.iter().collect();
                sorted.sort();
                sorted.dedup();
                sorted.into_iter().enumerate().map(|(i, s)| (s, i)).collect()
            };
            for v in 0..n {
                colors[v] = ranks[&sigs[v]];
            }
            let next = ranks.len();
            if next == count {
                return;
            }
            count = next;
        }
    }

    fn twins(&self, a: usize, b: usize) -> bool {
        (0..self.n).all(|z| z == a || z == b || self.m(a, z) == self.m(b, z))
    }

    fn certificate(&self, colors: &[usize]) -> Vec<u32> {
        let n = self.n;
        let mut at = vec![0usize; n];
        for v in 0..n {
            at[colors[v]] = v;
        }
        let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for j in 1..n {
            for i in 0..j {
                out.push(self.m(at[i], at[j]));
            }
        }
        out
    }

    fn search(&self, colors: Vec<usize>, best: &mut Option<Vec<u32>>) {
        let n = self.n;
        let mut sizes = vec![0usize; n];
        for &c in &colors {
            sizes[c] += 1;
        }
        let target = (0..n)
            .filter(|&c| sizes[c] > 1)
            .min_by_key(|&c| (sizes[c], c));
        let Some(cell) = target else {
            let cert = self.certificate(&colors);
            if best.as_ref().is_none_or(|b| cert < *b) {
                *best = Some(cert);
            }
            return;
        };
        let members: Vec<usize> = (0..n).filter(|&v| colors[v] == cell).collect();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &members {
            if tried.iter().any(|&t| self.twins(t, v)) {
                continue;
            }
            tried.push(v);
            let mut next: Vec<usize> = colors
                .iter()
                .enumerate()
                .map(|(u, &c)| 2 * c + usize::from(c == cell && u != v))
                .collect();
            compress(&mut next);
            self.refine(&mut next);
            self.search(next, best);
        }
    }
}

fn distinct(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn compress(colors: &mut [usize]) {
    let mut keys = colors.to_vec();
    keys.sort_unstable();
    keys.dedup();
    for c in colors.iter_mut() {
        *c = keys.binary_search(c).expect("key present");
    }
}

pub fn canonical_form(g: &Multigraph) -> CanonicalForm {
    let d = Dense::new(g);
    let mut colors = vec![0usize; d.n];
    d.refine(&mut colors);
    let mut best = None;
    d.search(colors, &mut best);
    CanonicalForm {
        order: d.n,
        upper: best.unwrap_or_default(),
    }
}

pub fn is_isomorphic(a: &Multigraph, b: &Multigraph) -> bool {
    a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b)
}
