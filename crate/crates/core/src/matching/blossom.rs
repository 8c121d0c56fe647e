//! Edmonds' blossom algorithm on a dense vertex numbering.
//!
//! Searches grow one alternating tree at a time; odd cycles are shrunk by
//! relabelling bases. Each search is `O(n^2)` on adjacency lists, so a full
//! maximum matching costs `O(n^3)`.

use std::collections::VecDeque;

pub(crate) const NONE: usize = usize::MAX;

pub(crate) struct Blossom<'a> {
    adj: &'a [Vec<usize>],
    pub(crate) mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    pub(crate) fn new(adj: &'a [Vec<usize>], mate: Vec<usize>) -> Self {
        let n = adj.len();
        Blossom {
            adj,
            mate,
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Grows an alternating tree from the exposed vertex `root`. Returns the
    /// exposed endpoint of an augmenting path, leaving the path in `parent`.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &to in &self.adj[v] {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.used[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }

    /// Augments from every exposed vertex in `active`. With `want_perfect`,
    /// stops at the first root that cannot be augmented: such a root is missed
    /// by some maximum matching, so no perfect matching exists.
    pub(crate) fn run(&mut self, active: &[bool], want_perfect: bool) -> bool {
        let n = self.adj.len();
        let mut perfect = true;
        for root in 0..n {
            if !active[root] || self.mate[root] != NONE {
                continue;
            }
            match self.find_path(root) {
                Some(end) => self.augment(end),
                None => {
                    perfect = false;
                    if want_perfect {
                        return false;
                    }
                }
            }
        }
        perfect
    }
}
