//! Maximum matching in general graphs (Edmonds' blossom algorithm).

use std::collections::VecDeque;

use crate::graph::Graph;

const NONE: usize = usize::MAX;

pub fn max_matching(g: &Graph) -> usize {
    maximum_matching(g).len()
}

/// A maximum matching as a sorted list of `(u, v)` pairs with `u < v`.
pub fn maximum_matching(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.n();
    let mut mate = vec![NONE; n];
    for v in 0..n {
        if mate[v] == NONE {
            if let Some(&w) = g.neighbors(v).iter().find(|&&w| mate[w] == NONE) {
                mate[v] = w;
                mate[w] = v;
            }
        }
    }
    let mut state = Blossom::new(n);
    for root in 0..n {
        if mate[root] != NONE {
            continue;
        }
        if let Some(mut v) = state.find_augmenting(g, root, &mate) {
            while v != NONE {
                let pv = state.parent[v];
                let next = mate[pv];
                mate[v] = pv;
                mate[pv] = v;
                v = next;
            }
        }
    }
    (0..n)
        .filter(|&v| mate[v] != NONE && v < mate[v])
        .map(|v| (v, mate[v]))
        .collect()
}

struct Blossom {
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
}

impl Blossom {
    fn new(n: usize) -> Self {
        Blossom {
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
        }
    }

    fn lca(&self, mut a: usize, mut b: usize, mate: &[usize]) -> usize {
        let mut seen = vec![false; mate.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if mate[a] == NONE {
                break;
            }
            a = self.parent[mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize, mate: &[usize]) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[mate[v]]] = true;
            self.parent[v] = child;
            child = mate[v];
            v = self.parent[mate[v]];
        }
    }

    /// Returns the free endpoint of an augmenting path from `root`, with the
    /// path recorded in `parent`.
    fn find_augmenting(&mut self, g: &Graph, root: usize, mate: &[usize]) -> Option<usize> {
        let n = g.n();
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &to in g.neighbors(v) {
                if self.base[v] == self.base[to] || mate[v] == to {
                    continue;
                }
                if to == root || (mate[to] != NONE && self.parent[mate[to]] != NONE) {
                    let cur = self.lca(v, to, mate);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to, mate);
                    self.mark_path(to, cur, v, mate);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if mate[to] == NONE {
                        return Some(to);
                    }
                    self.used[mate[to]] = true;
                    queue.push_back(mate[to]);
                }
            }
        }
        None
    }
}
