//! Bounded edge-deletion search over triangulations.
//!
//! Deletion sets that destroy every occurrence are enumerated as hitting sets:
//! take an occurrence, branch on each of its deletable edges, and make the
//! edges of earlier siblings permanent so that no set is explored twice.
//! Every hitting set of size at most `d` contains a leaf of this tree.

use std::time::Instant;

use super::occurrence::{find_any, Edge, Finder};

pub(crate) struct DeletionSearch<'a> {
    finders: &'a [Finder],
    pub adj: Vec<u64>,
    perm: Vec<u64>,
    deadline: Option<Instant>,
    pub timed_out: bool,
    ticks: u32,
}

impl<'a> DeletionSearch<'a> {
    pub fn new(finders: &'a [Finder], adj: Vec<u64>, deadline: Option<Instant>) -> Self {
        let n = adj.len();
        DeletionSearch {
            finders,
            adj,
            perm: vec![0; n],
            deadline,
            timed_out: false,
            ticks: 0,
        }
    }

    fn remove(&mut self, (a, b): Edge) {
        self.adj[a as usize] &= !(1 << b);
        self.adj[b as usize] &= !(1 << a);
    }

    fn restore(&mut self, (a, b): Edge) {
        self.adj[a as usize] |= 1 << b;
        self.adj[b as usize] |= 1 << a;
    }

    fn set_perm(&mut self, (a, b): Edge, on: bool) {
        let (a, b) = (a as usize, b as usize);
        if on {
            self.perm[a] |= 1 << b;
            self.perm[b] |= 1 << a;
        } else {
            self.perm[a] &= !(1 << b);
            self.perm[b] &= !(1 << a);
        }
    }

    fn is_perm(&self, (a, b): Edge) -> bool {
        self.perm[a as usize] >> b & 1 == 1
    }

    fn out_of_time(&mut self) -> bool {
        if self.timed_out {
            return true;
        }
        self.ticks = self.ticks.wrapping_add(1);
        if self.ticks.is_multiple_of(64) {
            if let Some(dl) = self.deadline {
                if Instant::now() >= dl {
                    self.timed_out = true;
                }
            }
        }
        self.timed_out
    }

    /// Greedy packing of occurrences with pairwise disjoint deletable edges,
    /// starting from `first`. Stops once it exceeds `cap`.
    fn packing_bound(&self, first: &[Edge], cap: usize) -> usize {
        let mut adj = self.adj.clone();
        let mut count = 0;
        let mut occ = first.to_vec();
        loop {
            let free: Vec<Edge> = occ.iter().copied().filter(|&e| !self.is_perm(e)).collect();
            if free.is_empty() {
                return usize::MAX;
            }
            count += 1;
            if count > cap {
                return count;
            }
            for (a, b) in free {
                adj[a as usize] &= !(1 << b);
                adj[b as usize] &= !(1 << a);
            }
            match find_any(self.finders, &adj, &self.perm) {
                Some(o) => occ = o,
                None => return count,
            }
        }
    }

    /// Visits every leaf (a pattern-free graph) reachable with at most `d`
    /// deletions. `visit` receives the deletions so far and the current
    /// adjacency; returning true stops the search. Returns true if stopped.
    pub fn leaves(
        &mut self,
        d: usize,
        deleted: &mut Vec<Edge>,
        visit: &mut dyn FnMut(&[Edge], &[u64]) -> bool,
    ) -> bool {
        if self.out_of_time() {
            return false;
        }
        let occ = match find_any(self.finders, &self.adj, &self.perm) {
            None => return visit(deleted, &self.adj),
            Some(o) => o,
        };
        if d == 0 {
            return false;
        }
        if d >= 1 && self.packing_bound(&occ, d) > d {
            return false;
        }
        let free: Vec<Edge> = occ.into_iter().filter(|&e| !self.is_perm(e)).collect();
        let mut fixed = Vec::with_capacity(free.len());
        let mut stopped = false;
        for e in free {
            self.remove(e);
            deleted.push(e);
            stopped = self.leaves(d - 1, deleted, visit);
            deleted.pop();
            self.restore(e);
            if stopped || self.timed_out {
                break;
            }
            self.set_perm(e, true);
            fixed.push(e);
        }
        for e in fixed {
            self.set_perm(e, false);
        }
        stopped
    }

    /// Whether at most `d` deletions make the graph pattern-free; on success
    /// returns the deletion set.
    pub fn solve(&mut self, d: usize) -> Option<Vec<Edge>> {
        let mut found = None;
        let mut deleted = Vec::new();
        self.leaves(d, &mut deleted, &mut |del, _| {
            found = Some(del.to_vec());
            true
        });
        found
    }
}

/// Greedy upper bound on the deletions needed: repeatedly delete the first
/// edge of some occurrence.
pub(crate) fn greedy_deletions(finders: &[Finder], mut adj: Vec<u64>) -> usize {
    let perm = vec![0u64; adj.len()];
    let mut count = 0;
    while let Some(occ) = find_any(finders, &adj, &perm) {
        let (a, b) = occ[0];
        adj[a as usize] &= !(1 << b);
        adj[b as usize] &= !(1 << a);
        count += 1;
    }
    count
}
