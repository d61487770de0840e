//! Backtracking subgraph (monomorphism) search with bitset forward checking.

use serde::{Deserialize, Serialize};

use crate::graph::bits::{self, AdjMatrix};
use crate::graph::Graph;

/// A witness that the pattern occurs in the host: pattern vertex `i` maps to
/// host vertex `map[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Match {
    pub map: Vec<usize>,
}

impl Match {
    /// Injective and edge-preserving.
    pub fn verify(&self, pattern: &Graph, host: &Graph) -> bool {
        if self.map.len() != pattern.n() || self.map.iter().any(|&h| h >= host.n()) {
            return false;
        }
        let mut seen = self.map.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len() == self.map.len()
            && pattern
                .edges()
                .all(|(u, v)| host.has_edge(self.map[u], self.map[v]))
    }

    /// Images of the pattern edges, each as `(min, max)`, sorted.
    pub fn host_edges(&self, pattern: &Graph) -> Vec<(usize, usize)> {
        let mut out: Vec<_> = pattern
            .edges()
            .map(|(u, v)| {
                let (a, b) = (self.map[u], self.map[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        out.sort_unstable();
        out
    }
}

/// Decides `pattern ⊆ host` (not necessarily induced). When present, the
/// returned map is the lexicographically smallest one.
pub fn contains_subgraph(host: &Graph, pattern: &Graph) -> Option<Match> {
    if !passes_prechecks(host, pattern) {
        return None;
    }
    let adj = AdjMatrix::from_graph(host);
    find_embedding(&adj, pattern, false)?;
    find_embedding(&adj, pattern, true).map(|map| Match { map })
}

/// Existence only, without the lexicographic recomputation.
pub(crate) fn occurs_in(host: &Graph, pattern: &Graph) -> bool {
    passes_prechecks(host, pattern) && find_embedding(&AdjMatrix::from_graph(host), pattern, false).is_some()
}

fn passes_prechecks(host: &Graph, pattern: &Graph) -> bool {
    if pattern.n() > host.n() || pattern.edge_count() > host.edge_count() {
        return false;
    }
    let hs = host.degree_sequence();
    pattern
        .degree_sequence()
        .iter()
        .zip(&hs)
        .all(|(p, h)| p <= h)
}

/// Core search on a bit-matrix host. With `natural_order` the pattern vertices
/// are assigned in index order and candidates in ascending order, so the first
/// hit is the lexicographically smallest map; otherwise a connectivity-driven
/// order is used for speed.
pub(crate) fn find_embedding(host: &AdjMatrix, pattern: &Graph, natural_order: bool) -> Option<Vec<usize>> {
    let k = pattern.n();
    if k == 0 {
        return Some(Vec::new());
    }
    if k > host.n() {
        return None;
    }
    let words = host.words();
    let mut domains = vec![vec![0u64; words]; k];
    for (p, dom) in domains.iter_mut().enumerate() {
        let need = pattern.degree(p);
        for h in 0..host.n() {
            if host.degree(h) >= need {
                bits::insert(dom, h);
            }
        }
        if bits::is_empty(dom) {
            return None;
        }
    }
    let order = if natural_order {
        (0..k).collect()
    } else {
        search_order(pattern)
    };
    let mut s = Search {
        host,
        pattern,
        order,
        domains,
        map: vec![usize::MAX; k],
        used: vec![0; words],
        trail: Vec::new(),
    };
    if s.extend(0) {
        Some(s.map)
    } else {
        None
    }
}

/// Highest degree first, then repeatedly the vertex with most already-ordered
/// neighbours (ties: higher degree, then lower index).
fn search_order(pattern: &Graph) -> Vec<usize> {
    let k = pattern.n();
    let mut placed = vec![false; k];
    let mut links = vec![0usize; k];
    let mut order = Vec::with_capacity(k);
    for _ in 0..k {
        let next = (0..k)
            .filter(|&v| !placed[v])
            .max_by(|&a, &b| {
                (links[a], pattern.degree(a), std::cmp::Reverse(a))
                    .cmp(&(links[b], pattern.degree(b), std::cmp::Reverse(b)))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
        for &w in pattern.neighbors(next) {
            links[w] += 1;
        }
    }
    order
}

struct Search<'a> {
    host: &'a AdjMatrix,
    pattern: &'a Graph,
    order: Vec<usize>,
    domains: Vec<Vec<u64>>,
    map: Vec<usize>,
    used: Vec<u64>,
    trail: Vec<(usize, Vec<u64>)>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let p = self.order[depth];
        let candidates: Vec<usize> = bits::ones(&self.domains[p])
            .filter(|&h| !bits::contains(&self.used, h))
            .collect();
        for h in candidates {
            let mark = self.trail.len();
            bits::insert(&mut self.used, h);
            let mut ok = true;
            for &q in self.pattern.neighbors(p) {
                if self.map[q] != usize::MAX {
                    continue;
                }
                let old = self.domains[q].clone();
                let row = self.host.row(h);
                let dom = &mut self.domains[q];
                let mut alive = false;
                for ((d, r), u) in dom.iter_mut().zip(row).zip(&self.used) {
                    *d &= r;
                    alive |= *d & !u != 0;
                }
                self.trail.push((q, old));
                if !alive {
                    ok = false;
                    break;
                }
            }
            if ok {
                self.map[p] = h;
                if self.extend(depth + 1) {
                    return true;
                }
                self.map[p] = usize::MAX;
            }
            while self.trail.len() > mark {
                let (q, old) = self.trail.pop().unwrap();
                self.domains[q] = old;
            }
            self.used[h / 64] &= !(1 << (h % 64));
        }
        false
    }
}
