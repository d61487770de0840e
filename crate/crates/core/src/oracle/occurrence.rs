//! Occurrence finding on `u64` adjacency masks for the deletion search.
//!
//! An occurrence is reported as its edge list. Edges marked permanent cannot
//! be deleted, so among the first few occurrences found the one with the
//! fewest deletable edges is returned.

use crate::graph::{AdjMatrix, Graph};
use crate::patterns::{find_embedding, PatternSpec};

pub(crate) type Edge = (u8, u8);

const SCAN_CAP: usize = 256;

#[derive(Clone, Debug)]
pub(crate) enum Finder {
    Star(usize),
    Wheel(usize),
    /// `t` disjoint edges in a neighbourhood.
    Matching(usize),
    /// A path on `t` vertices in a neighbourhood.
    Path(usize),
    /// A generic base graph in a neighbourhood.
    Cone(Graph),
    Explicit(Graph),
}

impl Finder {
    pub fn new(p: &PatternSpec) -> Finder {
        match p {
            PatternSpec::Star(t) | PatternSpec::Fan { t, r: 2 } => Finder::Star(*t),
            PatternSpec::Wheel(k) => Finder::Wheel(*k),
            PatternSpec::Fan { t, r: 3 } => Finder::Matching(*t),
            PatternSpec::ConePath(t) => Finder::Path(*t),
            PatternSpec::Explicit(h) => Finder::Explicit(h.clone()),
            other => Finder::Cone(other.cone_base().expect("cone pattern")),
        }
    }
}

#[inline]
fn edge(a: usize, b: usize) -> Edge {
    (a.min(b) as u8, a.max(b) as u8)
}

#[inline]
fn is_perm(perm: &[u64], e: Edge) -> bool {
    perm[e.0 as usize] >> e.1 & 1 == 1
}

struct Best {
    edges: Option<Vec<Edge>>,
    free: usize,
    seen: usize,
}

impl Best {
    fn new() -> Self {
        Best {
            edges: None,
            free: usize::MAX,
            seen: 0,
        }
    }

    /// Records a candidate; returns true when the scan should stop.
    fn offer(&mut self, edges: Vec<Edge>, perm: &[u64]) -> bool {
        let free = edges.iter().filter(|&&e| !is_perm(perm, e)).count();
        if free < self.free {
            self.free = free;
            self.edges = Some(edges);
        }
        self.seen += 1;
        self.free <= 1 || self.seen >= SCAN_CAP
    }
}

/// Finds an occurrence of any of the finders' patterns.
pub(crate) fn find_any(finders: &[Finder], adj: &[u64], perm: &[u64]) -> Option<Vec<Edge>> {
    finders.iter().find_map(|f| find(f, adj, perm))
}

pub(crate) fn find(f: &Finder, adj: &[u64], perm: &[u64]) -> Option<Vec<Edge>> {
    let n = adj.len();
    let mut best = Best::new();
    match f {
        Finder::Star(t) => {
            for v in 0..n {
                let deg = adj[v].count_ones() as usize;
                if deg < *t {
                    continue;
                }
                let fixed = adj[v] & perm[v];
                let mut chosen: Vec<Edge> = Vec::with_capacity(*t);
                for nb in [fixed, adj[v] & !fixed] {
                    let mut m = nb;
                    while m != 0 && chosen.len() < *t {
                        let w = m.trailing_zeros() as usize;
                        m &= m - 1;
                        chosen.push(edge(v, w));
                    }
                }
                if best.offer(chosen, perm) {
                    break;
                }
            }
        }
        Finder::Wheel(k) => {
            'outer: for v in 0..n {
                if (adj[v].count_ones() as usize) < *k {
                    continue;
                }
                let mut stop = false;
                each_cycle(adj, adj[v], *k, &mut |cyc: &[usize]| {
                    let mut edges = Vec::with_capacity(2 * k);
                    for (i, &c) in cyc.iter().enumerate() {
                        edges.push(edge(v, c));
                        edges.push(edge(c, cyc[(i + 1) % cyc.len()]));
                    }
                    stop = best.offer(edges, perm);
                    stop
                });
                if stop {
                    break 'outer;
                }
            }
        }
        Finder::Matching(t) => {
            'outer: for v in 0..n {
                if (adj[v].count_ones() as usize) < 2 * t {
                    continue;
                }
                let mut stop = false;
                let mut picked = Vec::with_capacity(*t);
                each_matching(adj, adj[v], *t, &mut picked, &mut |pairs: &[(usize, usize)]| {
                    let mut edges = Vec::with_capacity(3 * t);
                    for &(a, b) in pairs {
                        edges.push(edge(v, a));
                        edges.push(edge(v, b));
                        edges.push(edge(a, b));
                    }
                    stop = best.offer(edges, perm);
                    stop
                });
                if stop {
                    break 'outer;
                }
            }
        }
        Finder::Path(t) => {
            'outer: for v in 0..n {
                if (adj[v].count_ones() as usize) < *t {
                    continue;
                }
                let mut stop = false;
                each_path(adj, adj[v], *t, &mut |path: &[usize]| {
                    let mut edges = Vec::with_capacity(2 * t);
                    for (i, &c) in path.iter().enumerate() {
                        edges.push(edge(v, c));
                        if i + 1 < path.len() {
                            edges.push(edge(c, path[i + 1]));
                        }
                    }
                    stop = best.offer(edges, perm);
                    stop
                });
                if stop {
                    break 'outer;
                }
            }
        }
        Finder::Cone(base) => {
            for v in 0..n {
                if (adj[v].count_ones() as usize) < base.n() {
                    continue;
                }
                let nb: Vec<usize> = ones(adj[v]).collect();
                let mut m = AdjMatrix::new(nb.len());
                for (i, &a) in nb.iter().enumerate() {
                    for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                        if adj[a] >> b & 1 == 1 {
                            m.set(i, j);
                        }
                    }
                }
                if let Some(map) = find_embedding(&m, base, false) {
                    let mut edges: Vec<Edge> = map.iter().map(|&i| edge(v, nb[i])).collect();
                    edges.extend(base.edges().map(|(a, b)| edge(nb[map[a]], nb[map[b]])));
                    if best.offer(edges, perm) {
                        break;
                    }
                }
            }
        }
        Finder::Explicit(h) => {
            let mut m = AdjMatrix::new(n);
            for (a, &row) in adj.iter().enumerate().take(n) {
                for b in ones(row).filter(|&b| b > a) {
                    m.set(a, b);
                }
            }
            if let Some(map) = find_embedding(&m, h, false) {
                best.offer(h.edges().map(|(a, b)| edge(map[a], map[b])).collect(), perm);
            }
        }
    }
    best.edges
}

fn ones(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}

/// Each `k`-cycle inside `within` once per starting orientation, smallest
/// vertex first. `visit` returns true to stop.
fn each_cycle(adj: &[u64], within: u64, k: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    let mut rest = within;
    let mut path = Vec::with_capacity(k);
    while rest != 0 {
        let s = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let allowed = rest;
        path.clear();
        path.push(s);
        if grow_cycle(adj, allowed, k, &mut path, 1u64 << s, visit) {
            return true;
        }
    }
    false
}

fn grow_cycle(
    adj: &[u64],
    allowed: u64,
    k: usize,
    path: &mut Vec<usize>,
    used: u64,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    let last = *path.last().unwrap();
    if path.len() == k {
        // skip the reverse orientation: second vertex below the last one
        return adj[last] >> path[0] & 1 == 1 && path[1] < last && visit(path);
    }
    let mut cand = adj[last] & allowed & !used;
    while cand != 0 {
        let w = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        path.push(w);
        let stop = grow_cycle(adj, allowed, k, path, used | 1 << w, visit);
        path.pop();
        if stop {
            return true;
        }
    }
    false
}

fn each_path(adj: &[u64], within: u64, t: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    let mut path = Vec::with_capacity(t);
    for s in ones(within) {
        path.clear();
        path.push(s);
        if grow_path(adj, within, t, &mut path, 1u64 << s, visit) {
            return true;
        }
    }
    false
}

fn grow_path(
    adj: &[u64],
    within: u64,
    t: usize,
    path: &mut Vec<usize>,
    used: u64,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if path.len() == t {
        return (t == 1 || path[0] < path[t - 1]) && visit(path);
    }
    let last = *path.last().unwrap();
    let mut cand = adj[last] & within & !used;
    while cand != 0 {
        let w = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        path.push(w);
        let stop = grow_path(adj, within, t, path, used | 1 << w, visit);
        path.pop();
        if stop {
            return true;
        }
    }
    false
}

/// Called with each matching; returning true stops the enumeration.
type MatchingVisitor<'a> = dyn FnMut(&[(usize, usize)]) -> bool + 'a;

fn each_matching(
    adj: &[u64],
    within: u64,
    t: usize,
    picked: &mut Vec<(usize, usize)>,
    visit: &mut MatchingVisitor<'_>,
) -> bool {
    if picked.len() == t {
        return visit(picked);
    }
    if (within.count_ones() as usize) < 2 * (t - picked.len()) {
        return false;
    }
    let mut rest = within;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let mut cand = adj[v] & rest;
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            picked.push((v, w));
            let stop = each_matching(adj, rest & !(1 << w), t, picked, visit);
            picked.pop();
            if stop {
                return true;
            }
        }
    }
    false
}
