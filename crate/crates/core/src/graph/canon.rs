//! Canonical labelling by partition refinement and individualisation.
//!
//! The code of a graph is the smallest upper-triangle adjacency bit string
//! over all leaves of the search tree. Subtrees equivalent under automorphisms
//! already discovered (including twin transpositions found up front) are
//! skipped, which keeps symmetric graphs such as `K_2 + 14K_1` cheap.

use std::fmt;

use super::bits::{self, AdjMatrix};
use super::Graph;

/// Label-invariant certificate: two graphs share a code iff they are isomorphic.
///
/// Layout: vertex count as 4 big-endian bytes, then the upper triangle of the
/// canonically relabelled adjacency matrix in graph6 bit order, packed MSB first.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode {
    bytes: Vec<u8>,
}

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn from_bytes(bytes: Vec<u8>) -> Option<CanonicalCode> {
        if bytes.len() < 4 {
            return None;
        }
        let n = u32::from_be_bytes(bytes[..4].try_into().ok()?) as usize;
        let bit_len = n * n.saturating_sub(1) / 2;
        (bytes.len() == 4 + bit_len.div_ceil(8)).then_some(CanonicalCode { bytes })
    }

    pub fn n(&self) -> usize {
        u32::from_be_bytes(self.bytes[..4].try_into().unwrap()) as usize
    }

    /// The canonical form this code describes.
    pub fn to_graph(&self) -> Graph {
        let n = self.n();
        let payload = &self.bytes[4..];
        let mut m = AdjMatrix::new(n);
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if payload[k / 8] >> (7 - k % 8) & 1 == 1 {
                    m.set(i, j);
                }
                k += 1;
            }
        }
        m.to_graph()
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode(")?;
        for b in &self.bytes {
            write!(f, "{b:02x}")?;
        }
        write!(f, ")")
    }
}

pub(super) fn canonical_code(g: &Graph) -> CanonicalCode {
    let (_, code) = canonical_labeling(g);
    code
}

/// Returns `(perm, code)` where `perm[v]` is the canonical label of `v`.
pub(super) fn canonical_labeling(g: &Graph) -> (Vec<usize>, CanonicalCode) {
    let n = g.n();
    let adj = AdjMatrix::from_graph(g);
    let mut search = Search {
        adj: &adj,
        best: None,
        generators: twin_transpositions(&adj),
    };
    if n > 0 {
        let mut part = Partition::unit(n);
        let mut pending = vec![false; n];
        pending[0] = true;
        search.visit(&mut part, &mut pending, &mut Vec::new());
    }
    let (words, lab) = search.best.unwrap_or_default();
    let mut perm = vec![0; n];
    for (i, &v) in lab.iter().enumerate() {
        perm[v] = i;
    }
    (perm, pack_code(n, &words))
}

fn pack_code(n: usize, words: &[u64]) -> CanonicalCode {
    let bit_len = n * n.saturating_sub(1) / 2;
    let mut bytes = Vec::with_capacity(4 + bit_len.div_ceil(8));
    bytes.extend_from_slice(&(n as u32).to_be_bytes());
    for k in (0..bit_len).step_by(8) {
        let word = words[k / 64];
        bytes.push((word >> (56 - (k % 64))) as u8);
    }
    CanonicalCode { bytes }
}

/// Ordered partition: `lab` lists vertices cell by cell, `end[s]` is the
/// exclusive end of the cell starting at position `s`.
#[derive(Clone)]
struct Partition {
    lab: Vec<usize>,
    end: Vec<usize>,
    cells: usize,
}

impl Partition {
    fn unit(n: usize) -> Self {
        let mut end = vec![0; n];
        end[0] = n;
        Partition {
            lab: (0..n).collect(),
            end,
            cells: 1,
        }
    }

    /// Equitable refinement. Splitters are processed in order of cell start
    /// position, so the outcome depends only on the graph up to relabelling.
    fn refine(&mut self, adj: &AdjMatrix, pending: &mut [bool]) {
        let n = self.lab.len();
        let words = adj.words();
        let mut mask = vec![0u64; words];
        let mut keyed: Vec<(usize, usize)> = Vec::with_capacity(n);
        while let Some(s) = pending.iter().position(|&p| p) {
            pending[s] = false;
            mask.iter_mut().for_each(|w| *w = 0);
            for &v in &self.lab[s..self.end[s]] {
                bits::insert(&mut mask, v);
            }
            let mut x = 0;
            while x < n {
                let e = self.end[x];
                if e - x > 1 {
                    keyed.clear();
                    for &v in &self.lab[x..e] {
                        let c = adj
                            .row(v)
                            .iter()
                            .zip(&mask)
                            .map(|(a, b)| (a & b).count_ones() as usize)
                            .sum();
                        keyed.push((c, v));
                    }
                    let first = keyed[0].0;
                    if keyed.iter().any(|&(c, _)| c != first) {
                        keyed.sort_unstable();
                        let mut start = x;
                        for (i, &(c, v)) in keyed.iter().enumerate() {
                            self.lab[x + i] = v;
                            let last = i + 1 == keyed.len() || keyed[i + 1].0 != c;
                            if last {
                                self.end[start] = x + i + 1;
                                pending[start] = true;
                                if start != x {
                                    self.cells += 1;
                                }
                                start = x + i + 1;
                            }
                        }
                    }
                }
                x = e;
            }
        }
    }

    fn first_nontrivial_cell(&self) -> Option<usize> {
        let mut s = 0;
        while s < self.lab.len() {
            if self.end[s] - s > 1 {
                return Some(s);
            }
            s = self.end[s];
        }
        None
    }

    fn individualize(&mut self, s: usize, v: usize) {
        let pos = self.lab[s..self.end[s]].iter().position(|&w| w == v).unwrap() + s;
        self.lab.swap(s, pos);
        let e = self.end[s];
        self.end[s] = s + 1;
        self.end[s + 1] = e;
        self.cells += 1;
    }
}

struct Search<'a> {
    adj: &'a AdjMatrix,
    best: Option<(Vec<u64>, Vec<usize>)>,
    /// Known automorphisms, as vertex maps.
    generators: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn visit(&mut self, part: &mut Partition, pending: &mut [bool], prefix: &mut Vec<usize>) {
        part.refine(self.adj, pending);
        let Some(s) = part.first_nontrivial_cell() else {
            self.leaf(&part.lab);
            return;
        };
        let mut cell: Vec<usize> = part.lab[s..part.end[s]].to_vec();
        cell.sort_unstable();
        let mut explored: Vec<usize> = Vec::new();
        for v in cell {
            if !explored.is_empty() && self.equivalent_to_explored(prefix, &explored, v) {
                continue;
            }
            explored.push(v);
            let mut child = part.clone();
            child.individualize(s, v);
            let mut child_pending = vec![false; pending.len()];
            child_pending[s] = true;
            prefix.push(v);
            self.visit(&mut child, &mut child_pending, prefix);
            prefix.pop();
        }
    }

    fn equivalent_to_explored(&self, prefix: &[usize], explored: &[usize], v: usize) -> bool {
        let n = self.adj.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for gen in &self.generators {
            if prefix.iter().any(|&p| gen[p] != p) {
                continue;
            }
            for (x, &y) in gen.iter().enumerate() {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let root = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == root)
    }

    fn leaf(&mut self, lab: &[usize]) {
        let n = lab.len();
        let bit_len = n * n.saturating_sub(1) / 2;
        let mut words = vec![0u64; bit_len.div_ceil(64).max(1)];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if self.adj.has(lab[i], lab[j]) {
                    words[k / 64] |= 1 << (63 - k % 64);
                }
                k += 1;
            }
        }
        match &self.best {
            None => self.best = Some((words, lab.to_vec())),
            Some((best, best_lab)) => match words.cmp(best) {
                std::cmp::Ordering::Less => self.best = Some((words, lab.to_vec())),
                std::cmp::Ordering::Equal => {
                    let mut gamma = vec![0; n];
                    for i in 0..n {
                        gamma[best_lab[i]] = lab[i];
                    }
                    if gamma.iter().enumerate().any(|(x, &y)| x != y) {
                        self.generators.push(gamma);
                    }
                }
                std::cmp::Ordering::Greater => {}
            },
        }
    }
}

/// Transpositions swapping twins (equal open or equal closed neighbourhoods).
// `rep` is indexed by both endpoints of the pair, so plain index loops read best
#[allow(clippy::needless_range_loop)]
fn twin_transpositions(adj: &AdjMatrix) -> Vec<Vec<usize>> {
    let n = adj.n();
    let mut gens = Vec::new();
    for closed in [false, true] {
        let mut rep: Vec<Option<usize>> = vec![None; n];
        for u in 0..n {
            if rep[u].is_some() {
                continue;
            }
            for v in u + 1..n {
                if rep[v].is_some() || adj.has(u, v) != closed {
                    continue;
                }
                let twins = adj.row(u).iter().zip(adj.row(v)).enumerate().all(|(i, (&a, &b))| {
                    let mut a = a;
                    let mut b = b;
                    if closed {
                        if v / 64 == i {
                            a &= !(1 << (v % 64));
                        }
                        if u / 64 == i {
                            b &= !(1 << (u % 64));
                        }
                    }
                    a == b
                });
                if twins {
                    rep[v] = Some(u);
                    let mut gamma: Vec<usize> = (0..n).collect();
                    gamma.swap(u, v);
                    gens.push(gamma);
                }
            }
        }
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn code_round_trips_to_canonical_form() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (0, 5)]).unwrap();
        let code = g.canonical_code();
        let form = code.to_graph();
        assert_eq!(form.canonical_code(), code);
        assert_eq!(form, g.canonical_form());
        assert_eq!(CanonicalCode::from_bytes(code.as_bytes().to_vec()), Some(code));
    }

    #[test]
    fn cycle_vs_two_triangles() {
        let c6 = Graph::cycle(6).unwrap();
        let two = Graph::complete(3).copies(2).unwrap();
        assert_ne!(c6.canonical_code(), two.canonical_code());
    }

    #[test]
    fn k4_is_w3() {
        let w3 = Graph::complete(1).join(&Graph::cycle(3).unwrap());
        assert_eq!(w3.canonical_code(), Graph::complete(4).canonical_code());
    }

    #[test]
    fn symmetric_graphs_are_cheap() {
        // K_2 + 22K_1 has 22! automorphisms; twin pruning must collapse them
        let g = Graph::complete(2).join(&Graph::empty(22));
        let h = g.relabel(&(0..24).rev().collect::<Vec<_>>());
        assert_eq!(g.canonical_code(), h.canonical_code());
        assert_eq!(Graph::empty(24).canonical_code().n(), 24);
        assert_eq!(Graph::empty(0).canonical_code().n(), 0);
        assert_eq!(Graph::empty(1).canonical_code().to_graph(), Graph::empty(1));
    }

    #[test]
    fn twins_open_and_closed() {
        let adj = AdjMatrix::from_graph(&Graph::complete(3));
        assert_eq!(twin_transpositions(&adj).len(), 2);
        let adj = AdjMatrix::from_graph(&Graph::cycle(4).unwrap());
        // opposite corners of C_4 are open twins
        assert_eq!(twin_transpositions(&adj).len(), 2);
    }
}
