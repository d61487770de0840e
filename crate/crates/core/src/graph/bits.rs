//! Dense bit-matrix adjacency used by the hot search loops.

use super::Graph;

/// Row-major adjacency bit matrix. Row `v` occupies `words` consecutive `u64`s.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct AdjMatrix {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl AdjMatrix {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        AdjMatrix {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    pub fn from_graph(g: &Graph) -> Self {
        let mut m = AdjMatrix::new(g.n());
        for (u, v) in g.edges() {
            m.set(u, v);
        }
        m
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
    }

    #[inline]
    pub fn clear(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / 64] &= !(1 << (v % 64));
        self.bits[v * self.words + u / 64] &= !(1 << (u % 64));
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn to_graph(&self) -> Graph {
        let adjacency = (0..self.n).map(|v| ones(self.row(v)).collect()).collect();
        Graph::from_sorted_adjacency(adjacency)
    }
}

/// Iterate the set bit positions of a multi-word set, ascending.
pub(crate) fn ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            }
        })
    })
}

#[inline]
pub(crate) fn is_empty(words: &[u64]) -> bool {
    words.iter().all(|&w| w == 0)
}

#[inline]
pub(crate) fn insert(words: &mut [u64], v: usize) {
    words[v / 64] |= 1 << (v % 64);
}

#[inline]
pub(crate) fn contains(words: &[u64], v: usize) -> bool {
    words[v / 64] >> (v % 64) & 1 == 1
}
