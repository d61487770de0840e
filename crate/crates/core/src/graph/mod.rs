//! Immutable simple undirected graphs and the primitive families built from them.
//!
//! Vertices are labelled `0..n`. Every operation returns a fresh value; inputs
//! are never mutated. Vertex deletions compact the remaining labels while
//! preserving their relative order.

pub(crate) mod bits;
mod canon;
mod dot;
mod graph6;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

pub use canon::CanonicalCode;
pub(crate) use bits::AdjMatrix;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge {0}-{1} already present")]
    DuplicateEdge(usize, usize),
    #[error("edge {0}-{1} not present")]
    MissingEdge(usize, usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("malformed graph6 string: {0}")]
    Graph6(String),
}

/// A simple undirected graph with sorted, duplicate-free neighbour lists.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

/// The primitive families every other construction is assembled from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Primitive {
    Empty(usize),
    Complete(usize),
    Cycle(usize),
    Path(usize),
    /// `K_{1,t}` with the hub labelled 0.
    Star(usize),
}

/// A single structural edit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EditOp {
    DeleteVertex(usize),
    DeleteEdge(usize, usize),
    AddEdge(usize, usize),
    /// Adds a new vertex (label `n`) adjacent to every vertex of the set.
    AddVertexAdjacentTo(Vec<usize>),
}

pub fn build_primitive(kind: Primitive) -> Result<Graph, GraphError> {
    match kind {
        Primitive::Empty(n) => Ok(Graph::empty(n)),
        Primitive::Complete(n) => Ok(Graph::complete(n)),
        Primitive::Cycle(n) => Graph::cycle(n),
        Primitive::Path(n) => Graph::path(n),
        Primitive::Star(t) => Graph::star(t),
    }
}

impl Graph {
    pub(crate) fn from_sorted_adjacency(adjacency: Vec<Vec<usize>>) -> Graph {
        let degree_sum: usize = adjacency.iter().map(Vec::len).sum();
        debug_assert!(degree_sum.is_multiple_of(2));
        Graph {
            adjacency,
            edge_count: degree_sum / 2,
        }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Graph::from_sorted_adjacency(adjacency))
    }

    pub fn empty(n: usize) -> Graph {
        Graph {
            adjacency: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    pub fn complete(n: usize) -> Graph {
        let adjacency = (0..n)
            .map(|v| (0..n).filter(|&u| u != v).collect())
            .collect();
        Graph::from_sorted_adjacency(adjacency)
    }

    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        if n < 3 {
            return Err(GraphError::InvalidParameter(format!(
                "cycle needs at least 3 vertices, got {n}"
            )));
        }
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Result<Graph, GraphError> {
        if n < 1 {
            return Err(GraphError::InvalidParameter("path needs at least 1 vertex".into()));
        }
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn star(t: usize) -> Result<Graph, GraphError> {
        if t < 1 {
            return Err(GraphError::InvalidParameter("star needs at least 1 leaf".into()));
        }
        Graph::from_edges(t + 1, (1..=t).map(|i| (0, i)))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// `n_k(G)` for every degree `k` that occurs.
    pub fn degree_profile(&self) -> BTreeMap<usize, usize> {
        let mut profile = BTreeMap::new();
        for list in &self.adjacency {
            *profile.entry(list.len()).or_insert(0) += 1;
        }
        profile
    }

    /// Number of vertices of degree exactly `k`.
    pub fn count_degree(&self, k: usize) -> usize {
        self.adjacency.iter().filter(|l| l.len() == k).count()
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = self.adjacency.iter().map(Vec::len).collect();
        seq.sort_unstable_by(|a, b| b.cmp(a));
        seq
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in &self.adjacency[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Relabels vertices: old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n(), "permutation length mismatch");
        let mut adjacency = vec![Vec::new(); self.n()];
        for (v, list) in self.adjacency.iter().enumerate() {
            let mut mapped: Vec<usize> = list.iter().map(|&w| perm[w]).collect();
            mapped.sort_unstable();
            adjacency[perm[v]] = mapped;
        }
        Graph::from_sorted_adjacency(adjacency)
    }

    pub fn join(&self, other: &Graph) -> Graph {
        let (a, b) = (self.n(), other.n());
        let mut adjacency = Vec::with_capacity(a + b);
        for list in &self.adjacency {
            let mut l = list.clone();
            l.extend(a..a + b);
            adjacency.push(l);
        }
        for list in &other.adjacency {
            let mut l: Vec<usize> = (0..a).collect();
            l.extend(list.iter().map(|&w| w + a));
            adjacency.push(l);
        }
        Graph::from_sorted_adjacency(adjacency)
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let a = self.n();
        let mut adjacency = self.adjacency.clone();
        adjacency.extend(
            other
                .adjacency
                .iter()
                .map(|l| l.iter().map(|&w| w + a).collect()),
        );
        Graph::from_sorted_adjacency(adjacency)
    }

    /// `tG`: the disjoint union of `t ≥ 1` copies.
    pub fn copies(&self, t: usize) -> Result<Graph, GraphError> {
        if t < 1 {
            return Err(GraphError::InvalidParameter("copies needs t >= 1".into()));
        }
        let mut g = self.clone();
        for _ in 1..t {
            g = g.disjoint_union(self);
        }
        Ok(g)
    }

    pub fn edit(&self, op: &EditOp) -> Result<Graph, GraphError> {
        match *op {
            EditOp::DeleteVertex(v) => self.delete_vertices(&[v]),
            EditOp::DeleteEdge(u, v) => self.delete_edge(u, v),
            EditOp::AddEdge(u, v) => self.add_edge(u, v),
            EditOp::AddVertexAdjacentTo(ref set) => self.add_vertex_adjacent_to(set),
        }
    }

    /// `G \ S`, labels compacted in order.
    pub fn delete_vertices(&self, set: &[usize]) -> Result<Graph, GraphError> {
        let mut remove = vec![false; self.n()];
        for &v in set {
            check_vertex(v, self.n())?;
            remove[v] = true;
        }
        let keep: Vec<usize> = (0..self.n()).filter(|&v| !remove[v]).collect();
        self.induced_subgraph(&keep)
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        check_vertex(u, self.n())?;
        check_vertex(v, self.n())?;
        if !self.has_edge(u, v) {
            return Err(GraphError::MissingEdge(u.min(v), u.max(v)));
        }
        let mut adjacency = self.adjacency.clone();
        adjacency[u].retain(|&w| w != v);
        adjacency[v].retain(|&w| w != u);
        Ok(Graph::from_sorted_adjacency(adjacency))
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        check_vertex(u, self.n())?;
        check_vertex(v, self.n())?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        let mut adjacency = self.adjacency.clone();
        for (a, b) in [(u, v), (v, u)] {
            let pos = adjacency[a].binary_search(&b).unwrap_err();
            adjacency[a].insert(pos, b);
        }
        Ok(Graph::from_sorted_adjacency(adjacency))
    }

    pub fn add_vertex_adjacent_to(&self, set: &[usize]) -> Result<Graph, GraphError> {
        let n = self.n();
        let mut nbrs = set.to_vec();
        nbrs.sort_unstable();
        for w in nbrs.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge(w[0], n));
            }
        }
        let mut adjacency = self.adjacency.clone();
        for &v in &nbrs {
            check_vertex(v, n)?;
            adjacency[v].push(n);
        }
        adjacency.push(nbrs);
        Ok(Graph::from_sorted_adjacency(adjacency))
    }

    /// `G[S]`; the vertices of `S` are relabelled `0..|S|` in increasing order.
    pub fn induced_subgraph(&self, set: &[usize]) -> Result<Graph, GraphError> {
        let mut verts = set.to_vec();
        verts.sort_unstable();
        verts.dedup();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in verts.iter().enumerate() {
            check_vertex(v, self.n())?;
            index[v] = i;
        }
        let adjacency = verts
            .iter()
            .map(|&v| {
                self.adjacency[v]
                    .iter()
                    .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                    .collect()
            })
            .collect();
        Ok(Graph::from_sorted_adjacency(adjacency))
    }

    /// `G[N(v)]`, the open neighbourhood graph, with neighbours relabelled in
    /// increasing order.
    pub fn neighborhood_subgraph(&self, v: usize) -> Result<Graph, GraphError> {
        check_vertex(v, self.n())?;
        self.induced_subgraph(&self.adjacency[v])
    }

    pub fn canonical_code(&self) -> CanonicalCode {
        canon::canonical_code(self)
    }

    /// The isomorphic copy of `self` whose labelling is the canonical one.
    pub fn canonical_form(&self) -> Graph {
        let (perm, _) = canon::canonical_labeling(self);
        self.relabel(&perm)
    }

    /// `perm[v]` is the canonical label of vertex `v`.
    pub fn canonical_labeling(&self) -> Vec<usize> {
        canon::canonical_labeling(self).0
    }

    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        self.n() == other.n()
            && self.edge_count == other.edge_count
            && self.degree_sequence() == other.degree_sequence()
            && self.canonical_code() == other.canonical_code()
    }

    pub fn to_graph6(&self) -> String {
        graph6::encode(self)
    }

    pub fn from_graph6(s: &str) -> Result<Graph, GraphError> {
        graph6::decode(s)
    }

    pub fn to_dot(&self, name: &str) -> String {
        dot::to_dot(self, name)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, e={}, edges=[", self.n(), self.edge_count)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

fn check_vertex(v: usize, n: usize) -> Result<(), GraphError> {
    if v < n {
        Ok(())
    } else {
        Err(GraphError::VertexOutOfRange { vertex: v, n })
    }
}
