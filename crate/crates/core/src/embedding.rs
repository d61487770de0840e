//! Planarity testing, rotation systems and face bookkeeping.
//!
//! Planarity is decided block by block with the path-addition method of
//! Demoucron, Malgrange and Pertuiset. Each block is embedded as a set of
//! consistently oriented facial cycles, converted to a rotation system, and the
//! block rotations are concatenated at cut vertices.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EmbeddingError {
    #[error("graph is disconnected; faces are only defined for connected graphs")]
    Disconnected,
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("invalid rotation system: {0}")]
    InvalidRotation(String),
}

/// A combinatorial embedding: the cyclic order of neighbours around each vertex.
///
/// Face tracing follows the dart `u -> v` with `v -> next(v, u)`, where
/// `next(v, u)` is the neighbour after `u` in the rotation at `v`.
#[derive(Clone, PartialEq, Eq)]
pub struct PlaneEmbedding {
    graph: Graph,
    rotation: Vec<Vec<usize>>,
    outer_face: Option<usize>,
}

/// `f_i` for every face order `i` that occurs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceVector {
    pub counts: BTreeMap<usize, usize>,
}

impl FaceVector {
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn count(&self, order: usize) -> usize {
        self.counts.get(&order).copied().unwrap_or(0)
    }

    /// `Σ i·f_i`.
    pub fn weighted_sum(&self) -> usize {
        self.counts.iter().map(|(i, f)| i * f).sum()
    }
}

#[derive(Clone, Debug)]
pub enum Planarity {
    Planar(PlaneEmbedding),
    NonPlanar,
}

impl Planarity {
    pub fn is_planar(&self) -> bool {
        matches!(self, Planarity::Planar(_))
    }

    pub fn embedding(self) -> Option<PlaneEmbedding> {
        match self {
            Planarity::Planar(e) => Some(e),
            Planarity::NonPlanar => None,
        }
    }
}

pub fn planarity(g: &Graph) -> Planarity {
    let n = g.n();
    if n >= 3 && g.edge_count() > 3 * n - 6 {
        return Planarity::NonPlanar;
    }
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); n];
    for block in biconnected_blocks(g) {
        if block.len() == 1 {
            let (u, v) = block[0];
            rotation[u].push(v);
            rotation[v].push(u);
            continue;
        }
        match embed_block(n, &block) {
            Some(local) => {
                for (v, order) in local {
                    rotation[v].extend(order);
                }
            }
            None => return Planarity::NonPlanar,
        }
    }
    let embedding = PlaneEmbedding {
        graph: g.clone(),
        rotation,
        outer_face: None,
    };
    debug_assert!(embedding.satisfies_euler());
    Planarity::Planar(embedding)
}

pub fn is_planar(g: &Graph) -> bool {
    planarity(g).is_planar()
}

/// Planar, simple, connected, `n ≥ 3` and `e = 3n − 6`.
pub fn is_triangulation(g: &Graph) -> bool {
    let n = g.n();
    n >= 3 && g.edge_count() == 3 * n - 6 && g.is_connected() && is_planar(g)
}

impl PlaneEmbedding {
    /// Validates a rotation system: each list must be a permutation of the
    /// vertex's neighbours and the embedding must be planar (Euler's formula
    /// holds on every component).
    pub fn from_rotation(graph: Graph, rotation: Vec<Vec<usize>>) -> Result<Self, EmbeddingError> {
        if rotation.len() != graph.n() {
            return Err(EmbeddingError::InvalidRotation(format!(
                "expected {} rotation lists, found {}",
                graph.n(),
                rotation.len()
            )));
        }
        for (v, order) in rotation.iter().enumerate() {
            let mut sorted = order.clone();
            sorted.sort_unstable();
            if sorted != graph.neighbors(v) {
                return Err(EmbeddingError::InvalidRotation(format!(
                    "rotation at {v} is not a permutation of its neighbours"
                )));
            }
        }
        let e = PlaneEmbedding {
            graph,
            rotation,
            outer_face: None,
        };
        if !e.satisfies_euler() {
            return Err(EmbeddingError::InvalidRotation(
                "face count violates Euler's formula".into(),
            ));
        }
        Ok(e)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn outer_face(&self) -> Option<usize> {
        self.outer_face
    }

    pub fn with_outer_face(mut self, face: usize) -> Self {
        self.outer_face = Some(face);
        self
    }

    /// Neighbour following `u` in the rotation at `v`.
    pub fn next(&self, v: usize, u: usize) -> usize {
        let order = &self.rotation[v];
        let i = order.iter().position(|&w| w == u).expect("u is a neighbour of v");
        order[(i + 1) % order.len()]
    }

    /// Face boundary walks, each listed as the tails of its darts. Every edge
    /// side appears in exactly one walk.
    pub fn faces(&self) -> Result<Vec<Vec<usize>>, EmbeddingError> {
        if !self.graph.is_connected() {
            return Err(EmbeddingError::Disconnected);
        }
        Ok(self.trace_faces())
    }

    pub fn face_vector(&self) -> Result<FaceVector, EmbeddingError> {
        let mut fv = FaceVector::default();
        for face in self.faces()? {
            *fv.counts.entry(face.len()).or_insert(0) += 1;
        }
        Ok(fv)
    }

    /// Number of distinct 3-faces whose boundary contains `v`.
    pub fn incident_triangle_count(&self, v: usize) -> Result<usize, EmbeddingError> {
        if v >= self.graph.n() {
            return Err(EmbeddingError::VertexOutOfRange(v));
        }
        Ok(self
            .faces()?
            .iter()
            .filter(|f| f.len() == 3 && f.contains(&v))
            .count())
    }

    /// `n − e + f = 2` on every connected component.
    pub fn satisfies_euler(&self) -> bool {
        let faces = self.trace_faces();
        let mut comp_of = vec![0; self.graph.n()];
        let comps = self.graph.components();
        for (i, c) in comps.iter().enumerate() {
            for &v in c {
                comp_of[v] = i;
            }
        }
        let mut faces_per = vec![0usize; comps.len()];
        for f in &faces {
            if let Some(&v) = f.first() {
                faces_per[comp_of[v]] += 1;
            }
        }
        comps.iter().enumerate().all(|(i, c)| {
            let edges: usize = c.iter().map(|&v| self.graph.degree(v)).sum::<usize>() / 2;
            let f = if edges == 0 { 1 } else { faces_per[i] };
            c.len() + f == edges + 2
        })
    }

    fn trace_faces(&self) -> Vec<Vec<usize>> {
        let n = self.graph.n();
        if n == 1 && self.graph.edge_count() == 0 {
            return vec![Vec::new()];
        }
        let mut used: Vec<Vec<bool>> = self.rotation.iter().map(|r| vec![false; r.len()]).collect();
        let mut faces = Vec::new();
        for u in 0..n {
            for i in 0..self.rotation[u].len() {
                if used[u][i] {
                    continue;
                }
                let mut face = Vec::new();
                let (mut a, mut ai) = (u, i);
                while !used[a][ai] {
                    used[a][ai] = true;
                    face.push(a);
                    let b = self.rotation[a][ai];
                    let c = self.next(b, a);
                    let bi = self.rotation[b].iter().position(|&w| w == c).unwrap();
                    a = b;
                    ai = bi;
                }
                faces.push(face);
            }
        }
        faces
    }

    /// One line per vertex: `v: w0 w1 ...` in rotation order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (v, order) in self.rotation.iter().enumerate() {
            let _ = write!(out, "{v}:");
            for w in order {
                let _ = write!(out, " {w}");
            }
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self, EmbeddingError> {
        let mut rotation = Vec::new();
        for (lineno, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
            let (head, tail) = line.split_once(':').ok_or_else(|| {
                EmbeddingError::InvalidRotation(format!("line {}: missing ':'", lineno + 1))
            })?;
            let v: usize = head.trim().parse().map_err(|_| {
                EmbeddingError::InvalidRotation(format!("line {}: bad vertex", lineno + 1))
            })?;
            if v != rotation.len() {
                return Err(EmbeddingError::InvalidRotation(format!(
                    "line {}: vertices must be listed in order",
                    lineno + 1
                )));
            }
            let order = tail
                .split_whitespace()
                .map(|t| t.parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| {
                    EmbeddingError::InvalidRotation(format!("line {}: bad neighbour", lineno + 1))
                })?;
            rotation.push(order);
        }
        let n = rotation.len();
        let edges: Vec<(usize, usize)> = rotation
            .iter()
            .enumerate()
            .flat_map(|(v, o)| o.iter().filter(move |&&w| w > v).map(move |&w| (v, w)))
            .collect();
        let graph = Graph::from_edges(n, edges)
            .map_err(|e| EmbeddingError::InvalidRotation(e.to_string()))?;
        PlaneEmbedding::from_rotation(graph, rotation)
    }
}

impl fmt::Debug for PlaneEmbedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PlaneEmbedding {{ {} }}", self.to_text().trim_end().replace('\n', "; "))
    }
}

/// Edge sets of the biconnected blocks (bridges are single-edge blocks).
fn biconnected_blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        // (vertex, parent, next neighbour index)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
            if *idx < g.degree(v) {
                let w = g.neighbors(v)[*idx];
                *idx += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == (p, v) {
                                break;
                            }
                        }
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks
}

/// Embeds one biconnected block (at least 3 edges) and returns the rotation
/// at each of its vertices, or `None` if the block is non-planar.
fn embed_block(n_total: usize, block: &[(usize, usize)]) -> Option<Vec<(usize, Vec<usize>)>> {
    let mut verts: Vec<usize> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
    verts.sort_unstable();
    verts.dedup();
    let k = verts.len();
    if k >= 3 && block.len() > 3 * k - 6 {
        return None;
    }
    let mut local = vec![usize::MAX; n_total];
    for (i, &v) in verts.iter().enumerate() {
        local[v] = i;
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); k];
    for &(u, v) in block {
        adj[local[u]].push(local[v]);
        adj[local[v]].push(local[u]);
    }
    for l in &mut adj {
        l.sort_unstable();
    }
    let faces = dmp_faces(&adj)?;

    // succ[v][u] = w for each oriented face corner u -> v -> w
    let mut succ: Vec<BTreeMap<usize, usize>> = vec![BTreeMap::new(); k];
    for face in &faces {
        let m = face.len();
        for i in 0..m {
            let (u, v, w) = (face[(i + m - 1) % m], face[i], face[(i + 1) % m]);
            succ[v].insert(u, w);
        }
    }
    let mut out = Vec::with_capacity(k);
    for v in 0..k {
        let start = adj[v][0];
        let mut order = vec![verts[start]];
        let mut cur = succ[v][&start];
        while cur != start {
            order.push(verts[cur]);
            cur = succ[v][&cur];
        }
        debug_assert_eq!(order.len(), adj[v].len());
        out.push((verts[v], order));
    }
    Some(out)
}

/// Path-addition embedding of a biconnected graph. Returns oriented facial
/// cycles (each edge traversed once in each direction) or `None` if non-planar.
fn dmp_faces(adj: &[Vec<usize>]) -> Option<Vec<Vec<usize>>> {
    let k = adj.len();
    let total_edges: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
    let mut in_h = vec![false; k];
    let mut edge_in_h = vec![vec![false; k]; k];
    let mut embedded_edges = 0;

    let cycle = find_cycle(adj);
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        in_h[a] = true;
        edge_in_h[a][b] = true;
        edge_in_h[b][a] = true;
        embedded_edges += 1;
    }
    let mut rev = cycle.clone();
    rev.reverse();
    let mut faces: Vec<Vec<usize>> = vec![cycle, rev];

    while embedded_edges < total_edges {
        let fragments = fragments(adj, &in_h, &edge_in_h);
        let mut choice: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, f)| frag.attachments.iter().all(|a| f.contains(a)))
                .map(|(i, _)| i)
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = choice.expect("at least one fragment remains");
        let path = fragment_path(adj, &in_h, &fragments[fi]);
        for w in path.windows(2) {
            edge_in_h[w[0]][w[1]] = true;
            edge_in_h[w[1]][w[0]] = true;
            embedded_edges += 1;
        }
        for &v in &path {
            in_h[v] = true;
        }
        let face = faces.swap_remove(face_idx);
        let (a, b) = (path[0], *path.last().unwrap());
        let m = face.len();
        let ia = face.iter().position(|&x| x == a).unwrap();
        let ib = face.iter().position(|&x| x == b).unwrap();
        let interior = &path[1..path.len() - 1];
        let mut f1: Vec<usize> = (0..m)
            .map(|d| face[(ia + d) % m])
            .take((ib + m - ia) % m + 1)
            .collect();
        f1.extend(interior.iter().rev());
        let mut f2: Vec<usize> = (0..m)
            .map(|d| face[(ib + d) % m])
            .take((ia + m - ib) % m + 1)
            .collect();
        f2.extend(interior.iter());
        faces.push(f1);
        faces.push(f2);
    }
    Some(faces)
}

struct Fragment {
    /// Vertices not yet embedded (empty for a single chord).
    inner: Vec<usize>,
    attachments: Vec<usize>,
}

fn fragments(adj: &[Vec<usize>], in_h: &[bool], edge_in_h: &[Vec<bool>]) -> Vec<Fragment> {
    let k = adj.len();
    let mut out = Vec::new();
    for u in 0..k {
        if !in_h[u] {
            continue;
        }
        for &v in &adj[u] {
            if v > u && in_h[v] && !edge_in_h[u][v] {
                out.push(Fragment {
                    inner: Vec::new(),
                    attachments: vec![u, v],
                });
            }
        }
    }
    let mut seen = vec![false; k];
    for s in 0..k {
        if in_h[s] || seen[s] {
            continue;
        }
        seen[s] = true;
        let mut inner = vec![s];
        let mut attach = Vec::new();
        let mut i = 0;
        while i < inner.len() {
            let v = inner[i];
            i += 1;
            for &w in &adj[v] {
                if in_h[w] {
                    attach.push(w);
                } else if !seen[w] {
                    seen[w] = true;
                    inner.push(w);
                }
            }
        }
        attach.sort_unstable();
        attach.dedup();
        out.push(Fragment {
            inner,
            attachments: attach,
        });
    }
    out
}

/// A path through the fragment joining two distinct attachment vertices.
fn fragment_path(adj: &[Vec<usize>], in_h: &[bool], frag: &Fragment) -> Vec<usize> {
    if frag.inner.is_empty() {
        return frag.attachments.clone();
    }
    let k = adj.len();
    let start = frag.attachments[0];
    let mut member = vec![false; k];
    for &v in &frag.inner {
        member[v] = true;
    }
    let mut parent = vec![usize::MAX; k];
    let mut queue = Vec::new();
    for &w in &adj[start] {
        if member[w] {
            parent[w] = start;
            queue.push(w);
        }
    }
    let mut i = 0;
    while i < queue.len() {
        let v = queue[i];
        i += 1;
        if let Some(&end) = adj[v].iter().find(|&&w| in_h[w] && w != start) {
            let mut path = vec![end, v];
            let mut cur = v;
            while parent[cur] != start {
                cur = parent[cur];
                path.push(cur);
            }
            path.push(start);
            path.reverse();
            return path;
        }
        for &w in &adj[v] {
            if member[w] && parent[w] == usize::MAX {
                parent[w] = v;
                queue.push(w);
            }
        }
    }
    unreachable!("biconnected fragment has two attachments")
}

fn find_cycle(adj: &[Vec<usize>]) -> Vec<usize> {
    let k = adj.len();
    let mut parent = vec![usize::MAX; k];
    let mut depth = vec![usize::MAX; k];
    let mut stack = vec![(0usize, 0usize)];
    depth[0] = 0;
    while let Some(&mut (v, ref mut idx)) = stack.last_mut() {
        if *idx < adj[v].len() {
            let w = adj[v][*idx];
            *idx += 1;
            if depth[w] == usize::MAX {
                depth[w] = depth[v] + 1;
                parent[w] = v;
                stack.push((w, 0));
            } else if w != parent[v] && depth[w] < depth[v] {
                let mut cycle = vec![v];
                let mut cur = v;
                while cur != w {
                    cur = parent[cur];
                    cycle.push(cur);
                }
                return cycle;
            }
        } else {
            stack.pop();
        }
    }
    unreachable!("biconnected block with at least 3 vertices has a cycle")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k33() -> Graph {
        Graph::from_edges(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).unwrap()
    }

    #[test]
    fn kuratowski_graphs() {
        assert!(!is_planar(&Graph::complete(5)));
        assert!(!is_planar(&k33()));
        // subdivided K_{3,3} passes the edge-count filter
        let g = k33().delete_edge(0, 3).unwrap().add_vertex_adjacent_to(&[0, 3]).unwrap();
        assert!(!is_planar(&g));
    }

    #[test]
    fn octahedral_family() {
        let g = Graph::empty(2).join(&Graph::cycle(8).unwrap());
        let e = planarity(&g).embedding().unwrap();
        let fv = e.face_vector().unwrap();
        assert_eq!(fv.total(), 16);
        assert_eq!(fv.counts, BTreeMap::from([(3, 16)]));
    }

    #[test]
    fn face_vectors() {
        let k4 = planarity(&Graph::complete(4)).embedding().unwrap();
        assert_eq!(k4.face_vector().unwrap().counts, BTreeMap::from([(3, 4)]));
        for v in 0..4 {
            assert_eq!(k4.incident_triangle_count(v).unwrap(), 3);
        }
        let c5 = planarity(&Graph::cycle(5).unwrap()).embedding().unwrap();
        assert_eq!(c5.face_vector().unwrap().counts, BTreeMap::from([(5, 2)]));
    }

    #[test]
    fn wheel_hub_triangles() {
        let w5 = Graph::complete(1).join(&Graph::cycle(5).unwrap());
        let e = planarity(&w5).embedding().unwrap();
        assert_eq!(e.incident_triangle_count(0).unwrap(), 5);
        assert_eq!(e.face_vector().unwrap().counts, BTreeMap::from([(3, 5), (5, 1)]));
    }

    #[test]
    fn trees_and_cut_vertices() {
        let star = Graph::star(4).unwrap();
        let e = planarity(&star).embedding().unwrap();
        assert_eq!(e.face_vector().unwrap().counts, BTreeMap::from([(8, 1)]));
        // two triangles sharing a vertex
        let bowtie = Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        let e = planarity(&bowtie).embedding().unwrap();
        assert_eq!(e.face_vector().unwrap().counts, BTreeMap::from([(3, 2), (6, 1)]));
        let single = planarity(&Graph::empty(1)).embedding().unwrap();
        assert_eq!(single.face_vector().unwrap().counts, BTreeMap::from([(0, 1)]));
    }

    #[test]
    fn disconnected_reports_condition() {
        let g = Graph::complete(3).copies(2).unwrap();
        let e = planarity(&g).embedding().unwrap();
        assert!(e.satisfies_euler());
        assert_eq!(e.faces(), Err(EmbeddingError::Disconnected));
        assert_eq!(e.face_vector(), Err(EmbeddingError::Disconnected));
    }

    #[test]
    fn triangulation_predicate() {
        assert!(is_triangulation(&Graph::complete(4)));
        assert!(is_triangulation(&Graph::complete(3)));
        assert!(!is_triangulation(&Graph::cycle(6).unwrap()));
        assert!(!is_triangulation(&Graph::complete(5)));
    }

    #[test]
    fn text_round_trip() {
        let g = Graph::empty(2).join(&Graph::cycle(4).unwrap());
        let e = planarity(&g).embedding().unwrap();
        let text = e.to_text();
        let back = PlaneEmbedding::from_text(&text).unwrap();
        assert_eq!(back, e);
        assert!(PlaneEmbedding::from_text("0: 1\n1: 0\n2: x\n").is_err());
        // K4 with a non-planar rotation at one vertex
        let bad = "0: 1 2 3\n1: 0 2 3\n2: 0 1 3\n3: 0 1 2\n";
        assert!(PlaneEmbedding::from_text(bad).is_err());
    }
}
