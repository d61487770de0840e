//! Explicit constructions. Builders here only assemble edge lists; claims
//! are checked by the caller.

use std::collections::BTreeSet;

use super::ConstructionError;
use crate::embedding::is_triangulation;
use crate::graph::Graph;

fn build(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph, ConstructionError> {
    Graph::from_edges(n, edges).map_err(|e| ConstructionError::SelfCheck(e.to_string()))
}

fn need(ok: bool, msg: impl FnOnce() -> String) -> Result<(), ConstructionError> {
    if ok {
        Ok(())
    } else {
        Err(ConstructionError::InvalidParameter(msg()))
    }
}

fn cycle_edges(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).map(move |i| (i, (i + 1) % n))
}

/// The zigzag chords of `O_n` on the cycle `0..n`.
fn serpentine_chords(n: usize) -> Vec<(usize, usize)> {
    (0..n - 3).map(|k| (1 + k / 2, n - 1 - k.div_ceil(2))).collect()
}

/// `O_n`: the maximal outerplanar graph with maximum degree 4.
pub fn serpentine(n: usize) -> Result<Graph, ConstructionError> {
    need(n >= 5, || format!("serpentine needs n >= 5, got {n}"))?;
    build(n, cycle_edges(n).chain(serpentine_chords(n)))
}

/// `O*_n`: `O_n` inside the cycle and a rotated copy of its chords outside.
pub fn double_serpentine(n: usize) -> Result<Graph, ConstructionError> {
    need(n >= 5, || format!("double serpentine needs n >= 5, got {n}"))?;
    let inner = serpentine_chords(n);
    let norm = |(a, b): (usize, usize)| (a.min(b), a.max(b));
    let inner_set: BTreeSet<_> = inner.iter().copied().map(norm).collect();
    let attempt = |s: usize| -> Option<Graph> {
        let outer: BTreeSet<_> = inner.iter().map(|&(a, b)| norm(((a + s) % n, (b + s) % n))).collect();
        if !outer.is_disjoint(&inner_set) {
            return None;
        }
        let g = Graph::from_edges(n, cycle_edges(n).chain(inner.iter().copied()).chain(outer)).ok()?;
        is_triangulation(&g).then_some(g)
    };
    // prefer the smallest shift with Δ ≤ 6, else any shift that triangulates
    (1..n)
        .filter_map(attempt)
        .find(|g| g.max_degree() <= 6)
        .or_else(|| (1..n).find_map(attempt))
        .ok_or_else(|| ConstructionError::SelfCheck(format!("no chord rotation triangulates O*_{n}")))
}

/// `K_1 + O_{n−1}` with the apex at `n − 1`. `O_4` is read as `K_4^−`, so
/// `n = 5` gives the unique 5-vertex triangulation.
pub fn apex_serpentine(n: usize) -> Result<Graph, ConstructionError> {
    need(n >= 5, || format!("apex serpentine needs n >= 5, got {n}"))?;
    if n == 5 {
        return Ok(Graph::complete(5).delete_edge(0, 1).expect("edge of K_5"));
    }
    Ok(serpentine(n - 1)?.join(&Graph::complete(1)))
}

/// `2K_1 + C_{n−2}` with the apexes at `n − 2` and `n − 1`.
pub fn two_apex_cycle(n: usize) -> Result<Graph, ConstructionError> {
    need(n >= 5, || format!("two-apex cycle needs n >= 5, got {n}"))?;
    Ok(Graph::cycle(n - 2).expect("n - 2 >= 3").join(&Graph::empty(2)))
}

/// `K_2 + (K_2 ∪ K_{n−4})`.
pub fn small_wheel_free(n: usize) -> Result<Graph, ConstructionError> {
    need(n == 5 || n == 6, || format!("small wheel-free graph needs n in {{5, 6}}, got {n}"))?;
    Ok(Graph::complete(2).join(&Graph::complete(2).disjoint_union(&Graph::complete(n - 4))))
}

/// `K_2 + (n−2)K_1`.
pub fn two_apex_lower(n: usize) -> Result<Graph, ConstructionError> {
    need(n >= 5, || format!("two-apex lower graph needs n >= 5, got {n}"))?;
    Ok(Graph::complete(2).join(&Graph::empty(n - 2)))
}

/// Ring `i ∈ 1..=t`, position `j ∈ 1..=5` (both 1-based) of `L_t`.
fn ring(i: usize, j: usize) -> usize {
    5 * (i - 1) + (j - 1) % 5
}

/// `L_t`: `t` stacked 5-cycles with consecutive rings joined by a band of
/// triangles, capped by two apexes `u = 5t` and `v = 5t + 1`.
pub fn pentagonal_stack(t: usize) -> Result<Graph, ConstructionError> {
    need(t >= 2, || format!("pentagonal stack needs t >= 2, got {t}"))?;
    let (u, v) = (5 * t, 5 * t + 1);
    let mut edges = Vec::new();
    for i in 1..=t {
        for j in 1..=5 {
            edges.push((ring(i, j), ring(i, j + 1)));
            if i < t {
                edges.push((ring(i, j), ring(i + 1, j)));
                edges.push((ring(i, j), ring(i + 1, j + 1)));
            }
        }
    }
    for j in 1..=5 {
        edges.push((u, ring(1, j)));
        edges.push((v, ring(t, j)));
    }
    build(5 * t + 2, edges)
}

/// The faces of `L_t` that receive the extra degree-3 vertices.
pub fn stack_plus_faces(t: usize) -> [[usize; 3]; 4] {
    [
        [5 * t, ring(1, 1), ring(1, 2)],
        [ring(1, 3), ring(1, 4), ring(2, 4)],
        [ring(1, 5), ring(2, 5), ring(2, 1)],
        [5 * t + 1, ring(t, 2), ring(t, 3)],
    ]
}

/// `L_t^i`: `L_t` with a degree-3 vertex stacked into each of `i` pairwise
/// vertex-disjoint faces.
pub fn pentagonal_stack_plus(t: usize, i: usize) -> Result<Graph, ConstructionError> {
    need((1..=4).contains(&i), || format!("pentagonal stack plus needs i in 1..=4, got {i}"))?;
    let mut g = pentagonal_stack(t)?;
    let faces = &stack_plus_faces(t)[..i];
    let used: BTreeSet<usize> = faces.iter().flatten().copied().collect();
    if used.len() != 3 * i {
        return Err(ConstructionError::SelfCheck("chosen faces share a vertex".into()));
    }
    for f in faces {
        if !(g.has_edge(f[0], f[1]) && g.has_edge(f[1], f[2]) && g.has_edge(f[0], f[2])) {
            return Err(ConstructionError::SelfCheck(format!("{f:?} is not a triangle")));
        }
        g = g.add_vertex_adjacent_to(f).expect("fresh vertex");
    }
    Ok(g)
}

/// Vertex layout of `R_p`: `x_1..x_q`, `y_1..y_p`, then the ring
/// `b_1, a_1, …, b_q, a_q (, b_{q+1})`.
struct RingLayout {
    q: usize,
    p: usize,
}

impl RingLayout {
    fn x(&self, i: usize) -> usize {
        (i - 1) % self.q
    }
    fn y(&self, j: usize) -> usize {
        self.q + (j - 1) % self.p
    }
    fn b(&self, i: usize) -> usize {
        self.q + self.p + 2 * (i - 1)
    }
    fn a(&self, i: usize) -> usize {
        self.q + self.p + 2 * (i - 1) + 1
    }
    fn n(&self) -> usize {
        2 * self.q + 2 * self.p
    }
}

fn star_ring_edges(q: usize, p: usize) -> (RingLayout, Vec<(usize, usize)>) {
    let l = RingLayout { q, p };
    let mut edges = Vec::new();
    for i in 1..=q {
        edges.push((l.x(i), l.x(i + 1)));
    }
    for j in 1..=p {
        edges.push((l.y(j), l.y(j + 1)));
    }
    // the ring has q + p vertices and starts right after the y cycle
    let base = q + p;
    for k in 0..q + p {
        edges.push((base + k, base + (k + 1) % (q + p)));
    }
    // b indices wrap modulo p (so b_{q+1} = b_1 when p = q); a_0 and a_{q+1}
    // do not exist when p = q + 1
    let b = |i: usize| l.b((i - 1) % p + 1);
    for i in 1..=q {
        edges.extend([(l.x(i), l.a(i)), (l.x(i), b(i)), (l.x(i), b(i + 1))]);
    }
    for j in 1..=p {
        edges.push((l.y(j), l.b(j)));
        let prev = if j == 1 { (p == q).then_some(q) } else { Some(j - 1) };
        if let Some(k) = prev {
            edges.push((l.y(j), l.a(k)));
        }
        if j <= q {
            edges.push((l.y(j), l.a(j)));
        }
    }
    (l, edges)
}

/// `R_p` with `p ∈ {q, q + 1}`.
pub fn star_ring(q: usize, p: usize) -> Result<Graph, ConstructionError> {
    need(q >= 3 && (p == q || p == q + 1), || format!("star ring needs q >= 3 and p in {{q, q+1}}, got ({q}, {p})"))?;
    let (l, edges) = star_ring_edges(q, p);
    build(l.n(), edges)
}

fn without(edges: Vec<(usize, usize)>, drop: &[(usize, usize)]) -> Result<Vec<(usize, usize)>, ConstructionError> {
    let norm = |(a, b): (usize, usize)| (a.min(b), a.max(b));
    let drop: BTreeSet<_> = drop.iter().copied().map(norm).collect();
    let kept: Vec<_> = edges.iter().copied().filter(|&e| !drop.contains(&norm(e))).collect();
    if kept.len() + drop.len() != edges.len() {
        return Err(ConstructionError::SelfCheck("edge to delete is missing".into()));
    }
    Ok(kept)
}

/// `R^1`: `R_q` with `y_2y_3`, `y_1y_q` replaced by a vertex on
/// `y_1, y_2, y_3, y_q`.
pub fn star_ring_odd1(q: usize) -> Result<Graph, ConstructionError> {
    need(q >= 4, || format!("odd star ring needs q >= 4, got {q}"))?;
    let (l, edges) = star_ring_edges(q, q);
    let mut edges = without(edges, &[(l.y(2), l.y(3)), (l.y(1), l.y(q))])?;
    let u = l.n();
    edges.extend([(u, l.y(2)), (u, l.y(3)), (u, l.y(1)), (u, l.y(q))]);
    build(u + 1, edges)
}

/// `R^2`: two new vertices, one on the `y` ring and one on the `x` ring.
pub fn star_ring_odd2(q: usize) -> Result<Graph, ConstructionError> {
    need(q >= 4, || format!("odd star ring needs q >= 4, got {q}"))?;
    let (l, edges) = star_ring_edges(q, q);
    let mut edges = without(
        edges,
        &[
            (l.y(2), l.y(3)),
            (l.y(1), l.y(q)),
            (l.x(2), l.x(3)),
            (l.x(1), l.x(q)),
            (l.b(1), l.a(q)),
        ],
    )?;
    let (u, v) = (l.n(), l.n() + 1);
    edges.extend([(u, l.y(2)), (u, l.y(3)), (v, l.x(2)), (v, l.x(3))]);
    edges.extend([(u, l.y(1)), (u, l.y(q)), (u, l.a(q)), (v, l.x(1)), (v, l.x(q)), (v, l.b(1))]);
    build(v + 1, edges)
}

/// `R_{q+1}` plus a vertex on `y_1, b_1, y_{q+1}, b_{q+1}`.
pub fn star_ring_apex(q: usize) -> Result<Graph, ConstructionError> {
    need(q >= 3, || format!("star ring apex variant needs q >= 3, got {q}"))?;
    let p = q + 1;
    let (l, mut edges) = star_ring_edges(q, p);
    let u = l.n();
    edges.extend([(u, l.y(1)), (u, l.b(1)), (u, l.y(p)), (u, l.b(p))]);
    build(u + 1, edges)
}

/// `K_{1,t}`-free graphs with `⌊(t−1)n/2⌋` edges (`2n − 1` for `t = 5`,
/// `n = 7`).
pub fn small_star(t: usize, n: usize) -> Result<Graph, ConstructionError> {
    need((3..=5).contains(&t) && n > t, || format!("small star family needs t in 3..=5 and n >= t+1, got ({t}, {n})"))?;
    match t {
        3 => Ok(Graph::cycle(n).expect("n >= 4")),
        4 => prism_star4(n),
        _ => matching_cycle_star5(n),
    }
}

/// Cubic (or almost cubic) planar graphs: the prism `C_{n/2} × K_2`, with one
/// rung subdivided for odd `n`; `K_4` with a subdivided edge at `n = 5`.
pub fn prism_star4(n: usize) -> Result<Graph, ConstructionError> {
    need(n >= 5, || format!("prism family needs n >= 5, got {n}"))?;
    if n == 5 {
        return build(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4)]);
    }
    let m = n / 2;
    let mut edges = Vec::new();
    for i in 0..m {
        edges.push((i, (i + 1) % m));
        edges.push((m + i, m + (i + 1) % m));
        if i > 0 || n.is_multiple_of(2) {
            edges.push((i, m + i));
        }
    }
    if n % 2 == 1 {
        edges.extend([(0, 2 * m), (m, 2 * m)]);
    }
    build(n, edges)
}

/// `2n` edges with `Δ = 4` for `n ≥ 8`; the octahedron at `n = 6`; the
/// octahedron with an edge replaced by a path of length two at `n = 7`.
pub fn matching_cycle_star5(n: usize) -> Result<Graph, ConstructionError> {
    need(n >= 6, || format!("K_(1,5)-free family needs n >= 6, got {n}"))?;
    let octahedron = Graph::cycle(4).expect("4-cycle").join(&Graph::empty(2));
    match n {
        6 => return Ok(octahedron),
        7 => {
            return Ok(octahedron
                .delete_edge(0, 1)
                .and_then(|g| g.add_vertex_adjacent_to(&[0, 1]))
                .expect("octahedron edge"))
        }
        _ => {}
    }
    // cycle u_1 … u_m w_m … w_1 with u_i = i − 1 and w_i = m + i − 1
    let m = n / 2;
    let u = |i: usize| i - 1;
    let w = |i: usize| m + i - 1;
    let mut edges = Vec::new();
    for i in 1..m {
        edges.push((u(i), u(i + 1)));
        edges.push((w(i), w(i + 1)));
    }
    edges.push((u(m), w(m)));
    edges.push((w(1), u(1)));
    // the zigzag w_1, u_2, w_2, u_3, …, w_{m−1}, u_m
    for i in 1..m {
        edges.push((w(i), u(i + 1)));
        if i + 1 < m {
            edges.push((u(i + 1), w(i + 1)));
        }
    }
    if n.is_multiple_of(2) {
        edges.extend([(u(1), u(m)), (u(1), w(m)), (w(1), w(m))]);
        build(n, edges)
    } else {
        let x = 2 * m;
        let mut edges = without(edges, &[(u(2), u(3))])?;
        edges.extend([(x, u(2)), (x, u(3)), (x, u(1)), (x, u(m)), (w(1), w(m)), (u(1), w(m))]);
        build(n, edges)
    }
}

/// Vertex 0 on top, ring `1..=5`, ring `6..=10`, vertex 11 at the bottom.
pub fn icosahedron() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((0, 1 + i));
        edges.push((1 + i, 1 + (i + 1) % 5));
        edges.push((1 + i, 6 + i));
        edges.push((1 + i, 6 + (i + 1) % 5));
        edges.push((6 + i, 6 + (i + 1) % 5));
        edges.push((6 + i, 11));
    }
    Graph::from_edges(12, edges).expect("icosahedron")
}

/// Two icosahedra joined by a perfect matching between the triangles
/// `{0, 1, 2}` of each copy.
pub fn icosahedron_pair() -> Graph {
    let ico = icosahedron();
    let pair = ico.disjoint_union(&ico);
    [(0, 12), (1, 13), (2, 14)]
        .into_iter()
        .fold(pair, |g, (a, b)| g.add_edge(a, b).expect("new edge"))
}
