//! Shared generators for the integration and acceptance tests.
#![allow(dead_code)]

use planar_turan::embedding::planarity;
use planar_turan::oracle::enumerate_triangulations;
use planar_turan::patterns::PatternSpec;
use planar_turan::Graph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `G(n, p)`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(n, edges).expect("simple")
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

/// A random census triangulation with `deletions` random edges removed,
/// randomly relabelled.
pub fn random_planar(rng: &mut impl Rng, n: usize, deletions: usize) -> Graph {
    let census = enumerate_triangulations(n).expect("census in range");
    let mut g = census.get(rng.gen_range(0..census.len())).expect("index").clone();
    for _ in 0..deletions {
        let edges: Vec<_> = g.edges().collect();
        let &(u, v) = edges.choose(rng).expect("edges left");
        g = g.delete_edge(u, v).expect("edge present");
    }
    g.relabel(&random_permutation(rng, n))
}

/// Stack `k` vertices into random faces of `K_4`.
pub fn stacked_triangulation(rng: &mut impl Rng, k: usize) -> Graph {
    let mut g = Graph::complete(4);
    for _ in 0..k {
        let faces = planarity(&g).embedding().expect("planar").faces().expect("connected");
        let f = faces.choose(rng).expect("faces");
        g = g.add_vertex_adjacent_to(f).expect("new vertex");
    }
    g
}

/// Generalized Petersen graph `GP(m, s)`: outer cycle, spokes, inner star.
pub fn petersen_family(m: usize, s: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..m {
        edges.push((i, (i + 1) % m));
        edges.push((i, m + i));
        edges.push((m + i, m + (i + s) % m));
    }
    Graph::from_edges(2 * m, edges).expect("simple")
}

/// Checks Euler's formula, `Σ i·f_i = 2e` and `4f − f_3 ≤ 2e` on the
/// embedding returned for `g`, and `{3: 2n − 4}` when `g` is a triangulation.
pub fn embedding_identities(g: &Graph) -> Result<(), String> {
    let emb = planarity(g).embedding().ok_or("not planar")?;
    if !emb.satisfies_euler() {
        return Err(format!("Euler fails for {}", g.to_graph6()));
    }
    if !g.is_connected() || g.edge_count() == 0 {
        return Ok(());
    }
    let fv = emb.face_vector().map_err(|e| e.to_string())?;
    let (n, e, f) = (g.n(), g.edge_count(), fv.total());
    if n + f != e + 2 {
        return Err(format!("n - e + f = {} for {}", n + f - e, g.to_graph6()));
    }
    if fv.weighted_sum() != 2 * e {
        return Err(format!("face degrees sum to {} != 2e for {}", fv.weighted_sum(), g.to_graph6()));
    }
    if fv.counts.keys().all(|&i| i >= 3) && 4 * f - fv.count(3) > 2 * e {
        return Err(format!("4f - f3 > 2e for {}", g.to_graph6()));
    }
    if n >= 4 && e == 3 * n - 6 && (fv.counts.len() != 1 || fv.count(3) != 2 * n - 4) {
        return Err(format!("triangulation with face vector {:?}", fv.counts));
    }
    Ok(())
}

/// 50 planar graphs for the classifier: platonic solids, wheels, `K_5^−`,
/// stacked triangulations, odd shapes that reach each condition, and random
/// planar graphs.
pub fn classifier_corpus() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    let apex = Graph::complete(1);
    out.push(("tetrahedron".into(), Graph::complete(4)));
    out.push(("cube".into(), petersen_family(4, 1)));
    out.push(("octahedron".into(), Graph::empty(2).join(&Graph::cycle(4).unwrap())));
    out.push(("dodecahedron".into(), petersen_family(10, 2)));
    out.push(("icosahedron".into(), planar_turan::constructions::icosahedron()));
    for k in 3..=10 {
        out.push((format!("wheel-{k}"), apex.join(&Graph::cycle(k).unwrap())));
    }
    out.push(("k5-minus".into(), Graph::complete(5).delete_edge(0, 1).unwrap()));
    let mut r = rng(8);
    for k in [1, 2, 3, 5, 8] {
        out.push((format!("stacked-{k}"), stacked_triangulation(&mut r, k)));
    }
    for t in [7, 8] {
        out.push((format!("star-{t}"), Graph::star(t).unwrap()));
    }
    out.push(("fan-4-3".into(), apex.join(&Graph::complete(2).copies(4).unwrap())));
    out.push(("prism".into(), petersen_family(3, 1)));
    out.push(("triangles-3".into(), Graph::complete(3).copies(3).unwrap()));
    out.push(("cycle-6".into(), Graph::cycle(6).unwrap()));
    out.push(("path-5".into(), Graph::path(5).unwrap()));
    // one 6-vertex, five 4-vertices
    out.push(("hub-6-over-path".into(), apex.join(&Graph::path(6).unwrap())));
    out.push(("grid-3x3".into(), grid(3, 3)));
    out.push(("two-apex-path".into(), Graph::empty(2).join(&Graph::path(5).unwrap())));
    while out.len() < 50 {
        let n = r.gen_range(5..=9);
        let d = r.gen_range(0..=n);
        let g = random_planar(&mut r, n, d);
        out.push((format!("random-{}", out.len()), g));
    }
    out
}

pub fn grid(a: usize, b: usize) -> Graph {
    let id = |i: usize, j: usize| i * b + j;
    let mut edges = Vec::new();
    for i in 0..a {
        for j in 0..b {
            if i + 1 < a {
                edges.push((id(i, j), id(i + 1, j)));
            }
            if j + 1 < b {
                edges.push((id(i, j), id(i, j + 1)));
            }
        }
    }
    Graph::from_edges(a * b, edges).expect("simple")
}

/// Every cone, wheel, star and fan pattern on at most 8 vertices, plus a few
/// explicit ones.
pub fn small_specs() -> Vec<PatternSpec> {
    let mut out = Vec::new();
    out.extend((3..=7).map(PatternSpec::Wheel));
    out.extend((1..=7).map(PatternSpec::Star));
    out.extend((1..=7).map(PatternSpec::ConePath));
    for t in 2..=7 {
        for r in 2..=7 {
            if t * (r - 1) < 8 {
                out.push(PatternSpec::Fan { t, r });
            }
        }
    }
    let p2 = Graph::path(2).unwrap();
    let p3 = Graph::path(3).unwrap();
    for base in [p2.disjoint_union(&p3), p3.disjoint_union(&p3), Graph::empty(2).disjoint_union(&p3)] {
        out.push(PatternSpec::ConeGraph(base));
    }
    out.push(PatternSpec::Explicit(Graph::complete(4)));
    out.push(PatternSpec::Explicit(Graph::cycle(5).unwrap()));
    out.push(PatternSpec::Explicit(Graph::complete(5).delete_edge(0, 1).unwrap()));
    out.push(PatternSpec::Explicit(petersen_family(3, 1)));
    out
}

pub fn hosts(seed: u64, count: usize) -> Vec<Graph> {
    let mut rng = rng(seed);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(1..=9);
            if i % 3 == 0 && n >= 4 {
                let d = rng.gen_range(0..=n);
                random_planar(&mut rng, n, d)
            } else {
                let p = rng.gen_range(0.15..0.85);
                random_graph(&mut rng, n, p)
            }
        })
        .collect()
}
