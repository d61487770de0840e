//! Isomorphism classes of plane triangulations.
//!
//! The primary generator splits vertices (the inverse of edge contraction)
//! starting from `K_4`; every triangulation on at least five vertices has an
//! edge whose contraction leaves a simple triangulation, so all classes are
//! reached. An independent generator walks the diagonal-flip graph, which is
//! connected for each vertex count.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::sync::{Arc, OnceLock};

use rayon::prelude::*;

use super::cache::CensusCache;
use super::{OracleError, CENSUS_MAX, CENSUS_MIN, EXPENSIVE_FROM};
use crate::embedding::{planarity, PlaneEmbedding};
use crate::graph::{AdjMatrix, CanonicalCode, Graph};

/// All triangulations on `n` vertices, one canonical representative per
/// class, sorted by canonical code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangulationCensus {
    n: usize,
    classes: Vec<(CanonicalCode, Graph)>,
}

impl TriangulationCensus {
    pub(crate) fn from_codes(n: usize, codes: BTreeSet<CanonicalCode>) -> Self {
        let classes = codes
            .into_iter()
            .map(|c| {
                let g = c.to_graph();
                (c, g)
            })
            .collect();
        TriangulationCensus { n, classes }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn graphs(&self) -> impl Iterator<Item = &Graph> + '_ {
        self.classes.iter().map(|(_, g)| g)
    }

    pub fn codes(&self) -> impl Iterator<Item = &CanonicalCode> + '_ {
        self.classes.iter().map(|(c, _)| c)
    }

    pub fn get(&self, i: usize) -> Option<&Graph> {
        self.classes.get(i).map(|(_, g)| g)
    }

    pub fn contains(&self, code: &CanonicalCode) -> bool {
        self.classes.binary_search_by(|(c, _)| c.cmp(code)).is_ok()
    }
}

/// Census generation settings.
#[derive(Clone, Debug)]
pub struct CensusOptions {
    /// Permit the 13- and 14-vertex censuses.
    pub allow_expensive: bool,
    /// Persist and reuse censuses in this cache.
    pub cache: Option<CensusCache>,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            allow_expensive: expensive_enabled(),
            cache: None,
        }
    }
}

/// `PLANAR_TURAN_EXPENSIVE=1` unlocks the largest censuses by default.
pub fn expensive_enabled() -> bool {
    std::env::var("PLANAR_TURAN_EXPENSIVE").is_ok_and(|v| !v.is_empty() && v != "0")
}

static MEMO: [OnceLock<Arc<TriangulationCensus>>; CENSUS_MAX + 1] = [const { OnceLock::new() }; CENSUS_MAX + 1];

pub fn enumerate_triangulations(n: usize) -> Result<Arc<TriangulationCensus>, OracleError> {
    enumerate_triangulations_with(n, &CensusOptions::default())
}

pub fn enumerate_triangulations_with(n: usize, opts: &CensusOptions) -> Result<Arc<TriangulationCensus>, OracleError> {
    if !(CENSUS_MIN..=CENSUS_MAX).contains(&n) {
        return Err(OracleError::OutOfRange { n });
    }
    // a census already in memory costs nothing, expensive or not
    if let Some(c) = MEMO[n].get() {
        return Ok(c.clone());
    }
    if n >= EXPENSIVE_FROM && !opts.allow_expensive {
        return Err(OracleError::Expensive { n });
    }
    if let Some(cache) = &opts.cache {
        if let Some(c) = cache.load(n)? {
            return Ok(MEMO[n].get_or_init(|| Arc::new(c)).clone());
        }
    }
    let census = if n == CENSUS_MIN {
        TriangulationCensus::from_codes(n, BTreeSet::from([Graph::complete(4).canonical_code()]))
    } else {
        let parent = enumerate_triangulations_with(n - 1, opts)?;
        split_generation(&parent)
    };
    if let Some(cache) = &opts.cache {
        cache.store(&census)?;
    }
    Ok(MEMO[n].get_or_init(|| Arc::new(census)).clone())
}

/// One generation of vertex splitting.
pub fn split_generation(parent: &TriangulationCensus) -> TriangulationCensus {
    let codes: BTreeSet<CanonicalCode> = parent
        .classes
        .par_iter()
        .map(|(_, g)| children(g))
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    TriangulationCensus::from_codes(parent.n + 1, codes)
}

fn children(g: &Graph) -> BTreeSet<CanonicalCode> {
    let emb = planarity(g).embedding().expect("census members are planar");
    let n = g.n();
    let base = AdjMatrix::from_graph(g);
    let mut out = BTreeSet::new();
    for v in 0..n {
        let rot = emb.rotation(v);
        let d = rot.len();
        for i in 0..d {
            for j in i + 1..d {
                let mut m = grow(&base, n + 1);
                // v keeps rot[i..=j]; the new vertex n takes rot[j..=i+d]
                for (k, &c) in rot.iter().enumerate() {
                    if k < i || k > j {
                        m.clear(v, c);
                    }
                    if k <= i || k >= j {
                        m.set(n, c);
                    }
                }
                m.set(v, n);
                out.insert(m.to_graph().canonical_code());
            }
        }
    }
    out
}

fn grow(m: &AdjMatrix, n: usize) -> AdjMatrix {
    let mut out = AdjMatrix::new(n);
    for u in 0..m.n() {
        for w in crate::graph::bits::ones(m.row(u)) {
            if w > u {
                out.set(u, w);
            }
        }
    }
    out
}

/// Independent generator: breadth-first search of the diagonal-flip graph
/// from `2K_1 + C_{n−2}`.
pub fn enumerate_by_flips(n: usize) -> Result<TriangulationCensus, OracleError> {
    if !(CENSUS_MIN..=CENSUS_MAX).contains(&n) {
        return Err(OracleError::OutOfRange { n });
    }
    let start = if n == 4 {
        Graph::complete(4)
    } else {
        Graph::empty(2).join(&Graph::cycle(n - 2).expect("n >= 5"))
    };
    let mut seen = BTreeSet::from([start.canonical_code()]);
    let mut queue = VecDeque::from([start.canonical_form()]);
    while let Some(g) = queue.pop_front() {
        let emb = planarity(&g).embedding().expect("triangulation");
        for (u, v) in g.edges() {
            if let Some(h) = flip(&g, &emb, u, v) {
                let code = h.canonical_code();
                if seen.insert(code.clone()) {
                    queue.push_back(code.to_graph());
                }
            }
        }
    }
    Ok(TriangulationCensus::from_codes(n, seen))
}

fn flip(g: &Graph, emb: &PlaneEmbedding, u: usize, v: usize) -> Option<Graph> {
    let x = emb.next(v, u);
    let y = emb.next(u, v);
    if x == y || g.has_edge(x, y) {
        return None;
    }
    g.delete_edge(u, v).ok()?.add_edge(x, y).ok()
}

/// Counts per vertex count, for reporting.
pub fn census_counts(max_n: usize) -> Result<BTreeMap<usize, usize>, OracleError> {
    (CENSUS_MIN..=max_n)
        .map(|n| enumerate_triangulations(n).map(|c| (n, c.len())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::is_triangulation;

    #[test]
    fn small_counts() {
        let expected = [(4, 1), (5, 1), (6, 2), (7, 5), (8, 14), (9, 50)];
        for (n, count) in expected {
            let c = enumerate_triangulations(n).unwrap();
            assert_eq!(c.len(), count, "n = {n}");
            assert!(c.graphs().all(is_triangulation));
        }
    }

    #[test]
    fn flip_generator_agrees() {
        for n in 4..=10 {
            let a = enumerate_triangulations(n).unwrap();
            let b = enumerate_by_flips(n).unwrap();
            assert_eq!(*a, b, "n = {n}");
        }
    }

    #[test]
    fn range_and_gating() {
        assert_eq!(enumerate_triangulations(3), Err(OracleError::OutOfRange { n: 3 }));
        assert_eq!(enumerate_triangulations(15), Err(OracleError::OutOfRange { n: 15 }));
        let opts = CensusOptions {
            allow_expensive: false,
            cache: None,
        };
        assert_eq!(enumerate_triangulations_with(13, &opts), Err(OracleError::Expensive { n: 13 }));
    }
}
