//! Ground truth by exhaustive search over triangulation censuses.
//!
//! Every planar graph on `n ≥ 3` vertices is a spanning subgraph of some
//! triangulation on the same vertex set, so the largest `H`-free planar graph
//! is a triangulation minus as few edges as possible.

mod cache;
mod census;
mod occurrence;
mod search;

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::formulas::TuranValue;
use crate::graph::Graph;
use crate::patterns::{masks, PatternSpec};

pub use cache::{default_cache_dir, CensusCache, CACHE_ENV, CACHE_VERSION};
pub use census::{
    census_counts, enumerate_by_flips, enumerate_triangulations, enumerate_triangulations_with, expensive_enabled,
    split_generation, CensusOptions, TriangulationCensus,
};

use occurrence::{Edge, Finder};
use search::{greedy_deletions, DeletionSearch};

pub const CENSUS_MIN: usize = 4;
pub const CENSUS_MAX: usize = 14;
/// Censuses from this size on need an explicit opt-in.
pub const EXPENSIVE_FROM: usize = 13;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("n = {n} is outside the census range {CENSUS_MIN}..={CENSUS_MAX}")]
    OutOfRange { n: usize },
    #[error("the census for n = {n} is expensive; set PLANAR_TURAN_EXPENSIVE=1 or pass --expensive")]
    Expensive { n: usize },
    #[error("invalid pattern: {0}")]
    InvalidPattern(String),
    #[error("invalid degree profile: {0}")]
    InvalidProfile(String),
    #[error("invalid constraint: {0}")]
    InvalidConstraint(String),
    #[error("cache i/o: {0}")]
    Io(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    /// Deepest deletion level tried.
    pub max_deletions: usize,
    pub time_limit: Option<Duration>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_deletions: 16,
            time_limit: None,
        }
    }
}

impl SearchBudget {
    pub fn with_time_limit(limit: Duration) -> Self {
        SearchBudget {
            time_limit: Some(limit),
            ..Self::default()
        }
    }

    fn deadline(&self) -> Option<Instant> {
        self.time_limit.map(|t| Instant::now() + t)
    }
}

/// Result of an existence search. `None` is a verified nonexistence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome<T> {
    Found(T),
    None,
    BudgetExhausted,
}

impl<T> SearchOutcome<T> {
    pub fn found(self) -> Option<T> {
        match self {
            SearchOutcome::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }

    pub fn is_none(&self) -> bool {
        matches!(self, SearchOutcome::None)
    }
}

fn max_edges(n: usize) -> usize {
    3 * n - 6
}

fn census_for(n: usize) -> Result<std::sync::Arc<TriangulationCensus>, OracleError> {
    enumerate_triangulations_with(
        n,
        &CensusOptions {
            allow_expensive: expensive_enabled(),
            cache: None,
        },
    )
}

fn to_graph(adj: &[u64]) -> Graph {
    let edges = (0..adj.len()).flat_map(|a| {
        let row = adj[a];
        (a + 1..adj.len()).filter(move |&b| row >> b & 1 == 1).map(move |b| (a, b))
    });
    Graph::from_edges(adj.len(), edges).expect("masks describe a simple graph")
}

fn finders_for(patterns: &[PatternSpec]) -> Result<Vec<Finder>, OracleError> {
    patterns
        .iter()
        .map(|p| {
            p.validate().map_err(|e| OracleError::InvalidPattern(e.to_string()))?;
            Ok(Finder::new(p))
        })
        .collect()
}

/// Exact `ex_P(n, P)` over the census at `n`.
pub fn exact_planar_turan(n: usize, p: &PatternSpec, budget: &SearchBudget) -> Result<TuranValue, OracleError> {
    exact_planar_turan_with_witness(n, p, budget).map(|(v, _)| v)
}

/// As [`exact_planar_turan`], also returning an extremal graph when the
/// value is exact.
pub fn exact_planar_turan_with_witness(
    n: usize,
    p: &PatternSpec,
    budget: &SearchBudget,
) -> Result<(TuranValue, Option<Graph>), OracleError> {
    let finders = finders_for(std::slice::from_ref(p))?;
    let census = census_for(n)?;
    let top = max_edges(n);
    let deadline = budget.deadline();
    let cap = budget.max_deletions.min(top);
    for d in 0..=cap {
        let timed_out = AtomicBool::new(false);
        let hit = census.graphs().collect::<Vec<_>>().par_iter().find_map_first(|g| {
            let mut s = DeletionSearch::new(&finders, masks(g), deadline);
            let found = s.solve(d).map(|del| {
                let mut adj = masks(g);
                for (a, b) in del {
                    adj[a as usize] &= !(1 << b);
                    adj[b as usize] &= !(1 << a);
                }
                to_graph(&adj)
            });
            if s.timed_out {
                timed_out.store(true, Ordering::Relaxed);
            }
            found
        });
        if let Some(w) = hit {
            let prov = format!("oracle: exhaustive deletion search over {} triangulations", census.len());
            return Ok((TuranValue::exact(top - d, true, prov), Some(w)));
        }
        if timed_out.load(Ordering::Relaxed) {
            return Ok((exhausted(&finders, &census, top, d), None));
        }
    }
    Ok((exhausted(&finders, &census, top, cap + 1), None))
}

/// Interval after levels `0..d` were refuted: the greedy deletions give the
/// lower end.
fn exhausted(finders: &[Finder], census: &TriangulationCensus, top: usize, d: usize) -> TuranValue {
    let greedy = census
        .graphs()
        .map(|g| greedy_deletions(finders, masks(g)))
        .min()
        .unwrap_or(top);
    let hi = top.saturating_sub(d);
    let lo = top.saturating_sub(greedy).min(hi);
    if lo == hi {
        // greedy deletions already meet the refuted levels
        return TuranValue::exact(lo, true, format!("oracle: greedy deletions over {} triangulations", census.len()));
    }
    TuranValue::interval(lo, hi, "oracle: budget-exhausted".to_string())
}

/// Constraints for [`search_witness`]. Planarity is implicit.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WitnessConstraints {
    /// Patterns the witness must avoid.
    pub patterns: Vec<PatternSpec>,
    pub min_degree: Option<usize>,
    pub max_degree: Option<usize>,
    /// Exact number of vertices for each listed degree.
    pub degree_counts: BTreeMap<usize, usize>,
}

impl WitnessConstraints {
    pub fn avoiding(patterns: Vec<PatternSpec>) -> Self {
        WitnessConstraints {
            patterns,
            ..Self::default()
        }
    }

    /// Full re-check of a candidate graph.
    pub fn check(&self, g: &Graph) -> bool {
        crate::embedding::is_planar(g)
            && self.patterns.iter().all(|p| crate::patterns::is_pattern_free(g, p))
            && self.min_degree.is_none_or(|m| g.n() == 0 || g.min_degree() >= m)
            && self.max_degree.is_none_or(|m| g.max_degree() <= m)
            && self.degree_counts.iter().all(|(&d, &c)| g.count_degree(d) == c)
    }

    fn degrees_ok(&self, deg: &[usize]) -> bool {
        self.min_degree.is_none_or(|m| deg.iter().all(|&x| x >= m))
            && self.max_degree.is_none_or(|m| deg.iter().all(|&x| x <= m))
            && self
                .degree_counts
                .iter()
                .all(|(&d, &c)| deg.iter().filter(|&&x| x == d).count() == c)
    }
}

/// A planar graph with `n` vertices and `e` edges satisfying `c`, found by
/// scanning census triangulations minus `3n−6−e` edges.
pub fn search_witness(
    n: usize,
    e: usize,
    c: &WitnessConstraints,
    budget: &SearchBudget,
) -> Result<SearchOutcome<Graph>, OracleError> {
    if !(CENSUS_MIN..=CENSUS_MAX).contains(&n) {
        return Err(OracleError::OutOfRange { n });
    }
    if e > max_edges(n) {
        return Err(OracleError::InvalidConstraint(format!(
            "{e} edges exceed 3n-6 = {} for n = {n}",
            max_edges(n)
        )));
    }
    if c.degree_counts.values().sum::<usize>() > n {
        return Err(OracleError::InvalidConstraint("degree counts exceed n".into()));
    }
    let mut finders = finders_for(&c.patterns)?;
    if let Some(m) = c.max_degree {
        finders.push(Finder::Star(m + 1));
    }
    let d = max_edges(n) - e;
    if d > budget.max_deletions {
        return Ok(SearchOutcome::BudgetExhausted);
    }
    let census = census_for(n)?;
    let deadline = budget.deadline();
    let timed_out = AtomicBool::new(false);
    let graphs: Vec<&Graph> = census.graphs().collect();
    let hit = graphs.par_iter().find_map_first(|g| {
        let mut s = DeletionSearch::new(&finders, masks(g), deadline);
        let mut found = None;
        s.leaves(d, &mut Vec::new(), &mut |del, adj| {
            let mut adj = adj.to_vec();
            if extend(&mut adj, d - del.len(), (0, 0), c, deadline) {
                found = Some(to_graph(&adj));
                true
            } else {
                false
            }
        });
        if s.timed_out {
            timed_out.store(true, Ordering::Relaxed);
        }
        found
    });
    Ok(match hit {
        Some(g) => {
            debug_assert!(c.check(&g) && g.edge_count() == e);
            SearchOutcome::Found(g)
        }
        None if timed_out.load(Ordering::Relaxed) => SearchOutcome::BudgetExhausted,
        None => SearchOutcome::None,
    })
}

/// Deletes `more` further edges, each lexicographically after `after`, so
/// that the degree constraints hold. Leaves `adj` as the witness on success.
fn extend(adj: &mut [u64], more: usize, after: Edge, c: &WitnessConstraints, deadline: Option<Instant>) -> bool {
    let n = adj.len();
    if more == 0 {
        let deg: Vec<usize> = adj.iter().map(|r| r.count_ones() as usize).collect();
        return c.degrees_ok(&deg);
    }
    if deadline.is_some_and(|dl| Instant::now() >= dl) {
        return false;
    }
    let min = c.min_degree.unwrap_or(0);
    for a in after.0 as usize..n {
        let start = if a == after.0 as usize { after.1 as usize + 1 } else { a + 1 };
        for b in start..n {
            if adj[a] >> b & 1 == 0 {
                continue;
            }
            if (adj[a].count_ones() as usize) <= min || (adj[b].count_ones() as usize) <= min {
                continue;
            }
            adj[a] &= !(1 << b);
            adj[b] &= !(1 << a);
            if extend(adj, more - 1, (a as u8, b as u8), c, deadline) {
                return true;
            }
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
    }
    false
}

/// A planar graph on `n` vertices with exactly `profile[d]` vertices of
/// degree `d`, or a verified nonexistence.
pub fn exists_planar_with_degree_profile(
    n: usize,
    profile: &BTreeMap<usize, usize>,
) -> Result<SearchOutcome<Graph>, OracleError> {
    if !(CENSUS_MIN..=CENSUS_MAX).contains(&n) {
        return Err(OracleError::OutOfRange { n });
    }
    let count: usize = profile.values().sum();
    if count != n {
        return Err(OracleError::InvalidProfile(format!("profile covers {count} vertices, expected {n}")));
    }
    let sum: usize = profile.iter().map(|(d, c)| d * c).sum();
    if sum % 2 == 1 {
        return Err(OracleError::InvalidProfile(format!("degree sum {sum} is odd")));
    }
    if sum / 2 > max_edges(n) {
        return Err(OracleError::InvalidProfile(format!(
            "{} edges exceed 3n-6 = {}",
            sum / 2,
            max_edges(n)
        )));
    }
    let mut target: Vec<usize> = profile.iter().flat_map(|(&d, &c)| std::iter::repeat_n(d, c)).collect();
    target.sort_unstable_by(|a, b| b.cmp(a));
    let d = max_edges(n) - sum / 2;
    let census = census_for(n)?;
    let graphs: Vec<&Graph> = census.graphs().collect();
    let hit = graphs.par_iter().find_map_first(|g| {
        let mut adj = masks(g);
        drop_to_profile(&mut adj, d, (0, 0), &target).then(|| to_graph(&adj))
    });
    Ok(match hit {
        Some(g) => SearchOutcome::Found(g),
        None => SearchOutcome::None,
    })
}

fn dominates(adj: &[u64], target: &[usize]) -> bool {
    let mut deg: Vec<usize> = adj.iter().map(|r| r.count_ones() as usize).collect();
    deg.sort_unstable_by(|a, b| b.cmp(a));
    deg.iter().zip(target).all(|(a, b)| a >= b)
}

fn drop_to_profile(adj: &mut [u64], more: usize, after: Edge, target: &[usize]) -> bool {
    if !dominates(adj, target) {
        return false;
    }
    if more == 0 {
        let mut deg: Vec<usize> = adj.iter().map(|r| r.count_ones() as usize).collect();
        deg.sort_unstable_by(|a, b| b.cmp(a));
        return deg == target;
    }
    let n = adj.len();
    let floor = *target.last().unwrap_or(&0);
    for a in after.0 as usize..n {
        let start = if a == after.0 as usize { after.1 as usize + 1 } else { a + 1 };
        for b in start..n {
            if adj[a] >> b & 1 == 0 {
                continue;
            }
            if (adj[a].count_ones() as usize) <= floor || (adj[b].count_ones() as usize) <= floor {
                continue;
            }
            adj[a] &= !(1 << b);
            adj[b] &= !(1 << a);
            if drop_to_profile(adj, more - 1, (a as u8, b as u8), target) {
                return true;
            }
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
    }
    false
}

/// Whether some triangulation on `n` vertices has maximum degree at most `m`.
pub fn triangulation_with_max_degree(n: usize, m: usize) -> Result<SearchOutcome<Graph>, OracleError> {
    let census = census_for(n)?;
    let found = census.graphs().find(|g| g.max_degree() <= m).cloned();
    Ok(match found {
        Some(g) => SearchOutcome::Found(g),
        None => SearchOutcome::None,
    })
}
