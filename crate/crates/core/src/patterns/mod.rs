//! Forbidden patterns and H-freeness checks.
//!
//! Every cone pattern `K_1 + X` is present in `G` exactly when some vertex `v`
//! has `X ⊆ G[N(v)]`, so most checks reduce to a search inside neighbourhood
//! graphs. The generic matcher is always available as the semantic fallback.

mod coloring;
mod cycles;
mod matching;
mod subgraph;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

pub use coloring::{chromatic_classify, chromatic_number, is_colorable, ChromaticClass, COLORING_LIMIT};
pub use cycles::{has_cycle_of_length, has_disjoint_cycles, has_path_on, has_three_disjoint_cycles, SEARCH_GUARD};
pub use matching::{max_matching, maximum_matching};
pub use subgraph::{contains_subgraph, Match};

pub(crate) use cycles::{cycle_in, full, masks, path_in};
pub(crate) use subgraph::{find_embedding, occurs_in};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PatternError {
    #[error("invalid pattern parameter: {0}")]
    InvalidParameter(String),
    #[error("graph on {n} vertices exceeds the search limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("cannot parse pattern '{0}'; expected wheel:K, star:T, fan:T,R, conepath:T, cone:<graph6> or g6:<graph6>")]
    Parse(String),
}

/// A symbolic forbidden graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PatternSpec {
    /// `W_k = K_1 + C_k`, `k ≥ 3`.
    Wheel(usize),
    /// `K_{1,t}`, `t ≥ 1`.
    Star(usize),
    /// `K_1 + t·K_{r−1}`, `t ≥ 2`, `r ≥ 2`.
    Fan { t: usize, r: usize },
    /// `K_1 + P_t`, `t ≥ 1`.
    ConePath(usize),
    /// `K_1 + H` with `H` a linear forest.
    ConeGraph(Graph),
    Explicit(Graph),
}

impl PatternSpec {
    pub fn validate(&self) -> Result<(), PatternError> {
        let bad = |msg: String| Err(PatternError::InvalidParameter(msg));
        match self {
            PatternSpec::Wheel(k) if *k < 3 => bad(format!("wheel needs k >= 3, got {k}")),
            PatternSpec::Star(t) if *t < 1 => bad("star needs t >= 1".into()),
            PatternSpec::Fan { t, r } if *t < 2 || *r < 2 => bad(format!("fan needs t >= 2 and r >= 2, got ({t},{r})")),
            PatternSpec::ConePath(t) if *t < 1 => bad("cone path needs t >= 1".into()),
            PatternSpec::ConeGraph(h) if !is_linear_forest(h) => bad("cone base must be a disjoint union of paths".into()),
            _ => Ok(()),
        }
    }

    /// The pattern as an explicit graph. Cone patterns put the apex at 0 and
    /// the base on `1..`.
    pub fn realize(&self) -> Graph {
        let apex = Graph::complete(1);
        match self {
            PatternSpec::Wheel(k) => apex.join(&Graph::cycle(*k).expect("k >= 3")),
            PatternSpec::Star(t) => Graph::star(*t).expect("t >= 1"),
            PatternSpec::Fan { t, r } => apex.join(&Graph::complete(r - 1).copies(*t).expect("t >= 1")),
            PatternSpec::ConePath(t) => apex.join(&Graph::path(*t).expect("t >= 1")),
            PatternSpec::ConeGraph(h) => apex.join(h),
            PatternSpec::Explicit(h) => h.clone(),
        }
    }

    pub fn order(&self) -> usize {
        match self {
            PatternSpec::Wheel(k) => k + 1,
            PatternSpec::Star(t) => t + 1,
            PatternSpec::Fan { t, r } => 1 + t * (r - 1),
            PatternSpec::ConePath(t) => t + 1,
            PatternSpec::ConeGraph(h) => h.n() + 1,
            PatternSpec::Explicit(h) => h.n(),
        }
    }

    /// Base graph `X` of a cone pattern `K_1 + X`, if the pattern is one.
    pub fn cone_base(&self) -> Option<Graph> {
        match self {
            PatternSpec::Wheel(k) => Graph::cycle(*k).ok(),
            PatternSpec::Star(t) => Some(Graph::empty(*t)),
            PatternSpec::Fan { t, r } => Graph::complete(r - 1).copies(*t).ok(),
            PatternSpec::ConePath(t) => Graph::path(*t).ok(),
            PatternSpec::ConeGraph(h) => Some(h.clone()),
            PatternSpec::Explicit(_) => None,
        }
    }
}

impl fmt::Display for PatternSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternSpec::Wheel(k) => write!(f, "wheel:{k}"),
            PatternSpec::Star(t) => write!(f, "star:{t}"),
            PatternSpec::Fan { t, r } => write!(f, "fan:{t},{r}"),
            PatternSpec::ConePath(t) => write!(f, "conepath:{t}"),
            PatternSpec::ConeGraph(h) => write!(f, "cone:{}", h.to_graph6()),
            PatternSpec::Explicit(h) => write!(f, "g6:{}", h.to_graph6()),
        }
    }
}

impl Serialize for PatternSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PatternSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl FromStr for PatternSpec {
    type Err = PatternError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || PatternError::Parse(s.to_string());
        let (kind, arg) = s.trim().split_once(':').ok_or_else(err)?;
        let num = |a: &str| a.trim().parse::<usize>().map_err(|_| err());
        let spec = match kind.trim().to_ascii_lowercase().as_str() {
            "wheel" => PatternSpec::Wheel(num(arg)?),
            "star" => PatternSpec::Star(num(arg)?),
            "fan" => {
                let (t, r) = arg.split_once(',').ok_or_else(err)?;
                PatternSpec::Fan { t: num(t)?, r: num(r)? }
            }
            "conepath" => PatternSpec::ConePath(num(arg)?),
            "cone" => PatternSpec::ConeGraph(Graph::from_graph6(arg.trim()).map_err(|_| err())?),
            "g6" => PatternSpec::Explicit(Graph::from_graph6(arg.trim()).map_err(|_| err())?),
            _ => return Err(err()),
        };
        spec.validate()?;
        Ok(spec)
    }
}

pub fn is_linear_forest(h: &Graph) -> bool {
    h.max_degree() <= 2 && h.components().iter().all(|c| {
        let edges: usize = c.iter().map(|&v| h.degree(v)).sum::<usize>() / 2;
        edges + 1 == c.len()
    })
}

pub fn is_pattern_free(g: &Graph, p: &PatternSpec) -> bool {
    !pattern_present(g, p)
}

/// The lexicographically smallest occurrence of `realize(p)`, if any.
pub fn find_pattern(g: &Graph, p: &PatternSpec) -> Option<Match> {
    if !pattern_present(g, p) {
        return None;
    }
    let pattern = p.realize();
    let m = contains_subgraph(g, &pattern);
    debug_assert!(m.is_some(), "reduction and generic matcher disagree");
    m
}

/// Decision by neighbourhood reduction.
fn pattern_present(g: &Graph, p: &PatternSpec) -> bool {
    match p {
        PatternSpec::Star(t) => g.max_degree() >= *t,
        PatternSpec::Fan { t, r: 2 } => g.max_degree() >= *t,
        PatternSpec::Explicit(h) => occurs_in(g, h),
        _ => {
            let base = p.cone_base().expect("cone pattern");
            (0..g.n()).any(|v| g.degree(v) >= base.n() && base_in_neighborhood(g, v, p, &base))
        }
    }
}

fn base_in_neighborhood(g: &Graph, v: usize, p: &PatternSpec, base: &Graph) -> bool {
    let nb = g.neighborhood_subgraph(v).expect("vertex in range");
    if nb.n() > 64 {
        return occurs_in(&nb, base);
    }
    let adj = masks(&nb);
    let all = full(nb.n());
    match p {
        PatternSpec::Wheel(k) => cycle_in(&adj, all, *k).is_some(),
        PatternSpec::Fan { t, r: 3 } => max_matching(&nb) >= *t,
        PatternSpec::ConePath(t) => path_in(&adj, all, *t).is_some(),
        _ => occurs_in(&nb, base),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn icosahedron() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((0, 1 + i));
            edges.push((1 + i, 1 + (i + 1) % 5));
            edges.push((1 + i, 6 + i));
            edges.push((1 + i, 6 + (i + 1) % 5));
            edges.push((6 + i, 6 + (i + 1) % 5));
            edges.push((6 + i, 11));
        }
        Graph::from_edges(12, edges).unwrap()
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["wheel:4", "star:6", "fan:2,3", "conepath:5", "g6:C~", "cone:Bo"] {
            let p: PatternSpec = s.parse().unwrap();
            assert_eq!(p.to_string(), s);
        }
        assert!("wheel:2".parse::<PatternSpec>().is_err());
        assert!("fan:1,3".parse::<PatternSpec>().is_err());
        assert_eq!("cone:Bo".parse::<PatternSpec>().unwrap().order(), 4);
        assert!("cone:Bw".parse::<PatternSpec>().is_err());
        assert!("hexagon:3".parse::<PatternSpec>().is_err());
        assert!("star".parse::<PatternSpec>().is_err());
    }

    #[test]
    fn realized_sizes() {
        assert_eq!(PatternSpec::Wheel(5).realize().edge_count(), 10);
        let fan = PatternSpec::Fan { t: 2, r: 3 }.realize();
        assert_eq!((fan.n(), fan.edge_count()), (5, 6));
        assert_eq!(PatternSpec::ConePath(4).realize().edge_count(), 7);
        assert_eq!(PatternSpec::Fan { t: 3, r: 2 }.realize(), Graph::star(3).unwrap());
    }

    #[test]
    fn neighbourhood_reductions() {
        let ico = icosahedron();
        assert!(!is_pattern_free(&ico, &PatternSpec::Wheel(5)));
        assert!(is_pattern_free(&ico, &PatternSpec::Wheel(4)));
        assert!(is_pattern_free(&ico, &PatternSpec::Star(6)));
        assert!(is_pattern_free(&ico, &PatternSpec::Fan { t: 3, r: 3 }));
        assert!(!is_pattern_free(&ico, &PatternSpec::Fan { t: 2, r: 3 }));
        let lower = Graph::complete(2).join(&Graph::empty(14));
        assert!(is_pattern_free(&lower, &PatternSpec::Fan { t: 2, r: 3 }));
        let m = find_pattern(&ico, &PatternSpec::Wheel(5)).unwrap();
        assert_eq!(m.map[0], 0);
        assert!(m.verify(&PatternSpec::Wheel(5).realize(), &ico));
    }

    #[test]
    fn linear_forests() {
        assert!(is_linear_forest(&Graph::path(4).unwrap().disjoint_union(&Graph::empty(2))));
        assert!(!is_linear_forest(&Graph::cycle(4).unwrap()));
        assert!(!is_linear_forest(&Graph::star(3).unwrap()));
    }
}
