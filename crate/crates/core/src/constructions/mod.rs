//! Named extremal families. Every build re-checks planarity, vertex and edge
//! counts and the claimed pattern-freeness; a failed check is a bug and is
//! returned as [`ConstructionError::SelfCheck`].

mod families;
mod witnesses;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::embedding::{is_planar, is_triangulation};
use crate::graph::Graph;
use crate::oracle::{CensusCache, OracleError};
use crate::patterns::{is_pattern_free, PatternSpec};

pub use families::{
    apex_serpentine, double_serpentine, icosahedron, icosahedron_pair, matching_cycle_star5, pentagonal_stack,
    pentagonal_stack_plus, prism_star4, serpentine, small_star, small_wheel_free, stack_plus_faces, star_ring,
    star_ring_apex, star_ring_odd1, star_ring_odd2, two_apex_cycle, two_apex_lower,
};
pub use witnesses::{witness, WitnessId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("self-check failed: {0}")]
    SelfCheck(String),
    #[error("witness search failed: {0}")]
    Search(String),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// What a construction promises about its output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claims {
    pub n: usize,
    pub e: usize,
    pub triangulation: bool,
    pub max_degree: Option<usize>,
    pub degree_counts: BTreeMap<usize, usize>,
    pub free: Vec<PatternSpec>,
}

impl Claims {
    pub fn new(n: usize, e: usize) -> Self {
        Claims {
            n,
            e,
            triangulation: false,
            max_degree: None,
            degree_counts: BTreeMap::new(),
            free: Vec::new(),
        }
    }

    pub fn triangulation(mut self) -> Self {
        self.triangulation = true;
        self
    }

    pub fn max_degree(mut self, d: usize) -> Self {
        self.max_degree = Some(d);
        self
    }

    pub fn degree_count(mut self, d: usize, count: usize) -> Self {
        self.degree_counts.insert(d, count);
        self
    }

    pub fn free(mut self, patterns: Vec<PatternSpec>) -> Self {
        self.free.extend(patterns);
        self
    }

    pub fn check(&self, g: &Graph) -> Result<(), String> {
        if (g.n(), g.edge_count()) != (self.n, self.e) {
            return Err(format!(
                "expected {} vertices and {} edges, got {} and {}",
                self.n,
                self.e,
                g.n(),
                g.edge_count()
            ));
        }
        if !is_planar(g) {
            return Err("not planar".into());
        }
        if self.triangulation && !is_triangulation(g) {
            return Err("not a triangulation".into());
        }
        if let Some(d) = self.max_degree {
            if g.max_degree() > d {
                return Err(format!("maximum degree {} exceeds {d}", g.max_degree()));
            }
        }
        for (&d, &c) in &self.degree_counts {
            if g.count_degree(d) != c {
                return Err(format!("{} vertices of degree {d}, expected {c}", g.count_degree(d)));
            }
        }
        if let Some(p) = self.free.iter().find(|p| !is_pattern_free(g, p)) {
            return Err(format!("contains {p}"));
        }
        Ok(())
    }
}

/// A family member with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyId {
    /// `O_n`.
    Serpentine(usize),
    /// `O*_n`.
    DoubleSerpentine(usize),
    /// `K_1 + O_{n−1}`.
    ApexSerpentine(usize),
    /// `2K_1 + C_{n−2}`.
    TwoApexCycle(usize),
    /// `L_t`.
    PentagonalStack(usize),
    /// `L_t^i`.
    PentagonalStackPlus(usize, usize),
    /// `K_2 + (K_2 ∪ K_{n−4})`.
    SmallWheelFree(usize),
    /// `R_p` as `(q, p)`.
    StarRing(usize, usize),
    StarRingOdd1(usize),
    StarRingOdd2(usize),
    StarRingApex(usize),
    /// `K_{1,t}`-free graphs with the extremal edge count, `t ∈ {3, 4, 5}`.
    SmallStar(usize, usize),
    PrismStar4(usize),
    MatchingCycleStar5(usize),
    /// `K_2 + (n−2)K_1`.
    TwoApexLower(usize),
    Icosahedron,
    /// Two icosahedra joined by three independent edges.
    IcosahedronPair,
    Witness(WitnessId),
}

const NAMES: &[(&str, usize)] = &[
    ("serpentine", 1),
    ("double-serpentine", 1),
    ("apex-serpentine", 1),
    ("two-apex-cycle", 1),
    ("pentagonal-stack", 1),
    ("pentagonal-stack-plus", 2),
    ("small-wheel-free", 1),
    ("star-ring", 2),
    ("star-ring-odd1", 1),
    ("star-ring-odd2", 1),
    ("star-ring-apex", 1),
    ("small-star", 2),
    ("prism-star4", 1),
    ("matching-cycle-star5", 1),
    ("two-apex-lower", 1),
    ("icosahedron", 0),
    ("icosahedron-pair", 0),
];

impl FamilyId {
    /// Family names accepted by [`FamilyId::parse`], with their arity.
    pub fn names() -> impl Iterator<Item = (&'static str, usize)> {
        NAMES.iter().copied()
    }

    /// `name` plus comma-separated integer parameters, or a witness name.
    pub fn parse(name: &str, params: &[usize]) -> Result<FamilyId, ConstructionError> {
        let arity = NAMES.iter().find(|(n, _)| *n == name).map(|&(_, a)| a);
        let Some(arity) = arity else {
            let w = if params.is_empty() {
                name.parse::<WitnessId>()?
            } else if name == "j-sub" && params.len() == 1 {
                format!("j-sub:{}", params[0]).parse()?
            } else {
                return Err(ConstructionError::InvalidParameter(format!("unknown family '{name}'")));
            };
            return Ok(FamilyId::Witness(w));
        };
        if params.len() != arity {
            return Err(ConstructionError::InvalidParameter(format!(
                "{name} takes {arity} parameter(s), got {}",
                params.len()
            )));
        }
        let p = |i: usize| params[i];
        Ok(match name {
            "serpentine" => FamilyId::Serpentine(p(0)),
            "double-serpentine" => FamilyId::DoubleSerpentine(p(0)),
            "apex-serpentine" => FamilyId::ApexSerpentine(p(0)),
            "two-apex-cycle" => FamilyId::TwoApexCycle(p(0)),
            "pentagonal-stack" => FamilyId::PentagonalStack(p(0)),
            "pentagonal-stack-plus" => FamilyId::PentagonalStackPlus(p(0), p(1)),
            "small-wheel-free" => FamilyId::SmallWheelFree(p(0)),
            "star-ring" => FamilyId::StarRing(p(0), p(1)),
            "star-ring-odd1" => FamilyId::StarRingOdd1(p(0)),
            "star-ring-odd2" => FamilyId::StarRingOdd2(p(0)),
            "star-ring-apex" => FamilyId::StarRingApex(p(0)),
            "small-star" => FamilyId::SmallStar(p(0), p(1)),
            "prism-star4" => FamilyId::PrismStar4(p(0)),
            "matching-cycle-star5" => FamilyId::MatchingCycleStar5(p(0)),
            "two-apex-lower" => FamilyId::TwoApexLower(p(0)),
            "icosahedron" => FamilyId::Icosahedron,
            _ => FamilyId::IcosahedronPair,
        })
    }

    /// The promised properties. Only meaningful for parameters the builder
    /// accepts.
    pub fn claims(&self) -> Claims {
        let tri = |n: usize| Claims::new(n, 3 * n - 6).triangulation();
        match *self {
            FamilyId::Serpentine(n) => Claims::new(n, 2 * n - 3).max_degree(4),
            FamilyId::DoubleSerpentine(n) => tri(n).max_degree(6).free(vec![PatternSpec::Star(7)]),
            FamilyId::ApexSerpentine(n) => tri(n),
            FamilyId::TwoApexCycle(n) if n >= 6 => tri(n).free(vec![PatternSpec::Explicit(Graph::complete(4))]),
            FamilyId::TwoApexCycle(n) => tri(n),
            FamilyId::PentagonalStack(t) => tri(5 * t + 2).free(vec![PatternSpec::Explicit(Graph::complete(4)), PatternSpec::Wheel(4)]),
            FamilyId::PentagonalStackPlus(t, i) => tri(5 * t + 2 + i).free(vec![PatternSpec::Wheel(4)]),
            FamilyId::SmallWheelFree(n) => Claims::new(n, 3 * n - 7).free(vec![PatternSpec::Wheel(4)]),
            FamilyId::StarRing(q, p) => {
                let e = if p == q { 10 * q } else { 10 * q + 3 };
                Claims::new(2 * q + 2 * p, e).max_degree(5).free(vec![PatternSpec::Star(6)])
            }
            FamilyId::StarRingOdd1(q) => Claims::new(4 * q + 1, 10 * q + 2).max_degree(5).free(vec![PatternSpec::Star(6)]),
            FamilyId::StarRingOdd2(q) => Claims::new(4 * q + 2, 10 * q + 5).max_degree(5).free(vec![PatternSpec::Star(6)]),
            FamilyId::StarRingApex(q) => Claims::new(4 * q + 3, 10 * q + 7).max_degree(5).free(vec![PatternSpec::Star(6)]),
            FamilyId::SmallStar(t, n) => {
                let e = if (t, n) == (5, 7) { 13 } else { (t - 1) * n / 2 };
                Claims::new(n, e).free(vec![PatternSpec::Star(t)])
            }
            FamilyId::PrismStar4(n) => Claims::new(n, 3 * n / 2).free(vec![PatternSpec::Star(4)]),
            FamilyId::MatchingCycleStar5(n) => {
                Claims::new(n, if n == 7 { 13 } else { 2 * n }).free(vec![PatternSpec::Star(5)])
            }
            FamilyId::TwoApexLower(n) => Claims::new(n, 2 * n - 3).free(vec![PatternSpec::Fan { t: 2, r: 3 }]),
            FamilyId::Icosahedron => tri(12)
                .degree_count(5, 12)
                .free(vec![PatternSpec::Star(6), PatternSpec::Wheel(4)]),
            FamilyId::IcosahedronPair => Claims::new(24, 63).free(vec![PatternSpec::Fan { t: 3, r: 3 }]),
            FamilyId::Witness(w) => w.claims(),
        }
    }

    fn construct(&self, cache: Option<&CensusCache>) -> Result<Graph, ConstructionError> {
        match *self {
            FamilyId::Serpentine(n) => serpentine(n),
            FamilyId::DoubleSerpentine(n) => double_serpentine(n),
            FamilyId::ApexSerpentine(n) => apex_serpentine(n),
            FamilyId::TwoApexCycle(n) => two_apex_cycle(n),
            FamilyId::PentagonalStack(t) => pentagonal_stack(t),
            FamilyId::PentagonalStackPlus(t, i) => pentagonal_stack_plus(t, i),
            FamilyId::SmallWheelFree(n) => small_wheel_free(n),
            FamilyId::StarRing(q, p) => star_ring(q, p),
            FamilyId::StarRingOdd1(q) => star_ring_odd1(q),
            FamilyId::StarRingOdd2(q) => star_ring_odd2(q),
            FamilyId::StarRingApex(q) => star_ring_apex(q),
            FamilyId::SmallStar(t, n) => small_star(t, n),
            FamilyId::PrismStar4(n) => prism_star4(n),
            FamilyId::MatchingCycleStar5(n) => matching_cycle_star5(n),
            FamilyId::TwoApexLower(n) => two_apex_lower(n),
            FamilyId::Icosahedron => Ok(icosahedron()),
            FamilyId::IcosahedronPair => Ok(icosahedron_pair()),
            FamilyId::Witness(w) => witness(w, cache),
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (name, params): (&str, Vec<usize>) = match *self {
            FamilyId::Serpentine(n) => ("serpentine", vec![n]),
            FamilyId::DoubleSerpentine(n) => ("double-serpentine", vec![n]),
            FamilyId::ApexSerpentine(n) => ("apex-serpentine", vec![n]),
            FamilyId::TwoApexCycle(n) => ("two-apex-cycle", vec![n]),
            FamilyId::PentagonalStack(t) => ("pentagonal-stack", vec![t]),
            FamilyId::PentagonalStackPlus(t, i) => ("pentagonal-stack-plus", vec![t, i]),
            FamilyId::SmallWheelFree(n) => ("small-wheel-free", vec![n]),
            FamilyId::StarRing(q, p) => ("star-ring", vec![q, p]),
            FamilyId::StarRingOdd1(q) => ("star-ring-odd1", vec![q]),
            FamilyId::StarRingOdd2(q) => ("star-ring-odd2", vec![q]),
            FamilyId::StarRingApex(q) => ("star-ring-apex", vec![q]),
            FamilyId::SmallStar(t, n) => ("small-star", vec![t, n]),
            FamilyId::PrismStar4(n) => ("prism-star4", vec![n]),
            FamilyId::MatchingCycleStar5(n) => ("matching-cycle-star5", vec![n]),
            FamilyId::TwoApexLower(n) => ("two-apex-lower", vec![n]),
            FamilyId::Icosahedron => ("icosahedron", vec![]),
            FamilyId::IcosahedronPair => ("icosahedron-pair", vec![]),
            FamilyId::Witness(w) => return write!(f, "{w}"),
        };
        f.write_str(name)?;
        for (i, p) in params.iter().enumerate() {
            write!(f, "{}{p}", if i == 0 { ':' } else { ',' })?;
        }
        Ok(())
    }
}

impl FromStr for FamilyId {
    type Err = ConstructionError;

    /// `name`, `name:p` or `name:p1,p2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.starts_with("j-sub:") {
            return Ok(FamilyId::Witness(s.parse()?));
        }
        let (name, rest) = s.split_once(':').unwrap_or((s, ""));
        let params = rest
            .split(',')
            .filter(|p| !p.is_empty())
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| ConstructionError::InvalidParameter(format!("bad parameter '{p}' in '{s}'")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        FamilyId::parse(name, &params)
    }
}

/// Builds and self-checks a family member.
pub fn build(id: &FamilyId) -> Result<Graph, ConstructionError> {
    build_with_cache(id, None)
}

/// As [`build`], persisting searched witnesses in `cache`.
pub fn build_with_cache(id: &FamilyId, cache: Option<&CensusCache>) -> Result<Graph, ConstructionError> {
    let g = id.construct(cache)?;
    id.claims()
        .check(&g)
        .map_err(|e| ConstructionError::SelfCheck(format!("{id}: {e}")))?;
    Ok(g)
}
