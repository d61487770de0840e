//! Published upper bounds for short cycles, thetas and `P_9`.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use super::{floor_bound, planar_max, FormulaError, TuranValue};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReferenceGraph {
    C4,
    C5,
    /// `C_4` plus a chord.
    Theta4,
    /// `C_5` plus a chord.
    Theta5,
    C6,
    P9,
}

impl ReferenceGraph {
    pub const ALL: [ReferenceGraph; 6] = [
        ReferenceGraph::C4,
        ReferenceGraph::C5,
        ReferenceGraph::Theta4,
        ReferenceGraph::Theta5,
        ReferenceGraph::C6,
        ReferenceGraph::P9,
    ];

    pub fn realize(self) -> Graph {
        let cycle = |k| Graph::cycle(k).expect("k >= 3");
        match self {
            ReferenceGraph::C4 => cycle(4),
            ReferenceGraph::C5 => cycle(5),
            ReferenceGraph::Theta4 => cycle(4).add_edge(0, 2).expect("chord"),
            ReferenceGraph::Theta5 => cycle(5).add_edge(0, 2).expect("chord"),
            ReferenceGraph::C6 => cycle(6),
            ReferenceGraph::P9 => Graph::path(9).expect("9 vertices"),
        }
    }

    /// Smallest `n` for which the bound is stated.
    pub fn min_n(self) -> usize {
        match self {
            ReferenceGraph::C4 | ReferenceGraph::Theta4 => 4,
            ReferenceGraph::C5 => 11,
            ReferenceGraph::Theta5 => 5,
            ReferenceGraph::C6 => 6,
            ReferenceGraph::P9 => 1,
        }
    }

    fn bound(self, n: usize) -> Ratio<i64> {
        let n = n as i64;
        let r = Ratio::new;
        match self {
            ReferenceGraph::C4 => r(15 * (n - 2), 7),
            ReferenceGraph::C5 => r(12 * n - 33, 5),
            ReferenceGraph::Theta4 => r(12 * (n - 2), 5),
            ReferenceGraph::Theta5 => r(5 * (n - 2), 2),
            ReferenceGraph::C6 => r(18 * (n - 2), 7),
            ReferenceGraph::P9 => r(9 * n, 4).max(r(5 * n - 8, 2)),
        }
    }
}

impl fmt::Display for ReferenceGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReferenceGraph::C4 => "c4",
            ReferenceGraph::C5 => "c5",
            ReferenceGraph::Theta4 => "theta4",
            ReferenceGraph::Theta5 => "theta5",
            ReferenceGraph::C6 => "c6",
            ReferenceGraph::P9 => "p9",
        })
    }
}

impl FromStr for ReferenceGraph {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ReferenceGraph::ALL
            .into_iter()
            .find(|g| g.to_string() == s.to_ascii_lowercase())
            .ok_or_else(|| format!("unknown reference graph '{s}'"))
    }
}

/// Upper bound only: `lo` is zero. The floored bound is also capped at the
/// trivial planar maximum, which is smaller for a few tiny `n`.
pub fn reference_bounds(g: ReferenceGraph, n: usize) -> Result<TuranValue, FormulaError> {
    if n < g.min_n() {
        return Err(FormulaError::BelowRange {
            pattern: g.to_string(),
            n,
            min: g.min_n(),
        });
    }
    let hi = floor_bound(g.bound(n)).min(planar_max(n));
    Ok(TuranValue::interval(0, hi, format!("reference:{g}")))
}
