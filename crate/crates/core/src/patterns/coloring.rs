//! Exact chromatic number for small graphs.

use serde::{Deserialize, Serialize};

use super::PatternError;
use crate::graph::Graph;

pub const COLORING_LIMIT: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChromaticClass {
    Bipartite,
    ThreeChromatic,
    FourChromatic,
    FiveOrMore,
}

pub fn chromatic_classify(g: &Graph) -> Result<ChromaticClass, PatternError> {
    Ok(match chromatic_number(g)? {
        0..=2 => ChromaticClass::Bipartite,
        3 => ChromaticClass::ThreeChromatic,
        4 => ChromaticClass::FourChromatic,
        _ => ChromaticClass::FiveOrMore,
    })
}

pub fn chromatic_number(g: &Graph) -> Result<usize, PatternError> {
    if g.n() > COLORING_LIMIT {
        return Err(PatternError::TooLarge {
            n: g.n(),
            limit: COLORING_LIMIT,
        });
    }
    if g.n() == 0 {
        return Ok(0);
    }
    if g.edge_count() == 0 {
        return Ok(1);
    }
    Ok((2..=g.n()).find(|&k| is_colorable(g, k)).unwrap_or(g.n()))
}

/// Backtracking k-colouring, vertices taken in descending-degree order.
pub fn is_colorable(g: &Graph, k: usize) -> bool {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut color = vec![usize::MAX; g.n()];
    assign(g, k, &order, 0, &mut color, 0)
}

fn assign(g: &Graph, k: usize, order: &[usize], i: usize, color: &mut [usize], used: usize) -> bool {
    if i == order.len() {
        return true;
    }
    let v = order[i];
    // a fresh colour is interchangeable with any other unused one
    for c in 0..k.min(used + 1) {
        if g.neighbors(v).iter().all(|&w| color[w] != c) {
            color[v] = c;
            if assign(g, k, order, i + 1, color, used.max(c + 1)) {
                return true;
            }
        }
    }
    color[v] = usize::MAX;
    false
}
