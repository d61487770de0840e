//! Fixed-length cycles, paths on `t` vertices and disjoint cycle packing.
//!
//! The searches run on `u64` adjacency masks, so graphs here have at most 64
//! vertices. Neighbourhood graphs in this crate are far smaller than that.

use super::PatternError;
use crate::graph::Graph;

/// Vertex-count guard for the public exponential searches.
pub const SEARCH_GUARD: usize = 16;

pub(crate) fn masks(g: &Graph) -> Vec<u64> {
    assert!(g.n() <= 64, "mask searches need at most 64 vertices");
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect()
}

pub fn has_cycle_of_length(g: &Graph, k: usize) -> Result<bool, PatternError> {
    if k < 3 {
        return Err(PatternError::InvalidParameter(format!("cycle length {k} < 3")));
    }
    guard(g)?;
    Ok(cycle_in(&masks(g), full(g.n()), k).is_some())
}

pub fn has_path_on(g: &Graph, t: usize) -> Result<bool, PatternError> {
    if t < 1 {
        return Err(PatternError::InvalidParameter("path needs at least one vertex".into()));
    }
    guard(g)?;
    Ok(path_in(&masks(g), full(g.n()), t).is_some())
}

/// Whether `g` has `count` pairwise vertex-disjoint cycles.
pub fn has_disjoint_cycles(g: &Graph, count: usize) -> Result<bool, PatternError> {
    if g.n() > 64 {
        return Err(PatternError::TooLarge { n: g.n(), limit: 64 });
    }
    Ok(disjoint_cycles(&masks(g), full(g.n()), count))
}

pub fn has_three_disjoint_cycles(g: &Graph) -> Result<bool, PatternError> {
    has_disjoint_cycles(g, 3)
}

fn guard(g: &Graph) -> Result<(), PatternError> {
    if g.n() > SEARCH_GUARD {
        Err(PatternError::TooLarge {
            n: g.n(),
            limit: SEARCH_GUARD,
        })
    } else {
        Ok(())
    }
}

#[inline]
pub(crate) fn full(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A cycle on exactly `k` vertices inside `within`, listed in cyclic order.
/// The first vertex is the smallest on the cycle.
pub(crate) fn cycle_in(adj: &[u64], within: u64, k: usize) -> Option<Vec<usize>> {
    if (within.count_ones() as usize) < k {
        return None;
    }
    let mut rest = within;
    while rest != 0 {
        let s = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        // vertices larger than s only
        let allowed = within & !((1u64 << s) | ((1u64 << s) - 1));
        let mut path = vec![s];
        if extend_cycle(adj, allowed, k, &mut path, 1u64 << s) {
            return Some(path);
        }
    }
    None
}

fn extend_cycle(adj: &[u64], allowed: u64, k: usize, path: &mut Vec<usize>, used: u64) -> bool {
    let last = *path.last().unwrap();
    let s = path[0];
    if path.len() == k {
        return adj[last] >> s & 1 == 1;
    }
    let mut cand = adj[last] & allowed & !used;
    while cand != 0 {
        let w = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        path.push(w);
        if extend_cycle(adj, allowed, k, path, used | 1 << w) {
            return true;
        }
        path.pop();
    }
    false
}

/// A path on exactly `t` vertices inside `within`.
pub(crate) fn path_in(adj: &[u64], within: u64, t: usize) -> Option<Vec<usize>> {
    if (within.count_ones() as usize) < t {
        return None;
    }
    let mut rest = within;
    while rest != 0 {
        let s = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let mut path = vec![s];
        if extend_path(adj, within, t, &mut path, 1u64 << s) {
            return Some(path);
        }
    }
    None
}

fn extend_path(adj: &[u64], within: u64, t: usize, path: &mut Vec<usize>, used: u64) -> bool {
    if path.len() == t {
        return true;
    }
    let last = *path.last().unwrap();
    let mut cand = adj[last] & within & !used;
    while cand != 0 {
        let w = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        path.push(w);
        if extend_path(adj, within, t, path, used | 1 << w) {
            return true;
        }
        path.pop();
    }
    false
}

/// Iteratively strips vertices with fewer than two neighbours in `alive`.
fn two_core(adj: &[u64], mut alive: u64) -> u64 {
    loop {
        let mut strip = 0u64;
        let mut rest = alive;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if (adj[v] & alive).count_ones() < 2 {
                strip |= 1 << v;
            }
        }
        if strip == 0 {
            return alive;
        }
        alive &= !strip;
    }
}

/// Exact: branch on the lowest surviving vertex, which is either avoided or
/// lies on a chordless cycle of the packing (any cycle through it can be
/// shortened to a chordless one through it).
fn disjoint_cycles(adj: &[u64], alive: u64, need: usize) -> bool {
    if need == 0 {
        return true;
    }
    let alive = two_core(adj, alive);
    if (alive.count_ones() as usize) < 3 * need {
        return false;
    }
    let v = alive.trailing_zeros() as usize;
    let mut found = false;
    let mut path = vec![v];
    chordless_cycles(adj, alive, &mut path, &mut |cycle: u64| {
        found = disjoint_cycles(adj, alive & !cycle, need - 1);
        found
    });
    found || disjoint_cycles(adj, alive & !(1 << v), need)
}

/// Calls `visit` with the vertex set of each chordless cycle through
/// `path[0]` until it returns true.
fn chordless_cycles(adj: &[u64], alive: u64, path: &mut Vec<usize>, visit: &mut dyn FnMut(u64) -> bool) -> bool {
    let v = path[0];
    let last = *path.last().unwrap();
    let on_path = path.iter().fold(0u64, |m, &p| m | 1 << p);
    // a neighbour of an interior path vertex would create a chord
    let blocked = path[1..path.len().saturating_sub(1).max(1)]
        .iter()
        .fold(0u64, |m, &p| m | adj[p]);
    let mut cand = adj[last] & alive & !on_path & !blocked;
    while cand != 0 {
        let w = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        if path.len() >= 2 && adj[w] >> v & 1 == 1 {
            if visit(on_path | 1 << w) {
                return true;
            }
            continue;
        }
        path.push(w);
        let done = chordless_cycles(adj, alive, path, visit);
        path.pop();
        if done {
            return true;
        }
    }
    false
}
