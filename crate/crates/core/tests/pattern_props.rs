mod common;

use planar_turan::patterns::{contains_subgraph, find_pattern, is_pattern_free, PatternSpec};
use planar_turan::Graph;
use rand::Rng;

#[test]
fn specialized_checks_agree_with_generic_search() {
    let specs = common::small_specs();
    let patterns: Vec<Graph> = specs.iter().map(|p| p.realize()).collect();
    for g in common::hosts(4, 500) {
        for (spec, h) in specs.iter().zip(&patterns) {
            assert!(h.n() <= 8);
            let generic = contains_subgraph(&g, h).is_none();
            assert_eq!(is_pattern_free(&g, spec), generic, "{spec} in {}", g.to_graph6());
        }
    }
}

#[test]
fn matches_verify() {
    let specs = common::small_specs();
    for g in common::hosts(5, 200) {
        for spec in &specs {
            if let Some(m) = find_pattern(&g, spec) {
                let h = spec.realize();
                assert!(m.verify(&h, &g), "{spec} in {}", g.to_graph6());
                let mut used = m.map.clone();
                used.sort_unstable();
                used.dedup();
                assert_eq!(used.len(), h.n());
            }
        }
    }
}

#[test]
fn freeness_is_monotone_under_edge_deletion() {
    let mut rng = common::rng(6);
    let specs = common::small_specs();
    for g in common::hosts(7, 200) {
        let edges: Vec<_> = g.edges().collect();
        if edges.is_empty() {
            continue;
        }
        let (u, v) = edges[rng.gen_range(0..edges.len())];
        let sub = g.delete_edge(u, v).unwrap();
        for spec in &specs {
            if is_pattern_free(&g, spec) {
                assert!(is_pattern_free(&sub, spec), "{spec}: {} then {}", g.to_graph6(), sub.to_graph6());
            }
        }
    }
}

#[test]
fn star_freeness_is_a_degree_bound() {
    for g in common::hosts(8, 300) {
        for t in 1..=8 {
            let free = is_pattern_free(&g, &PatternSpec::Star(t));
            let bounded = g.degree_profile().keys().all(|&d| d < t);
            assert_eq!(free, bounded, "star {t} in {}", g.to_graph6());
        }
    }
}
