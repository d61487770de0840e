mod common;

use std::time::Instant;

use planar_turan::formulas::{classify_pattern, formula_value, reference_bounds, verify_verdict, ReferenceGraph};
use planar_turan::oracle::{exact_planar_turan, SearchBudget};
use planar_turan::patterns::PatternSpec;
use planar_turan::Graph;
use proptest::prelude::*;

#[test]
fn formula_matches_oracle_on_verified_window() {
    let mut cases: Vec<(PatternSpec, usize)> = Vec::new();
    cases.extend((5..=11).map(|n| (PatternSpec::Wheel(4), n)));
    cases.extend((6..=8).map(|n| (PatternSpec::Wheel(5), n)));
    cases.extend((7..=8).map(|n| (PatternSpec::Wheel(6), n)));
    for t in 3..=6 {
        cases.extend((t + 1..=9).map(|n| (PatternSpec::Star(t), n)));
    }
    cases.extend((5..=8).map(|n| (PatternSpec::Fan { t: 2, r: 3 }, n)));
    cases.extend((7..=8).map(|n| (PatternSpec::Fan { t: 3, r: 3 }, n)));
    for (p, n) in cases {
        let f = formula_value(&p, n).unwrap_or_else(|e| panic!("{p} at {n}: {e}"));
        let o = exact_planar_turan(n, &p, &SearchBudget::default()).unwrap();
        assert!(o.exact, "{p} at {n}: oracle {o}");
        assert!(f.contains(o.lo), "{p} at {n}: formula {f}, oracle {o}");
        if f.exact {
            assert_eq!(f.lo, o.lo, "{p} at {n}");
        }
    }
}

fn arb_pattern() -> impl Strategy<Value = PatternSpec> {
    prop_oneof![
        (3usize..12).prop_map(PatternSpec::Wheel),
        (1usize..12).prop_map(PatternSpec::Star),
        (2usize..5, 2usize..5).prop_map(|(t, r)| PatternSpec::Fan { t, r }),
        (1usize..10).prop_map(PatternSpec::ConePath),
        (1usize..5, 1usize..5).prop_map(|(a, b)| {
            PatternSpec::ConeGraph(Graph::path(a).unwrap().disjoint_union(&Graph::path(b).unwrap()))
        }),
    ]
}

proptest! {
    #[test]
    fn formula_intervals_are_ordered(p in arb_pattern(), n in 3usize..200) {
        if let Ok(v) = formula_value(&p, n) {
            prop_assert!(v.lo <= v.hi, "{} at {}: {}", p, n, v);
            prop_assert!(v.hi <= 3 * n - 6, "{} at {}: {}", p, n, v);
            prop_assert!(!v.exact || v.lo == v.hi);
        }
    }

    #[test]
    fn reference_intervals_are_ordered(i in 0usize..6, n in 3usize..500) {
        let g = ReferenceGraph::ALL[i];
        if let Ok(v) = reference_bounds(g, n) {
            prop_assert!(v.lo <= v.hi && v.hi <= 3 * n - 6);
        }
    }
}

#[test]
fn corpus_verdicts_verify() {
    let start = Instant::now();
    let mut covered = 0;
    for (name, h) in common::classifier_corpus() {
        for n in [h.n(), h.n() + 2, h.n() + 5] {
            let v = classify_pattern(&h, n).unwrap_or_else(|e| panic!("{name}: {e}"));
            if !v.is_covered() || v.min_n.is_some_and(|m| n < m) {
                continue;
            }
            covered += 1;
            assert!(verify_verdict(&v, &h, n).unwrap(), "{name} at n = {n}: {v:?}");
        }
    }
    assert!(covered >= 60, "only {covered} covered verdicts");
    assert!(start.elapsed().as_secs() < 120);
}

#[test]
fn reference_bounds_dominate_oracle() {
    for g in ReferenceGraph::ALL {
        let p = PatternSpec::Explicit(g.realize());
        for n in g.min_n().max(4)..=9 {
            let r = reference_bounds(g, n).unwrap();
            let o = exact_planar_turan(n, &p, &SearchBudget::default()).unwrap();
            assert!(r.hi >= o.lo, "{g} at {n}: bound {r}, oracle {o}");
        }
    }
}
