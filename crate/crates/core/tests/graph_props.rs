mod common;

use planar_turan::{EditOp, Graph};
use proptest::prelude::*;
use rand::Rng;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let edges = (0..n)
                .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
                .zip(bits)
                .filter_map(|(e, keep)| keep.then_some(e));
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn join_counts(g in arb_graph(7), h in arb_graph(7)) {
        let j = g.join(&h);
        prop_assert_eq!(j.n(), g.n() + h.n());
        prop_assert_eq!(j.edge_count(), g.edge_count() + h.edge_count() + g.n() * h.n());
    }

    #[test]
    fn degree_profile_sums(g in arb_graph(12)) {
        let profile = g.degree_profile();
        prop_assert_eq!(profile.values().sum::<usize>(), g.n());
        prop_assert_eq!(profile.iter().map(|(d, c)| d * c).sum::<usize>(), 2 * g.edge_count());
    }

    #[test]
    fn edits_leave_input_alone(g in arb_graph(9), a in 0usize..9, b in 0usize..9) {
        prop_assume!(a != b && a < g.n() && b < g.n());
        let before = g.clone();
        let (added, deleted) = if g.has_edge(a, b) {
            (None, Some(g.delete_edge(a, b).unwrap()))
        } else {
            (Some(g.add_edge(a, b).unwrap()), None)
        };
        prop_assert_eq!(&g, &before);
        if let Some(d) = deleted {
            prop_assert_eq!(d.add_edge(a, b).unwrap(), g.clone());
        }
        if let Some(x) = added {
            prop_assert_eq!(x.delete_edge(a, b).unwrap(), g.clone());
        }
        let _ = g.edit(&EditOp::DeleteVertex(a));
        prop_assert_eq!(&g, &before);
    }

    #[test]
    fn graph6_round_trip(g in arb_graph(14)) {
        prop_assert_eq!(Graph::from_graph6(&g.to_graph6()).unwrap(), g);
    }
}

#[test]
fn canonical_code_invariant_under_permutation() {
    let mut rng = common::rng(1);
    let graphs: Vec<Graph> = (0..50)
        .map(|i| {
            let n = rng.gen_range(1..=12);
            if i % 2 == 0 {
                let p = rng.gen_range(0.1..0.7);
                common::random_graph(&mut rng, n, p)
            } else {
                let d = rng.gen_range(0..4);
                common::random_planar(&mut rng, n.max(4), d)
            }
        })
        .collect();
    for g in &graphs {
        let code = g.canonical_code();
        for _ in 0..100 {
            let perm = common::random_permutation(&mut rng, g.n());
            assert_eq!(g.relabel(&perm).canonical_code(), code, "{}", g.to_graph6());
        }
    }
}

#[test]
fn canonical_code_separates_census_classes() {
    // every census class is a distinct isomorphism type, so codes must differ
    for n in 4..=10 {
        let census = planar_turan::oracle::enumerate_triangulations(n).unwrap();
        let mut codes: Vec<_> = census.graphs().map(|g| g.canonical_code()).collect();
        codes.sort();
        codes.dedup();
        assert_eq!(codes.len(), census.len(), "n = {n}");
    }
}
