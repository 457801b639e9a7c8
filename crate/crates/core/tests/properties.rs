use proptest::prelude::*;
use proptest::sample::subsequence;

use realplanar::{
    canonical_form, classify, euler_polynomial, face_count, is_planar, parse_edge_list,
    parse_graph6, write_edge_list, write_graph6, FVector, Graph,
};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let len = pairs.len();
        subsequence(pairs, 0..=len).prop_map(move |edges| Graph::from_edge_list(n, &edges).unwrap())
    })
}

fn relabeled(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let perm = Just((0..g.order()).collect::<Vec<_>>()).prop_shuffle();
        (Just(g), perm)
    })
}

/// Euler-consistent f-vectors of connected planar shape.
fn euler_fvector() -> impl Strategy<Value = FVector> {
    (3u64..5_000)
        .prop_flat_map(|f0| (Just(f0), f0 - 1..=3 * f0 - 6))
        .prop_map(|(f0, f1)| FVector::from_euler(f0, f1).unwrap())
}

proptest! {
    #[test]
    fn canonical_form_ignores_labels((g, perm) in relabeled(12)) {
        let h = g.permute(&perm);
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
    }

    #[test]
    fn canonical_form_separates_edge_counts(g in graph(9), h in graph(9)) {
        if g.order() != h.order() || g.size() != h.size() || g.degree_sequence() != h.degree_sequence() {
            prop_assert_ne!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        }
    }

    #[test]
    fn canonical_representative_is_isomorphic(g in graph(10)) {
        let c = canonical_form(&g).unwrap();
        let rep = c.to_graph();
        prop_assert_eq!(rep.degree_sequence(), g.degree_sequence());
        prop_assert_eq!(canonical_form(&rep).unwrap(), c);
    }

    #[test]
    fn handshake(g in graph(40)) {
        let total: usize = (0..g.order()).map(|v| g.degree(v).unwrap()).sum();
        prop_assert_eq!(total, 2 * g.size());
    }

    #[test]
    fn removing_a_vertex_drops_its_edges(g in graph(20), pick in any::<prop::sample::Index>()) {
        let x = pick.index(g.order());
        let h = g.remove_vertex(x).unwrap();
        prop_assert_eq!(h.order(), g.order() - 1);
        prop_assert_eq!(h.size(), g.size() - g.degree(x).unwrap());
    }

    #[test]
    fn graph6_round_trip(g in graph(70)) {
        prop_assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip(g in graph(30)) {
        prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn planar_graphs_respect_the_edge_cap(g in graph(11)) {
        if g.order() >= 3 && is_planar(&g).planar {
            prop_assert!(g.size() <= 3 * g.order() - 6);
        }
    }

    #[test]
    fn planarity_is_hereditary(g in graph(10), pick in any::<prop::sample::Index>()) {
        if is_planar(&g).planar && g.size() > 0 {
            let (u, v) = g.edges().nth(pick.index(g.size())).unwrap();
            prop_assert!(is_planar(&g.without_edge(u, v).unwrap()).planar);
        }
    }

    #[test]
    fn face_count_obeys_euler(g in graph(12)) {
        if let Ok(f2) = face_count(&g) {
            prop_assert_eq!(g.order() + f2, g.size() + 2);
        }
    }

    #[test]
    fn cubic_factors_through_minus_one(f in euler_fvector()) {
        let p = euler_polynomial(f);
        prop_assert_eq!(p.eval(-1), 0);
        let (a, b) = (f.f2 as i128, f.f1 as i128 - f.f2 as i128);
        // (x + 1)(a x² + b x + 2), multiplied out by hand
        prop_assert_eq!(p.coefficients, [a, a + b, b + 2, 2]);
    }

    #[test]
    fn both_discriminant_forms_agree(f in euler_fvector()) {
        let vertex_form = (f.f0 as i128 - 2).pow(2) - 8 * f.f2 as i128;
        let edge_form = (f.f0 as i128 + 2).pow(2) - 8 * (f.f1 as i128 + 2);
        prop_assert_eq!(vertex_form.signum(), edge_form.signum());
        prop_assert_eq!(classify(f).is_real(), vertex_form >= 0);
    }

    #[test]
    fn an_extra_edge_lowers_delta(f in euler_fvector()) {
        if f.f1 < 3 * f.f0 - 6 {
            let g = FVector::from_euler(f.f0, f.f1 + 1).unwrap();
            prop_assert!(g.delta() < f.delta());
            prop_assert!(classify(f).is_real() || !classify(g).is_real());
        }
    }
}
