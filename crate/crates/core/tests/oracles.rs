mod common;

use common::{connected_planar, cubic_roots, max_imag, planar_by_minors};
use realplanar::enumerate::enumerate_graphs;
use realplanar::planarity::embedded_face_count;
use realplanar::{
    classify, classify_graph, euler_polynomial, face_count, fvector_of, is_planar, FVector,
    FilterSpec, Graph,
};

#[test]
fn planar_class_counts() {
    // unlabeled planar graphs
    for (n, count) in [(1, 1), (2, 2), (3, 4), (4, 11), (5, 33), (6, 142), (7, 822)] {
        let got = enumerate_graphs(n, &FilterSpec::default().planar()).unwrap();
        assert_eq!(got.len(), count, "n = {n}");
    }
}

#[test]
fn connected_planar_class_counts() {
    let expected = [0, 1, 1, 2, 6, 20, 99, 646, 5974];
    for (n, graphs) in connected_planar().iter().enumerate() {
        assert_eq!(graphs.len(), expected[n], "n = {n}");
    }
}

#[test]
fn planarity_matches_minor_search() {
    for n in 5..=6 {
        for g in enumerate_graphs(n, &FilterSpec::default().connected()).unwrap() {
            assert_eq!(is_planar(&g).planar, planar_by_minors(&g), "{g:?}");
        }
    }
    // the dense end at seven vertices, where non-planarity lives
    for g in enumerate_graphs(7, &FilterSpec::default().connected().edge_range(12, 21)).unwrap() {
        assert_eq!(is_planar(&g).planar, planar_by_minors(&g), "{g:?}");
    }
}

#[test]
fn traced_faces_match_euler() {
    for graphs in connected_planar().iter().take(8) {
        for g in graphs {
            assert_eq!(
                embedded_face_count(g),
                Some(face_count(g).unwrap()),
                "{g:?}"
            );
        }
    }
}

#[test]
fn edge_caps_hold() {
    for graphs in connected_planar().iter().skip(3) {
        for g in graphs {
            let (n, m) = (g.order(), g.size());
            assert!(m <= 3 * n - 6, "{g:?}");
            if !g.has_triangle() {
                assert!(m <= 2 * n - 4, "{g:?}");
            }
        }
    }
}

#[test]
fn edge_count_prefilter_is_exact_for_dense_graphs() {
    // no graph above 3n-6 edges is planar, and the triangulations reach it
    for n in 3..=9 {
        let t = realplanar::generators::maximal_triangulation(n).unwrap();
        assert!(is_planar(&t).planar);
        for (u, v) in complement_edges(&t) {
            assert!(!is_planar(&t.with_edge(u, v).unwrap()).planar, "n = {n}");
        }
    }
}

fn complement_edges(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.order();
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !g.has_edge(u, v))
        .collect()
}

#[test]
fn adding_edges_never_makes_real() {
    for g in &connected_planar()[6] {
        let before = classify_graph(g).unwrap();
        for (u, v) in complement_edges(g) {
            let h = g.with_edge(u, v).unwrap();
            if !is_planar(&h).planar {
                continue;
            }
            let after = classify_graph(&h).unwrap();
            assert!(before.is_real() || !after.is_real(), "{g:?} + {u}-{v}");
            let (f, fh) = (fvector_of(g).unwrap(), fvector_of(&h).unwrap());
            assert!(fh.delta() < f.delta());
        }
    }
}

#[test]
fn numeric_roots_agree_on_arithmetic_grid() {
    for f0 in 1..=60u64 {
        for f1 in f0.saturating_sub(1)..=3 * f0 {
            let Some(f) = FVector::from_euler(f0, f1) else {
                continue;
            };
            if f.f2 == 0 {
                continue;
            }
            let roots = cubic_roots(f.f2 as f64, f.f1 as f64, f.f0 as f64, 2.0);
            let p = euler_polynomial(f);
            assert!(roots
                .iter()
                .any(|r| (r.re + 1.0).abs() < 1e-6 && r.im.abs() < 1e-6));
            match f.delta() {
                0 => {
                    let x0 = -((f.f1 - f.f2) as f64) / (2.0 * f.f2 as f64);
                    let close = roots.iter().filter(|r| (**r - x0).norm() < 1e-6).count();
                    assert!(close >= 2, "{f}: {roots:?}");
                }
                d => assert_eq!(
                    classify(f).is_real(),
                    max_imag(&roots) < 1e-9,
                    "{f} delta {d}"
                ),
            }
            let ours = p.roots().unwrap();
            for r in &ours.roots {
                let hit = roots
                    .iter()
                    .any(|o| (o.re - r.re).abs() < 1e-6 && (o.im - r.im).abs() < 1e-6);
                assert!(hit, "{f}: {ours:?} vs {roots:?}");
            }
        }
    }
}

#[test]
fn oracle_handles_triple_root() {
    let roots = cubic_roots(2.0, 6.0, 6.0, 2.0);
    for r in roots {
        assert!((r.re + 1.0).abs() < 1e-6 && r.im.abs() < 1e-6, "{roots:?}");
    }
}
