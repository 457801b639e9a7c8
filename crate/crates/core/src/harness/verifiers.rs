use std::collections::BTreeSet;

use serde_json::json;

use super::{Counterexample, ReportBuilder, TheoremId, TheoremReport, VerifyConfig};
use super::{DEFAULT_BOUND, DEFAULT_LATTICE_MAX};
use crate::classifier::{
    classify, classify_graph, delete_degree2_preserves_complex, fvector_of, Classification, FVector,
};
use crate::enumerate::{
    enumerate_graphs, extension_parents, par_map_lattice_subgraphs, theorem5_catalog,
    theorem5_extension, FilterSpec,
};
use crate::generators::{
    cycle, fig2, fig2_witness, grid, grid_fvector, maximal_triangulation, path, GridSpec,
};
use crate::graph::Graph;

fn verdict(real: bool) -> Classification {
    if real {
        Classification::Real
    } else {
        Classification::Complex
    }
}

/// Compares the classification of `g` against `expected`, recording a
/// counterexample on mismatch or if `g` is not connected planar.
fn expect_graph(b: &mut ReportBuilder, what: &str, g: &Graph, expected: Classification) {
    match classify_graph(g) {
        Ok(c) => b.check(c == expected, || {
            Counterexample::graph(format!("{what}: expected {expected}, got {c}"), g)
        }),
        Err(e) => b.fail(Counterexample::graph(format!("{what}: {e}"), g)),
    }
}

fn expect_fvector(b: &mut ReportBuilder, what: &str, f: FVector, expected: Classification) {
    let c = classify(f);
    b.check(c == expected, || {
        Counterexample::fvector(format!("{what}: expected {expected}, got {c}"), f)
    });
}

/// Trees are real from five vertices, cycles from six, square grids from
/// the 3×3 grid on.
pub fn verify_theorem1() -> TheoremReport {
    let mut b = ReportBuilder::new(
        TheoremId::Theorem1,
        "trees n = 1..50 (all trees for n <= 8), cycles n = 3..50, square grids n = 2..12",
    );
    for n in 1..=50u64 {
        let expected = verdict(n >= 5);
        expect_fvector(
            &mut b,
            &format!("tree on {n} vertices"),
            FVector::new(n, n - 1, 1),
            expected,
        );
        expect_graph(
            &mut b,
            &format!("path on {n} vertices"),
            &path(n as usize).unwrap(),
            expected,
        );
    }
    let mut tree_counts = Vec::new();
    for n in 1..=8usize {
        let trees = enumerate_graphs(
            n,
            &FilterSpec::default().connected().edge_range(n - 1, n - 1),
        )
        .expect("n <= 8");
        tree_counts.push(trees.len());
        for t in &trees {
            expect_graph(&mut b, &format!("tree on {n} vertices"), t, verdict(n >= 5));
        }
    }
    b.fact("tree_classes", json!(tree_counts));
    for n in 3..=50usize {
        expect_graph(
            &mut b,
            &format!("cycle on {n} vertices"),
            &cycle(n).unwrap(),
            verdict(n >= 6),
        );
    }
    for n in 2..=12usize {
        let spec = GridSpec::new(n, n).unwrap();
        let g = grid(spec).unwrap();
        expect_graph(&mut b, &format!("grid {n}x{n}"), &g, verdict(n >= 3));
        b.check(fvector_of(&g) == Ok(grid_fvector(spec)), || {
            Counterexample::graph(format!("grid {n}x{n}: f-vector formula mismatch"), &g)
        });
    }
    b.fact("tree_flip", 5);
    b.fact("cycle_flip", 6);
    b.fact("square_grid_flip", 3);
    b.finish()
}

/// The rectangular grids that are complex are exactly `G₁,₁..G₁,₄`, `G₂,₂`
/// and `G₂,₃`.
pub fn verify_theorem2() -> TheoremReport {
    let mut b = ReportBuilder::new(TheoremId::Theorem2, "grids G(m,n), 1 <= m <= n <= 12");
    let exceptions: BTreeSet<(usize, usize)> = [(1, 1), (1, 2), (1, 3), (1, 4), (2, 2), (2, 3)]
        .into_iter()
        .collect();
    let mut complex = Vec::new();
    let mut pairs = 0;
    for m in 1..=12 {
        for n in m..=12 {
            pairs += 1;
            let spec = GridSpec::new(m, n).unwrap();
            let f = grid_fvector(spec);
            let g = grid(spec).unwrap();
            b.check(fvector_of(&g) == Ok(f), || {
                Counterexample::graph(format!("G({m},{n}): formula f-vector {f} disagrees"), &g)
            });
            let expected = verdict(!exceptions.contains(&(m, n)));
            expect_fvector(&mut b, &format!("G({m},{n})"), f, expected);
            expect_graph(&mut b, &format!("G({m},{n})"), &g, expected);
            if !classify(f).is_real() {
                complex.push((m, n));
            }
        }
    }
    b.fact("pairs", pairs);
    b.fact("complex", json!(complex));
    b.finish()
}

/// `(f₀+2)² − 8(3f₀−4)` and `(f₀+2)² − 16(f₀−1)`: the worst-case margins at
/// the edge caps for general and triangle-free planar graphs.
fn margins(f0: u64) -> (i128, i128) {
    let s = (f0 as i128 + 2).pow(2);
    (s - 8 * (3 * f0 as i128 - 4), s - 16 * (f0 as i128 - 1))
}

/// Every planar graph with at least 18 vertices is real, and every
/// triangle-free one with at least 10.
pub fn verify_theorem3(config: &VerifyConfig) -> TheoremReport {
    let bound = config.bound.max(18);
    let mut b = ReportBuilder::new(
        TheoremId::Theorem3,
        format!("f0 = 18..={bound} at f1 = 3f0-6; f0 = 10..={bound} at f1 = 2f0-4; two witnesses"),
    );
    b.partial(config.bound < DEFAULT_BOUND);
    let mut general_eq = Vec::new();
    let mut tf_eq = Vec::new();
    for f0 in 10..=bound {
        let (general, tf) = margins(f0);
        if f0 >= 18 {
            b.check(general >= 0, || {
                Counterexample::fvector(
                    format!("f0 = {f0}: margin {general} < 0 at the triangulation cap"),
                    FVector::from_euler(f0, 3 * f0 - 6).unwrap(),
                )
            });
            expect_fvector(
                &mut b,
                "triangulation cap",
                FVector::from_euler(f0, 3 * f0 - 6).unwrap(),
                Classification::Real,
            );
            if general == 0 {
                general_eq.push(f0);
            }
        }
        b.check(tf >= 0, || {
            Counterexample::fvector(
                format!("f0 = {f0}: margin {tf} < 0 at the triangle-free cap"),
                FVector::from_euler(f0, 2 * f0 - 4).unwrap(),
            )
        });
        expect_fvector(
            &mut b,
            "triangle-free cap",
            FVector::from_euler(f0, 2 * f0 - 4).unwrap(),
            Classification::Real,
        );
        if tf == 0 {
            tf_eq.push(f0);
        }
    }
    b.check(general_eq == [18], || {
        Counterexample::note(format!("general equality at {general_eq:?}, expected [18]"))
    });
    b.check(tf_eq == [10], || {
        Counterexample::note(format!(
            "triangle-free equality at {tf_eq:?}, expected [10]"
        ))
    });
    b.fact("general_equality_at", json!(general_eq));
    b.fact("triangle_free_equality_at", json!(tf_eq));

    let t17 = maximal_triangulation(17).unwrap();
    expect_graph(
        &mut b,
        "17-vertex triangulation",
        &t17,
        Classification::Complex,
    );
    let w = fig2_witness();
    b.check(w.order() == 9 && !w.has_triangle(), || {
        Counterexample::graph("nine-vertex witness is not triangle-free on 9 vertices", &w)
    });
    expect_graph(
        &mut b,
        "nine-vertex triangle-free witness",
        &w,
        Classification::Complex,
    );
    b.finish()
}

/// Maximal triangulations are complex exactly for 3 ≤ f₀ ≤ 17; at 17
/// vertices complexity needs at least 44 edges.
pub fn verify_corollary() -> TheoremReport {
    let mut b = ReportBuilder::new(
        TheoremId::Corollary,
        "triangulations n = 3..30; 17-vertex f-vectors with 16 <= f1 <= 45",
    );
    for n in 3..=30u64 {
        let f = FVector::new(n, 3 * n - 6, 2 * n - 4);
        expect_fvector(
            &mut b,
            &format!("triangulation on {n} vertices"),
            f,
            verdict(n > 17),
        );
        let g = maximal_triangulation(n as usize).unwrap();
        b.check(fvector_of(&g) == Ok(f), || {
            Counterexample::graph(
                format!("generated triangulation on {n} vertices is not {f}"),
                &g,
            )
        });
    }
    let complex: Vec<u64> = (16..=45)
        .filter(|&f1| !classify(FVector::from_euler(17, f1).unwrap()).is_real())
        .collect();
    b.check(complex == [44, 45], || {
        Counterexample::note(format!(
            "complex 17-vertex edge counts {complex:?}, expected [44, 45]"
        ))
    });
    b.fact("complex_edge_counts_at_17", json!(complex));
    b.finish()
}

/// Deleting a degree-2 vertex from a complex planar graph on at least seven
/// vertices keeps it complex, when the deletion keeps it connected.
pub fn verify_lemma2() -> TheoremReport {
    let mut b = ReportBuilder::new(
        TheoremId::Lemma2,
        "connected planar complex graphs on 7 and 8 vertices, connectivity-preserving \
         degree-2 deletions; the 9 -> 8 -> 7 witness cascade",
    );
    let mut graphs = 0usize;
    let mut deletions = 0usize;
    let mut disconnecting = 0usize;
    for n in [7usize, 8] {
        for g in enumerate_graphs(n, &FilterSpec::default().connected().planar()).expect("n <= 8") {
            if classify_graph(&g) != Ok(Classification::Complex) {
                continue;
            }
            graphs += 1;
            for x in 0..n {
                if g.degree(x) != Ok(2) {
                    continue;
                }
                if !g.connected_without(x) {
                    disconnecting += 1;
                    continue;
                }
                deletions += 1;
                let r = delete_degree2_preserves_complex(&g, x);
                b.check(r == Ok(true), || {
                    Counterexample::graph(format!("deleting vertex {x}: {r:?}"), &g)
                });
            }
        }
    }
    b.fact("complex_graphs", graphs);
    b.fact("deletions_checked", deletions);
    b.fact("disconnecting_deletions_skipped", disconnecting);

    let w9 = fig2_witness();
    let r = delete_degree2_preserves_complex(&w9, fig2::C);
    b.check(r == Ok(true), || {
        Counterexample::graph(format!("9 -> 8 step: {r:?}"), &w9)
    });
    let w8 = w9.remove_vertex(fig2::C).unwrap();
    // ids above the removed vertex shift down by one
    let f_in_w8 = fig2::F - 1;
    let r = delete_degree2_preserves_complex(&w8, f_in_w8);
    b.check(r == Ok(true), || {
        Counterexample::graph(format!("8 -> 7 step: {r:?}"), &w8)
    });
    let w7 = w8.remove_vertex(f_in_w8).unwrap();
    expect_graph(&mut b, "cascade end", &w7, Classification::Complex);
    b.fact(
        "cascade_fvectors",
        json!([&w9, &w8, &w7]
            .iter()
            .map(|g| fvector_of(g).map(|f| f.to_string()).unwrap_or_default())
            .collect::<Vec<_>>()),
    );
    b.finish()
}

/// Connected lattice subgraphs with at least seven vertices are real.
///
/// Only 7..=9 vertices are swept; from 10 on every lattice subgraph is
/// bipartite, hence triangle-free, and the triangle-free bound applies.
pub fn verify_theorem4(config: &VerifyConfig) -> TheoremReport {
    let hi = config.lattice_max.max(7);
    let mut b = ReportBuilder::new(
        TheoremId::Theorem4,
        format!("connected lattice subgraphs with 7..={hi} vertices up to translation"),
    );
    b.partial(hi < DEFAULT_LATTICE_MAX);
    let swept = par_map_lattice_subgraphs(7, hi, |lg| {
        let g = lg.to_abstract();
        if !g.is_bipartite() {
            return Some(Counterexample::graph(
                "lattice subgraph is not bipartite",
                &g,
            ));
        }
        match classify_graph(&g) {
            Ok(Classification::Real) => None,
            Ok(Classification::Complex) => {
                Some(Counterexample::graph("complex lattice subgraph", &g))
            }
            Err(e) => Some(Counterexample::graph(format!("lattice subgraph: {e}"), &g)),
        }
    });
    match swept {
        Ok((count, bad)) => {
            b.fact("subgraphs_swept", count);
            for c in bad {
                b.fail(c);
            }
        }
        Err(e) => b.fail(Counterexample::note(format!("sweep failed: {e}"))),
    }
    let g24 = grid(GridSpec::new(2, 4).unwrap()).unwrap();
    expect_graph(&mut b, "G(2,4)", &g24, Classification::Real);
    // two squares sharing an edge, plus a pendant edge
    let squares = Graph::from_edge_list(
        7,
        &[
            (0, 1),
            (1, 2),
            (3, 4),
            (4, 5),
            (0, 3),
            (1, 4),
            (2, 5),
            (5, 6),
        ],
    )
    .unwrap();
    expect_graph(
        &mut b,
        "two squares and a pendant",
        &squares,
        Classification::Real,
    );
    b.fact(
        "reduction",
        "lattice subgraphs are bipartite, so triangle-free; f0 >= 10 is covered by the \
         triangle-free arithmetic scan",
    );
    b.finish()
}

/// The seven-vertex catalog of minimal complex 2-connected triangle-free
/// planar graphs, claimed to hold twelve classes.
pub fn verify_theorem5() -> TheoremReport {
    const CLAIMED: usize = 12;
    let mut b = ReportBuilder::new(
        TheoremId::Theorem5,
        "all graphs on 7 vertices, connected, 2-connected, triangle-free, planar, with \
         f = (7,9,4) and f = (7,10,5)",
    );
    let catalog = theorem5_catalog();
    let extension = theorem5_extension();
    if catalog.len() != CLAIMED {
        b.fail(Counterexample::note(format!(
            "catalog has {} isomorphism classes, claimed {CLAIMED}: {}",
            catalog.len(),
            catalog
                .iter()
                .map(|e| e.graph6.as_str())
                .collect::<Vec<_>>()
                .join(" ")
        )));
    }
    for e in &catalog {
        b.check(
            e.fvector == FVector::new(7, 9, 4) && !classify(e.fvector).is_real(),
            || {
                Counterexample::graph(
                    format!("catalog entry {} is not complex (7,9,4)", e.graph6),
                    &e.graph(),
                )
            },
        );
    }
    for e in &extension {
        b.check(
            e.fvector == FVector::new(7, 10, 5) && !classify(e.fvector).is_real(),
            || {
                Counterexample::graph(
                    format!("extension entry {} is not complex (7,10,5)", e.graph6),
                    &e.graph(),
                )
            },
        );
        b.check(!extension_parents(e, &catalog).is_empty(), || {
            Counterexample::graph(
                format!("extension entry {} has no catalog parent", e.graph6),
                &e.graph(),
            )
        });
    }
    b.fact("catalog_size", catalog.len());
    b.fact(
        "catalog_bipartite",
        catalog.iter().filter(|e| e.bipartite).count(),
    );
    b.fact("extension_size", extension.len());
    b.fact(
        "extension_bipartite",
        extension.iter().filter(|e| e.bipartite).count(),
    );
    b.fact(
        "catalog",
        json!(catalog.iter().map(|e| &e.graph6).collect::<Vec<_>>()),
    );
    b.fact(
        "extension",
        json!(extension.iter().map(|e| &e.graph6).collect::<Vec<_>>()),
    );
    b.finish()
}

/// All connected planar graphs on at most four vertices are complex; on
/// five they are real iff `f₂ = 1`, on six iff `f₂ ≤ 2`.
pub fn verify_small_levels() -> TheoremReport {
    let mut b = ReportBuilder::new(TheoremId::SmallLevels, "connected planar graphs, n = 1..6");
    let mut real_counts = Vec::new();
    let mut totals = Vec::new();
    for n in 1..=6usize {
        let graphs =
            enumerate_graphs(n, &FilterSpec::default().connected().planar()).expect("n <= 6");
        let mut real = 0;
        for g in &graphs {
            let f2 = match fvector_of(g) {
                Ok(f) => f.f2,
                Err(e) => {
                    b.fail(Counterexample::graph(format!("{e}"), g));
                    continue;
                }
            };
            let expected = verdict(match n {
                0..=4 => false,
                5 => f2 == 1,
                _ => f2 <= 2,
            });
            expect_graph(&mut b, &format!("n = {n}, f2 = {f2}"), g, expected);
            if expected.is_real() {
                real += 1;
            }
        }
        totals.push(graphs.len());
        real_counts.push(real);
    }
    b.fact("classes", json!(totals));
    b.fact("real_classes", json!(real_counts));
    b.finish()
}
