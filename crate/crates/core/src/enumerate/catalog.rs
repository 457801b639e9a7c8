//! The 7-vertex complex 2-connected triangle-free catalogs.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{enumerate_graphs, FilterSpec};
use crate::canon::{canonical_form, CanonicalForm};
use crate::classifier::{fvector_of, FVector};
use crate::formats::write_graph6;
use crate::graph::Graph;
use crate::planarity::FaceCountError;

/// One isomorphism class with its representative and invariants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub canonical: CanonicalForm,
    pub graph6: String,
    pub edges: Vec<(usize, usize)>,
    pub fvector: FVector,
    pub bipartite: bool,
    pub degree_sequence: Vec<usize>,
}

impl CatalogEntry {
    pub fn graph(&self) -> Graph {
        self.canonical.to_graph()
    }
}

/// Builds the entry for a connected planar graph on at most 16 vertices.
pub fn catalog_entry(g: &Graph) -> Result<CatalogEntry, FaceCountError> {
    let fvector = fvector_of(g)?;
    let canonical = canonical_form(g).expect("catalog graphs are small");
    let rep = canonical.to_graph();
    Ok(CatalogEntry {
        canonical,
        graph6: write_graph6(&rep),
        edges: rep.edges().collect(),
        fvector,
        bipartite: rep.is_bipartite(),
        degree_sequence: rep.degree_sequence(),
    })
}

fn two_connected_triangle_free(f: FVector) -> Vec<CatalogEntry> {
    let filter = FilterSpec::default()
        .connected()
        .biconnected()
        .triangle_free()
        .planar()
        .exact_fvector(f);
    enumerate_graphs(f.f0 as usize, &filter)
        .expect("n = 7 is within exhaustive range")
        .iter()
        .map(|g| catalog_entry(g).expect("filter guarantees connected planar"))
        .collect()
}

/// All 2-connected triangle-free planar graphs with f = (7, 9, 4): the
/// minimal complex ones on seven vertices.
pub fn theorem5_catalog() -> Vec<CatalogEntry> {
    two_connected_triangle_free(FVector::new(7, 9, 4))
}

/// All 2-connected triangle-free planar graphs with f = (7, 10, 5), found by
/// direct enumeration rather than by extending the catalog.
pub fn theorem5_extension() -> Vec<CatalogEntry> {
    two_connected_triangle_free(FVector::new(7, 10, 5))
}

/// The catalog members obtained from `entry` by deleting one edge, as
/// `(catalog index, deleted edge)` pairs.
pub fn extension_parents(
    entry: &CatalogEntry,
    catalog: &[CatalogEntry],
) -> Vec<(usize, (usize, usize))> {
    let index: HashMap<CanonicalForm, usize> = catalog
        .iter()
        .enumerate()
        .map(|(i, c)| (c.canonical, i))
        .collect();
    let g = entry.graph();
    g.edges()
        .filter_map(|(u, v)| {
            let smaller = g.without_edge(u, v).expect("edge exists");
            let form = canonical_form(&smaller).expect("small");
            index.get(&form).map(|&i| (i, (u, v)))
        })
        .collect()
}
