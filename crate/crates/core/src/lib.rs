//! Real and complex planar graphs.
//!
//! A connected planar graph with f-vector `(f₀, f₁, f₂)` has the Euler cubic
//! `p(x) = f₂x³ + f₁x² + f₀x + 2`. The graph is *real* when every root of
//! `p` is real, which happens exactly when `(f₀ − 2)² ≥ 8f₂`, and *complex*
//! otherwise. This crate computes that verdict, builds the graph families
//! and witnesses around it, enumerates small graphs and lattice subgraphs
//! exhaustively, and checks the known results about the bipartition over
//! explicit finite domains.

pub mod canon;
pub mod classifier;
pub mod enumerate;
pub mod formats;
pub mod generators;
pub mod graph;
pub mod harness;
pub mod planarity;

pub use canon::{canonical_form, CanonicalForm};
pub use classifier::{
    classify, classify_graph, delete_degree2_preserves_complex, euler_polynomial, fvector_of,
    Classification, EulerPolynomial, FVector, RootSet,
};
pub use enumerate::{CatalogEntry, FilterSpec, LatticeGraph};
pub use formats::{parse_edge_list, parse_graph6, write_edge_list, write_graph6};
pub use graph::{Graph, GraphError};
pub use harness::{Counterexample, Status, TheoremId, TheoremReport, VerifyConfig};
pub use planarity::{face_count, is_planar, PlanarityVerdict};
