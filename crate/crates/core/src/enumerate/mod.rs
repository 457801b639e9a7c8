//! Exhaustive enumeration of small graphs up to isomorphism and of
//! connected lattice subgraphs up to translation.

mod abstract_graphs;
mod catalog;
mod lattice;

pub use abstract_graphs::{enumerate_graphs, EnumerateError, MAX_EXHAUSTIVE_ORDER};
pub use catalog::{
    catalog_entry, extension_parents, theorem5_catalog, theorem5_extension, CatalogEntry,
};
pub use lattice::{
    enumerate_lattice_subgraphs, for_each_lattice_subgraph, lattice_animals,
    par_map_lattice_subgraphs, spanning_lattice_subgraphs, LatticeError, LatticeGraph,
    LatticePoint, MAX_LATTICE_VERTICES,
};

use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classifier::{fvector_of, FVector};
use crate::graph::Graph;
use crate::planarity::is_planar;

/// Structural requirements applied to every enumerated graph.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilterSpec {
    pub connected: bool,
    pub biconnected: bool,
    pub triangle_free: bool,
    pub planar: bool,
    pub bipartite: bool,
    /// Inclusive edge-count range; `None` means unrestricted.
    pub edges: Option<(usize, usize)>,
    pub fvector: Option<FVector>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FilterError {
    #[error("unknown filter flag {0:?}")]
    UnknownFlag(String),
    #[error("edge range {lo}:{hi} is empty")]
    EmptyRange { lo: usize, hi: usize },
    #[error("edge range upper bound {hi} exceeds {max} possible edges")]
    RangeTooWide { hi: usize, max: usize },
}

impl FilterSpec {
    pub fn connected(mut self) -> Self {
        self.connected = true;
        self
    }

    pub fn biconnected(mut self) -> Self {
        self.biconnected = true;
        self
    }

    pub fn triangle_free(mut self) -> Self {
        self.triangle_free = true;
        self
    }

    pub fn planar(mut self) -> Self {
        self.planar = true;
        self
    }

    pub fn bipartite(mut self) -> Self {
        self.bipartite = true;
        self
    }

    pub fn edge_range(mut self, lo: usize, hi: usize) -> Self {
        self.edges = Some((lo, hi));
        self
    }

    pub fn exact_fvector(mut self, f: FVector) -> Self {
        self.fvector = Some(f);
        self
    }

    /// Checks `lo ≤ hi ≤ n(n−1)/2`.
    pub fn validate(&self, n: usize) -> Result<(), FilterError> {
        if let Some((lo, hi)) = self.edges {
            let max = n * n.saturating_sub(1) / 2;
            if lo > hi {
                return Err(FilterError::EmptyRange { lo, hi });
            }
            if hi > max {
                return Err(FilterError::RangeTooWide { hi, max });
            }
        }
        Ok(())
    }

    /// Largest edge count any accepted graph can have.
    pub(crate) fn edge_cap(&self) -> usize {
        let range = self.edges.map_or(usize::MAX, |(_, hi)| hi);
        let exact = self.fvector.map_or(usize::MAX, |f| f.f1 as usize);
        range.min(exact)
    }

    /// Conditions that survive taking induced subgraphs, so they may prune
    /// the vertex-by-vertex growth.
    pub(crate) fn hereditary_ok(&self, g: &Graph) -> bool {
        g.size() <= self.edge_cap()
            && !(self.triangle_free && g.has_triangle())
            && !(self.bipartite && !g.is_bipartite())
            && !(self.planar && !is_planar(g).planar)
    }

    pub fn accepts(&self, g: &Graph) -> bool {
        if let Some((lo, hi)) = self.edges {
            if !(lo..=hi).contains(&g.size()) {
                return false;
            }
        }
        if !self.hereditary_ok(g) {
            return false;
        }
        if self.connected && !g.is_connected() {
            return false;
        }
        if self.biconnected && !g.is_biconnected() {
            return false;
        }
        if let Some(f) = self.fvector {
            if fvector_of(g).ok() != Some(f) {
                return false;
            }
        }
        true
    }
}

/// Parses a comma list such as `connected,biconnected,triangle-free,planar`.
impl FromStr for FilterSpec {
    type Err = FilterError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut spec = FilterSpec::default();
        for flag in s.split(',').map(str::trim).filter(|f| !f.is_empty()) {
            match flag {
                "connected" => spec.connected = true,
                "biconnected" | "2-connected" => spec.biconnected = true,
                "triangle-free" | "trianglefree" => spec.triangle_free = true,
                "planar" => spec.planar = true,
                "bipartite" => spec.bipartite = true,
                other => return Err(FilterError::UnknownFlag(other.to_string())),
            }
        }
        Ok(spec)
    }
}
