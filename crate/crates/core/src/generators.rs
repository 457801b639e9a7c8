//! Named graph families and the fixed witness graphs.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classifier::FVector;
use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeneratorError {
    #[error("{family} needs at least {min} vertices, got {n}")]
    TooSmall {
        family: &'static str,
        min: usize,
        n: usize,
    },
    #[error("grid dimensions must be positive, got {m}x{n}")]
    EmptyGrid { m: usize, n: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn at_least(family: &'static str, min: usize, n: usize) -> Result<(), GeneratorError> {
    if n < min {
        Err(GeneratorError::TooSmall { family, min, n })
    } else {
        Ok(())
    }
}

pub fn path(n: usize) -> Result<Graph, GeneratorError> {
    at_least("path", 1, n)?;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(Graph::from_edge_list(n, &edges)?)
}

pub fn cycle(n: usize) -> Result<Graph, GeneratorError> {
    at_least("cycle", 3, n)?;
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Graph::from_edge_list(n, &edges)?)
}

/// Dimensions of the rectangular grid `Pₘ × Pₙ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridSpec {
    pub m: usize,
    pub n: usize,
}

impl GridSpec {
    /// Normalizes so that `m ≤ n`.
    pub fn new(m: usize, n: usize) -> Result<Self, GeneratorError> {
        if m == 0 || n == 0 {
            return Err(GeneratorError::EmptyGrid { m, n });
        }
        Ok(GridSpec {
            m: m.min(n),
            n: m.max(n),
        })
    }
}

/// Cartesian product `Pₘ × Pₙ`; vertex `(i, j)` gets id `i·n + j`.
pub fn grid(spec: GridSpec) -> Result<Graph, GeneratorError> {
    let GridSpec { m, n } = spec;
    let mut g = Graph::empty(m * n)?;
    for i in 0..m {
        for j in 0..n {
            let v = i * n + j;
            if j + 1 < n {
                g.add_edge(v, v + 1)?;
            }
            if i + 1 < m {
                g.add_edge(v, v + n)?;
            }
        }
    }
    Ok(g)
}

/// `(mn, 2mn − m − n, (m − 1)(n − 1) + 1)` without building the graph.
pub fn grid_fvector(spec: GridSpec) -> FVector {
    let (m, n) = (spec.m as u64, spec.n as u64);
    FVector::new(m * n, 2 * m * n - m - n, (m - 1) * (n - 1) + 1)
}

/// A stacked maximal planar triangulation on `n` vertices.
///
/// Starts from the triangle `{0, 1, 2}`; vertex `v ≥ 3` is placed inside the
/// face `{v−3, v−2, v−1}` created by the previous insertion and joined to
/// its three corners. Each insertion trades one triangular face for three,
/// so the result has `3n − 6` edges and `2n − 4` faces.
pub fn maximal_triangulation(n: usize) -> Result<Graph, GeneratorError> {
    at_least("maximal triangulation", 3, n)?;
    let mut g = Graph::from_edge_list(n, &[(0, 1), (1, 2), (0, 2)])?;
    for v in 3..n {
        for u in v - 3..v {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// Vertex ids of the nine-vertex triangle-free witness, by drawing label.
pub mod fig2 {
    pub const A: usize = 0;
    pub const B: usize = 1;
    pub const C: usize = 2;
    pub const D: usize = 3;
    pub const E: usize = 4;
    pub const F: usize = 5;
    pub const G: usize = 6;
    pub const H: usize = 7;
    pub const K: usize = 8;
}

/// The complex triangle-free witness on nine vertices with f = (9, 14, 7).
///
/// `a` and `h` are both joined to `b, d, e, g`; `c` subdivides `b–d`, `f`
/// subdivides `e–g`, and `k` is joined to `b` and `g`.
pub fn fig2_witness() -> Graph {
    use fig2::*;
    let edges = [
        (A, B),
        (A, D),
        (A, E),
        (A, G),
        (H, B),
        (H, D),
        (H, E),
        (H, G),
        (B, C),
        (C, D),
        (E, F),
        (F, G),
        (K, B),
        (K, G),
    ];
    Graph::from_edge_list(9, &edges).expect("fixed edge list is valid")
}
