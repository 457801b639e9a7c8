//! Connected subgraphs of the square lattice ℤ², up to translation.
//!
//! Vertex sets are the fixed lattice animals, grown with Redelmeier's
//! method from an anchor at the origin: only cells with `y > 0`, or `y = 0`
//! and `x ≥ 0`, may join, so the anchor is the (y, x)-least vertex and each
//! translation class is produced once. For each vertex set every subset of
//! its unit edges that connects all the vertices is then a distinct lattice
//! subgraph.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

/// Largest vertex count accepted by the lattice enumerator.
pub const MAX_LATTICE_VERTICES: usize = 10;

pub type LatticePoint = (i32, i32);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("lattice enumeration supports at most {MAX_LATTICE_VERTICES} vertices, got {0}")]
    TooLarge(usize),
    #[error("empty vertex range {0}..={1}")]
    EmptyRange(usize, usize),
    #[error("edge {0:?}-{1:?} is not a unit lattice edge between present vertices")]
    BadEdge(LatticePoint, LatticePoint),
}

/// A finite subgraph of the lattice: vertices sorted by `(y, x)`, edges as
/// `(p, q)` with `p` before `q` in that order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatticeGraph {
    vertices: Vec<LatticePoint>,
    edges: Vec<(LatticePoint, LatticePoint)>,
}

fn yx(p: &LatticePoint) -> (i32, i32) {
    (p.1, p.0)
}

impl LatticeGraph {
    pub fn new(
        mut vertices: Vec<LatticePoint>,
        edges: Vec<(LatticePoint, LatticePoint)>,
    ) -> Result<Self, LatticeError> {
        vertices.sort_by_key(yx);
        vertices.dedup();
        let mut normalized = Vec::with_capacity(edges.len());
        for (p, q) in edges {
            let unit = (p.0 - q.0).abs() + (p.1 - q.1).abs() == 1;
            let present = vertices.binary_search_by_key(&yx(&p), yx).is_ok()
                && vertices.binary_search_by_key(&yx(&q), yx).is_ok();
            if !unit || !present {
                return Err(LatticeError::BadEdge(p, q));
            }
            normalized.push(if yx(&p) < yx(&q) { (p, q) } else { (q, p) });
        }
        normalized.sort_by_key(|(p, q)| (yx(p), yx(q)));
        normalized.dedup();
        Ok(LatticeGraph {
            vertices,
            edges: normalized,
        })
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(LatticePoint, LatticePoint)] {
        &self.edges
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    /// Shifts so the (y, x)-least vertex sits at the origin.
    pub fn anchored(&self) -> LatticeGraph {
        let Some(&(ox, oy)) = self.vertices.first() else {
            return self.clone();
        };
        let shift = |p: LatticePoint| (p.0 - ox, p.1 - oy);
        LatticeGraph {
            vertices: self.vertices.iter().map(|&p| shift(p)).collect(),
            edges: self
                .edges
                .iter()
                .map(|&(p, q)| (shift(p), shift(q)))
                .collect(),
        }
    }

    /// Forgets coordinates; vertex `i` is the `i`-th vertex in `(y, x)` order.
    pub fn to_abstract(&self) -> Graph {
        let index = |p: &LatticePoint| {
            self.vertices
                .binary_search_by_key(&yx(p), yx)
                .expect("edge endpoints are vertices")
        };
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|(p, q)| (index(p), index(q)))
            .collect();
        Graph::from_edge_list(self.vertices.len(), &edges).expect("valid lattice graph")
    }
}

fn check_range(v_min: usize, v_max: usize) -> Result<(), LatticeError> {
    if v_max > MAX_LATTICE_VERTICES {
        return Err(LatticeError::TooLarge(v_max));
    }
    if v_min > v_max || v_max == 0 {
        return Err(LatticeError::EmptyRange(v_min, v_max));
    }
    Ok(())
}

/// Every fixed lattice animal with `v_min..=v_max` cells, anchored at the origin.
pub fn lattice_animals(v_min: usize, v_max: usize) -> Result<Vec<Vec<LatticePoint>>, LatticeError> {
    check_range(v_min, v_max)?;
    let mut grower = Redelmeier {
        v_min,
        v_max,
        width: 2 * v_max as i32 + 1,
        marked: vec![false; (2 * v_max + 1) * (v_max + 1)],
        current: Vec::with_capacity(v_max),
        out: Vec::new(),
    };
    let origin = (0, 0);
    let slot = grower.slot(origin);
    grower.marked[slot] = true;
    grower.grow(vec![origin]);
    Ok(grower.out)
}

struct Redelmeier {
    v_min: usize,
    v_max: usize,
    width: i32,
    marked: Vec<bool>,
    current: Vec<LatticePoint>,
    out: Vec<Vec<LatticePoint>>,
}

impl Redelmeier {
    fn slot(&self, (x, y): LatticePoint) -> usize {
        (y * self.width + x + self.v_max as i32) as usize
    }

    fn admissible(&self, (x, y): LatticePoint) -> bool {
        let reach = self.v_max as i32;
        (y > 0 || (y == 0 && x >= 0)) && y < reach && x.abs() < reach
    }

    fn grow(&mut self, mut untried: Vec<LatticePoint>) {
        while let Some(cell) = untried.pop() {
            self.current.push(cell);
            if self.current.len() >= self.v_min {
                self.out.push(self.current.clone());
            }
            if self.current.len() < self.v_max {
                let (x, y) = cell;
                let mut fresh = Vec::new();
                for nb in [(x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)] {
                    if self.admissible(nb) {
                        let s = self.slot(nb);
                        if !self.marked[s] {
                            self.marked[s] = true;
                            fresh.push(nb);
                        }
                    }
                }
                let mut next = untried.clone();
                next.extend_from_slice(&fresh);
                self.grow(next);
                for nb in fresh {
                    let s = self.slot(nb);
                    self.marked[s] = false;
                }
            }
            self.current.pop();
        }
    }
}

/// Calls `visit` with every connected spanning subgraph of the unit-edge
/// graph on `cells`.
pub fn spanning_lattice_subgraphs(cells: &[LatticePoint], mut visit: impl FnMut(LatticeGraph)) {
    let mut vertices = cells.to_vec();
    vertices.sort_by_key(yx);
    let k = vertices.len();
    let mut units: Vec<(usize, usize)> = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            let (p, q) = (vertices[i], vertices[j]);
            if (p.0 - q.0).abs() + (p.1 - q.1).abs() == 1 {
                units.push((i, j));
            }
        }
    }
    let full: u32 = if k == 0 { 0 } else { (1 << k) - 1 };
    for mask in 0u32..1 << units.len() {
        if (mask.count_ones() as usize) + 1 < k {
            continue;
        }
        let mut adj = [0u32; MAX_LATTICE_VERTICES];
        for (e, &(i, j)) in units.iter().enumerate() {
            if mask >> e & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
        let mut reach: u32 = 1;
        loop {
            let mut next = reach;
            let mut rest = reach;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                next |= adj[v];
            }
            if next == reach {
                break;
            }
            reach = next;
        }
        if reach != full {
            continue;
        }
        let edges = units
            .iter()
            .enumerate()
            .filter(|(e, _)| mask >> e & 1 == 1)
            .map(|(_, &(i, j))| (vertices[i], vertices[j]))
            .collect();
        visit(LatticeGraph {
            vertices: vertices.clone(),
            edges,
        });
    }
}

/// Visits every connected lattice subgraph with `v_min..=v_max` vertices,
/// one per translation class, and returns how many were visited.
pub fn for_each_lattice_subgraph(
    v_min: usize,
    v_max: usize,
    mut visit: impl FnMut(&LatticeGraph),
) -> Result<u64, LatticeError> {
    let mut count = 0;
    for cells in lattice_animals(v_min, v_max)? {
        spanning_lattice_subgraphs(&cells, |lg| {
            count += 1;
            visit(&lg);
        });
    }
    Ok(count)
}

/// Parallel fold over the same stream as [`for_each_lattice_subgraph`]:
/// each animal's subgraphs are mapped by `f` and the results concatenated.
pub fn par_map_lattice_subgraphs<T: Send>(
    v_min: usize,
    v_max: usize,
    f: impl Fn(&LatticeGraph) -> Option<T> + Sync,
) -> Result<(u64, Vec<T>), LatticeError> {
    let animals = lattice_animals(v_min, v_max)?;
    let parts: Vec<(u64, Vec<T>)> = animals
        .par_iter()
        .map(|cells| {
            let mut count = 0;
            let mut hits = Vec::new();
            spanning_lattice_subgraphs(cells, |lg| {
                count += 1;
                if let Some(t) = f(&lg) {
                    hits.push(t);
                }
            });
            (count, hits)
        })
        .collect();
    let total = parts.iter().map(|(c, _)| c).sum();
    Ok((total, parts.into_iter().flat_map(|(_, h)| h).collect()))
}

pub fn enumerate_lattice_subgraphs(
    v_min: usize,
    v_max: usize,
) -> Result<Vec<LatticeGraph>, LatticeError> {
    let mut out = Vec::new();
    for_each_lattice_subgraph(v_min, v_max, |lg| out.push(lg.clone()))?;
    Ok(out)
}
