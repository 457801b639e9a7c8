//! Simple undirected graphs over compact vertex ids, stored as adjacency bitsets.

use std::collections::VecDeque;
use std::fmt;

use smallvec::SmallVec;
use thiserror::Error;

/// Hard ceiling on the vertex count. Exhaustive routines impose tighter limits.
pub const MAX_VERTICES: usize = 1 << 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("{n} vertices exceeds the supported maximum of {limit}")]
    TooLarge { n: usize, limit: usize },
}

/// A simple graph: no loops, no parallel edges, symmetric adjacency.
///
/// Rows are `stride` machine words wide, so every graph with at most 64
/// vertices uses one word per vertex and those with at most 16 vertices live
/// entirely inline.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    rows: SmallVec<[u64; 16]>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge {
                n,
                limit: MAX_VERTICES,
            });
        }
        let stride = n.div_ceil(64).max(1);
        Ok(Graph {
            n,
            stride,
            rows: SmallVec::from_elem(0, n * stride),
        })
    }

    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.set(u, v, true);
        self.set(v, u, true);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check(u)?;
        self.check(v)?;
        self.set(u, v, false);
        self.set(v, u, false);
        Ok(())
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        g.add_edge(u, v)?;
        Ok(g)
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        g.remove_edge(u, v)?;
        Ok(g)
    }

    /// Appends one vertex adjacent to the vertices set in `mask`.
    /// Only valid while the graph has fewer than 64 vertices.
    pub(crate) fn extend_with_mask(&self, mask: u64) -> Graph {
        debug_assert!(self.n < 64);
        let n = self.n + 1;
        let mut g = Graph::empty(n).expect("n < 64");
        for v in 0..self.n {
            let mut row = self.rows[v];
            if mask >> v & 1 == 1 {
                row |= 1 << self.n;
            }
            g.rows[v] = row;
        }
        g.rows[self.n] = mask;
        g
    }

    fn check(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    #[inline]
    fn set(&mut self, u: usize, v: usize, on: bool) {
        let word = &mut self.rows[u * self.stride + v / 64];
        if on {
            *word |= 1 << (v % 64);
        } else {
            *word &= !(1 << (v % 64));
        }
    }

    #[inline]
    fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.stride..(v + 1) * self.stride]
    }

    /// Number of vertices (f₀).
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges (f₁).
    pub fn size(&self) -> usize {
        let twice: u32 = self.rows.iter().map(|w| w.count_ones()).sum();
        twice as usize / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u * self.stride + v / 64] >> (v % 64) & 1 == 1
    }

    /// Neighbor set of `v` as a single word. Requires at most 64 vertices.
    #[inline]
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        assert!(self.stride == 1, "neighbor_mask needs n <= 64");
        self.rows[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v)
            .iter()
            .enumerate()
            .flat_map(|(w, &word)| BitIter(word).map(move |b| w * 64 + b))
    }

    pub fn degree(&self, v: usize) -> Result<usize, GraphError> {
        self.check(v)?;
        Ok(self.deg(v))
    }

    #[inline]
    pub(crate) fn deg(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = (0..self.n).map(|v| self.deg(v)).collect();
        seq.sort_unstable_by(|a, b| b.cmp(a));
        seq
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.component_of(0, None).iter().all(|&seen| seen)
    }

    /// Reachability from `start`, optionally pretending `skip` is absent.
    fn component_of(&self, start: usize, skip: Option<usize>) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        if let Some(s) = skip {
            seen[s] = true;
        }
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }

    /// Cut vertices, by DFS lowpoints.
    pub fn articulation_points(&self) -> Vec<usize> {
        let n = self.n;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut cut = vec![false; n];
        let mut time = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // (vertex, parent, neighbor iterator state)
            let mut stack: Vec<(usize, usize, Vec<usize>)> = Vec::new();
            disc[root] = time;
            low[root] = time;
            time += 1;
            stack.push((root, usize::MAX, self.neighbors(root).collect()));
            let mut root_children = 0;
            while let Some((u, parent, pending)) = stack.last_mut() {
                let (u, parent) = (*u, *parent);
                if let Some(v) = pending.pop() {
                    if disc[v] == usize::MAX {
                        disc[v] = time;
                        low[v] = time;
                        time += 1;
                        if u == root {
                            root_children += 1;
                        }
                        stack.push((v, u, self.neighbors(v).collect()));
                    } else if v != parent {
                        low[u] = low[u].min(disc[v]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[u]);
                        if parent != root && low[u] >= disc[parent] {
                            cut[parent] = true;
                        }
                    }
                }
            }
            if root_children > 1 {
                cut[root] = true;
            }
        }
        (0..n).filter(|&v| cut[v]).collect()
    }

    /// Connected, at least three vertices, and no cut vertex.
    pub fn is_biconnected(&self) -> bool {
        self.n >= 3 && self.is_connected() && self.articulation_points().is_empty()
    }

    /// Whether deleting `x` leaves the remaining vertices connected.
    pub fn connected_without(&self, x: usize) -> bool {
        if self.n <= 2 {
            return true;
        }
        let start = if x == 0 { 1 } else { 0 };
        self.component_of(start, Some(x)).iter().all(|&s| s)
    }

    pub fn has_triangle(&self) -> bool {
        self.edges()
            .any(|(u, v)| self.row(u).iter().zip(self.row(v)).any(|(a, b)| a & b != 0))
    }

    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Deletes `x` and every edge at it; ids above `x` shift down by one.
    pub fn remove_vertex(&self, x: usize) -> Result<Graph, GraphError> {
        self.check(x)?;
        let mut g = Graph::empty(self.n - 1)?;
        let relabel = |v: usize| if v > x { v - 1 } else { v };
        for (u, v) in self.edges() {
            if u != x && v != x {
                g.add_edge(relabel(u), relabel(v))?;
            }
        }
        Ok(g)
    }

    /// Relabels vertices: old vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n).expect("same order");
        for (u, v) in self.edges() {
            g.set(perm[u], perm[v], true);
            g.set(perm[v], perm[u], true);
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self.edges().collect();
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &edges)
            .finish()
    }
}

/// Iterates the set bit positions of a word, lowest first.
#[derive(Clone, Copy)]
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let b = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(b)
        }
    }
}
