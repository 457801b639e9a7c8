use std::collections::BTreeSet;

use rayon::prelude::*;
use thiserror::Error;

use super::{FilterError, FilterSpec};
use crate::canon::{canonical_form, CanonicalForm};
use crate::graph::Graph;

/// Largest order for exhaustive abstract enumeration.
pub const MAX_EXHAUSTIVE_ORDER: usize = 9;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("exhaustive enumeration supports at most {MAX_EXHAUSTIVE_ORDER} vertices, got {0}")]
    TooLarge(usize),
    #[error(
        "enumerating all graphs on {0} vertices needs an edge-count bound \
         (e.g. --edges 0:14, the triangle-free planar maximum at n = 9)"
    )]
    Unbounded(usize),
    #[error(transparent)]
    Filter(#[from] FilterError),
}

/// One canonical representative per isomorphism class of graphs on `n`
/// vertices passing `filter`, sorted by canonical form.
///
/// Classes are grown one vertex at a time: every graph on `k + 1` vertices
/// is some graph on `k` vertices plus a vertex with a chosen neighborhood,
/// and each level is deduplicated by canonical form before growing the
/// next. Hereditary conditions (edge cap, triangle-free, bipartite, planar)
/// prune intermediate levels, since they pass to induced subgraphs.
pub fn enumerate_graphs(n: usize, filter: &FilterSpec) -> Result<Vec<Graph>, EnumerateError> {
    if n > MAX_EXHAUSTIVE_ORDER {
        return Err(EnumerateError::TooLarge(n));
    }
    filter.validate(n)?;
    if n == MAX_EXHAUSTIVE_ORDER && filter.edge_cap() == usize::MAX {
        return Err(EnumerateError::Unbounded(n));
    }
    let empty = Graph::empty(0).expect("order 0");
    if n == 0 {
        return Ok(if filter.accepts(&empty) {
            vec![empty]
        } else {
            Vec::new()
        });
    }
    let cap = filter.edge_cap();
    let mut level = vec![empty];
    for k in 0..n {
        let last = k + 1 == n;
        let children: Vec<Vec<CanonicalForm>> = level
            .par_iter()
            .map(|parent| {
                let base = parent.size();
                let mut out = Vec::new();
                for mask in 0u64..1 << k {
                    if base + mask.count_ones() as usize > cap {
                        continue;
                    }
                    if filter.triangle_free && closes_triangle(parent, mask) {
                        continue;
                    }
                    let child = parent.extend_with_mask(mask);
                    let keep = if last {
                        filter.accepts(&child)
                    } else {
                        filter.hereditary_ok(&child)
                    };
                    if keep {
                        out.push(canonical_form(&child).expect("n <= 9"));
                    }
                }
                out
            })
            .collect();
        let merged: BTreeSet<CanonicalForm> = children.into_iter().flatten().collect();
        level = merged.into_iter().map(|c| c.to_graph()).collect();
    }
    Ok(level)
}

fn closes_triangle(g: &Graph, mask: u64) -> bool {
    let mut rest = mask;
    while rest != 0 {
        let u = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if g.neighbor_mask(u) & mask != 0 {
            return true;
        }
    }
    false
}
