use serde::{Deserialize, Serialize};

/// One row of the real/complex frontier: for `f0` vertices, the admissible
/// connected planar edge counts run from `min_f1` (a tree) to `planar_cap`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrontierRow {
    pub f0: u64,
    pub min_f1: u64,
    /// Largest edge count that is still real; edge counts above it are
    /// complex. Empty when even a tree is complex.
    pub max_real_f1: Option<u64>,
    pub planar_cap: u64,
    pub triangle_free_cap: u64,
    pub real: u64,
    pub complex: u64,
}

/// Rows for `f0 = 3..=bound`.
pub fn frontier(bound: u64) -> Vec<FrontierRow> {
    (3..=bound)
        .map(|f0| {
            let min_f1 = f0 - 1;
            let planar_cap = 3 * f0 - 6;
            // real iff (f0+2)² ≥ 8(f1+2)
            let threshold = ((f0 + 2) * (f0 + 2) / 8).checked_sub(2);
            let max_real_f1 = threshold
                .filter(|&t| t >= min_f1)
                .map(|t| t.min(planar_cap));
            let real = max_real_f1.map_or(0, |t| t - min_f1 + 1);
            FrontierRow {
                f0,
                min_f1,
                max_real_f1,
                planar_cap,
                triangle_free_cap: 2 * f0 - 4,
                real,
                complex: planar_cap - min_f1 + 1 - real,
            }
        })
        .collect()
}
