//! Exact canonical labeling for small graphs.
//!
//! Individualization-refinement search: equitable refinement by neighbor
//! counts, branching on the first smallest non-singleton cell, and pruning
//! sibling branches with automorphisms found at the leaves. The canonical
//! form is the least upper-triangle adjacency encoding over all leaves.

use std::fmt;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::graph::Graph;

/// Largest order accepted by [`canonical_form`].
pub const CANON_MAX_VERTICES: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("canonical form supports at most {CANON_MAX_VERTICES} vertices, got {0}")]
pub struct CanonError(pub usize);

/// Label-invariant encoding of an isomorphism class.
///
/// `bits` holds the upper triangle of the canonically relabeled adjacency
/// matrix, pair `(0,1)` in the most significant used position, rows in
/// order. Ordering compares order first, then the encoding.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: u8,
    bits: u128,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// Order byte followed by the 16 big-endian encoding bytes.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(17);
        out.push(self.n);
        out.extend_from_slice(&self.bits.to_be_bytes());
        out
    }

    pub fn to_hex(&self) -> String {
        self.to_bytes().iter().map(|b| format!("{b:02x}")).collect()
    }

    /// The canonical representative of the class.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let pairs = pair_count(n);
        let mut g = Graph::empty(n).expect("n <= 16");
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.bits >> (pairs - 1 - k) & 1 == 1 {
                    g.add_edge(i, j).expect("in range");
                }
                k += 1;
            }
        }
        g
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_hex())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl CanonicalForm {
    /// Inverse of [`CanonicalForm::to_hex`].
    pub fn from_hex(hex: &str) -> Option<CanonicalForm> {
        if hex.len() != 34 || !hex.is_ascii() {
            return None;
        }
        let n = u8::from_str_radix(&hex[..2], 16).ok()?;
        let bits = u128::from_str_radix(&hex[2..], 16).ok()?;
        let width = pair_count(n as usize);
        if n as usize > CANON_MAX_VERTICES || (width < 128 && bits >> width != 0) {
            return None;
        }
        Some(CanonicalForm { n, bits })
    }
}

impl Serialize for CanonicalForm {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_hex())
    }
}

impl<'de> Deserialize<'de> for CanonicalForm {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let hex = String::deserialize(deserializer)?;
        CanonicalForm::from_hex(&hex)
            .ok_or_else(|| de::Error::custom(format!("invalid canonical form {hex:?}")))
    }
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, CanonError> {
    canonical_labeling(g).map(|(form, _)| form)
}

/// Canonical form plus the relabeling that realizes it: `perm[v]` is the
/// canonical label of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalForm, Vec<usize>), CanonError> {
    let n = g.order();
    if n > CANON_MAX_VERTICES {
        return Err(CanonError(n));
    }
    let mut adj = [0u64; CANON_MAX_VERTICES];
    for (v, slot) in adj.iter_mut().enumerate().take(n) {
        *slot = g.neighbor_mask(v);
    }
    let mut search = Search {
        n,
        adj,
        first: None,
        best: None,
        automorphisms: Vec::new(),
    };
    let root = vec![(0..n).collect::<Vec<_>>()];
    let root = if n == 0 { Vec::new() } else { root };
    search.descend(root, &mut Vec::new());
    let (bits, order) = search.best.expect("search reaches at least one leaf");
    let mut perm = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    Ok((CanonicalForm { n: n as u8, bits }, perm))
}

/// The canonically relabeled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Result<Graph, CanonError> {
    canonical_form(g).map(|c| c.to_graph())
}

type Partition = Vec<Vec<usize>>;

struct Search {
    n: usize,
    adj: [u64; CANON_MAX_VERTICES],
    first: Option<(u128, Vec<usize>)>,
    best: Option<(u128, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search {
    fn descend(&mut self, partition: Partition, prefix: &mut Vec<usize>) {
        let partition = self.refine(partition);
        if partition.iter().all(|c| c.len() == 1) {
            let order: Vec<usize> = partition.iter().map(|c| c[0]).collect();
            self.leaf(order);
            return;
        }
        let target = partition
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i)
            .expect("non-discrete");
        let cell = partition[target].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cell {
            if !explored.is_empty() && self.same_orbit(prefix, v, &explored) {
                continue;
            }
            let mut child = Vec::with_capacity(partition.len() + 1);
            child.extend_from_slice(&partition[..target]);
            child.push(vec![v]);
            child.push(cell.iter().copied().filter(|&u| u != v).collect());
            child.extend_from_slice(&partition[target + 1..]);
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
            explored.push(v);
        }
    }

    /// Splits cells by neighbor counts into every cell until stable. Cells
    /// split in signature order, so the result is relabeling-equivariant.
    fn refine(&self, mut partition: Partition) -> Partition {
        loop {
            let masks: Vec<u64> = partition
                .iter()
                .map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v))
                .collect();
            let mut next: Partition = Vec::with_capacity(self.n);
            for cell in &partition {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<([u8; CANON_MAX_VERTICES], usize)> = cell
                    .iter()
                    .map(|&v| {
                        let mut sig = [0u8; CANON_MAX_VERTICES];
                        for (s, m) in sig.iter_mut().zip(&masks) {
                            *s = (self.adj[v] & m).count_ones() as u8;
                        }
                        (sig, v)
                    })
                    .collect();
                keyed.sort();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
            }
            if next.len() == partition.len() {
                return next;
            }
            partition = next;
        }
    }

    fn encode(&self, order: &[usize]) -> u128 {
        let pairs = pair_count(self.n);
        let mut bits = 0u128;
        let mut k = 0;
        for i in 0..self.n {
            let row = self.adj[order[i]];
            for &u in &order[i + 1..] {
                if row >> u & 1 == 1 {
                    bits |= 1 << (pairs - 1 - k);
                }
                k += 1;
            }
        }
        bits
    }

    fn leaf(&mut self, order: Vec<usize>) {
        let code = self.encode(&order);
        for reference in [&self.first, &self.best].into_iter().flatten() {
            if reference.0 == code {
                // reference[i] -> order[i] preserves adjacency
                let mut gamma = vec![0; self.n];
                for (i, &v) in reference.1.iter().enumerate() {
                    gamma[v] = order[i];
                }
                if gamma.iter().enumerate().any(|(i, &g)| i != g) {
                    self.automorphisms.push(gamma);
                }
                break;
            }
        }
        if self.first.is_none() {
            self.first = Some((code, order.clone()));
        }
        if self.best.as_ref().is_none_or(|(b, _)| code < *b) {
            self.best = Some((code, order));
        }
    }

    /// Whether `v` shares an orbit with an explored vertex under the group
    /// generated by known automorphisms that fix `prefix` pointwise.
    fn same_orbit(&self, prefix: &[usize], v: usize, explored: &[usize]) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut any = false;
        for gamma in &self.automorphisms {
            if prefix.iter().any(|&p| gamma[p] != p) {
                continue;
            }
            any = true;
            for (x, &y) in gamma.iter().enumerate() {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == root)
    }
}
