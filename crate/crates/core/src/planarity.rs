//! Planarity testing and face counting.
//!
//! The test splits the graph into biconnected blocks and embeds each block
//! by path addition (Demoucron, Malgrange and Pertuiset): starting from a
//! cycle, repeatedly pick a fragment of the unembedded remainder, prefer one
//! that fits in exactly one face, and route a path of it through that face.
//! A fragment that fits no face certifies non-planarity.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlanarityVerdict {
    pub planar: bool,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FaceCountError {
    #[error("face counting is defined for connected graphs only")]
    Disconnected,
    #[error("non-planar input")]
    NonPlanar,
}

pub fn is_planar(g: &Graph) -> PlanarityVerdict {
    PlanarityVerdict {
        planar: embed_blocks(g).is_some(),
    }
}

/// f₂ of a connected planar graph, unbounded face included, from Euler's
/// relation `f₀ − f₁ + f₂ = 2`.
pub fn face_count(g: &Graph) -> Result<usize, FaceCountError> {
    if !g.is_connected() {
        return Err(FaceCountError::Disconnected);
    }
    if !is_planar(g).planar {
        return Err(FaceCountError::NonPlanar);
    }
    Ok(2 + g.size() - g.order())
}

/// Face count read off an explicit embedding: one outer face plus the
/// bounded faces of every block. Used to cross-check [`face_count`].
pub fn embedded_face_count(g: &Graph) -> Option<usize> {
    if !g.is_connected() {
        return None;
    }
    embed_blocks(g).map(|per_block| 1 + per_block.iter().map(|f| f - 1).sum::<usize>())
}

/// Faces per block, or `None` if some block is non-planar.
fn embed_blocks(g: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    if n >= 3 && g.size() > 3 * n - 6 {
        return None;
    }
    blocks(g)
        .into_iter()
        .map(|edges| Block::new(&edges).embed())
        .collect()
}

/// Biconnected components as edge lists (Hopcroft–Tarjan with an edge stack).
fn blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let n = g.order();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut out = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut stack = vec![(root, usize::MAX, g.neighbors(root).collect::<Vec<_>>())];
        while let Some((u, parent, pending)) = stack.last_mut() {
            let (u, parent) = (*u, *parent);
            if let Some(v) = pending.pop() {
                if disc[v] == usize::MAX {
                    disc[v] = time;
                    low[v] = time;
                    time += 1;
                    edge_stack.push((u, v));
                    stack.push((v, u, g.neighbors(v).collect()));
                } else if v != parent && disc[v] < disc[u] {
                    edge_stack.push((u, v));
                    low[u] = low[u].min(disc[v]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[u]);
                    if low[u] >= disc[parent] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == (parent, u) {
                                break;
                            }
                        }
                        out.push(block);
                    }
                }
            }
        }
    }
    out
}

/// One biconnected block with vertices relabeled to `0..k`.
struct Block {
    k: usize,
    m: usize,
    adj: Vec<Vec<usize>>,
}

impl Block {
    fn new(edges: &[(usize, usize)]) -> Block {
        let mut ids: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        ids.sort_unstable();
        ids.dedup();
        let local = |v: usize| ids.binary_search(&v).expect("endpoint listed");
        let mut adj = vec![Vec::new(); ids.len()];
        for &(u, v) in edges {
            let (a, b) = (local(u), local(v));
            adj[a].push(b);
            adj[b].push(a);
        }
        Block {
            k: ids.len(),
            m: edges.len(),
            adj,
        }
    }

    /// Number of faces of a planar embedding of this block, or `None`.
    fn embed(&self) -> Option<usize> {
        if self.m == 1 {
            return Some(1);
        }
        if self.m > 3 * self.k - 6 {
            return None;
        }
        let mut embedded = vec![vec![false; self.k]; self.k];
        let mut in_h = vec![false; self.k];
        let cycle = self.initial_cycle();
        for (i, &v) in cycle.iter().enumerate() {
            let w = cycle[(i + 1) % cycle.len()];
            embedded[v][w] = true;
            embedded[w][v] = true;
            in_h[v] = true;
        }
        let mut faces = vec![cycle.clone(), cycle];
        let mut placed = faces[0].len();

        while placed < self.m {
            let fragments = self.fragments(&in_h, &embedded);
            let mut choice: Option<(usize, usize)> = None;
            for (fi, frag) in fragments.iter().enumerate() {
                let admissible: Vec<usize> = faces
                    .iter()
                    .enumerate()
                    .filter(|(_, face)| frag.attachments.iter().all(|a| face.contains(a)))
                    .map(|(i, _)| i)
                    .collect();
                match admissible.len() {
                    0 => return None,
                    1 => {
                        choice = Some((fi, admissible[0]));
                        break;
                    }
                    _ => {
                        if choice.is_none() {
                            choice = Some((fi, admissible[0]));
                        }
                    }
                }
            }
            let (fi, face_idx) = choice.expect("unplaced edges leave a fragment");
            let path = self.fragment_path(&fragments[fi], &in_h);
            for w in path.windows(2) {
                embedded[w[0]][w[1]] = true;
                embedded[w[1]][w[0]] = true;
            }
            for &v in &path {
                in_h[v] = true;
            }
            placed += path.len() - 1;
            let face = faces.swap_remove(face_idx);
            let (left, right) = split_face(&face, &path);
            faces.push(left);
            faces.push(right);
        }
        Some(faces.len())
    }

    /// A cycle through the first edge: the edge plus a detour avoiding it.
    fn initial_cycle(&self) -> Vec<usize> {
        let (s, t) = (0, self.adj[0][0]);
        let mut prev = vec![usize::MAX; self.k];
        prev[s] = s;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if (u == s && v == t) || prev[v] != usize::MAX {
                    continue;
                }
                prev[v] = u;
                queue.push_back(v);
            }
        }
        let mut cycle = vec![t];
        let mut cur = t;
        while cur != s {
            cur = prev[cur];
            cycle.push(cur);
        }
        cycle
    }

    fn fragments(&self, in_h: &[bool], embedded: &[Vec<bool>]) -> Vec<Fragment> {
        let mut out = Vec::new();
        for u in 0..self.k {
            if !in_h[u] {
                continue;
            }
            for &v in &self.adj[u] {
                if u < v && in_h[v] && !embedded[u][v] {
                    out.push(Fragment {
                        attachments: vec![u, v],
                        interior: Vec::new(),
                    });
                }
            }
        }
        let mut seen = vec![false; self.k];
        for start in 0..self.k {
            if in_h[start] || seen[start] {
                continue;
            }
            seen[start] = true;
            let mut interior = vec![start];
            let mut attach = vec![false; self.k];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if in_h[v] {
                        attach[v] = true;
                    } else if !seen[v] {
                        seen[v] = true;
                        interior.push(v);
                        queue.push_back(v);
                    }
                }
            }
            out.push(Fragment {
                attachments: (0..self.k).filter(|&v| attach[v]).collect(),
                interior,
            });
        }
        out
    }

    /// A path through the fragment joining two distinct attachments.
    fn fragment_path(&self, frag: &Fragment, in_h: &[bool]) -> Vec<usize> {
        if frag.interior.is_empty() {
            return frag.attachments.clone();
        }
        let (a, b) = (frag.attachments[0], frag.attachments[1]);
        let mut prev = vec![usize::MAX; self.k];
        let mut queue = VecDeque::new();
        for &v in &self.adj[a] {
            if !in_h[v] && frag.interior.contains(&v) {
                prev[v] = a;
                queue.push_back(v);
            }
        }
        while let Some(u) = queue.pop_front() {
            if self.adj[u].contains(&b) {
                let mut path = vec![b, u];
                let mut cur = u;
                while prev[cur] != a {
                    cur = prev[cur];
                    path.push(cur);
                }
                path.push(a);
                path.reverse();
                return path;
            }
            for &v in &self.adj[u] {
                if !in_h[v] && prev[v] == usize::MAX {
                    prev[v] = u;
                    queue.push_back(v);
                }
            }
        }
        unreachable!("fragment of a biconnected block reaches every attachment")
    }
}

struct Fragment {
    attachments: Vec<usize>,
    interior: Vec<usize>,
}

/// Splits a face cycle by a path whose endpoints lie on it.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let a = path[0];
    let b = *path.last().expect("path has two ends");
    let len = face.len();
    let i = face.iter().position(|&v| v == a).expect("a on face");
    let j = face.iter().position(|&v| v == b).expect("b on face");
    let arc = |from: usize, to: usize| {
        let mut out = vec![face[from]];
        let mut p = from;
        while p != to {
            p = (p + 1) % len;
            out.push(face[p]);
        }
        out
    };
    let inner = &path[1..path.len() - 1];
    // a..b along the face, then back to a along the path
    let mut left = arc(i, j);
    left.extend(inner.iter().rev());
    // b..a along the face, then back to b along the path
    let mut right = arc(j, i);
    right.extend(inner.iter());
    (left, right)
}
