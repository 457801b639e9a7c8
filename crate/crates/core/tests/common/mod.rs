//! Shared oracles for the integration tests. Nothing here calls into the
//! crate's planarity or classification code.
#![allow(dead_code)]

use std::sync::OnceLock;

use num_complex::Complex64;
use realplanar::enumerate::enumerate_graphs;
use realplanar::{FilterSpec, Graph};

/// All three complex roots of `a x³ + b x² + c x + d` (a ≠ 0), by Cardano's
/// formula followed by a few Newton steps on the original cubic.
pub fn cubic_roots(a: f64, b: f64, c: f64, d: f64) -> [Complex64; 3] {
    let (b, c, d) = (b / a, c / a, d / a);
    let shift = b / 3.0;
    let p = c - b * b / 3.0;
    let q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
    let disc = Complex64::new(q * q / 4.0 + p * p * p / 27.0, 0.0).sqrt();
    let half = Complex64::new(-q / 2.0, 0.0);
    // the branch of larger modulus avoids cancellation
    let w = if (half + disc).norm() >= (half - disc).norm() {
        half + disc
    } else {
        half - disc
    };
    let omega = Complex64::new(-0.5, 3f64.sqrt() / 2.0);
    let mut roots = [Complex64::new(-shift, 0.0); 3];
    if w.norm() > 1e-300 {
        let u = w.cbrt();
        let mut uk = u;
        for r in roots.iter_mut() {
            *r = uk - p / (3.0 * uk) - shift;
            uk *= omega;
        }
    }
    let f = |x: Complex64| ((x + b) * x + c) * x + d;
    let df = |x: Complex64| (3.0 * x + 2.0 * b) * x + c;
    for r in roots.iter_mut() {
        for _ in 0..4 {
            let slope = df(*r);
            if slope.norm() < 1e-12 {
                break;
            }
            let next = *r - f(*r) / slope;
            if f(next).norm() >= f(*r).norm() {
                break;
            }
            *r = next;
        }
    }
    // A repeated real root comes out of floating point as a conjugate pair
    // with imaginary parts near sqrt(eps). Project onto the real axis when
    // the real part is already a root to working precision.
    for r in roots.iter_mut() {
        if r.im != 0.0 && r.im.abs() < 1e-6 {
            let x = r.re;
            let value = ((x + b) * x + c) * x + d;
            let scale = ((x.abs() + b.abs()) * x.abs() + c.abs()) * x.abs() + d.abs();
            if value.abs() <= 8.0 * f64::EPSILON * scale {
                r.im = 0.0;
            }
        }
    }
    roots
}

pub fn max_imag(roots: &[Complex64; 3]) -> f64 {
    roots.iter().map(|r| r.im.abs()).fold(0.0, f64::max)
}

/// Connected planar classes by order, 1..=8, computed once per process.
pub fn connected_planar() -> &'static [Vec<Graph>] {
    static CACHE: OnceLock<Vec<Vec<Graph>>> = OnceLock::new();
    CACHE.get_or_init(|| {
        (0..=8)
            .map(|n| {
                if n == 0 {
                    Vec::new()
                } else {
                    enumerate_graphs(n, &FilterSpec::default().connected().planar()).unwrap()
                }
            })
            .collect()
    })
}

/// Wagner's criterion by brute force: planar iff no minor is K5 or K3,3.
/// Exponential, so only for small graphs.
pub fn planar_by_minors(g: &Graph) -> bool {
    fn edges(g: &Graph) -> Vec<(usize, usize)> {
        g.edges().collect()
    }
    fn is_k5(g: &Graph) -> bool {
        g.order() == 5 && g.size() == 10
    }
    fn is_k33(g: &Graph) -> bool {
        if g.order() != 6 || g.size() != 9 || !g.is_bipartite() {
            return false;
        }
        (0..6).all(|v| g.neighbors(v).count() == 3)
    }
    fn contract(g: &Graph, u: usize, v: usize) -> Graph {
        // merge v into u, then drop v
        let mut h = g.clone();
        let nv: Vec<usize> = g.neighbors(v).collect();
        for w in nv {
            if w != u && !h.has_edge(u, w) {
                h.add_edge(u, w).unwrap();
            }
        }
        h.remove_vertex(v).unwrap()
    }
    fn search(g: &Graph, seen: &mut std::collections::HashSet<realplanar::CanonicalForm>) -> bool {
        if g.order() < 5 || g.size() < 9 {
            return false;
        }
        if is_k5(g) || is_k33(g) {
            return true;
        }
        let key = realplanar::canonical_form(g).unwrap();
        if !seen.insert(key) {
            return false;
        }
        for (u, v) in edges(g) {
            if search(&g.without_edge(u, v).unwrap(), seen) || search(&contract(g, u, v), seen) {
                return true;
            }
        }
        for v in 0..g.order() {
            if g.neighbors(v).count() <= 1 && search(&g.remove_vertex(v).unwrap(), seen) {
                return true;
            }
        }
        false
    }
    !search(g, &mut std::collections::HashSet::new())
}
