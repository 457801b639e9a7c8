//! f-vectors, the Euler cubic `p(x) = f₂x³ + f₁x² + f₀x + 2`, and the
//! real/complex verdict.
//!
//! When Euler's relation holds, `p(−1) = 0` and
//! `p(x) = (x + 1)(f₂x² + (f₁ − f₂)x + 2)`. The cofactor's discriminant is
//! `(f₀ − 2)² − 8f₂`, so a graph is real exactly when that quantity is
//! non-negative. Verdicts use exact integer arithmetic only.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::planarity::{face_count, FaceCountError};

/// Vertex, edge and face counts (faces include the unbounded one).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FVector {
    pub f0: u64,
    pub f1: u64,
    pub f2: u64,
}

impl FVector {
    pub const fn new(f0: u64, f1: u64, f2: u64) -> Self {
        FVector { f0, f1, f2 }
    }

    /// The f-vector a connected planar graph with `f0` vertices and `f1`
    /// edges must have. `None` if that would need a negative face count.
    pub fn from_euler(f0: u64, f1: u64) -> Option<Self> {
        (f1 + 2).checked_sub(f0).map(|f2| FVector { f0, f1, f2 })
    }

    pub fn satisfies_euler(&self) -> bool {
        self.f0 as i128 - self.f1 as i128 + self.f2 as i128 == 2
    }

    /// `(f₀ − 2)² − 8f₂`.
    pub fn delta(&self) -> i128 {
        let d = self.f0 as i128 - 2;
        d * d - 8 * self.f2 as i128
    }

    /// `(f₀ + 2)² − 8(f₁ + 2)`, the edge form of the same criterion.
    pub fn edge_margin(&self) -> i128 {
        let s = self.f0 as i128 + 2;
        s * s - 8 * (self.f1 as i128 + 2)
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.f0, self.f1, self.f2)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Classification {
    Real,
    Complex,
}

impl Classification {
    pub fn is_real(self) -> bool {
        self == Classification::Real
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::Real => "real",
            Classification::Complex => "complex",
        })
    }
}

/// Coefficients `[a3, a2, a1, a0] = [f₂, f₁, f₀, 2]` and the cofactor
/// discriminant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerPolynomial {
    pub coefficients: [i128; 4],
    pub delta: i128,
}

pub fn euler_polynomial(f: FVector) -> EulerPolynomial {
    EulerPolynomial {
        coefficients: [f.f2 as i128, f.f1 as i128, f.f0 as i128, 2],
        delta: f.delta(),
    }
}

impl EulerPolynomial {
    pub fn eval(&self, x: i128) -> i128 {
        self.coefficients.iter().fold(0, |acc, &c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coefficients
            .iter()
            .fold(0.0, |acc, &c| acc * x + c as f64)
    }

    /// The quadratic `[f₂, f₁ − f₂, 2]` left after dividing by `x + 1`.
    pub fn cofactor(&self) -> [i128; 3] {
        let [a3, a2, _, a0] = self.coefficients;
        [a3, a2 - a3, a0]
    }

    pub fn has_unit_root(&self) -> bool {
        self.eval(-1) == 0
    }

    /// `(x + 1)` times the cofactor, highest degree first.
    pub fn factored_product(&self) -> [i128; 4] {
        let [q2, q1, q0] = self.cofactor();
        [q2, q2 + q1, q1 + q0, q0]
    }

    /// Roots of `p`: −1 plus the cofactor's roots. With `f₂ = 0` the cubic
    /// degenerates and the roots of `f₁x² + f₀x + 2` are returned instead.
    pub fn roots(&self) -> Result<RootSet, RootError> {
        let [a3, a2, a1, a0] = self.coefficients;
        if a3 == 0 {
            let roots = if a2 != 0 {
                quadratic_roots(a2, a1, a0).to_vec()
            } else if a1 != 0 {
                vec![Root::real(-(a0 as f64) / a1 as f64)]
            } else {
                Vec::new()
            };
            return Ok(RootSet {
                roots,
                discriminant: a1 * a1 - 4 * a2 * a0,
                all_real: a1 * a1 - 4 * a2 * a0 >= 0,
                degenerate: true,
            });
        }
        if !self.has_unit_root() {
            return Err(RootError::NoUnitRoot);
        }
        let [q2, q1, q0] = self.cofactor();
        let [r1, r2] = quadratic_roots(q2, q1, q0);
        Ok(RootSet {
            roots: vec![Root::real(-1.0), r1, r2],
            discriminant: self.delta,
            all_real: self.delta >= 0,
            degenerate: false,
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootError {
    #[error("p(-1) != 0: the f-vector does not satisfy Euler's relation")]
    NoUnitRoot,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Root {
    pub re: f64,
    pub im: f64,
}

impl Root {
    fn real(re: f64) -> Root {
        Root { re, im: 0.0 }
    }
}

/// Roots with exact discriminant data and floating-point approximations.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootSet {
    pub roots: Vec<Root>,
    /// Discriminant of the quadratic part (the cofactor, or the degenerate
    /// quadratic when `f₂ = 0`).
    pub discriminant: i128,
    pub all_real: bool,
    pub degenerate: bool,
}

/// Roots of `a x² + b x + c`, `a ≠ 0`, avoiding cancellation.
fn quadratic_roots(a: i128, b: i128, c: i128) -> [Root; 2] {
    let disc = b * b - 4 * a * c;
    let (a, b, c) = (a as f64, b as f64, c as f64);
    if disc >= 0 {
        let s = (disc as f64).sqrt();
        let q = -0.5 * (b + b.signum() * s);
        if q == 0.0 {
            return [Root::real(0.0), Root::real(0.0)];
        }
        let (x1, x2) = (q / a, c / q);
        let (lo, hi) = if x1 <= x2 { (x1, x2) } else { (x2, x1) };
        [Root::real(lo), Root::real(hi)]
    } else {
        let re = -b / (2.0 * a);
        let im = ((-disc) as f64).sqrt() / (2.0 * a).abs();
        [Root { re, im: -im }, Root { re, im }]
    }
}

/// Real iff `(f₀ − 2)² ≥ 8f₂`; equality counts as real.
pub fn classify(f: FVector) -> Classification {
    if f.delta() >= 0 {
        Classification::Real
    } else {
        Classification::Complex
    }
}

/// `(f₀, f₁, f₂)` of a connected planar graph.
pub fn fvector_of(g: &Graph) -> Result<FVector, FaceCountError> {
    let f2 = face_count(g)?;
    Ok(FVector::new(g.order() as u64, g.size() as u64, f2 as u64))
}

pub fn classify_graph(g: &Graph) -> Result<Classification, FaceCountError> {
    fvector_of(g).map(classify)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DeletionError {
    #[error("precondition violated: graph must be connected and planar ({0})")]
    NotConnectedPlanar(FaceCountError),
    #[error("precondition violated: graph must be complex")]
    NotComplex,
    #[error("precondition violated: need f0 >= 7, got {0}")]
    TooFewVertices(usize),
    #[error("precondition violated: vertex {0} does not exist")]
    NoSuchVertex(usize),
    #[error("precondition violated: vertex {vertex} has degree {degree}, not 2")]
    NotDegreeTwo { vertex: usize, degree: usize },
    #[error("precondition violated: removing vertex {0} disconnects the graph")]
    Disconnects(usize),
}

/// Deletes a degree-2 vertex from a complex connected planar graph with at
/// least seven vertices and reports whether the result is still complex.
pub fn delete_degree2_preserves_complex(g: &Graph, x: usize) -> Result<bool, DeletionError> {
    let verdict = classify_graph(g).map_err(DeletionError::NotConnectedPlanar)?;
    if verdict != Classification::Complex {
        return Err(DeletionError::NotComplex);
    }
    if g.order() < 7 {
        return Err(DeletionError::TooFewVertices(g.order()));
    }
    let degree = g.degree(x).map_err(|_| DeletionError::NoSuchVertex(x))?;
    if degree != 2 {
        return Err(DeletionError::NotDegreeTwo { vertex: x, degree });
    }
    if !g.connected_without(x) {
        return Err(DeletionError::Disconnects(x));
    }
    let smaller = g.remove_vertex(x).expect("x checked in range");
    let after = classify_graph(&smaller).expect("subgraph of a planar graph, still connected");
    Ok(after == Classification::Complex)
}
