//! The incidence graph between interior vertices and bounded black
//! triangles, its orientations with prescribed out-degrees, the babet
//! obstruction, the flip lattice and the induced cycle cover on the dual.

mod cover;
pub mod flow;
mod lattice;

pub use cover::{cycle_cover, CycleCover, Side};
pub use flow::Violation;
pub use lattice::{verify_distributive_lattice, LatticeReport};

use crate::graph_core::{face_classes, Class, Color, EmbeddedGraph};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const DEFAULT_ENUM_BOUND: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlphaError {
    #[error("no orientation with the prescribed out-degrees; violating set of size {}", .0.set.len())]
    Infeasible(Violation),
    #[error("size bound {bound} exceeded ({size})")]
    SizeBoundExceeded { bound: usize, size: usize },
    #[error("malformed orientation: {0}")]
    MalformedOrientation(String),
    #[error("precondition: {0}")]
    Precondition(String),
}

/// Bipartite incidence graph: interior vertices of `T` on the left, bounded
/// black triangles (face ids of `T`) on the right.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IncidenceGraph {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    /// (left index, right index)
    pub edges: Vec<(usize, usize)>,
    pub alpha_left: Vec<usize>,
    pub alpha_right: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Dir {
    /// interior vertex -> triangle
    LR,
    /// triangle -> interior vertex
    RL,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaOrientation {
    pub direction: Vec<Dir>,
}

impl IncidenceGraph {
    pub fn node_count(&self) -> usize {
        self.left.len() + self.right.len()
    }

    /// Edges on nodes `0..left+right` (right nodes shifted by `left.len()`).
    pub fn node_edges(&self) -> Vec<(usize, usize)> {
        let l = self.left.len();
        self.edges.iter().map(|&(a, b)| (a, l + b)).collect()
    }

    pub fn alpha(&self) -> Vec<usize> {
        self.alpha_left.iter().chain(self.alpha_right.iter()).copied().collect()
    }

    pub fn alpha_sum(&self) -> usize {
        self.alpha().iter().sum()
    }

    pub fn out_degrees(&self, o: &AlphaOrientation) -> Vec<usize> {
        let l = self.left.len();
        let mut out = vec![0; self.node_count()];
        for (k, &(a, b)) in self.edges.iter().enumerate() {
            match o.direction[k] {
                Dir::LR => out[a] += 1,
                Dir::RL => out[l + b] += 1,
            }
        }
        out
    }

    pub fn is_valid(&self, o: &AlphaOrientation) -> bool {
        o.direction.len() == self.edges.len() && self.out_degrees(o) == self.alpha()
    }

    /// The two triangles (face ids) each interior vertex points to.
    pub fn out_triangles(&self, o: &AlphaOrientation) -> Vec<Vec<usize>> {
        let mut res = vec![Vec::new(); self.left.len()];
        for (k, &(a, b)) in self.edges.iter().enumerate() {
            if o.direction[k] == Dir::LR {
                res[a].push(self.right[b]);
            }
        }
        res
    }
}

fn interior_flags(t: &EmbeddedGraph) -> Vec<bool> {
    let mut interior = vec![true; t.n()];
    if let Some(f) = t.outer_face() {
        for v in t.face_vertices(f) {
            interior[v] = false;
        }
    }
    interior
}

pub fn build_incidence_graph(t: &EmbeddedGraph, classes: &[Class]) -> IncidenceGraph {
    let interior = interior_flags(t);
    let outer = t.outer_face();
    let left: Vec<usize> = (0..t.n()).filter(|&v| interior[v]).collect();
    let mut lidx = vec![usize::MAX; t.n()];
    for (i, &v) in left.iter().enumerate() {
        lidx[v] = i;
    }
    let right: Vec<usize> = (0..t.faces().len())
        .filter(|&f| Some(f) != outer && classes[f] == Class::Black)
        .collect();
    let mut edges = Vec::new();
    let mut alpha_right = Vec::with_capacity(right.len());
    for (j, &f) in right.iter().enumerate() {
        let mut deg = 0;
        for v in t.face_vertices(f) {
            if interior[v] {
                edges.push((lidx[v], j));
                deg += 1;
            }
        }
        alpha_right.push(deg - 2.min(deg));
    }
    edges.sort_unstable();
    IncidenceGraph { alpha_left: vec![2; left.len()], left, right, edges, alpha_right }
}

/// Convenience: incidence graph straight from a coloring.
pub fn incidence_from_coloring(t: &EmbeddedGraph, c: &[Color]) -> IncidenceGraph {
    build_incidence_graph(t, &face_classes(t, c))
}

fn to_orientation(bits: &[bool]) -> AlphaOrientation {
    AlphaOrientation { direction: bits.iter().map(|&b| if b { Dir::LR } else { Dir::RL }).collect() }
}

pub fn find_alpha_orientation(h: &IncidenceGraph) -> Result<AlphaOrientation, AlphaError> {
    let n = h.node_count();
    let alpha = h.alpha();
    // triangles with fewer than two interior corners cannot have in-degree two
    flow::orient_with_outdegrees(n, &h.node_edges(), &alpha)
        .map(|bits| to_orientation(&bits))
        .map_err(AlphaError::Infeasible)
}

pub fn enumerate_alpha_orientations(h: &IncidenceGraph, bound: usize) -> Result<Vec<AlphaOrientation>, AlphaError> {
    if h.edges.len() > bound {
        return Err(AlphaError::SizeBoundExceeded { bound, size: h.edges.len() });
    }
    let all = flow::enumerate_orientations(h.node_count(), &h.node_edges(), &h.alpha(), usize::MAX)
        .expect("no limit");
    Ok(all.iter().map(|b| to_orientation(b)).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Babet {
    pub triangle: [usize; 3],
    pub interior_vertices: Vec<usize>,
    /// Index of the innermost babet strictly containing this one.
    pub parent: Option<usize>,
    pub depth: usize,
}

impl Babet {
    pub fn is_basic(&self) -> bool {
        self.parent.is_none()
    }
}

/// Vertices strictly inside separating triangle `tri` (the side away from
/// the outer face).
pub fn inside_of(t: &EmbeddedGraph, tri: [usize; 3]) -> Vec<usize> {
    let n = t.n();
    let mut blocked = vec![false; n];
    for v in tri {
        blocked[v] = true;
    }
    let mut seen = blocked.clone();
    let outer = t.outer_face().unwrap_or(0);
    let mut stack: Vec<usize> = t.face_vertices(outer).into_iter().filter(|&v| !blocked[v]).collect();
    for &v in &stack {
        seen[v] = true;
    }
    while let Some(v) = stack.pop() {
        for w in t.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    (0..n).filter(|&v| !seen[v]).collect()
}

/// Separating triangles whose three outside faces are white.
pub fn find_babets(t: &EmbeddedGraph, classes: &[Class]) -> Vec<Babet> {
    let sep = crate::graph_core::find_separating_triangles(t);
    let mut out: Vec<Babet> = Vec::new();
    for tri in sep {
        let inside = inside_of(t, tri);
        let mut is_in = vec![false; t.n()];
        for &v in &inside {
            is_in[v] = true;
        }
        let mut all_white = true;
        for (a, b) in [(tri[0], tri[1]), (tri[1], tri[2]), (tri[0], tri[2])] {
            let d = t.dart(a, b).expect("triangle edge");
            let mut outside_face = None;
            for dd in [d, d ^ 1] {
                let f = t.face_of(dd);
                if t.face_vertices(f).iter().all(|&x| !is_in[x]) {
                    outside_face = Some(f);
                }
            }
            match outside_face {
                Some(f) if classes[f] == Class::White => {}
                _ => {
                    all_white = false;
                    break;
                }
            }
        }
        if all_white {
            out.push(Babet { triangle: tri, interior_vertices: inside, parent: None, depth: 0 });
        }
    }
    // nesting by strict containment of interiors
    let k = out.len();
    for i in 0..k {
        let mut best: Option<usize> = None;
        for j in 0..k {
            if i == j || out[j].interior_vertices.len() <= out[i].interior_vertices.len() {
                continue;
            }
            let contains = out[i].triangle.iter().chain(out[i].interior_vertices.iter()).all(|v| {
                out[j].interior_vertices.binary_search(v).is_ok() || out[j].triangle.contains(v)
            }) && out[i].interior_vertices.iter().all(|v| out[j].interior_vertices.binary_search(v).is_ok());
            if contains && best.is_none_or(|b| out[j].interior_vertices.len() < out[b].interior_vertices.len()) {
                best = Some(j);
            }
        }
        out[i].parent = best;
    }
    for i in 0..k {
        let mut d = 0;
        let mut p = out[i].parent;
        while let Some(j) = p {
            d += 1;
            p = out[j].parent;
        }
        out[i].depth = d;
    }
    out
}

/// The violating set the babet certifies: interior vertices plus the black
/// triangles with all corners inside.
pub fn babet_violation(t: &EmbeddedGraph, classes: &[Class], h: &IncidenceGraph, b: &Babet) -> Violation {
    let mut set = Vec::new();
    for (i, v) in h.left.iter().enumerate() {
        if b.interior_vertices.binary_search(v).is_ok() {
            set.push(i);
        }
    }
    for (j, &f) in h.right.iter().enumerate() {
        debug_assert_eq!(classes[f], Class::Black);
        if t.face_vertices(f).iter().all(|v| b.interior_vertices.binary_search(v).is_ok()) {
            set.push(h.left.len() + j);
        }
    }
    let (alpha_sum, edge_bound) = flow::violation_values(&set, h.node_count(), &h.node_edges(), &h.alpha());
    Violation { set, alpha_sum, edge_bound }
}

#[cfg(test)]
mod tests;
