//! Embedded planar graphs stored as rotation systems.
//!
//! Darts: edge `e` owns darts `2e` (first endpoint to second) and `2e + 1`.
//! Rotations list the darts leaving a vertex in clockwise order. Faces are
//! traced with `next(u->v) = v -> cw_successor_v(u)`, which keeps the face on
//! the left of every dart: bounded faces run counterclockwise and the outer
//! face runs clockwise.

mod augment;
mod coloring;
mod iso;
mod planarity;

pub use augment::{augment_to_triangulation, Augmented};
pub use coloring::{
    brute_force_three_coloring, classify_triangles, face_classes, is_proper_coloring,
    three_color_triangulation, three_colorings, Class, TriangleBW,
};
pub use iso::{isomorphic, isomorphic_graphs, DEFAULT_ISO_BOUND};
pub use planarity::{embed_planar, is_planar};

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type VertexId = usize;
pub type Dart = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph is not planar")]
    NotPlanar,
    #[error("triangulation has a vertex of odd degree")]
    NotEulerian,
    #[error("coloring is not a proper 3-coloring")]
    NotThreeColorable,
    #[error("not a triangulation: {0}")]
    NotTriangulation(String),
    #[error("size bound {bound} exceeded ({size})")]
    SizeBoundExceeded { bound: usize, size: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("augmentation needed too many stacks in a face of size {0}")]
    StackingOverflow(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Color {
    #[serde(rename = "r")]
    R,
    #[serde(rename = "g")]
    G,
    #[serde(rename = "b")]
    B,
}

impl Color {
    pub const ALL: [Color; 3] = [Color::R, Color::G, Color::B];

    pub fn idx(self) -> usize {
        self as usize
    }

    pub fn from_idx(i: usize) -> Color {
        Color::ALL[i % 3]
    }

    /// The color different from both `a` and `b` (which must differ).
    pub fn third(a: Color, b: Color) -> Color {
        debug_assert_ne!(a, b);
        Color::from_idx(3 - a.idx() - b.idx())
    }

    pub fn next(self) -> Color {
        Color::from_idx(self.idx() + 1)
    }

    pub fn prev(self) -> Color {
        Color::from_idx(self.idx() + 2)
    }

    pub fn letter(self) -> char {
        ['r', 'g', 'b'][self.idx()]
    }
}

pub type Coloring = Vec<Color>;

/// A plain undirected graph on `0..n`. Edges are stored with `u < v`,
/// sorted; multi-edges are kept only when built explicitly as a multigraph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct Graph {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl Graph {
    /// Simple graph: self-loops rejected, duplicates merged.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph, GraphError> {
        let mut es = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::InvalidInput(format!("edge ({u},{v}) out of range")));
            }
            if u == v {
                return Err(GraphError::InvalidInput(format!("self-loop at {u}")));
            }
            es.push([u.min(v), u.max(v)]);
        }
        es.sort_unstable();
        es.dedup();
        Ok(Graph { n, edges: es })
    }

    pub fn multigraph(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
        let mut es: Vec<[usize; 2]> = edges.into_iter().map(|(u, v)| [u.min(v), u.max(v)]).collect();
        es.sort_unstable();
        Graph { n, edges: es }
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &[u, v] in &self.edges {
            adj[u].push(v);
            if u != v {
                adj[v].push(u);
            }
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&[u.min(v), u.max(v)]).is_ok()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &[u, v] in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    /// Induced subgraph on `keep` (relabelled in the given order).
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut idx = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            idx[v] = i;
        }
        Graph::multigraph(
            keep.len(),
            self.edges
                .iter()
                .filter(|e| idx[e[0]] != usize::MAX && idx[e[1]] != usize::MAX)
                .map(|e| (idx[e[0]], idx[e[1]])),
        )
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let x = comp[i];
                i += 1;
                for &y in &adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }
}

/// A combinatorial embedding (rotation system) with an optional outer face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddedGraph {
    n: usize,
    ends: Vec<[usize; 2]>,
    rot: Vec<Vec<Dart>>,
    pos: Vec<usize>,
    outer: Option<Dart>,
    faces: Vec<Vec<Dart>>,
    face_of: Vec<usize>,
}

impl EmbeddedGraph {
    /// Build from explicit edges and per-vertex clockwise dart lists.
    pub fn from_darts(
        n: usize,
        ends: Vec<[usize; 2]>,
        rot: Vec<Vec<Dart>>,
        outer: Option<Dart>,
    ) -> Result<EmbeddedGraph, GraphError> {
        if rot.len() != n {
            return Err(GraphError::InvalidInput("rotation count differs from vertex count".into()));
        }
        let nd = 2 * ends.len();
        let mut pos = vec![usize::MAX; nd];
        for (v, r) in rot.iter().enumerate() {
            for (i, &d) in r.iter().enumerate() {
                if d >= nd || pos[d] != usize::MAX {
                    return Err(GraphError::InvalidInput(format!("dart {d} repeated or out of range")));
                }
                let tail = ends[d / 2][d % 2];
                if tail != v {
                    return Err(GraphError::InvalidInput(format!("dart {d} listed at {v} but leaves {tail}")));
                }
                pos[d] = i;
            }
        }
        if pos.iter().any(|&p| p == usize::MAX) {
            return Err(GraphError::InvalidInput("some dart missing from rotations".into()));
        }
        if let Some(d) = outer {
            if d >= nd {
                return Err(GraphError::InvalidInput("outer dart out of range".into()));
            }
        }
        let mut g = EmbeddedGraph { n, ends, rot, pos, outer, faces: Vec::new(), face_of: Vec::new() };
        g.trace_faces();
        Ok(g)
    }

    /// Build a simple embedded graph from clockwise neighbor lists.
    /// `outer` names a directed edge `(u, v)` whose left face is the outer face.
    pub fn from_rotations(rot: &[Vec<usize>], outer: Option<(usize, usize)>) -> Result<EmbeddedGraph, GraphError> {
        let n = rot.len();
        let mut ends: Vec<[usize; 2]> = Vec::new();
        let mut dart_of = std::collections::HashMap::new();
        for (u, r) in rot.iter().enumerate() {
            for &v in r {
                if v >= n || v == u {
                    return Err(GraphError::InvalidInput(format!("bad neighbor {v} of {u}")));
                }
                if u < v {
                    if dart_of.contains_key(&(u, v)) {
                        return Err(GraphError::InvalidInput(format!("repeated edge {u}-{v}")));
                    }
                    let e = ends.len();
                    ends.push([u, v]);
                    dart_of.insert((u, v), 2 * e);
                    dart_of.insert((v, u), 2 * e + 1);
                }
            }
        }
        let mut drot = vec![Vec::new(); n];
        for (u, r) in rot.iter().enumerate() {
            for &v in r {
                match dart_of.get(&(u, v)) {
                    Some(&d) => drot[u].push(d),
                    None => return Err(GraphError::InvalidInput(format!("rotation of {u} lists {v} but not vice versa"))),
                }
            }
        }
        let outer_dart = match outer {
            Some((u, v)) => Some(
                *dart_of
                    .get(&(u, v))
                    .ok_or_else(|| GraphError::InvalidInput(format!("outer edge {u}-{v} absent")))?,
            ),
            None => None,
        };
        EmbeddedGraph::from_darts(n, ends, drot, outer_dart)
    }

    fn trace_faces(&mut self) {
        let nd = 2 * self.ends.len();
        let mut face_of = vec![usize::MAX; nd];
        let mut faces = Vec::new();
        for start in 0..nd {
            if face_of[start] != usize::MAX {
                continue;
            }
            let f = faces.len();
            let mut walk = Vec::new();
            let mut d = start;
            loop {
                face_of[d] = f;
                walk.push(d);
                d = self.next(d);
                if d == start {
                    break;
                }
            }
            faces.push(walk);
        }
        self.faces = faces;
        self.face_of = face_of;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.ends.len()
    }

    pub fn num_darts(&self) -> usize {
        2 * self.ends.len()
    }

    pub fn edge_ends(&self, e: usize) -> [usize; 2] {
        self.ends[e]
    }

    pub fn tail(&self, d: Dart) -> usize {
        self.ends[d / 2][d % 2]
    }

    pub fn head(&self, d: Dart) -> usize {
        self.ends[d / 2][1 - d % 2]
    }

    pub fn rev(d: Dart) -> Dart {
        d ^ 1
    }

    pub fn rotation(&self, v: usize) -> &[Dart] {
        &self.rot[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rot[v].len()
    }

    /// Clockwise neighbor list of `v` (with repetition for multi-edges).
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.rot[v].iter().map(|&d| self.head(d)).collect()
    }

    /// Clockwise successor of dart `d` around its tail.
    pub fn cw_next(&self, d: Dart) -> Dart {
        let v = self.tail(d);
        let r = &self.rot[v];
        r[(self.pos[d] + 1) % r.len()]
    }

    pub fn ccw_next(&self, d: Dart) -> Dart {
        let v = self.tail(d);
        let r = &self.rot[v];
        r[(self.pos[d] + r.len() - 1) % r.len()]
    }

    /// Next dart along the face on the left of `d`.
    pub fn next(&self, d: Dart) -> Dart {
        self.cw_next(d ^ 1)
    }

    pub fn faces(&self) -> &[Vec<Dart>] {
        &self.faces
    }

    pub fn face_of(&self, d: Dart) -> usize {
        self.face_of[d]
    }

    /// Vertices along a face in walk order.
    pub fn face_vertices(&self, f: usize) -> Vec<usize> {
        self.faces[f].iter().map(|&d| self.tail(d)).collect()
    }

    pub fn outer_dart(&self) -> Option<Dart> {
        self.outer
    }

    pub fn outer_face(&self) -> Option<usize> {
        self.outer.map(|d| self.face_of[d])
    }

    pub fn with_outer(mut self, d: Option<Dart>) -> EmbeddedGraph {
        self.outer = d;
        self
    }

    /// Dart from `u` to `v`, if adjacent (first one for multigraphs).
    pub fn dart(&self, u: usize, v: usize) -> Option<Dart> {
        self.rot[u].iter().copied().find(|&d| self.head(d) == v)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.dart(u, v).is_some()
    }

    pub fn graph(&self) -> Graph {
        Graph::multigraph(self.n, self.ends.iter().map(|e| (e[0], e[1])))
    }

    pub fn is_simple(&self) -> bool {
        let mut es: Vec<[usize; 2]> = self.ends.iter().map(|e| [e[0].min(e[1]), e[0].max(e[1])]).collect();
        if es.iter().any(|e| e[0] == e[1]) {
            return false;
        }
        es.sort_unstable();
        es.windows(2).all(|w| w[0] != w[1])
    }

    pub fn num_components(&self) -> usize {
        self.graph().components().len()
    }

    /// V - E + F, with isolated vertices contributing their own face, equals
    /// twice the number of components exactly for genus-0 rotation systems.
    pub fn euler_ok(&self) -> bool {
        let isolated = (0..self.n).filter(|&v| self.rot[v].is_empty()).count();
        let lhs = self.n as i64 - self.m() as i64 + (self.faces.len() + isolated) as i64;
        lhs == 2 * self.num_components() as i64
    }

    pub fn is_triangulation(&self) -> bool {
        self.n >= 3 && self.is_simple() && self.faces.iter().all(|f| f.len() == 3) && self.num_components() == 1
    }

    /// Clockwise neighbor lists (simple graphs).
    pub fn neighbor_rotations(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|v| self.neighbors(v)).collect()
    }
}

/// The dual of an embedded graph. Dual vertex `f` is face `f` of the primal;
/// dual dart `d` crosses primal dart `d`, leaving the face on its left.
#[derive(Clone, Debug)]
pub struct Dual {
    pub graph: EmbeddedGraph,
    pub v_inf: usize,
}

pub fn dual_with_infinity(t: &EmbeddedGraph) -> Result<Dual, GraphError> {
    if !t.is_triangulation() {
        return Err(GraphError::NotTriangulation("dual requires a triangulation".into()));
    }
    let v_inf = t
        .outer_face()
        .ok_or_else(|| GraphError::NotTriangulation("no outer face designated".into()))?;
    Ok(Dual { graph: dual_graph(t), v_inf })
}

/// Plain dual of any embedded graph (multigraph allowed).
pub fn dual_graph(t: &EmbeddedGraph) -> EmbeddedGraph {
    let ends: Vec<[usize; 2]> = (0..t.m()).map(|e| [t.face_of(2 * e), t.face_of(2 * e + 1)]).collect();
    let rot: Vec<Vec<Dart>> = t.faces().iter().map(|f| f.iter().rev().copied().collect()).collect();
    EmbeddedGraph::from_darts(t.faces().len(), ends, rot, None).expect("dual of a valid embedding is valid")
}

/// All triangles `u < v < w` that are not faces.
pub fn find_separating_triangles(t: &EmbeddedGraph) -> Vec<[usize; 3]> {
    let mut facial: std::collections::HashSet<[usize; 3]> = std::collections::HashSet::new();
    for f in 0..t.faces().len() {
        let mut vs = t.face_vertices(f);
        if vs.len() == 3 {
            vs.sort_unstable();
            facial.insert([vs[0], vs[1], vs[2]]);
        }
    }
    let adj = t.graph().adjacency();
    let mut out = Vec::new();
    for u in 0..t.n() {
        for &v in adj[u].iter().filter(|&&v| v > u) {
            for &w in adj[v].iter().filter(|&&w| w > v) {
                if adj[u].binary_search(&w).is_ok() && !facial.contains(&[u, v, w]) {
                    out.push([u, v, w]);
                }
            }
        }
    }
    out.dedup();
    out
}

#[cfg(test)]
mod tests;
