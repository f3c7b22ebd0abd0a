//! Small instance builders shared by unit tests.

use crate::graph_core::{embed_planar, EmbeddedGraph};

pub fn octahedron_edges() -> Vec<(usize, usize)> {
    let mut e = Vec::new();
    for u in 0..6 {
        for v in u + 1..6 {
            if v != u + 3 {
                e.push((u, v));
            }
        }
    }
    e
}

/// Embed a triangulation and make the face with vertex set `outer` the
/// outer face.
pub fn triangulation(n: usize, edges: &[(usize, usize)], outer: [usize; 3]) -> EmbeddedGraph {
    let g = embed_planar(n, edges).unwrap();
    let mut want = outer;
    want.sort_unstable();
    let f = (0..g.faces().len())
        .find(|&f| {
            let mut vs = g.face_vertices(f);
            vs.sort_unstable();
            vs == want
        })
        .expect("outer triple is a face");
    let d = g.faces()[f][0];
    g.with_outer(Some(d))
}

pub fn octahedron() -> EmbeddedGraph {
    triangulation(6, &octahedron_edges(), [0, 1, 2])
}

/// Insert an octahedron into face (a, b, c): three new vertices, each joined
/// to two of a, b, c and to each other. Returns the new edge list.
pub fn plant(n: usize, edges: &[(usize, usize)], tri: [usize; 3]) -> (usize, Vec<(usize, usize)>) {
    let [a, b, c] = tri;
    let (x, y, z) = (n, n + 1, n + 2);
    let mut e = edges.to_vec();
    e.extend([(x, b), (x, c), (y, a), (y, c), (z, a), (z, b), (x, y), (y, z), (z, x)]);
    (n + 3, e)
}
