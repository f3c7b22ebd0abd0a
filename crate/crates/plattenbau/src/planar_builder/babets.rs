//! Cutting a triangulation at its basic babets.

use crate::alpha_flow::find_babets;
use crate::graph_core::{Class, EmbeddedGraph};

/// One removed babet interior.
#[derive(Clone, Debug)]
pub struct BabetChild {
    /// The babet triangle, in ids of the parent triangulation.
    pub babet: [usize; 3],
    /// Inside triangulation with the babet as outer face.
    pub t_b: EmbeddedGraph,
    /// Vertex `i` of `t_b` is vertex `map[i]` of the parent.
    pub map: Vec<usize>,
    /// Face classes of `t_b` under its own coloring.
    pub classes: Vec<Class>,
}

#[derive(Clone, Debug)]
pub struct Cleaned {
    pub clean: EmbeddedGraph,
    /// Vertex `i` of `clean` is vertex `map[i]` of the input.
    pub map: Vec<usize>,
    /// Children ordered by smallest interior vertex.
    pub children: Vec<BabetChild>,
}

/// Induced sub-triangulation on `keep` (sorted). Rotations are restricted,
/// so the embedding is inherited; no outer face is set.
pub(crate) fn restrict_embedding(t: &EmbeddedGraph, keep: &[usize]) -> (EmbeddedGraph, Vec<usize>) {
    let mut idx = vec![usize::MAX; t.n()];
    for (i, &v) in keep.iter().enumerate() {
        idx[v] = i;
    }
    let rot: Vec<Vec<usize>> = keep
        .iter()
        .map(|&v| t.neighbors(v).into_iter().filter(|&w| idx[w] != usize::MAX).map(|w| idx[w]).collect())
        .collect();
    let g = EmbeddedGraph::from_rotations(&rot, None).expect("restriction of an embedding is an embedding");
    (g, keep.to_vec())
}

fn face_with_vertices(t: &EmbeddedGraph, set: [usize; 3]) -> Option<usize> {
    let mut want = set;
    want.sort_unstable();
    (0..t.faces().len()).find(|&f| {
        let mut vs = t.face_vertices(f);
        vs.sort_unstable();
        vs[..] == want[..]
    })
}

/// Remove the interiors of all basic babets. Children keep their own
/// nested babets; the recursion happens when they are realised.
pub fn clean_babets(t: &EmbeddedGraph, classes: &[Class]) -> Cleaned {
    let mut basic: Vec<_> = find_babets(t, classes).into_iter().filter(|b| b.is_basic()).collect();
    basic.sort_by_key(|b| b.interior_vertices[0]);
    if basic.is_empty() {
        return Cleaned { clean: t.clone(), map: (0..t.n()).collect(), children: Vec::new() };
    }
    let mut removed = vec![false; t.n()];
    let mut children = Vec::new();
    for b in &basic {
        for &v in &b.interior_vertices {
            removed[v] = true;
        }
        let mut keep: Vec<usize> = b.interior_vertices.iter().chain(b.triangle.iter()).copied().collect();
        keep.sort_unstable();
        let (g, map) = restrict_embedding(t, &keep);
        let local = b.triangle.map(|v| map.binary_search(&v).expect("kept"));
        let f = face_with_vertices(&g, local).expect("the babet bounds a face of its inside");
        let t_b = g.clone().with_outer(Some(g.faces()[f][0]));
        let classes = match crate::graph_core::three_color_triangulation(&t_b) {
            Ok(c) => crate::graph_core::face_classes(&t_b, &c),
            Err(_) => Vec::new(),
        };
        children.push(BabetChild { babet: b.triangle, t_b, map, classes });
    }
    let keep: Vec<usize> = (0..t.n()).filter(|&v| !removed[v]).collect();
    let (g, map) = restrict_embedding(t, &keep);
    let outer = t.outer_dart().map(|d| {
        let (a, b) = (t.tail(d), t.head(d));
        let (a, b) = (map.binary_search(&a).expect("outer kept"), map.binary_search(&b).expect("outer kept"));
        g.dart(a, b).expect("outer edge kept")
    });
    Cleaned { clean: g.with_outer(outer), map, children }
}
