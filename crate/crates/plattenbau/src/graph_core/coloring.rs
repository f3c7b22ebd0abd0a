use super::{Color, Coloring, EmbeddedGraph, Graph, GraphError};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Class {
    #[serde(rename = "black")]
    Black,
    #[serde(rename = "white")]
    White,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleBW {
    /// Corners in face-walk order.
    pub triangle: [usize; 3],
    pub face: usize,
    pub class: Class,
}

pub fn is_proper_coloring(g: &Graph, c: &[Color]) -> bool {
    c.len() == g.n && g.edges.iter().all(|&[u, v]| c[u] != c[v])
}

/// Color an Eulerian triangulation so the outer face walk reads r, g, b.
pub fn three_color_triangulation(t: &EmbeddedGraph) -> Result<Coloring, GraphError> {
    if !t.is_triangulation() {
        return Err(GraphError::NotTriangulation("faces must all be triangles".into()));
    }
    if (0..t.n()).any(|v| t.degree(v) % 2 == 1) {
        return Err(GraphError::NotEulerian);
    }
    let start = t.outer_face().unwrap_or(0);
    let mut col: Vec<Option<Color>> = vec![None; t.n()];
    for (i, &d) in t.faces()[start].iter().enumerate() {
        col[t.tail(d)] = Some(Color::from_idx(i));
    }
    let nf = t.faces().len();
    let mut done = vec![false; nf];
    done[start] = true;
    let mut queue = std::collections::VecDeque::from([start]);
    while let Some(f) = queue.pop_front() {
        for &d in &t.faces()[f] {
            let g = t.face_of(d ^ 1);
            if done[g] {
                continue;
            }
            done[g] = true;
            let vs = t.face_vertices(g);
            let known: Vec<Color> = vs.iter().filter_map(|&v| col[v]).collect();
            if known.len() == 2 && known[0] != known[1] {
                for &v in &vs {
                    if col[v].is_none() {
                        col[v] = Some(Color::third(known[0], known[1]));
                    }
                }
            }
            queue.push_back(g);
        }
    }
    let c: Coloring = col.into_iter().map(|x| x.ok_or(GraphError::NotEulerian)).collect::<Result<_, _>>()?;
    if !is_proper_coloring(&t.graph(), &c) {
        return Err(GraphError::NotEulerian);
    }
    Ok(c)
}

/// Class of every face. A face is black iff its walk reads r, g, b cyclically;
/// the outer face of a triangulation colored by [`three_color_triangulation`]
/// is therefore black.
pub fn face_classes(t: &EmbeddedGraph, c: &[Color]) -> Vec<Class> {
    (0..t.faces().len())
        .map(|f| {
            let vs = t.face_vertices(f);
            let (a, b) = (c[vs[0]], c[vs[1]]);
            if b == a.next() {
                Class::Black
            } else {
                Class::White
            }
        })
        .collect()
}

/// Black/white class of every bounded face.
pub fn classify_triangles(t: &EmbeddedGraph, c: &[Color]) -> Vec<TriangleBW> {
    let outer = t.outer_face();
    face_classes(t, c)
        .into_iter()
        .enumerate()
        .filter(|&(f, _)| Some(f) != outer)
        .map(|(f, class)| {
            let vs = t.face_vertices(f);
            TriangleBW { triangle: [vs[0], vs[1], vs[2]], face: f, class }
        })
        .collect()
}

fn bfs_order(g: &Graph, adj: &[Vec<usize>]) -> Vec<usize> {
    let mut order = Vec::with_capacity(g.n);
    let mut seen = vec![false; g.n];
    for s in 0..g.n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        order.push(s);
        let mut i = order.len() - 1;
        while i < order.len() {
            let x = order[i];
            i += 1;
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    order.push(y);
                }
            }
        }
    }
    order
}

/// Exhaustive backtracking 3-coloring, vertices tried in BFS order.
pub fn brute_force_three_coloring(g: &Graph) -> Option<Coloring> {
    three_colorings(g, 1).pop()
}

/// Up to `limit` proper 3-colorings in backtracking order (BFS vertex order,
/// colors r < g < b); the first one is `brute_force_three_coloring`'s.
pub fn three_colorings(g: &Graph, limit: usize) -> Vec<Coloring> {
    let adj = g.adjacency();
    if limit == 0 || adj.iter().enumerate().any(|(v, a)| a.contains(&v)) {
        return Vec::new();
    }
    let order = bfs_order(g, &adj);
    let mut col: Vec<Option<Color>> = vec![None; g.n];
    let mut out = Vec::new();
    fn rec(
        k: usize,
        order: &[usize],
        adj: &[Vec<usize>],
        col: &mut Vec<Option<Color>>,
        out: &mut Vec<Coloring>,
        limit: usize,
    ) {
        if k == order.len() {
            out.push(col.iter().map(|c| c.expect("colored")).collect());
            return;
        }
        let v = order[k];
        for c in Color::ALL {
            if out.len() == limit {
                return;
            }
            if adj[v].iter().all(|&w| col[w] != Some(c)) {
                col[v] = Some(c);
                rec(k + 1, order, adj, col, out, limit);
                col[v] = None;
            }
        }
    }
    rec(0, &order, &adj, &mut col, &mut out, limit);
    out
}
