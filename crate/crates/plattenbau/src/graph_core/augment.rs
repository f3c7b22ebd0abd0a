//! Extend a properly 3-colored plane graph to a 3-colored (hence Eulerian)
//! triangulation that contains it as an induced subgraph. Every added edge
//! has a new endpoint, so no two original vertices become adjacent.

use super::{is_proper_coloring, Color, Coloring, EmbeddedGraph, GraphError};

#[derive(Clone, Debug)]
pub struct Augmented {
    pub t: EmbeddedGraph,
    /// Original vertex `v` is vertex `map[v]` of `t` (currently the identity).
    pub map: Vec<usize>,
    pub colors: Coloring,
    pub stacked: usize,
}

pub fn augment_to_triangulation(g: &EmbeddedGraph, coloring: &[Color]) -> Result<Augmented, GraphError> {
    if !g.is_simple() {
        return Err(GraphError::InvalidInput("augmentation needs a simple graph".into()));
    }
    if g.n() == 0 {
        return Err(GraphError::InvalidInput("empty graph".into()));
    }
    if !is_proper_coloring(&g.graph(), coloring) {
        return Err(GraphError::NotThreeColorable);
    }
    let n0 = g.n();
    let mut col: Coloring = coloring.to_vec();
    let mut rot = g.neighbor_rotations();
    let mut outer = g.outer_dart().map(|d| (g.tail(d), g.head(d)));

    // connect components through one new hub vertex
    let comps = g.graph().components();
    if comps.len() > 1 {
        let hub = rot.len();
        let mut hub_rot = Vec::new();
        for comp in &comps {
            let rep = comp[0];
            let have = col[rep];
            if have != Color::R {
                for &v in comp {
                    col[v] = if col[v] == have {
                        Color::R
                    } else if col[v] == Color::R {
                        have
                    } else {
                        col[v]
                    };
                }
            }
            rot[rep].push(hub);
            hub_rot.push(rep);
        }
        rot.push(hub_rot);
        col.push(Color::G);
    }

    // tiny cases: a single vertex or a single edge
    if rot.len() == 1 {
        rot = vec![vec![1, 2], vec![2, 0], vec![0, 1]];
        col.extend([col[0].next(), col[0].prev()]);
    } else if rot.len() == 2 {
        let c = Color::third(col[0], col[1]);
        rot[0].push(2);
        rot[1].push(2);
        rot.push(vec![0, 1]);
        col.push(c);
    }

    // bridge repeated corners until every face is a simple cycle
    loop {
        let emb = EmbeddedGraph::from_rotations(&rot, None)?;
        let mut fix: Option<(usize, usize, usize)> = None;
        'faces: for f in 0..emb.faces().len() {
            let vs = emb.face_vertices(f);
            let k = vs.len();
            let mut count = std::collections::HashMap::new();
            for &v in &vs {
                *count.entry(v).or_insert(0) += 1;
            }
            for i in 0..k {
                let x = vs[i];
                let (p, q) = (vs[(i + k - 1) % k], vs[(i + 1) % k]);
                if count[&x] > 1 && p != q {
                    fix = Some((p, x, q));
                    break 'faces;
                }
            }
        }
        let Some((p, x, q)) = fix else { break };
        let y = rot.len();
        let c = Color::ALL.into_iter().find(|&c| c != col[p] && c != col[q]).unwrap();
        let ip = rot[p].iter().position(|&z| z == x).unwrap();
        rot[p].insert(ip, y);
        let iq = rot[q].iter().position(|&z| z == x).unwrap();
        rot[q].insert(iq + 1, y);
        rot.push(vec![p, q]);
        col.push(c);
    }

    // stack into every face of size at least four
    let emb = EmbeddedGraph::from_rotations(&rot, None)?;
    let mut todo: Vec<Vec<usize>> = (0..emb.faces().len())
        .map(|f| emb.face_vertices(f))
        .filter(|vs| vs.len() >= 4)
        .collect();
    todo.sort_by_key(|vs| (vs.len(), *vs.iter().min().unwrap()));
    let mut stacked = 0;
    for face in todo {
        let size = face.len();
        let mut budget = 2 * size;
        let mut pending = vec![face];
        while let Some(f) = pending.pop() {
            if f.len() <= 3 {
                continue;
            }
            if budget == 0 {
                return Err(GraphError::StackingOverflow(size));
            }
            budget -= 1;
            stacked += 1;
            pending.extend(stack_into(&f, &mut rot, &mut col));
        }
    }

    if outer.is_none() {
        outer = rot[0].first().map(|&v| (0, v));
    }
    let t = EmbeddedGraph::from_rotations(&rot, outer)?;
    debug_assert!(t.is_triangulation());
    Ok(Augmented { t, map: (0..n0).collect(), colors: col, stacked })
}

/// Stack a new vertex into the face with vertex cycle `f` (face on the left).
/// Returns the new faces inside `f` as vertex cycles.
fn stack_into(f: &[usize], rot: &mut Vec<Vec<usize>>, col: &mut Coloring) -> Vec<Vec<usize>> {
    let k = f.len();
    let mut freq = [0usize; 3];
    for &v in f {
        freq[col[v].idx()] += 1;
    }
    // absent color if any, else least frequent (ties r < g < b)
    let c = Color::ALL.into_iter().min_by_key(|c| (freq[c.idx()], c.idx())).unwrap();
    let chosen: Vec<usize> = (0..k).filter(|&i| col[f[i]] != c).collect();
    debug_assert!(chosen.len() >= 3);
    let v = rot.len();
    for &i in &chosen {
        let a = f[i];
        let w = f[(i + k - 1) % k];
        let iw = rot[a].iter().position(|&z| z == w).unwrap();
        rot[a].insert(iw + 1, v);
    }
    rot.push(chosen.iter().rev().map(|&i| f[i]).collect());
    col.push(c);
    let mut out = Vec::new();
    for j in 0..chosen.len() {
        let (i0, i1) = (chosen[j], chosen[(j + 1) % chosen.len()]);
        let mut face = Vec::new();
        let mut i = i0;
        loop {
            face.push(f[i]);
            if i == i1 {
                break;
            }
            i = (i + 1) % k;
        }
        face.push(v);
        out.push(face);
    }
    out
}
