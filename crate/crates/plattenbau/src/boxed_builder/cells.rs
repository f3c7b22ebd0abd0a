//! Triangle sides, the relation between them, and the octahedral cells
//! formed by its components.

use super::view::View;
use super::{BoxedError, BoxedInstance};
use crate::graph_core::{isomorphic_graphs, Graph};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

/// A side `[u, v, w]` of a triangle, stored rotated so the smallest vertex
/// comes first.
pub type Side = [usize; 3];

pub(crate) fn side(mut s: [usize; 3]) -> Side {
    let i = (0..3).min_by_key(|&i| s[i]).unwrap();
    s.rotate_left(i);
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SideGraph {
    pub sides: Vec<Side>,
    /// The three related sides of each side, by index.
    pub adj: Vec<[usize; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    pub vertices: [usize; 6],
    pub sides: Vec<Side>,
}

impl Cell {
    /// The vertex of the cell not adjacent to `v`.
    pub(crate) fn opposite(&self, v: usize, view: &View) -> Option<usize> {
        self.vertices.iter().copied().find(|&w| w != v && !view.has_edge(v, w))
    }
}

pub fn side_relation(inst: &BoxedInstance) -> Result<SideGraph, BoxedError> {
    side_relation_view(&inst.view())
}

pub fn cells(inst: &BoxedInstance) -> Result<Vec<Cell>, BoxedError> {
    cells_view(&inst.view())
}

pub(crate) fn side_relation_view(v: &View) -> Result<SideGraph, BoxedError> {
    let mut sides = Vec::new();
    for [a, b, c] in v.triangles() {
        sides.push(side([a, b, c]));
        sides.push(side([a, c, b]));
    }
    sides.sort_unstable();
    let index: BTreeMap<Side, usize> = sides.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let mut adj = Vec::with_capacity(sides.len());
    for &s in &sides {
        let mut nb = [0; 3];
        for (t, slot) in nb.iter_mut().enumerate() {
            let (p, q, r) = (s[t], s[(t + 1) % 3], s[(t + 2) % 3]);
            let b = v.sq.get(&p).and_then(|sq| sq.cw_next(q, r)).ok_or(BoxedError::RelationAsymmetry(s))?;
            let back = v.sq.get(&q).and_then(|sq| sq.cw_next(p, b));
            if back != Some(r) {
                return Err(BoxedError::RelationAsymmetry(s));
            }
            *slot = *index.get(&side([q, p, b])).ok_or(BoxedError::RelationAsymmetry(s))?;
        }
        if nb[0] == nb[1] || nb[1] == nb[2] || nb[0] == nb[2] {
            return Err(BoxedError::NonCubeComponent(format!("side {s:?} has fewer than three related sides")));
        }
        adj.push(nb);
    }
    Ok(SideGraph { sides, adj })
}

fn cube() -> Graph {
    Graph::new(8, (0..8usize).flat_map(|a| (0..3).map(move |k| (a, a ^ (1 << k)))).filter(|&(a, b)| a < b)).unwrap()
}

pub(crate) fn cells_view(v: &View) -> Result<Vec<Cell>, BoxedError> {
    let h = side_relation_view(v)?;
    let mut comp = vec![usize::MAX; h.sides.len()];
    let mut out = Vec::new();
    for s in 0..h.sides.len() {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = out.len();
        let mut members = vec![s];
        let mut i = 0;
        while i < members.len() {
            for &t in &h.adj[members[i]] {
                if comp[t] == usize::MAX {
                    comp[t] = out.len();
                    members.push(t);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        let local: BTreeMap<usize, usize> = members.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let local = &local;
        let sub = Graph::new(members.len(), members.iter().flat_map(|&m| h.adj[m].iter().map(move |t| (local[&m], local[t])))).unwrap();
        if !isomorphic_graphs(&sub, &cube(), 8).unwrap_or(false) {
            return Err(BoxedError::NonCubeComponent(format!("component of {:?} has {} sides", h.sides[s], members.len())));
        }
        let verts: BTreeSet<usize> = members.iter().flat_map(|&m| h.sides[m]).collect();
        let verts: Vec<usize> = verts.into_iter().collect();
        let Ok(vertices) = <[usize; 6]>::try_from(verts.clone()) else {
            return Err(BoxedError::NonCubeComponent(format!("cell on {verts:?} is not an octahedron")));
        };
        let degs_ok = vertices.iter().all(|&a| vertices.iter().filter(|&&b| v.has_edge(a, b)).count() == 4);
        if !degs_ok {
            return Err(BoxedError::NonCubeComponent(format!("cell on {verts:?} is not an octahedron")));
        }
        out.push(Cell { vertices, sides: members.iter().map(|&m| h.sides[m]).collect() });
    }
    Ok(out)
}

/// Claims 1, 2 and 4 checked directly on an instance that satisfies the
/// conditions.
pub fn check_claims(inst: &BoxedInstance, cells: &[Cell]) -> Result<(), BoxedError> {
    check_claims_view(&inst.view(), cells)
}

pub(crate) fn check_claims_view(v: &View, cells: &[Cell]) -> Result<(), BoxedError> {
    // claim 1: inside SQ(x), off-equator vertices have two out-edges, and
    // equator vertices point only along the equator
    for x in v.vertices() {
        let eq = &v.out[&x];
        for &u in &v.adj[&x] {
            let outs = v.adj[&x].iter().filter(|&&w| v.has_edge(u, w) && v.points(u, w));
            if eq.contains(&u) {
                if let Some(w) = outs.clone().find(|w| !eq.contains(w)) {
                    let detail = format!("in SQ({x}) equator vertex {u} points to {w}");
                    return Err(BoxedError::ClaimViolation { claim: 1, detail });
                }
            } else if outs.count() != 2 {
                let detail = format!("in SQ({x}) vertex {u} does not have two out-edges");
                return Err(BoxedError::ClaimViolation { claim: 1, detail });
            }
        }
    }
    // claim 2
    for t in v.triangles() {
        let apex = (0..3).any(|i| v.points(t[i], t[(i + 1) % 3]) && v.points(t[i], t[(i + 2) % 3]));
        if !apex {
            return Err(BoxedError::ClaimViolation { claim: 2, detail: format!("triangle {t:?} is a directed cycle") });
        }
    }
    // claim 4, both directions
    for c in cells {
        for &a in &c.vertices {
            let Some(b) = c.opposite(a, v) else { continue };
            let rest: BTreeSet<usize> = c.vertices.iter().copied().filter(|&w| w != a && w != b).collect();
            let Some(cyc) = v.cycle_order(&rest) else {
                return Err(BoxedError::ClaimViolation { claim: 4, detail: format!("cell {:?} has no induced 4-cycle", c.vertices) });
            };
            if !v.sq[&a].has_face(&cyc) {
                let detail = format!("cycle {cyc:?} of cell {:?} bounds no face of SQ({a})", c.vertices);
                return Err(BoxedError::ClaimViolation { claim: 4, detail });
            }
        }
    }
    let cell_sets: Vec<BTreeSet<usize>> = cells.iter().map(|c| c.vertices.iter().copied().collect()).collect();
    for x in v.vertices() {
        for f in v.sq[&x].faces().unwrap_or_default() {
            if !cell_sets.iter().any(|s| s.contains(&x) && f.iter().all(|w| s.contains(w))) {
                return Err(BoxedError::ClaimViolation { claim: 4, detail: format!("face {f:?} of SQ({x}) lies in no cell") });
            }
        }
    }
    Ok(())
}
