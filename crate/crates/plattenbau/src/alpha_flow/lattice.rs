//! Flip order on the alpha-orientations of the incidence graph.
//!
//! Two orientations are adjacent when they differ on exactly one simple
//! cycle. A cycle is drawn in the plane through its interior vertices of
//! `T`; reversing it when it runs counterclockwise moves up in the order.

use super::{enumerate_alpha_orientations, AlphaError, AlphaOrientation, Dir, IncidenceGraph};
use crate::graph_core::EmbeddedGraph;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeReport {
    pub elements: usize,
    pub flip_edges: usize,
    /// Cover relations `(lower, upper)` by element index.
    pub hasse_edges: Vec<(usize, usize)>,
    pub flip_graph_connected: bool,
    pub acyclic: bool,
    pub unique_min: bool,
    pub unique_max: bool,
    pub is_lattice: bool,
    pub distributive: bool,
}

impl LatticeReport {
    pub fn all_ok(&self) -> bool {
        self.flip_graph_connected && self.acyclic && self.unique_min && self.unique_max && self.is_lattice && self.distributive
    }
}

type Bits = Vec<u64>;

fn bits_new(n: usize) -> Bits {
    vec![0; n.div_ceil(64)]
}
fn bit_set(b: &mut Bits, i: usize) {
    b[i / 64] |= 1 << (i % 64);
}
fn bit_get(b: &Bits, i: usize) -> bool {
    b[i / 64] >> (i % 64) & 1 == 1
}
fn bits_and(a: &Bits, b: &Bits) -> Bits {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}
fn bits_subset(a: &Bits, b: &Bits) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

/// If `a` and `b` differ on one simple cycle, return whether that cycle is
/// counterclockwise in `a`.
fn single_cycle_ccw(
    t: &EmbeddedGraph,
    h: &IncidenceGraph,
    a: &AlphaOrientation,
    b: &AlphaOrientation,
) -> Option<bool> {
    let diff: Vec<usize> = (0..h.edges.len()).filter(|&k| a.direction[k] != b.direction[k]).collect();
    if diff.is_empty() {
        return None;
    }
    let l = h.left.len();
    let n = h.node_count();
    let mut deg = vec![0; n];
    // directed successor in `a`
    let mut succ = vec![usize::MAX; n];
    for &k in &diff {
        let (x, y) = (h.edges[k].0, l + h.edges[k].1);
        deg[x] += 1;
        deg[y] += 1;
        let (tail, head) = if a.direction[k] == Dir::LR { (x, y) } else { (y, x) };
        succ[tail] = head;
    }
    if deg.iter().any(|&d| d != 0 && d != 2) {
        return None;
    }
    let start = h.edges[diff[0]].0;
    let mut seq = vec![start];
    let mut x = succ[start];
    while x != start {
        if x == usize::MAX || seq.len() > diff.len() {
            return None;
        }
        seq.push(x);
        x = succ[x];
    }
    if seq.len() != diff.len() {
        return None;
    }
    let verts: Vec<usize> = seq.iter().filter(|&&x| x < l).map(|&x| h.left[x]).collect();
    let k = verts.len();
    let darts: Vec<usize> = (0..k)
        .map(|i| t.dart(verts[i], verts[(i + 1) % k]).expect("consecutive cycle vertices share a triangle"))
        .collect();
    Some(left_side_is_bounded(t, &darts))
}

/// True when the faces on the left of the closed dart sequence do not reach
/// the outer face without crossing the sequence.
pub(crate) fn left_side_is_bounded(t: &EmbeddedGraph, darts: &[usize]) -> bool {
    let mut on_cycle = vec![false; t.m()];
    for &d in darts {
        on_cycle[d / 2] = true;
    }
    let outer = t.outer_face().unwrap_or(usize::MAX);
    let mut seen = vec![false; t.faces().len()];
    let start = t.face_of(darts[0]);
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(f) = stack.pop() {
        if f == outer {
            return false;
        }
        for &d in &t.faces()[f] {
            if on_cycle[d / 2] {
                continue;
            }
            let g = t.face_of(d ^ 1);
            if !seen[g] {
                seen[g] = true;
                stack.push(g);
            }
        }
    }
    true
}

pub fn verify_distributive_lattice(t: &EmbeddedGraph, h: &IncidenceGraph, bound: usize) -> Result<LatticeReport, AlphaError> {
    let all = enumerate_alpha_orientations(h, bound)?;
    Ok(lattice_of(t, h, &all))
}

pub fn lattice_of(t: &EmbeddedGraph, h: &IncidenceGraph, all: &[AlphaOrientation]) -> LatticeReport {
    let n = all.len();
    let mut up_edges: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut undirected: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut flip_edges = 0;
    for i in 0..n {
        for j in i + 1..n {
            if let Some(ccw) = single_cycle_ccw(t, h, &all[i], &all[j]) {
                flip_edges += 1;
                undirected[i].push(j);
                undirected[j].push(i);
                if ccw {
                    up_edges[i].push(j);
                } else {
                    up_edges[j].push(i);
                }
            }
        }
    }
    let connected = n == 0 || {
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            for &y in &undirected[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen.iter().all(|&s| s)
    };
    // topological order (Kahn)
    let mut indeg = vec![0; n];
    for es in &up_edges {
        for &y in es {
            indeg[y] += 1;
        }
    }
    let mut order: Vec<usize> = (0..n).filter(|&x| indeg[x] == 0).collect();
    let mut i = 0;
    while i < order.len() {
        let x = order[i];
        i += 1;
        for &y in &up_edges[x] {
            indeg[y] -= 1;
            if indeg[y] == 0 {
                order.push(y);
            }
        }
    }
    let acyclic = order.len() == n;
    let mut report = LatticeReport {
        elements: n,
        flip_edges,
        hasse_edges: Vec::new(),
        flip_graph_connected: connected,
        acyclic,
        unique_min: false,
        unique_max: false,
        is_lattice: false,
        distributive: false,
    };
    if !acyclic || n == 0 {
        return report;
    }
    // up[x]: elements >= x ; down[x]: elements <= x
    let mut up = vec![bits_new(n); n];
    for &x in order.iter().rev() {
        bit_set(&mut up[x], x);
        for &y in &up_edges[x] {
            let uy = up[y].clone();
            for (a, b) in up[x].iter_mut().zip(uy) {
                *a |= b;
            }
        }
    }
    let mut down = vec![bits_new(n); n];
    for x in 0..n {
        for y in 0..n {
            if bit_get(&up[x], y) {
                bit_set(&mut down[y], x);
            }
        }
    }
    let mins: Vec<usize> = (0..n).filter(|&x| (0..n).all(|y| y == x || !bit_get(&down[x], y))).collect();
    let maxs: Vec<usize> = (0..n).filter(|&x| (0..n).all(|y| y == x || !bit_get(&up[x], y))).collect();
    report.unique_min = mins.len() == 1;
    report.unique_max = maxs.len() == 1;
    // covers
    for x in 0..n {
        for y in 0..n {
            if x != y && bit_get(&up[x], y) {
                let between = (0..n).any(|z| z != x && z != y && bit_get(&up[x], z) && bit_get(&up[z], y));
                if !between {
                    report.hasse_edges.push((x, y));
                }
            }
        }
    }
    // joins and meets
    let extreme = |cands: &Bits, rel: &[Bits]| -> Option<usize> {
        (0..n).find(|&z| bit_get(cands, z) && bits_subset(cands, &rel[z]))
    };
    let mut join = vec![usize::MAX; n * n];
    let mut meet = vec![usize::MAX; n * n];
    let mut lattice = true;
    for x in 0..n {
        for y in x..n {
            let j = extreme(&bits_and(&up[x], &up[y]), &up);
            let m = extreme(&bits_and(&down[x], &down[y]), &down);
            match (j, m) {
                (Some(j), Some(m)) => {
                    join[x * n + y] = j;
                    join[y * n + x] = j;
                    meet[x * n + y] = m;
                    meet[y * n + x] = m;
                }
                _ => lattice = false,
            }
        }
    }
    report.is_lattice = lattice;
    if lattice {
        report.distributive = (0..n).all(|x| {
            (0..n).all(|y| {
                (0..n).all(|z| meet[x * n + join[y * n + z]] == join[meet[x * n + y] * n + meet[x * n + z]])
            })
        });
    }
    report
}
