//! Colored dual, support edges and the Schnyder wood on the white-region
//! triangles.

use super::SurfaceError;
use crate::alpha_flow::{CycleCover, Side};
use crate::graph_core::{Color, EmbeddedGraph};
use serde::{Deserialize, Serialize};

/// The dual of `T` with every edge colored by the color missing at the
/// endpoints of the primal edge it crosses. Dual vertex `f` is face `f` of
/// `T`; dual dart `d` crosses primal dart `d`.
#[derive(Clone, Debug)]
pub struct ColoredDual {
    pub primal: EmbeddedGraph,
    pub dual: EmbeddedGraph,
    pub v_inf: usize,
    pub vertex_colors: Vec<Color>,
    /// Color of dual edge `e` (equivalently primal edge `e`).
    pub edge_colors: Vec<Color>,
    /// `roots[c]` is the white triangle adjacent to the outer edge of color `c`.
    pub roots: [usize; 3],
    pub extra_edges: Vec<SupportEdge>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportEdge {
    /// bounded black triangle with a single white-region neighbor
    pub from: usize,
    /// white-region triangle around `corner`
    pub to: usize,
    /// the vertex of `T` whose dual face holds the new edge
    pub corner: usize,
    pub color: Color,
}

pub fn color_dual_edges(t: &EmbeddedGraph, c: &[Color]) -> Result<ColoredDual, SurfaceError> {
    let v_inf = t.outer_face().ok_or_else(|| SurfaceError::Precondition("no outer face".into()))?;
    let dual = crate::graph_core::dual_graph(t);
    let edge_colors: Vec<Color> = (0..t.m())
        .map(|e| {
            let [x, y] = t.edge_ends(e);
            Color::third(c[x], c[y])
        })
        .collect();
    let mut roots = [usize::MAX; 3];
    for &d in &t.faces()[v_inf] {
        roots[edge_colors[d / 2].idx()] = t.face_of(d ^ 1);
    }
    if roots.contains(&usize::MAX) {
        return Err(SurfaceError::Precondition("outer face is not colored r, g, b".into()));
    }
    Ok(ColoredDual {
        primal: t.clone(),
        dual,
        v_inf,
        vertex_colors: c.to_vec(),
        edge_colors,
        roots,
        extra_edges: Vec::new(),
    })
}

impl ColoredDual {
    /// Dual neighbors of face `f` in clockwise order with the color of the
    /// connecting edge; the dual dart is the primal dart of `f`'s walk.
    pub fn colored_rotation(&self, f: usize) -> Vec<(usize, Color)> {
        self.dual
            .rotation(f)
            .iter()
            .map(|&d| (self.dual.head(d), self.edge_colors[d / 2]))
            .collect()
    }

    fn is_white_region(cover: &CycleCover, f: usize) -> bool {
        cover.region[f] == Some(Side::White)
    }

    /// White-region neighbors of bounded black triangle `u`, as (face, dart of
    /// `u`'s walk crossed).
    fn white_neighbors(&self, cover: &CycleCover, u: usize) -> Vec<(usize, usize)> {
        self.primal.faces()[u]
            .iter()
            .map(|&d| (self.primal.face_of(d ^ 1), d))
            .filter(|&(w, _)| Self::is_white_region(cover, w))
            .collect()
    }

    /// The white-region triangle that receives every support edge drawn in
    /// the dual face of `p`: the first one clockwise around `p`, starting at
    /// an end of `p`'s chord (or at the outer face for outer vertices).
    fn support_target(&self, cover: &CycleCover, p: usize) -> Option<usize> {
        let t = &self.primal;
        let around: Vec<usize> = t.rotation(p).iter().map(|&d| t.face_of(d)).collect();
        let start_face = cover
            .chords
            .iter()
            .find(|ch| ch.vertex == p)
            .map(|ch| ch.ends[0])
            .unwrap_or(self.v_inf);
        let s = around.iter().position(|&f| f == start_face)?;
        let k = around.len();
        (0..k).map(|i| around[(s + i) % k]).find(|&f| Self::is_white_region(cover, f))
    }
}

pub fn add_support_edges(cd: &ColoredDual, cover: &CycleCover) -> Result<ColoredDual, SurfaceError> {
    let t = &cd.primal;
    let mut out = cd.clone();
    out.extra_edges.clear();
    for u in 0..t.faces().len() {
        if cover.in_corners[u].is_none() {
            continue;
        }
        let wn = cd.white_neighbors(cover, u);
        if wn.len() != 1 {
            continue;
        }
        let (_, d) = wn[0];
        // corner of u opposite to the crossed edge
        let p = t.tail(t.next(t.next(d)));
        let to = cd.support_target(cover, p).ok_or(SurfaceError::NoCandidateVertex { triangle: u, corner: p })?;
        out.extra_edges.push(SupportEdge { from: u, to, corner: p, color: cd.edge_colors[d / 2] });
    }
    Ok(out)
}

/// A Schnyder wood on the graph `G` of white-region triangles.
#[derive(Clone, Debug)]
pub struct SchnyderWood {
    pub host: EmbeddedGraph,
    /// Outgoing color of each dart of `host`, if the edge is oriented away
    /// from the dart's tail.
    pub out_color: Vec<Option<Color>>,
    /// `roots[c]` carries the outgoing half-edge of color `c`.
    pub roots: [usize; 3],
    /// Clockwise rotation at every vertex with the half-edges in place.
    pub slot_lists: Vec<Vec<Slot>>,
    /// Face of `T` represented by each vertex of `G`.
    pub vertex_face: Vec<usize>,
    /// Bounded black triangle melted into each edge of `G`.
    pub melted: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slot {
    Dart(usize),
    Half(Color),
}

impl SchnyderWood {
    pub fn n(&self) -> usize {
        self.host.n()
    }

    /// Clockwise slots at `v`, half-edge included.
    pub fn slots(&self, v: usize) -> Vec<Slot> {
        self.slot_lists[v].clone()
    }

    /// Outgoing edge of color `c` at `v`.
    pub fn out_edge(&self, v: usize, c: Color) -> Option<Slot> {
        if self.roots[c.idx()] == v {
            return Some(Slot::Half(c));
        }
        self.host.rotation(v).iter().copied().find(|&d| self.out_color[d] == Some(c)).map(Slot::Dart)
    }

    pub fn outer_face(&self) -> Option<usize> {
        self.host.outer_face()
    }

    pub fn bounded_faces(&self) -> usize {
        self.host.faces().len() - usize::from(self.host.outer_face().is_some())
    }
}

pub fn derive_g_schnyder(cd: &ColoredDual, cover: &CycleCover) -> Result<SchnyderWood, SurfaceError> {
    let t = &cd.primal;
    let nf = t.faces().len();
    let white: Vec<usize> = (0..nf).filter(|&f| ColoredDual::is_white_region(cover, f)).collect();
    let mut gidx = vec![usize::MAX; nf];
    for (i, &f) in white.iter().enumerate() {
        gidx[f] = i;
    }
    let support: std::collections::HashMap<usize, &SupportEdge> = cd.extra_edges.iter().map(|s| (s.from, s)).collect();
    // one G edge per bounded black triangle
    let mut ends: Vec<[usize; 2]> = Vec::new();
    let mut out_color: Vec<Option<Color>> = Vec::new();
    let mut melted = Vec::new();
    let mut edge_of = vec![usize::MAX; nf];
    for u in 0..nf {
        if cover.in_corners[u].is_none() {
            continue;
        }
        let wn = cd.white_neighbors(cover, u);
        let e = ends.len();
        edge_of[u] = e;
        melted.push(u);
        match wn.len() {
            2 => {
                let (a, b) = if wn[0].0 < wn[1].0 { (wn[0], wn[1]) } else { (wn[1], wn[0]) };
                ends.push([gidx[a.0], gidx[b.0]]);
                out_color.push(Some(cd.edge_colors[a.1 / 2]));
                out_color.push(Some(cd.edge_colors[b.1 / 2]));
            }
            1 => {
                let s = support
                    .get(&u)
                    .ok_or_else(|| SurfaceError::SchnyderCheckFailed(format!("triangle {u} lacks a support edge")))?;
                ends.push([gidx[wn[0].0], gidx[s.to]]);
                out_color.push(Some(cd.edge_colors[wn[0].1 / 2]));
                out_color.push(None);
            }
            k => {
                return Err(SurfaceError::SchnyderCheckFailed(format!(
                    "triangle {u} has {k} white-region neighbors"
                )))
            }
        }
    }
    // fans of support edges per corner, nearest clockwise first
    let mut fans: std::collections::HashMap<usize, Vec<(usize, usize)>> = std::collections::HashMap::new();
    for s in &cd.extra_edges {
        let around: Vec<usize> = t.rotation(s.corner).iter().map(|&d| t.face_of(d)).collect();
        let k = around.len();
        let iv = around.iter().position(|&f| f == s.to).unwrap();
        let iu = around.iter().position(|&f| f == s.from).unwrap();
        fans.entry(s.corner).or_default().push(((iu + k - iv) % k, s.from));
    }
    for f in fans.values_mut() {
        f.sort_unstable();
    }
    let mut rot: Vec<Vec<usize>> = vec![Vec::new(); white.len()];
    let mut slot_lists: Vec<Vec<Slot>> = vec![Vec::new(); white.len()];
    for (i, &w) in white.iter().enumerate() {
        for &d in cd.dual.rotation(w) {
            let x = t.face_of(d ^ 1);
            if x == cd.v_inf {
                let c = cd.edge_colors[d / 2];
                if cd.roots[c.idx()] != w {
                    return Err(SurfaceError::SchnyderCheckFailed("root mismatch".into()));
                }
                slot_lists[i].push(Slot::Half(c));
            } else {
                let e = edge_of[x];
                let dart = if ends[e][0] == i { 2 * e } else { 2 * e + 1 };
                rot[i].push(dart);
                slot_lists[i].push(Slot::Dart(dart));
            }
            let p = t.tail(d);
            if let Some(fan) = fans.get(&p) {
                if support[&fan[0].1].to == w {
                    for &(_, u) in fan {
                        rot[i].push(2 * edge_of[u] + 1);
                        slot_lists[i].push(Slot::Dart(2 * edge_of[u] + 1));
                    }
                }
            }
        }
    }
    let roots = [gidx[cd.roots[0]], gidx[cd.roots[1]], gidx[cd.roots[2]]];
    if roots.contains(&usize::MAX) {
        return Err(SurfaceError::SchnyderCheckFailed("a root is not in a white region".into()));
    }
    let host = EmbeddedGraph::from_darts(white.len(), ends, rot, None)
        .map_err(|e| SurfaceError::SchnyderCheckFailed(format!("G rotation invalid: {e}")))?;
    // outer face: the one holding the half-edge of the red root
    let outer = dart_before_half(&slot_lists[roots[0]], Color::R).map(|d| d ^ 1);
    let host = host.with_outer(outer);
    let sw = SchnyderWood { host, out_color, roots, slot_lists, vertex_face: white, melted };
    check_schnyder(&sw)?;
    Ok(sw)
}

/// Independent check of rules W1 to W4.
pub fn check_schnyder(sw: &SchnyderWood) -> Result<(), SurfaceError> {
    let g = &sw.host;
    let fail = |s: String| Err(SurfaceError::SchnyderCheckFailed(s));
    if !g.euler_ok() {
        return fail("G is not plane".into());
    }
    // W1: roots on the outer face in clockwise order r, g, b; every half-edge
    // in the outer face
    if g.m() > 0 {
        let Some(of) = g.outer_face() else { return fail("no outer face".into()) };
        for c in Color::ALL {
            let v = sw.roots[c.idx()];
            let Some(before) = dart_before_half(&sw.slot_lists[v], c) else {
                return fail(format!("root {v} has no edge"));
            };
            if g.face_of(before ^ 1) != of {
                return fail(format!("half-edge {c:?} not in the outer face"));
            }
        }
        let walk: Vec<usize> = g.faces()[of].iter().map(|&d| g.tail(d)).collect();
        let pos = |v: usize| walk.iter().position(|&x| x == v);
        let (Some(pr), Some(pg), Some(pb)) = (pos(sw.roots[0]), pos(sw.roots[1]), pos(sw.roots[2])) else {
            return fail("root missing from outer face".into());
        };
        let k = walk.len();
        let (dg, db) = ((pg + k - pr) % k, (pb + k - pr) % k);
        if !(dg < db) {
            return fail("roots not in clockwise order r, g, b".into());
        }
    } else if g.n() != 1 {
        return fail("edgeless G with several vertices".into());
    }
    // W2
    for e in 0..g.m() {
        match (sw.out_color[2 * e], sw.out_color[2 * e + 1]) {
            (None, None) => return fail(format!("edge {e} unoriented")),
            (Some(a), Some(b)) if a == b => return fail(format!("bioriented edge {e} with one color")),
            _ => {}
        }
    }
    // W3
    for v in 0..g.n() {
        let slots = sw.slots(v);
        let k = slots.len();
        let mut pos = [usize::MAX; 3];
        for (i, s) in slots.iter().enumerate() {
            let c = match *s {
                Slot::Half(c) => Some(c),
                Slot::Dart(d) => sw.out_color[d],
            };
            if let Some(c) = c {
                if pos[c.idx()] != usize::MAX {
                    return fail(format!("vertex {v} has two outgoing {c:?} edges"));
                }
                pos[c.idx()] = i;
            }
        }
        if pos.contains(&usize::MAX) {
            return fail(format!("vertex {v} misses an outgoing color"));
        }
        let rel = |i: usize| (i + k - pos[0]) % k;
        if !(rel(pos[1]) < rel(pos[2])) {
            return fail(format!("outgoing edges at {v} not clockwise r, g, b"));
        }
        for (i, s) in slots.iter().enumerate() {
            let Slot::Dart(d) = *s else { continue };
            if sw.out_color[d].is_some() {
                continue;
            }
            let Some(c) = sw.out_color[d ^ 1] else { continue };
            // strictly inside the clockwise sector from e_{c+1} to e_{c+2}
            let a = pos[c.next().idx()];
            let b = pos[c.prev().idx()];
            let off = |x: usize| (x + k - a) % k;
            if !(off(i) > 0 && off(i) < off(b)) {
                return fail(format!("incoming {c:?} edge at {v} outside its sector"));
            }
        }
    }
    // W4
    for (f, walk) in g.faces().iter().enumerate() {
        if Some(f) == g.outer_face() {
            continue;
        }
        for forward in [true, false] {
            let cols: Vec<Option<Color>> =
                walk.iter().map(|&d| if forward { sw.out_color[d] } else { sw.out_color[d ^ 1] }).collect();
            if let Some(Some(c0)) = cols.first() {
                if cols.iter().all(|&c| c == Some(*c0)) {
                    return fail(format!("face {f} is a monochromatic directed cycle"));
                }
            }
        }
    }
    Ok(())
}

/// Region vectors: `v_c` counts the bounded faces of `G` in the region
/// bounded by the paths of the two other colors.
pub fn region_vectors(sw: &SchnyderWood) -> Result<Vec<[i64; 3]>, SurfaceError> {
    let g = &sw.host;
    let n = g.n();
    let of = g.outer_face();
    let mut res = Vec::with_capacity(n);
    for v in 0..n {
        // paths
        let mut paths: [Vec<usize>; 3] = Default::default();
        let mut path_verts: [Vec<usize>; 3] = Default::default();
        for c in Color::ALL {
            let mut x = v;
            path_verts[c.idx()].push(x);
            let mut steps = 0;
            while x != sw.roots[c.idx()] {
                let Some(Slot::Dart(d)) = sw.out_edge(x, c) else {
                    return Err(SurfaceError::PathCollision(format!("no {c:?} edge at {x}")));
                };
                paths[c.idx()].push(d);
                x = g.head(d);
                path_verts[c.idx()].push(x);
                steps += 1;
                if steps > n {
                    return Err(SurfaceError::PathCollision(format!("{c:?} path from {v} cycles")));
                }
            }
        }
        for a in 0..3 {
            for b in a + 1..3 {
                if path_verts[a][1..].iter().any(|x| path_verts[b][1..].contains(x)) {
                    return Err(SurfaceError::PathCollision(format!("paths {a} and {b} of vertex {v} meet")));
                }
            }
        }
        let slots = sw.slots(v);
        let k = slots.len();
        let mut vec = [0i64; 3];
        for c in Color::ALL {
            if k == 0 || of.is_none() {
                break;
            }
            let mut blocked = vec![false; g.m()];
            for &d in paths[c.next().idx()].iter().chain(paths[c.prev().idx()].iter()) {
                blocked[d / 2] = true;
            }
            // seed: the face in the corner just clockwise after e_{c+1}
            let i = slots.iter().position(|s| sw_out(sw, s) == Some(c.next())).unwrap();
            // face containing the corner between slot i and slot i+1: find the
            // dart slot at or before i going counterclockwise
            let seed = corner_face(sw, v, &slots, i);
            let mut count = 0i64;
            if let Some(seed) = seed {
                if Some(seed) != of {
                    let mut seen = vec![false; g.faces().len()];
                    seen[seed] = true;
                    let mut stack = vec![seed];
                    while let Some(f) = stack.pop() {
                        count += 1;
                        for &d in &g.faces()[f] {
                            if blocked[d / 2] {
                                continue;
                            }
                            let h = g.face_of(d ^ 1);
                            if Some(h) != of && !seen[h] {
                                seen[h] = true;
                                stack.push(h);
                            }
                        }
                    }
                }
            }
            vec[c.idx()] = count;
        }
        res.push(vec);
    }
    Ok(res)
}

fn sw_out(sw: &SchnyderWood, s: &Slot) -> Option<Color> {
    match *s {
        Slot::Half(c) => Some(c),
        Slot::Dart(d) => sw.out_color[d],
    }
}

/// Face of `G` in the clockwise corner right after slot `i` at `v`.
fn corner_face(sw: &SchnyderWood, _v: usize, slots: &[Slot], i: usize) -> Option<usize> {
    let k = slots.len();
    // a corner between two slots: if the slot after is a half-edge, or the
    // slot itself is, the corner lies in the outer face
    match (slots[i], slots[(i + 1) % k]) {
        (Slot::Half(_), _) | (_, Slot::Half(_)) => sw.host.outer_face(),
        (Slot::Dart(d), Slot::Dart(_)) => Some(sw.host.face_of(d ^ 1)),
    }
}

/// Last dart counterclockwise before the half-edge of color `c`.
fn dart_before_half(slots: &[Slot], c: Color) -> Option<usize> {
    let k = slots.len();
    let i = slots.iter().position(|&s| s == Slot::Half(c))?;
    (1..k).map(|s| slots[(i + k - s) % k]).find_map(|s| match s {
        Slot::Dart(d) => Some(d),
        Slot::Half(_) => None,
    })
}
