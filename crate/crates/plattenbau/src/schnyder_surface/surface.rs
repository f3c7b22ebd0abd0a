//! Orthogonal surface generated by an antichain of integer points, computed
//! exactly on the grid spanned by the generator coordinates.

use super::SurfaceError;
use crate::graph_core::EmbeddedGraph;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum VertexKind {
    Minimum,
    Maximum,
    Saddle,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceVertex {
    pub point: [i64; 3],
    pub kind: VertexKind,
    /// the three flats through the vertex
    pub flats: [usize; 3],
    /// generator index for minima
    pub generator: Option<usize>,
}

/// Unbounded crease leaving `start` in the positive direction of `axis`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ray {
    pub start: usize,
    pub axis: usize,
    pub flats: [usize; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flat {
    /// normal axis
    pub axis: usize,
    pub level: i64,
    /// surface vertices on the boundary, sorted
    pub boundary: Vec<usize>,
    /// rays on the boundary (two for unbounded flats)
    pub rays: Vec<usize>,
}

impl Flat {
    pub fn is_bounded(&self) -> bool {
        self.rays.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct OrthogonalSurface {
    pub generators: Vec<[i64; 3]>,
    /// coordinate at which rays are cut: one more than the largest generator
    /// coordinate
    pub window: i64,
    pub vertices: Vec<SurfaceVertex>,
    pub flats: Vec<Flat>,
    pub rays: Vec<Ray>,
    /// vertices of the surface plus `v_inf`, rays ending at `v_inf`
    pub skeleton: EmbeddedGraph,
    pub v_inf: usize,
    /// flats of each skeleton edge
    pub edge_flats: Vec<[usize; 2]>,
}

fn unit(k: usize) -> [usize; 3] {
    let mut u = [0; 3];
    u[k] = 1;
    u
}

fn add(p: [usize; 3], q: [usize; 3]) -> [usize; 3] {
    [p[0] + q[0], p[1] + q[1], p[2] + q[2]]
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let n = self.0[y];
            self.0[y] = r;
            y = n;
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a.max(b)] = a.min(b);
        }
    }
}

/// Clockwise order of the six axis directions seen from `(1,1,1)`:
/// +x, -y, +z, -x, +y, -z.
fn direction_rank(axis: usize, positive: bool) -> usize {
    match (axis, positive) {
        (0, true) => 0,
        (1, false) => 1,
        (2, true) => 2,
        (0, false) => 3,
        (1, true) => 4,
        _ => 5,
    }
}

pub fn build_surface(generators: &[[i64; 3]]) -> Result<OrthogonalSurface, SurfaceError> {
    let degen = |s: String| Err(SurfaceError::Degenerate(s));
    if generators.is_empty() {
        return degen("no generators".into());
    }
    for (i, a) in generators.iter().enumerate() {
        if a.iter().any(|&x| x < 0) {
            return degen(format!("generator {i} has a negative coordinate"));
        }
        for b in &generators[i + 1..] {
            if (0..3).all(|k| a[k] <= b[k]) || (0..3).all(|k| b[k] <= a[k]) {
                return degen(format!("generators {a:?} and {b:?} are comparable"));
            }
        }
    }
    let m = generators.iter().flat_map(|g| g.iter().copied()).max().unwrap();
    let window = m + 1;
    let vals: [Vec<i64>; 3] = std::array::from_fn(|k| {
        let mut v: Vec<i64> = generators.iter().map(|g| g[k]).collect();
        v.push(window);
        v.sort_unstable();
        v.dedup();
        v
    });
    let len = [vals[0].len(), vals[1].len(), vals[2].len()];
    let cells = [len[0] - 1, len[1] - 1, len[2] - 1];
    let cidx = |c: [usize; 3]| (c[0] * cells[1] + c[1]) * cells[2] + c[2];
    // filter membership by prefix propagation
    let mut inside = vec![false; cells[0] * cells[1] * cells[2]];
    let mut gen_at: HashMap<[usize; 3], usize> = HashMap::new();
    for (i, g) in generators.iter().enumerate() {
        let c: [usize; 3] = std::array::from_fn(|k| vals[k].binary_search(&g[k]).unwrap());
        inside[cidx(c)] = true;
        gen_at.insert(c, i);
    }
    for a in 0..cells[0] {
        for b in 0..cells[1] {
            for c in 0..cells[2] {
                let here = cidx([a, b, c]);
                let up = (a > 0 && inside[cidx([a - 1, b, c])])
                    || (b > 0 && inside[cidx([a, b - 1, c])])
                    || (c > 0 && inside[cidx([a, b, c - 1])]);
                inside[here] |= up;
            }
        }
    }
    let cell_in = |c: [isize; 3]| -> bool {
        (0..3).all(|k| c[k] >= 0 && (c[k] as usize) < cells[k]) && inside[cidx([c[0] as usize, c[1] as usize, c[2] as usize])]
    };
    // facets: (axis, base grid point)
    let mut facets: Vec<(usize, [usize; 3])> = Vec::new();
    let mut facet_id: HashMap<(usize, [usize; 3]), usize> = HashMap::new();
    for a in 0..cells[0] {
        for b in 0..cells[1] {
            for c in 0..cells[2] {
                let p = [a, b, c];
                if !inside[cidx(p)] {
                    continue;
                }
                for k in 0..3 {
                    let mut q = [a as isize, b as isize, c as isize];
                    q[k] -= 1;
                    if !cell_in(q) {
                        facet_id.insert((k, p), facets.len());
                        facets.push((k, p));
                    }
                }
            }
        }
    }
    // flats: edge-connected coplanar facets
    let mut uf = UnionFind((0..facets.len()).collect());
    for (i, &(k, p)) in facets.iter().enumerate() {
        for j in [(k + 1) % 3, (k + 2) % 3] {
            if let Some(&o) = facet_id.get(&(k, add(p, unit(j)))) {
                uf.union(i, o);
            }
        }
    }
    let mut flat_of_root: HashMap<usize, usize> = HashMap::new();
    let mut facet_flat = vec![0; facets.len()];
    let mut flat_axis = Vec::new();
    let mut flat_level = Vec::new();
    for (i, &(k, p)) in facets.iter().enumerate() {
        let r = uf.find(i);
        let next = flat_of_root.len();
        let f = *flat_of_root.entry(r).or_insert_with(|| {
            flat_axis.push(k);
            flat_level.push(vals[k][p[k]]);
            next
        });
        facet_flat[i] = f;
    }
    // two flats of one plane meeting in a corner
    for (i, &(k, p)) in facets.iter().enumerate() {
        let (j, l) = ((k + 1) % 3, (k + 2) % 3);
        let mut q = add(p, unit(j));
        q = add(q, unit(l));
        let mut diag = vec![q];
        if p[l] > 0 {
            let mut r = add(p, unit(j));
            r[l] -= 1;
            diag.push(r);
        }
        for d in diag {
            if let Some(&o) = facet_id.get(&(k, d)) {
                if facet_flat[o] != facet_flat[i] {
                    return degen(format!("flats {} and {} touch in a corner", facet_flat[i], facet_flat[o]));
                }
            }
        }
    }
    // incidences of grid points and grid edges with flats
    let mut point_flats: HashMap<[usize; 3], Vec<usize>> = HashMap::new();
    let mut edge_flats: HashMap<([usize; 3], usize), Vec<usize>> = HashMap::new();
    for (i, &(k, p)) in facets.iter().enumerate() {
        let f = facet_flat[i];
        let (j, l) = ((k + 1) % 3, (k + 2) % 3);
        for q in [p, add(p, unit(j)), add(p, unit(l)), add(add(p, unit(j)), unit(l))] {
            let e = point_flats.entry(q).or_default();
            if !e.contains(&f) {
                e.push(f);
            }
        }
        for key in [(p, j), (add(p, unit(l)), j), (p, l), (add(p, unit(j)), l)] {
            edge_flats.entry(key).or_default().push(f);
        }
    }
    for (key, fl) in edge_flats.iter_mut() {
        fl.sort_unstable();
        fl.dedup();
        if fl.len() > 2 {
            return degen(format!("grid edge {key:?} lies on {} flats", fl.len()));
        }
    }
    let at_window = |q: &[usize; 3]| (0..3).any(|k| q[k] == len[k] - 1);
    let mut vpoints: Vec<[usize; 3]> = point_flats
        .iter()
        .filter(|(q, fl)| fl.len() >= 3 && !at_window(q))
        .map(|(q, _)| *q)
        .collect();
    vpoints.sort_unstable();
    let mut vertex_at: HashMap<[usize; 3], usize> = HashMap::new();
    let mut vertices = Vec::new();
    for &q in &vpoints {
        let mut fl = point_flats[&q].clone();
        if fl.len() > 3 {
            return degen(format!("point {:?} lies on {} flats", real(&vals, q), fl.len()));
        }
        fl.sort_unstable();
        let mut octants = 0;
        for mask in 0..8 {
            let c: [isize; 3] = std::array::from_fn(|k| q[k] as isize - ((mask >> k) & 1) as isize);
            if cell_in(c) {
                octants += 1;
            }
        }
        let kind = match octants {
            1 => VertexKind::Minimum,
            7 => VertexKind::Maximum,
            _ => VertexKind::Saddle,
        };
        vertex_at.insert(q, vertices.len());
        vertices.push(SurfaceVertex {
            point: real(&vals, q),
            kind,
            flats: [fl[0], fl[1], fl[2]],
            generator: if kind == VertexKind::Minimum { gen_at.get(&q).copied() } else { None },
        });
    }
    for (i, v) in vertices.iter().enumerate() {
        if v.kind == VertexKind::Minimum && v.generator.is_none() {
            return degen(format!("minimum {i} is not a generator"));
        }
    }
    if vertices.iter().filter(|v| v.kind == VertexKind::Minimum).count() != generators.len() {
        return degen("some generator is not a vertex".into());
    }
    // creases between vertices, and rays
    let nv = vertices.len();
    let v_inf = nv;
    let mut ends: Vec<[usize; 2]> = Vec::new();
    let mut eflats: Vec<[usize; 2]> = Vec::new();
    let mut rot_keyed: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nv + 1];
    let mut rays = Vec::new();
    for (vi, &q0) in vpoints.iter().enumerate() {
        for axis in 0..3 {
            for positive in [true, false] {
                let step = |q: [usize; 3]| -> Option<([usize; 3], ([usize; 3], usize))> {
                    if positive {
                        Some((add(q, unit(axis)), (q, axis)))
                    } else if q[axis] > 0 {
                        let mut r = q;
                        r[axis] -= 1;
                        Some((r, (r, axis)))
                    } else {
                        None
                    }
                };
                let Some((mut q, key)) = step(q0) else { continue };
                let Some(fl) = edge_flats.get(&key) else { continue };
                if fl.len() != 2 {
                    continue;
                }
                let pair = [fl[0], fl[1]];
                let end = loop {
                    if let Some(&w) = vertex_at.get(&q) {
                        break Some(w);
                    }
                    if q[axis] == len[axis] - 1 {
                        break None;
                    }
                    let Some((nq, key)) = step(q) else {
                        return degen("crease leaves the grid".into());
                    };
                    match edge_flats.get(&key) {
                        Some(f2) if f2[..] == pair[..] => q = nq,
                        _ => return degen(format!("crease from vertex {vi} ends at a non-vertex")),
                    }
                };
                match end {
                    Some(w) => {
                        // record each crease once, from its lower endpoint
                        if (vi, axis, positive) < (w, axis, !positive) {
                            let e = ends.len();
                            ends.push([vi, w]);
                            eflats.push(pair);
                            rot_keyed[vi].push((direction_rank(axis, positive), 2 * e));
                            rot_keyed[w].push((direction_rank(axis, !positive), 2 * e + 1));
                        }
                    }
                    None => {
                        if !positive {
                            return degen("ray in a negative direction".into());
                        }
                        let e = ends.len();
                        ends.push([vi, v_inf]);
                        eflats.push(pair);
                        rot_keyed[vi].push((direction_rank(axis, true), 2 * e));
                        // clockwise at infinity: +x, +y, +z
                        rot_keyed[v_inf].push((axis, 2 * e + 1));
                        rays.push(Ray { start: vi, axis, flats: pair });
                    }
                }
            }
        }
    }
    if rays.len() != 3 || {
        let mut ax: Vec<usize> = rays.iter().map(|r| r.axis).collect();
        ax.sort_unstable();
        ax != [0, 1, 2]
    } {
        return degen(format!("{} rays instead of one per axis", rays.len()));
    }
    let rot: Vec<Vec<usize>> = rot_keyed
        .into_iter()
        .map(|mut r| {
            r.sort_unstable();
            r.into_iter().map(|(_, d)| d).collect()
        })
        .collect();
    let skeleton = EmbeddedGraph::from_darts(nv + 1, ends, rot, None)
        .map_err(|e| SurfaceError::Degenerate(format!("skeleton: {e}")))?;
    let outer = skeleton.rotation(v_inf).first().copied();
    let skeleton = skeleton.with_outer(outer);
    let mut flats: Vec<Flat> = (0..flat_axis.len())
        .map(|f| Flat { axis: flat_axis[f], level: flat_level[f], boundary: Vec::new(), rays: Vec::new() })
        .collect();
    for (i, v) in vertices.iter().enumerate() {
        for &f in &v.flats {
            flats[f].boundary.push(i);
        }
    }
    for (i, r) in rays.iter().enumerate() {
        for &f in &r.flats {
            flats[f].rays.push(i);
        }
    }
    for (f, fl) in flats.iter().enumerate() {
        if fl.boundary.is_empty() {
            return degen(format!("flat {f} has no vertex"));
        }
        if !(fl.rays.is_empty() || fl.rays.len() == 2) {
            return degen(format!("flat {f} carries {} rays", fl.rays.len()));
        }
    }
    Ok(OrthogonalSurface {
        generators: generators.to_vec(),
        window,
        vertices,
        flats,
        rays,
        skeleton,
        v_inf,
        edge_flats: eflats,
    })
}

fn real(vals: &[Vec<i64>; 3], q: [usize; 3]) -> [i64; 3] {
    [vals[0][q[0]], vals[1][q[1]], vals[2][q[2]]]
}

impl OrthogonalSurface {
    /// Point where ray `r` is cut by the window.
    pub fn ray_point(&self, r: usize) -> [i64; 3] {
        let ray = &self.rays[r];
        let mut p = self.vertices[ray.start].point;
        p[ray.axis] = self.window;
        p
    }
}

/// The two extreme points of flat `f`. For a bounded flat normal to axis `i`
/// with `j = i+1`, `k = i+2`: the boundary vertex with least `j` (greatest `k`
/// among those) and the one with greatest `j` (least `k`). An unbounded flat
/// takes the points of its two rays.
pub fn flat_extreme_points(s: &OrthogonalSurface, f: usize) -> ([i64; 3], [i64; 3]) {
    let fl = &s.flats[f];
    let (j, k) = ((fl.axis + 1) % 3, (fl.axis + 2) % 3);
    let pts: Vec<[i64; 3]> = if fl.is_bounded() {
        fl.boundary.iter().map(|&v| s.vertices[v].point).collect()
    } else {
        fl.rays.iter().map(|&r| s.ray_point(r)).collect()
    };
    let a = *pts.iter().min_by_key(|p| (p[j], -p[k])).unwrap();
    let b = *pts.iter().max_by_key(|p| (p[j], -p[k])).unwrap();
    (a, b)
}
