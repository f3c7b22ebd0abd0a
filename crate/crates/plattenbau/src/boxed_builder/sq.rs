//! Spherical embeddings of vertex neighbourhoods, stored as rotations.
//!
//! `rot[w]` lists the neighbours of `w` clockwise, seen from outside the
//! sphere. Faces are traced counterclockwise: after the dart `u -> w` comes
//! `w -> rot[w].next_after(u)`.

use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sq {
    pub rot: BTreeMap<usize, Vec<usize>>,
}

fn rotate_min_first(v: &mut [usize]) {
    if let Some(i) = v.iter().enumerate().min_by_key(|p| p.1).map(|p| p.0) {
        v.rotate_left(i);
    }
}

/// Whether `a` and `b` are the same cyclic sequence.
pub(crate) fn cyclic_eq(a: &[usize], b: &[usize]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    (0..b.len()).any(|s| (0..a.len()).all(|i| a[i] == b[(i + s) % b.len()]))
}

impl Sq {
    pub fn vertices(&self) -> BTreeSet<usize> {
        self.rot.keys().copied().collect()
    }

    pub fn edges(&self) -> BTreeSet<(usize, usize)> {
        let mut e = BTreeSet::new();
        for (&w, nb) in &self.rot {
            for &x in nb {
                e.insert((w.min(x), w.max(x)));
            }
        }
        e
    }

    /// Clockwise successor of `x` around `w`.
    pub fn cw_next(&self, w: usize, x: usize) -> Option<usize> {
        let r = self.rot.get(&w)?;
        let i = r.iter().position(|&y| y == x)?;
        Some(r[(i + 1) % r.len()])
    }

    /// Each list starts at its smallest entry, so equal embeddings compare
    /// equal.
    pub fn canonical(&self) -> Sq {
        let mut rot = self.rot.clone();
        for r in rot.values_mut() {
            rotate_min_first(r);
        }
        Sq { rot }
    }

    pub fn mirrored(&self) -> Sq {
        let mut rot = self.rot.clone();
        for r in rot.values_mut() {
            r.reverse();
        }
        Sq { rot }.canonical()
    }

    /// Whether the rotations are symmetric (`x` around `w` iff `w` around `x`)
    /// and free of repeats.
    pub fn is_consistent(&self) -> bool {
        self.rot.iter().all(|(&w, nb)| {
            let set: BTreeSet<usize> = nb.iter().copied().collect();
            set.len() == nb.len() && !set.contains(&w) && nb.iter().all(|x| self.rot.get(x).is_some_and(|r| r.contains(&w)))
        })
    }

    /// Faces as counterclockwise vertex cycles, or `None` if inconsistent.
    pub fn faces(&self) -> Option<Vec<Vec<usize>>> {
        if !self.is_consistent() {
            return None;
        }
        let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
        let mut faces = Vec::new();
        for (&w, nb) in &self.rot {
            for &x in nb {
                if seen.contains(&(w, x)) {
                    continue;
                }
                let mut face = Vec::new();
                let (mut u, mut v) = (w, x);
                while seen.insert((u, v)) {
                    face.push(u);
                    let nx = self.cw_next(v, u)?;
                    u = v;
                    v = nx;
                }
                if (u, v) != (w, x) {
                    return None;
                }
                faces.push(face);
            }
        }
        Some(faces)
    }

    /// Rotations from counterclockwise faces; `None` if the faces do not
    /// close up around some vertex.
    pub fn from_faces(faces: &[Vec<usize>]) -> Option<Sq> {
        let mut succ: BTreeMap<usize, BTreeMap<usize, usize>> = BTreeMap::new();
        for f in faces {
            let k = f.len();
            for t in 0..k {
                let (p, w, x) = (f[(t + k - 1) % k], f[t], f[(t + 1) % k]);
                if succ.entry(w).or_default().insert(p, x).is_some() {
                    return None;
                }
            }
        }
        let mut rot = BTreeMap::new();
        for (w, s) in succ {
            let start = *s.keys().next()?;
            let mut cyc = vec![start];
            let mut cur = s[&start];
            while cur != start {
                if cyc.len() > s.len() {
                    return None;
                }
                cyc.push(cur);
                cur = *s.get(&cur)?;
            }
            if cyc.len() != s.len() {
                return None;
            }
            rot.insert(w, cyc);
        }
        let sq = Sq { rot }.canonical();
        sq.is_consistent().then_some(sq)
    }

    /// Rename vertex `from` to `to` (which must not already occur).
    pub fn renamed(&self, from: usize, to: usize) -> Sq {
        let f = |x: usize| if x == from { to } else { x };
        let rot = self.rot.iter().map(|(&w, nb)| (f(w), nb.iter().map(|&x| f(x)).collect())).collect();
        Sq { rot }.canonical()
    }

    /// Why this is not a spherical quadrangulation of the graph with vertex
    /// set `verts` and edge set `edges`, if it is not.
    pub fn quadrangulation_error(&self, verts: &BTreeSet<usize>, edges: &BTreeSet<(usize, usize)>) -> Option<String> {
        if &self.vertices() != verts {
            return Some("vertex set differs from the neighbourhood".into());
        }
        if &self.edges() != edges {
            return Some("edges differ from the induced neighbourhood".into());
        }
        let Some(faces) = self.faces() else { return Some("rotations are inconsistent".into()) };
        if let Some(f) = faces.iter().find(|f| f.len() != 4) {
            return Some(format!("face {f:?} is not a quadrangle"));
        }
        let (nv, ne, nf) = (verts.len() as i64, edges.len() as i64, faces.len() as i64);
        if nv < 4 || ne != 2 * nv - 4 {
            return Some(format!("{ne} edges on {nv} vertices, expected 2n-4"));
        }
        if nv - ne + nf != 2 {
            return Some("not a sphere (Euler characteristic)".into());
        }
        if !bipartite(verts, edges) {
            return Some("not bipartite".into());
        }
        None
    }

    /// Whether the cyclic sequence `cycle` bounds a face, in either direction.
    pub fn has_face(&self, cycle: &[usize]) -> bool {
        let rev: Vec<usize> = cycle.iter().rev().copied().collect();
        self.faces().is_some_and(|fs| fs.iter().any(|f| cyclic_eq(f, cycle) || cyclic_eq(f, &rev)))
    }
}

/// Two-colouring by search; also fails on disconnected input.
fn bipartite(verts: &BTreeSet<usize>, edges: &BTreeSet<(usize, usize)>) -> bool {
    let mut side: BTreeMap<usize, bool> = BTreeMap::new();
    let Some(&s) = verts.iter().next() else { return true };
    side.insert(s, false);
    let mut stack = vec![s];
    while let Some(x) = stack.pop() {
        let sx = side[&x];
        for &(a, b) in edges {
            let y = if a == x {
                b
            } else if b == x {
                a
            } else {
                continue;
            };
            match side.get(&y) {
                Some(&sy) if sy == sx => return false,
                Some(_) => {}
                None => {
                    side.insert(y, !sx);
                    stack.push(y);
                }
            }
        }
    }
    side.len() == verts.len()
}
