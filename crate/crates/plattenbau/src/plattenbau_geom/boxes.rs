//! Boxes: the box transform, box intersection graphs and the room
//! decomposition used for the boxed check.

use super::rect::{ContactKind, Owner, Rect3};
use super::{min_gap, GeomError, Plattenbau, Q};
use crate::exec::Exec;
use crate::graph_core::Graph;
use serde::{Deserialize, Serialize};
use std::collections::HashSet;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Box3 {
    pub lo: [Q; 3],
    pub hi: [Q; 3],
}

impl Box3 {
    pub fn intersects(&self, o: &Box3) -> bool {
        (0..3).all(|k| self.lo[k] <= o.hi[k] && o.lo[k] <= self.hi[k])
    }

    pub fn interiors_meet(&self, o: &Box3) -> bool {
        (0..3).all(|k| self.lo[k] < o.hi[k] && o.lo[k] < self.hi[k])
    }
}

/// Turn every rectangle into a thin box so that the boxes intersect exactly
/// for touching pairs. Each side of a rectangle retreats by `eps`, except a
/// side that reaches into the interior of a touching partner, which retreats
/// by `eps/2`; then the rectangle is thickened by `eps/2` along its normal.
/// `eps` is a quarter of the minimum coordinate gap.
pub fn to_boxes(p: &Plattenbau) -> Result<Vec<Box3>, GeomError> {
    let contacts = p.contacts(Exec::Sequential)?;
    let Some(gap) = min_gap(p) else { return Ok(Vec::new()) };
    let eps = gap.half().half();
    let half = eps.half();
    // partners owning the interior of a touch, per rectangle
    let mut owners: Vec<Vec<usize>> = vec![Vec::new(); p.len()];
    for c in &contacts {
        if let ContactKind::Touch { owner, .. } = c.kind {
            match owner {
                Owner::First => owners[c.b].push(c.a),
                Owner::Second => owners[c.a].push(c.b),
            }
        }
    }
    let mut out = Vec::with_capacity(p.len());
    for (i, r) in p.rects.iter().enumerate() {
        let (mut lo, mut hi) = r.bounds();
        let anchored = |k: usize, side_hi: bool| -> bool {
            let (mut elo, mut ehi) = r.bounds();
            if side_hi {
                elo[k] = ehi[k].clone();
            } else {
                ehi[k] = elo[k].clone();
            }
            let edge = Rect3Box { lo: elo, hi: ehi };
            // the edge runs along the remaining in-plane axis
            let d = r.axis.others().into_iter().find(|&d| d != k).unwrap();
            owners[i].iter().any(|&a| edge.meets_interior_of(&p.rects[a], d))
        };
        for k in r.axis.others() {
            let dl = if anchored(k, false) { &half } else { &eps };
            let dh = if anchored(k, true) { &half } else { &eps };
            lo[k] = &lo[k] + dl;
            hi[k] = &hi[k] - dh;
        }
        let a = r.axis.idx();
        lo[a] = &lo[a] - &half;
        hi[a] = &hi[a] + &half;
        out.push(Box3 { lo, hi });
    }
    Ok(out)
}

struct Rect3Box {
    lo: [Q; 3],
    hi: [Q; 3],
}

impl Rect3Box {
    /// A stretch of positive length along `d` lies in the interior of `a`;
    /// a single corner point does not count.
    fn meets_interior_of(&self, a: &Rect3, d: usize) -> bool {
        let lo: [Q; 3] = std::array::from_fn(|k| Q::max_of(&self.lo[k], a.lo(k)).clone());
        let hi: [Q; 3] = std::array::from_fn(|k| Q::min_of(&self.hi[k], a.hi(k)).clone());
        if (0..3).any(|k| lo[k] > hi[k]) || lo[d] >= hi[d] {
            return false;
        }
        a.axis.others().iter().all(|&k| lo[k] < hi[k] || (a.lo(k) < &lo[k] && &lo[k] < a.hi(k)))
    }
}

pub fn box_intersection_graph(boxes: &[Box3]) -> Graph {
    let n = boxes.len();
    let mut e = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if boxes[i].intersects(&boxes[j]) {
                e.push((i, j));
            }
        }
    }
    Graph::new(n, e).expect("distinct pairs")
}

pub fn boxes_interiorly_disjoint(boxes: &[Box3]) -> bool {
    (0..boxes.len()).all(|i| (i + 1..boxes.len()).all(|j| !boxes[i].interiors_meet(&boxes[j])))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxedReport {
    pub boxed: bool,
    pub reason: Option<String>,
    /// Bounded regions inside the outer box, each a box when `boxed`.
    pub rooms: Vec<Box3>,
}

impl BoxedReport {
    fn fail(reason: String) -> BoxedReport {
        BoxedReport { boxed: false, reason: Some(reason), rooms: Vec::new() }
    }
}

pub fn is_boxed(p: &Plattenbau) -> Result<BoxedReport, GeomError> {
    p.contacts(Exec::Sequential)?;
    let outer = p.outer_indices().ok_or(GeomError::NoOuterDesignated)?;
    // outer box
    let mut lo: [Option<Q>; 3] = Default::default();
    let mut hi: [Option<Q>; 3] = Default::default();
    let mut per_axis = [0; 3];
    for &i in &outer {
        let r = &p.rects[i];
        let a = r.axis.idx();
        per_axis[a] += 1;
        match (&lo[a], &hi[a]) {
            (None, _) => lo[a] = Some(r.offset.clone()),
            (Some(l), None) => {
                if &r.offset > l {
                    hi[a] = Some(r.offset.clone());
                } else {
                    hi[a] = lo[a].take();
                    lo[a] = Some(r.offset.clone());
                }
            }
            _ => {}
        }
    }
    if per_axis != [2, 2, 2] {
        return Ok(BoxedReport::fail("outer rectangles are not two per axis".into()));
    }
    let (Some(l0), Some(l1), Some(l2), Some(h0), Some(h1), Some(h2)) =
        (lo[0].clone(), lo[1].clone(), lo[2].clone(), hi[0].clone(), hi[1].clone(), hi[2].clone())
    else {
        return Ok(BoxedReport::fail("opposite outer rectangles share a plane".into()));
    };
    let blo = [l0, l1, l2];
    let bhi = [h0, h1, h2];
    for &i in &outer {
        let r = &p.rects[i];
        if !r.axis.others().iter().all(|&k| r.lo(k) == &blo[k] && r.hi(k) == &bhi[k]) {
            return Ok(BoxedReport::fail(format!("outer rectangle {} is not a full box side", r.id)));
        }
    }
    for r in &p.rects {
        if !(0..3).all(|k| &blo[k] <= r.lo(k) && r.hi(k) <= &bhi[k]) {
            return Ok(BoxedReport::fail(format!("rectangle {} leaves the outer box", r.id)));
        }
    }
    // grid of elementary cells
    let vals: [Vec<Q>; 3] = std::array::from_fn(|k| {
        let mut v: Vec<Q> = p.rects.iter().flat_map(|r| [r.lo(k).clone(), r.hi(k).clone()]).collect();
        v.sort();
        v.dedup();
        v
    });
    let cells = [vals[0].len() - 1, vals[1].len() - 1, vals[2].len() - 1];
    let idx = |k: usize, q: &Q| vals[k].binary_search(q).expect("grid value");
    // blocked[k] holds (plane index, cell j, cell l) for faces normal to k
    let mut blocked: [HashSet<[usize; 3]>; 3] = Default::default();
    for r in &p.rects {
        let k = r.axis.idx();
        let [j, l] = r.axis.others();
        let pk = idx(k, &r.offset);
        for cj in idx(j, r.lo(j))..idx(j, r.hi(j)) {
            for cl in idx(l, r.lo(l))..idx(l, r.hi(l)) {
                let mut key = [0; 3];
                key[k] = pk;
                key[j] = cj;
                key[l] = cl;
                blocked[k].insert(key);
            }
        }
    }
    let total = cells[0] * cells[1] * cells[2];
    let cid = |c: [usize; 3]| (c[0] * cells[1] + c[1]) * cells[2] + c[2];
    let mut region = vec![usize::MAX; total];
    let mut rooms = Vec::new();
    for a in 0..cells[0] {
        for b in 0..cells[1] {
            for c in 0..cells[2] {
                let start = [a, b, c];
                if region[cid(start)] != usize::MAX {
                    continue;
                }
                let rid = rooms.len();
                region[cid(start)] = rid;
                let mut stack = vec![start];
                let mut members = Vec::new();
                while let Some(x) = stack.pop() {
                    members.push(x);
                    for k in 0..3 {
                        // up: face at plane x[k]+1
                        if x[k] + 1 < cells[k] {
                            let mut face = x;
                            face[k] = x[k] + 1;
                            if !blocked[k].contains(&face) {
                                let y = face;
                                if region[cid(y)] == usize::MAX {
                                    region[cid(y)] = rid;
                                    stack.push(y);
                                }
                            }
                        }
                        if x[k] > 0 {
                            let face = x;
                            if !blocked[k].contains(&face) {
                                let mut y = x;
                                y[k] -= 1;
                                if region[cid(y)] == usize::MAX {
                                    region[cid(y)] = rid;
                                    stack.push(y);
                                }
                            }
                        }
                    }
                }
                let mn: [usize; 3] = std::array::from_fn(|k| members.iter().map(|m| m[k]).min().unwrap());
                let mx: [usize; 3] = std::array::from_fn(|k| members.iter().map(|m| m[k]).max().unwrap());
                let volume: usize = (0..3).map(|k| mx[k] - mn[k] + 1).product();
                let room = Box3 {
                    lo: std::array::from_fn(|k| vals[k][mn[k]].clone()),
                    hi: std::array::from_fn(|k| vals[k][mx[k] + 1].clone()),
                };
                if volume != members.len() {
                    return Ok(BoxedReport::fail(format!("region {rid} is not a box")));
                }
                // no rectangle piece inside the region
                for m in &members {
                    for k in 0..3 {
                        if m[k] + 1 <= mx[k] {
                            let mut face = *m;
                            face[k] += 1;
                            if blocked[k].contains(&face) {
                                return Ok(BoxedReport::fail(format!("a rectangle dangles inside region {rid}")));
                            }
                        }
                    }
                }
                rooms.push(room);
            }
        }
    }
    Ok(BoxedReport { boxed: true, reason: None, rooms })
}
