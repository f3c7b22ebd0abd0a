//! Reading graph, orientation and neighbourhood embeddings off a proper
//! boxed Plattenbau.
//!
//! Every face of `SQ(v)` is a room with `R_v` as one of its walls, or the
//! exterior for an outer `v`. If the room lies on the `+e_i` side of `R_v`
//! its four side walls, in the order `+j, +k, -j, -k` for cyclic `(i, j, k)`,
//! run counterclockwise seen from outside the sphere; on the `-e_i` side
//! the order reverses.

use super::view::View;
use super::{BoxedError, BoxedInstance, Sq};
use crate::exec::Exec;
use crate::plattenbau_geom::{is_boxed, is_proper, ContactKind, Owner, Plattenbau, Q};
use std::collections::{BTreeMap, BTreeSet};

/// Extracted data keyed by rectangle id, plus the wall sets of the rooms.
#[derive(Clone, Debug)]
pub struct Extracted {
    pub(crate) view: View,
    /// Sorted ids of the six walls of each room.
    pub rooms: Vec<[usize; 6]>,
}

fn fail(s: impl Into<String>) -> BoxedError {
    BoxedError::ExtractionFailed(s.into())
}

pub fn extract(p: &Plattenbau) -> Result<Extracted, BoxedError> {
    let geom = |e: crate::plattenbau_geom::GeomError| fail(e.to_string());
    let (proper, _) = is_proper(p).map_err(geom)?;
    if !proper {
        return Err(BoxedError::NotProper);
    }
    let rep = is_boxed(p).map_err(geom)?;
    if !rep.boxed {
        return Err(BoxedError::NotBoxed(rep.reason.unwrap_or_default()));
    }
    let outer_ids = p.outer.ok_or_else(|| fail("no outer rectangles"))?;
    let id = |i: usize| p.rects[i].id;
    let mut adj: BTreeMap<usize, BTreeSet<usize>> = p.rects.iter().map(|r| (r.id, BTreeSet::new())).collect();
    let mut out = adj.clone();
    if adj.len() != p.rects.len() {
        return Err(fail("duplicate rectangle ids"));
    }
    for c in p.contacts(Exec::Sequential).map_err(geom)? {
        let (a, b) = (id(c.a), id(c.b));
        let (ab, ba) = match c.kind {
            ContactKind::Touch { owner: Owner::First, .. } => (false, true),
            ContactKind::Touch { owner: Owner::Second, .. } => (true, false),
            ContactKind::WeakEdgeToEdge { .. } if outer_ids.contains(&a) && outer_ids.contains(&b) => (true, true),
            _ => continue,
        };
        adj.get_mut(&a).unwrap().insert(b);
        adj.get_mut(&b).unwrap().insert(a);
        if ab {
            out.get_mut(&a).unwrap().insert(b);
        }
        if ba {
            out.get_mut(&b).unwrap().insert(a);
        }
    }
    // the outer box and its walls
    let mut walls_out: [[Option<usize>; 2]; 3] = [[None; 2]; 3];
    for r in p.rects.iter().filter(|r| outer_ids.contains(&r.id)) {
        let k = r.axis.idx();
        if walls_out[k][0].is_none() {
            walls_out[k][0] = Some(r.id);
        } else {
            walls_out[k][1] = Some(r.id);
        }
    }
    let mut outer_walls = [[0usize; 2]; 3];
    for k in 0..3 {
        let [Some(a), Some(b)] = walls_out[k] else { return Err(fail("outer rectangles are not two per axis")) };
        let (ra, rb) = (&p.rects[p.index_of(a).unwrap()], &p.rects[p.index_of(b).unwrap()]);
        outer_walls[k] = if ra.offset < rb.offset { [a, b] } else { [b, a] };
    }
    let wall = |i: usize, at: &Q, lo: &[Q; 3], hi: &[Q; 3]| -> Result<usize, BoxedError> {
        let [j, k] = [(i + 1) % 3, (i + 2) % 3];
        let found: Vec<usize> = p
            .rects
            .iter()
            .filter(|r| {
                r.axis.idx() == i && &r.offset == at && r.lo(j) <= &lo[j] && &hi[j] <= r.hi(j) && r.lo(k) <= &lo[k] && &hi[k] <= r.hi(k)
            })
            .map(|r| r.id)
            .collect();
        match found[..] {
            [w] => Ok(w),
            _ => Err(fail(format!("room side at axis {i}, {at} is covered by {} rectangles", found.len()))),
        }
    };
    let mut faces: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
    // cyclic (i, j, k); side walls in the order +j, +k, -j, -k
    let add = |w: [[usize; 2]; 3], faces: &mut BTreeMap<usize, Vec<Vec<usize>>>, exterior: bool| {
        for i in 0..3 {
            let [j, k] = [(i + 1) % 3, (i + 2) % 3];
            let plus = vec![w[j][1], w[k][1], w[j][0], w[k][0]];
            let minus: Vec<usize> = plus.iter().rev().copied().collect();
            // a room lies on the + side of its low wall; the exterior on the
            // - side of the low box wall
            let (low, high) = if exterior { (minus, plus) } else { (plus, minus) };
            faces.entry(w[i][0]).or_default().push(low);
            faces.entry(w[i][1]).or_default().push(high);
        }
    };
    let mut rooms = Vec::with_capacity(rep.rooms.len());
    for room in &rep.rooms {
        let mut w = [[0usize; 2]; 3];
        for i in 0..3 {
            w[i] = [wall(i, &room.lo[i], &room.lo, &room.hi)?, wall(i, &room.hi[i], &room.lo, &room.hi)?];
        }
        add(w, &mut faces, false);
        let mut ids: Vec<usize> = w.iter().flatten().copied().collect();
        ids.sort_unstable();
        rooms.push(<[usize; 6]>::try_from(ids).unwrap());
    }
    add(outer_walls, &mut faces, true);
    let mut sq = BTreeMap::new();
    for &v in adj.keys() {
        let fs = faces.remove(&v).unwrap_or_default();
        let s = Sq::from_faces(&fs).ok_or_else(|| fail(format!("faces around rectangle {v} do not form a sphere")))?;
        sq.insert(v, s);
    }
    Ok(Extracted { view: View { adj, out, outer: outer_ids, sq }, rooms })
}

/// The instance of a proper boxed Plattenbau whose ids are `0..n`.
pub fn verify_necessity(p: &Plattenbau) -> Result<BoxedInstance, BoxedError> {
    extract(p)?.view.to_instance().ok_or_else(|| fail("rectangle ids are not 0..n"))
}
