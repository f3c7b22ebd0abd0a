//! Proper boxed Plattenbauten for testing, grown from the unit cube.

use crate::plattenbau_geom::{cube_faces, is_boxed, Axis, Plattenbau, Rect3, Q};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Split one room of `p` by a rectangle normal to `axis` at fraction `t` of
/// its extent. The new rectangle gets the next free id.
pub fn split_room(p: &Plattenbau, room: usize, axis: Axis, t: &Q) -> Option<Plattenbau> {
    let rep = is_boxed(p).ok()?;
    let b = rep.rooms.get(room)?;
    let k = axis.idx();
    let at = &b.lo[k] + &(&(&b.hi[k] - &b.lo[k]) * t);
    let mut lo = b.lo.clone();
    let mut hi = b.hi.clone();
    lo[k] = at.clone();
    hi[k] = at;
    let id = p.rects.iter().map(|r| r.id + 1).max().unwrap_or(0);
    let mut out = p.clone();
    out.rects.push(Rect3::from_corners(id, &lo, &hi)?);
    Some(out)
}

/// `count` instances with 7 to `max_n` rectangles, each grown by random
/// room splits; reproducible from `seed`.
pub fn room_split_corpus(seed: u64, count: usize, max_n: usize) -> Vec<Plattenbau> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    if max_n < 7 {
        return out;
    }
    for _ in 0..count {
        let target = rng.gen_range(7..=max_n);
        let mut p = cube_faces();
        while p.rects.len() < target {
            let rooms = is_boxed(&p).map(|r| r.rooms.len()).unwrap_or(0);
            let den = rng.gen_range(2..=5);
            let t = Q::new(rng.gen_range(1..den), den);
            let axis = Axis::from_idx(rng.gen_range(0..3));
            p = split_room(&p, rng.gen_range(0..rooms), axis, &t).expect("room split");
        }
        out.push(p);
    }
    out
}

/// Four walls in a pinwheel around a central room, full height; no room
/// split sequence produces it.
pub fn pinwheel() -> Plattenbau {
    let q = Q::int;
    let r = |id, lo: [i64; 3], hi: [i64; 3]| Rect3::from_corners(id, &lo.map(q), &hi.map(q)).unwrap();
    let rects = vec![
        r(0, [0, 0, 0], [0, 3, 1]),
        r(1, [3, 0, 0], [3, 3, 1]),
        r(2, [0, 0, 0], [3, 0, 1]),
        r(3, [0, 3, 0], [3, 3, 1]),
        r(4, [0, 0, 0], [3, 3, 0]),
        r(5, [0, 0, 1], [3, 3, 1]),
        r(6, [0, 1, 0], [2, 1, 1]),
        r(7, [2, 0, 0], [2, 2, 1]),
        r(8, [1, 2, 0], [3, 2, 1]),
        r(9, [1, 1, 0], [1, 3, 1]),
    ];
    Plattenbau { rects, outer: Some([0, 1, 2, 3, 4, 5]) }
}
