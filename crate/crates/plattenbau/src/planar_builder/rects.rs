//! Rectangles spanned by flats, and the expansion that turns weak contacts
//! into true ones.

use super::PlanarError;
use crate::exec::Exec;
use crate::graph_core::{Color, EmbeddedGraph, Graph};
use crate::plattenbau_geom::{classify_contact, min_gap, Axis, ContactKind, Plattenbau, Rect3, Q};
use crate::schnyder_surface::{flat_extreme_points, OrthogonalSurface, SchnyderWood, VertexKind};

fn q3(p: [i64; 3]) -> [Q; 3] {
    p.map(Q::int)
}

/// One rectangle per flat, spanned by its two extreme points; rectangle id
/// is the flat index.
pub fn rectangles_from_surface(s: &OrthogonalSurface) -> Result<Plattenbau, PlanarError> {
    let mut rects = Vec::with_capacity(s.flats.len());
    for f in 0..s.flats.len() {
        let (a, b) = flat_extreme_points(s, f);
        let r = Rect3::from_corners(f, &q3(a), &q3(b))
            .filter(|r| r.axis.idx() == s.flats[f].axis)
            .ok_or_else(|| PlanarError::Degenerate(format!("flat {f} spans no rectangle: {a:?} {b:?}")))?;
        rects.push(r);
    }
    Ok(Plattenbau::new(rects))
}

/// Vertex of `T` represented by each flat. A flat normal to axis `i`
/// contains a minimum; the minimum is a generator, hence a white-region
/// triangle of `T`, and the flat is that triangle's corner of color `i`.
pub fn flat_vertices(
    s: &OrthogonalSurface,
    sw: &SchnyderWood,
    t: &EmbeddedGraph,
    colors: &[Color],
) -> Result<Vec<usize>, PlanarError> {
    let mut out = Vec::with_capacity(s.flats.len());
    let mut used = vec![false; t.n()];
    for (f, fl) in s.flats.iter().enumerate() {
        let gen = fl
            .boundary
            .iter()
            .find_map(|&v| (s.vertices[v].kind == VertexKind::Minimum).then_some(s.vertices[v].generator).flatten())
            .ok_or_else(|| PlanarError::Degenerate(format!("flat {f} has no minimum")))?;
        let face = sw.vertex_face[gen];
        let v = t
            .face_vertices(face)
            .into_iter()
            .find(|&v| colors[v].idx() == fl.axis)
            .ok_or_else(|| PlanarError::Degenerate(format!("face {face} lacks color {}", fl.axis)))?;
        if used[v] {
            return Err(PlanarError::Degenerate(format!("vertex {v} owns two flats")));
        }
        used[v] = true;
        out.push(v);
    }
    if out.len() != t.n() {
        return Err(PlanarError::Degenerate(format!("{} flats for {} vertices", out.len(), t.n())));
    }
    Ok(out)
}

/// Extend one side of a rectangle outward by `d`.
fn extended(r: &Rect3, k: usize, high: bool, d: &Q) -> Rect3 {
    let mut r = r.clone();
    let span = r.span_mut(k);
    if high {
        span[1] = &span[1] + d;
    } else {
        span[0] = &span[0] - d;
    }
    r
}

/// Candidate moves for a weak pair: sides of either rectangle that carry
/// the contact, rectangle with the smaller id first.
fn candidates(a: &Rect3, b: &Rect3) -> Vec<(bool, usize, bool)> {
    let Some((lo, hi)) = crate::plattenbau_geom::intersection(a, b) else { return Vec::new() };
    let mut out = Vec::new();
    let order = if a.id <= b.id { [(false, a), (true, b)] } else { [(true, b), (false, a)] };
    for (second, r) in order {
        for k in r.axis.others() {
            if lo[k] == hi[k] {
                if &lo[k] == r.lo(k) {
                    out.push((second, k, false));
                }
                if &hi[k] == r.hi(k) {
                    out.push((second, k, true));
                }
            }
        }
    }
    out
}

/// Whether replacing rectangle `me` by `moved` keeps the configuration legal:
/// no overlaps, proper touches stay proper, touches stay touches, and new
/// touches only on expected pairs.
fn legal_move(p: &Plattenbau, me: usize, moved: &Rect3, exp: &dyn Fn(&Rect3, &Rect3) -> bool) -> bool {
    (0..p.len()).filter(|&o| o != me).all(|o| {
        let before = classify_contact(&p.rects[me], &p.rects[o]);
        let after = classify_contact(moved, &p.rects[o]);
        let proper = |k: ContactKind| matches!(k, ContactKind::Touch { edge_contained: true, .. });
        after != ContactKind::ViolatingOverlap
            && (!proper(before) || proper(after))
            && (!before.is_touch() || after.is_touch())
            && (!after.is_touch() || before.is_touch() || exp(moved, &p.rects[o]))
    })
}

/// Turn every weak contact into a true contact by moving one boundary side
/// outward by half the current minimum gap. Pairs are handled in id order;
/// the first move (smaller id first) that yields a proper contact wins,
/// otherwise the first legal one. A second pass makes improper touches
/// proper by stretching the owning rectangle over the partner's edge, or
/// else trimming the partner to it. Moves may only create contacts that are
/// edges of `expected` (a graph on rectangle ids). Returns the number of
/// moves made.
pub fn resolve_weak_contacts(p: &Plattenbau, expected: &Graph) -> Result<(Plattenbau, usize), PlanarError> {
    let mut p = p.clone();
    let exp = |a: &Rect3, b: &Rect3| a.id < expected.n && b.id < expected.n && expected.has_edge(a.id, b.id);
    let contacts = p.contacts(Exec::Sequential)?;
    let mut weak = Vec::new();
    for c in &contacts {
        if c.kind.is_weak() {
            let (a, b) = (&p.rects[c.a], &p.rects[c.b]);
            if !exp(a, b) {
                return Err(PlanarError::ResolutionBrokeGeometry(format!(
                    "weak contact between non-adjacent {} and {}",
                    a.id, b.id
                )));
            }
            weak.push((a.id.min(b.id), a.id.max(b.id), c.a, c.b));
        }
    }
    weak.sort_unstable();
    let mut moves = 0;
    for (_, _, i, j) in weak {
        if !classify_contact(&p.rects[i], &p.rects[j]).is_weak() {
            continue;
        }
        let delta = min_gap(&p).expect("two rectangles").half();
        let mut chosen: Option<(usize, Rect3)> = None;
        for (second, k, high) in candidates(&p.rects[i], &p.rects[j]) {
            let (me, other) = if second { (j, i) } else { (i, j) };
            let moved = extended(&p.rects[me], k, high, &delta);
            let ContactKind::Touch { edge_contained, .. } = classify_contact(&moved, &p.rects[other]) else {
                continue;
            };
            if !legal_move(&p, me, &moved, &exp) {
                continue;
            }
            if edge_contained {
                chosen = Some((me, moved));
                break;
            }
            if chosen.is_none() {
                chosen = Some((me, moved));
            }
        }
        let Some((me, moved)) = chosen else {
            return Err(PlanarError::ResolutionBrokeGeometry(format!(
                "no legal expansion for {} and {}",
                p.rects[i].id, p.rects[j].id
            )));
        };
        p.rects[me] = moved;
        moves += 1;
    }
    moves += make_proper(&mut p, &exp)?;
    Ok((p, moves))
}

fn make_proper(p: &mut Plattenbau, exp: &dyn Fn(&Rect3, &Rect3) -> bool) -> Result<usize, PlanarError> {
    let mut moves = 0;
    loop {
        let mut bad: Vec<(usize, usize, usize, usize)> = p
            .contacts(Exec::Sequential)?
            .into_iter()
            .filter_map(|c| match c.kind {
                ContactKind::Touch { owner, edge_contained: false } => {
                    let (o, a) = if owner == crate::plattenbau_geom::Owner::First { (c.a, c.b) } else { (c.b, c.a) };
                    let (x, y) = (p.rects[o].id, p.rects[a].id);
                    Some((x.min(y), x.max(y), o, a))
                }
                _ => None,
            })
            .collect();
        bad.sort_unstable();
        let Some(&(_, _, o, a)) = bad.first() else { return Ok(moves) };
        if moves > 4 * p.len() * p.len() {
            return Err(PlanarError::ResolutionBrokeGeometry("properness repair does not terminate".into()));
        }
        let (ro, ra) = (&p.rects[o], &p.rects[a]);
        let mut tries: Vec<(usize, Rect3)> = Vec::new();
        for k in ro.axis.others() {
            if k == ra.axis.idx() {
                continue;
            }
            // stretch the owner over the partner's extent along k
            let mut s = ro.clone();
            let span = s.span_mut(k);
            span[0] = Q::min_of(&span[0], ra.lo(k)).clone();
            span[1] = Q::max_of(&span[1], ra.hi(k)).clone();
            tries.push((o, s));
            // or trim the partner to the owner's extent
            let mut s = ra.clone();
            let span = s.span_mut(k);
            span[0] = Q::max_of(&span[0], ro.lo(k)).clone();
            span[1] = Q::min_of(&span[1], ro.hi(k)).clone();
            if s.is_valid() {
                tries.push((a, s));
            }
        }
        let pick = tries.into_iter().find(|(me, moved)| {
            let other = if *me == o { a } else { o };
            matches!(classify_contact(moved, &p.rects[other]), ContactKind::Touch { edge_contained: true, .. })
                && legal_move(p, *me, moved, exp)
        });
        let Some((me, moved)) = pick else {
            return Err(PlanarError::ResolutionBrokeGeometry(format!(
                "improper contact {}-{} cannot be repaired",
                p.rects[o].id, p.rects[a].id
            )));
        };
        p.rects[me] = moved;
        moves += 1;
    }
}

/// Affine placement of a rectangle: axis `i` goes to axis `perm[i]`, point
/// coordinate `x` to `base[perm[i]] + sign[perm[i]] * scale * (x - origin[i])`.
pub(crate) fn place(r: &Rect3, perm: [usize; 3], sign: [i8; 3], scale: &Q, origin: &[Q; 3], base: &[Q; 3]) -> Rect3 {
    let mut lo: [Q; 3] = std::array::from_fn(|_| Q::zero());
    let mut hi: [Q; 3] = std::array::from_fn(|_| Q::zero());
    for i in 0..3 {
        let h = perm[i];
        let f = |x: &Q| {
            let d = scale * &(x - &origin[i]);
            if sign[h] > 0 {
                &base[h] + &d
            } else {
                &base[h] - &d
            }
        };
        let (a, b) = (f(r.lo(i)), f(r.hi(i)));
        if a <= b {
            lo[h] = a;
            hi[h] = b;
        } else {
            lo[h] = b;
            hi[h] = a;
        }
    }
    let axis = Axis::from_idx(perm[r.axis.idx()]);
    let [j, k] = axis.others();
    Rect3::new(r.id, axis, lo[axis.idx()].clone(), [lo[j].clone(), hi[j].clone()], [lo[k].clone(), hi[k].clone()])
}
