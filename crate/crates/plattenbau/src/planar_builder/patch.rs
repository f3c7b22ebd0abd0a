//! Gluing the representation of a babet's inside into the convex corner at
//! the saddle point of the cleaned surface.

use super::rects::place;
use super::PlanarError;
use crate::plattenbau_geom::{Plattenbau, Q};
use crate::schnyder_surface::{OrthogonalSurface, VertexKind};
use serde::{Deserialize, Serialize};

/// Where and how a child was placed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatchRecord {
    pub babet: [usize; 3],
    pub saddle: [i64; 3],
    pub scale: Q,
    /// Child axis `i` becomes host axis `axis_map[i]`.
    pub axis_map: [usize; 3],
    /// Direction of the free corner along each host axis.
    pub signs: [i8; 3],
    /// Image of the child point with all coordinates zero.
    pub translation: [Q; 3],
}

/// Sign pattern of the free octant at saddle `u` bounded by the three flats:
/// the only free octant with two of its face neighbors inside the filter.
fn corner_signs(s: &OrthogonalSurface, u: [i64; 3]) -> Option<[i8; 3]> {
    let inside = |sg: [i8; 3]| {
        s.generators.iter().any(|g| (0..3).all(|k| 2 * g[k] <= 2 * u[k] + i64::from(sg[k])))
    };
    let mut found = None;
    for mask in 0..8u8 {
        let sg: [i8; 3] = std::array::from_fn(|k| if mask >> k & 1 == 1 { 1 } else { -1 });
        if inside(sg) {
            continue;
        }
        let filled = (0..3)
            .filter(|&k| {
                let mut t = sg;
                t[k] = -t[k];
                inside(t)
            })
            .count();
        if filled == 2 {
            if found.is_some() {
                return None;
            }
            found = Some(sg);
        }
    }
    found
}

/// Smallest positive distance from `u` to another grid plane of the host.
fn corner_gap(s: &OrthogonalSurface, u: [i64; 3]) -> Option<i64> {
    (0..3)
        .flat_map(|k| {
            s.generators.iter().map(move |g| g[k]).chain([s.window]).map(move |c| (c - u[k]).abs())
        })
        .filter(|&d| d > 0)
        .min()
}

/// Patch `child` into the corner at surface vertex `saddle` of `host_surface`.
/// Rectangle ids of `child` must already be ids of the host; the three
/// babet rectangles of the child are dropped in favour of the host's
/// coplanar ones. The child is scaled by `g / (2 D)`.
pub fn patch(
    host: &Plattenbau,
    host_surface: &OrthogonalSurface,
    saddle: usize,
    child: &Plattenbau,
    babet: [usize; 3],
) -> Result<(Plattenbau, PatchRecord), PlanarError> {
    let sv = &host_surface.vertices[saddle];
    if sv.kind != VertexKind::Saddle {
        return Err(PlanarError::Degenerate(format!("surface vertex {saddle} is not a saddle")));
    }
    let u = sv.point;
    let signs = corner_signs(host_surface, u)
        .ok_or_else(|| PlanarError::Degenerate(format!("no unique convex corner at {u:?}")))?;
    let find = |p: &Plattenbau, id: usize| {
        p.index_of(id)
            .map(|i| p.rects[i].clone())
            .ok_or_else(|| PlanarError::Degenerate(format!("babet vertex {id} has no rectangle")))
    };
    let mut axis_map = [usize::MAX; 3];
    let mut origin: [Q; 3] = std::array::from_fn(|_| Q::zero());
    for &v in &babet {
        let (h, c) = (find(host, v)?, find(child, v)?);
        let ci = c.axis.idx();
        if axis_map[ci] != usize::MAX {
            return Err(PlanarError::Degenerate("babet vertices share a color in the child".into()));
        }
        axis_map[ci] = h.axis.idx();
        origin[ci] = c.offset.clone();
    }
    let mut seen = axis_map;
    seen.sort_unstable();
    if seen != [0, 1, 2] {
        return Err(PlanarError::Degenerate("babet vertices share a color in the host".into()));
    }
    let origin_ref = &origin;
    let extent = (0..3)
        .flat_map(|k| child.rects.iter().map(move |r| r.hi(k) - &origin_ref[k]))
        .max()
        .filter(|d| d.is_positive())
        .ok_or_else(|| PlanarError::CornerTooSmall("child has no extent".into()))?;
    let g = corner_gap(host_surface, u).ok_or_else(|| PlanarError::CornerTooSmall(format!("no gap at {u:?}")))?;
    let scale = &Q::int(g) / &(&extent * &Q::int(2));
    let base: [Q; 3] = u.map(Q::int);
    let mut rects = host.rects.clone();
    for r in &child.rects {
        let placed = place(r, axis_map, signs, &scale, &origin, &base);
        if babet.contains(&r.id) {
            // the child's outer rectangle must merge into the host's
            let h = find(host, r.id)?;
            let (lo, hi) = placed.bounds();
            if h.axis != placed.axis || !h.contains_box(&lo, &hi) {
                return Err(PlanarError::CornerTooSmall(format!("outer rectangle {} does not merge", r.id)));
            }
        } else {
            rects.push(placed);
        }
    }
    let translation: [Q; 3] = std::array::from_fn(|h| {
        let i = axis_map.iter().position(|&x| x == h).expect("permutation");
        let shift = &scale * &origin[i];
        if signs[h] > 0 {
            &base[h] - &shift
        } else {
            &base[h] + &shift
        }
    });
    let record = PatchRecord { babet, saddle: u, scale, axis_map, signs, translation };
    Ok((Plattenbau { rects, outer: host.outer }, record))
}
