//! The identification induction: collapse an inner vertex `c` onto the
//! opposite outer vertex `C` of a cell, build the smaller instance, then
//! split `R_C` again.

use super::cells::{cells_view, check_claims_view, Cell};
use super::conditions::{check_conditions, check_view};
use super::necessity::extract;
use super::sq::cyclic_eq;
use super::view::View;
use super::{BoxedError, BoxedInstance, Sq};
use crate::plattenbau_geom::{Axis, Plattenbau, Rect3, Q};
use std::collections::BTreeSet;

/// A proper boxed Plattenbau with touching graph `inst.graph` whose
/// rectangle ids are the vertices; rooms match cells, contacts match the
/// orientation and the neighbourhood embeddings.
pub fn build_boxed(inst: &BoxedInstance) -> Result<Plattenbau, BoxedError> {
    let rep = check_conditions(inst);
    if !rep.all_pass() {
        return Err(BoxedError::ConditionsFailed(rep.first_failure().unwrap_or_default()));
    }
    let mut p = build_rec(&inst.view())?;
    p.rects.sort_by_key(|r| r.id);
    Ok(p)
}

/// Roles in one step: `c` merges into the outer `cc`; `big` are the other
/// two outer vertices of the chosen triangle and `small` their opposites.
#[derive(Clone, Copy, Debug)]
struct Step {
    c: usize,
    cc: usize,
    big: [usize; 2],
    small: [usize; 2],
}

fn broken(s: impl Into<String>) -> BoxedError {
    BoxedError::InvariantBroken(s.into())
}

fn build_rec(v: &View) -> Result<Plattenbau, BoxedError> {
    let cells = cells_view(v)?;
    check_claims_view(v, &cells)?;
    if v.adj.len() == 6 {
        return base(v, &cells);
    }
    let st = choose(v, &cells)?;
    log::debug!("identify {} into {}", st.c, st.cc);
    let smaller = identify(v, &st)?;
    let rep = check_view(&smaller);
    if !rep.all_pass() {
        return Err(broken(format!("identifying {} into {}: {}", st.c, st.cc, rep.first_failure().unwrap_or_default())));
    }
    let p = build_rec(&smaller)?;
    let p = split(&p, &st)?;
    verify_lemma(v, &cells, &p)?;
    Ok(p)
}

/// The six sides of the unit cube, opposite vertices on parallel sides;
/// of the eight placements the first with matching embeddings is taken.
fn base(v: &View, cells: &[Cell]) -> Result<Plattenbau, BoxedError> {
    let mut pairs: Vec<[usize; 2]> = Vec::new();
    for &o in &v.outer {
        let opp = v.outer.iter().copied().find(|&w| w != o && !v.has_edge(o, w)).ok_or_else(|| broken("outer vertices are not an octahedron"))?;
        if o < opp {
            pairs.push([o, opp]);
        }
    }
    pairs.sort_unstable();
    let mut last = None;
    for mask in 0..8 {
        let mut rects = Vec::new();
        for (k, pr) in pairs.iter().enumerate() {
            let flip = mask >> k & 1 == 1;
            let (lo, hi) = if flip { (pr[1], pr[0]) } else { (pr[0], pr[1]) };
            for (id, off) in [(lo, 0), (hi, 1)] {
                let unit = [Q::zero(), Q::one()];
                rects.push(Rect3::new(id, Axis::from_idx(k), Q::int(off), unit.clone(), unit));
            }
        }
        rects.sort_by_key(|r| r.id);
        let p = Plattenbau { rects, outer: Some(v.outer) };
        match verify_lemma(v, cells, &p) {
            Ok(()) => return Ok(p),
            Err(e) => last = Some(e),
        }
    }
    Err(last.unwrap_or_else(|| broken("no base placement")))
}

fn choose(v: &View, cells: &[Cell]) -> Result<Step, BoxedError> {
    let t = v
        .triangles()
        .into_iter()
        .find(|t| t.iter().all(|&x| v.is_outer(x)))
        .ok_or_else(|| broken("no outer triangle"))?;
    for r in 0..3 {
        let (x, y, z) = (t[r], t[(r + 1) % 3], t[(r + 2) % 3]);
        if v.adj[&x].iter().all(|&w| v.is_outer(w)) {
            continue;
        }
        // the face at edge yz on the inner side of SQ(x)
        let faces = v.sq[&x].faces().ok_or_else(|| broken(format!("SQ({x}) is inconsistent")))?;
        let face = faces
            .iter()
            .find(|f| {
                let k = f.len();
                let has_yz = (0..k).any(|i| {
                    let (p, q) = (f[i], f[(i + 1) % k]);
                    (p == y && q == z) || (p == z && q == y)
                });
                has_yz && f.iter().any(|&w| !v.is_outer(w))
            })
            .ok_or_else(|| broken(format!("SQ({x}) has no inner face at {y}-{z}")))?;
        let cell = cells
            .iter()
            .find(|c| c.vertices.contains(&x) && face.iter().all(|w| c.vertices.contains(w)))
            .ok_or_else(|| BoxedError::ClaimViolation { claim: 4, detail: format!("face {face:?} of SQ({x}) lies in no cell") })?;
        let opp = |u: usize| cell.opposite(u, v).ok_or_else(|| broken(format!("cell {:?} is not an octahedron", cell.vertices)));
        let smalls = [opp(x)?, opp(y)?, opp(z)?];
        let mut order = smalls;
        order.sort_unstable();
        let c = order
            .iter()
            .copied()
            .find(|&s| smalls.iter().all(|&o| o == s || v.points(s, o)))
            .ok_or_else(|| BoxedError::ClaimViolation { claim: 2, detail: format!("triangle {smalls:?} has no apex") })?;
        if v.is_outer(c) {
            return Err(BoxedError::ClaimViolation { claim: 2, detail: format!("apex {c} of {smalls:?} is outer") });
        }
        let cc = opp(c)?;
        let mut big: Vec<usize> = [x, y, z].into_iter().filter(|&w| w != cc).collect();
        big.sort_unstable();
        let big = [big[0], big[1]];
        let small = [opp(big[0])?, opp(big[1])?];
        let ring: BTreeSet<usize> = [big[0], big[1], small[0], small[1]].into_iter().collect();
        if v.common(c, cc) != ring {
            let detail = format!("N({c}) and N({cc}) share {:?}, expected {ring:?}", v.common(c, cc));
            return Err(BoxedError::ClaimViolation { claim: 5, detail });
        }
        return Ok(Step { c, cc, big, small });
    }
    Err(broken("no vertex of the outer triangle has an inner neighbour"))
}

fn faces_of(v: &View, x: usize) -> Result<Vec<Vec<usize>>, BoxedError> {
    v.sq[&x].faces().ok_or_else(|| broken(format!("SQ({x}) is inconsistent")))
}

fn identify(v: &View, st: &Step) -> Result<View, BoxedError> {
    let (c, cc) = (st.c, st.cc);
    let ring: BTreeSet<usize> = [st.big[0], st.big[1], st.small[0], st.small[1]].into_iter().collect();
    let is_ring = |f: &Vec<usize>| f.len() == 4 && f.iter().copied().collect::<BTreeSet<_>>() == ring;
    let mut w = v.clone();
    // SQ(cc): paste SQ(c) into the ring face
    let mut fc_big = faces_of(v, cc)?;
    let mut fc_small = faces_of(v, c)?;
    if !fc_big.iter().any(is_ring) || !fc_small.iter().any(is_ring) {
        return Err(broken(format!("ring is no face of SQ({cc}) or SQ({c})")));
    }
    // a degree-4 neighbourhood has the ring as both faces; take any pair
    // of opposite orientation
    let pair = (0..fc_big.len()).filter(|&i| is_ring(&fc_big[i])).find_map(|i| {
        (0..fc_small.len()).find(|&j| is_ring(&fc_small[j]) && cyclic_eq(&fc_big[i], &fc_small[j].iter().rev().copied().collect::<Vec<_>>())).map(|j| (i, j))
    });
    let Some((i, j)) = pair else {
        return Err(broken("ring faces of the merged neighbourhoods have the same orientation"));
    };
    fc_big.swap_remove(i);
    fc_small.swap_remove(j);
    fc_big.extend(fc_small);
    w.sq.insert(cc, Sq::from_faces(&fc_big).ok_or_else(|| broken(format!("pasting SQ({c}) into SQ({cc}) fails")))?);
    // ring vertices: collapse the face holding both c and cc
    for &x in &ring {
        let mut fs = faces_of(v, x)?;
        let k = fs
            .iter()
            .position(|f| f.contains(&c) && f.contains(&cc))
            .ok_or_else(|| broken(format!("{c} and {cc} share no face of SQ({x})")))?;
        fs.swap_remove(k);
        let fs: Vec<Vec<usize>> = fs.into_iter().map(|f| f.into_iter().map(|y| if y == c { cc } else { y }).collect()).collect();
        w.sq.insert(x, Sq::from_faces(&fs).ok_or_else(|| broken(format!("collapsing in SQ({x}) fails")))?);
    }
    for &x in &v.adj[&c] {
        if !ring.contains(&x) {
            w.sq.insert(x, v.sq[&x].renamed(c, cc));
        }
    }
    w.sq.remove(&c);
    for &x in &v.adj[&c] {
        let a = w.adj.get_mut(&x).unwrap();
        a.remove(&c);
        a.insert(cc);
        w.adj.get_mut(&cc).unwrap().insert(x);
    }
    w.adj.remove(&c);
    w.out.remove(&c);
    for o in w.out.values_mut() {
        if o.remove(&c) {
            o.insert(cc);
        }
    }
    Ok(w)
}

fn rect<'a>(p: &'a Plattenbau, id: usize) -> Result<&'a Rect3, BoxedError> {
    p.index_of(id).map(|i| &p.rects[i]).ok_or_else(|| broken(format!("no rectangle {id}")))
}

/// Undo one identification: in the corner of `R_C` fenced by the two other
/// outer rectangles and the rectangles of their opposites, pull every
/// rectangle standing on `R_C` back by `eps` and lay `R_c` under them.
fn split(p: &Plattenbau, st: &Step) -> Result<Plattenbau, BoxedError> {
    let r = rect(p, st.cc)?;
    let i = r.axis.idx();
    let z0 = r.offset.clone();
    let other = p
        .rects
        .iter()
        .find(|q| q.id != st.cc && q.axis == r.axis && p.outer.is_some_and(|o| o.contains(&q.id)))
        .ok_or_else(|| broken("outer rectangle without a parallel partner"))?;
    let inward = other.offset > z0;
    let (ra, rb) = (rect(p, st.big[0])?, rect(p, st.big[1])?);
    let (sa, sb) = (rect(p, st.small[0])?, rect(p, st.small[1])?);
    let (ja, jb) = (ra.axis.idx(), rb.axis.idx());
    if ja == i || jb == i || ja == jb || sa.axis != ra.axis || sb.axis != rb.axis {
        return Err(broken("corner rectangles are not axis-aligned as expected"));
    }
    let mut qlo: [Q; 3] = std::array::from_fn(|_| Q::zero());
    let mut qhi: [Q; 3] = std::array::from_fn(|_| Q::zero());
    for (k, u, w) in [(ja, ra, sa), (jb, rb, sb)] {
        qlo[k] = Q::min_of(&u.offset, &w.offset).clone();
        qhi[k] = Q::max_of(&u.offset, &w.offset).clone();
        if qlo[k] >= qhi[k] {
            return Err(broken("corner region is degenerate"));
        }
    }
    let mut vals: Vec<&Q> = p.rects.iter().flat_map(|q| [q.lo(i), q.hi(i)]).collect();
    vals.sort();
    vals.dedup();
    let gap = vals.windows(2).map(|w| w[1] - w[0]).min().ok_or_else(|| broken("no extent along the normal"))?;
    let eps = gap.half();
    let znew = if inward { &z0 + &eps } else { &z0 - &eps };
    let fixed = [st.cc, st.big[0], st.big[1], st.small[0], st.small[1]];
    let mut out = p.clone();
    for q in out.rects.iter_mut().filter(|q| !fixed.contains(&q.id) && q.axis.idx() != i) {
        let end = if inward { q.lo(i) } else { q.hi(i) };
        if end != &z0 {
            continue;
        }
        let within = [ja, jb].iter().all(|&k| qlo[k] <= *q.lo(k) && q.hi(k) <= &qhi[k]);
        let meets = [ja, jb].iter().all(|&k| q.lo(k) < &qhi[k] && &qlo[k] < q.hi(k));
        if within {
            q.span_mut(i)[usize::from(!inward)] = znew.clone();
        } else if meets {
            return Err(broken(format!("rectangle {} crosses the corner region", q.id)));
        }
    }
    qlo[i] = znew.clone();
    qhi[i] = znew;
    let new = Rect3::from_corners(st.c, &qlo, &qhi).ok_or_else(|| broken("new rectangle is degenerate"))?;
    out.rects.push(new);
    out.rects.sort_by_key(|q| q.id);
    Ok(out)
}

/// I1 to I4 for `p` against `v`.
fn verify_lemma(v: &View, cells: &[Cell], p: &Plattenbau) -> Result<(), BoxedError> {
    let ex = extract(p).map_err(|e| broken(format!("result is not proper and boxed: {e}")))?;
    let g = &ex.view;
    if g.adj != v.adj {
        return Err(broken("touching graph differs from the instance"));
    }
    let so: BTreeSet<usize> = v.outer.iter().copied().collect();
    if g.outer.iter().copied().collect::<BTreeSet<_>>() != so {
        return Err(broken("I1: outer rectangles differ"));
    }
    let mut want: Vec<[usize; 6]> = cells.iter().map(|c| c.vertices).collect();
    let mut outer_sorted = v.outer;
    outer_sorted.sort_unstable();
    let k = want.iter().position(|c| c == &outer_sorted).ok_or_else(|| broken("I2: no outer cell"))?;
    want.remove(k);
    want.sort_unstable();
    let mut got = ex.rooms.clone();
    got.sort_unstable();
    if got != want {
        return Err(broken("I2: rooms do not match cells"));
    }
    if g.out != v.out {
        return Err(broken("I3: contact directions differ from the orientation"));
    }
    if let Some(x) = v.vertices().find(|x| g.sq.get(x) != v.sq.get(x)) {
        return Err(broken(format!("I4: spherical order around {x} differs")));
    }
    Ok(())
}
