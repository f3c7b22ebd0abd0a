//! Hand-made Plattenbauten with known touching graphs.

use super::rect::{Axis, Rect3};
use super::{GeomError, Plattenbau, Q};
use serde::{Deserialize, Serialize};

fn iv(a: Q, b: Q) -> [Q; 2] {
    [a, b]
}

fn qi(v: i64) -> Q {
    Q::int(v)
}

/// The six faces of the unit cube, in the order x=0, x=1, y=0, y=1, z=0, z=1,
/// all designated outer.
pub fn cube_faces() -> Plattenbau {
    let mut rects = Vec::new();
    for a in Axis::ALL {
        for o in 0..2 {
            rects.push(Rect3::new(rects.len(), a, qi(o), iv(qi(0), qi(1)), iv(qi(0), qi(1))));
        }
    }
    Plattenbau { rects, outer: Some([0, 1, 2, 3, 4, 5]) }
}

/// `K_{m,n}`: `m` coplanar strips normal to x, crossed edge-on by `n`
/// parallel rectangles normal to y.
pub fn fixture_kmn(m: usize, n: usize) -> Plattenbau {
    let mut rects = Vec::new();
    for i in 0..m as i64 {
        rects.push(Rect3::new(rects.len(), Axis::X, qi(0), iv(qi(0), qi(1)), iv(qi(2 * i), qi(2 * i + 1))));
    }
    let top = 2 * m as i64 - 1;
    for j in 0..n as i64 {
        let y = Q::new(j + 1, n as i64 + 1);
        rects.push(Rect3::new(rects.len(), Axis::Y, y, iv(qi(0), qi(1)), iv(qi(0), qi(top.max(1)))));
    }
    Plattenbau::new(rects)
}

/// `K_{2,2,n}`: a four-walled tube with `n` floors.
pub fn fixture_k22n(n: usize) -> Plattenbau {
    let mut rects = vec![
        Rect3::new(0, Axis::X, qi(0), iv(qi(-1), qi(2)), iv(qi(0), qi(1))),
        Rect3::new(1, Axis::X, qi(1), iv(qi(-1), qi(2)), iv(qi(0), qi(1))),
        Rect3::new(2, Axis::Y, qi(0), iv(qi(0), qi(1)), iv(qi(0), qi(1))),
        Rect3::new(3, Axis::Y, qi(1), iv(qi(0), qi(1)), iv(qi(0), qi(1))),
    ];
    for k in 0..n as i64 {
        let z = Q::new(k + 1, n as i64 + 1);
        rects.push(Rect3::new(rects.len(), Axis::Z, z, iv(qi(0), qi(1)), iv(qi(0), qi(1))));
    }
    Plattenbau::new(rects)
}

/// The twelve unit squares with a corner at the origin; they pairwise meet.
pub fn origin_squares() -> Plattenbau {
    let mut rects = Vec::new();
    let side = |s: i64| if s > 0 { iv(qi(0), qi(1)) } else { iv(qi(-1), qi(0)) };
    for a in Axis::ALL {
        for s1 in [-1, 1] {
            for s2 in [-1, 1] {
                rects.push(Rect3::new(rects.len(), a, qi(0), side(s1), side(s2)));
            }
        }
    }
    Plattenbau::new(rects)
}

/// An axis-aligned segment in the plane between `a` and `b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Segment2 {
    pub a: [Q; 2],
    pub b: [Q; 2],
}

impl Segment2 {
    pub fn new(a: [i64; 2], b: [i64; 2]) -> Segment2 {
        Segment2 { a: [qi(a[0]), qi(a[1])], b: [qi(b[0]), qi(b[1])] }
    }

    fn horizontal(&self) -> bool {
        self.a[1] == self.b[1]
    }

    fn range(&self, k: usize) -> [Q; 2] {
        [Q::min_of(&self.a[k], &self.b[k]).clone(), Q::max_of(&self.a[k], &self.b[k]).clone()]
    }

    fn meets(&self, o: &Segment2) -> bool {
        (0..2).all(|k| {
            let (r, s) = (self.range(k), o.range(k));
            r[0] <= s[1] && s[0] <= r[1]
        })
    }
}

/// Lift a grid intersection representation to 3-space: horizontal segments
/// become thin rectangles in the plane z=0 (slightly lengthened), vertical
/// ones stand up in z. The touching graph is the intersection graph of the
/// segments.
pub fn lift_segments(segs: &[Segment2]) -> Result<Plattenbau, GeomError> {
    for (i, s) in segs.iter().enumerate() {
        let h = s.a[1] == s.b[1];
        let v = s.a[0] == s.b[0];
        if h == v {
            return Err(GeomError::InvalidSegments(format!("segment {i} is not axis-aligned with positive length")));
        }
    }
    for i in 0..segs.len() {
        for j in i + 1..segs.len() {
            if segs[i].horizontal() == segs[j].horizontal() && segs[i].meets(&segs[j]) {
                return Err(GeomError::InvalidSegments(format!("parallel segments {i} and {j} meet")));
            }
        }
    }
    let mut gap: Option<Q> = None;
    for k in 0..2 {
        let mut vals: Vec<&Q> = segs.iter().flat_map(|s| [&s.a[k], &s.b[k]]).collect();
        vals.sort();
        vals.dedup();
        for w in vals.windows(2) {
            let d = w[1] - w[0];
            if gap.as_ref().is_none_or(|g| &d < g) {
                gap = Some(d);
            }
        }
    }
    let d = gap.unwrap_or_else(Q::one).half().half();
    let rects = segs
        .iter()
        .enumerate()
        .map(|(i, s)| {
            if s.horizontal() {
                let x = s.range(0);
                let y = &s.a[1];
                Rect3::new(i, Axis::Z, Q::zero(), [&x[0] - &d, &x[1] + &d], [y - &d, y + &d])
            } else {
                Rect3::new(i, Axis::X, s.a[0].clone(), s.range(1), [Q::zero(), d.clone()])
            }
        })
        .collect();
    Ok(Plattenbau::new(rects))
}
