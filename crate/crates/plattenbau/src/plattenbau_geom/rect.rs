//! Axis-aligned rectangles and pairwise contact classification.

use super::rational::Q;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Axis {
    #[serde(rename = "x")]
    X,
    #[serde(rename = "y")]
    Y,
    #[serde(rename = "z")]
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub fn idx(self) -> usize {
        self as usize
    }

    pub fn from_idx(i: usize) -> Axis {
        Axis::ALL[i]
    }

    /// The two other axes, ascending.
    pub fn others(self) -> [usize; 2] {
        match self {
            Axis::X => [1, 2],
            Axis::Y => [0, 2],
            Axis::Z => [0, 1],
        }
    }

    pub fn letter(self) -> char {
        ['x', 'y', 'z'][self.idx()]
    }
}

/// Closed rectangle normal to `axis` at `offset`. `span1` and `span2` are
/// the intervals on the two other axes in ascending axis order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Rect3 {
    pub id: usize,
    pub axis: Axis,
    pub offset: Q,
    pub span1: [Q; 2],
    pub span2: [Q; 2],
}

impl Rect3 {
    pub fn new(id: usize, axis: Axis, offset: Q, span1: [Q; 2], span2: [Q; 2]) -> Rect3 {
        Rect3 { id, axis, offset, span1, span2 }
    }

    /// From two opposite corners lying in a common axis plane.
    pub fn from_corners(id: usize, a: &[Q; 3], b: &[Q; 3]) -> Option<Rect3> {
        let flat: Vec<usize> = (0..3).filter(|&k| a[k] == b[k]).collect();
        if flat.len() != 1 {
            return None;
        }
        let axis = Axis::from_idx(flat[0]);
        let [j, k] = axis.others();
        let iv = |i: usize| [Q::min_of(&a[i], &b[i]).clone(), Q::max_of(&a[i], &b[i]).clone()];
        Some(Rect3 { id, axis, offset: a[flat[0]].clone(), span1: iv(j), span2: iv(k) })
    }

    pub fn is_valid(&self) -> bool {
        self.span1[0] < self.span1[1] && self.span2[0] < self.span2[1]
    }

    pub fn lo(&self, k: usize) -> &Q {
        if k == self.axis.idx() {
            &self.offset
        } else if k == self.axis.others()[0] {
            &self.span1[0]
        } else {
            &self.span2[0]
        }
    }

    pub fn hi(&self, k: usize) -> &Q {
        if k == self.axis.idx() {
            &self.offset
        } else if k == self.axis.others()[0] {
            &self.span1[1]
        } else {
            &self.span2[1]
        }
    }

    pub fn span_mut(&mut self, k: usize) -> &mut [Q; 2] {
        if k == self.axis.others()[0] {
            &mut self.span1
        } else {
            assert_eq!(k, self.axis.others()[1], "no span along the normal axis");
            &mut self.span2
        }
    }

    pub fn bounds(&self) -> ([Q; 3], [Q; 3]) {
        (
            std::array::from_fn(|k| self.lo(k).clone()),
            std::array::from_fn(|k| self.hi(k).clone()),
        )
    }

    /// The four boundary edges as (lo, hi) corner pairs.
    pub fn edges(&self) -> [([Q; 3], [Q; 3]); 4] {
        let (lo, hi) = self.bounds();
        let [j, k] = self.axis.others();
        let with = |base: &[Q; 3], i: usize, v: &Q| {
            let mut p = base.clone();
            p[i] = v.clone();
            p
        };
        [
            (lo.clone(), with(&hi, k, &lo[k])),
            (with(&lo, k, &hi[k]), hi.clone()),
            (lo.clone(), with(&hi, j, &lo[j])),
            (with(&lo, j, &hi[j]), hi.clone()),
        ]
    }

    /// Whether the closed axis box `[lo, hi]` lies in this rectangle.
    pub fn contains_box(&self, lo: &[Q; 3], hi: &[Q; 3]) -> bool {
        (0..3).all(|k| self.lo(k) <= &lo[k] && &hi[k] <= self.hi(k))
    }

    /// Whether the closed box `[lo, hi]` (a subset of this rectangle) meets
    /// the relative interior.
    fn box_meets_interior(&self, lo: &[Q; 3], hi: &[Q; 3]) -> bool {
        self.axis.others().iter().all(|&k| lo[k] < hi[k] || (self.lo(k) < &lo[k] && &lo[k] < self.hi(k)))
    }
}

/// Which rectangle of the pair contains interior points of the intersection.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Owner {
    First,
    Second,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ContactKind {
    Disjoint,
    /// Intersection holds interior points of exactly `owner`;
    /// `edge_contained` when a full boundary edge of one lies in the other.
    Touch { owner: Owner, edge_contained: bool },
    /// Nonempty intersection without interior points of either.
    WeakEdgeToEdge { edge_contained: bool },
    ViolatingOverlap,
}

impl ContactKind {
    pub fn is_touch(&self) -> bool {
        matches!(self, ContactKind::Touch { .. })
    }

    pub fn is_weak(&self) -> bool {
        matches!(self, ContactKind::WeakEdgeToEdge { .. })
    }

    pub fn intersects(&self) -> bool {
        !matches!(self, ContactKind::Disjoint)
    }

    /// Same contact seen from the other rectangle.
    pub fn swapped(self) -> ContactKind {
        match self {
            ContactKind::Touch { owner, edge_contained } => ContactKind::Touch {
                owner: if owner == Owner::First { Owner::Second } else { Owner::First },
                edge_contained,
            },
            k => k,
        }
    }
}

/// Intersection of the two rectangles as a closed box, if nonempty.
pub fn intersection(a: &Rect3, b: &Rect3) -> Option<([Q; 3], [Q; 3])> {
    let lo: [Q; 3] = std::array::from_fn(|k| Q::max_of(a.lo(k), b.lo(k)).clone());
    let hi: [Q; 3] = std::array::from_fn(|k| Q::min_of(a.hi(k), b.hi(k)).clone());
    if (0..3).any(|k| lo[k] > hi[k]) {
        None
    } else {
        Some((lo, hi))
    }
}

fn some_edge_inside(a: &Rect3, b: &Rect3) -> bool {
    a.edges().iter().any(|(lo, hi)| b.contains_box(lo, hi))
}

pub fn classify_contact(a: &Rect3, b: &Rect3) -> ContactKind {
    let Some((lo, hi)) = intersection(a, b) else { return ContactKind::Disjoint };
    let ia = a.box_meets_interior(&lo, &hi);
    let ib = b.box_meets_interior(&lo, &hi);
    let edge_contained = || some_edge_inside(a, b) || some_edge_inside(b, a);
    match (ia, ib) {
        (true, true) => ContactKind::ViolatingOverlap,
        (true, false) => ContactKind::Touch { owner: Owner::First, edge_contained: edge_contained() },
        (false, true) => ContactKind::Touch { owner: Owner::Second, edge_contained: edge_contained() },
        (false, false) => ContactKind::WeakEdgeToEdge { edge_contained: edge_contained() },
    }
}
