//! Exact geometry of Plattenbauten: contacts, touching and intersection
//! graphs, properness, boxedness and the box transform.

mod boxes;
mod fixtures;
mod rational;
mod rect;

pub use boxes::{box_intersection_graph, boxes_interiorly_disjoint, is_boxed, to_boxes, Box3, BoxedReport};
pub use fixtures::{cube_faces, fixture_k22n, fixture_kmn, lift_segments, origin_squares, Segment2};
pub use rational::{ParseQError, Q};
pub use rect::{classify_contact, intersection, Axis, ContactKind, Owner, Rect3};

use crate::exec::Exec;
use crate::graph_core::Graph;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeomError {
    #[error("not a Plattenbau: rectangles {0} and {1} overlap in their interiors")]
    NotAPlattenbau(usize, usize),
    #[error("no outer rectangles designated")]
    NoOuterDesignated,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("invalid segments: {0}")]
    InvalidSegments(String),
    #[error("invalid rectangle {0}: spans must have positive length")]
    InvalidRectangle(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct Plattenbau {
    #[serde(rename = "rectangles")]
    pub rects: Vec<Rect3>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outer: Option<[usize; 6]>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contact {
    pub a: usize,
    pub b: usize,
    pub kind: ContactKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeBound {
    pub n: usize,
    pub m: usize,
    pub bound: usize,
    pub tight: bool,
}

impl Plattenbau {
    pub fn new(rects: Vec<Rect3>) -> Plattenbau {
        Plattenbau { rects, outer: None }
    }

    pub fn len(&self) -> usize {
        self.rects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rects.is_empty()
    }

    pub fn index_of(&self, id: usize) -> Option<usize> {
        self.rects.iter().position(|r| r.id == id)
    }

    pub fn ids(&self) -> Vec<usize> {
        self.rects.iter().map(|r| r.id).collect()
    }

    /// Positions of the outer rectangles.
    pub fn outer_indices(&self) -> Option<[usize; 6]> {
        let o = self.outer?;
        let mut out = [0; 6];
        for (i, id) in o.iter().enumerate() {
            out[i] = self.index_of(*id)?;
        }
        Some(out)
    }

    pub fn validate(&self) -> Result<(), GeomError> {
        for r in &self.rects {
            if !r.is_valid() {
                return Err(GeomError::InvalidRectangle(r.id));
            }
        }
        Ok(())
    }

    /// All intersecting pairs `(i, j)`, `i < j`, by position, sorted.
    pub fn contacts(&self, exec: Exec) -> Result<Vec<Contact>, GeomError> {
        self.validate()?;
        let n = self.rects.len();
        let rows: Vec<Vec<Contact>> = exec.map_range(n, |i| {
            (i + 1..n)
                .filter_map(|j| {
                    let kind = classify_contact(&self.rects[i], &self.rects[j]);
                    kind.intersects().then_some(Contact { a: i, b: j, kind })
                })
                .collect()
        });
        let all: Vec<Contact> = rows.into_iter().flatten().collect();
        if let Some(c) = all.iter().find(|c| c.kind == ContactKind::ViolatingOverlap) {
            return Err(GeomError::NotAPlattenbau(self.rects[c.a].id, self.rects[c.b].id));
        }
        Ok(all)
    }

    pub fn restrict(&self, keep: &[usize]) -> Plattenbau {
        let rects: Vec<Rect3> = self.rects.iter().filter(|r| keep.contains(&r.id)).cloned().collect();
        let outer = self.outer.filter(|o| o.iter().all(|id| keep.contains(id)));
        Plattenbau { rects, outer }
    }
}

/// Touching graph on rectangle positions. With `boxed_convention`, weak
/// contacts between two outer rectangles also count.
pub fn touching_graph(p: &Plattenbau, boxed_convention: bool) -> Result<Graph, GeomError> {
    touching_graph_with(p, boxed_convention, Exec::Sequential)
}

pub fn touching_graph_with(p: &Plattenbau, boxed_convention: bool, exec: Exec) -> Result<Graph, GeomError> {
    let contacts = p.contacts(exec)?;
    let outer = if boxed_convention { p.outer_indices() } else { None };
    let is_outer = |i: usize| outer.is_some_and(|o| o.contains(&i));
    let edges = contacts
        .iter()
        .filter(|c| c.kind.is_touch() || (c.kind.is_weak() && is_outer(c.a) && is_outer(c.b)))
        .map(|c| (c.a, c.b));
    Ok(Graph::new(p.len(), edges).expect("pairs are distinct"))
}

pub fn intersection_graph(p: &Plattenbau) -> Result<Graph, GeomError> {
    let contacts = p.contacts(Exec::Sequential)?;
    Ok(Graph::new(p.len(), contacts.iter().map(|c| (c.a, c.b))).expect("pairs are distinct"))
}

/// Whether every touching pair has a full boundary edge of one rectangle in
/// the other; otherwise the first failing pair of ids.
pub fn is_proper(p: &Plattenbau) -> Result<(bool, Option<(usize, usize)>), GeomError> {
    for c in p.contacts(Exec::Sequential)? {
        if let ContactKind::Touch { edge_contained: false, .. } = c.kind {
            return Ok((false, Some((p.rects[c.a].id, p.rects[c.b].id))));
        }
    }
    Ok((true, None))
}

pub fn edge_bound_report(p: &Plattenbau, boxed_convention: bool) -> Result<EdgeBound, GeomError> {
    let n = p.len();
    if n < 6 {
        return Err(GeomError::PreconditionViolated(format!("{n} rectangles, need at least 6")));
    }
    if !is_proper(p)?.0 {
        return Err(GeomError::PreconditionViolated("Plattenbau is not proper".into()));
    }
    let m = touching_graph(p, boxed_convention)?.m();
    let bound = 4 * n - 12;
    Ok(EdgeBound { n, m, bound, tight: m == bound })
}

/// Minimum positive difference between coordinate values used on any axis.
pub fn min_gap(p: &Plattenbau) -> Option<Q> {
    let mut best: Option<Q> = None;
    for k in 0..3 {
        let mut vals: Vec<&Q> = p.rects.iter().flat_map(|r| [r.lo(k), r.hi(k)]).collect();
        vals.sort();
        vals.dedup();
        for w in vals.windows(2) {
            let d = w[1] - w[0];
            if best.as_ref().is_none_or(|b| &d < b) {
                best = Some(d);
            }
        }
    }
    best
}

#[cfg(test)]
mod tests;
