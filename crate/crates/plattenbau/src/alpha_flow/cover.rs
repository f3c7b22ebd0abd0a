//! Cycle cover of the bounded black triangles induced by an
//! alpha-orientation, and the white/pink two-coloring of the white triangles.

use super::{AlphaError, AlphaOrientation, Dir, IncidenceGraph};
use crate::graph_core::{Class, EmbeddedGraph};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    #[serde(rename = "white")]
    White,
    #[serde(rename = "pink")]
    Pink,
}

impl Side {
    fn flip(self) -> Side {
        match self {
            Side::White => Side::Pink,
            Side::Pink => Side::White,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chord {
    /// interior vertex of T (a bounded face of the dual)
    pub vertex: usize,
    /// the two black triangles (face ids) it joins
    pub ends: [usize; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleCover {
    pub chords: Vec<Chord>,
    /// Each cycle as the cyclic list of black triangle face ids it visits.
    pub cycles: Vec<Vec<usize>>,
    /// Region side of every white triangle (indexed by face id; `None` for
    /// black faces).
    pub region: Vec<Option<Side>>,
    /// The two in-corners (interior vertices pointing at it) of each bounded
    /// black triangle, indexed by face id.
    pub in_corners: Vec<Option<[usize; 2]>>,
}

impl CycleCover {
    pub fn white_faces(&self) -> Vec<usize> {
        (0..self.region.len()).filter(|&f| self.region[f] == Some(Side::White)).collect()
    }

    pub fn pink_faces(&self) -> Vec<usize> {
        (0..self.region.len()).filter(|&f| self.region[f] == Some(Side::Pink)).collect()
    }
}

/// The face on the other side of edge `a`-`b` from face `f`.
fn across(t: &EmbeddedGraph, f: usize, a: usize, b: usize) -> usize {
    let d = t.dart(a, b).expect("edge of triangle");
    if t.face_of(d) == f {
        t.face_of(d ^ 1)
    } else {
        t.face_of(d)
    }
}

pub fn cycle_cover(
    t: &EmbeddedGraph,
    classes: &[Class],
    h: &IncidenceGraph,
    o: &AlphaOrientation,
) -> Result<CycleCover, AlphaError> {
    if !h.is_valid(o) {
        return Err(AlphaError::MalformedOrientation("out-degrees differ from alpha".into()));
    }
    let nf = t.faces().len();
    let outer = t.outer_face().ok_or_else(|| AlphaError::Precondition("no outer face".into()))?;
    let mut in_corners: Vec<Vec<usize>> = vec![Vec::new(); nf];
    let mut chord_ends: Vec<Vec<usize>> = vec![Vec::new(); h.left.len()];
    for (k, &(a, b)) in h.edges.iter().enumerate() {
        if o.direction[k] == Dir::LR {
            in_corners[h.right[b]].push(h.left[a]);
            chord_ends[a].push(h.right[b]);
        }
    }
    let chords: Vec<Chord> = h
        .left
        .iter()
        .enumerate()
        .map(|(i, &v)| Chord { vertex: v, ends: [chord_ends[i][0], chord_ends[i][1]] })
        .collect();
    // follow chords into cycles; every black triangle has exactly two
    let mut at: Vec<Vec<usize>> = vec![Vec::new(); nf];
    for (c, ch) in chords.iter().enumerate() {
        at[ch.ends[0]].push(c);
        at[ch.ends[1]].push(c);
    }
    for &f in &h.right {
        if at[f].len() != 2 {
            return Err(AlphaError::MalformedOrientation(format!("triangle {f} lies on {} chords", at[f].len())));
        }
    }
    let mut used = vec![false; chords.len()];
    let mut cycles = Vec::new();
    for c0 in 0..chords.len() {
        if used[c0] {
            continue;
        }
        let mut cyc = Vec::new();
        let mut c = c0;
        let mut u = chords[c0].ends[0];
        loop {
            used[c] = true;
            cyc.push(u);
            let w = if chords[c].ends[0] == u { chords[c].ends[1] } else { chords[c].ends[0] };
            let next = at[w].iter().copied().find(|&x| x != c).unwrap_or(c);
            u = w;
            if used[next] {
                break;
            }
            c = next;
        }
        if u != cyc[0] {
            return Err(AlphaError::MalformedOrientation("chords do not close up".into()));
        }
        cycles.push(cyc);
    }

    // two-color the white triangles
    let mut region: Vec<Option<Side>> = vec![None; nf];
    let mut stack = Vec::new();
    for &d in &t.faces()[outer] {
        let w = t.face_of(d ^ 1);
        region[w] = Some(Side::White);
        stack.push(w);
    }
    // constraints per bounded black triangle: (a, b, relation same?)
    let mut cons: Vec<Vec<(usize, bool)>> = vec![Vec::new(); nf];
    for &f in &h.right {
        let vs = t.face_vertices(f);
        let ic = &in_corners[f];
        let third = *vs.iter().find(|v| !ic.contains(v)).expect("a corner without in-edge");
        let w_ab = across(t, f, ic[0], ic[1]);
        let w_ac = across(t, f, ic[0], third);
        let w_bc = across(t, f, ic[1], third);
        for (x, y, same) in [(w_ac, w_bc, true), (w_ab, w_ac, false), (w_ab, w_bc, false)] {
            cons[x].push((y, same));
            cons[y].push((x, same));
        }
    }
    while let Some(w) = stack.pop() {
        let s = region[w].unwrap();
        for &(x, same) in &cons[w] {
            let want = if same { s } else { s.flip() };
            match region[x] {
                None => {
                    region[x] = Some(want);
                    stack.push(x);
                }
                Some(have) if have != want => {
                    return Err(AlphaError::MalformedOrientation(format!("white triangle {x} on both sides")));
                }
                _ => {}
            }
        }
    }
    for f in 0..nf {
        if classes[f] == Class::White && region[f].is_none() {
            return Err(AlphaError::MalformedOrientation(format!("white triangle {f} unreached")));
        }
    }
    let in_corners = in_corners
        .into_iter()
        .map(|v| if v.len() == 2 { Some([v[0], v[1]]) } else { None })
        .collect();
    Ok(CycleCover { chords, cycles, region, in_corners })
}
