//! Conditions P1 to P4, the 4-orientation, and embeddings for neighbourhoods
//! that embed uniquely.

use super::sq::cyclic_eq;
use super::view::View;
use super::{BoxedError, BoxedInstance, Dir, Sq};
use crate::alpha_flow::flow::{enumerate_orientations as enumerate_alpha, orient_with_outdegrees};
use crate::graph_core::{embed_planar, Graph};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub pass: bool,
    pub witness: Option<String>,
}

impl Check {
    fn from(witness: Option<String>) -> Check {
        Check { pass: witness.is_none(), witness }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub p1: Check,
    pub p2: Check,
    pub p3: Check,
    pub p4: Check,
}

impl ConditionReport {
    pub fn all_pass(&self) -> bool {
        self.p1.pass && self.p2.pass && self.p3.pass && self.p4.pass
    }

    pub fn first_failure(&self) -> Option<String> {
        [("P1", &self.p1), ("P2", &self.p2), ("P3", &self.p3), ("P4", &self.p4)]
            .into_iter()
            .find(|(_, c)| !c.pass)
            .map(|(name, c)| format!("{name}: {}", c.witness.clone().unwrap_or_default()))
    }
}

pub fn check_conditions(inst: &BoxedInstance) -> ConditionReport {
    let n = inst.graph.n;
    let shape = if inst.orientation.len() != inst.graph.m() {
        Some(format!("{} directions for {} edges", inst.orientation.len(), inst.graph.m()))
    } else if inst.sq.len() != n {
        Some(format!("{} embeddings for {} vertices", inst.sq.len(), n))
    } else if inst.outer.iter().any(|&v| v >= n) {
        Some("outer vertex out of range".into())
    } else {
        None
    };
    if let Some(w) = shape {
        let fail = Check::from(Some(w));
        return ConditionReport { p1: fail.clone(), p2: fail.clone(), p3: fail.clone(), p4: fail };
    }
    check_view(&inst.view())
}

pub(crate) fn check_view(v: &View) -> ConditionReport {
    ConditionReport { p1: Check::from(p1(v)), p2: Check::from(p2(v)), p3: Check::from(p3(v)), p4: Check::from(p4(v)) }
}

fn p1(v: &View) -> Option<String> {
    let outer: BTreeSet<usize> = v.outer.iter().copied().collect();
    if outer.len() != 6 {
        return Some("outer vertices are not six distinct vertices".into());
    }
    for &o in &outer {
        let k = v.adj[&o].intersection(&outer).count();
        if k != 4 {
            return Some(format!("outer vertex {o} has {k} outer neighbours, not 4"));
        }
    }
    let start = *v.adj.keys().next()?;
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for &y in &v.adj[&x] {
            if seen.insert(y) {
                stack.push(y);
            }
        }
    }
    (seen.len() != v.adj.len()).then(|| "graph is disconnected".into())
}

fn p2(v: &View) -> Option<String> {
    for (a, b) in v.edges() {
        let both = v.is_outer(a) && v.is_outer(b);
        match (v.points(a, b), v.points(b, a)) {
            (false, false) => return Some(format!("edge {a}-{b} has no direction")),
            (true, true) if !both => return Some(format!("inner edge {a}-{b} is bidirected")),
            (x, y) if both && !(x && y) => return Some(format!("outer edge {a}-{b} is not bidirected")),
            _ => {}
        }
    }
    for (&x, o) in &v.out {
        if o.iter().any(|y| !v.has_edge(x, *y)) {
            return Some(format!("vertex {x} points along a non-edge"));
        }
        if o.len() != 4 {
            return Some(format!("vertex {x} has out-degree {}", o.len()));
        }
    }
    None
}

fn p3(v: &View) -> Option<String> {
    for x in v.vertices() {
        let Some(sq) = v.sq.get(&x) else { return Some(format!("no embedding for {x}")) };
        if let Some(why) = sq.quadrangulation_error(&v.adj[&x], &v.induced_edges(x)) {
            return Some(format!("SQ({x}): {why}"));
        }
        let Some(eq) = v.cycle_order(&v.out[&x]) else {
            return Some(format!("out-neighbours of {x} do not induce a 4-cycle"));
        };
        if v.is_outer(x) && !sq.has_face(&eq) {
            return Some(format!("equator of outer vertex {x} bounds no face"));
        }
    }
    None
}

fn p4(v: &View) -> Option<String> {
    for (a, b) in v.edges() {
        let (Some(sa), Some(sb)) = (v.sq.get(&a), v.sq.get(&b)) else { return Some(format!("edge {a}-{b} lacks embeddings")) };
        let (Some(ra), Some(rb)) = (sb.rot.get(&a), sa.rot.get(&b)) else {
            return Some(format!("edge {a}-{b}: endpoint missing from the other's embedding"));
        };
        let rev: Vec<usize> = ra.iter().rev().copied().collect();
        if !cyclic_eq(&rev, rb) {
            return Some(format!("edge {a}-{b}: orders {ra:?} and {rb:?} are not reversed"));
        }
    }
    None
}

fn split_edges(graph: &Graph, outer: &[usize; 6]) -> (Vec<usize>, Vec<(usize, usize)>, Vec<usize>) {
    let inner_e: Vec<usize> = (0..graph.m()).filter(|&e| !graph.edges[e].iter().all(|x| outer.contains(x))).collect();
    let pairs = inner_e.iter().map(|&e| (graph.edges[e][0], graph.edges[e][1])).collect();
    let alpha = (0..graph.n).map(|x| if outer.contains(&x) { 0 } else { 4 }).collect();
    (inner_e, pairs, alpha)
}

fn assemble(graph: &Graph, inner_e: &[usize], dirs: &[bool]) -> Vec<Dir> {
    let mut out = vec![Dir::Both; graph.m()];
    for (i, &e) in inner_e.iter().enumerate() {
        out[e] = if dirs[i] { Dir::Forward } else { Dir::Backward };
    }
    out
}

fn outer_degrees_ok(graph: &Graph, outer: &[usize; 6]) -> bool {
    let adj = graph.adjacency();
    outer.iter().all(|&o| o < graph.n && adj[o].iter().filter(|x| outer.contains(x)).count() == 4)
}

/// Orientation with bidirected outer edges and out-degree 4 everywhere:
/// outer vertices are saturated by their outer edges, so every inner edge
/// is placed by a flow into inner vertices of capacity 4.
pub fn find_orientation(graph: &Graph, outer: &[usize; 6]) -> Result<Vec<Dir>, BoxedError> {
    if !outer_degrees_ok(graph, outer) {
        return Err(BoxedError::Infeasible);
    }
    let (inner_e, pairs, alpha) = split_edges(graph, outer);
    let dirs = orient_with_outdegrees(graph.n, &pairs, &alpha).map_err(|_| BoxedError::Infeasible)?;
    Ok(assemble(graph, &inner_e, &dirs))
}

/// All such orientations, or `None` if there are more than `limit`.
pub fn enumerate_orientations(graph: &Graph, outer: &[usize; 6], limit: usize) -> Option<Vec<Vec<Dir>>> {
    if !outer_degrees_ok(graph, outer) {
        return Some(Vec::new());
    }
    let (inner_e, pairs, alpha) = split_edges(graph, outer);
    let all = enumerate_alpha(graph.n, &pairs, &alpha, limit)?;
    Some(all.iter().map(|d| assemble(graph, &inner_e, d)).collect())
}

fn connected_without(k: usize, adj: &[Vec<usize>], gone: &[usize]) -> bool {
    let Some(s) = (0..k).find(|x| !gone.contains(x)) else { return true };
    let mut seen = vec![false; k];
    for &g in gone {
        seen[g] = true;
    }
    seen[s] = true;
    let mut stack = vec![s];
    let mut count = 1;
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                count += 1;
                stack.push(y);
            }
        }
    }
    count + gone.len() == k
}

fn three_connected(k: usize, adj: &[Vec<usize>]) -> bool {
    if k < 4 || !connected_without(k, adj, &[]) {
        return false;
    }
    (0..k).all(|a| (a..k).all(|b| connected_without(k, adj, &if a == b { vec![a] } else { vec![a, b] })))
}

/// Embeddings of all neighbourhoods, each unique up to mirroring because
/// the neighbourhood graph is 3-connected or a 4-cycle; mirrors are then
/// chosen so that P4 holds wherever it can decide.
pub fn derive_embeddings(graph: &Graph) -> Result<Vec<Sq>, BoxedError> {
    let adj = graph.adjacency();
    let mut sq = Vec::with_capacity(graph.n);
    for v in 0..graph.n {
        let nb = &adj[v];
        let local: BTreeMap<usize, usize> = nb.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let mut ladj = vec![Vec::new(); nb.len()];
        let mut ledges = Vec::new();
        for (i, &x) in nb.iter().enumerate() {
            for &y in &adj[x] {
                if let Some(&j) = local.get(&y) {
                    ladj[i].push(j);
                    if i < j {
                        ledges.push((i, j));
                    }
                }
            }
        }
        let cycle4 = nb.len() == 4 && ladj.iter().all(|l| l.len() == 2) && connected_without(4, &ladj, &[]);
        if !cycle4 && !three_connected(nb.len(), &ladj) {
            return Err(BoxedError::EmbeddingRequired(v));
        }
        let emb = embed_planar(nb.len(), &ledges).map_err(|e| BoxedError::InconsistentEmbeddings(format!("N({v}): {e}")))?;
        let rot = emb.neighbor_rotations().iter().enumerate().map(|(i, r)| (nb[i], r.iter().map(|&j| nb[j]).collect())).collect();
        sq.push(Sq { rot }.canonical());
    }
    // mirror parity by search over edges whose common neighbourhood has at
    // least three vertices
    let mut flip: Vec<Option<bool>> = vec![None; graph.n];
    for s in 0..graph.n {
        if flip[s].is_some() {
            continue;
        }
        flip[s] = Some(false);
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                let (Some(ru), Some(rv)) = (sq[v].rot.get(&u), sq[u].rot.get(&v)) else { continue };
                if ru.len() < 3 {
                    continue;
                }
                let rev: Vec<usize> = ru.iter().rev().copied().collect();
                let same = if cyclic_eq(&rev, rv) {
                    true
                } else if cyclic_eq(ru, rv) {
                    false
                } else {
                    return Err(BoxedError::InconsistentEmbeddings(format!("edge {u}-{v} sees different common neighbourhoods")));
                };
                let want = flip[u].unwrap() ^ !same;
                match flip[v] {
                    None => {
                        flip[v] = Some(want);
                        stack.push(v);
                    }
                    Some(f) if f != want => {
                        return Err(BoxedError::InconsistentEmbeddings(format!("mirror choice at {v} conflicts")));
                    }
                    _ => {}
                }
            }
        }
    }
    Ok(sq.into_iter().zip(flip).map(|(s, f)| if f == Some(true) { s.mirrored() } else { s }).collect())
}
