//! Isomorphism of small (multi)graphs: joint color refinement followed by
//! backtracking over refined classes.

use super::{EmbeddedGraph, Graph, GraphError};
use std::collections::HashMap;

pub const DEFAULT_ISO_BOUND: usize = 64;

pub fn isomorphic(g1: &EmbeddedGraph, g2: &EmbeddedGraph) -> Result<bool, GraphError> {
    isomorphic_graphs(&g1.graph(), &g2.graph(), DEFAULT_ISO_BOUND)
}

pub fn isomorphic_graphs(a: &Graph, b: &Graph, bound: usize) -> Result<bool, GraphError> {
    let size = a.n.max(b.n);
    if size > bound {
        return Err(GraphError::SizeBoundExceeded { bound, size });
    }
    if a.n != b.n || a.m() != b.m() {
        return Ok(false);
    }
    let n = a.n;
    if n == 0 {
        return Ok(true);
    }
    let ma = mult(a);
    let mb = mult(b);
    let (ca, cb) = refine(&ma, &mb);
    let mut hist_a = ca.clone();
    let mut hist_b = cb.clone();
    hist_a.sort_unstable();
    hist_b.sort_unstable();
    if hist_a != hist_b {
        return Ok(false);
    }
    // order vertices of a: smallest classes first, then by connectivity
    let mut class_size: HashMap<usize, usize> = HashMap::new();
    for &c in &ca {
        *class_size.entry(c).or_insert(0) += 1;
    }
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let links = order.iter().filter(|&&u| ma[u][v] > 0).count();
                (links, std::cmp::Reverse(class_size[&ca[v]]), std::cmp::Reverse(v))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(backtrack(0, &order, &ma, &mb, &ca, &cb, &mut map, &mut used))
}

fn mult(g: &Graph) -> Vec<Vec<u32>> {
    let mut m = vec![vec![0u32; g.n]; g.n];
    for &[u, v] in &g.edges {
        m[u][v] += 1;
        if u != v {
            m[v][u] += 1;
        }
    }
    m
}

/// Weisfeiler-Leman style refinement run on both graphs with a shared palette.
fn refine(ma: &[Vec<u32>], mb: &[Vec<u32>]) -> (Vec<usize>, Vec<usize>) {
    let n = ma.len();
    let mut ca = vec![0usize; n];
    let mut cb = vec![0usize; n];
    let mut classes = 1;
    loop {
        let mut palette: HashMap<(usize, Vec<(usize, u32)>), usize> = HashMap::new();
        let sig = |m: &[Vec<u32>], c: &[usize], v: usize| {
            let mut s: Vec<(usize, u32)> = (0..n).filter(|&w| m[v][w] > 0).map(|w| (c[w], m[v][w])).collect();
            s.sort_unstable();
            (c[v], s)
        };
        let sa: Vec<_> = (0..n).map(|v| sig(ma, &ca, v)).collect();
        let sb: Vec<_> = (0..n).map(|v| sig(mb, &cb, v)).collect();
        let mut keys: Vec<_> = sa.iter().chain(sb.iter()).cloned().collect();
        keys.sort();
        keys.dedup();
        for (i, k) in keys.into_iter().enumerate() {
            palette.insert(k, i);
        }
        let na: Vec<usize> = sa.iter().map(|k| palette[k]).collect();
        let nb: Vec<usize> = sb.iter().map(|k| palette[k]).collect();
        let count = palette.len();
        ca = na;
        cb = nb;
        if count == classes {
            return (ca, cb);
        }
        classes = count;
    }
}

#[allow(clippy::too_many_arguments)]
fn backtrack(
    k: usize,
    order: &[usize],
    ma: &[Vec<u32>],
    mb: &[Vec<u32>],
    ca: &[usize],
    cb: &[usize],
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if k == order.len() {
        return true;
    }
    let v = order[k];
    for w in 0..mb.len() {
        if used[w] || cb[w] != ca[v] || ma[v][v] != mb[w][w] {
            continue;
        }
        if order[..k].iter().all(|&u| ma[u][v] == mb[map[u]][w]) {
            map[v] = w;
            used[w] = true;
            if backtrack(k + 1, order, ma, mb, ca, cb, map, used) {
                return true;
            }
            used[w] = false;
            map[v] = usize::MAX;
        }
    }
    false
}
