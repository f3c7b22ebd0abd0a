//! Exhaustive small-instance generators used by tests, benches and the
//! `corpus-run` command.

use crate::graph_core::{brute_force_three_coloring, embed_planar, is_planar, EmbeddedGraph, Graph};
use std::collections::{HashMap, HashSet};

/// Canonical code of a triangulation given by clockwise neighbor lists, up to
/// isomorphism and reflection. With `outer`, the code also records which
/// vertex triple is the outer face.
pub fn canonical_code(rot: &[Vec<usize>], outer: Option<[usize; 3]>) -> Vec<u8> {
    let n = rot.len();
    let key = |v: usize, i: usize| (rot[v].len(), rot[rot[v][i]].len());
    let mut best_key = (0, 0);
    for v in 0..n {
        for i in 0..rot[v].len() {
            best_key = best_key.max(key(v, i));
        }
    }
    let mut best: Option<Vec<u8>> = None;
    let mut number = vec![u8::MAX; n];
    let mut first = vec![0usize; n];
    let mut queue = Vec::with_capacity(n);
    for v in 0..n {
        for i in 0..rot[v].len() {
            if key(v, i) != best_key {
                continue;
            }
            for mirror in [false, true] {
                number.iter_mut().for_each(|x| *x = u8::MAX);
                queue.clear();
                number[v] = 0;
                first[v] = i;
                queue.push(v);
                let mut code = Vec::with_capacity(7 * n);
                let mut qi = 0;
                let mut worse = false;
                while qi < queue.len() {
                    let x = queue[qi];
                    qi += 1;
                    let k = rot[x].len();
                    for s in 0..k {
                        let p = if mirror { (first[x] + k - s) % k } else { (first[x] + s) % k };
                        let y = rot[x][p];
                        if number[y] == u8::MAX {
                            number[y] = queue.len() as u8;
                            first[y] = rot[y].iter().position(|&z| z == x).unwrap();
                            queue.push(y);
                        }
                        code.push(number[y]);
                    }
                    code.push(u8::MAX);
                    if let Some(b) = &best {
                        let l = code.len();
                        match code[..].cmp(&b[..l.min(b.len())]) {
                            std::cmp::Ordering::Greater => {
                                worse = true;
                                break;
                            }
                            std::cmp::Ordering::Less => {}
                            std::cmp::Ordering::Equal => {}
                        }
                    }
                }
                if worse {
                    continue;
                }
                if let Some(o) = outer {
                    let mut t = [number[o[0]], number[o[1]], number[o[2]]];
                    t.sort_unstable();
                    code.extend(t);
                }
                if best.as_ref().is_none_or(|b| code < *b) {
                    best = Some(code);
                }
            }
        }
    }
    best.unwrap_or_default()
}

fn split_children(rot: &[Vec<usize>]) -> Vec<Vec<Vec<usize>>> {
    let n = rot.len();
    let mut out = Vec::new();
    for v in 0..n {
        let k = rot[v].len();
        for i in 0..k {
            for len in 1..k {
                let j = (i + len) % k;
                let w = n;
                let mut r: Vec<Vec<usize>> = rot.to_vec();
                let moved: Vec<usize> = (0..=len).map(|s| rot[v][(i + s) % k]).collect();
                let kept: Vec<usize> = (0..=k - len).map(|s| rot[v][(j + s) % k]).collect();
                let mut rw = moved.clone();
                rw.push(v);
                let mut rv = kept;
                rv.push(w);
                r[v] = rv;
                for &a in &moved[1..moved.len() - 1] {
                    let p = r[a].iter().position(|&z| z == v).unwrap();
                    r[a][p] = w;
                }
                let ai = moved[0];
                let p = r[ai].iter().position(|&z| z == v).unwrap();
                r[ai].insert(p, w);
                let aj = *moved.last().unwrap();
                let p = r[aj].iter().position(|&z| z == v).unwrap();
                r[aj].insert(p + 1, w);
                r.push(rw);
                out.push(r);
            }
        }
    }
    out
}

/// All triangulations on `4..=max_n` vertices up to isomorphism, plus the
/// single triangle, as clockwise neighbor lists. Grouped by vertex count.
pub fn triangulation_rotations(max_n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut all = vec![vec![vec![1, 2], vec![2, 0], vec![0, 1]]];
    if max_n < 4 {
        return if max_n == 3 { all } else { Vec::new() };
    }
    let k4 = vec![vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]];
    let mut level = vec![k4];
    for n in 4..=max_n {
        all.extend(level.iter().cloned());
        if n == max_n {
            break;
        }
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for r in &level {
            for child in split_children(r) {
                if seen.insert(canonical_code(&child, None)) {
                    next.push(child);
                }
            }
        }
        level = next;
    }
    all
}

/// Eulerian triangulations up to `max_n` vertices with every choice of outer
/// face, deduplicated up to isomorphism preserving the outer face.
pub fn eulerian_instances(max_n: usize) -> Vec<EmbeddedGraph> {
    let mut out = Vec::new();
    for rot in triangulation_rotations(max_n) {
        if rot.iter().any(|r| r.len() % 2 == 1) {
            continue;
        }
        let base = EmbeddedGraph::from_rotations(&rot, None).expect("valid rotation");
        let mut seen = HashSet::new();
        for f in 0..base.faces().len() {
            let vs = base.face_vertices(f);
            if !seen.insert(canonical_code(&rot, Some([vs[0], vs[1], vs[2]]))) {
                continue;
            }
            out.push(base.clone().with_outer(Some(base.faces()[f][0])));
        }
    }
    out
}

/// Invariant used to bucket graphs before exact isomorphism tests.
fn graph_invariant(g: &Graph) -> Vec<u64> {
    let adj = g.adjacency();
    let n = g.n;
    let mut col: Vec<u64> = adj.iter().map(|a| a.len() as u64).collect();
    for _ in 0..3 {
        col = (0..n)
            .map(|v| {
                let mut s: Vec<u64> = adj[v].iter().map(|&w| col[w]).collect();
                s.sort_unstable();
                let mut h = col[v].wrapping_mul(0x9e37_79b9_7f4a_7c15);
                for x in s {
                    h = (h ^ x).wrapping_mul(0x100_0000_01b3).rotate_left(17);
                }
                h
            })
            .collect();
    }
    col.sort_unstable();
    col.push(g.m() as u64);
    col
}

/// All connected planar 3-colorable graphs on `1..=max_n` vertices, up to
/// isomorphism, ordered by vertex count then discovery order.
pub fn connected_planar_3colorable(max_n: usize) -> Vec<Graph> {
    if max_n == 0 {
        return Vec::new();
    }
    let mut all = Vec::new();
    let mut level = vec![Graph::new(1, []).unwrap()];
    for n in 1..=max_n {
        all.extend(level.iter().cloned());
        if n == max_n {
            break;
        }
        let mut buckets: HashMap<Vec<u64>, Vec<usize>> = HashMap::new();
        let mut next: Vec<Graph> = Vec::new();
        for g in &level {
            for mask in 1u32..(1 << n) {
                let extra = mask.count_ones() as usize;
                if g.m() + extra > 3 * (n + 1) - 6 && n + 1 >= 3 {
                    continue;
                }
                let mut edges: Vec<(usize, usize)> = g.edges.iter().map(|e| (e[0], e[1])).collect();
                edges.extend((0..n).filter(|&u| mask >> u & 1 == 1).map(|u| (u, n)));
                let h = Graph::new(n + 1, edges).unwrap();
                let inv = graph_invariant(&h);
                let bucket = buckets.entry(inv).or_default();
                if bucket.iter().any(|&i| {
                    crate::graph_core::isomorphic_graphs(&next[i], &h, usize::MAX).unwrap_or(false)
                }) {
                    continue;
                }
                if brute_force_three_coloring(&h).is_none() || !is_planar(&h) {
                    continue;
                }
                bucket.push(next.len());
                next.push(h);
            }
        }
        level = next;
    }
    all
}

/// Embedded version of a graph for pipelines that need an embedding.
pub fn embed(g: &Graph) -> EmbeddedGraph {
    let e: Vec<(usize, usize)> = g.edges.iter().map(|e| (e[0], e[1])).collect();
    embed_planar(g.n, &e).expect("corpus graphs are planar")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangulation_counts_match_known_values() {
        let all = triangulation_rotations(10);
        let mut count = vec![0; 11];
        for r in &all {
            let g = EmbeddedGraph::from_rotations(r, None).unwrap();
            assert!(g.is_triangulation());
            assert!(g.euler_ok());
            count[r.len()] += 1;
        }
        // numbers of triangulations of the sphere on n vertices
        assert_eq!(&count[3..], &[1, 1, 1, 2, 5, 14, 50, 233]);
    }

    #[test]
    fn eulerian_instances_are_eulerian() {
        let inst = eulerian_instances(10);
        assert!(!inst.is_empty());
        for t in &inst {
            assert!((0..t.n()).all(|v| t.degree(v) % 2 == 0));
        }
    }

    #[test]
    fn connected_planar_3colorable_counts() {
        // connected graphs: 1,1,2,6,21 ; minus K4 (planar, not 3-colorable),
        // and on 5 vertices the four containing K4 (K5 among them)
        let gs = connected_planar_3colorable(5);
        let mut count = vec![0; 6];
        for g in &gs {
            count[g.n] += 1;
        }
        assert_eq!(&count[1..], &[1, 1, 2, 5, 17]);
    }
}
