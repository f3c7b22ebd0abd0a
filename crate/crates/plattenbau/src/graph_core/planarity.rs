//! Planarity testing and embedding by path addition (Demoucron, Malgrange,
//! Pertuiset) on each biconnected block; blocks are glued at cut vertices by
//! concatenating their rotations.

use super::{EmbeddedGraph, Graph, GraphError};

pub fn is_planar(g: &Graph) -> bool {
    embed_graph(g).is_ok()
}

/// Embed a simple graph given as an edge list on `0..n`.
pub fn embed_planar(n: usize, edges: &[(usize, usize)]) -> Result<EmbeddedGraph, GraphError> {
    let g = Graph::new(n, edges.iter().copied())?;
    if g.m() != edges.len() {
        return Err(GraphError::InvalidInput("duplicate edges".into()));
    }
    embed_graph(&g)
}

pub(crate) fn embed_graph(g: &Graph) -> Result<EmbeddedGraph, GraphError> {
    let n = g.n;
    // Quick reject by edge count per component is implied by the block test.
    let mut rot: Vec<Vec<usize>> = vec![Vec::new(); n];
    for block in biconnected_blocks(g) {
        let local = embed_block(&block)?;
        for (i, r) in local.into_iter().enumerate() {
            let v = block.verts[i];
            rot[v].extend(r.into_iter().map(|j| block.verts[j]));
        }
    }
    let emb = EmbeddedGraph::from_rotations(&rot, None)?;
    // Default outer face: the longest face, first by index on ties.
    let outer = (0..emb.faces().len())
        .max_by_key(|&f| (emb.faces()[f].len(), std::cmp::Reverse(f)))
        .map(|f| emb.faces()[f][0]);
    Ok(emb.with_outer(outer))
}

struct Block {
    verts: Vec<usize>,
    edges: Vec<(usize, usize)>,
}

fn biconnected_blocks(g: &Graph) -> Vec<Block> {
    let n = g.n;
    let adj = g.adjacency();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // iterative DFS: (vertex, parent, next neighbor index)
        let mut dfs: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&mut (v, parent, ref mut idx)) = dfs.last_mut() {
            if *idx < adj[v].len() {
                let w = adj[v][*idx];
                *idx += 1;
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    dfs.push((w, v, 0));
                } else if disc[w] < disc[v] {
                    stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                dfs.pop();
                if let Some(&(p, _, _)) = dfs.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut es = Vec::new();
                        while let Some(e) = stack.pop() {
                            es.push(e);
                            if e == (p, v) {
                                break;
                            }
                        }
                        blocks.push(make_block(es));
                    }
                }
            }
        }
    }
    blocks
}

fn make_block(es: Vec<(usize, usize)>) -> Block {
    let mut verts: Vec<usize> = es.iter().flat_map(|&(a, b)| [a, b]).collect();
    verts.sort_unstable();
    verts.dedup();
    let idx = |v: usize| verts.binary_search(&v).unwrap();
    let edges = es.iter().map(|&(a, b)| (idx(a), idx(b))).collect();
    Block { verts, edges }
}

/// Embed one biconnected block; returns clockwise local neighbor lists.
fn embed_block(b: &Block) -> Result<Vec<Vec<usize>>, GraphError> {
    let n = b.verts.len();
    let m = b.edges.len();
    if m == 1 {
        return Ok(vec![vec![1], vec![0]]);
    }
    if m > 3 * n - 6 {
        return Err(GraphError::NotPlanar);
    }
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in &b.edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let cycle = find_cycle(&adj);
    let mut in_h = vec![false; n];
    let mut h_edge = vec![vec![false; n]; n];
    for i in 0..cycle.len() {
        let (a, c) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        in_h[a] = true;
        h_edge[a][c] = true;
        h_edge[c][a] = true;
    }
    let mut h_edges = cycle.len();
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle.iter().rev().copied().collect()];

    while h_edges < m {
        let frags = fragments(&adj, &in_h, &h_edge);
        // face membership
        let mut best: Option<(usize, Vec<usize>)> = None;
        for (fi, fr) in frags.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&f| fr.attach.iter().all(|a| faces[f].contains(a)))
                .collect();
            if admissible.is_empty() {
                return Err(GraphError::NotPlanar);
            }
            let better = match &best {
                None => true,
                Some((_, adm)) => admissible.len() < adm.len(),
            };
            if better {
                let one = admissible.len() == 1;
                best = Some((fi, admissible));
                if one {
                    break;
                }
            }
        }
        let (fi, adm) = best.expect("at least one fragment while edges remain");
        let path = fragment_path(&frags[fi], &adj, &in_h);
        let f = adm[0];
        let face = faces[f].clone();
        let a = path[0];
        let z = *path.last().unwrap();
        let ia = face.iter().position(|&x| x == a).unwrap();
        let iz = face.iter().position(|&x| x == z).unwrap();
        let k = face.len();
        let inner = &path[1..path.len() - 1];
        // f1: a .. z along face, then path interior backwards
        let mut f1 = Vec::new();
        let mut i = ia;
        loop {
            f1.push(face[i]);
            if i == iz {
                break;
            }
            i = (i + 1) % k;
        }
        f1.extend(inner.iter().rev());
        let mut f2 = Vec::new();
        let mut i = iz;
        loop {
            f2.push(face[i]);
            if i == ia {
                break;
            }
            i = (i + 1) % k;
        }
        f2.extend(inner.iter());
        faces[f] = f1;
        faces.push(f2);
        for w in path.windows(2) {
            h_edge[w[0]][w[1]] = true;
            h_edge[w[1]][w[0]] = true;
            h_edges += 1;
        }
        for &v in &path {
            in_h[v] = true;
        }
    }

    // faces give cw successor: walk u -> v -> w means cw_succ_v(u) = w
    let mut succ: Vec<std::collections::HashMap<usize, usize>> = vec![Default::default(); n];
    for f in &faces {
        let k = f.len();
        for i in 0..k {
            let (u, v, w) = (f[i], f[(i + 1) % k], f[(i + 2) % k]);
            succ[v].insert(u, w);
        }
    }
    let mut rot = vec![Vec::new(); n];
    for v in 0..n {
        let start = adj[v][0];
        let mut x = start;
        loop {
            rot[v].push(x);
            x = succ[v][&x];
            if x == start {
                break;
            }
        }
        debug_assert_eq!(rot[v].len(), adj[v].len());
    }
    Ok(rot)
}

fn find_cycle(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    let mut stack = vec![(0usize, 0usize)];
    depth[0] = 0;
    while let Some(&mut (v, ref mut i)) = stack.last_mut() {
        if *i < adj[v].len() {
            let w = adj[v][*i];
            *i += 1;
            if depth[w] == usize::MAX {
                depth[w] = depth[v] + 1;
                parent[w] = v;
                stack.push((w, 0));
            } else if w != parent[v] && depth[w] < depth[v] {
                let mut cyc = vec![v];
                let mut x = v;
                while x != w {
                    x = parent[x];
                    cyc.push(x);
                }
                return cyc;
            }
        } else {
            stack.pop();
        }
    }
    unreachable!("biconnected block with more than one edge has a cycle")
}

struct Fragment {
    attach: Vec<usize>,
    /// Either a single chord, or a component of non-H vertices.
    chord: Option<(usize, usize)>,
    comp: Vec<usize>,
}

fn fragments(adj: &[Vec<usize>], in_h: &[bool], h_edge: &[Vec<bool>]) -> Vec<Fragment> {
    let n = adj.len();
    let mut out = Vec::new();
    for u in 0..n {
        if !in_h[u] {
            continue;
        }
        for &v in &adj[u] {
            if u < v && in_h[v] && !h_edge[u][v] {
                out.push(Fragment { attach: vec![u, v], chord: Some((u, v)), comp: Vec::new() });
            }
        }
    }
    let mut seen = vec![false; n];
    for s in 0..n {
        if in_h[s] || seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut attach = Vec::new();
        let mut i = 0;
        while i < comp.len() {
            let x = comp[i];
            i += 1;
            for &y in &adj[x] {
                if in_h[y] {
                    attach.push(y);
                } else if !seen[y] {
                    seen[y] = true;
                    comp.push(y);
                }
            }
        }
        attach.sort_unstable();
        attach.dedup();
        out.push(Fragment { attach, chord: None, comp });
    }
    out
}

/// A path through the fragment joining two distinct attachment vertices.
fn fragment_path(fr: &Fragment, adj: &[Vec<usize>], in_h: &[bool]) -> Vec<usize> {
    if let Some((u, v)) = fr.chord {
        return vec![u, v];
    }
    let a = fr.attach[0];
    let n = adj.len();
    let in_comp = {
        let mut b = vec![false; n];
        for &x in &fr.comp {
            b[x] = true;
        }
        b
    };
    let x0 = *adj[a].iter().find(|&&x| in_comp[x]).expect("attachment touches component");
    let mut prev = vec![usize::MAX; n];
    prev[x0] = x0;
    let mut queue = std::collections::VecDeque::from([x0]);
    while let Some(x) = queue.pop_front() {
        if let Some(&b) = adj[x].iter().find(|&&y| in_h[y] && y != a) {
            let mut path = vec![b, x];
            let mut y = x;
            while y != x0 {
                y = prev[y];
                path.push(y);
            }
            path.push(a);
            path.reverse();
            return path;
        }
        for &y in &adj[x] {
            if in_comp[y] && prev[y] == usize::MAX {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    unreachable!("fragment of a biconnected block has two attachments")
}
