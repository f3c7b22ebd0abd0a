//! Exact fallback: search for a proper Plattenbau with a prescribed touching
//! graph, keeping every rectangle's normal axis. Every adjacent pair picks
//! which rectangle owns the contact and on which side the other one hangs;
//! every non-adjacent pair is either separated along some axis or meets the
//! other without interior points. Each choice is a set of difference constraints on the
//! coordinates, so feasibility is a negative-cycle test.

use crate::graph_core::Graph;
use crate::plattenbau_geom::{Axis, Plattenbau, Rect3, Q};

const INF: i64 = i64::MAX / 4;

/// Coordinate slot of rectangle `r`: the offset for its own axis, else the
/// low or high end of the span on axis `t`.
fn slot(axes: &[Axis], r: usize, t: usize, high: bool) -> usize {
    let a = axes[r];
    if t == a.idx() {
        return 5 * r;
    }
    let j = usize::from(a.others()[1] == t);
    5 * r + 1 + 2 * j + usize::from(high)
}

fn value(p: &Plattenbau, s: usize) -> &Q {
    let r = &p.rects[s / 5];
    match s % 5 {
        0 => &r.offset,
        1 => &r.span1[0],
        2 => &r.span1[1],
        3 => &r.span2[0],
        _ => &r.span2[1],
    }
}

/// `x[a] <= x[b] + c`
#[derive(Clone, Copy, Debug)]
struct Le {
    a: usize,
    b: usize,
    c: i64,
}

fn le(a: usize, b: usize, c: i64) -> Le {
    Le { a, b, c }
}

fn eq(a: usize, b: usize) -> [Le; 2] {
    [le(a, b, 0), le(b, a, 0)]
}

/// The options of one pair, each a list of constraints.
fn options(axes: &[Axis], u: usize, v: usize, adjacent: bool) -> Vec<Vec<Le>> {
    let s = |r, t, h| slot(axes, r, t, h);
    let mut out = Vec::new();
    if adjacent {
        let (i, t) = (axes[u].idx(), axes[v].idx());
        let r = 3 - i - t;
        // owner `o` at its plane, `e` has one side on it
        for (o, e, oa, ea) in [(v, u, t, i), (u, v, i, t)] {
            for high in [false, true] {
                let mut c = Vec::new();
                c.extend(eq(s(e, oa, high), s(o, oa, false)));
                c.push(le(s(o, ea, false), s(e, ea, false), -1));
                c.push(le(s(e, ea, false), s(o, ea, true), -1));
                c.push(le(s(o, r, false), s(e, r, false), 0));
                c.push(le(s(e, r, true), s(o, r, true), 0));
                out.push(c);
            }
        }
    } else {
        for t in 0..3 {
            out.push(vec![le(s(u, t, true), s(v, t, false), -1)]);
            out.push(vec![le(s(v, t, true), s(u, t, false), -1)]);
        }
        // meetings without interior points: edge to edge across, or side by
        // side in a common plane
        let (i, t) = (axes[u].idx(), axes[v].idx());
        if i != t {
            for uh in [false, true] {
                for vh in [false, true] {
                    let mut c = Vec::new();
                    c.extend(eq(s(u, t, uh), s(v, t, false)));
                    c.extend(eq(s(v, i, vh), s(u, i, false)));
                    out.push(c);
                }
            }
        } else {
            for k in axes[u].others() {
                for (a, b) in [(u, v), (v, u)] {
                    let mut c = Vec::new();
                    c.extend(eq(s(a, i, false), s(b, i, false)));
                    c.extend(eq(s(a, k, true), s(b, k, false)));
                    out.push(c);
                }
            }
        }
    }
    out
}

/// All-pairs shortest paths of the constraint graph, updated one edge at a
/// time; `None` once a negative cycle appears.
#[derive(Clone)]
struct Dist {
    n: usize,
    d: Vec<i64>,
}

impl Dist {
    fn new(n: usize) -> Dist {
        let mut d = vec![INF; n * n];
        for i in 0..n {
            d[i * n + i] = 0;
        }
        Dist { n, d }
    }

    /// Add `x[a] <= x[b] + c`, an edge `b -> a` of weight `c`.
    fn add(&mut self, k: Le) -> bool {
        let n = self.n;
        let (a, b, c) = (k.a, k.b, k.c);
        if self.d[a * n + b] < INF && self.d[a * n + b] + c < 0 {
            return false;
        }
        if self.d[b * n + a] <= c {
            return true;
        }
        let from_b: Vec<i64> = (0..n).map(|i| self.d[i * n + b]).collect();
        let to_a: Vec<i64> = self.d[a * n..a * n + n].to_vec();
        for (i, &ib) in from_b.iter().enumerate() {
            if ib >= INF {
                continue;
            }
            let base = ib + c;
            let row = &mut self.d[i * n..i * n + n];
            for (j, &aj) in to_a.iter().enumerate() {
                if aj < INF && base + aj < row[j] {
                    row[j] = base + aj;
                }
            }
        }
        true
    }

    /// A solution: shortest distances from a virtual source joined to all.
    fn solution(&self) -> Vec<i64> {
        let n = self.n;
        (0..n).map(|v| (0..n).map(|u| self.d[u * n + v]).min().unwrap_or(0).min(0)).collect()
    }
}

impl Dist {
    fn consistent(&self, k: &Le) -> bool {
        let ab = self.d[k.a * self.n + k.b];
        ab >= INF || ab + k.c >= 0
    }

    fn implied(&self, k: &Le) -> bool {
        self.d[k.b * self.n + k.a] <= k.c
    }
}

/// Depth-first search, always branching on the open pair with the fewest
/// options that pass a quick consistency test; pairs already implied by
/// the constraints are closed without branching.
fn dfs(pairs: &[Vec<Vec<Le>>], open: &mut [bool], dist: &Dist, nodes: &mut usize, limit: usize) -> Option<Dist> {
    let mut pick: Option<(usize, Vec<usize>)> = None;
    let mut closed = Vec::new();
    for (p, opts) in pairs.iter().enumerate() {
        if !open[p] {
            continue;
        }
        if opts.iter().any(|o| o.iter().all(|k| dist.implied(k))) {
            open[p] = false;
            closed.push(p);
            continue;
        }
        let live: Vec<usize> = (0..opts.len()).filter(|&o| opts[o].iter().all(|k| dist.consistent(k))).collect();
        if pick.as_ref().is_none_or(|b| live.len() < b.1.len()) {
            let empty = live.is_empty();
            pick = Some((p, live));
            if empty {
                break;
            }
        }
    }
    let result = match pick {
        None => Some(dist.clone()),
        Some((p, live)) => {
            open[p] = false;
            let mut found = None;
            for o in live {
                *nodes += 1;
                if *nodes > limit {
                    break;
                }
                let mut d = dist.clone();
                if pairs[p][o].iter().all(|&c| d.add(c)) {
                    found = dfs(pairs, open, &d, nodes, limit);
                    if found.is_some() {
                        break;
                    }
                }
            }
            open[p] = true;
            found
        }
    };
    for p in closed {
        open[p] = true;
    }
    result
}

/// A proper Plattenbau with touching graph `g` (rectangle ids `0..g.n`) and
/// the axes of `seed`, or `None` if none is found within `node_limit`
/// search nodes. Choices satisfied by `seed` are tried first.
pub fn solve_exact(seed: &Plattenbau, g: &Graph, node_limit: usize) -> Option<Plattenbau> {
    let n = g.n;
    if seed.len() != n || seed.rects.iter().enumerate().any(|(i, r)| r.id != i) {
        return None;
    }
    let axes: Vec<Axis> = seed.rects.iter().map(|r| r.axis).collect();
    let violated = |k: &Le| {
        let (a, b) = (value(seed, k.a), value(seed, k.b));
        if k.c < 0 {
            a >= b
        } else {
            a > b
        }
    };
    let violations = |c: &[Le]| c.iter().filter(|k| violated(k)).count();
    let mut pairs: Vec<(usize, Vec<Vec<Le>>)> = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let mut opts = options(&axes, u, v, g.has_edge(u, v));
            if g.has_edge(u, v) && axes[u] == axes[v] {
                return None;
            }
            opts.sort_by_key(|c| violations(c));
            let worst = violations(&opts[0]);
            pairs.push((worst, opts));
        }
    }
    // pairs the seed gets wrong first
    pairs.sort_by_key(|p| std::cmp::Reverse(p.0));
    let mut dist = Dist::new(5 * n);
    for r in 0..n {
        for t in axes[r].others() {
            if !dist.add(le(slot(&axes, r, t, false), slot(&axes, r, t, true), -1)) {
                return None;
            }
        }
    }
    let pairs: Vec<Vec<Vec<Le>>> = pairs.into_iter().map(|p| p.1).collect();
    let mut nodes = 0usize;
    let mut open = vec![true; pairs.len()];
    let done = dfs(&pairs, &mut open, &dist, &mut nodes, node_limit);
    let done = done?;
    let x = done.solution();
    let q = |s: usize| Q::int(x[s]);
    let rects = (0..n)
        .map(|r| {
            let s = 5 * r;
            Rect3::new(r, axes[r], q(s), [q(s + 1), q(s + 2)], [q(s + 3), q(s + 4)])
        })
        .collect();
    Some(Plattenbau { rects, outer: None })
}
