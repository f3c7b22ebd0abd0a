//! Orientations with prescribed out-degrees via unit-capacity max-flow.
//!
//! Network: source -> one node per edge (capacity 1) -> each endpoint
//! (capacity 1) -> sink (capacity alpha). Flow from edge `e` into endpoint
//! `x` orients `e` out of `x`.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    /// A vertex set X with sum(alpha on X) > |E[X]| + |E[X, complement]|.
    pub set: Vec<usize>,
    pub alpha_sum: usize,
    pub edge_bound: usize,
}

struct Net {
    head: Vec<usize>,
    cap: Vec<i64>,
    adj: Vec<Vec<usize>>,
}

impl Net {
    fn new(n: usize) -> Net {
        Net { head: Vec::new(), cap: Vec::new(), adj: vec![Vec::new(); n] }
    }

    fn arc(&mut self, u: usize, v: usize, c: i64) -> usize {
        let a = self.head.len();
        self.head.push(v);
        self.cap.push(c);
        self.adj[u].push(a);
        self.head.push(u);
        self.cap.push(0);
        self.adj[v].push(a + 1);
        a
    }

    fn reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &a in &self.adj[u] {
                let v = self.head[a];
                if self.cap[a] > 0 && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    }

    /// Augment along BFS shortest paths until none remain.
    fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let n = self.adj.len();
        let mut total = 0;
        loop {
            let mut via = vec![usize::MAX; n];
            let mut queue = std::collections::VecDeque::from([s]);
            let mut seen = vec![false; n];
            seen[s] = true;
            while let Some(u) = queue.pop_front() {
                if u == t {
                    break;
                }
                for &a in &self.adj[u] {
                    let v = self.head[a];
                    if self.cap[a] > 0 && !seen[v] {
                        seen[v] = true;
                        via[v] = a;
                        queue.push_back(v);
                    }
                }
            }
            if !seen[t] {
                return total;
            }
            let mut push = i64::MAX;
            let mut v = t;
            while v != s {
                let a = via[v];
                push = push.min(self.cap[a]);
                v = self.head[a ^ 1];
            }
            let mut v = t;
            while v != s {
                let a = via[v];
                self.cap[a] -= push;
                self.cap[a ^ 1] += push;
                v = self.head[a ^ 1];
            }
            total += push;
        }
    }
}

/// Orient `edges` on `0..n` so that vertex `x` has out-degree `alpha[x]`.
/// Result `true` at index `e` means edge `e` points from `edges[e].0` to
/// `edges[e].1`.
pub fn orient_with_outdegrees(n: usize, edges: &[(usize, usize)], alpha: &[usize]) -> Result<Vec<bool>, Violation> {
    let m = edges.len();
    let total: usize = alpha.iter().sum();
    let src = m + n;
    let sink = src + 1;
    let mut net = Net::new(m + n + 2);
    let mut first_arc = Vec::with_capacity(m);
    for (e, &(u, v)) in edges.iter().enumerate() {
        net.arc(src, e, 1);
        first_arc.push(net.arc(e, m + u, 1));
        net.arc(e, m + v, 1);
    }
    for (x, &a) in alpha.iter().enumerate() {
        net.arc(m + x, sink, a as i64);
    }
    let flow = net.max_flow(src, sink) as usize;
    if flow == m && total == m {
        return Ok((0..m).map(|e| net.cap[first_arc[e]] == 0).collect());
    }
    if flow == m {
        // every edge placed but some vertex short: X = all vertices
        return Err(Violation { set: (0..n).collect(), alpha_sum: total, edge_bound: m });
    }
    let reach = net.reachable(src);
    let set: Vec<usize> = (0..n).filter(|&x| !reach[m + x]).collect();
    let (alpha_sum, edge_bound) = violation_values(&set, n, edges, alpha);
    Err(Violation { set, alpha_sum, edge_bound })
}

/// Left and right side of inequality (alpha) for the set `x`.
pub fn violation_values(x: &[usize], n: usize, edges: &[(usize, usize)], alpha: &[usize]) -> (usize, usize) {
    let mut inx = vec![false; n];
    for &v in x {
        inx[v] = true;
    }
    let a = x.iter().map(|&v| alpha[v]).sum();
    let b = edges.iter().filter(|&&(u, v)| inx[u] || inx[v]).count();
    (a, b)
}

/// All orientations with the prescribed out-degrees, in lexicographic order
/// of the direction vectors (`false` < `true`). `None` if more than `limit`.
pub fn enumerate_orientations(
    n: usize,
    edges: &[(usize, usize)],
    alpha: &[usize],
    limit: usize,
) -> Option<Vec<Vec<bool>>> {
    let m = edges.len();
    let mut remaining = vec![0usize; n];
    for &(u, v) in edges {
        remaining[u] += 1;
        remaining[v] += 1;
    }
    let mut out = vec![0usize; n];
    let mut cur = vec![false; m];
    let mut res = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn rec(
        e: usize,
        edges: &[(usize, usize)],
        alpha: &[usize],
        out: &mut Vec<usize>,
        remaining: &mut Vec<usize>,
        cur: &mut Vec<bool>,
        res: &mut Vec<Vec<bool>>,
        limit: usize,
    ) -> bool {
        if e == edges.len() {
            if out.iter().zip(alpha).all(|(o, a)| o == a) {
                if res.len() == limit {
                    return false;
                }
                res.push(cur.clone());
            }
            return true;
        }
        let (u, v) = edges[e];
        remaining[u] -= 1;
        remaining[v] -= 1;
        for dir in [false, true] {
            let tail = if dir { u } else { v };
            let other = if dir { v } else { u };
            out[tail] += 1;
            let ok = out[tail] <= alpha[tail]
                && out[other] + remaining[other] >= alpha[other]
                && out[tail] + remaining[tail] >= alpha[tail];
            if ok {
                cur[e] = dir;
                if !rec(e + 1, edges, alpha, out, remaining, cur, res, limit) {
                    return false;
                }
            }
            out[tail] -= 1;
        }
        remaining[u] += 1;
        remaining[v] += 1;
        true
    }
    if rec(0, edges, alpha, &mut out, &mut remaining, &mut cur, &mut res, limit) {
        Some(res)
    } else {
        None
    }
}

/// Exhaustive filter over all 2^m orientations; test oracle.
pub fn brute_force_orientations(n: usize, edges: &[(usize, usize)], alpha: &[usize]) -> Vec<Vec<bool>> {
    let m = edges.len();
    assert!(m <= 26, "brute force limited to 26 edges");
    let mut res = Vec::new();
    for mask in 0u64..(1u64 << m) {
        let mut out = vec![0usize; n];
        for (e, &(u, v)) in edges.iter().enumerate() {
            if mask >> e & 1 == 1 {
                out[u] += 1;
            } else {
                out[v] += 1;
            }
        }
        if out.iter().zip(alpha).all(|(o, a)| o == a) {
            res.push((0..m).map(|e| mask >> e & 1 == 1).collect());
        }
    }
    res.sort();
    res
}
