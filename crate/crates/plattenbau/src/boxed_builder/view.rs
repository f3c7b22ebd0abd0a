//! Instance data keyed by vertex id, so that vertices can disappear during
//! the induction without relabelling.

use super::{BoxedInstance, Dir, Sq};
use crate::graph_core::Graph;
use std::collections::{BTreeMap, BTreeSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct View {
    pub adj: BTreeMap<usize, BTreeSet<usize>>,
    pub out: BTreeMap<usize, BTreeSet<usize>>,
    pub outer: [usize; 6],
    pub sq: BTreeMap<usize, Sq>,
}

impl View {
    pub fn from_instance(inst: &BoxedInstance) -> View {
        let n = inst.graph.n;
        let mut adj: BTreeMap<usize, BTreeSet<usize>> = (0..n).map(|v| (v, BTreeSet::new())).collect();
        let mut out: BTreeMap<usize, BTreeSet<usize>> = (0..n).map(|v| (v, BTreeSet::new())).collect();
        for (e, &[u, v]) in inst.graph.edges.iter().enumerate() {
            adj.get_mut(&u).unwrap().insert(v);
            adj.get_mut(&v).unwrap().insert(u);
            match inst.orientation.get(e) {
                Some(Dir::Forward) => {
                    out.get_mut(&u).unwrap().insert(v);
                }
                Some(Dir::Backward) => {
                    out.get_mut(&v).unwrap().insert(u);
                }
                Some(Dir::Both) => {
                    out.get_mut(&u).unwrap().insert(v);
                    out.get_mut(&v).unwrap().insert(u);
                }
                None => {}
            }
        }
        let sq = inst.sq.iter().enumerate().map(|(v, s)| (v, s.canonical())).collect();
        View { adj, out, outer: inst.outer, sq }
    }

    /// Back to an instance; ids must be exactly `0..n`.
    pub fn to_instance(&self) -> Option<BoxedInstance> {
        let n = self.adj.len();
        if self.adj.keys().copied().ne(0..n) {
            return None;
        }
        let graph = Graph::new(n, self.edges()).ok()?;
        let orientation = graph
            .edges
            .iter()
            .map(|&[u, v]| match (self.points(u, v), self.points(v, u)) {
                (true, true) => Dir::Both,
                (true, false) => Dir::Forward,
                _ => Dir::Backward,
            })
            .collect();
        let sq = (0..n).map(|v| self.sq.get(&v).cloned().unwrap_or_default()).collect();
        Some(BoxedInstance { graph, outer: self.outer, orientation, sq })
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.adj.keys().copied()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adj.iter().flat_map(|(&u, nb)| nb.iter().filter(move |&&v| u < v).map(move |&v| (u, v))).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(&u).is_some_and(|s| s.contains(&v))
    }

    pub fn points(&self, u: usize, v: usize) -> bool {
        self.out.get(&u).is_some_and(|s| s.contains(&v))
    }

    pub fn is_outer(&self, v: usize) -> bool {
        self.outer.contains(&v)
    }

    pub fn common(&self, u: usize, v: usize) -> BTreeSet<usize> {
        self.adj[&u].intersection(&self.adj[&v]).copied().collect()
    }

    /// Edges among `N(v)`.
    pub fn induced_edges(&self, v: usize) -> BTreeSet<(usize, usize)> {
        let nb = &self.adj[&v];
        let mut e = BTreeSet::new();
        for &a in nb {
            for &b in &self.adj[&a] {
                if a < b && nb.contains(&b) {
                    e.insert((a, b));
                }
            }
        }
        e
    }

    /// Triangles as sorted triples.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut t = Vec::new();
        for (u, v) in self.edges() {
            for w in self.common(u, v) {
                if w > v {
                    t.push([u, v, w]);
                }
            }
        }
        t.sort_unstable();
        t
    }

    /// The four vertices of a 4-cycle in cyclic order, if `set` induces one.
    pub fn cycle_order(&self, set: &BTreeSet<usize>) -> Option<Vec<usize>> {
        if set.len() != 4 {
            return None;
        }
        let nb = |x: usize| -> Vec<usize> { set.iter().copied().filter(|&y| self.has_edge(x, y)).collect() };
        if set.iter().any(|&x| nb(x).len() != 2) {
            return None;
        }
        let start = *set.iter().next()?;
        let mut cyc = vec![start];
        let mut prev = start;
        let mut cur = nb(start)[0];
        while cur != start {
            cyc.push(cur);
            let n = nb(cur);
            let next = if n[0] == prev { n[1] } else { n[0] };
            prev = cur;
            cur = next;
            if cyc.len() > 4 {
                return None;
            }
        }
        (cyc.len() == 4).then_some(cyc)
    }
}
