//! Proper boxed Plattenbauten: the conditions P1 to P4 on a graph with six
//! outer vertices, its octahedral cells, the inductive construction and the
//! extraction of the same data from geometry.

mod build;
mod cells;
mod conditions;
pub mod generate;
mod necessity;
mod sq;
mod view;

#[cfg(test)]
mod tests;

pub use build::build_boxed;
pub use cells::{cells, check_claims, side_relation, Cell, Side, SideGraph};
pub use conditions::{check_conditions, derive_embeddings, enumerate_orientations, find_orientation, Check, ConditionReport};
pub use necessity::{extract, verify_necessity, Extracted};
pub use sq::Sq;

use crate::graph_core::Graph;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use thiserror::Error;
use view::View;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoxedError {
    #[error("no orientation with out-degree 4 and bidirected outer edges")]
    Infeasible,
    #[error("conditions fail: {0}")]
    ConditionsFailed(String),
    #[error("claim {claim} violated: {detail}")]
    ClaimViolation { claim: u8, detail: String },
    #[error("side relation is not symmetric at {0:?}")]
    RelationAsymmetry([usize; 3]),
    #[error("component of the side relation is not a cube: {0}")]
    NonCubeComponent(String),
    #[error("neighbourhood of {0} has no unique embedding; rotations must be supplied")]
    EmbeddingRequired(usize),
    #[error("neighbourhood embeddings cannot be made consistent: {0}")]
    InconsistentEmbeddings(String),
    #[error("not a proper Plattenbau")]
    NotProper,
    #[error("not boxed: {0}")]
    NotBoxed(String),
    #[error("extraction failed: {0}")]
    ExtractionFailed(String),
    #[error("construction broke an invariant: {0}")]
    InvariantBroken(String),
}

/// Direction of edge `graph.edges[e] = [u, v]` (with `u < v`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Dir {
    Forward,
    Backward,
    Both,
}

/// A graph with six outer vertices, an orientation and one spherical
/// embedding per vertex neighbourhood.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxedInstance {
    pub graph: Graph,
    pub outer: [usize; 6],
    pub orientation: Vec<Dir>,
    /// `sq[v]` embeds the subgraph induced by `N(v)`.
    pub sq: Vec<Sq>,
}

impl BoxedInstance {
    /// Instance from an abstract graph: the orientation comes from the flow,
    /// the embeddings from uniquely embeddable neighbourhoods.
    pub fn from_graph(graph: Graph, outer: [usize; 6]) -> Result<BoxedInstance, BoxedError> {
        let orientation = find_orientation(&graph, &outer)?;
        let sq = derive_embeddings(&graph)?;
        Ok(BoxedInstance { graph, outer, orientation, sq })
    }

    pub fn n(&self) -> usize {
        self.graph.n
    }

    pub fn is_outer(&self, v: usize) -> bool {
        self.outer.contains(&v)
    }

    /// Whether the edge `u -> v` is present (bidirected edges count both ways).
    pub fn points(&self, u: usize, v: usize) -> bool {
        let Ok(e) = self.graph.edges.binary_search(&[u.min(v), u.max(v)]) else { return false };
        match self.orientation.get(e) {
            Some(Dir::Both) => true,
            Some(Dir::Forward) => u < v,
            Some(Dir::Backward) => u > v,
            None => false,
        }
    }

    pub fn out_neighbors(&self, v: usize) -> Vec<usize> {
        self.graph.adjacency()[v].iter().copied().filter(|&w| self.points(v, w)).collect()
    }

    pub(crate) fn view(&self) -> View {
        View::from_instance(self)
    }

    /// Equator `O_v`, the out-neighbours of `v`.
    pub fn equator(&self, v: usize) -> BTreeSet<usize> {
        self.out_neighbors(v).into_iter().collect()
    }
}
