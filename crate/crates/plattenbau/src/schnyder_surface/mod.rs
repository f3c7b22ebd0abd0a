//! From a cycle cover to a Schnyder wood, region vectors and the orthogonal
//! surface they generate.

mod surface;
mod wood;

pub use surface::{build_surface, flat_extreme_points, Flat, OrthogonalSurface, Ray, SurfaceVertex, VertexKind};
pub use wood::{
    add_support_edges, check_schnyder, color_dual_edges, derive_g_schnyder, region_vectors, ColoredDual, SchnyderWood,
    Slot, SupportEdge,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SurfaceError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no white-region triangle around vertex {corner} for support of triangle {triangle}")]
    NoCandidateVertex { triangle: usize, corner: usize },
    #[error("schnyder wood check failed: {0}")]
    SchnyderCheckFailed(String),
    #[error("monochromatic paths collide: {0}")]
    PathCollision(String),
    #[error("degenerate orthogonal surface: {0}")]
    Degenerate(String),
}

#[cfg(test)]
mod tests;
