//! Touching graphs of axis-aligned rectangles in 3-space.
//!
//! The crate covers two constructions: 3-colorable planar graphs are realised
//! through orthogonal surfaces built from Schnyder woods, and proper boxed
//! representations are built by an identification induction on octahedral
//! cells. Everything geometric is exact rational arithmetic.

pub mod graph_core;
pub mod alpha_flow;
pub mod corpus;
pub mod schnyder_surface;
pub mod plattenbau_geom;
pub mod exec;
pub mod planar_builder;
pub mod boxed_builder;

#[cfg(test)]
pub(crate) mod test_support;
