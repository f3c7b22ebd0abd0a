//! From a 3-colorable planar graph to a proper Plattenbau: augment to an
//! Eulerian triangulation, cut at babets, realise each babet-free piece by
//! the rectangles of an orthogonal surface, patch the pieces together and
//! expand weak contacts.

mod babets;
mod patch;
mod rects;
mod solve;

pub use babets::{clean_babets, BabetChild, Cleaned};
pub use patch::{patch, PatchRecord};
pub use rects::{flat_vertices, rectangles_from_surface, resolve_weak_contacts};
pub use solve::solve_exact;

use crate::alpha_flow::{build_incidence_graph, cycle_cover, find_alpha_orientation, AlphaError, AlphaOrientation};
use crate::exec::Exec;
use crate::graph_core::{
    augment_to_triangulation, brute_force_three_coloring, embed_planar, face_classes, is_planar,
    three_color_triangulation, three_colorings, Color, EmbeddedGraph, Graph, GraphError,
};
use crate::plattenbau_geom::{is_proper, touching_graph, GeomError, Plattenbau};
use crate::schnyder_surface::{
    add_support_edges, build_surface, color_dual_edges, derive_g_schnyder, region_vectors, OrthogonalSurface,
    SchnyderWood, SurfaceError, VertexKind,
};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PlanarError {
    #[error("graph is not planar")]
    NotPlanar,
    #[error("graph is not 3-colorable")]
    NotThreeColorable,
    #[error("degenerate construction: {0}")]
    Degenerate(String),
    #[error("weak contact resolution broke the geometry: {0}")]
    ResolutionBrokeGeometry(String),
    #[error("corner too small for the patch: {0}")]
    CornerTooSmall(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Alpha(#[from] AlphaError),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Geom(#[from] GeomError),
}

/// A babet-free triangulation together with everything derived on the way
/// to its orthogonal surface.
#[derive(Clone, Debug)]
pub struct SurfacePiece {
    pub colors: Vec<Color>,
    pub orientation: AlphaOrientation,
    pub wood: SchnyderWood,
    pub region_vectors: Vec<[i64; 3]>,
    pub surface: OrthogonalSurface,
    /// Vertex of the triangulation represented by each flat.
    pub flat_vertex: Vec<usize>,
}

pub fn babet_free_surface(t: &EmbeddedGraph) -> Result<SurfacePiece, PlanarError> {
    let colors = three_color_triangulation(t)?;
    let classes = face_classes(t, &colors);
    let h = build_incidence_graph(t, &classes);
    let orientation = find_alpha_orientation(&h)?;
    let cover = cycle_cover(t, &classes, &h, &orientation)?;
    let cd = add_support_edges(&color_dual_edges(t, &colors)?, &cover)?;
    let wood = derive_g_schnyder(&cd, &cover)?;
    let rv = region_vectors(&wood)?;
    let surface = build_surface(&rv)?;
    let flat_vertex = flat_vertices(&surface, &wood, t, &colors)?;
    Ok(SurfacePiece { colors, orientation, wood, region_vectors: rv, surface, flat_vertex })
}

/// Debug record of one recursion level. Vertex ids are those of the
/// top-level triangulation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PieceReport {
    pub vertices: Vec<usize>,
    /// vertices left after removing babet interiors
    pub clean_vertices: Vec<usize>,
    pub orientation: AlphaOrientation,
    pub region_vectors: Vec<[i64; 3]>,
    pub patch: Option<PatchRecord>,
    pub children: Vec<PieceReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    /// augmented triangulation: vertex count, edges, outer face
    pub triangulation_n: usize,
    pub triangulation_edges: Vec<[usize; 2]>,
    pub outer_face: Vec<usize>,
    /// input vertex `v` is triangulation vertex `vertex_map[v]`
    pub vertex_map: Vec<usize>,
    pub stacked: usize,
    pub weak_resolutions: usize,
    pub root: Option<PieceReport>,
}

#[derive(Clone, Debug)]
pub struct PlanarOutput {
    pub plattenbau: Plattenbau,
    pub provenance: Provenance,
}

/// Rectangles for every vertex of the Eulerian triangulation `t`, ids being
/// vertices of `t`; weak contacts are left in place.
pub fn realize_triangulation(t: &EmbeddedGraph, exec: Exec) -> Result<(Plattenbau, PieceReport), PlanarError> {
    let ids: Vec<usize> = (0..t.n()).collect();
    realize(t, &ids, exec)
}

fn realize(t: &EmbeddedGraph, global: &[usize], exec: Exec) -> Result<(Plattenbau, PieceReport), PlanarError> {
    let colors = three_color_triangulation(t)?;
    let classes = face_classes(t, &colors);
    let cleaned = clean_babets(t, &classes);
    let piece = babet_free_surface(&cleaned.clean)?;
    let mut pb = rectangles_from_surface(&piece.surface)?;
    for r in &mut pb.rects {
        r.id = cleaned.map[piece.flat_vertex[r.id]];
    }
    // flat of each vertex of t, for locating saddles
    let mut flat_of = vec![usize::MAX; t.n()];
    for (f, &v) in piece.flat_vertex.iter().enumerate() {
        flat_of[cleaned.map[v]] = f;
    }
    let built: Vec<Result<(Plattenbau, PieceReport), PlanarError>> = exec.map(&cleaned.children, |c| {
        let sub: Vec<usize> = c.map.iter().map(|&v| global[v]).collect();
        let (mut p, rep) = realize(&c.t_b, &sub, exec)?;
        for r in &mut p.rects {
            r.id = c.map[r.id];
        }
        Ok((p, rep))
    });
    let mut children = Vec::new();
    for (c, res) in cleaned.children.iter().zip(built) {
        let (child, mut rep) = res?;
        let mut want: Vec<usize> = c.babet.iter().map(|&v| flat_of[v]).collect();
        want.sort_unstable();
        let saddle = piece
            .surface
            .vertices
            .iter()
            .position(|sv| sv.kind == VertexKind::Saddle && sv.flats[..] == want[..])
            .ok_or_else(|| PlanarError::Degenerate(format!("no saddle for babet {:?}", c.babet)))?;
        let (patched, record) = patch(&pb, &piece.surface, saddle, &child, c.babet)?;
        pb = patched;
        rep.patch = Some(PatchRecord { babet: c.babet.map(|v| global[v]), ..record });
        children.push(rep);
    }
    let report = PieceReport {
        vertices: global.to_vec(),
        clean_vertices: cleaned.map.iter().map(|&v| global[v]).collect(),
        orientation: piece.orientation,
        region_vectors: piece.region_vectors,
        patch: None,
        children,
    };
    Ok((pb, report))
}

/// Search nodes the exact fallback may visit per attempt.
pub const SOLVER_NODES: usize = 1_000_000;

/// Colorings of the input tried before giving up.
pub const COLORING_TRIES: usize = 24;

/// A proper Plattenbau whose touching graph is `g`; rectangle `v` stands
/// for vertex `v`.
pub fn build_planar(g: &Graph, exec: Exec) -> Result<PlanarOutput, PlanarError> {
    if g.n == 0 {
        let provenance = Provenance {
            triangulation_n: 0,
            triangulation_edges: Vec::new(),
            outer_face: Vec::new(),
            vertex_map: Vec::new(),
            stacked: 0,
            weak_resolutions: 0,
            root: None,
        };
        return Ok(PlanarOutput { plattenbau: Plattenbau::default(), provenance });
    }
    if !is_planar(g) {
        return Err(PlanarError::NotPlanar);
    }
    if brute_force_three_coloring(g).is_none() {
        return Err(PlanarError::NotThreeColorable);
    }
    // the rectangles of a surface need not admit a proper repair, so other
    // labelings (hence embeddings), colorings (hence augmentations) and
    // outer faces are tried in a fixed order
    let mut first_err = None;
    for (i, perm) in relabelings(g.n).enumerate() {
        let h = Graph::new(g.n, g.edges.iter().map(|e| (perm[e[0]], perm[e[1]])))?;
        match search(&h, exec, i == 0) {
            Ok(mut out) => {
                let mut back = vec![0; g.n];
                for (v, &pv) in perm.iter().enumerate() {
                    back[pv] = v;
                }
                for r in &mut out.plattenbau.rects {
                    r.id = back[r.id];
                }
                out.plattenbau.rects.sort_by_key(|r| r.id);
                out.provenance.vertex_map = perm.iter().map(|&pv| out.provenance.vertex_map[pv]).collect();
                return Ok(out);
            }
            Err(e) => {
                first_err.get_or_insert(e);
            }
        }
    }
    Err(first_err.expect("at least one labeling"))
}

/// Identity, then the cyclic shifts, then the reversed shifts.
fn relabelings(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..2 * n).map(move |i| {
        let s = i % n;
        if i < n {
            (0..n).map(|v| (v + s) % n).collect()
        } else {
            (0..n).map(|v| (n - 1 - v + s) % n).collect()
        }
    })
}

fn search(g: &Graph, exec: Exec, first: bool) -> Result<PlanarOutput, PlanarError> {
    let colorings: Vec<_> = three_colorings(g, COLORING_TRIES).into_iter().filter(|c| c[0] == Color::R).collect();
    if colorings.is_empty() {
        return Err(PlanarError::NotThreeColorable);
    }
    let edges: Vec<(usize, usize)> = g.edges.iter().map(|e| (e[0], e[1])).collect();
    let emb = embed_planar(g.n, &edges)?;
    let mut first_err = None;
    for coloring in &colorings {
        let aug = augment_to_triangulation(&emb, coloring)?;
        let mut outers: Vec<Option<usize>> = vec![aug.t.outer_dart()];
        outers.extend(aug.t.faces().iter().map(|f| Some(f[0])));
        for outer in outers {
            let t = aug.t.clone().with_outer(outer);
            if outer != aug.t.outer_dart() && t.outer_face() == aug.t.outer_face() {
                continue;
            }
            let nodes = if first && outer == aug.t.outer_dart() { SOLVER_NODES } else { 0 };
            match attempt(g, &t, &aug.map, exec, nodes) {
                Ok((keep, report, moves)) => {
                    let provenance = Provenance {
                        triangulation_n: t.n(),
                        triangulation_edges: t.graph().edges,
                        outer_face: t.outer_face().map(|f| t.face_vertices(f)).unwrap_or_default(),
                        vertex_map: aug.map.clone(),
                        stacked: aug.stacked,
                        weak_resolutions: moves,
                        root: Some(report),
                    };
                    return Ok(PlanarOutput { plattenbau: keep, provenance });
                }
                Err(e) => {
                    log::debug!("outer face {:?} failed: {e}", t.outer_face().map(|f| t.face_vertices(f)));
                    first_err.get_or_insert(e);
                }
            }
        }
    }
    Err(first_err.expect("at least one attempt"))
}

/// One run of the pipeline on the augmented triangulation `t` with its
/// current outer face.
fn attempt(
    g: &Graph,
    t: &EmbeddedGraph,
    map: &[usize],
    exec: Exec,
    solver_nodes: usize,
) -> Result<(Plattenbau, PieceReport, usize), PlanarError> {
    log::debug!("triangulation with {} vertices", t.n());
    let (raw, report) = realize_triangulation(t, exec)?;
    // rectangles of added vertices are dropped before any repair, so they
    // never block a move
    let mut keep = raw.restrict(map);
    let mut back = vec![usize::MAX; t.n()];
    for (v, &tv) in map.iter().enumerate() {
        back[tv] = v;
    }
    for r in &mut keep.rects {
        r.id = back[r.id];
    }
    keep.rects.sort_by_key(|r| r.id);
    keep.outer = None;
    let (mut keep, moves) = match resolve_weak_contacts(&keep, g) {
        Ok(done) => done,
        Err(e) if solver_nodes > 0 => {
            log::debug!("expansion failed ({e}); solving for the coordinates");
            (solve_exact(&keep, g, solver_nodes).ok_or(e)?, 0)
        }
        Err(e) => return Err(e),
    };
    keep.outer = None;
    if let (false, Some((a, b))) = is_proper(&keep)? {
        return Err(PlanarError::ResolutionBrokeGeometry(format!("contact {a}-{b} is not proper")));
    }
    if touching_graph(&keep, false)? != *g {
        return Err(PlanarError::ResolutionBrokeGeometry("touching graph differs from the input".into()));
    }
    Ok((keep, report, moves))
}

#[cfg(test)]
mod tests;
