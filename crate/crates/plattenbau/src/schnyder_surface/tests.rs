use super::*;
use crate::alpha_flow::{build_incidence_graph, cycle_cover, find_alpha_orientation, find_babets};
use crate::graph_core::{dual_graph, face_classes, isomorphic, three_color_triangulation, EmbeddedGraph};
use crate::test_support::*;

fn wood_of(t: &EmbeddedGraph) -> (ColoredDual, SchnyderWood) {
    let c = three_color_triangulation(t).unwrap();
    let cl = face_classes(t, &c);
    let h = build_incidence_graph(t, &cl);
    let o = find_alpha_orientation(&h).unwrap();
    let cc = cycle_cover(t, &cl, &h, &o).unwrap();
    let cd = color_dual_edges(t, &c).unwrap();
    let cd = add_support_edges(&cd, &cc).unwrap();
    let sw = derive_g_schnyder(&cd, &cc).unwrap();
    (cd, sw)
}

#[test]
fn single_generator_surface() {
    let s = build_surface(&[[0, 0, 0]]).unwrap();
    assert_eq!(s.vertices.len(), 1);
    assert_eq!(s.vertices[0].kind, VertexKind::Minimum);
    assert_eq!(s.flats.len(), 3);
    assert_eq!(s.rays.len(), 3);
    assert!(s.skeleton.euler_ok());
    for f in 0..3 {
        assert!(!s.flats[f].is_bounded());
        let (a, b) = flat_extreme_points(&s, f);
        let ax = s.flats[f].axis;
        assert_eq!(a[ax], 0);
        assert_eq!(b[ax], 0);
    }
}

#[test]
fn small_surfaces() {
    // two points leave extra unbounded creases
    assert!(matches!(build_surface(&[[1, 0, 0], [0, 1, 0]]), Err(SurfaceError::Degenerate(_))));
    let s = build_surface(&[[2, 0, 0], [0, 2, 0], [0, 0, 2], [1, 1, 1]]).unwrap();
    let count = |k: VertexKind| s.vertices.iter().filter(|v| v.kind == k).count();
    assert_eq!(count(VertexKind::Minimum), 4);
    assert_eq!(count(VertexKind::Maximum), 3);
    assert_eq!(count(VertexKind::Saddle), 6);
    assert!(s.skeleton.euler_ok());
    assert_eq!(s.flats.len(), 9);
}

#[test]
fn comparable_generators_rejected() {
    assert!(matches!(build_surface(&[[0, 0, 0], [1, 1, 0]]), Err(SurfaceError::Degenerate(_))));
}

#[test]
fn surface_vertices_match_brute_force() {
    // oracle: a point is a surface vertex iff it lies on three flats; a flat
    // point is a point with some generator equal in that coordinate and
    // dominated, but not strictly dominated in that coordinate
    let gens = [[3, 0, 0], [0, 3, 0], [0, 0, 3], [2, 1, 0], [1, 0, 2], [0, 2, 1]];
    let s = build_surface(&gens).unwrap();
    let dominated = |p: [i64; 3]| gens.iter().any(|g| (0..3).all(|k| g[k] <= p[k]));
    let mut brute = Vec::new();
    for x in 0..=3 {
        for y in 0..=3 {
            for z in 0..=3 {
                let p = [x, y, z];
                if !dominated(p) {
                    continue;
                }
                let mut octants = 0;
                for mask in 0..8 {
                    let q: [i64; 3] = std::array::from_fn(|k| if mask >> k & 1 == 1 { p[k] * 2 - 1 } else { p[k] * 2 + 1 });
                    let half = |v: [i64; 3]| gens.iter().any(|g| (0..3).all(|k| 2 * g[k] <= v[k]));
                    if half(q) {
                        octants += 1;
                    }
                }
                // corners of the surface: filter octant patterns of minima,
                // saddles and maxima
                if matches!(octants, 1 | 3 | 5 | 7) {
                    brute.push(p);
                }
            }
        }
    }
    let mut got: Vec<[i64; 3]> = s.vertices.iter().map(|v| v.point).collect();
    got.sort_unstable();
    brute.sort_unstable();
    assert_eq!(got, brute);
}

#[test]
fn octahedron_wood_and_surface() {
    let t = octahedron();
    let (_, sw) = wood_of(&t);
    check_schnyder(&sw).unwrap();
    let rv = region_vectors(&sw).unwrap();
    let total = sw.bounded_faces() as i64;
    for v in &rv {
        assert_eq!(v.iter().sum::<i64>(), total);
    }
    let s = build_surface(&rv).unwrap();
    assert!(isomorphic(&s.skeleton, &dual_graph(&t)).unwrap());
}

#[test]
fn single_triangle_surface() {
    let t = crate::graph_core::embed_planar(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
    let (_, sw) = wood_of(&t);
    assert_eq!(sw.n(), 1);
    let rv = region_vectors(&sw).unwrap();
    assert_eq!(rv, vec![[0, 0, 0]]);
    let s = build_surface(&rv).unwrap();
    assert!(isomorphic(&s.skeleton, &dual_graph(&t)).unwrap());
}

#[test]
fn corpus_skeleton_is_the_dual() {
    let mut done = 0;
    for t in crate::corpus::eulerian_instances(10) {
        let c = three_color_triangulation(&t).unwrap();
        let cl = face_classes(&t, &c);
        if !find_babets(&t, &cl).is_empty() {
            continue;
        }
        let (_, sw) = wood_of(&t);
        let rv = region_vectors(&sw).unwrap();
        let total = sw.bounded_faces() as i64;
        assert!(rv.iter().all(|v| v.iter().sum::<i64>() == total));
        let s = build_surface(&rv).unwrap();
        assert!(s.skeleton.euler_ok());
        assert!(isomorphic(&s.skeleton, &dual_graph(&t)).unwrap());
        done += 1;
    }
    assert!(done > 5);
}
