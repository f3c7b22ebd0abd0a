use super::*;

pub(crate) fn k4() -> Vec<(usize, usize)> {
    vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
}

pub(crate) fn octahedron() -> Vec<(usize, usize)> {
    let mut e = Vec::new();
    for u in 0..6 {
        for v in u + 1..6 {
            if v != u + 3 {
                e.push((u, v));
            }
        }
    }
    e
}

fn complete(n: usize) -> Vec<(usize, usize)> {
    let mut e = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            e.push((u, v));
        }
    }
    e
}

fn cube() -> Vec<(usize, usize)> {
    let mut e = Vec::new();
    for u in 0..8usize {
        for b in 0..3 {
            let v = u ^ (1 << b);
            if u < v {
                e.push((u, v));
            }
        }
    }
    e
}

fn assert_sane(g: &EmbeddedGraph) {
    assert!(g.euler_ok(), "euler fails");
    let mut seen = vec![0; g.num_darts()];
    for f in g.faces() {
        for &d in f {
            seen[d] += 1;
        }
    }
    assert!(seen.iter().all(|&c| c == 1));
}

#[test]
fn k4_has_four_triangles() {
    let g = embed_planar(4, &k4()).unwrap();
    assert_sane(&g);
    assert_eq!(g.faces().len(), 4);
    assert!(g.faces().iter().all(|f| f.len() == 3));
}

#[test]
fn k5_and_k33_rejected() {
    assert_eq!(embed_planar(5, &complete(5)).unwrap_err(), GraphError::NotPlanar);
    let k33: Vec<_> = (0..3).flat_map(|u| (3..6).map(move |v| (u, v))).collect();
    assert_eq!(embed_planar(6, &k33).unwrap_err(), GraphError::NotPlanar);
}

#[test]
fn octahedron_embeds_with_eight_triangles() {
    let g = embed_planar(6, &octahedron()).unwrap();
    assert_sane(&g);
    assert_eq!(g.faces().len(), 8);
    assert!(g.is_triangulation());
}

#[test]
fn disconnected_and_cut_vertices_embed() {
    // two triangles sharing vertex 0, plus a pendant path and an isolated vertex
    let e = vec![(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0), (4, 5), (5, 6)];
    let g = embed_planar(8, &e).unwrap();
    assert_sane(&g);
    assert_eq!(g.num_components(), 2);
}

#[test]
fn coloring_octahedron_pairs_opposites() {
    let g = embed_planar(6, &octahedron()).unwrap();
    let c = three_color_triangulation(&g).unwrap();
    for u in 0..3 {
        assert_eq!(c[u], c[u + 3]);
    }
    let outer = g.outer_face().unwrap();
    let vs = g.face_vertices(outer);
    assert_eq!([c[vs[0]], c[vs[1]], c[vs[2]]], [Color::R, Color::G, Color::B]);
    let cl = classify_triangles(&g, &c);
    assert_eq!(cl.iter().filter(|t| t.class == Class::Black).count(), 3);
    assert_eq!(cl.iter().filter(|t| t.class == Class::White).count(), 4);
    // adjacent faces differ
    let fc = face_classes(&g, &c);
    for d in 0..g.num_darts() {
        assert_ne!(fc[g.face_of(d)], fc[g.face_of(d ^ 1)]);
    }
}

#[test]
fn k4_is_not_eulerian() {
    let g = embed_planar(4, &k4()).unwrap();
    assert_eq!(three_color_triangulation(&g).unwrap_err(), GraphError::NotEulerian);
}

#[test]
fn single_triangle_outer_reads_rgb_and_inner_is_white() {
    let g = embed_planar(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
    let c = three_color_triangulation(&g).unwrap();
    let outer = g.outer_face().unwrap();
    let vs = g.face_vertices(outer);
    assert_eq!([c[vs[0]], c[vs[1]], c[vs[2]]], [Color::R, Color::G, Color::B]);
    let cl = classify_triangles(&g, &c);
    assert_eq!(cl.len(), 1);
    assert_eq!(cl[0].class, Class::White);
}

#[test]
fn dual_of_octahedron_is_cube() {
    let g = embed_planar(6, &octahedron()).unwrap();
    let d = dual_with_infinity(&g).unwrap();
    assert_sane(&d.graph);
    assert!((0..8).all(|v| d.graph.degree(v) == 3));
    let cube = Graph::new(8, cube()).unwrap();
    assert!(isomorphic_graphs(&d.graph.graph(), &cube, 64).unwrap());
    // dual faces correspond to primal vertices
    assert_eq!(d.graph.faces().len(), 6);
}

#[test]
fn dual_of_triangle_is_theta() {
    let g = embed_planar(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
    let d = dual_with_infinity(&g).unwrap();
    assert_eq!(d.graph.n(), 2);
    assert_eq!(d.graph.m(), 3);
    assert_sane(&d.graph);
    assert_eq!(d.graph.faces().len(), 3);
    assert!(d.graph.faces().iter().all(|f| f.len() == 2));
}

#[test]
fn separating_triangles_match_brute_force() {
    let g = embed_planar(6, &octahedron()).unwrap();
    assert!(find_separating_triangles(&g).is_empty());
    // triangle 0,1,2 with a stacked vertex in each face, then again
    let mut e = vec![(0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (3, 2), (4, 0), (4, 1), (4, 2)];
    // stack 5 into face 0,1,3 and 6 into face 1,2,3
    e.extend([(5, 0), (5, 1), (5, 3), (6, 1), (6, 2), (6, 3)]);
    let g = embed_planar(7, &e).unwrap();
    let sep = find_separating_triangles(&g);
    // brute force: triangles minus faces
    let gr = g.graph();
    let mut bf = Vec::new();
    for a in 0..7 {
        for b in a + 1..7 {
            for c in b + 1..7 {
                if gr.has_edge(a, b) && gr.has_edge(b, c) && gr.has_edge(a, c) {
                    let is_face = (0..g.faces().len()).any(|f| {
                        let mut vs = g.face_vertices(f);
                        vs.sort_unstable();
                        vs == vec![a, b, c]
                    });
                    if !is_face {
                        bf.push([a, b, c]);
                    }
                }
            }
        }
    }
    assert_eq!(sep, bf);
    assert!(sep.contains(&[0, 1, 3]) && sep.contains(&[1, 2, 3]));
}

#[test]
fn augment_identity_on_triangulation() {
    let g = embed_planar(6, &octahedron()).unwrap();
    let c = three_color_triangulation(&g).unwrap();
    let a = augment_to_triangulation(&g, &c).unwrap();
    assert_eq!(a.t.n(), 6);
    assert_eq!(a.stacked, 0);
}

fn check_augment(n: usize, e: &[(usize, usize)], c: &[Color]) -> Augmented {
    let g = embed_planar(n, e).unwrap();
    let a = augment_to_triangulation(&g, c).unwrap();
    assert!(a.t.is_triangulation());
    assert_sane(&a.t);
    assert!((0..a.t.n()).all(|v| a.t.degree(v) % 2 == 0));
    let tg = a.t.graph();
    assert!(is_proper_coloring(&tg, &a.colors));
    for u in 0..n {
        for v in u + 1..n {
            assert_eq!(tg.has_edge(a.map[u], a.map[v]), g.has_edge(u, v));
        }
    }
    a
}

#[test]
fn augment_four_cycle() {
    use Color::*;
    let a = check_augment(4, &[(0, 1), (1, 2), (2, 3), (3, 0)], &[R, G, R, G]);
    assert!(a.t.n() <= 4 + 4);
}

#[test]
fn augment_six_cycle() {
    use Color::*;
    check_augment(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)], &[R, G, B, R, G, B]);
}

#[test]
fn augment_small_and_disconnected() {
    use Color::*;
    check_augment(1, &[], &[R]);
    check_augment(2, &[(0, 1)], &[R, B]);
    check_augment(2, &[], &[B, B]);
    check_augment(5, &[(0, 1), (1, 2), (3, 4)], &[R, G, R, G, B]);
    check_augment(4, &[(0, 1), (0, 2), (0, 3)], &[R, G, G, B]);
}

#[test]
fn augment_rejects_bad_coloring() {
    use Color::*;
    let g = embed_planar(3, &[(0, 1), (1, 2)]).unwrap();
    assert_eq!(augment_to_triangulation(&g, &[R, R, G]).unwrap_err(), GraphError::NotThreeColorable);
}

#[test]
fn isomorphism_examples() {
    let c1 = Graph::new(8, cube()).unwrap();
    let perm = [3, 7, 1, 0, 6, 2, 5, 4];
    let c2 = Graph::new(8, cube().into_iter().map(|(u, v)| (perm[u], perm[v]))).unwrap();
    assert!(isomorphic_graphs(&c1, &c2, 64).unwrap());
    let k33 = Graph::new(6, (0..3).flat_map(|u| (3..6).map(move |v| (u, v)))).unwrap();
    assert!(!isomorphic_graphs(&c1, &k33, 64).unwrap());
    // same degree sequence, different graphs: C6 vs two triangles
    let c6 = Graph::new(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
    let tt = Graph::new(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
    assert!(!isomorphic_graphs(&c6, &tt, 64).unwrap());
    let big = Graph::new(65, []).unwrap();
    assert!(matches!(isomorphic_graphs(&big, &big, 64), Err(GraphError::SizeBoundExceeded { .. })));
}

#[test]
fn brute_coloring_agrees_on_small_cases() {
    assert!(brute_force_three_coloring(&Graph::new(4, k4()).unwrap()).is_none());
    assert!(brute_force_three_coloring(&Graph::new(6, octahedron()).unwrap()).is_some());
}
