use super::*;
use crate::alpha_flow::find_babets;
use crate::graph_core::{isomorphic_graphs, Class};
use crate::plattenbau_geom::{classify_contact, ContactKind};
use crate::test_support::*;

fn graph(n: usize, e: &[(usize, usize)]) -> Graph {
    Graph::new(n, e.iter().copied()).unwrap()
}

/// Touching graph on rectangle ids.
fn id_graph(p: &Plattenbau, n: usize) -> Graph {
    let g = touching_graph(p, false).unwrap();
    Graph::new(n, g.edges.iter().map(|e| (p.rects[e[0]].id, p.rects[e[1]].id))).unwrap()
}

#[test]
fn corner_surface_rectangles() {
    let s = build_surface(&[[0, 0, 0]]).unwrap();
    let p = rectangles_from_surface(&s).unwrap();
    assert_eq!(p.len(), 3);
    let c = p.contacts(Exec::Sequential).unwrap();
    assert_eq!(c.len(), 3);
    assert!(c.iter().all(|c| c.kind.is_weak()));
    let tri = graph(3, &[(0, 1), (1, 2), (0, 2)]);
    let (q, moves) = resolve_weak_contacts(&p, &tri).unwrap();
    assert_eq!(moves, 3);
    assert!(is_proper(&q).unwrap().0);
    assert_eq!(id_graph(&q, 3), tri);
}

#[test]
fn no_weak_contacts_is_a_no_op() {
    let p = crate::plattenbau_geom::fixture_k22n(2);
    let g = id_graph(&p, p.len());
    let (q, moves) = resolve_weak_contacts(&p, &g).unwrap();
    assert_eq!((moves, &q), (0, &p));
}

#[test]
fn octahedron_rectangles_match_the_triangulation() {
    let t = octahedron();
    let piece = babet_free_surface(&t).unwrap();
    let mut p = rectangles_from_surface(&piece.surface).unwrap();
    for r in &mut p.rects {
        r.id = piece.flat_vertex[r.id];
    }
    // before resolution every contact is a touch or a weak contact of an edge
    for c in p.contacts(Exec::Sequential).unwrap() {
        let (a, b) = (p.rects[c.a].id, p.rects[c.b].id);
        assert!(t.has_edge(a, b), "{a}-{b} {:?}", c.kind);
    }
    let (q, _) = resolve_weak_contacts(&p, &t.graph()).unwrap();
    assert!(is_proper(&q).unwrap().0);
    assert_eq!(id_graph(&q, 6), t.graph());
}

#[test]
fn babet_free_corpus_realised_exactly() {
    let mut done = 0;
    for t in crate::corpus::eulerian_instances(10) {
        let c = three_color_triangulation(&t).unwrap();
        if !find_babets(&t, &face_classes(&t, &c)).is_empty() {
            continue;
        }
        let (p, _) = realize_triangulation(&t, Exec::Sequential).unwrap();
        // skeleton edges give contacts, nothing else does
        let raw = p.contacts(Exec::Sequential).unwrap();
        assert_eq!(raw.len(), t.m());
        let (q, _) = resolve_weak_contacts(&p, &t.graph()).unwrap();
        assert!(is_proper(&q).unwrap().0);
        assert_eq!(id_graph(&q, t.n()), t.graph());
        done += 1;
    }
    assert!(done > 5);
}

fn planted_octahedron() -> EmbeddedGraph {
    let (n, e) = plant(6, &octahedron_edges(), [0, 4, 5]);
    triangulation(n, &e, [0, 1, 2])
}

#[test]
fn cleaning_babets() {
    let t = octahedron();
    let c = three_color_triangulation(&t).unwrap();
    let cl = clean_babets(&t, &face_classes(&t, &c));
    assert!(cl.children.is_empty());
    assert_eq!(cl.clean, t);

    for tri in [[3, 4, 5], [0, 4, 5], [0, 1, 5]] {
        let (n, e) = plant(6, &octahedron_edges(), tri);
        let t = triangulation(n, &e, [0, 1, 2]);
        let c = three_color_triangulation(&t).unwrap();
        let classes = face_classes(&t, &c);
        if find_babets(&t, &classes).is_empty() {
            continue;
        }
        let cl = clean_babets(&t, &classes);
        assert_eq!(cl.children.len(), 1);
        let cc = three_color_triangulation(&cl.clean).unwrap();
        assert!(find_babets(&cl.clean, &face_classes(&cl.clean, &cc)).is_empty());
        let child = &cl.children[0];
        assert_eq!(child.t_b.n(), 6);
        // inner faces swap class
        for f in 0..child.t_b.faces().len() {
            if Some(f) == child.t_b.outer_face() {
                continue;
            }
            let mut vs: Vec<usize> = child.t_b.face_vertices(f).iter().map(|&v| child.map[v]).collect();
            vs.sort_unstable();
            let g = (0..t.faces().len())
                .find(|&g| {
                    let mut ws = t.face_vertices(g);
                    ws.sort_unstable();
                    ws == vs
                })
                .unwrap();
            assert_ne!(child.classes[f], classes[g]);
        }
    }
}

fn nested_instance() -> EmbeddedGraph {
    // the second octahedron sits in a face that is black inside the first
    // babet, so it is a babet of the child but not of the whole
    let (n, e) = plant(6, &octahedron_edges(), [0, 4, 5]);
    let (n, e) = plant(n, &e, [0, 7, 8]);
    triangulation(n, &e, [0, 1, 2])
}

#[test]
fn nested_babets_keep_their_inner_babet() {
    let t = nested_instance();
    let c = three_color_triangulation(&t).unwrap();
    let classes = face_classes(&t, &c);
    let cl = clean_babets(&t, &classes);
    assert_eq!(cl.children.len(), 1);
    let child = &cl.children[0];
    assert!(child.t_b.n() < t.n());
    let cc = three_color_triangulation(&child.t_b).unwrap();
    assert!(!find_babets(&child.t_b, &face_classes(&child.t_b, &cc)).is_empty());
    assert!(child.classes.iter().any(|&c| c == Class::White));
    let (p, rep) = realize_triangulation(&t, Exec::Sequential).unwrap();
    assert_eq!(rep.children.len(), 1);
    assert_eq!(rep.children[0].children.len(), 1);
    let (q, _) = resolve_weak_contacts(&p, &t.graph()).unwrap();
    assert!(is_proper(&q).unwrap().0);
    assert_eq!(id_graph(&q, t.n()), t.graph());
}

#[test]
fn planted_babet_is_patched() {
    let t = planted_octahedron();
    let c = three_color_triangulation(&t).unwrap();
    let bs = find_babets(&t, &face_classes(&t, &c));
    assert!(!bs.is_empty(), "planting into a black face makes a babet");
    let (p, rep) = realize_triangulation(&t, Exec::Sequential).unwrap();
    assert_eq!(p.len(), t.n());
    assert_eq!(rep.children.len(), 1);
    let rec = rep.children[0].patch.as_ref().unwrap();
    assert!(rec.scale.is_positive());
    // host contacts untouched by the patch
    let host = p.restrict(&rep.clean_vertices);
    let (host_only, _) = realize_triangulation(&restricted(&t, &rep.clean_vertices), Exec::Sequential).unwrap();
    assert_eq!(host.len(), host_only.len());
    let (q, _) = resolve_weak_contacts(&p, &t.graph()).unwrap();
    assert!(is_proper(&q).unwrap().0);
    assert_eq!(id_graph(&q, t.n()), t.graph());
}

fn restricted(t: &EmbeddedGraph, keep: &[usize]) -> EmbeddedGraph {
    let (g, _) = babets::restrict_embedding(t, keep);
    let d = t.outer_dart().unwrap();
    let (a, b) = (keep.binary_search(&t.tail(d)).unwrap(), keep.binary_search(&t.head(d)).unwrap());
    let o = g.dart(a, b);
    g.with_outer(o)
}

#[test]
fn patch_keeps_host_contacts() {
    let t = planted_octahedron();
    let colors = three_color_triangulation(&t).unwrap();
    let cl = clean_babets(&t, &face_classes(&t, &colors));
    let piece = babet_free_surface(&cl.clean).unwrap();
    let mut host = rectangles_from_surface(&piece.surface).unwrap();
    for r in &mut host.rects {
        r.id = cl.map[piece.flat_vertex[r.id]];
    }
    let c = &cl.children[0];
    let (mut child, _) = realize_triangulation(&c.t_b, Exec::Sequential).unwrap();
    for r in &mut child.rects {
        r.id = c.map[r.id];
    }
    let flat_of = |v: usize| piece.flat_vertex.iter().position(|&w| cl.map[w] == v).unwrap();
    let mut want: Vec<usize> = c.babet.iter().map(|&v| flat_of(v)).collect();
    want.sort_unstable();
    let saddle = piece.surface.vertices.iter().position(|sv| sv.flats[..] == want[..]).unwrap();
    let (patched, _) = patch(&host, &piece.surface, saddle, &child, c.babet).unwrap();
    let k = host.len();
    for i in 0..k {
        for j in i + 1..k {
            assert_eq!(classify_contact(&host.rects[i], &host.rects[j]), classify_contact(&patched.rects[i], &patched.rects[j]));
        }
    }
    // glued graph: host edges plus child edges, weak contacts included
    let mut glued: Vec<(usize, usize)> = Vec::new();
    for cc in patched.contacts(Exec::Sequential).unwrap() {
        glued.push((patched.rects[cc.a].id, patched.rects[cc.b].id));
    }
    let glued = Graph::new(t.n(), glued).unwrap();
    assert_eq!(glued, t.graph());
    let _ = ContactKind::Disjoint;
}

#[test]
fn end_to_end_small_graphs() {
    let tri = graph(3, &[(0, 1), (1, 2), (0, 2)]);
    let out = build_planar(&tri, Exec::Sequential).unwrap();
    assert_eq!(out.plattenbau.len(), 3);
    assert_eq!(touching_graph(&out.plattenbau, false).unwrap(), tri);
    let oct = Graph::new(6, octahedron_edges()).unwrap();
    let out = build_planar(&oct, Exec::Sequential).unwrap();
    assert!(is_proper(&out.plattenbau).unwrap().0);
    let k222 = touching_graph(&out.plattenbau, false).unwrap();
    assert!(isomorphic_graphs(&k222, &oct, usize::MAX).unwrap());
    let k4 = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
    assert_eq!(build_planar(&k4, Exec::Sequential).unwrap_err(), PlanarError::NotThreeColorable);
    let k33 = graph(6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]);
    assert_eq!(build_planar(&k33, Exec::Sequential).unwrap_err(), PlanarError::NotPlanar);
    for g in [graph(1, &[]), graph(2, &[(0, 1)]), graph(2, &[]), graph(4, &[(0, 1), (2, 3)])] {
        let out = build_planar(&g, Exec::Sequential).unwrap();
        assert_eq!(touching_graph(&out.plattenbau, false).unwrap(), g);
    }
}

#[test]
fn corpus_up_to_six_vertices() {
    for g in crate::corpus::connected_planar_3colorable(6) {
        let out = build_planar(&g, Exec::Sequential).unwrap_or_else(|e| panic!("{g:?}: {e}"));
        assert!(is_proper(&out.plattenbau).unwrap().0);
        assert_eq!(touching_graph(&out.plattenbau, false).unwrap(), g);
    }
}

#[test]
fn exact_solver_rebuilds_small_corpus() {
    for g in crate::corpus::connected_planar_3colorable(6) {
        let out = build_planar(&g, Exec::Sequential).unwrap();
        let p = solve_exact(&out.plattenbau, &g, 1_000_000).unwrap_or_else(|| panic!("{g:?}"));
        assert!(is_proper(&p).unwrap().0, "{g:?}");
        assert_eq!(touching_graph(&p, false).unwrap(), g);
    }
}

#[test]
fn exact_solver_rejects_wrong_axes() {
    let tri = graph(3, &[(0, 1), (1, 2), (0, 2)]);
    let mut seed = build_planar(&tri, Exec::Sequential).unwrap().plattenbau;
    seed.rects[1].axis = seed.rects[0].axis;
    assert!(solve_exact(&seed, &tri, 1000).is_none());
}

// first layouts of these leave improper touches that local moves cannot fix
#[test]
fn graphs_with_unrepairable_first_layouts() {
    for e in [
        vec![(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (2, 5), (2, 7), (3, 6), (4, 7), (5, 6), (5, 7), (6, 7)],
        vec![(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (2, 5), (2, 7), (3, 6), (3, 8), (4, 7), (4, 8), (5, 7), (5, 8), (6, 8), (7, 8)],
        vec![(0, 1), (0, 2), (0, 3), (0, 6), (1, 4), (1, 5), (1, 6), (2, 6), (2, 7), (2, 8), (3, 7), (4, 7), (5, 8), (6, 8), (7, 8)],
        vec![(0, 1), (0, 2), (1, 3), (2, 4), (3, 4)],
    ] {
        let n = e.iter().map(|p| p.0.max(p.1)).max().unwrap() + 1;
        let g = graph(n, &e);
        let out = build_planar(&g, Exec::Sequential).unwrap_or_else(|e| panic!("{g:?}: {e}"));
        assert!(is_proper(&out.plattenbau).unwrap().0);
        assert_eq!(touching_graph(&out.plattenbau, false).unwrap(), g);
    }
}
