use super::*;
use crate::graph_core::{embed_planar, face_classes, three_color_triangulation, EmbeddedGraph};
use crate::test_support::*;

fn setup(t: &EmbeddedGraph) -> (Vec<Class>, IncidenceGraph) {
    let c = three_color_triangulation(t).unwrap();
    let cl = face_classes(t, &c);
    let h = build_incidence_graph(t, &cl);
    (cl, h)
}

fn planted() -> EmbeddedGraph {
    let t = octahedron();
    let c = three_color_triangulation(&t).unwrap();
    let cl = face_classes(&t, &c);
    // a bounded black face
    let f = (0..8).find(|&f| Some(f) != t.outer_face() && cl[f] == Class::Black).unwrap();
    let vs = t.face_vertices(f);
    let (n, e) = plant(6, &octahedron_edges(), [vs[0], vs[1], vs[2]]);
    triangulation(n, &e, [0, 1, 2])
}

#[test]
fn single_triangle_has_empty_incidence_graph() {
    let t = embed_planar(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
    let (_, h) = setup(&t);
    assert!(h.left.is_empty() && h.right.is_empty() && h.edges.is_empty());
    let o = find_alpha_orientation(&h).unwrap();
    assert!(o.direction.is_empty());
    assert_eq!(enumerate_alpha_orientations(&h, 24).unwrap().len(), 1);
}

#[test]
fn octahedron_incidence_graph() {
    let t = octahedron();
    let (cl, h) = setup(&t);
    assert_eq!(h.left.len(), 3);
    assert_eq!(h.right.len(), 3);
    assert_eq!(h.alpha_sum(), h.edges.len());
    // each bounded black triangle of the octahedron touches the outer face
    // in one vertex: two interior corners, alpha 0
    for (j, &f) in h.right.iter().enumerate() {
        let interior = t.face_vertices(f).iter().filter(|v| h.left.contains(v)).count();
        assert_eq!(h.alpha_right[j], interior - 2);
        assert_eq!(cl[f], Class::Black);
    }
    let o = find_alpha_orientation(&h).unwrap();
    assert!(h.is_valid(&o));
    let brute = flow::brute_force_orientations(h.node_count(), &h.node_edges(), &h.alpha());
    assert!(!brute.is_empty());
    let en = enumerate_alpha_orientations(&h, 24).unwrap();
    assert_eq!(en.len(), brute.len());
    assert!(find_babets(&t, &cl).is_empty());
}

#[test]
fn planted_babet_is_infeasible() {
    let t = planted();
    let (cl, h) = setup(&t);
    let babets = find_babets(&t, &cl);
    assert_eq!(babets.len(), 1);
    let b = &babets[0];
    assert_eq!(b.interior_vertices, vec![6, 7, 8]);
    assert!(b.is_basic());
    let err = find_alpha_orientation(&h).unwrap_err();
    let AlphaError::Infeasible(v) = err else { panic!() };
    assert!(v.alpha_sum > v.edge_bound);
    assert!(flow::brute_force_orientations(h.node_count(), &h.node_edges(), &h.alpha()).is_empty());
    assert!(enumerate_alpha_orientations(&h, 64).unwrap().is_empty());
    let bv = babet_violation(&t, &cl, &h, b);
    assert_eq!(bv.alpha_sum, bv.edge_bound + 1);
}

#[test]
fn nested_babets_form_a_forest() {
    let t = planted();
    let (cl, _) = setup(&t);
    // the inner triangle 6,7,8 is black; plant into it
    let f = (0..t.faces().len())
        .find(|&f| {
            let mut vs = t.face_vertices(f);
            vs.sort_unstable();
            vs == vec![6, 7, 8]
        })
        .unwrap();
    assert_eq!(cl[f], Class::Black);
    let e: Vec<(usize, usize)> = t.graph().edges.iter().map(|e| (e[0], e[1])).collect();
    let (n, e) = plant(9, &e, [6, 7, 8]);
    let t2 = triangulation(n, &e, [0, 1, 2]);
    let (cl2, _) = setup(&t2);
    let babets = find_babets(&t2, &cl2);
    assert_eq!(babets.len(), 2);
    assert_eq!(babets.iter().filter(|b| b.is_basic()).count(), 1);
    assert_eq!(babets.iter().map(|b| b.depth).max(), Some(1));
}

#[test]
fn orientation_agrees_with_brute_force_and_babets_on_corpus() {
    for t in crate::corpus::eulerian_instances(10) {
        let (cl, h) = setup(&t);
        assert_eq!(h.alpha_sum(), h.edges.len());
        let feasible = find_alpha_orientation(&h).is_ok();
        assert_eq!(feasible, find_babets(&t, &cl).is_empty());
        if h.edges.len() <= 16 {
            let brute = flow::brute_force_orientations(h.node_count(), &h.node_edges(), &h.alpha());
            assert_eq!(feasible, !brute.is_empty());
            let mut en: Vec<Vec<bool>> = enumerate_alpha_orientations(&h, 24)
                .unwrap()
                .iter()
                .map(|o| o.direction.iter().map(|&d| d == Dir::LR).collect())
                .collect();
            en.sort();
            assert_eq!(en, brute);
        }
    }
}

#[test]
fn violation_certificate_is_valid() {
    // a star where the center wants three out-edges but has two
    let r = flow::orient_with_outdegrees(3, &[(0, 1), (0, 2)], &[2, 1, 0]).unwrap_err();
    assert!(r.alpha_sum > r.edge_bound);
    let ok = flow::orient_with_outdegrees(3, &[(0, 1), (0, 2)], &[1, 0, 1]).unwrap();
    assert_eq!(ok, vec![true, false]);
}

#[test]
fn octahedron_lattice_and_cover() {
    let t = octahedron();
    let (cl, h) = setup(&t);
    let rep = verify_distributive_lattice(&t, &h, 24).unwrap();
    assert!(rep.all_ok(), "{rep:?}");
    let o = find_alpha_orientation(&h).unwrap();
    let cc = cycle_cover(&t, &cl, &h, &o).unwrap();
    let covered: usize = cc.cycles.iter().map(|c| c.len()).sum();
    assert_eq!(covered, h.right.len());
    check_cover(&t, &cl, &h, &cc);
}

fn check_cover(t: &EmbeddedGraph, cl: &[Class], h: &IncidenceGraph, cc: &CycleCover) {
    // each bounded black triangle on exactly one cycle, neighbors on both sides
    let mut seen = std::collections::HashMap::new();
    for c in &cc.cycles {
        for &u in c {
            *seen.entry(u).or_insert(0) += 1;
        }
    }
    for &u in &h.right {
        assert_eq!(seen.get(&u), Some(&1));
        let mut sides = std::collections::HashSet::new();
        for &d in &t.faces()[u] {
            sides.insert(cc.region[t.face_of(d ^ 1)].unwrap());
        }
        assert_eq!(sides.len(), 2);
    }
    for f in 0..t.faces().len() {
        assert_eq!(cc.region[f].is_some(), cl[f] == Class::White);
    }
}

#[test]
fn lattice_and_cover_on_corpus() {
    let mut checked = 0;
    for t in crate::corpus::eulerian_instances(10) {
        let (cl, h) = setup(&t);
        if !find_babets(&t, &cl).is_empty() || h.edges.len() > 24 {
            continue;
        }
        let all = enumerate_alpha_orientations(&h, 24).unwrap();
        let rep = lattice::lattice_of(&t, &h, &all);
        assert!(rep.all_ok(), "{rep:?}");
        for o in &all {
            let cc = cycle_cover(&t, &cl, &h, o).unwrap();
            check_cover(&t, &cl, &h, &cc);
        }
        checked += 1;
    }
    assert!(checked >= 3);
}
