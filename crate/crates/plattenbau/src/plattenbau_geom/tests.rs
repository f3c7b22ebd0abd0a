use super::*;
use crate::graph_core::{brute_force_three_coloring, is_planar, isomorphic_graphs, Graph};
use rand::{Rng, SeedableRng};

fn complete_multipartite(parts: &[usize]) -> Graph {
    let mut part = Vec::new();
    for (i, &p) in parts.iter().enumerate() {
        part.extend(std::iter::repeat_n(i, p));
    }
    let n = part.len();
    let mut e = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part[u] != part[v] {
                e.push((u, v));
            }
        }
    }
    Graph::new(n, e).unwrap()
}

fn iso(a: &Graph, b: &Graph) -> bool {
    isomorphic_graphs(a, b, usize::MAX).unwrap()
}

fn rect(id: usize, axis: Axis, off: i64, s1: [i64; 2], s2: [i64; 2]) -> Rect3 {
    Rect3::new(id, axis, Q::int(off), [Q::int(s1[0]), Q::int(s1[1])], [Q::int(s2[0]), Q::int(s2[1])])
}

#[test]
fn classify_examples() {
    let a = rect(0, Axis::Z, 0, [0, 1], [0, 1]);
    let b = rect(1, Axis::Z, 1, [0, 1], [0, 1]);
    assert_eq!(classify_contact(&a, &b), ContactKind::Disjoint);
    // z-rectangle whose edge lies inside an x-rectangle
    let x = rect(0, Axis::X, 0, [-1, 2], [-1, 2]);
    let z = rect(1, Axis::Z, 0, [0, 1], [0, 1]);
    assert_eq!(classify_contact(&x, &z), ContactKind::Touch { owner: Owner::First, edge_contained: true });
    assert_eq!(classify_contact(&z, &x), ContactKind::Touch { owner: Owner::Second, edge_contained: true });
    // two cube faces sharing an edge
    let f = cube_faces();
    assert!(classify_contact(&f.rects[0], &f.rects[2]).is_weak());
    // coplanar overlap
    let c = rect(2, Axis::Z, 0, [0, 2], [0, 2]);
    let d = rect(3, Axis::Z, 0, [1, 3], [1, 3]);
    assert_eq!(classify_contact(&c, &d), ContactKind::ViolatingOverlap);
}

/// Oracle: sample the intersection on the half-integer grid; for integer
/// rectangles this finds an interior witness whenever one exists.
fn oracle(a: &Rect3, b: &Rect3) -> (bool, bool, bool) {
    let h = |q: &Q| (q.0.numer() * num_bigint::BigInt::from(2) / q.0.denom()).try_into().unwrap();
    let lo = |r: &Rect3, k: usize| -> i64 { h(r.lo(k)) };
    let hi = |r: &Rect3, k: usize| -> i64 { h(r.hi(k)) };
    let inside = |r: &Rect3, p: [i64; 3]| (0..3).all(|k| lo(r, k) <= p[k] && p[k] <= hi(r, k));
    let interior =
        |r: &Rect3, p: [i64; 3]| r.axis.others().iter().all(|&k| lo(r, k) < p[k] && p[k] < hi(r, k));
    let (mut any, mut ia, mut ib) = (false, false, false);
    for x in -8..=8 {
        for y in -8..=8 {
            for z in -8..=8 {
                let p = [x, y, z];
                if inside(a, p) && inside(b, p) {
                    any = true;
                    ia |= interior(a, p);
                    ib |= interior(b, p);
                }
            }
        }
    }
    (any, ia, ib)
}

#[test]
fn classification_matches_sampling_oracle() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    let mut r = |id| {
        let axis = Axis::from_idx(rng.gen_range(0..3));
        let off = rng.gen_range(-2..=2);
        let a = rng.gen_range(-2..2);
        let b = rng.gen_range(a + 1..=3);
        let c = rng.gen_range(-2..2);
        let d = rng.gen_range(c + 1..=3);
        rect(id, axis, off, [a, b], [c, d])
    };
    for _ in 0..3000 {
        let (a, b) = (r(0), r(1));
        let k = classify_contact(&a, &b);
        let (any, ia, ib) = oracle(&a, &b);
        let expect = match (any, ia, ib) {
            (false, _, _) => "disjoint",
            (true, true, true) => "overlap",
            (true, false, false) => "weak",
            _ => "touch",
        };
        let got = match k {
            ContactKind::Disjoint => "disjoint",
            ContactKind::ViolatingOverlap => "overlap",
            ContactKind::WeakEdgeToEdge { .. } => "weak",
            ContactKind::Touch { owner, .. } => {
                assert_eq!(owner == Owner::First, ia, "{a:?} {b:?}");
                "touch"
            }
        };
        assert_eq!(got, expect, "{a:?} {b:?}");
        assert_eq!(classify_contact(&b, &a), k.swapped());
    }
}

#[test]
fn cube_faces_base_case() {
    let p = cube_faces();
    let g = touching_graph(&p, true).unwrap();
    assert_eq!(g.m(), 12);
    assert!(iso(&g, &complete_multipartite(&[2, 2, 2])));
    assert_eq!(touching_graph(&p, false).unwrap().m(), 0);
    assert!(iso(&intersection_graph(&p).unwrap(), &complete_multipartite(&[2, 2, 2])));
    let rep = is_boxed(&p).unwrap();
    assert!(rep.boxed);
    assert_eq!(rep.rooms.len(), 1);
    let eb = edge_bound_report(&p, true).unwrap();
    assert_eq!((eb.m, eb.bound, eb.tight), (12, 12, true));
}

#[test]
fn fixtures_extract_expected_graphs() {
    assert!(iso(&touching_graph(&fixture_k22n(5), false).unwrap(), &complete_multipartite(&[2, 2, 5])));
    assert!(iso(&touching_graph(&fixture_k22n(1), false).unwrap(), &complete_multipartite(&[2, 2, 1])));
    assert!(iso(&touching_graph(&fixture_kmn(5, 6), false).unwrap(), &complete_multipartite(&[5, 6])));
    assert!(iso(&touching_graph(&fixture_kmn(1, 1), false).unwrap(), &complete_multipartite(&[1, 1])));
    let sq = origin_squares();
    assert_eq!(intersection_graph(&sq).unwrap().m(), 66);
}

#[test]
fn lift_of_h_shape_is_a_path() {
    let segs = vec![Segment2::new([0, 0], [0, 4]), Segment2::new([0, 2], [3, 2]), Segment2::new([3, 0], [3, 4])];
    let p = lift_segments(&segs).unwrap();
    let g = touching_graph(&p, false).unwrap();
    assert_eq!(g.edges, vec![[0, 1], [1, 2]]);
    // crossing grid
    let segs = vec![Segment2::new([0, 1], [4, 1]), Segment2::new([0, 3], [4, 3]), Segment2::new([1, 0], [1, 4]), Segment2::new([3, 0], [3, 2])];
    let g = touching_graph(&lift_segments(&segs).unwrap(), false).unwrap();
    assert_eq!(g.edges, vec![[0, 2], [0, 3], [1, 2]]);
    let bad = vec![Segment2::new([0, 0], [2, 0]), Segment2::new([1, 0], [3, 0])];
    assert!(matches!(lift_segments(&bad), Err(GeomError::InvalidSegments(_))));
}

#[test]
fn properness_witness() {
    // a T-contact where only part of an edge lies on the other rectangle
    let a = rect(0, Axis::X, 0, [0, 2], [0, 2]);
    let b = rect(1, Axis::Z, 1, [0, 2], [1, 3]);
    let p = Plattenbau::new(vec![a, b]);
    assert_eq!(is_proper(&p).unwrap(), (false, Some((0, 1))));
    assert_eq!(is_proper(&Plattenbau::default()).unwrap(), (true, None));
    assert_eq!(is_proper(&fixture_k22n(3)).unwrap().0, true);
}

#[test]
fn restriction_gives_induced_subgraphs() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(3);
    for p in [fixture_k22n(4), fixture_kmn(3, 4), cube_faces()] {
        let full = touching_graph(&p, false).unwrap();
        for _ in 0..20 {
            let keep: Vec<usize> = p.ids().into_iter().filter(|_| rng.gen_bool(0.6)).collect();
            let sub = touching_graph(&p.restrict(&keep), false).unwrap();
            let idx: Vec<usize> = keep.iter().map(|&id| p.index_of(id).unwrap()).collect();
            assert_eq!(sub, full.induced(&idx));
        }
    }
    assert!(p_empty().is_empty());
}

fn p_empty() -> Plattenbau {
    cube_faces().restrict(&[])
}

#[test]
fn box_transform_realises_touching_graph() {
    for p in [cube_faces(), fixture_k22n(5), fixture_kmn(3, 4), origin_squares(), Plattenbau::new(vec![rect(0, Axis::X, 0, [0, 1], [0, 1])])] {
        let b = to_boxes(&p).unwrap();
        assert_eq!(b.len(), p.len());
        assert!(boxes_interiorly_disjoint(&b));
        assert_eq!(box_intersection_graph(&b), touching_graph(&p, false).unwrap());
    }
}

#[test]
fn neighbourhoods_planar_and_three_colorable() {
    for p in [fixture_k22n(5), fixture_kmn(5, 6)] {
        let g = touching_graph(&p, false).unwrap();
        assert!(brute_force_three_coloring(&g).is_some());
        let adj = g.adjacency();
        for v in 0..g.n {
            assert!(is_planar(&g.induced(&adj[v])));
        }
    }
}

#[test]
fn rationals_round_trip() {
    let q = Q::new(-6, 4);
    assert_eq!(q.to_string(), "-3/2");
    assert_eq!("-3/2".parse::<Q>().unwrap(), q);
    assert_eq!("5".parse::<Q>().unwrap(), Q::int(5));
    assert!("2/4".parse::<Q>().is_err());
    assert!("1/0".parse::<Q>().is_err());
    assert!("1/-2".parse::<Q>().is_err());
    let p = fixture_k22n(2);
    let s = serde_json::to_string(&p).unwrap();
    assert!(s.contains("\"axis\":\"x\""));
    let back: Plattenbau = serde_json::from_str(&s).unwrap();
    assert_eq!(back, p);
}

#[test]
fn box_transform_keeps_weak_pairs_apart() {
    // 0 and 5 meet edge to edge; the far end of that edge is a corner point
    // inside rectangles 1 and 2, which must not anchor it
    let p = Plattenbau::new(vec![
        rect(0, Axis::Y, -3, [-2, 0], [-1, 0]),
        rect(1, Axis::X, -2, [-4, 0], [-2, 0]),
        rect(2, Axis::X, 0, [-4, 0], [-2, 0]),
        rect(3, Axis::X, -1, [-3, -2], [-1, 0]),
        rect(4, Axis::Y, -1, [-2, -1], [-2, -1]),
        rect(5, Axis::Z, -1, [-2, 0], [-3, 0]),
    ]);
    let t = touching_graph(&p, false).unwrap();
    assert!(!t.has_edge(0, 5));
    let b = to_boxes(&p).unwrap();
    assert!(boxes_interiorly_disjoint(&b));
    assert_eq!(box_intersection_graph(&b), t);
}
