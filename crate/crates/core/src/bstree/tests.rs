use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::permgroup::FiniteGroup;
use crate::toy::{self, ToyAmalgam};

/// Vertices within `r` of the fundamental edge when the factors have
/// indices `i1` and `i2` over the edge group.
fn edge_ball_size(i1: usize, i2: usize, r: usize) -> usize {
    let mut total = 2;
    for (start, other) in [(i1, i2), (i2, i1)] {
        let mut layer = 1;
        for d in 1..=r {
            let branch = if d % 2 == 1 { start - 1 } else { other - 1 };
            layer *= branch;
            total += layer;
        }
    }
    total
}

fn indices(am: &ToyAmalgam) -> (usize, usize) {
    (am.left().index(), am.right().index())
}

#[test]
fn distance_examples() {
    let am = toy::s3_d4();
    let t = Tree::new(&am);
    let (g1, g2) = (t.base(Side::Left), t.base(Side::Right));
    assert_eq!(t.distance(&g1, &g1), 0);
    assert_eq!(t.distance(&g1, &g2), 1);
    assert_eq!(t.path(&g1, &g2).len(), 2);
    assert!(!t.vertex_eq(&g1, &g2));
    let x = am.embed_left(&am.left().coset_representatives()[0]);
    assert!(t.vertex_eq(&g1, &t.act(&x, &g1)));
    assert_eq!(t.distance(&g2, &t.act(&x, &g2)), 2);
}

#[test]
fn ball_sizes_match_closed_form() {
    for am in [toy::z6_z4(), toy::s3_d4(), toy::a4_s3()] {
        let (i1, i2) = indices(&am);
        for r in 0..=3 {
            let ball = am.edge_ball(r).unwrap();
            assert_eq!(ball.len(), edge_ball_size(i1, i2, r));
            assert_eq!(ball.edges.len(), ball.len() - 1);
        }
    }
}

#[test]
fn distance_formula_matches_bfs() {
    let am = toy::s3_d4();
    let t = Tree::new(&am);
    let ball = am.edge_ball(4).unwrap();
    for i in 0..ball.len() {
        let bfs = ball.distances_from(i);
        for (w, &b) in ball.vertices.iter().zip(&bfs) {
            assert_eq!(t.distance(&ball.vertices[i], w), b);
        }
    }
}

#[test]
fn paths_are_geodesics() {
    let am = toy::z6_z4();
    let t = Tree::new(&am);
    let ball = am.edge_ball(3).unwrap();
    for p in ball.vertices.iter().step_by(3) {
        for q in ball.vertices.iter().step_by(5) {
            let path = t.path(p, q);
            assert_eq!(path.len(), t.distance(p, q) + 1);
            assert!(t.vertex_eq(&path[0], p) && t.vertex_eq(path.last().unwrap(), q));
            for w in path.windows(2) {
                assert_eq!(t.distance(&w[0], &w[1]), 1);
            }
        }
    }
}

#[test]
fn geodesic_lists() {
    let am = toy::s3_d4();
    let t = Tree::new(&am);
    assert_eq!(t.geodesic(&am.identity()), alloc::vec![t.base(Side::Right)]);
    let r1 = am.left().coset_representatives()[0].clone();
    let g = am.embed_left(&r1);
    let path = t.geodesic(&g);
    assert_eq!(path.len(), 3);
    assert!(t.vertex_eq(&path[1], &t.base(Side::Left)));
    let target = TreeVertex {
        rep: am.inverse(&am.embed_left(&r1)),
        side: Side::Right,
    };
    assert!(t.vertex_eq(&path[2], &target));

    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..300 {
        let len = rng.gen_range(0..7);
        let g = toy::random_word(&am, &mut rng, len);
        let path = t.geodesic(&g);
        let end = TreeVertex {
            rep: am.inverse(&g),
            side: Side::Right,
        };
        assert!(t.vertex_eq(path.last().unwrap(), &end));
        assert_eq!(path.len(), t.distance(&t.base(Side::Right), &end) + 1);
        for w in path.windows(2) {
            assert_eq!(t.distance(&w[0], &w[1]), 1);
        }
    }
}

#[test]
fn translation_lengths_and_displacement() {
    let am = toy::s3_d4();
    let t = Tree::new(&am);
    let ball = am.edge_ball(3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..40 {
        let len = rng.gen_range(1..5);
        let g = toy::random_word(&am, &mut rng, len);
        let m = t.translation_length(&g);
        let disp: Vec<usize> = ball
            .vertices
            .iter()
            .map(|q| t.distance(q, &t.act(&g, q)))
            .collect();
        if m == 0 {
            assert!(disp.contains(&0));
            continue;
        }
        let axis = t.axis(&g, 8).unwrap();
        for (q, &d) in ball.vertices.iter().zip(&disp) {
            assert_eq!(d, m + 2 * t.distance_to_path(q, &axis.path));
        }
        assert_eq!(*disp.iter().min().unwrap(), m);
    }
}

#[test]
fn fixed_point_classes() {
    let am = toy::a4_s3();
    let t = Tree::new(&am);
    assert_eq!(
        t.fixed_point_class(&am.identity()).unwrap(),
        FixedPointClass::FixesEdgePair
    );
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let w = toy::random_word(&am, &mut rng, 2);
    assert_eq!(
        t.fixed_point_class(&w).unwrap(),
        FixedPointClass::NoFixedVertex
    );
    // a double transposition in A4 is not conjugate into the edge Z/3
    let v = crate::permgroup::Permutation::from_cycles(4, &[&[1, 2], &[3, 4]]).unwrap();
    let x = am.embed_left(&v);
    match t.fixed_point_class(&x).unwrap() {
        FixedPointClass::UniqueVertex(p) => assert!(t.vertex_eq(&p, &t.base(Side::Left))),
        other => panic!("{:?}", other),
    }
    // classes agree with the fixed vertices inside a ball
    let ball = am.edge_ball(3).unwrap();
    for _ in 0..60 {
        let len = rng.gen_range(0..4);
        let g = toy::random_word(&am, &mut rng, len);
        let fixed: Vec<_> = ball.vertices.iter().filter(|p| t.fixes(&g, p)).collect();
        match t.fixed_point_class(&g).unwrap() {
            FixedPointClass::NoFixedVertex => assert!(fixed.is_empty()),
            FixedPointClass::UniqueVertex(p) => {
                assert!(t.fixes(&g, &p));
                assert_eq!(fixed.len(), 1);
                assert!(t.vertex_eq(fixed[0], &p));
            }
            FixedPointClass::FixesEdgePair => assert!(fixed.len() >= 2),
        }
    }
}

#[test]
fn trivial_normalizer_is_everything() {
    let am = toy::s3_d4();
    let t = Tree::new(&am);
    let e = am.left().edge_identity();
    let na = t.normalizer_amalgam(&[e]).unwrap();
    assert!(na.left_is_whole && na.right_is_whole);
    assert_eq!(na.checks, 6 + 8);
}

#[test]
fn normalizer_of_the_whole_edge() {
    // N_S3(<(1,2)>) is the edge group itself; in D4 it is a Klein subgroup
    let am = toy::s3_d4();
    let t = Tree::new(&am);
    let h = am.left().edge_elements().unwrap().to_vec();
    let res = t.normalizer_amalgam(&h);
    assert!(res.is_ok());
    let na = res.unwrap();
    assert!(na.left_is_edge && !na.right_is_edge && !na.right_is_whole);
    assert_eq!(na.right.len(), 4);
}

#[test]
fn metric_and_isometry() {
    let am = toy::s3_d4();
    let t = Tree::new(&am);
    let ball = am.edge_ball(2).unwrap();
    let vs = &ball.vertices;
    for p in vs {
        for q in vs {
            let d = t.distance(p, q);
            assert_eq!(d, t.distance(q, p));
            assert_eq!(d == 0, t.vertex_eq(p, q));
            for r in vs.iter().step_by(4) {
                assert!(t.distance(p, r) <= d + t.distance(q, r));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    for _ in 0..500 {
        let len = rng.gen_range(0..6);
        let g = toy::random_word(&am, &mut rng, len);
        let p = &vs[rng.gen_range(0..vs.len())];
        let q = &vs[rng.gen_range(0..vs.len())];
        assert_eq!(t.distance(&t.act(&g, p), &t.act(&g, q)), t.distance(p, q));
    }
}

#[test]
fn stabilizers_act_transitively_on_neighbours() {
    let am = toy::s3_d4();
    let t = Tree::new(&am);
    let ball = am.edge_ball(2).unwrap();
    for (i, v) in ball.vertices.iter().enumerate() {
        if ball.depth[i] >= 2 {
            continue;
        }
        let nbrs: Vec<_> = ball.adjacency[i]
            .iter()
            .map(|&j| &ball.vertices[j])
            .collect();
        let stab: Vec<toy::ToyElem> = match v.side {
            Side::Left => am
                .left()
                .group()
                .elements()
                .iter()
                .map(|x| am.embed_left(x))
                .collect::<Vec<_>>(),
            Side::Right => am
                .right()
                .group()
                .elements()
                .iter()
                .map(|x| am.embed_right(x))
                .collect::<Vec<_>>(),
        }
        .into_iter()
        .map(|x| am.conjugate(&v.rep, &x))
        .collect();
        for a in &nbrs {
            for b in &nbrs {
                assert!(stab.iter().any(|s| t.vertex_eq(&t.act(s, a), b)));
            }
        }
    }
}
