use std::sync::OnceLock;

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::sample::Sampler;
use super::*;
use crate::amalgam::Side;
use crate::permgroup::{catalog, Endomorphism};

fn m11_tower() -> &'static Tower {
    static TOWER: OnceLock<Tower> = OnceLock::new();
    TOWER.get_or_init(|| {
        let s = catalog::m11();
        let a = catalog::m11_generators()[0].clone();
        let checker = PropertyChecker::new(&s, &a, 11).unwrap();
        let b = checker.choose_b()[0].clone();
        Tower::from_checker(checker, &b, DEFAULT_Q).unwrap()
    })
}

#[test]
fn teichmuller_examples() {
    assert_eq!(teichmuller_lift(1, 11), 1);
    assert_eq!(teichmuller_lift(4, 11), 81);
    assert_eq!(teichmuller_lift(10, 11), 120);
    let frozen = [1, 112, 3, 81, 27, 94, 40, 118, 9, 120];
    for k in 1..11 {
        let v = teichmuller_lift(k, 11);
        assert_eq!(v, frozen[k as usize - 1]);
        assert_eq!(v % 11, k);
        assert_eq!(mgroup::pow_mod(v, 10, 121), 1);
    }
}

#[test]
fn lift_is_multiplicative() {
    for p in [3u64, 5, 7, 11, 13] {
        for x in 1..p {
            for y in 1..p {
                assert_eq!(
                    teichmuller_lift(x * y % p, p),
                    teichmuller_lift(x, p) * teichmuller_lift(y, p) % (p * p)
                );
            }
        }
    }
    assert_eq!(m11_tower().lift_witness(), None);
}

#[test]
fn valid_b_dichotomy() {
    let t = m11_tower();
    let checker = t.checker();
    let valid = checker.choose_b();
    assert_eq!(valid.len(), 110);
    let least = Permutation::from_one_based(&[1, 2, 3, 10, 8, 7, 6, 5, 11, 4, 9]).unwrap();
    assert_eq!(valid[0], least);
    let sylow5 = t.n_group().sylow_subgroups(5).unwrap();
    assert_eq!(sylow5.len(), 11);
    for b in t.s().involutions() {
        let normalizes = sylow5.iter().any(|p| p.is_normalized_by(&b));
        let ok = valid.binary_search(&b).is_ok();
        assert_eq!(ok, !normalizes);
        if normalizes {
            assert_eq!(checker.p8(&b).status, Status::Fail);
            assert!(checker.p8(&b).witness.is_some());
        }
    }
}

#[test]
fn m11_properties_pass() {
    let t = m11_tower();
    for r in t.properties() {
        assert_eq!(r.status, Status::Pass, "{} {:?}", r.id, r.witness);
    }
    assert_eq!(t.remark_xxa_witness(), None);
    assert_eq!(t.embedding_witness(), None);
}

#[test]
fn m_group_structure() {
    let t = m11_tower();
    let m = t.m();
    assert_eq!(m.order(), 605);
    assert_eq!(m.element_order(&m.a()), 11);
    assert_eq!(m.element_order(&m.c()), 121);
    assert_eq!(t.k().left().embed_edge(t.a()), m.a());
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let sampler = Sampler::new(t);
    for _ in 0..20_000 {
        let (x, y, z) = (
            sampler.m_element(&mut rng),
            sampler.m_element(&mut rng),
            sampler.m_element(&mut rng),
        );
        assert_eq!(m.mul(&m.mul(&x, &y), &z), m.mul(&x, &m.mul(&y, &z)));
        assert_eq!(m.mul(&x, &m.inv(&x)), m.identity());
    }
    // inversion in Q lifts to c -> c^-1 when present
    for (j, _) in m.complement().iter().enumerate() {
        if m.action_exponent(j) == 10 {
            assert_eq!(m.lifted_action(j), 120);
        }
    }
}

#[test]
fn tower_wiring() {
    let t = m11_tower();
    let cb = t.k_cb();
    assert_eq!(cb.len(), 2);
    assert!(cb.is_cyclically_reduced());
    assert_eq!(t.l_from_e(&LocalizedRational::one()), t.l_from_k(&cb));
    assert_eq!(t.complement().order(), 5);
    assert_eq!(t.n_group().order(), 55);
    // (cb)^v has length 2v
    for v in 1..5 {
        assert_eq!(t.k().pow(&cb, v).len(), 2 * v as usize);
    }
}

#[test]
fn build_rejects_bad_inputs() {
    let s = catalog::m11();
    let a = catalog::m11_generators()[0].clone();
    let b = m11_tower().b().clone();
    assert!(Tower::build(&s, &a, &b, 11, 11).is_err());
    assert!(Tower::build(&s, &a, &b, 11, 5).is_err());
    assert!(Tower::build(&s, &a, &b, 11, 9).is_err());
    assert!(Tower::build(&s, &a, &b, 5, 7).is_err());
    assert!(Tower::build(&s, &a, &a, 11, 7).is_err());
}

#[test]
fn k_generated_by_s_and_c() {
    let t = m11_tower();
    let sampler = Sampler::new(t);
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..500 {
        let x = sampler.k_element(&mut rng, 6);
        let gens = t.decompose_over_s_and_c(&x);
        assert_eq!(t.evaluate_generators(&gens), x);
    }
}

#[test]
fn z_section_is_canonical() {
    let t = m11_tower();
    let kf = t.l().right();
    let sampler = Sampler::new(t);
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..300 {
        let w = sampler.k_element(&mut rng, 5);
        let (n, r) = kf.edge_split(&w);
        assert_eq!(kf.mul(&kf.embed_edge(&n), &r), w);
        let shift: i64 = rand::Rng::gen_range(&mut rng, -3..=3);
        let (n2, r2) = kf.edge_split(&kf.mul(&t.k().pow(&t.k_cb(), shift), &w));
        assert_eq!(r2, r);
        assert_eq!(n2, n + BigInt::from(shift));
    }
    assert!(kf.edge_contains(&t.k().pow(&t.k_cb(), -3)));
    assert!(!kf.edge_contains(&t.k_c()));
}

#[test]
fn extension_of_identity_and_trivial_maps() {
    let t = m11_tower();
    let s = t.s();
    let id = t.extend_endomorphism(&Endomorphism::identity(s)).unwrap();
    let triv = t.extend_endomorphism(&Endomorphism::trivial(s)).unwrap();
    assert!(matches!(triv, Extension::Killing { .. }));
    for x in s.elements().iter().step_by(37) {
        assert_eq!(t.apply_extension(&id, &t.eta(x)), t.eta(x));
        assert!(t.l().is_identity(&t.apply_extension(&triv, &t.eta(x))));
    }
    let sampler = Sampler::new(t);
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..100 {
        let x = sampler.l_element(&mut rng, 4, 3);
        let y = sampler.l_element(&mut rng, 4, 3);
        assert_eq!(t.apply_extension(&id, &x), x);
        assert!(t.l().is_identity(&t.apply_extension(&triv, &x)));
        let xy = t.l().multiply(&x, &y);
        assert!(t.l().is_identity(&t.apply_extension(&triv, &xy)));
    }
}

#[test]
fn inner_automorphisms_extend_by_conjugation() {
    let t = m11_tower();
    let s = t.s();
    let g = m11_tower().b().clone();
    let f = Endomorphism::inner(s, &g).unwrap();
    let ext = t.extend_endomorphism(&f).unwrap();
    for x in s.elements().iter().step_by(101) {
        assert_eq!(t.apply_extension(&ext, &t.eta(x)), t.eta(&f.apply(s, x)));
    }
}

#[test]
fn projection_examples() {
    let t = m11_tower();
    let third = t.ring().element(1, 3).unwrap();
    assert_eq!(t.projection_pi(&t.l_from_e(&third)), third);
    assert!(t.projection_pi(&t.l_from_k(&t.k_c())).is_zero());
    for x in t.s().elements().iter().step_by(53) {
        assert!(t.projection_pi(&t.eta(x)).is_zero());
    }
    let sampler = Sampler::new(t);
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..200 {
        let x = sampler.l_element(&mut rng, 5, 3);
        let y = sampler.l_element(&mut rng, 5, 3);
        let lhs = t.projection_pi(&t.l().multiply(&x, &y));
        let rhs = t
            .projection_pi(&x)
            .add(&t.projection_pi(&y))
            .coset_rep_mod_z();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn l_normal_forms() {
    let t = m11_tower();
    let l = t.l();
    let sum = l.multiply(
        &t.l_from_e(&t.ring().element(1, 3).unwrap()),
        &t.l_from_e(&t.ring().element(2, 3).unwrap()),
    );
    assert_eq!(sum, t.l_from_k(&t.k_cb()));
    assert!(l.in_factor(&sum, Side::Right));
    let sampler = Sampler::new(t);
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    for _ in 0..100 {
        let x = sampler.l_element(&mut rng, 5, 3);
        assert!(l.is_identity(&l.multiply(&x, &l.inverse(&x))));
        assert_eq!(l.inverse(&x).len(), x.len());
    }
}

#[test]
fn tree_queries_on_the_tower() {
    use crate::bstree::{FixedPointClass, Tree};
    let t = m11_tower();
    let lt = Tree::new(t.l());
    match lt.fixed_point_class(&t.eta(t.a())).unwrap() {
        FixedPointClass::UniqueVertex(v) => assert!(lt.vertex_eq(&v, &lt.base(Side::Right))),
        other => panic!("{:?}", other),
    }
    let kt = Tree::new(t.k());
    assert_eq!(
        kt.fixed_point_class(&t.k_cb()).unwrap(),
        FixedPointClass::NoFixedVertex
    );
    for v in 1..5 {
        assert_eq!(
            kt.translation_length(&t.k().pow(&t.k_cb(), v)),
            2 * v as usize
        );
    }
    assert_eq!(kt.translation_length(&t.k_b()), 0);
    let geo = kt.geodesic(&t.k_cb());
    assert_eq!(geo.len(), 3);
}

#[test]
fn normalizer_of_a_in_k_is_m() {
    use crate::bstree::Tree;
    let t = m11_tower();
    let kt = Tree::new(t.k());
    let h0 = t.a_group().elements().to_vec();
    let na = kt.normalizer_amalgam(&h0).unwrap();
    assert_eq!(na.checks, 8525);
    assert!(na.left_is_whole);
    assert!(na.right_is_edge);
    assert_eq!(na.right.len(), 55);
    let sampler = Sampler::new(t);
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..200 {
        let x = sampler.k_element(&mut rng, 4);
        assert_eq!(na.contains(&x), t.k().in_factor(&x, Side::Left));
    }
}
