use std::sync::OnceLock;

use super::*;
use crate::construction::{PropertyChecker, Tower, DEFAULT_Q};
use crate::permgroup::catalog;
use crate::toy;

fn tower() -> &'static Tower {
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
fn tower_suites_pass_on_small_samples() {
    let toy = toy::s3_d4();
    for name in TOWER_SUITES {
        let r = run(name, tower(), &toy, 200, 5).unwrap();
        assert!(r.passed(), "{} {:?}", name, r.witness);
        assert!(r.checks > 0, "{}", name);
    }
}

#[test]
fn toy_suites_pass() {
    for am in [toy::s3_d4(), toy::z6_z4()] {
        for name in ["serre-24-iv", "conjugacy"] {
            let r = run(name, tower(), &am, 30, 6).unwrap();
            assert!(r.passed(), "{} {:?}", name, r.witness);
        }
        let r = tree_bfs(&am, 3, 40, 7).unwrap();
        assert!(r.passed(), "{:?}", r.witness);
    }
}

#[test]
fn suites_are_deterministic() {
    let toy = toy::s3_d4();
    let x = run("lemma-5.4", tower(), &toy, 100, 9).unwrap();
    let y = run("lemma-5.4", tower(), &toy, 100, 9).unwrap();
    assert_eq!(x, y);
    assert!(x.stat("normalizing").unwrap() > 0);
    assert!(run("no-such-suite", tower(), &toy, 1, 1).is_err());
}

#[test]
fn conjugacy_lifting_and_its_negative_control() {
    let pos = lemma_2_10(&toy::a4_s3()).unwrap();
    assert!(pos.passed());
    assert_eq!(pos.stat("hypothesis_holds"), Some(1));
    assert_eq!(pos.stat("fusions"), None);
    let neg = lemma_2_10(&toy::s3_a4()).unwrap();
    assert!(neg.passed());
    assert_eq!(neg.stat("hypothesis_holds"), Some(0));
    assert!(neg.stat("fusions").unwrap() > 0);
}

#[test]
fn a_failing_check_keeps_the_first_witness() {
    let mut r = SuiteReport::new("x", 1, 2);
    r.check(true, || "a".into());
    r.check(false, || "b".into());
    r.check(false, || "c".into());
    assert_eq!((r.checks, r.counterexamples), (3, 2));
    assert_eq!(r.witness.as_deref(), Some("b"));
    assert!(!r.passed());
}
