//! Acceptance run: one line per criterion, non-zero exit on any failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use loctower::construction::{PropertyChecker, Status, Tower, DEFAULT_Q};
use loctower::permgroup::{catalog, FiniteGroup, Permutation};
use loctower::suites::{self, SuiteReport, DEFAULT_SEED, TREE_RADIUS};
use loctower::toy;

const SAMPLES: usize = 10_000;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

fn suite_outcome(r: &SuiteReport) -> Outcome {
    outcome(
        r.passed() && r.checks > 0,
        format!(
            "{}: {} checks, {} counterexamples{}",
            r.name,
            r.checks,
            r.counterexamples,
            r.witness
                .as_ref()
                .map(|w| format!(", first: {}", w))
                .unwrap_or_default()
        ),
    )
}

fn merge(parts: Vec<Outcome>) -> Outcome {
    outcome(
        parts.iter().all(|p| p.ok),
        parts
            .into_iter()
            .map(|p| p.detail)
            .collect::<Vec<_>>()
            .join("; "),
    )
}

struct Runner {
    failures: usize,
}

impl Runner {
    fn run<F: FnOnce() -> Outcome>(
        &mut self,
        id: &str,
        title: &str,
        limit: Option<Duration>,
        f: F,
    ) {
        let start = Instant::now();
        let mut o = f();
        let elapsed = start.elapsed();
        if let Some(limit) = limit {
            if elapsed > limit {
                o.ok = false;
                o.detail = format!("{}; over the {:?} limit", o.detail, limit);
            }
        }
        let tag = if o.ok { "PASS" } else { "FAIL" };
        println!(
            "[{}] {} {} ({:.2}s) {}",
            tag,
            id,
            title,
            elapsed.as_secs_f64(),
            o.detail
        );
        if !o.ok {
            self.failures += 1;
        }
    }
}

fn m11_facts(slot: &mut Option<(PropertyChecker, Vec<Permutation>)>) -> Outcome {
    let s = catalog::m11();
    let a = catalog::m11_generators()[0].clone();
    let checker = match PropertyChecker::new(&s, &a, 11) {
        Ok(c) => c,
        Err(e) => return outcome(false, e.to_string()),
    };
    let order = s.order();
    let n = checker.n_group().order();
    let c = s.centralizer(std::slice::from_ref(&a));
    let c_is_a = c.order() == 11 && c.elements() == checker.a_group().elements();
    let valid = checker.choose_b();
    let ok = order == 7920 && n == 55 && c_is_a && !valid.is_empty();
    let detail = format!(
        "|S| = {}, |N| = {}, C_S(a) = <a>: {}, valid b: {}",
        order,
        n,
        c_is_a,
        valid.len()
    );
    *slot = Some((checker, valid));
    outcome(ok, detail)
}

fn properties(checker: &PropertyChecker, valid: &[Permutation]) -> Outcome {
    let mut bad_valid = 0;
    for b in valid {
        if checker.check(b).iter().any(|r| r.status != Status::Pass) {
            bad_valid += 1;
        }
    }
    let sylow5 = match checker.n_group().sylow_subgroups(5) {
        Ok(s) => s,
        Err(e) => return outcome(false, e.to_string()),
    };
    let mut normalizing = 0;
    let mut p8_not_failing = 0;
    for b in checker.group().involutions() {
        if sylow5.iter().any(|p| p.is_normalized_by(&b)) {
            normalizing += 1;
            let r = checker.p8(&b);
            if r.status != Status::Fail || r.witness.is_none() || valid.contains(&b) {
                p8_not_failing += 1;
            }
        }
    }
    outcome(
        bad_valid == 0 && p8_not_failing == 0 && normalizing > 0,
        format!(
            "{} valid b all pass P1-P8; {} Sylow-5 normalizing involutions, {} without a P8 failure",
            valid.len(),
            normalizing,
            p8_not_failing
        ),
    )
}

fn remark(tower: &Tower) -> Outcome {
    let b = tower.b();
    let b_inv = b.inverse();
    let a_group = tower.a_group();
    let mut checked = 0;
    let mut witnesses = 0;
    for k in tower.n_group().elements() {
        checked += 1;
        let comm = k.compose(b).compose(&k.inverse()).compose(&b_inv);
        if a_group.contains(&comm) && !k.is_identity() {
            witnesses += 1;
        }
    }
    outcome(
        checked == 55 && witnesses == 0 && tower.remark_xxa_witness().is_none(),
        format!("{} elements of N, {} witnesses", checked, witnesses),
    )
}

fn tree(am: &toy::ToyAmalgam) -> Outcome {
    let bfs = suites::tree_bfs(am, TREE_RADIUS, 2_000, DEFAULT_SEED);
    let serre = suites::serre_24_iv(am, 100, DEFAULT_SEED);
    match (bfs, serre) {
        (Ok(b), Ok(s)) => {
            let parity = b.stat("even").unwrap_or(0) > 0 && b.stat("odd").unwrap_or(0) > 0;
            let hyperbolic = s.stat("hyperbolic").unwrap_or(0) > 0;
            let mut o = merge(vec![suite_outcome(&b), suite_outcome(&s)]);
            o.ok &= parity && hyperbolic;
            o.detail = format!(
                "{} ball vertices; {}",
                b.stat("ball_vertices").unwrap_or(0),
                o.detail
            );
            o
        }
        (Err(e), _) | (_, Err(e)) => outcome(false, e.to_string()),
    }
}

fn main() -> ExitCode {
    let mut runner = Runner { failures: 0 };
    let mut slot = None;
    runner.run("AC1", "M11 facts", Some(Duration::from_secs(60)), || {
        m11_facts(&mut slot)
    });
    let Some((checker, valid)) = slot else {
        println!("[FAIL] remaining criteria need the M11 checker");
        return ExitCode::FAILURE;
    };
    runner.run("AC2", "properties P1-P8 and the P8 dichotomy", None, || {
        properties(&checker, &valid)
    });
    let tower = match valid.first() {
        Some(b) => Tower::from_checker(checker, &b.clone(), DEFAULT_Q),
        None => {
            println!("[FAIL] no valid b, the tower cannot be built");
            return ExitCode::FAILURE;
        }
    };
    let tower = match tower {
        Ok(t) => t,
        Err(e) => {
            println!("[FAIL] tower construction: {}", e);
            return ExitCode::FAILURE;
        }
    };
    let t = &tower;
    runner.run("AC3", "kbk^-1b^-1 in A forces k = e", None, || remark(t));
    runner.run(
        "AC4",
        "normal forms in K and L",
        Some(Duration::from_secs(30)),
        || suite_outcome(&suites::normal_form(t, SAMPLES, DEFAULT_SEED)),
    );
    let s3_d4 = toy::s3_d4();
    runner.run(
        "AC5",
        "tree distance, geodesics and displacement",
        Some(Duration::from_secs(120)),
        || tree(&s3_d4),
    );
    runner.run(
        "AC6",
        "cyclic conjugacy test vs conjugator search",
        None,
        || {
            let mut parts = Vec::new();
            for am in [toy::s3_d4(), toy::a4_s3()] {
                parts.push(match suites::conjugacy(&am, 4) {
                    Ok(r) => suite_outcome(&r),
                    Err(e) => outcome(false, e.to_string()),
                });
            }
            merge(parts)
        },
    );
    let limit = Some(Duration::from_secs(60));
    runner.run("AC7a", "normalizer of <(cb)^v> in K", limit, || {
        suite_outcome(&suites::lemma_5_2(t, SAMPLES, DEFAULT_SEED))
    });
    runner.run("AC7b", "E meets its conjugates trivially", limit, || {
        suite_outcome(&suites::lemma_5_3(t, SAMPLES, DEFAULT_SEED))
    });
    runner.run("AC7c", "normalizers of A in L lie in K", limit, || {
        suite_outcome(&suites::lemma_5_4(t, SAMPLES, DEFAULT_SEED))
    });
    runner.run(
        "AC8",
        "normalizer amalgam of A",
        None,
        || match suites::normalizer_amalgam(t, SAMPLES, DEFAULT_SEED) {
            Ok(r) => {
                let mut o = suite_outcome(&r);
                let checks = r.stat("hypothesis_checks").unwrap_or(0);
                o.ok &= checks == 8525 && r.stat("normalizing").unwrap_or(0) > 0;
                o.detail = format!("{} hypothesis checks; {}", checks, o.detail);
                o
            }
            Err(e) => outcome(false, e.to_string()),
        },
    );
    runner.run(
        "AC9",
        "extension of endomorphisms",
        None,
        || match suites::extension(t, SAMPLES, DEFAULT_SEED) {
            Ok(r) => {
                let mut o = suite_outcome(&r);
                o.ok &= r.checks == 2 * (7920 + SAMPLES as u64);
                o
            }
            Err(e) => outcome(false, e.to_string()),
        },
    );
    runner.run("AC10", "projection onto E/Z", None, || {
        suite_outcome(&suites::projection(t, SAMPLES, DEFAULT_SEED))
    });
    if runner.failures == 0 {
        println!("acceptance: all criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {} criteria fail", runner.failures);
        ExitCode::FAILURE
    }
}
