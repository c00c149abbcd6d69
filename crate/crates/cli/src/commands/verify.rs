use std::path::Path;
use std::time::Instant;

use loctower::construction::{remark_xxa_witness, PropertyChecker, Status, Tower};
use loctower::permgroup::{is_complete, FiniteGroup};

use crate::error::CliResult;
use crate::files::TowerConfig;
use crate::report::{CheckResult, CheckStatus, RunReport};

/// Largest group checked for completeness when it is not asserted.
pub const COMPLETENESS_CAP: usize = 24;

pub fn verify(config: Option<&Path>, timings: bool) -> CliResult<RunReport> {
    let start = Instant::now();
    let r = TowerConfig::load(config)?;
    let mut rep = RunReport::new("verify", r.echo(), None);
    if timings {
        rep.timings = Some(Vec::new());
    }
    let s = &r.group.group;
    let checker = PropertyChecker::new(s, &r.a, r.config.p)?;
    let valid = checker.choose_b();
    rep.push(
        CheckResult::new("S", CheckStatus::Pass)
            .describe(format!("a = {}", r.a))
            .count("order", s.order() as u64)
            .count("normalizer_order", checker.n_group().order() as u64)
            .count("valid_b", valid.len() as u64),
    );
    rep.push(completeness(&r.config.assume_complete, s)?);
    rep.time("setup", start);

    let start = Instant::now();
    let Some(b) = r.resolve_b(&checker)? else {
        rep.push(
            CheckResult::new("b", CheckStatus::Fail).describe("no involution passes P2, P4 and P8"),
        );
        return Ok(rep);
    };
    rep.push(CheckResult::new("b", CheckStatus::Pass).describe(b.to_string()));
    let props = checker.check(&b);
    let all_pass = props.iter().all(|p| p.status == Status::Pass);
    for p in &props {
        rep.push(p.into());
    }
    let w = remark_xxa_witness(checker.n_group(), checker.a_group(), &b);
    rep.push(
        CheckResult::from_bool("remark-4.1", w.is_none())
            .describe("k b k^-1 b^-1 in A only for k = e")
            .witness(w.map(|k| format!("k = {}", k)))
            .count("checked", checker.n_group().order() as u64),
    );
    rep.time("properties", start);

    let start = Instant::now();
    let names = ["tower", "embedding", "teichmuller-lift"];
    if !all_pass {
        for n in names {
            rep.push(CheckResult::new(n, CheckStatus::Skipped).describe("a property fails"));
        }
        return Ok(rep);
    }
    match Tower::from_checker(checker, &b, r.config.q) {
        Err(e) => {
            rep.push(CheckResult::new("tower", CheckStatus::Fail).witness(Some(e.to_string())));
        }
        Ok(t) => {
            rep.push(
                CheckResult::new("tower", CheckStatus::Pass)
                    .describe(format!("q = {}", t.q()))
                    .count("m_order", t.m().order() as u64)
                    .count("cb_length", t.k_cb().len() as u64),
            );
            let e = t.embedding_witness();
            rep.push(
                CheckResult::from_bool("embedding", e.is_none())
                    .describe("N multiplies alike in S and in M")
                    .witness(e.map(|(x, y)| format!("{} * {}", x, y)))
                    .count("pairs", (t.n_group().order() * t.n_group().order()) as u64),
            );
            let l = t.lift_witness();
            rep.push(
                CheckResult::from_bool("teichmuller-lift", l.is_none())
                    .describe("the lift mod p^2 is multiplicative")
                    .witness(l.map(|(x, y)| format!("{} and {}", x, y))),
            );
        }
    }
    rep.time("tower", start);
    Ok(rep)
}

fn completeness(asserted: &bool, s: &loctower::permgroup::PermGroup) -> CliResult<CheckResult> {
    let name = "completeness";
    if *asserted {
        return Ok(CheckResult::new(name, CheckStatus::Assumed)
            .describe("no outer automorphisms (input assertion)"));
    }
    if s.order() <= COMPLETENESS_CAP {
        let ok = is_complete(s)?;
        return Ok(CheckResult::new(
            name,
            if ok {
                CheckStatus::Pass
            } else {
                CheckStatus::Skipped
            },
        )
        .describe(if ok {
            "every automorphism is inner (exhaustive)"
        } else {
            "S has outer automorphisms or a centre (exhaustive)"
        }));
    }
    Ok(
        CheckResult::new(name, CheckStatus::Skipped)
            .describe("not asserted and too large to check"),
    )
}
