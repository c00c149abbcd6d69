use std::path::Path;
use std::time::Instant;

use loctower::suites::{self, TOWER_SUITES, TOY_SUITES};
use serde_json::json;

use crate::error::{bail, CliResult};
use crate::files::TowerConfig;
use crate::report::RunReport;

use super::{build_tower, toy_by_name};

/// Expands `all` (or nothing) to every suite and rejects unknown names.
fn resolve(names: &[String]) -> CliResult<Vec<String>> {
    let known: Vec<&str> = TOWER_SUITES
        .iter()
        .chain(TOY_SUITES.iter())
        .copied()
        .collect();
    if names.is_empty() || names.iter().any(|n| n == "all") {
        return Ok(known.iter().map(|s| s.to_string()).collect());
    }
    for n in names {
        if !known.contains(&n.as_str()) {
            bail!(
                "unknown suite {:?}; expected one of {}",
                n,
                known.join(", ")
            );
        }
    }
    Ok(names.to_vec())
}

pub fn lemma_suite(
    names: &[String],
    samples: usize,
    seed: u64,
    config: Option<&Path>,
    toy: &str,
    timings: bool,
) -> CliResult<RunReport> {
    let names = resolve(names)?;
    let am = toy_by_name(toy)?;
    let start = Instant::now();
    let echo = TowerConfig::load(config)?.echo();
    let tower = build_tower(config)?;
    let mut rep = RunReport::new(
        "lemma-suite",
        json!({ "tower": echo, "toy": toy, "samples": samples, "suites": names }),
        Some(seed),
    );
    if timings {
        rep.timings = Some(Vec::new());
    }
    rep.time("tower", start);
    for n in &names {
        let start = Instant::now();
        let r = suites::run(n, &tower, &am, samples, seed)?;
        rep.push((&r).into());
        rep.time(n, start);
    }
    Ok(rep)
}
