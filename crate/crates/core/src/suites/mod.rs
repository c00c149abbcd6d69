//! Seeded falsification and oracle suites.
//!
//! Every suite is deterministic in its seed and returns a [`SuiteReport`]
//! counting checks and counterexamples, keeping the first witness.

mod tower_suites;
mod toy_suites;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Debug;

use crate::construction::Tower;
use crate::error::{Error, Result};
use crate::toy::ToyAmalgam;

pub use tower_suites::{
    extension, lemma_5_2, lemma_5_3, lemma_5_4, normal_form, normalizer_amalgam, projection,
};
pub use toy_suites::{conjugacy, lemma_2_10, serre_24_iv, tree_bfs, TREE_RADIUS};

pub const DEFAULT_SEED: u64 = 20_240_601;
pub const DEFAULT_SAMPLES: usize = 10_000;

/// Suites over the tower, then suites over a toy amalgam.
pub const TOWER_SUITES: [&str; 7] = [
    "normal-form",
    "lemma-5.2",
    "lemma-5.3",
    "lemma-5.4",
    "normalizer-amalgam",
    "extension",
    "projection",
];
pub const TOY_SUITES: [&str; 4] = ["serre-24-iv", "tree-bfs", "conjugacy", "lemma-2.10"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: String,
    pub seed: u64,
    pub samples: usize,
    pub checks: u64,
    pub counterexamples: u64,
    pub witness: Option<String>,
    /// Named counters, in insertion order.
    pub stats: Vec<(String, u64)>,
}

impl SuiteReport {
    pub fn new(name: &str, seed: u64, samples: usize) -> Self {
        SuiteReport {
            name: name.into(),
            seed,
            samples,
            checks: 0,
            counterexamples: 0,
            witness: None,
            stats: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexamples == 0
    }

    /// Records one check; `witness` is only evaluated for the first failure.
    pub fn check<W: FnOnce() -> String>(&mut self, ok: bool, witness: W) {
        self.checks += 1;
        if !ok {
            self.counterexamples += 1;
            if self.witness.is_none() {
                self.witness = Some(witness());
            }
        }
    }

    pub fn count(&mut self, key: &str, by: u64) {
        match self.stats.iter_mut().find(|(k, _)| k == key) {
            Some((_, v)) => *v += by,
            None => self.stats.push((key.into(), by)),
        }
    }

    pub fn stat(&self, key: &str) -> Option<u64> {
        self.stats.iter().find(|(k, _)| k == key).map(|&(_, v)| v)
    }
}

pub(crate) fn show<T: Debug>(x: &T) -> String {
    format!("{:?}", x)
}

pub fn is_tower_suite(name: &str) -> bool {
    TOWER_SUITES.contains(&name)
}

/// Runs a suite by name. Tower suites ignore `toy` and toy suites ignore
/// `tower`.
pub fn run(
    name: &str,
    tower: &Tower,
    toy: &ToyAmalgam,
    samples: usize,
    seed: u64,
) -> Result<SuiteReport> {
    match name {
        "normal-form" => Ok(normal_form(tower, samples, seed)),
        "lemma-5.2" => Ok(lemma_5_2(tower, samples, seed)),
        "lemma-5.3" => Ok(lemma_5_3(tower, samples, seed)),
        "lemma-5.4" => Ok(lemma_5_4(tower, samples, seed)),
        "normalizer-amalgam" => normalizer_amalgam(tower, samples, seed),
        "extension" => extension(tower, samples, seed),
        "projection" => Ok(projection(tower, samples, seed)),
        "serre-24-iv" => serre_24_iv(toy, samples, seed),
        "tree-bfs" => tree_bfs(toy, TREE_RADIUS, samples, seed),
        "conjugacy" => conjugacy(toy, 4),
        "lemma-2.10" => lemma_2_10(toy),
        _ => Err(Error::UnknownSuite(name.into())),
    }
}

#[cfg(test)]
mod tests;
