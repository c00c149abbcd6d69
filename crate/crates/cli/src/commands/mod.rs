//! Command implementations. Each returns rendered output or a report;
//! the binary maps outcomes to exit codes.

mod normalize;
mod search;
mod suite;
mod tree;
mod verify;

use std::path::Path;

use loctower::construction::Tower;
use loctower::toy::{self, ToyAmalgam};

use crate::error::{bail, CliResult};
use crate::files::TowerConfig;

pub use normalize::{normalize, Level};
pub use search::search;
pub use suite::lemma_suite;
pub use tree::{tree, TreeQuery};
pub use verify::verify;

/// The amalgam a word or tree query refers to.
pub enum Target {
    K(Tower),
    L(Tower),
    Toy(String, ToyAmalgam),
}

impl Target {
    pub fn label(&self) -> String {
        match self {
            Target::K(_) => "K".into(),
            Target::L(_) => "L".into(),
            Target::Toy(name, _) => name.clone(),
        }
    }
}

pub fn toy_by_name(name: &str) -> CliResult<ToyAmalgam> {
    match toy::by_name(name) {
        Some(am) => Ok(am),
        None => bail!(
            "unknown toy amalgam {:?}; expected one of {}",
            name,
            toy::TOY_NAMES.join(", ")
        ),
    }
}

/// Builds the tower of a configuration, failing unless it can be built.
pub fn build_tower(config: Option<&Path>) -> CliResult<Tower> {
    let r = TowerConfig::load(config)?;
    let checker = loctower::construction::PropertyChecker::new(&r.group.group, &r.a, r.config.p)?;
    let Some(b) = r.resolve_b(&checker)? else {
        bail!("no valid involution b for this configuration");
    };
    Ok(Tower::from_checker(checker, &b, r.config.q)?)
}

pub fn target(toy: Option<&str>, level: Level, config: Option<&Path>) -> CliResult<Target> {
    if let Some(name) = toy {
        return Ok(Target::Toy(name.into(), toy_by_name(name)?));
    }
    let t = build_tower(config)?;
    Ok(match level {
        Level::K => Target::K(t),
        Level::L => Target::L(t),
    })
}
