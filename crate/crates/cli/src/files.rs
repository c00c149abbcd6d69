//! Group definition files and tower configuration files.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use loctower::construction::{PropertyChecker, DEFAULT_Q};
use loctower::permgroup::{FiniteGroup, PermGroup, Permutation};
use serde::{Deserialize, Serialize};

use crate::cycles::parse_cycles;
use crate::error::{bail, CliError, CliResult};

pub const BUNDLED_GROUP: &str = include_str!("../data/m11.json");
pub const BUNDLED_CONFIG: &str = include_str!("../data/m11-tower.json");
const BUNDLED_GROUP_NAME: &str = "m11.json";

/// `{ "degree": n, "generators": [...], "named": { "a": ..., "b": ... } }`
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    pub degree: usize,
    pub generators: Vec<String>,
    #[serde(default)]
    pub named: BTreeMap<String, String>,
}

/// A parsed group file.
#[derive(Clone, Debug)]
pub struct LoadedGroup {
    pub group: PermGroup,
    pub named: BTreeMap<String, Permutation>,
}

impl GroupFile {
    pub fn parse(text: &str) -> CliResult<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(&self) -> CliResult<LoadedGroup> {
        if self.degree == 0 {
            bail!("degree must be positive");
        }
        let gens = self
            .generators
            .iter()
            .map(|g| parse_cycles(g, self.degree))
            .collect::<CliResult<Vec<_>>>()?;
        let group = PermGroup::generate(self.degree, &gens)?;
        let mut named = BTreeMap::new();
        for (k, v) in &self.named {
            let x = parse_cycles(v, self.degree)?;
            if !group.contains(&x) {
                bail!("named element {} = {} is not in the group", k, v);
            }
            named.insert(k.clone(), x);
        }
        Ok(LoadedGroup { group, named })
    }
}

pub fn load_group_file(path: &Path) -> CliResult<LoadedGroup> {
    let text =
        fs::read_to_string(path).map_err(|e| CliError(format!("{}: {}", path.display(), e)))?;
    GroupFile::parse(&text)
        .and_then(|g| g.load())
        .map_err(|e| CliError(format!("{}: {}", path.display(), e)))
}

fn default_q() -> u64 {
    DEFAULT_Q
}

fn auto() -> String {
    "auto".into()
}

/// `{ "group": path, "a": cycles | "auto", "b": cycles | "auto", "p": 11,
/// "q": 7, "assume_complete": true }`
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TowerConfig {
    pub group: String,
    #[serde(default = "auto")]
    pub a: String,
    #[serde(default = "auto")]
    pub b: String,
    pub p: u64,
    #[serde(default = "default_q")]
    pub q: u64,
    #[serde(default)]
    pub assume_complete: bool,
}

/// A configuration with its group loaded and `a` resolved. `b` stays
/// textual until the property checker exists, because `auto` needs it.
pub struct ResolvedConfig {
    pub config: TowerConfig,
    pub group: LoadedGroup,
    pub a: Permutation,
}

impl TowerConfig {
    pub fn parse(text: &str) -> CliResult<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Reads `path`, or the bundled M11 configuration when absent. Group
    /// paths are relative to the configuration file.
    pub fn load(path: Option<&Path>) -> CliResult<ResolvedConfig> {
        let (config, group) = match path {
            None => {
                let config = Self::parse(BUNDLED_CONFIG)?;
                let group = GroupFile::parse(BUNDLED_GROUP)?.load()?;
                (config, group)
            }
            Some(path) => {
                let text = fs::read_to_string(path)
                    .map_err(|e| CliError(format!("{}: {}", path.display(), e)))?;
                let config = Self::parse(&text)
                    .map_err(|e| CliError(format!("{}: {}", path.display(), e)))?;
                let base = path.parent().map(Path::to_path_buf).unwrap_or_default();
                let group_path = base.join(&config.group);
                let group = if !group_path.exists() && config.group == BUNDLED_GROUP_NAME {
                    GroupFile::parse(BUNDLED_GROUP)?.load()?
                } else {
                    load_group_file(&group_path)?
                };
                (config, group)
            }
        };
        let a = config.resolve_a(&group.group)?;
        Ok(ResolvedConfig { config, group, a })
    }

    fn resolve_a(&self, s: &PermGroup) -> CliResult<Permutation> {
        if self.a == "auto" {
            return match s.elements_of_order(self.p).into_iter().min() {
                Some(a) => Ok(a),
                None => bail!("no element of order {} for a = auto", self.p),
            };
        }
        let a = parse_cycles(&self.a, s.degree())?;
        if !s.contains(&a) {
            bail!("a = {} is not in the group", self.a);
        }
        Ok(a)
    }
}

impl ResolvedConfig {
    /// `b` from the configuration; `auto` takes the least valid involution.
    pub fn resolve_b(&self, checker: &PropertyChecker) -> CliResult<Option<Permutation>> {
        if self.config.b == "auto" {
            return Ok(checker.choose_b().into_iter().next());
        }
        let s = &self.group.group;
        let b = parse_cycles(&self.config.b, s.degree())?;
        if !s.contains(&b) {
            bail!("b = {} is not in the group", self.config.b);
        }
        Ok(Some(b))
    }

    pub fn echo(&self) -> serde_json::Value {
        serde_json::to_value(&self.config).expect("serializable")
    }
}

/// Group files in `dir`, sorted by name.
pub fn group_files(dir: &Path) -> CliResult<Vec<PathBuf>> {
    let mut out = Vec::new();
    for entry in fs::read_dir(dir).map_err(|e| CliError(format!("{}: {}", dir.display(), e)))? {
        let path = entry?.path();
        if path.extension().is_some_and(|e| e == "json") {
            out.push(path);
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_files_load() {
        let r = TowerConfig::load(None).unwrap();
        assert_eq!(r.group.group.order(), 7920);
        assert_eq!(r.a.order(), 11);
        assert_eq!(r.config.q, 7);
        assert!(r.group.named.contains_key("a"));
    }

    #[test]
    fn config_defaults_and_unknown_fields() {
        let c = TowerConfig::parse(r#"{"group": "g.json", "p": 3}"#).unwrap();
        assert_eq!((c.a.as_str(), c.b.as_str(), c.q), ("auto", "auto", 7));
        assert!(!c.assume_complete);
        assert!(TowerConfig::parse(r#"{"group": "g.json", "p": 3, "x": 1}"#).is_err());
    }

    #[test]
    fn group_files_check_named_elements() {
        let g = GroupFile::parse(
            r#"{"degree": 3, "generators": ["(1,2,3)"], "named": {"a": "(1,2)"}}"#,
        )
        .unwrap();
        assert!(g.load().is_err());
        let g = GroupFile::parse(r#"{"degree": 3, "generators": []}"#).unwrap();
        assert_eq!(g.load().unwrap().group.order(), 1);
    }
}
