use std::path::Path;

use loctower::construction::{order_p_class_representatives, PropertyChecker, Status};
use loctower::permgroup::{prime_divisors, FiniteGroup, Permutation};

use crate::error::CliResult;
use crate::files::{group_files, load_group_file, LoadedGroup};

const HEADER: [&str; 15] = [
    "group", "order", "p", "a", "valid_b", "P1", "P2", "P3", "P4", "P5", "P6", "P7", "P8", "b",
    "valid",
];

/// One CSV row per candidate `a`: the named `a` of a file when present,
/// otherwise every order-`p` class for every odd prime `p` (or just
/// `only_p`). Property results are for the least valid `b`; failing that,
/// the least involution outside `N`, or the least involution at all.
///
/// Files that fail to load are reported through `skipped`.
pub fn search(dir: &Path, only_p: Option<u64>, skipped: &mut dyn FnMut(&str)) -> CliResult<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(HEADER)?;
    for path in group_files(dir)? {
        let loaded = match load_group_file(&path) {
            Ok(g) => g,
            Err(e) => {
                skipped(&e.0);
                continue;
            }
        };
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        for (p, a) in candidates(&loaded, only_p) {
            match row(&name, &loaded, p, &a) {
                Ok(r) => w.write_record(&r)?,
                Err(e) => skipped(&format!("{}: a = {}, p = {}: {}", path.display(), a, p, e)),
            }
        }
    }
    let bytes = w
        .into_inner()
        .map_err(|e| crate::error::CliError(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("CSV of UTF-8 fields"))
}

fn candidates(g: &LoadedGroup, only_p: Option<u64>) -> Vec<(u64, Permutation)> {
    if let Some(a) = g.named.get("a") {
        return vec![(only_p.unwrap_or_else(|| a.order()), a.clone())];
    }
    let primes = match only_p {
        Some(p) => vec![p],
        None => prime_divisors(g.group.order() as u64)
            .into_iter()
            .filter(|&p| p > 2)
            .collect(),
    };
    primes
        .into_iter()
        .flat_map(|p| {
            order_p_class_representatives(&g.group, p)
                .into_iter()
                .map(move |a| (p, a))
        })
        .collect()
}

fn row(name: &str, g: &LoadedGroup, p: u64, a: &Permutation) -> CliResult<Vec<String>> {
    let checker = PropertyChecker::new(&g.group, a, p)?;
    let valid = checker.choose_b();
    let involutions = g.group.involutions();
    let b = valid
        .first()
        .or_else(|| involutions.iter().find(|x| !checker.n_group().contains(x)))
        .or_else(|| involutions.first())
        .cloned();
    let mut out = vec![
        name.to_string(),
        g.group.order().to_string(),
        p.to_string(),
        a.to_string(),
        valid.len().to_string(),
    ];
    match &b {
        Some(b) => {
            let props = checker.check(b);
            out.extend(props.iter().map(|r| r.status.as_str().to_string()));
            out.push(b.to_string());
            let ok = !valid.is_empty() && props.iter().all(|r| r.status == Status::Pass);
            out.push(ok.to_string());
        }
        None => {
            out.extend((0..8).map(|_| "skipped".to_string()));
            out.push(String::new());
            out.push("false".into());
        }
    }
    Ok(out)
}
