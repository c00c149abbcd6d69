//! Cycle notation: `(1,2,3)(4,5)` with 1-based points, `()` for the
//! identity. Whitespace is ignored.

use loctower::permgroup::Permutation;

use crate::error::{bail, CliResult};

/// Parses a product of cycles on `degree` points. Cycles need not be
/// disjoint; the product is composed so that the rightmost acts first.
pub fn parse_cycles(text: &str, degree: usize) -> CliResult<Permutation> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        bail!("empty permutation");
    }
    let mut result = Permutation::identity(degree);
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let Some(body) = rest.strip_prefix('(') else {
            bail!("expected '(' in {:?}", text);
        };
        let Some(end) = body.find(')') else {
            bail!("unclosed cycle in {:?}", text);
        };
        let inner = &body[..end];
        rest = &body[end + 1..];
        if inner.is_empty() {
            continue;
        }
        let mut points = Vec::new();
        for tok in inner.split(',') {
            let Ok(x) = tok.parse::<u32>() else {
                bail!("bad point {:?} in {:?}", tok, text);
            };
            if x == 0 || x as usize > degree {
                bail!("point {} out of range 1..{}", x, degree);
            }
            if points.contains(&x) {
                bail!("point {} repeats in a cycle", x);
            }
            points.push(x);
        }
        let cycle = Permutation::from_cycles(degree, &[&points])?;
        result = result.compose(&cycle);
    }
    Ok(result)
}

/// Whether `text` looks like cycle notation (rather than a grouped word).
pub fn is_cycle_text(text: &str) -> bool {
    text.chars()
        .all(|c| c.is_ascii_digit() || c == ',' || c == '(' || c == ')' || c.is_whitespace())
}
