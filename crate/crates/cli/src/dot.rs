//! Graphviz output for tree balls and paths.

use std::collections::BTreeSet;
use std::fmt::Write as _;

/// One labelled vertex of a drawing.
pub struct DotVertex {
    pub label: String,
    pub highlight: bool,
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// An undirected graph; highlighted vertices are bold and highlighted
/// edges red.
pub fn graph(
    name: &str,
    vertices: &[DotVertex],
    edges: &[(usize, usize)],
    highlight: &BTreeSet<(usize, usize)>,
) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "graph {} {{", name);
    let _ = writeln!(s, "  node [shape=box, fontname=\"monospace\"];");
    for (i, v) in vertices.iter().enumerate() {
        let style = if v.highlight { ", style=bold" } else { "" };
        let _ = writeln!(s, "  v{} [label=\"{}\"{}];", i, escape(&v.label), style);
    }
    for &(u, w) in edges {
        let key = (u.min(w), u.max(w));
        let style = if highlight.contains(&key) {
            " [color=red, penwidth=2]"
        } else {
            ""
        };
        let _ = writeln!(s, "  v{} -- v{}{};", u, w, style);
    }
    s.push_str("}\n");
    s
}

/// A path drawn as a chain with every edge highlighted.
pub fn path(name: &str, vertices: Vec<DotVertex>) -> String {
    let edges: Vec<(usize, usize)> = (1..vertices.len()).map(|i| (i - 1, i)).collect();
    let highlight = edges.iter().copied().collect();
    graph(name, &vertices, &edges, &highlight)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn draws_a_chain() {
        let vs = vec![
            DotVertex {
                label: "G2: e".into(),
                highlight: true,
            },
            DotVertex {
                label: "G1: \"x\"".into(),
                highlight: false,
            },
        ];
        let out = path("geodesic", vs);
        assert!(out.starts_with("graph geodesic {"));
        assert!(out.contains("v0 -- v1 [color=red, penwidth=2];"));
        assert!(out.contains("\\\"x\\\""));
        assert!(out.contains("style=bold"));
    }
}
