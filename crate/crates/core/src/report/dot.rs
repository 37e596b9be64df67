use std::fmt::Write as _;

use crate::jointree::CliqueTree;

/// DOT rendering of a clique-tree: one node per cluster labelled by its size,
/// edges labelled by separator size.
pub fn export_dot(t: &CliqueTree, name: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph \"{}\" {{", name.replace('"', "\\\""));
    let _ = writeln!(out, "  node [shape=circle];");
    for (i, c) in t.clusters.iter().enumerate() {
        let _ = writeln!(out, "  c{i} [label=\"{}\"];", c.len());
    }
    for e in &t.edges {
        let _ = writeln!(
            out,
            "  c{} -- c{} [label=\"{}\"];",
            e.a,
            e.b,
            e.separator.len()
        );
    }
    out.push_str("}\n");
    out
}
