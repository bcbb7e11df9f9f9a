//! Graphviz output of Hasse diagrams.

use std::fmt::Write as _;

use nmv_core::PartialOrder;

/// DOT digraph of the covering relation, drawn bottom to top. Nodes appear
/// in carrier order, edges in lexicographic order of `(lower, upper)`.
pub fn emit_dot(order: &PartialOrder, labels: &[String]) -> String {
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n");
    for label in labels {
        writeln!(out, "  {};", quote(label)).unwrap();
    }
    for (x, y) in order.covering_pairs() {
        writeln!(out, "  {} -> {};", quote(&labels[x]), quote(&labels[y])).unwrap();
    }
    out.push_str("}\n");
    out
}

fn quote(label: &str) -> String {
    format!("\"{}\"", label.replace('\\', "\\\\").replace('"', "\\\""))
}
