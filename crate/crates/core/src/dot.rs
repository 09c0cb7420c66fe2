//! Graphviz output of Hasse diagrams.

use crate::lattice::{ElementId, FiniteLattice};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// A DOT digraph drawing the covering relation bottom-up. `memberships` are
/// named element sets rendered into each node's `class` attribute;
/// `highlights` are filled.
pub fn emit_dot(
    lattice: &FiniteLattice,
    label: &dyn Fn(ElementId) -> String,
    highlights: &[ElementId],
    memberships: &[(String, Vec<ElementId>)],
) -> String {
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n");
    for x in lattice.elements() {
        let mut attrs = vec![format!("label={}", quote(&label(x)))];
        let classes: Vec<&str> = memberships
            .iter()
            .filter(|(_, members)| members.contains(&x))
            .map(|(name, _)| name.as_str())
            .collect();
        if !classes.is_empty() {
            attrs.push(format!("class={}", quote(&classes.join(" "))));
        }
        if highlights.contains(&x) {
            attrs.push("style=filled".to_owned());
            attrs.push("fillcolor=\"#f4c542\"".to_owned());
        }
        out.push_str(&format!("  n{x} [{}];\n", attrs.join(", ")));
    }
    for (a, b) in lattice.covers() {
        out.push_str(&format!("  n{a} -> n{b};\n"));
    }
    out.push_str("}\n");
    out
}
