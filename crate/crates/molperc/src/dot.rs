//! Graphviz DOT export.
//!
//! Output is a pure function of the value: nodes and edges are written in
//! lexicographic order, one per line.

use std::fmt::Write;

use molperc_core::{Automaton, LabelledGraph, StateKind, EPSILON};

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for ch in s.chars() {
        if matches!(ch, '"' | '\\') {
            out.push('\\');
        }
        out.push(ch);
    }
    out.push('"');
    out
}

/// Stable states are circles and perceiving states diamonds; accepting
/// states get a double outline and the initial state a bold one.
pub fn automaton_dot(a: &Automaton) -> String {
    let mut out = String::from("digraph automaton {\n    rankdir=LR;\n");
    for s in a.states() {
        let fin = a.is_final(&s.name);
        let shape = match (s.kind, fin) {
            (StateKind::Perceiving, false) => "diamond",
            (StateKind::Perceiving, true) => "Mdiamond",
            (_, false) => "circle",
            (_, true) => "doublecircle",
        };
        let style = if s.name == a.initial() {
            ", style=bold"
        } else {
            ""
        };
        writeln!(out, "    {} [shape={shape}{style}];", quote(&s.name)).unwrap();
    }
    let mut edges: Vec<(&str, &str, &str)> = a
        .transitions()
        .map(|t| (t.from, t.input.map_or(EPSILON, |x| x.as_str()), t.to))
        .collect();
    edges.sort_unstable();
    for (from, label, to) in edges {
        writeln!(
            out,
            "    {} -> {} [label={}];",
            quote(from),
            quote(to),
            quote(label)
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn graph_dot(g: &LabelledGraph) -> String {
    let mut out = String::from("digraph G {\n");
    for n in g.nodes() {
        writeln!(out, "    {};", quote(n)).unwrap();
    }
    for e in g.edges() {
        writeln!(
            out,
            "    {} -> {} [label={}];",
            quote(&e.source),
            quote(&e.target),
            quote(e.label.as_str())
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use molperc_core::automata::catalog::Machine;
    use std::collections::BTreeSet;

    fn counts(dot: &str) -> (usize, usize) {
        let edges = dot.lines().filter(|l| l.contains("->")).count();
        let nodes = dot
            .lines()
            .filter(|l| l.contains("[shape=") || (l.ends_with("\";") && !l.contains("->")))
            .count();
        (nodes, edges)
    }

    #[test]
    fn generic_has_six_nodes_and_nine_edges() {
        assert_eq!(counts(&automaton_dot(&Machine::Generic.build())), (6, 9));
    }

    #[test]
    fn perception_shapes_and_epsilon() {
        let dot = automaton_dot(&Machine::Perception.build());
        assert!(dot.contains("\"E\" [shape=doublecircle, style=bold];"));
        assert!(dot.contains("\"E_s\" [shape=diamond];"));
        assert!(dot.contains("\"Es\" [shape=circle];"));
        assert!(dot.contains("\"E_s\" -> \"E\" [label=\"eps\"];"));
        assert_eq!(counts(&dot), (10, 21));
    }

    #[test]
    fn empty_graph_has_an_empty_body() {
        assert_eq!(
            graph_dot(&LabelledGraph::empty(BTreeSet::new())),
            "digraph G {\n}\n"
        );
    }

    #[test]
    fn names_are_escaped() {
        let g = LabelledGraph::new(
            ["a\"b".to_string()].into(),
            BTreeSet::new(),
            BTreeSet::new(),
        )
        .unwrap();
        assert_eq!(graph_dot(&g), "digraph G {\n    \"a\\\"b\";\n}\n");
    }

    #[test]
    fn export_is_repeatable() {
        for m in Machine::ALL {
            let a = m.build();
            assert_eq!(automaton_dot(&a), automaton_dot(&a.clone()));
        }
    }
}
