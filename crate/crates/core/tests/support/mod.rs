#![allow(dead_code)]

use std::collections::BTreeSet;

use molperc_core::lgraph::Selector;
use molperc_core::rs::{Reaction, ReactionSystem};
use molperc_core::{Automaton, Edge, LabelledGraph, StateKind, Symbol};
use proptest::prelude::*;

pub const ALPHABET: [&str; 2] = ["a", "b"];
pub const LABELS: [&str; 3] = ["a", "b", "i"];
pub const NODES: usize = 5;

pub fn sym(s: &str) -> Symbol {
    Symbol::new(s).unwrap()
}

pub fn word(w: &[&str]) -> Vec<Symbol> {
    w.iter().map(|s| sym(s)).collect()
}

/// Random ε-NFAs over `{a, b}` with up to `max_states` states.
pub fn arb_automaton(max_states: usize) -> impl Strategy<Value = Automaton> {
    (1..=max_states).prop_flat_map(|n| {
        let triple = (0..n, 0..=ALPHABET.len(), 0..n);
        (
            prop::collection::vec(triple, 0..3 * n + 2),
            0..n,
            prop::collection::btree_set(0..n, 0..=n),
        )
            .prop_map(move |(delta, initial, finals)| {
                let name = |q: usize| format!("q{q}");
                let mut b = Automaton::builder()
                    .symbols(ALPHABET)
                    .initial(name(initial));
                for q in 0..n {
                    b = b.state(name(q), StateKind::Unspecified);
                }
                for (p, x, q) in delta {
                    let input = ALPHABET.get(x).copied().unwrap_or("eps");
                    b = b.transition(name(p), input, name(q));
                }
                for f in finals {
                    b = b.final_state(name(f));
                }
                b.build().unwrap()
            })
    })
}

pub fn arb_word(max_len: usize) -> impl Strategy<Value = Vec<&'static str>> {
    prop::collection::vec(prop::sample::select(&ALPHABET[..]), 0..=max_len)
}

fn node(i: usize) -> String {
    format!("n{i}")
}

/// Random background graphs over nodes `n0..n4` and labels `{a, b, i}`.
pub fn arb_background() -> impl Strategy<Value = LabelledGraph> {
    prop::collection::btree_set((0..NODES, 0..NODES, 0..LABELS.len()), 0..14).prop_map(|es| {
        LabelledGraph::new(
            (0..NODES).map(node).collect(),
            LABELS.iter().map(|l| sym(l)).collect(),
            es.into_iter()
                .map(|(s, t, l)| Edge::new(node(s), node(t), sym(LABELS[l])))
                .collect(),
        )
        .unwrap()
    })
}

fn picked<T: Clone>(items: &BTreeSet<T>, mask: u64) -> impl Iterator<Item = T> + '_ {
    items
        .iter()
        .enumerate()
        .filter(move |(i, _)| mask >> (i % 64) & 1 == 1)
        .map(|(_, x)| x.clone())
}

/// The subgraph of `g` picked by two bit masks: edges by `edge_mask`, and
/// nodes by `node_mask` plus every endpoint of a picked edge.
pub fn subgraph(g: &LabelledGraph, edge_mask: u64, node_mask: u64) -> LabelledGraph {
    let edges: BTreeSet<Edge> = picked(g.edges(), edge_mask).collect();
    let mut nodes: BTreeSet<String> = picked(g.nodes(), node_mask).collect();
    for e in &edges {
        nodes.insert(e.source.clone());
        nodes.insert(e.target.clone());
    }
    LabelledGraph::new(nodes, g.labels().clone(), edges).unwrap()
}

/// Like [`subgraph`] but never empty (falls back to the smallest node).
pub fn nonempty_subgraph(g: &LabelledGraph, edge_mask: u64, node_mask: u64) -> LabelledGraph {
    let mut h = subgraph(g, edge_mask, node_mask);
    if h.is_empty() {
        h.add_node(g.nodes().iter().next().unwrap().clone());
    }
    h
}

pub fn selector(g: &LabelledGraph, edge_mask: u64, node_mask: u64) -> Selector {
    Selector::new(
        picked(g.nodes(), node_mask).collect(),
        picked(g.edges(), edge_mask).collect(),
    )
}

/// A valid reaction over `g` built from six masks.
pub fn reaction(g: &LabelledGraph, name: &str, m: [u64; 6]) -> Reaction {
    let reactants = nonempty_subgraph(g, m[0], m[1]);
    let products = nonempty_subgraph(g, m[2], m[3]);
    let raw = selector(g, m[4], m[5]);
    let inhibitor = Selector::new(
        raw.nodes.difference(reactants.nodes()).cloned().collect(),
        raw.edges.difference(reactants.edges()).cloned().collect(),
    );
    Reaction {
        name: name.into(),
        reactants,
        inhibitor,
        products,
    }
}

pub fn arb_system() -> impl Strategy<Value = ReactionSystem> {
    (
        arb_background(),
        prop::collection::vec(any::<[u64; 6]>(), 0..4),
    )
        .prop_map(|(bg, masks)| {
            let reactions = masks
                .into_iter()
                .enumerate()
                .map(|(i, m)| reaction(&bg, &format!("b{i}"), m))
                .collect();
            ReactionSystem::new(bg, reactions).unwrap()
        })
}
