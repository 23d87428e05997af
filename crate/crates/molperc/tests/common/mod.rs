//! Seeded generators of random automata, graphs, systems and environments.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use molperc_core::lgraph::Selector;
use molperc_core::perception::{EnablerSet, Environment, InhibitorAlphabet};
use molperc_core::rs::{Reaction, ReactionSystem};
use molperc_core::{Automaton, Edge, LabelledGraph, StateKind, Symbol};
use rand::seq::SliceRandom;
use rand::Rng;

const STATE_NAMES: [&str; 10] = [
    "E", "Es", "ES", "E_s", "q 1", "PFK·ATP", "\"q\"", "{a,b}", "x\\y", "z",
];
const SYMBOLS: [&str; 6] = ["s", "c", "p", "r", "F6P", "x_1"];

pub fn sym(s: &str) -> Symbol {
    Symbol::new(s).unwrap()
}

fn sample<'a, R: Rng>(rng: &mut R, pool: &[&'a str], min: usize) -> Vec<&'a str> {
    let n = rng.gen_range(min..=pool.len());
    let mut v: Vec<&str> = pool.choose_multiple(rng, n).copied().collect();
    v.sort_unstable();
    v
}

pub fn automaton<R: Rng>(rng: &mut R) -> Automaton {
    let states = sample(rng, &STATE_NAMES, 1);
    let alphabet = sample(rng, &SYMBOLS, 0);
    let partitioned = rng.gen_bool(0.5);
    let mut b = Automaton::builder()
        .symbols(alphabet.iter().copied())
        .initial(*states.choose(rng).unwrap());
    for q in &states {
        let kind = match (partitioned, rng.gen_bool(0.5)) {
            (false, _) => StateKind::Unspecified,
            (true, true) => StateKind::Stable,
            (true, false) => StateKind::Perceiving,
        };
        b = b.state(*q, kind);
        if rng.gen_bool(0.3) {
            b = b.final_state(*q);
        }
    }
    for _ in 0..rng.gen_range(0..3 * states.len()) {
        let input = if alphabet.is_empty() || rng.gen_bool(0.2) {
            "eps"
        } else {
            alphabet.choose(rng).unwrap()
        };
        b = b.transition(
            *states.choose(rng).unwrap(),
            input,
            *states.choose(rng).unwrap(),
        );
    }
    b.build().unwrap()
}

pub fn graph<R: Rng>(rng: &mut R, nodes: &[&str], labels: &[&str], edges: usize) -> LabelledGraph {
    let mut g = LabelledGraph::empty(labels.iter().map(|l| sym(l)).collect());
    for n in nodes {
        g.add_node(*n);
    }
    if !labels.is_empty() && !nodes.is_empty() {
        for _ in 0..edges {
            let e = Edge::new(
                *nodes.choose(rng).unwrap(),
                *nodes.choose(rng).unwrap(),
                sym(labels.choose(rng).unwrap()),
            );
            g.add_edge(e).unwrap();
        }
    }
    g
}

pub fn random_graph<R: Rng>(rng: &mut R) -> LabelledGraph {
    let nodes = sample(rng, &["n0", "n1", "n2", "n3", "n 4", "e"], 0);
    let labels = sample(rng, &["a", "b", "i", "F6P"], 0);
    let edges = rng.gen_range(0..10);
    graph(rng, &nodes, &labels, edges)
}

/// Each node and edge of `g` kept with probability one half; edges drag
/// their endpoints along.
pub fn subgraph<R: Rng>(rng: &mut R, g: &LabelledGraph) -> LabelledGraph {
    let mut h = LabelledGraph::empty(g.labels().clone());
    for n in g.nodes() {
        if rng.gen_bool(0.5) {
            h.add_node(n.clone());
        }
    }
    for e in g.edges() {
        if rng.gen_bool(0.5) {
            h.add_node(e.source.clone());
            h.add_node(e.target.clone());
            h.add_edge(e.clone()).unwrap();
        }
    }
    h
}

pub fn selector<R: Rng>(rng: &mut R, g: &LabelledGraph, density: f64) -> Selector {
    Selector::new(
        g.nodes()
            .iter()
            .filter(|_| rng.gen_bool(density))
            .cloned()
            .collect(),
        g.edges()
            .iter()
            .filter(|_| rng.gen_bool(density))
            .cloned()
            .collect(),
    )
}

pub fn reaction<R: Rng>(rng: &mut R, background: &LabelledGraph, name: &str) -> Reaction {
    let nonempty = |rng: &mut R| {
        let mut h = subgraph(rng, background);
        if h.is_empty() {
            h.add_node(background.nodes().iter().next().unwrap().clone());
        }
        h
    };
    let reactants = nonempty(rng);
    let products = nonempty(rng);
    let raw = selector(rng, background, 0.2);
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

pub fn system<R: Rng>(rng: &mut R) -> ReactionSystem {
    let nodes = sample(rng, &["n0", "n1", "n2", "n3", "n4"], 1);
    let edges = rng.gen_range(0..12);
    let background = graph(rng, &nodes, &["a", "b", "i"], edges);
    let reactions = (0..rng.gen_range(0..4))
        .map(|i| reaction(rng, &background, &format!("b{i}")))
        .collect();
    ReactionSystem::new(background, reactions).unwrap()
}

pub fn environment<R: Rng>(rng: &mut R) -> Environment {
    let enzymes = sample(rng, &["e0", "e1", "e2"], 0);
    let molecules = ["m0", "m1", "m2"];
    let mut g = LabelledGraph::empty(["c", "i", "p", "r", "s"].iter().map(|l| sym(l)).collect());
    for n in enzymes.iter().chain(&molecules) {
        g.add_node(*n);
    }
    for e in &enzymes {
        for _ in 0..rng.gen_range(0..4) {
            let label = ["s", "c", "i"].choose(rng).unwrap();
            g.add_edge(Edge::new(*e, *molecules.choose(rng).unwrap(), sym(label)))
                .unwrap();
        }
    }
    for _ in 0..rng.gen_range(0..3) {
        let label = ["p", "r"].choose(rng).unwrap();
        g.add_edge(Edge::new(
            *molecules.choose(rng).unwrap(),
            *molecules.choose(rng).unwrap(),
            sym(label),
        ))
        .unwrap();
    }
    let roles: BTreeMap<Symbol, Symbol> = if rng.gen_bool(0.3) {
        [(sym("s"), sym("s"))].into()
    } else {
        BTreeMap::new()
    };
    Environment {
        graph: g,
        enzymes: enzymes.iter().map(|e| e.to_string()).collect(),
        enabler: EnablerSet(sample(rng, &["c", "s"], 0).into_iter().map(sym).collect()),
        inhibitors: InhibitorAlphabet([sym("i")].into_iter().collect::<BTreeSet<_>>()),
        roles,
    }
}
