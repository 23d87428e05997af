//! Structural comparison of automata: relabeling isomorphism and injective
//! simulation embedding.
//!
//! Both searches are exact backtracking over a state bijection/injection and a
//! symbol bijection. States are visited in breadth-first order from the
//! initial state so that most transitions get checked as soon as both
//! endpoints are placed; an unmapped symbol is bound the first time a
//! transition carrying it is checked.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::catalog::Machine;
use super::{Automaton, Input, Relabeling};
use crate::symbol::Symbol;

/// Witness that every transition of one automaton appears, renamed, in
/// another.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Embedding {
    pub states: BTreeMap<String, String>,
    pub symbols: BTreeMap<Symbol, Symbol>,
}

impl Embedding {
    /// `other ∘ self`: first `self`, then `other`.
    pub fn then(&self, other: &Embedding) -> Embedding {
        Embedding {
            states: self
                .states
                .iter()
                .filter_map(|(a, b)| other.states.get(b).map(|c| (a.clone(), c.clone())))
                .collect(),
            symbols: self
                .symbols
                .iter()
                .filter_map(|(a, b)| other.symbols.get(b).map(|c| (a.clone(), c.clone())))
                .collect(),
        }
    }

    /// Checks the witness against both automata.
    pub fn verify(&self, a: &Automaton, b: &Automaton) -> bool {
        let states_ok = a.states.iter().all(|s| {
            self.states
                .get(&s.name)
                .is_some_and(|t| b.state(t).is_some())
        }) && self.states.values().collect::<BTreeSet<_>>().len()
            == self.states.len();
        let symbols_ok = a.alphabet.len() == b.alphabet.len()
            && a.alphabet.iter().all(|s| {
                self.symbols
                    .get(s)
                    .is_some_and(|t| b.symbol_index(t.as_str()).is_some())
            })
            && self.symbols.values().collect::<BTreeSet<_>>().len() == self.symbols.len();
        if !states_ok || !symbols_ok {
            return false;
        }
        if self.states[a.initial()] != b.initial() {
            return false;
        }
        if !a.finals().all(|f| b.is_final(&self.states[f])) {
            return false;
        }
        a.transitions().all(|t| {
            let input = t.input.map(|s| self.symbols[s].as_str());
            b.successors(&self.states[t.from], input)
                .is_ok_and(|succ| succ.contains(self.states[t.to].as_str()))
        })
    }
}

/// Which decidable relation stands in for "same behaviour as the perception
/// machine".
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MembershipMode {
    /// Identical transition graph after renaming states and symbols.
    Isomorphism,
    /// Every transition maps injectively onto a transition of the perception
    /// machine.
    Embedding,
}

/// A renaming of `a` onto `b` that preserves initial and final states, state
/// kinds, ε edges and every transition, or `None`.
pub fn find_relabeling_isomorphism(a: &Automaton, b: &Automaton) -> Option<Relabeling> {
    let (states, symbols) = Search::new(a, b, true)?.solve()?;
    Some(Relabeling {
        symbols: symbols
            .into_iter()
            .enumerate()
            .map(|(x, y)| (a.alphabet[x].clone(), b.alphabet[y].clone()))
            .collect(),
        states: states
            .into_iter()
            .enumerate()
            .map(|(p, q)| (a.states[p].name.clone(), b.states[q].name.clone()))
            .collect(),
    })
}

/// An injective state map and a symbol bijection carrying every transition of
/// `a` onto a transition of `b`, the initial state onto the initial state and
/// final states into final states; `None` if there is none.
pub fn simulation_embedding(a: &Automaton, b: &Automaton) -> Option<Embedding> {
    simulation_embedding_with(a, b, &BTreeMap::new())
}

/// Like [`simulation_embedding`], with part of the symbol map fixed in
/// advance. Entries naming symbols outside either alphabet yield `None`.
pub fn simulation_embedding_with(
    a: &Automaton,
    b: &Automaton,
    fixed: &BTreeMap<Symbol, Symbol>,
) -> Option<Embedding> {
    let mut search = Search::new(a, b, false)?;
    search.fix_symbols(fixed)?;
    let (states, symbols) = search.solve()?;
    Some(embedding_from(a, b, states, symbols))
}

/// Every embedding of `a` into `b`. Symmetric machines (the
/// phosphofructokinase machine cannot tell substrate from coenzyme, nor
/// product from coenzyme result) admit several.
pub fn simulation_embeddings(a: &Automaton, b: &Automaton) -> Vec<Embedding> {
    let Some(mut search) = Search::new(a, b, false) else {
        return Vec::new();
    };
    search.collect_all = true;
    search.place(0);
    search
        .found
        .into_iter()
        .map(|(states, symbols)| embedding_from(a, b, states, symbols))
        .collect()
}

fn embedding_from(
    a: &Automaton,
    b: &Automaton,
    states: Vec<usize>,
    symbols: Vec<usize>,
) -> Embedding {
    Embedding {
        symbols: symbols
            .into_iter()
            .enumerate()
            .map(|(x, y)| (a.alphabet[x].clone(), b.alphabet[y].clone()))
            .collect(),
        states: states
            .into_iter()
            .enumerate()
            .map(|(p, q)| (a.states[p].name.clone(), b.states[q].name.clone()))
            .collect(),
    }
}

/// Membership of `a` in the behaviour class of the perception machine.
pub fn is_perception_based_reaction(a: &Automaton, mode: MembershipMode) -> bool {
    let reference = Machine::Perception.build();
    match mode {
        MembershipMode::Isomorphism => find_relabeling_isomorphism(a, &reference).is_some(),
        MembershipMode::Embedding => simulation_embedding(a, &reference).is_some(),
    }
}

const UNSET: usize = usize::MAX;

#[derive(Clone, Copy, Default, PartialEq, Eq)]
struct Degree {
    out: usize,
    inc: usize,
    eps_out: usize,
}

struct Search<'a> {
    a: &'a Automaton,
    b: &'a Automaton,
    exact: bool,
    order: Vec<usize>,
    a_deg: Vec<Degree>,
    b_deg: Vec<Degree>,
    state_map: Vec<usize>,
    state_used: Vec<bool>,
    sym_map: Vec<usize>,
    sym_used: Vec<bool>,
    collect_all: bool,
    found: Vec<(Vec<usize>, Vec<usize>)>,
}

impl<'a> Search<'a> {
    fn new(a: &'a Automaton, b: &'a Automaton, exact: bool) -> Option<Self> {
        let (na, nb) = (a.states.len(), b.states.len());
        if a.alphabet.len() != b.alphabet.len() {
            return None;
        }
        if exact {
            if na != nb || a.delta.len() != b.delta.len() || a.finals.len() != b.finals.len() {
                return None;
            }
        } else if na > nb || a.delta.len() > b.delta.len() || a.finals.len() > b.finals.len() {
            return None;
        }
        Some(Search {
            a,
            b,
            exact,
            order: visit_order(a),
            a_deg: degrees(a),
            b_deg: degrees(b),
            state_map: vec![UNSET; na],
            state_used: vec![false; nb],
            sym_map: vec![UNSET; a.alphabet.len()],
            sym_used: vec![false; b.alphabet.len()],
            collect_all: false,
            found: Vec::new(),
        })
    }

    fn fix_symbols(&mut self, fixed: &BTreeMap<Symbol, Symbol>) -> Option<()> {
        for (x, y) in fixed {
            let x = self.a.symbol_index(x.as_str())?;
            let y = self.b.symbol_index(y.as_str())?;
            if self.sym_map[x] != UNSET || self.sym_used[y] {
                return None;
            }
            self.sym_map[x] = y;
            self.sym_used[y] = true;
        }
        Some(())
    }

    fn solve(mut self) -> Option<(Vec<usize>, Vec<usize>)> {
        if self.place(0) {
            self.found.pop()
        } else {
            None
        }
    }

    /// Records a complete state map; returns true to stop searching.
    fn complete(&mut self) -> bool {
        // Symbols that label no transition of `a` pair up with what is left.
        let mut symbols = self.sym_map.clone();
        let mut free = (0..self.sym_used.len()).filter(|&y| !self.sym_used[y]);
        for y in symbols.iter_mut() {
            if *y == UNSET {
                match free.next() {
                    Some(f) => *y = f,
                    None => return false,
                }
            }
        }
        self.found.push((self.state_map.clone(), symbols));
        !self.collect_all
    }

    fn compatible(&self, p: usize, q: usize) -> bool {
        let (a, b) = (self.a, self.b);
        let (da, db) = (self.a_deg[p], self.b_deg[q]);
        let a_init = p == a.initial;
        let b_init = q == b.initial;
        let a_fin = a.finals.contains(&p);
        let b_fin = b.finals.contains(&q);
        if self.exact {
            a_init == b_init && a_fin == b_fin && a.states[p].kind == b.states[q].kind && da == db
        } else {
            (!a_init || b_init)
                && (!a_fin || b_fin)
                && da.out <= db.out
                && da.inc <= db.inc
                && da.eps_out <= db.eps_out
        }
    }

    fn place(&mut self, k: usize) -> bool {
        let Some(&p) = self.order.get(k) else {
            return self.complete();
        };
        let nb = self.b.states.len();
        // Same index first, so that an automaton maps onto itself by identity.
        let candidates = core::iter::once(p)
            .filter(|&q| q < nb)
            .chain((0..nb).filter(|&q| q != p));
        for q in candidates {
            if self.state_used[q] || !self.compatible(p, q) {
                continue;
            }
            self.state_map[p] = q;
            self.state_used[q] = true;
            let pending: Vec<(usize, Input, usize)> = self
                .a
                .delta
                .iter()
                .copied()
                .filter(|&(s, _, t)| {
                    (s == p || t == p) && self.state_map[s] != UNSET && self.state_map[t] != UNSET
                })
                .collect();
            if self.bind(&pending, 0, k) {
                return true;
            }
            self.state_map[p] = UNSET;
            self.state_used[q] = false;
        }
        false
    }

    fn bind(&mut self, edges: &[(usize, Input, usize)], i: usize, k: usize) -> bool {
        let Some(&(s, x, t)) = edges.get(i) else {
            return self.place(k + 1);
        };
        let (ms, mt) = (self.state_map[s], self.state_map[t]);
        match x {
            Input::Epsilon => {
                self.b.delta.contains(&(ms, Input::Epsilon, mt)) && self.bind(edges, i + 1, k)
            }
            Input::Symbol(x) if self.sym_map[x] != UNSET => {
                self.b
                    .delta
                    .contains(&(ms, Input::Symbol(self.sym_map[x]), mt))
                    && self.bind(edges, i + 1, k)
            }
            Input::Symbol(x) => {
                let nb = self.sym_used.len();
                let candidates = core::iter::once(x)
                    .filter(|&y| y < nb)
                    .chain((0..nb).filter(|&y| y != x));
                for y in candidates {
                    if self.sym_used[y] || !self.b.delta.contains(&(ms, Input::Symbol(y), mt)) {
                        continue;
                    }
                    self.sym_map[x] = y;
                    self.sym_used[y] = true;
                    if self.bind(edges, i + 1, k) {
                        return true;
                    }
                    self.sym_map[x] = UNSET;
                    self.sym_used[y] = false;
                }
                false
            }
        }
    }
}

fn degrees(a: &Automaton) -> Vec<Degree> {
    let mut d = vec![Degree::default(); a.states.len()];
    for &(p, x, q) in &a.delta {
        d[p].out += 1;
        d[q].inc += 1;
        if x == Input::Epsilon {
            d[p].eps_out += 1;
        }
    }
    d
}

/// Breadth-first over the undirected transition graph, initial state first;
/// disconnected states follow in index order.
fn visit_order(a: &Automaton) -> Vec<usize> {
    let n = a.states.len();
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for &(p, _, q) in &a.delta {
        adj[p].insert(q);
        adj[q].insert(p);
    }
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let roots = core::iter::once(a.initial).chain(0..n);
    for root in roots {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(p) = queue.pop_front() {
            order.push(p);
            for &q in &adj[p] {
                if !seen[q] {
                    seen[q] = true;
                    queue.push_back(q);
                }
            }
        }
    }
    order
}
