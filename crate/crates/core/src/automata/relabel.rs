use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use super::{Automaton, AutomatonError, Input, State};
use crate::symbol::Symbol;

/// Renaming of symbols and states.
///
/// Names without an entry map to themselves, so a relabeling only needs to
/// list what changes. Applying it fails if two names land on the same image.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Relabeling {
    pub symbols: BTreeMap<Symbol, Symbol>,
    pub states: BTreeMap<String, String>,
}

impl Relabeling {
    pub fn identity() -> Self {
        Relabeling::default()
    }

    pub fn symbol<'a>(&'a self, s: &'a Symbol) -> &'a Symbol {
        self.symbols.get(s).unwrap_or(s)
    }

    pub fn state<'a>(&'a self, q: &'a str) -> &'a str {
        self.states.get(q).map(String::as_str).unwrap_or(q)
    }

    pub fn word(&self, word: &[Symbol]) -> Vec<Symbol> {
        word.iter().map(|s| self.symbol(s).clone()).collect()
    }

    /// Swaps keys and values. Only meaningful for injective maps.
    pub fn inverse(&self) -> Relabeling {
        Relabeling {
            symbols: self
                .symbols
                .iter()
                .map(|(a, b)| (b.clone(), a.clone()))
                .collect(),
            states: self
                .states
                .iter()
                .map(|(a, b)| (b.clone(), a.clone()))
                .collect(),
        }
    }

    /// Drops entries that map a name to itself.
    pub fn normalized(mut self) -> Relabeling {
        self.symbols.retain(|a, b| a != b);
        self.states.retain(|a, b| a != b);
        self
    }
}

/// Renames the states and symbols of `a`, keeping its structure.
pub fn relabel(a: &Automaton, m: &Relabeling) -> Result<Automaton, AutomatonError> {
    let symbol_images: Vec<Symbol> = a.alphabet.iter().map(|s| m.symbol(s).clone()).collect();
    let state_images: Vec<State> = a
        .states
        .iter()
        .map(|s| State {
            name: String::from(m.state(&s.name)),
            kind: s.kind,
        })
        .collect();

    let mut seen = BTreeSet::new();
    for s in &symbol_images {
        if !seen.insert(s.as_str()) {
            return Err(AutomatonError::NotBijective(s.as_str().into()));
        }
    }
    let mut seen = BTreeSet::new();
    for s in &state_images {
        if s.name.is_empty() {
            return Err(AutomatonError::InvalidStateName(s.name.clone()));
        }
        if !seen.insert(s.name.as_str()) {
            return Err(AutomatonError::NotBijective(s.name.clone()));
        }
    }

    // Re-sort and translate indices.
    let mut symbol_order: Vec<usize> = (0..symbol_images.len()).collect();
    symbol_order.sort_by(|&i, &j| symbol_images[i].cmp(&symbol_images[j]));
    let mut symbol_pos = alloc::vec![0; symbol_images.len()];
    for (new, &old) in symbol_order.iter().enumerate() {
        symbol_pos[old] = new;
    }
    let mut state_order: Vec<usize> = (0..state_images.len()).collect();
    state_order.sort_by(|&i, &j| state_images[i].name.cmp(&state_images[j].name));
    let mut state_pos = alloc::vec![0; state_images.len()];
    for (new, &old) in state_order.iter().enumerate() {
        state_pos[old] = new;
    }

    let alphabet = symbol_order
        .iter()
        .map(|&i| symbol_images[i].clone())
        .collect();
    let states = state_order
        .iter()
        .map(|&i| state_images[i].clone())
        .collect();
    let delta = a
        .delta
        .iter()
        .map(|&(p, x, q)| {
            let x = match x {
                Input::Epsilon => Input::Epsilon,
                Input::Symbol(s) => Input::Symbol(symbol_pos[s]),
            };
            (state_pos[p], x, state_pos[q])
        })
        .collect();
    let finals = a.finals.iter().map(|&q| state_pos[q]).collect();
    Ok(Automaton::from_parts(
        states,
        alphabet,
        delta,
        state_pos[a.initial],
        finals,
    ))
}
