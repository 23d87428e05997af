//! ε-NFAs over molecular symbols.
//!
//! An [`Automaton`] is immutable once built. States and symbols are kept in
//! name order, so two automata with the same states, alphabet, transitions,
//! initial and final states compare equal regardless of how they were built.
//! Missing table entries mean "no transition": runs that strand reject, and
//! no dead state is materialized outside of [`minimize`].

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::symbol::{InvalidSymbol, Symbol, EPSILON};

pub mod catalog;
mod dfa;
mod morphism;
mod perceive;
mod relabel;
mod stateset;

pub use dfa::{determinize, distinguishing_word, language_equivalent, minimize};
pub use morphism::{
    find_relabeling_isomorphism, is_perception_based_reaction, simulation_embedding,
    simulation_embedding_with, simulation_embeddings, Embedding, MembershipMode,
};
pub use perceive::{enzyme_perception, fallback_violations, FallbackViolation};
pub use relabel::{relabel, Relabeling};
pub use stateset::StateSet;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum AutomatonError {
    #[error(transparent)]
    InvalidSymbol(#[from] InvalidSymbol),
    #[error("invalid state name {0:?}")]
    InvalidStateName(String),
    #[error("duplicate state {0:?}")]
    DuplicateState(String),
    #[error("duplicate symbol {0:?}")]
    DuplicateSymbol(String),
    #[error("unknown state {0:?}")]
    UnknownState(String),
    #[error("symbol {0:?} is not in the alphabet")]
    UnknownSymbol(String),
    #[error("no initial state declared")]
    MissingInitial,
    #[error("states must be either all stable/perceiving or all unspecified")]
    MixedPartition,
    #[error("automaton is not deterministic")]
    NotDeterministic,
    #[error("alphabets differ")]
    AlphabetMismatch,
    #[error("unknown catalog machine {0:?} (expected GENERIC, PERCEPTION or PFK)")]
    UnknownMachine(String),
    #[error("relabeling is not injective: {0:?} is hit twice")]
    NotBijective(String),
    #[error("automaton declares no stable/perceiving partition")]
    NoPartition,
    #[error("state {0:?} is not stable")]
    NotStable(String),
    #[error("perception undefined for ({state}, {symbol})")]
    PerceptionUndefined { state: String, symbol: String },
    #[error("perception ambiguous for ({state}, {symbol}): several perceiving successors")]
    PerceptionAmbiguous { state: String, symbol: String },
}

/// Role of a state in a perception-based machine.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StateKind {
    Stable,
    Perceiving,
    #[default]
    Unspecified,
}

impl StateKind {
    pub fn as_str(self) -> &'static str {
        match self {
            StateKind::Stable => "stable",
            StateKind::Perceiving => "perceiving",
            StateKind::Unspecified => "unspecified",
        }
    }
}

impl fmt::Display for StateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct State {
    pub name: String,
    pub kind: StateKind,
}

/// Transition label: a symbol index into the alphabet, or ε.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub(crate) enum Input {
    Epsilon,
    Symbol(usize),
}

/// A single transition `(from, input, to)`; `input == None` is ε.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Transition<'a> {
    pub from: &'a str,
    pub input: Option<&'a Symbol>,
    pub to: &'a str,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Automaton {
    states: Vec<State>,
    alphabet: Vec<Symbol>,
    delta: BTreeSet<(usize, Input, usize)>,
    initial: usize,
    finals: BTreeSet<usize>,
}

/// Result of consuming a word from the initial state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOutcome<'a> {
    pub accepted: bool,
    pub reachable: BTreeSet<&'a str>,
}

impl Automaton {
    pub fn builder() -> AutomatonBuilder {
        AutomatonBuilder::default()
    }

    pub fn states(&self) -> &[State] {
        &self.states
    }

    pub fn alphabet(&self) -> &[Symbol] {
        &self.alphabet
    }

    pub fn initial(&self) -> &str {
        &self.states[self.initial].name
    }

    pub fn finals(&self) -> impl Iterator<Item = &str> + '_ {
        self.finals
            .iter()
            .map(move |&q| self.states[q].name.as_str())
    }

    pub fn state(&self, name: &str) -> Option<&State> {
        self.state_index(name).map(|q| &self.states[q])
    }

    pub fn is_final(&self, name: &str) -> bool {
        self.state_index(name)
            .is_some_and(|q| self.finals.contains(&q))
    }

    pub fn transitions(&self) -> impl Iterator<Item = Transition<'_>> + '_ {
        self.delta.iter().map(move |&(p, x, q)| Transition {
            from: &self.states[p].name,
            input: match x {
                Input::Epsilon => None,
                Input::Symbol(s) => Some(&self.alphabet[s]),
            },
            to: &self.states[q].name,
        })
    }

    pub fn transition_count(&self) -> usize {
        self.delta.len()
    }

    /// True when every state is stable or perceiving.
    pub fn has_partition(&self) -> bool {
        self.states
            .first()
            .is_some_and(|s| s.kind != StateKind::Unspecified)
    }

    /// No ε transitions and at most one successor per `(state, symbol)`.
    pub fn is_deterministic(&self) -> bool {
        let mut prev: Option<(usize, Input)> = None;
        for &(p, x, _) in &self.delta {
            if x == Input::Epsilon || prev == Some((p, x)) {
                return false;
            }
            prev = Some((p, x));
        }
        true
    }

    /// `δ(from, input)`; `input == None` or `Some("eps")` asks for ε successors.
    pub fn successors(
        &self,
        from: &str,
        input: Option<&str>,
    ) -> Result<BTreeSet<&str>, AutomatonError> {
        let p = self.require_state(from)?;
        let x = match input {
            None => Input::Epsilon,
            Some(s) if s == EPSILON => Input::Epsilon,
            Some(s) => Input::Symbol(self.require_symbol(s)?),
        };
        Ok(self
            .succ(p, x)
            .map(|q| self.states[q].name.as_str())
            .collect())
    }

    /// Smallest superset of `set` closed under ε transitions.
    pub fn epsilon_closure<'s, I>(&self, set: I) -> Result<BTreeSet<&str>, AutomatonError>
    where
        I: IntoIterator<Item = &'s str>,
    {
        let mut seed = StateSet::new(self.states.len());
        for name in set {
            seed.insert(self.require_state(name)?);
        }
        Ok(self.names(&self.closure_of(seed)))
    }

    /// Runs `word` from the initial state with standard ε-NFA semantics.
    pub fn run<S: AsRef<str>>(&self, word: &[S]) -> Result<RunOutcome<'_>, AutomatonError> {
        let sim = Simulator::new(self);
        let mut current = sim.start();
        for sym in word {
            let x = self.require_symbol(sym.as_ref())?;
            current = sim.step(&current, x);
        }
        Ok(RunOutcome {
            accepted: sim.is_accepting(&current),
            reachable: self.names(&current),
        })
    }

    pub fn accepts<S: AsRef<str>>(&self, word: &[S]) -> Result<bool, AutomatonError> {
        self.run(word).map(|o| o.accepted)
    }

    pub(crate) fn state_index(&self, name: &str) -> Option<usize> {
        self.states
            .binary_search_by(|s| s.name.as_str().cmp(name))
            .ok()
    }

    pub(crate) fn symbol_index(&self, name: &str) -> Option<usize> {
        self.alphabet
            .binary_search_by(|s| s.as_str().cmp(name))
            .ok()
    }

    pub(crate) fn require_state(&self, name: &str) -> Result<usize, AutomatonError> {
        self.state_index(name)
            .ok_or_else(|| AutomatonError::UnknownState(name.to_string()))
    }

    pub(crate) fn require_symbol(&self, name: &str) -> Result<usize, AutomatonError> {
        self.symbol_index(name)
            .ok_or_else(|| AutomatonError::UnknownSymbol(name.to_string()))
    }

    pub(crate) fn succ(&self, p: usize, x: Input) -> impl Iterator<Item = usize> + '_ {
        self.delta
            .range((p, x, 0)..=(p, x, usize::MAX))
            .map(|&(_, _, q)| q)
    }

    pub(crate) fn edges(&self) -> &BTreeSet<(usize, Input, usize)> {
        &self.delta
    }

    pub(crate) fn closure_of(&self, mut set: StateSet) -> StateSet {
        let mut stack: Vec<usize> = set.iter().collect();
        while let Some(p) = stack.pop() {
            for q in self.succ(p, Input::Epsilon) {
                if set.insert(q) {
                    stack.push(q);
                }
            }
        }
        set
    }

    pub(crate) fn names(&self, set: &StateSet) -> BTreeSet<&str> {
        set.iter().map(|q| self.states[q].name.as_str()).collect()
    }

    /// Assembles an automaton from already-indexed parts; states and alphabet
    /// must be sorted and free of duplicates.
    pub(crate) fn from_parts(
        states: Vec<State>,
        alphabet: Vec<Symbol>,
        delta: BTreeSet<(usize, Input, usize)>,
        initial: usize,
        finals: BTreeSet<usize>,
    ) -> Self {
        debug_assert!(states.windows(2).all(|w| w[0].name < w[1].name));
        debug_assert!(alphabet.windows(2).all(|w| w[0] < w[1]));
        Automaton {
            states,
            alphabet,
            delta,
            initial,
            finals,
        }
    }
}

/// Precomputed ε-closed successor sets, for running many words quickly.
///
/// Symbols are addressed by their index in [`Automaton::alphabet`].
pub struct Simulator<'a> {
    automaton: &'a Automaton,
    start: StateSet,
    finals: StateSet,
    // closure(δ(q, x)) at q * |Σ| + x
    closed_step: Vec<StateSet>,
}

impl<'a> Simulator<'a> {
    pub fn new(automaton: &'a Automaton) -> Self {
        let n = automaton.states.len();
        let k = automaton.alphabet.len();
        let mut closed_step = Vec::with_capacity(n * k);
        for p in 0..n {
            for x in 0..k {
                let mut image = StateSet::new(n);
                for q in automaton.succ(p, Input::Symbol(x)) {
                    image.insert(q);
                }
                closed_step.push(automaton.closure_of(image));
            }
        }
        let mut start = StateSet::new(n);
        start.insert(automaton.initial);
        let mut finals = StateSet::new(n);
        for &q in &automaton.finals {
            finals.insert(q);
        }
        Simulator {
            automaton,
            start: automaton.closure_of(start),
            finals,
            closed_step,
        }
    }

    pub fn automaton(&self) -> &'a Automaton {
        self.automaton
    }

    pub fn start(&self) -> StateSet {
        self.start.clone()
    }

    pub fn step(&self, set: &StateSet, symbol: usize) -> StateSet {
        let k = self.automaton.alphabet.len();
        let mut out = StateSet::new(self.automaton.states.len());
        for p in set.iter() {
            out.union_with(&self.closed_step[p * k + symbol]);
        }
        out
    }

    pub fn is_accepting(&self, set: &StateSet) -> bool {
        set.intersects(&self.finals)
    }
}

/// Collects states, symbols and transitions by name and validates them on
/// [`build`](AutomatonBuilder::build).
#[derive(Clone, Debug, Default)]
pub struct AutomatonBuilder {
    states: Vec<(String, StateKind)>,
    alphabet: Vec<String>,
    transitions: Vec<(String, String, String)>,
    initial: Option<String>,
    finals: Vec<String>,
}

impl AutomatonBuilder {
    pub fn state(mut self, name: impl Into<String>, kind: StateKind) -> Self {
        self.states.push((name.into(), kind));
        self
    }

    pub fn symbol(mut self, name: impl Into<String>) -> Self {
        self.alphabet.push(name.into());
        self
    }

    pub fn symbols<I, S>(mut self, names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.alphabet.extend(names.into_iter().map(Into::into));
        self
    }

    /// Adds `from --input--> to`; `input` may be [`EPSILON`].
    pub fn transition(
        mut self,
        from: impl Into<String>,
        input: impl Into<String>,
        to: impl Into<String>,
    ) -> Self {
        self.transitions
            .push((from.into(), input.into(), to.into()));
        self
    }

    pub fn initial(mut self, name: impl Into<String>) -> Self {
        self.initial = Some(name.into());
        self
    }

    pub fn final_state(mut self, name: impl Into<String>) -> Self {
        self.finals.push(name.into());
        self
    }

    pub fn build(self) -> Result<Automaton, AutomatonError> {
        let mut states: Vec<State> = Vec::with_capacity(self.states.len());
        for (name, kind) in self.states {
            if name.is_empty() {
                return Err(AutomatonError::InvalidStateName(name));
            }
            states.push(State { name, kind });
        }
        states.sort();
        for w in states.windows(2) {
            if w[0].name == w[1].name {
                return Err(AutomatonError::DuplicateState(w[0].name.clone()));
            }
        }
        let partitioned = states
            .iter()
            .filter(|s| s.kind != StateKind::Unspecified)
            .count();
        if partitioned != 0 && partitioned != states.len() {
            return Err(AutomatonError::MixedPartition);
        }

        let mut alphabet = self
            .alphabet
            .into_iter()
            .map(Symbol::new)
            .collect::<Result<Vec<_>, _>>()?;
        alphabet.sort();
        for w in alphabet.windows(2) {
            if w[0] == w[1] {
                return Err(AutomatonError::DuplicateSymbol(w[0].to_string()));
            }
        }

        let mut automaton = Automaton {
            states,
            alphabet,
            delta: BTreeSet::new(),
            initial: 0,
            finals: BTreeSet::new(),
        };
        let initial = self.initial.ok_or(AutomatonError::MissingInitial)?;
        automaton.initial = automaton.require_state(&initial)?;
        for f in &self.finals {
            let q = automaton.require_state(f)?;
            automaton.finals.insert(q);
        }
        for (from, input, to) in &self.transitions {
            let p = automaton.require_state(from)?;
            let q = automaton.require_state(to)?;
            let x = if input == EPSILON {
                Input::Epsilon
            } else {
                Input::Symbol(automaton.require_symbol(input)?)
            };
            automaton.delta.insert((p, x, q));
        }
        Ok(automaton)
    }
}
