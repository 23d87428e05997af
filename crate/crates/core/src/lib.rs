//! Perception-based reaction automata and graph-based reaction systems.
//!
//! The crate is split along the two formalisms it combines:
//!
//! * [`automata`]: ε-NFAs over molecular symbols, the built-in enzyme
//!   machines ([`automata::catalog`]), subset construction, minimization,
//!   language equivalence, relabeling isomorphism and injective simulation
//!   embedding, plus the enzyme perception map.
//! * [`lgraph`], [`rs`] and [`perception`]: directed edge-labelled graphs,
//!   selectors and extractions, reactions `(R, I, P)` over a background graph,
//!   their result functions, and the perception layer on top (perception
//!   selectors, perception-enabled reactions, environment compilation and
//!   inhibition).
//!
//! Everything here is pure and allocation-only; file formats, DOT export and
//! the command-line front-end live in the `molperc` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod automata;
pub mod lgraph;
pub mod perception;
pub mod rs;
mod symbol;

pub use automata::{Automaton, AutomatonBuilder, AutomatonError, StateKind};
pub use lgraph::{Edge, Extraction, LabelledGraph, Selector};
pub use symbol::{InvalidSymbol, Symbol, EPSILON};
