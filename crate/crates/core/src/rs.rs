//! Graph-based reactions `b = (R, I, P)` over a background graph and the
//! reaction systems they form.
//!
//! A state `T` is any subgraph of the background. A reaction is enabled by `T`
//! when its reactant graph is a subgraph of `T` and its inhibitor selects
//! nothing of `T`; its result is then its product graph, and otherwise the
//! empty graph over the background's labels, so results can always be united.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::lgraph::{self, pairs_disjoint, GraphError, LabelledGraph, NodeEdgePair, Selector};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum RsError {
    #[error("background graph has no nodes")]
    EmptyBackground,
    #[error("reaction {name:?} is invalid: {violations:?}")]
    InvalidReaction {
        name: String,
        violations: Vec<Violation>,
    },
    #[error("state is not a subgraph of the background")]
    StateOutsideBackground,
    #[error("context {0} is not a subgraph of the background")]
    ContextOutsideBackground(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A broken reaction invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    ReactantsEmpty,
    ProductsEmpty,
    ReactantsOutsideBackground,
    ProductsOutsideBackground,
    InhibitorOutsideBackground(GraphError),
    InhibitorOverlapsReactants,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ReactantsEmpty => f.write_str("reactants empty"),
            Violation::ProductsEmpty => f.write_str("products empty"),
            Violation::ReactantsOutsideBackground => {
                f.write_str("reactants not a subgraph of the background")
            }
            Violation::ProductsOutsideBackground => {
                f.write_str("products not a subgraph of the background")
            }
            Violation::InhibitorOutsideBackground(e) => {
                write!(f, "inhibitor not a selector of the background: {e}")
            }
            Violation::InhibitorOverlapsReactants => f.write_str("inhibitor overlaps reactants"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Reaction {
    pub name: String,
    pub reactants: LabelledGraph,
    pub inhibitor: Selector,
    pub products: LabelledGraph,
}

impl Reaction {
    /// Checks every reaction invariant against `background`.
    pub fn validate(&self, background: &LabelledGraph) -> Vec<Violation> {
        validate_reaction(self, background)
    }

    /// `en_b(T)` without checking that `T` lies in the background.
    pub fn is_enabled_by(&self, state: &LabelledGraph) -> bool {
        self.reactants.is_subgraph_of(state) && pairs_disjoint(&self.inhibitor, &state.extraction())
    }
}

pub fn validate_reaction(b: &Reaction, background: &LabelledGraph) -> Vec<Violation> {
    let mut out = Vec::new();
    if b.reactants.is_empty() {
        out.push(Violation::ReactantsEmpty);
    }
    if b.products.is_empty() {
        out.push(Violation::ProductsEmpty);
    }
    if !b.reactants.is_subgraph_of(background) {
        out.push(Violation::ReactantsOutsideBackground);
    }
    if !b.products.is_subgraph_of(background) {
        out.push(Violation::ProductsOutsideBackground);
    }
    if let Err(e) = b.inhibitor.check(background) {
        out.push(Violation::InhibitorOutsideBackground(e));
    }
    if !lgraph::pair_intersect(&b.inhibitor, &b.reactants.extraction()).is_void() {
        out.push(Violation::InhibitorOverlapsReactants);
    }
    out
}

/// `𝒜 = (B, A)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReactionSystem {
    background: LabelledGraph,
    reactions: Vec<Reaction>,
}

impl ReactionSystem {
    pub fn new(background: LabelledGraph, reactions: Vec<Reaction>) -> Result<Self, RsError> {
        if background.is_empty() {
            return Err(RsError::EmptyBackground);
        }
        for b in &reactions {
            let violations = validate_reaction(b, &background);
            if !violations.is_empty() {
                return Err(RsError::InvalidReaction {
                    name: b.name.clone(),
                    violations,
                });
            }
        }
        Ok(ReactionSystem {
            background,
            reactions,
        })
    }

    pub fn background(&self) -> &LabelledGraph {
        &self.background
    }

    pub fn reactions(&self) -> &[Reaction] {
        &self.reactions
    }

    pub fn reaction(&self, name: &str) -> Option<&Reaction> {
        self.reactions.iter().find(|b| b.name == name)
    }

    /// The empty graph over `Σ_B`, the result of a disabled reaction.
    pub fn empty_state(&self) -> LabelledGraph {
        LabelledGraph::empty(self.background.labels().clone())
    }

    pub fn check_state(&self, state: &LabelledGraph) -> Result<(), RsError> {
        if state.is_subgraph_of(&self.background) {
            Ok(())
        } else {
            Err(RsError::StateOutsideBackground)
        }
    }

    /// `en_b(T)`.
    pub fn enabled(&self, b: &Reaction, state: &LabelledGraph) -> Result<bool, RsError> {
        self.check_state(state)?;
        Ok(b.is_enabled_by(state))
    }

    /// `res_b(T)`.
    pub fn result(&self, b: &Reaction, state: &LabelledGraph) -> Result<LabelledGraph, RsError> {
        Ok(if self.enabled(b, state)? {
            b.products.clone()
        } else {
            self.empty_state()
        })
    }

    /// `res_𝒜(T)`: union of every reaction's result.
    pub fn result_set(&self, state: &LabelledGraph) -> Result<LabelledGraph, RsError> {
        self.check_state(state)?;
        let mut out = self.empty_state();
        for b in self.reactions.iter().filter(|b| b.is_enabled_by(state)) {
            lgraph::union_into(&mut out, &b.products)?;
        }
        Ok(out)
    }

    /// Iterates `T_{i+1} = res_𝒜(T_i) ∪ C_i` for `steps` steps, returning
    /// `steps + 1` states starting with `initial`. Contexts past the end of
    /// `contexts` are empty; nothing persists unless a reaction produces it
    /// or the context supplies it.
    pub fn run(
        &self,
        initial: &LabelledGraph,
        steps: usize,
        contexts: &[LabelledGraph],
    ) -> Result<Vec<LabelledGraph>, RsError> {
        self.check_state(initial)?;
        for (i, c) in contexts.iter().enumerate() {
            if !c.is_subgraph_of(&self.background) {
                return Err(RsError::ContextOutsideBackground(i));
            }
        }
        let mut trace = Vec::with_capacity(steps + 1);
        trace.push(initial.clone());
        for i in 0..steps {
            let mut next = self.result_set(&trace[i])?;
            if let Some(c) = contexts.get(i) {
                lgraph::union_into(&mut next, c)?;
            }
            trace.push(next);
        }
        Ok(trace)
    }
}
