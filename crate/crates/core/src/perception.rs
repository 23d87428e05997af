//! Molecular perception on top of graph-based reaction systems.
//!
//! An enzyme perceives its cognate molecules through edges of the background
//! graph labelled with symbols of the reaction enabler `Π`. The perception
//! selector `𝒮_Π` picks out exactly those edges and their endpoints. A
//! reaction is *perception-enabled* by a state `T` when
//!
//! * its reactants (and, in [`Enablement::Strict`] mode, its products) are
//!   subgraphs of `T`,
//! * its reactant extraction meets `𝒮_Π`, and
//! * its inhibitor selects nothing of `T`.
//!
//! [`compile_environment`] turns an enzyme environment into a reaction system
//! with one reaction per enzyme instance; [`CompiledEnvironment::is_inhibited`]
//! then answers whether a configuration switches every reaction off through
//! its inhibitor.
//!
//! The compiler is a documented stand-in, not a reproduction of any external
//! construction. For each enzyme node `e`:
//!
//! * `R` is the star of `e` with one edge per enabler symbol (the smallest
//!   target when `e` has several edges with that label);
//! * `P` is the star of `e` with one fresh edge per product symbol, pointing
//!   to a fresh node added to the background: the product, plus the coenzyme
//!   result when the enabler contains the coenzyme;
//! * `I` selects every inhibitor-labelled edge incident to `e`, and no nodes,
//!   so it never meets `U(R)`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::automata::catalog::Machine;
use crate::automata::{simulation_embedding_with, Automaton};
use crate::lgraph::{pairs_disjoint, Edge, GraphError, LabelledGraph, NodeEdgePair, Selector};
use crate::rs::{Reaction, ReactionSystem, RsError};
use crate::symbol::Symbol;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum PerceptionError {
    #[error("automaton does not embed into the perception machine")]
    NotAPerceptionReaction,
    #[error("enabler symbol {0} is not a label of the graph")]
    EnablerOutsideLabels(Symbol),
    #[error("enabler symbol {0} is not in the automaton alphabet")]
    EnablerOutsideAlphabet(Symbol),
    #[error("enabler contains the product symbol {0}")]
    EnablerContainsProduct(Symbol),
    #[error("inhibitor symbol {0} is also in the automaton alphabet")]
    InhibitorInAlphabet(Symbol),
    #[error("symbol {0} is both an enabler and an inhibitor")]
    EnablerIsInhibitor(Symbol),
    #[error("graph label {0} is neither in the automaton alphabet nor an inhibitor")]
    StrayLabel(Symbol),
    #[error("enzyme {0:?} is not a node of the graph")]
    UnknownEnzyme(String),
    #[error("edge {0} carries an enabler or inhibitor label but does not leave an enzyme")]
    EdgeNotFromEnzyme(Edge),
    #[error(transparent)]
    Rs(#[from] RsError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// The reaction enabler `Π`: cognate symbols an enzyme must perceive.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct EnablerSet(pub BTreeSet<Symbol>);

/// Inhibitor alphabet `Γ`, disjoint from the automaton alphabet.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct InhibitorAlphabet(pub BTreeSet<Symbol>);

impl EnablerSet {
    pub fn contains(&self, s: &Symbol) -> bool {
        self.0.contains(s)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Symbol> {
        self.0.iter()
    }
}

impl InhibitorAlphabet {
    pub fn contains(&self, s: &Symbol) -> bool {
        self.0.contains(s)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Symbol> {
        self.0.iter()
    }
}

impl FromIterator<Symbol> for EnablerSet {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Self {
        EnablerSet(iter.into_iter().collect())
    }
}

impl FromIterator<Symbol> for InhibitorAlphabet {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Self {
        InhibitorAlphabet(iter.into_iter().collect())
    }
}

/// Enzyme instances placed in a molecular configuration graph.
///
/// Species identity sits on edge labels, directed from the perceiving enzyme
/// to the perceived molecule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Environment {
    pub graph: LabelledGraph,
    pub enzymes: BTreeSet<String>,
    pub enabler: EnablerSet,
    pub inhibitors: InhibitorAlphabet,
    /// Optional partial symbol map from the automaton onto the perception
    /// machine (`s`, `c`, `p`, `r`), to pin roles that the automaton's shape
    /// leaves open.
    pub roles: BTreeMap<Symbol, Symbol>,
}

impl Environment {
    /// Checks the environment on its own: enzymes are nodes, and every
    /// enabler- or inhibitor-labelled edge leaves an enzyme.
    pub fn validate(&self) -> Result<(), PerceptionError> {
        if let Some(e) = self
            .enzymes
            .iter()
            .find(|e| !self.graph.nodes().contains(*e))
        {
            return Err(PerceptionError::UnknownEnzyme(e.clone()));
        }
        if let Some(s) = self.enabler.iter().find(|s| self.inhibitors.contains(s)) {
            return Err(PerceptionError::EnablerIsInhibitor(s.clone()));
        }
        for e in self.graph.edges() {
            let special = self.enabler.contains(&e.label) || self.inhibitors.contains(&e.label);
            if special && !self.enzymes.contains(&e.source) {
                return Err(PerceptionError::EdgeNotFromEnzyme(e.clone()));
            }
        }
        Ok(())
    }
}

/// Which subgraphs of the state a perception-enabled reaction needs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Enablement {
    /// Reactants and products must both be present in the state.
    #[default]
    Strict,
    /// Only the reactants must be present, as for plain enablement.
    Relaxed,
}

/// `𝒮_Π`: all edges labelled in `Π` and their endpoints.
pub fn perception_selector(
    background: &LabelledGraph,
    enabler: &EnablerSet,
) -> Result<Selector, PerceptionError> {
    if let Some(s) = enabler.iter().find(|s| !background.labels().contains(*s)) {
        return Err(PerceptionError::EnablerOutsideLabels(s.clone()));
    }
    let edges: BTreeSet<Edge> = background
        .edges()
        .iter()
        .filter(|e| enabler.contains(&e.label))
        .cloned()
        .collect();
    let nodes = edges
        .iter()
        .flat_map(|e| [e.source.clone(), e.target.clone()])
        .collect();
    Ok(Selector::new(nodes, edges))
}

/// Evaluates perception-enabled reactions of one system under one selector.
#[derive(Clone, Debug)]
pub struct Perceiver<'a> {
    system: &'a ReactionSystem,
    selector: Selector,
    mode: Enablement,
}

impl<'a> Perceiver<'a> {
    /// Builds the perception selector of `enabler` over the system background.
    pub fn new(system: &'a ReactionSystem, enabler: &EnablerSet) -> Result<Self, PerceptionError> {
        let selector = perception_selector(system.background(), enabler)?;
        Ok(Perceiver {
            system,
            selector,
            mode: Enablement::Strict,
        })
    }

    /// Uses an arbitrary selector of the background instead of `𝒮_Π`.
    pub fn with_selector(
        system: &'a ReactionSystem,
        selector: Selector,
    ) -> Result<Self, PerceptionError> {
        selector.check(system.background())?;
        Ok(Perceiver {
            system,
            selector,
            mode: Enablement::Strict,
        })
    }

    pub fn mode(mut self, mode: Enablement) -> Self {
        self.mode = mode;
        self
    }

    pub fn selector(&self) -> &Selector {
        &self.selector
    }

    /// `pen_b(T)`; false means `dis_b(T)`.
    pub fn perception_enabled(
        &self,
        b: &Reaction,
        state: &LabelledGraph,
    ) -> Result<bool, PerceptionError> {
        self.system.check_state(state)?;
        Ok(is_perception_enabled(b, state, &self.selector, self.mode))
    }

    /// `resp_b(T)`: the products when perception-enabled, otherwise the empty
    /// graph over the background labels.
    pub fn result_by_perception(
        &self,
        b: &Reaction,
        state: &LabelledGraph,
    ) -> Result<LabelledGraph, PerceptionError> {
        Ok(if self.perception_enabled(b, state)? {
            b.products.clone()
        } else {
            self.system.empty_state()
        })
    }

    /// `resp_𝒜(T)`: union of the results by perception of every reaction.
    pub fn resp_set(&self, state: &LabelledGraph) -> Result<LabelledGraph, PerceptionError> {
        self.system.check_state(state)?;
        let mut out = self.system.empty_state();
        for b in self.system.reactions() {
            if is_perception_enabled(b, state, &self.selector, self.mode) {
                out = crate::lgraph::graph_union(&out, &b.products)?;
            }
        }
        Ok(out)
    }
}

/// `pen_b(T)` for a given selector, without checking that `T` lies in the
/// background.
pub fn is_perception_enabled(
    b: &Reaction,
    state: &LabelledGraph,
    selector: &Selector,
    mode: Enablement,
) -> bool {
    let present = b.reactants.is_subgraph_of(state)
        && (mode == Enablement::Relaxed || b.products.is_subgraph_of(state));
    present
        && !pairs_disjoint(&b.reactants.extraction(), selector)
        && pairs_disjoint(&state.extraction(), &b.inhibitor)
}

/// `resp_𝒜(T)` with the perception selector of `enabler`, strict mode.
pub fn resp_set(
    system: &ReactionSystem,
    state: &LabelledGraph,
    enabler: &EnablerSet,
) -> Result<LabelledGraph, PerceptionError> {
    Perceiver::new(system, enabler)?.resp_set(state)
}

/// The automaton symbols playing each role of the perception machine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolRoles {
    pub substrate: Symbol,
    pub coenzyme: Symbol,
    pub product: Symbol,
    pub coenzyme_result: Symbol,
}

impl SymbolRoles {
    /// Reads roles off an embedding of `aut` into the perception machine,
    /// honouring `hint` (automaton symbol → `s`/`c`/`p`/`r`).
    pub fn of(aut: &Automaton, hint: &BTreeMap<Symbol, Symbol>) -> Result<Self, PerceptionError> {
        let reference = Machine::Perception.build();
        let e = simulation_embedding_with(aut, &reference, hint)
            .ok_or(PerceptionError::NotAPerceptionReaction)?;
        let role = |r: &str| -> Symbol {
            e.symbols
                .iter()
                .find(|(_, to)| to.as_str() == r)
                .map(|(from, _)| from.clone())
                .expect("symbol map is a bijection onto {c, p, r, s}")
        };
        Ok(SymbolRoles {
            substrate: role("s"),
            coenzyme: role("c"),
            product: role("p"),
            coenzyme_result: role("r"),
        })
    }
}

/// Something worth telling the user about a compiled environment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CompileWarning {
    /// The enzyme has no enabler-labelled edge, so its reaction can never be
    /// perception-enabled through its own star.
    Imperceptive { enzyme: String },
    /// The enzyme lacks an edge for one enabler symbol.
    MissingCognate { enzyme: String, symbol: Symbol },
}

impl core::fmt::Display for CompileWarning {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            CompileWarning::Imperceptive { enzyme } => {
                write!(f, "enzyme {enzyme:?} has no enabler-labelled edges")
            }
            CompileWarning::MissingCognate { enzyme, symbol } => {
                write!(f, "enzyme {enzyme:?} has no {symbol}-labelled edge")
            }
        }
    }
}

/// A reaction system compiled from an environment, with what it was built
/// from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompiledEnvironment {
    pub system: ReactionSystem,
    pub enabler: EnablerSet,
    pub inhibitors: InhibitorAlphabet,
    pub roles: SymbolRoles,
    pub warnings: Vec<CompileWarning>,
}

impl CompiledEnvironment {
    /// True iff the system has reactions and every inhibitor meets `U(T)`.
    pub fn is_inhibited(&self, state: &LabelledGraph) -> Result<bool, PerceptionError> {
        self.system.check_state(state)?;
        let u = state.extraction();
        let reactions = self.system.reactions();
        Ok(!reactions.is_empty() && reactions.iter().all(|b| !pairs_disjoint(&u, &b.inhibitor)))
    }

    pub fn perceiver(&self) -> Perceiver<'_> {
        Perceiver::new(&self.system, &self.enabler).expect("enabler symbols are background labels")
    }

    pub fn resp_set(&self, state: &LabelledGraph) -> Result<LabelledGraph, PerceptionError> {
        self.perceiver().resp_set(state)
    }
}

pub fn compile_environment(
    aut: &Automaton,
    env: &Environment,
) -> Result<CompiledEnvironment, PerceptionError> {
    let roles = SymbolRoles::of(aut, &env.roles)?;
    env.validate()?;

    let sigma: BTreeSet<Symbol> = aut.alphabet().iter().cloned().collect();
    if let Some(s) = env.inhibitors.iter().find(|s| sigma.contains(*s)) {
        return Err(PerceptionError::InhibitorInAlphabet(s.clone()));
    }
    if let Some(s) = env.enabler.iter().find(|s| !sigma.contains(*s)) {
        return Err(PerceptionError::EnablerOutsideAlphabet(s.clone()));
    }
    if env.enabler.contains(&roles.product) {
        return Err(PerceptionError::EnablerContainsProduct(
            roles.product.clone(),
        ));
    }
    if let Some(s) = env
        .graph
        .labels()
        .iter()
        .find(|s| !sigma.contains(*s) && !env.inhibitors.contains(s))
    {
        return Err(PerceptionError::StrayLabel(s.clone()));
    }

    let mut background = env
        .graph
        .clone()
        .with_labels(sigma.iter().cloned().chain(env.inhibitors.iter().cloned()));
    let mut product_symbols = alloc::vec![roles.product.clone()];
    if env.enabler.contains(&roles.coenzyme) {
        product_symbols.push(roles.coenzyme_result.clone());
    }

    // Fresh product nodes first, so every product graph is a subgraph of B.
    let mut product_edges: BTreeMap<&String, Vec<Edge>> = BTreeMap::new();
    for e in &env.enzymes {
        for sym in &product_symbols {
            let mut node = format!("{e}:{sym}");
            while background.nodes().contains(&node) {
                node.push('\'');
            }
            background.add_node(node.clone());
            let edge = Edge::new(e.clone(), node, sym.clone());
            background.add_edge(edge.clone())?;
            product_edges.entry(e).or_default().push(edge);
        }
    }

    let labels = background.labels().clone();
    let mut reactions = Vec::with_capacity(env.enzymes.len());
    let mut warnings = Vec::new();
    for e in &env.enzymes {
        let mut r = LabelledGraph::empty(labels.clone());
        r.add_node(e.clone());
        let mut perceived_any = false;
        for x in env.enabler.iter() {
            let cognate = background
                .edges()
                .iter()
                .find(|edge| edge.source == *e && edge.label == *x);
            match cognate {
                Some(edge) => {
                    r.add_node(edge.target.clone());
                    r.add_edge(edge.clone())?;
                    perceived_any = true;
                }
                None => warnings.push(CompileWarning::MissingCognate {
                    enzyme: e.clone(),
                    symbol: x.clone(),
                }),
            }
        }
        if !perceived_any {
            warnings.retain(
                |w| !matches!(w, CompileWarning::MissingCognate { enzyme, .. } if enzyme == e),
            );
            warnings.push(CompileWarning::Imperceptive { enzyme: e.clone() });
        }

        let mut p = LabelledGraph::empty(labels.clone());
        p.add_node(e.clone());
        for edge in product_edges.remove(e).unwrap_or_default() {
            p.add_node(edge.target.clone());
            p.add_edge(edge)?;
        }

        let inhibitor = Selector::new(
            BTreeSet::new(),
            background
                .edges()
                .iter()
                .filter(|edge| env.inhibitors.contains(&edge.label) && edge.touches(e))
                .cloned()
                .collect(),
        );
        debug_assert!(inhibitor.node_part().is_empty());
        reactions.push(Reaction {
            name: e.clone(),
            reactants: r,
            inhibitor,
            products: p,
        });
    }

    let system = ReactionSystem::new(background, reactions)?;
    Ok(CompiledEnvironment {
        system,
        enabler: env.enabler.clone(),
        inhibitors: env.inhibitors.clone(),
        roles,
        warnings,
    })
}

/// Whether configuration `state` inhibits `aut` in `env`.
pub fn is_inhibited(
    aut: &Automaton,
    env: &Environment,
    state: &LabelledGraph,
) -> Result<bool, PerceptionError> {
    compile_environment(aut, env)?.is_inhibited(state)
}
