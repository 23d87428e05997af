//! Directed edge-labelled graphs `G = (V, Σ, E)` with `E ⊆ V × V × Σ`.
//!
//! Nodes are opaque names; only edges carry labels. All collections are
//! ordered sets, so equality is set equality and iteration is lexicographic.

use alloc::collections::BTreeSet;
use alloc::string::String;
use core::fmt;

use crate::symbol::Symbol;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("edge {0} has an endpoint outside the node set")]
    DanglingEdge(Edge),
    #[error("edge label {0} is not in the label alphabet")]
    UnknownLabel(Symbol),
    #[error("label alphabets differ")]
    LabelMismatch,
    #[error("node {0:?} is not in the graph")]
    UnknownNode(String),
    #[error("selector edge {0} is not in the graph")]
    UnknownEdge(Edge),
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub source: String,
    pub target: String,
    pub label: Symbol,
}

impl Edge {
    pub fn new(source: impl Into<String>, target: impl Into<String>, label: Symbol) -> Self {
        Edge {
            source: source.into(),
            target: target.into(),
            label,
        }
    }

    pub fn touches(&self, node: &str) -> bool {
        self.source == node || self.target == node
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.source, self.target, self.label)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LabelledGraph {
    nodes: BTreeSet<String>,
    labels: BTreeSet<Symbol>,
    edges: BTreeSet<Edge>,
}

impl LabelledGraph {
    pub fn new(
        nodes: BTreeSet<String>,
        labels: BTreeSet<Symbol>,
        edges: BTreeSet<Edge>,
    ) -> Result<Self, GraphError> {
        for e in &edges {
            if !labels.contains(&e.label) {
                return Err(GraphError::UnknownLabel(e.label.clone()));
            }
            if !nodes.contains(&e.source) || !nodes.contains(&e.target) {
                return Err(GraphError::DanglingEdge(e.clone()));
            }
        }
        Ok(LabelledGraph {
            nodes,
            labels,
            edges,
        })
    }

    /// The graph with no nodes and no edges over `labels`.
    pub fn empty(labels: BTreeSet<Symbol>) -> Self {
        LabelledGraph {
            nodes: BTreeSet::new(),
            labels,
            edges: BTreeSet::new(),
        }
    }

    pub fn nodes(&self) -> &BTreeSet<String> {
        &self.nodes
    }

    pub fn labels(&self) -> &BTreeSet<Symbol> {
        &self.labels
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    /// No nodes (and hence no edges).
    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `H ⊆ G`: same label alphabet, nodes and edges contained.
    pub fn is_subgraph_of(&self, g: &LabelledGraph) -> bool {
        is_subgraph(self, g)
    }

    pub fn extraction(&self) -> Extraction {
        extraction(self)
    }

    /// Same graph with `labels` added to the alphabet.
    pub fn with_labels(mut self, labels: impl IntoIterator<Item = Symbol>) -> Self {
        self.labels.extend(labels);
        self
    }

    /// Inserts a node; returns false if it was already present.
    pub fn add_node(&mut self, node: impl Into<String>) -> bool {
        self.nodes.insert(node.into())
    }

    pub fn add_edge(&mut self, edge: Edge) -> Result<bool, GraphError> {
        if !self.labels.contains(&edge.label) {
            return Err(GraphError::UnknownLabel(edge.label));
        }
        if !self.nodes.contains(&edge.source) || !self.nodes.contains(&edge.target) {
            return Err(GraphError::DanglingEdge(edge));
        }
        Ok(self.edges.insert(edge))
    }

    /// Removes an edge, keeping its endpoints.
    pub fn remove_edge(&mut self, edge: &Edge) -> bool {
        self.edges.remove(edge)
    }
}

/// A node-set/edge-set pair: selectors, extractions and their intersections.
pub trait NodeEdgePair {
    fn node_part(&self) -> &BTreeSet<String>;
    fn edge_part(&self) -> &BTreeSet<Edge>;

    /// Both parts empty, i.e. the pair is `(∅, ∅)`.
    fn is_void(&self) -> bool {
        self.node_part().is_empty() && self.edge_part().is_empty()
    }
}

/// A selector `(X, Y)` of a graph; bound to a graph with [`Selector::check`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Selector {
    pub nodes: BTreeSet<String>,
    pub edges: BTreeSet<Edge>,
}

impl Selector {
    pub fn new(nodes: BTreeSet<String>, edges: BTreeSet<Edge>) -> Self {
        Selector { nodes, edges }
    }

    /// `X ⊆ V_G` and `Y ⊆ E_G`.
    pub fn check(&self, g: &LabelledGraph) -> Result<(), GraphError> {
        if let Some(n) = self.nodes.iter().find(|n| !g.nodes.contains(*n)) {
            return Err(GraphError::UnknownNode(n.clone()));
        }
        if let Some(e) = self.edges.iter().find(|e| !g.edges.contains(*e)) {
            return Err(GraphError::UnknownEdge(e.clone()));
        }
        Ok(())
    }
}

impl NodeEdgePair for Selector {
    fn node_part(&self) -> &BTreeSet<String> {
        &self.nodes
    }
    fn edge_part(&self) -> &BTreeSet<Edge> {
        &self.edges
    }
}

/// `U(H) = (V_H, E_H)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Extraction {
    pub nodes: BTreeSet<String>,
    pub edges: BTreeSet<Edge>,
}

impl NodeEdgePair for Extraction {
    fn node_part(&self) -> &BTreeSet<String> {
        &self.nodes
    }
    fn edge_part(&self) -> &BTreeSet<Edge> {
        &self.edges
    }
}

/// Componentwise intersection of two pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Intersection {
    pub nodes: BTreeSet<String>,
    pub edges: BTreeSet<Edge>,
}

impl NodeEdgePair for Intersection {
    fn node_part(&self) -> &BTreeSet<String> {
        &self.nodes
    }
    fn edge_part(&self) -> &BTreeSet<Edge> {
        &self.edges
    }
}

pub fn is_subgraph(h: &LabelledGraph, g: &LabelledGraph) -> bool {
    h.labels == g.labels && h.nodes.is_subset(&g.nodes) && h.edges.is_subset(&g.edges)
}

pub fn extraction(h: &LabelledGraph) -> Extraction {
    Extraction {
        nodes: h.nodes.clone(),
        edges: h.edges.clone(),
    }
}

pub fn pair_intersect<A, B>(a: &A, b: &B) -> Intersection
where
    A: NodeEdgePair + ?Sized,
    B: NodeEdgePair + ?Sized,
{
    Intersection {
        nodes: a.node_part().intersection(b.node_part()).cloned().collect(),
        edges: a.edge_part().intersection(b.edge_part()).cloned().collect(),
    }
}

/// True iff the componentwise intersection is `(∅, ∅)`, without building it.
pub fn pairs_disjoint<A, B>(a: &A, b: &B) -> bool
where
    A: NodeEdgePair + ?Sized,
    B: NodeEdgePair + ?Sized,
{
    a.node_part().is_disjoint(b.node_part()) && a.edge_part().is_disjoint(b.edge_part())
}

pub fn graph_union(h1: &LabelledGraph, h2: &LabelledGraph) -> Result<LabelledGraph, GraphError> {
    let mut out = h1.clone();
    union_into(&mut out, h2)?;
    Ok(out)
}

pub(crate) fn union_into(acc: &mut LabelledGraph, h: &LabelledGraph) -> Result<(), GraphError> {
    if acc.labels != h.labels {
        return Err(GraphError::LabelMismatch);
    }
    acc.nodes.extend(h.nodes.iter().cloned());
    acc.edges.extend(h.edges.iter().cloned());
    Ok(())
}
