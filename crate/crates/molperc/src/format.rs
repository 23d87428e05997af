//! JSON file formats for automata, graphs, selectors, reaction systems and
//! environments.
//!
//! Serialization is canonical: states, symbols, nodes and edges come out
//! sorted, so equal values always produce identical text.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::{Path, PathBuf};

use molperc_core::lgraph::GraphError;
use molperc_core::perception::{EnablerSet, Environment, InhibitorAlphabet, PerceptionError};
use molperc_core::rs::{Reaction, ReactionSystem, RsError};
use molperc_core::{
    Automaton, AutomatonError, Edge, InvalidSymbol, LabelledGraph, Selector, StateKind, Symbol,
    EPSILON,
};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Symbol(#[from] InvalidSymbol),
    #[error(transparent)]
    Automaton(#[from] AutomatonError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    System(#[from] RsError),
    #[error(transparent)]
    Environment(#[from] PerceptionError),
}

/// Values with a JSON file representation.
pub trait FileFormat: Sized {
    fn to_json(&self) -> String;
    fn from_json(text: &str) -> Result<Self, FormatError>;

    fn load(path: &Path) -> Result<Self, FormatError> {
        let text = fs::read_to_string(path).map_err(|source| FormatError::Io {
            path: path.to_owned(),
            source,
        })?;
        Self::from_json(&text)
    }
}

fn pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("file types serialize infallibly");
    s.push('\n');
    s
}

fn symbols(names: Vec<String>) -> Result<BTreeSet<Symbol>, InvalidSymbol> {
    names.into_iter().map(Symbol::new).collect()
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum KindTag {
    Stable,
    Perceiving,
    Unspecified,
}

impl From<StateKind> for KindTag {
    fn from(k: StateKind) -> Self {
        match k {
            StateKind::Stable => KindTag::Stable,
            StateKind::Perceiving => KindTag::Perceiving,
            StateKind::Unspecified => KindTag::Unspecified,
        }
    }
}

impl From<KindTag> for StateKind {
    fn from(k: KindTag) -> Self {
        match k {
            KindTag::Stable => StateKind::Stable,
            KindTag::Perceiving => StateKind::Perceiving,
            KindTag::Unspecified => StateKind::Unspecified,
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct StateEntry {
    name: String,
    #[serde(default = "unspecified")]
    kind: KindTag,
}

fn unspecified() -> KindTag {
    KindTag::Unspecified
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TransitionEntry {
    from: String,
    input: String,
    to: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AutomatonFile {
    states: Vec<StateEntry>,
    alphabet: Vec<String>,
    initial: String,
    finals: Vec<String>,
    transitions: Vec<TransitionEntry>,
}

impl From<&Automaton> for AutomatonFile {
    fn from(a: &Automaton) -> Self {
        let mut grouped: BTreeMap<(&str, &str), Vec<String>> = BTreeMap::new();
        for t in a.transitions() {
            let input = t.input.map_or(EPSILON, Symbol::as_str);
            grouped
                .entry((t.from, input))
                .or_default()
                .push(t.to.to_owned());
        }
        AutomatonFile {
            states: a
                .states()
                .iter()
                .map(|s| StateEntry {
                    name: s.name.clone(),
                    kind: s.kind.into(),
                })
                .collect(),
            alphabet: a.alphabet().iter().map(ToString::to_string).collect(),
            initial: a.initial().to_owned(),
            finals: a.finals().map(str::to_owned).collect(),
            transitions: grouped
                .into_iter()
                .map(|((from, input), mut to)| {
                    to.sort();
                    TransitionEntry {
                        from: from.to_owned(),
                        input: input.to_owned(),
                        to,
                    }
                })
                .collect(),
        }
    }
}

impl TryFrom<AutomatonFile> for Automaton {
    type Error = FormatError;

    fn try_from(f: AutomatonFile) -> Result<Self, FormatError> {
        let mut b = Automaton::builder().symbols(f.alphabet).initial(f.initial);
        for s in f.states {
            b = b.state(s.name, s.kind.into());
        }
        for q in f.finals {
            b = b.final_state(q);
        }
        for t in f.transitions {
            for to in t.to {
                b = b.transition(t.from.clone(), t.input.clone(), to);
            }
        }
        Ok(b.build()?)
    }
}

impl FileFormat for Automaton {
    fn to_json(&self) -> String {
        pretty(&AutomatonFile::from(self))
    }

    fn from_json(text: &str) -> Result<Self, FormatError> {
        serde_json::from_str::<AutomatonFile>(text)?.try_into()
    }
}

type EdgeTriple = (String, String, String);

fn edge_triple(e: &Edge) -> EdgeTriple {
    (e.source.clone(), e.target.clone(), e.label.to_string())
}

fn edge_from((s, t, l): EdgeTriple) -> Result<Edge, InvalidSymbol> {
    Ok(Edge::new(s, t, Symbol::new(l)?))
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    nodes: Vec<String>,
    labels: Vec<String>,
    edges: Vec<EdgeTriple>,
}

impl From<&LabelledGraph> for GraphFile {
    fn from(g: &LabelledGraph) -> Self {
        GraphFile {
            nodes: g.nodes().iter().cloned().collect(),
            labels: g.labels().iter().map(ToString::to_string).collect(),
            edges: g.edges().iter().map(edge_triple).collect(),
        }
    }
}

impl TryFrom<GraphFile> for LabelledGraph {
    type Error = FormatError;

    fn try_from(f: GraphFile) -> Result<Self, FormatError> {
        let edges = f
            .edges
            .into_iter()
            .map(edge_from)
            .collect::<Result<_, _>>()?;
        Ok(LabelledGraph::new(
            f.nodes.into_iter().collect(),
            symbols(f.labels)?,
            edges,
        )?)
    }
}

impl FileFormat for LabelledGraph {
    fn to_json(&self) -> String {
        pretty(&GraphFile::from(self))
    }

    fn from_json(text: &str) -> Result<Self, FormatError> {
        serde_json::from_str::<GraphFile>(text)?.try_into()
    }
}

/// A JSON array of graphs, as printed for a trace.
pub fn graphs_to_json(graphs: &[LabelledGraph]) -> String {
    pretty(&graphs.iter().map(GraphFile::from).collect::<Vec<_>>())
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SelectorFile {
    nodes: Vec<String>,
    edges: Vec<EdgeTriple>,
}

impl From<&Selector> for SelectorFile {
    fn from(s: &Selector) -> Self {
        SelectorFile {
            nodes: s.nodes.iter().cloned().collect(),
            edges: s.edges.iter().map(edge_triple).collect(),
        }
    }
}

impl TryFrom<SelectorFile> for Selector {
    type Error = FormatError;

    fn try_from(f: SelectorFile) -> Result<Self, FormatError> {
        let edges = f
            .edges
            .into_iter()
            .map(edge_from)
            .collect::<Result<_, _>>()?;
        Ok(Selector::new(f.nodes.into_iter().collect(), edges))
    }
}

impl FileFormat for Selector {
    fn to_json(&self) -> String {
        pretty(&SelectorFile::from(self))
    }

    fn from_json(text: &str) -> Result<Self, FormatError> {
        serde_json::from_str::<SelectorFile>(text)?.try_into()
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ReactionFile {
    name: String,
    reactants: GraphFile,
    inhibitor: SelectorFile,
    products: GraphFile,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SystemFile {
    background: GraphFile,
    reactions: Vec<ReactionFile>,
}

impl From<&ReactionSystem> for SystemFile {
    fn from(sys: &ReactionSystem) -> Self {
        SystemFile {
            background: sys.background().into(),
            reactions: sys
                .reactions()
                .iter()
                .map(|b| ReactionFile {
                    name: b.name.clone(),
                    reactants: (&b.reactants).into(),
                    inhibitor: (&b.inhibitor).into(),
                    products: (&b.products).into(),
                })
                .collect(),
        }
    }
}

impl TryFrom<SystemFile> for ReactionSystem {
    type Error = FormatError;

    fn try_from(f: SystemFile) -> Result<Self, FormatError> {
        let reactions = f
            .reactions
            .into_iter()
            .map(|r| {
                Ok(Reaction {
                    name: r.name,
                    reactants: r.reactants.try_into()?,
                    inhibitor: r.inhibitor.try_into()?,
                    products: r.products.try_into()?,
                })
            })
            .collect::<Result<_, FormatError>>()?;
        Ok(ReactionSystem::new(f.background.try_into()?, reactions)?)
    }
}

impl FileFormat for ReactionSystem {
    fn to_json(&self) -> String {
        pretty(&SystemFile::from(self))
    }

    fn from_json(text: &str) -> Result<Self, FormatError> {
        serde_json::from_str::<SystemFile>(text)?.try_into()
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EnvironmentFile {
    graph: GraphFile,
    enzymes: Vec<String>,
    enabler: Vec<String>,
    inhibitor_alphabet: Vec<String>,
    /// Optional automaton symbol → perception-machine symbol hints.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    roles: BTreeMap<String, String>,
}

impl From<&Environment> for EnvironmentFile {
    fn from(env: &Environment) -> Self {
        EnvironmentFile {
            graph: (&env.graph).into(),
            enzymes: env.enzymes.iter().cloned().collect(),
            enabler: env.enabler.iter().map(ToString::to_string).collect(),
            inhibitor_alphabet: env.inhibitors.iter().map(ToString::to_string).collect(),
            roles: env
                .roles
                .iter()
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .collect(),
        }
    }
}

impl TryFrom<EnvironmentFile> for Environment {
    type Error = FormatError;

    fn try_from(f: EnvironmentFile) -> Result<Self, FormatError> {
        let roles = f
            .roles
            .into_iter()
            .map(|(k, v)| Ok((Symbol::new(k)?, Symbol::new(v)?)))
            .collect::<Result<_, InvalidSymbol>>()?;
        let env = Environment {
            graph: f.graph.try_into()?,
            enzymes: f.enzymes.into_iter().collect(),
            enabler: EnablerSet(symbols(f.enabler)?),
            inhibitors: InhibitorAlphabet(symbols(f.inhibitor_alphabet)?),
            roles,
        };
        env.validate()?;
        Ok(env)
    }
}

impl FileFormat for Environment {
    fn to_json(&self) -> String {
        pretty(&EnvironmentFile::from(self))
    }

    fn from_json(text: &str) -> Result<Self, FormatError> {
        serde_json::from_str::<EnvironmentFile>(text)?.try_into()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use molperc_core::automata::catalog::Machine;

    #[test]
    fn catalog_machines_round_trip() {
        for m in Machine::ALL {
            let a = m.build();
            let text = a.to_json();
            assert_eq!(Automaton::from_json(&text).unwrap(), a, "{m}");
            assert_eq!(Automaton::from_json(&text).unwrap().to_json(), text);
        }
    }

    #[test]
    fn automaton_field_names() {
        let v: serde_json::Value =
            serde_json::from_str(&Machine::Perception.build().to_json()).unwrap();
        assert_eq!(v["initial"], "E");
        assert_eq!(v["finals"], serde_json::json!(["E"]));
        assert_eq!(v["alphabet"], serde_json::json!(["c", "p", "r", "s"]));
        assert!(v["states"]
            .as_array()
            .unwrap()
            .contains(&serde_json::json!({"name": "E_s", "kind": "perceiving"})));
        let eps = v["transitions"]
            .as_array()
            .unwrap()
            .iter()
            .find(|t| t["from"] == "E_s" && t["input"] == "eps")
            .unwrap();
        assert_eq!(eps["to"], serde_json::json!(["E"]));
    }

    #[test]
    fn epsilon_in_alphabet_is_rejected() {
        let text = r#"{"states":[{"name":"q","kind":"unspecified"}],"alphabet":["eps"],
            "initial":"q","finals":[],"transitions":[]}"#;
        assert!(matches!(
            Automaton::from_json(text),
            Err(FormatError::Automaton(_))
        ));
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let text = r#"{"nodes":[],"labels":[],"edges":[],"colour":"red"}"#;
        assert!(matches!(
            LabelledGraph::from_json(text),
            Err(FormatError::Json(_))
        ));
    }

    #[test]
    fn graph_edges_are_triples() {
        let g = LabelledGraph::from_json(
            r#"{"nodes":["e","m"],"labels":["s"],"edges":[["e","m","s"]]}"#,
        )
        .unwrap();
        assert_eq!(g.edges().len(), 1);
        assert!(matches!(
            LabelledGraph::from_json(r#"{"nodes":["e"],"labels":["s"],"edges":[["e","m","s"]]}"#),
            Err(FormatError::Graph(GraphError::DanglingEdge(_)))
        ));
    }

    #[test]
    fn environment_is_validated_on_load() {
        let text = r#"{"graph":{"nodes":["e","m"],"labels":["s"],"edges":[["m","e","s"]]},
            "enzymes":["e"],"enabler":["s"],"inhibitor_alphabet":[]}"#;
        assert!(matches!(
            Environment::from_json(text),
            Err(FormatError::Environment(
                PerceptionError::EdgeNotFromEnzyme(_)
            ))
        ));
    }
}
