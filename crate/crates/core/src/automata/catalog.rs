//! The built-in enzyme machines.
//!
//! * [`Machine::Generic`]: the six-state deterministic enzymatic reaction
//!   over `{c, p, r, s}` (substrate and coenzyme binding in either order,
//!   product and coenzyme-result release in either order, or direct
//!   substrate-to-product conversion).
//! * [`Machine::Perception`]: the ten-state ε-NFA with stable states
//!   `E, Ec, Ep, Er, Es, ES` and perceiving states `E_c, Ec_s, E_s, Es_c`.
//! * [`Machine::Pfk`]: phosphofructokinase. It is the perception machine
//!   renamed (`s ↦ F6P`, `c ↦ ATP`, `p ↦ F16bP`, `r ↦ ADP`) without the two
//!   coenzyme-free shortcuts `E_s --s--> ES` and `ES --p--> E`.

use alloc::string::ToString;
use core::fmt;
use core::str::FromStr;

use super::{Automaton, AutomatonError, Relabeling, StateKind};
use crate::symbol::{Symbol, EPSILON};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Machine {
    Generic,
    Perception,
    Pfk,
}

type StateRow = (&'static str, StateKind);
type TableRow = (&'static str, &'static str, &'static str);

impl Machine {
    pub const ALL: [Machine; 3] = [Machine::Generic, Machine::Perception, Machine::Pfk];

    pub fn name(self) -> &'static str {
        match self {
            Machine::Generic => "GENERIC",
            Machine::Perception => "PERCEPTION",
            Machine::Pfk => "PFK",
        }
    }

    pub fn build(self) -> Automaton {
        let (states, table, alphabet): (&[StateRow], &[TableRow], &[&str]) = match self {
            Machine::Generic => (GENERIC_STATES, GENERIC_TABLE, &["c", "p", "r", "s"]),
            Machine::Perception => (PERCEPTION_STATES, PERCEPTION_TABLE, &["c", "p", "r", "s"]),
            Machine::Pfk => (PFK_STATES, PFK_TABLE, &["ADP", "ATP", "F16bP", "F6P"]),
        };
        let initial = states[0].0;
        let mut b = Automaton::builder()
            .symbols(alphabet.iter().copied())
            .initial(initial)
            .final_state(initial);
        for &(name, kind) in states {
            b = b.state(name, kind);
        }
        for &(from, input, to) in table {
            b = b.transition(from, input, to);
        }
        b.build().expect("catalog machines are well-formed")
    }
}

impl fmt::Display for Machine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Machine {
    type Err = AutomatonError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Machine::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| AutomatonError::UnknownMachine(s.to_string()))
    }
}

/// Looks a machine up by name (`GENERIC`, `PERCEPTION`, `PFK`).
pub fn catalog(name: &str) -> Result<Automaton, AutomatonError> {
    name.parse::<Machine>().map(Machine::build)
}

/// The renaming that carries the perception machine's symbols and states to
/// the phosphofructokinase names.
pub fn pfk_renaming() -> Relabeling {
    let mut m = Relabeling::identity();
    for (from, to) in [("s", "F6P"), ("c", "ATP"), ("p", "F16bP"), ("r", "ADP")] {
        m.symbols
            .insert(Symbol::new(from).unwrap(), Symbol::new(to).unwrap());
    }
    for &(pfk, generic) in PFK_TO_PERCEPTION {
        m.states.insert(generic.to_string(), pfk.to_string());
    }
    m
}

/// State correspondence from the phosphofructokinase machine into the
/// perception machine.
pub const PFK_TO_PERCEPTION: &[(&str, &str)] = &[
    ("PFK", "E"),
    ("PFK_F6P", "E_s"),
    ("PFK_ATP", "E_c"),
    ("PFK·ATP", "Ec"),
    ("PFK·F6P", "Es"),
    ("PFK·ATP_F6P", "Ec_s"),
    ("PFK·F6P_ATP", "Es_c"),
    ("PFK·ATPF6P", "ES"),
    ("PFK·ADP", "Er"),
    ("PFK·F16bP", "Ep"),
];

use StateKind::{Perceiving, Stable, Unspecified};

// First entry is the initial (and only final) state.
const GENERIC_STATES: &[(&str, StateKind)] = &[
    ("E", Unspecified),
    ("Ec", Unspecified),
    ("Ep", Unspecified),
    ("Er", Unspecified),
    ("Es", Unspecified),
    ("Esc", Unspecified),
];

const GENERIC_TABLE: &[(&str, &str, &str)] = &[
    ("E", "s", "Es"),
    ("E", "c", "Ec"),
    ("Es", "c", "Esc"),
    ("Es", "p", "E"),
    ("Ec", "s", "Esc"),
    ("Esc", "p", "Er"),
    ("Esc", "r", "Ep"),
    ("Ep", "p", "E"),
    ("Er", "r", "E"),
];

const PERCEPTION_STATES: &[(&str, StateKind)] = &[
    ("E", Stable),
    ("Ec", Stable),
    ("Ep", Stable),
    ("Er", Stable),
    ("Es", Stable),
    ("ES", Stable),
    ("E_c", Perceiving),
    ("Ec_s", Perceiving),
    ("E_s", Perceiving),
    ("Es_c", Perceiving),
];

const PERCEPTION_TABLE: &[(&str, &str, &str)] = &[
    ("E", "s", "E_s"),
    ("E", "c", "E_c"),
    ("E", EPSILON, "E"),
    ("Es", "c", "Es_c"),
    ("Es", EPSILON, "Es"),
    ("Ec", "s", "Ec_s"),
    ("Ec", EPSILON, "Ec"),
    ("ES", "p", "Er"),
    ("ES", "p", "E"),
    ("ES", "r", "Ep"),
    ("Ep", "p", "E"),
    ("Er", "r", "E"),
    ("E_s", "s", "Es"),
    ("E_s", "s", "ES"),
    ("E_s", EPSILON, "E"),
    ("Es_c", "c", "ES"),
    ("Es_c", EPSILON, "Es"),
    ("E_c", "c", "Ec"),
    ("E_c", EPSILON, "E"),
    ("Ec_s", "s", "ES"),
    ("Ec_s", EPSILON, "Ec"),
];

const PFK_STATES: &[(&str, StateKind)] = &[
    ("PFK", Stable),
    ("PFK_F6P", Perceiving),
    ("PFK_ATP", Perceiving),
    ("PFK·ATP", Stable),
    ("PFK·F6P", Stable),
    ("PFK·ATP_F6P", Perceiving),
    ("PFK·F6P_ATP", Perceiving),
    ("PFK·ATPF6P", Stable),
    ("PFK·ADP", Stable),
    ("PFK·F16bP", Stable),
];

const PFK_TABLE: &[(&str, &str, &str)] = &[
    ("PFK", "F6P", "PFK_F6P"),
    ("PFK", "ATP", "PFK_ATP"),
    ("PFK_ATP", EPSILON, "PFK"),
    ("PFK_F6P", EPSILON, "PFK"),
    ("PFK_ATP", "ATP", "PFK·ATP"),
    ("PFK_F6P", "F6P", "PFK·F6P"),
    ("PFK·ATP", EPSILON, "PFK·ATP"),
    ("PFK·F6P", EPSILON, "PFK·F6P"),
    ("PFK·ATP", "F6P", "PFK·ATP_F6P"),
    ("PFK·F6P", "ATP", "PFK·F6P_ATP"),
    ("PFK·ATP_F6P", EPSILON, "PFK·ATP"),
    ("PFK·F6P_ATP", EPSILON, "PFK·F6P"),
    ("PFK·F6P_ATP", "ATP", "PFK·ATPF6P"),
    ("PFK·ATP_F6P", "F6P", "PFK·ATPF6P"),
    ("PFK·ATPF6P", "F16bP", "PFK·ADP"),
    ("PFK·ATPF6P", "ADP", "PFK·F16bP"),
    ("PFK·ADP", "ADP", "PFK"),
    ("PFK·F16bP", "F16bP", "PFK"),
    ("PFK", EPSILON, "PFK"),
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::relabel;
    use alloc::vec::Vec;

    #[test]
    fn sizes() {
        let g = Machine::Generic.build();
        assert_eq!((g.states().len(), g.transition_count()), (6, 9));
        assert!(g.is_deterministic());
        let p = Machine::Perception.build();
        assert_eq!((p.states().len(), p.transition_count()), (10, 21));
        let pfk = Machine::Pfk.build();
        assert_eq!(pfk.transition_count(), p.transition_count() - 2);
    }

    #[test]
    fn lookup_by_name() {
        assert_eq!(catalog("pfk").unwrap(), Machine::Pfk.build());
        assert_eq!(
            catalog("LDH"),
            Err(AutomatonError::UnknownMachine("LDH".into()))
        );
    }

    #[test]
    fn pfk_is_renamed_perception_minus_shortcuts() {
        let renamed = relabel(&Machine::Perception.build(), &pfk_renaming()).unwrap();
        let pfk = Machine::Pfk.build();
        let mut renamed_edges: Vec<_> = renamed
            .transitions()
            .map(|t| {
                (
                    t.from.to_string(),
                    t.input.map(|s| s.to_string()),
                    t.to.to_string(),
                )
            })
            .collect();
        let pfk_edges: Vec<_> = pfk
            .transitions()
            .map(|t| {
                (
                    t.from.to_string(),
                    t.input.map(|s| s.to_string()),
                    t.to.to_string(),
                )
            })
            .collect();
        let shortcuts = [
            ("PFK_F6P", "F6P", "PFK·ATPF6P"),
            ("PFK·ATPF6P", "F16bP", "PFK"),
        ];
        for (f, x, t) in shortcuts {
            let pos = renamed_edges
                .iter()
                .position(|e| e.0 == f && e.1.as_deref() == Some(x) && e.2 == t)
                .unwrap();
            renamed_edges.remove(pos);
        }
        renamed_edges.sort();
        let mut pfk_sorted = pfk_edges;
        pfk_sorted.sort();
        assert_eq!(renamed_edges, pfk_sorted);
        assert_eq!(renamed.states(), pfk.states());
    }
}
