use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{Automaton, AutomatonError, Input, StateKind};

/// Enzyme perception: the perceiving state a stable state moves to on
/// sensing `symbol`.
///
/// Only perceiving successors count, so a stable successor (for instance the
/// release step `ES --r--> Ep`) leaves perception undefined. The caller is
/// responsible for `symbol` belonging to the reaction enabler.
pub fn enzyme_perception<'a>(
    a: &'a Automaton,
    state: &str,
    symbol: &str,
) -> Result<&'a str, AutomatonError> {
    if !a.has_partition() {
        return Err(AutomatonError::NoPartition);
    }
    let p = a.require_state(state)?;
    if a.states[p].kind != StateKind::Stable {
        return Err(AutomatonError::NotStable(state.to_string()));
    }
    let x = a.require_symbol(symbol)?;
    let mut perceiving = a
        .succ(p, Input::Symbol(x))
        .filter(|&q| a.states[q].kind == StateKind::Perceiving);
    let undefined = || AutomatonError::PerceptionUndefined {
        state: state.to_string(),
        symbol: symbol.to_string(),
    };
    let q = perceiving.next().ok_or_else(undefined)?;
    if perceiving.next().is_some() {
        return Err(AutomatonError::PerceptionAmbiguous {
            state: state.to_string(),
            symbol: symbol.to_string(),
        });
    }
    Ok(&a.states[q].name)
}

/// A perceiving state that cannot fall back by ε to the stable state that
/// perceived into it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FallbackViolation {
    pub stable: String,
    pub symbol: String,
    pub perceiving: String,
}

/// For every stable `q` and symbol `x` with a perception defined, checks
/// `q ∈ δ(μ(q, x), ε)`. Automata without a partition have nothing to check.
pub fn fallback_violations(a: &Automaton) -> Vec<FallbackViolation> {
    let mut out = Vec::new();
    if !a.has_partition() {
        return out;
    }
    for (p, state) in a.states.iter().enumerate() {
        if state.kind != StateKind::Stable {
            continue;
        }
        for symbol in &a.alphabet {
            let Ok(mu) = enzyme_perception(a, &state.name, symbol.as_str()) else {
                continue;
            };
            let q = a.state_index(mu).expect("perceived state exists");
            if !a.edges().contains(&(q, Input::Epsilon, p)) {
                out.push(FallbackViolation {
                    stable: state.name.clone(),
                    symbol: symbol.to_string(),
                    perceiving: mu.to_string(),
                });
            }
        }
    }
    out
}
