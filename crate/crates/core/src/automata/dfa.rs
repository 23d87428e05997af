//! Subset construction, minimization and language equivalence.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{Automaton, AutomatonError, Input, Simulator, State, StateKind, StateSet};
use crate::symbol::Symbol;

/// Subset construction over ε-closed state sets.
///
/// Each DFA state is named `{q1,q2,...}` after the NFA states it stands for.
/// Only non-empty subsets reachable from the initial closure are built, so
/// the result is partial.
pub fn determinize(a: &Automaton) -> Automaton {
    let sim = Simulator::new(a);
    let k = a.alphabet.len();
    let mut index: BTreeMap<StateSet, usize> = BTreeMap::new();
    let mut subsets: Vec<StateSet> = Vec::new();
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();

    let start = sim.start();
    index.insert(start.clone(), 0);
    subsets.push(start);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for x in 0..k {
            let next = sim.step(&subsets[i], x);
            if next.is_empty() {
                continue;
            }
            let j = match index.get(&next) {
                Some(&j) => j,
                None => {
                    let j = subsets.len();
                    index.insert(next.clone(), j);
                    subsets.push(next);
                    queue.push_back(j);
                    j
                }
            };
            edges.push((i, x, j));
        }
    }

    let names: Vec<String> = subsets.iter().map(|s| subset_name(a, s)).collect();
    let finals: Vec<bool> = subsets.iter().map(|s| sim.is_accepting(s)).collect();
    assemble(a.alphabet.clone(), names, &edges, 0, &finals)
}

fn subset_name(a: &Automaton, set: &StateSet) -> String {
    let mut name = String::from("{");
    for (n, q) in set.iter().enumerate() {
        if n > 0 {
            name.push(',');
        }
        name.push_str(&a.states[q].name);
    }
    name.push('}');
    name
}

/// Builds a sorted automaton from positional states and `(from, symbol, to)`
/// edges; all kinds are left unspecified.
fn assemble(
    alphabet: Vec<Symbol>,
    names: Vec<String>,
    edges: &[(usize, usize, usize)],
    initial: usize,
    finals: &[bool],
) -> Automaton {
    let mut order: Vec<usize> = (0..names.len()).collect();
    order.sort_by(|&i, &j| names[i].cmp(&names[j]));
    let mut pos = vec![0; names.len()];
    for (new, &old) in order.iter().enumerate() {
        pos[old] = new;
    }
    let states = order
        .iter()
        .map(|&i| State {
            name: names[i].clone(),
            kind: StateKind::Unspecified,
        })
        .collect();
    let delta = edges
        .iter()
        .map(|&(p, x, q)| (pos[p], Input::Symbol(x), pos[q]))
        .collect();
    let finals = (0..names.len())
        .filter(|&i| finals[i])
        .map(|i| pos[i])
        .collect();
    Automaton::from_parts(states, alphabet, delta, pos[initial], finals)
}

/// Minimizes a deterministic automaton.
///
/// Unreachable states are dropped, the automaton is completed with a sink,
/// states are merged by partition refinement, and the sink's class (every
/// state that cannot reach acceptance) is stripped again. Each surviving class
/// is named after its smallest member.
pub fn minimize(d: &Automaton) -> Result<Automaton, AutomatonError> {
    if !d.is_deterministic() {
        return Err(AutomatonError::NotDeterministic);
    }
    let n = d.states.len();
    let k = d.alphabet.len();

    // Reachable states, in index order, with the sink appended last.
    let mut reachable = vec![false; n];
    reachable[d.initial] = true;
    let mut stack = vec![d.initial];
    while let Some(p) = stack.pop() {
        for &(_, _, q) in d
            .delta
            .range((p, Input::Epsilon, 0)..=(p, Input::Symbol(usize::MAX), usize::MAX))
        {
            if !reachable[q] {
                reachable[q] = true;
                stack.push(q);
            }
        }
    }
    let live: Vec<usize> = (0..n).filter(|&q| reachable[q]).collect();
    let sink = live.len();
    let mut local = vec![usize::MAX; n];
    for (i, &q) in live.iter().enumerate() {
        local[q] = i;
    }
    let m = live.len() + 1;
    let mut next = vec![sink; m * k];
    for &(p, x, q) in &d.delta {
        if let Input::Symbol(x) = x {
            if reachable[p] {
                next[local[p] * k + x] = local[q];
            }
        }
    }
    let accepting: Vec<bool> = live
        .iter()
        .map(|q| d.finals.contains(q))
        .chain(core::iter::once(false))
        .collect();

    // Moore refinement: split by (class, successor classes) until stable.
    let mut class: Vec<usize> = accepting.iter().map(|&f| usize::from(f)).collect();
    let mut count = class.iter().collect::<BTreeSet<_>>().len();
    loop {
        let mut signatures: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        let mut refined = vec![0; m];
        for p in 0..m {
            let mut sig = Vec::with_capacity(k + 1);
            sig.push(class[p]);
            sig.extend((0..k).map(|x| class[next[p * k + x]]));
            let fresh = signatures.len();
            refined[p] = *signatures.entry(sig).or_insert(fresh);
        }
        let refined_count = signatures.len();
        class = refined;
        if refined_count == count {
            break;
        }
        count = refined_count;
    }

    let dead = class[sink];
    let init_class = class[local[d.initial]];
    if init_class == dead {
        // Empty language: keep a lone, non-accepting initial state.
        let names = vec![d.states[d.initial].name.clone()];
        return Ok(assemble(d.alphabet.clone(), names, &[], 0, &[false]));
    }

    // Representative (smallest original index) per surviving class.
    let mut rep: BTreeMap<usize, usize> = BTreeMap::new();
    for (i, &q) in live.iter().enumerate() {
        if class[i] != dead {
            rep.entry(class[i]).or_insert(q);
        }
    }
    let classes: Vec<usize> = rep.keys().copied().collect();
    let position: BTreeMap<usize, usize> =
        classes.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let names: Vec<String> = classes
        .iter()
        .map(|c| d.states[rep[c]].name.clone())
        .collect();
    let finals: Vec<bool> = classes.iter().map(|c| accepting[local[rep[c]]]).collect();
    let mut edges = Vec::new();
    for (i, c) in classes.iter().enumerate() {
        let p = local[rep[c]];
        for x in 0..k {
            let t = class[next[p * k + x]];
            if t != dead {
                edges.push((i, x, position[&t]));
            }
        }
    }
    Ok(assemble(
        d.alphabet.clone(),
        names,
        &edges,
        position[&init_class],
        &finals,
    ))
}

fn same_alphabet(a: &Automaton, b: &Automaton) -> Result<(), AutomatonError> {
    if a.alphabet == b.alphabet {
        Ok(())
    } else {
        Err(AutomatonError::AlphabetMismatch)
    }
}

/// Language equality, decided by comparing minimal DFAs up to state renaming.
pub fn language_equivalent(a: &Automaton, b: &Automaton) -> Result<bool, AutomatonError> {
    same_alphabet(a, b)?;
    let ma = minimize(&determinize(a))?;
    let mb = minimize(&determinize(b))?;
    Ok(dfa_isomorphic(&ma, &mb))
}

/// Minimal partial DFAs are isomorphic iff a lockstep walk from the initial
/// states never disagrees.
fn dfa_isomorphic(a: &Automaton, b: &Automaton) -> bool {
    if a.states.len() != b.states.len() || a.delta.len() != b.delta.len() {
        return false;
    }
    let k = a.alphabet.len();
    let mut map = vec![usize::MAX; a.states.len()];
    let mut used = vec![false; b.states.len()];
    let mut queue = VecDeque::from([(a.initial, b.initial)]);
    map[a.initial] = b.initial;
    used[b.initial] = true;
    while let Some((p, q)) = queue.pop_front() {
        if a.finals.contains(&p) != b.finals.contains(&q) {
            return false;
        }
        for x in 0..k {
            let ps = a.succ(p, Input::Symbol(x)).next();
            let qs = b.succ(q, Input::Symbol(x)).next();
            match (ps, qs) {
                (None, None) => {}
                (Some(p2), Some(q2)) => {
                    if map[p2] == usize::MAX {
                        if used[q2] {
                            return false;
                        }
                        map[p2] = q2;
                        used[q2] = true;
                        queue.push_back((p2, q2));
                    } else if map[p2] != q2 {
                        return false;
                    }
                }
                _ => return false,
            }
        }
    }
    true
}

/// Shortest word accepted by exactly one of `a` and `b`; ties are broken by
/// alphabet order. `None` when the languages agree.
pub fn distinguishing_word(
    a: &Automaton,
    b: &Automaton,
) -> Result<Option<Vec<Symbol>>, AutomatonError> {
    same_alphabet(a, b)?;
    let (sa, sb) = (Simulator::new(a), Simulator::new(b));
    let k = a.alphabet.len();
    let start = (sa.start(), sb.start());
    let mut parent: Vec<Option<(usize, usize)>> = vec![None];
    let mut seen: BTreeMap<(StateSet, StateSet), usize> = BTreeMap::new();
    let mut nodes = vec![start.clone()];
    seen.insert(start, 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let (pa, pb) = nodes[i].clone();
        if sa.is_accepting(&pa) != sb.is_accepting(&pb) {
            let mut word = Vec::new();
            let mut cur = i;
            while let Some((prev, x)) = parent[cur] {
                word.push(a.alphabet[x].clone());
                cur = prev;
            }
            word.reverse();
            return Ok(Some(word));
        }
        for x in 0..k {
            let (na, nb) = (sa.step(&pa, x), sb.step(&pb, x));
            if na.is_empty() && nb.is_empty() {
                continue;
            }
            let key = (na, nb);
            if !seen.contains_key(&key) {
                let j = nodes.len();
                seen.insert(key.clone(), j);
                nodes.push(key);
                parent.push(Some((i, x)));
                queue.push_back(j);
            }
        }
    }
    Ok(None)
}
