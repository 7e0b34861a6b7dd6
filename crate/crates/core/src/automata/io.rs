//! JSON and Graphviz serialization of automata.
//!
//! The JSON schema is
//!
//! ```json
//! { "alphabet": "ab", "states": 3, "initial": [0], "final": [2],
//!   "transitions": [ {"from": 0, "symbol": "a", "to": 1} ] }
//! ```
//!
//! Exported transitions are sorted by source state, then symbol (in alphabet
//! order), then target state.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{Alphabet, Automaton, Nfa};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransitionRecord {
    pub from: usize,
    pub symbol: String,
    pub to: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutomatonFile {
    pub alphabet: String,
    pub states: usize,
    pub initial: Vec<usize>,
    #[serde(rename = "final")]
    pub accepting: Vec<usize>,
    pub transitions: Vec<TransitionRecord>,
}

impl AutomatonFile {
    pub fn from_automaton<A: Automaton + ?Sized>(machine: &A) -> Self {
        let n = machine.to_nfa();
        let sigma = n.alphabet();
        AutomatonFile {
            alphabet: sigma.to_string(),
            states: n.state_count(),
            initial: n.initial_states().to_vec(),
            accepting: n.final_states(),
            transitions: n
                .transitions()
                .into_iter()
                .map(|(from, a, to)| TransitionRecord {
                    from,
                    symbol: sigma.symbol(a).to_string(),
                    to,
                })
                .collect(),
        }
    }

    pub fn to_nfa(&self) -> Result<Nfa> {
        let sigma = Alphabet::new(&self.alphabet)?;
        let mut edges = Vec::with_capacity(self.transitions.len());
        for t in &self.transitions {
            let mut chars = t.symbol.chars();
            let c = match (chars.next(), chars.next()) {
                (Some(c), None) => c,
                _ => {
                    return Err(Error::InvalidAutomaton(format!(
                        "transition symbol {:?} is not a single character",
                        t.symbol
                    )))
                }
            };
            edges.push((t.from, c, t.to));
        }
        Nfa::new(sigma, self.states, &edges, &self.initial, &self.accepting)
    }
}

pub fn to_json<A: Automaton + ?Sized>(machine: &A) -> String {
    serde_json::to_string_pretty(&AutomatonFile::from_automaton(machine)).expect("automaton file serializes")
}

pub fn from_json(text: &str) -> Result<Nfa> {
    let file: AutomatonFile = serde_json::from_str(text)?;
    file.to_nfa()
}

/// Graphviz rendering: one node per state, double circles for final states,
/// parallel edges merged with their labels joined by commas.
pub fn to_dot<A: Automaton + ?Sized>(machine: &A, name: &str) -> String {
    let n = machine.to_nfa();
    let sigma = n.alphabet();
    let mut edges: BTreeMap<(usize, usize), Vec<char>> = BTreeMap::new();
    for (p, a, q) in n.transitions() {
        edges.entry((p, q)).or_default().push(sigma.symbol(a));
    }
    let mut out = String::new();
    let _ = writeln!(out, "digraph {name} {{");
    let _ = writeln!(out, "  rankdir=LR;");
    let _ = writeln!(out, "  node [shape=circle];");
    for q in 0..n.state_count() {
        let shape = if n.is_final(q) { "doublecircle" } else { "circle" };
        let _ = writeln!(out, "  {q} [shape={shape}];");
    }
    for (k, &q) in n.initial_states().iter().enumerate() {
        let _ = writeln!(out, "  start{k} [shape=point];");
        let _ = writeln!(out, "  start{k} -> {q};");
    }
    for ((p, q), labels) in edges {
        let label: Vec<String> = labels.iter().map(|c| c.to_string()).collect();
        let _ = writeln!(out, "  {p} -> {q} [label=\"{}\"];", label.join(","));
    }
    out.push_str("}\n");
    out
}
