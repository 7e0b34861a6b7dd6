use std::collections::{HashMap, VecDeque};

use super::{Alphabet, Automaton, Nfa};
use crate::error::{Error, Result};

/// A complete deterministic finite automaton.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Alphabet,
    delta: Vec<Vec<usize>>,
    initial: usize,
    accepting: Vec<bool>,
}

/// Result of the subset construction: the DFA plus, for every DFA state,
/// the sorted set of NFA states it stands for.
#[derive(Clone, Debug)]
pub struct Determinized {
    pub dfa: Dfa,
    pub subsets: Vec<Vec<usize>>,
}

impl Dfa {
    /// Builds a DFA from a full transition table `table[state][symbol]`.
    pub fn from_table(alphabet: Alphabet, table: Vec<Vec<usize>>, initial: usize, accepting: &[usize]) -> Result<Self> {
        let states = table.len();
        if states == 0 {
            return Err(Error::InvalidAutomaton("a DFA needs at least one state".into()));
        }
        if initial >= states {
            return Err(Error::InvalidAutomaton(format!("initial state {initial} out of range")));
        }
        for (q, row) in table.iter().enumerate() {
            if row.len() != alphabet.len() {
                return Err(Error::InvalidAutomaton(format!(
                    "state {q} has {} transitions, expected {}",
                    row.len(),
                    alphabet.len()
                )));
            }
            if let Some(&t) = row.iter().find(|&&t| t >= states) {
                return Err(Error::InvalidAutomaton(format!("transition target {t} out of range")));
            }
        }
        let mut acc = vec![false; states];
        for &q in accepting {
            if q >= states {
                return Err(Error::InvalidAutomaton(format!("final state {q} out of range")));
            }
            acc[q] = true;
        }
        Ok(Dfa {
            alphabet,
            delta: table,
            initial,
            accepting: acc,
        })
    }

    /// Converts a deterministic NFA, adding a dead state when some
    /// transition is missing. `None` if `n` is not deterministic.
    pub fn from_deterministic_nfa(n: &Nfa) -> Option<Dfa> {
        if !n.is_deterministic() {
            return None;
        }
        let states = n.state_count();
        let k = n.alphabet().len();
        let mut table = vec![vec![usize::MAX; k]; states];
        let mut need_dead = n.initial_states().is_empty();
        for (q, row) in table.iter_mut().enumerate() {
            for (a, slot) in row.iter_mut().enumerate() {
                match n.successors(q, a).first() {
                    Some(&t) => *slot = t,
                    None => need_dead = true,
                }
            }
        }
        let mut accepting = n.final_states();
        let mut initial = n.initial_states().first().copied().unwrap_or(states);
        if need_dead {
            let dead = states;
            for row in table.iter_mut() {
                for slot in row.iter_mut() {
                    if *slot == usize::MAX {
                        *slot = dead;
                    }
                }
            }
            table.push(vec![dead; k]);
            if n.initial_states().is_empty() {
                initial = dead;
            }
        }
        accepting.retain(|&q| q < table.len());
        Dfa::from_table(n.alphabet().clone(), table, initial, &accepting).ok()
    }

    pub fn initial_state(&self) -> usize {
        self.initial
    }

    pub fn next(&self, q: usize, symbol: usize) -> usize {
        self.delta[q][symbol]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.delta
    }

    pub fn final_states(&self) -> Vec<usize> {
        (0..self.delta.len()).filter(|&q| self.accepting[q]).collect()
    }

    /// Accepts exactly the words this machine rejects.
    pub fn complement(&self) -> Dfa {
        let mut c = self.clone();
        for a in c.accepting.iter_mut() {
            *a = !*a;
        }
        c
    }

    /// Same machine started from another state.
    pub fn with_initial(&self, q: usize) -> Dfa {
        let mut d = self.clone();
        d.initial = q;
        d
    }

    pub fn run(&self, from: usize, word: &[usize]) -> usize {
        word.iter().fold(from, |q, &a| self.delta[q][a])
    }

    /// Renumbers states breadth-first from the initial state, exploring
    /// symbols in alphabet order. Unreachable states are dropped.
    pub fn canonical(&self) -> Dfa {
        let mut order = vec![usize::MAX; self.delta.len()];
        let mut queue = VecDeque::from([self.initial]);
        order[self.initial] = 0;
        let mut visited = vec![self.initial];
        while let Some(p) = queue.pop_front() {
            for &q in &self.delta[p] {
                if order[q] == usize::MAX {
                    order[q] = visited.len();
                    visited.push(q);
                    queue.push_back(q);
                }
            }
        }
        let table = visited
            .iter()
            .map(|&p| self.delta[p].iter().map(|&q| order[q]).collect())
            .collect();
        let accepting = visited.iter().map(|&p| self.accepting[p]).collect();
        Dfa {
            alphabet: self.alphabet.clone(),
            delta: table,
            initial: 0,
            accepting,
        }
    }

    /// True when the reachable parts are isomorphic.
    pub fn isomorphic(&self, other: &Dfa) -> bool {
        self.isomorphism(other).is_some()
    }

    /// The state bijection `self → other` between the reachable parts, if
    /// they are isomorphic. Index `q` of the result is the image of state `q`
    /// (`usize::MAX` for unreachable states of `self`).
    pub fn isomorphism(&self, other: &Dfa) -> Option<Vec<usize>> {
        if self.alphabet != other.alphabet {
            return None;
        }
        let mut map = vec![usize::MAX; self.delta.len()];
        let mut back = vec![usize::MAX; other.delta.len()];
        let mut queue = VecDeque::from([(self.initial, other.initial)]);
        map[self.initial] = other.initial;
        back[other.initial] = self.initial;
        while let Some((p, q)) = queue.pop_front() {
            if self.accepting[p] != other.accepting[q] {
                return None;
            }
            for a in 0..self.alphabet.len() {
                let (p2, q2) = (self.delta[p][a], other.delta[q][a]);
                match (map[p2], back[q2]) {
                    (usize::MAX, usize::MAX) => {
                        map[p2] = q2;
                        back[q2] = p2;
                        queue.push_back((p2, q2));
                    }
                    (m, b) if m == q2 && b == p2 => {}
                    _ => return None,
                }
            }
        }
        let reach_other = back.iter().filter(|&&b| b != usize::MAX).count();
        let reach_other_total = other.canonical().state_count();
        (reach_other == reach_other_total).then_some(map)
    }
}

impl Automaton for Dfa {
    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn state_count(&self) -> usize {
        self.delta.len()
    }

    fn initial(&self) -> Vec<usize> {
        vec![self.initial]
    }

    fn is_final(&self, q: usize) -> bool {
        self.accepting[q]
    }

    fn successors(&self, q: usize, symbol: usize) -> &[usize] {
        std::slice::from_ref(&self.delta[q][symbol])
    }

    fn to_nfa(&self) -> Nfa {
        let mut n = Nfa::with_states(self.alphabet.clone(), self.delta.len());
        for (p, row) in self.delta.iter().enumerate() {
            for (a, &q) in row.iter().enumerate() {
                n.add_transition(p, a, q);
            }
        }
        n.add_initial(self.initial);
        for q in self.final_states() {
            n.set_final(q, true);
        }
        n
    }
}

/// Subset construction. States are the reachable subsets, numbered in
/// breadth-first discovery order with symbols explored in alphabet order;
/// the empty subset appears (as a dead state) only when it is reachable.
pub fn determinize_tracked<A: Automaton + ?Sized>(n: &A) -> Determinized {
    let k = n.alphabet().len();
    let mut start = n.initial();
    start.sort_unstable();
    start.dedup();
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut subsets = vec![start.clone()];
    index.insert(start, 0);
    let mut table: Vec<Vec<usize>> = Vec::new();
    let mut cursor = 0;
    while cursor < subsets.len() {
        let current = subsets[cursor].clone();
        let mut row = Vec::with_capacity(k);
        for a in 0..k {
            let mut next: Vec<usize> = current
                .iter()
                .flat_map(|&q| n.successors(q, a).iter().copied())
                .collect();
            next.sort_unstable();
            next.dedup();
            let id = match index.get(&next) {
                Some(&id) => id,
                None => {
                    let id = subsets.len();
                    index.insert(next.clone(), id);
                    subsets.push(next);
                    id
                }
            };
            row.push(id);
        }
        table.push(row);
        cursor += 1;
    }
    let accepting: Vec<bool> = subsets.iter().map(|s| s.iter().any(|&q| n.is_final(q))).collect();
    Determinized {
        dfa: Dfa {
            alphabet: n.alphabet().clone(),
            delta: table,
            initial: 0,
            accepting,
        },
        subsets,
    }
}

pub fn determinize<A: Automaton + ?Sized>(n: &A) -> Dfa {
    determinize_tracked(n).dfa
}

/// Minimal complete DFA by double reversal: each reverse is trimmed and
/// then determinized. The result is canonically numbered.
pub fn minimize<A: Automaton + ?Sized>(n: &A) -> Dfa {
    let first = determinize(&n.to_nfa().trim().reverse().trim());
    determinize(&first.to_nfa().reverse().trim()).canonical()
}
