use std::collections::VecDeque;

use super::{Alphabet, Automaton};
use crate::error::{Error, Result};

/// A nondeterministic finite automaton without ε-moves.
///
/// States are `0..state_count()`. Successor lists are kept sorted and
/// deduplicated, so two machines built from the same transitions compare
/// equal regardless of insertion order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nfa {
    alphabet: Alphabet,
    delta: Vec<Vec<Vec<usize>>>,
    initial: Vec<usize>,
    accepting: Vec<bool>,
}

impl Nfa {
    /// A machine with `states` states and no transitions, initial or final states.
    pub fn with_states(alphabet: Alphabet, states: usize) -> Self {
        let k = alphabet.len();
        Nfa {
            alphabet,
            delta: vec![vec![Vec::new(); k]; states],
            initial: Vec::new(),
            accepting: vec![false; states],
        }
    }

    /// Builds and validates a machine. Transitions are `(from, symbol, to)`.
    pub fn new(
        alphabet: Alphabet,
        states: usize,
        transitions: &[(usize, char, usize)],
        initial: &[usize],
        accepting: &[usize],
    ) -> Result<Self> {
        let mut n = Nfa::with_states(alphabet, states);
        for &(from, c, to) in transitions {
            let a = n.alphabet.index_of(c).ok_or_else(|| {
                Error::AlphabetMismatch(format!("symbol {c:?} is not in alphabet \"{}\"", n.alphabet))
            })?;
            n.check_state(from)?;
            n.check_state(to)?;
            n.add_transition(from, a, to);
        }
        for &q in initial {
            n.check_state(q)?;
            n.add_initial(q);
        }
        for &q in accepting {
            n.check_state(q)?;
            n.set_final(q, true);
        }
        Ok(n)
    }

    fn check_state(&self, q: usize) -> Result<()> {
        if q >= self.state_count() {
            return Err(Error::InvalidAutomaton(format!(
                "state {q} out of range for {} states",
                self.state_count()
            )));
        }
        Ok(())
    }

    pub fn add_state(&mut self) -> usize {
        self.delta.push(vec![Vec::new(); self.alphabet.len()]);
        self.accepting.push(false);
        self.delta.len() - 1
    }

    /// Adds `from --symbol--> to`, where `symbol` is an alphabet index.
    pub fn add_transition(&mut self, from: usize, symbol: usize, to: usize) {
        let targets = &mut self.delta[from][symbol];
        if let Err(pos) = targets.binary_search(&to) {
            targets.insert(pos, to);
        }
    }

    pub fn add_initial(&mut self, q: usize) {
        if let Err(pos) = self.initial.binary_search(&q) {
            self.initial.insert(pos, q);
        }
    }

    pub fn set_final(&mut self, q: usize, accepting: bool) {
        self.accepting[q] = accepting;
    }

    pub fn initial_states(&self) -> &[usize] {
        &self.initial
    }

    pub fn final_states(&self) -> Vec<usize> {
        (0..self.state_count()).filter(|&q| self.accepting[q]).collect()
    }

    /// All transitions as `(from, symbol index, to)`, sorted.
    pub fn transitions(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for (p, row) in self.delta.iter().enumerate() {
            for (a, targets) in row.iter().enumerate() {
                out.extend(targets.iter().map(|&q| (p, a, q)));
            }
        }
        out
    }

    /// The machine with every transition flipped and initial/final swapped.
    pub fn reverse(&self) -> Nfa {
        let mut r = Nfa::with_states(self.alphabet.clone(), self.state_count());
        for (p, a, q) in self.transitions() {
            r.add_transition(q, a, p);
        }
        for q in self.final_states() {
            r.add_initial(q);
        }
        for &q in &self.initial {
            r.set_final(q, true);
        }
        r
    }

    /// States with a non-empty left language.
    pub fn reachable_states(&self) -> Vec<bool> {
        let mut seen = vec![false; self.state_count()];
        let mut queue: VecDeque<usize> = VecDeque::new();
        for &q in &self.initial {
            if !seen[q] {
                seen[q] = true;
                queue.push_back(q);
            }
        }
        while let Some(p) = queue.pop_front() {
            for targets in &self.delta[p] {
                for &q in targets {
                    if !seen[q] {
                        seen[q] = true;
                        queue.push_back(q);
                    }
                }
            }
        }
        seen
    }

    /// States with a non-empty right language.
    pub fn productive_states(&self) -> Vec<bool> {
        self.reverse().reachable_states()
    }

    /// Removes unreachable and empty states, returning the trimmed machine
    /// together with the original index of every kept state.
    pub fn trim_with_map(&self) -> (Nfa, Vec<usize>) {
        let reach = self.reachable_states();
        let prod = self.productive_states();
        let kept: Vec<usize> = (0..self.state_count()).filter(|&q| reach[q] && prod[q]).collect();
        let mut new_index = vec![usize::MAX; self.state_count()];
        for (i, &q) in kept.iter().enumerate() {
            new_index[q] = i;
        }
        let mut t = Nfa::with_states(self.alphabet.clone(), kept.len());
        for (p, a, q) in self.transitions() {
            if new_index[p] != usize::MAX && new_index[q] != usize::MAX {
                t.add_transition(new_index[p], a, new_index[q]);
            }
        }
        for &q in &self.initial {
            if new_index[q] != usize::MAX {
                t.add_initial(new_index[q]);
            }
        }
        for &q in &kept {
            if self.accepting[q] {
                t.set_final(new_index[q], true);
            }
        }
        (t, kept)
    }

    pub fn trim(&self) -> Nfa {
        self.trim_with_map().0
    }

    /// At most one initial state and at most one successor per (state, symbol).
    pub fn is_deterministic(&self) -> bool {
        self.initial.len() <= 1 && self.delta.iter().all(|row| row.iter().all(|t| t.len() <= 1))
    }

    /// Same machine with a different set of initial states.
    pub fn with_initial(&self, initial: &[usize]) -> Nfa {
        let mut n = self.clone();
        n.initial.clear();
        for &q in initial {
            n.add_initial(q);
        }
        n
    }

    /// Same machine with a different set of final states.
    pub fn with_final(&self, accepting: &[usize]) -> Nfa {
        let mut n = self.clone();
        n.accepting = vec![false; n.state_count()];
        for &q in accepting {
            n.accepting[q] = true;
        }
        n
    }
}

impl Automaton for Nfa {
    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn state_count(&self) -> usize {
        self.delta.len()
    }

    fn initial(&self) -> Vec<usize> {
        self.initial.clone()
    }

    fn is_final(&self, q: usize) -> bool {
        self.accepting[q]
    }

    fn successors(&self, q: usize, symbol: usize) -> &[usize] {
        &self.delta[q][symbol]
    }

    fn to_nfa(&self) -> Nfa {
        self.clone()
    }
}
