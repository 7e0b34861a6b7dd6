//! Finite automata: NFAs, complete DFAs, reversal, the subset construction,
//! trimming, double-reversal minimization, per-state languages and exact
//! language equivalence.

mod alphabet;
mod dfa;
pub mod io;
mod nfa;
pub mod regex;
mod summary;

use std::collections::{BTreeSet, HashMap, VecDeque};

pub use alphabet::{Alphabet, RESERVED};
pub use dfa::{determinize, determinize_tracked, minimize, Determinized, Dfa};
pub use nfa::Nfa;
pub use regex::parse_regex;
pub use summary::LanguageSummary;

use crate::error::{Error, Result};

/// Read access shared by [`Nfa`] and [`Dfa`].
pub trait Automaton {
    fn alphabet(&self) -> &Alphabet;
    fn state_count(&self) -> usize;
    fn initial(&self) -> Vec<usize>;
    fn is_final(&self, q: usize) -> bool;
    /// Successors of `q` on the symbol with alphabet index `symbol`.
    fn successors(&self, q: usize, symbol: usize) -> &[usize];
    fn to_nfa(&self) -> Nfa;

    /// Membership test. Words using symbols outside the alphabet are rejected.
    fn accepts(&self, word: &str) -> bool {
        match self.alphabet().encode(word) {
            Some(w) => self.accepts_encoded(&w),
            None => false,
        }
    }

    fn accepts_encoded(&self, word: &[usize]) -> bool {
        let mut current = self.initial();
        for &a in word {
            let mut next: Vec<usize> = current
                .iter()
                .flat_map(|&q| self.successors(q, a).iter().copied())
                .collect();
            next.sort_unstable();
            next.dedup();
            current = next;
        }
        current.iter().any(|&q| self.is_final(q))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    /// Words leading from an initial state to the state.
    Left,
    /// Words leading from the state to a final state.
    Right,
}

/// Bounded enumeration of the left or right language of one state.
pub struct StateLanguageQuery<'a> {
    pub machine: &'a dyn Automaton,
    pub state: usize,
    pub direction: Direction,
    pub length_bound: usize,
}

impl StateLanguageQuery<'_> {
    pub fn run(&self) -> BTreeSet<String> {
        state_language(self.machine, self.state, self.direction, self.length_bound)
    }
}

/// The machine whose accepted language is the left or right language of `state`.
pub fn state_machine<A: Automaton + ?Sized>(machine: &A, state: usize, direction: Direction) -> Nfa {
    let n = machine.to_nfa();
    match direction {
        Direction::Right => n.with_initial(&[state]),
        Direction::Left => n.with_final(&[state]),
    }
}

/// All words of length at most `bound` in the left or right language of `state`.
pub fn state_language<A: Automaton + ?Sized>(
    machine: &A,
    state: usize,
    direction: Direction,
    bound: usize,
) -> BTreeSet<String> {
    let m = state_machine(machine, state, direction);
    words_up_to(&m, bound).into_iter().collect()
}

/// Minimum number of steps from each state to a final state (`usize::MAX` if none).
fn distance_to_final(n: &Nfa) -> Vec<usize> {
    let rev = n.reverse();
    let mut dist = vec![usize::MAX; n.state_count()];
    let mut queue = VecDeque::new();
    for q in rev.initial_states() {
        dist[*q] = 0;
        queue.push_back(*q);
    }
    while let Some(p) = queue.pop_front() {
        for a in 0..rev.alphabet().len() {
            for &q in rev.successors(p, a) {
                if dist[q] == usize::MAX {
                    dist[q] = dist[p] + 1;
                    queue.push_back(q);
                }
            }
        }
    }
    dist
}

/// Accepted words of length ≤ `bound`, in shortlex order.
pub fn words_up_to<A: Automaton + ?Sized>(machine: &A, bound: usize) -> Vec<String> {
    enumerate_words(machine, bound, usize::MAX)
}

/// The first `count` accepted words in shortlex order, looking no further
/// than length `bound`.
pub fn shortest_words<A: Automaton + ?Sized>(machine: &A, count: usize, bound: usize) -> Vec<String> {
    enumerate_words(machine, bound, count)
}

fn enumerate_words<A: Automaton + ?Sized>(machine: &A, bound: usize, limit: usize) -> Vec<String> {
    let n = machine.to_nfa();
    let dist = distance_to_final(&n);
    let live = |set: &[usize], remaining: usize| set.iter().any(|&q| dist[q] <= remaining);
    let mut start = n.initial_states().to_vec();
    start.sort_unstable();
    let mut out = Vec::new();
    if limit == 0 || !live(&start, bound) {
        return out;
    }
    // Level-by-level breadth-first search keeps the output in shortlex order.
    let mut level: Vec<(Vec<usize>, Vec<usize>)> = vec![(Vec::new(), start)];
    for len in 0..=bound {
        for (word, set) in &level {
            if set.iter().any(|&q| n.is_final(q)) {
                out.push(n.alphabet().decode(word));
                if out.len() >= limit {
                    return out;
                }
            }
        }
        if len == bound {
            break;
        }
        let remaining = bound - len - 1;
        let mut next_level = Vec::new();
        for (word, set) in &level {
            for a in 0..n.alphabet().len() {
                let mut next: Vec<usize> = set.iter().flat_map(|&q| n.successors(q, a).iter().copied()).collect();
                next.sort_unstable();
                next.dedup();
                if live(&next, remaining) {
                    let mut w = word.clone();
                    w.push(a);
                    next_level.push((w, next));
                }
            }
        }
        level = next_level;
        if level.is_empty() {
            break;
        }
    }
    out
}

/// Exact language equivalence: breadth-first search of the product of the
/// two subset constructions for a pair of subsets that disagree on
/// acceptance.
pub fn equivalent<A, B>(a: &A, b: &B) -> Result<bool>
where
    A: Automaton + ?Sized,
    B: Automaton + ?Sized,
{
    Ok(distinguishing_word(a, b)?.is_none())
}

/// A shortest word in the symmetric difference of the two languages.
pub fn distinguishing_word<A, B>(a: &A, b: &B) -> Result<Option<String>>
where
    A: Automaton + ?Sized,
    B: Automaton + ?Sized,
{
    if a.alphabet() != b.alphabet() {
        return Err(Error::AlphabetMismatch(format!(
            "\"{}\" vs \"{}\"",
            a.alphabet(),
            b.alphabet()
        )));
    }
    let norm = |mut v: Vec<usize>| {
        v.sort_unstable();
        v.dedup();
        v
    };
    let step = |m: &dyn Fn(usize, usize) -> Vec<usize>, set: &[usize], s: usize| {
        norm(set.iter().flat_map(|&q| m(q, s)).collect())
    };
    let succ_a = |q: usize, s: usize| a.successors(q, s).to_vec();
    let succ_b = |q: usize, s: usize| b.successors(q, s).to_vec();
    let start = (norm(a.initial()), norm(b.initial()));
    type Pair = (Vec<usize>, Vec<usize>);
    let mut parent: HashMap<Pair, Option<(Pair, usize)>> = HashMap::new();
    parent.insert(start.clone(), None);
    let mut queue = VecDeque::from([start]);
    while let Some(pair) = queue.pop_front() {
        let fa = pair.0.iter().any(|&q| a.is_final(q));
        let fb = pair.1.iter().any(|&q| b.is_final(q));
        if fa != fb {
            let mut word = Vec::new();
            let mut cur = pair;
            while let Some(Some((prev, s))) = parent.get(&cur) {
                word.push(*s);
                cur = prev.clone();
            }
            word.reverse();
            return Ok(Some(a.alphabet().decode(&word)));
        }
        for s in 0..a.alphabet().len() {
            let next = (step(&succ_a, &pair.0, s), step(&succ_b, &pair.1, s));
            if !parent.contains_key(&next) {
                parent.insert(next.clone(), Some((pair.clone(), s)));
                queue.push_back(next);
            }
        }
    }
    Ok(None)
}

/// True when the machine accepts no word.
pub fn is_empty<A: Automaton + ?Sized>(machine: &A) -> bool {
    let n = machine.to_nfa();
    let reach = n.reachable_states();
    (0..n.state_count()).all(|q| !(reach[q] && n.is_final(q)))
}

/// Product machine accepting the intersection of the two languages.
pub fn intersect<A, B>(a: &A, b: &B) -> Result<Nfa>
where
    A: Automaton + ?Sized,
    B: Automaton + ?Sized,
{
    if a.alphabet() != b.alphabet() {
        return Err(Error::AlphabetMismatch(format!(
            "\"{}\" vs \"{}\"",
            a.alphabet(),
            b.alphabet()
        )));
    }
    let mut index: HashMap<(usize, usize), usize> = HashMap::new();
    let mut pairs = Vec::new();
    for p in a.initial() {
        for q in b.initial() {
            index.entry((p, q)).or_insert_with(|| {
                pairs.push((p, q));
                pairs.len() - 1
            });
        }
    }
    let initial: Vec<usize> = (0..pairs.len()).collect();
    let mut edges = Vec::new();
    let mut cursor = 0;
    while cursor < pairs.len() {
        let (p, q) = pairs[cursor];
        for s in 0..a.alphabet().len() {
            for &p2 in a.successors(p, s) {
                for &q2 in b.successors(q, s) {
                    let id = *index.entry((p2, q2)).or_insert_with(|| {
                        pairs.push((p2, q2));
                        pairs.len() - 1
                    });
                    edges.push((cursor, s, id));
                }
            }
        }
        cursor += 1;
    }
    let mut n = Nfa::with_states(a.alphabet().clone(), pairs.len());
    for (p, s, q) in edges {
        n.add_transition(p, s, q);
    }
    for q in initial {
        n.add_initial(q);
    }
    for (i, &(p, q)) in pairs.iter().enumerate() {
        if a.is_final(p) && b.is_final(q) {
            n.set_final(i, true);
        }
    }
    Ok(n)
}

/// Disjoint union of several machines over the same alphabet.
pub fn union_all(machines: &[Nfa], alphabet: &Alphabet) -> Result<Nfa> {
    let mut n = Nfa::with_states(alphabet.clone(), 0);
    for m in machines {
        if m.alphabet() != alphabet {
            return Err(Error::AlphabetMismatch(format!(
                "\"{}\" vs \"{alphabet}\"",
                m.alphabet()
            )));
        }
        let offset = n.state_count();
        for _ in 0..m.state_count() {
            n.add_state();
        }
        for (p, s, q) in m.transitions() {
            n.add_transition(p + offset, s, q + offset);
        }
        for &q in m.initial_states() {
            n.add_initial(q + offset);
        }
        for q in m.final_states() {
            n.set_final(q + offset, true);
        }
    }
    Ok(n)
}

/// Machine for `{symbol}·L(m)`.
pub fn prefix_symbol(m: &Nfa, symbol: usize) -> Nfa {
    let mut n = m.clone();
    let fresh = n.add_state();
    for &q in m.initial_states() {
        n.add_transition(fresh, symbol, q);
    }
    n.with_initial(&[fresh])
}

/// The one-state machine accepting every word.
pub fn universal(alphabet: &Alphabet) -> Dfa {
    Dfa::from_table(alphabet.clone(), vec![vec![0; alphabet.len()]], 0, &[0]).expect("one-state table is valid")
}
