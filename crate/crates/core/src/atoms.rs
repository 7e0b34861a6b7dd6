//! Left and right quotients, left and right atoms, and the átomaton.
//!
//! Everything is derived from two runs of one construction. For the
//! minimal DFA `D` of `L` (states `q_0..q_{n-1}`, right languages = left
//! quotients `L_j`), the reachable subsets `S` of `determinize(reverse(trim(D)))`
//! are exactly the sets for which the atomic intersection
//!
//! ```text
//! I_S = ⋂_{k ∈ S} L_k  ∩  ⋂_{k ∉ S} (Σ* ∖ L_k)
//! ```
//!
//! is non-empty. That determinized machine is the minimal DFA of the
//! reversed language; its reverse is the átomaton, whose state `s_i` has
//! right language `A_i` (a left atom) and left language `R_i` (a right
//! quotient). Running the same construction on the reversed minimal DFA
//! yields the right atoms `B_j`, which land on the states of `D` again.
//!
//! All quotients and atoms are stored as index sets: a left quotient is the
//! set of left atoms it contains, a right quotient the set of right atoms.

use std::fmt;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::automata::{determinize_tracked, minimize, state_machine, Automaton, Dfa, Direction, LanguageSummary, Nfa};
use crate::error::{Error, Result};
use crate::set::IndexSet;

/// Quotients and atoms of one non-empty regular language.
///
/// `n` is the number of left quotients (= right atoms = states of the
/// minimal DFA), `m` the number of right quotients (= left atoms = states of
/// the átomaton). Index `j < n` ties together `L_j`, `B_j` and DFA state
/// `q_j`; index `i < m` ties together `R_i`, `A_i` and átomaton state `s_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LanguageDecomposition {
    dfa: Dfa,
    atomaton: Nfa,
    left_quotients: Vec<IndexSet>,
    right_quotients: Vec<IndexSet>,
    left_atom_sets: Vec<IndexSet>,
    right_atom_sets: Vec<IndexSet>,
    final_left_atom: usize,
    initial_left_atoms: Vec<usize>,
    negative_left_atom: Option<usize>,
}

struct AtomicSubsets {
    /// Minimal DFA of the reversed language, canonically numbered.
    reversed: Dfa,
    /// For each state of `reversed`, the subset of source-DFA states.
    subsets: Vec<IndexSet>,
}

fn atomic_subsets(dfa: &Dfa) -> AtomicSubsets {
    let (trimmed, kept) = dfa.to_nfa().trim_with_map();
    let det = determinize_tracked(&trimmed.reverse());
    let n = dfa.state_count();
    let subsets = det
        .subsets
        .iter()
        .map(|s| IndexSet::from_indices(n, s.iter().map(|&q| kept[q])))
        .collect();
    AtomicSubsets {
        reversed: det.dfa,
        subsets,
    }
}

/// Computes the decomposition of `L(language)`.
pub fn decompose<A: Automaton + ?Sized>(language: &A) -> Result<LanguageDecomposition> {
    let dfa = minimize(language);
    if dfa.final_states().is_empty() {
        return Err(Error::EmptyLanguage);
    }
    let n = dfa.state_count();

    let left = atomic_subsets(&dfa);
    let m = left.reversed.state_count();
    let atomaton = left.reversed.to_nfa().reverse();

    let right = atomic_subsets(&left.reversed);
    // The second construction rebuilds the minimal DFA of L; line its states
    // up with `dfa` so that B_j sits on q_j.
    let back = right
        .reversed
        .isomorphism(&dfa)
        .expect("reversing the minimal DFA of the reversed language must rebuild the minimal DFA");
    let mut right_atom_sets = vec![IndexSet::empty(m); n];
    for (state, t) in right.subsets.into_iter().enumerate() {
        right_atom_sets[back[state]] = t;
    }

    let left_atom_sets = left.subsets;
    let left_quotients = (0..n)
        .map(|k| IndexSet::from_indices(m, (0..m).filter(|&i| left_atom_sets[i].contains(k))))
        .collect();
    let right_quotients = (0..m)
        .map(|i| IndexSet::from_indices(n, (0..n).filter(|&j| right_atom_sets[j].contains(i))))
        .collect();

    let initial_left_atoms = atomaton.initial_states().to_vec();
    let final_left_atom = atomaton.final_states()[0];
    let negative_left_atom = left_atom_sets.iter().position(|s| s.is_empty());

    Ok(LanguageDecomposition {
        dfa,
        atomaton,
        left_quotients,
        right_quotients,
        left_atom_sets,
        right_atom_sets,
        final_left_atom,
        initial_left_atoms,
        negative_left_atom,
    })
}

/// Inverse of a permutation given as `order[new] = old`.
fn inverse_permutation(order: &[usize], len: usize, what: &str) -> Result<Vec<usize>> {
    if order.len() != len {
        return Err(Error::InvalidAutomaton(format!(
            "{what} order has {} entries, expected {len}",
            order.len()
        )));
    }
    let mut inv = vec![usize::MAX; len];
    for (new, &old) in order.iter().enumerate() {
        if old >= len || inv[old] != usize::MAX {
            return Err(Error::InvalidAutomaton(format!("{what} order is not a permutation")));
        }
        inv[old] = new;
    }
    Ok(inv)
}

impl LanguageDecomposition {
    /// Number of left quotients (and right atoms).
    pub fn n(&self) -> usize {
        self.left_quotients.len()
    }

    /// Number of right quotients (and left atoms).
    pub fn m(&self) -> usize {
        self.right_quotients.len()
    }

    pub fn dfa(&self) -> &Dfa {
        &self.dfa
    }

    pub fn atomaton(&self) -> &Nfa {
        &self.atomaton
    }

    /// `L_j` as a set of left-atom indices.
    pub fn left_quotient(&self, j: usize) -> &IndexSet {
        &self.left_quotients[j]
    }

    pub fn left_quotients(&self) -> &[IndexSet] {
        &self.left_quotients
    }

    /// `R_i` as a set of right-atom indices.
    pub fn right_quotient(&self, i: usize) -> &IndexSet {
        &self.right_quotients[i]
    }

    pub fn right_quotients(&self) -> &[IndexSet] {
        &self.right_quotients
    }

    /// The `S ⊆ {0..n-1}` with `A_i = I_S`.
    pub fn left_atom_set(&self, i: usize) -> &IndexSet {
        &self.left_atom_sets[i]
    }

    pub fn left_atom_sets(&self) -> &[IndexSet] {
        &self.left_atom_sets
    }

    /// The `T ⊆ {0..m-1}` with `B_j = J_T`.
    pub fn right_atom_set(&self, j: usize) -> &IndexSet {
        &self.right_atom_sets[j]
    }

    pub fn right_atom_sets(&self) -> &[IndexSet] {
        &self.right_atom_sets
    }

    /// The unique left atom containing the empty word.
    pub fn final_left_atom(&self) -> usize {
        self.final_left_atom
    }

    /// Left atoms contained in `L`.
    pub fn initial_left_atoms(&self) -> &[usize] {
        &self.initial_left_atoms
    }

    /// The left atom `I_∅`, when non-empty.
    pub fn negative_left_atom(&self) -> Option<usize> {
        self.negative_left_atom
    }

    /// Index of the left quotient `L` itself (the initial DFA state).
    pub fn language_index(&self) -> usize {
        self.dfa.initial_state()
    }

    /// The unique right atom containing the empty word.
    pub fn final_right_atom(&self) -> usize {
        self.dfa.initial_state()
    }

    /// Machine accepting `L_j`.
    pub fn left_quotient_machine(&self, j: usize) -> Nfa {
        state_machine(&self.dfa, j, Direction::Right)
    }

    /// Machine accepting `B_j`.
    pub fn right_atom_machine(&self, j: usize) -> Nfa {
        state_machine(&self.dfa, j, Direction::Left)
    }

    /// Machine accepting `A_i`.
    pub fn left_atom_machine(&self, i: usize) -> Nfa {
        state_machine(&self.atomaton, i, Direction::Right)
    }

    /// Machine accepting `R_i`.
    pub fn right_quotient_machine(&self, i: usize) -> Nfa {
        state_machine(&self.atomaton, i, Direction::Left)
    }

    pub fn left_quotient_summary(&self, j: usize, sample: usize) -> LanguageSummary {
        LanguageSummary::of(&self.left_quotient_machine(j), sample)
    }

    pub fn right_quotient_summary(&self, i: usize, sample: usize) -> LanguageSummary {
        LanguageSummary::of(&self.right_quotient_machine(i), sample)
    }

    pub fn left_atom_summary(&self, i: usize, sample: usize) -> LanguageSummary {
        LanguageSummary::of(&self.left_atom_machine(i), sample)
    }

    pub fn right_atom_summary(&self, j: usize, sample: usize) -> LanguageSummary {
        LanguageSummary::of(&self.right_atom_machine(j), sample)
    }

    /// The same decomposition under different index orders:
    /// `quotient_order[new] = old` permutes the `n` side (left quotients,
    /// right atoms, DFA states), `atom_order[new] = old` the `m` side
    /// (right quotients, left atoms, átomaton states).
    pub fn reindexed(&self, quotient_order: &[usize], atom_order: &[usize]) -> Result<Self> {
        let (n, m) = (self.n(), self.m());
        let qinv = inverse_permutation(quotient_order, n, "quotient")?;
        let ainv = inverse_permutation(atom_order, m, "atom")?;
        let remap = |s: &IndexSet, inv: &[usize]| IndexSet::from_indices(s.universe(), s.iter().map(|x| inv[x]));

        let table = quotient_order
            .iter()
            .map(|&old| self.dfa.table()[old].iter().map(|&q| qinv[q]).collect())
            .collect();
        let accepting: Vec<usize> = self.dfa.final_states().iter().map(|&q| qinv[q]).collect();
        let dfa = Dfa::from_table(
            self.dfa.alphabet().clone(),
            table,
            qinv[self.dfa.initial_state()],
            &accepting,
        )?;

        let mut atomaton = Nfa::with_states(self.atomaton.alphabet().clone(), m);
        for (p, a, q) in self.atomaton.transitions() {
            atomaton.add_transition(ainv[p], a, ainv[q]);
        }
        for &q in self.atomaton.initial_states() {
            atomaton.add_initial(ainv[q]);
        }
        for q in self.atomaton.final_states() {
            atomaton.set_final(ainv[q], true);
        }

        let mut initial_left_atoms: Vec<usize> = self.initial_left_atoms.iter().map(|&i| ainv[i]).collect();
        initial_left_atoms.sort_unstable();

        Ok(LanguageDecomposition {
            dfa,
            atomaton,
            left_quotients: quotient_order
                .iter()
                .map(|&o| remap(&self.left_quotients[o], &ainv))
                .collect(),
            right_quotients: atom_order
                .iter()
                .map(|&o| remap(&self.right_quotients[o], &qinv))
                .collect(),
            left_atom_sets: atom_order
                .iter()
                .map(|&o| remap(&self.left_atom_sets[o], &qinv))
                .collect(),
            right_atom_sets: quotient_order
                .iter()
                .map(|&o| remap(&self.right_atom_sets[o], &ainv))
                .collect(),
            final_left_atom: ainv[self.final_left_atom],
            initial_left_atoms,
            negative_left_atom: self.negative_left_atom.map(|i| ainv[i]),
        })
    }
}

/// The `n × m` Boolean matrix with entry `(i, j)` set iff `A_j ⊆ L_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientAtomMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<bool>>,
}

impl QuotientAtomMatrix {
    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        QuotientAtomMatrix {
            rows,
            cols,
            entries: (0..rows).map(|i| (0..cols).map(|j| f(i, j)).collect()).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> bool {
        self.entries[i][j]
    }

    pub fn row(&self, i: usize) -> &[bool] {
        &self.entries[i]
    }

    pub fn column(&self, j: usize) -> Vec<bool> {
        self.entries.iter().map(|r| r[j]).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.entries[j][i])
    }

    /// 0/1 rows, row-major, as nested arrays of integers.
    pub fn to_json(&self) -> String {
        let grid: Vec<Vec<u8>> = self
            .entries
            .iter()
            .map(|r| r.iter().map(|&b| u8::from(b)).collect())
            .collect();
        serde_json::to_string(&grid).expect("matrix serializes")
    }

    pub fn has_distinct_rows_and_columns(&self) -> bool {
        let distinct = |v: Vec<Vec<bool>>| {
            let mut w = v.clone();
            w.sort();
            w.dedup();
            w.len() == v.len()
        };
        distinct(self.entries.clone()) && distinct((0..self.cols).map(|j| self.column(j)).collect())
    }
}

impl fmt::Display for QuotientAtomMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let line: Vec<&str> = row.iter().map(|&b| if b { "1" } else { "0" }).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Quotient-atom matrix read off the left atomic intersections.
pub fn quotient_atom_matrix(d: &LanguageDecomposition) -> QuotientAtomMatrix {
    QuotientAtomMatrix::from_fn(d.n(), d.m(), |i, j| d.left_atom_set(j).contains(i))
}

/// The `m × n` matrix built from right quotients and right atoms
/// (entry `(i, j)` set iff `B_j ⊆ R_i`); it is the transpose of
/// [`quotient_atom_matrix`].
pub fn right_quotient_atom_matrix(d: &LanguageDecomposition) -> QuotientAtomMatrix {
    QuotientAtomMatrix::from_fn(d.m(), d.n(), |i, j| d.right_atom_set(j).contains(i))
}

/// The identity a violation refers to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Identity {
    /// `R_i = ⋃ { B_k : A_i ⊆ L_k }`.
    RightQuotientFromAtoms(usize),
    /// `L_j = ⋃ { A_l : B_j ⊆ R_l }`.
    LeftQuotientFromAtoms(usize),
    /// `⋃ { R_i : A_i ⊄ X } = ⋃ { B_j : L_j ⊄ X }`.
    UnionOfRightQuotients,
    /// `⋂ { R_j : A_j ⊆ X } = ⋃ { B_i : X ⊆ L_i }`.
    IntersectionOfRightQuotients,
    /// `⋃ { L_i : B_i ⊄ Y } = ⋃ { A_j : R_j ⊄ Y }`.
    UnionOfLeftQuotients,
    /// `⋂ { L_j : B_j ⊆ Y } = ⋃ { A_i : Y ⊆ R_i }`.
    IntersectionOfLeftQuotients,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityViolation {
    pub identity: Identity,
    /// The union of atoms the identity was instantiated at, if any.
    pub subject: Option<Vec<usize>>,
    pub lhs: Vec<usize>,
    pub rhs: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    /// True when every subset was checked, false when sampled.
    pub exhaustive: bool,
    pub instances: usize,
    pub violations: Vec<IdentityViolation>,
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Sides up to this size are checked on every subset.
pub const EXHAUSTIVE_LIMIT: usize = 12;

/// Number of random subsets per side when a side is too large for
/// exhaustive checking.
pub const SAMPLED_SUBSETS: usize = 4096;

/// Checks the quotient/atom correspondences: each right quotient is the
/// union of the right atoms `B_k` with `A_i ⊆ L_k` and vice versa, and the
/// four identities relating unions and intersections of quotients on one
/// side to unions of atoms on the other, for every union `X` of left atoms
/// and `Y` of right atoms (all of them when `m, n ≤ 12`, a seeded random
/// sample otherwise).
pub fn verify_quotient_atom_identities(d: &LanguageDecomposition) -> IdentityReport {
    verify_quotient_atom_identities_seeded(d, 0x5eed)
}

pub fn verify_quotient_atom_identities_seeded(d: &LanguageDecomposition, seed: u64) -> IdentityReport {
    let (n, m) = (d.n(), d.m());
    let mut violations = Vec::new();
    let mut instances = 0;

    for i in 0..m {
        let rhs = IndexSet::from_indices(n, (0..n).filter(|&k| d.left_quotient(k).contains(i)));
        instances += 1;
        if &rhs != d.right_quotient(i) {
            violations.push(IdentityViolation {
                identity: Identity::RightQuotientFromAtoms(i),
                subject: None,
                lhs: d.right_quotient(i).to_vec(),
                rhs: rhs.to_vec(),
            });
        }
    }
    for j in 0..n {
        let rhs = IndexSet::from_indices(m, (0..m).filter(|&l| d.right_quotient(l).contains(j)));
        instances += 1;
        if &rhs != d.left_quotient(j) {
            violations.push(IdentityViolation {
                identity: Identity::LeftQuotientFromAtoms(j),
                subject: None,
                lhs: d.left_quotient(j).to_vec(),
                rhs: rhs.to_vec(),
            });
        }
    }

    let exhaustive = n <= EXHAUSTIVE_LIMIT && m <= EXHAUSTIVE_LIMIT;
    let mut rng = StdRng::seed_from_u64(seed);
    let subsets = |size: usize, rng: &mut StdRng| -> Vec<IndexSet> {
        if size <= EXHAUSTIVE_LIMIT {
            (0..1u64 << size).map(|mask| IndexSet::from_mask(size, mask)).collect()
        } else {
            (0..SAMPLED_SUBSETS)
                .map(|_| IndexSet::from_indices(size, (0..size).filter(|_| rng.random_bool(0.5))))
                .collect()
        }
    };

    let mut check = |identity: Identity, subject: &IndexSet, lhs: IndexSet, rhs: IndexSet| {
        instances += 1;
        if lhs != rhs {
            violations.push(IdentityViolation {
                identity,
                subject: Some(subject.to_vec()),
                lhs: lhs.to_vec(),
                rhs: rhs.to_vec(),
            });
        }
    };

    for x in subsets(m, &mut rng) {
        let union_r = (0..m)
            .filter(|&i| !x.contains(i))
            .fold(IndexSet::empty(n), |acc, i| acc.union(d.right_quotient(i)));
        let union_b = IndexSet::from_indices(n, (0..n).filter(|&j| !d.left_quotient(j).is_subset(&x)));
        check(Identity::UnionOfRightQuotients, &x, union_r, union_b);

        let inter_r = x
            .iter()
            .fold(IndexSet::full(n), |acc, j| acc.intersection(d.right_quotient(j)));
        let inside = IndexSet::from_indices(n, (0..n).filter(|&i| x.is_subset(d.left_quotient(i))));
        check(Identity::IntersectionOfRightQuotients, &x, inter_r, inside);
    }
    for y in subsets(n, &mut rng) {
        let union_l = (0..n)
            .filter(|&i| !y.contains(i))
            .fold(IndexSet::empty(m), |acc, i| acc.union(d.left_quotient(i)));
        let union_a = IndexSet::from_indices(m, (0..m).filter(|&j| !d.right_quotient(j).is_subset(&y)));
        check(Identity::UnionOfLeftQuotients, &y, union_l, union_a);

        let inter_l = y
            .iter()
            .fold(IndexSet::full(m), |acc, j| acc.intersection(d.left_quotient(j)));
        let inside = IndexSet::from_indices(m, (0..m).filter(|&i| y.is_subset(d.right_quotient(i))));
        check(Identity::IntersectionOfLeftQuotients, &y, inter_l, inside);
    }

    IdentityReport {
        exhaustive,
        instances,
        violations,
    }
}

/// The átomaton of the decomposed language.
pub fn atomaton(d: &LanguageDecomposition) -> Nfa {
    d.atomaton().clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{parse_regex, Alphabet};

    fn running() -> LanguageDecomposition {
        let sigma = Alphabet::new("ab").unwrap();
        decompose(&parse_regex("_|a|aa|ba", &sigma).unwrap()).unwrap()
    }

    #[test]
    fn empty_language_is_rejected() {
        let sigma = Alphabet::new("ab").unwrap();
        assert_eq!(decompose(&parse_regex("@", &sigma).unwrap()), Err(Error::EmptyLanguage));
    }

    #[test]
    fn counts_and_bookkeeping() {
        let d = running();
        assert_eq!((d.n(), d.m()), (5, 4));
        for i in 0..d.m() {
            for j in 0..d.n() {
                assert_eq!(d.left_quotient(j).contains(i), d.left_atom_set(i).contains(j));
            }
        }
        assert!(d.negative_left_atom().is_some());
        assert_eq!(d.initial_left_atoms().len(), 3);
    }

    #[test]
    fn universal_language_is_degenerate() {
        let sigma = Alphabet::new("ab").unwrap();
        let d = decompose(&parse_regex("(a|b)*", &sigma).unwrap()).unwrap();
        assert_eq!((d.n(), d.m()), (1, 1));
        assert_eq!(quotient_atom_matrix(&d).to_string(), "1\n");
        let a = d.atomaton();
        assert_eq!(a.initial_states(), &[0]);
        assert_eq!(a.final_states(), vec![0]);
        assert_eq!(a.successors(0, 0), &[0]);
        assert_eq!(a.successors(0, 1), &[0]);
        assert!(verify_quotient_atom_identities(&d).holds());
    }

    #[test]
    fn reindexing_round_trips() {
        let d = running();
        let e = d.reindexed(&[0, 2, 1, 3, 4], &[2, 3, 1, 0]).unwrap();
        let back = e.reindexed(&[0, 2, 1, 3, 4], &[3, 2, 0, 1]).unwrap();
        assert_eq!(back, d);
        assert!(verify_quotient_atom_identities(&e).holds());
        assert!(d.reindexed(&[0, 0, 1, 2, 3], &[0, 1, 2, 3]).is_err());
    }

    #[test]
    fn matrix_json_is_row_major() {
        let d = running();
        let json = quotient_atom_matrix(&d).to_json();
        let grid: Vec<Vec<u8>> = serde_json::from_str(&json).unwrap();
        assert_eq!(grid.len(), 5);
        assert!(grid.iter().all(|r| r.len() == 4));
    }
}
