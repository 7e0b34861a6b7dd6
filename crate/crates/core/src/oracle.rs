//! Naive reference implementations for testing.
//!
//! Nothing here goes through the subset construction or the quotient/atom
//! machinery: quotients and atoms of finite languages are computed straight
//! from their definitions with explicit finite/cofinite set algebra, and
//! DFAs are minimized by iterated partition refinement.

use std::collections::{BTreeSet, HashMap};

use crate::automata::{Alphabet, Automaton, Dfa, Nfa};

/// A finite set of words over an alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteLanguage {
    pub alphabet: Alphabet,
    pub words: BTreeSet<String>,
}

/// A finite or cofinite language, represented exactly.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FcSet {
    Finite(BTreeSet<String>),
    /// Σ* minus these words.
    Cofinite(BTreeSet<String>),
}

impl FcSet {
    pub fn universe() -> Self {
        FcSet::Cofinite(BTreeSet::new())
    }

    pub fn complement(&self) -> Self {
        match self {
            FcSet::Finite(w) => FcSet::Cofinite(w.clone()),
            FcSet::Cofinite(w) => FcSet::Finite(w.clone()),
        }
    }

    pub fn intersect(&self, other: &Self) -> Self {
        match (self, other) {
            (FcSet::Finite(a), FcSet::Finite(b)) => FcSet::Finite(a.intersection(b).cloned().collect()),
            (FcSet::Finite(a), FcSet::Cofinite(e)) | (FcSet::Cofinite(e), FcSet::Finite(a)) => {
                FcSet::Finite(a.difference(e).cloned().collect())
            }
            (FcSet::Cofinite(a), FcSet::Cofinite(b)) => FcSet::Cofinite(a.union(b).cloned().collect()),
        }
    }

    /// Cofinite sets over a non-empty alphabet are infinite, hence non-empty.
    pub fn is_empty(&self) -> bool {
        matches!(self, FcSet::Finite(w) if w.is_empty())
    }

    pub fn contains(&self, word: &str) -> bool {
        match self {
            FcSet::Finite(w) => w.contains(word),
            FcSet::Cofinite(w) => !w.contains(word),
        }
    }
}

impl FiniteLanguage {
    pub fn new<I, S>(alphabet: Alphabet, words: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let words: BTreeSet<String> = words.into_iter().map(Into::into).collect();
        for w in &words {
            assert!(
                alphabet.encode(w).is_some(),
                "word {w:?} is not over alphabet \"{alphabet}\""
            );
        }
        FiniteLanguage { alphabet, words }
    }

    /// Prefix-tree automaton accepting exactly these words.
    pub fn to_nfa(&self) -> Nfa {
        let mut n = Nfa::with_states(self.alphabet.clone(), 1);
        n.add_initial(0);
        let mut children: HashMap<(usize, usize), usize> = HashMap::new();
        for w in &self.words {
            let mut q = 0;
            for a in self.alphabet.encode(w).expect("checked in new") {
                q = match children.get(&(q, a)) {
                    Some(&c) => c,
                    None => {
                        let c = n.add_state();
                        n.add_transition(q, a, c);
                        children.insert((q, a), c);
                        c
                    }
                };
            }
            n.set_final(q, true);
        }
        n
    }

    pub fn reversed(&self) -> FiniteLanguage {
        FiniteLanguage {
            alphabet: self.alphabet.clone(),
            words: self.words.iter().map(|w| w.chars().rev().collect()).collect(),
        }
    }

    /// A word that is a prefix of no member (one letter longer than the longest word).
    fn non_prefix(&self) -> String {
        let longest = self.words.iter().map(|w| w.chars().count()).max().unwrap_or(0);
        std::iter::repeat_n(self.alphabet.symbol(0), longest + 1).collect()
    }
}

/// All distinct `w⁻¹L = { x : wx ∈ L }`, from every prefix `w` of every word
/// plus one non-prefix (whose quotient is ∅).
pub fn left_quotients_bruteforce(l: &FiniteLanguage) -> BTreeSet<BTreeSet<String>> {
    let mut prefixes: BTreeSet<String> = BTreeSet::new();
    for w in &l.words {
        let chars: Vec<char> = w.chars().collect();
        for k in 0..=chars.len() {
            prefixes.insert(chars[..k].iter().collect());
        }
    }
    prefixes.insert(l.non_prefix());
    prefixes
        .iter()
        .map(|p| {
            l.words
                .iter()
                .filter_map(|w| w.strip_prefix(p.as_str()).map(str::to_string))
                .collect()
        })
        .collect()
}

/// All distinct `Lv⁻¹ = { u : uv ∈ L }`.
pub fn right_quotients_bruteforce(l: &FiniteLanguage) -> BTreeSet<BTreeSet<String>> {
    let mut suffixes: BTreeSet<String> = BTreeSet::new();
    for w in &l.words {
        let chars: Vec<char> = w.chars().collect();
        for k in 0..=chars.len() {
            suffixes.insert(chars[k..].iter().collect());
        }
    }
    suffixes.insert(l.non_prefix());
    suffixes
        .iter()
        .map(|s| {
            l.words
                .iter()
                .filter_map(|w| w.strip_suffix(s.as_str()).map(str::to_string))
                .collect()
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AtomSide {
    Left,
    Right,
}

/// Every non-empty atomic intersection over the brute-force quotients of
/// one side, evaluated over all `2^n` choices of complemented quotients.
pub fn atoms_bruteforce(l: &FiniteLanguage, side: AtomSide) -> BTreeSet<FcSet> {
    let quotients: Vec<FcSet> = match side {
        AtomSide::Left => left_quotients_bruteforce(l),
        AtomSide::Right => right_quotients_bruteforce(l),
    }
    .into_iter()
    .map(FcSet::Finite)
    .collect();
    let n = quotients.len();
    assert!(n < 24, "too many quotients for the brute-force oracle");
    let mut atoms = BTreeSet::new();
    for mask in 0u32..(1 << n) {
        let mut acc = FcSet::universe();
        for (k, q) in quotients.iter().enumerate() {
            let factor = if mask & (1 << k) != 0 {
                q.clone()
            } else {
                q.complement()
            };
            acc = acc.intersect(&factor);
            if acc.is_empty() {
                break;
            }
        }
        if !acc.is_empty() {
            atoms.insert(acc);
        }
    }
    atoms
}

/// Minimal DFA by iterated partition refinement, canonically numbered.
pub fn minimize_refinement(d: &Dfa) -> Dfa {
    let d = d.canonical();
    let states = d.state_count();
    let k = d.alphabet().len();
    let mut class: Vec<usize> = (0..states).map(|q| usize::from(d.is_final(q))).collect();
    loop {
        let mut ids: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
        let next: Vec<usize> = (0..states)
            .map(|q| {
                let sig = (class[q], (0..k).map(|a| class[d.next(q, a)]).collect());
                let fresh = ids.len();
                *ids.entry(sig).or_insert(fresh)
            })
            .collect();
        let before: BTreeSet<usize> = class.iter().copied().collect();
        let stable = ids.len() == before.len();
        class = next;
        if stable {
            break;
        }
    }
    let blocks = class.iter().max().map_or(0, |&c| c + 1);
    let mut table = vec![Vec::new(); blocks];
    let mut accepting = BTreeSet::new();
    for q in 0..states {
        if table[class[q]].is_empty() {
            table[class[q]] = (0..k).map(|a| class[d.next(q, a)]).collect();
        }
        if d.is_final(q) {
            accepting.insert(class[q]);
        }
    }
    let accepting: Vec<usize> = accepting.into_iter().collect();
    Dfa::from_table(d.alphabet().clone(), table, class[d.initial_state()], &accepting)
        .expect("quotient of a valid DFA is valid")
        .canonical()
}

/// Word-level pairing: is some concatenation `wv` with `w ∈ a`, `v ∈ b` in the language?
pub fn word_pairing<A: Automaton + ?Sized>(language: &A, a: &BTreeSet<String>, b: &BTreeSet<String>) -> bool {
    a.iter().any(|w| b.iter().any(|v| language.accepts(&(w.clone() + v))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(words: &[&str]) -> BTreeSet<String> {
        words.iter().map(|w| w.to_string()).collect()
    }

    fn lang(words: &[&str]) -> FiniteLanguage {
        FiniteLanguage::new(Alphabet::new("ab").unwrap(), words.iter().copied())
    }

    #[test]
    fn quotients_of_running_example() {
        let l = lang(&["", "a", "aa", "ba"]);
        let left = left_quotients_bruteforce(&l);
        let expected: BTreeSet<_> = [
            set(&["", "a", "aa", "ba"]),
            set(&["", "a"]),
            set(&["a"]),
            set(&[""]),
            set(&[]),
        ]
        .into_iter()
        .collect();
        assert_eq!(left, expected);
        let right = right_quotients_bruteforce(&l);
        let expected: BTreeSet<_> = [set(&[]), set(&[""]), set(&["", "a", "b"]), set(&["", "a", "aa", "ba"])]
            .into_iter()
            .collect();
        assert_eq!(right, expected);
    }

    #[test]
    fn quotients_of_empty_and_ab() {
        let empty = lang(&[]);
        assert_eq!(left_quotients_bruteforce(&empty), [set(&[])].into_iter().collect());
        assert_eq!(right_quotients_bruteforce(&empty), [set(&[])].into_iter().collect());
        let ab = lang(&["ab"]);
        let left: BTreeSet<_> = [set(&["ab"]), set(&["b"]), set(&[""]), set(&[])].into_iter().collect();
        assert_eq!(left_quotients_bruteforce(&ab), left);
        let right: BTreeSet<_> = [set(&["ab"]), set(&["a"]), set(&[""]), set(&[])].into_iter().collect();
        assert_eq!(right_quotients_bruteforce(&ab), right);
    }

    #[test]
    fn atoms_of_running_example() {
        let l = lang(&["", "a", "aa", "ba"]);
        let left: BTreeSet<FcSet> = [
            FcSet::Cofinite(set(&["", "a", "aa", "ba"])),
            FcSet::Finite(set(&["aa", "ba"])),
            FcSet::Finite(set(&["a"])),
            FcSet::Finite(set(&[""])),
        ]
        .into_iter()
        .collect();
        assert_eq!(atoms_bruteforce(&l, AtomSide::Left), left);
        let right: BTreeSet<FcSet> = [
            FcSet::Finite(set(&[""])),
            FcSet::Finite(set(&["b"])),
            FcSet::Finite(set(&["a"])),
            FcSet::Finite(set(&["ba", "aa"])),
            FcSet::Cofinite(set(&["", "a", "aa", "b", "ba"])),
        ]
        .into_iter()
        .collect();
        assert_eq!(atoms_bruteforce(&l, AtomSide::Right), right);
    }

    #[test]
    fn atoms_of_epsilon() {
        let atoms = atoms_bruteforce(&lang(&[""]), AtomSide::Left);
        let expected: BTreeSet<FcSet> = [FcSet::Finite(set(&[""])), FcSet::Cofinite(set(&[""]))]
            .into_iter()
            .collect();
        assert_eq!(atoms, expected);
    }

    #[test]
    fn finite_cofinite_algebra_is_closed() {
        let f = FcSet::Finite(set(&["a", "b"]));
        let c = FcSet::Cofinite(set(&["b"]));
        assert_eq!(f.complement().complement(), f);
        assert_eq!(f.intersect(&c), FcSet::Finite(set(&["a"])));
        assert_eq!(
            c.intersect(&FcSet::Cofinite(set(&["a"]))),
            FcSet::Cofinite(set(&["a", "b"]))
        );
        assert!(!FcSet::Cofinite(set(&["a"])).is_empty());
        assert!(c.contains("aa") && !c.contains("b"));
    }

    #[test]
    fn refinement_merges_bisimilar_sinks() {
        let sigma = Alphabet::new("ab").unwrap();
        // 0 -a-> 1, 0 -b-> 2; 1 and 2 are accepting sinks
        let d = Dfa::from_table(sigma, vec![vec![1, 2], vec![1, 1], vec![2, 2]], 0, &[1, 2]).unwrap();
        let m = minimize_refinement(&d);
        assert_eq!(m.state_count(), 2);
        assert_eq!(m.table(), &[vec![1, 1], vec![1, 1]]);
    }

    #[test]
    fn prefix_tree_accepts_exactly_the_words() {
        let l = lang(&["", "ab", "b"]);
        let n = l.to_nfa();
        for w in ["", "ab", "b"] {
            assert!(n.accepts(w));
        }
        for w in ["a", "ba", "abb"] {
            assert!(!n.accepts(w));
        }
    }
}
