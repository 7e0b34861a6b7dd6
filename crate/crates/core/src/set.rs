//! Fixed-universe bit sets of indices.
//!
//! Quotients, atoms and lattice elements are all stored as sets of atom
//! indices, so this is the workhorse type of the crate.

use std::cmp::Ordering;
use std::fmt;

const WORD: usize = 64;

/// A set of indices drawn from `0..universe`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IndexSet {
    universe: usize,
    words: Vec<u64>,
}

impl IndexSet {
    pub fn empty(universe: usize) -> Self {
        IndexSet {
            universe,
            words: vec![0; universe.div_ceil(WORD)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for i in 0..universe {
            s.insert(i);
        }
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(universe: usize, items: I) -> Self {
        let mut s = Self::empty(universe);
        for i in items {
            s.insert(i);
        }
        s
    }

    /// Set whose members are the bits of `mask` (only for universes ≤ 64).
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        assert!(universe <= WORD, "from_mask needs a universe of at most 64");
        let mut s = Self::empty(universe);
        if universe > 0 {
            let keep = if universe == WORD {
                u64::MAX
            } else {
                (1u64 << universe) - 1
            };
            s.words[0] = mask & keep;
        }
        s
    }

    pub fn singleton(universe: usize, i: usize) -> Self {
        Self::from_indices(universe, [i])
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.universe, "index {i} outside universe {}", self.universe);
        self.words[i / WORD] |= 1 << (i % WORD);
    }

    pub fn remove(&mut self, i: usize) {
        if i < self.universe {
            self.words[i / WORD] &= !(1 << (i % WORD));
        }
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.universe && self.words[i / WORD] & (1 << (i % WORD)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.universe).filter(move |&i| self.contains(i))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.universe, other.universe, "index sets over different universes");
    }

    pub fn union(&self, other: &Self) -> Self {
        self.check(other);
        IndexSet {
            universe: self.universe,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect(),
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.check(other);
        IndexSet {
            universe: self.universe,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.check(other);
        IndexSet {
            universe: self.universe,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & !b).collect(),
        }
    }

    pub fn complement(&self) -> Self {
        Self::full(self.universe).difference(self)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.check(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.check(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Canonical order used for lattice output: by size, then by the
    /// lexicographic order of the sorted member lists.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for IndexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for IndexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.universe
            .cmp(&other.universe)
            .then_with(|| self.canonical_cmp(other))
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_algebra() {
        let a = IndexSet::from_indices(70, [0, 3, 65]);
        let b = IndexSet::from_indices(70, [3, 4]);
        assert_eq!(a.union(&b).to_vec(), vec![0, 3, 4, 65]);
        assert_eq!(a.intersection(&b).to_vec(), vec![3]);
        assert_eq!(a.difference(&b).to_vec(), vec![0, 65]);
        assert_eq!(a.complement().len(), 67);
        assert!(IndexSet::from_indices(70, [3]).is_subset(&a));
        assert!(!b.is_subset(&a));
        assert!(IndexSet::full(70).is_full());
    }

    #[test]
    fn canonical_order_is_size_then_lex() {
        let mut v = [
            IndexSet::from_indices(4, [0, 1]),
            IndexSet::from_indices(4, [2]),
            IndexSet::empty(4),
            IndexSet::from_indices(4, [0, 3]),
            IndexSet::from_indices(4, [1]),
        ];
        v.sort();
        let shown: Vec<String> = v.iter().map(|s| s.to_string()).collect();
        assert_eq!(shown, ["{}", "{1}", "{2}", "{0,1}", "{0,3}"]);
    }

    #[test]
    fn mask_truncates_to_universe() {
        assert_eq!(IndexSet::from_mask(3, 0b1111).to_vec(), vec![0, 1, 2]);
        assert!(IndexSet::from_mask(0, 5).is_empty());
    }
}
