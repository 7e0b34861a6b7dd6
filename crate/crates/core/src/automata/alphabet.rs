use std::fmt;

use crate::error::{Error, Result};

/// Characters with a meaning in the regular-expression syntax.
pub const RESERVED: &[char] = &['_', '@', '|', '*', '(', ')'];

/// An ordered, non-empty set of single-character symbols.
///
/// The order is significant: breadth-first renumbering of automata and the
/// shortlex order of sample words both follow it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<char>,
}

impl Alphabet {
    pub fn new(symbols: &str) -> Result<Self> {
        Self::from_chars(symbols.chars())
    }

    pub fn from_chars<I: IntoIterator<Item = char>>(symbols: I) -> Result<Self> {
        let mut out: Vec<char> = Vec::new();
        for c in symbols {
            if c.is_control() || c.is_whitespace() {
                return Err(Error::InvalidAlphabet(format!("{c:?} is not a printable symbol")));
            }
            if RESERVED.contains(&c) {
                return Err(Error::InvalidAlphabet(format!("{c:?} is reserved by the regex syntax")));
            }
            if out.contains(&c) {
                return Err(Error::InvalidAlphabet(format!("duplicate symbol {c:?}")));
            }
            out.push(c);
        }
        if out.is_empty() {
            return Err(Error::InvalidAlphabet("alphabet must not be empty".into()));
        }
        Ok(Alphabet { symbols: out })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    /// Always false; kept for clippy's `len_without_is_empty`.
    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn symbol(&self, index: usize) -> char {
        self.symbols[index]
    }

    pub fn index_of(&self, c: char) -> Option<usize> {
        self.symbols.iter().position(|&s| s == c)
    }

    /// Translates a word into symbol indices; `None` if it uses a foreign symbol.
    pub fn encode(&self, word: &str) -> Option<Vec<usize>> {
        word.chars().map(|c| self.index_of(c)).collect()
    }

    pub fn decode(&self, word: &[usize]) -> String {
        word.iter().map(|&i| self.symbols[i]).collect()
    }

    /// Shortlex comparison of two words under this alphabet's order.
    pub fn shortlex_cmp(&self, a: &str, b: &str) -> std::cmp::Ordering {
        let key = |w: &str| -> (usize, Vec<usize>) {
            let idx: Vec<usize> = w.chars().map(|c| self.index_of(c).unwrap_or(usize::MAX)).collect();
            (idx.len(), idx)
        };
        key(a).cmp(&key(b))
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.symbols {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}
