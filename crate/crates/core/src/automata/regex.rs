//! Regular expressions over a single-character alphabet.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! union  := concat ('|' concat)*
//! concat := star+
//! star   := atom '*'*
//! atom   := symbol | '_' | '@' | '(' union ')'
//! ```
//!
//! `_` denotes the empty word and `@` the empty language. Whitespace is ignored.

use super::{Alphabet, Nfa};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Regex {
    Empty,
    Epsilon,
    Symbol(usize),
    Concat(Box<Regex>, Box<Regex>),
    Union(Box<Regex>, Box<Regex>),
    Star(Box<Regex>),
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    alphabet: &'a Alphabet,
}

impl Parser<'_> {
    fn peek(&self) -> Option<(usize, char)> {
        self.chars.get(self.pos).copied()
    }

    fn end_position(&self) -> usize {
        self.chars.last().map_or(0, |&(p, _)| p + 1)
    }

    fn union(&mut self) -> Result<Regex> {
        let mut left = self.concat()?;
        while let Some((_, '|')) = self.peek() {
            self.pos += 1;
            let right = self.concat()?;
            left = Regex::Union(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn concat(&mut self) -> Result<Regex> {
        let mut items = Vec::new();
        while let Some((_, c)) = self.peek() {
            if c == '|' || c == ')' {
                break;
            }
            items.push(self.star()?);
        }
        let mut iter = items.into_iter();
        let first = iter.next().ok_or_else(|| {
            let at = self.peek().map_or(self.end_position(), |(p, _)| p);
            Error::parse(at, "expected an expression (use `_` for the empty word)")
        })?;
        Ok(iter.fold(first, |acc, r| Regex::Concat(Box::new(acc), Box::new(r))))
    }

    fn star(&mut self) -> Result<Regex> {
        let mut r = self.atom()?;
        while let Some((_, '*')) = self.peek() {
            self.pos += 1;
            r = Regex::Star(Box::new(r));
        }
        Ok(r)
    }

    fn atom(&mut self) -> Result<Regex> {
        let (at, c) = self
            .peek()
            .ok_or_else(|| Error::parse(self.end_position(), "unexpected end of input"))?;
        self.pos += 1;
        match c {
            '_' => Ok(Regex::Epsilon),
            '@' => Ok(Regex::Empty),
            '(' => {
                let inner = self.union()?;
                match self.peek() {
                    Some((_, ')')) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    Some((p, other)) => Err(Error::parse(p, format!("expected `)`, found {other:?}"))),
                    None => Err(Error::parse(self.end_position(), "unclosed `(`")),
                }
            }
            '*' | '|' | ')' => Err(Error::parse(at, format!("unexpected {c:?}"))),
            sym => self
                .alphabet
                .index_of(sym)
                .map(Regex::Symbol)
                .ok_or_else(|| Error::parse(at, format!("symbol {sym:?} is not in the alphabet"))),
        }
    }
}

impl Regex {
    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Regex> {
        let chars: Vec<(usize, char)> = text.chars().enumerate().filter(|(_, c)| !c.is_whitespace()).collect();
        let mut p = Parser {
            chars,
            pos: 0,
            alphabet,
        };
        let r = p.union()?;
        if let Some((at, c)) = p.peek() {
            return Err(Error::parse(at, format!("unexpected {c:?}")));
        }
        Ok(r)
    }

    /// Thompson construction followed by ε-elimination.
    pub fn to_nfa(&self, alphabet: &Alphabet) -> Nfa {
        let mut t = Thompson::default();
        let (start, end) = t.build(self);
        t.into_nfa(alphabet, start, end)
    }
}

#[derive(Default)]
struct Thompson {
    eps: Vec<Vec<usize>>,
    moves: Vec<Vec<(usize, usize)>>,
}

impl Thompson {
    fn state(&mut self) -> usize {
        self.eps.push(Vec::new());
        self.moves.push(Vec::new());
        self.eps.len() - 1
    }

    fn build(&mut self, r: &Regex) -> (usize, usize) {
        let s = self.state();
        let e = self.state();
        match r {
            Regex::Empty => {}
            Regex::Epsilon => self.eps[s].push(e),
            Regex::Symbol(a) => self.moves[s].push((*a, e)),
            Regex::Concat(x, y) => {
                let (xs, xe) = self.build(x);
                let (ys, ye) = self.build(y);
                self.eps[s].push(xs);
                self.eps[xe].push(ys);
                self.eps[ye].push(e);
            }
            Regex::Union(x, y) => {
                let (xs, xe) = self.build(x);
                let (ys, ye) = self.build(y);
                self.eps[s].extend([xs, ys]);
                self.eps[xe].push(e);
                self.eps[ye].push(e);
            }
            Regex::Star(x) => {
                let (xs, xe) = self.build(x);
                self.eps[s].extend([xs, e]);
                self.eps[xe].extend([xs, e]);
            }
        }
        (s, e)
    }

    fn closure(&self, q: usize) -> Vec<usize> {
        let mut seen = vec![false; self.eps.len()];
        let mut stack = vec![q];
        seen[q] = true;
        while let Some(p) = stack.pop() {
            for &r in &self.eps[p] {
                if !seen[r] {
                    seen[r] = true;
                    stack.push(r);
                }
            }
        }
        (0..seen.len()).filter(|&i| seen[i]).collect()
    }

    fn into_nfa(self, alphabet: &Alphabet, start: usize, end: usize) -> Nfa {
        let closures: Vec<Vec<usize>> = (0..self.eps.len()).map(|q| self.closure(q)).collect();
        let mut n = Nfa::with_states(alphabet.clone(), self.eps.len());
        for (p, cl) in closures.iter().enumerate() {
            for &q in cl {
                for &(a, r) in &self.moves[q] {
                    for &t in &closures[r] {
                        n.add_transition(p, a, t);
                    }
                }
            }
        }
        for &q in &closures[start] {
            n.add_initial(q);
        }
        n.set_final(end, true);
        n
    }
}

/// Parses `text` and builds an NFA for it over `alphabet`.
pub fn parse_regex(text: &str, alphabet: &Alphabet) -> Result<Nfa> {
    Ok(Regex::parse(text, alphabet)?.to_nfa(alphabet))
}
