use std::fmt;

use super::{determinize, shortest_words, words_up_to, Automaton, Nfa};

/// An exact description of a language when it is finite or cofinite,
/// otherwise a shortlex sample of its shortest words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LanguageSummary {
    Finite(Vec<String>),
    /// Σ* minus the listed words.
    Cofinite(Vec<String>),
    Infinite {
        sample: Vec<String>,
    },
}

/// True when the trimmed machine has no cycle.
pub(crate) fn is_finite(n: &Nfa) -> bool {
    let t = n.trim();
    let k = t.alphabet().len();
    // 0 = unvisited, 1 = on stack, 2 = done
    let mut mark = vec![0u8; t.state_count()];
    for root in 0..t.state_count() {
        if mark[root] != 0 {
            continue;
        }
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, 0, 0)];
        mark[root] = 1;
        while let Some(&mut (q, ref mut sym, ref mut idx)) = stack.last_mut() {
            if *sym >= k {
                mark[q] = 2;
                stack.pop();
                continue;
            }
            let succ = t.successors(q, *sym);
            if *idx >= succ.len() {
                *sym += 1;
                *idx = 0;
                continue;
            }
            let r = succ[*idx];
            *idx += 1;
            match mark[r] {
                0 => {
                    mark[r] = 1;
                    stack.push((r, 0, 0));
                }
                1 => return false,
                _ => {}
            }
        }
    }
    true
}

impl LanguageSummary {
    /// Summarizes `machine`; `sample` bounds the number of words listed for
    /// infinite, non-cofinite languages.
    pub fn of<A: Automaton + ?Sized>(machine: &A, sample: usize) -> Self {
        let n = machine.to_nfa();
        if is_finite(&n) {
            let t = n.trim();
            return LanguageSummary::Finite(words_up_to(&t, t.state_count()));
        }
        let complement = determinize(&n).complement().to_nfa();
        if is_finite(&complement) {
            let t = complement.trim();
            return LanguageSummary::Cofinite(words_up_to(&t, t.state_count()));
        }
        // Display only; the bound keeps the search finite.
        let bound = (sample + 1) * n.state_count().max(1);
        LanguageSummary::Infinite {
            sample: shortest_words(&n, sample, bound),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, LanguageSummary::Finite(_))
    }
}

fn show(w: &str) -> &str {
    if w.is_empty() {
        "ε"
    } else {
        w
    }
}

fn list(f: &mut fmt::Formatter<'_>, words: &[String], more: bool) -> fmt::Result {
    write!(f, "{{")?;
    for (i, w) in words.iter().enumerate() {
        if i > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{}", show(w))?;
    }
    if more {
        if !words.is_empty() {
            write!(f, ", ")?;
        }
        write!(f, "…")?;
    }
    write!(f, "}}")
}

impl fmt::Display for LanguageSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LanguageSummary::Finite(words) if words.is_empty() => write!(f, "∅"),
            LanguageSummary::Finite(words) => list(f, words, false),
            LanguageSummary::Cofinite(words) if words.is_empty() => write!(f, "Σ*"),
            LanguageSummary::Cofinite(words) => {
                write!(f, "Σ* ∖ ")?;
                list(f, words, false)
            }
            LanguageSummary::Infinite { sample } => list(f, sample, true),
        }
    }
}
