#![allow(dead_code)]

use std::collections::BTreeSet;

use quotlat::atoms::{decompose, LanguageDecomposition};
use quotlat::automata::{minimize, parse_regex, Alphabet, Automaton, Dfa, LanguageSummary, Nfa};
use quotlat::oracle::{FcSet, FiniteLanguage};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const RUNNING_EXAMPLE: &str = "_|a|aa|ba";

pub fn ab() -> Alphabet {
    Alphabet::new("ab").unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn words(ws: &[&str]) -> BTreeSet<String> {
    ws.iter().map(|w| w.to_string()).collect()
}

/// Exact finite/cofinite description of a machine's language.
pub fn exact<A: Automaton + ?Sized>(m: &A) -> Option<FcSet> {
    match LanguageSummary::of(m, 0) {
        LanguageSummary::Finite(w) => Some(FcSet::Finite(w.into_iter().collect())),
        LanguageSummary::Cofinite(w) => Some(FcSet::Cofinite(w.into_iter().collect())),
        LanguageSummary::Infinite { .. } => None,
    }
}

pub fn finite(ws: &[&str]) -> Option<FcSet> {
    Some(FcSet::Finite(words(ws)))
}

pub fn cofinite(ws: &[&str]) -> Option<FcSet> {
    Some(FcSet::Cofinite(words(ws)))
}

/// Decomposition of the running example, relabelled so that quotients and
/// atoms carry the numbering used in the literature:
/// `L_0..L_4 = L, {a}, {ε,a}, {ε}, ∅` and `A_0..A_3 = Σ*∖L, {aa,ba}, {a}, {ε}`.
pub fn running_example() -> LanguageDecomposition {
    let d = decompose(&parse_regex(RUNNING_EXAMPLE, &ab()).unwrap()).unwrap();
    let quotients = [
        finite(&["", "a", "aa", "ba"]),
        finite(&["a"]),
        finite(&["", "a"]),
        finite(&[""]),
        finite(&[]),
    ];
    let atoms = [
        cofinite(&["", "a", "aa", "ba"]),
        finite(&["aa", "ba"]),
        finite(&["a"]),
        finite(&[""]),
    ];
    let find = |target: &Option<FcSet>, count: usize, machine: &dyn Fn(usize) -> Nfa| -> usize {
        (0..count)
            .find(|&k| exact(&machine(k)) == *target)
            .unwrap_or_else(|| panic!("no language equal to {target:?}"))
    };
    let quotient_order: Vec<usize> = quotients
        .iter()
        .map(|q| find(q, d.n(), &|k| d.left_quotient_machine(k)))
        .collect();
    let atom_order: Vec<usize> = atoms
        .iter()
        .map(|a| find(a, d.m(), &|k| d.left_atom_machine(k)))
        .collect();
    d.reindexed(&quotient_order, &atom_order).unwrap()
}

fn random_regex_inner(rng: &mut ChaCha8Rng, sigma: &Alphabet, depth: usize) -> String {
    if depth == 0 || rng.random_bool(0.25) {
        return match rng.random_range(0..10) {
            0 => "_".to_string(),
            _ => sigma.symbol(rng.random_range(0..sigma.len())).to_string(),
        };
    }
    match rng.random_range(0..5) {
        0 | 1 => format!(
            "{}{}",
            random_regex_inner(rng, sigma, depth - 1),
            random_regex_inner(rng, sigma, depth - 1)
        ),
        2 | 3 => format!(
            "({}|{})",
            random_regex_inner(rng, sigma, depth - 1),
            random_regex_inner(rng, sigma, depth - 1)
        ),
        _ => format!("({})*", random_regex_inner(rng, sigma, depth - 1)),
    }
}

pub fn random_regex(rng: &mut ChaCha8Rng, sigma: &Alphabet) -> String {
    random_regex_inner(rng, sigma, 4)
}

pub fn random_nfa(rng: &mut ChaCha8Rng, sigma: &Alphabet, states: usize) -> Nfa {
    let mut n = Nfa::with_states(sigma.clone(), states);
    for p in 0..states {
        for a in 0..sigma.len() {
            for q in 0..states {
                if rng.random_bool(0.3) {
                    n.add_transition(p, a, q);
                }
            }
        }
        if rng.random_bool(0.4) {
            n.set_final(p, true);
        }
    }
    n.add_initial(0);
    if states > 1 && rng.random_bool(0.3) {
        n.add_initial(rng.random_range(1..states));
    }
    n
}

pub fn random_dfa(rng: &mut ChaCha8Rng, sigma: &Alphabet, states: usize) -> Dfa {
    let table = (0..states)
        .map(|_| (0..sigma.len()).map(|_| rng.random_range(0..states)).collect())
        .collect();
    let finals: Vec<usize> = (0..states).filter(|_| rng.random_bool(0.5)).collect();
    Dfa::from_table(sigma.clone(), table, 0, &finals).unwrap()
}

pub fn random_alphabet(rng: &mut ChaCha8Rng) -> Alphabet {
    if rng.random_bool(0.6) {
        Alphabet::new("ab").unwrap()
    } else {
        Alphabet::new("abc").unwrap()
    }
}

pub struct Sample {
    pub description: String,
    pub machine: Nfa,
    pub decomposition: LanguageDecomposition,
}

/// Non-empty languages over 2 or 3 letters with at most 6-state minimal
/// DFAs, alternately from random regexes and random NFAs.
pub fn corpus(seed: u64, count: usize) -> Vec<Sample> {
    let mut rng = rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let sigma = random_alphabet(&mut rng);
        let (description, machine) = if out.len() % 2 == 0 {
            let re = random_regex(&mut rng, &sigma);
            let n = parse_regex(&re, &sigma).unwrap();
            (format!("regex {re} over {sigma}"), n)
        } else {
            let states = rng.random_range(1..=4);
            let n = random_nfa(&mut rng, &sigma, states);
            (format!("nfa {}", quotlat::automata::io::to_json(&n)), n)
        };
        if minimize(&machine).state_count() > 6 {
            continue;
        }
        let Ok(decomposition) = decompose(&machine) else {
            continue;
        };
        out.push(Sample {
            description,
            machine,
            decomposition,
        });
    }
    out
}

/// At most 8 distinct words of length at most 4 over {a,b}.
pub fn random_finite_language(rng: &mut ChaCha8Rng) -> FiniteLanguage {
    let count = rng.random_range(0..=8);
    let words: Vec<String> = (0..count)
        .map(|_| {
            let len = rng.random_range(0..=4);
            (0..len).map(|_| if rng.random_bool(0.5) { 'a' } else { 'b' }).collect()
        })
        .collect();
    FiniteLanguage::new(ab(), words)
}
