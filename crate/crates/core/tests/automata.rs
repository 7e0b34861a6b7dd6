mod common;

use common::*;
use proptest::prelude::*;
use quotlat::atoms::decompose;
use quotlat::automata::io::{from_json, to_dot, to_json};
use quotlat::automata::{determinize, equivalent, minimize, parse_regex, words_up_to, Alphabet, Automaton, Dfa, Nfa};
use rand::Rng;

fn regex_machine(seed: u64) -> (String, Nfa) {
    let mut r = rng(seed);
    let sigma = random_alphabet(&mut r);
    let re = random_regex(&mut r, &sigma);
    let n = parse_regex(&re, &sigma).unwrap();
    (re, n)
}

fn nfa_machine(seed: u64) -> Nfa {
    let mut r = rng(seed);
    let sigma = random_alphabet(&mut r);
    let states = r.random_range(1..=5);
    random_nfa(&mut r, &sigma, states)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn minimize_preserves_the_language(seed in any::<u64>()) {
        let (re, n) = regex_machine(seed);
        let m = minimize(&n);
        prop_assert!(equivalent(&n, &m).unwrap(), "{re}");
        let words = words_up_to(&universal_of(&n), 5);
        for w in words {
            prop_assert_eq!(n.accepts(&w), m.accepts(&w), "{} on {:?}", re, w);
        }
    }

    #[test]
    fn minimal_is_no_larger_than_subset_construction(seed in any::<u64>()) {
        let n = nfa_machine(seed);
        let m = minimize(&n);
        let det = determinize(&n.trim());
        prop_assert!(m.state_count() <= det.state_count().max(1));
    }

    #[test]
    fn minimize_is_canonical(seed in any::<u64>()) {
        let n = nfa_machine(seed);
        let m = minimize(&n);
        prop_assert_eq!(minimize(&m), m.clone());
        // A union with itself is the same language, so the same canonical machine.
        let doubled = quotlat::automata::union_all(&[n.clone(), n.clone()], n.alphabet()).unwrap();
        prop_assert_eq!(minimize(&doubled), m);
    }

    #[test]
    fn reversal_is_an_involution_on_languages(seed in any::<u64>()) {
        let n = nfa_machine(seed);
        prop_assert!(equivalent(&n.reverse().reverse(), &n).unwrap());
        for w in words_up_to(&universal_of(&n), 4) {
            let r: String = w.chars().rev().collect();
            prop_assert_eq!(n.accepts(&w), n.reverse().accepts(&r));
        }
    }

    #[test]
    fn determinized_atomaton_is_the_minimal_dfa(seed in any::<u64>()) {
        let n = nfa_machine(seed);
        if let Ok(d) = decompose(&n) {
            let back = minimize(d.atomaton());
            prop_assert_eq!(&back, d.dfa());
            prop_assert_eq!(determinize(d.atomaton()).canonical().state_count(), d.n());
            // the reversed átomaton is deterministic
            prop_assert!(d.atomaton().reverse().trim().is_deterministic());
        }
    }

    #[test]
    fn json_round_trip(seed in any::<u64>()) {
        let n = nfa_machine(seed);
        prop_assert_eq!(from_json(&to_json(&n)).unwrap(), n.clone());
        prop_assert_eq!(to_json(&n), to_json(&from_json(&to_json(&n)).unwrap()));
    }
}

fn universal_of(n: &Nfa) -> Dfa {
    quotlat::automata::universal(n.alphabet())
}

#[test]
fn running_example_machines() {
    let d = running_example();
    // Minimal DFA with states numbered like the left quotients L_0..L_4.
    let sigma = ab();
    let dfa = Dfa::from_table(
        sigma.clone(),
        vec![vec![2, 1], vec![3, 4], vec![3, 4], vec![4, 4], vec![4, 4]],
        0,
        &[0, 2, 3],
    )
    .unwrap();
    assert!(dfa.isomorphic(d.dfa()));
    assert_eq!(d.dfa().isomorphism(&dfa), Some(vec![0, 1, 2, 3, 4]));

    // The átomaton, states numbered like the left atoms A_0..A_3.
    let atomaton = Nfa::new(
        sigma,
        4,
        &[
            (0, 'a', 0),
            (0, 'b', 0),
            (0, 'a', 1),
            (0, 'b', 1),
            (0, 'b', 3),
            (1, 'a', 2),
            (1, 'b', 2),
            (2, 'a', 3),
        ],
        &[1, 2, 3],
        &[3],
    )
    .unwrap();
    assert_eq!(d.atomaton().transitions(), atomaton.transitions());
    assert_eq!(d.atomaton().initial_states(), atomaton.initial_states());
    assert_eq!(d.atomaton().final_states(), vec![3]);
}

#[test]
fn dot_export_marks_final_states() {
    let sigma = Alphabet::new("ab").unwrap();
    let m = minimize(&parse_regex("_|a|aa|ba", &sigma).unwrap());
    let dot = to_dot(&m, "L");
    assert_eq!(dot.matches("doublecircle").count(), 3);
    assert!(dot.contains("[label=\"a,b\"]"));
    assert_eq!(dot, to_dot(&m, "L"));
}

#[test]
fn regex_errors_report_positions() {
    let sigma = Alphabet::new("ab").unwrap();
    match parse_regex("a|(b", &sigma) {
        Err(quotlat::Error::Parse { position, .. }) => assert_eq!(position, 4),
        other => panic!("{other:?}"),
    }
    assert!(parse_regex("ac", &sigma).is_err());
}
