mod common;

use common::*;
use quotlat::atoms::{
    decompose, quotient_atom_matrix, right_quotient_atom_matrix, verify_quotient_atom_identities,
    verify_quotient_atom_identities_seeded, LanguageDecomposition,
};
use quotlat::automata::{
    equivalent, intersect, is_empty, minimize, parse_regex, prefix_symbol, union_all, universal, Alphabet, Automaton,
    Dfa, Nfa,
};

fn sample() -> Vec<Sample> {
    corpus(31, 60)
}

/// `I_S` built directly from the quotient machines.
fn atomic_intersection(d: &LanguageDecomposition, s: &[bool]) -> Dfa {
    let mut acc = universal(d.dfa().alphabet());
    for (k, &positive) in s.iter().enumerate() {
        let q = d.dfa().with_initial(k);
        let factor = if positive { q } else { q.complement() };
        acc = minimize(&intersect(&acc, &factor).unwrap());
    }
    acc
}

#[test]
fn atoms_partition_sigma_star() {
    for s in sample() {
        let d = &s.decomposition;
        for (count, machine) in [
            (d.m(), &(|k| d.left_atom_machine(k)) as &dyn Fn(usize) -> Nfa),
            (d.n(), &(|k| d.right_atom_machine(k)) as &dyn Fn(usize) -> Nfa),
        ] {
            let atoms: Vec<Nfa> = (0..count).map(machine).collect();
            for a in &atoms {
                assert!(!is_empty(a), "{}", s.description);
            }
            for i in 0..count {
                for j in i + 1..count {
                    assert!(is_empty(&intersect(&atoms[i], &atoms[j]).unwrap()), "{}", s.description);
                }
            }
            let all = union_all(&atoms, d.dfa().alphabet()).unwrap();
            assert!(
                equivalent(&all, &universal(d.dfa().alphabet())).unwrap(),
                "{}",
                s.description
            );
        }
    }
}

#[test]
fn quotients_are_unions_of_atoms() {
    for s in sample() {
        let d = &s.decomposition;
        let sigma = d.dfa().alphabet();
        for j in 0..d.n() {
            let parts: Vec<Nfa> = d.left_quotient(j).iter().map(|i| d.left_atom_machine(i)).collect();
            let u = union_all(&parts, sigma).unwrap();
            assert!(
                equivalent(&u, &d.left_quotient_machine(j)).unwrap(),
                "{}",
                s.description
            );
        }
        for i in 0..d.m() {
            let parts: Vec<Nfa> = d.right_quotient(i).iter().map(|k| d.right_atom_machine(k)).collect();
            let u = union_all(&parts, sigma).unwrap();
            assert!(
                equivalent(&u, &d.right_quotient_machine(i)).unwrap(),
                "{}",
                s.description
            );
        }
    }
}

#[test]
fn atomic_intersections_outside_the_atoms_are_empty() {
    for s in sample().into_iter().filter(|s| s.decomposition.n() <= 10).take(30) {
        let d = &s.decomposition;
        let n = d.n();
        for mask in 0u32..(1 << n) {
            let bits: Vec<bool> = (0..n).map(|k| mask & (1 << k) != 0).collect();
            let is_atom = d
                .left_atom_sets()
                .iter()
                .any(|t| (0..n).all(|k| t.contains(k) == bits[k]));
            assert_eq!(
                !is_empty(&atomic_intersection(d, &bits)),
                is_atom,
                "{} mask {mask:b}",
                s.description
            );
        }
    }
}

#[test]
fn nfa_and_minimal_dfa_inputs_agree() {
    for s in sample() {
        let again = decompose(&minimize(&s.machine)).unwrap();
        assert_eq!(again, s.decomposition, "{}", s.description);
        assert_eq!(decompose(&s.machine.reverse().reverse()).unwrap(), s.decomposition);
    }
}

#[test]
fn atomaton_transitions_follow_atom_languages() {
    for s in sample().into_iter().take(40) {
        let d = &s.decomposition;
        let sigma = d.dfa().alphabet().clone();
        let outside = d.dfa().complement();
        let atoms: Vec<Nfa> = (0..d.m()).map(|i| d.left_atom_machine(i)).collect();
        for (i, ai) in atoms.iter().enumerate() {
            for a in 0..sigma.len() {
                for (k, ak) in atoms.iter().enumerate() {
                    let expected = !is_empty(&intersect(ai, &prefix_symbol(ak, a)).unwrap());
                    let present = d.atomaton().successors(i, a).contains(&k);
                    assert_eq!(present, expected, "{}: s{i} -{}-> s{k}", s.description, sigma.symbol(a));
                }
            }
            let initial = is_empty(&intersect(ai, &outside).unwrap());
            assert_eq!(d.initial_left_atoms().contains(&i), initial, "{}", s.description);
            assert_eq!(d.final_left_atom() == i, ai.accepts(""), "{}", s.description);
        }
    }
}

#[test]
fn identities_hold_sampled_and_exhaustive() {
    for s in sample() {
        let r = verify_quotient_atom_identities(&s.decomposition);
        assert!(r.holds() && r.exhaustive, "{}", s.description);
    }
    // 13 left quotients force the sampled mode on the left side.
    let sigma = Alphabet::new("ab").unwrap();
    let d = decompose(
        &parse_regex(
            "(a|b)*a(a|b)(a|b)(a|b)|b(a|b)(a|b)(a|b)(a|b)(a|b)(a|b)(a|b)(a|b)(a|b)(a|b)(a|b)",
            &sigma,
        )
        .unwrap(),
    )
    .unwrap();
    assert!(d.n() > 12);
    let r = verify_quotient_atom_identities_seeded(&d, 3);
    assert!(!r.exhaustive && r.holds());
}

#[test]
fn right_matrix_is_the_transpose() {
    for s in sample() {
        let d = &s.decomposition;
        let m = quotient_atom_matrix(d);
        assert_eq!(right_quotient_atom_matrix(d), m.transpose());
        assert!(m.has_distinct_rows_and_columns(), "{}", s.description);
    }
}

#[test]
fn reindexing_round_trips() {
    let d = running_example();
    let back = d.reindexed(&[0, 2, 1, 3, 4], &[3, 2, 0, 1]).unwrap();
    assert_eq!(back.reindexed(&[0, 2, 1, 3, 4], &[2, 3, 1, 0]).unwrap(), d);
    assert!(d.reindexed(&[0, 0, 1, 2, 3], &[0, 1, 2, 3]).is_err());
    assert!(d.reindexed(&[0, 1, 2], &[0, 1, 2, 3]).is_err());
}

#[test]
fn empty_language_is_rejected() {
    let sigma = Alphabet::new("ab").unwrap();
    assert_eq!(
        decompose(&parse_regex("@", &sigma).unwrap()),
        Err(quotlat::Error::EmptyLanguage)
    );
    assert_eq!(
        decompose(&parse_regex("a@", &sigma).unwrap()),
        Err(quotlat::Error::EmptyLanguage)
    );
}

#[test]
fn universal_language_has_one_of_everything() {
    let sigma = Alphabet::new("ab").unwrap();
    let d = decompose(&parse_regex("(a|b)*", &sigma).unwrap()).unwrap();
    assert_eq!((d.n(), d.m()), (1, 1));
    assert_eq!(quotient_atom_matrix(&d).to_string(), "1\n");
    assert_eq!(d.negative_left_atom(), None);
}
