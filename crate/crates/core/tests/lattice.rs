mod common;

use common::*;
use quotlat::atoms::LanguageDecomposition;
use quotlat::automata::{equivalent, minimize, union_all, universal, Automaton, Nfa};
use quotlat::lattice::{
    build_lattice, phi, phi_prime, psi, psi_prime, verify_duality, DualityPart, LatticeKind, Operation, Side,
};
use quotlat::render::{atom_union_machine, lattice_labels, render_lattice_dot};

fn sample() -> Vec<Sample> {
    corpus(41, 80)
}

#[test]
fn lattice_laws_hold_exhaustively() {
    for s in sample() {
        for kind in LatticeKind::ALL {
            let l = build_lattice(&s.decomposition, kind);
            if l.len() > 64 {
                continue;
            }
            let xs: Vec<_> = l.iter().collect();
            for a in &xs {
                assert_eq!(&l.join(a, a).unwrap(), a);
                assert_eq!(&l.meet(a, a).unwrap(), a);
                for b in &xs {
                    let j = l.join(a, b).unwrap();
                    let m = l.meet(a, b).unwrap();
                    assert_eq!(j, l.join(b, a).unwrap());
                    assert_eq!(m, l.meet(b, a).unwrap());
                    assert_eq!(&l.join(a, &m).unwrap(), a, "absorption");
                    assert_eq!(&l.meet(a, &j).unwrap(), a, "absorption");
                    // join is the least upper bound in the inclusion order
                    assert!(a.atoms.is_subset(&j.atoms) && b.atoms.is_subset(&j.atoms));
                    for c in &xs {
                        if a.atoms.is_subset(&c.atoms) && b.atoms.is_subset(&c.atoms) {
                            assert!(j.atoms.is_subset(&c.atoms));
                        }
                        assert_eq!(
                            l.join(&l.join(a, b).unwrap(), c).unwrap(),
                            l.join(a, &l.join(b, c).unwrap()).unwrap()
                        );
                    }
                }
            }
            assert!(l.bottom().atoms.iter().all(|k| l.iter().all(|x| x.atoms.contains(k))));
            match kind.operation {
                Operation::Union => assert!(l.bottom().atoms.is_empty()),
                Operation::Intersection => assert!(l.top().atoms.is_full()),
            }
        }
    }
}

#[test]
fn mirrored_lattices_have_equal_size_bounded_by_the_smaller_side() {
    for s in sample() {
        let d = &s.decomposition;
        for kind in [LatticeKind::UNION_LEFT, LatticeKind::INTERSECTION_LEFT] {
            let left = build_lattice(d, kind).len();
            let right = build_lattice(d, kind.mirror()).len();
            assert_eq!(left, right, "{}", s.description);
            assert!(left <= 1 << d.n().min(d.m()), "{}", s.description);
        }
    }
}

#[test]
fn maps_are_inverse_and_order_reversing() {
    for s in sample() {
        let d = &s.decomposition;
        let ul = build_lattice(d, LatticeKind::UNION_LEFT);
        for x in ul.iter() {
            assert_eq!(psi_prime(d, &psi(d, &x).unwrap()).unwrap(), x);
            for y in ul.iter() {
                if x.atoms.is_subset(&y.atoms) {
                    assert!(psi(d, &y).unwrap().atoms.is_subset(&psi(d, &x).unwrap().atoms));
                }
            }
        }
        let il = build_lattice(d, LatticeKind::INTERSECTION_LEFT);
        for x in il.iter() {
            assert_eq!(phi_prime(d, &phi(d, &x).unwrap()).unwrap(), x);
        }
        for part in [DualityPart::A, DualityPart::B] {
            assert!(verify_duality(d, part).success(), "{}", s.description);
        }
    }
}

fn union_of(machines: Vec<Nfa>, d: &LanguageDecomposition) -> Nfa {
    union_all(&machines, d.dfa().alphabet()).unwrap()
}

/// `Ψ(X)` recomputed from quotient machines: the union of the `R_i` whose
/// atom `A_i` is not inside `X`; likewise `Φ(X)` as the intersection of the
/// `R_j` with `A_j` inside `X`, here checked through its complement.
#[test]
fn maps_agree_with_language_level_definitions() {
    for s in sample().into_iter().take(40) {
        let d = &s.decomposition;
        for x in build_lattice(d, LatticeKind::UNION_LEFT).iter() {
            let image = atom_union_machine(d, Side::Right, &psi(d, &x).unwrap().atoms);
            let direct = union_of(
                (0..d.m())
                    .filter(|&i| !x.atoms.contains(i))
                    .map(|i| d.right_quotient_machine(i))
                    .collect(),
                d,
            );
            assert!(equivalent(&image, &direct).unwrap(), "{}", s.description);
        }
        for x in build_lattice(d, LatticeKind::INTERSECTION_LEFT).iter() {
            let image = atom_union_machine(d, Side::Right, &phi(d, &x).unwrap().atoms);
            // complement of ⋂ R_j is ⋃ of the complements
            let complements: Vec<Nfa> = (0..d.m())
                .filter(|&j| x.atoms.contains(j))
                .map(|j| minimize(&d.right_quotient_machine(j)).complement().to_nfa())
                .collect();
            let outside = union_of(complements, d);
            let complement_of_image = minimize(&image).complement();
            assert!(equivalent(&complement_of_image, &outside).unwrap(), "{}", s.description);
        }
    }
}

#[test]
fn hasse_diagrams_of_the_running_example() {
    let d = running_example();
    let expected = [
        (LatticeKind::UNION_LEFT, 5, 5),
        (LatticeKind::UNION_RIGHT, 5, 5),
        (LatticeKind::INTERSECTION_LEFT, 6, 6),
        (LatticeKind::INTERSECTION_RIGHT, 6, 6),
    ];
    for (kind, nodes, edges) in expected {
        let l = build_lattice(&d, kind);
        let dot = render_lattice_dot(&l, &lattice_labels(&d, &l, 3));
        assert_eq!(dot.matches("[label=").count(), nodes, "{kind}");
        assert_eq!(dot.matches("->").count(), edges, "{kind}");
        assert!(dot.contains("rankdir=BT"));
    }
    let l = build_lattice(&d, LatticeKind::UNION_LEFT);
    let dot = render_lattice_dot(&l, &lattice_labels(&d, &l, 3));
    for label in ["∅", "{ε}", "{a}", "{ε, a}", "{ε, a, aa, ba}"] {
        assert!(dot.contains(&format!("[label=\"{label}\"]")), "{dot}");
    }
}

#[test]
fn running_example_is_distributive_and_universal_is_trivial() {
    let d = running_example();
    for kind in LatticeKind::ALL {
        assert!(build_lattice(&d, kind).is_distributive());
    }
    let sigma = ab();
    let u = quotlat::atoms::decompose(&universal(&sigma)).unwrap();
    assert_eq!(build_lattice(&u, LatticeKind::UNION_LEFT).len(), 2);
    assert_eq!(build_lattice(&u, LatticeKind::INTERSECTION_RIGHT).len(), 1);
}
