//! Text, JSON and DOT renderings of decompositions, lattices and reports.
//!
//! Languages are shown through [`LanguageSummary`]: finite and cofinite ones
//! exactly, infinite ones as their atom indices followed by a few shortest
//! words.

use std::fmt::Write;

use serde_json::{json, Value};

use crate::atoms::{LanguageDecomposition, QuotientAtomMatrix};
use crate::automata::{union_all, Automaton, LanguageSummary, Nfa};
use crate::lattice::{QuotientLattice, Side};
use crate::pairing::{orthogonal_complement, PairingContext};
use crate::set::IndexSet;

/// Machine for the union of the atoms in `atoms` on one side.
pub fn atom_union_machine(d: &LanguageDecomposition, side: Side, atoms: &IndexSet) -> Nfa {
    let machines: Vec<Nfa> = atoms
        .iter()
        .map(|k| match side {
            Side::Left => d.left_atom_machine(k),
            Side::Right => d.right_atom_machine(k),
        })
        .collect();
    union_all(&machines, d.dfa().alphabet()).expect("atom machines share the alphabet")
}

/// Display label for a union of atoms on one side.
pub fn atom_union_label(d: &LanguageDecomposition, side: Side, atoms: &IndexSet, word_bound: usize) -> String {
    let summary = LanguageSummary::of(&atom_union_machine(d, side, atoms), word_bound);
    match summary {
        LanguageSummary::Infinite { .. } => format!("{}{atoms} {summary}", side_prefix(side)),
        _ => summary.to_string(),
    }
}

fn side_prefix(side: Side) -> char {
    match side {
        Side::Left => 'A',
        Side::Right => 'B',
    }
}

/// One label per lattice element, in element order.
pub fn lattice_labels(d: &LanguageDecomposition, lattice: &QuotientLattice, word_bound: usize) -> Vec<String> {
    lattice
        .elements()
        .iter()
        .map(|x| atom_union_label(d, lattice.kind().side, x, word_bound))
        .collect()
}

fn escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Hasse diagram of the cover relation, drawn bottom to top.
pub fn render_lattice_dot(lattice: &QuotientLattice, labels: &[String]) -> String {
    let name = lattice.kind().name().replace('-', "_");
    let mut out = String::new();
    let _ = writeln!(out, "digraph {name} {{");
    let _ = writeln!(out, "  rankdir=BT;");
    let _ = writeln!(out, "  node [shape=box];");
    for (k, label) in labels.iter().enumerate().take(lattice.len()) {
        let _ = writeln!(out, "  {k} [label=\"{}\"];", escape(label));
    }
    for (lo, hi) in lattice.covers() {
        let _ = writeln!(out, "  {lo} -> {hi};");
    }
    out.push_str("}\n");
    out
}

pub fn render_lattice_text(lattice: &QuotientLattice, labels: &[String]) -> String {
    let prefix = side_prefix(lattice.kind().side);
    let mut out = String::new();
    let _ = writeln!(out, "{} lattice: {} elements", lattice.kind(), lattice.len());
    for (k, x) in lattice.elements().iter().enumerate() {
        let tag = format!("{prefix}{x}");
        let label = labels[k].strip_prefix(tag.as_str()).unwrap_or(&labels[k]).trim_start();
        let _ = writeln!(out, "  [{k}] {tag}  {label}");
    }
    let _ = writeln!(out, "covers:");
    for (lo, hi) in lattice.covers() {
        let _ = writeln!(out, "  {lo} < {hi}");
    }
    out
}

pub fn lattice_json(lattice: &QuotientLattice, labels: &[String]) -> Value {
    json!({
        "kind": lattice.kind().name(),
        "elements": lattice.elements().iter().zip(labels).map(|(x, l)| json!({
            "atoms": x.to_vec(),
            "language": l,
        })).collect::<Vec<_>>(),
        "covers": lattice.covers().iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>(),
    })
}

pub fn render_quotients_text(d: &LanguageDecomposition, word_bound: usize) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "left quotients: {}", d.n());
    for j in 0..d.n() {
        let _ = writeln!(
            out,
            "  L{j} = A{}  {}",
            d.left_quotient(j),
            d.left_quotient_summary(j, word_bound)
        );
    }
    let _ = writeln!(out, "right quotients: {}", d.m());
    for i in 0..d.m() {
        let _ = writeln!(
            out,
            "  R{i} = B{}  {}",
            d.right_quotient(i),
            d.right_quotient_summary(i, word_bound)
        );
    }
    out
}

pub fn quotients_json(d: &LanguageDecomposition, word_bound: usize) -> Value {
    json!({
        "left": (0..d.n()).map(|j| json!({
            "atoms": d.left_quotient(j).to_vec(),
            "language": d.left_quotient_summary(j, word_bound).to_string(),
        })).collect::<Vec<_>>(),
        "right": (0..d.m()).map(|i| json!({
            "atoms": d.right_quotient(i).to_vec(),
            "language": d.right_quotient_summary(i, word_bound).to_string(),
        })).collect::<Vec<_>>(),
    })
}

pub fn render_atoms_text(d: &LanguageDecomposition, word_bound: usize) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "left atoms: {}", d.m());
    for i in 0..d.m() {
        let mut tags = Vec::new();
        if i == d.final_left_atom() {
            tags.push("final");
        }
        if d.initial_left_atoms().contains(&i) {
            tags.push("initial");
        }
        if d.negative_left_atom() == Some(i) {
            tags.push("negative");
        }
        let tags = if tags.is_empty() {
            String::new()
        } else {
            format!("  ({})", tags.join(", "))
        };
        let _ = writeln!(
            out,
            "  A{i} = I{}  {}{tags}",
            d.left_atom_set(i),
            d.left_atom_summary(i, word_bound)
        );
    }
    let _ = writeln!(out, "right atoms: {}", d.n());
    for j in 0..d.n() {
        let _ = writeln!(
            out,
            "  B{j} = J{}  {}",
            d.right_atom_set(j),
            d.right_atom_summary(j, word_bound)
        );
    }
    out
}

pub fn atoms_json(d: &LanguageDecomposition, word_bound: usize) -> Value {
    json!({
        "left": (0..d.m()).map(|i| json!({
            "subset": d.left_atom_set(i).to_vec(),
            "language": d.left_atom_summary(i, word_bound).to_string(),
        })).collect::<Vec<_>>(),
        "right": (0..d.n()).map(|j| json!({
            "subset": d.right_atom_set(j).to_vec(),
            "language": d.right_atom_summary(j, word_bound).to_string(),
        })).collect::<Vec<_>>(),
        "final_left_atom": d.final_left_atom(),
        "initial_left_atoms": d.initial_left_atoms(),
        "negative_left_atom": d.negative_left_atom(),
    })
}

pub fn render_matrix_text(matrix: &QuotientAtomMatrix) -> String {
    matrix.to_string()
}

pub fn matrix_json(matrix: &QuotientAtomMatrix) -> Value {
    serde_json::from_str(&matrix.to_json()).expect("matrix json is valid")
}

/// The pairing matrix `⟨B_i, A_j⟩` followed by each `B_i^⊥`.
pub fn render_pairing_text(ctx: &PairingContext, matrix: &QuotientAtomMatrix) -> String {
    let d = ctx.decomposition();
    let mut out = String::new();
    let _ = writeln!(out, "pairing <B_i, A_j>:");
    out.push_str(&matrix.to_string());
    let _ = writeln!(out, "orthogonal complements:");
    for i in 0..d.n() {
        let perp = orthogonal_complement(ctx, &IndexSet::singleton(d.n(), i)).expect("index in range");
        let _ = writeln!(out, "  B{i}^⊥ = A{perp}");
    }
    out
}

pub fn pairing_json(ctx: &PairingContext, matrix: &QuotientAtomMatrix) -> Value {
    let d = ctx.decomposition();
    json!({
        "matrix": matrix_json(matrix),
        "orthogonal_complements": (0..d.n()).map(|i| {
            orthogonal_complement(ctx, &IndexSet::singleton(d.n(), i)).expect("index in range").to_vec()
        }).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atoms::decompose;
    use crate::automata::{parse_regex, Alphabet};
    use crate::lattice::{build_lattice, LatticeKind};

    fn dec(re: &str) -> LanguageDecomposition {
        let sigma = Alphabet::new("ab").unwrap();
        decompose(&parse_regex(re, &sigma).unwrap()).unwrap()
    }

    #[test]
    fn single_element_lattice_has_no_edges() {
        let d = dec("(a|b)*");
        let l = build_lattice(&d, LatticeKind::INTERSECTION_LEFT);
        let dot = render_lattice_dot(&l, &lattice_labels(&d, &l, 2));
        assert_eq!(dot.matches("->").count(), 0);
        assert!(dot.contains("label=\"Σ*\""));
    }

    #[test]
    fn infinite_labels_carry_atom_indices() {
        let d = dec("a*");
        let l = build_lattice(&d, LatticeKind::UNION_LEFT);
        let labels = lattice_labels(&d, &l, 2);
        assert!(
            labels.iter().any(|s| s.starts_with("A{") && s.ends_with("…}")),
            "{labels:?}"
        );
    }

    #[test]
    fn rendering_is_deterministic() {
        let a = dec("_|a|aa|ba");
        let b = dec("_|a|aa|ba");
        for kind in LatticeKind::ALL {
            let (la, lb) = (build_lattice(&a, kind), build_lattice(&b, kind));
            assert_eq!(
                render_lattice_dot(&la, &lattice_labels(&a, &la, 3)),
                render_lattice_dot(&lb, &lattice_labels(&b, &lb, 3))
            );
        }
        assert_eq!(render_atoms_text(&a, 3), render_atoms_text(&b, 3));
    }
}
