//! The Boolean pairing `⟨A, B⟩_L = 1` iff some `w ∈ A`, `v ∈ B` has `wv ∈ L`,
//! restricted to unions of right atoms (first argument) and unions of left
//! atoms (second argument), plus its use to re-derive `Ψ`, `Φ` and the
//! quotient-atom matrix.
//!
//! Between atoms the pairing is read off the right atomic intersections:
//! `⟨B_i, A_j⟩ = 1` iff `B_i ⊆ R_j`. The quotient-atom matrix is built from
//! the left atomic intersections instead, so [`matrix_via_pairing`] and
//! [`quotient_atom_matrix`](crate::atoms::quotient_atom_matrix) are two
//! independent routes to the same matrix.

use std::fmt;
use std::ops::{Add, Mul};

use crate::atoms::{LanguageDecomposition, QuotientAtomMatrix};
use crate::automata::{Automaton, Dfa};
use crate::error::{Error, Result};
use crate::lattice::{LatticeElement, LatticeKind, Side};
use crate::set::IndexSet;

/// An element of the Boolean semiring: `1 + 1 = 1`, multiplication is AND.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Bool2(pub bool);

impl Bool2 {
    pub const ZERO: Bool2 = Bool2(false);
    pub const ONE: Bool2 = Bool2(true);

    pub fn is_one(self) -> bool {
        self.0
    }
}

impl Add for Bool2 {
    type Output = Bool2;
    fn add(self, rhs: Bool2) -> Bool2 {
        Bool2(self.0 || rhs.0)
    }
}

impl Mul for Bool2 {
    type Output = Bool2;
    fn mul(self, rhs: Bool2) -> Bool2 {
        Bool2(self.0 && rhs.0)
    }
}

impl std::iter::Sum for Bool2 {
    fn sum<I: Iterator<Item = Bool2>>(iter: I) -> Bool2 {
        iter.fold(Bool2::ZERO, |a, b| a + b)
    }
}

impl From<bool> for Bool2 {
    fn from(b: bool) -> Self {
        Bool2(b)
    }
}

impl fmt::Display for Bool2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.0 { "1" } else { "0" })
    }
}

pub struct PairingContext<'a> {
    decomposition: &'a LanguageDecomposition,
}

impl<'a> PairingContext<'a> {
    pub fn new(decomposition: &'a LanguageDecomposition) -> Self {
        PairingContext { decomposition }
    }

    pub fn decomposition(&self) -> &LanguageDecomposition {
        self.decomposition
    }

    /// Index sets must live over the matching atom universe.
    fn check(&self, set: &IndexSet, universe: usize) -> Result<()> {
        if set.universe() != universe {
            return Err(Error::IndexOutOfRange {
                index: set.universe(),
                limit: universe,
            });
        }
        Ok(())
    }
}

/// `⟨B_i, A_j⟩` for right atom `i` and left atom `j`.
pub fn pair_atoms(ctx: &PairingContext, i: usize, j: usize) -> Result<Bool2> {
    let d = ctx.decomposition;
    if i >= d.n() {
        return Err(Error::IndexOutOfRange { index: i, limit: d.n() });
    }
    if j >= d.m() {
        return Err(Error::IndexOutOfRange { index: j, limit: d.m() });
    }
    Ok(Bool2(d.right_atom_set(i).contains(j)))
}

fn pair_atoms_unchecked(d: &LanguageDecomposition, i: usize, j: usize) -> Bool2 {
    Bool2(d.right_atom_set(i).contains(j))
}

/// `⟨⋃_{i∈a} B_i, ⋃_{j∈b} A_j⟩`, expanded bilinearly.
pub fn pair_sets(ctx: &PairingContext, a: &IndexSet, b: &IndexSet) -> Result<Bool2> {
    let d = ctx.decomposition;
    ctx.check(a, d.n())?;
    ctx.check(b, d.m())?;
    Ok(a.iter()
        .flat_map(|i| b.iter().map(move |j| pair_atoms_unchecked(d, i, j)))
        .sum())
}

/// `Y^⊥` for a union `Y` of right atoms, as the set of left atoms pairing
/// to zero with every atom of `Y`.
pub fn orthogonal_complement(ctx: &PairingContext, y: &IndexSet) -> Result<IndexSet> {
    let d = ctx.decomposition;
    ctx.check(y, d.n())?;
    Ok(IndexSet::from_indices(
        d.m(),
        (0..d.m()).filter(|&j| y.iter().all(|i| !pair_atoms_unchecked(d, i, j).is_one())),
    ))
}

/// `Ψ(X) = ⋃ { B_k : ⟨B_k, Σ* ∖ X⟩ = 1 }`.
pub fn psi_via_pairing(ctx: &PairingContext, x: &LatticeElement) -> Result<LatticeElement> {
    let d = ctx.decomposition;
    expect(x, LatticeKind::UNION_LEFT, d.m())?;
    let outside = x.atoms.complement();
    let mut atoms = IndexSet::empty(d.n());
    for k in 0..d.n() {
        if pair_sets(ctx, &IndexSet::singleton(d.n(), k), &outside)?.is_one() {
            atoms.insert(k);
        }
    }
    Ok(LatticeElement::new(LatticeKind::UNION_RIGHT, atoms))
}

/// `Φ(Z) = ⋃ { B_k : Z ∩ B_k^⊥ = ∅ }`.
pub fn phi_via_pairing(ctx: &PairingContext, z: &LatticeElement) -> Result<LatticeElement> {
    let d = ctx.decomposition;
    expect(z, LatticeKind::INTERSECTION_LEFT, d.m())?;
    let mut atoms = IndexSet::empty(d.n());
    for k in 0..d.n() {
        let perp = orthogonal_complement(ctx, &IndexSet::singleton(d.n(), k))?;
        if z.atoms.is_disjoint(&perp) {
            atoms.insert(k);
        }
    }
    Ok(LatticeElement::new(LatticeKind::INTERSECTION_RIGHT, atoms))
}

/// The `n × m` matrix of `⟨B_i, A_j⟩`.
pub fn matrix_via_pairing(ctx: &PairingContext) -> QuotientAtomMatrix {
    let d = ctx.decomposition;
    QuotientAtomMatrix::from_fn(d.n(), d.m(), |i, j| pair_atoms_unchecked(d, i, j).is_one())
}

/// The pairing restricted to a right lattice element and a left lattice
/// element of the same operation.
pub fn pair_lattice_elements(ctx: &PairingContext, y: &LatticeElement, x: &LatticeElement) -> Result<Bool2> {
    if y.kind.side != Side::Right || x.kind != y.kind.mirror() {
        return Err(Error::ElementNotInLattice(format!(
            "cannot pair {} with {}",
            y.kind, x.kind
        )));
    }
    pair_sets(ctx, &y.atoms, &x.atoms)
}

/// The pairing on finite, explicitly listed word sets, decided by running
/// each concatenation through `language`.
pub fn pair_words(language: &Dfa, a: &[String], b: &[String]) -> Bool2 {
    Bool2(a.iter().any(|w| b.iter().any(|v| language.accepts(&format!("{w}{v}")))))
}

fn expect(x: &LatticeElement, kind: LatticeKind, universe: usize) -> Result<()> {
    if x.kind != kind || x.atoms.universe() != universe {
        return Err(Error::ElementNotInLattice(format!(
            "{} is not an element of {kind}",
            x.atoms
        )));
    }
    Ok(())
}
