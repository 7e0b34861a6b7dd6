//! The four quotient lattices and the order-reversing maps between the
//! left and right ones.
//!
//! Elements are atom-index sets: elements of left lattices are sets of
//! left atoms (universe `m`), elements of right lattices sets of right atoms
//! (universe `n`). Since atoms partition Σ*, equal sets mean equal languages.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::atoms::LanguageDecomposition;
use crate::error::{Error, Result};
use crate::set::IndexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Operation {
    Union,
    Intersection,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LatticeKind {
    pub operation: Operation,
    pub side: Side,
}

impl LatticeKind {
    pub const UNION_LEFT: LatticeKind = LatticeKind::new(Operation::Union, Side::Left);
    pub const UNION_RIGHT: LatticeKind = LatticeKind::new(Operation::Union, Side::Right);
    pub const INTERSECTION_LEFT: LatticeKind = LatticeKind::new(Operation::Intersection, Side::Left);
    pub const INTERSECTION_RIGHT: LatticeKind = LatticeKind::new(Operation::Intersection, Side::Right);

    pub const ALL: [LatticeKind; 4] = [
        Self::UNION_LEFT,
        Self::UNION_RIGHT,
        Self::INTERSECTION_LEFT,
        Self::INTERSECTION_RIGHT,
    ];

    pub const fn new(operation: Operation, side: Side) -> Self {
        LatticeKind { operation, side }
    }

    /// The lattice on the other side with the same operation.
    pub fn mirror(self) -> Self {
        let side = match self.side {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        };
        LatticeKind { side, ..self }
    }

    /// `union-left`, `intersection-right`, ...
    pub fn name(self) -> &'static str {
        match (self.operation, self.side) {
            (Operation::Union, Side::Left) => "union-left",
            (Operation::Union, Side::Right) => "union-right",
            (Operation::Intersection, Side::Left) => "intersection-left",
            (Operation::Intersection, Side::Right) => "intersection-right",
        }
    }

    pub fn parse(text: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == text)
    }
}

impl fmt::Display for LatticeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticeElement {
    pub atoms: IndexSet,
    pub kind: LatticeKind,
}

impl LatticeElement {
    pub fn new(kind: LatticeKind, atoms: IndexSet) -> Self {
        LatticeElement { atoms, kind }
    }
}

/// One of the four lattices of a language.
#[derive(Clone, Debug)]
pub struct QuotientLattice {
    kind: LatticeKind,
    universe: usize,
    generators: Vec<IndexSet>,
    elements: Vec<IndexSet>,
    index: HashMap<IndexSet, usize>,
}

/// Generators (quotient atom-sets) and atom universe for a lattice kind.
fn generators(d: &LanguageDecomposition, side: Side) -> (Vec<IndexSet>, usize) {
    match side {
        Side::Left => (d.left_quotients().to_vec(), d.m()),
        Side::Right => (d.right_quotients().to_vec(), d.n()),
    }
}

/// Closes the generators under the kind's operation, starting from its
/// identity (∅ for unions, the full atom set Σ* for intersections).
pub fn build_lattice(d: &LanguageDecomposition, kind: LatticeKind) -> QuotientLattice {
    let (gens, universe) = generators(d, kind.side);
    QuotientLattice::from_generators(kind, universe, gens)
}

impl QuotientLattice {
    pub fn from_generators(kind: LatticeKind, universe: usize, generators: Vec<IndexSet>) -> Self {
        let combine = |a: &IndexSet, b: &IndexSet| match kind.operation {
            Operation::Union => a.union(b),
            Operation::Intersection => a.intersection(b),
        };
        let identity = match kind.operation {
            Operation::Union => IndexSet::empty(universe),
            Operation::Intersection => IndexSet::full(universe),
        };
        let mut seen: HashSet<IndexSet> = HashSet::from([identity.clone()]);
        let mut queue = VecDeque::from([identity]);
        let mut elements = Vec::new();
        while let Some(e) = queue.pop_front() {
            for g in &generators {
                let next = combine(&e, g);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
            elements.push(e);
        }
        elements.sort_by(|a, b| a.canonical_cmp(b));
        let index = elements.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        QuotientLattice {
            kind,
            universe,
            generators,
            elements,
            index,
        }
    }

    pub fn kind(&self) -> LatticeKind {
        self.kind
    }

    /// Number of atoms in the underlying universe.
    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements in canonical order (size, then lexicographic).
    pub fn elements(&self) -> &[IndexSet] {
        &self.elements
    }

    pub fn generators(&self) -> &[IndexSet] {
        &self.generators
    }

    pub fn element(&self, i: usize) -> LatticeElement {
        LatticeElement::new(self.kind, self.elements[i].clone())
    }

    pub fn iter(&self) -> impl Iterator<Item = LatticeElement> + '_ {
        self.elements.iter().map(|e| LatticeElement::new(self.kind, e.clone()))
    }

    pub fn position(&self, atoms: &IndexSet) -> Option<usize> {
        self.index.get(atoms).copied()
    }

    pub fn contains(&self, atoms: &IndexSet) -> bool {
        self.index.contains_key(atoms)
    }

    /// Wraps an atom set, checking membership.
    pub fn lookup(&self, atoms: &IndexSet) -> Result<LatticeElement> {
        if atoms.universe() == self.universe && self.contains(atoms) {
            Ok(LatticeElement::new(self.kind, atoms.clone()))
        } else {
            Err(Error::ElementNotInLattice(format!("{atoms} in {}", self.kind)))
        }
    }

    fn check(&self, e: &LatticeElement) -> Result<()> {
        if e.kind == self.kind && e.atoms.universe() == self.universe && self.contains(&e.atoms) {
            Ok(())
        } else {
            Err(Error::ElementNotInLattice(format!("{} in {}", e.atoms, self.kind)))
        }
    }

    pub fn bottom(&self) -> LatticeElement {
        self.element(0)
    }

    pub fn top(&self) -> LatticeElement {
        self.element(self.len() - 1)
    }

    fn join_sets(&self, a: &IndexSet, b: &IndexSet) -> IndexSet {
        match self.kind.operation {
            Operation::Union => a.union(b),
            Operation::Intersection => {
                let u = a.union(b);
                self.generators
                    .iter()
                    .filter(|g| u.is_subset(g))
                    .fold(IndexSet::full(self.universe), |acc, g| acc.intersection(g))
            }
        }
    }

    fn meet_sets(&self, a: &IndexSet, b: &IndexSet) -> IndexSet {
        match self.kind.operation {
            Operation::Intersection => a.intersection(b),
            Operation::Union => {
                let i = a.intersection(b);
                self.generators
                    .iter()
                    .filter(|g| g.is_subset(&i))
                    .fold(IndexSet::empty(self.universe), |acc, g| acc.union(g))
            }
        }
    }

    /// Least upper bound: the union for union lattices; for intersection
    /// lattices the intersection of every quotient containing `a ∪ b`.
    pub fn join(&self, a: &LatticeElement, b: &LatticeElement) -> Result<LatticeElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(LatticeElement::new(self.kind, self.join_sets(&a.atoms, &b.atoms)))
    }

    /// Greatest lower bound: the intersection for intersection lattices; for
    /// union lattices the union of every quotient inside `a ∩ b`.
    pub fn meet(&self, a: &LatticeElement, b: &LatticeElement) -> Result<LatticeElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(LatticeElement::new(self.kind, self.meet_sets(&a.atoms, &b.atoms)))
    }

    /// Cover relation of the containment order as `(lower, upper)` index
    /// pairs into [`elements`](Self::elements), sorted.
    ///
    /// In a union lattice every element strictly above `a` contains some
    /// `a ∪ g` with `g` a generator not below `a`, so the upper covers of `a`
    /// are the minimal such sets; dually for intersection lattices.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for (ai, a) in self.elements.iter().enumerate() {
            let candidates: Vec<IndexSet> = match self.kind.operation {
                Operation::Union => self
                    .generators
                    .iter()
                    .filter(|g| !g.is_subset(a))
                    .map(|g| a.union(g))
                    .collect(),
                Operation::Intersection => self
                    .generators
                    .iter()
                    .filter(|g| !a.is_subset(g))
                    .map(|g| a.intersection(g))
                    .collect(),
            };
            let mut extremal: Vec<&IndexSet> = Vec::new();
            for c in &candidates {
                let dominated = candidates.iter().any(|o| {
                    o != c
                        && match self.kind.operation {
                            Operation::Union => o.is_subset(c),
                            Operation::Intersection => c.is_subset(o),
                        }
                });
                if !dominated && !extremal.contains(&c) {
                    extremal.push(c);
                }
            }
            for c in extremal {
                let ci = self.index[c];
                edges.push(match self.kind.operation {
                    Operation::Union => (ai, ci),
                    Operation::Intersection => (ci, ai),
                });
            }
        }
        edges.sort_unstable();
        edges
    }

    /// Exhaustive check of `a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c)`.
    pub fn is_distributive(&self) -> bool {
        let e = &self.elements;
        e.iter().all(|a| {
            e.iter().all(|b| {
                e.iter().all(|c| {
                    self.meet_sets(a, &self.join_sets(b, c))
                        == self.join_sets(&self.meet_sets(a, b), &self.meet_sets(a, c))
                })
            })
        })
    }
}

fn expect_kind(x: &LatticeElement, kind: LatticeKind, universe: usize) -> Result<()> {
    if x.kind != kind || x.atoms.universe() != universe {
        return Err(Error::ElementNotInLattice(format!(
            "{} is not an element of {kind}",
            x.atoms
        )));
    }
    Ok(())
}

/// `Ψ(X) = ⋃ { R_i : A_i ⊄ X }`, from the union-left to the union-right lattice.
pub fn psi(d: &LanguageDecomposition, x: &LatticeElement) -> Result<LatticeElement> {
    expect_kind(x, LatticeKind::UNION_LEFT, d.m())?;
    let atoms = (0..d.m())
        .filter(|&i| !x.atoms.contains(i))
        .fold(IndexSet::empty(d.n()), |acc, i| acc.union(d.right_quotient(i)));
    Ok(LatticeElement::new(LatticeKind::UNION_RIGHT, atoms))
}

/// `Ψ'(Y) = ⋃ { L_i : B_i ⊄ Y }`, the inverse of [`psi`].
pub fn psi_prime(d: &LanguageDecomposition, y: &LatticeElement) -> Result<LatticeElement> {
    expect_kind(y, LatticeKind::UNION_RIGHT, d.n())?;
    let atoms = (0..d.n())
        .filter(|&i| !y.atoms.contains(i))
        .fold(IndexSet::empty(d.m()), |acc, i| acc.union(d.left_quotient(i)));
    Ok(LatticeElement::new(LatticeKind::UNION_LEFT, atoms))
}

/// `Φ(X) = ⋂ { R_j : A_j ⊆ X }` (Σ* for an empty family), from the
/// intersection-left to the intersection-right lattice.
pub fn phi(d: &LanguageDecomposition, x: &LatticeElement) -> Result<LatticeElement> {
    expect_kind(x, LatticeKind::INTERSECTION_LEFT, d.m())?;
    let atoms = x
        .atoms
        .iter()
        .fold(IndexSet::full(d.n()), |acc, j| acc.intersection(d.right_quotient(j)));
    Ok(LatticeElement::new(LatticeKind::INTERSECTION_RIGHT, atoms))
}

/// `Φ'(Y) = ⋂ { L_j : B_j ⊆ Y }`, the inverse of [`phi`].
pub fn phi_prime(d: &LanguageDecomposition, y: &LatticeElement) -> Result<LatticeElement> {
    expect_kind(y, LatticeKind::INTERSECTION_RIGHT, d.n())?;
    let atoms = y
        .atoms
        .iter()
        .fold(IndexSet::full(d.m()), |acc, j| acc.intersection(d.left_quotient(j)));
    Ok(LatticeElement::new(LatticeKind::INTERSECTION_LEFT, atoms))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DualityPart {
    /// Unions: `Ψ` between the union lattices.
    A,
    /// Intersections: `Φ` between the intersection lattices.
    B,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum WitnessKind {
    /// The image is not an element of the target lattice.
    ImageOutsideLattice,
    /// The inverse map does not undo the map.
    NotInverse,
    /// The map misses an element of the target or hits one twice.
    NotBijective,
    OrderNotReversed,
    JoinNotSentToMeet,
    MeetNotSentToJoin,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityWitness {
    pub kind: WitnessKind,
    pub first: Vec<usize>,
    pub second: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    pub part: DualityPart,
    pub left_size: usize,
    pub right_size: usize,
    pub bijective: bool,
    pub order_reversing: bool,
    pub exchanges_meet_join: bool,
    pub witnesses: Vec<DualityWitness>,
}

impl DualityReport {
    pub fn success(&self) -> bool {
        self.bijective && self.order_reversing && self.exchanges_meet_join && self.witnesses.is_empty()
    }
}

/// Verifies that the left lattice is isomorphic to the dual of the right
/// one via `Ψ` (part A) or `Φ` (part B), over all pairs of elements.
pub fn verify_duality(d: &LanguageDecomposition, part: DualityPart) -> DualityReport {
    let (left_kind, map, inverse): (LatticeKind, MapFn, MapFn) = match part {
        DualityPart::A => (LatticeKind::UNION_LEFT, psi, psi_prime),
        DualityPart::B => (LatticeKind::INTERSECTION_LEFT, phi, phi_prime),
    };
    let left = build_lattice(d, left_kind);
    let right = build_lattice(d, left_kind.mirror());
    let mut witnesses = Vec::new();
    let mut bijective = true;
    let mut order_reversing = true;
    let mut exchanges = true;

    let images: Vec<IndexSet> = left
        .iter()
        .map(|x| map(d, &x).expect("element kinds match").atoms)
        .collect();
    for (x, img) in left.elements().iter().zip(&images) {
        if !right.contains(img) {
            bijective = false;
            witnesses.push(DualityWitness {
                kind: WitnessKind::ImageOutsideLattice,
                first: x.to_vec(),
                second: Some(img.to_vec()),
            });
        }
    }
    for y in right.iter() {
        let back = inverse(d, &y).expect("element kinds match");
        let round = map(d, &back).expect("element kinds match");
        if round.atoms != y.atoms || !left.contains(&back.atoms) {
            bijective = false;
            witnesses.push(DualityWitness {
                kind: WitnessKind::NotInverse,
                first: y.atoms.to_vec(),
                second: Some(round.atoms.to_vec()),
            });
        }
    }
    for x in left.iter() {
        let there = map(d, &x).expect("element kinds match");
        let back = inverse(d, &there).expect("element kinds match");
        if back.atoms != x.atoms {
            bijective = false;
            witnesses.push(DualityWitness {
                kind: WitnessKind::NotInverse,
                first: x.atoms.to_vec(),
                second: Some(back.atoms.to_vec()),
            });
        }
    }
    let distinct: HashSet<&IndexSet> = images.iter().collect();
    if distinct.len() != left.len() || left.len() != right.len() {
        bijective = false;
        witnesses.push(DualityWitness {
            kind: WitnessKind::NotBijective,
            first: vec![left.len(), distinct.len()],
            second: Some(vec![right.len()]),
        });
    }

    let as_right = |s: &IndexSet| LatticeElement::new(right.kind(), s.clone());
    for (i, u1) in left.elements().iter().enumerate() {
        for (j, u2) in left.elements().iter().enumerate() {
            let (f1, f2) = (&images[i], &images[j]);
            if u1.is_subset(u2) != f2.is_subset(f1) {
                order_reversing = false;
                witnesses.push(DualityWitness {
                    kind: WitnessKind::OrderNotReversed,
                    first: u1.to_vec(),
                    second: Some(u2.to_vec()),
                });
            }
            if !right.contains(f1) || !right.contains(f2) {
                continue;
            }
            let join = LatticeElement::new(left.kind(), left.join_sets(u1, u2));
            let meet = LatticeElement::new(left.kind(), left.meet_sets(u1, u2));
            let image_meet = right.meet(&as_right(f1), &as_right(f2)).expect("images are elements");
            let image_join = right.join(&as_right(f1), &as_right(f2)).expect("images are elements");
            if map(d, &join).expect("element kinds match").atoms != image_meet.atoms {
                exchanges = false;
                witnesses.push(DualityWitness {
                    kind: WitnessKind::JoinNotSentToMeet,
                    first: u1.to_vec(),
                    second: Some(u2.to_vec()),
                });
            }
            if map(d, &meet).expect("element kinds match").atoms != image_join.atoms {
                exchanges = false;
                witnesses.push(DualityWitness {
                    kind: WitnessKind::MeetNotSentToJoin,
                    first: u1.to_vec(),
                    second: Some(u2.to_vec()),
                });
            }
        }
    }

    DualityReport {
        part,
        left_size: left.len(),
        right_size: right.len(),
        bijective,
        order_reversing,
        exchanges_meet_join: exchanges,
        witnesses,
    }
}

type MapFn = fn(&LanguageDecomposition, &LatticeElement) -> Result<LatticeElement>;
