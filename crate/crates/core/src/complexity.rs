//! When the left quotient lattices reach their maximal size `2^n`.
//!
//! There are `2^n` unions of left quotients iff every atomic intersection
//! `I_{{i}}` (one quotient uncomplemented) is non-empty, and `2^n`
//! intersections iff every `Z_k = I_{{0..n-1} ∖ {k}}` (one quotient
//! complemented) is non-empty.

use std::fmt;

use serde::Serialize;

use crate::atoms::LanguageDecomposition;
use crate::lattice::{build_lattice, LatticeKind};
use crate::set::IndexSet;

/// Lattices are enumerated only up to this many left quotients.
pub const ENUMERATION_LIMIT: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplexityReport {
    pub n: usize,
    /// `|Latt(L, ∪, L)|`; equal to `2^n` exactly when `union_maximal` if
    /// `predicted` is set.
    pub union_count: u64,
    pub intersection_count: u64,
    pub union_maximal: bool,
    pub intersection_maximal: bool,
    /// `I_{{i}} ≠ ∅` for each `i`.
    pub singleton_atoms_present: Vec<bool>,
    /// `Z_k ≠ ∅` for each `k`.
    pub cosingleton_atoms_present: Vec<bool>,
    /// Counts were not enumerated (`n > 20`); they are the atom-condition
    /// verdict (`2^n` or unknown-but-smaller, reported as 0).
    pub predicted: bool,
    /// Whether the count of the right lattices was also computed and matched.
    pub right_counts_agree: Option<bool>,
    /// Whether the "2n atoms are necessary and sufficient" statement applies
    /// (it is only claimed for `n > 2`).
    pub corollary_applies: bool,
}

impl ComplexityReport {
    /// Both biconditionals between lattice size and atom conditions hold.
    /// Always true for predicted reports.
    pub fn consistent(&self) -> bool {
        if self.predicted {
            return true;
        }
        let full = 1u64 << self.n;
        let union_ok = (self.union_count == full) == self.singleton_atoms_present.iter().all(|&b| b)
            && self.union_maximal == (self.union_count == full);
        let inter_ok = (self.intersection_count == full) == self.cosingleton_atoms_present.iter().all(|&b| b)
            && self.intersection_maximal == (self.intersection_count == full);
        union_ok && inter_ok && self.right_counts_agree != Some(false)
    }
}

pub fn complexity_report(d: &LanguageDecomposition) -> ComplexityReport {
    let n = d.n();
    let sets = d.left_atom_sets();
    let present = |s: &IndexSet| sets.iter().any(|t| t == s);
    let singleton: Vec<bool> = (0..n).map(|i| present(&IndexSet::singleton(n, i))).collect();
    let cosingleton: Vec<bool> = (0..n)
        .map(|k| {
            let mut s = IndexSet::full(n);
            s.remove(k);
            present(&s)
        })
        .collect();
    let union_pred = singleton.iter().all(|&b| b);
    let inter_pred = cosingleton.iter().all(|&b| b);

    if n > ENUMERATION_LIMIT {
        let full = 1u64.checked_shl(n as u32).unwrap_or(0);
        return ComplexityReport {
            n,
            union_count: if union_pred { full } else { 0 },
            intersection_count: if inter_pred { full } else { 0 },
            union_maximal: union_pred,
            intersection_maximal: inter_pred,
            singleton_atoms_present: singleton,
            cosingleton_atoms_present: cosingleton,
            predicted: true,
            right_counts_agree: None,
            corollary_applies: n > 2,
        };
    }

    let full = 1u64 << n;
    let union_count = build_lattice(d, LatticeKind::UNION_LEFT).len() as u64;
    let intersection_count = build_lattice(d, LatticeKind::INTERSECTION_LEFT).len() as u64;
    // The right lattices live over n atoms too; only build them when small.
    let right_counts_agree = (d.m() <= ENUMERATION_LIMIT).then(|| {
        build_lattice(d, LatticeKind::UNION_RIGHT).len() as u64 == union_count
            && build_lattice(d, LatticeKind::INTERSECTION_RIGHT).len() as u64 == intersection_count
    });
    ComplexityReport {
        n,
        union_count,
        intersection_count,
        union_maximal: union_count == full,
        intersection_maximal: intersection_count == full,
        singleton_atoms_present: singleton,
        cosingleton_atoms_present: cosingleton,
        predicted: false,
        right_counts_agree,
        corollary_applies: n > 2,
    }
}

impl fmt::Display for ComplexityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let flags = |v: &[bool]| v.iter().map(|&b| if b { '1' } else { '0' }).collect::<String>();
        let full = 1u128 << self.n.min(127);
        writeln!(f, "left quotients (n)        {}", self.n)?;
        writeln!(f, "2^n                       {full}")?;
        let tag = if self.predicted { " (predicted)" } else { "" };
        writeln!(f, "unions                    {}{tag}", self.union_count)?;
        writeln!(f, "intersections             {}{tag}", self.intersection_count)?;
        writeln!(f, "union maximal             {}", self.union_maximal)?;
        writeln!(f, "intersection maximal      {}", self.intersection_maximal)?;
        writeln!(
            f,
            "I_{{i}} non-empty           {}",
            flags(&self.singleton_atoms_present)
        )?;
        writeln!(
            f,
            "Z_k non-empty             {}",
            flags(&self.cosingleton_atoms_present)
        )?;
        if let Some(agree) = self.right_counts_agree {
            writeln!(f, "right counts agree        {agree}")?;
        }
        if self.corollary_applies {
            let both = self.union_maximal && self.intersection_maximal;
            writeln!(f, "2n atoms present          {both}")?;
        } else {
            writeln!(f, "2n atoms present          n/a (n ≤ 2)")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atoms::decompose;
    use crate::automata::{parse_regex, Alphabet};

    #[test]
    fn universal_language() {
        let sigma = Alphabet::new("ab").unwrap();
        let d = decompose(&parse_regex("(a|b)*", &sigma).unwrap()).unwrap();
        let r = complexity_report(&d);
        assert_eq!((r.n, r.union_count, r.intersection_count), (1, 2, 1));
        assert!(r.union_maximal && !r.intersection_maximal);
        assert!(!r.corollary_applies);
        assert!(r.consistent());
    }
}
