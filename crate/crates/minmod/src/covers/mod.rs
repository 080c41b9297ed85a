//! Cover functions: the branching rules of the enumeration engine.
//!
//! A *cover* of a theory `S` is a family of consistent literal sets over
//! `Lit(S)` such that every minimal model of `S` is consistent with at
//! least one member.  The engine recurses on each member; because every
//! member mentions at least one atom, reduction shrinks the atom set
//! strictly and the recursion terminates.  Cover size and shape drive
//! the leaf bounds: [`cover2`] yields at most `3^(n/3)` leaves on 2-CNF,
//! [`cover3`] at most `1.6702^n` on simplified 3-CNF, and [`cover_t`]
//! at most `alpha_t^n` in general width `t`, where `alpha_t < 2` solves
//! `x^(t+1) - 2x^t + 1 = 0`.
//!
//! Selection is deterministic everywhere: clauses are examined in a
//! canonical duplicate-free order, atoms in ascending id order, and each
//! function applies the first case of its catalog that matches.  The
//! catalogs are structural — they inspect clause shapes and occurrence
//! patterns only, never counting models — and every emitted branch can
//! be validated independently with [`check_cover_shape`] plus the
//! brute-force oracles.

mod cover2;
mod cover3;
mod cover_t;
mod gamma;

pub use cover2::cover2;
pub use cover3::{cover3, cover3_case_flags};
pub use cover_t::cover_t;
pub use gamma::{build_gamma, GammaGraph, GammaShape};

use std::fmt;

use crate::theory::{Clause, Lit, LitSet, Theory};

/// Identifies which case of which cover catalog produced a cover;
/// stable strings like `"2cnf/5c"` or `"3cnf/13iii"` for traces and
/// diagnostics.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CaseId(pub &'static str);

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.0)
    }
}

/// A cover: the selected case and its branches.
#[derive(Clone, Debug)]
pub struct Cover {
    pub case: CaseId,
    pub branches: Vec<LitSet>,
}

impl Cover {
    fn new(case: &'static str, branches: Vec<LitSet>) -> Cover {
        Cover { case: CaseId(case), branches }
    }
}

/// Whether an atom set is consistent with a literal set: every positive
/// literal's atom is in `m` and every negative literal's atom is not.
pub fn model_consistent_with(m: &[u32], a: &LitSet) -> bool {
    a.iter().all(|l| (m.binary_search(&l.atom()).is_ok()) == l.is_positive())
}

/// Structural cover checks shared by the engine (debug builds) and the
/// test suite: branches are non-empty consistent literal sets over the
/// atoms of `S`, each branch strictly shrinks the occurring-atom set
/// under reduction, and the cover splits (≥ 2 branches) whenever `S` has
/// ≥ 2 atoms.  Model-completeness is checked separately against oracles.
pub fn check_cover_shape(s: &Theory, cover: &Cover) {
    assert!(!cover.branches.is_empty(), "{}: empty cover", cover.case);
    let atoms = s.occurring_atoms();
    for a in &cover.branches {
        assert!(!a.is_empty(), "{}: empty branch", cover.case);
        assert!(a.is_consistent(), "{}: inconsistent branch {a:?}", cover.case);
        for l in a.iter() {
            assert!(
                atoms.binary_search(&l.atom()).is_ok(),
                "{}: branch literal {l:?} outside Lit(S)",
                cover.case
            );
        }
        let r = s.reduce(a).expect("consistent branch");
        assert!(
            r.occurring_atom_count() < atoms.len(),
            "{}: branch {a:?} does not shrink the atom set",
            cover.case
        );
    }
    if atoms.len() >= 2 {
        assert!(cover.branches.len() >= 2, "{}: cover does not split", cover.case);
    }
}

/// Canonical duplicate-free working view of a theory used by the cover
/// functions: clauses sorted by literal sequence with duplicates
/// collapsed, bucketed by width, plus an occurrence index.  Duplicates
/// carry no information for branching (the 2-CNF pipeline's identity
/// simplification can let them through), and the canonical order makes
/// every "first clause such that ..." selection deterministic.
pub(crate) struct View {
    cs: Vec<Clause>,
    atoms: Vec<u32>,
    units: Vec<usize>,
    twos: Vec<usize>,
    threes: Vec<usize>,
    occ: Vec<Vec<usize>>,
}

impl View {
    pub fn build(s: &Theory) -> View {
        assert!(
            !s.has_empty_clause(),
            "cover functions require a theory without the empty clause"
        );
        let mut cs = s.clauses().to_vec();
        cs.sort_unstable_by(|a, b| a.lits().cmp(b.lits()));
        cs.dedup();
        assert!(!cs.is_empty(), "cover functions require a non-empty theory");
        let n = s.n();
        let mut occ = vec![Vec::new(); 2 * n as usize];
        let mut units = Vec::new();
        let mut twos = Vec::new();
        let mut threes = Vec::new();
        for (i, c) in cs.iter().enumerate() {
            for &l in c.lits() {
                occ[l.code()].push(i);
            }
            match c.width() {
                1 => units.push(i),
                2 => twos.push(i),
                3 => threes.push(i),
                _ => {}
            }
        }
        let atoms = (0..n)
            .filter(|&a| !occ[Lit::pos(a).code()].is_empty() || !occ[Lit::neg(a).code()].is_empty())
            .collect();
        View { cs, atoms, units, twos, threes, occ }
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.cs
    }

    pub fn clause(&self, i: usize) -> &Clause {
        &self.cs[i]
    }

    /// Occurring atoms, ascending.
    pub fn atoms(&self) -> &[u32] {
        &self.atoms
    }

    /// Indices of clauses containing the literal, ascending.
    pub fn occ_lit(&self, l: Lit) -> &[usize] {
        &self.occ[l.code()]
    }

    /// Total occurrences of an atom with either polarity.
    pub fn atom_occ(&self, a: u32) -> usize {
        self.occ_lit(Lit::pos(a)).len() + self.occ_lit(Lit::neg(a)).len()
    }

    pub fn units(&self) -> &[usize] {
        &self.units
    }

    pub fn twos(&self) -> &[usize] {
        &self.twos
    }

    pub fn threes(&self) -> &[usize] {
        &self.threes
    }

    /// The first width-2 clause mentioning the atom (either polarity),
    /// with that clause's other literal.
    pub fn two_with_atom(&self, a: u32) -> Option<(usize, Lit)> {
        self.twos
            .iter()
            .copied()
            .find(|&i| self.cs[i].contains_atom(a))
            .map(|i| (i, self.other_lit(i, a)))
    }

    /// The literal of a 2-clause over the atom other than `a`.
    pub fn other_lit(&self, i: usize, a: u32) -> Lit {
        let c = &self.cs[i];
        debug_assert_eq!(c.width(), 2);
        let l = c.lits();
        if l[0].atom() == a {
            l[1]
        } else {
            debug_assert_eq!(l[1].atom(), a);
            l[0]
        }
    }
}

/// Shorthand used throughout the cover builders.
pub(crate) fn ls<const N: usize>(lits: [Lit; N]) -> LitSet {
    LitSet::from_lits(lits)
}
