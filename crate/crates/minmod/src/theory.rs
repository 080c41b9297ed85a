//! Literals, clauses, CNF theories, and the two core theory transformations:
//! reduction by a set of assumed literals and the `sigma` simplification.
//!
//! Atoms are dense integer ids `0..n`; external names live in a separate
//! [`Symbols`] table so the solver core never touches strings.  A literal
//! packs an atom id and a polarity into one word.  Clauses keep their
//! literals sorted by literal code with distinct atoms, so a clause is a
//! canonical value: two clauses are equal iff they are the same set of
//! literals, and a clause containing a dual pair is rejected at
//! construction as a tautology.
//!
//! Reduction is the syntactic engine step: `reduce(T, L)` drops every
//! clause satisfied by `L` and erases falsified literals from the rest.
//! Its key property is that the atoms of the result are disjoint from the
//! atoms of `L`, so assumption sets built by the branching engine stay
//! consistent.  `sigma_simplify` removes duplicate clauses and 3-clauses
//! subsumed by 2-clauses; it preserves the model set exactly and is the
//! simplification under which the 3-CNF branching bound holds.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

/// A model is a set of atom ids, kept sorted ascending.
pub type Model = Vec<u32>;

/// Errors from theory-level operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum TheoryError {
    /// The assumption set contains an atom together with its dual.
    #[error("assumption set is inconsistent: contains a literal and its dual")]
    InconsistentAssumptions,
    /// A literal refers to an atom id outside the theory.
    #[error("atom id {0} out of range for a theory over {1} atoms")]
    AtomOutOfRange(u32, u32),
}

/// A literal: an atom id with a polarity.
///
/// Packed as `atom << 1 | polarity` so that the natural ordering sorts by
/// atom id with the negative literal of an atom immediately before the
/// positive one.  The dual literal is one xor away.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lit(u32);

impl Lit {
    /// The literal over `atom` with the given polarity.
    pub fn new(atom: u32, positive: bool) -> Lit {
        Lit(atom << 1 | positive as u32)
    }

    /// The positive literal over `atom`.
    pub fn pos(atom: u32) -> Lit {
        Lit::new(atom, true)
    }

    /// The negative literal over `atom`.
    pub fn neg(atom: u32) -> Lit {
        Lit::new(atom, false)
    }

    /// The atom this literal is over.
    pub fn atom(self) -> u32 {
        self.0 >> 1
    }

    /// Whether this is the positive literal of its atom.
    pub fn is_positive(self) -> bool {
        self.0 & 1 == 1
    }

    /// The opposite literal over the same atom.
    pub fn dual(self) -> Lit {
        Lit(self.0 ^ 1)
    }

    /// Dense index usable for occurrence tables of size `2n`.
    pub fn code(self) -> usize {
        self.0 as usize
    }

    /// Render with an external name table.
    pub fn display<'a>(self, symbols: &'a Symbols) -> impl fmt::Display + 'a {
        struct D<'a>(Lit, &'a Symbols);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                if !self.0.is_positive() {
                    write!(f, "-")?;
                }
                write!(f, "{}", self.1.name(self.0.atom()))
            }
        }
        D(self, symbols)
    }
}

impl fmt::Debug for Lit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.is_positive() {
            write!(f, "-")?;
        }
        write!(f, "x{}", self.atom())
    }
}

/// A clause: a non-tautological set of literals over distinct atoms,
/// stored sorted by literal code.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Clause {
    lits: Vec<Lit>,
}

impl Clause {
    /// Normalize a literal list into a clause: sort, drop duplicate
    /// literals, and return `None` if the result contains an atom with
    /// both polarities (a tautology, satisfied by every model).
    pub fn new(lits: impl IntoIterator<Item = Lit>) -> Option<Clause> {
        let mut v: Vec<Lit> = lits.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        // After sorting, dual literals of one atom are adjacent.
        if v.windows(2).any(|w| w[0].atom() == w[1].atom()) {
            return None;
        }
        Some(Clause { lits: v })
    }

    /// Internal constructor for literal lists already known to be sorted,
    /// duplicate-free, and tautology-free (e.g. produced by reduction).
    pub(crate) fn from_sorted_unchecked(lits: Vec<Lit>) -> Clause {
        debug_assert!(lits.windows(2).all(|w| w[0] < w[1] && w[0].atom() != w[1].atom()));
        Clause { lits }
    }

    /// Number of literals.
    pub fn width(&self) -> usize {
        self.lits.len()
    }

    /// The empty clause (satisfied by no model).
    pub fn is_empty(&self) -> bool {
        self.lits.is_empty()
    }

    /// The literals, sorted by literal code.
    pub fn lits(&self) -> &[Lit] {
        &self.lits
    }

    /// Whether the clause contains this exact literal.
    pub fn contains(&self, l: Lit) -> bool {
        self.lits.binary_search(&l).is_ok()
    }

    /// Whether the clause mentions this atom with either polarity.
    pub fn contains_atom(&self, atom: u32) -> bool {
        self.lits.iter().any(|l| l.atom() == atom)
    }

    /// The literal of this clause over `atom`, if any.
    pub fn lit_over(&self, atom: u32) -> Option<Lit> {
        self.lits.iter().copied().find(|l| l.atom() == atom)
    }

    /// The literals other than those over the given atoms, in order.
    pub fn lits_excluding(&self, atoms: &[u32]) -> Vec<Lit> {
        self.lits
            .iter()
            .copied()
            .filter(|l| !atoms.contains(&l.atom()))
            .collect()
    }
}

impl fmt::Debug for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.lits).finish()
    }
}

/// A consistent-or-not set of literals, sorted by literal code.
///
/// Used both for engine assumption sets (always consistent there) and for
/// cover branches.  Construction sorts and deduplicates; consistency is a
/// query, not an invariant, so covers can be validated rather than
/// silently repaired.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LitSet {
    lits: Vec<Lit>,
}

impl LitSet {
    /// The empty set.
    pub fn empty() -> LitSet {
        LitSet::default()
    }

    /// Build from any literal iterator (sorts and deduplicates).
    pub fn from_lits(lits: impl IntoIterator<Item = Lit>) -> LitSet {
        let mut v: Vec<Lit> = lits.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        LitSet { lits: v }
    }

    /// No atom occurs with both polarities.
    pub fn is_consistent(&self) -> bool {
        self.lits.windows(2).all(|w| w[0].atom() != w[1].atom())
    }

    /// Membership of an exact literal.
    pub fn contains(&self, l: Lit) -> bool {
        self.lits.binary_search(&l).is_ok()
    }

    /// Whether the set mentions this atom with either polarity.
    pub fn contains_atom(&self, atom: u32) -> bool {
        self.lits.iter().any(|l| l.atom() == atom)
    }

    /// Union with another set.
    pub fn union(&self, other: &LitSet) -> LitSet {
        LitSet::from_lits(self.lits.iter().chain(other.lits.iter()).copied())
    }

    /// The atoms occurring positively, ascending.
    pub fn positives(&self) -> Model {
        self.lits
            .iter()
            .filter(|l| l.is_positive())
            .map(|l| l.atom())
            .collect()
    }

    /// Number of literals.
    pub fn len(&self) -> usize {
        self.lits.len()
    }

    /// Whether the set is empty.
    pub fn is_empty(&self) -> bool {
        self.lits.is_empty()
    }

    /// The literals, sorted by literal code.
    pub fn lits(&self) -> &[Lit] {
        &self.lits
    }

    /// Iterate over the literals.
    pub fn iter(&self) -> impl Iterator<Item = Lit> + '_ {
        self.lits.iter().copied()
    }

    /// Render with an external name table.
    pub fn display<'a>(&'a self, symbols: &'a Symbols) -> impl fmt::Display + 'a {
        struct D<'a>(&'a LitSet, &'a Symbols);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{{")?;
                for (i, l) in self.0.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{}", l.display(self.1))?;
                }
                write!(f, "}}")
            }
        }
        D(self, symbols)
    }
}

impl FromIterator<Lit> for LitSet {
    fn from_iter<I: IntoIterator<Item = Lit>>(iter: I) -> LitSet {
        LitSet::from_lits(iter)
    }
}

impl fmt::Debug for LitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.lits).finish()
    }
}

/// A CNF theory: a clause list over atoms `0..n` plus a literal-indexed
/// occurrence table.
///
/// The clause list preserves insertion order (so parsers and generators
/// produce stable theories) and may contain duplicate clauses; consumers
/// that need a canonical duplicate-free view build one explicitly.
#[derive(Clone)]
pub struct Theory {
    n: u32,
    clauses: Vec<Clause>,
    /// `occ[l.code()]` lists the indices of clauses containing literal `l`,
    /// ascending.
    occ: Vec<Vec<u32>>,
}

impl Theory {
    /// Build a theory over atoms `0..n` from normalized clauses.
    ///
    /// Panics if a clause mentions an atom id `>= n`.
    pub fn new(n: u32, clauses: impl IntoIterator<Item = Clause>) -> Theory {
        let clauses: Vec<Clause> = clauses.into_iter().collect();
        let mut occ = vec![Vec::new(); 2 * n as usize];
        for (i, c) in clauses.iter().enumerate() {
            for &l in c.lits() {
                assert!(l.atom() < n, "atom id {} out of range (n = {})", l.atom(), n);
                occ[l.code()].push(i as u32);
            }
        }
        let t = Theory { n, clauses, occ };
        t.debug_validate();
        t
    }

    /// Convenience constructor from raw literal lists; tautologies are
    /// dropped (they constrain nothing).
    pub fn from_clause_lits<I, C>(n: u32, clauses: I) -> Theory
    where
        I: IntoIterator<Item = C>,
        C: IntoIterator<Item = Lit>,
    {
        Theory::new(n, clauses.into_iter().filter_map(Clause::new))
    }

    /// Number of atom ids (the universe is `0..n`; not all need occur).
    pub fn n(&self) -> u32 {
        self.n
    }

    /// The clauses in insertion order.
    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    /// Number of clauses.
    pub fn clause_count(&self) -> usize {
        self.clauses.len()
    }

    /// Total number of literal occurrences (the size of the theory).
    pub fn size(&self) -> usize {
        self.clauses.iter().map(|c| c.width()).sum()
    }

    /// Largest clause width (0 for the empty theory).
    pub fn max_width(&self) -> usize {
        self.clauses.iter().map(|c| c.width()).max().unwrap_or(0)
    }

    /// Whether some clause is empty (no model satisfies the theory).
    pub fn has_empty_clause(&self) -> bool {
        self.clauses.iter().any(|c| c.is_empty())
    }

    /// Indices of clauses containing literal `l`, ascending.
    pub fn occ(&self, l: Lit) -> &[u32] {
        &self.occ[l.code()]
    }

    /// How often the atom occurs with either polarity.
    pub fn atom_occurrences(&self, atom: u32) -> usize {
        self.occ(Lit::pos(atom)).len() + self.occ(Lit::neg(atom)).len()
    }

    /// The atoms occurring in some clause, ascending.
    pub fn occurring_atoms(&self) -> Vec<u32> {
        (0..self.n).filter(|&a| self.atom_occurrences(a) > 0).collect()
    }

    /// Number of occurring atoms.
    pub fn occurring_atom_count(&self) -> usize {
        (0..self.n).filter(|&a| self.atom_occurrences(a) > 0).count()
    }

    /// The reduction of this theory by an assumption set `L`: clauses
    /// intersecting `L` are dropped and duals of `L`-literals are erased
    /// from the remaining clauses.  The result mentions no atom of `L`,
    /// may contain empty clauses (branch refuted), and shares this
    /// theory's atom universe.
    ///
    /// Rejects inconsistent or out-of-range assumption sets.
    pub fn reduce(&self, l: &LitSet) -> Result<Theory, TheoryError> {
        if !l.is_consistent() {
            return Err(TheoryError::InconsistentAssumptions);
        }
        if let Some(bad) = l.iter().find(|lit| lit.atom() >= self.n) {
            return Err(TheoryError::AtomOutOfRange(bad.atom(), self.n));
        }
        // Literal membership table so the pass stays linear in the size
        // of the theory.
        let mut in_l = vec![false; 2 * self.n as usize];
        for lit in l.iter() {
            in_l[lit.code()] = true;
        }
        let mut out = Vec::with_capacity(self.clauses.len());
        'clauses: for c in &self.clauses {
            let mut kept = Vec::with_capacity(c.width());
            for &lit in c.lits() {
                if in_l[lit.code()] {
                    continue 'clauses; // clause satisfied by L
                }
                if !in_l[lit.dual().code()] {
                    kept.push(lit); // literal survives the reduction
                }
            }
            out.push(Clause::from_sorted_unchecked(kept));
        }
        let t = Theory::new(self.n, out);
        t.debug_validate();
        Ok(t)
    }

    /// Structural audit used in debug builds: clause literals sorted over
    /// distinct in-range atoms, and the occurrence table consistent with
    /// the clause list.
    pub fn validate(&self) {
        let mut occ = vec![Vec::new(); 2 * self.n as usize];
        for (i, c) in self.clauses.iter().enumerate() {
            assert!(
                c.lits().windows(2).all(|w| w[0] < w[1] && w[0].atom() != w[1].atom()),
                "clause {i} is not normalized: {c:?}"
            );
            for &l in c.lits() {
                assert!(l.atom() < self.n, "clause {i} mentions out-of-range atom");
                occ[l.code()].push(i as u32);
            }
        }
        assert_eq!(occ, self.occ, "occurrence table out of sync");
    }

    fn debug_validate(&self) {
        if cfg!(debug_assertions) {
            self.validate();
        }
    }
}

impl PartialEq for Theory {
    fn eq(&self, other: &Theory) -> bool {
        // The occurrence table is derived data.
        self.n == other.n && self.clauses == other.clauses
    }
}

impl Eq for Theory {}

impl fmt::Debug for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Theory(n={}, {:?})", self.n, self.clauses)
    }
}

/// The simplification `sigma`: remove duplicate clauses and every
/// 3-clause that contains all literals of some 2-clause.
///
/// Clauses come out in a canonical sorted order, so equal theories
/// simplify to equal theories regardless of input clause order.  The
/// model set is preserved exactly: a subsumed 3-clause is implied by the
/// subsuming 2-clause, and duplicates are logically idempotent.  Atoms
/// can only disappear, never appear.
pub fn sigma_simplify(t: &Theory) -> Theory {
    let mut clauses = t.clauses().to_vec();
    clauses.sort_unstable_by(|a, b| a.lits().cmp(b.lits()));
    clauses.dedup();
    let twos: HashSet<(Lit, Lit)> = clauses
        .iter()
        .filter(|c| c.width() == 2)
        .map(|c| (c.lits()[0], c.lits()[1]))
        .collect();
    clauses.retain(|c| {
        if c.width() != 3 {
            return true;
        }
        let l = c.lits();
        !(twos.contains(&(l[0], l[1]))
            || twos.contains(&(l[0], l[2]))
            || twos.contains(&(l[1], l[2])))
    });
    let out = Theory::new(t.n(), clauses);
    out.debug_validate();
    out
}

/// Whether the atom set `m` (sorted ascending) satisfies every clause:
/// a clause is satisfied if it contains a positive literal over an atom
/// of `m` or a negative literal over an atom outside `m`.
pub fn is_model(t: &Theory, m: &[u32]) -> bool {
    debug_assert!(m.windows(2).all(|w| w[0] < w[1]), "model not sorted/deduped");
    let mut tru = vec![false; t.n() as usize];
    for &a in m {
        assert!(a < t.n(), "model atom {} out of range (n = {})", a, t.n());
        tru[a as usize] = true;
    }
    t.clauses()
        .iter()
        .all(|c| c.lits().iter().any(|l| tru[l.atom() as usize] == l.is_positive()))
}

/// External atom names, indexed by atom id.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Symbols {
    names: Vec<String>,
}

impl Symbols {
    /// Build from a name list; names must be distinct.
    pub fn new(names: Vec<String>) -> Symbols {
        let mut seen = HashSet::new();
        for n in &names {
            assert!(seen.insert(n.clone()), "duplicate atom name {n:?}");
        }
        Symbols { names }
    }

    /// `prefix1 .. prefixN`, the conventional DIMACS naming.
    pub fn numbered(prefix: &str, n: u32) -> Symbols {
        Symbols {
            names: (1..=n).map(|i| format!("{prefix}{i}")).collect(),
        }
    }

    /// Name of an atom id.
    pub fn name(&self, atom: u32) -> &str {
        &self.names[atom as usize]
    }

    /// Atom id of a name, if known.
    pub fn lookup(&self, name: &str) -> Option<u32> {
        self.names.iter().position(|n| n == name).map(|i| i as u32)
    }

    /// Number of named atoms.
    pub fn len(&self) -> u32 {
        self.names.len() as u32
    }

    /// Whether the table is empty.
    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// All names in id order.
    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Render a model as its sorted name sequence.
    pub fn model_line(&self, m: &[u32]) -> String {
        let mut names: Vec<&str> = m.iter().map(|&a| self.name(a)).collect();
        names.sort_unstable();
        names.join(" ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// DIMACS-style literal shorthand for tests: `l(3)` is the positive
    /// literal over atom 2, `l(-3)` its dual.
    pub(crate) fn l(i: i32) -> Lit {
        assert!(i != 0);
        Lit::new((i.unsigned_abs() - 1) as u32, i > 0)
    }

    fn theory(n: u32, clauses: &[&[i32]]) -> Theory {
        Theory::from_clause_lits(n, clauses.iter().map(|c| c.iter().map(|&i| l(i))))
    }

    fn lset(lits: &[i32]) -> LitSet {
        LitSet::from_lits(lits.iter().map(|&i| l(i)))
    }

    #[test]
    fn literal_packing() {
        let a = Lit::pos(3);
        assert!(a.is_positive());
        assert_eq!(a.atom(), 3);
        assert_eq!(a.dual(), Lit::neg(3));
        assert_eq!(a.dual().dual(), a);
        // Negative sorts immediately before positive of the same atom.
        assert!(Lit::neg(3) < Lit::pos(3));
        assert!(Lit::pos(2) < Lit::neg(3));
    }

    #[test]
    fn clause_normalization() {
        let c = Clause::new([l(2), l(-1), l(2)]).unwrap();
        assert_eq!(c.lits(), &[l(-1), l(2)]);
        assert_eq!(c.width(), 2);
        // A dual pair makes the clause a tautology.
        assert_eq!(Clause::new([l(1), l(-1), l(2)]), None);
        assert!(Clause::new([]).unwrap().is_empty());
    }

    #[test]
    fn litset_basics() {
        let s = lset(&[3, -1, 3]);
        assert_eq!(s.len(), 2);
        assert!(s.is_consistent());
        assert!(s.contains(l(3)) && s.contains(l(-1)));
        assert_eq!(s.positives(), vec![2]);
        assert!(!lset(&[1, -1]).is_consistent());
        let u = s.union(&lset(&[2]));
        assert_eq!(u.positives(), vec![1, 2]);
    }

    #[test]
    fn occurrence_table() {
        let t = theory(3, &[&[1, 2], &[-1, 3], &[2, 3]]);
        assert_eq!(t.occ(l(2)), &[0, 2]);
        assert_eq!(t.occ(l(-1)), &[1]);
        assert_eq!(t.occ(l(-2)), &[] as &[u32]);
        assert_eq!(t.occurring_atoms(), vec![0, 1, 2]);
        assert_eq!(t.size(), 6);
        assert_eq!(t.max_width(), 2);
    }

    #[test]
    fn reduce_drops_satisfied_and_erases_falsified() {
        // T = {a∨b, ¬a∨c, b∨c}, L = {a}: first clause satisfied, ¬a erased.
        let t = theory(3, &[&[1, 2], &[-1, 3], &[2, 3]]);
        let r = t.reduce(&lset(&[1])).unwrap();
        assert_eq!(r, theory(3, &[&[3], &[2, 3]]));
        // Reduction never mentions an atom of L.
        assert!(!r.occurring_atoms().contains(&0));
    }

    #[test]
    fn reduce_can_produce_the_empty_clause() {
        // T = {a∨b}, L = {¬a, ¬b} leaves the empty clause.
        let t = theory(2, &[&[1, 2]]);
        let r = t.reduce(&lset(&[-1, -2])).unwrap();
        assert!(r.has_empty_clause());
        assert_eq!(r.clause_count(), 1);
    }

    #[test]
    fn reduce_rejects_bad_assumption_sets() {
        let t = theory(2, &[&[1, 2]]);
        assert_eq!(
            t.reduce(&lset(&[1, -1])),
            Err(TheoryError::InconsistentAssumptions)
        );
        assert_eq!(
            t.reduce(&LitSet::from_lits([Lit::pos(7)])),
            Err(TheoryError::AtomOutOfRange(7, 2))
        );
    }

    #[test]
    fn reduce_by_empty_set_is_identity() {
        let t = theory(3, &[&[1, 2, 3], &[-2, 3]]);
        assert_eq!(t.reduce(&LitSet::empty()).unwrap(), t);
    }

    #[test]
    fn sigma_removes_duplicates_and_subsumed_3clauses() {
        // b∨c subsumes a∨b∨c; the duplicate 2-clause collapses.
        let t = theory(3, &[&[1, 2, 3], &[2, 3], &[2, 3], &[-1, 2]]);
        let s = sigma_simplify(&t);
        assert_eq!(s.clause_count(), 2);
        assert!(s.clauses().contains(&Clause::new([l(2), l(3)]).unwrap()));
        assert!(s.clauses().contains(&Clause::new([l(-1), l(2)]).unwrap()));
        // Idempotent and canonical.
        assert_eq!(sigma_simplify(&s), s);
    }

    #[test]
    fn sigma_is_order_insensitive() {
        let t1 = theory(3, &[&[1, 2, 3], &[2, 3]]);
        let t2 = theory(3, &[&[2, 3], &[1, 2, 3]]);
        assert_eq!(sigma_simplify(&t1), sigma_simplify(&t2));
    }

    #[test]
    fn sigma_preserves_models_exhaustively() {
        // Exhaustive check on a small mixed theory.
        let t = theory(4, &[&[1, 2, 3], &[2, 3], &[-1, -2, 4], &[-3, 4], &[1, -4, 3]]);
        let s = sigma_simplify(&t);
        for mask in 0u32..16 {
            let m: Vec<u32> = (0..4).filter(|&a| mask >> a & 1 == 1).collect();
            assert_eq!(is_model(&t, &m), is_model(&s, &m), "mask {mask:#b}");
        }
    }

    #[test]
    fn model_checking() {
        let t = theory(3, &[&[1, 2], &[-1, 3]]);
        assert!(is_model(&t, &[0, 2]));
        assert!(is_model(&t, &[1]));
        assert!(!is_model(&t, &[0])); // ¬a∨c unsatisfied
        assert!(!is_model(&t, &[]));
        // The empty clause admits no model at all.
        let f = theory(1, &[&[]]);
        assert!(!is_model(&f, &[]));
        assert!(!is_model(&f, &[0]));
    }

    #[test]
    fn symbols_roundtrip() {
        let s = Symbols::numbered("a", 3);
        assert_eq!(s.name(0), "a1");
        assert_eq!(s.lookup("a3"), Some(2));
        assert_eq!(s.lookup("b1"), None);
        assert_eq!(s.model_line(&[2, 0]), "a1 a3");
        assert_eq!(format!("{}", l(-2).display(&s)), "-a2");
    }
}
