//! Normal and disjunctive logic programs under the stable-model and
//! answer-set semantics.
//!
//! A rule `h1 | ... | hk :- p1, ..., pr, not n1, ..., not ns` has a
//! non-empty disjunctive head, a positive body, and a negative body.  A
//! program is *normal* when every head is a single atom.  Three classic
//! constructions connect programs to CNF theories:
//!
//! * `translate` maps each rule to the clause
//!   `h1 ∨ ... ∨ hk ∨ ¬p1 ∨ ... ∨ ¬pr ∨ n1 ∨ ... ∨ ns`; models of the
//!   translation are exactly the (classical) models of the program.
//! * `reduct` is the Gelfond–Lifschitz transformation: relative to a
//!   candidate set `M`, rules whose negative body intersects `M` are
//!   deleted and the negative bodies of the survivors are erased.
//! * `least_model` closes a negation-free normal program under its rules
//!   in time linear in the program size, via the standard
//!   counter-per-rule propagation.
//!
//! `M` is a stable model of a normal program iff it is exactly the least
//! model of its reduct; `M` is an answer set of a disjunctive program iff
//! it is a minimal model of the translated reduct.  For normal programs
//! the two notions coincide, which the test suite checks exhaustively on
//! small programs.

use std::fmt;

use thiserror::Error;

use crate::checkers::{test_min_2cnf, test_min_sat};
use crate::theory::{is_model, Clause, Lit, Model, Theory};

/// Errors from program construction.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ProgramError {
    /// Rules must have at least one head atom.
    #[error("rule {0} has an empty head")]
    EmptyHead(usize),
    /// A rule mentions an atom id outside the program.
    #[error("atom id {0} out of range for a program over {1} atoms")]
    AtomOutOfRange(u32, u32),
}

/// One rule: disjunctive head, positive body, negative body.
///
/// Each part is a sorted duplicate-free atom list.  An atom may appear in
/// several parts of one rule (`a :- not a` is the classic example), but
/// not twice within one part.
#[derive(Clone, PartialEq, Eq)]
pub struct Rule {
    head: Vec<u32>,
    pos: Vec<u32>,
    neg: Vec<u32>,
}

impl Rule {
    /// Build a rule, sorting and deduplicating each part.
    pub fn new(
        head: impl IntoIterator<Item = u32>,
        pos: impl IntoIterator<Item = u32>,
        neg: impl IntoIterator<Item = u32>,
    ) -> Rule {
        let norm = |it: &mut Vec<u32>| {
            it.sort_unstable();
            it.dedup();
        };
        let mut head: Vec<u32> = head.into_iter().collect();
        let mut pos: Vec<u32> = pos.into_iter().collect();
        let mut neg: Vec<u32> = neg.into_iter().collect();
        norm(&mut head);
        norm(&mut pos);
        norm(&mut neg);
        Rule { head, pos, neg }
    }

    /// A fact: a rule with an empty body.
    pub fn fact(atom: u32) -> Rule {
        Rule::new([atom], [], [])
    }

    /// Head atoms, ascending.
    pub fn head(&self) -> &[u32] {
        &self.head
    }

    /// Positive body atoms, ascending.
    pub fn pos(&self) -> &[u32] {
        &self.pos
    }

    /// Negative body atoms, ascending.
    pub fn neg(&self) -> &[u32] {
        &self.neg
    }
}

impl fmt::Debug for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} :- {:?}, not {:?}", self.head, self.pos, self.neg)
    }
}

/// Whether a program is normal (all heads singleton) or properly
/// disjunctive.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProgramKind {
    Normal,
    Disjunctive,
}

/// A logic program over atoms `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Program {
    n: u32,
    rules: Vec<Rule>,
}

impl Program {
    /// Build a program, validating heads and atom ranges.
    pub fn new(n: u32, rules: impl IntoIterator<Item = Rule>) -> Result<Program, ProgramError> {
        let rules: Vec<Rule> = rules.into_iter().collect();
        for (i, r) in rules.iter().enumerate() {
            if r.head.is_empty() {
                return Err(ProgramError::EmptyHead(i));
            }
            for &a in r.head.iter().chain(&r.pos).chain(&r.neg) {
                if a >= n {
                    return Err(ProgramError::AtomOutOfRange(a, n));
                }
            }
        }
        Ok(Program { n, rules })
    }

    /// Number of atom ids.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// The rules in order.
    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    /// Total number of atom occurrences (the size of the program).
    pub fn size(&self) -> usize {
        self.rules
            .iter()
            .map(|r| r.head.len() + r.pos.len() + r.neg.len())
            .sum()
    }

    /// Normal iff every head is a single atom.
    pub fn kind(&self) -> ProgramKind {
        if self.rules.iter().all(|r| r.head.len() == 1) {
            ProgramKind::Normal
        } else {
            ProgramKind::Disjunctive
        }
    }

    /// Whether any rule has a non-empty negative body.
    pub fn has_negation(&self) -> bool {
        self.rules.iter().any(|r| !r.neg.is_empty())
    }

    /// Atoms mentioned by some rule, ascending.
    pub fn occurring_atoms(&self) -> Vec<u32> {
        let mut seen = vec![false; self.n as usize];
        for r in &self.rules {
            for &a in r.head.iter().chain(&r.pos).chain(&r.neg) {
                seen[a as usize] = true;
            }
        }
        (0..self.n).filter(|&a| seen[a as usize]).collect()
    }
}

impl fmt::Debug for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Program(n={}, {:?})", self.n, self.rules)
    }
}

/// The clause translation of a program: one clause per rule, with head
/// atoms positive, positive-body atoms negated, and negative-body atoms
/// positive.  Rules whose clause is a tautology (e.g. `a :- a`) are
/// dropped, since they constrain nothing classically.
pub fn translate(p: &Program) -> Theory {
    let clauses = p.rules.iter().filter_map(|r| {
        Clause::new(
            r.head
                .iter()
                .map(|&a| Lit::pos(a))
                .chain(r.pos.iter().map(|&a| Lit::neg(a)))
                .chain(r.neg.iter().map(|&a| Lit::pos(a))),
        )
    });
    Theory::new(p.n, clauses.collect::<Vec<_>>())
}

/// The Gelfond–Lifschitz reduct of `p` relative to the atom set `m`
/// (sorted ascending): delete every rule whose negative body meets `m`,
/// and erase the negative bodies of the remaining rules.
pub fn reduct(p: &Program, m: &[u32]) -> Program {
    debug_assert!(m.windows(2).all(|w| w[0] < w[1]), "model not sorted/deduped");
    let rules = p
        .rules
        .iter()
        .filter(|r| !r.neg.iter().any(|a| m.binary_search(a).is_ok()))
        .map(|r| Rule {
            head: r.head.clone(),
            pos: r.pos.clone(),
            neg: Vec::new(),
        })
        .collect::<Vec<_>>();
    Program { n: p.n, rules }
}

/// The least model of a negation-free normal program, by counter-based
/// forward propagation: each rule counts its underived positive-body
/// atoms, and a rule fires when its counter hits zero.  Every counter
/// decrement consumes one body occurrence, so the total work is linear in
/// the size of the program.
///
/// Panics if the program is disjunctive or uses negation; callers reach
/// this through the reduct of a normal program, which always qualifies.
pub fn least_model(p: &Program) -> Model {
    least_model_counted(p).0
}

/// `least_model` instrumented with its propagation-step count, used by
/// the linear-time audit in the tests.
pub(crate) fn least_model_counted(p: &Program) -> (Model, usize) {
    assert!(
        p.kind() == ProgramKind::Normal && !p.has_negation(),
        "least_model requires a negation-free normal program"
    );
    let n = p.n as usize;
    let mut derived = vec![false; n];
    // watch[a] = rules whose positive body contains atom a.
    let mut watch: Vec<Vec<u32>> = vec![Vec::new(); n];
    let mut count: Vec<u32> = Vec::with_capacity(p.rules.len());
    let mut queue: Vec<u32> = Vec::new();
    let mut ops = 0usize;
    for (i, r) in p.rules.iter().enumerate() {
        count.push(r.pos.len() as u32);
        for &a in &r.pos {
            watch[a as usize].push(i as u32);
            ops += 1;
        }
        if r.pos.is_empty() && !derived[r.head[0] as usize] {
            derived[r.head[0] as usize] = true;
            queue.push(r.head[0]);
        }
    }
    while let Some(a) = queue.pop() {
        for &ri in &watch[a as usize] {
            ops += 1;
            count[ri as usize] -= 1;
            if count[ri as usize] == 0 {
                let h = p.rules[ri as usize].head[0];
                if !derived[h as usize] {
                    derived[h as usize] = true;
                    queue.push(h);
                }
            }
        }
    }
    let m = (0..p.n).filter(|&a| derived[a as usize]).collect();
    (m, ops)
}

/// Stability test for normal programs: `m` is a stable model iff it
/// equals the least model of the reduct of `p` relative to `m`.
pub fn test_stb(p: &Program, m: &[u32]) -> bool {
    assert!(p.kind() == ProgramKind::Normal, "test_stb requires a normal program");
    least_model(&reduct(p, m)) == m
}

/// Answer-set test for arbitrary programs: `m` is an answer set iff it is
/// a minimal model of the translated reduct.
///
/// The model check runs first as a cheap short-circuit (it is equivalent
/// to `m` satisfying the reduct).  A candidate containing an atom that
/// the translated reduct never mentions cannot be minimal — dropping the
/// atom keeps a model — so such candidates are rejected before the
/// minimality test, whose dispatch mirrors the solver: the SCC-based
/// 2-CNF test when the translation is 2-CNF, the SAT-based test
/// otherwise.
pub fn test_anset(p: &Program, m: &[u32]) -> bool {
    let t = translate(&reduct(p, m));
    if !is_model(&t, m) {
        return false;
    }
    let occurring = t.occurring_atoms();
    if m.iter().any(|a| occurring.binary_search(a).is_err()) {
        return false;
    }
    if t.max_width() <= 2 {
        test_min_2cnf(&t, m)
    } else {
        test_min_sat(&t, m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rule(head: &[u32], pos: &[u32], neg: &[u32]) -> Rule {
        Rule::new(head.iter().copied(), pos.iter().copied(), neg.iter().copied())
    }

    fn program(n: u32, rules: &[(&[u32], &[u32], &[u32])]) -> Program {
        Program::new(n, rules.iter().map(|&(h, p, ng)| rule(h, p, ng))).unwrap()
    }

    #[test]
    fn construction_and_kind() {
        let p = program(3, &[(&[0], &[], &[]), (&[1], &[0], &[2])]);
        assert_eq!(p.kind(), ProgramKind::Normal);
        let d = program(3, &[(&[0, 1], &[], &[2])]);
        assert_eq!(d.kind(), ProgramKind::Disjunctive);
        assert_eq!(
            Program::new(2, [Rule::new([], [0], [])]),
            Err(ProgramError::EmptyHead(0))
        );
        assert_eq!(
            Program::new(1, [Rule::fact(4)]),
            Err(ProgramError::AtomOutOfRange(4, 1))
        );
    }

    #[test]
    fn translate_polarities() {
        // a|b :- c, not d   =>   ¬c ∨ d ∨ a ∨ b
        let p = program(4, &[(&[0, 1], &[2], &[3])]);
        let t = translate(&p);
        assert_eq!(t.clause_count(), 1);
        assert_eq!(
            t.clauses()[0],
            Clause::new([Lit::pos(0), Lit::pos(1), Lit::neg(2), Lit::pos(3)]).unwrap()
        );
        // a :- not a  =>  the unit clause a (head and negative body merge).
        let q = program(1, &[(&[0], &[], &[0])]);
        let tq = translate(&q);
        assert_eq!(tq.clauses()[0], Clause::new([Lit::pos(0)]).unwrap());
        // a :- a is a classical tautology and vanishes.
        let r = program(1, &[(&[0], &[0], &[])]);
        assert_eq!(translate(&r).clause_count(), 0);
    }

    #[test]
    fn reduct_deletes_and_erases() {
        // {a :- not b;  b :- not a;  c :- a}
        let p = program(3, &[(&[0], &[], &[1]), (&[1], &[], &[0]), (&[2], &[0], &[])]);
        let r = reduct(&p, &[0]);
        // The rule guarded by "not a" dies; "not b" is erased.
        assert_eq!(r.rules().len(), 2);
        assert_eq!(r.rules()[0], rule(&[0], &[], &[]));
        assert_eq!(r.rules()[1], rule(&[2], &[0], &[]));
        assert!(!r.has_negation());
    }

    #[test]
    fn least_model_examples() {
        // {a :- ; b :- a} has least model {a, b}.
        let p = program(2, &[(&[0], &[], &[]), (&[1], &[0], &[])]);
        assert_eq!(least_model(&p), vec![0, 1]);
        // {a :- b; b :- a} derives nothing.
        let q = program(2, &[(&[0], &[1], &[]), (&[1], &[0], &[])]);
        assert_eq!(least_model(&q), Vec::<u32>::new());
    }

    #[test]
    fn least_model_is_linear_in_program_size() {
        // A derivation chain: every body occurrence is consumed at most
        // once, so the step count is bounded by the program size.
        let n = 50u32;
        let mut rules = vec![Rule::fact(0)];
        for a in 1..n {
            rules.push(rule(&[a], &[a - 1], &[]));
        }
        let p = Program::new(n, rules).unwrap();
        let (m, ops) = least_model_counted(&p);
        assert_eq!(m.len(), n as usize);
        assert!(ops <= 2 * p.size(), "ops {} vs size {}", ops, p.size());
    }

    #[test]
    fn stability_basics() {
        // {a :- not b; b :- not a}: two stable models {a} and {b}.
        let p = program(2, &[(&[0], &[], &[1]), (&[1], &[], &[0])]);
        assert!(test_stb(&p, &[0]));
        assert!(test_stb(&p, &[1]));
        assert!(!test_stb(&p, &[]));
        assert!(!test_stb(&p, &[0, 1]));
        // {a :- not a} has no stable model.
        let q = program(1, &[(&[0], &[], &[0])]);
        assert!(!test_stb(&q, &[]));
        assert!(!test_stb(&q, &[0]));
    }

    #[test]
    fn answer_sets_of_a_disjunctive_program() {
        // {a | b :- } has answer sets {a} and {b}, but not {a, b}.
        let p = program(2, &[(&[0, 1], &[], &[])]);
        assert!(test_anset(&p, &[0]));
        assert!(test_anset(&p, &[1]));
        assert!(!test_anset(&p, &[0, 1]));
        assert!(!test_anset(&p, &[]));
    }

    #[test]
    fn answer_set_rejects_unsupported_atoms() {
        // {a :- not b}: the answer set is {a}; {a, c} satisfies the
        // translation trivially but c is unsupported.
        let p = program(3, &[(&[0], &[], &[1])]);
        assert!(test_anset(&p, &[0]));
        assert!(!test_anset(&p, &[0, 2]));
    }

    #[test]
    fn stable_and_answer_coincide_on_normal_programs() {
        // Exhaustive over all candidates of a small program with
        // recursion through negation.
        let p = program(
            3,
            &[
                (&[0], &[], &[1]),
                (&[1], &[], &[0]),
                (&[2], &[0], &[]),
                (&[2], &[1], &[2]),
            ],
        );
        for mask in 0u32..8 {
            let m: Vec<u32> = (0..3).filter(|&a| mask >> a & 1 == 1).collect();
            assert_eq!(test_stb(&p, &m), test_anset(&p, &m), "candidate {m:?}");
        }
    }
}
