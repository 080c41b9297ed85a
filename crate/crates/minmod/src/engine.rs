//! The branching enumerator and the user-facing drivers.
//!
//! [`min_plus`] walks a branching tree over a CNF theory.  At each node
//! the root theory is reduced by the literals assumed so far and, in the
//! 3-CNF configuration, simplified; the resulting theory is handed to a
//! width-specific cover function.  A node whose theory contains the
//! empty clause is a dead leaf.  A node whose theory has no clauses
//! left emits the positive part of its literal set as a candidate.
//! Every minimal model of the root theory is emitted by some leaf, so
//! filtering the candidates through a semantic test yields complete
//! enumerations:
//!
//! * [`min_mod`] keeps the candidates that are minimal models,
//! * [`stb_mod`] keeps the stable models of a normal program, and
//! * [`ans_set`] keeps the answer sets of a disjunctive program.
//!
//! The program drivers run the same search on the clause translation of
//! the program: stable models and answer sets are always minimal models
//! of the translation, so none can be missed.
//!
//! The tree itself is small: at most `3^(n/3)` leaves over 2-CNF,
//! `1.6702^n` over simplified 3-CNF, and `alpha_t^n < 2^n` for width
//! `t >= 4`.  [`BranchStats`] reports the observed tree shape so tests
//! and benchmarks can check those bounds.

use std::collections::HashSet;

use crate::checkers::{test_min_2cnf, test_min_sat};
use crate::covers::{check_cover_shape, cover2, cover3, cover_t, Cover};
use crate::programs::{test_anset, test_stb, translate, Program, ProgramKind};
use crate::theory::{sigma_simplify, LitSet, Model, Theory};

/// Which cover function drives the branching.  Fixed once per run from
/// the width of the (possibly pre-simplified) root theory; reduction
/// never increases clause width, so the choice stays valid below.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum CoverKind {
    TwoCnf,
    ThreeCnf,
    General,
}

impl CoverKind {
    fn for_theory(t: &Theory) -> CoverKind {
        match t.max_width() {
            0..=2 => CoverKind::TwoCnf,
            3 => CoverKind::ThreeCnf,
            _ => CoverKind::General,
        }
    }

    /// Per-node simplification.  Only the 3-CNF analysis needs its input
    /// sigma-simplified; the other two covers take the reduction as is.
    fn simplify(self, t: Theory) -> Theory {
        match self {
            CoverKind::ThreeCnf => sigma_simplify(&t),
            CoverKind::TwoCnf | CoverKind::General => t,
        }
    }

    fn cover(self, s: &Theory) -> Cover {
        match self {
            CoverKind::TwoCnf => cover2(s),
            CoverKind::ThreeCnf => cover3(s),
            CoverKind::General => cover_t(s),
        }
    }
}

/// Counters describing one branching run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BranchStats {
    /// Leaves of the branching tree, dead ends included.
    pub leaves: u64,
    /// All tree nodes, the root included.
    pub nodes: u64,
    /// Deepest node visited; the root has depth 0.
    pub max_depth: u32,
    /// Candidate emissions before duplicate removal.
    pub candidates_emitted: u64,
    /// Distinct candidates handed to the semantic filter.
    pub candidates_after_dedup: u64,
}

/// One branch taken during the search, for trace-style reporting.
#[derive(Clone, Debug)]
pub struct TraceLine {
    /// Depth of the node whose cover produced this branch.
    pub depth: u32,
    /// Identifier of the cover case that fired, e.g. `"2cnf/3"`.
    pub case: &'static str,
    /// The literals assumed along the branch.
    pub branch: LitSet,
}

/// Result of an enumeration run: models plus search statistics.
#[derive(Clone, Debug)]
pub struct Enumeration {
    /// The enumerated models, sorted lexicographically.
    pub models: Vec<Model>,
    /// Shape of the branching tree that produced them.
    pub stats: BranchStats,
    /// Branch log; empty unless tracing was requested.
    pub trace: Vec<TraceLine>,
}

/// Knobs for the enumeration drivers.
#[derive(Clone, Copy, Debug, Default)]
pub struct EngineOptions {
    /// Stop as soon as one model passes the semantic filter.  The
    /// returned statistics then describe the pruned tree.
    pub first_only: bool,
    /// Record a [`TraceLine`] for every branch taken.
    pub trace: bool,
}

struct Search<'a, F> {
    root: &'a Theory,
    kind: CoverKind,
    opts: EngineOptions,
    keep: F,
    seen: HashSet<Model>,
    models: Vec<Model>,
    stats: BranchStats,
    trace: Vec<TraceLine>,
    stop: bool,
}

impl<F: FnMut(&Model) -> bool> Search<'_, F> {
    fn node(&mut self, l: &LitSet, depth: u32) {
        // Every branch eliminates at least one atom, so the depth can
        // never exceed the atom count.
        assert!(depth <= self.root.n(), "branching depth exceeded the atom count");
        self.stats.nodes += 1;
        self.stats.max_depth = self.stats.max_depth.max(depth);
        let reduced = self.root.reduce(l).expect("branch literal sets stay consistent");
        let s = self.kind.simplify(reduced);
        if s.has_empty_clause() {
            // Dead leaf: no model of the root theory extends `l`.
            self.stats.leaves += 1;
            return;
        }
        if s.clause_count() == 0 {
            self.stats.leaves += 1;
            self.stats.candidates_emitted += 1;
            let m: Model = l.positives();
            if self.seen.insert(m.clone()) {
                self.stats.candidates_after_dedup += 1;
                if (self.keep)(&m) {
                    self.models.push(m);
                    if self.opts.first_only {
                        self.stop = true;
                    }
                }
            }
            return;
        }
        let cover = self.kind.cover(&s);
        if cfg!(debug_assertions) {
            check_cover_shape(&s, &cover);
        }
        for a in &cover.branches {
            if self.stop {
                return;
            }
            if self.opts.trace {
                self.trace.push(TraceLine { depth, case: cover.case.0, branch: a.clone() });
            }
            self.node(&l.union(a), depth + 1);
        }
    }
}

fn run(t: &Theory, keep: impl FnMut(&Model) -> bool, opts: &EngineOptions) -> Enumeration {
    let mut search = Search {
        root: t,
        kind: CoverKind::for_theory(t),
        opts: *opts,
        keep,
        seen: HashSet::new(),
        models: Vec::new(),
        stats: BranchStats::default(),
        trace: Vec::new(),
        stop: false,
    };
    search.node(&LitSet::empty(), 0);
    let mut models = search.models;
    models.sort();
    Enumeration { models, stats: search.stats, trace: search.trace }
}

/// Run the branching procedure on `t` and return every candidate it
/// emits, without any semantic filtering.  The result is a superset of
/// the minimal models of `t` (duplicates already removed).
pub fn min_plus(t: &Theory, opts: &EngineOptions) -> Enumeration {
    run(t, |_| true, opts)
}

/// Enumerate the minimal models of `t`.
///
/// Theories of width at most 3 are sigma-simplified once up front; the
/// simplification preserves the model set, so the filter may test
/// against the simplified theory.  Candidates are generated by
/// [`min_plus`] and kept when no proper subset is a model.
pub fn min_mod(t: &Theory, opts: &EngineOptions) -> Enumeration {
    let tp = if t.max_width() <= 3 { sigma_simplify(t) } else { t.clone() };
    if tp.max_width() <= 2 {
        run(&tp, |m| test_min_2cnf(&tp, m), opts)
    } else {
        run(&tp, |m| test_min_sat(&tp, m), opts)
    }
}

/// Enumerate the stable models of a normal program.
///
/// The search runs on the clause translation of `p`; every stable model
/// is a minimal model of the translation, so the candidate family is
/// guaranteed to contain all of them.
///
/// # Panics
///
/// Panics if `p` has a disjunctive head; use [`ans_set`] instead.
pub fn stb_mod(p: &Program, opts: &EngineOptions) -> Enumeration {
    assert!(
        p.kind() == ProgramKind::Normal,
        "stb_mod expects a normal program; use ans_set for disjunctive heads"
    );
    enumerate_program(p, |p, m| test_stb(p, m), opts)
}

/// Enumerate the answer sets of a (possibly disjunctive) program.
///
/// For normal programs this coincides with [`stb_mod`].
pub fn ans_set(p: &Program, opts: &EngineOptions) -> Enumeration {
    enumerate_program(p, |p, m| test_anset(p, m), opts)
}

fn enumerate_program(
    p: &Program,
    mut keep: impl FnMut(&Program, &[u32]) -> bool,
    opts: &EngineOptions,
) -> Enumeration {
    let t = translate(p);
    let tp = if t.max_width() <= 3 { sigma_simplify(&t) } else { t };
    run(&tp, |m| keep(p, m), opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checkers::{brute_minimal_models, brute_stable_models};
    use crate::programs::Rule;
    use crate::theory::Lit;

    fn l(i: i32) -> Lit {
        assert!(i != 0);
        Lit::new((i.unsigned_abs() - 1) as u32, i > 0)
    }

    fn theory(n: u32, clauses: &[&[i32]]) -> Theory {
        Theory::from_clause_lits(n, clauses.iter().map(|c| c.iter().map(|&i| l(i))))
    }

    fn models(e: &Enumeration) -> Vec<Vec<u32>> {
        e.models.clone()
    }

    /// Three disjoint positive triangles over atoms 0..9.
    fn three_triangles() -> Theory {
        let mut clauses: Vec<Vec<i32>> = Vec::new();
        for b in 0..3 {
            let (x, y, z) = (3 * b + 1, 3 * b + 2, 3 * b + 3);
            clauses.push(vec![x, y]);
            clauses.push(vec![x, z]);
            clauses.push(vec![y, z]);
        }
        let refs: Vec<&[i32]> = clauses.iter().map(|c| c.as_slice()).collect();
        theory(9, &refs)
    }

    #[test]
    fn empty_theory_has_the_empty_model() {
        let t = theory(3, &[]);
        let e = min_mod(&t, &EngineOptions::default());
        assert_eq!(models(&e), vec![Vec::<u32>::new()]);
        assert_eq!(e.stats.leaves, 1);
        assert_eq!(e.stats.nodes, 1);
        assert_eq!(e.stats.max_depth, 0);
    }

    #[test]
    fn empty_clause_means_no_models() {
        let t = theory(2, &[&[]]);
        let e = min_mod(&t, &EngineOptions::default());
        assert!(e.models.is_empty());
        assert_eq!(e.stats.leaves, 1);
        assert_eq!(e.stats.candidates_emitted, 0);
    }

    #[test]
    fn single_positive_clause_splits() {
        let t = theory(2, &[&[1, 2]]);
        let e = min_mod(&t, &EngineOptions::default());
        assert_eq!(models(&e), vec![vec![0], vec![1]]);
        assert_eq!(e.stats.leaves, 2);
    }

    #[test]
    fn triangles_hit_the_two_cnf_leaf_bound_exactly() {
        let t = three_triangles();
        let e = min_mod(&t, &EngineOptions::default());
        assert_eq!(e.models.len(), 27);
        assert_eq!(e.stats.leaves, 27);
        // All 27 candidates are distinct and all survive the filter.
        assert_eq!(e.stats.candidates_emitted, 27);
        assert_eq!(e.stats.candidates_after_dedup, 27);
        for m in &e.models {
            assert_eq!(m.len(), 6);
        }
    }

    #[test]
    fn width_four_clause_uses_the_general_cover() {
        let t = theory(4, &[&[1, 2, 3, 4]]);
        let e = min_mod(&t, &EngineOptions::default());
        assert_eq!(models(&e), vec![vec![0], vec![1], vec![2], vec![3]]);
    }

    #[test]
    fn min_plus_candidates_contain_every_minimal_model() {
        let t = theory(5, &[&[1, 2, 3], &[-1, 4], &[2, 5], &[3, 4, 5]]);
        let cands = min_plus(&t, &EngineOptions::default());
        let minimal = brute_minimal_models(&t, None).unwrap();
        for m in &minimal {
            assert!(cands.models.contains(m), "candidate family lost {m:?}");
        }
        let filtered = min_mod(&t, &EngineOptions::default());
        assert_eq!(filtered.models, minimal);
    }

    #[test]
    fn mixed_width_theories_match_the_oracle() {
        // A deterministic xorshift sweep over 2-CNF and 3-CNF shapes.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for round in 0..120 {
            let n = 3 + (next() % 6) as u32;
            let m = 2 + (next() % (2 * n as u64)) as usize;
            let width_cap = if round % 2 == 0 { 2 } else { 3 };
            let mut clauses: Vec<Vec<Lit>> = Vec::new();
            for _ in 0..m {
                let w = 1 + (next() % width_cap) as usize;
                let mut atoms: Vec<u32> = (0..n).collect();
                for i in (1..atoms.len()).rev() {
                    atoms.swap(i, (next() % (i as u64 + 1)) as usize);
                }
                let lits: Vec<Lit> =
                    atoms[..w].iter().map(|&a| Lit::new(a, next() % 2 == 0)).collect();
                clauses.push(lits);
            }
            let t = Theory::from_clause_lits(n, clauses);
            let got = min_mod(&t, &EngineOptions::default());
            let want = brute_minimal_models(&t, None).unwrap();
            assert_eq!(got.models, want, "round {round}, theory {t:?}");
        }
    }

    #[test]
    fn first_only_stops_at_one_model() {
        let t = three_triangles();
        let e = min_mod(&t, &EngineOptions { first_only: true, trace: false });
        assert_eq!(e.models.len(), 1);
        assert!(e.stats.leaves < 27);
    }

    #[test]
    fn trace_is_recorded_only_on_request() {
        let t = theory(3, &[&[1, 2], &[2, 3]]);
        let quiet = min_mod(&t, &EngineOptions::default());
        assert!(quiet.trace.is_empty());
        let traced = min_mod(&t, &EngineOptions { first_only: false, trace: true });
        assert!(!traced.trace.is_empty());
        for line in &traced.trace {
            assert!(line.case.starts_with("2cnf/"));
            assert!(u64::from(line.depth) < traced.stats.nodes);
            assert!(!line.branch.lits().is_empty());
        }
    }

    #[test]
    fn stable_models_of_an_even_loop() {
        // a <- not b.  b <- not a.  Two stable models.
        let p = Program::new(
            2,
            [Rule::new([0], [], [1]), Rule::new([1], [], [0])],
        )
        .unwrap();
        let e = stb_mod(&p, &EngineOptions::default());
        assert_eq!(models(&e), vec![vec![0], vec![1]]);
    }

    #[test]
    fn positive_loops_are_not_stable() {
        // a <- b.  b <- a.  Only the empty model is stable.
        let p = Program::new(2, [Rule::new([0], [1], []), Rule::new([1], [0], [])]).unwrap();
        let e = stb_mod(&p, &EngineOptions::default());
        assert_eq!(models(&e), vec![Vec::<u32>::new()]);
    }

    #[test]
    fn stable_models_match_the_oracle_on_random_programs() {
        let mut state = 0x2545f4914f6cdd1du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for round in 0..80 {
            let n = 2 + (next() % 5) as u32;
            let rule_count = 2 + next() % 6;
            let mut rules: Vec<Rule> = Vec::new();
            for _ in 0..rule_count {
                let head = (next() % u64::from(n)) as u32;
                let pos: Vec<u32> =
                    (0..next() % 3).map(|_| (next() % u64::from(n)) as u32).collect();
                let neg: Vec<u32> =
                    (0..next() % 3).map(|_| (next() % u64::from(n)) as u32).collect();
                rules.push(Rule::new([head], pos, neg));
            }
            let p = Program::new(n, rules).unwrap();
            let got = stb_mod(&p, &EngineOptions::default());
            let want = brute_stable_models(&p, None).unwrap();
            assert_eq!(got.models, want, "round {round}");
        }
    }

    #[test]
    fn answer_sets_of_a_disjunctive_fact() {
        // a | b.  Answer sets {a} and {b}.
        let p = Program::new(2, [Rule::new([0, 1], [], [])]).unwrap();
        let e = ans_set(&p, &EngineOptions::default());
        assert_eq!(models(&e), vec![vec![0], vec![1]]);
    }

    #[test]
    fn answer_sets_respect_constraining_rules() {
        // a | b.  c <- a.  Answer sets {a, c} and {b}.
        let p = Program::new(
            3,
            [Rule::new([0, 1], [], []), Rule::new([2], [0], [])],
        )
        .unwrap();
        let e = ans_set(&p, &EngineOptions::default());
        assert_eq!(models(&e), vec![vec![0, 2], vec![1]]);
    }

    #[test]
    #[should_panic(expected = "normal program")]
    fn stb_mod_rejects_disjunctive_heads() {
        let p = Program::new(2, [Rule::new([0, 1], [], [])]).unwrap();
        stb_mod(&p, &EngineOptions::default());
    }

    #[test]
    fn depth_never_exceeds_the_atom_count() {
        let t = three_triangles();
        let e = min_mod(&t, &EngineOptions::default());
        assert!(e.stats.max_depth <= 9);
    }
}
