//! Hard instance families and seeded random instances.
//!
//! The `E` family over a set `X` of atoms consists of all width-`t`
//! positive clauses over `X`.  Its minimal models are exactly the
//! `(|X|-t+1)`-element subsets of `X` — `C(|X|, t-1)` of them — which
//! makes the family a worst case for minimal-model enumeration.  The
//! same combinatorics exists in three semantics:
//!
//! * `cnf`: the clauses themselves, under minimal-model semantics;
//! * `normal`: for every `t`-subset `S` and every `y` in `S`, the rule
//!   `y <- not (S - y)`, under stable-model semantics;
//! * `disjunctive`: one disjunctive fact per `t`-subset, under
//!   answer-set semantics.
//!
//! [`gen_f`] takes `k` atom-disjoint copies of `E` over `2t-1` atoms
//! each, multiplying the model count to `C(2t-1, t)^k` while the size
//! grows only linearly in `k`; [`gen_f_exact`] pads that construction
//! to hit an exact atom count.  [`gen_random`] produces reproducible
//! pseudo-random instances for test corpora; the same seed always
//! yields the same instance.

use std::collections::HashSet;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::instance::Instance;
use crate::programs::{Program, Rule};
use crate::theory::{Lit, Symbols, Theory};

/// Which of the three isomorphic forms a generator should emit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenMode {
    /// A CNF theory, for minimal-model semantics.
    Cnf,
    /// A normal program, for stable-model semantics.
    Normal,
    /// A disjunctive program, for answer-set semantics.
    Disjunctive,
}

/// Parameter errors for the structured families.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    /// The families are defined for clause width at least 2.
    #[error("family width must be at least 2, got {0}")]
    WidthTooSmall(u32),
    /// `E` needs at least `t` atoms to form one clause.
    #[error("E family needs at least t={t} atoms, got {atoms}")]
    TooFewAtoms {
        /// Requested clause width.
        t: u32,
        /// Number of atoms supplied.
        atoms: u32,
    },
}

/// The `E` family over `x` atoms: every width-`t` positive clause (or
/// its program counterpart, see the module docs).
///
/// Atoms are named `a`, `b`, `c`, … (falling back to `x1`, `x2`, … past
/// the alphabet).
pub fn gen_e(t: u32, x: u32, mode: GenMode) -> Result<Instance, GenError> {
    if t < 2 {
        return Err(GenError::WidthTooSmall(t));
    }
    if x < t {
        return Err(GenError::TooFewAtoms { t, atoms: x });
    }
    let subsets = subsets_over(0, x, t);
    Ok(build(mode, x, &subsets, e_symbols(x)))
}

/// The `F` family: `k` atom-disjoint copies of `E` over `2t-1` atoms
/// each.  Atoms are named `xI_J` with `I` the 1-based component and `J`
/// the 1-based position inside it.
pub fn gen_f(t: u32, k: u32, mode: GenMode) -> Result<Instance, GenError> {
    if t < 2 {
        return Err(GenError::WidthTooSmall(t));
    }
    let w = 2 * t - 1;
    let mut subsets = Vec::new();
    let mut names = Vec::new();
    for i in 0..k {
        subsets.extend(subsets_over(i * w, w, t));
        names.extend((1..=w).map(|j| format!("x{}_{}", i + 1, j)));
    }
    Ok(build(mode, k * w, &subsets, Symbols::new(names)))
}

/// The padded `F` construction over exactly `n` atoms: as many full
/// `2t-1`-atom components as fit, one smaller `E` block over the
/// remaining `r` atoms when `r >= t`, and plain unused atoms otherwise.
pub fn gen_f_exact(t: u32, n: u32, mode: GenMode) -> Result<Instance, GenError> {
    if t < 2 {
        return Err(GenError::WidthTooSmall(t));
    }
    let w = 2 * t - 1;
    let k = n / w;
    let r = n % w;
    let mut subsets = Vec::new();
    let mut names = Vec::new();
    for i in 0..k {
        subsets.extend(subsets_over(i * w, w, t));
        names.extend((1..=w).map(|j| format!("x{}_{}", i + 1, j)));
    }
    if r >= t {
        subsets.extend(subsets_over(k * w, r, t));
    }
    names.extend((1..=r).map(|j| format!("x{}_{}", k + 1, j)));
    Ok(build(mode, n, &subsets, Symbols::new(names)))
}

/// A reproducible pseudo-random instance: up to `m` distinct clauses
/// (or rules) of width at most `t` over `n` atoms named `a1` … `aN`.
///
/// Tautologies cannot arise (each clause draws distinct atoms) and
/// duplicates are rejected; if the space of distinct clauses runs out
/// the instance simply has fewer than `m` clauses.  The same parameters
/// and seed always produce the same instance.
///
/// # Panics
///
/// Panics if `t == 0`.
pub fn gen_random(n: u32, m: u32, t: u32, mode: GenMode, seed: u64) -> Instance {
    assert!(t >= 1, "clause width must be at least 1");
    let symbols = Symbols::numbered("a", n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match mode {
        GenMode::Cnf => {
            let mut clauses: Vec<Vec<Lit>> = Vec::new();
            let mut seen: HashSet<Vec<Lit>> = HashSet::new();
            let mut budget = 50 * u64::from(m) + 100;
            while n > 0 && (clauses.len() as u32) < m && budget > 0 {
                budget -= 1;
                let w = rng.gen_range(1..=t.min(n)) as usize;
                let mut lits: Vec<Lit> = draw_atoms(&mut rng, n, w)
                    .into_iter()
                    .map(|a| Lit::new(a, rng.gen_range(0..2u8) == 0))
                    .collect();
                lits.sort_unstable();
                if seen.insert(lits.clone()) {
                    clauses.push(lits);
                }
            }
            let theory = Theory::from_clause_lits(n, clauses);
            Instance::Cnf { theory, symbols }
        }
        GenMode::Normal => {
            let rules = random_rules(&mut rng, n, m, t, false);
            let program = Program::new(n, rules).expect("generated atoms are in range");
            Instance::Program { program, symbols }
        }
        GenMode::Disjunctive => {
            let rules = random_rules(&mut rng, n, m, t, true);
            let program = Program::new(n, rules).expect("generated atoms are in range");
            Instance::Program { program, symbols }
        }
    }
}

/// All `t`-subsets of the atom interval `base .. base + width`, in
/// lexicographic order.
fn subsets_over(base: u32, width: u32, t: u32) -> Vec<Vec<u32>> {
    (base..base + width).combinations(t as usize).collect()
}

/// Assemble the chosen form from positive atom subsets.
fn build(mode: GenMode, n: u32, subsets: &[Vec<u32>], symbols: Symbols) -> Instance {
    match mode {
        GenMode::Cnf => {
            let theory = Theory::from_clause_lits(
                n,
                subsets.iter().map(|s| s.iter().map(|&a| Lit::pos(a))),
            );
            Instance::Cnf { theory, symbols }
        }
        GenMode::Normal => {
            // One rule per (subset, head) choice: y <- not (S - y).
            let rules = subsets.iter().flat_map(|s| {
                s.iter().map(move |&y| {
                    Rule::new([y], [], s.iter().copied().filter(move |&z| z != y))
                })
            });
            let program = Program::new(n, rules).expect("generated atoms are in range");
            Instance::Program { program, symbols }
        }
        GenMode::Disjunctive => {
            let rules = subsets.iter().map(|s| Rule::new(s.iter().copied(), [], []));
            let program = Program::new(n, rules).expect("generated atoms are in range");
            Instance::Program { program, symbols }
        }
    }
}

/// `w` distinct atoms below `n`, drawn by a partial Fisher-Yates pass.
fn draw_atoms(rng: &mut ChaCha8Rng, n: u32, w: usize) -> Vec<u32> {
    let mut atoms: Vec<u32> = (0..n).collect();
    for i in 0..w {
        let j = rng.gen_range(i..atoms.len());
        atoms.swap(i, j);
    }
    atoms.truncate(w);
    atoms
}

/// Up to `m` distinct random rules whose clause translation has width
/// at most `t`: the atoms of one rule are distinct, and head size plus
/// body size never exceeds `t`.
fn random_rules(rng: &mut ChaCha8Rng, n: u32, m: u32, t: u32, disjunctive: bool) -> Vec<Rule> {
    let mut rules: Vec<Rule> = Vec::new();
    let mut seen: HashSet<(Vec<u32>, Vec<u32>, Vec<u32>)> = HashSet::new();
    let mut budget = 50 * u64::from(m) + 100;
    while n > 0 && (rules.len() as u32) < m && budget > 0 {
        budget -= 1;
        let w = rng.gen_range(1..=t.min(n)) as usize;
        let atoms = draw_atoms(rng, n, w);
        let heads = if disjunctive { rng.gen_range(1..=w) } else { 1 };
        let head: Vec<u32> = atoms[..heads].to_vec();
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for &a in &atoms[heads..] {
            if rng.gen_range(0..2u8) == 0 {
                pos.push(a);
            } else {
                neg.push(a);
            }
        }
        let rule = Rule::new(head, pos, neg);
        let key = (rule.head().to_vec(), rule.pos().to_vec(), rule.neg().to_vec());
        if seen.insert(key) {
            rules.push(rule);
        }
    }
    rules
}

/// Single letters `a` … `z`, then `x1`, `x2`, … past the alphabet.
fn e_symbols(x: u32) -> Symbols {
    if x <= 26 {
        let names = (0..x).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
        Symbols::new(names)
    } else {
        Symbols::numbered("x", x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checkers::{brute_answer_sets, brute_minimal_models, brute_stable_models};
    use crate::engine::{min_mod, EngineOptions};

    fn rendered(t: &Theory) -> Vec<Vec<i32>> {
        t.clauses()
            .iter()
            .map(|c| {
                c.lits()
                    .iter()
                    .map(|l| {
                        let a = l.atom() as i32 + 1;
                        if l.is_positive() {
                            a
                        } else {
                            -a
                        }
                    })
                    .collect()
            })
            .collect()
    }

    fn binomial(n: u64, k: u64) -> u64 {
        if k > n {
            return 0;
        }
        (1..=k).fold(1, |acc, i| acc * (n - k + i) / i)
    }

    #[test]
    fn e_family_cnf_examples() {
        let i = gen_e(2, 3, GenMode::Cnf).unwrap();
        let t = i.as_theory().unwrap();
        assert_eq!(rendered(t), vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(t.size(), 6);
        assert_eq!(i.symbols().names(), ["a", "b", "c"]);

        let single = gen_e(3, 3, GenMode::Cnf).unwrap();
        assert_eq!(rendered(single.as_theory().unwrap()), vec![vec![1, 2, 3]]);
    }

    #[test]
    fn e_family_normal_example() {
        let i = gen_e(2, 2, GenMode::Normal).unwrap();
        let p = i.as_program().unwrap();
        assert_eq!(
            p.rules(),
            [Rule::new([0], [], [1]), Rule::new([1], [], [0])],
            "expected the pair b <- not a, a <- not b"
        );
    }

    #[test]
    fn e_family_rejects_bad_parameters() {
        assert_eq!(gen_e(4, 3, GenMode::Cnf), Err(GenError::TooFewAtoms { t: 4, atoms: 3 }));
        assert_eq!(gen_e(1, 3, GenMode::Cnf), Err(GenError::WidthTooSmall(1)));
        assert_eq!(gen_f(0, 2, GenMode::Cnf), Err(GenError::WidthTooSmall(0)));
    }

    #[test]
    fn e_minimal_model_counts_match_the_formula() {
        for (t, x) in [(2u32, 3u32), (2, 5), (3, 4), (3, 6), (4, 6), (4, 7)] {
            let i = gen_e(t, x, GenMode::Cnf).unwrap();
            let models = brute_minimal_models(i.as_theory().unwrap(), None).unwrap();
            let expect = binomial(u64::from(x), u64::from(t) - 1);
            assert_eq!(models.len() as u64, expect, "E t={t} x={x}");
            for m in &models {
                assert_eq!(m.len() as u32, x - t + 1, "model size for t={t} x={x}");
            }
        }
    }

    #[test]
    fn f_family_shape() {
        let i = gen_f(2, 3, GenMode::Cnf).unwrap();
        let t = i.as_theory().unwrap();
        assert_eq!(t.n(), 9);
        assert_eq!(t.clause_count(), 9);
        assert_eq!(t.size(), 18);
        assert_eq!(i.symbols().name(0), "x1_1");
        assert_eq!(i.symbols().name(8), "x3_3");

        // k = 1 coincides with E over 2t-1 atoms.
        let f1 = gen_f(2, 1, GenMode::Cnf).unwrap();
        let e = gen_e(2, 3, GenMode::Cnf).unwrap();
        assert_eq!(f1.as_theory().unwrap(), e.as_theory().unwrap());

        // Normal form size: k * t^2 * C(2t-1, t).
        let p = gen_f(2, 2, GenMode::Normal).unwrap();
        assert_eq!(p.as_program().unwrap().size(), 2 * 4 * 3);
    }

    #[test]
    fn f_family_model_counts() {
        // C(3,2)^k minimal models of size 2k for t=2.
        for k in 1..=3u32 {
            let i = gen_f(2, k, GenMode::Cnf).unwrap();
            let models = brute_minimal_models(i.as_theory().unwrap(), None).unwrap();
            assert_eq!(models.len() as u64, 3u64.pow(k));
            for m in &models {
                assert_eq!(m.len() as u32, 2 * k);
            }
        }
        // The t=3, k=2 instance has C(5,3)^2 = 100 models of size 6.
        let i = gen_f(3, 2, GenMode::Cnf).unwrap();
        let e = min_mod(i.as_theory().unwrap(), &EngineOptions::default());
        assert_eq!(e.models.len(), 100);
        for m in &e.models {
            assert_eq!(m.len(), 6);
        }
    }

    #[test]
    fn cross_semantics_coincide() {
        for (t, x) in [(2u32, 3u32), (2, 4), (3, 4)] {
            let cnf = gen_e(t, x, GenMode::Cnf).unwrap();
            let nrm = gen_e(t, x, GenMode::Normal).unwrap();
            let dsj = gen_e(t, x, GenMode::Disjunctive).unwrap();
            let minimal = brute_minimal_models(cnf.as_theory().unwrap(), None).unwrap();
            let stable = brute_stable_models(nrm.as_program().unwrap(), None).unwrap();
            let answer = brute_answer_sets(dsj.as_program().unwrap(), None).unwrap();
            assert_eq!(minimal, stable, "E t={t} x={x}");
            assert_eq!(minimal, answer, "E t={t} x={x}");
        }
        let nrm = gen_f(2, 2, GenMode::Normal).unwrap();
        let stable = brute_stable_models(nrm.as_program().unwrap(), None).unwrap();
        assert_eq!(stable.len(), 9);
    }

    #[test]
    fn exact_n_padding() {
        // n = 8, t = 2: two full components plus an E block over the
        // remaining 2 atoms.
        let i = gen_f_exact(2, 8, GenMode::Cnf).unwrap();
        let t = i.as_theory().unwrap();
        assert_eq!(t.n(), 8);
        assert_eq!(t.clause_count(), 3 + 3 + 1);
        assert_eq!(i.symbols().name(7), "x3_2");
        let models = brute_minimal_models(t, None).unwrap();
        assert_eq!(models.len(), 9 * 2);

        // n = 7, t = 2: the leftover atom stays unused.
        let i = gen_f_exact(2, 7, GenMode::Cnf).unwrap();
        let t = i.as_theory().unwrap();
        assert_eq!(t.n(), 7);
        assert_eq!(t.clause_count(), 6);
        assert_eq!(t.occurring_atom_count(), 6);
        assert_eq!(brute_minimal_models(t, None).unwrap().len(), 9);

        // Small n degenerates gracefully.
        let i = gen_f_exact(3, 4, GenMode::Cnf).unwrap();
        let t = i.as_theory().unwrap();
        assert_eq!(t.n(), 4);
        assert_eq!(t.clause_count(), 4); // C(4,3) block
    }

    #[test]
    fn random_is_deterministic_per_seed() {
        for mode in [GenMode::Cnf, GenMode::Normal, GenMode::Disjunctive] {
            let a = gen_random(7, 12, 3, mode, 42);
            let b = gen_random(7, 12, 3, mode, 42);
            assert_eq!(a, b);
            let c = gen_random(7, 12, 3, mode, 43);
            assert_ne!(a, c, "different seeds should differ for {mode:?}");
        }
    }

    #[test]
    fn random_degenerate_parameters() {
        let i = gen_random(0, 0, 3, GenMode::Cnf, 7);
        let t = i.as_theory().unwrap();
        assert_eq!(t.n(), 0);
        assert_eq!(t.clause_count(), 0);

        // More clauses requested than exist: the generator stops short
        // instead of failing.  Width-1 clauses over 2 atoms: only 4.
        let i = gen_random(2, 50, 1, GenMode::Cnf, 7);
        assert!(i.as_theory().unwrap().clause_count() <= 4);
    }

    #[test]
    fn random_respects_width_and_distinctness() {
        let i = gen_random(9, 30, 3, GenMode::Cnf, 5);
        let t = i.as_theory().unwrap();
        assert_eq!(t.clause_count(), 30);
        let mut seen = std::collections::HashSet::new();
        for c in t.clauses() {
            assert!((1..=3).contains(&c.width()));
            assert!(seen.insert(c.lits().to_vec()), "duplicate clause");
        }
        for mode in [GenMode::Normal, GenMode::Disjunctive] {
            let i = gen_random(9, 30, 3, mode, 5);
            let p = i.as_program().unwrap();
            for r in p.rules() {
                let total = r.head().len() + r.pos().len() + r.neg().len();
                assert!((1..=3).contains(&total));
            }
            if mode == GenMode::Normal {
                for r in p.rules() {
                    assert_eq!(r.head().len(), 1);
                }
            }
        }
    }

    #[test]
    fn golden_random_cnf_seed_one() {
        // Frozen output: any change to the draw order or the stream
        // position is a reproducibility break, not a refactor.
        let i = gen_random(8, 20, 3, GenMode::Cnf, 1);
        let t = i.as_theory().unwrap();
        assert_eq!(t.clause_count(), 20);
        assert_eq!(
            rendered(t),
            vec![
                vec![4, -7],
                vec![2, -7, 8],
                vec![3, 5],
                vec![-7],
                vec![-4],
                vec![1],
                vec![-5],
                vec![-1],
                vec![3],
                vec![-6],
                vec![-1, 4, 8],
                vec![4, -7, -8],
                vec![1, 2, -7],
                vec![-1, 2, -3],
                vec![4, 6, -8],
                vec![3, -4],
                vec![2, 6],
                vec![3, -6],
                vec![4, -6],
                vec![1, -4],
            ]
        );
    }
}
